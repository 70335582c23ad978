//! Command-line front end: every library operation behind a
//! subcommand, with text, JSON and (for graphs) DOT output.
//!
//! Exit codes: 0 for successful computations (an invalid validity
//! report is still a successful computation), 1 for domain errors,
//! 2 for usage and parse errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use scrolls::{
    analyze_section_form, check_reducible_conditions, check_section_conditions,
    classify_cone_section, construct_irreducible_form, construct_reducible_form,
    enumerate_reducible_components, enumerate_sections, generic_section, random_form,
    specialization_graph, syzygy_degrees, BinaryForm, FieldConfig, MultiplicityMultiset,
    ScrollType, SectionForm, SplitMix64, ValidityReport,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "scrolls",
    version,
    about = "Hyperplane sections of rational normal scrolls: enumeration, construction, verification"
)]
struct Cli {
    /// Prime characteristic of the coefficient field.
    #[arg(
        long,
        global = true,
        env = "SCROLL_FIELD_CHAR",
        default_value_t = scrolls::DEFAULT_FIELD_CHAR,
        value_parser = parse_prime
    )]
    field_char: u64,

    /// Seed for subcommands that sample random forms.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format; dot applies to graph output only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Skip the internal round-trip verification of constructors.
    #[arg(long, global = true)]
    no_verify: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List all irreducible hyperplane sections of S(a).
    Sections { a: String },
    /// Syzygy degrees of the generic hyperplane section of S(a).
    Generic { a: String },
    /// Check the numerical section conditions for (a, b), or the
    /// reducible conditions when --m is given.
    Check {
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        m: Option<String>,
    },
    /// Build a hyperplane form with section S(b), reducible when --m
    /// is given.
    Construct {
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        m: Option<String>,
    },
    /// Syzygy degrees of the coefficient forms in a section file.
    Syzygy {
        #[arg(long)]
        input: PathBuf,
    },
    /// Full decomposition (scroll part, multiplicities, gcd degree) of
    /// a section file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Table of scroll components of reducible hyperplane sections.
    Reducible {
        a: String,
        /// Also list the partitions of each deficit into multiplicity
        /// multisets.
        #[arg(long)]
        expand_m: bool,
        /// Expected number of distinct components; mismatches are
        /// flagged in the output.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Specialization diagram of all scrolls of a fixed codimension.
    Graph {
        #[arg(long)]
        codim: usize,
    },
    /// Classify the hyperplane section of a cone (a scroll with zero
    /// parts) from the vertex coefficients and a section file over the
    /// positive parts.
    Cone {
        a: String,
        #[arg(long)]
        vertex_coeffs: String,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit a random section form over S(a), seeded and reproducible.
    Random { a: String },
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    FieldConfig::new(p).map_err(|e| e.to_string())?;
    Ok(p)
}

struct CliError {
    code: u8,
    message: String,
}

impl From<scrolls::Error> for CliError {
    fn from(e: scrolls::Error) -> Self {
        let code = match e {
            scrolls::Error::Parse { .. } => 2,
            _ => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_scroll(s: &str) -> Result<ScrollType, CliError> {
    Ok(ScrollType::from_str(s)?)
}

fn parse_multiset(s: &str) -> Result<MultiplicityMultiset, CliError> {
    Ok(MultiplicityMultiset::from_str(s)?)
}

fn read_section(cfg: &FieldConfig, path: &PathBuf) -> Result<SectionForm, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(SectionForm::parse(cfg, &text)?)
}

fn render_report(report: &ValidityReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(report).expect("serializable")),
        _ => {
            let violated = report
                .violated
                .map(|v| serde_json::to_value(v).expect("tag").as_str().unwrap().to_string())
                .unwrap_or_else(|| "-".to_string());
            let pivot = report.v.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string());
            format!(
                "valid: {}\nviolated: {violated}\nv: {pivot}\ndetail: {}\n",
                report.valid, report.detail
            )
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let cfg = FieldConfig::new(cli.field_char).expect("validated by the value parser");
    let format = cli.format;
    let verify = !cli.no_verify;
    if format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        return Err(CliError {
            code: 2,
            message: "--format dot applies to graph output only".to_string(),
        });
    }

    match cli.command {
        Command::Sections { a } => {
            let a = parse_scroll(&a)?;
            let sections = enumerate_sections(&a)?;
            let generic = generic_section(&a)?;
            match format {
                Format::Json => {
                    let list: Vec<_> = sections
                        .iter()
                        .map(|b| json!({"b": b, "generic": *b == generic}))
                        .collect();
                    Ok(format!("{}\n", json!({"a": a, "sections": list})))
                }
                _ => {
                    let mut out = String::new();
                    for b in &sections {
                        if *b == generic {
                            out.push_str(&format!("{b} (generic)\n"));
                        } else {
                            out.push_str(&format!("{b}\n"));
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Generic { a } => {
            let a = parse_scroll(&a)?;
            let b = generic_section(&a)?;
            match format {
                Format::Json => Ok(format!("{}\n", json!({"a": a, "b": b}))),
                _ => Ok(format!("{b}\n")),
            }
        }
        Command::Check { a, b, m } => {
            let a = parse_scroll(&a)?;
            let b = parse_scroll(&b)?;
            let report = match m {
                Some(m) => check_reducible_conditions(&a, &b, &parse_multiset(&m)?)?,
                None => check_section_conditions(&a, &b)?,
            };
            Ok(render_report(&report, format))
        }
        Command::Construct { a, b, m } => {
            let a = parse_scroll(&a)?;
            let b = parse_scroll(&b)?;
            let section = match m {
                Some(m) => {
                    construct_reducible_form(&cfg, &a, &b, &parse_multiset(&m)?, None, verify)?
                }
                None => construct_irreducible_form(&cfg, &a, &b, verify)?,
            };
            match format {
                Format::Json => Ok(format!("{}\n", section.to_json(&cfg))),
                _ => Ok(section.render(&cfg)),
            }
        }
        Command::Syzygy { input } => {
            let section = read_section(&cfg, &input)?;
            let b = syzygy_degrees(&cfg, &section)?;
            match format {
                Format::Json => Ok(format!("{}\n", json!({"a": section.scroll(), "b": b}))),
                _ => Ok(format!("{b}\n")),
            }
        }
        Command::Analyze { input } => {
            let section = read_section(&cfg, &input)?;
            let decomposition = analyze_section_form(&cfg, &section)?;
            match format {
                Format::Json => {
                    let mut value =
                        serde_json::to_value(&decomposition).expect("serializable");
                    value["a"] = serde_json::to_value(section.scroll()).expect("serializable");
                    Ok(format!("{value}\n"))
                }
                _ => {
                    let m = if decomposition.multiplicities.is_empty() {
                        "-".to_string()
                    } else {
                        decomposition.multiplicities.to_string()
                    };
                    Ok(format!(
                        "b: {}\nm: {m}\nc: {}\n",
                        decomposition.scroll_part, decomposition.gcd_degree
                    ))
                }
            }
        }
        Command::Reducible { a, expand_m, expect } => {
            let a = parse_scroll(&a)?;
            let table = enumerate_reducible_components(&a)?;
            let total = table.total();
            match format {
                Format::Json => {
                    let buckets: Vec<_> = table
                        .buckets
                        .iter()
                        .map(|bucket| {
                            let mut value = json!({
                                "degree": bucket.degree,
                                "deficit": bucket.deficit,
                                "components": bucket.components,
                            });
                            if expand_m {
                                value["multiplicity_partitions"] =
                                    serde_json::to_value(bucket.multiplicity_partitions())
                                        .expect("serializable");
                            }
                            value
                        })
                        .collect();
                    let mut value = json!({"a": a, "total": total, "buckets": buckets});
                    if let Some(expected) = expect {
                        value["expected"] = json!(expected);
                        value["matched"] = json!(expected == total);
                    }
                    Ok(format!("{value}\n"))
                }
                _ => {
                    let mut out = String::from("degree | count | components\n");
                    for bucket in &table.buckets {
                        let row: Vec<String> = bucket
                            .components
                            .iter()
                            .map(|b| format!("[{b}]"))
                            .collect();
                        out.push_str(&format!(
                            "{} | {} | {}\n",
                            bucket.degree,
                            bucket.components.len(),
                            row.join(" ")
                        ));
                        if expand_m {
                            let sets: Vec<String> = bucket
                                .multiplicity_partitions()
                                .iter()
                                .map(|p| format!("{{{p}}}"))
                                .collect();
                            out.push_str(&format!(
                                "  m-partitions (c={}): {}\n",
                                bucket.deficit,
                                sets.join(" ")
                            ));
                        }
                    }
                    out.push_str(&format!("total: {total}\n"));
                    if let Some(expected) = expect {
                        out.push_str(&format!("expected: {expected}\n"));
                        if expected == total {
                            out.push_str("MATCH\n");
                        } else {
                            out.push_str(&format!(
                                "MISMATCH: expected {expected} distinct components, found {total}\n"
                            ));
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Graph { codim } => {
            let graph = specialization_graph(codim);
            match format {
                Format::Dot => Ok(graph.to_dot()),
                Format::Json => Ok(format!("{}\n", graph.to_json())),
                Format::Text => {
                    let mut out = format!("nodes: {}\n", graph.nodes.len());
                    for node in &graph.nodes {
                        out.push_str(&format!("{}\n", node.exponent_label()));
                    }
                    out.push_str("edges:\n");
                    for (from, to, generic) in graph.labeled_edges() {
                        if generic {
                            out.push_str(&format!("{from} -> {to} [generic]\n"));
                        } else {
                            out.push_str(&format!("{from} -> {to}\n"));
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Cone { a, vertex_coeffs, input } => {
            let a = parse_scroll(&a)?;
            let coeffs: Vec<u64> = vertex_coeffs
                .split(',')
                .map(|piece| {
                    piece.trim().parse::<i64>().map(|n| cfg.reduce_i64(n)).map_err(|_| CliError {
                        code: 2,
                        message: format!("bad vertex coefficient {piece:?}"),
                    })
                })
                .collect::<Result<_, _>>()?;
            let rest: Vec<BinaryForm> = match input {
                Some(path) => {
                    let section = read_section(&cfg, &path)?;
                    let positive = a.positive_part()?;
                    if section.scroll() != &positive {
                        return Err(CliError {
                            code: 1,
                            message: format!(
                                "section file is over {}, expected the positive part {positive}",
                                section.scroll()
                            ),
                        });
                    }
                    section.forms().to_vec()
                }
                None => {
                    let positive = a.positive_part()?;
                    positive.parts().iter().map(|&deg| BinaryForm::zero(deg)).collect()
                }
            };
            let result = classify_cone_section(&cfg, &a, &coeffs, &rest)?;
            match format {
                Format::Json => {
                    Ok(format!("{}\n", serde_json::to_value(&result).expect("serializable")))
                }
                _ => {
                    use scrolls::ConeSectionResult::*;
                    Ok(match result {
                        Base { scroll } => format!("case: BASE\nscroll: {scroll}\n"),
                        SmallerCone { scroll } => {
                            format!("case: SMALLER_CONE\nscroll: {scroll}\n")
                        }
                        ConeOverSection { analysis } => {
                            let m = if analysis.multiplicities.is_empty() {
                                "-".to_string()
                            } else {
                                analysis.multiplicities.to_string()
                            };
                            format!(
                                "case: CONE_OVER_SECTION\nb: {}\nm: {m}\nc: {}\n",
                                analysis.scroll_part, analysis.gcd_degree
                            )
                        }
                    })
                }
            }
        }
        Command::Random { a } => {
            let a = parse_scroll(&a)?;
            cfg.require_exceeds(a.degree())?;
            let mut rng = SplitMix64::new(cli.seed);
            let forms: Vec<BinaryForm> =
                a.parts().iter().map(|&deg| random_form(&cfg, deg, &mut rng)).collect();
            let section = SectionForm::new(a, forms)?;
            match format {
                Format::Json => Ok(format!("{}\n", section.to_json(&cfg))),
                _ => Ok(section.render(&cfg)),
            }
        }
    }
}
