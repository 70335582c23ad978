//! The algebraic heart of the crate: a brute-force graded syzygy oracle
//! for the coefficient forms of a hyperplane section, the bidiagonal
//! Hilbert--Burch constructor, and section construction/analysis.
//!
//! The oracle computes the minimal generator degrees of the kernel of
//! `Phi : sum_i A(-a_i) -> A`, `e_i |-> f_i`, one graded piece at a
//! time: in degree `t` it assembles the multiplication matrix, takes a
//! kernel basis, and counts the generators that are new modulo
//! `x*K_{t-1} + y*K_{t-1}`. The degree loop is bounded by `sum(a)`,
//! since the generator degrees add up to `sum(a) - deg gcd(f_i)`.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::form::{gcd_of_forms, squarefree_multiplicities, BinaryForm};
use crate::linalg;
use crate::scroll::{numeric_conditions, MultiplicityMultiset, ScrollType};

/// A hyperplane form `L = f_1 s_1 + ... + f_d s_d` over a fixed scroll;
/// `f_i` is homogeneous of degree `a_i` (zero forms keep their slot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionForm {
    scroll: ScrollType,
    forms: Vec<BinaryForm>,
}

impl SectionForm {
    pub fn new(scroll: ScrollType, forms: Vec<BinaryForm>) -> Result<Self> {
        if scroll.dim() < 2 {
            return Err(Error::DimensionTooSmall { d: scroll.dim() });
        }
        if let Some(index) = scroll.parts().iter().position(|&p| p == 0) {
            return Err(Error::Positivity { which: "a", index: index + 1 });
        }
        if forms.len() != scroll.dim() {
            return Err(Error::Length { expected: scroll.dim(), got: forms.len() });
        }
        for (i, form) in forms.iter().enumerate() {
            if form.degree() != scroll.parts()[i] {
                return Err(Error::DegreeMismatch {
                    left: form.degree(),
                    right: scroll.parts()[i],
                });
            }
        }
        if forms.iter().all(|f| f.is_zero()) {
            return Err(Error::AllZero);
        }
        Ok(SectionForm { scroll, forms })
    }

    pub fn scroll(&self) -> &ScrollType {
        &self.scroll
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    /// Text file format: `a:` line, then one `fN:` line per form.
    pub fn render(&self, cfg: &FieldConfig) -> String {
        let mut out = format!("a: {}\n", self.scroll);
        for (i, form) in self.forms.iter().enumerate() {
            out.push_str(&format!("f{}: {}\n", i + 1, form.render(cfg)));
        }
        out
    }

    pub fn to_json(&self, cfg: &FieldConfig) -> serde_json::Value {
        json!({
            "a": self.scroll,
            "forms": self.forms.iter().map(|f| f.render(cfg)).collect::<Vec<_>>(),
        })
    }

    /// Parses either the text file format or its JSON mirror.
    pub fn parse(cfg: &FieldConfig, input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            return Self::parse_json(cfg, input);
        }
        let mut scroll: Option<ScrollType> = None;
        let mut forms: Vec<(usize, String)> = Vec::new();
        for line in input.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
                detail: format!("expected `key: value`, got {line:?}"),
            })?;
            let key = key.trim();
            if key == "a" {
                scroll = Some(value.trim().parse()?);
            } else if let Some(index) = key.strip_prefix('f') {
                let index: usize = index.parse().map_err(|_| Error::Parse {
                    detail: format!("bad form label {key:?}"),
                })?;
                forms.push((index, value.trim().to_string()));
            } else {
                return Err(Error::Parse { detail: format!("unknown key {key:?}") });
            }
        }
        let scroll = scroll.ok_or_else(|| Error::Parse { detail: "missing `a:` line".into() })?;
        Self::assemble(cfg, scroll, forms)
    }

    fn parse_json(cfg: &FieldConfig, input: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(input)
            .map_err(|e| Error::Parse { detail: format!("bad JSON: {e}") })?;
        let parts = value["a"]
            .as_array()
            .ok_or_else(|| Error::Parse { detail: "missing `a` array".into() })?
            .iter()
            .map(|v| {
                v.as_u64().map(|n| n as usize).ok_or_else(|| Error::Parse {
                    detail: "scroll parts must be nonnegative integers".into(),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        let scroll = ScrollType::new(parts)?;
        let forms = value["forms"]
            .as_array()
            .ok_or_else(|| Error::Parse { detail: "missing `forms` array".into() })?
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_str().map(|s| (i + 1, s.to_string())).ok_or_else(|| Error::Parse {
                    detail: "forms must be strings".into(),
                })
            })
            .collect::<Result<Vec<(usize, String)>>>()?;
        Self::assemble(cfg, scroll, forms)
    }

    fn assemble(
        cfg: &FieldConfig,
        scroll: ScrollType,
        mut labeled: Vec<(usize, String)>,
    ) -> Result<Self> {
        labeled.sort_by_key(|(i, _)| *i);
        let expected: Vec<usize> = (1..=scroll.dim()).collect();
        let got: Vec<usize> = labeled.iter().map(|(i, _)| *i).collect();
        if got != expected {
            return Err(Error::Parse {
                detail: format!("expected form labels f1..f{}, got {got:?}", scroll.dim()),
            });
        }
        let forms = labeled
            .iter()
            .enumerate()
            .map(|(slot, (_, text))| BinaryForm::parse(cfg, text, Some(scroll.parts()[slot])))
            .collect::<Result<Vec<_>>>()?;
        SectionForm::new(scroll, forms)
    }
}

/// The `d x (d-1)` graded matrix whose entry `(i, j)` is zero or
/// homogeneous of degree `b_j - a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyMatrix {
    row_degrees: Vec<usize>,
    col_degrees: Vec<usize>,
    entries: Vec<BinaryForm>, // row-major
}

impl SyzygyMatrix {
    pub fn new(
        row_degrees: Vec<usize>,
        col_degrees: Vec<usize>,
        entries: Vec<BinaryForm>,
    ) -> Result<Self> {
        if entries.len() != row_degrees.len() * col_degrees.len() {
            return Err(Error::Length {
                expected: row_degrees.len() * col_degrees.len(),
                got: entries.len(),
            });
        }
        let m = SyzygyMatrix { row_degrees, col_degrees, entries };
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let entry = m.entry(i, j);
                if entry.is_zero() {
                    continue;
                }
                let compatible = m.col_degrees[j] >= m.row_degrees[i]
                    && entry.degree() == m.col_degrees[j] - m.row_degrees[i];
                if !compatible {
                    return Err(Error::Verification {
                        detail: format!(
                            "entry ({i},{j}) of degree {} breaks graded compatibility",
                            entry.degree()
                        ),
                    });
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[usize] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[usize] {
        &self.col_degrees
    }

    pub fn entry(&self, row: usize, col: usize) -> &BinaryForm {
        &self.entries[row * self.cols() + col]
    }

    pub fn to_json(&self, cfg: &FieldConfig) -> serde_json::Value {
        json!({
            "rows": self.rows(),
            "cols": self.cols(),
            "row_degrees": self.row_degrees,
            "col_degrees": self.col_degrees,
            "entries": self.entries.iter().map(|f| f.render(cfg)).collect::<Vec<_>>(),
        })
    }
}

/// Result of analyzing a section form: the scroll part `b`, the
/// multiplicity structure of the gcd, and the gcd degree `c`.
/// `sum(b) + c = sum(a)`, and `c = 0` exactly for prime sections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionDecomposition {
    #[serde(rename = "b")]
    pub scroll_part: ScrollType,
    #[serde(rename = "m")]
    pub multiplicities: MultiplicityMultiset,
    #[serde(rename = "c")]
    pub gcd_degree: usize,
}

/// Minimal generator degrees of the syzygy module of the coefficient
/// forms, weakly increasing; always `d - 1` degrees summing to
/// `sum(a) - deg gcd`.
pub fn syzygy_degrees(cfg: &FieldConfig, section: &SectionForm) -> Result<ScrollType> {
    let scroll = section.scroll();
    let parts = scroll.parts();
    let d = scroll.dim();
    let total = scroll.degree();
    cfg.require_exceeds(total)?;

    let gcd_degree = gcd_of_forms(cfg, section.forms())?.degree();
    let target_sum = total - gcd_degree;

    let mut degrees: Vec<usize> = Vec::with_capacity(d - 1);
    let mut prev_kernel: Vec<Vec<u64>> = Vec::new();
    let mut prev_offsets: Vec<Option<(usize, usize)>> = vec![None; d];

    for t in 0..=total {
        // Column blocks: block i is a basis of A_{t - a_i}.
        let mut offsets: Vec<Option<(usize, usize)>> = Vec::with_capacity(d);
        let mut n_cols = 0usize;
        for &a_i in parts {
            if t >= a_i {
                let width = t - a_i + 1;
                offsets.push(Some((n_cols, width)));
                n_cols += width;
            } else {
                offsets.push(None);
            }
        }

        // Multiplication matrix into A_t (rows indexed by y-exponent).
        let mut rows = vec![vec![0u64; n_cols]; t + 1];
        for (i, offset) in offsets.iter().enumerate() {
            let Some((base, width)) = *offset else { continue };
            let form = &section.forms()[i];
            if form.is_zero() {
                continue;
            }
            for e in 0..width {
                for (j, &c) in form.coeffs().iter().enumerate() {
                    if c != 0 {
                        rows[e + j][base + e] = c;
                    }
                }
            }
        }
        let kernel = linalg::kernel_basis(cfg, rows, n_cols);

        // Lift the previous kernel basis by x and by y.
        let mut span = Vec::with_capacity(prev_kernel.len() * 2);
        for v in &prev_kernel {
            let mut vx = vec![0u64; n_cols];
            let mut vy = vec![0u64; n_cols];
            for (i, prev_offset) in prev_offsets.iter().enumerate() {
                let Some((prev_base, prev_width)) = *prev_offset else { continue };
                let (base, _) = offsets[i].expect("blocks persist as t grows");
                for e in 0..prev_width {
                    let c = v[prev_base + e];
                    if c != 0 {
                        vx[base + e] = c; // x keeps the y-exponent
                        vy[base + e + 1] = c; // y raises it
                    }
                }
            }
            span.push(vx);
            span.push(vy);
        }
        let spanned = linalg::rank(cfg, span, n_cols);
        debug_assert!(spanned <= kernel.len());
        for _ in 0..kernel.len() - spanned {
            degrees.push(t);
        }

        prev_kernel = kernel;
        prev_offsets = offsets;
        if degrees.len() == d - 1 {
            break;
        }
    }

    if degrees.len() != d - 1 || degrees.iter().sum::<usize>() != target_sum {
        return Err(Error::Verification {
            detail: format!(
                "syzygy oracle for a = {scroll} found degrees {degrees:?}, expected {} summing to {target_sum}",
                d - 1
            ),
        });
    }
    ScrollType::new(degrees)
}

/// The bidiagonal Hilbert--Burch matrix of a valid pair `(a, b)`:
/// `z_jj = y^(b_j - a_j)` and, from the pivot column on,
/// `z_(j+1,j) = x^(b_j - a_(j+1))`. Zero parts in `a` are tolerated
/// (the relaxed variant used by the reducible construction).
pub fn hilbert_burch_matrix(a: &ScrollType, b: &ScrollType) -> Result<SyzygyMatrix> {
    let d = a.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall { d });
    }
    if b.dim() != d - 1 {
        return Err(Error::Length { expected: d - 1, got: b.dim() });
    }
    if let Some(index) = b.parts().iter().position(|&p| p == 0) {
        return Err(Error::Positivity { which: "b", index: index + 1 });
    }
    let report = numeric_conditions(a.parts(), b.parts(), 0);
    if !report.valid {
        return Err(Error::InvalidPair { report: Box::new(report) });
    }
    let v = report.v.expect("pivot exists for every valid pair");

    let mut entries = vec![BinaryForm::zero(0); d * (d - 1)];
    for j in 0..d - 1 {
        let alpha = b.parts()[j] - a.parts()[j];
        entries[j * (d - 1) + j] = BinaryForm::unit_monomial(0, alpha);
        if j + 1 >= v {
            let beta = b.parts()[j] - a.parts()[j + 1];
            entries[(j + 1) * (d - 1) + j] = BinaryForm::unit_monomial(beta, 0);
        }
    }
    SyzygyMatrix::new(a.parts().to_vec(), b.parts().to_vec(), entries)
}

/// Graded determinant over binary forms by cofactor expansion along the
/// first column; `None` encodes an identically zero minor.
fn det_graded(
    cfg: &FieldConfig,
    matrix: &SyzygyMatrix,
    rows: &[usize],
    cols: &[usize],
) -> Option<BinaryForm> {
    if cols.is_empty() {
        return Some(BinaryForm::unit_monomial(0, 0));
    }
    let col = cols[0];
    let rest: Vec<usize> = cols[1..].to_vec();
    let mut acc: Option<BinaryForm> = None;
    for (k, &row) in rows.iter().enumerate() {
        let pivot = matrix.entry(row, col);
        if pivot.is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> =
            rows.iter().copied().filter(|&r| r != row).collect();
        let Some(minor) = det_graded(cfg, matrix, &sub_rows, &rest) else { continue };
        let mut term = pivot.mul(cfg, &minor);
        if k % 2 == 1 {
            term = term.neg(cfg);
        }
        acc = Some(match acc {
            None => term,
            Some(sum) => sum.add(cfg, &term).expect("graded terms share a degree"),
        });
    }
    acc.filter(|form| !form.is_zero())
}

/// Signed maximal minors `f_i = (-1)^(i+1) det(Z with row i deleted)`.
/// With this sign convention the columns of `Z` are literal syzygies of
/// the result: `sum_i f_i z_ij = 0` for every column `j`.
pub fn signed_maximal_minors(cfg: &FieldConfig, matrix: &SyzygyMatrix) -> Vec<BinaryForm> {
    let d = matrix.rows();
    let cols: Vec<usize> = (0..matrix.cols()).collect();
    let col_sum: usize = matrix.col_degrees().iter().sum();
    let row_sum: usize = matrix.row_degrees().iter().sum();
    let mut minors = Vec::with_capacity(d);
    for i in 0..d {
        let rows: Vec<usize> = (0..d).filter(|&r| r != i).collect();
        // Graded degree of the minor; below zero it must vanish.
        let expected = (col_sum + matrix.row_degrees()[i]).checked_sub(row_sum);
        let minor = match det_graded(cfg, matrix, &rows, &cols) {
            None => BinaryForm::zero(expected.unwrap_or(0)),
            Some(form) => {
                debug_assert_eq!(Some(form.degree()), expected);
                if i % 2 == 1 {
                    form.neg(cfg)
                } else {
                    form
                }
            }
        };
        minors.push(minor);
    }
    minors
}

/// Checks the literal syzygy identity `sum_i f_i z_ij = 0` for every
/// column of the matrix.
pub fn columns_are_syzygies(
    cfg: &FieldConfig,
    matrix: &SyzygyMatrix,
    forms: &[BinaryForm],
) -> bool {
    for j in 0..matrix.cols() {
        let degree = matrix.col_degrees()[j];
        let mut acc = BinaryForm::zero(degree);
        for (i, form) in forms.iter().enumerate() {
            let entry = matrix.entry(i, j);
            if entry.is_zero() || form.is_zero() {
                continue;
            }
            let term = form.mul(cfg, entry);
            acc = match acc.add(cfg, &term) {
                Ok(sum) => sum,
                Err(_) => return false,
            };
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Builds the hyperplane form of an irreducible section with syzygy
/// degrees `b`, as the signed maximal minors of the Hilbert--Burch
/// matrix. With `verify` on, the result is checked against the oracle.
pub fn construct_irreducible_form(
    cfg: &FieldConfig,
    a: &ScrollType,
    b: &ScrollType,
    verify: bool,
) -> Result<SectionForm> {
    cfg.require_exceeds(a.degree())?;
    let report = crate::scroll::check_section_conditions(a, b)?;
    if !report.valid {
        return Err(Error::InvalidPair { report: Box::new(report) });
    }
    let matrix = hilbert_burch_matrix(a, b)?;
    let minors = signed_maximal_minors(cfg, &matrix);
    let section = SectionForm::new(a.clone(), minors)?;
    if verify {
        let oracle = syzygy_degrees(cfg, &section)?;
        if &oracle != b {
            return Err(Error::Verification {
                detail: format!("constructed section of {a} has syzygy degrees {oracle}, wanted {b}"),
            });
        }
        if gcd_of_forms(cfg, section.forms())?.degree() != 0 {
            return Err(Error::Verification {
                detail: format!("constructed section of {a} is not gcd-free"),
            });
        }
    }
    Ok(section)
}

/// A point of `P^1` selecting a linear form: `x` at infinity, or
/// `y - lambda*x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineChoice {
    AtInfinity,
    Finite(u64),
}

impl LineChoice {
    fn to_form(self, cfg: &FieldConfig) -> BinaryForm {
        match self {
            LineChoice::AtInfinity => BinaryForm::unit_monomial(1, 0),
            LineChoice::Finite(lambda) => {
                let y = BinaryForm::unit_monomial(0, 1);
                let scaled_x = BinaryForm::unit_monomial(1, 0).scale(cfg, lambda % cfg.p());
                y.sub(cfg, &scaled_x).expect("both have degree 1")
            }
        }
    }

    fn canonical(self, cfg: &FieldConfig) -> Option<u64> {
        match self {
            LineChoice::AtInfinity => None,
            LineChoice::Finite(lambda) => Some(lambda % cfg.p()),
        }
    }
}

fn default_lines(count: usize) -> Vec<LineChoice> {
    let mut lines = Vec::with_capacity(count);
    if count >= 1 {
        lines.push(LineChoice::AtInfinity);
    }
    for lambda in 0..count.saturating_sub(1) {
        lines.push(LineChoice::Finite(lambda as u64));
    }
    lines
}

/// Builds a hyperplane form whose section decomposes into the scroll
/// `S(b)` plus multiplicity structures `m` on the chosen lines:
/// the gcd-free part comes from the relaxed Hilbert--Burch construction
/// on the shifted sequences, then everything is multiplied by
/// `g = prod l_i^(m_i)`.
pub fn construct_reducible_form(
    cfg: &FieldConfig,
    a: &ScrollType,
    b: &ScrollType,
    m: &MultiplicityMultiset,
    lines: Option<&[LineChoice]>,
    verify: bool,
) -> Result<SectionForm> {
    cfg.require_exceeds(a.degree())?;
    let report = crate::scroll::check_reducible_conditions(a, b, m)?;
    if !report.valid {
        return Err(Error::InvalidTriple { report: Box::new(report) });
    }
    let c = m.total();
    let s = m.count();
    let chosen: Vec<LineChoice> = match lines {
        Some(given) => {
            if given.len() != s {
                return Err(Error::Length { expected: s, got: given.len() });
            }
            given.to_vec()
        }
        None => default_lines(s),
    };
    for i in 0..chosen.len() {
        for j in i + 1..chosen.len() {
            if chosen[i].canonical(cfg) == chosen[j].canonical(cfg) {
                return Err(Error::NondistinctLines);
            }
        }
    }

    let mut gcd_part = BinaryForm::unit_monomial(0, 0);
    for (&multiplicity, line) in m.entries().iter().zip(&chosen) {
        let form = line.to_form(cfg);
        for _ in 0..multiplicity {
            gcd_part = gcd_part.mul(cfg, &form);
        }
    }
    debug_assert_eq!(gcd_part.degree(), c);

    let d = a.dim();
    let forms = match report.v {
        Some(v) => {
            // Shift the tail sequences down by c and build the relaxed
            // Hilbert--Burch section there; a_v - c may be zero.
            let a_tail: Vec<usize> = a.parts()[v - 1..].iter().map(|&x| x - c).collect();
            let b_tail: Vec<usize> = b.parts()[v - 1..].iter().map(|&x| x - c).collect();
            let a_shifted = ScrollType::new(a_tail)?;
            let b_shifted = ScrollType::new(b_tail)?;
            let matrix = hilbert_burch_matrix(&a_shifted, &b_shifted)?;
            let minors = signed_maximal_minors(cfg, &matrix);
            let mut forms: Vec<BinaryForm> =
                a.parts()[..v - 1].iter().map(|&deg| BinaryForm::zero(deg)).collect();
            for minor in minors {
                forms.push(gcd_part.mul(cfg, &minor));
            }
            forms
        }
        None => {
            // b = a-prefix: L = g * s_d with deg g = a_d.
            let mut forms: Vec<BinaryForm> =
                a.parts()[..d - 1].iter().map(|&deg| BinaryForm::zero(deg)).collect();
            forms.push(gcd_part.clone());
            forms
        }
    };
    let section = SectionForm::new(a.clone(), forms)?;
    if verify {
        let decomposition = analyze_section_form(cfg, &section)?;
        if &decomposition.scroll_part != b || &decomposition.multiplicities != m
            || decomposition.gcd_degree != c
        {
            return Err(Error::Verification {
                detail: format!(
                    "reducible construction for a = {a} decomposes as (b = {}, m = {{{}}}, c = {}), wanted (b = {b}, m = {{{m}}}, c = {c})",
                    decomposition.scroll_part, decomposition.multiplicities, decomposition.gcd_degree
                ),
            });
        }
    }
    Ok(section)
}

/// Full decomposition of a hyperplane section: gcd degree, multiplicity
/// structure of the gcd, and the syzygy degrees of the scroll part.
pub fn analyze_section_form(cfg: &FieldConfig, section: &SectionForm) -> Result<SectionDecomposition> {
    let total = section.scroll().degree();
    cfg.require_exceeds(total)?;
    let gcd = gcd_of_forms(cfg, section.forms())?;
    let gcd_degree = gcd.degree();
    let multiplicities = if gcd_degree > 0 {
        squarefree_multiplicities(cfg, &gcd)?
    } else {
        MultiplicityMultiset::empty()
    };
    let scroll_part = syzygy_degrees(cfg, section)?;
    if scroll_part.degree() + gcd_degree != total {
        return Err(Error::Verification {
            detail: format!(
                "decomposition degrees broken: sum(b) = {} with c = {gcd_degree}, expected total {total}",
                scroll_part.degree()
            ),
        });
    }
    Ok(SectionDecomposition { scroll_part, multiplicities, gcd_degree })
}

/// Primality of the ideal `(L)`: equivalent to the coefficient forms
/// having no common factor.
pub fn is_prime_section(cfg: &FieldConfig, section: &SectionForm) -> Result<bool> {
    Ok(gcd_of_forms(cfg, section.forms())?.degree() == 0)
}
