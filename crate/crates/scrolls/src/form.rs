//! Binary forms: homogeneous polynomials in `x, y` over a prime field.
//!
//! A form of degree `n` is stored as the dense vector of its `n + 1`
//! coefficients, entry `j` holding the coefficient of `x^(n-j) y^j`.
//! The zero form keeps its declared degree slot; the ring operations,
//! gcd, exact division and squarefree decomposition all reduce to
//! univariate computations on the dehomogenization in `u = y/x`,
//! with the power of `x` tracked separately.

use crate::error::{Error, Result};
use crate::field::{FieldConfig, SplitMix64};
use crate::scroll::MultiplicityMultiset;

// Parsing bound on exponents; keeps hostile input files from forcing
// absurd allocations.
const MAX_PARSED_EXPONENT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<u64>,
}

impl BinaryForm {
    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, coeffs: vec![0; degree + 1] }
    }

    /// Builds a form of the given degree from signed coefficients,
    /// entry `j` being the coefficient of `x^(degree-j) y^j`.
    pub fn from_coeffs(cfg: &FieldConfig, degree: usize, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::Parse {
                detail: format!("form of degree {degree} needs {} coefficients, got {}", degree + 1, coeffs.len()),
            });
        }
        Ok(BinaryForm { degree, coeffs: coeffs.iter().map(|&c| cfg.reduce_i64(c)).collect() })
    }

    /// `coeff * x^i * y^j`.
    pub fn monomial(cfg: &FieldConfig, coeff: i64, x_exp: usize, y_exp: usize) -> Self {
        let degree = x_exp + y_exp;
        let mut coeffs = vec![0; degree + 1];
        coeffs[y_exp] = cfg.reduce_i64(coeff);
        BinaryForm { degree, coeffs }
    }

    /// `x^i * y^j` with coefficient 1; valid in every field.
    pub fn unit_monomial(x_exp: usize, y_exp: usize) -> Self {
        let degree = x_exp + y_exp;
        let mut coeffs = vec![0; degree + 1];
        coeffs[y_exp] = 1;
        BinaryForm { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, y_exp: usize) -> u64 {
        self.coeffs.get(y_exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Exponent of the largest power of `x` dividing the form.
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0).map(|j| self.degree - j)
    }

    /// Exponent of the largest power of `y` dividing the form.
    pub fn y_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn add(&self, cfg: &FieldConfig, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| cfg.add(a, b)).collect();
        Ok(BinaryForm { degree: self.degree, coeffs })
    }

    pub fn sub(&self, cfg: &FieldConfig, other: &BinaryForm) -> Result<BinaryForm> {
        self.add(cfg, &other.neg(cfg))
    }

    pub fn neg(&self, cfg: &FieldConfig) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&c| cfg.neg(c)).collect(),
        }
    }

    pub fn scale(&self, cfg: &FieldConfig, s: u64) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&c| cfg.mul(c, s)).collect(),
        }
    }

    pub fn mul(&self, cfg: &FieldConfig, other: &BinaryForm) -> BinaryForm {
        let degree = self.degree + other.degree;
        let mut coeffs = vec![0u64; degree + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    coeffs[i + j] = cfg.add(coeffs[i + j], cfg.mul(a, b));
                }
            }
        }
        BinaryForm { degree, coeffs }
    }

    /// Scales so that the coefficient of the highest `x`-power is 1.
    pub fn monic(&self, cfg: &FieldConfig) -> BinaryForm {
        match self.y_valuation() {
            Some(j) => self.scale(cfg, cfg.inv(self.coeffs[j])),
            None => self.clone(),
        }
    }

    /// Coefficient vector of the dehomogenization in `u = y/x`,
    /// trailing zeros trimmed (empty for the zero form).
    fn dehomogenized(&self) -> Vec<u64> {
        let mut v = self.coeffs.clone();
        uni_trim(&mut v);
        v
    }

    /// Rebuilds `x^x_power * hom(uni)` as a form; the result degree is
    /// `x_power + deg(uni)`.
    fn homogenized(uni: &[u64], x_power: usize) -> BinaryForm {
        let mut coeffs = uni.to_vec();
        uni_trim(&mut coeffs);
        let degree = x_power + coeffs.len().saturating_sub(1);
        coeffs.resize(degree + 1, 0);
        BinaryForm { degree, coeffs }
    }

    /// Text form as a sum of `c*x^i*y^j` terms, coefficients printed as
    /// balanced representatives; `"0"` for the zero form.
    pub fn render(&self, cfg: &FieldConfig) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let balanced = cfg.balanced(c);
            if first {
                if balanced < 0 {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if balanced < 0 { " - " } else { " + " });
            }
            let magnitude = balanced.unsigned_abs();
            let x_exp = self.degree - j;
            let mut factors: Vec<String> = Vec::new();
            if magnitude != 1 || (x_exp == 0 && j == 0) {
                factors.push(magnitude.to_string());
            }
            if x_exp == 1 {
                factors.push("x".to_string());
            } else if x_exp > 1 {
                factors.push(format!("x^{x_exp}"));
            }
            if j == 1 {
                factors.push("y".to_string());
            } else if j > 1 {
                factors.push(format!("y^{j}"));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the text format accepted by `render`: terms in any order,
    /// arbitrary whitespace, integer coefficients of either sign.
    /// A declared degree pins the slot of the zero form and is checked
    /// against nonzero input.
    pub fn parse(cfg: &FieldConfig, text: &str, declared: Option<usize>) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse { detail: "empty form".to_string() });
        }
        if compact == "0" {
            return Ok(BinaryForm::zero(declared.unwrap_or(0)));
        }

        // Split into sign-prefixed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            match ch {
                '+' | '-' => {
                    if i > 0 && !current.is_empty() {
                        terms.push((negative, std::mem::take(&mut current)));
                    } else if i > 0 && current.is_empty() {
                        return Err(Error::Parse { detail: format!("dangling sign in {text:?}") });
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse { detail: format!("dangling sign in {text:?}") });
        }
        terms.push((negative, current));

        let mut degree: Option<usize> = declared;
        let mut parsed: Vec<(u64, usize, usize)> = Vec::new();
        for (neg, term) in terms {
            let mut coeff = 1u64 % cfg.p();
            let mut x_exp = 0usize;
            let mut y_exp = 0usize;
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse { detail: format!("empty factor in term {term:?}") });
                }
                if factor.starts_with('x') || factor.starts_with('y') {
                    let exp = match &factor[1..] {
                        "" => 1,
                        rest => {
                            let rest = rest.strip_prefix('^').ok_or_else(|| Error::Parse {
                                detail: format!("bad factor {factor:?}"),
                            })?;
                            rest.parse::<usize>().map_err(|_| Error::Parse {
                                detail: format!("bad exponent in {factor:?}"),
                            })?
                        }
                    };
                    if exp > MAX_PARSED_EXPONENT {
                        return Err(Error::Parse {
                            detail: format!("exponent {exp} exceeds the supported bound"),
                        });
                    }
                    if factor.starts_with('x') {
                        x_exp += exp;
                    } else {
                        y_exp += exp;
                    }
                } else {
                    let value = factor.parse::<u128>().map_err(|_| Error::Parse {
                        detail: format!("bad coefficient {factor:?}"),
                    })?;
                    coeff = cfg.mul(coeff, (value % cfg.p() as u128) as u64);
                }
            }
            let total = x_exp + y_exp;
            match degree {
                None => degree = Some(total),
                Some(expected) if expected != total => {
                    return Err(Error::Parse {
                        detail: format!(
                            "inhomogeneous form: term of degree {total}, expected {expected}"
                        ),
                    });
                }
                Some(_) => {}
            }
            parsed.push((if neg { cfg.neg(coeff) } else { coeff }, x_exp, y_exp));
        }
        let degree = degree.expect("at least one term");
        let mut coeffs = vec![0u64; degree + 1];
        for (coeff, _, y_exp) in parsed {
            coeffs[y_exp] = cfg.add(coeffs[y_exp], coeff);
        }
        Ok(BinaryForm { degree, coeffs })
    }
}

/// Monic gcd of the non-zero forms in the list.
pub fn gcd_of_forms(cfg: &FieldConfig, forms: &[BinaryForm]) -> Result<BinaryForm> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllZero);
    }
    let mut x_power = usize::MAX;
    let mut acc: Vec<u64> = Vec::new();
    for f in nonzero {
        x_power = x_power.min(f.x_valuation().expect("nonzero form"));
        let q = f.dehomogenized();
        acc = if acc.is_empty() { q } else { uni_gcd(cfg, &acc, &q) };
        if x_power == 0 && acc.len() == 1 {
            break; // already coprime
        }
    }
    Ok(BinaryForm::homogenized(&acc, x_power).monic(cfg))
}

/// Exact quotient `f / g`; fails with the nonzero remainder `f - g*q`
/// as witness when `g` does not divide `f`.
pub fn exact_divide(cfg: &FieldConfig, f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
    if g.is_zero() {
        return Err(Error::AllZero);
    }
    if f.is_zero() {
        if f.degree() < g.degree() {
            return Err(Error::NotDivisible { remainder: Box::new(f.clone()) });
        }
        return Ok(BinaryForm::zero(f.degree() - g.degree()));
    }
    let (ef, eg) = (f.x_valuation().unwrap(), g.x_valuation().unwrap());
    if f.degree() < g.degree() || ef < eg {
        return Err(Error::NotDivisible { remainder: Box::new(f.clone()) });
    }
    let qf = f.dehomogenized();
    let qg = g.dehomogenized();
    if qf.len() < qg.len() {
        return Err(Error::NotDivisible { remainder: Box::new(f.clone()) });
    }
    let (quot, rem) = uni_divmod(cfg, &qf, &qg);
    // Leading coefficients are nonzero, so the quotient fills the slot
    // of degree deg f - deg g exactly.
    let candidate = BinaryForm::homogenized(&quot, ef - eg);
    debug_assert_eq!(candidate.degree(), f.degree() - g.degree());
    if rem.is_empty() {
        return Ok(candidate);
    }
    let witness = f.sub(cfg, &g.mul(cfg, &candidate)).expect("degrees agree");
    Err(Error::NotDivisible { remainder: Box::new(witness) })
}

/// Squarefree decomposition `g = prod h_i^i` with the `h_i` squarefree
/// and pairwise coprime; returns (multiplicity, factor) pairs sorted by
/// multiplicity, each factor monic. Needs `p > deg g`.
pub fn squarefree_decomposition(
    cfg: &FieldConfig,
    g: &BinaryForm,
) -> Result<Vec<(usize, BinaryForm)>> {
    if g.is_zero() {
        return Err(Error::AllZero);
    }
    if cfg.p() <= g.degree() as u64 {
        return Err(Error::CharTooSmall { p: cfg.p(), degree: g.degree() });
    }
    let x_power = g.x_valuation().expect("nonzero");
    let q = uni_monic(cfg, &g.dehomogenized());
    let mut parts: Vec<(usize, Vec<u64>)> = Vec::new();
    if q.len() > 1 {
        // Yun's algorithm; valid because no multiplicity can reach p.
        let dq = uni_derivative(cfg, &q);
        let a0 = uni_gcd(cfg, &q, &dq);
        let mut b = uni_divmod(cfg, &q, &a0).0;
        let c = uni_divmod(cfg, &dq, &a0).0;
        let mut d = uni_sub(cfg, &c, &uni_derivative(cfg, &b));
        let mut multiplicity = 1usize;
        while b.len() > 1 {
            let h = uni_gcd(cfg, &b, &d);
            if h.len() > 1 {
                parts.push((multiplicity, h.clone()));
            }
            b = uni_divmod(cfg, &b, &h).0;
            let c_next = uni_divmod(cfg, &d, &h).0;
            d = uni_sub(cfg, &c_next, &uni_derivative(cfg, &b));
            multiplicity += 1;
        }
    }
    let mut out: Vec<(usize, BinaryForm)> = Vec::new();
    for (multiplicity, uni) in parts {
        out.push((multiplicity, BinaryForm::homogenized(&uni, 0).monic(cfg)));
    }
    if x_power > 0 {
        // The point [0:1] enters with multiplicity x_power.
        let x_form = BinaryForm::monomial(cfg, 1, 1, 0);
        match out.iter_mut().find(|(m, _)| *m == x_power) {
            Some((_, h)) => *h = h.mul(cfg, &x_form),
            None => out.push((x_power, x_form)),
        }
    }
    out.sort_by_key(|(m, _)| *m);
    Ok(out)
}

/// Multiplicity multiset of the closure points of `g`: each squarefree
/// factor of multiplicity `i` and degree `e` contributes `e` copies of
/// `i` (a squarefree binary form has distinct roots in the closure).
pub fn squarefree_multiplicities(cfg: &FieldConfig, g: &BinaryForm) -> Result<MultiplicityMultiset> {
    let decomposition = squarefree_decomposition(cfg, g)?;
    let mut entries = Vec::new();
    for (multiplicity, factor) in decomposition {
        for _ in 0..factor.degree() {
            entries.push(multiplicity);
        }
    }
    MultiplicityMultiset::new(entries)
}

/// Uniformly random form of the given degree; deterministic in the rng.
pub fn random_form(cfg: &FieldConfig, degree: usize, rng: &mut SplitMix64) -> BinaryForm {
    let coeffs = (0..=degree).map(|_| rng.below(cfg.p())).collect();
    BinaryForm { degree, coeffs }
}

// ---- univariate helpers (dense, over F_p) ----

fn uni_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn uni_sub(cfg: &FieldConfig, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| cfg.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    uni_trim(&mut out);
    out
}

fn uni_monic(cfg: &FieldConfig, a: &[u64]) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = cfg.inv(lead);
            a.iter().map(|&c| cfg.mul(c, inv)).collect()
        }
    }
}

fn uni_derivative(cfg: &FieldConfig, a: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| cfg.mul(c, i as u64 % cfg.p()))
        .collect();
    uni_trim(&mut out);
    out
}

/// Division with remainder; `den` must be nonzero.
fn uni_divmod(cfg: &FieldConfig, num: &[u64], den: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = num.to_vec();
    uni_trim(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = cfg.inv(*den.last().unwrap());
    let mut quot = vec![0u64; rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = cfg.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = factor;
        for (i, &dc) in den.iter().enumerate() {
            rem[shift + i] = cfg.sub(rem[shift + i], cfg.mul(factor, dc));
        }
        uni_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    uni_trim(&mut quot);
    (quot, rem)
}

/// Monic gcd by the Euclidean algorithm.
fn uni_gcd(cfg: &FieldConfig, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    uni_trim(&mut f);
    uni_trim(&mut g);
    while !g.is_empty() {
        let (_, r) = uni_divmod(cfg, &f, &g);
        f = g;
        g = r;
    }
    uni_monic(cfg, &f)
}
