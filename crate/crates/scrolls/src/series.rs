//! Exact integer polynomial arithmetic for Hilbert-series numerators,
//! the positive truncation, and the generic-section formula.
//!
//! Everything here is computed exactly up to degree `sum(a)`; syzygy
//! degrees can never exceed that bound, so no tail is ever lost.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scroll::ScrollType;

/// Dense integer polynomial indexed by exponent, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: usize) -> i64 {
        self.coeffs.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &ci) in self.coeffs.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &cj) in other.coeffs.iter().enumerate() {
                out[i + j] += ci * cj;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Derivative evaluated at 1, i.e. `sum i * c_i`.
    pub fn derivative_eval_one(&self) -> i64 {
        self.coeffs.iter().enumerate().map(|(i, &c)| i as i64 * c).sum()
    }

    /// `1 - z^k`.
    fn one_minus_power(k: usize) -> IntPolynomial {
        let mut coeffs = vec![0i64; k + 1];
        coeffs[0] = 1;
        coeffs[k] -= 1; // k = 0 gives the zero polynomial
        IntPolynomial::new(coeffs)
    }

    /// Synthetic division by `(1 - z)`: returns the quotient and the
    /// remainder, which is the value at 1.
    fn divide_by_one_minus_z(&self) -> (IntPolynomial, i64) {
        if self.is_zero() {
            return (IntPolynomial::zero(), 0);
        }
        // q_i = c_0 + ... + c_i; the last prefix sum is the remainder.
        let mut quotient = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0i64;
        for &c in &self.coeffs {
            acc += c;
            quotient.push(acc);
        }
        let remainder = quotient.pop().expect("nonempty");
        (IntPolynomial::new(quotient), remainder)
    }
}

/// The Koszul numerator `prod_i (1 - z^{a_i})`, of degree `sum(a)`.
pub fn koszul_numerator(a: &ScrollType) -> Result<IntPolynomial> {
    require_positive(a)?;
    let mut acc = IntPolynomial::one();
    for &part in a.parts() {
        acc = acc.mul(&IntPolynomial::one_minus_power(part));
    }
    Ok(acc)
}

/// Fröberg's positive truncation: keep coefficients while the prefix is
/// strictly positive, zero out everything from the first index whose
/// prefix contains a non-positive coefficient. The input is read as a
/// series known exactly up to `bound`.
pub fn positive_truncate(series: &IntPolynomial, bound: usize) -> IntPolynomial {
    let mut kept = Vec::new();
    for i in 0..=bound {
        let c = series.coeff(i);
        if c > 0 {
            kept.push(c);
        } else {
            break;
        }
    }
    IntPolynomial::new(kept)
}

/// The exact quotient `prod (1 - z^{a_i}) / (1-z)^2`, i.e. the Hilbert
/// series numerator of a complete intersection quotient before
/// truncation; divisibility needs `d >= 2`.
pub fn koszul_quotient(a: &ScrollType) -> Result<IntPolynomial> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall { d: a.dim() });
    }
    let (q1, r1) = koszul_numerator(a)?.divide_by_one_minus_z();
    let (quotient, r2) = q1.divide_by_one_minus_z();
    if r1 != 0 || r2 != 0 {
        return Err(Error::Verification {
            detail: format!("Koszul numerator of {a} not divisible by (1-z)^2"),
        });
    }
    Ok(quotient)
}

/// Syzygy degrees of a generic hyperplane section of `S(a)`: reads the
/// exponent multiset of
/// `(1-z)^2 [ prod (1 - z^{a_i}) / (1-z)^2 ]_+ + sum z^{a_i} - 1`.
pub fn generic_section(a: &ScrollType) -> Result<ScrollType> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall { d: a.dim() });
    }
    require_positive(a)?;
    let total = a.degree();
    let truncated = positive_truncate(&koszul_quotient(a)?, total);

    // (1-z)^2 * truncated + sum z^{a_i} - 1
    let square = IntPolynomial::new(vec![1, -2, 1]);
    let mut tail = vec![0i64; total + 1];
    tail[0] = -1;
    for &part in a.parts() {
        tail[part] += 1;
    }
    let result = square.mul(&truncated).add(&IntPolynomial::new(tail));

    let mut degrees = Vec::new();
    for (exp, &c) in result.coeffs().iter().enumerate() {
        if c < 0 {
            return Err(Error::Verification {
                detail: format!("generic-section series for {a} has negative coefficient at z^{exp}"),
            });
        }
        for _ in 0..c {
            degrees.push(exp);
        }
    }
    if degrees.len() != a.dim() - 1 || degrees.iter().sum::<usize>() != total || degrees[0] == 0 {
        return Err(Error::Verification {
            detail: format!("generic-section series for {a} has the wrong exponent count"),
        });
    }
    ScrollType::new(degrees)
}

/// Forms `N(z) = 1 - sum z^{a_i} + sum z^{b_i}`, checks that `N(1)` and
/// `N'(1)` vanish, and returns the exact quotient `N(z) / (1-z)^2` — the
/// Hilbert-series numerator of the section pair.
pub fn hilbert_numerator_check(a: &ScrollType, b: &ScrollType) -> Result<IntPolynomial> {
    if b.dim() != a.dim() - 1 {
        return Err(Error::Length { expected: a.dim() - 1, got: b.dim() });
    }
    let top = a.degree().max(b.degree());
    let mut coeffs = vec![0i64; top + 1];
    coeffs[0] += 1;
    for &p in a.parts() {
        coeffs[p] -= 1;
    }
    for &p in b.parts() {
        coeffs[p] += 1;
    }
    let numerator = IntPolynomial::new(coeffs);

    let at_one = numerator.eval_one();
    let derivative_at_one = numerator.derivative_eval_one();
    if at_one != 0 || derivative_at_one != 0 {
        return Err(Error::SeriesNotDivisible { at_one, derivative_at_one });
    }
    let (q1, _) = numerator.divide_by_one_minus_z();
    let (quotient, _) = q1.divide_by_one_minus_z();
    Ok(quotient)
}

fn require_positive(a: &ScrollType) -> Result<()> {
    if let Some(index) = a.parts().iter().position(|&p| p == 0) {
        return Err(Error::Positivity { which: "a", index: index + 1 });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(parts: &[usize]) -> ScrollType {
        ScrollType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn koszul_small_cases() {
        assert_eq!(koszul_numerator(&scroll(&[1, 1])).unwrap().coeffs(), &[1, -2, 1]);
        assert_eq!(koszul_numerator(&scroll(&[1, 2])).unwrap().coeffs(), &[1, -1, -1, 1]);
    }

    #[test]
    fn koszul_vanishes_at_one() {
        for a in crate::graph::partitions(10) {
            assert_eq!(koszul_numerator(&a).unwrap().eval_one(), 0);
        }
    }

    #[test]
    fn quotient_series_for_4569() {
        let a = scroll(&[4, 5, 6, 9]);
        let quotient = koszul_quotient(&a).unwrap();
        let prefix: Vec<i64> = (0..8).map(|i| quotient.coeff(i)).collect();
        assert_eq!(prefix, vec![1, 2, 3, 4, 4, 3, 1, -1]);
        let truncated = positive_truncate(&quotient, a.degree());
        assert_eq!(truncated.coeffs(), &[1, 2, 3, 4, 4, 3, 1]);
    }

    #[test]
    fn positive_truncate_definition() {
        let p = IntPolynomial::new(vec![1, 2, 3, 4, 4, 3, 1, -1, 5]);
        assert_eq!(positive_truncate(&p, 10).coeffs(), &[1, 2, 3, 4, 4, 3, 1]);

        let all_positive = IntPolynomial::new(vec![3, 1, 4, 1, 5]);
        assert_eq!(positive_truncate(&all_positive, 4), all_positive);

        // A zero coefficient kills everything after it (strict positivity).
        let with_zero = IntPolynomial::new(vec![1, 0, 5]);
        assert_eq!(positive_truncate(&with_zero, 2).coeffs(), &[1]);
    }

    #[test]
    fn positive_truncate_is_idempotent_and_prefix_monotone() {
        let samples = [
            vec![1, 2, 3, -1, 4],
            vec![5],
            vec![-1, 2],
            vec![1, 1, 0, 1],
            vec![2, 3, 4, 5, 6, 7],
        ];
        for coeffs in samples {
            let p = IntPolynomial::new(coeffs);
            let once = positive_truncate(&p, 8);
            let twice = positive_truncate(&once, 8);
            assert_eq!(once, twice);
            for i in 0..once.coeffs().len() {
                assert_eq!(once.coeff(i), p.coeff(i));
                assert!(once.coeff(i) > 0);
            }
        }
    }

    #[test]
    fn generic_sections_golden() {
        assert_eq!(generic_section(&scroll(&[4, 5, 6, 9])).unwrap(), scroll(&[7, 8, 9]));
        assert_eq!(generic_section(&scroll(&[1, 1, 1, 1, 2])).unwrap(), scroll(&[1, 1, 2, 2]));
        assert_eq!(generic_section(&scroll(&[1, 1])).unwrap(), scroll(&[2]));
    }

    #[test]
    fn generic_section_passes_the_checker_on_a_sweep() {
        // All positive scroll types with 2 <= d <= 6 and sum(a) <= 20.
        let mut checked = 0usize;
        for n in 2..=20usize {
            for a in crate::graph::partitions(n) {
                if a.dim() < 2 || a.dim() > 6 {
                    continue;
                }
                let b = generic_section(&a).unwrap();
                let report = crate::scroll::check_section_conditions(&a, &b).unwrap();
                assert!(report.valid, "generic section of {a} fails conditions: {}", report.detail);
                let quotient = hilbert_numerator_check(&a, &b).unwrap();
                assert!(quotient.coeffs().iter().all(|&c| c >= 0));
                checked += 1;
            }
        }
        assert!(checked > 300);
    }

    #[test]
    fn hilbert_numerator_check_golden() {
        let q = hilbert_numerator_check(&scroll(&[4, 5, 6, 9]), &scroll(&[7, 8, 9])).unwrap();
        assert_eq!(q.coeffs(), &[1, 2, 3, 4, 4, 3, 1]);

        let q = hilbert_numerator_check(&scroll(&[1, 1]), &scroll(&[2])).unwrap();
        assert_eq!(q.coeffs(), &[1]);

        let e = hilbert_numerator_check(&scroll(&[4, 5, 6, 9]), &scroll(&[7, 8, 10])).unwrap_err();
        match e {
            Error::SeriesNotDivisible { at_one, derivative_at_one } => {
                assert_eq!(at_one, 0);
                assert_ne!(derivative_at_one, 0);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
