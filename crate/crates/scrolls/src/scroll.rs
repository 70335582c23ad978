//! Integer-sequence side of the theory: scroll types, the numerical
//! conditions for (reducible) hyperplane sections, and the enumerators
//! built on top of them.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A rational normal scroll `S(a_1, ..., a_d)`, encoded by its weakly
/// increasing part sequence. Parts are nonnegative; zero parts (cones)
/// are allowed by the type but rejected by most operations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScrollType {
    parts: Vec<usize>,
}

impl ScrollType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyScroll);
        }
        for i in 1..parts.len() {
            if parts[i] < parts[i - 1] {
                return Err(Error::NotWeaklyIncreasing { index: i });
            }
        }
        if parts.iter().all(|&p| p == 0) {
            return Err(Error::AllZeroParts);
        }
        Ok(ScrollType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Dimension `d` of the scroll.
    pub fn dim(&self) -> usize {
        self.parts.len()
    }

    /// Degree, i.e. the sum of the parts.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Dimension of the ambient projective space, `sum(a) + d - 1`.
    pub fn ambient(&self) -> usize {
        self.degree() + self.dim() - 1
    }

    /// Codimension in the ambient space; equals `degree - 1` for a
    /// variety of minimal degree.
    pub fn codim(&self) -> usize {
        self.ambient() - self.dim()
    }

    pub fn zero_count(&self) -> usize {
        self.parts.iter().take_while(|&&p| p == 0).count()
    }

    pub fn is_positive(&self) -> bool {
        self.parts[0] > 0
    }

    /// The sub-scroll spanned by the positive parts (the cone base).
    pub fn positive_part(&self) -> Result<ScrollType> {
        ScrollType::new(self.parts[self.zero_count()..].to_vec())
    }

    /// Label in exponent notation, e.g. `(1^4,2)`.
    pub fn exponent_label(&self) -> String {
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if j - i >= 2 {
                pieces.push(format!("{}^{}", self.parts[i], j - i));
            } else {
                pieces.push(format!("{}", self.parts[i]));
            }
            i = j;
        }
        format!("({})", pieces.join(","))
    }

    fn require_positive(&self, which: &'static str) -> Result<()> {
        match self.parts.iter().position(|&p| p == 0) {
            Some(index) => Err(Error::Positivity { which, index: index + 1 }),
            None => Ok(()),
        }
    }

    fn require_dim_at_least_two(&self) -> Result<()> {
        if self.dim() < 2 {
            return Err(Error::DimensionTooSmall { d: self.dim() });
        }
        Ok(())
    }
}

impl fmt::Display for ScrollType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let csv: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", csv.join(","))
    }
}

impl FromStr for ScrollType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScrollType::new(parse_usize_csv(s)?)
    }
}

impl Serialize for ScrollType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

pub(crate) fn parse_usize_csv(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|piece| {
            piece.trim().parse::<usize>().map_err(|_| Error::Parse {
                detail: format!("bad integer sequence entry {piece:?}"),
            })
        })
        .collect()
}

/// Which numerical condition failed first, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Violation {
    Sum,
    Pointwise,
    Tail,
    MultiplicityBound,
    Positivity,
    Length,
}

/// Outcome of a section-condition check. `v` is the 1-based pivot
/// `min { j : a_j < b_j }` and is present whenever such a `j` exists,
/// valid or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub violated: Option<Violation>,
    pub v: Option<usize>,
    #[serde(skip)]
    pub detail: String,
}

impl ValidityReport {
    fn valid(v: Option<usize>, detail: impl Into<String>) -> Self {
        ValidityReport { valid: true, violated: None, v, detail: detail.into() }
    }

    fn invalid(violated: Violation, v: Option<usize>, detail: impl Into<String>) -> Self {
        ValidityReport { valid: false, violated: Some(violated), v, detail: detail.into() }
    }
}

/// Unordered multiset of multiplicities `m_1, ..., m_s`; stored sorted
/// ascending. May be empty (the irreducible case) at the type level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityMultiset {
    entries: Vec<usize>,
}

impl MultiplicityMultiset {
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        if let Some(index) = entries.iter().position(|&m| m == 0) {
            return Err(Error::ZeroMultiplicity { index: index + 1 });
        }
        entries.sort_unstable();
        Ok(MultiplicityMultiset { entries })
    }

    pub fn empty() -> Self {
        MultiplicityMultiset { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `s`, the number of distinct support points.
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    /// `c`, the total multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }
}

impl fmt::Display for MultiplicityMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let csv: Vec<String> = self.entries.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", csv.join(","))
    }
}

impl Serialize for MultiplicityMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for m in &self.entries {
            seq.serialize_element(m)?;
        }
        seq.end()
    }
}

impl FromStr for MultiplicityMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiplicityMultiset::new(parse_usize_csv(s)?)
    }
}

/// Core of both checkers: sum, pointwise and tail conditions for the
/// pair `(a, b)` with a degree deficit `c` (0 in the irreducible case).
/// Positivity is the callers' business; this also serves the relaxed
/// variant where `a_1` may be zero.
pub(crate) fn numeric_conditions(a: &[usize], b: &[usize], deficit: usize) -> ValidityReport {
    let d = a.len();
    let sum_a: usize = a.iter().sum();
    let sum_b: usize = b.iter().sum();
    let v = (0..d - 1).find(|&j| a[j] < b[j]).map(|j| j + 1);

    if sum_a != sum_b + deficit {
        let detail = if deficit == 0 {
            format!("sum mismatch: sum(a) = {sum_a}, sum(b) = {sum_b}")
        } else {
            format!("sum mismatch: sum(a) = {sum_a}, sum(b) + c = {}", sum_b + deficit)
        };
        return ValidityReport::invalid(Violation::Sum, v, detail);
    }
    if let Some(j) = (0..d - 1).find(|&j| b[j] < a[j]) {
        return ValidityReport::invalid(
            Violation::Pointwise,
            v,
            format!("pointwise bound fails: b_{} = {} < a_{} = {}", j + 1, b[j], j + 1, a[j]),
        );
    }
    if let Some(pivot) = v {
        // 1-based j runs from the pivot through d-1, comparing b_j with a_{j+1}.
        for j in pivot..d {
            if b[j - 1] < a[j] {
                return ValidityReport::invalid(
                    Violation::Tail,
                    v,
                    format!("tail bound fails: b_{} = {} < a_{} = {}", j, b[j - 1], j + 1, a[j]),
                );
            }
        }
    }
    ValidityReport::valid(v, "conditions hold")
}

/// Decides whether `S(b)` is an irreducible hyperplane section of `S(a)`.
///
/// Valid iff the sums agree, `a_j <= b_j` pointwise, and from the pivot
/// `v = min { j : a_j < b_j }` on, `b_j >= a_{j+1}`.
pub fn check_section_conditions(a: &ScrollType, b: &ScrollType) -> Result<ValidityReport> {
    a.require_dim_at_least_two()?;
    if b.dim() != a.dim() - 1 {
        return Err(Error::Length { expected: a.dim() - 1, got: b.dim() });
    }
    a.require_positive("a")?;
    b.require_positive("b")?;
    Ok(numeric_conditions(a.parts(), b.parts(), 0))
}

/// Decides whether `S(b)` together with multiplicity structures `m` can
/// appear as a (reducible) hyperplane section of `S(a)`.
pub fn check_reducible_conditions(
    a: &ScrollType,
    b: &ScrollType,
    m: &MultiplicityMultiset,
) -> Result<ValidityReport> {
    a.require_dim_at_least_two()?;
    if b.dim() != a.dim() - 1 {
        return Err(Error::Length { expected: a.dim() - 1, got: b.dim() });
    }
    a.require_positive("a")?;
    b.require_positive("b")?;
    if m.is_empty() {
        return Err(Error::EmptyMultiplicities);
    }
    let c = m.total();
    let a_max = *a.parts().last().expect("nonempty");
    if c > a_max {
        let v = (0..a.dim() - 1).find(|&j| a.parts()[j] < b.parts()[j]).map(|j| j + 1);
        return Ok(ValidityReport::invalid(
            Violation::MultiplicityBound,
            v,
            format!("multiplicity bound fails: sum(m) = {c} > a_d = {a_max}"),
        ));
    }
    Ok(numeric_conditions(a.parts(), b.parts(), c))
}

/// Calls `f` for every weakly increasing sequence of length `len` with
/// the given sum whose j-th entry is at least `floor[j]`. Sequences are
/// produced in lexicographic order.
fn for_each_bounded_sequence(
    len: usize,
    sum: usize,
    floor: &[usize],
    prefix: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if len == 0 {
        if sum == 0 {
            f(prefix);
        }
        return;
    }
    let prev = prefix.last().copied().unwrap_or(0);
    let lo = prev.max(floor[prefix.len()]).max(1);
    // The remaining len-1 entries are each >= the current one.
    let mut value = lo;
    while value * len <= sum {
        prefix.push(value);
        for_each_bounded_sequence(len - 1, sum - value, floor, prefix, f);
        prefix.pop();
        value += 1;
    }
}

/// All scroll types `S(b)` that arise as irreducible hyperplane sections
/// of `S(a)`, in lexicographic order.
pub fn enumerate_sections(a: &ScrollType) -> Result<Vec<ScrollType>> {
    a.require_dim_at_least_two()?;
    a.require_positive("a")?;
    let d = a.dim();
    let total = a.degree();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    for_each_bounded_sequence(d - 1, total, a.parts(), &mut prefix, &mut |candidate| {
        if numeric_conditions(a.parts(), candidate, 0).valid {
            out.push(ScrollType { parts: candidate.to_vec() });
        }
    });
    Ok(out)
}

/// One degree bucket of the reducible-section table: all scroll
/// components of degree `degree = sum(a) - deficit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibleBucket {
    pub degree: usize,
    pub deficit: usize,
    pub components: Vec<ScrollType>,
}

impl ReducibleBucket {
    /// Every way to realize this bucket's deficit as a multiplicity
    /// multiset; each pairs with each component.
    pub fn multiplicity_partitions(&self) -> Vec<MultiplicityMultiset> {
        crate::graph::partitions(self.deficit)
            .into_iter()
            .map(|p| MultiplicityMultiset::new(p.parts().to_vec()).expect("positive parts"))
            .collect()
    }
}

/// The full table of scroll components of reducible hyperplane sections,
/// bucketed by degree (descending, i.e. deficit ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibleTable {
    pub buckets: Vec<ReducibleBucket>,
}

impl ReducibleTable {
    /// Total number of distinct scroll components across all buckets.
    pub fn total(&self) -> usize {
        self.buckets.iter().map(|b| b.components.len()).sum()
    }
}

/// Enumerates, for every deficit `c = 1..=a_d`, the scroll components
/// `S(b)` with `sum(b) = sum(a) - c` that satisfy the reducible-section
/// conditions. Components are listed once per `b`; the partitions of
/// `c` into multiplicity multisets are left to the caller.
pub fn enumerate_reducible_components(a: &ScrollType) -> Result<ReducibleTable> {
    a.require_dim_at_least_two()?;
    a.require_positive("a")?;
    let d = a.dim();
    let total = a.degree();
    let a_max = *a.parts().last().expect("nonempty");
    let mut buckets = Vec::new();
    for deficit in 1..=a_max {
        let mut components = Vec::new();
        let mut prefix = Vec::new();
        for_each_bounded_sequence(d - 1, total - deficit, a.parts(), &mut prefix, &mut |candidate| {
            let report = numeric_conditions(a.parts(), candidate, deficit);
            // b = a-prefix (no pivot) is a section only when c = a_d,
            // which is exactly what the sum condition already enforces.
            if report.valid {
                components.push(ScrollType { parts: candidate.to_vec() });
            }
        });
        buckets.push(ReducibleBucket { degree: total - deficit, deficit, components });
    }
    Ok(ReducibleTable { buckets })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(parts: &[usize]) -> ScrollType {
        ScrollType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn scroll_type_invariants() {
        assert!(ScrollType::new(vec![]).is_err());
        assert!(ScrollType::new(vec![2, 1]).is_err());
        assert!(ScrollType::new(vec![0, 0]).is_err());
        let s = scroll(&[4, 5, 6, 9]);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.degree(), 24);
        assert_eq!(s.ambient(), 27);
        assert_eq!(s.degree(), s.ambient() - s.dim() + 1);
        let cone = scroll(&[0, 0, 1, 2]);
        assert_eq!(cone.zero_count(), 2);
        assert_eq!(cone.positive_part().unwrap(), scroll(&[1, 2]));
    }

    #[test]
    fn exponent_labels() {
        assert_eq!(scroll(&[1, 1, 1, 1, 2]).exponent_label(), "(1^4,2)");
        assert_eq!(scroll(&[1, 1, 2, 2]).exponent_label(), "(1^2,2^2)");
        assert_eq!(scroll(&[1, 2, 3]).exponent_label(), "(1,2,3)");
        assert_eq!(scroll(&[6]).exponent_label(), "(6)");
    }

    #[test]
    fn display_and_parse_round_trip() {
        let s = scroll(&[4, 5, 6, 9]);
        assert_eq!(s.to_string(), "4,5,6,9");
        assert_eq!("4, 5, 6, 9".parse::<ScrollType>().unwrap(), s);
        assert!(" 4,x".parse::<ScrollType>().is_err());
    }

    #[test]
    fn check_valid_pairs() {
        let r = check_section_conditions(&scroll(&[9, 10, 11, 11, 14, 14]), &scroll(&[9, 13, 13, 14, 20]))
            .unwrap();
        assert!(r.valid);
        assert_eq!(r.v, Some(2));

        let r = check_section_conditions(&scroll(&[4, 5, 6, 9]), &scroll(&[7, 8, 9])).unwrap();
        assert!(r.valid);
        assert_eq!(r.v, Some(1));

        let r = check_section_conditions(&scroll(&[1, 1]), &scroll(&[2])).unwrap();
        assert!(r.valid);
        assert_eq!(r.v, Some(1));
    }

    #[test]
    fn check_invalid_pairs() {
        // Tail failure: b_2 = 5 < a_3 = 6 with pivot v = 1.
        let r = check_section_conditions(&scroll(&[4, 5, 6, 9]), &scroll(&[5, 5, 14])).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violated, Some(Violation::Tail));
        assert_eq!(r.v, Some(1));

        let r = check_section_conditions(&scroll(&[4, 5, 6, 9]), &scroll(&[7, 8, 10])).unwrap();
        assert_eq!(r.violated, Some(Violation::Sum));

        let r = check_section_conditions(&scroll(&[4, 5, 6, 9]), &scroll(&[3, 10, 11])).unwrap();
        assert_eq!(r.violated, Some(Violation::Pointwise));
    }

    #[test]
    fn check_errors() {
        let e = check_section_conditions(&scroll(&[4, 5, 6, 9]), &scroll(&[7, 17])).unwrap_err();
        assert_eq!(e, Error::Length { expected: 3, got: 2 });
        let e = check_section_conditions(&scroll(&[0, 5]), &scroll(&[5])).unwrap_err();
        assert!(matches!(e, Error::Positivity { which: "a", .. }));
        let e = check_section_conditions(&scroll(&[3]), &scroll(&[3])).unwrap_err();
        assert!(matches!(e, Error::DimensionTooSmall { d: 1 }));
    }

    #[test]
    fn enumerate_sections_of_quadric_surface() {
        let sections = enumerate_sections(&scroll(&[1, 1])).unwrap();
        assert_eq!(sections, vec![scroll(&[2])]);
    }

    #[test]
    fn enumerate_sections_of_codim5_node() {
        let sections = enumerate_sections(&scroll(&[1, 1, 1, 1, 2])).unwrap();
        assert_eq!(sections, vec![scroll(&[1, 1, 1, 3]), scroll(&[1, 1, 2, 2])]);
    }

    #[test]
    fn enumerate_sections_of_4569() {
        let expected: Vec<ScrollType> = [
            [4, 5, 15], [4, 6, 14], [4, 7, 13], [4, 8, 12], [4, 9, 11], [4, 10, 10],
            [5, 6, 13], [5, 7, 12], [5, 8, 11], [5, 9, 10], [6, 6, 12], [6, 7, 11],
            [6, 8, 10], [6, 9, 9], [7, 7, 10], [7, 8, 9],
        ]
        .iter()
        .map(|p| scroll(p))
        .collect();
        let got = enumerate_sections(&scroll(&[4, 5, 6, 9])).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn sections_invariants_hold_on_a_sweep() {
        for a in crate::graph::partitions(9) {
            if a.dim() < 2 {
                continue;
            }
            for b in enumerate_sections(&a).unwrap() {
                assert_eq!(b.degree(), a.degree());
                for (x, y) in a.parts().iter().zip(b.parts()) {
                    assert!(x <= y);
                }
            }
        }
    }

    #[test]
    fn reducible_check_golden() {
        let a = scroll(&[2, 5, 7, 10]);
        let m = MultiplicityMultiset::new(vec![1, 3]).unwrap();
        let r = check_reducible_conditions(&a, &scroll(&[2, 7, 11]), &m).unwrap();
        assert!(r.valid);

        let a = scroll(&[4, 5, 6, 9]);
        let m9 = MultiplicityMultiset::new(vec![9]).unwrap();
        assert!(check_reducible_conditions(&a, &scroll(&[4, 5, 6]), &m9).unwrap().valid);

        let m10 = MultiplicityMultiset::new(vec![10]).unwrap();
        let r = check_reducible_conditions(&a, &scroll(&[4, 5, 6]), &m10).unwrap();
        assert_eq!(r.violated, Some(Violation::MultiplicityBound));

        // Prefix shape with the wrong deficit trips the sum condition.
        let m8 = MultiplicityMultiset::new(vec![8]).unwrap();
        let r = check_reducible_conditions(&a, &scroll(&[4, 5, 6]), &m8).unwrap();
        assert_eq!(r.violated, Some(Violation::Sum));

        let e = check_reducible_conditions(&a, &scroll(&[4, 5, 6]), &MultiplicityMultiset::empty())
            .unwrap_err();
        assert_eq!(e, Error::EmptyMultiplicities);
    }

    #[test]
    fn reducible_table_for_conic() {
        let table = enumerate_reducible_components(&scroll(&[1, 1])).unwrap();
        assert_eq!(table.buckets.len(), 1);
        assert_eq!(table.buckets[0].degree, 1);
        assert_eq!(table.buckets[0].components, vec![scroll(&[1])]);
        assert_eq!(table.total(), 1);
    }

    #[test]
    fn reducible_table_for_4569() {
        let table = enumerate_reducible_components(&scroll(&[4, 5, 6, 9])).unwrap();
        let counts: Vec<(usize, usize)> =
            table.buckets.iter().map(|b| (b.degree, b.components.len())).collect();
        assert_eq!(
            counts,
            vec![(23, 13), (22, 10), (21, 7), (20, 4), (19, 2), (18, 1), (17, 0), (16, 0), (15, 1)]
        );
        assert_eq!(table.total(), 38);
        assert_eq!(table.buckets[5].components, vec![scroll(&[4, 5, 9])]);
        assert_eq!(table.buckets[8].components, vec![scroll(&[4, 5, 6])]);
    }

    #[test]
    fn multiset_is_sorted_and_validated() {
        let m = MultiplicityMultiset::new(vec![3, 1]).unwrap();
        assert_eq!(m.entries(), &[1, 3]);
        assert_eq!(m.total(), 4);
        assert_eq!(m.count(), 2);
        assert!(MultiplicityMultiset::new(vec![1, 0]).is_err());
    }
}
