//! Integral hyperplane arrangements and elementary structural operations.
//!
//! An arrangement is an ordered, duplicate-free list of hyperplanes
//! `a_1 x_1 + ... + a_m x_m = b` with integer data. Rows are kept exactly
//! as given except for sign normalization (first nonzero coefficient made
//! positive, offset negated along): the counting semantics over `Z/qZ`
//! depend on the literal integers, so rows are never divided by a common
//! factor.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Errors from arrangement construction and structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    /// A row with all coefficients zero.
    ZeroHyperplane { row: usize },
    /// A row whose coefficient count does not match the ambient dimension.
    DimensionMismatch { row: usize, expected: usize, found: usize },
    /// Hyperplane index out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// The pivot of a restriction has no coefficient equal to +-1, so the
    /// deletion-restriction counting identity is not guaranteed to hold.
    NoUnitCoefficient { index: usize },
    /// The ambient dimension must be positive.
    ZeroDimension,
    /// Malformed arrangement text.
    Parse { line: usize, message: String },
}

impl fmt::Display for ArrangementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementError::ZeroHyperplane { row } => {
                write!(f, "row {row}: all coefficients are zero")
            }
            ArrangementError::DimensionMismatch { row, expected, found } => {
                write!(f, "row {row}: expected {expected} coefficients, found {found}")
            }
            ArrangementError::IndexOutOfRange { index, len } => {
                write!(f, "hyperplane index {index} out of range (arrangement has {len})")
            }
            ArrangementError::NoUnitCoefficient { index } => {
                write!(f, "hyperplane {index} has no coefficient equal to +-1")
            }
            ArrangementError::ZeroDimension => write!(f, "dimension must be positive"),
            ArrangementError::Parse { line, message } => {
                write!(f, "parse error on line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for ArrangementError {}

/// One integral hyperplane `a . x = b`, stored in canonical form: the
/// first nonzero coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    coeffs: Vec<i64>,
    offset: i64,
}

impl Hyperplane {
    /// Build and canonicalize. The only normalization applied is a global
    /// sign flip; no gcd division takes place.
    pub fn new(coeffs: Vec<i64>, offset: i64) -> Result<Self, ArrangementError> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(ArrangementError::ZeroHyperplane { row: 0 });
        }
        let mut h = Hyperplane { coeffs, offset };
        h.canonicalize();
        Ok(h)
    }

    fn canonicalize(&mut self) {
        let lead = self.coeffs.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        if lead < 0 {
            for c in &mut self.coeffs {
                *c = -*c;
            }
            self.offset = -self.offset;
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn has_unit_coefficient(&self) -> bool {
        self.coeffs.iter().any(|&c| c == 1 || c == -1)
    }

    /// The same hyperplane with all offsets dropped (used to centralize an
    /// arrangement).
    pub fn centralized(&self) -> Hyperplane {
        Hyperplane { coeffs: self.coeffs.clone(), offset: 0 }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", k + 1)?;
        }
        write!(f, " = {}", self.offset)
    }
}

#[derive(Serialize, Deserialize)]
struct HyperplaneJson {
    coeffs: Vec<i64>,
    offset: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    dim: usize,
    hyperplanes: Vec<HyperplaneJson>,
}

/// An ordered, duplicate-free list of hyperplanes in a fixed dimension,
/// with optional display labels. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
#[derive(Serialize, Deserialize)]
#[serde(try_from = "ArrangementJson", into = "ArrangementJson")]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    labels: Vec<Option<String>>,
}

impl TryFrom<ArrangementJson> for Arrangement {
    type Error = ArrangementError;

    fn try_from(json: ArrangementJson) -> Result<Self, ArrangementError> {
        let rows = json
            .hyperplanes
            .into_iter()
            .map(|h| (h.coeffs, h.offset, h.label))
            .collect::<Vec<_>>();
        Arrangement::from_labeled_rows(json.dim, rows)
    }
}

impl From<Arrangement> for ArrangementJson {
    fn from(arr: Arrangement) -> ArrangementJson {
        ArrangementJson {
            dim: arr.dim,
            hyperplanes: arr
                .hyperplanes
                .iter()
                .zip(&arr.labels)
                .map(|(h, label)| HyperplaneJson {
                    coeffs: h.coeffs.clone(),
                    offset: h.offset,
                    label: label.clone(),
                })
                .collect(),
        }
    }
}

impl Arrangement {
    /// Build from raw rows. Rows are canonicalized, then duplicates (in
    /// canonical form) are merged, first occurrence winning. Indices of
    /// dropped duplicate input rows are reported alongside the result.
    pub fn from_rows_with_warnings(
        dim: usize,
        rows: Vec<(Vec<i64>, i64)>,
    ) -> Result<(Self, Vec<usize>), ArrangementError> {
        let labeled = rows.into_iter().map(|(c, b)| (c, b, None)).collect();
        Self::from_labeled_rows_with_warnings(dim, labeled)
    }

    pub fn from_labeled_rows(
        dim: usize,
        rows: Vec<(Vec<i64>, i64, Option<String>)>,
    ) -> Result<Self, ArrangementError> {
        Self::from_labeled_rows_with_warnings(dim, rows).map(|(arr, _)| arr)
    }

    pub fn from_labeled_rows_with_warnings(
        dim: usize,
        rows: Vec<(Vec<i64>, i64, Option<String>)>,
    ) -> Result<(Self, Vec<usize>), ArrangementError> {
        if dim == 0 {
            return Err(ArrangementError::ZeroDimension);
        }
        let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(rows.len());
        let mut labels = Vec::with_capacity(rows.len());
        let mut dropped = Vec::new();
        for (row_idx, (coeffs, offset, label)) in rows.into_iter().enumerate() {
            if coeffs.len() != dim {
                return Err(ArrangementError::DimensionMismatch {
                    row: row_idx,
                    expected: dim,
                    found: coeffs.len(),
                });
            }
            let h = Hyperplane::new(coeffs, offset)
                .map_err(|_| ArrangementError::ZeroHyperplane { row: row_idx })?;
            if hyperplanes.contains(&h) {
                dropped.push(row_idx);
            } else {
                hyperplanes.push(h);
                labels.push(label);
            }
        }
        Ok((Arrangement { dim, hyperplanes, labels }, dropped))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, idx: usize) -> Result<&Hyperplane, ArrangementError> {
        self.hyperplanes
            .get(idx)
            .ok_or(ArrangementError::IndexOutOfRange { index: idx, len: self.len() })
    }

    pub fn label(&self, idx: usize) -> Option<&str> {
        self.labels.get(idx).and_then(|l| l.as_deref())
    }

    /// Position of a hyperplane equal (in canonical form) to `h`.
    pub fn position_of(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.iter().position(|g| g == h)
    }

    /// The arrangement with hyperplane `idx` removed; order of the rest
    /// is preserved.
    pub fn delete(&self, idx: usize) -> Result<Arrangement, ArrangementError> {
        self.hyperplane(idx)?;
        let mut out = self.clone();
        out.hyperplanes.remove(idx);
        out.labels.remove(idx);
        Ok(out)
    }

    /// All offsets dropped; coincident hyperplanes merge.
    pub fn centralized(&self) -> Arrangement {
        let rows = self
            .hyperplanes
            .iter()
            .zip(&self.labels)
            .map(|(h, label)| (h.coeffs.clone(), 0, label.clone()))
            .collect();
        Arrangement::from_labeled_rows(self.dim, rows)
            .expect("centralizing a valid arrangement cannot fail")
    }

    /// The coefficient matrix with one column per hyperplane, `dim` rows.
    /// Offsets are not part of it.
    pub fn coefficient_columns(&self) -> Vec<Vec<i64>> {
        self.hyperplanes.iter().map(|h| h.coeffs.clone()).collect()
    }

    /// Serialize to the plain text format: a header `m n`, then one row
    /// `a_1 ... a_m b` per hyperplane.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.dim, self.len());
        for (h, label) in self.hyperplanes.iter().zip(&self.labels) {
            for c in h.coeffs() {
                out.push_str(&format!("{c} "));
            }
            out.push_str(&format!("{}", h.offset()));
            if let Some(label) = label {
                out.push_str(&format!("  # {label}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parse the plain text format. Lines whose first non-blank character
    /// is `#` are comments; a trailing `# ...` on a data row is ignored.
    pub fn parse_text(input: &str) -> Result<Arrangement, ArrangementError> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows: Vec<(Vec<i64>, i64, Option<String>)> = Vec::new();
        for (line_no, raw) in input.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parse = |tok: &str| {
                tok.parse::<i64>().map_err(|_| ArrangementError::Parse {
                    line: line_no + 1,
                    message: format!("expected an integer, found `{tok}`"),
                })
            };
            let nums: Vec<i64> = line.split_whitespace().map(parse).collect::<Result<_, _>>()?;
            match header {
                None => {
                    if nums.len() != 2 || nums[0] < 1 || nums[1] < 0 {
                        return Err(ArrangementError::Parse {
                            line: line_no + 1,
                            message: "header must be `m n` with m >= 1".into(),
                        });
                    }
                    header = Some((nums[0] as usize, nums[1] as usize));
                }
                Some((m, _)) => {
                    if nums.len() != m + 1 {
                        return Err(ArrangementError::Parse {
                            line: line_no + 1,
                            message: format!("expected {} integers, found {}", m + 1, nums.len()),
                        });
                    }
                    let offset = nums[m];
                    rows.push((nums[..m].to_vec(), offset, None));
                }
            }
        }
        let (m, n) = header.ok_or(ArrangementError::Parse {
            line: 0,
            message: "missing header line".into(),
        })?;
        if rows.len() != n {
            return Err(ArrangementError::Parse {
                line: 0,
                message: format!("header declares {n} rows, found {}", rows.len()),
            });
        }
        Arrangement::from_labeled_rows(m, rows)
    }
}

/// A validated (arrangement, pivot) pair for restriction counting. The
/// pivot is required to have a coefficient equal to +-1: this is what
/// makes the constrained count over `Z_q^m` agree with the count of the
/// restricted arrangement, and what the deletion-restriction identity
/// needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionSpec {
    base: Arrangement,
    pivot: usize,
}

impl RestrictionSpec {
    pub fn base(&self) -> &Arrangement {
        &self.base
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }
}

/// Convenience wrapper over [`Arrangement::from_rows_with_warnings`] that
/// discards the duplicate warnings.
pub fn make_arrangement(
    dim: usize,
    rows: Vec<(Vec<i64>, i64)>,
) -> Result<Arrangement, ArrangementError> {
    Arrangement::from_rows_with_warnings(dim, rows).map(|(arr, _)| arr)
}

/// Validate a restriction pivot, capturing the pair for the counting
/// module.
pub fn restriction_spec(
    arr: &Arrangement,
    idx: usize,
) -> Result<RestrictionSpec, ArrangementError> {
    let h = arr.hyperplane(idx)?;
    if !h.has_unit_coefficient() {
        return Err(ArrangementError::NoUnitCoefficient { index: idx });
    }
    Ok(RestrictionSpec { base: arr.clone(), pivot: idx })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_instance() {
        let arr = make_arrangement(1, vec![(vec![1], 0), (vec![1], 1)]).unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr.dim(), 1);
    }

    #[test]
    fn sign_normalization_collapses_negation() {
        let arr = make_arrangement(2, vec![(vec![1, -1], 0), (vec![-1, 1], 0)]).unwrap();
        assert_eq!(arr.len(), 1);
        assert_eq!(arr.hyperplanes()[0].coeffs(), &[1, -1]);
    }

    #[test]
    fn offset_negates_with_sign_flip() {
        let h = Hyperplane::new(vec![0, -2], 3).unwrap();
        assert_eq!(h.coeffs(), &[0, 2]);
        assert_eq!(h.offset(), -3);
    }

    #[test]
    fn no_gcd_reduction() {
        let h = Hyperplane::new(vec![2, 0], 4).unwrap();
        assert_eq!(h.coeffs(), &[2, 0]);
        assert_eq!(h.offset(), 4);
    }

    #[test]
    fn duplicate_rows_warn_not_error() {
        let (arr, dropped) = Arrangement::from_rows_with_warnings(
            2,
            vec![(vec![1, 0], 0), (vec![-1, 0], 0), (vec![0, 1], 1)],
        )
        .unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(dropped, vec![1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            make_arrangement(2, vec![(vec![0, 0], 1)]),
            Err(ArrangementError::ZeroHyperplane { row: 0 })
        );
        assert_eq!(
            make_arrangement(2, vec![(vec![1], 0)]),
            Err(ArrangementError::DimensionMismatch { row: 0, expected: 2, found: 1 })
        );
        assert_eq!(make_arrangement(0, vec![]), Err(ArrangementError::ZeroDimension));
    }

    fn b2() -> Arrangement {
        // x1=0, x1=1, x2=0, x2=1, x1-x2=0, x1-x2=1, x1+x2=0, x1+x2=1
        make_arrangement(
            2,
            vec![
                (vec![1, 0], 0),
                (vec![1, 0], 1),
                (vec![0, 1], 0),
                (vec![0, 1], 1),
                (vec![1, -1], 0),
                (vec![1, -1], 1),
                (vec![1, 1], 0),
                (vec![1, 1], 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn shi_b2_has_eight_hyperplanes() {
        assert_eq!(b2().len(), 8);
    }

    #[test]
    fn delete_drops_exactly_one() {
        let arr = b2();
        let del = arr.delete(0).unwrap();
        assert_eq!(del.len(), 7);
        assert!(del.position_of(&Hyperplane::new(vec![1, 0], 0).unwrap()).is_none());
        assert_eq!(
            del.delete(99),
            Err(ArrangementError::IndexOutOfRange { index: 99, len: 7 })
        );
    }

    #[test]
    fn delete_then_reinsert_restores_the_set() {
        let arr = b2();
        let removed = arr.hyperplanes()[3].clone();
        let del = arr.delete(3).unwrap();
        let mut rows: Vec<(Vec<i64>, i64)> =
            del.hyperplanes().iter().map(|h| (h.coeffs().to_vec(), h.offset())).collect();
        rows.push((removed.coeffs().to_vec(), removed.offset()));
        let rebuilt = make_arrangement(2, rows).unwrap();
        let mut a: Vec<_> = arr.hyperplanes().to_vec();
        let mut b: Vec<_> = rebuilt.hyperplanes().to_vec();
        a.sort_by(|x, y| (x.coeffs(), x.offset()).cmp(&(y.coeffs(), y.offset())));
        b.sort_by(|x, y| (x.coeffs(), x.offset()).cmp(&(y.coeffs(), y.offset())));
        assert_eq!(a, b);
    }

    #[test]
    fn restriction_spec_requires_unit_coefficient() {
        let arr = b2();
        assert!(restriction_spec(&arr, 7).is_ok());
        let doubled = make_arrangement(1, vec![(vec![2], 0)]).unwrap();
        assert_eq!(
            restriction_spec(&doubled, 0),
            Err(ArrangementError::NoUnitCoefficient { index: 0 })
        );
    }

    #[test]
    fn every_shi_row_admits_restriction() {
        let arr = b2();
        for idx in 0..arr.len() {
            assert!(restriction_spec(&arr, idx).is_ok());
        }
    }

    #[test]
    fn centralize_merges_parallel_rows() {
        let central = b2().centralized();
        assert_eq!(central.len(), 4);
        assert!(central.hyperplanes().iter().all(|h| h.offset() == 0));
    }

    #[test]
    fn text_round_trip() {
        let arr = b2();
        let text = arr.to_text();
        let back = Arrangement::parse_text(&text).unwrap();
        assert_eq!(back, arr);
    }

    #[test]
    fn text_parse_with_comments() {
        let input = "# a Shi-like pair\n2 2\n1 0 0\n1 0 1  # parallel copy\n";
        let arr = Arrangement::parse_text(input).unwrap();
        assert_eq!(arr.len(), 2);
        assert!(Arrangement::parse_text("2 3\n1 0 0\n").is_err());
        assert!(Arrangement::parse_text("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let arr = b2();
        let json = serde_json::to_string(&arr).unwrap();
        let back: Arrangement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, arr);
        assert!(json.starts_with(r#"{"dim":2,"hyperplanes":[{"coeffs":[1,0],"offset":0}"#));
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(
            coeffs in prop::collection::vec(-6i64..=6, 1..5),
            offset in -6i64..=6,
        ) {
            prop_assume!(coeffs.iter().any(|&c| c != 0));
            let once = Hyperplane::new(coeffs, offset).unwrap();
            let twice = Hyperplane::new(once.coeffs().to_vec(), once.offset()).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn negation_is_identified(
            coeffs in prop::collection::vec(-6i64..=6, 1..5),
            offset in -6i64..=6,
        ) {
            prop_assume!(coeffs.iter().any(|&c| c != 0));
            let pos = Hyperplane::new(coeffs.clone(), offset).unwrap();
            let neg = Hyperplane::new(coeffs.iter().map(|c| -c).collect(), -offset).unwrap();
            prop_assert_eq!(pos, neg);
        }
    }
}
