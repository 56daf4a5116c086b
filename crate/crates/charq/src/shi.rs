//! The Shi arrangement of type B and its closed-form counts.
//!
//! For ambient dimension `m`, the family consists of the hyperplanes
//! `x_i = 0`, `x_i = 1` for `i` in `[m]` and `x_i - x_j = 0`,
//! `x_i - x_j = 1`, `x_i + x_j = 0`, `x_i + x_j = 1` for `1 <= i < j <= m`
//! — `2m + 2m(m-1)` hyperplanes in all.
//!
//! Writing `T = q - 2m`, the complement count is `T^m` for all large `q`,
//! and the restricted count onto each of the six hyperplane classes has a
//! closed form per parity of `q` (degree `m-1`, monic):
//!
//! * `x_i = 0`:      `(T+1)^(m-i) (T+2)^(i-1)`, both parities;
//! * `x_i = 1`:      `T^(i-1) (T+1)^(m-i)`, both parities;
//! * `x_i - x_j = 0`: odd `(T+1)^(j-i-1)(T+2)^(m-j)((T+2)^i - (T+1)^(i-1))`,
//!   even `(T+1)^(j-i-1)(T+2)^(i-1)((T+2)^(m-j+1) - (T+1)^(m-j))`;
//! * `x_i - x_j = 1`: `T^(m+i-j) (T+1)^(j-i-1)`, both parities;
//! * `x_i + x_j = 0`: odd `T^(m-j)((T+1)^(j-i)(T+2)^(i-1) - (T+1)^(j-2))`,
//!   even `T^(m-j+1)(T+1)^(j-i-1)(T+2)^(i-1)`;
//! * `x_i + x_j = 1`: odd `T^(i-1)(T+1)^(j-i)(T+2)^(m-j)`,
//!   even `T^(i-1)(T+1)^(j-i-1)((T+2)^(m-j+1) - (T+1)^(m-j))`.
//!
//! The odd `x_i + x_j = 0` form is stated here in its expanded shape,
//! which is a polynomial for every `i >= 1`; the raw product form would
//! carry a negative exponent at `i = 1`.
//!
//! Deleting a hyperplane adds its restricted count to the base count, so
//! deletion counts follow from the same table, and exact polynomial
//! equality of the odd and even forms decides whether a deletion's
//! counting function is a single polynomial.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::polyalg::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiError {
    /// Dimension below 2 (pass `allow_m1` to work with the degenerate
    /// one-dimensional family).
    BadDimension { m: usize },
    /// Indices outside `1 <= i <= m` (or `i < j <= m` for pair kinds).
    InvalidIndices { kind: ShiKind, i: usize, j: Option<usize>, m: usize },
    /// The two hyperplanes of a pair operation are not parallel.
    NotParallel,
}

impl fmt::Display for ShiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiError::BadDimension { m } => write!(f, "dimension m = {m} is below 2"),
            ShiError::InvalidIndices { kind, i, j, m } => match j {
                Some(j) => write!(f, "invalid indices (i, j) = ({i}, {j}) for {kind:?} at m = {m}"),
                None => write!(f, "invalid index i = {i} for {kind:?} at m = {m}"),
            },
            ShiError::NotParallel => write!(f, "hyperplanes are not a parallel pair"),
        }
    }
}

impl std::error::Error for ShiError {}

/// The six hyperplane classes of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShiKind {
    /// `x_i = 0`
    Xi0,
    /// `x_i = 1`
    Xi1,
    /// `x_i - x_j = 0`
    DiffEq0,
    /// `x_i - x_j = 1`
    DiffEq1,
    /// `x_i + x_j = 0`
    SumEq0,
    /// `x_i + x_j = 1`
    SumEq1,
}

impl ShiKind {
    pub fn is_pair(self) -> bool {
        !matches!(self, ShiKind::Xi0 | ShiKind::Xi1)
    }

    /// The class with the same coefficients and the other offset.
    pub fn parallel_partner(self) -> ShiKind {
        match self {
            ShiKind::Xi0 => ShiKind::Xi1,
            ShiKind::Xi1 => ShiKind::Xi0,
            ShiKind::DiffEq0 => ShiKind::DiffEq1,
            ShiKind::DiffEq1 => ShiKind::DiffEq0,
            ShiKind::SumEq0 => ShiKind::SumEq1,
            ShiKind::SumEq1 => ShiKind::SumEq0,
        }
    }

    pub fn offset(self) -> i64 {
        match self {
            ShiKind::Xi0 | ShiKind::DiffEq0 | ShiKind::SumEq0 => 0,
            ShiKind::Xi1 | ShiKind::DiffEq1 | ShiKind::SumEq1 => 1,
        }
    }
}

/// One hyperplane of the family, tagged with its class and indices
/// (1-based, `i < j` for pair kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiHyperplane {
    pub kind: ShiKind,
    pub i: usize,
    pub j: Option<usize>,
}

impl ShiHyperplane {
    pub fn singleton(kind: ShiKind, i: usize) -> Self {
        assert!(!kind.is_pair(), "singleton constructor used with a pair kind");
        ShiHyperplane { kind, i, j: None }
    }

    pub fn pair(kind: ShiKind, i: usize, j: usize) -> Self {
        assert!(kind.is_pair(), "pair constructor used with a singleton kind");
        ShiHyperplane { kind, i, j: Some(j) }
    }

    pub fn validate(&self, m: usize) -> Result<(), ShiError> {
        let bad = || ShiError::InvalidIndices { kind: self.kind, i: self.i, j: self.j, m };
        match (self.kind.is_pair(), self.j) {
            (false, None) => {
                if self.i < 1 || self.i > m {
                    return Err(bad());
                }
            }
            (true, Some(j)) => {
                if self.i < 1 || self.i >= j || j > m {
                    return Err(bad());
                }
            }
            _ => return Err(bad()),
        }
        Ok(())
    }

    /// Coefficient row and offset in ambient dimension `m`.
    pub fn row(&self, m: usize) -> Result<(Vec<i64>, i64), ShiError> {
        self.validate(m)?;
        let mut coeffs = vec![0i64; m];
        coeffs[self.i - 1] = 1;
        if let Some(j) = self.j {
            coeffs[j - 1] = match self.kind {
                ShiKind::DiffEq0 | ShiKind::DiffEq1 => -1,
                ShiKind::SumEq0 | ShiKind::SumEq1 => 1,
                _ => unreachable!(),
            };
        }
        Ok((coeffs, self.kind.offset()))
    }

    /// The hyperplane with the same coefficients and the other offset.
    pub fn parallel_partner(&self) -> ShiHyperplane {
        ShiHyperplane { kind: self.kind.parallel_partner(), ..*self }
    }

    /// Display label in the `x<i>[+-x<j>]=0|1` mini-grammar.
    pub fn label(&self) -> String {
        let rhs = self.kind.offset();
        match (self.kind, self.j) {
            (ShiKind::Xi0 | ShiKind::Xi1, None) => format!("x{}={rhs}", self.i),
            (ShiKind::DiffEq0 | ShiKind::DiffEq1, Some(j)) => {
                format!("x{}-x{}={rhs}", self.i, j)
            }
            (ShiKind::SumEq0 | ShiKind::SumEq1, Some(j)) => {
                format!("x{}+x{}={rhs}", self.i, j)
            }
            _ => unreachable!("validated shape"),
        }
    }

    /// Every hyperplane of the family at dimension `m`, in construction
    /// order.
    pub fn all(m: usize) -> Vec<ShiHyperplane> {
        let mut out = Vec::with_capacity(2 * m + 2 * m * (m.saturating_sub(1)));
        for i in 1..=m {
            out.push(ShiHyperplane::singleton(ShiKind::Xi0, i));
            out.push(ShiHyperplane::singleton(ShiKind::Xi1, i));
        }
        for i in 1..=m {
            for j in (i + 1)..=m {
                out.push(ShiHyperplane::pair(ShiKind::DiffEq0, i, j));
                out.push(ShiHyperplane::pair(ShiKind::DiffEq1, i, j));
                out.push(ShiHyperplane::pair(ShiKind::SumEq0, i, j));
                out.push(ShiHyperplane::pair(ShiKind::SumEq1, i, j));
            }
        }
        out
    }

    /// All unordered parallel pairs of the family at dimension `m`.
    pub fn parallel_pairs(m: usize) -> Vec<(ShiHyperplane, ShiHyperplane)> {
        ShiHyperplane::all(m)
            .into_iter()
            .filter(|h| h.kind.offset() == 0)
            .map(|h| (h, h.parallel_partner()))
            .collect()
    }

    /// The hyperplane's position in [`build_shi_b`]'s construction order.
    pub fn index_in(&self, arr: &Arrangement) -> Result<usize, ShiError> {
        let (coeffs, offset) = self.row(arr.dim())?;
        let h = crate::arrangement::Hyperplane::new(coeffs, offset)
            .expect("family rows are nonzero");
        arr.position_of(&h).ok_or(ShiError::InvalidIndices {
            kind: self.kind,
            i: self.i,
            j: self.j,
            m: arr.dim(),
        })
    }
}

impl fmt::Display for ShiHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Build the family at dimension `m >= 2` as a labeled [`Arrangement`].
pub fn build_shi_b(m: usize) -> Result<Arrangement, ShiError> {
    build_shi_b_allowing_degenerate(m, false)
}

/// Like [`build_shi_b`], optionally admitting the degenerate `m = 1` case
/// in which the pair families are empty.
pub fn build_shi_b_allowing_degenerate(m: usize, allow_m1: bool) -> Result<Arrangement, ShiError> {
    let min = if allow_m1 { 1 } else { 2 };
    if m < min {
        return Err(ShiError::BadDimension { m });
    }
    let rows = ShiHyperplane::all(m)
        .into_iter()
        .map(|h| {
            let (coeffs, offset) = h.row(m).expect("generated hyperplanes are valid");
            (coeffs, offset, Some(h.label()))
        })
        .collect();
    Ok(Arrangement::from_labeled_rows(m, rows).expect("family rows are valid and distinct"))
}

/// A per-parity pair of closed-form counting polynomials in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCount {
    pub odd: IntPolynomial,
    pub even: IntPolynomial,
}

impl ClosedFormCount {
    fn parity_independent(poly: IntPolynomial) -> Self {
        ClosedFormCount { odd: poly.clone(), even: poly }
    }

    /// Evaluate at `q`, picking the constituent for its parity.
    pub fn eval(&self, q: u64) -> BigInt {
        if q % 2 == 1 {
            self.odd.eval_u64(q)
        } else {
            self.even.eval_u64(q)
        }
    }

    /// True iff the two parities agree as polynomials.
    pub fn is_polynomial(&self) -> bool {
        self.odd == self.even
    }

    /// The period-2 quasi-polynomial with these constituents (class 1 is
    /// odd `q`, class 2 even).
    pub fn to_quasipoly(&self) -> crate::polyalg::QuasiPolynomial {
        crate::polyalg::QuasiPolynomial::new(vec![self.odd.clone(), self.even.clone()])
    }
}

fn shifted(m: usize, add: i64) -> IntPolynomial {
    // q - 2m + add
    IntPolynomial::t_plus(add - 2 * m as i64)
}

/// `(q - 2m)^m`, the complement count of the full family for large `q`,
/// independent of parity.
pub fn base_closed_form(m: usize) -> Result<ClosedFormCount, ShiError> {
    base_closed_form_allowing_degenerate(m, false)
}

pub fn base_closed_form_allowing_degenerate(
    m: usize,
    allow_m1: bool,
) -> Result<ClosedFormCount, ShiError> {
    let min = if allow_m1 { 1 } else { 2 };
    if m < min {
        return Err(ShiError::BadDimension { m });
    }
    Ok(ClosedFormCount::parity_independent(shifted(m, 0).pow(m)))
}

/// The restricted count onto `h`, per parity, valid for all large `q`
/// (for this family, all `q >= 2m + 2`; see the module docs for the
/// formula table).
pub fn restriction_closed_form(m: usize, h: &ShiHyperplane) -> Result<ClosedFormCount, ShiError> {
    if m < 2 {
        return Err(ShiError::BadDimension { m });
    }
    h.validate(m)?;
    let t = shifted(m, 0);
    let t1 = shifted(m, 1);
    let t2 = shifted(m, 2);
    let i = h.i;
    let form = match (h.kind, h.j) {
        (ShiKind::Xi0, None) => {
            ClosedFormCount::parity_independent(&t1.pow(m - i) * &t2.pow(i - 1))
        }
        (ShiKind::Xi1, None) => {
            ClosedFormCount::parity_independent(&t.pow(i - 1) * &t1.pow(m - i))
        }
        (ShiKind::DiffEq0, Some(j)) => {
            let odd = &(&t1.pow(j - i - 1) * &t2.pow(m - j))
                * &(&t2.pow(i) - &t1.pow(i - 1));
            let even = &(&t1.pow(j - i - 1) * &t2.pow(i - 1))
                * &(&t2.pow(m - j + 1) - &t1.pow(m - j));
            ClosedFormCount { odd, even }
        }
        (ShiKind::DiffEq1, Some(j)) => {
            ClosedFormCount::parity_independent(&t.pow(m + i - j) * &t1.pow(j - i - 1))
        }
        (ShiKind::SumEq0, Some(j)) => {
            // Expanded odd form, polynomial for every i >= 1.
            let odd = &t.pow(m - j) * &(&(&t1.pow(j - i) * &t2.pow(i - 1)) - &t1.pow(j - 2));
            let even = &(&t.pow(m - j + 1) * &t1.pow(j - i - 1)) * &t2.pow(i - 1);
            ClosedFormCount { odd, even }
        }
        (ShiKind::SumEq1, Some(j)) => {
            let odd = &(&t.pow(i - 1) * &t1.pow(j - i)) * &t2.pow(m - j);
            let even = &(&t.pow(i - 1) * &t1.pow(j - i - 1))
                * &(&t2.pow(m - j + 1) - &t1.pow(m - j));
            ClosedFormCount { odd, even }
        }
        _ => unreachable!("validated shape"),
    };
    Ok(form)
}

/// The complement count of the family minus `h`: base plus restriction,
/// per parity.
pub fn deletion_closed_form(m: usize, h: &ShiHyperplane) -> Result<ClosedFormCount, ShiError> {
    let base = base_closed_form(m)?;
    let restriction = restriction_closed_form(m, h)?;
    Ok(ClosedFormCount {
        odd: &base.odd + &restriction.odd,
        even: &base.even + &restriction.even,
    })
}

/// Whether deleting `h` leaves a counting function that is a single
/// polynomial. True exactly for: `x_i = 0` and `x_i = 1` (any `i`),
/// `x_i - x_j = 0` with `i + j = m + 1`, `x_i - x_j = 1` (any `i < j`),
/// `x_1 + x_j = 0`, and `x_i + x_m = 1`.
pub fn is_deletion_polynomial(m: usize, h: &ShiHyperplane) -> Result<bool, ShiError> {
    if m < 2 {
        return Err(ShiError::BadDimension { m });
    }
    h.validate(m)?;
    Ok(match (h.kind, h.j) {
        (ShiKind::Xi0 | ShiKind::Xi1, None) => true,
        (ShiKind::DiffEq0, Some(j)) => h.i + j == m + 1,
        (ShiKind::DiffEq1, Some(_)) => true,
        (ShiKind::SumEq0, Some(_)) => h.i == 1,
        (ShiKind::SumEq1, Some(j)) => j == m,
        _ => unreachable!("validated shape"),
    })
}

fn check_parallel(h: &ShiHyperplane, h2: &ShiHyperplane) -> Result<(ShiHyperplane, ShiHyperplane), ShiError> {
    // Normalize to (offset 0, offset 1).
    let (zero, one) = if h.kind.offset() == 0 { (*h, *h2) } else { (*h2, *h) };
    if zero.kind.offset() != 0
        || one.kind.offset() != 1
        || one.kind != zero.kind.parallel_partner()
        || zero.i != one.i
        || zero.j != one.j
    {
        return Err(ShiError::NotParallel);
    }
    Ok((zero, one))
}

/// Whether deleting the parallel pair `{h, h2}` leaves a counting
/// function that is a single polynomial. True exactly for the pairs
/// `{x_i = 0, x_i = 1}` and the difference/sum pairs with `i + j = m + 1`.
pub fn is_pair_deletion_polynomial(
    m: usize,
    h: &ShiHyperplane,
    h2: &ShiHyperplane,
) -> Result<bool, ShiError> {
    if m < 2 {
        return Err(ShiError::BadDimension { m });
    }
    h.validate(m)?;
    h2.validate(m)?;
    let (zero, _) = check_parallel(h, h2)?;
    Ok(match (zero.kind, zero.j) {
        (ShiKind::Xi0, None) => true,
        (ShiKind::DiffEq0 | ShiKind::SumEq0, Some(j)) => zero.i + j == m + 1,
        _ => unreachable!("normalized to offset-zero kinds"),
    })
}

/// Exact complement count of the family minus a parallel pair at `q`:
/// base plus both restrictions, evaluated per parity.
pub fn pair_deletion_count(
    m: usize,
    h: &ShiHyperplane,
    h2: &ShiHyperplane,
    q: u64,
) -> Result<BigInt, ShiError> {
    if m < 2 {
        return Err(ShiError::BadDimension { m });
    }
    h.validate(m)?;
    h2.validate(m)?;
    check_parallel(h, h2)?;
    let base = base_closed_form(m)?;
    let r1 = restriction_closed_form(m, h)?;
    let r2 = restriction_closed_form(m, h2)?;
    Ok(base.eval(q) + r1.eval(q) + r2.eval(q))
}

/// Errors from the hyperplane expression mini-grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    /// Text does not match `x<i>(=|[+-]x<j>=)(0|1)`.
    Parse(String),
    /// An index lies outside `1..=m`, or `i = j`.
    IndexOutOfRange { index: usize, m: usize },
    /// `x<j>-x<i>=1` with `j > i`: the difference family is oriented and
    /// only `i < j` rows exist.
    Orientation { i: usize, j: usize },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Parse(text) => {
                write!(f, "`{text}` does not match x<i>(=|[+-]x<j>=)(0|1)")
            }
            ExprError::IndexOutOfRange { index, m } => {
                write!(f, "index {index} out of range for dimension {m}")
            }
            ExprError::Orientation { i, j } => write!(
                f,
                "x{i}-x{j}=1 with {i} > {j} names no hyperplane of the family; \
                 the difference-offset rows are oriented with i < j"
            ),
        }
    }
}

impl std::error::Error for ExprError {}

/// Parse a hyperplane expression `x<i>=0`, `x<i>=1`, `x<i>-x<j>=0|1` or
/// `x<i>+x<j>=0|1` against dimension `m`. Pair indices are reordered to
/// `i < j` where the family is symmetric (sums, and differences with
/// offset 0); a difference with offset 1 written against the orientation
/// is rejected.
pub fn parse_hyperplane_expr(text: &str, m: usize) -> Result<ShiHyperplane, ExprError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || ExprError::Parse(text.to_string());

    let (lhs, rhs) = s.split_once('=').ok_or_else(err)?;
    let offset = match rhs {
        "0" => 0u8,
        "1" => 1,
        _ => return Err(err()),
    };

    fn parse_var(tok: &str) -> Option<usize> {
        let num = tok.strip_prefix('x')?;
        if num.is_empty() || !num.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        num.parse().ok()
    }

    // Split a pair on +/- after the first variable; a lone variable is a
    // singleton row.
    let body = lhs.strip_prefix('x').ok_or_else(err)?;
    let split = body.find(['+', '-']).map(|p| p + 1);
    let (first, sign, second) = match split {
        None => (parse_var(lhs).ok_or_else(err)?, None, None),
        Some(pos) => {
            let sign = lhs.as_bytes()[pos] as char;
            let a = parse_var(&lhs[..pos]).ok_or_else(err)?;
            let b = parse_var(&lhs[pos + 1..]).ok_or_else(err)?;
            (a, Some(sign), Some(b))
        }
    };

    let check = |idx: usize| {
        if idx < 1 || idx > m {
            Err(ExprError::IndexOutOfRange { index: idx, m })
        } else {
            Ok(())
        }
    };
    check(first)?;

    match (sign, second) {
        (None, None) => Ok(ShiHyperplane::singleton(
            if offset == 0 { ShiKind::Xi0 } else { ShiKind::Xi1 },
            first,
        )),
        (Some(sign), Some(second)) => {
            check(second)?;
            if first == second {
                return Err(ExprError::IndexOutOfRange { index: first, m });
            }
            let (i, j) = (first.min(second), first.max(second));
            let kind = match (sign, offset) {
                ('+', 0) => ShiKind::SumEq0,
                ('+', 1) => ShiKind::SumEq1,
                ('-', 0) => ShiKind::DiffEq0,
                ('-', 1) => {
                    if first > second {
                        return Err(ExprError::Orientation { i: first, j: second });
                    }
                    ShiKind::DiffEq1
                }
                _ => unreachable!(),
            };
            Ok(ShiHyperplane::pair(kind, i, j))
        }
        _ => Err(err()),
    }
}

/// For each hyperplane of the family, the smallest `q0` such that the
/// closed restriction form matches the counting kernel for every
/// `q` in `[q0, horizon]`. Validity beyond the horizon is measured, not
/// proven.
pub fn audit_restriction_forms(m: usize, horizon: u64) -> Result<Vec<(ShiHyperplane, u64)>, ShiError> {
    let arr = build_shi_b(m)?;
    let mut out = Vec::new();
    for h in ShiHyperplane::all(m) {
        let form = restriction_closed_form(m, &h)?;
        let pivot = h.index_in(&arr)?;
        let mut min_valid = 2;
        for q in 2..=horizon {
            let counted = crate::counting::count_restricted(&arr, pivot, q)
                .expect("valid pivot")
                .value;
            if BigInt::from(counted) != form.eval(q) {
                min_valid = q + 1;
            }
        }
        out.push((h, min_valid));
    }
    Ok(out)
}
