//! Exact univariate polynomial and quasi-polynomial algebra.
//!
//! Everything here is integer-exact: polynomials carry [`BigInt`]
//! coefficients, interpolation runs over [`BigRational`] and *asserts*
//! integrality of the result instead of rounding. A quasi-polynomial of
//! period `rho` is a list of `rho` constituent polynomials indexed by the
//! residue class of the argument, class `r` meaning `q = r (mod rho)` for
//! `r` in `1..=rho` with class `rho` absorbing `q = 0 (mod rho)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Error as _, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from interpolation, quasi-polynomial construction and the
/// two-base power-sum helpers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The unique interpolating polynomial has a non-integer coefficient.
    /// Usually means the degree bound is wrong or the samples were taken
    /// inside the pre-asymptotic regime of the counting function.
    NonIntegralCoefficients,
    /// Fewer than one sample, or duplicate sample points.
    BadSamples(String),
    /// An extra verification sample disagreed with the interpolated
    /// constituent at this argument.
    VerificationFailed(u64),
    /// `a > b` passed to a summation helper.
    InvalidRange { a: u32, b: u32 },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NonIntegralCoefficients => {
                write!(f, "interpolated polynomial has non-integer coefficients")
            }
            PolyError::BadSamples(msg) => write!(f, "bad sample set: {msg}"),
            PolyError::VerificationFailed(q) => {
                write!(f, "verification sample at q = {q} does not match the fit")
            }
            PolyError::InvalidRange { a, b } => {
                write!(f, "invalid summation range: a = {a} > b = {b}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// A univariate polynomial with integer coefficients, stored in ascending
/// degree order with no trailing zeros (the zero polynomial is the empty
/// list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::from_coeffs([c.into()])
    }

    /// The monomial `t`.
    pub fn identity() -> Self {
        IntPolynomial::from_coeffs([BigInt::zero(), BigInt::one()])
    }

    /// The linear polynomial `t + c`.
    pub fn t_plus(c: impl Into<BigInt>) -> Self {
        IntPolynomial::from_coeffs([c.into(), BigInt::one()])
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Ascending coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, exp: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// JSON form {"coeffs":[c0,c1,...]}. Coefficients are emitted as plain JSON
// integers, so they must fit i64; everything produced in this crate's
// working range does by a wide margin.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Result<Vec<i64>, _> = self
            .coeffs
            .iter()
            .map(|c| {
                i64::try_from(c).map_err(|_| S::Error::custom("coefficient out of i64 range"))
            })
            .collect();
        let mut s = serializer.serialize_struct("IntPolynomial", 1)?;
        s.serialize_field("coeffs", &coeffs?)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<i64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Ok(IntPolynomial::from_coeffs(repr.coeffs))
    }
}

/// Sampling policy for fitting a quasi-polynomial to a counting function:
/// each residue class is sampled at `degree_bound + 1` points starting at
/// the first admissible argument `>= q_start`, then re-checked on
/// `verify_extra` further points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleWindow {
    pub q_start: u64,
    pub degree_bound: usize,
    pub verify_extra: usize,
}

impl SampleWindow {
    /// Window starting at `q_start` with the default two verification
    /// samples per residue class.
    pub fn new(q_start: u64, degree_bound: usize) -> Self {
        assert!(q_start >= 1, "q_start must be positive");
        SampleWindow { q_start, degree_bound, verify_extra: 2 }
    }

    pub fn with_verify_extra(mut self, verify_extra: usize) -> Self {
        self.verify_extra = verify_extra;
        self
    }
}

/// A quasi-polynomial: a period `rho` together with `rho` integer
/// constituents, one per residue class of the argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolynomial {
    period: usize,
    constituents: Vec<IntPolynomial>,
}

impl QuasiPolynomial {
    pub fn new(constituents: Vec<IntPolynomial>) -> Self {
        assert!(!constituents.is_empty(), "a quasi-polynomial needs at least one constituent");
        QuasiPolynomial { period: constituents.len(), constituents }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Constituents in class order `1..=period`.
    pub fn constituents(&self) -> &[IntPolynomial] {
        &self.constituents
    }

    /// The constituent governing class `r` (1-based, `r <= period`).
    pub fn constituent(&self, r: usize) -> &IntPolynomial {
        assert!((1..=self.period).contains(&r), "class index out of range");
        &self.constituents[r - 1]
    }

    /// The constituent that applies to argument `q >= 1`.
    pub fn constituent_for(&self, q: u64) -> &IntPolynomial {
        assert!(q >= 1);
        let idx = ((q - 1) % self.period as u64) as usize;
        &self.constituents[idx]
    }

    pub fn eval(&self, q: u64) -> BigInt {
        self.constituent_for(q).eval_u64(q)
    }

    /// Smallest divisor `s` of the period such that constituents agree
    /// whenever their class indices are congruent mod `s`. Two periods of
    /// the same function admit their gcd as a period, so this is the
    /// minimum period of the function the constituents describe.
    pub fn minimum_period(&self) -> usize {
        for s in 1..=self.period {
            if !self.period.is_multiple_of(s) {
                continue;
            }
            let collapses = (1..=self.period)
                .all(|a| self.constituents[a - 1] == self.constituents[(a - 1) % s]);
            if collapses {
                return s;
            }
        }
        unreachable!("the full period always qualifies")
    }

    /// True iff the constituents depend on the class index only through
    /// its gcd with the period.
    pub fn has_gcd_property(&self) -> bool {
        let rho = self.period;
        for a in 1..=rho {
            for b in (a + 1)..=rho {
                if a.gcd(&rho) == b.gcd(&rho) && self.constituents[a - 1] != self.constituents[b - 1]
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_monic(&self) -> bool {
        self.constituents.iter().all(IntPolynomial::is_monic)
    }

    /// True iff all constituents are the same polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.constituents.windows(2).all(|w| w[0] == w[1])
    }
}

/// Exact Lagrange interpolation through `(q, value)` samples.
///
/// Returns the unique polynomial of degree `< samples.len()` through the
/// samples, provided all of its coefficients are integers; rational
/// coefficients are reported as [`PolyError::NonIntegralCoefficients`]
/// rather than rounded.
pub fn interpolate_constituent(samples: &[(u64, BigInt)]) -> Result<IntPolynomial, PolyError> {
    if samples.is_empty() {
        return Err(PolyError::BadSamples("no samples".into()));
    }
    for (i, (qa, _)) in samples.iter().enumerate() {
        for (qb, _) in &samples[i + 1..] {
            if qa == qb {
                return Err(PolyError::BadSamples(format!("duplicate sample point q = {qa}")));
            }
        }
    }

    let n = samples.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (qi, yi)) in samples.iter().enumerate() {
        // basis_i(t) = prod_{j != i} (t - q_j) / (q_i - q_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (qj, _)) in samples.iter().enumerate() {
            if j == i {
                continue;
            }
            let root = BigRational::from(BigInt::from(*qj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &root * c;
            }
            basis = next;
            denom *= BigRational::from(BigInt::from(*qi)) - root;
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }

    let mut coeffs = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return Err(PolyError::NonIntegralCoefficients);
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Fit a quasi-polynomial of the given trial period to a counting
/// function. Each residue class is interpolated independently from
/// `window.degree_bound + 1` samples and re-verified on
/// `window.verify_extra` later samples; any disagreement aborts with
/// [`PolyError::VerificationFailed`].
pub fn build_quasipoly<F>(
    mut counter: F,
    period: usize,
    window: SampleWindow,
) -> Result<QuasiPolynomial, PolyError>
where
    F: FnMut(u64) -> BigInt,
{
    assert!(period >= 1, "period must be positive");
    let rho = period as u64;
    let d = window.degree_bound as u64;
    let mut constituents = Vec::with_capacity(period);
    for r in 1..=rho {
        // First sample point >= q_start in class r (class rho == class 0).
        let mut q0 = window.q_start;
        while q0 % rho != r % rho {
            q0 += 1;
        }
        let samples: Vec<(u64, BigInt)> =
            (0..=d).map(|k| (q0 + k * rho, counter(q0 + k * rho))).collect();
        let poly = interpolate_constituent(&samples)?;
        for k in 1..=window.verify_extra as u64 {
            let q = q0 + (d + k) * rho;
            if poly.eval_u64(q) != counter(q) {
                return Err(PolyError::VerificationFailed(q));
            }
        }
        constituents.push(poly);
    }
    Ok(QuasiPolynomial::new(constituents))
}

/// Order of summation in [`mixed_power_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummationOrder {
    /// `sum_{k=a}^{b} X^(b-k) (X+1)^(k-a)` — the `(X+1)` exponent ascends.
    Ascending,
    /// `sum_{k=a}^{b} (X+1)^(b-k) X^(k-a)` — the `(X+1)` exponent descends.
    Descending,
}

/// The two-base power sum `sum_{k=a}^{b} X^(b-k)(X+1)^(k-a)` (or the same
/// sum with the bases swapped), as an exact polynomial in `X`. Both orders
/// telescope to `(X+1)^(b-a+1) - X^(b-a+1)`, which
/// [`mixed_power_sum_closed`] computes directly.
pub fn mixed_power_sum(a: u32, b: u32, order: SummationOrder) -> Result<IntPolynomial, PolyError> {
    if a > b {
        return Err(PolyError::InvalidRange { a, b });
    }
    let x = IntPolynomial::identity();
    let x1 = IntPolynomial::t_plus(1);
    let mut acc = IntPolynomial::zero();
    for k in a..=b {
        let term = match order {
            SummationOrder::Ascending => &x.pow((b - k) as usize) * &x1.pow((k - a) as usize),
            SummationOrder::Descending => &x1.pow((b - k) as usize) * &x.pow((k - a) as usize),
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Closed form `(X+1)^(b-a+1) - X^(b-a+1)` of [`mixed_power_sum`].
pub fn mixed_power_sum_closed(a: u32, b: u32) -> Result<IntPolynomial, PolyError> {
    if a > b {
        return Err(PolyError::InvalidRange { a, b });
    }
    let e = (b - a + 1) as usize;
    Ok(&IntPolynomial::t_plus(1).pow(e) - &IntPolynomial::identity().pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn normalization_trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let p = poly(&[1, 1]); // 1 + t
        let q = poly(&[-1, 1]); // -1 + t
        assert_eq!(&p * &q, poly(&[-1, 0, 1]));
        assert_eq!(&p + &q, poly(&[0, 2]));
        assert_eq!(&p - &p, IntPolynomial::zero());
        assert_eq!(p.pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(poly(&[2, 0, 1]).eval(&BigInt::from(5)), BigInt::from(27));
    }

    #[test]
    fn interpolation_recovers_square_shift() {
        // (t-4)^2 through three odd samples.
        let samples: Vec<(u64, BigInt)> =
            [(9u64, 25), (11, 49), (13, 81)].map(|(q, v)| (q, BigInt::from(v))).into();
        assert_eq!(interpolate_constituent(&samples).unwrap(), poly(&[16, -8, 1]));
    }

    #[test]
    fn interpolation_identity_polynomial() {
        let samples: Vec<(u64, BigInt)> =
            [(5u64, 5), (6, 6)].map(|(q, v)| (q, BigInt::from(v))).into();
        assert_eq!(interpolate_constituent(&samples).unwrap(), IntPolynomial::identity());
    }

    #[test]
    fn interpolation_line_from_three_points() {
        let samples: Vec<(u64, BigInt)> =
            [(9u64, 6), (11, 8), (13, 10)].map(|(q, v)| (q, BigInt::from(v))).into();
        assert_eq!(interpolate_constituent(&samples).unwrap(), poly(&[-3, 1]));
    }

    #[test]
    fn interpolation_rejects_non_integral() {
        // Through (0,0) and (2,1): t/2.
        let samples = vec![(0u64, BigInt::zero()), (2, BigInt::one())];
        assert_eq!(
            interpolate_constituent(&samples),
            Err(PolyError::NonIntegralCoefficients)
        );
    }

    #[test]
    fn build_quasipoly_constant() {
        let qp = build_quasipoly(|_| BigInt::from(7), 1, SampleWindow::new(1, 0)).unwrap();
        assert_eq!(qp.constituents(), &[poly(&[7])]);
        assert_eq!(qp.eval(100), BigInt::from(7));
    }

    #[test]
    fn build_quasipoly_detects_wrong_degree() {
        // t^2 cannot be fit with degree bound 1.
        let err = build_quasipoly(
            |q| BigInt::from(q) * BigInt::from(q),
            1,
            SampleWindow::new(1, 1),
        )
        .unwrap_err();
        assert!(matches!(err, PolyError::VerificationFailed(_)));
    }

    #[test]
    fn class_indexing_follows_residue_convention() {
        let qp = QuasiPolynomial::new(vec![poly(&[1]), poly(&[2]), poly(&[3])]);
        // class 1: q = 1 mod 3; class 3 covers q = 0 mod 3.
        assert_eq!(qp.eval(7), BigInt::from(1));
        assert_eq!(qp.eval(8), BigInt::from(2));
        assert_eq!(qp.eval(9), BigInt::from(3));
        assert_eq!(qp.constituent(3), &poly(&[3]));
    }

    #[test]
    fn minimum_period_of_equal_constituents_is_one() {
        let f = poly(&[16, -8, 1]);
        let qp = QuasiPolynomial::new(vec![f.clone(), f]);
        assert_eq!(qp.minimum_period(), 1);
        assert!(qp.is_polynomial());
    }

    #[test]
    fn minimum_period_of_distinct_constituents() {
        let qp = QuasiPolynomial::new(vec![poly(&[0, -1, 1]), poly(&[1, 1, 1])]);
        assert_eq!(qp.minimum_period(), 2);
        assert!(!qp.is_polynomial());
    }

    #[test]
    fn minimum_period_collapse_from_six() {
        let f = poly(&[1, 1]);
        let qp = QuasiPolynomial::new(vec![f.clone(); 6]);
        assert_eq!(qp.minimum_period(), 1);
    }

    #[test]
    fn gcd_property_cases() {
        let f = poly(&[0, 1]);
        let g = poly(&[1, 1]);
        let h = poly(&[2, 1]);
        let f2 = poly(&[3, 1]);
        assert!(QuasiPolynomial::new(vec![f.clone(), f.clone()]).has_gcd_property());
        // Period 2 always has it: both classes are gcd-singletons.
        assert!(QuasiPolynomial::new(vec![f.clone(), g.clone()]).has_gcd_property());
        // Period 4: classes 1 and 3 share gcd 1, so they must agree.
        assert!(QuasiPolynomial::new(vec![f.clone(), g.clone(), f.clone(), h.clone()])
            .has_gcd_property());
        assert!(!QuasiPolynomial::new(vec![f, g, f2, h]).has_gcd_property());
    }

    #[test]
    fn monic_and_polynomial_flags() {
        let sq = poly(&[16, -8, 1]);
        let qp = QuasiPolynomial::new(vec![sq.clone(), sq]);
        assert!(qp.is_monic());
        assert!(qp.is_polynomial());

        let qp = QuasiPolynomial::new(vec![poly(&[-3, 1]), poly(&[-3, 1])]);
        assert!(qp.is_polynomial());

        let qp = QuasiPolynomial::new(vec![poly(&[0, -1, 1]), poly(&[1, 1, 1])]);
        assert!(!qp.is_polynomial());
        assert!(qp.is_monic());
        assert!(!QuasiPolynomial::new(vec![poly(&[1, 2])]).is_monic());
    }

    #[test]
    fn power_sum_small_cases() {
        // a = b = 0: single term 1; closed form (X+1) - X = 1.
        assert_eq!(
            mixed_power_sum(0, 0, SummationOrder::Ascending).unwrap(),
            IntPolynomial::one()
        );
        assert_eq!(mixed_power_sum_closed(0, 0).unwrap(), IntPolynomial::one());
        // a = 0, b = 1: X + (X+1) = 2X + 1 = (X+1)^2 - X^2.
        assert_eq!(mixed_power_sum(0, 1, SummationOrder::Ascending).unwrap(), poly(&[1, 2]));
        assert_eq!(mixed_power_sum_closed(0, 1).unwrap(), poly(&[1, 2]));
        // a = 2, b = 5: both sides equal (X+1)^4 - X^4.
        let rhs = mixed_power_sum_closed(2, 5).unwrap();
        assert_eq!(mixed_power_sum(2, 5, SummationOrder::Ascending).unwrap(), rhs);
        assert_eq!(mixed_power_sum(2, 5, SummationOrder::Descending).unwrap(), rhs);
        assert_eq!(mixed_power_sum(3, 1, SummationOrder::Ascending), Err(PolyError::InvalidRange { a: 3, b: 1 }));
    }

    #[test]
    fn power_sum_identity_up_to_ten() {
        for a in 0..=10 {
            for b in a..=10 {
                let rhs = mixed_power_sum_closed(a, b).unwrap();
                for order in [SummationOrder::Ascending, SummationOrder::Descending] {
                    assert_eq!(mixed_power_sum(a, b, order).unwrap(), rhs, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn display_formatting() {
        assert_eq!(poly(&[16, -8, 1]).to_string(), "t^2 - 8t + 16");
        assert_eq!(poly(&[0, 1]).to_string(), "t");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[-3, 0, 2]).to_string(), "2t^2 - 3");
    }

    #[test]
    fn json_round_trip() {
        let qp = QuasiPolynomial::new(vec![poly(&[16, -8, 1]), poly(&[0, 1])]);
        let json = serde_json::to_string(&qp).unwrap();
        assert_eq!(json, r#"{"period":2,"constituents":[{"coeffs":[16,-8,1]},{"coeffs":[0,1]}]}"#);
        let back: QuasiPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, qp);
    }
}
