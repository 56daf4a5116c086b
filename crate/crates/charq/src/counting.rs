//! Exact point counts over `(Z/qZ)^m`.
//!
//! Two kinds of count are supported, both exact:
//!
//! * the complement count — tuples lying on no hyperplane's q-reduction;
//! * the restricted count — tuples lying *on* one pivot hyperplane's
//!   q-reduction and off every other one.
//!
//! Each has a pruned backtracking kernel and a deliberately naive
//! full-enumeration oracle; the two must always agree, and tests hold them
//! to that. The kernels accumulate in `u128`: a run that could overflow
//! the accumulator would have to visit more than 2^128 tuples first, so
//! the bound is unreachable in any feasible invocation. Results are
//! returned as [`BigUint`] regardless.

use std::fmt;

use num_bigint::BigUint;

use crate::arrangement::{Arrangement, ArrangementError, Hyperplane, RestrictionSpec};

/// Candidate-tuple budget for the naive oracles.
pub const DEFAULT_NAIVE_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    IndexOutOfRange { index: usize, len: usize },
    /// The naive oracle would enumerate more than its candidate budget.
    BudgetExceeded { candidates: u128, budget: u128 },
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::IndexOutOfRange { index, len } => {
                write!(f, "pivot index {index} out of range (arrangement has {len})")
            }
            CountError::BudgetExceeded { candidates, budget } => {
                write!(f, "naive enumeration of {candidates} tuples exceeds budget {budget}")
            }
        }
    }
}

impl std::error::Error for CountError {}

impl From<ArrangementError> for CountError {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::IndexOutOfRange { index, len } => {
                CountError::IndexOutOfRange { index, len }
            }
            other => unreachable!("unexpected arrangement error in counting: {other}"),
        }
    }
}

/// Which kind of count a [`CountResult`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    Full,
    Restricted,
}

/// An exact count together with the modulus it was taken at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub q: u64,
    pub mode: CountMode,
}

/// A counting request: an arrangement, a modulus, and optionally a pivot
/// index selecting the restricted count.
#[derive(Debug, Clone)]
pub struct CountQuery {
    pub arrangement: Arrangement,
    pub q: u64,
    pub restriction: Option<usize>,
}

impl CountQuery {
    pub fn run(&self) -> Result<CountResult, CountError> {
        match self.restriction {
            None => Ok(count_complement(&self.arrangement, self.q)),
            Some(pivot) => count_restricted(&self.arrangement, pivot, self.q),
        }
    }
}

/// One hyperplane reduced mod q: `sum coeff * x_coord = rhs` over `Z_q`,
/// with zero coefficients dropped.
struct ReducedRow {
    terms: Vec<(usize, u64)>,
    rhs: u64,
    /// Restricted-mode pivot rows must hold; all other rows must fail.
    must_hold: bool,
}

impl ReducedRow {
    fn reduce(h: &Hyperplane, q: u64, must_hold: bool) -> ReducedRow {
        let modulus = q as i128;
        let terms = h
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(coord, &c)| {
                let r = (c as i128).rem_euclid(modulus) as u64;
                (r != 0).then_some((coord, r))
            })
            .collect();
        let rhs = (h.offset() as i128).rem_euclid(modulus) as u64;
        ReducedRow { terms, rhs, must_hold }
    }

    fn eval(&self, x: &[u64], q: u64) -> u64 {
        let mut acc: u64 = 0;
        for &(coord, coeff) in &self.terms {
            acc = ((acc as u128 + (coeff as u128 * x[coord] as u128) % q as u128)
                % q as u128) as u64;
        }
        acc
    }

    fn max_support(&self) -> Option<usize> {
        self.terms.last().map(|&(coord, _)| coord)
    }
}

/// Outcome of constant-row preprocessing.
enum Prepared {
    /// Some row makes the count identically zero at this modulus.
    Zero,
    /// Rows bucketed by the coordinate at which they become checkable.
    Buckets(Vec<Vec<ReducedRow>>),
}

fn prepare(arr: &Arrangement, q: u64, pivot: Option<usize>) -> Prepared {
    let m = arr.dim();
    let mut buckets: Vec<Vec<ReducedRow>> = (0..m).map(|_| Vec::new()).collect();
    for (idx, h) in arr.hyperplanes().iter().enumerate() {
        let must_hold = pivot == Some(idx);
        let row = ReducedRow::reduce(h, q, must_hold);
        match row.max_support() {
            Some(coord) => buckets[coord].push(row),
            None => {
                // The q-reduction is the constant equation 0 = rhs.
                let holds = row.rhs == 0;
                if holds != must_hold {
                    return Prepared::Zero;
                }
                // Constant-true pivot or constant-false ordinary row:
                // no constraint.
            }
        }
    }
    Prepared::Buckets(buckets)
}

fn dfs(buckets: &[Vec<ReducedRow>], q: u64, depth: usize, x: &mut Vec<u64>) -> u128 {
    if depth == buckets.len() {
        return 1;
    }
    let mut total = 0u128;
    'values: for v in 0..q {
        x[depth] = v;
        for row in &buckets[depth] {
            let on_row = row.eval(x, q) == row.rhs;
            if on_row != row.must_hold {
                continue 'values;
            }
        }
        total += dfs(buckets, q, depth + 1, x);
    }
    total
}

fn kernel_count(arr: &Arrangement, q: u64, pivot: Option<usize>, threads: usize) -> u128 {
    assert!(q >= 1, "modulus must be positive");
    let m = arr.dim();
    let buckets = match prepare(arr, q, pivot) {
        Prepared::Zero => return 0,
        Prepared::Buckets(b) => b,
    };
    if threads <= 1 || m < 2 || q < 2 {
        let mut x = vec![0u64; m];
        return dfs(&buckets, q, 0, &mut x);
    }
    // Partition the outermost coordinate's residues across workers. The
    // total is a plain sum of the partial counts, so the result is
    // identical to the single-worker run.
    let workers = threads.min(q as usize);
    std::thread::scope(|scope| {
        let buckets = &buckets;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut x = vec![0u64; m];
                    let mut partial = 0u128;
                    let mut v = w as u64;
                    'values: while v < q {
                        x[0] = v;
                        v += workers as u64;
                        for row in &buckets[0] {
                            let on_row = row.eval(&x, q) == row.rhs;
                            if on_row != row.must_hold {
                                continue 'values;
                            }
                        }
                        partial += dfs(buckets, q, 1, &mut x);
                    }
                    partial
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("counting worker panicked")).sum()
    })
}

/// Exact number of `x` in `Z_q^m` lying on no hyperplane's q-reduction,
/// via the pruned backtracking kernel.
pub fn count_complement(arr: &Arrangement, q: u64) -> CountResult {
    count_complement_threaded(arr, q, 1)
}

/// Same as [`count_complement`], with the outermost coordinate split
/// across `threads` workers. The result is bit-identical for any thread
/// count.
pub fn count_complement_threaded(arr: &Arrangement, q: u64, threads: usize) -> CountResult {
    let value = kernel_count(arr, q, None, threads);
    CountResult { value: BigUint::from(value), q, mode: CountMode::Full }
}

/// Exact number of `x` in `Z_q^m` lying on the pivot's q-reduction and on
/// no other hyperplane's q-reduction.
pub fn count_restricted(arr: &Arrangement, pivot: usize, q: u64) -> Result<CountResult, CountError> {
    count_restricted_threaded(arr, pivot, q, 1)
}

pub fn count_restricted_threaded(
    arr: &Arrangement,
    pivot: usize,
    q: u64,
    threads: usize,
) -> Result<CountResult, CountError> {
    arr.hyperplane(pivot)?;
    let value = kernel_count(arr, q, Some(pivot), threads);
    Ok(CountResult { value: BigUint::from(value), q, mode: CountMode::Restricted })
}

/// Restricted count through a validated [`RestrictionSpec`].
pub fn count_restriction_spec(spec: &RestrictionSpec, q: u64) -> CountResult {
    count_restricted(spec.base(), spec.pivot(), q)
        .expect("restriction spec carries a valid pivot")
}

/// True iff `x` lies on the q-reduction of `h`.
pub fn on_hyperplane(h: &Hyperplane, x: &[u64], q: u64) -> bool {
    let row = ReducedRow::reduce(h, q, false);
    row.eval(x, q) == row.rhs
}

/// True iff `x` lies on no hyperplane's q-reduction.
pub fn in_complement(arr: &Arrangement, x: &[u64], q: u64) -> bool {
    arr.hyperplanes().iter().all(|h| !on_hyperplane(h, x, q))
}

fn naive_scan(
    arr: &Arrangement,
    q: u64,
    pivot: Option<usize>,
    budget: u128,
) -> Result<u128, CountError> {
    assert!(q >= 1, "modulus must be positive");
    let m = arr.dim();
    let candidates = (q as u128)
        .checked_pow(m as u32)
        .ok_or(CountError::BudgetExceeded { candidates: u128::MAX, budget })?;
    if candidates > budget {
        return Err(CountError::BudgetExceeded { candidates, budget });
    }
    let rows: Vec<(usize, ReducedRow)> = arr
        .hyperplanes()
        .iter()
        .enumerate()
        .map(|(idx, h)| (idx, ReducedRow::reduce(h, q, false)))
        .collect();
    let mut x = vec![0u64; m];
    let mut count = 0u128;
    loop {
        let ok = rows.iter().all(|(idx, row)| {
            let on_row = row.eval(&x, q) == row.rhs;
            if pivot == Some(*idx) {
                on_row
            } else {
                !on_row
            }
        });
        if ok {
            count += 1;
        }
        // Odometer step.
        let mut d = 0;
        loop {
            if d == m {
                return Ok(count);
            }
            x[d] += 1;
            if x[d] < q {
                break;
            }
            x[d] = 0;
            d += 1;
        }
    }
}

/// Reference oracle: full enumeration of `Z_q^m`, no pruning.
pub fn count_complement_naive(arr: &Arrangement, q: u64) -> Result<CountResult, CountError> {
    count_complement_naive_with_budget(arr, q, DEFAULT_NAIVE_BUDGET)
}

pub fn count_complement_naive_with_budget(
    arr: &Arrangement,
    q: u64,
    budget: u128,
) -> Result<CountResult, CountError> {
    let value = naive_scan(arr, q, None, budget)?;
    Ok(CountResult { value: BigUint::from(value), q, mode: CountMode::Full })
}

/// Reference oracle for the restricted count.
pub fn count_restricted_naive(
    arr: &Arrangement,
    pivot: usize,
    q: u64,
) -> Result<CountResult, CountError> {
    count_restricted_naive_with_budget(arr, pivot, q, DEFAULT_NAIVE_BUDGET)
}

pub fn count_restricted_naive_with_budget(
    arr: &Arrangement,
    pivot: usize,
    q: u64,
    budget: u128,
) -> Result<CountResult, CountError> {
    arr.hyperplane(pivot)?;
    let value = naive_scan(arr, q, Some(pivot), budget)?;
    Ok(CountResult { value: BigUint::from(value), q, mode: CountMode::Restricted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::make_arrangement;
    use crate::shi::build_shi_b;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn empty_arrangement_counts_everything() {
        let arr = make_arrangement(3, vec![(vec![1, 0, 0], 0)]).unwrap().delete(0).unwrap();
        assert_eq!(count_complement(&arr, 7).value, big(343));
        assert_eq!(count_complement_naive(&arr, 7).unwrap().value, big(343));
    }

    #[test]
    fn shi_b2_base_counts() {
        let arr = build_shi_b(2).unwrap();
        assert_eq!(count_complement(&arr, 9).value, big(25));
        assert_eq!(count_complement(&arr, 8).value, big(16));
    }

    #[test]
    fn shi_b3_base_count_naive() {
        let arr = build_shi_b(3).unwrap();
        assert_eq!(count_complement_naive(&arr, 11).unwrap().value, big(125));
    }

    #[test]
    fn single_hyperplane_line() {
        let arr = make_arrangement(1, vec![(vec![1], 0)]).unwrap();
        assert_eq!(count_complement_naive(&arr, 5).unwrap().value, big(4));
        assert_eq!(count_complement(&arr, 5).value, big(4));
    }

    #[test]
    fn restricted_counts_match_worked_values() {
        let b2 = build_shi_b(2).unwrap();
        let x1_eq_0 = b2.position_of(&Hyperplane::new(vec![1, 0], 0).unwrap()).unwrap();
        assert_eq!(count_restricted(&b2, x1_eq_0, 9).unwrap().value, big(6));

        let diff0 = b2.position_of(&Hyperplane::new(vec![1, -1], 0).unwrap()).unwrap();
        assert_eq!(count_restricted(&b2, diff0, 8).unwrap().value, big(5));

        let sum1 = b2.position_of(&Hyperplane::new(vec![1, 1], 1).unwrap()).unwrap();
        assert_eq!(count_restricted(&b2, sum1, 9).unwrap().value, big(6));

        let b3 = build_shi_b(3).unwrap();
        let diff0_13 = b3.position_of(&Hyperplane::new(vec![1, 0, -1], 0).unwrap()).unwrap();
        assert_eq!(count_restricted_naive(&b3, diff0_13, 11).unwrap().value, big(36));
    }

    #[test]
    fn restricted_rejects_bad_pivot() {
        let b2 = build_shi_b(2).unwrap();
        assert_eq!(
            count_restricted(&b2, 42, 9),
            Err(CountError::IndexOutOfRange { index: 42, len: 8 })
        );
    }

    #[test]
    fn restriction_spec_route_counts_the_same() {
        let b2 = build_shi_b(2).unwrap();
        let spec = crate::arrangement::restriction_spec(&b2, 0).unwrap();
        assert_eq!(count_restriction_spec(&spec, 9), count_restricted(&b2, 0, 9).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let arr = build_shi_b(2).unwrap();
        assert!(matches!(
            count_complement_naive_with_budget(&arr, 100, 99),
            Err(CountError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn modulus_one_degenerates() {
        // Everything is 0 mod 1, so any hyperplane covers the single tuple.
        let arr = make_arrangement(2, vec![(vec![1, 0], 0), (vec![0, 1], 1)]).unwrap();
        assert_eq!(count_complement(&arr, 1).value, big(0));
        assert_eq!(count_complement_naive(&arr, 1).unwrap().value, big(0));
        // Restricted: the pivot holds trivially, but so does the other row.
        assert_eq!(count_restricted(&arr, 0, 1).unwrap().value, big(0));
        let single = make_arrangement(2, vec![(vec![1, 0], 0)]).unwrap();
        assert_eq!(count_restricted(&single, 0, 1).unwrap().value, big(1));
        assert_eq!(count_restricted_naive(&single, 0, 1).unwrap().value, big(1));
    }

    #[test]
    fn degenerate_reduction_of_doubled_row() {
        // (2x = 1) mod 2 reduces to 0 = 1: never on it, excludes nothing.
        let arr = make_arrangement(1, vec![(vec![2], 1)]).unwrap();
        assert_eq!(count_complement(&arr, 2).value, big(2));
        // (2x = 0) mod 2 reduces to 0 = 0: always on it.
        let arr = make_arrangement(1, vec![(vec![2], 0)]).unwrap();
        assert_eq!(count_complement(&arr, 2).value, big(0));
        assert_eq!(count_restricted(&arr, 0, 2).unwrap().value, big(2));
    }

    #[test]
    fn count_query_dispatches_both_modes() {
        let b2 = build_shi_b(2).unwrap();
        let full = CountQuery { arrangement: b2.clone(), q: 9, restriction: None };
        assert_eq!(full.run().unwrap().value, big(25));
        assert_eq!(full.run().unwrap().mode, CountMode::Full);
        let restricted = CountQuery { arrangement: b2, q: 9, restriction: Some(0) };
        assert_eq!(restricted.run().unwrap().value, big(6));
        assert_eq!(restricted.run().unwrap().mode, CountMode::Restricted);
    }

    #[test]
    fn threading_is_invisible() {
        let b3 = build_shi_b(3).unwrap();
        for q in [1u64, 2, 3, 7, 12, 13] {
            let single = count_complement_threaded(&b3, q, 1);
            for threads in [2, 3, 8] {
                assert_eq!(count_complement_threaded(&b3, q, threads), single);
            }
            let r1 = count_restricted_threaded(&b3, 4, q, 1).unwrap();
            assert_eq!(count_restricted_threaded(&b3, 4, q, 4).unwrap(), r1);
        }
    }

    #[test]
    fn adding_a_hyperplane_never_increases_the_count() {
        let b2 = build_shi_b(2).unwrap();
        for q in 1..=14u64 {
            let mut prev = count_complement(
                &b2.delete(7).unwrap().delete(6).unwrap().delete(5).unwrap(),
                q,
            )
            .value;
            let less = count_complement(&b2.delete(7).unwrap().delete(6).unwrap(), q).value;
            assert!(less <= prev);
            prev = less;
            let full = count_complement(&b2, q).value;
            assert!(full <= prev);
        }
    }
}
