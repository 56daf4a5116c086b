//! Seeded generation of unimodular integer matrices, used by the
//! invariance checks: counting results and elementary divisors do not
//! change under a unimodular change of coordinates.

use crate::arrangement::Arrangement;

/// A small deterministic xorshift* generator, enough for reproducible
/// randomized checks without pulling in an RNG dependency.
#[derive(Clone, Copy)]
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        // State must be nonzero.
        XorShift64 { state: seed.wrapping_mul(2685821657736338717).max(1) }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// A random product of at most `steps` elementary integer row operations
/// (swap, negate, add a small multiple of another row), hence unimodular.
#[allow(clippy::needless_range_loop)]
pub fn random_unimodular(dim: usize, steps: usize, rng: &mut XorShift64) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..steps {
        let a = rng.below(dim as u64) as usize;
        match rng.below(3) {
            0 => {
                let b = rng.below(dim as u64) as usize;
                p.swap(a, b);
            }
            1 => {
                for v in &mut p[a] {
                    *v = -*v;
                }
            }
            _ => {
                let b = rng.below(dim as u64) as usize;
                if a != b {
                    let k = rng.below(5) as i64 - 2;
                    for j in 0..dim {
                        p[a][j] += k * p[b][j];
                    }
                }
            }
        }
    }
    p
}

/// Apply `P` on the left of the coefficient matrix: each hyperplane's
/// coefficient column becomes `P . coeffs`; offsets are unchanged.
pub fn transform_left(arr: &Arrangement, p: &[Vec<i64>]) -> Arrangement {
    let dim = arr.dim();
    assert_eq!(p.len(), dim, "transform dimension mismatch");
    let rows = arr
        .hyperplanes()
        .iter()
        .map(|h| {
            let coeffs: Vec<i64> = (0..dim)
                .map(|i| (0..dim).map(|k| p[i][k] * h.coeffs()[k]).sum())
                .collect();
            (coeffs, h.offset())
        })
        .collect();
    crate::arrangement::make_arrangement(dim, rows)
        .expect("unimodular transforms preserve nonzero rows")
}

/// Matrix product of two square integer matrices (test support for the
/// invariance checks).
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let cols = b[0].len();
    (0..n)
        .map(|i| {
            (0..cols)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination, for sanity-checking that a
/// generated matrix really is unimodular.
pub fn det(matrix: &[Vec<i64>]) -> i128 {
    let n = matrix.len();
    let mut w: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut denom = 1i128;
    for t in 0..n {
        let pivot_row = (t..n).find(|&i| w[i][t] != 0);
        let Some(pr) = pivot_row else { return 0 };
        if pr != t {
            w.swap(t, pr);
            sign = -sign;
        }
        for i in t + 1..n {
            for j in t + 1..n {
                w[i][j] = (w[t][t] * w[i][j] - w[i][t] * w[t][j]) / denom;
            }
            w[i][t] = 0;
        }
        denom = w[t][t];
    }
    sign * w[n - 1][n - 1]
}
