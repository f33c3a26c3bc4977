//! Seeded random rationals for the randomized property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraSpec;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 20250101;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational `p/q` with `|p| <= 9`, `1 <= q <= 6`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    Scalar::frac(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector {
    Vector((0..n).map(|_| scalar(rng)).collect())
}

/// Random matrix in which roughly a third of the entries are zero, so that
/// rank deficiency actually shows up.
pub fn sparse_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(2.0 / 3.0) {
                m[(r, c)] = scalar(rng);
            }
        }
    }
    // duplicate a row now and then
    if rows > 1 && rng.gen_bool(0.3) {
        let src = rng.gen_range(0..rows);
        let dst = rng.gen_range(0..rows);
        let k = scalar(rng);
        for c in 0..cols {
            m[(dst, c)] = &m[(src, c)] * &k;
        }
    }
    m
}

/// Random structure constants on `dim` basis elements, about one in four nonzero.
/// Not Zinbiel in general.
pub fn sparse_algebra<R: Rng + ?Sized>(rng: &mut R, name: &str, dim: usize) -> AlgebraSpec {
    let mut a = AlgebraSpec::abelian(name, dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if rng.gen_bool(0.25) {
                    a.set_gamma(i, j, k, scalar(rng));
                }
            }
        }
    }
    a
}
