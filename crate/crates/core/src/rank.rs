//! Exact rank of integer matrices.
//!
//! [`bareiss_rank`] is the reference: fraction-free elimination over
//! arbitrary-precision integers, so every intermediate entry is a minor of the
//! input and each division is exact. [`modular_rank`] reduces modulo a 61-bit
//! prime; it can only under-count, which makes it a sound certificate for
//! maximal rank and nothing else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<BigInt>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(data: &[Vec<i64>]) -> Self {
        Self::from_rows(
            data.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Scales each row by the lcm of its denominators; the rank is unchanged.
    pub fn from_rational_rows(rows: &[Vec<BigRational>], cols: usize) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix");
                let l = r
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                r.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                t.data[c][r] = v.clone();
            }
        }
        t
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination. The pivot
/// is the first nonzero entry in the current column at or below the pivot row.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    // Elimination cost is rows * cols * rank; keep the short side as rows.
    let mut a = if m.rows > m.cols {
        m.transpose().data
    } else {
        m.data.clone()
    };
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() {
                    v
                } else {
                    debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                    v / &prev
                };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

pub fn reduce_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(MODULUS);
    let r = x.mod_floor(&p);
    debug_assert!(!r.is_negative());
    r.to_u64().expect("residue fits in u64")
}

/// Rank of the reduction modulo [`MODULUS`]. Never exceeds the rational rank.
pub fn modular_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .data
        .iter()
        .map(|r| r.iter().map(reduce_mod).collect())
        .collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = inv_mod(a[rank][c]);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv);
            for j in c..cols {
                let sub = mul_mod(f, pivot_row[j]);
                row[j] = (row[j] + MODULUS - sub) % MODULUS;
            }
        }
        rank += 1;
    }
    rank
}

/// Which engine decides maximal rank.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RankStrategy {
    /// Bareiss on every matrix.
    Exact,
    /// Accept a maximal modular rank as proof; fall back to Bareiss otherwise.
    #[default]
    ModularCertificate,
}

/// Result of a maximal-rank decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOutcome {
    pub rank: usize,
    pub expected: usize,
}

impl RankOutcome {
    pub fn is_maximal(&self) -> bool {
        self.rank == self.expected
    }
}

/// Decide whether `m` has rank `min(rows, cols)`. The returned rank is exact.
pub fn maximal_rank(m: &IntMatrix, strategy: RankStrategy) -> RankOutcome {
    let expected = m.rows.min(m.cols);
    if expected == 0 {
        return RankOutcome { rank: 0, expected };
    }
    if strategy == RankStrategy::ModularCertificate && modular_rank(m) == expected {
        return RankOutcome {
            rank: expected,
            expected,
        };
    }
    RankOutcome {
        rank: bareiss_rank(m),
        expected,
    }
}
