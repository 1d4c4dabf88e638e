//! Independent reference computations and random generators shared by the
//! integration tests. Nothing here calls the library's own enumeration or
//! rank code.
#![allow(dead_code)]

use std::collections::HashMap;

use monodec::polynomial::Polynomial;
use monodec::rank::IntMatrix;
use monodec::{Monomial, MonomialIdeal};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Number of monomials of degree `t` in `n` variables.
pub fn monomial_count(n: usize, t: i64) -> i128 {
    if t < 0 {
        0
    } else {
        binomial(t + n as i64 - 1, n as i64 - 1)
    }
}

/// `HF(R/I, t)` by inclusion and exclusion over subsets of the generators:
/// `Σ_S (-1)^{|S|} #monomials of degree t - deg lcm(S)`.
pub fn hf_inclusion_exclusion(ideal: &MonomialIdeal, t: i64) -> i128 {
    let n = ideal.nvars();
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
    assert!(gens.len() <= 16, "too many generators for inclusion-exclusion");
    let mut total = 0i128;
    for mask in 0u32..(1 << gens.len()) {
        let mut lcm = vec![0u32; n];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for v in 0..n {
                    lcm[v] = lcm[v].max(g[v]);
                }
            }
        }
        let deg: i64 = lcm.iter().map(|&e| e as i64).sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * monomial_count(n, t - deg);
    }
    total
}

/// All exponent vectors of total degree `t` in `n` variables.
pub fn exponent_vectors(n: usize, t: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if t == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=t).rev() {
        for mut rest in exponent_vectors(n - 1, t - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Monomials of degree `t` outside the ideal, by brute force.
pub fn brute_standard(ideal: &MonomialIdeal, t: u32) -> Vec<Vec<u32>> {
    exponent_vectors(ideal.nvars(), t)
        .into_iter()
        .filter(|e| !ideal.gens().iter().any(|g| divides(g.exponents(), e)))
        .collect()
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    rational_rank_rows(&mut a, m.cols())
}

pub fn rational_rank_rows(a: &mut [Vec<BigRational>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for x in &mut a[rank][c..cols] {
            *x = &*x * &inv;
        }
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Spanning set of the degree-`t` part of the ideal generated by homogeneous
/// `gens`, as coefficient vectors over the monomials of degree `t`.
fn ideal_rows(n: usize, gens: &[Polynomial], t: u32) -> (Vec<Vec<u32>>, Vec<Vec<BigRational>>) {
    let cols = exponent_vectors(n, t);
    let col_of: HashMap<Vec<u32>, usize> =
        cols.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(lm) = g.leading_monomial() else {
            continue;
        };
        let dg = lm.degree();
        if dg > t {
            continue;
        }
        for w in exponent_vectors(n, t - dg) {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (m, c) in g.terms() {
                let e: Vec<u32> = m.exponents().iter().zip(&w).map(|(a, b)| a + b).collect();
                row[col_of[&e]] = c.clone();
            }
            rows.push(row);
        }
    }
    (cols, rows)
}

/// `HF(R/(gens), t)` by the rank of the span of `monomial · generator`.
pub fn span_hf(n: usize, gens: &[Polynomial], t: u32) -> usize {
    let (cols, mut rows) = ideal_rows(n, gens, t);
    cols.len() - rational_rank_rows(&mut rows, cols.len())
}

/// Socle dimension of `R/(gens)` in degree `t`, by linear algebra on spans:
/// `dim {v ∈ R_t : x_i v ∈ I_{t+1} ∀i} - dim I_t`.
pub fn span_socle_in_degree(n: usize, gens: &[Polynomial], t: u32) -> usize {
    let (cols_t, mut rows_t) = ideal_rows(n, gens, t);
    let dim_it = rational_rank_rows(&mut rows_t, cols_t.len());
    let (cols_u, rows_u) = ideal_rows(n, gens, t + 1);
    let dim_iu = rational_rank_rows(&mut rows_u.clone(), cols_u.len());
    let col_u: HashMap<Vec<u32>, usize> =
        cols_u.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    // Columns of the composite R_t -> ⊕_i R_{t+1} / I_{t+1}: rank is
    // rank([A | U]) - rank(U) with U the block-diagonal ideal span.
    let big = n * cols_u.len();
    let mut a_rows: Vec<Vec<BigRational>> = Vec::new();
    for e in &cols_t {
        let mut row = vec![BigRational::zero(); big];
        for v in 0..n {
            let mut f = e.clone();
            f[v] += 1;
            row[v * cols_u.len() + col_u[&f]] = BigRational::one();
        }
        a_rows.push(row);
    }
    let mut u_rows: Vec<Vec<BigRational>> = Vec::new();
    for v in 0..n {
        for r in &rows_u {
            let mut row = vec![BigRational::zero(); big];
            row[v * cols_u.len()..(v + 1) * cols_u.len()].clone_from_slice(r);
            u_rows.push(row);
        }
    }
    let mut both = u_rows.clone();
    both.extend(a_rows);
    let rank_both = rational_rank_rows(&mut both, big);
    let rank_u = n * dim_iu;
    let composite_rank = rank_both - rank_u;
    let kernel = cols_t.len() - composite_rank;
    kernel - dim_it
}

pub fn span_socle_dimension(n: usize, gens: &[Polynomial], top: u32) -> usize {
    (0..=top).map(|t| span_socle_in_degree(n, gens, t)).sum()
}

/// Random Artinian ideal: pure powers `x_i^{e_i}` with `1 ≤ e_i ≤ max_deg`
/// and up to `extra` further generators of degree at most `max_deg`.
pub fn random_artinian<R: Rng>(rng: &mut R, n: usize, max_deg: u32, extra: usize) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = (0..n)
        .map(|v| Monomial::var_power(n, v, rng.gen_range(1..=max_deg)))
        .collect();
    for _ in 0..rng.gen_range(0..=extra) {
        let deg = rng.gen_range(1..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(gens, n).unwrap()
}

/// Random integer matrix whose rank is at most `rank_cap`, entries bounded
/// roughly by `bound`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64, rank_cap: usize) -> IntMatrix {
    if rank_cap >= rows.min(cols) {
        let data = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect::<Vec<Vec<i64>>>();
        return IntMatrix::from_i64(&data);
    }
    // Rows are integer combinations of `rank_cap` random rows.
    let k = rank_cap.max(1);
    let small = (bound as f64).sqrt() as i64 / 4 + 1;
    let basis: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..cols).map(|_| rng.gen_range(-small..=small)).collect())
        .collect();
    let data = (0..rows)
        .map(|_| {
            let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
            (0..cols)
                .map(|j| {
                    if rank_cap == 0 {
                        BigInt::zero()
                    } else {
                        (0..k)
                            .map(|i| BigInt::from(coeffs[i] * basis[i][j]))
                            .sum()
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(data)
}
