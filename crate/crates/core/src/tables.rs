//! `(s, n)`-tables and the monomial ideals they define.
//!
//! A table is a top row `d_1..d_n` above an `s × n` upper-triangular block
//! `α_{i,j}` (rows `1..s`). Row `k` of the block contributes the ideal
//!
//! ```text
//! K_k = x_1^{e_1} ... x_k^{e_k} · (x_{k+1}^{e_{k+1}}, ..., x_n^{e_n}),
//!       e_j = d_j - α_{1,j} - ... - α_{k,j}
//! ```
//!
//! and `K(T) = (x_1^{d_1}, ..., x_n^{d_n}) + K_1 + ... + K_s`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Table {
    pub s: usize,
    pub n: usize,
    pub d: Vec<u32>,
    /// `s` rows of length `n`; `alpha[i][j]` is `α_{i+1,j+1}`.
    pub alpha: Vec<Vec<u32>>,
}

/// One failed table condition, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// `α_{row,col} ≠ 0` below the diagonal.
    BelowDiagonal { row: usize, col: usize, value: u32 },
    /// Column sum of `α` exceeds `d_col`.
    ColumnSum { col: usize, sum: u32, d: u32 },
    /// `d_k` differs from its hook sum.
    HookSum { k: usize, sum: u32, d: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BelowDiagonal { row, col, value } => {
                write!(f, "(1) alpha[{row},{col}] = {value} must be 0 below the diagonal")
            }
            Violation::ColumnSum { col, sum, d } => {
                write!(f, "(2) column {col} sums to {sum} > d_{col} = {d}")
            }
            Violation::HookSum { k, sum, d } => {
                write!(f, "(3) d_{k} = {d} but its hook sums to {sum}")
            }
        }
    }
}

impl Table {
    pub fn new(d: Vec<u32>, alpha: Vec<Vec<u32>>) -> Self {
        Table {
            s: alpha.len(),
            n: d.len(),
            d,
            alpha,
        }
    }

    /// `α_{i,j}` with 1-based indices; zero outside the stored rows.
    pub fn a(&self, i: usize, j: usize) -> u32 {
        if i == 0 || i > self.s {
            0
        } else {
            self.alpha[i - 1][j - 1]
        }
    }

    fn check_shape(&self) -> Result<()> {
        if self.n == 0 || self.s >= self.n {
            return Err(Error::InvalidTable(format!(
                "need 0 <= s < n, got s = {}, n = {}",
                self.s, self.n
            )));
        }
        if self.d.len() != self.n || self.alpha.len() != self.s {
            return Err(Error::InvalidTable("shape does not match s and n".into()));
        }
        if self.alpha.iter().any(|r| r.len() != self.n) {
            return Err(Error::InvalidTable("every alpha row needs n entries".into()));
        }
        Ok(())
    }

    /// Every violated table condition; empty iff the table is valid.
    pub fn validate(&self) -> Result<Vec<Violation>> {
        self.check_shape()?;
        let mut out = Vec::new();
        for i in 1..=self.s {
            for j in 1..i {
                if self.a(i, j) != 0 {
                    out.push(Violation::BelowDiagonal {
                        row: i,
                        col: j,
                        value: self.a(i, j),
                    });
                }
            }
        }
        for j in 1..=self.n {
            let sum: u32 = (1..=self.s).map(|i| self.a(i, j)).sum();
            if sum > self.d[j - 1] {
                out.push(Violation::ColumnSum {
                    col: j,
                    sum,
                    d: self.d[j - 1],
                });
            }
        }
        for k in 1..=self.s {
            // α_{s+1,s+1} = 0 is implicit: a() returns 0 past row s.
            let sum: u32 = (1..k).map(|i| self.a(i, k)).sum::<u32>()
                + (k + 1..=self.n).map(|j| self.a(k, j)).sum::<u32>()
                + if k < self.n { self.a(k + 1, k + 1) } else { 0 };
            if sum != self.d[k - 1] {
                out.push(Violation::HookSum {
                    k,
                    sum,
                    d: self.d[k - 1],
                });
            }
        }
        Ok(out)
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.validate(), Ok(v) if v.is_empty())
    }

    fn require_valid(&self) -> Result<()> {
        let v = self.validate()?;
        if let Some(first) = v.first() {
            return Err(Error::InvalidTable(first.to_string()));
        }
        Ok(())
    }

    /// `K(T)`, minimalized. May be the unit ideal.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        self.require_valid()?;
        let n = self.n;
        let mut gens: Vec<Monomial> = (0..n)
            .map(|j| Monomial::var_power(n, j, self.d[j]))
            .collect();
        for k in 1..=self.s {
            let e: Vec<u32> = (1..=n)
                .map(|j| self.d[j - 1] - (1..=k).map(|i| self.a(i, j)).sum::<u32>())
                .collect();
            let mut prefix = vec![0u32; n];
            prefix[..k].copy_from_slice(&e[..k]);
            for j in k..n {
                let mut g = prefix.clone();
                g[j] += e[j];
                gens.push(Monomial::new(g));
            }
        }
        MonomialIdeal::new(gens, n)
    }

    /// `Σ d_i - α_{1,1} - n`, the socle degree of `R/K(T)` for `s ≥ 1`.
    pub fn predicted_socle(&self) -> Result<u32> {
        if self.s == 0 {
            return Err(Error::InvalidTable("socle prediction needs s >= 1".into()));
        }
        if self.ideal()?.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let total: u32 = self.d.iter().sum();
        Ok(total - self.a(1, 1) - self.n as u32)
    }

    /// The `(1, n)`-table with top row `d` and block row `alpha`.
    pub fn single_row(d: &[u32], alpha: &[u32]) -> Self {
        Table::new(d.to_vec(), vec![alpha.to_vec()])
    }
}

/// `(x_1^{d_1}, ..., x_n^{d_n}) + x_1^{d_1-α_1}(x_2^{d_2-α_2}, ..., x_n^{d_n-α_n})`
/// for `0 ≤ α_i ≤ d_i` and `d_1 = α_2 + ... + α_n`.
pub fn lemma31_ideal(d: &[u32], alpha: &[u32]) -> Result<MonomialIdeal> {
    check_gorenstein_params(d, alpha)?;
    let n = d.len();
    let mut gens: Vec<Monomial> = (0..n).map(|j| Monomial::var_power(n, j, d[j])).collect();
    for j in 1..n {
        let mut e = vec![0u32; n];
        e[0] = d[0] - alpha[0];
        e[j] = d[j] - alpha[j];
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(gens, n)
}

pub(crate) fn check_gorenstein_params(d: &[u32], alpha: &[u32]) -> Result<()> {
    if d.is_empty() || d.len() != alpha.len() {
        return Err(Error::InvalidParameters(
            "d and alpha must be non-empty and of equal length".into(),
        ));
    }
    if let Some(i) = (0..d.len()).find(|&i| alpha[i] > d[i]) {
        return Err(Error::InvalidParameters(format!(
            "alpha_{} = {} exceeds d_{} = {}",
            i + 1,
            alpha[i],
            i + 1,
            d[i]
        )));
    }
    let tail: u32 = alpha[1..].iter().sum();
    if tail != d[0] {
        return Err(Error::InvalidParameters(format!(
            "d_1 = {} must equal alpha_2 + ... + alpha_n = {tail}",
            d[0]
        )));
    }
    Ok(())
}

/// All valid tables with `n` columns, `s` block rows and every `d_j ≤ max_d`.
/// Block entries are bounded by `max_d` as well.
pub fn enumerate_tables(n: usize, s: usize, max_d: u32) -> Vec<Table> {
    let mut out = Vec::new();
    if s >= n {
        return out;
    }
    // Free entries: α_{i,j} with i ≤ j.
    let slots: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut alpha = vec![vec![0u32; n]; s];
    enumerate_alpha(&slots, 0, &mut alpha, n, s, max_d, &mut out);
    out
}

fn enumerate_alpha(
    slots: &[(usize, usize)],
    pos: usize,
    alpha: &mut Vec<Vec<u32>>,
    n: usize,
    s: usize,
    max_d: u32,
    out: &mut Vec<Table>,
) {
    if pos == slots.len() {
        // d_1..d_s are forced by the hook sums; the rest range freely.
        let probe = Table::new(vec![0; n], alpha.clone());
        let mut d = vec![0u32; n];
        for k in 1..=s {
            d[k - 1] = (1..k).map(|i| probe.a(i, k)).sum::<u32>()
                + (k + 1..=n).map(|j| probe.a(k, j)).sum::<u32>()
                + probe.a(k + 1, k + 1);
        }
        let col_sum = |j: usize| (1..=s).map(|i| probe.a(i, j)).sum::<u32>();
        if (1..=s).any(|k| d[k - 1] > max_d || col_sum(k) > d[k - 1]) {
            return;
        }
        fill_free(&mut d, s, n, max_d, &col_sum, alpha, out);
        return;
    }
    let (i, j) = slots[pos];
    for v in 0..=max_d {
        alpha[i][j] = v;
        enumerate_alpha(slots, pos + 1, alpha, n, s, max_d, out);
    }
    alpha[i][j] = 0;
}

fn fill_free(
    d: &mut Vec<u32>,
    k: usize,
    n: usize,
    max_d: u32,
    col_sum: &dyn Fn(usize) -> u32,
    alpha: &[Vec<u32>],
    out: &mut Vec<Table>,
) {
    if k == n {
        let t = Table::new(d.clone(), alpha.to_vec());
        debug_assert!(t.is_valid());
        out.push(t);
        return;
    }
    for v in col_sum(k + 1)..=max_d {
        d[k] = v;
        fill_free(d, k + 1, n, max_d, col_sum, alpha, out);
    }
    d[k] = 0;
}
