//! Exponent-vector monomials and the graded lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}` stored as its exponent vector.
///
/// `Ord` is graded lexicographic with `x_1 > x_2 > ... > x_n`: monomials are
/// compared by total degree first and then lexicographically on the exponent
/// vector, so `x^2 > xy > y^2 > x > y > 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_var^power`, with `var` zero-based.
    pub fn var_power(n: usize, var: usize, power: u32) -> Self {
        let mut exps = vec![0; n];
        exps[var] = power;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflows u32")
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// If this is a pure power `x_i^k` with `k > 0`, returns `(i, k)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// Multiply by a single variable.
    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] = exps[var].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Exchange the exponents of two variables.
    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.swap(i, j);
        Monomial { exps }
    }

    pub(crate) fn check_nvars(&self, n: usize) -> Result<()> {
        if self.nvars() == n {
            Ok(())
        } else {
            Err(Error::VariableCount {
                expected: n,
                found: self.nvars(),
            })
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const ALIASES: [char; 4] = ['x', 'y', 'z', 'w'];

/// Name of variable `var` (zero-based) in an `n`-variable ring.
pub fn variable_name(n: usize, var: usize) -> String {
    if n <= ALIASES.len() {
        ALIASES[var].to_string()
    } else {
        format!("x{}", var + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let n = self.nvars();
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", variable_name(n, i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All exponent vectors of length `n` with entry sum `degree`.
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill_degree(&mut cur, 0, degree, &mut out);
    out
}

fn fill_degree(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = cur.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if pos == n - 1 {
        cur[pos] = remaining;
        out.push(Monomial::new(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[pos] = e;
        fill_degree(cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}
