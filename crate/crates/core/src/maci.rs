//! Equigenerated monomial almost complete intersections in three variables,
//! `R_{a,b,c} = k[x,y,z]/(x^d, y^d, z^d, x^a y^b z^c)` with `d = a + b + c`.
//!
//! Besides constructors this module carries the predictions of the WLP and
//! SLP conjectures for the family, the twin-peak Hilbert values and the
//! swap-fixed monomial counts that explain the proven WLP failures, and a
//! scanner comparing predictions with exact verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lefschetz::{check_lefschetz_with, CheckOptions, Property};
use crate::monomial::Monomial;
use crate::par::{self, Execution};

/// Default largest `d` for which a scan computes SLP.
pub const DEFAULT_SLP_CAP: u32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MaciParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl MaciParams {
    /// Requires `a ≥ b ≥ c ≥ 1`.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if !(a >= b && b >= c && c >= 1) {
            return Err(Error::InvalidParameters(format!(
                "need a >= b >= c >= 1, got ({a},{b},{c})"
            )));
        }
        Ok(MaciParams { a, b, c })
    }

    pub fn d(&self) -> u32 {
        self.a + self.b + self.c
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    fn check(&self) -> Result<()> {
        MaciParams::new(self.a, self.b, self.c).map(|_| ())
    }

    /// `k` with `d = 6k + 3` and `a < 4k + 2`, if both hold.
    pub fn twin_peak_k(&self) -> Option<u32> {
        let d = self.d();
        if d % 6 != 3 {
            return None;
        }
        let k = (d - 3) / 6;
        (self.a < 4 * k + 2).then_some(k)
    }

    pub fn has_repeated_exponent(&self) -> bool {
        self.a == self.b || self.b == self.c
    }

    /// `d = 6k + 3` and `4k + 2 > a > b > c > 0`: the WLP conjecture is open.
    pub fn is_open_case(&self) -> bool {
        self.twin_peak_k().is_some() && self.a > self.b && self.b > self.c
    }
}

impl std::fmt::Display for MaciParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

pub fn maci_ideal(p: MaciParams) -> Result<MonomialIdeal> {
    p.check()?;
    let d = p.d();
    let gens = vec![
        Monomial::var_power(3, 0, d),
        Monomial::var_power(3, 1, d),
        Monomial::var_power(3, 2, d),
        Monomial::new(vec![p.a, p.b, p.c]),
    ];
    MonomialIdeal::new(gens, 3)
}

/// `(x_1^a, ..., x_n^a, x_1^{a-1} x_2)`.
pub fn thm51_ideal(n: usize, a: u32) -> Result<MonomialIdeal> {
    if n < 2 || a < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and a >= 2, got n = {n}, a = {a}"
        )));
    }
    let mut gens: Vec<Monomial> = (0..n).map(|j| Monomial::var_power(n, j, a)).collect();
    let mut e = vec![0u32; n];
    e[0] = a - 1;
    e[1] = 1;
    gens.push(Monomial::new(e));
    MonomialIdeal::new(gens, n)
}

/// Predicted WLP: fails exactly when `d = 6k + 3`, `a < 4k + 2` and two of
/// the exponents coincide.
pub fn predict_wlp(p: MaciParams) -> bool {
    !(p.twin_peak_k().is_some() && p.has_repeated_exponent())
}

/// Predicted SLP for `(x^D, y^D, z^D, x^{e_1} y^{e_2} z^{e_3})`: the mixed
/// exponents, up to permutation, must be `(D-1, 1, 0)` with `D ≥ 2`,
/// `(D-2, 1, 1)` with `D ≥ 4`, `(2, 2, 1)` with `D = 5` or `(3, 2, 2)` with
/// `D = 7`.
pub fn predict_slp_exponents(degree: u32, exps: [u32; 3]) -> bool {
    let mut e = exps;
    e.sort_unstable_by(|a, b| b.cmp(a));
    if e.iter().sum::<u32>() != degree {
        return false;
    }
    match e {
        [_, 1, 0] => degree >= 2,
        [_, 1, 1] => degree >= 4,
        [2, 2, 1] => degree == 5,
        [3, 2, 2] => degree == 7,
        _ => false,
    }
}

pub fn predict_slp(p: MaciParams) -> bool {
    predict_slp_exponents(p.d(), p.exponents())
}

/// `(HF(8k+2), HF(8k+3))` of `R_{a,b,c}`, by enumeration.
pub fn twin_peak_values(p: MaciParams) -> Result<(u64, u64)> {
    p.check()?;
    let Some(k) = p.twin_peak_k() else {
        return Err(Error::InvalidParameters(format!(
            "{p}: need d = 6k+3 and a < 4k+2"
        )));
    };
    let ideal = maci_ideal(p)?;
    let hf = |t: u32| ideal.standard_monomials(t).map(|v| v.len() as u64);
    Ok((hf(8 * k + 2)?, hf(8 * k + 3)?))
}

/// `6(2k+1)^2`, the common value of the twin peaks.
pub fn twin_peak_formula(k: u32) -> u64 {
    let t = 2 * k as u64 + 1;
    6 * t * t
}

/// Standard monomials of `R_{a,b,c}` in `degree` whose exponents at the two
/// `swap` positions agree (the monomials fixed by exchanging those variables).
pub fn fixed_count(p: MaciParams, degree: u32, swap: (usize, usize)) -> Result<u64> {
    let (i, j) = swap;
    if i == j || i >= 3 || j >= 3 {
        return Err(Error::InvalidParameters(format!(
            "swap needs two distinct variable indices below 3, got ({i},{j})"
        )));
    }
    let ideal = maci_ideal(p)?;
    Ok(ideal
        .standard_monomials(degree)?
        .iter()
        .filter(|m| m.exponent(i) == m.exponent(j))
        .count() as u64)
}

/// All `(a, b, c)` with `a ≥ b ≥ c ≥ 1` and `a + b + c = d`, sorted by
/// descending `a`, then descending `b`.
pub fn triples(d: u32) -> Vec<MaciParams> {
    let mut out = Vec::new();
    for a in (1..=d).rev() {
        for b in (1..=a).rev() {
            let Some(c) = d.checked_sub(a + b) else {
                continue;
            };
            if c >= 1 && c <= b {
                out.push(MaciParams { a, b, c });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub params: MaciParams,
    pub d: u32,
    pub computed_wlp: bool,
    pub predicted_wlp: bool,
    pub agree_wlp: bool,
    /// `None` when SLP was not requested or `d` exceeds the cap.
    pub computed_slp: Option<bool>,
    pub predicted_slp: bool,
    pub agree_slp: Option<bool>,
    pub open_case: bool,
}

impl ScanRow {
    /// Compares computed verdicts with the predictions for `p`.
    pub fn new(p: MaciParams, computed_wlp: bool, computed_slp: Option<bool>) -> Self {
        let predicted_wlp = predict_wlp(p);
        let predicted_slp = predict_slp(p);
        ScanRow {
            params: p,
            d: p.d(),
            computed_wlp,
            predicted_wlp,
            agree_wlp: computed_wlp == predicted_wlp,
            computed_slp,
            predicted_slp,
            agree_slp: computed_slp.map(|v| v == predicted_slp),
            open_case: p.is_open_case(),
        }
    }

    pub fn agrees(&self) -> bool {
        self.agree_wlp && self.agree_slp != Some(false)
    }

    /// A predicted WLP failure with both hypotheses met is a theorem; a
    /// computed WLP here means the checker is wrong.
    pub fn contradicts_theorem(&self) -> bool {
        !self.predicted_wlp && self.computed_wlp
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub slp: bool,
    pub slp_cap: u32,
    pub check: CheckOptions,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            slp: false,
            slp_cap: DEFAULT_SLP_CAP,
            check: CheckOptions::default(),
        }
    }
}

pub fn scan_row(p: MaciParams, options: &ScanOptions) -> Result<ScanRow> {
    let ideal = maci_ideal(p)?;
    // Rows already run in parallel; keep each row's sweep on one thread.
    let check = CheckOptions {
        execution: Execution::Sequential,
        ..options.check
    };
    let computed_wlp = check_lefschetz_with(&ideal, Property::Weak, check)?.verdict;
    let computed_slp = if options.slp && p.d() <= options.slp_cap {
        Some(check_lefschetz_with(&ideal, Property::Strong, check)?.verdict)
    } else {
        None
    };
    Ok(ScanRow::new(p, computed_wlp, computed_slp))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }

    pub fn theorem_violations(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.contradicts_theorem())
    }
}

/// Scans every triple for each `d` (each at least 3). Rows are computed in
/// parallel under `options.check.execution`; order follows `d_values`, then
/// [`triples`].
pub fn scan(d_values: &[u32], options: &ScanOptions) -> Result<ScanReport> {
    if let Some(&d) = d_values.iter().find(|&&d| d < 3) {
        return Err(Error::InvalidParameters(format!("d = {d} is below 3")));
    }
    let params: Vec<MaciParams> = d_values.iter().flat_map(|&d| triples(d)).collect();
    let rows = par::try_map(options.check.execution, &params, |&p| scan_row(p, options))?;
    Ok(ScanReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u32, b: u32, c: u32) -> MaciParams {
        MaciParams::new(a, b, c).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(MaciParams::new(1, 1, 0).is_err());
        assert!(MaciParams::new(1, 2, 1).is_err());
        assert_eq!(p(4, 3, 2).d(), 9);
    }

    #[test]
    fn ideals() {
        assert_eq!(maci_ideal(p(1, 1, 1)).unwrap().to_string(), "x^3, x*y*z, y^3, z^3");
        assert_eq!(
            thm51_ideal(3, 2).unwrap(),
            MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0]])
        );
        assert!(thm51_ideal(1, 3).is_err());
        assert!(thm51_ideal(3, 1).is_err());
    }

    #[test]
    fn predictions() {
        assert!(!predict_wlp(p(1, 1, 1)));
        assert!(predict_wlp(p(4, 3, 2)));
        assert!(!predict_wlp(p(4, 4, 1)));
        assert!(predict_wlp(p(7, 1, 1)));
        assert!(predict_slp(p(2, 2, 1)));
        assert!(predict_slp(p(3, 2, 2)));
        assert!(!predict_slp(p(1, 1, 1)));
        assert!(predict_slp(p(2, 1, 1)));
        assert!(predict_slp_exponents(3, [0, 1, 2]));
        assert!(!predict_slp_exponents(4, [0, 1, 2]));
        assert!(p(4, 3, 2).is_open_case());
        assert!(p(5, 3, 1).is_open_case());
        assert!(!p(6, 2, 1).is_open_case());
    }

    #[test]
    fn counts() {
        assert_eq!(twin_peak_values(p(1, 1, 1)).unwrap(), (6, 6));
        assert!(twin_peak_values(p(2, 1, 1)).is_err());
        assert_eq!(fixed_count(p(5, 2, 2), 0, (1, 2)).unwrap(), 1);
        assert!(fixed_count(p(5, 2, 2), 0, (1, 1)).is_err());
        assert_eq!(twin_peak_formula(1), 54);
    }

    #[test]
    fn triple_lists() {
        assert_eq!(triples(3), vec![p(1, 1, 1)]);
        let t9: Vec<String> = triples(9).iter().map(ToString::to_string).collect();
        assert_eq!(
            t9,
            ["(7,1,1)", "(6,2,1)", "(5,3,1)", "(5,2,2)", "(4,4,1)", "(4,3,2)", "(3,3,3)"]
        );
    }

    #[test]
    fn scan_d3() {
        let r = scan(&[3], &ScanOptions { slp: true, ..Default::default() }).unwrap();
        assert_eq!(r.rows.len(), 1);
        let row = r.rows[0];
        assert!(!row.computed_wlp && row.agree_wlp);
        assert_eq!(row.computed_slp, Some(false));
        assert!(scan(&[2], &ScanOptions::default()).is_err());
    }
}
