//! Weak and strong Lefschetz checks for monomial quotients.
//!
//! For a monomial algebra the sum of the variables is a Lefschetz element
//! whenever one exists, so the checks build the matrices of multiplication by
//! `ℓ^d = (x_1 + ... + x_n)^d` on standard-monomial bases and compare exact
//! ranks against `min(dim_i, dim_{i+d})`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::{HilbertData, MonomialIdeal, StandardBasis};
use crate::monomial::Monomial;
use crate::par::{self, Execution};
use crate::rank::{self, IntMatrix, RankOutcome, RankStrategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Weak,
    Strong,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Weak => "weak",
            Property::Strong => "strong",
        }
    }
}

/// Multiplication by `ℓ^d` from degree `i` to degree `i + d`.
///
/// Entry `(v, u)` is the multinomial coefficient `d! / ∏ (v_j - u_j)!` when
/// `u | v`; target monomials lying in the ideal have no row.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub source_degree: u32,
    pub jump: u32,
    pub source_basis: Vec<Monomial>,
    pub target_basis: Vec<Monomial>,
    /// `(row, col, value)` with `value > 0`.
    pub entries: Vec<(usize, usize, BigInt)>,
}

impl GradedMap {
    pub fn rows(&self) -> usize {
        self.target_basis.len()
    }

    pub fn cols(&self) -> usize {
        self.source_basis.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows(), self.cols());
        for (r, c, v) in &self.entries {
            m.set(*r, *c, v.clone());
        }
        m
    }
}

/// `d! / ∏ parts_j!` with `Σ parts_j = d`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total: u64 = 0;
    for &p in parts {
        // acc *= binom(total + p, p)
        for k in 1..=p as u64 {
            total += 1;
            acc *= total;
            acc /= k;
        }
    }
    acc
}

pub(crate) fn power_map_on(basis: &StandardBasis, i: u32, d: u32) -> GradedMap {
    let source = basis.degree(i).to_vec();
    let target = basis.degree(i + d).to_vec();
    let mut entries = Vec::new();
    for (c, u) in source.iter().enumerate() {
        for (r, v) in target.iter().enumerate() {
            if let Some(q) = v.checked_div(u) {
                entries.push((r, c, multinomial(q.exponents())));
            }
        }
    }
    GradedMap {
        source_degree: i,
        jump: d,
        source_basis: source,
        target_basis: target,
        entries,
    }
}

/// Matrix of `ℓ^d : [R/I]_i → [R/I]_{i+d}`.
pub fn power_map(ideal: &MonomialIdeal, i: u32, d: u32) -> Result<GradedMap> {
    let basis = ideal.standard_basis()?;
    Ok(power_map_on(&basis, i, d))
}

/// Exact rank over the rationals (Bareiss).
pub fn exact_rank(map: &GradedMap) -> usize {
    rank::bareiss_rank(&map.to_dense())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankFailure {
    pub d: u32,
    pub i: u32,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub property: Property,
    pub verdict: bool,
    pub failures: Vec<RankFailure>,
    #[serde(with = "hilbert_values")]
    pub hilbert: HilbertData,
}

mod hilbert_values {
    use super::HilbertData;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(h: &HilbertData, s: S) -> Result<S::Ok, S::Error> {
        h.values.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<HilbertData, D::Error> {
        Ok(HilbertData::from_values(Vec::<u64>::deserialize(d)?))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub execution: Execution,
    pub strategy: RankStrategy,
}

/// The `(d, i)` pairs a sweep must test for a quotient with the given socle
/// degree, sorted by `(d, i)`.
pub fn sweep_pairs(property: Property, socle: u32) -> Vec<(u32, u32)> {
    let max_d = match property {
        Property::Weak => socle.min(1),
        Property::Strong => socle,
    };
    (1..=max_d)
        .flat_map(|d| (0..=socle - d).map(move |i| (d, i)))
        .collect()
}

/// Runs the maximal-rank sweep given a way to build each `(d, i)` matrix.
pub(crate) fn sweep<F>(
    property: Property,
    hilbert: HilbertData,
    options: CheckOptions,
    build: F,
) -> LefschetzReport
where
    F: Fn(u32, u32) -> IntMatrix + Sync + Send,
{
    let pairs = sweep_pairs(property, hilbert.socle_degree);
    let outcomes: Vec<RankOutcome> = par::map(options.execution, &pairs, |&(d, i)| {
        rank::maximal_rank(&build(d, i), options.strategy)
    });
    let failures: Vec<RankFailure> = pairs
        .iter()
        .zip(outcomes)
        .filter(|(_, o)| !o.is_maximal())
        .map(|(&(d, i), o)| RankFailure {
            d,
            i,
            rank: o.rank,
            expected: o.expected,
        })
        .collect();
    LefschetzReport {
        property,
        verdict: failures.is_empty(),
        failures,
        hilbert,
    }
}

pub fn check_lefschetz(ideal: &MonomialIdeal, property: Property) -> Result<LefschetzReport> {
    check_lefschetz_with(ideal, property, CheckOptions::default())
}

pub fn check_lefschetz_with(
    ideal: &MonomialIdeal,
    property: Property,
    options: CheckOptions,
) -> Result<LefschetzReport> {
    let basis = ideal.standard_basis()?;
    let hilbert = HilbertData::from_values(basis.dimensions());
    Ok(sweep(property, hilbert, options, |d, i| {
        power_map_on(&basis, i, d).to_dense()
    }))
}

pub fn has_wlp(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(check_lefschetz(ideal, Property::Weak)?.verdict)
}

pub fn has_slp(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(check_lefschetz(ideal, Property::Strong)?.verdict)
}

/// SLP together with a symmetric Hilbert function.
pub fn has_narrow_slp(ideal: &MonomialIdeal) -> Result<bool> {
    let report = check_lefschetz(ideal, Property::Strong)?;
    Ok(report.verdict && report.hilbert.symmetric)
}
