//! Splitting a monomial ideal along a monomial, and the reverse gluing.
//!
//! `K` splits along `m` into `I = K + (m)` and `J = K : (m)`. Conversely `I`
//! and `J` glue along `m ∈ G(I)` exactly when `I_m : (m) ⊆ J`, where `I_m` is
//! generated by `G(I) \ {m}`; the glued ideal is `K = I_m + mJ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{value_at, MonomialIdeal};
use crate::monomial::Monomial;
use crate::par::{self, Execution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub k: MonomialIdeal,
    pub m: Monomial,
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    /// Jumps `d` checked for Hilbert compatibility and the outcome of each.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compatible: Vec<(u32, bool)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centre_to_centre: Option<bool>,
}

pub fn split(k: &MonomialIdeal, m: &Monomial) -> Result<Decomposition> {
    Ok(Decomposition {
        k: k.clone(),
        m: m.clone(),
        i: k.add_monomial(m)?,
        j: k.colon(m)?,
        compatible: Vec::new(),
        centre_to_centre: None,
    })
}

/// Hilbert values of `R/I` and `R/J`; the unit ideal contributes nothing.
struct SplitValues {
    hf_i: Vec<u64>,
    hf_j: Vec<u64>,
    shift: i64,
}

impl SplitValues {
    fn new(k: &MonomialIdeal, m: &Monomial) -> Result<Self> {
        let dec = split(k, m)?;
        Ok(SplitValues {
            hf_i: dec.i.hilbert_values_or_zero()?,
            hf_j: dec.j.hilbert_values_or_zero()?,
            shift: m.degree() as i64,
        })
    }

    fn compatible(&self, d: u32) -> bool {
        let d = d as i64;
        let top = (self.hf_i.len() as i64).max(self.hf_j.len() as i64 + self.shift);
        (-d..=top).all(|i| {
            let (a, b) = (value_at(&self.hf_i, i), value_at(&self.hf_i, i + d));
            let (c, e) = (
                value_at(&self.hf_j, i - self.shift),
                value_at(&self.hf_j, i - self.shift + d),
            );
            (a >= b || c <= e) && (a <= b || c >= e)
        })
    }
}

/// Both Hilbert-function implications of the maximal-rank transfer for the
/// split of `K` along `m`, for every degree and the given jump `d`.
pub fn hilbert_compatible(k: &MonomialIdeal, m: &Monomial, d: u32) -> Result<bool> {
    Ok(SplitValues::new(k, m)?.compatible(d))
}

/// True iff `R/I` and `R/J` have symmetric Hilbert functions with socle
/// degrees `r` and `s` satisfying `r - s = 2 deg(m)`.
pub fn centre_to_centre(k: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    let dec = split(k, m)?;
    if dec.i.is_unit() {
        return Err(Error::CentreNotApplicable("K + (m) is the unit ideal".into()));
    }
    if dec.j.is_unit() {
        return Err(Error::CentreNotApplicable("K : (m) is the unit ideal".into()));
    }
    let hi = dec.i.hilbert_data()?;
    let hj = dec.j.hilbert_data()?;
    Ok(hi.symmetric
        && hj.symmetric
        && hi.socle_degree as i64 - hj.socle_degree as i64 == 2 * m.degree() as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMode {
    SingleD(u32),
    AllD,
}

/// First standard monomial of positive degree (canonical order) whose split
/// satisfies the Hilbert conditions for the requested jumps.
pub fn find_witness(k: &MonomialIdeal, mode: WitnessMode) -> Result<Option<Decomposition>> {
    find_witness_with(k, mode, Execution::default())
}

pub fn find_witness_with(
    k: &MonomialIdeal,
    mode: WitnessMode,
    exec: Execution,
) -> Result<Option<Decomposition>> {
    let basis = k.standard_basis()?;
    let socle = basis.socle_degree();
    let candidates: Vec<Monomial> = (1..=socle)
        .flat_map(|t| basis.degree(t).iter().cloned())
        .collect();
    let jumps: Vec<u32> = match mode {
        WitnessMode::SingleD(d) => vec![d],
        WitnessMode::AllD => (1..=socle).collect(),
    };
    let values = par::try_map(exec, &candidates, |m| SplitValues::new(k, m))?;
    let hit = par::position_first(exec, &values, |v| jumps.iter().all(|&d| v.compatible(d)));
    match hit {
        None => Ok(None),
        Some(idx) => {
            let mut dec = split(k, &candidates[idx])?;
            dec.compatible = jumps.iter().map(|&d| (d, true)).collect();
            dec.centre_to_centre = centre_to_centre(k, &dec.m).ok();
            Ok(Some(dec))
        }
    }
}

/// `I_m`: the ideal generated by `G(I) \ {m}`.
pub fn generators_without(i: &MonomialIdeal, m: &Monomial) -> Result<MonomialIdeal> {
    if !i.is_minimal_generator(m) {
        return Err(Error::NotMinimalGenerator(m.to_string()));
    }
    MonomialIdeal::new(i.gens().iter().filter(|g| *g != m).cloned(), i.nvars())
}

pub fn can_glue(i: &MonomialIdeal, j: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    if i.nvars() != j.nvars() {
        return Err(Error::VariableCount {
            expected: i.nvars(),
            found: j.nvars(),
        });
    }
    if m.nvars() != i.nvars() || !i.is_minimal_generator(m) {
        return Ok(false);
    }
    Ok(generators_without(i, m)?.colon(m)?.is_subset_of(j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingSpec {
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub m: Monomial,
    pub i_m: MonomialIdeal,
    pub k: MonomialIdeal,
}

/// `K = I_m + mJ`.
pub fn glue(i: &MonomialIdeal, j: &MonomialIdeal, m: &Monomial) -> Result<GluingSpec> {
    if !can_glue(i, j, m)? {
        return Err(Error::GluingCondition(format!(
            "need {m} in G(I) and I_m : ({m}) inside J"
        )));
    }
    let i_m = generators_without(i, m)?;
    let k = i_m.add(&j.times_monomial(m)?)?;
    debug_assert_eq!(&k.add_monomial(m)?, i);
    debug_assert_eq!(&k.colon(m)?, j);
    Ok(GluingSpec {
        i: i.clone(),
        j: j.clone(),
        m: m.clone(),
        i_m,
        k,
    })
}

/// Every `m ∈ G(I)` along which `I` and `J` glue, canonically ordered.
pub fn glue_candidates(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for m in i.gens() {
        if can_glue(i, j, m)? {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// `(x_1^{d_1+1}, ..., x_{n-1}^{d_{n-1}+1}, x_1 x_n^{d_0}, x_2 x_n^{d_0+d_1},
/// ..., x_n x_n^{d_0+...+d_{n-1}})` for `d = [d_0, ..., d_{n-1}]`.
pub fn family_product_linear(d: &[u32]) -> Result<MonomialIdeal> {
    let n = d.len();
    if n == 0 || d.contains(&0) {
        return Err(Error::InvalidParameters(
            "need at least one exponent, all positive".into(),
        ));
    }
    let mut gens = Vec::with_capacity(2 * n - 1);
    for (v, &dv) in d.iter().enumerate().skip(1) {
        gens.push(Monomial::var_power(n, v - 1, dv + 1));
    }
    let mut partial = 0u32;
    for v in 0..n {
        partial += d[v];
        let mut e = vec![0; n];
        e[v] += 1;
        e[n - 1] += partial;
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(gens, n)
}

/// `(x_1^2, ..., x_n^2)^2`.
pub fn family_squares_squared(n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be positive".into()));
    }
    let mut gens = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut e = vec![0; n];
            e[a] += 2;
            e[b] += 2;
            gens.push(Monomial::new(e));
        }
    }
    MonomialIdeal::new(gens, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::has_narrow_slp;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn example_69() -> MonomialIdeal {
        ideal(3, &[&[4, 0, 0], &[0, 2, 0], &[0, 0, 4], &[3, 1, 0], &[3, 0, 1]])
    }

    fn example_48() -> MonomialIdeal {
        ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 2, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn split_examples() {
        let k0 = family_squares_squared(3).unwrap();
        let dec = split(&k0, &mono(&[2, 0, 0])).unwrap();
        assert_eq!(dec.i, ideal(3, &[&[2, 0, 0], &[0, 4, 0], &[0, 0, 4], &[0, 2, 2]]));
        assert_eq!(dec.j, MonomialIdeal::complete_intersection(&[2, 2, 2]));

        let dec = split(&example_69(), &mono(&[3, 0, 0])).unwrap();
        assert_eq!(dec.i, MonomialIdeal::complete_intersection(&[3, 2, 4]));
        assert_eq!(dec.j, MonomialIdeal::complete_intersection(&[1, 1, 1]));

        let dec = split(&example_48(), &Monomial::one(3)).unwrap();
        assert!(dec.i.is_unit());
        assert_eq!(dec.j, example_48());
    }

    #[test]
    fn compatibility() {
        assert!(hilbert_compatible(&example_69(), &mono(&[3, 0, 0]), 1).unwrap());
        // m ∈ K makes J the unit ideal: right-hand sides vanish identically.
        let k = example_69();
        for d in 1..6 {
            assert!(hilbert_compatible(&k, &mono(&[4, 0, 0]), d).unwrap());
        }
        let k = example_48();
        let socle = k.hilbert_data().unwrap().socle_degree;
        for t in 1..=socle {
            for m in k.standard_monomials(t).unwrap() {
                let ok_all = (1..=socle).all(|d| hilbert_compatible(&k, &m, d).unwrap());
                assert!(!ok_all, "{m} should fail for some d");
            }
        }
    }

    #[test]
    fn centre_examples() {
        assert!(centre_to_centre(&example_69(), &mono(&[3, 0, 0])).unwrap());
        let k = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!centre_to_centre(&k, &mono(&[1, 0])).unwrap());
        assert!(matches!(
            centre_to_centre(&k, &Monomial::one(2)),
            Err(Error::CentreNotApplicable(_))
        ));
        assert!(matches!(
            centre_to_centre(&k, &mono(&[2, 0])),
            Err(Error::CentreNotApplicable(_))
        ));
    }

    #[test]
    fn witnesses() {
        assert!(find_witness(&example_48(), WitnessMode::AllD).unwrap().is_none());
        let w = find_witness(&example_69(), WitnessMode::AllD).unwrap().unwrap();
        assert!((1..=6).all(|d| hilbert_compatible(&example_69(), &w.m, d).unwrap()));
        assert!(hilbert_compatible(&example_69(), &mono(&[3, 0, 0]), 2).unwrap());
        let k = ideal(2, &[&[2, 0], &[0, 2]]);
        let w = find_witness(&k, WitnessMode::SingleD(1)).unwrap().unwrap();
        assert!(hilbert_compatible(&k, &w.m, 1).unwrap());
        let seq = find_witness_with(&example_69(), WitnessMode::AllD, Execution::Sequential).unwrap();
        let par = find_witness_with(&example_69(), WitnessMode::AllD, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn generators_without_examples() {
        let i = MonomialIdeal::complete_intersection(&[3, 2, 4]);
        assert_eq!(
            generators_without(&i, &mono(&[3, 0, 0])).unwrap(),
            ideal(3, &[&[0, 2, 0], &[0, 0, 4]])
        );
        let x = ideal(1, &[&[1]]);
        assert!(generators_without(&x, &mono(&[1])).unwrap().is_zero());
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(generators_without(&i, &mono(&[0, 1])).unwrap(), ideal(2, &[&[2, 0]]));
        assert!(matches!(
            generators_without(&i, &mono(&[3, 0])),
            Err(Error::NotMinimalGenerator(_))
        ));
    }

    #[test]
    fn gluing_conditions() {
        let i = MonomialIdeal::complete_intersection(&[3, 2, 4]);
        let j = MonomialIdeal::complete_intersection(&[1, 1, 1]);
        assert!(can_glue(&i, &j, &mono(&[3, 0, 0])).unwrap());
        assert_eq!(glue_candidates(&i, &j).unwrap().len(), 3);

        let i2 = ideal(2, &[&[2, 0], &[0, 2]]);
        let j2 = ideal(2, &[&[1, 0]]);
        assert!(!can_glue(&i2, &j2, &mono(&[2, 0])).unwrap());
        assert_eq!(glue_candidates(&i2, &j2).unwrap(), vec![mono(&[0, 2])]);

        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(glue_candidates(&x, &ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), vec![mono(&[1, 0])]);

        // principal I glues with anything proper
        let p = mono(&[1, 1]);
        assert!(can_glue(&MonomialIdeal::principal(p.clone()), &i2, &p).unwrap());
        assert!(matches!(
            glue(&i2, &j2, &mono(&[2, 0])),
            Err(Error::GluingCondition(_))
        ));
    }

    #[test]
    fn glue_examples() {
        let g = glue(
            &MonomialIdeal::complete_intersection(&[3, 2, 4]),
            &MonomialIdeal::complete_intersection(&[1, 1, 1]),
            &mono(&[3, 0, 0]),
        )
        .unwrap();
        assert_eq!(g.k, example_69());
        assert_eq!(g.i_m, ideal(3, &[&[0, 2, 0], &[0, 0, 4]]));

        let g = glue(
            &ideal(3, &[&[1, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
            &ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3], &[0, 1, 1]]),
            &mono(&[1, 0, 0]),
        )
        .unwrap();
        assert_eq!(
            g.k,
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 2, 0], &[1, 0, 3], &[1, 1, 1]])
        );

        let m = mono(&[1, 2]);
        let j = ideal(2, &[&[2, 0], &[0, 1]]);
        let g = glue(&MonomialIdeal::principal(m.clone()), &j, &m).unwrap();
        assert_eq!(g.k, j.times_monomial(&m).unwrap());
    }

    #[test]
    fn families() {
        assert_eq!(family_product_linear(&[3]).unwrap(), ideal(1, &[&[4]]));
        assert_eq!(
            family_product_linear(&[1, 1]).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])
        );
        let k = family_product_linear(&[1, 1, 1]).unwrap();
        assert!(has_narrow_slp(&k).unwrap());
        assert_eq!(k.hilbert_data().unwrap().socle_degree, 3);
        assert!(family_product_linear(&[1, 0]).is_err());

        assert_eq!(family_squares_squared(1).unwrap(), ideal(1, &[&[4]]));
        assert_eq!(family_squares_squared(3).unwrap().gens().len(), 6);
    }
}
