//! Monomial ideals, their standard monomials and Hilbert functions.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{variable_name, Monomial};

/// Listing order for generators and standard monomials: by degree, then
/// `x_1`-heavy monomials first within a degree.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// A monomial ideal given by its minimal generating set `G(I)`.
///
/// The zero ideal has no generators and the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        minimalize(r.gens.into_iter().map(Monomial::new), r.n)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(i: MonomialIdeal) -> Self {
        IdealRepr {
            n: i.n,
            gens: i.gens.into_iter().map(|m| m.exponents().to_vec()).collect(),
        }
    }
}

/// Drop generators divisible by another generator and sort canonically.
pub fn minimalize<I>(gens: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        g.check_nvars(n)?;
        all.push(g);
    }
    all.sort_by(canonical_cmp);
    all.dedup();
    // A divisor has degree at most that of its multiple, so checking against
    // the already kept (lower or equal degree) generators suffices.
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal { n, gens: kept })
}

impl MonomialIdeal {
    pub fn new<I>(gens: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        minimalize(gens, n)
    }

    /// Build from exponent vectors; panics on length mismatch.
    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Self {
        minimalize(gens.iter().map(|e| Monomial::new(e.to_vec())), n)
            .expect("exponent vectors must have length n")
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.nvars(),
            gens: vec![m],
        }
    }

    /// The complete intersection `(x_1^{d_1}, ..., x_n^{d_n})`.
    pub fn complete_intersection(degrees: &[u32]) -> Self {
        let n = degrees.len();
        minimalize(
            degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| Monomial::var_power(n, i, d)),
            n,
        )
        .expect("lengths agree")
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True iff `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_minimal_generator(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g == m)
    }

    /// `I + J`.
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::VariableCount {
                expected: self.n,
                found: other.n,
            });
        }
        minimalize(self.gens.iter().chain(&other.gens).cloned(), self.n)
    }

    /// `I + (m)`.
    pub fn add_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_nvars(self.n)?;
        minimalize(self.gens.iter().cloned().chain([m.clone()]), self.n)
    }

    /// `I : (m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_nvars(self.n)?;
        minimalize(self.gens.iter().map(|g| g.colon(m)), self.n)
    }

    /// `m * I`.
    pub fn times_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        m.check_nvars(self.n)?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: self.gens.iter().map(|g| g.mul(m)).collect(),
        })
    }

    /// Smallest `k` with `x_var^k` a generator, if any.
    pub fn pure_power_bound(&self, var: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| {
                if g.is_one() {
                    return Some(0);
                }
                match g.as_pure_power() {
                    Some((i, k)) if i == var => Some(k),
                    _ => None,
                }
            })
            .min()
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|v| self.pure_power_bound(v).is_some())
    }

    fn require_artinian(&self) -> Result<Vec<u32>> {
        (0..self.n)
            .map(|v| {
                self.pure_power_bound(v).ok_or_else(|| Error::NotArtinian {
                    missing: variable_name(self.n, v),
                })
            })
            .collect()
    }

    /// Upper bound on the degree of a standard monomial: `Σ (b_i - 1)` over
    /// the pure-power exponents `b_i`.
    pub fn degree_bound(&self) -> Result<u32> {
        let b = self.require_artinian()?;
        Ok(b.iter().map(|&k| k.saturating_sub(1)).sum())
    }

    /// Degree-`degree` monomials outside the ideal, canonically ordered.
    pub fn standard_monomials(&self, degree: u32) -> Result<Vec<Monomial>> {
        let bounds = self.require_artinian()?;
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n];
        self.walk(&bounds, &mut cur, 0, Some(degree), &mut out);
        out.sort_by(canonical_cmp);
        Ok(out)
    }

    /// Depth-first walk of the box below the pure powers. Bumping an exponent
    /// of a monomial already in the ideal stays in the ideal, so each variable
    /// loop stops at the first hit.
    fn walk(
        &self,
        bounds: &[u32],
        cur: &mut Vec<u32>,
        pos: usize,
        degree: Option<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let used: u32 = cur[..pos].iter().sum();
        if pos == self.n {
            if degree.is_none_or(|d| d == used) {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let mut cap = bounds[pos];
        if let Some(d) = degree {
            if used > d {
                return;
            }
            cap = cap.min(d - used + 1);
            if pos == self.n - 1 {
                // Only the exponent that hits the target degree matters.
                let e = d - used;
                if e < bounds[pos] {
                    cur[pos] = e;
                    let m = Monomial::new(cur.clone());
                    if !self.contains(&m) {
                        out.push(m);
                    }
                    cur[pos] = 0;
                }
                return;
            }
        }
        for e in 0..cap {
            cur[pos] = e;
            if self.contains(&Monomial::new(cur.clone())) {
                break;
            }
            self.walk(bounds, cur, pos + 1, degree, out);
        }
        cur[pos] = 0;
    }

    /// All standard monomials grouped by degree.
    pub fn standard_basis(&self) -> Result<StandardBasis> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let bounds = self.require_artinian()?;
        let mut all = Vec::new();
        let mut cur = vec![0u32; self.n];
        self.walk(&bounds, &mut cur, 0, None, &mut all);
        Ok(StandardBasis::from_monomials(all))
    }

    /// Hilbert function values of `R/I`.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        let basis = self.standard_basis()?;
        Ok(HilbertData::from_values(basis.dimensions()))
    }

    /// Hilbert values, with the unit ideal giving the empty (zero) series.
    pub fn hilbert_values_or_zero(&self) -> Result<Vec<u64>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        Ok(self.hilbert_data()?.values)
    }

    /// Text form in the ideal grammar, e.g. `x^2, y^3`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Standard monomials of an Artinian quotient, grouped by degree and indexed
/// for lookup.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    by_degree: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl StandardBasis {
    fn from_monomials(all: Vec<Monomial>) -> Self {
        let top = all.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
        let mut by_degree: Vec<Vec<Monomial>> = vec![Vec::new(); top + 1];
        for m in all {
            by_degree[m.degree() as usize].push(m);
        }
        for v in &mut by_degree {
            v.sort_by(canonical_cmp);
        }
        let index = by_degree
            .iter()
            .map(|v| v.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        StandardBasis { by_degree, index }
    }

    pub fn socle_degree(&self) -> u32 {
        (self.by_degree.len() - 1) as u32
    }

    pub fn degree(&self, d: u32) -> &[Monomial] {
        self.by_degree
            .get(d as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn dim(&self, d: u32) -> usize {
        self.degree(d).len()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index
            .get(m.degree() as usize)
            .and_then(|ix| ix.get(m).copied())
    }

    pub fn dimensions(&self) -> Vec<u64> {
        self.by_degree.iter().map(|v| v.len() as u64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.by_degree.iter().flatten()
    }
}

/// Hilbert function of an Artinian graded quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub values: Vec<u64>,
    pub socle_degree: u32,
    pub symmetric: bool,
    pub unimodal: bool,
}

impl HilbertData {
    /// Trailing zeros are dropped; `values` must be non-empty after that.
    pub fn from_values(mut values: Vec<u64>) -> Self {
        while values.len() > 1 && values.last() == Some(&0) {
            values.pop();
        }
        let socle_degree = values.len().saturating_sub(1) as u32;
        let symmetric = values.iter().eq(values.iter().rev());
        let unimodal = is_unimodal(&values);
        HilbertData {
            values,
            socle_degree,
            symmetric,
            unimodal,
        }
    }

    /// `HF(i)`, zero outside `0..=socle_degree` (including negative `i`).
    pub fn at(&self, i: i64) -> u64 {
        value_at(&self.values, i)
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

pub(crate) fn value_at(values: &[u64], i: i64) -> u64 {
    if i < 0 {
        0
    } else {
        values.get(i as usize).copied().unwrap_or(0)
    }
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(values: &[u64]) -> bool {
    let mut falling = false;
    for w in values.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// Checks `K^c = I^c ⊔ m J^c` degree by degree for `I = K + (m)`,
/// `J = K : (m)`. A `false` result means an arithmetic bug.
pub fn verify_split(k: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    let i = k.add_monomial(m)?;
    let j = k.colon(m)?;
    let kb = k.standard_basis()?;
    let ib = if i.is_unit() { None } else { Some(i.standard_basis()?) };
    let jb = if j.is_unit() { None } else { Some(j.standard_basis()?) };
    let shift = m.degree();
    let top = kb.socle_degree() + 1;
    for t in 0..=top {
        let mut expected: Vec<Monomial> = Vec::new();
        if let Some(ib) = &ib {
            expected.extend(ib.degree(t).iter().cloned());
        }
        if let (Some(jb), true) = (&jb, t >= shift) {
            expected.extend(jb.degree(t - shift).iter().map(|u| u.mul(m)));
        }
        let mut got = kb.degree(t).to_vec();
        let before = expected.len();
        expected.sort();
        expected.dedup();
        if expected.len() != before {
            return Ok(false);
        }
        got.sort();
        if got != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens)
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[0, 1]]));
        assert_eq!(i.gens().len(), 2);
        assert!(minimalize(Vec::new(), 3).unwrap().is_zero());
    }

    #[test]
    fn minimalize_drops_higher_powers() {
        let i = ideal(
            4,
            &[
                &[12, 0, 0, 0],
                &[0, 7, 0, 0],
                &[0, 0, 5, 0],
                &[0, 0, 0, 4],
                &[9, 0, 0, 0],
                &[9, 0, 2, 0],
                &[9, 0, 0, 2],
            ],
        );
        assert_eq!(i, MonomialIdeal::complete_intersection(&[9, 7, 5, 4]));
    }

    #[test]
    fn minimalize_rejects_length_mismatch() {
        let err = minimalize(vec![mono(&[1, 0]), mono(&[1])], 2).unwrap_err();
        assert!(matches!(err, Error::VariableCount { .. }));
    }

    #[test]
    fn sums() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(i.add(&ideal(2, &[&[1, 0]])).unwrap(), ideal(2, &[&[1, 0], &[0, 3]]));
        let k = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 2, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            k.add_monomial(&mono(&[1, 0, 0])).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 3, 0], &[0, 0, 5], &[0, 1, 1]])
        );
        assert_eq!(i.add(&MonomialIdeal::zero(2)).unwrap(), i);
        assert!(i.add(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn squares_squared_plus_square() {
        // (x^2,y^2,z^2)^2 + (x^2) = (x^2) + (y^2,z^2)^2
        let k0 = ideal(
            3,
            &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]],
        );
        let k1 = k0.add_monomial(&mono(&[2, 0, 0])).unwrap();
        assert_eq!(k1, ideal(3, &[&[2, 0, 0], &[0, 4, 0], &[0, 0, 4], &[0, 2, 2]]));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 2, 0], &[1, 0, 3], &[1, 1, 1]]);
        assert_eq!(
            i.colon(&mono(&[1, 0, 0])).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3], &[0, 1, 1]])
        );
        let bk = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]]);
        assert!(bk.colon(&mono(&[1, 1, 1])).unwrap().is_unit());
        assert_eq!(bk.colon(&Monomial::one(3)).unwrap(), bk);
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert!(i.contains(&mono(&[2, 1])));
        let i3 = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        assert!(!i3.contains(&mono(&[1, 0, 1])));
        let t = ideal(3, &[&[6, 0, 0], &[0, 7, 0], &[0, 0, 4], &[4, 1, 0]]);
        assert!(t.contains(&mono(&[4, 0, 4])));
    }

    #[test]
    fn artinian_gate() {
        assert!(ideal(2, &[&[2, 0], &[0, 3]]).is_artinian());
        assert!(!ideal(2, &[&[1, 1]]).is_artinian());
        assert!(ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 2, 0], &[1, 0, 1], &[0, 1, 1]])
            .is_artinian());
        assert!(matches!(
            ideal(2, &[&[1, 1]]).standard_monomials(1),
            Err(Error::NotArtinian { .. })
        ));
    }

    #[test]
    fn standard_monomial_examples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[0, 2]]).standard_monomials(2).unwrap(),
            vec![mono(&[1, 1])]
        );
        let bk = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]]);
        assert!(bk.standard_monomials(5).unwrap().is_empty());
        let k = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 2, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            k.standard_monomials(2).unwrap(),
            vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 2])]
        );
    }

    #[test]
    fn hilbert_examples() {
        let ci = MonomialIdeal::complete_intersection(&[2, 2, 2]).hilbert_data().unwrap();
        assert_eq!(ci.values, vec![1, 3, 3, 1]);
        assert_eq!(ci.socle_degree, 3);
        assert!(ci.symmetric && ci.unimodal);

        let k = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 2, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(k.hilbert_data().unwrap().values, vec![1, 3, 4, 3, 1]);

        let bk = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]]);
        let h = bk.hilbert_data().unwrap();
        assert_eq!(h.values, vec![1, 3, 6, 6, 3]);
        assert!(!h.symmetric);
        assert!(h.unimodal);

        assert_eq!(MonomialIdeal::unit(2).hilbert_data(), Err(Error::UnitIdeal));
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 3, 6, 6, 3]));
        assert!(is_unimodal(&[1, 1, 1]));
        assert!(!is_unimodal(&[1, 3, 2, 3, 1]));
    }

    #[test]
    fn split_examples() {
        let k = ideal(3, &[&[4, 0, 0], &[0, 2, 0], &[0, 0, 4], &[3, 1, 0], &[3, 0, 1]]);
        assert!(verify_split(&k, &mono(&[3, 0, 0])).unwrap());
        assert!(verify_split(&k, &Monomial::one(3)).unwrap());
        assert!(verify_split(&k, &mono(&[0, 2, 0])).unwrap());
    }

    #[test]
    fn json_shape() {
        let i = ideal(2, &[&[0, 3], &[2, 0]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"n":2,"gens":[[2,0],[0,3]]}"#);
        let back: MonomialIdeal = serde_json::from_str(r#"{"n":2,"gens":[[0,3],[2,0],[3,0]]}"#).unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<MonomialIdeal>(r#"{"n":2,"gens":[[1]]}"#).is_err());
    }
}
