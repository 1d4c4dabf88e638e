//! Gorenstein deformations of table ideals by a single binomial.
//!
//! For `d_1 = α_2 + ... + α_n` and a nonzero `c`, the family is
//!
//! ```text
//! K' = (x_1^{d_1} + c·x_2^{α_2}···x_n^{α_n}, x_2^{d_2}, ..., x_n^{d_n})
//!      + x_1^{d_1-α_1}·(x_2^{d_2-α_2}, ..., x_n^{d_n-α_n})
//! ```
//!
//! and `K' = 𝔞 : (x_1^{α_1})` where `𝔞` is the complete intersection of the
//! binomial and the pure powers. Everything here is exact: reduction runs over
//! the rationals under graded lex with `x_1 > ... > x_n`, and quotient
//! computations are linear algebra on a standard-monomial basis.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{HilbertData, MonomialIdeal, StandardBasis};
use crate::lefschetz::{self, CheckOptions, LefschetzReport, Property};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::par::{self, Execution};
use crate::polynomial::Polynomial;
use crate::rank::{self, IntMatrix};
use crate::tables::{check_gorenstein_params, lemma31_ideal, Table};

/// Largest quotient (as a vector space) the linear-algebra routines will build.
pub const DEFAULT_DIMENSION_CAP: usize = 20_000;

type RatMatrix = Vec<Vec<BigRational>>;

/// Division with remainder by `divisors` in the order given. Zero divisors are
/// ignored. When `divisors` is a Gröbner basis the result is the normal form.
pub fn reduce(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut p = p.clone();
    let mut rem = Polynomial::zero(p.nvars());
    while let Some((lm, lc)) = p.pop_leading() {
        let hit = divisors.iter().find_map(|g| {
            let gm = g.leading_monomial()?;
            lm.checked_div(gm).map(|q| (g, q))
        });
        match hit {
            Some((g, q)) => {
                let glc = g.leading_coefficient().expect("nonzero divisor");
                let f = -(&lc / glc);
                // The leading term cancels by construction; only the tail is added.
                let mut tail = g.clone();
                tail.pop_leading();
                p.add_scaled_shift(&tail, &f, &q);
            }
            None => rem.add_term(lm, lc),
        }
    }
    rem
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, gm) = match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Polynomial::zero(f.nvars()),
    };
    let l = fm.lcm(gm);
    let fc = f.leading_coefficient().expect("nonzero");
    let gc = g.leading_coefficient().expect("nonzero");
    let mut out = Polynomial::zero(f.nvars());
    out.add_scaled_shift(f, &fc.recip(), &l.checked_div(fm).expect("lcm"));
    out.add_scaled_shift(g, &-gc.recip(), &l.checked_div(gm).expect("lcm"));
    out
}

/// Buchberger's criterion over every pair: all S-polynomials reduce to zero.
pub fn s_pair_check(gens: &[Polynomial]) -> bool {
    (0..gens.len()).all(|a| {
        (a + 1..gens.len()).all(|b| reduce(&s_polynomial(&gens[a], &gens[b]), gens).is_zero())
    })
}

/// Ideal of leading monomials of `gens`.
pub fn initial_ideal(n: usize, gens: &[Polynomial]) -> Result<MonomialIdeal> {
    MonomialIdeal::new(gens.iter().filter_map(|g| g.leading_monomial().cloned()), n)
}

/// Hilbert function of `R/(gens)` in degrees `0..=max_degree`, computed from
/// the span of all `monomial · generator` products in each degree. Generators
/// must be homogeneous. Independent of any Gröbner computation.
pub fn hilbert_by_span(n: usize, gens: &[Polynomial], max_degree: u32) -> Vec<u64> {
    assert!(gens.iter().all(Polynomial::is_homogeneous), "homogeneous generators required");
    let gens: Vec<(&Polynomial, u32)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g, g.leading_monomial().expect("nonzero").degree()))
        .collect();
    (0..=max_degree)
        .map(|t| {
            let cols = monomials_of_degree(n, t);
            let col_of: std::collections::HashMap<&Monomial, usize> =
                cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows: RatMatrix = Vec::new();
            for &(g, dg) in &gens {
                if dg > t {
                    continue;
                }
                for w in monomials_of_degree(n, t - dg) {
                    let mut row = vec![BigRational::zero(); cols.len()];
                    for (m, c) in g.mul_monomial(&w).terms() {
                        row[col_of[m]] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let r = rank::bareiss_rank(&IntMatrix::from_rational_rows(&rows, cols.len()));
            (cols.len() - r) as u64
        })
        .collect()
}

fn rat_rank(rows: &RatMatrix, cols: usize) -> usize {
    rank::bareiss_rank(&IntMatrix::from_rational_rows(rows, cols))
}

fn mat_mul(a: &RatMatrix, b: &RatMatrix, inner: usize, cols: usize) -> RatMatrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            acc + &row[k] * &b[k][j]
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// A homogeneous polynomial ideal with an Artinian initial ideal.
#[derive(Clone, Debug)]
pub struct PolyIdeal {
    n: usize,
    gens: Vec<Polynomial>,
}

/// `R/I` with a standard-monomial basis; requires `gens` to be a Gröbner basis.
struct Quotient<'a> {
    gens: &'a [Polynomial],
    basis: StandardBasis,
}

impl<'a> Quotient<'a> {
    fn coords(&self, p: &Polynomial, degree: u32) -> Vec<BigRational> {
        let r = reduce(p, self.gens);
        let mut v = vec![BigRational::zero(); self.basis.dim(degree)];
        for (m, c) in r.terms() {
            assert_eq!(m.degree(), degree, "inhomogeneous normal form");
            let pos = self.basis.position(m).expect("normal form outside the basis");
            v[pos] = c.clone();
        }
        v
    }

    /// Matrix of multiplication by `m` from degree `t`; rows index the target.
    fn monomial_map(&self, m: &Monomial, t: u32) -> RatMatrix {
        let target = t + m.degree();
        let cols: Vec<Vec<BigRational>> = self
            .basis
            .degree(t)
            .iter()
            .map(|b| self.coords(&Polynomial::monomial(b.mul(m)), target))
            .collect();
        transpose(&cols, self.basis.dim(target))
    }

    /// `[M_{x_1}, ..., M_{x_n}]` from degree `t`.
    fn variable_maps(&self, t: u32, n: usize) -> Vec<RatMatrix> {
        (0..n)
            .map(|var| self.monomial_map(&Monomial::var_power(n, var, 1), t))
            .collect()
    }
}

fn weighted_sum(maps: &[RatMatrix], weights: &[i64], rows: usize, cols: usize) -> RatMatrix {
    let mut acc = vec![vec![BigRational::zero(); cols]; rows];
    for (m, &w) in maps.iter().zip(weights) {
        let w = BigRational::from_integer(w.into());
        for (r, row) in m.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    acc[r][c] += v * &w;
                }
            }
        }
    }
    acc
}

/// Number of linear forms tried by [`PolyIdeal::check_lefschetz`].
pub const FORM_ATTEMPTS: usize = 8;

/// Coefficient vectors of the linear forms `ℓ = Σ w_i x_i` tried in order:
/// the sum of the variables first, then fixed pseudo-random positive weights.
pub fn candidate_forms(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![1; n]];
    for j in 1..FORM_ATTEMPTS as i64 {
        out.push(
            (0..n as i64)
                .map(|i| 1 + (j * 37 + i * 61 + i * i * j * 13) % 97)
                .collect(),
        );
    }
    out
}

/// Outcome of a Lefschetz check on a non-monomial quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzSearch {
    /// The first form with maximal rank everywhere, if any was found.
    pub form: Option<Vec<i64>>,
    /// Report for `form`, or for the sum of the variables when none worked.
    pub report: LefschetzReport,
}

fn transpose(cols: &[Vec<BigRational>], rows: usize) -> RatMatrix {
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

impl PolyIdeal {
    pub fn new(n: usize, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::VariableCount {
                    expected: n,
                    found: g.nvars(),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidParameters(format!(
                    "generator {g} is not homogeneous"
                )));
            }
        }
        Ok(PolyIdeal {
            n,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_groebner(&self) -> bool {
        s_pair_check(&self.gens)
    }

    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        initial_ideal(self.n, &self.gens)
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.gens)
    }

    fn quotient(&self, cap: usize) -> Result<Quotient<'_>> {
        if !self.is_groebner() {
            return Err(Error::NotGroebner);
        }
        let initial = self.initial_ideal()?;
        if initial.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let basis = initial.standard_basis()?;
        if basis.total_dim() > cap {
            return Err(Error::DimensionCap {
                dimension: basis.total_dim(),
                cap,
            });
        }
        Ok(Quotient {
            gens: &self.gens,
            basis,
        })
    }

    /// Hilbert function read off the initial ideal (valid for a Gröbner basis).
    pub fn hilbert_data(&self, cap: usize) -> Result<HilbertData> {
        let q = self.quotient(cap)?;
        Ok(HilbertData::from_values(q.basis.dimensions()))
    }

    /// `dim_k (0 : 𝔪)` in `R/I`, summed over all degrees.
    pub fn socle_dimension(&self, cap: usize) -> Result<usize> {
        let q = self.quotient(cap)?;
        let n = self.n;
        let degrees: Vec<u32> = (0..=q.basis.socle_degree()).collect();
        let per_degree = par::map(Execution::default(), &degrees, |&t| {
            let cols = q.basis.dim(t);
            let mut stacked: RatMatrix = Vec::new();
            for var in 0..n {
                stacked.extend(q.monomial_map(&Monomial::var_power(n, var, 1), t));
            }
            cols - rat_rank(&stacked, cols)
        });
        Ok(per_degree.into_iter().sum())
    }

    /// Lefschetz sweep for each form in [`candidate_forms`] until one has
    /// maximal rank everywhere. A found form proves the property; `None` only
    /// says none of the tried forms works.
    pub fn check_lefschetz(
        &self,
        property: Property,
        options: CheckOptions,
        cap: usize,
    ) -> Result<LefschetzSearch> {
        let q = self.quotient(cap)?;
        let socle = q.basis.socle_degree();
        let degrees: Vec<u32> = (0..socle).collect();
        let var_maps = par::map(options.execution, &degrees, |&t| q.variable_maps(t, self.n));
        let mut first = None;
        for form in candidate_forms(self.n) {
            let report = sweep_form(&q, &var_maps, &form, property, options);
            if report.verdict {
                return Ok(LefschetzSearch {
                    form: Some(form),
                    report,
                });
            }
            first.get_or_insert(report);
        }
        Ok(LefschetzSearch {
            form: None,
            report: first.expect("at least one candidate form"),
        })
    }

    /// Lefschetz sweep for the single form `ℓ = Σ weights_i x_i`.
    pub fn check_lefschetz_form(
        &self,
        property: Property,
        options: CheckOptions,
        cap: usize,
        weights: &[i64],
    ) -> Result<LefschetzReport> {
        if weights.len() != self.n {
            return Err(Error::VariableCount {
                expected: self.n,
                found: weights.len(),
            });
        }
        let q = self.quotient(cap)?;
        let degrees: Vec<u32> = (0..q.basis.socle_degree()).collect();
        let var_maps = par::map(options.execution, &degrees, |&t| q.variable_maps(t, self.n));
        Ok(sweep_form(&q, &var_maps, weights, property, options))
    }
}

fn sweep_form(
    q: &Quotient<'_>,
    var_maps: &[Vec<RatMatrix>],
    weights: &[i64],
    property: Property,
    options: CheckOptions,
) -> LefschetzReport {
    let hilbert = HilbertData::from_values(q.basis.dimensions());
    let socle = hilbert.socle_degree;
    let dim = |t: u32| q.basis.dim(t);
    let maps: Vec<RatMatrix> = (0..socle)
        .map(|t| weighted_sum(&var_maps[t as usize], weights, dim(t + 1), dim(t)))
        .collect();
    let max_d = lefschetz::sweep_pairs(property, socle)
        .iter()
        .map(|p| p.0)
        .max()
        .unwrap_or(0);
    // chains[i][d - 1] = ℓ^d on degree i.
    let starts: Vec<u32> = (0..socle).collect();
    let chains: Vec<Vec<IntMatrix>> = par::map(options.execution, &starts, |&i| {
        let mut out = Vec::new();
        let mut acc = maps[i as usize].clone();
        for d in 1..=max_d.min(socle - i) {
            if d > 1 {
                acc = mat_mul(&maps[(i + d - 1) as usize], &acc, dim(i + d - 1), dim(i));
            }
            out.push(IntMatrix::from_rational_rows(&acc, dim(i)));
        }
        out
    });
    lefschetz::sweep(property, hilbert, options, |d, i| {
        chains[i as usize][(d - 1) as usize].clone()
    })
}

/// Parameters `(d, α, c)` of one member of the binomial family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFamily {
    d: Vec<u32>,
    alpha: Vec<u32>,
    c: BigRational,
}

impl BinomialFamily {
    /// Requires `n ≥ 2`, `0 ≤ α_i ≤ d_i`, `d_1 = α_2 + ... + α_n ≥ 1`, `c ≠ 0`.
    pub fn new(d: &[u32], alpha: &[u32], c: BigRational) -> Result<Self> {
        check_gorenstein_params(d, alpha)?;
        if d.len() < 2 {
            return Err(Error::InvalidParameters("need at least two variables".into()));
        }
        if d[0] == 0 {
            return Err(Error::InvalidParameters(
                "d_1 = 0 makes the binomial a constant".into(),
            ));
        }
        if c.is_zero() {
            return Err(Error::InvalidParameters("c must be nonzero".into()));
        }
        Ok(BinomialFamily {
            d: d.to_vec(),
            alpha: alpha.to_vec(),
            c,
        })
    }

    pub fn nvars(&self) -> usize {
        self.d.len()
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// `x_1^{d_1} + c·x_2^{α_2}···x_n^{α_n}`.
    pub fn binomial(&self) -> Polynomial {
        binomial(&self.d, &self.alpha, &self.c)
    }

    /// One pass of `x_1^{d_1} ↦ -c·x_2^{α_2}···x_n^{α_n}` on every term with
    /// `x_1`-degree at least `d_1`; no further reduction.
    pub fn substitute_leading(&self, p: &Polynomial) -> Polynomial {
        let n = self.nvars();
        let lead = Monomial::var_power(n, 0, self.d[0]);
        let mut tail = self.alpha.clone();
        tail[0] = 0;
        let tail = Monomial::new(tail);
        let mut out = Polynomial::zero(n);
        for (m, c) in p.terms() {
            match m.checked_div(&lead) {
                Some(rest) => out.add_term(rest.mul(&tail), -(c * &self.c)),
                None => out.add_term(m.clone(), c.clone()),
            }
        }
        out
    }

    fn pure_powers(&self) -> Vec<Monomial> {
        let n = self.nvars();
        (1..n).map(|j| Monomial::var_power(n, j, self.d[j])).collect()
    }

    fn products(&self) -> Vec<Monomial> {
        let n = self.nvars();
        (1..n)
            .map(|j| {
                let mut e = vec![0u32; n];
                e[0] = self.d[0] - self.alpha[0];
                e[j] = self.d[j] - self.alpha[j];
                Monomial::new(e)
            })
            .collect()
    }

    /// The complete intersection `𝔞` = binomial + pure powers of `x_2..x_n`.
    pub fn ambient(&self) -> PolyIdeal {
        let mut gens = vec![self.binomial()];
        gens.extend(self.pure_powers().into_iter().map(Polynomial::monomial));
        PolyIdeal {
            n: self.nvars(),
            gens,
        }
    }

    /// Generators of `K'`: the binomial first, then the minimal monomial
    /// generators not divisible by `x_1^{d_1}`, in canonical order.
    pub fn generators(&self) -> Vec<Polynomial> {
        let n = self.nvars();
        let lead = Monomial::var_power(n, 0, self.d[0]);
        let mut mons: Vec<Monomial> = self.pure_powers();
        mons.extend(self.products());
        let minimal = MonomialIdeal::new(mons, n).expect("variable counts agree");
        let mut gens = vec![self.binomial()];
        gens.extend(
            minimal
                .gens()
                .iter()
                .filter(|m| !lead.divides(m))
                .cloned()
                .map(Polynomial::monomial),
        );
        gens
    }

    pub fn ideal(&self) -> PolyIdeal {
        PolyIdeal {
            n: self.nvars(),
            gens: self.generators(),
        }
    }

    /// The monomial ideal the family deforms; equals `in(K')` when the
    /// generators form a Gröbner basis.
    pub fn monomial_ideal(&self) -> Result<MonomialIdeal> {
        lemma31_ideal(&self.d, &self.alpha)
    }

    /// Checks `K' = 𝔞 : (x_1^{α_1})` degree by degree inside `R/𝔞`: the image
    /// of `K'` must lie in the kernel of multiplication by `x_1^{α_1}` and have
    /// the same dimension.
    pub fn verify_colon_identity(&self, cap: usize) -> Result<bool> {
        let n = self.nvars();
        let ambient = self.ambient();
        let q = ambient.quotient(cap)?;
        let mult = Monomial::var_power(n, 0, self.alpha[0]);
        let products = self.products();
        let degrees: Vec<u32> = (0..=q.basis.socle_degree()).collect();
        let holds = par::map(Execution::default(), &degrees, |&t| {
            let dim = q.basis.dim(t);
            let kernel_dim = dim - rat_rank(&q.monomial_map(&mult, t), dim);
            let mut image: RatMatrix = Vec::new();
            for p in &products {
                let Some(rest) = t.checked_sub(p.degree()) else {
                    continue;
                };
                for b in q.basis.degree(rest) {
                    let v = b.mul(p);
                    if !reduce(&Polynomial::monomial(v.mul(&mult)), ambient.gens()).is_zero() {
                        return false;
                    }
                    image.push(q.coords(&Polynomial::monomial(v), t));
                }
            }
            rat_rank(&image, dim) == kernel_dim
        });
        Ok(holds.into_iter().all(|h| h))
    }

    pub fn certify(&self, options: CheckOptions, cap: usize) -> Result<GorensteinCertificate> {
        let ideal = self.ideal();
        let groebner = ideal.is_groebner();
        let initial = ideal.initial_ideal()?;
        let expected = self.monomial_ideal()?;
        let colon_identity = self.verify_colon_identity(cap)?;
        let (hilbert, socle_dimension, slp) = if groebner {
            let slp = ideal.check_lefschetz(Property::Strong, options, cap)?;
            (
                Some(slp.report.hilbert.clone()),
                Some(ideal.socle_dimension(cap)?),
                Some(slp),
            )
        } else {
            (None, None, None)
        };
        let gorenstein = socle_dimension.map(|s| s == 1);
        Ok(GorensteinCertificate {
            d: self.d.clone(),
            alpha: self.alpha.clone(),
            c: self.c.to_string(),
            generators: ideal.gens.iter().map(ToString::to_string).collect(),
            groebner,
            initial_ideal: initial.render(),
            initial_matches_monomial: initial == expected,
            colon_identity,
            hilbert: hilbert.as_ref().map(|h| h.values.clone()),
            symmetric: hilbert.as_ref().map(|h| h.symmetric),
            socle_dimension,
            gorenstein,
            slp: slp.as_ref().map(|s| s.report.verdict),
            lefschetz_form: slp.and_then(|s| s.form),
        })
    }
}

fn binomial(d: &[u32], alpha: &[u32], c: &BigRational) -> Polynomial {
    let n = d.len();
    let mut tail = alpha.to_vec();
    tail[0] = 0;
    let mut p = Polynomial::monomial(Monomial::var_power(n, 0, d[0]));
    p.add_term(Monomial::new(tail), c.clone());
    p
}

/// Everything the `gorenstein` report prints. Fields that need a Gröbner
/// basis are `None` when the S-pair check fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinCertificate {
    pub d: Vec<u32>,
    pub alpha: Vec<u32>,
    pub c: String,
    pub generators: Vec<String>,
    pub groebner: bool,
    pub initial_ideal: String,
    pub initial_matches_monomial: bool,
    pub colon_identity: bool,
    pub hilbert: Option<Vec<u64>>,
    pub symmetric: Option<bool>,
    pub socle_dimension: Option<usize>,
    pub gorenstein: Option<bool>,
    pub slp: Option<bool>,
    /// Weights of the linear form that witnessed the SLP.
    pub lefschetz_form: Option<Vec<i64>>,
}

pub fn kprime_gens(d: &[u32], alpha: &[u32], c: BigRational) -> Result<Vec<Polynomial>> {
    Ok(BinomialFamily::new(d, alpha, c)?.generators())
}

/// The exponents `(α_1, ..., α_n)` of the binomial attached to a table:
/// `α_1 = α_{1,1}`, `α_2` collects the first two rows of column 2 (just the
/// first when `s = 1`), and `α_j = α_{1,j}` for `j ≥ 3`.
pub fn table_binomial_exponents(t: &Table) -> Result<Vec<u32>> {
    if t.s == 0 || t.n < 2 {
        return Err(Error::InvalidTable(
            "a binomial deformation needs s >= 1 and n >= 2".into(),
        ));
    }
    let mut alpha: Vec<u32> = (1..=t.n).map(|j| t.a(1, j)).collect();
    alpha[1] += t.a(2, 2);
    Ok(alpha)
}

/// Generators of the deformation of `K(T)`: `x_1^{d_1}` is replaced by the
/// binomial, the other minimal generators are kept. With `c = 0` this is
/// just `K(T)`.
pub fn kprime_from_table(t: &Table, c: &BigRational) -> Result<Vec<Polynomial>> {
    let ideal = t.ideal()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = t.n;
    if c.is_zero() {
        return Ok(ideal.gens().iter().cloned().map(Polynomial::monomial).collect());
    }
    let alpha = table_binomial_exponents(t)?;
    let tail: u32 = alpha[1..].iter().sum();
    if tail != t.d[0] || t.d[0] == 0 {
        return Err(Error::InvalidTable(format!(
            "binomial x_1^{} + c*... is not homogeneous (tail degree {tail})",
            t.d[0]
        )));
    }
    let lead = Monomial::var_power(n, 0, t.d[0]);
    let mut gens = vec![binomial(&t.d, &alpha, c)];
    gens.extend(
        ideal
            .gens()
            .iter()
            .filter(|&m| *m != lead)
            .cloned()
            .map(Polynomial::monomial),
    );
    Ok(gens)
}
