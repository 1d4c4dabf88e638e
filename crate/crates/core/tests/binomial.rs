mod common;

use monodec::binomial::{
    hilbert_by_span, kprime_from_table, kprime_gens, reduce, s_pair_check, BinomialFamily,
    PolyIdeal, DEFAULT_DIMENSION_CAP,
};
use monodec::lefschetz::{has_slp, CheckOptions, Property};
use monodec::parse::{parse_polynomial, parse_polynomials};
use monodec::polynomial::{rational, Polynomial};
use monodec::tables::{enumerate_tables, lemma31_ideal, Table};
use monodec::{HilbertData, Monomial};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const CAP: usize = DEFAULT_DIMENSION_CAP;

fn int(c: i64) -> BigRational {
    rational(c, 1)
}

/// Every `(d, α)` with `n = 3`, `1 ≤ d_i ≤ max_d`, `0 ≤ α_i ≤ d_i` and
/// `d_1 = α_2 + α_3`.
fn small_families(max_d: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for d2 in 1..=max_d {
        for d3 in 1..=max_d {
            for a2 in 0..=d2 {
                for a3 in 0..=d3 {
                    let d1 = a2 + a3;
                    if d1 == 0 || d1 > max_d {
                        continue;
                    }
                    for a1 in 0..=d1 {
                        out.push((vec![d1, d2, d3], vec![a1, a2, a3]));
                    }
                }
            }
        }
    }
    out
}

fn strings(gens: &[Polynomial]) -> Vec<String> {
    let mut v: Vec<String> = gens.iter().map(ToString::to_string).collect();
    v.sort();
    v
}

#[test]
fn reduction_examples() {
    let (_, fam) = parse_polynomials("x^2 + y^2, y^2, x").unwrap();
    let x2 = parse_polynomial("x^2", 2).unwrap();
    assert!(reduce(&x2, &fam).is_zero());
    let f = BinomialFamily::new(&[3, 3, 3], &[2, 1, 2], int(1)).unwrap();
    let ideal = f.ideal();
    let initial = ideal.initial_ideal().unwrap();
    for m in initial.standard_basis().unwrap().iter() {
        let p = Polynomial::monomial(m.clone());
        assert_eq!(ideal.reduce(&p), p);
    }
    for i in 1..3 {
        let mut e = vec![0u32; 3];
        e[0] = 3;
        e[i] = f.d()[i] - f.alpha()[i];
        assert!(ideal.reduce(&Polynomial::monomial(Monomial::new(e))).is_zero());
    }
}

#[test]
fn generator_fixtures() {
    let remark = kprime_gens(&[3, 3, 3], &[2, 1, 2], int(1)).unwrap();
    assert_eq!(
        strings(&remark),
        strings(&parse_polynomials("x^3 + y*z^2, y^3, z^3, x*y^2, x*z").unwrap().1)
    );
    // With α_1 = 0 only the binomial and the pure powers remain.
    let flat = kprime_gens(&[3, 3, 3], &[0, 1, 2], int(1)).unwrap();
    assert_eq!(strings(&flat), strings(&parse_polynomials("x^3 + y*z^2, y^3, z^3").unwrap().1));

    let t = Table::single_row(&[6, 7, 4], &[2, 6, 0]);
    let gens = kprime_from_table(&t, &int(1)).unwrap();
    assert_eq!(
        strings(&gens),
        strings(&parse_polynomials("x^6 + y^6, y^7, z^4, x^4*y").unwrap().1)
    );
    assert_eq!(
        strings(&gens),
        strings(&kprime_gens(&[6, 7, 4], &[2, 6, 0], int(1)).unwrap())
    );
    // c = 0 gives back the monomial ideal.
    let mono = kprime_from_table(&t, &BigRational::zero()).unwrap();
    assert!(mono.iter().all(Polynomial::is_monomial));
    assert_eq!(PolyIdeal::new(3, mono).unwrap().initial_ideal().unwrap(), t.ideal().unwrap());
}

#[test]
fn broken_generating_set_is_detected() {
    let (n, gens) = parse_polynomials("x^2 + y^2, x*y").unwrap();
    assert!(!s_pair_check(&gens));
    // Oracle: a Gröbner basis would give the Hilbert function of its
    // initial ideal; the span computation disagrees.
    let ideal = PolyIdeal::new(n, gens.clone()).unwrap();
    let initial = ideal.initial_ideal().unwrap();
    let differs = (0..5u32).any(|t| {
        let by_initial = common::brute_standard(&initial, t).len();
        by_initial != common::span_hf(n, &gens, t)
    });
    assert!(differs);
    assert!(ideal.hilbert_data(CAP).is_err());
}

#[test]
fn small_family_sweep() {
    let families = small_families(3);
    assert!(!families.is_empty());
    for (d, alpha) in families {
        let k = lemma31_ideal(&d, &alpha).unwrap();
        if k.is_unit() {
            continue;
        }
        for c in [1, -1, 2] {
            let f = BinomialFamily::new(&d, &alpha, int(c)).unwrap();
            let ideal = f.ideal();
            let tag = format!("d={d:?} alpha={alpha:?} c={c}");
            assert!(ideal.is_groebner(), "{tag}");
            assert_eq!(ideal.initial_ideal().unwrap(), k, "{tag}");
            assert!(f.verify_colon_identity(CAP).unwrap(), "{tag}");
            assert_eq!(ideal.socle_dimension(CAP).unwrap(), 1, "{tag}");
            let h = ideal.hilbert_data(CAP).unwrap();
            assert_eq!(h, k.hilbert_data().unwrap(), "{tag}");
            let span = hilbert_by_span(3, ideal.gens(), h.socle_degree + 1);
            assert_eq!(HilbertData::from_values(span), h, "{tag}");
        }
    }
}

#[test]
fn slp_transfers_from_the_initial_ideal() {
    for (d, alpha) in small_families(3) {
        let k = lemma31_ideal(&d, &alpha).unwrap();
        if k.is_unit() || !has_slp(&k).unwrap() {
            continue;
        }
        let f = BinomialFamily::new(&d, &alpha, int(1)).unwrap();
        let r = f
            .ideal()
            .check_lefschetz(Property::Strong, CheckOptions::default(), CAP)
            .unwrap();
        assert!(r.report.verdict, "d={d:?} alpha={alpha:?}");
    }
}

#[test]
fn socle_dimension_matches_span_oracle() {
    for (d, alpha, c) in [
        (vec![3, 3, 3], vec![2, 1, 2], 1),
        (vec![4, 3, 4], vec![3, 1, 3], 1),
        (vec![2, 2, 2], vec![1, 1, 1], -1),
    ] {
        let f = BinomialFamily::new(&d, &alpha, int(c)).unwrap();
        let ideal = f.ideal();
        let top = ideal.hilbert_data(CAP).unwrap().socle_degree;
        assert_eq!(
            ideal.socle_dimension(CAP).unwrap(),
            common::span_socle_dimension(3, ideal.gens(), top + 1)
        );
    }
}

#[test]
fn two_row_tables_deform_without_becoming_gorenstein() {
    let mut found = None;
    for t in enumerate_tables(3, 2, 4) {
        let k = t.ideal().unwrap();
        if k.is_unit() {
            continue;
        }
        let gens = kprime_from_table(&t, &int(1)).unwrap();
        let ideal = PolyIdeal::new(3, gens).unwrap();
        assert!(ideal.is_groebner(), "{t:?}");
        assert_eq!(ideal.initial_ideal().unwrap(), k, "{t:?}");
        let h = ideal.hilbert_data(CAP).unwrap();
        assert_eq!(h, k.hilbert_data().unwrap(), "{t:?}");
        let socle = ideal.socle_dimension(CAP).unwrap();
        if socle > 1 && found.is_none() {
            let oracle = common::span_socle_dimension(3, ideal.gens(), h.socle_degree + 1);
            assert_eq!(socle, oracle, "{t:?}");
            found = Some((t, socle));
        }
    }
    let (t, socle) = found.expect("some two-row table family is not Gorenstein");
    println!("first non-Gorenstein two-row family: {t:?}, socle dimension {socle}");
}

fn random_reduced(d: &[u32]) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    let d = d.to_vec();
    let exps = d.iter().map(|&di| 0..di).collect::<Vec<_>>();
    prop::collection::vec((-5i64..=5, exps), 1..8)
}

fn poly(n: usize, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    Polynomial::from_terms(n, terms.iter().map(|(c, e)| (int(*c), Monomial::new(e.clone()))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_keeps_terms_apart(terms in random_reduced(&[4, 3, 4]), which in 0usize..3) {
        let (d, alpha) = [
            (vec![4, 3, 4], vec![3, 1, 3]),
            (vec![4, 3, 4], vec![1, 2, 2]),
            (vec![4, 3, 4], vec![4, 3, 1]),
        ][which].clone();
        let f = BinomialFamily::new(&d, &alpha, int(2)).unwrap();
        let p = poly(3, &terms);
        let shifted = p.mul_monomial(&Monomial::var_power(3, 0, alpha[0]));
        prop_assert_eq!(f.substitute_leading(&shifted).len(), p.len());
    }

    #[test]
    fn reduce_is_idempotent_and_linear(
        a in random_reduced(&[6, 6, 6]),
        b in random_reduced(&[6, 6, 6]),
        s in -4i64..=4,
    ) {
        let f = BinomialFamily::new(&[4, 3, 4], &[3, 1, 3], int(-1)).unwrap();
        let ideal = f.ideal();
        let p = poly(3, &a);
        let q = poly(3, &b);
        let rp = ideal.reduce(&p);
        prop_assert_eq!(ideal.reduce(&rp), rp.clone());
        let combo = p.scale(&int(s)).add(&q);
        let expected = rp.scale(&int(s)).add(&ideal.reduce(&q));
        prop_assert_eq!(ideal.reduce(&combo), expected);
    }
}
