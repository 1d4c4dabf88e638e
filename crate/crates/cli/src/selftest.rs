//! Built-in fixture suite: published examples checked end to end.

use std::fmt::Write as _;

use monodec::binomial::{kprime_from_table, kprime_gens, PolyIdeal, DEFAULT_DIMENSION_CAP};
use monodec::decompose::{
    can_glue, centre_to_centre, family_product_linear, family_squares_squared, find_witness,
    generators_without, glue_candidates, WitnessMode,
};
use monodec::lefschetz::{has_narrow_slp, has_slp, has_wlp, CheckOptions};
use monodec::maci::{
    fixed_count, maci_ideal, predict_wlp, scan, thm51_ideal, twin_peak_values, ScanOptions,
};
use monodec::polynomial::rational;
use monodec::tables::{enumerate_tables, lemma31_ideal};
use monodec::{
    glue, parse_ideal, parse_ideal_with_n, parse_monomial, parse_polynomial, split,
    BinomialFamily, MaciParams, Monomial, MonomialIdeal, Table,
};
use serde::Serialize;

use crate::report::{Outcome, Status};

type Check = Result<(), String>;
type NamedCheck = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn e(err: monodec::Error) -> String {
    err.to_string()
}

fn ideal(s: &str) -> Result<MonomialIdeal, String> {
    parse_ideal(s).map_err(e)
}

fn ideal_n(s: &str, n: usize) -> Result<MonomialIdeal, String> {
    parse_ideal_with_n(s, n).map_err(e)
}

fn mono(s: &str, n: usize) -> Result<Monomial, String> {
    parse_monomial(s, n).map_err(e)
}

fn p(a: u32, b: u32, c: u32) -> Result<MaciParams, String> {
    MaciParams::new(a, b, c).map_err(e)
}

const EX48: &str = "x^3, y^3, z^5, x^2*y^2, x*z, y*z";
const BK: &str = "x^3, y^3, z^3, x*y*z";
const GLUED: &str = "x^4, y^2, z^4, x^3*y, x^3*z";

fn no_witness_example() -> Check {
    let k = ideal(EX48)?;
    let h = k.hilbert_data().map_err(e)?;
    ensure(h.values == [1, 3, 4, 3, 1], "Hilbert function 1,3,4,3,1")?;
    let deg2 = k.standard_monomials(2).map_err(e)?;
    ensure(deg2.len() == 4, "four standard monomials in degree 2")?;
    ensure(has_slp(&k).map_err(e)?, "SLP")?;
    ensure(
        find_witness(&k, WitnessMode::AllD).map_err(e)?.is_none(),
        "no witness for all d",
    )
}

fn fails_wlp() -> Check {
    let k = ideal(BK)?;
    ensure(k == maci_ideal(p(1, 1, 1)?).map_err(e)?, "equals R_{1,1,1}")?;
    ensure(!has_wlp(&k).map_err(e)?, "WLP fails")
}

fn complete_intersection_slp() -> Check {
    ensure(has_slp(&ideal("x^2, y^2, z^2")?).map_err(e)?, "SLP")
}

fn squares_squared() -> Check {
    let k0 = family_squares_squared(3).map_err(e)?;
    ensure(k0.gens().len() == 6, "six generators")?;
    ensure(has_wlp(&k0).map_err(e)?, "WLP for n = 3")?;
    let d = split(&k0, &mono("x^2", 3)?).map_err(e)?;
    ensure(d.j == ideal_n("x^2, y^2, z^2", 3)?, "J = (x^2, y^2, z^2)")?;
    ensure(d.i == ideal_n("x^2, y^4, z^4, y^2*z^2", 3)?, "I = (x^2) + (y^2, z^2)^2")
}

fn membership_and_colon() -> Check {
    let k = ideal("x^6, y^7, z^4, x^4*y")?;
    ensure(k.contains(&mono("x^4*z^4", 3)?), "x^4 z^4 in K")?;
    let k = ideal("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z")?;
    ensure(
        k.colon(&mono("x", 3)?).map_err(e)? == ideal_n("x, y^2, z^3, y*z", 3)?,
        "K : x",
    )
}

fn glue_example() -> Check {
    let i = ideal_n("x^3, y^2, z^4", 3)?;
    let j = ideal_n("x, y, z", 3)?;
    let m = mono("x^3", 3)?;
    ensure(
        generators_without(&i, &m).map_err(e)? == ideal_n("y^2, z^4", 3)?,
        "I_m = (y^2, z^4)",
    )?;
    ensure(glue_candidates(&i, &j).map_err(e)?.len() == 3, "every generator glues")?;
    let g = glue(&i, &j, &m).map_err(e)?;
    ensure(g.k == ideal_n(GLUED, 3)?, "K = (x^4, y^2, z^4, x^3 y, x^3 z)")?;
    ensure(centre_to_centre(&g.k, &m).map_err(e)?, "centre-to-centre")?;
    let back = split(&g.k, &m).map_err(e)?;
    ensure(back.i == i && back.j == j, "split recovers I and J")?;
    ensure(
        find_witness(&g.k, WitnessMode::AllD).map_err(e)?.is_some(),
        "witness exists",
    )
}

fn smallest_gluing() -> Check {
    let g = glue(
        &ideal_n("x, y^3, z^4", 3)?,
        &ideal_n("x, y^2, z^3, y*z", 3)?,
        &mono("x", 3)?,
    )
    .map_err(e)?;
    ensure(
        g.k == ideal_n("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z", 3)?,
        "K = (x^2, y^3, z^4, x y^2, x z^3, x y z)",
    )
}

fn principal_gluing() -> Check {
    let m = mono("x*y", 3)?;
    let j = ideal_n("x^2, y, z^3", 3)?;
    let i = MonomialIdeal::principal(m.clone());
    ensure(can_glue(&i, &j, &m).map_err(e)?, "principal I glues")?;
    ensure(
        glue(&i, &j, &m).map_err(e)?.k == j.times_monomial(&m).map_err(e)?,
        "K = mJ",
    )
}

fn product_linear() -> Check {
    let k = family_product_linear(&[1, 1, 1]).map_err(e)?;
    ensure(has_narrow_slp(&k).map_err(e)?, "narrow SLP")?;
    ensure(k.hilbert_data().map_err(e)?.socle_degree == 3, "socle degree 3")
}

fn single_row_table() -> Check {
    let t = Table::single_row(&[6, 7, 4], &[2, 6, 0]);
    let k = t.ideal().map_err(e)?;
    ensure(k == ideal("x^6, y^7, z^4, x^4*y")?, "K(T) = (x^6, y^7, z^4, x^4 y)")?;
    ensure(t.predicted_socle().map_err(e)? == 12, "predicted socle 12")?;
    ensure(k.hilbert_data().map_err(e)?.socle_degree == 12, "socle degree 12")?;
    ensure(has_narrow_slp(&k).map_err(e)?, "narrow SLP")?;
    let t4 = Table::single_row(&[4, 2, 4], &[1, 1, 3]);
    ensure(t4.is_valid(), "second table valid")?;
    ensure(t4.predicted_socle().map_err(e)? == 6, "second table socle 6")
}

fn three_tables() -> Check {
    let expected = ideal_n("x^9, y^7, z^5, w^4", 4)?;
    for t in [
        Table::new(vec![12, 7, 5, 4], vec![vec![3, 4, 3, 2], vec![0, 3, 2, 1]]),
        Table::new(vec![12, 7, 5, 4], vec![vec![3, 7, 3, 2]]),
        Table::new(vec![9, 7, 5, 4], vec![]),
    ] {
        ensure(t.ideal().map_err(e)? == expected, "(x^9, y^7, z^5, w^4)")?;
    }
    Ok(())
}

fn lemma_ideal_extremes() -> Check {
    let d = [5, 3, 4];
    ensure(
        lemma31_ideal(&d, &[0, 1, 4]).map_err(e)? == MonomialIdeal::complete_intersection(&d),
        "alpha_1 = 0 gives the complete intersection",
    )?;
    ensure(lemma31_ideal(&d, &[5, 1, 4]).map_err(e)?.is_unit(), "unit ideal")
}

fn binomial_certificate() -> Check {
    let gens = kprime_gens(&[3, 3, 3], &[2, 1, 2], rational(1, 1)).map_err(e)?;
    let expected = ["x^3 + y*z^2", "y^3", "z^3", "x*y^2", "x*z"];
    ensure(gens.len() == expected.len(), "five generators")?;
    for s in expected {
        let q = parse_polynomial(s, 3).map_err(e)?;
        ensure(gens.contains(&q), s)?;
    }
    let f = BinomialFamily::new(&[3, 3, 3], &[2, 1, 2], rational(1, 1)).map_err(e)?;
    let cert = f.certify(CheckOptions::default(), DEFAULT_DIMENSION_CAP).map_err(e)?;
    ensure(cert.groebner, "Groebner basis")?;
    ensure(cert.initial_matches_monomial, "initial ideal")?;
    ensure(
        ideal_n(&cert.initial_ideal, 3)? == ideal_n("x^3, y^3, z^3, x*y^2, x*z", 3)?,
        "initial ideal (x^3, y^3, z^3, x y^2, x z)",
    )?;
    ensure(cert.colon_identity, "colon identity")?;
    ensure(cert.gorenstein == Some(true), "Gorenstein")?;
    ensure(cert.slp == Some(true), "SLP")
}

fn table_binomial() -> Check {
    let t = Table::single_row(&[6, 7, 4], &[2, 6, 0]);
    let gens = kprime_from_table(&t, &rational(1, 1)).map_err(e)?;
    let binomial = parse_polynomial("x^6 + y^6", 3).map_err(e)?;
    ensure(gens.contains(&binomial), "binomial x^6 + y^6")?;
    let k = PolyIdeal::new(3, gens).map_err(e)?;
    ensure(k.is_groebner(), "Groebner basis")?;
    ensure(k.initial_ideal().map_err(e)? == t.ideal().map_err(e)?, "initial ideal is K(T)")?;
    let cap = DEFAULT_DIMENSION_CAP;
    ensure(
        k.hilbert_data(cap).map_err(e)? == t.ideal().map_err(e)?.hilbert_data().map_err(e)?,
        "same Hilbert function",
    )
}

fn two_row_not_gorenstein() -> Check {
    for t in enumerate_tables(3, 2, 4) {
        if t.ideal().map_err(e)?.is_unit() {
            continue;
        }
        let k = PolyIdeal::new(3, kprime_from_table(&t, &rational(1, 1)).map_err(e)?).map_err(e)?;
        if k.socle_dimension(DEFAULT_DIMENSION_CAP).map_err(e)? > 1 {
            return Ok(());
        }
    }
    Err("every two-row deformation was Gorenstein".into())
}

fn almost_ci_slp() -> Check {
    for n in [3, 4] {
        ensure(has_slp(&thm51_ideal(n, 3).map_err(e)?).map_err(e)?, "SLP")?;
    }
    Ok(())
}

fn predictions() -> Check {
    ensure(!predict_wlp(p(1, 1, 1)?), "(1,1,1) predicted to fail")?;
    ensure(predict_wlp(p(4, 3, 2)?), "(4,3,2) predicted WLP")?;
    ensure(!predict_wlp(p(4, 4, 1)?), "(4,4,1) predicted to fail")?;
    for s in ["x^5, y^5, z^5, x^2*y^2*z", "x^7, y^7, z^7, x^3*y^2*z^2"] {
        ensure(has_slp(&ideal(s)?).map_err(e)?, s)?;
    }
    Ok(())
}

fn twin_peaks() -> Check {
    ensure(twin_peak_values(p(1, 1, 1)?).map_err(e)? == (6, 6), "(1,1,1): 6, 6")?;
    ensure(twin_peak_values(p(4, 4, 1)?).map_err(e)? == (54, 54), "(4,4,1): 54, 54")?;
    ensure(twin_peak_values(p(5, 2, 2)?).map_err(e)? == (54, 54), "(5,2,2): 54, 54")
}

fn fixed_counts() -> Check {
    for (q, swap) in [(p(5, 2, 2)?, (1, 2)), (p(4, 4, 1)?, (0, 1))] {
        let lo = fixed_count(q, 10, swap).map_err(e)?;
        let hi = fixed_count(q, 11, swap).map_err(e)?;
        ensure(lo.abs_diff(hi) == 2, "difference 2")?;
    }
    Ok(())
}

fn degree_nine_scan() -> Check {
    let report = scan(&[3, 9], &ScanOptions::default()).map_err(e)?;
    ensure(report.theorem_violations().count() == 0, "no theorem violations")?;
    for r in &report.rows {
        if !r.open_case {
            ensure(r.agree_wlp, "WLP matches the prediction")?;
        }
    }
    Ok(())
}

const CHECKS: &[NamedCheck] = &[
    ("no-witness example", no_witness_example),
    ("x^3, y^3, z^3, xyz fails WLP", fails_wlp),
    ("complete intersection has SLP", complete_intersection_slp),
    ("squares squared and its split", squares_squared),
    ("membership and colon", membership_and_colon),
    ("gluing example", glue_example),
    ("smallest gluing", smallest_gluing),
    ("principal gluing", principal_gluing),
    ("product-linear family", product_linear),
    ("single-row tables", single_row_table),
    ("three tables, one ideal", three_tables),
    ("table ideal extremes", lemma_ideal_extremes),
    ("binomial Gorenstein certificate", binomial_certificate),
    ("table deformation", table_binomial),
    ("two-row deformation not Gorenstein", two_row_not_gorenstein),
    ("x_1^{a-1}x_2 family has SLP", almost_ci_slp),
    ("WLP and SLP predictions", predictions),
    ("twin peaks", twin_peaks),
    ("fixed-monomial counts", fixed_counts),
    ("scan at d = 3 and 9", degree_nine_scan),
];

#[derive(Serialize)]
struct CheckResult {
    name: &'static str,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn run() -> Outcome {
    let results: Vec<CheckResult> = CHECKS
        .iter()
        .map(|&(name, f)| {
            let r = f();
            CheckResult {
                name,
                passed: r.is_ok(),
                error: r.err(),
            }
        })
        .collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut text = String::new();
    for r in &results {
        match &r.error {
            None => {
                let _ = writeln!(text, "PASS {}", r.name);
            }
            Some(err) => {
                let _ = writeln!(text, "FAIL {}: {err}", r.name);
            }
        }
    }
    let _ = write!(text, "{} of {} checks passed", results.len() - failed, results.len());
    Outcome::new(
        Status::from_verdict(failed == 0),
        serde_json::json!({ "checks": results, "passed": results.len() - failed, "failed": failed }),
        text,
    )
}
