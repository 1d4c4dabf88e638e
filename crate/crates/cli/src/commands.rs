//! One function per subcommand. Each returns an [`Outcome`] or a
//! [`Failure`]; printing happens in `main`.

use std::fmt::Write as _;

use monodec::binomial::BinomialFamily;
use monodec::decompose::{
    centre_to_centre, find_witness_with, glue_candidates, hilbert_compatible, WitnessMode,
};
use monodec::lefschetz::{check_lefschetz_with, CheckOptions};
use monodec::rank::RankStrategy;
use monodec::tables::Table;
use monodec::{
    glue, parse_ideal, parse_ideal_with_n, parse_monomial, parse_rational, split, Execution,
    HilbertData, LefschetzReport, Monomial, MonomialIdeal, Property,
};
use serde::Serialize;
use serde_json::json;

use crate::report::{to_value, Failure, Outcome, Status};

pub struct Context {
    pub dim_cap: usize,
    pub nvars: Option<usize>,
}

fn values_text(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn ideal_text(k: &MonomialIdeal) -> String {
    format!("({})", k.render())
}

/// Number of variables an ideal text needs: the declared count for JSON
/// input, otherwise the largest variable index.
fn required_vars(s: &str) -> Result<usize, Failure> {
    Ok(parse_text(s, None)?.nvars())
}

fn parse_text(s: &str, n: Option<usize>) -> Result<MonomialIdeal, Failure> {
    let s = s.trim();
    if s.starts_with('{') {
        let k: MonomialIdeal =
            serde_json::from_str(s).map_err(|e| Failure::input(format!("invalid ideal JSON: {e}")))?;
        if let Some(n) = n.filter(|&n| n != k.nvars()) {
            return Err(Failure::input(format!(
                "ideal JSON has {} variables, expected {n}",
                k.nvars()
            )));
        }
        return Ok(k);
    }
    Ok(match n {
        Some(n) => parse_ideal_with_n(s, n)?,
        None => parse_ideal(s)?,
    })
}

impl Context {
    pub fn ideal(&self, s: &str) -> Result<MonomialIdeal, Failure> {
        parse_text(s, self.nvars)
    }

    /// Parses several ideals in one common ring.
    fn ideals<const N: usize>(&self, texts: [&str; N]) -> Result<([MonomialIdeal; N], usize), Failure> {
        let n = match self.nvars {
            Some(n) => n,
            None => {
                let mut n = 1;
                for t in texts {
                    n = n.max(required_vars(t)?);
                }
                n
            }
        };
        let mut out = Vec::with_capacity(N);
        for t in texts {
            out.push(parse_text(t, Some(n))?);
        }
        Ok((out.try_into().expect("N ideals"), n))
    }

    fn monomial(&self, s: &str, n: usize) -> Result<Monomial, Failure> {
        Ok(parse_monomial(s, n)?)
    }

    /// Hilbert data, refusing quotients larger than the dimension cap.
    fn hilbert(&self, k: &MonomialIdeal) -> Result<HilbertData, Failure> {
        let h = k.hilbert_data()?;
        let dimension = h.total() as usize;
        if dimension > self.dim_cap {
            return Err(monodec::Error::DimensionCap {
                dimension,
                cap: self.dim_cap,
            }
            .into());
        }
        Ok(h)
    }
}

pub fn hilbert(ctx: &Context, ideal: &str, basis: bool) -> Result<Outcome, Failure> {
    let k = ctx.ideal(ideal)?;
    let h = ctx.hilbert(&k)?;
    let mut text = format!("ideal: {}\nHilbert function: {}\nsocle degree: {}\nsymmetric: {}\nunimodal: {}",
        ideal_text(&k), values_text(&h.values), h.socle_degree, h.symmetric, h.unimodal);
    let listing = if basis {
        let b = k.standard_basis()?;
        let by_degree: Vec<Vec<String>> = (0..=b.socle_degree())
            .map(|t| b.degree(t).iter().map(ToString::to_string).collect())
            .collect();
        for (t, ms) in by_degree.iter().enumerate() {
            let _ = write!(text, "\ndegree {t}: {}", ms.join(", "));
        }
        Some(by_degree)
    } else {
        None
    };
    let mut result = json!({
        "ideal": k,
        "rendered": k.render(),
        "hilbert": h.values,
        "socle_degree": h.socle_degree,
        "symmetric": h.symmetric,
        "unimodal": h.unimodal,
        "dimension": h.total(),
    });
    if let Some(l) = listing {
        result["standard_monomials"] = to_value(&l);
    }
    Ok(Outcome::new(Status::Ok, result, text))
}

fn report_text(r: &LefschetzReport) -> String {
    let mut text = format!(
        "{} Lefschetz: {}\nHilbert function: {}",
        r.property.as_str(),
        r.verdict,
        values_text(&r.hilbert.values)
    );
    for f in &r.failures {
        let _ = write!(
            text,
            "\nrank failure: l^{} from degree {} has rank {} < {}",
            f.d, f.i, f.rank, f.expected
        );
    }
    text
}

pub fn lefschetz(
    ctx: &Context,
    ideal: &str,
    property: Property,
    narrow: bool,
    exact: bool,
) -> Result<Outcome, Failure> {
    let k = ctx.ideal(ideal)?;
    ctx.hilbert(&k)?;
    let options = CheckOptions {
        execution: Execution::Parallel,
        strategy: if exact {
            RankStrategy::Exact
        } else {
            RankStrategy::ModularCertificate
        },
    };
    let report = check_lefschetz_with(&k, property, options)?;
    let mut text = report_text(&report);
    let mut result = to_value(&report);
    let mut ok = report.verdict;
    if narrow {
        let n = report.verdict && report.hilbert.symmetric;
        result["narrow"] = json!(n);
        let _ = write!(text, "\nnarrow sense: {n}");
        ok = n;
    }
    Ok(Outcome::new(Status::from_verdict(ok), result, text))
}

#[derive(Serialize)]
struct SplitResult {
    #[serde(flatten)]
    decomposition: monodec::Decomposition,
    hilbert_k: Vec<u64>,
    hilbert_i: Vec<u64>,
    hilbert_j: Vec<u64>,
}

pub fn split_cmd(ctx: &Context, ideal: &str, m: &str, d: Option<u32>) -> Result<Outcome, Failure> {
    let k = ctx.ideal(ideal)?;
    let m = ctx.monomial(m, k.nvars())?;
    let h = ctx.hilbert(&k)?;
    let mut dec = split(&k, &m)?;
    let jumps: Vec<u32> = match d {
        Some(d) => vec![d],
        None => (1..=h.socle_degree).collect(),
    };
    for d in jumps {
        dec.compatible.push((d, hilbert_compatible(&k, &m, d)?));
    }
    dec.centre_to_centre = centre_to_centre(&k, &m).ok();
    let result = SplitResult {
        hilbert_k: h.values.clone(),
        hilbert_i: dec.i.hilbert_values_or_zero()?,
        hilbert_j: dec.j.hilbert_values_or_zero()?,
        decomposition: dec,
    };
    let dec = &result.decomposition;
    let mut text = format!(
        "K = {}\nm = {}\nI = K + (m) = {}\nJ = K : (m) = {}\nHilbert K: {}\nHilbert I: {}\nHilbert J: {}",
        ideal_text(&dec.k),
        dec.m,
        ideal_text(&dec.i),
        ideal_text(&dec.j),
        values_text(&result.hilbert_k),
        values_text(&result.hilbert_i),
        values_text(&result.hilbert_j),
    );
    for (d, ok) in &dec.compatible {
        let _ = write!(text, "\ncompatible for d = {d}: {ok}");
    }
    if let Some(c) = dec.centre_to_centre {
        let _ = write!(text, "\ncentre-to-centre: {c}");
    }
    Ok(Outcome::new(Status::Ok, result, text))
}

pub fn witness(ctx: &Context, ideal: &str, d: Option<u32>) -> Result<Outcome, Failure> {
    let k = ctx.ideal(ideal)?;
    ctx.hilbert(&k)?;
    let mode = match d {
        Some(d) => WitnessMode::SingleD(d),
        None => WitnessMode::AllD,
    };
    let found = find_witness_with(&k, mode, Execution::Parallel)?;
    let text = match &found {
        Some(dec) => format!(
            "witness m = {}\nI = {}\nJ = {}",
            dec.m,
            ideal_text(&dec.i),
            ideal_text(&dec.j)
        ),
        None => "no standard monomial satisfies the Hilbert conditions".to_string(),
    };
    let status = Status::from_verdict(found.is_some());
    Ok(Outcome::new(status, json!({ "mode": mode, "witness": found }), text))
}

pub fn glue_cmd(ctx: &Context, i: &str, j: &str, m: &str) -> Result<Outcome, Failure> {
    let ([i, j], n) = ctx.ideals([i, j])?;
    let m = ctx.monomial(m, n)?;
    let g = glue(&i, &j, &m)?;
    let c2c = centre_to_centre(&g.k, &m).ok();
    let mut text = format!(
        "K = I_m + mJ = {}\nI_m = {}",
        ideal_text(&g.k),
        ideal_text(&g.i_m)
    );
    if let Some(c) = c2c {
        let _ = write!(text, "\ncentre-to-centre: {c}");
    }
    let mut result = to_value(&g);
    result["rendered"] = json!(g.k.render());
    result["centre_to_centre"] = json!(c2c);
    Ok(Outcome::new(Status::Ok, result, text))
}

pub fn candidates(ctx: &Context, i: &str, j: &str) -> Result<Outcome, Failure> {
    let ([i, j], _) = ctx.ideals([i, j])?;
    let ms = glue_candidates(&i, &j)?;
    let names: Vec<String> = ms.iter().map(ToString::to_string).collect();
    let text = if names.is_empty() {
        "no generator of I satisfies the gluing condition".to_string()
    } else {
        names.join("\n")
    };
    Ok(Outcome::new(
        Status::Ok,
        json!({ "candidates": ms, "rendered": names }),
        text,
    ))
}

pub fn table(ctx: &Context, json_text: &str, check_slp: bool) -> Result<Outcome, Failure> {
    let t: Table = serde_json::from_str(json_text)
        .map_err(|e| Failure::input(format!("invalid table JSON: {e}")))?;
    let violations = t.validate()?;
    if !violations.is_empty() {
        let messages: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Failure {
            status: Status::InputError,
            message: format!("invalid table: {}", messages.join("; ")),
            detail: Some(json!({ "violations": violations })),
        });
    }
    let k = t.ideal()?;
    let mut text = format!("K(T) = {}", ideal_text(&k));
    let mut result = json!({ "table": t, "ideal": k, "rendered": k.render() });
    if k.is_unit() {
        text.push_str("\nthe table gives the unit ideal");
        return Ok(Outcome::new(Status::Ok, result, text));
    }
    let h = ctx.hilbert(&k)?;
    result["hilbert"] = json!(h.values);
    result["computed_socle"] = json!(h.socle_degree);
    let _ = write!(text, "\nHilbert function: {}\ncomputed socle degree: {}", values_text(&h.values), h.socle_degree);
    let mut ok = true;
    if t.s >= 1 {
        let predicted = t.predicted_socle()?;
        result["predicted_socle"] = json!(predicted);
        let _ = write!(text, "\npredicted socle degree: {predicted}");
        ok &= predicted == h.socle_degree;
    }
    if check_slp {
        let report = check_lefschetz_with(&k, Property::Strong, CheckOptions::default())?;
        let narrow = report.verdict && report.hilbert.symmetric;
        result["narrow_slp"] = json!(narrow);
        result["failures"] = to_value(&report.failures);
        let _ = write!(text, "\nnarrow SLP: {narrow}");
        ok &= narrow;
    }
    Ok(Outcome::new(Status::from_verdict(ok), result, text))
}

pub fn gorenstein(ctx: &Context, d: &[u32], alpha: &[u32], c: &str) -> Result<Outcome, Failure> {
    let c = parse_rational(c)?;
    let family = BinomialFamily::new(d, alpha, c)?;
    let cert = family.certify(CheckOptions::default(), ctx.dim_cap)?;
    let ok = cert.groebner
        && cert.initial_matches_monomial
        && cert.colon_identity
        && cert.gorenstein == Some(true)
        && cert.slp == Some(true);
    let show = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
    let mut text = format!(
        "generators: {}\nGroebner basis: {}\ninitial ideal: ({})\ninitial ideal matches: {}\ncolon identity: {}",
        cert.generators.join(", "),
        cert.groebner,
        cert.initial_ideal,
        cert.initial_matches_monomial,
        cert.colon_identity,
    );
    if let Some(h) = &cert.hilbert {
        let _ = write!(text, "\nHilbert function: {}", values_text(h));
    }
    let _ = write!(
        text,
        "\nsocle dimension: {}\nGorenstein: {}\nSLP: {}",
        cert.socle_dimension.map_or("n/a".to_string(), |s| s.to_string()),
        show(cert.gorenstein),
        show(cert.slp),
    );
    if let Some(w) = &cert.lefschetz_form {
        let _ = write!(text, "\nLefschetz form weights: {w:?}");
    }
    Ok(Outcome::new(Status::from_verdict(ok), cert, text))
}
