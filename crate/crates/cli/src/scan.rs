//! `maci-scan`: rows in parallel, verdicts optionally served from and
//! appended to the cache.

use std::fmt::Write as _;
use std::path::PathBuf;

use monodec::lefschetz::{check_lefschetz_with, CheckOptions};
use monodec::maci::{maci_ideal, triples, ScanRow};
use monodec::{par, Execution, MaciParams, Property};
use serde::Serialize;

use crate::cache::{Entry, ScanCache};
use crate::commands::Context;
use crate::report::{to_value, Failure, Outcome, Status};

pub struct ScanArgs {
    pub d: Vec<u32>,
    pub slp: bool,
    pub slp_cap: u32,
    pub cache: Option<PathBuf>,
    pub force: bool,
}

#[derive(Serialize)]
struct OpenRow {
    params: String,
    computed_wlp: bool,
    computed_slp: Option<bool>,
}

#[derive(Serialize)]
struct Summary {
    d: Vec<u32>,
    rows: usize,
    agreements: usize,
    disagreements: Vec<String>,
    theorem_violations: Vec<String>,
    open_cases: Vec<OpenRow>,
    cache: Option<CacheSummary>,
}

#[derive(Serialize)]
struct CacheSummary {
    path: PathBuf,
    hits: usize,
    computed: usize,
}

struct Computed {
    row: ScanRow,
    new: Vec<Entry>,
    hits: usize,
}

fn verdict(
    cache: Option<&ScanCache>,
    force: bool,
    p: MaciParams,
    property: Property,
    new: &mut Vec<Entry>,
    hits: &mut usize,
) -> Result<bool, Failure> {
    if !force {
        if let Some(v) = cache.and_then(|c| c.get(p, property)) {
            *hits += 1;
            return Ok(v);
        }
    }
    let options = CheckOptions {
        execution: Execution::Sequential,
        ..CheckOptions::default()
    };
    let v = check_lefschetz_with(&maci_ideal(p)?, property, options)?.verdict;
    new.push(Entry::new(p, property, v));
    Ok(v)
}

pub fn run(ctx: &Context, args: &ScanArgs) -> Result<Outcome, Failure> {
    if args.d.is_empty() {
        return Err(Failure::input("give at least one value with --d"));
    }
    if let Some(&d) = args.d.iter().find(|&&d| d < 3) {
        return Err(Failure::input(format!("d = {d} is below 3")));
    }
    let params: Vec<MaciParams> = args.d.iter().flat_map(|&d| triples(d)).collect();
    for &p in &params {
        let dimension = maci_ideal(p)?.hilbert_data()?.total() as usize;
        if dimension > ctx.dim_cap {
            return Err(monodec::Error::DimensionCap {
                dimension,
                cap: ctx.dim_cap,
            }
            .into());
        }
    }
    let mut cache = match &args.cache {
        Some(path) => Some(
            ScanCache::open(path)
                .map_err(|e| Failure::input(format!("cannot open cache {}: {e}", path.display())))?,
        ),
        None => None,
    };
    let computed = par::try_map(Execution::Parallel, &params, |&p| -> Result<Computed, Failure> {
        let mut new = Vec::new();
        let mut hits = 0;
        let wlp = verdict(cache.as_ref(), args.force, p, Property::Weak, &mut new, &mut hits)?;
        let slp = if args.slp && p.d() <= args.slp_cap {
            Some(verdict(cache.as_ref(), args.force, p, Property::Strong, &mut new, &mut hits)?)
        } else {
            None
        };
        Ok(Computed {
            row: ScanRow::new(p, wlp, slp),
            new,
            hits,
        })
    })?;

    let fresh: Vec<Entry> = computed.iter().flat_map(|c| c.new.iter().cloned()).collect();
    let hits: usize = computed.iter().map(|c| c.hits).sum();
    let cache_summary = match cache.as_mut() {
        Some(c) => {
            c.append(&fresh)
                .map_err(|e| Failure::input(format!("cannot write cache {}: {e}", c.path().display())))?;
            Some(CacheSummary {
                path: c.path().to_path_buf(),
                hits,
                computed: fresh.len(),
            })
        }
        None => None,
    };

    let rows: Vec<ScanRow> = computed.into_iter().map(|c| c.row).collect();
    let summary = Summary {
        d: args.d.clone(),
        rows: rows.len(),
        agreements: rows.iter().filter(|r| r.agrees()).count(),
        disagreements: rows.iter().filter(|r| !r.agrees()).map(|r| r.params.to_string()).collect(),
        theorem_violations: rows
            .iter()
            .filter(|r| r.contradicts_theorem())
            .map(|r| r.params.to_string())
            .collect(),
        open_cases: rows
            .iter()
            .filter(|r| r.open_case)
            .map(|r| OpenRow {
                params: r.params.to_string(),
                computed_wlp: r.computed_wlp,
                computed_slp: r.computed_slp,
            })
            .collect(),
        cache: cache_summary,
    };
    let status = if !summary.theorem_violations.is_empty() {
        Status::PropertyFailed
    } else if !summary.disagreements.is_empty() {
        Status::ConjectureDisagreement
    } else {
        Status::Ok
    };

    let show = |v: Option<bool>| v.map_or("-".to_string(), |b| b.to_string());
    let mut text = format!("{:<10} {:>3} {:>6} {:>6} {:>6} {:>6}  notes", "(a,b,c)", "d", "WLP", "pred", "SLP", "pred");
    for r in &rows {
        let mut notes = Vec::new();
        if !r.agrees() {
            notes.push("disagrees");
        }
        if r.open_case {
            notes.push("open case");
        }
        let _ = write!(
            text,
            "\n{:<10} {:>3} {:>6} {:>6} {:>6} {:>6}  {}",
            r.params.to_string(),
            r.d,
            r.computed_wlp,
            r.predicted_wlp,
            show(r.computed_slp),
            r.predicted_slp,
            notes.join(", ")
        );
    }
    let _ = write!(
        text,
        "\n{} rows, {} agree with the predictions",
        summary.rows, summary.agreements
    );
    if let Some(c) = &summary.cache {
        let _ = write!(text, "\ncache {}: {} hits, {} computed", c.path.display(), c.hits, c.computed);
    }

    let lines = rows.iter().map(to_value).collect();
    let mut outcome = Outcome::new(status, summary, text);
    outcome.lines = lines;
    Ok(outcome)
}
