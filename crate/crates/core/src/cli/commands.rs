use num_traits::Zero;
use serde_json::{json, Value};

use super::output::{cell, exact, Report, Table};
use super::*;
use crate::commutator::{self, Classification, CommutatorReport, MonotonicityReport};
use crate::error::Result;
use crate::hypotest::{
    basis_vector_bound, boundary_sweep, certify_hyponormal, kl_ratio_bound, refute_truncated, refute_window, HypoVerdict,
    Status, SweepOptions, SweepOutcome, Truncation, Witness, WindowSearchConfig,
};
use crate::numerics::{int, isolate_real_roots, RootInterval};
use crate::sequences::{asymptotic_leading, point, SequenceKind, SymbolParams};

/// Witness coordinates are listed only up to this support length.
const MAX_LISTED_VALUES: usize = 64;

/// Truncations tried by `hypo check` when certification fails.
const REFUTE_SIZES: [usize; 4] = [256, 1024, 4096, 16384];

pub(super) fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Seq(a) => seq(a),
        Command::Hypo { action: HypoAction::Check(a) } => check(a),
        Command::Hypo { action: HypoAction::Sweep(a) } => sweep(a),
        Command::Hypo { action: HypoAction::Window(a) } => window(a),
        Command::Comm { action } => comm(action),
        Command::Region(a) => region(a),
        Command::Bounds(a) => bounds(a),
    }
}

fn mode_of<'a>(nums: impl IntoIterator<Item = &'a Number>) -> Mode {
    if nums.into_iter().any(|x| x.float) {
        Mode::Float
    } else {
        Mode::Exact
    }
}

fn echo(n: &Number) -> Value {
    json!(n.text)
}

fn params(sym: &SymbolArgs, a: &Rational) -> Result<SymbolParams<Rational>> {
    use num_traits::Signed;
    SymbolParams::new(sym.n, sym.m, sym.s.value.clone(), sym.t.value.clone(), a.abs())
}

fn symbol_inputs(sym: &SymbolArgs) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("n".into(), json!(sym.n));
    map.insert("m".into(), json!(sym.m));
    map.insert("s".into(), echo(&sym.s));
    map.insert("t".into(), echo(&sym.t));
    map
}

fn seq(args: &SeqArgs) -> Result<Outcome> {
    let a = args.a.as_ref().map_or_else(Rational::zero, |x| x.value.clone());
    let p = params(&args.symbol, &a)?;
    let fp = p.to_f64();
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for k in 0..=args.kmax {
        let pt = point(&p, k);
        let lead: Vec<Option<f64>> = [SequenceKind::Sigma, SequenceKind::Omega, SequenceKind::Delta]
            .into_iter()
            .map(|kind| asymptotic_leading(kind, &fp, k))
            .collect();
        let text = |x: Option<f64>| x.map_or_else(String::new, |v| v.to_string());
        rows.push(vec![
            k.to_string(),
            cell(&pt.sigma),
            cell(&pt.omega),
            cell(&pt.delta),
            text(lead[0]),
            text(lead[1]),
            text(lead[2]),
        ]);
        json_rows.push(json!({
            "k": k,
            "sigma": exact(&pt.sigma),
            "omega": exact(&pt.omega),
            "delta": exact(&pt.delta),
            "sigma_leading": lead[0],
            "omega_leading": lead[1],
            "delta_leading": lead[2],
        }));
    }
    let mut inputs = symbol_inputs(&args.symbol);
    inputs.insert("kmax".into(), json!(args.kmax));
    if let Some(a) = &args.a {
        inputs.insert("a".into(), echo(a));
    }
    let header = ["k", "sigma", "omega", "delta", "sigma_leading", "omega_leading", "delta_leading"];
    let mut nums = vec![&args.symbol.s, &args.symbol.t];
    nums.extend(args.a.as_ref());
    Ok(Outcome {
        report: Report {
            command: "seq".into(),
            inputs: Value::Object(inputs),
            results: json!({ "rows": json_rows }),
            table: Some(Table { header: header.iter().map(|s| s.to_string()).collect(), rows }),
        },
        code: EXIT_POSITIVE,
        mode: mode_of(nums),
    })
}

fn witness_json(w: &Witness) -> Value {
    let v = &w.vector;
    let mut out = json!({
        "kind": v.kind,
        "support_start": v.support_start,
        "support_end": v.support_end(),
        "value": exact(&w.value),
        "a": exact(&w.a),
        "t": exact(&w.t),
    });
    if v.values.len() <= MAX_LISTED_VALUES {
        out["values"] = Value::Array(v.values.iter().map(exact).collect());
    }
    out
}

fn verdict_json(v: &HypoVerdict) -> Value {
    json!({
        "status": v.status,
        "witness": v.witness.as_ref().map(witness_json),
        "certificate": v.certificate.as_ref().map(|c| json!({
            "truncation": c.truncation,
            "min_margin": exact(&c.min_margin),
            "argmin_k": c.argmin_k,
            "tail_start": c.tail_start,
            "tail_degree": c.tail_degree,
        })),
        "truncation": v.diagnostics.truncation,
        "note": v.diagnostics.note,
    })
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::CertifiedHyponormal => EXIT_POSITIVE,
        Status::CertifiedNotHyponormal => EXIT_NEGATIVE,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Certification schedule from 256 (or just past `n + m`) doubling up to `max`.
fn schedule(max: usize, offset: usize) -> Truncation {
    let start = 256.max(offset + 1);
    Truncation { start, max: max.max(start) }
}

/// Certifies first; on failure looks for an exact witness at growing truncations.
pub(crate) fn decide(p: &SymbolParams<Rational>, max: usize) -> Result<HypoVerdict> {
    let verdict = certify_hyponormal(p, &schedule(max, p.offset()))?;
    if verdict.status == Status::CertifiedHyponormal || verdict.is_degenerate() {
        return Ok(verdict);
    }
    let mut last = verdict;
    for size in REFUTE_SIZES.into_iter().filter(|&k| k <= max.max(256) && k > p.offset()) {
        let v = refute_truncated(p, size);
        if v.status == Status::CertifiedNotHyponormal || v.is_degenerate() {
            return Ok(v);
        }
        last = v;
    }
    Ok(last)
}

fn check(args: &CheckArgs) -> Result<Outcome> {
    let sym = &args.symbol;
    let (a, echoed) = match (&args.a, &args.c) {
        (Some(a), _) => (a.value.clone(), ("a", a)),
        (None, Some(c)) => {
            if sym.t.value.is_zero() {
                return Err(Error::InvalidParams("a = c / t needs t > 0".into()));
            }
            (&c.value / &sym.t.value, ("c", c))
        }
        (None, None) => return Err(Error::InvalidParams("one of --a or --c is required".into())),
    };
    let p = params(sym, &a)?;
    let verdict = decide(&p, args.k)?;
    let mut inputs = symbol_inputs(sym);
    inputs.insert(echoed.0.into(), echo(echoed.1));
    inputs.insert("K".into(), json!(args.k));
    let mut results = verdict_json(&verdict);
    results["a_modulus"] = exact(&p.a);
    Ok(Outcome {
        report: Report { command: "hypo check".into(), inputs: Value::Object(inputs), results, table: None },
        code: status_code(verdict.status),
        mode: mode_of([&sym.s, &sym.t, echoed.1]),
    })
}

fn sweep(args: &SweepArgs) -> Result<Outcome> {
    let sym = &args.symbol;
    let p = params(sym, &Rational::zero())?;
    let opts = SweepOptions {
        certify: schedule(args.k, p.offset()),
        refute_sizes: REFUTE_SIZES.into_iter().filter(|&k| k <= args.k.max(256) && k > p.offset()).collect(),
        ..SweepOptions::default()
    };
    let res = boundary_sweep(&p, &args.tol.value, &opts)?;
    let (outcome, code) = match &res.outcome {
        SweepOutcome::Converged => (json!({"converged": true}), EXIT_POSITIVE),
        SweepOutcome::Inconclusive { at, note } => {
            (json!({"converged": false, "stalled_at": exact(at), "note": note}), EXIT_INCONCLUSIVE)
        }
    };
    let results = json!({
        "a_lo": exact(&res.lo),
        "a_hi": exact(&res.hi),
        "width": exact(&(&res.hi - &res.lo)),
        "outcome": outcome,
        "iterations": res.iterations,
        "lo_certificate_truncation": res.lo_certificate.as_ref().map(|c| c.truncation),
        "hi_witness": res.hi_witness.as_ref().map(witness_json),
    });
    let mut inputs = symbol_inputs(sym);
    inputs.insert("tol".into(), echo(&args.tol));
    inputs.insert("K".into(), json!(args.k));
    Ok(Outcome {
        report: Report { command: "hypo sweep".into(), inputs: Value::Object(inputs), results, table: None },
        code,
        mode: mode_of([&sym.s, &sym.t, &args.tol]),
    })
}

fn window(args: &WindowArgs) -> Result<Outcome> {
    let cfg = WindowSearchConfig::for_family(args.n, args.m, &args.s.value, &args.c.value)?;
    let verdict = refute_window(args.n, args.m, &args.s.value, &args.c.value, &cfg)?;
    let found = verdict.witness.as_ref().map(|w| {
        json!({
            "t": exact(&w.t),
            "k1": w.vector.support_start,
            "k2": w.vector.values.len() as u64 - 1,
            "value": exact(&w.value),
            "a": exact(&w.a),
        })
    });
    let results = json!({
        "status": verdict.status,
        "eta": exact(&cfg.eta),
        "epsilon": exact(&cfg.epsilon),
        "k2": cfg.k2,
        "k1_grid": cfg.k1_grid,
        "violation": found,
        "note": verdict.diagnostics.note,
    });
    let inputs = json!({"n": args.n, "m": args.m, "s": echo(&args.s), "c": echo(&args.c)});
    Ok(Outcome {
        report: Report { command: "hypo window".into(), inputs, results, table: None },
        code: status_code(verdict.status),
        mode: mode_of([&args.s, &args.c]),
    })
}

fn interval_json(iv: &RootInterval) -> Value {
    json!({"lo": exact(&iv.lo), "hi": exact(&iv.hi)})
}

fn classification_name(c: Classification) -> &'static str {
    match c {
        Classification::MonotoneDecreasing => "MonotoneDecreasing",
        Classification::UniqueInteriorMax => "UniqueInteriorMax",
        Classification::Degenerate => "Degenerate",
    }
}

fn monotonicity_json(r: &MonotonicityReport) -> Value {
    json!({
        "d": r.d.to_string(),
        "classification": classification_name(r.classification),
        "critical_point": r.critical_point.as_ref().map(interval_json),
    })
}

fn norm_json(r: &CommutatorReport) -> Value {
    json!({
        "norm": exact(&r.norm),
        "argmax_k": r.argmax_k,
        "head_max": {"k": r.head_max.k, "value": exact(&r.head_max.value)},
        "tail_max": {"k": r.tail_max.k, "value": exact(&r.tail_max.value)},
        "monotonicity": monotonicity_json(&r.monotonicity),
    })
}

fn comm(action: &CommAction) -> Result<Outcome> {
    let (name, pair) = match action {
        CommAction::Norm(p) => ("comm norm", p),
        CommAction::Classify(p) => ("comm classify", p),
        CommAction::Halfbound(p) => ("comm halfbound", p),
    };
    let (m, n) = (pair.m, pair.n);
    let results = match action {
        CommAction::Norm(_) => norm_json(&commutator::commutator_norm(m, n)?),
        CommAction::Classify(_) => monotonicity_json(&commutator::classify_monotonicity(m, n)?),
        CommAction::Halfbound(_) => {
            let rec = commutator::verify_half_bound(m, n)?;
            let q = &rec.quartic;
            json!({
                "alpha": q.alpha.to_string(),
                "beta": q.beta.to_string(),
                "gamma": q.gamma.to_string(),
                "delta": q.delta.to_string(),
                "all_positive": q.all_positive(),
                "head_max": {"k": rec.head_max.k, "value": exact(&rec.head_max.value)},
                "bound_holds": true,
            })
        }
    };
    Ok(Outcome {
        report: Report { command: name.into(), inputs: json!({"m": m, "n": n}), results, table: None },
        code: EXIT_POSITIVE,
        mode: Mode::Exact,
    })
}

fn region(args: &RegionArgs) -> Result<Outcome> {
    if args.mmax < 2 {
        return Err(Error::InvalidParams("--mmax must be at least 2".into()));
    }
    let scan = commutator::scan_region(args.mmax, args.nmax.unwrap_or(args.mmax - 1));
    if let Some(path) = &args.bitmap {
        scan.write_pbm(std::io::BufWriter::new(File::create(path)?))?;
    }
    if let Some(path) = &args.csv {
        scan.write_csv(File::create(path)?).map_err(std::io::Error::other)?;
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, scan.to_svg())?;
    }
    let slope = commutator::boundary_slope();
    let fit = scan.fit_boundary();
    let deviation = |x: f64| (x - slope.lo_f64()) / slope.lo_f64();
    let roots: Vec<Value> = isolate_real_roots(&commutator::slope_cubic()).iter().map(interval_json).collect();
    let results = json!({
        "m_max": scan.m_max,
        "n_max": scan.n_max,
        "shaded_cells": scan.shaded_count(),
        "first_shaded_m": scan.boundary_samples.first().map(|s| s.0),
        "degenerate_cells": scan.degenerate,
        "non_contiguous_columns": scan.non_contiguous_columns(),
        "boundary_slope": interval_json(&slope),
        "slope_cubic_real_roots": roots,
        "fit": fit.as_ref().map(|f| json!({
            "slope": f.slope,
            "intercept": f.intercept,
            "samples": f.samples_used,
            "slope_relative_deviation": deviation(f.slope),
            "m_at_max": f.m_at_max,
            "ratio_at_max": f.ratio_at_max,
            "ratio_relative_deviation": deviation(f.ratio_at_max),
        })),
    });
    let table = Table {
        header: vec!["m".into(), "n_low".into()],
        rows: scan.boundary_samples.iter().map(|(m, n)| vec![m.to_string(), n.to_string()]).collect(),
    };
    let inputs = json!({"mmax": args.mmax, "nmax": scan.n_max});
    Ok(Outcome {
        report: Report { command: "region".into(), inputs, results, table: Some(table) },
        code: EXIT_POSITIVE,
        mode: Mode::Exact,
    })
}

fn bounds(args: &BoundsArgs) -> Result<Outcome> {
    if args.kl {
        let q = args.q.ok_or_else(|| Error::InvalidParams("--kl needs --q".into()))?;
        let b = kl_ratio_bound(args.m, q)?;
        let results = json!({
            "first_term": exact(&b.first_term),
            "second_term": exact(&b.second_term),
            "bound_a_squared": exact(&b.bound),
            "first_is_min": b.first_is_min,
        });
        return Ok(Outcome {
            report: Report { command: "bounds kl".into(), inputs: json!({"m": args.m, "q": q}), results, table: None },
            code: EXIT_POSITIVE,
            mode: Mode::Exact,
        });
    }
    let missing = || Error::InvalidParams("--n, --s and --t are required without --kl".into());
    let sym = SymbolArgs {
        n: args.n.ok_or_else(missing)?,
        m: args.m,
        s: args.s.clone().ok_or_else(missing)?,
        t: args.t.clone().ok_or_else(missing)?,
    };
    let p = params(&sym, &int(0))?;
    let b = basis_vector_bound(&p, args.kmax);
    let results = json!({
        "bound_a_squared": exact(&b.bound),
        "endpoint_bound": exact(&b.endpoint_bound),
        "min_ratio": exact(&b.min_value),
        "argmin_k": b.argmin_k,
        "limit": exact(&b.limit),
        "scanned": b.scanned,
    });
    let mut inputs = symbol_inputs(&sym);
    inputs.insert("kmax".into(), json!(args.kmax));
    Ok(Outcome {
        report: Report { command: "bounds".into(), inputs: Value::Object(inputs), results, table: None },
        code: EXIT_POSITIVE,
        mode: mode_of([&sym.s, &sym.t]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("hyponorm").chain(args.iter().copied())).unwrap();
        dispatch(&cli.command).unwrap()
    }

    #[test]
    fn seq_symmetric_delta_vanishes() {
        let o = outcome(&["seq", "--n", "1", "--m", "1", "--s", "1", "--t", "1", "--kmax", "4"]);
        let t = o.report.table.unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(t.rows.iter().all(|r| r[3] == "0"));
        assert_eq!(t.rows[0][1], "2/9");
        assert_eq!(o.mode, Mode::Exact);
    }

    #[test]
    fn decimal_input_is_float_mode() {
        let o = outcome(&["seq", "--n", "1", "--m", "1", "--s", "0.5", "--t", "1", "--kmax", "1"]);
        assert_eq!(o.mode, Mode::Float);
    }

    #[test]
    fn bounds_examples() {
        let o = outcome(&["bounds", "--n", "1", "--m", "1", "--s", "1", "--t", "0"]);
        assert_eq!(o.report.results["bound_a_squared"]["num"], "4");
        assert_eq!(o.report.results["bound_a_squared"]["den"], "9");
        let o = outcome(&["bounds", "--kl", "--m", "3", "--q", "1"]);
        assert_eq!(o.report.results["bound_a_squared"]["num"], "9");
        assert_eq!(o.report.results["first_is_min"], true);
    }

    #[test]
    fn comm_norm_eight_seven() {
        let o = outcome(&["comm", "norm", "--m", "8", "--n", "7"]);
        assert_eq!(o.report.results["argmax_k"], 3);
        assert_eq!(o.report.results["norm"]["num"], "173");
        assert_eq!(o.report.results["norm"]["den"], "4356");
    }
}
