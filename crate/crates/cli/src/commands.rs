use std::fmt::Write as _;

use ckalg_core::ck_matrix::{build_metric, generator_matrices, is_metric_antihermitian, is_traceless, Family, GeneratorLabel, OmegaVector};
use ckalg_core::classify::{alpha_pair_cochain, crosscheck, pseudoextension_shift, CrosscheckReport, ZeroPattern};
use ckalg_core::cohomology::{coboundary, Cohomology, CohomologyResult, OneCochain};
use ckalg_core::lie::{build_family, from_matrices, verify_jacobi, LieAlgebra};
use ckalg_core::scalars::Rational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::{cochain_json, combination_text, rat, Report};
use crate::CliError;

fn core_err(e: ckalg_core::Error) -> CliError {
    CliError::input(e.to_string())
}

pub fn generators(cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.omega();
    let mats = generator_matrices(cfg.family, w).map_err(core_err)?;
    let mut json_gens = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!("{} generators of {}_ω, ω = ({w})\n", mats.len(), cfg.family);
    for (l, m) in &mats {
        let grid: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|h| h.to_string()).collect()).collect();
        for (i, row) in grid.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v != "0" {
                    rows.push(vec![l.to_string(), i.to_string(), j.to_string(), v.clone()]);
                }
            }
        }
        let _ = writeln!(text, "\n{l}");
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &grid {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            let _ = writeln!(text, "  [ {} ]", cells.join("  "));
        }
        json_gens.push(json!({ "label": l.to_string(), "matrix": grid }));
    }
    Ok(Report {
        json: json!({
            "family": cfg.family.name(),
            "omega": w.to_string(),
            "dimension": mats.len(),
            "generators": json_gens,
        }),
        csv_header: vec!["label", "row", "col", "value"],
        csv_rows: rows,
        text,
        summary: None,
        ok: true,
    })
}

fn labeled(alg: &LieAlgebra, combo: &[(usize, Rational)]) -> Vec<(GeneratorLabel, Rational)> {
    combo.iter().map(|(k, c)| (alg.label(*k), c.clone())).collect()
}

/// Negates the first nonzero bracket.
fn corrupt(alg: &mut LieAlgebra) {
    let first = alg.nonzero_brackets().next().map(|(&(i, j), combo)| (i, j, combo.clone()));
    if let Some((i, j, combo)) = first {
        let flipped = combo.into_iter().map(|(k, c)| (k, -c)).collect();
        alg.set_bracket(i, j, flipped).expect("indices from the algebra");
    }
}

pub fn structure(cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.omega();
    let mut alg = build_family(cfg.family, w);
    if cfg.corrupt {
        corrupt(&mut alg);
    }
    let jacobi_ok = verify_jacobi(&alg);
    let matrix_match = from_matrices(cfg.family, w).map(|m| m == alg).unwrap_or(false);
    let mut brackets = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!("{}_ω, ω = ({w}), dimension {}\n\n", cfg.family, alg.dim());
    for (&(i, j), combo) in alg.nonzero_brackets() {
        let (x, y) = (alg.label(i).to_string(), alg.label(j).to_string());
        let terms = labeled(&alg, combo);
        let _ = writeln!(text, "[{x}, {y}] = {}", combination_text(&terms));
        for (l, c) in &terms {
            rows.push(vec![x.clone(), y.clone(), l.to_string(), c.to_string()]);
        }
        let result: Vec<Value> = terms.iter().map(|(l, c)| json!({ "label": l.to_string(), "c": rat(c) })).collect();
        brackets.push(json!({ "x": x, "y": y, "result": result }));
    }
    let _ = writeln!(text, "\njacobi_ok: {jacobi_ok}\nmatrix_match: {matrix_match}");
    Ok(Report {
        json: json!({
            "family": cfg.family.name(),
            "omega": w.to_string(),
            "dimension": alg.dim(),
            "basis": alg.basis().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "brackets": brackets,
            "jacobi_ok": jacobi_ok,
            "matrix_match": matrix_match,
        }),
        csv_header: vec!["x", "y", "label", "c"],
        csv_rows: rows,
        text,
        summary: None,
        ok: jacobi_ok && matrix_match,
    })
}

fn crosscheck_json(rep: &CrosscheckReport) -> Value {
    let entries: Vec<Value> = rep
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name.to_string(),
                "type": e.kind.to_string(),
                "active": e.active,
                "is_cocycle": e.is_cocycle,
                "trivial": e.trivial,
            })
        })
        .collect();
    json!({
        "predicted": rep.predicted,
        "solved": rep.solved,
        "active_rank": rep.active_rank,
        "match": rep.matches,
        "entries": entries,
    })
}

fn h2_json(alg: &LieAlgebra, res: &CohomologyResult) -> Value {
    json!({
        "dim_z2": res.dim_z2,
        "dim_b2": res.dim_b2,
        "dim_h2": res.dim_h2,
        "representatives": res.h2_representatives.iter().map(|r| cochain_json(alg, r)).collect::<Vec<_>>(),
    })
}

pub fn h2(cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.omega();
    let alg = build_family(cfg.family, w);
    let res = Cohomology::new(&alg).compute();
    let check = crosscheck(cfg.family, w).map_err(core_err)?;
    let mut json = h2_json(&alg, &res);
    let obj = json.as_object_mut().expect("object");
    obj.insert("family".into(), json!(cfg.family.name()));
    obj.insert("omega".into(), json!(w.to_string()));
    obj.insert("crosscheck".into(), crosscheck_json(&check));

    let mut rows = Vec::new();
    let mut text = format!(
        "{}_ω, ω = ({w})\ndim Z² = {}, dim B² = {}, dim H² = {}\npredicted = {}, match = {}\n",
        cfg.family, res.dim_z2, res.dim_b2, res.dim_h2, check.predicted, check.matches
    );
    for (k, rep) in res.h2_representatives.iter().enumerate() {
        let _ = write!(text, "\nrepresentative {k}:");
        for (&(i, j), c) in rep.entries() {
            let (li, lj) = (alg.label(i).to_string(), alg.label(j).to_string());
            let _ = write!(text, " ξ({li},{lj})={c}");
            rows.push(vec![k.to_string(), i.to_string(), j.to_string(), li, lj, c.to_string()]);
        }
        text.push('\n');
    }
    if !check.entries.is_empty() {
        text.push_str("\ncoefficients:\n");
        for e in &check.entries {
            let verdict = match e.trivial {
                None => "not a cocycle",
                Some(true) => "trivial",
                Some(false) => "non-trivial",
            };
            let state = if e.active { "active" } else { "inactive" };
            let _ = writeln!(text, "  {:<14} type {:<3} {state:<8} {verdict}", e.name.to_string(), e.kind.to_string());
        }
    }
    Ok(Report {
        json,
        csv_header: vec!["representative", "i", "j", "label_i", "label_j", "c"],
        csv_rows: rows,
        text,
        summary: None,
        ok: check.matches,
    })
}

struct SweepRow {
    omega: OmegaVector,
    n_zeros: usize,
    dim_z2: usize,
    dim_b2: usize,
    dim_h2: usize,
    predicted: usize,
    matches: bool,
}

fn sweep_case(family: Family, w: OmegaVector) -> Result<SweepRow, CliError> {
    let rep = crosscheck(family, &w).map_err(core_err)?;
    Ok(SweepRow {
        n_zeros: ZeroPattern::of(&w).n,
        omega: w,
        dim_z2: rep.dim_z2,
        dim_b2: rep.dim_b2,
        dim_h2: rep.solved,
        predicted: rep.predicted,
        matches: rep.matches,
    })
}

pub fn sweep(cfg: &RunConfig) -> Result<Report, CliError> {
    let patterns: Vec<OmegaVector> = OmegaVector::sign_patterns(cfg.n).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| CliError::input(e.to_string()))?;
    // collect keeps the (lexicographic) input order whatever the completion order
    let rows: Vec<SweepRow> =
        pool.install(|| patterns.into_par_iter().map(|w| sweep_case(cfg.family, w)).collect::<Result<_, _>>())?;
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    let family = cfg.family.name();
    let summary = format!("{} rows, {mismatches} mismatches", rows.len());

    let csv_rows = rows
        .iter()
        .map(|r| {
            vec![
                family.to_string(),
                cfg.n.to_string(),
                r.omega.to_string(),
                r.n_zeros.to_string(),
                r.dim_z2.to_string(),
                r.dim_b2.to_string(),
                r.dim_h2.to_string(),
                r.predicted.to_string(),
                r.matches.to_string(),
            ]
        })
        .collect();
    let cases: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "omega": r.omega.to_string(),
                "n_zeros": r.n_zeros,
                "dim_z2": r.dim_z2,
                "dim_b2": r.dim_b2,
                "dim_h2": r.dim_h2,
                "predicted": r.predicted,
                "match": r.matches,
            })
        })
        .collect();
    let mut text = format!("{:<16} {:>7} {:>6} {:>6} {:>6} {:>9}  match\n", "omega", "n_zeros", "Z2", "B2", "H2", "predicted");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<16} {:>7} {:>6} {:>6} {:>6} {:>9}  {}",
            r.omega.to_string(),
            r.n_zeros,
            r.dim_z2,
            r.dim_b2,
            r.dim_h2,
            r.predicted,
            r.matches
        );
    }
    let _ = writeln!(text, "{summary}");
    Ok(Report {
        json: json!({
            "family": family,
            "N": cfg.n,
            "cases": cases,
            "rows": rows.len(),
            "mismatches": mismatches,
        }),
        csv_header: vec!["family", "N", "omega", "n_zeros", "dim_z2", "dim_b2", "dim_h2", "predicted", "match"],
        csv_rows,
        text,
        summary: Some(summary),
        ok: mismatches == 0,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

fn check(name: &'static str, status: Status, detail: impl Into<String>) -> Check {
    Check { name, status, detail: detail.into() }
}

fn verify_checks(family: Family, w: &OmegaVector) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let mats = generator_matrices(family, w).map_err(core_err)?;
    let metric = build_metric(w);

    let bad: Vec<String> = mats
        .iter()
        .filter(|(_, m)| !is_metric_antihermitian(m, &metric).unwrap_or(false))
        .map(|(l, _)| l.to_string())
        .collect();
    out.push(check("antihermitian", Status::of(bad.is_empty()), failures(&bad, mats.len())));

    match family {
        Family::Su | Family::U => {
            let considered: Vec<_> = mats.iter().filter(|(l, _)| *l != GeneratorLabel::I).collect();
            let bad: Vec<String> = considered.iter().filter(|(_, m)| !is_traceless(m)).map(|(l, _)| l.to_string()).collect();
            let mut detail = failures(&bad, considered.len());
            if family == Family::U {
                detail.push_str("; I excluded");
            }
            out.push(check("traceless", Status::of(bad.is_empty()), detail));
        }
        _ => out.push(check("traceless", Status::Skipped, "only required for su and u")),
    }

    let table = build_family(family, w);
    match from_matrices(family, w) {
        Ok(m) => {
            out.push(check("closure", Status::Pass, "every commutator lies in the span of the basis"));
            out.push(check("matrix_match", Status::of(m == table), "matrix commutators vs bracket tables"));
        }
        Err(e) => {
            out.push(check("closure", Status::Fail, e.to_string()));
            out.push(check("matrix_match", Status::Fail, "no matrix structure constants"));
        }
    }
    out.push(check("jacobi", Status::of(verify_jacobi(&table)), format!("{} generators", table.dim())));

    let coh = Cohomology::new(&table);
    let r = table.dim();
    let mut all_ok = true;
    for k in 0..r {
        let d = coboundary(&OneCochain::unit(r, k), &table).map_err(core_err)?;
        all_ok &= coh.is_cocycle(&d).map_err(core_err)?;
    }
    out.push(check("coboundary_in_cocycle", Status::of(all_ok), format!("δ of {r} unit 1-cochains")));

    if family == Family::So {
        let n = w.n();
        let mut applicable = 0;
        let mut ok = true;
        for k in 1..n.saturating_sub(1) {
            let (wk, wk2) = (w.get(k).map_err(core_err)?, w.get(k + 2).map_err(core_err)?);
            if wk.is_zero() || wk2.is_zero() {
                continue;
            }
            applicable += 1;
            let af = Rational::one();
            let al = &af * wk2 / wk;
            let pair = alpha_pair_cochain(w, k, af.clone(), al).map_err(core_err)?;
            let mu = pseudoextension_shift(w, k, &af).map_err(core_err)?;
            ok &= coboundary(&mu, &table).map_err(core_err)? == pair;
        }
        out.push(check("pseudoextension_removal", Status::of(ok), format!("{applicable} removable pairs")));
    } else {
        out.push(check("pseudoextension_removal", Status::Skipped, "orthogonal family only"));
    }
    Ok(out)
}

fn failures(bad: &[String], total: usize) -> String {
    if bad.is_empty() {
        format!("{total} generators")
    } else {
        format!("failing: {}", bad.join(", "))
    }
}

pub fn verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.omega();
    let checks = verify_checks(cfg.family, w)?;
    let ok = checks.iter().all(|c| c.status != Status::Fail);
    let mut text = format!("{}_ω, ω = ({w})\n", cfg.family);
    for c in &checks {
        let _ = writeln!(text, "  {:<8} {:<24} {}", c.status.name(), c.name, c.detail);
    }
    let _ = writeln!(text, "{}", if ok { "all checks passed" } else { "some checks failed" });
    Ok(Report {
        json: json!({
            "family": cfg.family.name(),
            "omega": w.to_string(),
            "ok": ok,
            "checks": checks
                .iter()
                .map(|c| json!({ "name": c.name, "status": c.status.name(), "detail": c.detail }))
                .collect::<Vec<_>>(),
        }),
        csv_header: vec!["check", "status", "detail"],
        csv_rows: checks.iter().map(|c| vec![c.name.to_string(), c.status.name().to_string(), c.detail.clone()]).collect(),
        text,
        summary: None,
        ok,
    })
}
