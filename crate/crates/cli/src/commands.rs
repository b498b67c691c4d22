use std::collections::{BTreeMap, BTreeSet};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::json;

use ufo7::algebra::{all_words, check_confluence, BraidingData, RootLetter};
use ufo7::rank1::{rank1_dim, rank1_oracle, Rank1Params};
use ufo7::relations::{check_composites, verify_relations, CheckStatus, RelationCheck};
use ufo7::verma::{algebra_for, build_verma, check_singular_vectors};
use ufo7::weights::{
    classify, conditions, representative, representative_lambdas, shapovalov, table1, z12_characters, FamilyId, WeightParams,
};
use ufo7::CycNum;

use crate::output::{json as to_json, render, Format, Table};
use crate::report::{Engine, ReportJson};
use crate::{Cli, Command, WeightArgs};

pub enum Outcome {
    Ok,
    Mismatch,
}

/// Dimension and number of classes in the printed count table.
pub const PRINTED_Z12: [(usize, usize); 17] = [
    (144, 67),
    (108, 7),
    (96, 10),
    (85, 2),
    (72, 6),
    (71, 4),
    (61, 4),
    (49, 2),
    (48, 10),
    (47, 4),
    (37, 6),
    (36, 7),
    (35, 4),
    (25, 4),
    (23, 2),
    (11, 4),
    (1, 1),
];

pub const PRINTED_EMPTY: [u32; 2] = [6, 10];

pub fn run(cli: &Cli) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()?;
    let engine = Engine::new(cli.cache.clone())?;
    let out = pool.install(|| dispatch(cli, &engine));
    engine.log_cache();
    out
}

fn dispatch(cli: &Cli, engine: &Engine) -> Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Classify { l1, l2 } => classify_cmd(f, l1, l2),
        Command::Simple(w) => simple_cmd(f, engine, w),
        Command::Hilbert(w) => hilbert_cmd(f, engine, w),
        Command::Table1 { check } => table1_cmd(f, engine, *check),
        Command::Verify { q12, weights } => verify_cmd(f, q12, *weights),
        Command::ExampleZ12 { check } => z12_cmd(f, engine, *check),
        Command::Rank1 { n, q, lam, oracle } => rank1_cmd(f, *n, q, lam, *oracle),
    }
}

fn print(s: String) -> Result<Outcome> {
    print!("{s}");
    Ok(Outcome::Ok)
}

fn classify_cmd(f: Format, l1: &CycNum, l2: &CycNum) -> Result<Outcome> {
    let fam = classify(l1, l2)?;
    let c = conditions(l1, l2);
    let sh = shapovalov(l1, l2)?;
    let mut t = Table::new(&["family", "class", "C1", "C2", "C3", "C4", "C5", "Sh"]);
    let mut row = vec![fam.index().to_string(), fam.class().to_string()];
    row.extend(c.iter().map(|b| b.to_string()));
    row.push(sh.to_string());
    t.push(row);
    let v = json!({
        "family": fam.index(),
        "class": fam.class(),
        "conditions": c,
        "shapovalov": sh,
    });
    print(render(f, &t, &v)?)
}

fn weight(w: &WeightArgs) -> Result<WeightParams> {
    let (l1, l2) = match (w.family, &w.l1, &w.l2) {
        (Some(k), _, _) => representative_lambdas(FamilyId::new(k)?),
        (None, Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => bail!("give --family or both --l1 and --l2"),
    };
    let q = match &w.q12 {
        Some(q) => BraidingData::new(q.clone()).context("q12 must be nonzero")?,
        None => BraidingData::standard(),
    };
    let one = || CycNum::from_int(1);
    let ls1 = w.ls1.clone().unwrap_or_else(one);
    let ls2 = w.ls2.clone().unwrap_or_else(one);
    Ok(WeightParams::split(&l1, &l2, ls1, ls2, q)?)
}

fn degree(d: [i32; 2]) -> String {
    format!("({},{})", d[0], d[1])
}

fn simple_cmd(f: Format, engine: &Engine, w: &WeightArgs) -> Result<Outcome> {
    let r = engine.report(&weight(w)?)?;
    let v = to_json(&r)?;
    match f {
        Format::Json => print(v),
        _ => {
            let mut t = Table::new(&["family", "lambda1", "lambda2", "dim", "max degree", "hw weight", "phi family"]);
            t.push(vec![
                r.family.to_string(),
                r.lambda1.to_string(),
                r.lambda2.to_string(),
                r.dim.to_string(),
                degree(r.max_degree),
                format!("({}, {})", r.hw_weight[0], r.hw_weight[1]),
                r.phi_family.to_string(),
            ]);
            let mut s = if f == Format::Md { t.markdown() } else { t.csv()? };
            if f == Format::Md {
                s.push('\n');
                s.push_str(&hilbert_table(&r).markdown());
            }
            print(s)
        }
    }
}

fn hilbert_table(r: &ReportJson) -> Table {
    let mut t = Table::new(&["b1", "b2", "dim"]);
    for g in &r.graded_dims {
        t.push(g.iter().map(|x| x.to_string()).collect());
    }
    t
}

fn hilbert_cmd(f: Format, engine: &Engine, w: &WeightArgs) -> Result<Outcome> {
    let r = engine.report(&weight(w)?)?;
    print(render(f, &hilbert_table(&r), &r.graded_dims)?)
}

fn table1_cmd(f: Format, engine: &Engine, check: bool) -> Result<Outcome> {
    let rows = table1();
    let reports: Vec<ReportJson> = rows
        .par_iter()
        .map(|row| engine.report(&representative(row.family)))
        .collect::<Result<_>>()?;
    let mut t = Table::new(&["Family", "dim L(λ)", "max degree", "L(λ)^φ", "status"]);
    let mut entries = Vec::new();
    let mut bad = 0;
    for (row, r) in rows.iter().zip(&reports) {
        let ok = r.matches(row);
        bad += !ok as usize;
        let status = if ok { "match" } else { "MISMATCH" };
        t.push(vec![
            format!("I{}", row.family.index()),
            r.dim.to_string(),
            degree(r.max_degree),
            format!("I{}", r.phi_family),
            status.to_string(),
        ]);
        entries.push(json!({
            "family": row.family.index(),
            "dim": r.dim,
            "max_degree": r.max_degree,
            "phi_family": r.phi_family,
            "status": status,
        }));
    }
    print(render(f, &t, &entries)?)?;
    eprintln!("{}/{} rows match", rows.len() - bad, rows.len());
    Ok(if check && bad > 0 { Outcome::Mismatch } else { Outcome::Ok })
}

fn sample_weights(q12: &CycNum, n: usize) -> Result<Vec<WeightParams>> {
    let q = BraidingData::new(q12.clone()).context("q12 must be nonzero")?;
    (0..n as i64)
        .map(|i| {
            Ok(WeightParams::new(
                CycNum::from_int(2 + i),
                CycNum::from_int(3) * CycNum::zeta_pow(i),
                CycNum::frac(5, 7 + i),
                CycNum::from_int(-4 - i),
                q.clone(),
            )?)
        })
        .collect()
}

fn worst(a: CheckStatus, b: CheckStatus) -> CheckStatus {
    use CheckStatus::*;
    match (a, b) {
        (Fail, _) | (_, Fail) => Fail,
        (Quarantined, _) | (_, Quarantined) => Quarantined,
        _ => Pass,
    }
}

fn verify_cmd(f: Format, q12: &CycNum, n: usize) -> Result<Outcome> {
    let ws = sample_weights(q12, n)?;
    let reports: Vec<Vec<RelationCheck>> = ws
        .par_iter()
        .map(|p| verify_relations(&build_verma(p)).checks)
        .collect();
    let mut agg: Vec<RelationCheck> = reports.first().cloned().unwrap_or_default();
    for r in reports.iter().skip(1) {
        for (a, b) in agg.iter_mut().zip(r) {
            a.status = worst(a.status, b.status);
        }
    }

    let alg = algebra_for(&BraidingData::new(q12.clone()).context("q12 must be nonzero")?);
    let words = all_words(&[RootLetter::E1, RootLetter::E2], 4);
    let conf = check_confluence(words.iter().map(Vec::as_slice), &alg);
    let composites = check_composites(&alg);

    let mut grid: Vec<(CycNum, CycNum)> = Vec::new();
    for a in 0..12 {
        for b in 0..12 {
            grid.push((CycNum::zeta_pow(a), CycNum::zeta_pow(b)));
        }
    }
    grid.push((CycNum::from_int(2), CycNum::from_int(3)));
    let singular = check_singular_vectors(&grid);

    let mut t = Table::new(&["check", "identity", "status", "note"]);
    for c in &agg {
        let note = match (&c.correction, c.status) {
            (Some(k), CheckStatus::Quarantined) => format!("holds as `{k}`"),
            _ => String::new(),
        };
        t.push(vec![format!("{:?}", c.kind), c.printed.clone(), c.status.label().to_string(), note]);
    }
    t.push(vec![
        "Confluence".into(),
        format!("{} words of length <= 4", conf.words_checked),
        if conf.is_confluent() { "pass" } else { "FAIL" }.into(),
        String::new(),
    ]);
    for c in &composites {
        let status = if c.holds_as_printed() {
            "pass"
        } else if c.correction_residuals == Some((0, 0)) {
            "quarantined"
        } else {
            "FAIL"
        };
        let note = match (&c.correction, c.holds_as_printed()) {
            (Some(k), false) => format!("holds as `{k}`"),
            _ => String::new(),
        };
        t.push(vec!["Composite".into(), c.printed.clone(), status.into(), note]);
    }
    for s in &singular {
        let note = if s.degenerate.is_empty() {
            String::new()
        } else {
            format!("w = 0 at {} weights", s.degenerate.len())
        };
        t.push(vec![
            "Singular".into(),
            format!("{:?}", s.kind),
            if s.passes() { "pass" } else { "FAIL" }.into(),
            note,
        ]);
    }

    let failed = agg.iter().any(|c| c.status == CheckStatus::Fail)
        || !conf.is_confluent()
        || composites
            .iter()
            .any(|c| !c.holds_as_printed() && c.correction_residuals != Some((0, 0)))
        || singular.iter().any(|s| !s.passes());
    let v = json!({
        "q12": q12,
        "weights": n,
        "relations": agg,
        "confluence": { "words": conf.words_checked, "mismatches": conf.mismatches.len() },
        "composites": composites.iter().map(|c| json!({
            "identity": c.printed,
            "holds_as_printed": c.holds_as_printed(),
            "correction": c.correction,
        })).collect::<Vec<_>>(),
        "singular": singular,
    });
    print(render(f, &t, &v)?)?;
    Ok(if failed { Outcome::Mismatch } else { Outcome::Ok })
}

fn z12_cmd(f: Format, engine: &Engine, check: bool) -> Result<Outcome> {
    let chars = z12_characters();
    let reports: Vec<ReportJson> = chars.par_iter().map(|p| engine.report(p)).collect::<Result<_>>()?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &reports {
        *counts.entry(r.dim).or_default() += 1;
    }
    let hit: BTreeSet<u32> = reports.iter().map(|r| r.family).collect();
    let empty: Vec<u32> = FamilyId::all().map(FamilyId::index).filter(|k| !hit.contains(k)).collect();
    let printed: BTreeMap<usize, usize> = PRINTED_Z12.iter().copied().collect();
    let dims: BTreeSet<usize> = counts.keys().chain(printed.keys()).copied().collect();

    let mut t = Table::new(&["dim", "count", "printed"]);
    for d in dims.iter().rev() {
        let show = |m: &BTreeMap<usize, usize>| m.get(d).copied().unwrap_or(0).to_string();
        t.push(vec![d.to_string(), show(&counts), show(&printed)]);
    }
    let same = counts == printed && empty == PRINTED_EMPTY;
    let v = json!({
        "counts": counts.iter().rev().map(|(d, c)| [d, c]).collect::<Vec<_>>(),
        "empty_families": empty,
        "total": reports.len(),
        "matches_printed": same,
    });
    let mut s = render(f, &t, &v)?;
    if f == Format::Md {
        let names: Vec<String> = empty.iter().map(|k| format!("I{k}")).collect();
        s.push_str(&format!("\nempty families: {}\n", names.join(", ")));
    }
    print(s)?;
    Ok(if check && !same { Outcome::Mismatch } else { Outcome::Ok })
}

fn rank1_cmd(f: Format, n: u32, q: &CycNum, lam: &CycNum, oracle: bool) -> Result<Outcome> {
    let p = Rank1Params::new(n, q.clone(), lam.clone())?;
    let d = rank1_dim(&p);
    let o = oracle.then(|| rank1_oracle(&p));
    let mut t = Table::new(&["N", "q", "lam", "dim"]);
    let mut row = vec![n.to_string(), q.to_string(), lam.to_string(), d.to_string()];
    if let Some(o) = o {
        t.headers.extend(["oracle".to_string(), "agree".to_string()]);
        row.extend([o.to_string(), (o == d).to_string()]);
    }
    t.push(row);
    let v = json!({ "N": n, "q": q, "lam": lam, "dim": d, "oracle": o });
    print(render(f, &t, &v)?)?;
    Ok(if o.is_some_and(|o| o != d) { Outcome::Mismatch } else { Outcome::Ok })
}
