use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use seifert11::dunwoody::{
    build_tessellation, dunwoody_params_for_seifert, glue, read_presentation, seifert_criterion, DunwoodyParams,
    QuotientComplex,
};
use seifert11::foxcalc::{alexander_polynomial, wirtinger_example};
use seifert11::homology::{bigint_json, homology_from_presentation, smith_normal_form, AbelianGroup, IntMatrix};
use seifert11::knots11::{ambient_lens_space, singer_reduce, theorem_knot_for, KnotParams, LensSpace};
use seifert11::presentations::{
    count_homomorphisms, find_relabeling, seifert_standard_for, verify_tietze_identities, CyclicPresentation,
    FinitePresentation, PermGroupTable, TietzeFamily,
};
use seifert11::SeifertParams;

use crate::output::{CliError, Outcome};
use crate::{KnotArgs, SeifertArgs};

fn seifert(args: &SeifertArgs) -> Result<SeifertParams, CliError> {
    Ok(SeifertParams::for_covering(args.n, args.p, args.q, args.l)?)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<FinitePresentation, CliError> {
    Ok(FinitePresentation::from_json(&read_file(path)?)?)
}

pub fn present(args: &SeifertArgs, target: Option<&str>, budget: u64) -> Result<Outcome, CliError> {
    let sp = seifert(args)?;
    let cp = CyclicPresentation::seifert(&sp);
    let cyclic = cp.expand();
    let standard = seifert_standard_for(&sp);
    let mut text = format!("Sigma{sp}\nw = {}\nG_{}(w) = {cyclic}\nstandard = {standard}\n", cp.word(), sp.n);
    let mut out = json!({
        "params": sp,
        "word": cp.word(),
        "cyclic": cyclic.to_json(),
        "standard": standard.to_json(),
    });
    let mut ok = true;
    if let Some(name) = target {
        let group = PermGroupTable::named(name)?;
        let a = count_homomorphisms(&cyclic, &group, budget)?;
        let b = count_homomorphisms(&standard, &group, budget)?;
        ok = a == b;
        writeln!(text, "homomorphisms into {name}: cyclic {a}, standard {b}").unwrap();
        out["homomorphisms"] = json!({ "target": name, "cyclic": a, "standard": b, "agree": ok });
    }
    Ok(Outcome { json: out, text, ok })
}

pub fn tietze(args: &SeifertArgs) -> Result<Outcome, CliError> {
    let report = verify_tietze_identities(args.n, args.p, args.q, args.l)?;
    let mut text = format!("Tietze identities for Sigma{}\n", report.params);
    for family in [TietzeFamily::A, TietzeFamily::B, TietzeFamily::C, TietzeFamily::D] {
        let checks: Vec<_> = report.family(family).collect();
        let passed = checks.iter().filter(|c| c.pass).count();
        writeln!(text, "  family {family:?}: {passed}/{} hold", checks.len()).unwrap();
    }
    for c in report.failures() {
        writeln!(text, "  FAIL {:?}[{}]: {} != {}", c.family, c.index, c.lhs, c.rhs).unwrap();
    }
    let ok = report.all_passed();
    let mut out = serde_json::to_value(&report).expect("report serializes");
    out["pass"] = ok.into();
    Ok(Outcome { json: out, text, ok })
}

fn homology_outcome(h: AbelianGroup) -> Outcome {
    Outcome::ok(serde_json::to_value(&h).expect("group serializes"), h.to_string())
}

pub fn homology_cyclic(args: &SeifertArgs) -> Result<Outcome, CliError> {
    let sp = seifert(args)?;
    Ok(homology_outcome(homology_from_presentation(&CyclicPresentation::seifert(&sp).expand())))
}

pub fn homology_standard(args: &SeifertArgs) -> Result<Outcome, CliError> {
    let sp = seifert(args)?;
    Ok(homology_outcome(homology_from_presentation(&seifert_standard_for(&sp))))
}

pub fn homology_presentation(path: &Path) -> Result<Outcome, CliError> {
    Ok(homology_outcome(homology_from_presentation(&load_presentation(path)?)))
}

fn matrix_entry(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(x) => x.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Entries are JSON integers, or decimal strings for values beyond `i64`.
fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let bad = |msg: &str| CliError::Usage(format!("matrix: {msg}"));
    let rows: Vec<Vec<Value>> = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let cols = rows.first().map_or(0, Vec::len);
    let rows = rows
        .iter()
        .map(|row| {
            if row.len() != cols {
                return Err(bad("rows have different lengths"));
            }
            row.iter().map(|v| matrix_entry(v).ok_or_else(|| bad(&format!("{v} is not an integer")))).collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
    IntMatrix::from_rows(rows, cols).map_err(|e| bad(&e.to_string()))
}

pub fn homology_matrix(path: &Path) -> Result<Outcome, CliError> {
    let m = parse_matrix(&read_file(path)?)?;
    let snf = smith_normal_form(&m);
    let h = AbelianGroup::from_invariants(m.cols(), &snf.diagonal);
    let mut outcome = homology_outcome(h);
    outcome.json["diagonal"] = snf.diagonal.iter().map(bigint_json).collect();
    Ok(outcome)
}

/// `L(p,q)`, with the conventional name appended for `S^3` and `S^2xS^1`.
fn lens_text(lens: &LensSpace) -> String {
    match lens.describe() {
        name if name == lens.to_string() => name,
        name => format!("{lens} = {name}"),
    }
}

fn knot(args: &KnotArgs) -> Result<KnotParams, CliError> {
    Ok(KnotParams::new(args.a, args.b, args.c, args.r)?)
}

pub fn knot_reduce(args: &KnotArgs) -> Result<Outcome, CliError> {
    let k = knot(args)?;
    let red = singer_reduce(&k)?;
    let mut text = format!("{k}: case {} -> {}\n", red.case, lens_text(&red.lens));
    for step in &red.trace.steps {
        writeln!(text, "  {:<16} {} -> {}", format!("{:?}", step.kind), step.before, step.after).unwrap();
    }
    writeln!(text, "  {} Singer moves", red.trace.singer_moves()).unwrap();
    let json = json!({
        "knot": k,
        "case": red.case,
        "lens": red.lens,
        "lens_name": red.lens.describe(),
        "singer_moves": red.trace.singer_moves(),
        "trace": red.trace.steps,
    });
    Ok(Outcome::ok(json, text))
}

pub fn knot_ambient(args: &KnotArgs) -> Result<Outcome, CliError> {
    let k = knot(args)?;
    let lens = ambient_lens_space(&k)?;
    let json = json!({ "knot": k, "lens": lens, "lens_name": lens.describe() });
    Ok(Outcome::ok(json, format!("{k} lies in {}", lens_text(&lens))))
}

pub fn knot_from_seifert(args: &SeifertArgs) -> Result<Outcome, CliError> {
    let sp = seifert(args)?;
    let t = theorem_knot_for(&sp)?;
    let text = format!(
        "Sigma{sp} is the {}-fold strongly-cyclic cover of {} over {}, monodromy ({},{})",
        sp.n,
        t.knot,
        lens_text(&t.lens),
        t.monodromy.0,
        t.monodromy.1
    );
    let mut json = serde_json::to_value(t).expect("knot serializes");
    json["lens_name"] = t.lens.describe().into();
    Ok(Outcome::ok(json, text))
}

fn edge_table(qc: &QuotientComplex) -> Value {
    qc.edge_class_table()
        .into_iter()
        .map(|(edge, generator, reversed)| json!({ "edge": edge, "generator": generator, "reversed": reversed }))
        .collect()
}

fn edge_text(qc: &QuotientComplex) -> String {
    qc.edge_class_table()
        .into_iter()
        .map(|(edge, g, rev)| format!("  {edge} -> x{g}{}\n", if rev { "^-1" } else { "" }))
        .collect()
}

/// Counts, pass flag and boundary words of a glued diagram.
fn glued(d: &DunwoodyParams, edges: bool) -> Result<(QuotientComplex, Value, String), CliError> {
    let qc = glue(&build_tessellation(d)?, d.r, d.s)?;
    let counts = seifert_criterion(&qc);
    let pres = qc.boundary_presentation();
    let mut text = format!("{d}: {counts} {}\n", if counts.pass { "pass" } else { "FAIL" });
    writeln!(text, "  {pres}").unwrap();
    let mut json = json!({
        "dunwoody": d,
        "counts": counts,
        "pass": counts.pass,
        "generators": pres.generators(),
        "relators": pres.relator_strings(),
    });
    if edges {
        json["edges"] = edge_table(&qc);
        text.push_str(&edge_text(&qc));
    }
    Ok((qc, json, text))
}

pub fn dunwoody_check(args: &SeifertArgs, edges: bool) -> Result<Outcome, CliError> {
    let sp = seifert(args)?;
    let d = dunwoody_params_for_seifert(&sp)?;
    let (qc, mut json, mut text) = glued(&d, edges)?;
    let pass = json["pass"].as_bool().unwrap_or(false);
    let matches = match read_presentation(&qc) {
        Ok(read) => find_relabeling(&read, &CyclicPresentation::seifert(&sp).expand(), false).is_some(),
        Err(_) => false,
    };
    json["params"] = serde_json::to_value(sp).expect("params serialize");
    json["matches_cyclic"] = matches.into();
    writeln!(text, "  read-off {} G_{}(w) of Sigma{sp}", if matches { "matches" } else { "DOES NOT match" }, sp.n)
        .unwrap();
    Ok(Outcome { json, text, ok: pass && matches })
}

pub fn dunwoody_raw(abcnr: [u64; 5], s: u8, edges: bool) -> Result<Outcome, CliError> {
    let [a, b, c, n, r] = abcnr;
    let d = DunwoodyParams::new(a, b, c, n, r, s)?;
    let (_, json, text) = glued(&d, edges)?;
    Ok(Outcome::ok(json, text))
}

pub fn alexander(path: Option<&Path>) -> Result<Outcome, CliError> {
    let pres = match path {
        Some(p) => load_presentation(p)?,
        None => wirtinger_example(),
    };
    let delta = alexander_polynomial(&pres)?;
    let at = |t: i64| delta.eval(t).map_or(Value::Null, |v| bigint_json(&v));
    let json = json!({ "polynomial": delta, "at_one": at(1), "at_minus_one": at(-1) });
    Ok(Outcome::ok(json, delta.to_string()))
}
