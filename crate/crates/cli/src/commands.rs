use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use atlas::{AtlasError, CaseId, CatalogEquation, DualSource, Layer, VerificationReport};
use classify::{dolgachev_numbers, verify_embedding, DeformationClass};
use mftwo::{Convention, MF2};
use polycore::{parse_poly, MultiPoly, Rational};
use serde_json::{json, Value};

use crate::render::{matrix_json, matrix_text, monomial, poly_json, rationals, tuple, Lines};
use crate::{ConventionArg, GraphFormat, MfInput, PolyInput, ReduceKind, Which};

pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when a verification ran and failed.
    pub ok: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

type CliResult = Result<Output, CliError>;

fn failed(e: impl fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Identifiers of the texts: `x, y, z, w` first, then the rest sorted.
fn infer_vars(texts: &[&str]) -> Vec<String> {
    let mut found = BTreeSet::new();
    for t in texts {
        let mut cur = String::new();
        for c in t.chars().chain([' ']) {
            if c.is_ascii_alphabetic() || c == '_' || (!cur.is_empty() && c.is_ascii_digit()) {
                cur.push(c);
            } else if !cur.is_empty() {
                found.insert(std::mem::take(&mut cur));
            }
        }
    }
    let mut out: Vec<String> = ["x", "y", "z", "w"]
        .iter()
        .filter(|v| found.remove(**v))
        .map(|v| v.to_string())
        .collect();
    out.extend(found);
    out
}

fn parse_with(texts: &[&str], vars: Option<&[String]>) -> Result<Vec<MultiPoly>, CliError> {
    let vars = vars
        .map(<[String]>::to_vec)
        .unwrap_or_else(|| infer_vars(texts));
    texts
        .iter()
        .map(|t| parse_poly(t, &vars).map_err(|e| usage(format!("cannot parse '{t}': {e}"))))
        .collect()
}

fn catalog_equation(row: usize) -> Result<&'static CatalogEquation, CliError> {
    let n = atlas::catalog_equations().count();
    row.checked_sub(1)
        .and_then(|i| atlas::catalog_equations().nth(i))
        .map(|(_, e)| e)
        .ok_or_else(|| usage(format!("row must be between 1 and {n}")))
}

fn input_poly(input: &PolyInput) -> Result<MultiPoly, CliError> {
    match (&input.poly, input.row) {
        (Some(text), None) => Ok(parse_with(&[text], input.vars.as_deref())?.remove(0)),
        (None, Some(row)) => catalog_equation(row)?.polynomial(&[]).map_err(failed),
        _ => Err(usage("give a polynomial or --row")),
    }
}

fn parse_lambdas(items: &[String]) -> Result<Vec<Rational>, CliError> {
    items
        .iter()
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|_| usage(format!("bad rational '{s}'")))
        })
        .collect()
}

fn default_lambdas(m: u32) -> Vec<Rational> {
    (1..=i64::from(m)).map(polycore::rat).collect()
}

fn three(p: &[u32]) -> Result<[u32; 3], CliError> {
    p.try_into()
        .map_err(|_| usage(format!("--p needs three values, got {}", p.len())))
}

pub fn weights(input: &PolyInput) -> CliResult {
    let f = input_poly(input)?;
    let (_, w, g) = grading::analyse(&f).map_err(failed)?;
    let r = w.reduced();
    let text = Lines::default()
        .kv("polynomial", &f)
        .kv("canonical weights", &w)
        .kv("reduced weights", &r)
        .kv("c", w.c)
        .kv("epsilon", r.epsilon)
        .kv("L_f", &g)
        .kv("degree map iso", g.degree_map_is_iso())
        .finish();
    let json = json!({
        "polynomial": poly_json(&f),
        "canonical": { "weights": w.weights, "degree": w.degree },
        "reduced": { "weights": r.weights, "degree": r.degree },
        "c": w.c,
        "epsilon": r.epsilon,
        "grading": { "rank": g.rank(), "torsion": g.torsion(), "text": g.to_string() },
        "degree_map_iso": g.degree_map_is_iso(),
    });
    Ok(Output {
        text,
        json,
        ok: true,
    })
}

fn class_json(c: &DeformationClass) -> Value {
    json!({
        "type": c.kind.name(),
        "p": c.p,
        "m": c.m,
        "lambdas": rationals(&c.lambdas),
        "permutation": c.permutation,
        "signs": c.signs,
        "scalar": c.scalar.to_string(),
    })
}

fn class_lines(out: &mut Lines, c: &DeformationClass) {
    out.kv("type", c.kind)
        .kv("p", tuple(&c.p))
        .kv("m", c.m)
        .kv("lambda", tuple(&c.lambdas));
}

pub fn classify(input: &PolyInput) -> CliResult {
    let f = input_poly(input)?;
    let c = classify::classify_deformation(&f).map_err(failed)?;
    let sig = dolgachev_numbers(&c);
    let mut out = Lines::default();
    out.kv("polynomial", &f);
    class_lines(&mut out, &c);
    match &sig {
        Ok(s) => out.kv("dolgachev", s),
        Err(e) => out.kv("dolgachev", format!("unknown ({e})")),
    };
    let mut json = class_json(&c);
    json["polynomial"] = poly_json(&f);
    json["dolgachev"] = sig.as_ref().map_or(Value::Null, |s| json!(s.alphas()));
    Ok(Output {
        text: out.finish(),
        json,
        ok: true,
    })
}

pub fn embed_check(input: &PolyInput, lambdas: Option<&[String]>) -> CliResult {
    let f = input_poly(input)?;
    let c = classify::classify_deformation(&f).map_err(failed)?;
    let l = match lambdas {
        Some(items) => parse_lambdas(items)?,
        None => c.lambdas.clone(),
    };
    let sig = dolgachev_numbers(&c).map_err(failed)?;
    let ok = verify_embedding(&c, &l).map_err(failed)?;
    let mut out = Lines::default();
    class_lines(&mut out, &c);
    out.kv("dolgachev", &sig)
        .kv("target lambda", tuple(&l))
        .kv("embedding", if ok { "verified" } else { "fails" });
    let json = json!({
        "class": class_json(&c),
        "dolgachev": sig.alphas(),
        "target_lambdas": rationals(&l),
        "verified": ok,
    });
    Ok(Output {
        text: out.finish(),
        json,
        ok,
    })
}

fn build_mf(input: &MfInput) -> Result<MF2, CliError> {
    let explicit = [&input.p1, &input.p2, &input.h1, &input.h2];
    let given = explicit.iter().filter(|e| e.is_some()).count();
    let sources = usize::from(given > 0)
        + usize::from(input.case.is_some())
        + usize::from(input.two_var.is_some());
    if sources != 1 {
        return Err(usage(
            "give exactly one of --p1/--p2/--h1/--h2, --case or --two-var",
        ));
    }
    if given > 0 {
        let texts: Vec<&str> = explicit
            .iter()
            .map(|e| {
                e.as_deref()
                    .ok_or_else(|| usage("--p1, --p2, --h1 and --h2 are all required"))
            })
            .collect::<Result<_, _>>()?;
        let ps = parse_with(&texts, input.vars.as_deref())?;
        return mftwo::koszul_mf(&ps[0], &ps[1], &ps[2], &ps[3]).map_err(failed);
    }
    if let Some(ab) = &input.two_var {
        let [a, b] = ab.as_slice() else {
            return Err(usage("--two-var needs alpha,beta"));
        };
        return mftwo::mf2_two_var(*a, *b).map_err(failed);
    }
    let case: CaseId = input
        .case
        .as_deref()
        .unwrap_or_default()
        .parse()
        .map_err(usage)?;
    let p = three(
        input
            .p
            .as_deref()
            .ok_or_else(|| usage("--case needs --p"))?,
    )?;
    let m = input.m.ok_or_else(|| usage("--case needs --m"))?;
    let l = match &input.lambdas {
        Some(items) => parse_lambdas(items)?,
        None => default_lambdas(m),
    };
    let inst = atlas::instantiate(case, p, m, &l, input.arm).map_err(atlas_error)?;
    atlas::case_mf(&inst).map_err(failed)
}

fn atlas_error(e: AtlasError) -> CliError {
    match e {
        AtlasError::UnknownCase(_) | AtlasError::BadArm { .. } | AtlasError::Classify(_) => {
            usage(e)
        }
        _ => failed(e),
    }
}

fn mf_json(mf: &MF2) -> Value {
    json!({
        "f": poly_json(&mf.f),
        "p1": mf.p1.to_string(),
        "p2": mf.p2.to_string(),
        "h1": mf.h1.to_string(),
        "h2": mf.h2.to_string(),
        "weights": mf.weights,
        "degree": mf.degree,
        "q0": matrix_json(&mf.q0()),
        "q1": matrix_json(&mf.q1()),
        "shifts": { "f0": mf.shifts.f0, "f1": mf.shifts.f1 },
        "warnings": mf.warnings,
        "verified": true,
    })
}

pub fn mf(input: &MfInput) -> CliResult {
    let mf = build_mf(input)?;
    let mut out = Lines::default();
    out.kv("f", &mf.f)
        .kv("variables", tuple(mf.vars()))
        .kv("weights", tuple(&mf.weights))
        .kv("degree", mf.degree)
        .kv("q0", matrix_text(&mf.q0()))
        .kv("q1", matrix_text(&mf.q1()))
        .kv("F0 shifts", tuple(&mf.shifts.f0))
        .kv("F1 shifts", tuple(&mf.shifts.f1));
    for w in &mf.warnings {
        out.kv("warning", w);
    }
    out.kv("verified", true);
    Ok(Output {
        text: out.finish(),
        json: mf_json(&mf),
        ok: true,
    })
}

pub fn fq(input: &MfInput, convention: ConventionArg) -> CliResult {
    let mf = build_mf(input)?;
    let conv = match convention {
        ConventionArg::Q0 => Convention::Q0,
        ConventionArg::Q1 => Convention::Q1,
    };
    let ci = mftwo::singularity_from_mf(&mf, conv);
    let mut out = Lines::default();
    out.kv("f", &mf.f).kv("variables", tuple(&ci.vars));
    for e in &ci.equations {
        out.kv("equation", e);
    }
    let mut json = json!({
        "f": poly_json(&mf.f),
        "convention": if conv == Convention::Q0 { "q0" } else { "q1" },
        "w": ci.w,
        "vars": ci.vars,
        "equations": ci.equations.iter().map(MultiPoly::to_string).collect::<Vec<_>>(),
    });
    if input.two_var.is_some() {
        let f_q = mftwo::two_var_fq(&mf).map_err(failed)?;
        out.kv("F_Q", &f_q);
        json["two_var_fq"] = poly_json(&f_q);
    }
    Ok(Output {
        text: out.finish(),
        json,
        ok: true,
    })
}

pub fn reduce(
    kind: ReduceKind,
    input: &[String],
    var: &str,
    z: &str,
    vars: Option<&[String]>,
) -> CliResult {
    let texts: Vec<&str> = input.iter().map(String::as_str).collect();
    let want = if kind == ReduceKind::L { 2 } else { 1 };
    if texts.len() != want {
        return Err(usage(format!(
            "this reduction takes {want} polynomial(s), got {}",
            texts.len()
        )));
    }
    let polys = parse_with(&texts, vars)?;
    let (name, result) = match kind {
        ReduceKind::L => {
            let ci = mftwo::CompleteIntersection::new(var, polys.clone());
            ("L", reduce::l_reduce(&ci, var))
        }
        ReduceKind::Delta => ("delta", reduce::delta_reduce_in(&polys[0], var, z)),
        ReduceKind::R => ("R", reduce::r_reduce_in(&polys[0], var, "x")),
    };
    let result = result.map_err(failed)?;
    let mut out = Lines::default();
    out.kv("reduction", name).kv("result", &result);
    let mut json = json!({
        "kind": name,
        "input": polys.iter().map(MultiPoly::to_string).collect::<Vec<_>>(),
        "result": poly_json(&result),
    });
    if kind == ReduceKind::R {
        json["match"] = Value::Null;
        for tv in atlas::TWO_VARIABLE_CASES {
            let f = mftwo::mf2_two_var(tv.alpha, tv.beta).map_err(failed)?.f;
            if let Some((unit, map)) = reduce::unit_and_renaming(&result, &f) {
                let renaming: Vec<String> =
                    map.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
                out.kv("matched", format!("{} ({})", tv.name, f))
                    .kv("renaming", renaming.join(", "))
                    .kv("unit", &unit);
                json["match"] = json!({
                    "name": tv.name,
                    "polynomial": f.to_string(),
                    "renaming": map,
                    "unit": unit.to_string(),
                });
                break;
            }
        }
        if json["match"].is_null() {
            out.kv("matched", "none");
        }
    }
    Ok(Output {
        text: out.finish(),
        json,
        ok: true,
    })
}

pub fn enumerate(pmax: u32, mmax: u32) -> CliResult {
    let sols = atlas::enumerate_solutions(pmax, mmax);
    let projected = atlas::project(&sols);
    let expected = atlas::expected_solutions();
    let mut out = Lines::default();
    for s in &sols {
        out.line(format!("{} {} m={}", s.case, tuple(&s.p), s.m));
    }
    out.kv("solutions", sols.len())
        .kv("distinct (type, p, m)", projected.len());
    let fmt =
        |(k, p, m): &(classify::DeformationType, [u32; 3], u32)| format!("{k} {} m={m}", tuple(p));
    let missing: Vec<String> = expected.difference(&projected).map(fmt).collect();
    let extra: Vec<String> = projected.difference(&expected).map(fmt).collect();
    out.kv("expected tuples not found", missing.len());
    for t in &missing {
        out.line(format!("  {t}"));
    }
    out.kv("tuples outside catalog and extras", extra.len());
    let json = json!({
        "pmax": pmax,
        "mmax": mmax,
        "solutions": sols.iter().map(|s| json!({ "case": s.case.name(), "p": s.p, "m": s.m })).collect::<Vec<_>>(),
        "projected": projected.iter().map(|(k, p, m)| json!({ "type": k.name(), "p": p, "m": m })).collect::<Vec<_>>(),
        "missing": missing,
        "unexpected": extra,
    });
    Ok(Output {
        text: out.finish(),
        json,
        ok: true,
    })
}

fn report_output(r: &VerificationReport) -> Output {
    let mut out = Lines::default();
    out.kv("case", r.case)
        .kv("p", tuple(&r.p))
        .kv("m", r.m)
        .kv("lambda", tuple(&r.lambdas))
        .kv("signature", tuple(&r.signature))
        .kv("enlarged", tuple(&r.enlarged))
        .kv("index", r.index);
    for (name, e) in ["x", "y", "z", "w"].iter().zip(&r.instance.mapping) {
        out.line(format!("  {name} = {}", monomial(e)));
    }
    for e in &r.equations {
        out.kv("equation", e);
    }
    match &r.lambda_tilde {
        Some(l) => out.kv("target lambda", tuple(l)),
        None => out.kv("target lambda", "none"),
    };
    for e in &r.residues {
        out.kv("residue", e);
    }
    out.kv("result", if r.success() { "verified" } else { "fails" });
    let json = json!({
        "case": r.case.name(),
        "p": r.p,
        "m": r.m,
        "lambdas": rationals(&r.lambdas),
        "signature": r.signature,
        "enlarged": r.enlarged,
        "index": r.index,
        "mapping": {
            "x": r.instance.mapping[0], "y": r.instance.mapping[1],
            "z": r.instance.mapping[2], "w": r.instance.mapping[3],
        },
        "matrix": matrix_json(&r.instance.matrix),
        "equations": r.equations.iter().map(MultiPoly::to_string).collect::<Vec<_>>(),
        "target_lambdas": r.lambda_tilde.as_deref().map(rationals),
        "residues": r.residues.iter().map(MultiPoly::to_string).collect::<Vec<_>>(),
        "verified": r.success(),
    });
    Output {
        text: out.finish(),
        json,
        ok: r.success(),
    }
}

pub fn verify_theorem(
    case: &str,
    p: &[u32],
    m: u32,
    lambdas: Option<&[String]>,
    arm: Option<usize>,
) -> CliResult {
    let case: CaseId = case.parse().map_err(usage)?;
    let p = three(p)?;
    let l = match lambdas {
        Some(items) => parse_lambdas(items)?,
        None => default_lambdas(m),
    };
    match atlas::theorem_verify(case, p, m, &l, arm) {
        Ok(r) => Ok(report_output(&r)),
        Err(AtlasError::ResidueNonzero(r)) => Ok(report_output(&r)),
        Err(e) => Err(atlas_error(e)),
    }
}

pub fn catalog() -> CliResult {
    let mut out = Lines::default();
    let mut rows = Vec::new();
    for row in atlas::catalog() {
        let [a, b, c, h] = row.weights;
        out.line(format!("({a},{b},{c};{h}) {}", row.name.unwrap_or("-")));
        let mut eqs = Vec::new();
        for e in row.equations {
            out.line(format!(
                "  {} {} m={} A={}: {}",
                e.kind,
                tuple(&e.p),
                e.m,
                tuple(e.signature),
                e.f
            ));
            eqs.push(json!({ "f": e.f, "type": e.kind.name(), "p": e.p, "m": e.m, "dolgachev": e.signature }));
        }
        rows.push(json!({ "weights": row.weights, "name": row.name, "equations": eqs }));
    }
    Ok(Output {
        text: out.finish(),
        json: json!({ "rows": rows }),
        ok: true,
    })
}

pub fn pyramid(which: Which, format: GraphFormat) -> CliResult {
    let layer = match which {
        Which::Reductions => Layer::Reductions,
        Which::Virtual => Layer::Virtual,
        Which::Adjacency => Layer::Adjacency,
    };
    let g = atlas::layer_graph(layer);
    let json_text = g.to_json();
    let text = match format {
        GraphFormat::Dot => g.to_dot(layer.name()),
        GraphFormat::Json => format!("{json_text}\n"),
    };
    Ok(Output {
        text,
        json: serde_json::from_str(&json_text).expect("graph json"),
        ok: true,
    })
}

fn load_duality(table: Option<&Path>) -> Result<atlas::Duality, CliError> {
    match table {
        None => atlas::duality().map_err(failed),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let records = atlas::parse_duality_table(&text).map_err(usage)?;
            atlas::duality_from(Some(&records)).map_err(failed)
        }
    }
}

pub fn duality(table: Option<&Path>) -> CliResult {
    let d = load_duality(table)?;
    let mut out = Lines::default();
    let mut pairs = Vec::new();
    for (a, b, s) in d.pairs() {
        let source = if s == DualSource::Matching {
            "matching"
        } else {
            "table"
        };
        out.line(format!("{a} <-> {b} ({source})"));
        pairs.push(json!({ "name": a, "dual": b, "source": source }));
    }
    Ok(Output {
        text: out.finish(),
        json: json!({ "pairs": pairs }),
        ok: true,
    })
}

pub fn verify_corollary(table: Option<&Path>) -> CliResult {
    let d = load_duality(table)?;
    let r = atlas::verify_corollary(&atlas::atlas(), &d);
    let mut out = Lines::default();
    for p in &r.verified {
        out.line(format!(
            "ok   {} -> {}: {} -- {}",
            p.from, p.to, p.dual_from, p.dual_to
        ));
    }
    for p in &r.failures {
        out.line(format!(
            "FAIL {} -> {}: {} -- {}",
            p.from, p.to, p.dual_from, p.dual_to
        ));
    }
    for (a, b) in &r.skipped {
        out.line(format!("skip {a} -> {b}: no dual"));
    }
    out.kv("verified", r.verified.len())
        .kv("failures", r.failures.len())
        .kv("skipped", r.skipped.len());
    let json = serde_json::to_value(&r).expect("report json");
    Ok(Output {
        text: out.finish(),
        json,
        ok: r.failures.is_empty(),
    })
}
