use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hodge_cones::algebra::{hodge_dimension, kunneth_degree, relation_generators, HodgeRing, Monomial};
use hodge_cones::cones::{
    extremality_rank, nef_sampled_check, sample_ek, semi4_extremal_decompose, semi_membership_with, Semi4Outcome, SemiRoute,
};
use hodge_cones::forms::{intersection_number_formula, FormOracle};
use hodge_cones::linalg::DEFAULT_TOLERANCE;
use hodge_cones::rep2::{blocks_for, format_linear_form};
use hodge_cones::scalar::{binomial, format_rational};
use hodge_cones::schur::enumerate_hodge_diagrams;
use hodge_cones::serial::{class_from_str, class_to_json, rationals_to_json};
use hodge_cones::Class;

use crate::config::{RunConfig, DEFAULT_SEED};
use crate::error::CliError;
use crate::output::{Format, Report, Table};
use crate::verify::run_battery;

#[derive(Debug, Parser)]
#[command(name = "hodge-cones", version, about = "Hodge classes and positivity cones on self-products of abelian varieties")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Tolerance of the floating-point pre-pass used by large PSD tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of N^k(A^e) with their Young diagrams.
    Dims(DimsArgs),
    /// Generators of the ideal of relations.
    Relations(AmbientArgs),
    /// Top intersection number of θ1^a θ2^b λ^c on A × A.
    Intersect(IntersectArgs),
    /// Block maps cutting out the semipositive cone of A × A.
    Blocks(BlocksArgs),
    /// Semipositivity certificate for a class.
    Semi(SemiArgs),
    /// Samples of products of nef rank-one divisors.
    Rays(RaysArgs),
    /// Sampled falsification of nefness.
    NefSample(NefArgs),
    /// Extremal decomposition of a degree-4 class on A × A for n = 3.
    Decompose4(ClassArg),
    /// Runs the reference battery and prints a pass/fail table.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct AmbientArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 2)]
    pub e: usize,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[command(flatten)]
    pub ambient: AmbientArgs,
    /// Single degree; all degrees when omitted.
    #[arg(long)]
    pub k: Option<u32>,
    /// Also compute the rank of the quotient ring.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct IntersectArgs {
    #[arg(long)]
    pub n: u32,
    /// Exponents `a,b,c` of θ1, θ2, λ.
    #[arg(long)]
    pub mono: String,
}

#[derive(Debug, Args)]
pub struct BlocksArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RouteArg {
    Auto,
    Blocks,
    Oracle,
}

#[derive(Debug, Args)]
pub struct ClassArg {
    /// JSON file, inline JSON, or `-` for stdin.
    #[arg(long)]
    pub class: String,
}

#[derive(Debug, Args)]
pub struct SemiArgs {
    #[command(flatten)]
    pub class: ClassArg,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
    pub route: RouteArg,
}

#[derive(Debug, Args)]
pub struct RaysArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long, default_value_t = 2)]
    pub e: usize,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Dimension used for the rank of b′ (defaults to k).
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct NefArgs {
    #[command(flatten)]
    pub class: ClassArg,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Dims(a) => dims(a),
        Command::Relations(a) => relations(a),
        Command::Intersect(a) => intersect(a),
        Command::Blocks(a) => blocks(a),
        Command::Semi(a) => semi(a, cli.tolerance),
        Command::Rays(a) => rays(a),
        Command::NefSample(a) => nef_sample(a),
        Command::Decompose4(a) => decompose4(a),
        Command::VerifyPaper(a) => verify_paper(a),
    }
}

fn config(n: u32, e: usize, k: Option<u32>) -> Result<RunConfig, CliError> {
    let c = RunConfig { n, e, k, ..Default::default() };
    c.validate()?;
    Ok(c)
}

/// Reads a class from a path, inline JSON, or stdin (`-`).
pub fn load_class(arg: &str) -> Result<Class, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?
    };
    class_from_str(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn rows_json(rows: &[u32]) -> Value {
    json!(rows)
}

fn dims(a: &DimsArgs) -> Result<Report, CliError> {
    let c = config(a.ambient.n, a.ambient.e, a.k)?;
    let ks: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => (0..=c.top_degree()).collect(),
    };
    let ring = if a.verify { Some(HodgeRing::shared(c.n, c.e)?) } else { None };
    let mut table = Table::new(&["n", "e", "k", "diagrams", "dim"]);
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut ok = true;
    for k in ks {
        let diagrams = enumerate_hodge_diagrams(c.n, c.e, k);
        let dim = hodge_dimension(c.n, c.e, k);
        let shown: Vec<String> = diagrams.iter().map(ToString::to_string).collect();
        let mut v = json!({
            "n": c.n, "e": c.e, "k": k,
            "diagrams": diagrams.iter().map(|d| rows_json(d.rows())).collect::<Vec<_>>(),
            "dim": dim,
        });
        let mut line = format!("k={k}: dim {dim} from {}", if shown.is_empty() { "-".to_string() } else { shown.join(" ") });
        if let Some(ring) = &ring {
            let rank = ring.quotient_rank(k)? as u128;
            ok &= rank == dim;
            v["quotient_rank"] = json!(rank);
            v["agree"] = json!(rank == dim);
            line.push_str(&format!(", quotient rank {rank}"));
        }
        table.push(vec![c.n.to_string(), c.e.to_string(), k.to_string(), shown.join(" "), dim.to_string()]);
        text.push_str(&line);
        text.push('\n');
        entries.push(v);
    }
    let json = if a.k.is_some() { entries.pop().expect("one degree") } else { json!({ "n": c.n, "e": c.e, "dims": entries }) };
    let mut r = Report::new(json, table, text);
    r.ok = ok;
    Ok(r)
}

fn relations(a: &AmbientArgs) -> Result<Report, CliError> {
    let c = config(a.n, a.e, None)?;
    let rels = relation_generators(c.n, c.e);
    let expected = binomial(2 * c.n as i64 + 1 + c.e as i64, 2 * c.n as i64 + 2);
    let mut table = Table::new(&["index", "kunneth", "relation"]);
    let mut text = format!("{} relations in degree {} (expected {expected})\n", rels.len(), c.n + 1);
    let mut list = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        let lead = r.terms().next().map(|(m, _)| m.clone()).unwrap_or_else(|| Monomial::one(c.e));
        let kd = kunneth_degree(&lead, c.e).0;
        table.push(vec![i.to_string(), format!("{kd:?}"), r.to_string()]);
        text.push_str(&format!("  {kd:?}  {r}\n"));
        list.push(json!({ "kunneth": kd, "text": r.to_string(), "class": class_to_json(r) }));
    }
    let json = json!({ "n": c.n, "e": c.e, "degree": c.n + 1, "count": rels.len(), "expected_count": expected, "relations": list });
    let mut r = Report::new(json, table, text);
    r.ok = rels.len() as u128 == expected;
    Ok(r)
}

fn parse_mono(s: &str) -> Result<[u32; 3], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::usage(format!("--mono expects three exponents a,b,c, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0u32; 3];
    for (o, p) in out.iter_mut().zip(&parts) {
        *o = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn intersect(a: &IntersectArgs) -> Result<Report, CliError> {
    let c = config(a.n, 2, None)?;
    let [x, y, z] = parse_mono(&a.mono)?;
    if x + y + z != 2 * c.n {
        return Err(CliError::usage(format!("monomial of degree {} is not of top degree {}", x + y + z, 2 * c.n)));
    }
    let formula = intersection_number_formula(c.n, x, y, z)?;
    let p = Class::from_e2(2 * c.n, [([x, y, z], hodge_cones::scalar::int(1))])?;
    let oracle = FormOracle::shared(c.n as usize, 2)?.top_pairing(&p, &Class::constant(2, hodge_cones::scalar::int(1)))?;
    let agree = formula == oracle;
    let (f, o) = (format_rational(&formula), format_rational(&oracle));
    let mut table = Table::new(&["n", "a", "b", "c", "formula", "oracle", "agree"]);
    table.push(vec![c.n.to_string(), x.to_string(), y.to_string(), z.to_string(), f.clone(), o.clone(), agree.to_string()]);
    let text = format!("θ1^{x} θ2^{y} λ^{z} on A×A (n={}): formula {f}, oracle {o}{}\n", c.n, if agree { "" } else { "  MISMATCH" });
    let json = json!({ "n": c.n, "monomial": [x, y, z], "formula": f, "oracle": o, "agree": agree });
    let mut r = Report::new(json, table, text);
    r.ok = agree;
    Ok(r)
}

fn blocks(a: &BlocksArgs) -> Result<Report, CliError> {
    let c = config(a.n, 2, Some(a.k))?;
    let list = blocks_for(c.n, a.k)?;
    let mut table = Table::new(&["l", "m", "multiplicity", "row", "col", "entry"]);
    let mut text = String::new();
    let mut out = Vec::new();
    for (b, mult) in &list {
        let entries: Vec<Vec<String>> = b.entries.iter().map(|row| row.iter().map(format_linear_form).collect()).collect();
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                table.push(vec![b.label.l.to_string(), b.label.m.to_string(), mult.to_string(), i.to_string(), j.to_string(), e.clone()]);
            }
        }
        let coefficients: Vec<Vec<Value>> = b
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|f| Value::Array(f.iter().rev().map(|(x, c)| json!({ "x": x, "coef": format_rational(c) })).collect()))
                    .collect()
            })
            .collect();
        text.push_str(&format!("multiplicity {mult}\n{b}\n"));
        out.push(json!({
            "label": { "l": b.label.l, "m": b.label.m },
            "multiplicity": mult,
            "size": b.size(),
            "entries": entries,
            "coefficients": coefficients,
        }));
    }
    Ok(Report::new(json!({ "n": c.n, "k": a.k, "blocks": out }), table, text))
}

fn semi(a: &SemiArgs, tolerance: f64) -> Result<Report, CliError> {
    let alpha = load_class(&a.class.class)?;
    let c = RunConfig { n: a.n, e: alpha.e().max(2), k: Some(alpha.degree()), tolerance, ..Default::default() };
    c.validate()?;
    let route = match a.route {
        RouteArg::Auto => SemiRoute::Auto,
        RouteArg::Blocks => SemiRoute::Blocks,
        RouteArg::Oracle => SemiRoute::Oracle,
    };
    let cert = semi_membership_with(&alpha, a.n, route, tolerance)?;
    let verified = cert.verify(&alpha)?;
    let mut json = serde_json::to_value(&cert).expect("certificate serializes");
    json["class"] = class_to_json(&alpha);
    json["verified"] = json!(verified);
    let mut table = Table::new(&["block", "multiplicity", "size", "rank", "psd"]);
    let mut text = format!("{alpha}  (n = {}): {:?}\n", a.n, cert.verdict);
    for ch in &cert.checks {
        let name = block_name(ch.block);
        table.push(vec![name.clone(), ch.multiplicity.to_string(), ch.size.to_string(), ch.rank.to_string(), ch.psd.to_string()]);
        text.push_str(&format!("  block {name:<8} ×{:<3} size {:<3} rank {:<3} {}\n", ch.multiplicity, ch.size, ch.rank, if ch.psd { "PSD" } else { "not PSD" }));
    }
    if let Some(w) = &cert.witness {
        let v: Vec<String> = w.vector.iter().map(format_rational).collect();
        text.push_str(&format!("  witness on {}: v = ({}), vᵀbv = {}\n", block_name(w.block), v.join(", "), format_rational(&w.value)));
    }
    let mut r = Report::new(json, table, text);
    r.ok = verified;
    Ok(r)
}

fn block_name(b: hodge_cones::cones::BlockId) -> String {
    match b {
        hodge_cones::cones::BlockId::Irreducible { l, m } => format!("({l},{m})"),
        hodge_cones::cones::BlockId::Oracle => "oracle".into(),
    }
}

fn rays(a: &RaysArgs) -> Result<Report, CliError> {
    let n = a.n.unwrap_or(a.k.max(1));
    config(n, a.e, None)?;
    let samples = sample_ek(a.k, a.e, a.count, a.seed);
    let mut table = Table::new(&["index", "vectors", "rank"]);
    let mut text = String::new();
    let mut out = Vec::new();
    let mut ok = true;
    for (i, s) in samples.iter().enumerate() {
        let rank = if a.e == 2 && a.k <= n { Some(extremality_rank(&s.class, n)?) } else { None };
        ok &= rank.is_none_or(|r| r == 1);
        let vectors: Vec<Value> = s.vectors.iter().map(|v| rationals_to_json(v)).collect();
        let shown: Vec<String> = s.vectors.iter().map(|v| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(","))).collect();
        table.push(vec![i.to_string(), shown.join(" "), rank.map_or(String::new(), |r| r.to_string())]);
        text.push_str(&format!("#{i}: {}{}\n", shown.join(" "), rank.map_or(String::new(), |r| format!("  rank b′ = {r}"))));
        out.push(json!({ "index": i, "vectors": vectors, "class": class_to_json(&s.class), "bprime_rank": rank }));
    }
    let json = json!({ "k": a.k, "e": a.e, "n": n, "seed": a.seed, "samples": out });
    let mut r = Report::new(json, table, text);
    r.ok = ok;
    Ok(r)
}

fn nef_sample(a: &NefArgs) -> Result<Report, CliError> {
    let alpha = load_class(&a.class.class)?;
    config(a.n, alpha.e(), Some(alpha.degree()))?;
    let report = nef_sampled_check(&alpha, a.n, a.samples, a.seed)?;
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["class"] = class_to_json(&alpha);
    if let (Some(v), Some(src)) = (json.get_mut("violation").filter(|v| !v.is_null()), report.violation.as_ref()) {
        v["sample"]["class"] = class_to_json(&src.sample.class);
    }
    let mut table = Table::new(&["samples", "seed", "min_value", "violation_index", "violation_value"]);
    let min = report.min_value.as_ref().map(format_rational).unwrap_or_default();
    let (vi, vv) = report
        .violation
        .as_ref()
        .map(|v| (v.index.to_string(), format_rational(&v.value)))
        .unwrap_or_default();
    table.push(vec![a.samples.to_string(), a.seed.to_string(), min.clone(), vi.clone(), vv.clone()]);
    let text = match &report.violation {
        None => format!("no violation in {} samples (minimum pairing {min}); this is not a proof of nefness\n", a.samples),
        Some(_) => format!("not nef: sample #{vi} pairs to {vv}\n"),
    };
    Ok(Report::new(json, table, text))
}

fn decompose4(a: &ClassArg) -> Result<Report, CliError> {
    let alpha = load_class(&a.class)?;
    let outcome = semi4_extremal_decompose(&alpha)?;
    let mut json = serde_json::to_value(&outcome).expect("outcome serializes");
    json["class"] = class_to_json(&alpha);
    let mut table = Table::new(&["outcome", "detail"]);
    let mut ok = true;
    let text = match &outcome {
        Semi4Outcome::Extremal(d) => {
            let recomposed = d.recompose()?;
            let equal = HodgeRing::shared(3, 2)?.equal(&recomposed, &alpha)?;
            ok = equal;
            json["recomposed"] = class_to_json(&recomposed);
            json["round_trip"] = json!(equal);
            let factors: Vec<String> = d
                .factors
                .iter()
                .map(|f| {
                    let v: Vec<String> = f.vector.iter().map(hodge_cones::serial::surd_string).collect();
                    format!("D({})^{}", v.join(", "), f.exponent)
                })
                .collect();
            let detail = format!("{} · {}", format_rational(&d.scale), factors.join(" · "));
            table.push(vec!["extremal".into(), detail.clone()]);
            format!("extremal ({:?}): {detail}\n  D(x, y) = x²θ1 + y²θ2 + xyλ; round trip {}\n", d.pattern, if equal { "exact" } else { "FAILED" })
        }
        Semi4Outcome::NotExtremal { rank } => {
            table.push(vec!["not_extremal".into(), format!("rank {rank}")]);
            format!("semipositive but not extremal: det⊗Sym² block has rank {rank}\n")
        }
        Semi4Outcome::NotInCone { witness } => {
            let detail = format!("block {} value {}", block_name(witness.block), format_rational(&witness.value));
            table.push(vec!["not_in_cone".into(), detail.clone()]);
            format!("not semipositive: {detail}\n")
        }
    };
    let mut r = Report::new(json, table, text);
    r.ok = ok;
    Ok(r)
}

fn verify_paper(a: &VerifyArgs) -> Result<Report, CliError> {
    config(a.n, 2, None)?;
    let results = run_battery(a.n, a.seed);
    let passed = results.iter().all(|c| c.passed);
    let mut table = Table::new(&["check", "status", "detail", "discrepancy"]);
    let mut text = format!("reference battery, n = {}, seed = {}\n", a.n, a.seed);
    for c in &results {
        let flag = c.discrepancy.as_ref().map(|d| format!("printed {} / computed {}", d.printed, d.computed)).unwrap_or_default();
        table.push(vec![c.name.clone(), c.status().into(), c.detail.clone(), flag.clone()]);
        text.push_str(&format!("{:<4} {:<34} {}", c.status(), c.name, c.detail));
        if !flag.is_empty() {
            text.push_str(&format!("  [discrepancy: {flag}]"));
        }
        text.push('\n');
    }
    text.push_str(if passed { "all checks passed\n" } else { "some checks FAILED\n" });
    let checks: Vec<Value> = results.iter().map(|c| c.to_json()).collect();
    let json = json!({ "n": a.n, "seed": a.seed, "passed": passed, "checks": checks });
    let mut r = Report::new(json, table, text);
    r.ok = passed;
    Ok(r)
}
