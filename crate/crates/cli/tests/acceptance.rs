//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use hodge_cones_cli::criteria::{self, CheckResult};

const SEED: u64 = 0x5eed;

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hodge-cones")).args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

struct Criterion {
    number: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn from_check(number: u32, title: &'static str, r: CheckResult, limit: Option<Duration>, extra: Vec<(bool, String)>) -> Criterion {
    let mut passed = r.passed;
    let mut detail = vec![r.detail.clone()];
    if let Some(limit) = limit {
        let ok = r.elapsed < limit;
        passed &= ok;
        detail.push(format!("{:.2}s (limit {}s)", r.elapsed.as_secs_f64(), limit.as_secs()));
    }
    for (ok, what) in extra {
        passed &= ok;
        if !ok {
            detail.push(format!("cli: {what}"));
        }
    }
    Criterion { number, title, passed, detail: detail.join("; ") }
}

fn relations_cli() -> Vec<(bool, String)> {
    let (code, v) = cli(&["relations", "--n", "2", "--e", "2"]);
    let texts: Vec<&str> = v["relations"].as_array().map(|a| a.iter().filter_map(|r| r["text"].as_str()).collect()).unwrap_or_default();
    let want = [
        "θ1^3",
        "θ1^2·λ12",
        "θ1^2·θ2 + θ1·λ12^2",
        "6·θ1·θ2·λ12 + λ12^3",
        "θ1·θ2^2 + θ2·λ12^2",
        "θ2^2·λ12",
        "θ2^3",
    ];
    vec![(code == 0 && v["count"] == 7 && texts == want, format!("relations --n 2 --e 2 gave exit {code}, {texts:?}"))]
}

fn intersect_cli() -> Vec<(bool, String)> {
    let mut out = Vec::new();
    for (mono, want) in [("0,0,4", "24"), ("2,2,0", "4"), ("1,1,2", "-4")] {
        let (code, v) = cli(&["intersect", "--n", "2", "--mono", mono]);
        let ok = code == 0 && v["formula"] == want && v["oracle"] == want && v["agree"] == true;
        out.push((ok, format!("intersect --mono {mono}: {v}")));
    }
    let (code, v) = cli(&["intersect", "--n", "2", "--mono", "1,1,1"]);
    out.push((code == 2 && v["error"]["kind"] == "usage", format!("non-top monomial: exit {code}")));
    out
}

fn witness_cli() -> Vec<(bool, String)> {
    let alpha = r#"{"degree":2,"x":[[2,0,0,"1"],[1,1,0,"1"],[0,2,0,"1"],[0,0,2,"1"]]}"#;
    let (code, v) = cli(&["semi", "--n", "3", "--class", alpha]);
    let w = &v["witness"];
    let ok = code == 0
        && v["verdict"] == "NotSemipositive"
        && w["block"]["kind"] == "irreducible"
        && w["block"]["l"] == 1
        && w["block"]["m"] == 0
        && w["value"] == "-1/2"
        && v["verified"] == true;
    vec![(ok, format!("semi --n 3 on α: {v}"))]
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria = vec![
        from_check(1, "relations fixture and counts", criteria::relations(4, 3), Some(Duration::from_secs(5)), relations_cli()),
        {
            let mut c = from_check(2, "intersection numbers", criteria::intersections(4), Some(Duration::from_secs(30)), intersect_cli());
            let mu = criteria::mu_squared_discrepancy();
            c.passed &= mu.passed && mu.discrepancy.is_some();
            c.detail.push_str(&format!("; μ² flagged: printed {} vs oracle {}", mu.discrepancy.as_ref().map_or("?", |d| &d.printed), mu.discrepancy.as_ref().map_or("?", |d| &d.computed)));
            c
        },
        from_check(3, "dimensions", criteria::dimensions(3), None, vec![]),
        from_check(4, "power maps are compounds", criteria::equality_maps(20, SEED), None, vec![]),
        from_check(5, "block fixtures", criteria::block_fixtures(), None, vec![]),
        from_check(6, "hermite span", criteria::hermite_span(6), None, vec![]),
        from_check(7, "witness battery", criteria::witness_battery(1000, SEED), None, witness_cli()),
        from_check(8, "extremality", criteria::extremality(100, SEED), None, vec![]),
        from_check(9, "semi4 round trip", criteria::semi4_round_trip(50, SEED), None, vec![]),
        from_check(10, "blocks vs oracle, GL invariance", criteria::blocks_vs_oracle(200, 20, SEED), None, vec![]),
        from_check(11, "dimension independence", criteria::dimension_independence(3), None, vec![]),
        from_check(12, "decomposition identities", criteria::decomposition_identities(5, 8), None, vec![]),
    ];
    let mut failed = 0;
    for c in &criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!c.passed);
        println!("{status} criterion {:>2}: {} ({})", c.number, c.title, c.detail);
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
