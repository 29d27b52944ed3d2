use rayon::prelude::*;

use crate::criteria::{self, CheckResult};

type Job = Box<dyn Fn() -> CheckResult + Send + Sync>;

/// Every reference check, sized for dimension `n` where a check scans
/// dimensions, in a fixed order regardless of scheduling.
pub fn run_battery(n: u32, seed: u64) -> Vec<CheckResult> {
    let jobs: Vec<Job> = vec![
        Box::new(move || criteria::relations(n, 3)),
        Box::new(move || criteria::intersections(n)),
        Box::new(move || criteria::dimensions(n.min(3))),
        Box::new(move || criteria::equality_maps(20, seed)),
        Box::new(criteria::block_fixtures),
        Box::new(|| criteria::hermite_span(6)),
        Box::new(move || criteria::witness_battery(1000, seed)),
        Box::new(move || criteria::extremality(100, seed)),
        Box::new(move || criteria::semi4_round_trip(50, seed)),
        Box::new(move || criteria::blocks_vs_oracle(200, 20, seed)),
        Box::new(|| criteria::dimension_independence(3)),
        Box::new(|| criteria::decomposition_identities(5, 8)),
        Box::new(criteria::mu_squared_discrepancy),
        Box::new(criteria::wedge_multiplicity_discrepancy),
    ];
    let mut results: Vec<CheckResult> = jobs.par_iter().map(|job| job()).collect();
    results.sort_by_key(|r| r.id);
    results
}
