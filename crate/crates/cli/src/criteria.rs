//! Reference checks shared by `verify-paper` and the acceptance target.
//!
//! Each check recomputes its expected values independently (closed formulas,
//! the form oracle, hand-entered fixtures) and compares exactly.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hodge_cones::algebra::{
    e2_divisor, generator_count, gl_action, hodge_dimension, mu_class, rank_one_divisor, relation_generators,
    HodgeRing, Monomial,
};
use hodge_cones::cones::{
    extremality_rank, nef_sampled_check, sample_ek, semi4_extremal_decompose, semi_labels, semi_membership, semi_via_blocks,
    semi_via_oracle, BlockId, Semi4Outcome, Semi4Pattern, Verdict,
};
use hodge_cones::forms::{class_to_form, intersection_number_formula, mu_power_expansion, FormOracle};
use hodge_cones::linalg::{compound_matrix, Matrix};
use hodge_cones::rep2::{blocks_for, hermite_span_dim, reference_blocks};
use hodge_cones::scalar::{binomial, factorial, format_rational, int, rat};
use hodge_cones::schur::{tensor_power_decomposition, wedge_decomposition, IrredLabel};
use hodge_cones::{Class, Rational, RationalGL};

/// A printed value that differs from the computed one.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub discrepancy: Option<Discrepancy>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// Deterministic summary; timings are left out.
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail });
        if let Some(d) = &self.discrepancy {
            v["discrepancy"] = json!({ "flag": true, "printed": d.printed, "computed": d.computed });
        }
        v
    }
}

/// Collects failures; the check passes when none were recorded.
struct Log {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Log { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self, id: u32, name: &str, start: Instant) -> CheckResult {
        let passed = self.failures.is_empty();
        let detail = if passed {
            self.notes.join("; ")
        } else {
            let shown: Vec<_> = self.failures.iter().take(3).cloned().collect();
            let more = self.failures.len().saturating_sub(3);
            let extra = if more > 0 { format!(" (+{more} more)") } else { String::new() };
            format!("{}{extra}", shown.join("; "))
        };
        CheckResult { id, name: name.into(), passed, detail, discrepancy: None, elapsed: start.elapsed() }
    }
}

fn guard(id: u32, name: &str, f: impl FnOnce(&mut Log) -> hodge_cones::Result<()>) -> CheckResult {
    let start = Instant::now();
    let mut log = Log::new();
    if let Err(e) = f(&mut log) {
        log.failures.push(format!("error: {e}"));
    }
    log.finish(id, name, start)
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn small_rational(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-5..=5), r.gen_range(1..=4))
}

fn random_gl(r: &mut ChaCha8Rng) -> RationalGL {
    loop {
        let rows = (0..2).map(|_| (0..2).map(|_| small_rational(r)).collect()).collect();
        if let Ok(g) = RationalGL::from_rows(rows) {
            return g;
        }
    }
}

fn e2(degree: u32, terms: &[([u32; 3], i64)]) -> Class {
    Class::from_e2(degree, terms.iter().map(|(x, c)| (*x, int(*c)))).expect("valid fixture")
}

fn theta(i: usize) -> Class {
    Class::theta(i, 2)
}

/// `θ1² + θ1θ2 + θ2² + λ²`.
pub fn alpha0() -> Class {
    e2(2, &[([2, 0, 0], 1), ([1, 1, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], 1)])
}

pub const RELATIONS_ID: u32 = 1;

/// Relation generators for `n = 2`, `e = 2` and generator counts.
pub fn relations(n_max: u32, e_max: usize) -> CheckResult {
    guard(RELATIONS_ID, "relations", |log| {
        let want = vec![
            e2(3, &[([3, 0, 0], 1)]),
            e2(3, &[([2, 0, 1], 1)]),
            e2(3, &[([2, 1, 0], 1), ([1, 0, 2], 1)]),
            e2(3, &[([1, 1, 1], 6), ([0, 0, 3], 1)]),
            e2(3, &[([1, 2, 0], 1), ([0, 1, 2], 1)]),
            e2(3, &[([0, 2, 1], 1)]),
            e2(3, &[([0, 3, 0], 1)]),
        ];
        let got = relation_generators(2, 2);
        log.check(got == want, || format!("n=2 e=2 relations differ: {got:?}"));
        for n in 1..=n_max {
            for e in 1..=e_max {
                let count = relation_generators(n, e).len() as u128;
                let expected = binomial(2 * n as i64 + 1 + e as i64, 2 * n as i64 + 2);
                log.check(count == expected, || format!("n={n} e={e}: {count} generators, expected {expected}"));
            }
        }
        log.note(format!("7 generators for n=e=2; counts match for n ≤ {n_max}, e ≤ {e_max}"));
        Ok(())
    })
}

pub const INTERSECTIONS_ID: u32 = 2;

/// Formula against the form oracle on every top-degree monomial of `A × A`.
pub fn intersections(n_max: u32) -> CheckResult {
    guard(INTERSECTIONS_ID, "intersection_numbers", |log| {
        let mut compared = 0;
        for n in 1..=n_max {
            let oracle = FormOracle::shared(n as usize, 2)?;
            let one = Class::constant(2, int(1));
            for m in Monomial::all_of_degree(3, 2 * n) {
                let x = m.exponents().to_vec();
                let p = Class::monomial(m, int(1), 2);
                let o = oracle.top_pairing(&p, &one)?;
                let f = intersection_number_formula(n, x[0], x[1], x[2])?;
                log.check(o == f, || format!("n={n} {x:?}: oracle {o}, formula {f}"));
                compared += 1;
            }
            let mu_n = oracle.top_pairing(&mu_class().pow(n), &one)?;
            let expansion = mu_power_expansion(n);
            log.check(mu_n == expansion, || format!("μ^{n}: oracle {mu_n}, expansion {expansion}"));
        }
        let oracle = FormOracle::shared(2, 2)?;
        for (a, b, want) in [(e2(2, &[([2, 0, 0], 1)]), e2(2, &[([0, 2, 0], 1)]), 4), (e2(2, &[([1, 1, 0], 1)]), e2(2, &[([0, 0, 2], 1)]), -4), (e2(2, &[([0, 0, 2], 1)]), e2(2, &[([0, 0, 2], 1)]), 24)] {
            let v = oracle.top_pairing(&a, &b)?;
            log.check(v == int(want), || format!("({a})·({b}) = {v}, expected {want}"));
        }
        log.note(format!("{compared} monomials for n ≤ {n_max}; θ1²θ2² = 4, θ1θ2λ² = −4, λ⁴ = 24"));
        Ok(())
    })
}

pub const MU_SQUARED_ID: u32 = 13;

/// The printed value of `μ²` against the oracle and the binomial expansion.
pub fn mu_squared_discrepancy() -> CheckResult {
    let mut r = guard(MU_SQUARED_ID, "mu_squared_printed_value", |log| {
        let oracle = FormOracle::shared(2, 2)?.top_pairing(&mu_class(), &mu_class())?;
        let expansion = mu_power_expansion(2);
        log.check(oracle == expansion, || format!("oracle {oracle} but expansion {expansion}"));
        log.note(format!("oracle μ² = {oracle} = expansion (printed 96)"));
        Ok(())
    });
    r.discrepancy = Some(Discrepancy { printed: "96".into(), computed: format_rational(&mu_power_expansion(2)) });
    r
}

pub const DIMENSIONS_ID: u32 = 3;

/// Diagram count, quotient rank and oracle rank agree.
pub fn dimensions(n_max: u32) -> CheckResult {
    guard(DIMENSIONS_ID, "dimensions", |log| {
        for n in 1..=n_max {
            let ring = HodgeRing::shared(n, 2)?;
            let oracle = FormOracle::shared(n as usize, 2)?;
            for k in 0..=2 * n {
                let d = hodge_dimension(n, 2, k);
                let q = ring.quotient_rank(k)? as u128;
                let o = oracle.rank(k)? as u128;
                log.check(d == q && q == o, || format!("n={n} k={k}: diagrams {d}, quotient {q}, oracle {o}"));
            }
        }
        for e in 1..=5usize {
            let want = binomial(e as i64 + 1, 2);
            for n in 1..=2u32 {
                let d = hodge_dimension(n, e, 1);
                let q = HodgeRing::shared(n, e)?.quotient_rank(1)? as u128;
                log.check(d == want && q == want, || format!("dim N¹ for e={e}, n={n}: {d} / {q}, expected {want}"));
            }
        }
        log.note(format!("n ≤ {n_max}, e = 2, all k; dim N¹ = C(e+1,2) for e ≤ 5"));
        Ok(())
    })
}

pub const EQUALITY_MAPS_ID: u32 = 4;

/// `h_{β^k} = k! · ∧^k h_β` for random symmetric `g`.
pub fn equality_maps(count: usize, seed: u64) -> CheckResult {
    guard(EQUALITY_MAPS_ID, "power_maps_are_compounds", |log| {
        let mut r = rng(seed, EQUALITY_MAPS_ID as u64);
        for _ in 0..count {
            let (a, b, d) = (small_rational(&mut r), small_rational(&mut r), small_rational(&mut r));
            let g = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b.clone(), d.clone()]]);
            let beta = e2_divisor(a, b, d);
            for n in 1..=3usize {
                let h = |p: &Class| class_to_form(p, n).and_then(|f| f.hermitian_matrix()).map(|m| m.into_matrix());
                let h_beta = h(&beta)?;
                let expected = Matrix::from_fn(2 * n, 2 * n, |x, y| if x % n == y % n { g[(x / n, y / n)].clone() } else { int(0) });
                log.check(h_beta == expected, || format!("h_β ≠ g ⊗ 1 for n={n}"));
                for k in 1..=3u32.min(2 * n as u32) {
                    let lhs = h(&beta.pow(k))?;
                    let rhs = compound_matrix(&h_beta, k as usize).scale(&factorial(k));
                    log.check(lhs == rhs, || format!("n={n} k={k}: h_(β^k) ≠ k!·∧^k h_β for g = {g:?}"));
                }
            }
        }
        log.note(format!("{count} random g, n ≤ 3, k ≤ 3"));
        Ok(())
    })
}

pub const BLOCK_FIXTURES_ID: u32 = 5;

/// The printed block matrices for `k = 2, 3, 4`, each up to a positive scalar.
pub fn block_fixtures() -> CheckResult {
    guard(BLOCK_FIXTURES_ID, "block_fixtures", |log| {
        let refs = reference_blocks();
        for b in &refs {
            log.check(b.matches()?, || format!("{} differs from scale {} · block_map", b.name, b.scale));
        }
        let scales: Vec<_> = refs.iter().map(|b| format!("{} ×{}", b.name, format_rational(&b.scale))).collect();
        log.note(scales.join(", "));
        Ok(())
    })
}

pub const HERMITE_ID: u32 = 6;

pub fn hermite_span(k_max: u32) -> CheckResult {
    guard(HERMITE_ID, "hermite_span", |log| {
        for k in 0..=k_max {
            let d = hermite_span_dim(k);
            let want = ((k + 1) * (k + 2) / 2) as usize;
            log.check(d == want, || format!("k={k}: span {d}, expected {want}"));
        }
        log.note(format!("dim = (k+1)(k+2)/2 for k ≤ {k_max}"));
        Ok(())
    })
}

pub const WITNESS_ID: u32 = 7;

/// Verdicts and witnesses for the separating examples.
pub fn witness_battery(samples: usize, seed: u64) -> CheckResult {
    guard(WITNESS_ID, "witness_battery", |log| {
        let expect = |log: &mut Log, name: &str, alpha: &Class, n: u32, verdict: Verdict| -> hodge_cones::Result<()> {
            let c = semi_membership(alpha, n)?;
            log.check(c.verdict == verdict, || format!("{name} (n={n}): {:?}", c.verdict));
            log.check(c.verify(alpha)?, || format!("{name} (n={n}): certificate does not re-verify"));
            Ok(())
        };
        for n in 2..=4 {
            expect(log, "α", &alpha0(), n, Verdict::NotSemipositive)?;
            let w = semi_membership(&alpha0(), n)?.witness;
            let ok = w.as_ref().is_some_and(|w| w.block == BlockId::Irreducible { l: 1, m: 0 } && w.value == rat(-1, 2));
            log.check(ok, || format!("α (n={n}): witness {w:?}, expected block (1,0) value -1/2"));
        }
        for n in 2..=3 {
            expect(log, "μ", &mu_class(), n, Verdict::NotSemipositive)?;
        }
        for n in 3..=4 {
            let a = theta(1).pow(n - 2).mul(&alpha0());
            expect(log, "θ1^(n-2)·α", &a, n, Verdict::Semipositive)?;
        }
        for k in 0..=1 {
            let a = theta(1).pow(k).mul(&mu_class());
            expect(log, &format!("θ1^{k}·μ"), &a, 3, Verdict::NotSemipositive)?;
            let r = nef_sampled_check(&a, 3, samples, seed)?;
            log.check(!r.has_violation(), || format!("θ1^{k}·μ: nef violation {:?}", r.violation.map(|v| v.value)));
        }
        let a = theta(2).mul(&theta(1)).mul(&mu_class());
        let via_oracle = semi_via_oracle(&a, 3)?;
        log.check(via_oracle.verdict == Verdict::NotSemipositive, || "θ2θ1μ: oracle route finds it semipositive".into());
        log.check(via_oracle.verify(&a)?, || "θ2θ1μ: oracle certificate does not re-verify".into());
        log.note(format!("α witness −1/2 on (1,0); θ1^k μ nef on {samples} samples"));
        Ok(())
    })
}

pub const EXTREMALITY_ID: u32 = 8;

/// `rank b′ = 1` on sampled products of nef rank-one divisors.
pub fn extremality(count: usize, seed: u64) -> CheckResult {
    guard(EXTREMALITY_ID, "extremal_rays", |log| {
        let n = 4;
        for k in 1..=4u32 {
            for s in sample_ek(k, 2, count, seed.wrapping_add(k as u64)) {
                let rank = extremality_rank(&s.class, n)?;
                log.check(rank == 1, || format!("k={k}: rank {rank} for {:?}", s.vectors));
                let rebuilt = s.matrices().iter().try_fold(Class::constant(2, int(1)), |acc, g| gl_action(g, &theta(1)).map(|t| acc.mul(&t)))?;
                log.check(rebuilt == s.class, || format!("k={k}: class is not Π g_i θ1"));
            }
            let control = theta(1).add(&theta(2)).mul(&theta(1).pow(k - 1));
            let rank = extremality_rank(&control, n)?;
            log.check(rank == 2, || format!("(θ1+θ2)θ1^{}: rank {rank}, expected 2", k - 1));
        }
        log.note(format!("{count} samples per k ≤ 4 at n = 4; control rank 2"));
        Ok(())
    })
}

pub const SEMI4_ID: u32 = 9;

/// Degree-4 extremal decompositions on `A × A` for `n = 3`.
pub fn semi4_round_trip(count: usize, seed: u64) -> CheckResult {
    guard(SEMI4_ID, "semi4_decomposition", |log| {
        let ring = HodgeRing::shared(3, 2)?;
        let mut r = rng(seed, SEMI4_ID as u64);
        let bases = [(e2(4, &[([2, 2, 0], 1)]), Semi4Pattern::TwoTwo), (e2(4, &[([3, 1, 0], 1)]), Semi4Pattern::ThreeOne)];
        for (base, pattern) in &bases {
            for _ in 0..count {
                let alpha = gl_action(&random_gl(&mut r), base)?;
                match semi4_extremal_decompose(&alpha)? {
                    Semi4Outcome::Extremal(d) => {
                        log.check(d.pattern == *pattern, || format!("{alpha}: pattern {:?}", d.pattern));
                        let back = d.recompose()?;
                        log.check(ring.equal(&back, &alpha)?, || format!("{alpha}: recomposition differs"));
                    }
                    other => log.check(false, || format!("{alpha}: {other:?}")),
                }
            }
        }
        let non_extremal = count.div_ceil(2);
        for _ in 0..non_extremal {
            let a = gl_action(&random_gl(&mut r), &bases[0].0)?;
            let b = gl_action(&random_gl(&mut r), &bases[r.gen_range(0..2)].0)?;
            let sum = a.add(&b);
            let outcome = semi4_extremal_decompose(&sum)?;
            log.check(matches!(outcome, Semi4Outcome::NotExtremal { rank } if rank >= 2), || format!("{sum}: {outcome:?}"));
        }
        let violator = e2(4, &[([3, 1, 0], 1), ([1, 3, 0], 1), ([1, 1, 2], 1)]);
        for _ in 0..non_extremal {
            let alpha = gl_action(&random_gl(&mut r), &violator)?;
            let outcome = semi4_extremal_decompose(&alpha)?;
            let ok = matches!(&outcome, Semi4Outcome::NotInCone { witness } if witness.block == BlockId::Irreducible { l: 2, m: 0 });
            log.check(ok, || format!("{alpha}: {outcome:?}"));
        }
        log.note(format!("{count} translates of θ1²θ2² and of θ1³θ2; {non_extremal} sums; {non_extremal} half-space violators"));
        Ok(())
    })
}

/// Class on `A × A` with small random coefficients.
fn random_class(r: &mut ChaCha8Rng, k: u32) -> Class {
    let terms: Vec<_> = Monomial::all_of_degree(generator_count(2), k).into_iter().map(|m| (m, small_rational(r))).collect();
    Class::from_terms(2, k, terms).expect("degree-k monomials")
}

/// Positive combination of products of nef rank-one divisors.
fn semipositive_class(r: &mut ChaCha8Rng, k: u32) -> Class {
    let mut out = Class::zero(2, k);
    for _ in 0..r.gen_range(1..=3) {
        let mut p = Class::constant(2, rat(r.gen_range(1..=5), r.gen_range(1..=3)));
        for _ in 0..k {
            let v = [int(r.gen_range(-3..=3)), int(r.gen_range(-3..=3))];
            p = p.mul(&rank_one_divisor(&v));
        }
        out = out.add(&p);
    }
    out
}

fn mixed_class(r: &mut ChaCha8Rng, i: usize, k: u32) -> Class {
    match i % 3 {
        0 => random_class(r, k),
        1 => semipositive_class(r, k),
        _ => semipositive_class(r, k).add(&random_class(r, k).scale(&rat(1, 4))),
    }
}

pub const ROUTES_ID: u32 = 10;

/// Block route against oracle route, and invariance under `GL_2`.
pub fn blocks_vs_oracle(count: usize, gl_count: usize, seed: u64) -> CheckResult {
    guard(ROUTES_ID, "blocks_vs_oracle_and_gl", |log| {
        let mut r = rng(seed, ROUTES_ID as u64);
        let mut verdicts = [0usize; 2];
        for i in 0..count {
            let n = 1 + (i % 3) as u32;
            let k = r.gen_range(0..=2 * n);
            let alpha = mixed_class(&mut r, i / 3, k);
            let b = semi_via_blocks(&alpha, n)?;
            let o = semi_via_oracle(&alpha, n)?;
            verdicts[b.is_semipositive() as usize] += 1;
            log.check(b.verdict == o.verdict, || format!("n={n} {alpha}: blocks {:?}, oracle {:?}", b.verdict, o.verdict));
        }
        let fixed = [alpha0(), mu_class(), theta(1).mul(&mu_class()), theta(1).mul(&alpha0())];
        for i in 0..gl_count {
            let g = random_gl(&mut r);
            let alpha = if i < fixed.len() {
                fixed[i].clone()
            } else {
                let k = r.gen_range(1..=4);
                mixed_class(&mut r, i, k)
            };
            let before = semi_membership(&alpha, 3)?.verdict;
            let after = semi_membership(&gl_action(&g, &alpha)?, 3)?.verdict;
            log.check(before == after, || format!("{alpha}: {before:?} but g·α {after:?}"));
        }
        log.note(format!("{count} classes ({} semipositive, {} not); {gl_count} random g", verdicts[1], verdicts[0]));
        Ok(())
    })
}

pub const DIMENSION_INDEPENDENCE_ID: u32 = 11;

pub fn dimension_independence(k_max: u32) -> CheckResult {
    guard(DIMENSION_INDEPENDENCE_ID, "dimension_independence", |log| {
        for k in 1..=k_max {
            let small = semi_labels(k, k)?;
            let large = semi_labels(k + 1, k)?;
            log.check(small == large, || format!("k={k}: labels {small:?} vs {large:?}"));
            let maps = |n| -> hodge_cones::Result<Vec<_>> {
                Ok(blocks_for(n, k)?.into_iter().map(|(b, _)| (b.label, b.entries.clone())).collect())
            };
            log.check(maps(k)? == maps(k + 1)?, || format!("k={k}: block maps differ"));
        }
        let shown: Vec<String> = (1..=k_max)
            .map(|k| {
                let labels: BTreeSet<IrredLabel> = semi_labels(k, k).unwrap_or_default();
                format!("k={k}: {}", labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            })
            .collect();
        log.note(shown.join(", "));
        Ok(())
    })
}

pub const DECOMPOSITIONS_ID: u32 = 12;

pub fn decomposition_identities(n_max: u32, m_max: u32) -> CheckResult {
    guard(DECOMPOSITIONS_ID, "decomposition_identities", |log| {
        for n in 0..=n_max {
            for k in 0..=2 * n {
                let total: u128 = wedge_decomposition(n, k).iter().map(|(l, c)| l.dim() * c).sum();
                let want = binomial(2 * n as i64, k as i64);
                log.check(total == want, || format!("∧^{k} W^{n}: {total}, expected {want}"));
            }
        }
        for m in 0..=m_max {
            let total: u128 = tensor_power_decomposition(m).iter().map(|(l, c)| l.dim() * c).sum();
            log.check(total == 1u128 << m, || format!("W^⊗{m}: {total}"));
        }
        log.note(format!("∧^k W^{{⊕n}} for n ≤ {n_max}; W^⊗m for m ≤ {m_max}"));
        Ok(())
    })
}

pub const WEDGE_MULTIPLICITY_ID: u32 = 14;

/// The printed multiplicity `C(n,k−2s)·C(2s,s)` of `det^s ⊗ W^{⊗(k−2s)}`
/// against the composition count `C(n,s)·C(n−s,k−2s)`.
pub fn wedge_multiplicity_discrepancy() -> CheckResult {
    let printed = |n: i64, k: i64, s: i64| binomial(n, k - 2 * s) * binomial(2 * s, s);
    let dims_with = |n: u32, k: u32, mult: &dyn Fn(i64, i64, i64) -> u128| -> u128 {
        (0..=k / 2)
            .map(|s| {
                let m = (k - 2 * s) as u128;
                mult(n as i64, k as i64, s as i64) * (1u128 << m)
            })
            .sum()
    };
    let mut r = guard(WEDGE_MULTIPLICITY_ID, "wedge_multiplicity_formula", |log| {
        let composition = |n: i64, k: i64, s: i64| binomial(n, s) * binomial(n - s, k - 2 * s);
        for n in 0..=5u32 {
            for k in 0..=2 * n {
                let total = dims_with(n, k, &composition);
                log.check(total == binomial(2 * n as i64, k as i64), || format!("composition count fails at n={n} k={k}"));
            }
        }
        log.check(dims_with(3, 2, &printed) != binomial(6, 2), || "printed count unexpectedly satisfies the identity".into());
        log.note("composition count satisfies dim identity; printed count fails at (n,k) = (3,2)");
        Ok(())
    });
    let det = wedge_decomposition(3, 2).into_iter().find(|(l, _)| *l == IrredLabel::new(1, 0)).map_or(0, |(_, c)| c);
    r.discrepancy = Some(Discrepancy { printed: format!("det multiplicity {} at (3,2)", printed(3, 2, 1)), computed: det.to_string() });
    r
}
