use hodge_cones::algebra::{e2_divisor, gl_action, ClassPoly, GLMatrix, Monomial};
use hodge_cones::cones::{mu_top_coefficient, sample_ek, semi_membership};
use hodge_cones::scalar::{int, rat};
use hodge_cones::{Class, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_nef_divisor(rng: &mut impl Rng) -> Class {
    let a: i64 = rng.gen_range(0..5);
    let d: i64 = rng.gen_range(0..5);
    let bound = (0..).take_while(|b| b * b <= a * d).last().unwrap();
    e2_divisor(int(a), int(rng.gen_range(-bound..=bound)), int(d))
}

fn random_class(rng: &mut impl Rng, degree: u32) -> Class {
    let terms = Monomial::all_of_degree(3, degree)
        .into_iter()
        .map(|m| {
            let e = m.exponents();
            ([e[0], e[1], e[2]], rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
        })
        .collect::<Vec<_>>();
    ClassPoly::from_e2(degree, terms).unwrap()
}

#[test]
fn mu_is_nonnegative_on_products_of_nef_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 1..=3 {
        for s in sample_ek(2 * k, 2, 50, 5 + u64::from(k)) {
            assert!(mu_top_coefficient(&s.class, 3).unwrap() >= Rational::zero());
        }
        for _ in 0..50 {
            let p = (0..2 * k).fold(ClassPoly::constant(2, int(1)), |acc, _| acc.mul(&random_nef_divisor(&mut rng)));
            assert!(mu_top_coefficient(&p, 3).unwrap() >= Rational::zero(), "{p}");
        }
    }
}

#[test]
fn mu_is_nonnegative_on_semipositive_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut certified = 0;
    let mut tried = 0;
    while certified < 500 {
        tried += 1;
        assert!(tried < 20_000, "only {certified} semipositive classes found");
        let k = rng.gen_range(1..=2u32);
        let mut alpha = ClassPoly::zero(2, 2 * k);
        for s in sample_ek(2 * k, 2, 3, rng.gen()) {
            alpha = alpha.add(&s.class.scale(&int(rng.gen_range(0..4))));
        }
        alpha = alpha.add(&random_class(&mut rng, 2 * k).scale(&rat(1, rng.gen_range(4..64))));
        let cert = semi_membership(&alpha, 3).unwrap();
        if cert.is_semipositive() {
            certified += 1;
            assert!(mu_top_coefficient(&alpha, 3).unwrap() >= Rational::zero(), "{alpha}");
        }
    }
}

#[test]
fn membership_is_gl_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut seen = [0usize; 2];
    for _ in 0..60 {
        let g = loop {
            let rows = (0..2).map(|_| (0..2).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
            if let Ok(g) = GLMatrix::from_rows(rows) {
                break g;
            }
        };
        let degree = rng.gen_range(1..=4);
        let mut alpha = random_class(&mut rng, degree);
        if rng.gen_bool(0.5) {
            alpha = sample_ek(degree, 2, 1, rng.gen())[0].class.add(&alpha.scale(&rat(1, 50)));
        }
        let before = semi_membership(&alpha, 2).unwrap().is_semipositive();
        let after = semi_membership(&gl_action(&g, &alpha).unwrap(), 2).unwrap().is_semipositive();
        assert_eq!(before, after, "{alpha}");
        seen[usize::from(before)] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
