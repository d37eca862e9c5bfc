//! Randomized property suites over the exact kernel.
//!
//! The module-level suites (rewrite confluence, product associativity,
//! action compatibility) run here at full size with seeds disjoint from the
//! built-in self test, so the two runs draw independent samples.  The
//! remaining tests exercise the arithmetic layer directly: ring axioms for
//! multivariate polynomials, field axioms for their fractions, and the
//! divisibility contract of the polynomial gcd.

use kw_core::poly::MultiPoly;
use kw_core::selftest;
use kw_core::{rat_int, xh_vars, Poly, RatFn};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 1000;

/// A small random polynomial in `x` and `hbar`: up to three monomials of
/// degree at most two in each variable, integer coefficients in -3..=3.
fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let vars = xh_vars();
    let mut p = Poly::zero_over(&vars);
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-3i64..=3);
        let term = Poly::from_terms(
            &vars,
            [(vec![rng.gen_range(0..=2), rng.gen_range(0..=2)], rat_int(c))],
        );
        p = p + term;
    }
    p
}

fn random_nonzero_poly(rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let p = random_poly(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

#[test]
fn coinvariant_rewriting_is_order_independent() {
    assert_eq!(selftest::confluence_failures(CASES, 0x5eed_0001), 0);
}

#[test]
fn normal_ordered_products_are_associative() {
    assert_eq!(selftest::associativity_failures(CASES, 0x5eed_0002), 0);
}

#[test]
fn module_actions_compose_like_products() {
    assert_eq!(selftest::action_compat_failures(CASES, 0x5eed_0003), 0);
}

#[test]
fn polynomials_form_a_commutative_ring() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..CASES {
        let a = random_poly(&mut rng);
        let b = random_poly(&mut rng);
        let c = random_poly(&mut rng);
        assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        assert!((a.clone() - a.clone()).is_zero());
    }
}

#[test]
fn fractions_form_a_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..CASES {
        let a = RatFn::new(random_poly(&mut rng), random_nonzero_poly(&mut rng));
        let b = RatFn::new(
            random_nonzero_poly(&mut rng),
            random_nonzero_poly(&mut rng),
        );
        assert_eq!(a.clone() * b.clone() / b.clone(), a);
        assert!((a.clone() - a.clone()).is_zero());
        assert!((b.clone() * b.inverse()).is_one());
        assert_eq!(
            (a.clone() + b.clone()) * b.inverse(),
            a.clone() / b.clone() + RatFn::one()
        );
    }
}

#[test]
fn reduced_fractions_have_coprime_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..CASES {
        let common = random_nonzero_poly(&mut rng);
        let f = RatFn::new(
            random_poly(&mut rng) * common.clone(),
            random_nonzero_poly(&mut rng) * common,
        );
        if f.is_zero() {
            assert!(f.den().is_one());
            continue;
        }
        assert!(MultiPoly::gcd(f.num(), f.den()).is_constant());
    }
}

#[test]
fn gcd_divides_both_arguments_and_absorbs_common_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..CASES {
        let a = random_nonzero_poly(&mut rng);
        let b = random_nonzero_poly(&mut rng);
        let c = random_nonzero_poly(&mut rng);
        let g = MultiPoly::gcd(&a, &b);
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
        let gc = MultiPoly::gcd(&(a.clone() * c.clone()), &(b.clone() * c.clone()));
        assert!(gc.exact_div(&c).is_some());
        let lcm = MultiPoly::lcm(&a, &b);
        assert!(lcm.exact_div(&a).is_some());
        assert!(lcm.exact_div(&b).is_some());
        // gcd and lcm are normalized, so gcd * lcm matches a * b only up to
        // a nonzero scalar.
        let ratio = (g * lcm).exact_div(&(a * b));
        assert!(ratio.is_some_and(|q| q.is_constant() && !q.is_zero()));
    }
}
