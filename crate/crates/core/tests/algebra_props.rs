use std::collections::BTreeMap;

use mfg_core::ck::{cocycle_automorphism, phi_a, unitary_from_table, CkContext, CkElement, Ctx, Scalar};
use mfg_core::random::{random_element, random_phase, random_table};
use mfg_core::shift::{sweep_points, EpPoint, MarkovShift};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ctx_for(pick: bool) -> Ctx {
    CkContext::gaussian(if pick { MarkovShift::full(2) } else { MarkovShift::golden_mean() })
}

fn elements(seed: u64, ctx: &Ctx, n: usize) -> Vec<CkElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_element(&mut rng, ctx, 4, 3)).collect()
}

/// `a` as an operator on finitely supported vectors over eventually periodic
/// points.
fn act(a: &CkElement, v: &BTreeMap<EpPoint, Scalar>) -> BTreeMap<EpPoint, Scalar> {
    let k = a.field();
    let mut out: BTreeMap<EpPoint, Scalar> = BTreeMap::new();
    for (p, c) in v {
        for (q, d) in a.act_on_point(p) {
            let e = out.entry(q).or_insert_with(|| k.zero());
            *e = e.add(&k.mul(c, &d));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn star_algebra_laws(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let e = elements(seed, &ctx, 3);
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!((a * b).adjoint(), &b.adjoint() * &a.adjoint());
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!(&CkElement::one(&ctx) * a, a.clone());
        prop_assert!((a - a).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let a = &elements(seed, &ctx, 1)[0];
        let again = CkElement::from_terms(&ctx, a.terms().iter().map(|((x, y), c)| (x.clone(), y.clone(), c.clone()))).unwrap();
        prop_assert_eq!(again.terms(), a.terms());
    }

    #[test]
    fn grading(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let e = elements(seed, &ctx, 2);
        for m in e[0].degrees() {
            for k in e[1].degrees() {
                let prod = &e[0].gauge_component(m) * &e[1].gauge_component(k);
                prop_assert!(prod.degrees().iter().all(|&d| d == m + k));
            }
        }
        let neg: Vec<i64> = e[0].degrees().iter().map(|d| -d).rev().collect();
        prop_assert_eq!(e[0].adjoint().degrees().into_iter().collect::<Vec<_>>(), neg);
    }

    #[test]
    fn expectation_is_diagonal_bimodular(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let e = elements(seed, &ctx, 3);
        let d = e[1].conditional_expectation();
        let d = CkElement::from_terms(&ctx, d.terms().iter().filter(|((x, y), _)| x == y).map(|((x, y), c)| (x.clone(), y.clone(), c.clone()))).unwrap();
        let f = CkElement::chi(&ctx, &mfg_core::shift::Word::single(1));
        let lhs = (&(&d * &e[0]) * &f).conditional_expectation();
        let rhs = &(&d * &e[0].conditional_expectation()) * &f;
        prop_assert_eq!(lhs, rhs);
        let ee = e[0].conditional_expectation();
        prop_assert_eq!(ee.conditional_expectation(), ee);
    }

    #[test]
    fn products_act_as_compositions(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let e = elements(seed, &ctx, 2);
        let ab = &e[0] * &e[1];
        for p in sweep_points(ctx.shift(), 3, 2) {
            let basis: BTreeMap<EpPoint, Scalar> = [(p.clone(), ctx.field().one())].into_iter().collect();
            let direct: BTreeMap<EpPoint, Scalar> = ab.act_on_point(&p).into_iter().collect();
            prop_assert_eq!(direct, act(&e[0], &act(&e[1], &basis)));
        }
    }

    #[test]
    fn unitaries_of_tables_are_homomorphic(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_table(&mut rng, ctx.shift(), 3);
        let t = random_table(&mut rng, ctx.shift(), 3);
        let us = unitary_from_table(&ctx, &s).unwrap();
        let ut = unitary_from_table(&ctx, &t).unwrap();
        prop_assert_eq!(unitary_from_table(&ctx, &s.compose(&t).unwrap()).unwrap(), &us * &ut);
        prop_assert!(us.is_unitary());
        prop_assert_eq!(unitary_from_table(&ctx, &s.inverse()).unwrap(), us.adjoint());
    }

    #[test]
    fn phi_is_a_homomorphism(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_phase(&mut rng, ctx.shift(), 4, 2).to_element(&ctx).unwrap();
        let g = random_phase(&mut rng, ctx.shift(), 4, 1).to_element(&ctx).unwrap();
        prop_assert_eq!(phi_a(&(&f * &g)).unwrap(), &phi_a(&f).unwrap() * &phi_a(&g).unwrap());
    }

    #[test]
    fn cocycle_automorphisms_preserve_structure(seed in any::<u64>(), pick in any::<bool>()) {
        let ctx = ctx_for(pick);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u1 = random_phase(&mut rng, ctx.shift(), 4, 1);
        let e = elements(seed ^ 1, &ctx, 2);
        let lam = |x: &CkElement| cocycle_automorphism(&u1, x).unwrap();
        prop_assert_eq!(lam(&(&e[0] * &e[1])), &lam(&e[0]) * &lam(&e[1]));
        prop_assert_eq!(lam(&e[0].adjoint()), lam(&e[0]).adjoint());
        let diag = e[0].conditional_expectation();
        let diag = CkElement::from_terms(&ctx, diag.terms().iter().filter(|((x, y), _)| x == y).map(|((x, y), c)| (x.clone(), y.clone(), c.clone()))).unwrap();
        prop_assert_eq!(lam(&diag), diag);
    }
}
