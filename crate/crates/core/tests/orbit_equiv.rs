use mfg_core::ck::{CkContext, CkElement};
use mfg_core::full_group::{example_involution, local_shift_piece, permutation_element};
use mfg_core::orbit_equiv::{
    conjugate_table, golden_mean_example, is_uniform_orbit_equivalence, transport_diagonal, verify_orbit_cocycles,
    OeError, OrbitCocycleData, TailMap,
};
use mfg_core::random::random_permutations;
use mfg_core::shift::{sweep_points, EpPoint, LcFunction, MarkovShift, Word};
use mfg_core::Bounds;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pt(s: &str) -> EpPoint {
    EpPoint::parse(s).unwrap()
}

#[test]
fn golden_mean_map_values() {
    let (h, _) = golden_mean_example();
    assert_eq!(h.apply(&pt("|1")).unwrap(), pt("|1"));
    assert_eq!(h.apply(&pt("|21")).unwrap(), pt("|2"));
    assert_eq!(h.apply(&pt("21|1")).unwrap(), pt("2|1"));
    let long = h.apply(&pt("1211212111|1")).unwrap();
    assert!(long.starts_with(&Word::parse("1212211").unwrap()));
}

#[test]
fn cocycles_pass_on_the_larger_sweep() {
    let (h, data) = golden_mean_example();
    let report = verify_orbit_cocycles(&h, &data, 8, 6).unwrap();
    assert!(report.passed(), "{:?}", report.counterexamples.first());
}

#[test]
fn identity_map_with_trivial_cocycles() {
    let f = MarkovShift::golden_mean();
    let id = TailMap::identity(f.clone());
    let zero = LcFunction::constant(f.clone(), 0);
    let one = LcFunction::constant(f.clone(), 1);
    let data = OrbitCocycleData { k1: zero.clone(), l1: one.clone(), k2: zero.clone(), l2: one };
    assert!(verify_orbit_cocycles(&id, &data, 4, 3).unwrap().passed());
    let wrong = OrbitCocycleData { l1: zero, ..data };
    assert!(!verify_orbit_cocycles(&id, &wrong, 4, 3).unwrap().passed());
}

#[test]
fn conjugation_closure() {
    let (h, _) = golden_mean_example();
    let f = h.source().clone();
    let bounds = Bounds::default();
    let mut generators: Vec<_> = f.admissible_words(2).iter().map(|mu| local_shift_piece(&f, mu).unwrap()).collect();
    generators.push(example_involution());
    for tau in generators {
        let c = conjugate_table(&h, &tau, bounds).unwrap();
        for y in sweep_points(h.target(), 8, 6) {
            let expected = h.apply(&tau.apply(&h.apply_inverse(&y).unwrap())).unwrap();
            assert_eq!(c.apply(&y), expected);
        }
    }
}

#[test]
fn conjugation_reports_exhausted_depth() {
    let (h, _) = golden_mean_example();
    let tau = example_involution();
    let shallow = Bounds::new(6, 4, 1).unwrap();
    assert_eq!(conjugate_table(&h, &tau, shallow).unwrap_err(), OeError::DepthExhausted { depth: 1 });
}

#[test]
fn transport_compatibility() {
    let (h, _) = golden_mean_example();
    let src = CkContext::gaussian(h.source().clone());
    let dst = CkContext::gaussian(h.target().clone());
    let pts = sweep_points(h.source(), 5, 3);
    for depth in 1..=4 {
        for w in h.source().admissible_words(depth) {
            let chi = CkElement::chi(&src, &w);
            let moved = transport_diagonal(&h, &chi, &dst, Bounds::default()).unwrap();
            assert!(moved.is_diagonal());
            for p in &pts {
                let before = !chi.act_on_point(p).is_empty();
                let after = !moved.act_on_point(&h.apply(p).unwrap()).is_empty();
                assert_eq!(before, after, "χ_{w} at {p}");
            }
        }
    }
}

#[test]
fn uniform_equivalence_of_permutation_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for shift in [MarkovShift::full(2), MarkovShift::golden_mean()] {
        for p in 1..=2 {
            let t = permutation_element(&shift, p, &random_permutations(&mut rng, &shift, p)).unwrap();
            let map = TailMap::from_table(&t);
            assert!(is_uniform_orbit_equivalence(&map, p + 1, p + 1, 6, 4).unwrap().passed());
        }
    }
    let (h, _) = golden_mean_example();
    let r = is_uniform_orbit_equivalence(&h, 2, 2, 6, 4).unwrap();
    assert!(r.counterexamples.iter().any(|c| c.point == pt("21|1121")));
}
