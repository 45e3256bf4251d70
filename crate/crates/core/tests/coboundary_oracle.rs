//! The coboundary solver against exhaustive search over all phases `v` of a
//! given depth.

use std::collections::BTreeMap;

use mfg_core::ck::{solve_coboundary, PhaseFunction};
use mfg_core::shift::{LcFunction, MarkovShift, Shift, Word};

fn assignments(words: &[Word], m: u32) -> impl Iterator<Item = BTreeMap<Word, u32>> + '_ {
    let total = (m as usize).pow(words.len() as u32);
    (0..total).map(move |mut code| {
        words
            .iter()
            .map(|w| {
                let e = (code % m as usize) as u32;
                code /= m as usize;
                (w.clone(), e)
            })
            .collect()
    })
}

/// `v(x) · conj(v(σx))` as exponents at depth `d + 1`.
fn coboundary_of(shift: &Shift, v: &BTreeMap<Word, u32>, m: u32, d: usize) -> LcFunction<u32> {
    LcFunction::from_fn(shift.clone(), d + 1, |x| (v[&x.prefix(d)] + m - v[&x.drop_front(1)]) % m)
}

fn check(shift: Shift, m: u32, u_depth: usize, max_d: usize) {
    let words = shift.admissible_words(u_depth);
    for table in assignments(&words, m) {
        let u = PhaseFunction::new(m, LcFunction::new(shift.clone(), u_depth, table).unwrap()).unwrap();
        for d in 0..=max_d {
            let bd = shift.admissible_words(d);
            let brute = assignments(&bd, m).any(|v| coboundary_of(&shift, &v, m, d) == *u.exponents());
            let solved = solve_coboundary(&u, d).unwrap();
            assert_eq!(brute, solved.is_some(), "m={m} d={d} u={:?}", u.exponents().table());
            if let Some(v) = solved {
                assert_eq!(v.mul(&v.compose_shift().conj()).unwrap(), u);
            }
        }
    }
}

#[test]
fn full_shift_orders_two_to_four() {
    check(MarkovShift::full(2), 2, 2, 2);
    check(MarkovShift::full(2), 3, 2, 1);
    check(MarkovShift::full(2), 4, 1, 2);
}

#[test]
fn golden_mean_orders_two_and_three() {
    check(MarkovShift::golden_mean(), 2, 2, 2);
    check(MarkovShift::golden_mean(), 3, 2, 2);
}

#[test]
fn three_symbols() {
    let a = MarkovShift::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
    check(a, 2, 2, 1);
}

#[test]
fn fixed_point_obstruction() {
    for shift in [MarkovShift::full(2), MarkovShift::golden_mean()] {
        let minus = PhaseFunction::constant(shift, 2, 1);
        for d in 0..5 {
            assert!(solve_coboundary(&minus, d).unwrap().is_none());
        }
    }
}
