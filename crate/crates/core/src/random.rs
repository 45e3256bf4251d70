//! Seeded generators of shifts, full-group elements, phases and algebra
//! words, used by the acceptance suite and the property tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ck::{CkElement, Ctx, PhaseFunction};
use crate::full_group::{cylinder_swap, local_shift_piece, orbit_mover, permutation_element, PrefixExchangeTable};
use crate::shift::{sweep_points, LcFunction, MarkovShift, Shift, Word};

/// An essential matrix on `2..=max_n` symbols such that both `A` and `Aᵗ`
/// satisfy condition (I).
pub fn condition_i_shift<R: Rng>(rng: &mut R, max_n: usize) -> Shift {
    loop {
        let n = rng.gen_range(2..=max_n);
        let rows = (0..n).map(|_| (0..n).map(|_| i64::from(rng.gen_bool(0.6))).collect()).collect();
        if let Ok(s) = MarkovShift::new(rows) {
            if s.satisfies_condition_i() && s.transpose_satisfies_condition_i() {
                return s;
            }
        }
    }
}

fn random_word<R: Rng>(rng: &mut R, shift: &Shift, len: usize) -> Word {
    let mut w = Word::empty();
    for _ in 0..len {
        let f = shift.followers_of(&w);
        w = w.pushed(*f.choose(rng).unwrap());
    }
    w
}

/// Random permutations of the sets `W_p(i)`.
pub fn random_permutations<R: Rng>(rng: &mut R, shift: &Shift, p: usize) -> Vec<BTreeMap<Word, Word>> {
    let bp = shift.admissible_words(p);
    shift
        .symbols()
        .map(|i| {
            let wp: Vec<Word> = bp.iter().filter(|u| shift.allows(u.last().unwrap(), i)).cloned().collect();
            let mut image = wp.clone();
            image.shuffle(rng);
            wp.into_iter().zip(image).collect()
        })
        .collect()
}

fn random_swap<R: Rng>(rng: &mut R, shift: &Shift, equal_lengths: bool) -> Option<PrefixExchangeTable> {
    for _ in 0..20 {
        let a = rng.gen_range(1..=3);
        let b = if equal_lengths { a } else { rng.gen_range(1..=3) };
        let mu = random_word(rng, shift, a);
        let nu = random_word(rng, shift, b);
        if shift.row(mu.last().unwrap()) != shift.row(nu.last().unwrap()) {
            continue;
        }
        if let Ok(t) = cylinder_swap(shift, &mu, &nu) {
            return Some(t);
        }
    }
    None
}

fn random_generator<R: Rng>(rng: &mut R, shift: &Shift) -> PrefixExchangeTable {
    loop {
        let t = match rng.gen_range(0..4) {
            0 => random_swap(rng, shift, false),
            1 => {
                let mu = random_word(rng, shift, 2);
                local_shift_piece(shift, &mu).ok().map(|t| if rng.gen_bool(0.5) { t } else { t.inverse() })
            }
            2 => {
                let p = rng.gen_range(1..=2);
                permutation_element(shift, p, &random_permutations(rng, shift, p)).ok()
            }
            _ => {
                let pts = sweep_points(shift, 2, 2);
                let x = pts.choose(rng).unwrap();
                let js: Vec<_> = shift.symbols().filter(|&j| shift.allows(j, x.first())).collect();
                orbit_mover(shift, x, *js.choose(rng).unwrap()).ok()
            }
        };
        if let Some(t) = t {
            return t;
        }
    }
}

/// A composite of one to three random generators (cylinder swaps, local shift
/// pieces, permutation elements, movers) whose words have length at most
/// `max_depth`.
pub fn random_table<R: Rng>(rng: &mut R, shift: &Shift, max_depth: usize) -> PrefixExchangeTable {
    loop {
        let mut t = PrefixExchangeTable::identity(shift.clone());
        for _ in 0..rng.gen_range(1..=3) {
            t = random_generator(rng, shift).compose(&t).expect("same shift");
        }
        if t.max_depth() <= max_depth {
            return t;
        }
    }
}

/// A composite of length-preserving generators.
pub fn random_af_table<R: Rng>(rng: &mut R, shift: &Shift, max_depth: usize) -> PrefixExchangeTable {
    loop {
        let mut t = PrefixExchangeTable::identity(shift.clone());
        for _ in 0..rng.gen_range(1..=3) {
            let g = if rng.gen_bool(0.5) {
                random_swap(rng, shift, true)
            } else {
                let p = rng.gen_range(1..=2);
                permutation_element(shift, p, &random_permutations(rng, shift, p)).ok()
            };
            if let Some(g) = g {
                t = g.compose(&t).expect("same shift");
            }
        }
        if t.max_depth() <= max_depth {
            return t;
        }
    }
}

/// A phase with values `ζ_order^e` tabulated at depth `depth`.
pub fn random_phase<R: Rng>(rng: &mut R, shift: &Shift, order: u32, depth: usize) -> PhaseFunction {
    let exps = LcFunction::from_fn(shift.clone(), depth, |_| rng.gen_range(0..order));
    PhaseFunction::new(order, exps).expect("exponents below the order")
}

/// One factor of a random algebra word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    S(u8),
    SStar(u8),
    Chi(Word),
}

impl Factor {
    pub fn element(&self, ctx: &Ctx) -> CkElement {
        match self {
            Factor::S(i) => CkElement::generator(ctx, *i).expect("symbol in range"),
            Factor::SStar(i) => CkElement::generator(ctx, *i).expect("symbol in range").adjoint(),
            Factor::Chi(w) => CkElement::chi(ctx, w),
        }
    }
}

/// A word of `1..=max_len` factors from `{S_i, S_i*, χ_{U_w}}` with `|w| ≤ 2`.
pub fn random_factor_word<R: Rng>(rng: &mut R, shift: &Shift, max_len: usize) -> Vec<Factor> {
    (0..rng.gen_range(1..=max_len))
        .map(|_| {
            let i = rng.gen_range(1..=shift.n() as u8);
            match rng.gen_range(0..3) {
                0 => Factor::S(i),
                1 => Factor::SStar(i),
                _ => {
                    let len = rng.gen_range(0..=2);
                    Factor::Chi(random_word(rng, shift, len))
                }
            }
        })
        .collect()
}

pub fn product(ctx: &Ctx, word: &[Factor]) -> CkElement {
    word.iter().fold(CkElement::one(ctx), |acc, f| &acc * &f.element(ctx))
}

/// A sum of up to `terms` random terms `c · S_α S_β*` with small Gaussian
/// integer coefficients.
pub fn random_element<R: Rng>(rng: &mut R, ctx: &Ctx, terms: usize, max_len: usize) -> CkElement {
    let shift = ctx.shift().clone();
    let field = ctx.field();
    let raw: Vec<_> = (0..rng.gen_range(0..=terms))
        .map(|_| {
            let (la, lb) = (rng.gen_range(0..=max_len), rng.gen_range(0..=max_len));
            let a = random_word(rng, &shift, la);
            let b = random_word(rng, &shift, lb);
            let c = field.from_int(rng.gen_range(-2..=2)).add(&field.zeta_pow(rng.gen_range(0..4)));
            (a, b, c)
        })
        .collect();
    CkElement::from_terms(ctx, raw).expect("admissible words")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let s = condition_i_shift(&mut rng, 4);
            assert!(s.satisfies_condition_i());
            let t = random_table(&mut rng, &s, 4);
            assert!(t.max_depth() <= 4);
            let a = random_af_table(&mut rng, &s, 4);
            assert!(a.is_af());
        }
    }
}
