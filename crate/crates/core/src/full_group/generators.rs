//! Concrete elements of `[σ_A]_c`: the worked examples, the local shift
//! pieces `τ_μ`, the one-symbol movers and the permutation elements.

use std::collections::{BTreeMap, BTreeSet};

use super::{CocyclePair, PrefixExchangeTable, TableError};
use crate::shift::{complement_cover, EpPoint, LcFunction, MarkovShift, Shift, Symbol, Word};

fn w(s: &str) -> Word {
    Word::parse(s).expect("literal word")
}

fn with_identity_rest(shift: &Shift, mut entries: Vec<(Word, Word)>) -> Vec<(Word, Word)> {
    let domain: Vec<Word> = entries.iter().map(|(m, _)| m.clone()).collect();
    for u in complement_cover(shift, &domain) {
        entries.push((u.clone(), u));
    }
    entries
}

/// The involution of `X_F` exchanging the prefixes `111` and `211`.
pub fn example_involution() -> PrefixExchangeTable {
    let f = MarkovShift::golden_mean();
    let entries = [("111", "211"), ("211", "111"), ("112", "112"), ("121", "121"), ("212", "212")]
        .iter()
        .map(|(a, b)| (w(a), w(b)))
        .collect();
    PrefixExchangeTable::new(f, entries).expect("valid example")
}

fn check_local_shift_preconditions(shift: &Shift, mu: &Word) -> Result<(), TableError> {
    if !shift.satisfies_condition_i() {
        return Err(TableError::ConditionIFailure { transpose: false });
    }
    if !shift.transpose_satisfies_condition_i() {
        return Err(TableError::ConditionIFailure { transpose: true });
    }
    if mu.len() != 2 {
        return Err(TableError::Inadmissible(format!("{mu:?} is not a word of length 2")));
    }
    shift.check_admissible(mu)?;
    Ok(())
}

/// Pieces of `τ_μ` for `μ = aa`: the chosen `b₁` and the other followers of `a`.
fn case1_symbols(shift: &Shift, a: Symbol) -> Result<(Symbol, Vec<Symbol>), TableError> {
    let b1 = shift
        .symbols()
        .find(|&b| b != a && shift.allows(b, a))
        .ok_or(TableError::ConditionIFailure { transpose: true })?;
    let others: Vec<Symbol> = shift.followers(a).into_iter().filter(|&b| b != a).collect();
    if others.is_empty() {
        return Err(TableError::ConditionIFailure { transpose: false });
    }
    Ok((b1, others))
}

/// `τ_μ ∈ [σ_A]_c` with `τ_μ(y) = σ_A(y)` on `U_μ`, for `μ ∈ B_2(X_A)`.
///
/// For `μ = aa`: `aa z ↦ a z`, `a b z ↦ b₁ a b z` for the followers `b ≠ a`
/// of `a`, `b₁ a z ↦ b₁ a a z`, identity elsewhere, where `b₁ ≠ a` is the
/// least symbol with `A(b₁, a) = 1`. For `μ = ab`, `a ≠ b`: `ab z ↦ b z`,
/// `b z ↦ a b z`, identity elsewhere.
pub fn local_shift_piece(shift: &Shift, mu: &Word) -> Result<PrefixExchangeTable, TableError> {
    check_local_shift_preconditions(shift, mu)?;
    let (a, b) = (mu.symbols()[0], mu.symbols()[1]);
    let entries = if a == b {
        let (b1, others) = case1_symbols(shift, a)?;
        let mut e = vec![(mu.clone(), Word::single(a))];
        for bi in others {
            e.push((Word::new(vec![a, bi]), Word::new(vec![b1, a, bi])));
        }
        e.push((Word::new(vec![b1, a]), Word::new(vec![b1, a, a])));
        e
    } else {
        vec![(mu.clone(), Word::single(b)), (Word::single(b), mu.clone())]
    };
    PrefixExchangeTable::new(shift.clone(), with_identity_rest(shift, entries))
}

/// The hand-chosen orbit cocycles of `τ_μ`: `k = 0`, `l = 1` on `U_μ`.
pub fn local_shift_piece_cocycles(shift: &Shift, mu: &Word) -> Result<CocyclePair, TableError> {
    check_local_shift_preconditions(shift, mu)?;
    let (a, b) = (mu.symbols()[0], mu.symbols()[1]);
    let mut pieces: Vec<(Word, (u32, u32))> = Vec::new();
    if a == b {
        let (b1, others) = case1_symbols(shift, a)?;
        pieces.push((mu.clone(), (0, 1)));
        for bi in others {
            pieces.push((Word::new(vec![a, bi]), (1, 0)));
        }
        pieces.push((Word::new(vec![b1, a]), (2, 1)));
    } else {
        pieces.push((mu.clone(), (0, 1)));
        pieces.push((Word::single(b), (1, 0)));
    }
    let domain: Vec<Word> = pieces.iter().map(|(u, _)| u.clone()).collect();
    for u in complement_cover(shift, &domain) {
        pieces.push((u, (0, 0)));
    }
    let kl = LcFunction::from_partition(shift.clone(), &pieces).expect("pieces partition X_A");
    Ok(CocyclePair { k: kl.map(|v| v.0), l: kl.map(|v| v.1) })
}

/// An element `τ` with `τ(x) = jx`.
///
/// If `x = j^∞` this is the identity. Otherwise, with `x = j^{k-1} i …`,
/// `i ≠ j`, put `μ = j^{k-1} i`, `ν = jμ` and exchange `U_μ` with `U_ν`.
pub fn orbit_mover(shift: &Shift, x: &EpPoint, j: Symbol) -> Result<PrefixExchangeTable, TableError> {
    x.check_in(shift)?;
    if j == 0 || j as usize > shift.n() || !shift.allows(j, x.first()) {
        return Err(TableError::Inadmissible(format!("{j}·{x} is not in X_A")));
    }
    if *x == EpPoint::constant(j) {
        return Ok(PrefixExchangeTable::identity(shift.clone()));
    }
    let limit = x.pre().len() + x.period().len();
    let k = (0..limit).find(|&t| x.symbol(t) != j).expect("x is not j^∞");
    let mu = x.prefix(k + 1);
    let nu = mu.prepended(j);
    let entries = vec![(mu.clone(), nu.clone()), (nu, mu)];
    PrefixExchangeTable::new(shift.clone(), with_identity_rest(shift, entries))
}

/// `τ_s(x) = s_{x_{p+1}}(x_1…x_p) x_{p+1} …` for permutations `s_i` of
/// `W_p(i) = {μ ∈ B_p : A(μ_p, i) = 1}`. Words missing from `perms[i-1]` are
/// fixed.
pub fn permutation_element(
    shift: &Shift,
    p: usize,
    perms: &[BTreeMap<Word, Word>],
) -> Result<PrefixExchangeTable, TableError> {
    if p == 0 {
        return Err(TableError::NotAPermutation("p must be at least 1".into()));
    }
    if perms.len() > shift.n() {
        return Err(TableError::NotAPermutation(format!("{} permutations for {} symbols", perms.len(), shift.n())));
    }
    let bp = shift.admissible_words(p);
    let mut entries = Vec::new();
    for i in shift.symbols() {
        let wp: BTreeSet<&Word> = bp.iter().filter(|u| shift.allows(u.last().unwrap(), i)).collect();
        let empty = BTreeMap::new();
        let s = perms.get(i as usize - 1).unwrap_or(&empty);
        let mut images = BTreeSet::new();
        for (from, to) in s {
            if !wp.contains(from) || !wp.contains(to) {
                return Err(TableError::NotAPermutation(format!("{from:?} ↦ {to:?} leaves W_{p}({i})")));
            }
        }
        for &u in &wp {
            let image = s.get(u).unwrap_or(u);
            if !images.insert(image.clone()) {
                return Err(TableError::NotAPermutation(format!("{image:?} is hit twice in W_{p}({i})")));
            }
            entries.push((u.pushed(i), image.pushed(i)));
        }
    }
    PrefixExchangeTable::new(shift.clone(), entries)
}

/// Exchanges the disjoint cylinders `U_μ` and `U_ν` (equal last-symbol rows)
/// and fixes everything else.
pub fn cylinder_swap(shift: &Shift, mu: &Word, nu: &Word) -> Result<PrefixExchangeTable, TableError> {
    if mu.is_prefix_of(nu) || nu.is_prefix_of(mu) {
        return Err(TableError::Inadmissible(format!("U_{mu:?} and U_{nu:?} intersect")));
    }
    let entries = vec![(mu.clone(), nu.clone()), (nu.clone(), mu.clone())];
    PrefixExchangeTable::new(shift.clone(), with_identity_rest(shift, entries))
}

/// `y = μ · σ^l(x)` together with a composite `τ` of local shift pieces and
/// movers such that `τ(x) = y`.
pub fn orbit_within(
    shift: &Shift,
    x: &EpPoint,
    k: usize,
    l: usize,
    mu: &Word,
) -> Result<(EpPoint, PrefixExchangeTable), TableError> {
    x.check_in(shift)?;
    if mu.len() != k {
        return Err(TableError::Inadmissible(format!("{mu:?} does not have length {k}")));
    }
    shift.check_admissible(mu)?;
    let target = x.replace_prefix(l, mu);
    if !target.is_in(shift) {
        return Err(TableError::Inadmissible(format!("{mu:?}·σ^{l}(x) is not in X_A")));
    }
    let mut tau = PrefixExchangeTable::identity(shift.clone());
    let mut cur = x.clone();
    for _ in 0..l {
        let piece = local_shift_piece(shift, &cur.prefix(2))?;
        tau = piece.compose(&tau)?;
        cur = cur.shift();
    }
    for &s in mu.symbols().iter().rev() {
        let mover = orbit_mover(shift, &cur, s)?;
        tau = mover.compose(&tau)?;
        cur = cur.prepend(&Word::single(s));
    }
    debug_assert_eq!(cur, target);
    Ok((target, tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::sweep_points;

    fn pt(s: &str) -> EpPoint {
        EpPoint::parse(s).unwrap()
    }

    fn table(shift: &Shift, list: &[(&str, &str)]) -> PrefixExchangeTable {
        PrefixExchangeTable::new(shift.clone(), list.iter().map(|(a, b)| (w(a), w(b))).collect()).unwrap()
    }

    #[test]
    fn local_shift_pieces_on_golden_mean() {
        let f = MarkovShift::golden_mean();
        let t11 = local_shift_piece(&f, &w("11")).unwrap();
        assert_eq!(t11, table(&f, &[("11", "1"), ("12", "212"), ("21", "211")]));
        let t12 = local_shift_piece(&f, &w("12")).unwrap();
        assert_eq!(t12, table(&f, &[("12", "2"), ("21", "121"), ("11", "11")]));
        assert_eq!(t11.apply(&pt("11|21")), pt("1|21"));
        for mu in f.admissible_words(2) {
            let t = local_shift_piece(&f, &mu).unwrap();
            let stated = local_shift_piece_cocycles(&f, &mu).unwrap();
            let pts = sweep_points(&f, 4, 4);
            assert_eq!(stated.first_violation(&t, &pts), None, "{mu:?}");
            for y in pts.iter().filter(|y| y.starts_with(&mu)) {
                assert_eq!(t.apply(y), y.shift());
            }
        }
    }

    #[test]
    fn local_shift_pieces_require_condition_i() {
        let swap = MarkovShift::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(
            local_shift_piece(&swap, &w("12")),
            Err(TableError::ConditionIFailure { .. })
        ));
        let f = MarkovShift::golden_mean();
        assert!(local_shift_piece(&f, &w("22")).is_err());
    }

    #[test]
    fn orbit_mover_examples() {
        let f = MarkovShift::golden_mean();
        let m = orbit_mover(&f, &pt("|1"), 2).unwrap();
        assert_eq!(m, table(&f, &[("1", "21"), ("21", "1")]));
        assert_eq!(m.apply(&pt("|1")), pt("2|1"));
        assert!(orbit_mover(&f, &pt("|1"), 1).unwrap().is_identity());
        assert!(matches!(orbit_mover(&f, &pt("2|1"), 2), Err(TableError::Inadmissible(_))));
        let a2 = MarkovShift::full(2);
        let m = orbit_mover(&a2, &pt("2|1"), 1).unwrap();
        assert_eq!(m.apply(&pt("2|1")), pt("12|1"));
    }

    #[test]
    fn permutation_examples() {
        let f = MarkovShift::golden_mean();
        let s1: BTreeMap<Word, Word> = [(w("1"), w("2")), (w("2"), w("1"))].into_iter().collect();
        let t = permutation_element(&f, 1, &[s1.clone(), BTreeMap::new()]).unwrap();
        assert_eq!(t, table(&f, &[("11", "21"), ("21", "11"), ("12", "12")]));
        assert!(t.is_af());
        assert!(permutation_element(&f, 2, &[]).unwrap().is_identity());
        let a2 = MarkovShift::full(2);
        let t = permutation_element(&a2, 1, &[s1.clone(), s1]).unwrap();
        assert_eq!(t, table(&a2, &[("11", "21"), ("21", "11"), ("12", "22"), ("22", "12")]));
        let bad: BTreeMap<Word, Word> = [(w("1"), w("2"))].into_iter().collect();
        assert!(matches!(
            permutation_element(&a2, 1, &[bad]),
            Err(TableError::NotAPermutation(_))
        ));
    }

    #[test]
    fn orbit_witnesses() {
        let f = MarkovShift::golden_mean();
        let (y, t) = orbit_within(&f, &pt("|1"), 1, 0, &w("2")).unwrap();
        assert_eq!(y, pt("2|1"));
        assert_eq!(t, orbit_mover(&f, &pt("|1"), 2).unwrap());
        let (y, t) = orbit_within(&f, &pt("|1"), 0, 1, &Word::empty()).unwrap();
        assert_eq!(y, pt("|1"));
        assert_eq!(t.apply(&pt("|1")), pt("|1"));
        let a2 = MarkovShift::full(2);
        let (y, t) = orbit_within(&a2, &pt("|1"), 2, 1, &w("22")).unwrap();
        assert_eq!(y, pt("22|1"));
        assert_eq!(t.apply(&pt("|1")), y);
        assert!(orbit_within(&f, &pt("|1"), 1, 0, &w("3")).is_err());
        assert!(orbit_within(&f, &pt("2|1"), 1, 0, &w("2")).is_err());
    }

    #[test]
    fn involution_is_example_ii_like() {
        let t = example_involution();
        assert!(t.is_af());
        assert!(t.compose(&t).unwrap().is_identity());
    }
}
