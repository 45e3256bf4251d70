use std::collections::BTreeSet;

use super::{OeError, TailMap};
use crate::ck::{CkElement, Ctx, Scalar};
use crate::full_group::PrefixExchangeTable;
use crate::shift::{sweep_points, EpPoint, Shift, Word};
use crate::Bounds;

/// Sample points of `U_w`: swept points with prefix `w` and `w` followed by
/// short eventually periodic tails.
fn representatives(shift: &Shift, w: &Word, sweep: &[EpPoint], tails: &[EpPoint]) -> Vec<EpPoint> {
    let mut reps: BTreeSet<EpPoint> = sweep.iter().filter(|p| p.starts_with(w)).cloned().collect();
    for z in tails {
        if shift.can_extend(w, z.first()) {
            reps.insert(z.prepend(w));
        }
    }
    reps.into_iter().collect()
}

/// Infers a prefix-exchange table for `g = h ∘ τ ∘ h^{-1}` on `X_B`.
///
/// Words of `B` are refined until, on every representative `y ∈ U_w`,
/// `g(y) = ν σ^{|w|}(y)` for one word `ν`. The assembled table is validated
/// and then compared with `g` on the whole sweep.
pub fn conjugate_table(h: &TailMap, tau: &PrefixExchangeTable, bounds: Bounds) -> Result<PrefixExchangeTable, OeError> {
    if tau.shift() != h.source() {
        return Err(OeError::ShiftMismatch);
    }
    let target = h.target();
    let g = |y: &EpPoint| -> Result<EpPoint, OeError> { h.apply(&tau.apply(&h.apply_inverse(y)?)) };
    let sweep = sweep_points(target, bounds.pre, bounds.period);
    let tails = sweep_points(target, 2, 3);
    let mut entries = Vec::new();
    let mut pending: Vec<Word> = target.symbols().map(Word::single).collect();
    while let Some(w) = pending.pop() {
        let reps = representatives(target, &w, &sweep, &tails);
        let images = reps.iter().map(&g).collect::<Result<Vec<_>, _>>()?;
        let max_len = w.len() + 2 * bounds.depth;
        let found = (0..=max_len).find_map(|len| {
            let nu = images[0].prefix(len);
            let fits = reps
                .iter()
                .zip(&images)
                .all(|(y, gy)| gy.starts_with(&nu) && gy.shift_by(len) == y.shift_by(w.len()));
            (fits && !nu.is_empty() && target.is_admissible(&nu)).then_some(nu)
        });
        match found {
            Some(nu) => entries.push((w, nu)),
            None if w.len() < bounds.depth => {
                for j in target.followers_of(&w) {
                    pending.push(w.pushed(j));
                }
            }
            None => return Err(OeError::DepthExhausted { depth: bounds.depth }),
        }
    }
    let table = PrefixExchangeTable::new(target.clone(), entries)
        .map_err(|e| OeError::ValidationMismatch(format!("inferred table is invalid: {e}")))?
        .simplified();
    for y in &sweep {
        let expected = g(y)?;
        if table.apply(y) != expected {
            return Err(OeError::ValidationMismatch(format!("table sends {y} to {}, conjugate gives {expected}", table.apply(y))));
        }
    }
    Ok(table)
}

fn diagonal_value(f: &CkElement, x: &EpPoint) -> Scalar {
    f.act_on_point(x).into_iter().next().map(|(_, c)| c).unwrap_or_else(|| f.field().zero())
}

/// `f ∘ h^{-1}` for a diagonal `f` over the source, as a diagonal element of
/// `target_ctx`. The depth is found by probing representatives and then
/// certified on the sweep.
pub fn transport_diagonal(h: &TailMap, f: &CkElement, target_ctx: &Ctx, bounds: Bounds) -> Result<CkElement, OeError> {
    if !f.is_diagonal() {
        return Err(OeError::Algebra(crate::ck::AlgebraError::NotDiagonal));
    }
    if f.shift() != h.source() || target_ctx.shift() != h.target() || target_ctx.field() != f.field() {
        return Err(OeError::ShiftMismatch);
    }
    let target = h.target();
    let value = |y: &EpPoint| -> Result<Scalar, OeError> { Ok(diagonal_value(f, &h.apply_inverse(y)?)) };
    let sweep = sweep_points(target, bounds.pre, bounds.period);
    let tails = sweep_points(target, 2, 3);
    'depth: for d in 0..=bounds.depth {
        let mut terms = Vec::new();
        for w in target.admissible_words(d) {
            let reps = representatives(target, &w, &sweep, &tails);
            let first = value(&reps[0])?;
            for y in &reps[1..] {
                if value(y)? != first {
                    continue 'depth;
                }
            }
            terms.push((w.clone(), w, first));
        }
        let candidate = CkElement::from_terms(target_ctx, terms)?;
        for y in &sweep {
            if diagonal_value(&candidate, y) != value(y)? {
                continue 'depth;
            }
        }
        return Ok(candidate);
    }
    Err(OeError::DepthExhausted { depth: bounds.depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::CkContext;
    use crate::full_group::{example_involution, local_shift_piece};
    use crate::orbit_equiv::golden_mean_example;
    use crate::shift::MarkovShift;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn bounds() -> Bounds {
        Bounds::new(6, 4, 8).unwrap()
    }

    #[test]
    fn conjugates_of_generators() {
        let (h, _) = golden_mean_example();
        let f = h.source().clone();
        let id = conjugate_table(&h, &PrefixExchangeTable::identity(f.clone()), bounds()).unwrap();
        assert!(id.is_identity());
        let inv = conjugate_table(&h, &example_involution(), bounds()).unwrap();
        let expected = PrefixExchangeTable::new(
            h.target().clone(),
            [("111", "21"), ("21", "111"), ("112", "112"), ("12", "12"), ("22", "22")]
                .iter()
                .map(|(a, b)| (w(a), w(b)))
                .collect(),
        )
        .unwrap();
        assert_eq!(inv, expected);
        for mu in f.admissible_words(2) {
            let t = local_shift_piece(&f, &mu).unwrap();
            let c = conjugate_table(&h, &t, bounds()).unwrap();
            let back = conjugate_table(&h.inverted(), &c, bounds()).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn transported_characteristic_functions() {
        let (h, _) = golden_mean_example();
        let src = CkContext::gaussian(h.source().clone());
        let dst = CkContext::gaussian(h.target().clone());
        let one = transport_diagonal(&h, &CkElement::one(&src), &dst, bounds()).unwrap();
        assert_eq!(one, CkElement::one(&dst));
        let chi2 = transport_diagonal(&h, &CkElement::chi(&src, &w("2")), &dst, bounds()).unwrap();
        assert_eq!(chi2, CkElement::chi(&dst, &w("2")));
        // h(U_21) = U_2, so this is the same function
        let chi21 = transport_diagonal(&h, &CkElement::chi(&src, &w("21")), &dst, bounds()).unwrap();
        assert_eq!(chi21, chi2);
        let chi11 = transport_diagonal(&h, &CkElement::chi(&src, &w("11")), &dst, bounds()).unwrap();
        assert_eq!(chi11, CkElement::chi(&dst, &w("11")));
        let a2 = MarkovShift::full(2);
        assert!(transport_diagonal(&h, &CkElement::one(&dst), &CkContext::gaussian(a2), bounds()).is_err());
    }
}
