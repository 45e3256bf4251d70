use super::{AlgebraError, CkElement, Ctx, PhaseFunction};
use crate::full_group::PrefixExchangeTable;
use crate::shift::{check_partition, LcFunction, PartitionDefect, Word};

/// `u_τ = Σ S_ν S_μ*` over the entries `μ ↦ ν`; `u_τ e_x = e_{τ(x)}`.
pub fn unitary_from_table(ctx: &Ctx, tau: &PrefixExchangeTable) -> Result<CkElement, AlgebraError> {
    if ctx.shift() != tau.shift() {
        return Err(AlgebraError::ShiftMismatch);
    }
    let one = ctx.field().one();
    let terms = tau.entries().iter().map(|(mu, nu)| (nu.clone(), mu.clone(), one.clone()));
    CkElement::from_terms(ctx, terms)
}

/// Splits a normalizer as `v = d · u_τ` with `d` a diagonal phase.
///
/// Terms `c · S_α S_β*` of the normal form become table entries `β ↦ α` with
/// `d = c` on `U_α`. Terms are first refined until both words are nonempty and
/// end in the same symbol.
pub fn normalizer_decompose(v: &CkElement) -> Result<(PhaseFunction, PrefixExchangeTable), AlgebraError> {
    if !v.is_normalizer() {
        return Err(AlgebraError::NotANormalizer);
    }
    let ctx = v.ctx();
    let shift = ctx.shift();
    let mut pieces = Vec::new();
    let mut pending: Vec<(Word, Word, _)> = v.terms().iter().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect();
    while let Some((a, b, c)) = pending.pop() {
        if !a.is_empty() && !b.is_empty() && a.last() == b.last() {
            pieces.push((a, b, c));
            continue;
        }
        let fb = shift.followers_of(&b);
        for j in shift.followers_of(&a).into_iter().filter(|j| fb.contains(j)) {
            pending.push((a.pushed(j), b.pushed(j), c.clone()));
        }
    }
    let domain: Vec<Word> = pieces.iter().map(|(_, b, _)| b.clone()).collect();
    match check_partition(shift, &domain) {
        Ok(()) => {}
        Err(PartitionDefect::Overlap(x, y)) => {
            return Err(AlgebraError::NonScalarObstruction(format!("U_{x:?} and U_{y:?} both carry terms")));
        }
        Err(PartitionDefect::Uncovered(_)) => return Err(AlgebraError::NotANormalizer),
    }
    let field = ctx.field();
    let mut phase_pieces = Vec::new();
    for (a, _, c) in &pieces {
        if !field.is_unimodular(c) {
            return Err(AlgebraError::NotUnimodular(c.to_string()));
        }
        let e = field.as_root_of_unity(c).ok_or_else(|| AlgebraError::ValueOutsidePhaseGroup(c.to_string()))?;
        phase_pieces.push((a.clone(), e));
    }
    let exps = LcFunction::from_partition(shift.clone(), &phase_pieces)
        .ok_or_else(|| AlgebraError::NonScalarObstruction("ranges do not cover X_A".into()))?;
    let phase = PhaseFunction::new(field.order(), exps)?.canonical();
    let entries = pieces.into_iter().map(|(a, b, _)| (b, a)).collect();
    let tau = PrefixExchangeTable::new(shift.clone(), entries)?.simplified();
    let rebuilt = &phase.to_element(ctx)? * &unitary_from_table(ctx, &tau)?;
    if rebuilt != *v {
        return Err(AlgebraError::NonScalarObstruction("d · u_τ differs from v".into()));
    }
    Ok((phase, tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::CkContext;
    use crate::full_group::{example_involution, local_shift_piece};
    use crate::shift::{sweep_points, MarkovShift};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn involution_unitary() {
        let tau = example_involution();
        let ctx = CkContext::gaussian(tau.shift().clone());
        let u = unitary_from_table(&ctx, &tau).unwrap();
        let one = ctx.field().one();
        let expected = CkElement::from_terms(
            &ctx,
            [("211", "111"), ("111", "211"), ("112", "112"), ("121", "121"), ("212", "212")]
                .iter()
                .map(|(a, b)| (w(a), w(b), one.clone())),
        )
        .unwrap();
        assert_eq!(u, expected);
        assert!(u.is_normalizer());
        for p in sweep_points(tau.shift(), 4, 4) {
            assert_eq!(u.act_on_point(&p), vec![(tau.apply(&p), one.clone())]);
        }
        let id = PrefixExchangeTable::identity(tau.shift().clone());
        assert_eq!(unitary_from_table(&ctx, &id).unwrap(), CkElement::one(&ctx));
    }

    #[test]
    fn decompose_round_trips() {
        let f = MarkovShift::golden_mean();
        let ctx = CkContext::gaussian(f.clone());
        let tau = example_involution();
        let u = unitary_from_table(&ctx, &tau).unwrap();
        let (d, t) = normalizer_decompose(&u).unwrap();
        assert_eq!(d, PhaseFunction::one(f.clone(), 4));
        assert_eq!(t, tau);

        let twisted = CkElement::from_terms(
            &ctx,
            [("211", "111", 1), ("111", "211", 0), ("112", "112", 0), ("121", "121", 0), ("212", "212", 0)]
                .iter()
                .map(|(a, b, e)| (w(a), w(b), ctx.field().zeta_pow(*e))),
        )
        .unwrap();
        let (d, t) = normalizer_decompose(&twisted).unwrap();
        assert_eq!(t, tau);
        assert_eq!(*d.exponents().value_on(&w("211")).unwrap(), 1);
        assert_eq!(*d.exponents().value_on(&w("111")).unwrap(), 0);
        assert_eq!(*d.exponents().value_on(&w("121")).unwrap(), 0);

        let t11 = local_shift_piece(&f, &w("11")).unwrap();
        let u = unitary_from_table(&ctx, &t11).unwrap();
        assert!(u.degrees().len() >= 2);
        assert_eq!(normalizer_decompose(&u).unwrap().1, t11);
    }

    #[test]
    fn diagonal_kernel() {
        let a2 = MarkovShift::full(2);
        let ctx = CkContext::gaussian(a2.clone());
        let v = &CkElement::chi(&ctx, &w("1")).scale(&ctx.field().from_int(-1)) + &CkElement::chi(&ctx, &w("2"));
        let (d, t) = normalizer_decompose(&v).unwrap();
        assert!(t.is_identity());
        assert_eq!(d.to_element(&ctx).unwrap(), v);
        let s1 = CkElement::generator(&ctx, 1).unwrap();
        assert_eq!(normalizer_decompose(&s1).unwrap_err(), AlgebraError::NotANormalizer);
    }
}
