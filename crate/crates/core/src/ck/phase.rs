use std::collections::{BTreeMap, VecDeque};

use super::{AlgebraError, CkElement, Ctx};
use crate::shift::{LcFunction, Shift, Word};

/// A locally constant function with values in the `M`-th roots of unity,
/// stored as exponents: the value on `U_w` is `ζ_M^{e(w)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFunction {
    order: u32,
    exps: LcFunction<u32>,
}

impl PhaseFunction {
    pub fn new(order: u32, exps: LcFunction<u32>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::ValueOutsidePhaseGroup("order 0".into()));
        }
        if let Some(e) = exps.values().find(|&&e| e >= order) {
            return Err(AlgebraError::ValueOutsidePhaseGroup(format!("exponent {e} mod {order}")));
        }
        Ok(PhaseFunction { order, exps })
    }

    pub fn constant(shift: Shift, order: u32, e: u32) -> Self {
        PhaseFunction { order, exps: LcFunction::constant(shift, e % order) }
    }

    pub fn one(shift: Shift, order: u32) -> Self {
        Self::constant(shift, order, 0)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &LcFunction<u32> {
        &self.exps
    }

    pub fn shift(&self) -> &Shift {
        self.exps.shift()
    }

    pub fn depth(&self) -> usize {
        self.exps.depth()
    }

    /// Minimal-depth table.
    pub fn canonical(&self) -> Self {
        PhaseFunction { order: self.order, exps: self.exps.canonical() }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.order != other.order {
            return Err(AlgebraError::ValueOutsidePhaseGroup("orders differ".into()));
        }
        let m = self.order;
        let exps = self.exps.zip_with(&other.exps, |a, b| (a + b) % m)?;
        Ok(PhaseFunction { order: m, exps })
    }

    pub fn conj(&self) -> Self {
        let m = self.order;
        PhaseFunction { order: m, exps: self.exps.map(|e| (m - e) % m) }
    }

    /// `f ∘ σ_A`.
    pub fn compose_shift(&self) -> Self {
        PhaseFunction { order: self.order, exps: self.exps.compose_shift() }
    }

    /// `Σ_w ζ^{e(w)} χ_{U_w}` in the algebra of `ctx`, whose field must
    /// contain the `order`-th roots of unity.
    pub fn to_element(&self, ctx: &Ctx) -> Result<CkElement, AlgebraError> {
        if ctx.shift() != self.shift() {
            return Err(AlgebraError::ShiftMismatch);
        }
        let big = ctx.field().order();
        if !big.is_multiple_of(self.order) {
            return Err(AlgebraError::ValueOutsidePhaseGroup(format!(
                "ζ_{} is not in ℚ(ζ_{big})",
                self.order
            )));
        }
        let step = (big / self.order) as i64;
        let terms = self
            .exps
            .canonical()
            .table()
            .iter()
            .map(|(w, &e)| (w.clone(), w.clone(), ctx.field().zeta_pow(step * e as i64)))
            .collect::<Vec<_>>();
        CkElement::from_terms(ctx, terms)
    }

    /// Reads a diagonal unitary with root-of-unity values back as exponents of
    /// `ζ_M`, `M` the order of the context field.
    pub fn from_element(e: &CkElement) -> Result<Self, AlgebraError> {
        if !e.is_diagonal() {
            return Err(AlgebraError::NotDiagonal);
        }
        let field = e.field();
        let depth = e.max_alpha_len();
        let mut table = BTreeMap::new();
        for w in e.shift().admissible_words(depth) {
            let c = e
                .terms()
                .iter()
                .find(|((a, _), _)| a.is_prefix_of(&w))
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| field.zero());
            if !field.is_unimodular(&c) {
                return Err(AlgebraError::NotUnimodular(c.to_string()));
            }
            let exp = field.as_root_of_unity(&c).ok_or_else(|| AlgebraError::ValueOutsidePhaseGroup(c.to_string()))?;
            table.insert(w, exp);
        }
        let exps = LcFunction::new(e.shift().clone(), depth, table)?;
        Ok(PhaseFunction { order: field.order(), exps }.canonical())
    }
}

/// `φ_A(f) = Σ_i S_i f S_i*`, which is `f ∘ σ_A` on `D_A`.
pub fn phi_a(f: &CkElement) -> Result<CkElement, AlgebraError> {
    if !f.is_diagonal() {
        return Err(AlgebraError::NotDiagonal);
    }
    let ctx = f.ctx();
    let mut out = CkElement::zero(ctx);
    for i in ctx.shift().symbols() {
        let s = CkElement::generator(ctx, i)?;
        out = &out + &(&(&s * f) * &s.adjoint());
    }
    Ok(out)
}

/// `λ(U)`: `S_α S_β* ↦ U(|α|) S_α S_β* U(|β|)*` where
/// `U(k) = U1 · φ_A(U1) ⋯ φ_A^{k-1}(U1)`.
pub fn cocycle_automorphism(u1: &PhaseFunction, e: &CkElement) -> Result<CkElement, AlgebraError> {
    let ctx = e.ctx();
    let u1 = u1.to_element(ctx)?;
    if !u1.is_unitary() {
        return Err(AlgebraError::NotUnimodular(u1.to_string()));
    }
    let longest = e.max_alpha_len().max(e.max_beta_len());
    let mut cocycle = vec![CkElement::one(ctx)];
    let mut power = u1;
    for k in 1..=longest {
        cocycle.push(&cocycle[k - 1] * &power);
        power = phi_a(&power)?;
    }
    let mut out = CkElement::zero(ctx);
    for ((a, b), c) in e.terms() {
        let t = CkElement::term(ctx, a.clone(), b.clone(), c.clone());
        out = &out + &(&(&cocycle[a.len()] * &t) * &cocycle[b.len()].adjoint());
    }
    Ok(out)
}

/// A phase `v` locally constant at depth `d` with `U1 = v · conj(v ∘ σ_A)`,
/// if one exists.
///
/// Unknowns are `v(w)` for `w ∈ B_d`; each `u ∈ B_{d+1}` gives the equation
/// `e(u) = v(prefix_d u) - v(suffix_d u)` in `ℤ/M`. A spanning forest fixes
/// `v`, then every equation is checked.
pub fn solve_coboundary(u1: &PhaseFunction, d: usize) -> Result<Option<PhaseFunction>, AlgebraError> {
    let u1 = u1.canonical();
    if u1.depth() > d + 1 {
        return Ok(None);
    }
    let m = u1.order() as i64;
    let shift = u1.shift().clone();
    let nodes = shift.admissible_words(d);
    let index: BTreeMap<&Word, usize> = nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nodes.len()];
    let mut edges = Vec::new();
    for u in shift.admissible_words(d + 1) {
        let from = index[&u.prefix(d)];
        let to = index[&u.drop_front(1)];
        let label = *u1.exponents().value_on(&u).unwrap() as i64;
        adj[from].push((to, -label));
        adj[to].push((from, label));
        edges.push((from, to, label));
    }
    let mut value: Vec<Option<i64>> = vec![None; nodes.len()];
    for root in 0..nodes.len() {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let vx = value[x].unwrap();
            for &(y, delta) in &adj[x] {
                if value[y].is_none() {
                    value[y] = Some((vx + delta).rem_euclid(m));
                    queue.push_back(y);
                }
            }
        }
    }
    let value: Vec<i64> = value.into_iter().map(Option::unwrap).collect();
    if edges.iter().any(|&(f, t, l)| (value[f] - value[t] - l).rem_euclid(m) != 0) {
        return Ok(None);
    }
    let table = nodes.iter().cloned().zip(value.iter().map(|&v| v as u32)).collect();
    let exps = LcFunction::new(shift, d, table)?;
    Ok(Some(PhaseFunction { order: u1.order(), exps }.canonical()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::CkContext;
    use crate::shift::MarkovShift;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn phase(shift: &Shift, order: u32, depth: usize, vals: &[(&str, u32)]) -> PhaseFunction {
        let table = vals.iter().map(|(k, v)| (w(k), *v)).collect();
        PhaseFunction::new(order, LcFunction::new(shift.clone(), depth, table).unwrap()).unwrap()
    }

    #[test]
    fn phi_on_full_shift() {
        let a2 = MarkovShift::full(2);
        let ctx = CkContext::gaussian(a2.clone());
        assert_eq!(phi_a(&CkElement::one(&ctx)).unwrap(), CkElement::one(&ctx));
        let chi1 = CkElement::chi(&ctx, &w("1"));
        let expected = &CkElement::chi(&ctx, &w("11")) + &CkElement::chi(&ctx, &w("21"));
        assert_eq!(phi_a(&chi1).unwrap(), expected);
        assert_eq!(phi_a(&CkElement::generator(&ctx, 1).unwrap()), Err(AlgebraError::NotDiagonal));
        let f = phase(&a2, 4, 1, &[("1", 1), ("2", 3)]);
        let lhs = phi_a(&f.to_element(&ctx).unwrap()).unwrap();
        assert_eq!(lhs, f.compose_shift().to_element(&ctx).unwrap());
    }

    #[test]
    fn cocycle_signs() {
        let a2 = MarkovShift::full(2);
        let ctx = CkContext::gaussian(a2.clone());
        let minus = PhaseFunction::constant(a2.clone(), 2, 1);
        let s1 = CkElement::generator(&ctx, 1).unwrap();
        assert_eq!(cocycle_automorphism(&minus, &s1).unwrap(), -&s1);
        let t = CkElement::term(&ctx, w("12"), w("1"), ctx.field().one());
        assert_eq!(cocycle_automorphism(&minus, &t).unwrap(), -&t);
        let trivial = PhaseFunction::one(a2.clone(), 4);
        assert_eq!(cocycle_automorphism(&trivial, &t).unwrap(), t);
        for u in a2.admissible_words(3) {
            let chi = CkElement::chi(&ctx, &u);
            assert_eq!(cocycle_automorphism(&minus, &chi).unwrap(), chi);
        }
    }

    #[test]
    fn coboundaries() {
        let a2 = MarkovShift::full(2);
        let one = PhaseFunction::one(a2.clone(), 2);
        assert_eq!(solve_coboundary(&one, 1).unwrap(), Some(PhaseFunction::one(a2.clone(), 2)));
        let minus = PhaseFunction::constant(a2.clone(), 2, 1);
        for d in 0..4 {
            assert_eq!(solve_coboundary(&minus, d).unwrap(), None);
        }
        let u1 = phase(&a2, 2, 2, &[("11", 0), ("12", 1), ("21", 1), ("22", 0)]);
        let v = solve_coboundary(&u1, 1).unwrap().unwrap();
        assert_eq!(v.mul(&v.compose_shift().conj()).unwrap(), u1);
        assert_eq!(solve_coboundary(&u1, 0).unwrap(), None);
    }

    #[test]
    fn phase_round_trip() {
        let f = MarkovShift::golden_mean();
        let ctx = CkContext::gaussian(f.clone());
        let p = phase(&f, 4, 2, &[("11", 1), ("12", 0), ("21", 3)]);
        let e = p.to_element(&ctx).unwrap();
        assert!(e.is_diagonal() && e.is_unitary());
        assert_eq!(PhaseFunction::from_element(&e).unwrap(), p);
        let ctx6 = CkContext::new(f.clone(), 6);
        assert!(matches!(p.to_element(&ctx6), Err(AlgebraError::ValueOutsidePhaseGroup(_))));
    }
}
