use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, Field, Scalar};
use crate::shift::{EpPoint, Shift, Symbol, Word};

/// A shift together with the coefficient field; all elements of one algebra
/// share a context.
#[derive(Debug)]
pub struct CkContext {
    shift: Shift,
    field: Field,
}

pub type Ctx = Arc<CkContext>;

impl CkContext {
    pub fn new(shift: Shift, m: u32) -> Ctx {
        Arc::new(CkContext { shift, field: Field::new(m) })
    }

    /// Coefficients in `ℚ(i)`.
    pub fn gaussian(shift: Shift) -> Ctx {
        Self::new(shift, 4)
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn same_algebra(&self, other: &CkContext) -> bool {
        self.shift == other.shift && self.field.order() == other.field.order()
    }

    fn common_followers(&self, a: &Word, b: &Word) -> Vec<Symbol> {
        let fb = self.shift.followers_of(b);
        self.shift.followers_of(a).into_iter().filter(|j| fb.contains(j)).collect()
    }
}

/// A finite linear combination `Σ c · S_α S_β*`, kept in graded normal form.
///
/// Within each gauge degree `m = |α| - |β|` all terms share one `|β|`, the
/// smallest at which the degree-`m` part can be written; the representation
/// is unique, so structural equality is equality in the algebra.
#[derive(Clone)]
pub struct CkElement {
    ctx: Ctx,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl PartialEq for CkElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_algebra(&other.ctx) && self.terms == other.terms
    }
}

impl CkElement {
    pub fn zero(ctx: &Ctx) -> Self {
        CkElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::term(ctx, Word::empty(), Word::empty(), ctx.field.one())
    }

    /// `S_i`.
    pub fn generator(ctx: &Ctx, i: Symbol) -> Result<Self, AlgebraError> {
        ctx.shift.check_admissible(&Word::single(i))?;
        Ok(Self::term(ctx, Word::single(i), Word::empty(), ctx.field.one()))
    }

    /// `χ_{U_w} = S_w S_w*`.
    pub fn chi(ctx: &Ctx, w: &Word) -> Self {
        Self::term(ctx, w.clone(), w.clone(), ctx.field.one())
    }

    /// `c · S_α S_β*` for admissible `α, β`.
    pub fn term(ctx: &Ctx, alpha: Word, beta: Word, c: Scalar) -> Self {
        Self::from_raw(ctx, vec![((alpha, beta), c)])
    }

    /// Validates the words and normalizes.
    pub fn from_terms(
        ctx: &Ctx,
        terms: impl IntoIterator<Item = (Word, Word, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let mut raw = Vec::new();
        for (a, b, c) in terms {
            ctx.shift.check_admissible(&a)?;
            ctx.shift.check_admissible(&b)?;
            raw.push(((a, b), c));
        }
        Ok(Self::from_raw(ctx, raw))
    }

    fn from_raw(ctx: &Ctx, raw: Vec<RawTerm>) -> Self {
        CkElement { ctx: ctx.clone(), terms: normalize(ctx, raw) }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn shift(&self) -> &Shift {
        &self.ctx.shift
    }

    pub fn field(&self) -> &Field {
        &self.ctx.field
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|(a, b)| degree(a, b)).collect()
    }

    pub fn max_alpha_len(&self) -> usize {
        self.terms.keys().map(|(a, _)| a.len()).max().unwrap_or(0)
    }

    pub fn max_beta_len(&self) -> usize {
        self.terms.keys().map(|(_, b)| b.len()).max().unwrap_or(0)
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ctx.same_algebra(&other.ctx) {
            Ok(())
        } else {
            Err(AlgebraError::ShiftMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let raw = self.terms.iter().chain(&other.terms).map(|(k, c)| (k.clone(), c.clone())).collect();
        Ok(Self::from_raw(&self.ctx, raw))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let k = &self.ctx.field;
        let raw = self.terms.iter().map(|(t, x)| (t.clone(), k.mul(c, x))).collect();
        Self::from_raw(&self.ctx, raw)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let shift = &self.ctx.shift;
        let k = &self.ctx.field;
        let mut raw = Vec::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let c = || k.mul(c1, c2);
                if let Some(w) = a2.strip_prefix(b1) {
                    if w.is_empty() {
                        let fb = shift.followers_of(b1);
                        for j in self.ctx.common_followers(a1, b2).into_iter().filter(|j| fb.contains(j)) {
                            raw.push(((a1.pushed(j), b2.pushed(j)), c()));
                        }
                    } else if shift.can_extend(a1, w.first().unwrap()) {
                        raw.push(((a1.concat(&w), b2.clone()), c()));
                    }
                } else if let Some(w) = b1.strip_prefix(a2) {
                    if shift.can_extend(b2, w.first().unwrap()) {
                        raw.push(((a1.clone(), b2.concat(&w)), c()));
                    }
                }
            }
        }
        Ok(Self::from_raw(&self.ctx, raw))
    }

    pub fn adjoint(&self) -> Self {
        let k = &self.ctx.field;
        let raw = self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), k.conj(c))).collect();
        Self::from_raw(&self.ctx, raw)
    }

    /// The degree-`m` homogeneous part `v_m`.
    pub fn gauge_component(&self, m: i64) -> Self {
        let terms = self.terms.iter().filter(|((a, b), _)| degree(a, b) == m).map(|(t, c)| (t.clone(), c.clone()));
        CkElement { ctx: self.ctx.clone(), terms: terms.collect() }
    }

    /// `E`, the projection onto the degree-zero part `F_A`.
    pub fn conditional_expectation(&self) -> Self {
        self.gauge_component(0)
    }

    /// `μ ↦ E(S_μ* v)` for `μ ∈ B_n`; then `Σ_μ S_μ v_μ = v_n`.
    pub fn strip_prefix(&self, n: usize) -> BTreeMap<Word, CkElement> {
        self.ctx
            .shift
            .admissible_words(n)
            .into_iter()
            .map(|mu| {
                let s = Self::term(&self.ctx, Word::empty(), mu.clone(), self.ctx.field.one());
                let part = (&s * self).conditional_expectation();
                (mu, part)
            })
            .collect()
    }

    /// The action on the basis vector `e_x` of `ℓ²` over eventually periodic
    /// points: `S_α S_β* e_x = e_{αz}` when `x = βz` and `αz ∈ X_A`.
    pub fn act_on_point(&self, p: &EpPoint) -> Vec<(EpPoint, Scalar)> {
        let mut out: BTreeMap<EpPoint, Scalar> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if !p.starts_with(b) {
                continue;
            }
            let z_first = p.symbol(b.len());
            if !self.ctx.shift.can_extend(a, z_first) {
                continue;
            }
            let q = p.replace_prefix(b.len(), a);
            let entry = out.entry(q).or_insert_with(|| self.ctx.field.zero());
            *entry = entry.add(c);
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// In `D_A`: only terms `S_w S_w*`.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|(a, b)| a == b)
    }

    /// In `F_A`: only degree zero.
    pub fn is_in_f(&self) -> bool {
        self.terms.keys().all(|(a, b)| a.len() == b.len())
    }

    pub fn is_unitary(&self) -> bool {
        let one = Self::one(&self.ctx);
        let star = self.adjoint();
        &star * self == one && self * &star == one
    }

    /// Unitary with `v D_A v* = D_A`, checked on the cylinders of depth
    /// `max|α| + max|β|`; shallower cylinders are sums of these.
    pub fn is_normalizer(&self) -> bool {
        if !self.is_unitary() {
            return false;
        }
        let depth = self.max_alpha_len() + self.max_beta_len();
        let star = self.adjoint();
        self.ctx.shift.admissible_words(depth).iter().all(|w| {
            let chi = Self::chi(&self.ctx, w);
            (&(self * &chi) * &star).is_diagonal() && (&(&star * &chi) * self).is_diagonal()
        })
    }
}

type RawTerm = ((Word, Word), Scalar);

fn degree(a: &Word, b: &Word) -> i64 {
    a.len() as i64 - b.len() as i64
}

/// Graded normal form: per degree, expand every compatible term to a common
/// `|β|`, collect, then contract complete sibling families with equal
/// coefficients as long as a whole level contracts.
fn normalize(ctx: &CkContext, raw: Vec<RawTerm>) -> BTreeMap<(Word, Word), Scalar> {
    let mut by_degree: BTreeMap<i64, Vec<RawTerm>> = BTreeMap::new();
    for ((a, b), c) in raw {
        if c.is_zero() || ctx.common_followers(&a, &b).is_empty() {
            continue;
        }
        by_degree.entry(degree(&a, &b)).or_default().push(((a, b), c));
    }
    let mut out = BTreeMap::new();
    for (_, terms) in by_degree {
        let level = terms.iter().map(|((_, b), _)| b.len()).max().unwrap();
        let mut collected: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        for ((a, b), c) in terms {
            expand_into(ctx, a, b, &c, level, &mut collected);
        }
        collected.retain(|_, c| !c.is_zero());
        out.extend(contract(ctx, collected));
    }
    out
}

fn expand_into(
    ctx: &CkContext,
    a: Word,
    b: Word,
    c: &Scalar,
    level: usize,
    out: &mut BTreeMap<(Word, Word), Scalar>,
) {
    if b.len() == level {
        let e = out.entry((a, b)).or_insert_with(|| ctx.field.zero());
        *e = e.add(c);
        return;
    }
    for j in ctx.common_followers(&a, &b) {
        expand_into(ctx, a.pushed(j), b.pushed(j), c, level, out);
    }
}

fn contract(ctx: &CkContext, mut terms: BTreeMap<(Word, Word), Scalar>) -> BTreeMap<(Word, Word), Scalar> {
    loop {
        let Some(((a0, b0), _)) = terms.iter().next() else { return terms };
        if a0.is_empty() || b0.is_empty() {
            return terms;
        }
        let mut groups: BTreeMap<(Word, Word), (Vec<Symbol>, &Scalar)> = BTreeMap::new();
        for ((a, b), c) in &terms {
            let j = a.last().unwrap();
            if b.last() != Some(j) {
                return terms;
            }
            let g = groups.entry((a.parent(), b.parent())).or_insert_with(|| (Vec::new(), c));
            if g.1 != c {
                return terms;
            }
            g.0.push(j);
        }
        for ((a, b), (js, _)) in &groups {
            if *js != ctx.common_followers(a, b) {
                return terms;
            }
        }
        let next = groups.into_iter().map(|(k, (_, c))| (k, c.clone())).collect();
        terms = next;
    }
}

impl Add for &CkElement {
    type Output = CkElement;
    fn add(self, rhs: &CkElement) -> CkElement {
        self.checked_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &CkElement {
    type Output = CkElement;
    fn sub(self, rhs: &CkElement) -> CkElement {
        self.checked_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &CkElement {
    type Output = CkElement;
    fn mul(self, rhs: &CkElement) -> CkElement {
        self.checked_mul(rhs).expect("elements of different algebras")
    }
}

impl Neg for &CkElement {
    type Output = CkElement;
    fn neg(self) -> CkElement {
        let terms = self.terms.iter().map(|(t, c)| (t.clone(), c.neg())).collect();
        CkElement { ctx: self.ctx.clone(), terms }
    }
}

impl fmt::Display for CkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = self.ctx.field.one();
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != one {
                write!(f, "({c})")?;
            }
            match (a.is_empty(), b.is_empty()) {
                (true, true) => write!(f, "1")?,
                (false, true) => write!(f, "S{a}")?,
                (true, false) => write!(f, "S{b}*")?,
                (false, false) => write!(f, "S{a}S{b}*")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CkElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::{sweep_points, MarkovShift};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn s(ctx: &Ctx, i: Symbol) -> CkElement {
        CkElement::generator(ctx, i).unwrap()
    }

    fn st(ctx: &Ctx, a: &str, b: &str) -> CkElement {
        CkElement::term(ctx, w(a), w(b), ctx.field().one())
    }

    #[test]
    fn cuntz_krieger_relations() {
        for shift in [MarkovShift::full(2), MarkovShift::golden_mean(), MarkovShift::full(3)] {
            let ctx = CkContext::gaussian(shift.clone());
            let one = CkElement::one(&ctx);
            let mut sum = CkElement::zero(&ctx);
            for i in shift.symbols() {
                sum = &sum + &(&s(&ctx, i) * &s(&ctx, i).adjoint());
            }
            assert_eq!(sum, one);
            for i in shift.symbols() {
                let lhs = &s(&ctx, i).adjoint() * &s(&ctx, i);
                let mut rhs = CkElement::zero(&ctx);
                for j in shift.followers(i) {
                    rhs = &rhs + &CkElement::chi(&ctx, &Word::single(j));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn golden_mean_products() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        assert_eq!(&s(&ctx, 2).adjoint() * &s(&ctx, 2), CkElement::chi(&ctx, &w("1")));
        let a2 = CkContext::gaussian(MarkovShift::full(2));
        assert_eq!(&s(&a2, 1).adjoint() * &s(&a2, 1), CkElement::one(&a2));
        // S_1 S_2* is compatible through j = 1
        let t = &s(&ctx, 1) * &s(&ctx, 2).adjoint();
        assert_eq!(t.terms().keys().cloned().collect::<Vec<_>>(), vec![(w("1"), w("2"))]);
        assert!(!t.is_zero());
    }

    #[test]
    fn normal_form_is_canonical() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        let one = CkElement::one(&ctx);
        let expanded = &(&st(&ctx, "11", "11") + &st(&ctx, "12", "12")) + &st(&ctx, "21", "21");
        assert_eq!(expanded, one);
        assert_eq!(expanded.terms().len(), 1);
        let diff = &one - &(&st(&ctx, "1", "1") + &st(&ctx, "2", "2"));
        assert!(diff.is_zero());
        // S_1 S_2* = S_11 S_21* on X_F
        assert_eq!(st(&ctx, "11", "21"), st(&ctx, "1", "2"));
    }

    #[test]
    fn point_action() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        let p = |s: &str| EpPoint::parse(s).unwrap();
        let one = ctx.field().one();
        assert_eq!(s(&ctx, 2).act_on_point(&p("|1")), vec![(p("2|1"), one.clone())]);
        assert!(s(&ctx, 2).act_on_point(&p("2|1")).is_empty());
        assert_eq!(st(&ctx, "1", "2").act_on_point(&p("2|1")), vec![(p("|1"), one)]);
    }

    #[test]
    fn gauge_parts() {
        let ctx = CkContext::gaussian(MarkovShift::full(2));
        let x = &st(&ctx, "1", "2") + &st(&ctx, "1", "1");
        assert_eq!(x.conditional_expectation(), x);
        let y = &st(&ctx, "1", "") + &st(&ctx, "1", "2");
        assert_eq!(y.gauge_component(1), s(&ctx, 1));
        assert_eq!(y.conditional_expectation(), st(&ctx, "1", "2"));
        assert!(y.gauge_component(-1).is_zero());
    }

    #[test]
    fn strip_prefix_reconstructs() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        let v = st(&ctx, "12", "1");
        let parts = v.strip_prefix(1);
        assert_eq!(parts[&w("1")], st(&ctx, "2", "1"));
        assert!(parts[&w("2")].is_zero());
        let mut back = CkElement::zero(&ctx);
        for (mu, part) in &parts {
            back = &back + &(&st(&ctx, &mu.to_string(), "") * part);
        }
        assert_eq!(back, v.gauge_component(1));
        let one = CkElement::one(&ctx);
        assert!(one.strip_prefix(1).values().all(CkElement::is_zero));
    }

    #[test]
    fn predicates() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        let d = &(&st(&ctx, "11", "11") + &st(&ctx, "12", "12")) + &st(&ctx, "21", "21");
        assert!(d.is_diagonal() && d.is_in_f() && d.is_unitary());
        let a2 = CkContext::gaussian(MarkovShift::full(2));
        assert!(!s(&a2, 1).is_unitary());
        let u = &st(&a2, "1", "2") + &st(&a2, "2", "1");
        assert!(u.is_normalizer());
        let twist = &st(&a2, "1", "1") + &st(&a2, "2", "1");
        assert!(!twist.is_unitary());
    }

    #[test]
    fn oracle_matches_normal_form() {
        let ctx = CkContext::gaussian(MarkovShift::golden_mean());
        let x = &(&s(&ctx, 1) * &s(&ctx, 2).adjoint()) + &st(&ctx, "12", "1");
        let y = &x * &x.adjoint();
        for p in sweep_points(ctx.shift(), 4, 3) {
            let direct = y.act_on_point(&p);
            let mut via: BTreeMap<EpPoint, Scalar> = BTreeMap::new();
            for (q, c) in x.adjoint().act_on_point(&p) {
                for (r, d) in x.act_on_point(&q) {
                    let e = via.entry(r).or_insert_with(|| ctx.field().zero());
                    *e = e.add(&ctx.field().mul(&c, &d));
                }
            }
            let via: Vec<_> = via.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            assert_eq!(direct, via, "{p}");
        }
    }
}
