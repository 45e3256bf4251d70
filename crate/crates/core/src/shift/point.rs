use std::fmt;

use super::{MarkovShift, ShiftError, Symbol, Word};

/// An eventually periodic sequence `pre · period · period · …`, kept in
/// canonical form: the period is primitive and the preperiod is as short as
/// possible. Equality of points is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpPoint {
    pre: Word,
    period: Word,
}

impl EpPoint {
    pub fn new(pre: Word, period: Word) -> Result<Self, ShiftError> {
        if period.is_empty() {
            return Err(ShiftError::Parse { what: "point", input: format!("{pre}|") });
        }
        Ok(Self::canonical(pre.symbols().to_vec(), period.symbols().to_vec()))
    }

    /// Builds a point and checks that it lies in `X_A`.
    pub fn in_shift(shift: &MarkovShift, pre: Word, period: Word) -> Result<Self, ShiftError> {
        let p = Self::new(pre, period)?;
        p.check_in(shift)?;
        Ok(p)
    }

    /// The fixed point `s^∞`.
    pub fn constant(s: Symbol) -> Self {
        EpPoint { pre: Word::empty(), period: Word::single(s) }
    }

    fn canonical(mut pre: Vec<Symbol>, mut period: Vec<Symbol>) -> Self {
        let q = period.len();
        if let Some(p) = (1..=q).find(|p| q.is_multiple_of(*p) && (0..q).all(|i| period[i] == period[i % p])) {
            period.truncate(p);
        }
        while let Some(&l) = pre.last() {
            if l == *period.last().expect("nonempty period") {
                pre.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        EpPoint { pre: Word::new(pre), period: Word::new(period) }
    }

    pub fn pre(&self) -> &Word {
        &self.pre
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn symbol(&self, i: usize) -> Symbol {
        let pre = self.pre.symbols();
        if i < pre.len() {
            pre[i]
        } else {
            let per = self.period.symbols();
            per[(i - pre.len()) % per.len()]
        }
    }

    pub fn first(&self) -> Symbol {
        self.symbol(0)
    }

    /// `x_{[1,k]}`.
    pub fn prefix(&self, k: usize) -> Word {
        Word::new((0..k).map(|i| self.symbol(i)).collect())
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        w.symbols().iter().enumerate().all(|(i, &s)| self.symbol(i) == s)
    }

    /// `σ(x)`.
    pub fn shift(&self) -> EpPoint {
        self.shift_by(1)
    }

    /// `σ^k(x)`.
    pub fn shift_by(&self, k: usize) -> EpPoint {
        let pre = self.pre.symbols();
        if k <= pre.len() {
            return EpPoint { pre: Word::new(pre[k..].to_vec()), period: self.period.clone() };
        }
        let r = (k - pre.len()) % self.period.len();
        let mut period = self.period.symbols().to_vec();
        period.rotate_left(r);
        EpPoint { pre: Word::empty(), period: Word::new(period) }
    }

    /// `w · x`.
    pub fn prepend(&self, w: &Word) -> EpPoint {
        if w.is_empty() {
            return self.clone();
        }
        let pre = w.concat(&self.pre);
        Self::canonical(pre.symbols().to_vec(), self.period.symbols().to_vec())
    }

    /// `w · σ^k(x)`: replace the first `k` symbols by `w`.
    pub fn replace_prefix(&self, k: usize, w: &Word) -> EpPoint {
        self.shift_by(k).prepend(w)
    }

    pub fn is_in(&self, shift: &MarkovShift) -> bool {
        let probe = self.pre.concat(&self.period).concat(&self.period);
        shift.is_admissible(&probe)
    }

    pub fn check_in(&self, shift: &MarkovShift) -> Result<(), ShiftError> {
        let probe = self.pre.concat(&self.period).concat(&self.period);
        shift.check_admissible(&probe)
    }

    /// Parses `"pre|period"`; `"|1"` is `1^∞`.
    pub fn parse(s: &str) -> Result<Self, ShiftError> {
        let err = || ShiftError::Parse { what: "point", input: s.to_string() };
        let (pre, period) = s.trim().split_once('|').ok_or_else(err)?;
        let pre = Word::parse(pre)?;
        let period = Word::parse(period)?;
        if period.is_empty() {
            return Err(err());
        }
        Self::new(pre, period)
    }

    pub fn parse_in(shift: &MarkovShift, s: &str) -> Result<Self, ShiftError> {
        let p = Self::parse(s)?;
        p.check_in(shift)?;
        Ok(p)
    }
}

impl fmt::Display for EpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.pre, self.period)
    }
}

impl fmt::Debug for EpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every canonical point of `X_A` with `|pre| ≤ max_pre` and
/// `|period| ≤ max_period`, sorted.
pub fn sweep_points(shift: &MarkovShift, max_pre: usize, max_period: usize) -> Vec<EpPoint> {
    let pres: Vec<Vec<Word>> = (0..=max_pre).map(|k| shift.admissible_words(k)).collect();
    let mut out = Vec::new();
    for q in 1..=max_period {
        for per in shift.admissible_words(q) {
            let (first, last) = (per.first().unwrap(), per.last().unwrap());
            if !shift.allows(last, first) {
                continue;
            }
            let syms = per.symbols();
            let primitive = !(1..q).any(|p| q % p == 0 && (0..q).all(|i| syms[i] == syms[i % p]));
            if !primitive {
                continue;
            }
            for layer in &pres {
                for pre in layer {
                    match pre.last() {
                        None => {}
                        Some(l) if l != last && shift.allows(l, first) => {}
                        _ => continue,
                    }
                    out.push(EpPoint { pre: pre.clone(), period: per.clone() });
                }
            }
        }
    }
    out.sort();
    out
}
