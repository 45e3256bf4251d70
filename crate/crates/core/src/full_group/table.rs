use std::collections::{BTreeMap, BTreeSet};

use super::TableError;
use crate::shift::{check_partition, EpPoint, LcFunction, Shift, Word};

/// A homeomorphism of `X_A` given by finitely many prefix replacements
/// `μ_i z ↦ ν_i z`.
///
/// The domain cylinders `U_{μ_i}` and the range cylinders `U_{ν_i}` both
/// partition `X_A`, and the last symbols of `μ_i` and `ν_i` have equal rows,
/// so each piece is a bijection `U_{μ_i} → U_{ν_i}`.
#[derive(Debug, Clone)]
pub struct PrefixExchangeTable {
    shift: Shift,
    entries: BTreeMap<Word, Word>,
    lengths: Vec<usize>,
}

/// Orbit cocycles `k, l` with `σ^{k(x)}(τ x) = σ^{l(x)}(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CocyclePair {
    pub k: LcFunction<u32>,
    pub l: LcFunction<u32>,
}

impl CocyclePair {
    /// First point of `points` violating the cocycle identity for `tau`.
    pub fn first_violation<'a>(
        &self,
        tau: &PrefixExchangeTable,
        points: impl IntoIterator<Item = &'a EpPoint>,
    ) -> Option<EpPoint> {
        points.into_iter().find_map(|x| {
            let lhs = tau.apply(x).shift_by(*self.k.eval(x) as usize);
            let rhs = x.shift_by(*self.l.eval(x) as usize);
            (lhs != rhs).then(|| x.clone())
        })
    }
}

impl PrefixExchangeTable {
    /// Validates raw entries. Entries whose rows differ are split into their
    /// one-symbol extensions, provided every suffix allowed after `μ` is
    /// allowed after `ν`.
    pub fn new(shift: Shift, raw: Vec<(Word, Word)>) -> Result<Self, TableError> {
        if raw.is_empty() {
            return Err(TableError::EmptyTable);
        }
        for (mu, nu) in &raw {
            if mu.is_empty() || nu.is_empty() {
                return Err(TableError::EmptyWordEntry);
            }
            shift.check_admissible(mu)?;
            shift.check_admissible(nu)?;
        }
        let mut entries = Vec::with_capacity(raw.len());
        for (mu, nu) in raw {
            let (a, b) = (mu.last().unwrap(), nu.last().unwrap());
            if shift.row(a) == shift.row(b) {
                entries.push((mu, nu));
                continue;
            }
            if shift.row(a).iter().zip(shift.row(b)).any(|(&x, &y)| x > y) {
                return Err(TableError::SuffixMapNotIntoShift { mu, nu });
            }
            for j in shift.followers(a) {
                entries.push((mu.pushed(j), nu.pushed(j)));
            }
        }
        let domain: Vec<Word> = entries.iter().map(|(m, _)| m.clone()).collect();
        check_partition(&shift, &domain).map_err(TableError::DomainNotPartition)?;
        let range: Vec<Word> = entries.iter().map(|(_, n)| n.clone()).collect();
        check_partition(&shift, &range).map_err(TableError::RangeNotPartition)?;
        Ok(Self::from_checked(shift, entries.into_iter().collect()))
    }

    fn from_checked(shift: Shift, entries: BTreeMap<Word, Word>) -> Self {
        let lengths: BTreeSet<usize> = entries.keys().map(Word::len).collect();
        PrefixExchangeTable { shift, entries, lengths: lengths.into_iter().collect() }
    }

    /// The identity, `{(j, j)}`.
    pub fn identity(shift: Shift) -> Self {
        let entries = shift.symbols().map(|j| (Word::single(j), Word::single(j))).collect();
        Self::from_checked(shift, entries)
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    /// Entries `μ ↦ ν`, sorted by `μ`.
    pub fn entries(&self) -> &BTreeMap<Word, Word> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Longest word appearing in the table.
    pub fn max_depth(&self) -> usize {
        self.entries.iter().map(|(m, n)| m.len().max(n.len())).max().unwrap_or(0)
    }

    pub fn domain_depth(&self) -> usize {
        self.lengths.last().copied().unwrap_or(0)
    }

    /// The entry whose domain cylinder contains `p`.
    pub fn entry_for(&self, p: &EpPoint) -> (&Word, &Word) {
        for &len in &self.lengths {
            if let Some((mu, nu)) = self.entries.get_key_value(&p.prefix(len)) {
                return (mu, nu);
            }
        }
        unreachable!("domain cylinders partition X_A but {p} is uncovered")
    }

    /// `τ(x)`.
    pub fn apply(&self, p: &EpPoint) -> EpPoint {
        let (mu, nu) = self.entry_for(p);
        p.replace_prefix(mu.len(), nu)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, TableError> {
        if self.shift != other.shift {
            return Err(TableError::ShiftMismatch);
        }
        let shift = &self.shift;
        let mut raw = Vec::new();
        for (mu, nu) in &other.entries {
            for (mu2, nu2) in &self.entries {
                if let Some(w) = mu2.strip_prefix(nu) {
                    let m = mu.concat(&w);
                    if shift.is_admissible(&m) {
                        raw.push((m, nu2.clone()));
                    }
                } else if let Some(w) = nu.strip_prefix(mu2) {
                    let n = nu2.concat(&w);
                    if shift.is_admissible(&n) {
                        raw.push((mu.clone(), n));
                    }
                }
            }
        }
        Ok(Self::new(shift.clone(), raw)?.simplified())
    }

    pub fn inverse(&self) -> Self {
        let entries = self.entries.iter().map(|(m, n)| (n.clone(), m.clone())).collect();
        Self::from_checked(self.shift.clone(), entries)
    }

    /// Merges complete sibling families `{(wj, vj)}` into `(w, v)` when the
    /// rows of `last(w)` and `last(v)` agree. Denotes the same map.
    pub fn simplified(&self) -> Self {
        let shift = &self.shift;
        let mut entries = self.entries.clone();
        loop {
            let mut groups: BTreeMap<(Word, Word), Vec<u8>> = BTreeMap::new();
            for (mu, nu) in &entries {
                if mu.len() >= 2 && nu.len() >= 2 && mu.last() == nu.last() {
                    groups.entry((mu.parent(), nu.parent())).or_default().push(mu.last().unwrap());
                }
            }
            let mut merged = false;
            for ((w, v), mut js) in groups {
                let (a, b) = (w.last().unwrap(), v.last().unwrap());
                js.sort_unstable();
                if shift.row(a) == shift.row(b) && js == shift.followers(a) {
                    for j in js {
                        entries.remove(&w.pushed(j));
                    }
                    entries.insert(w, v);
                    merged = true;
                }
            }
            if !merged {
                break;
            }
        }
        Self::from_checked(shift.clone(), entries)
    }

    /// Entries refined so that every domain word has length `depth`
    /// (at least the current domain depth).
    pub fn refined_entries(&self, depth: usize) -> Vec<(Word, Word)> {
        let depth = depth.max(self.domain_depth());
        let mut out = Vec::new();
        for (mu, nu) in &self.entries {
            for u in self.shift.extensions(mu, depth - mu.len()) {
                let tail = u.drop_front(mu.len());
                out.push((u, nu.concat(&tail)));
            }
        }
        out.sort();
        out
    }

    /// Equality of the denoted maps, decided on a common refinement.
    /// Exact when `A` satisfies condition (I).
    pub fn same_map(&self, other: &Self) -> bool {
        if self.shift != other.shift {
            return false;
        }
        let d = self.domain_depth().max(other.domain_depth());
        self.refined_entries(d) == other.refined_entries(d)
    }

    pub fn is_identity(&self) -> bool {
        self.same_map(&Self::identity(self.shift.clone()))
    }

    /// `k = |ν_i|`, `l = |μ_i|` on `U_{μ_i}`.
    pub fn cocycles(&self) -> CocyclePair {
        let depth = self.domain_depth();
        let lookup = |w: &Word| {
            self.lengths
                .iter()
                .find_map(|&len| self.entries.get_key_value(&w.prefix(len)))
                .expect("partition")
        };
        let k = LcFunction::from_fn(self.shift.clone(), depth, |w| lookup(w).1.len() as u32);
        let l = LcFunction::from_fn(self.shift.clone(), depth, |w| lookup(w).0.len() as u32);
        CocyclePair { k, l }
    }

    /// Length-preserving prefix exchange, i.e. an element of the AF-full group
    /// (exact under condition (I)).
    pub fn is_af(&self) -> bool {
        self.entries.iter().all(|(m, n)| m.len() == n.len())
    }
}

impl PartialEq for PrefixExchangeTable {
    fn eq(&self, other: &Self) -> bool {
        self.same_map(other)
    }
}
