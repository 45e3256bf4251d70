use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::{EpPoint, Shift, ShiftError, Word};

/// Why a family of cylinders fails to partition `X_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    /// The cylinder of this word meets none of the family.
    Uncovered(Word),
    /// These two cylinders intersect.
    Overlap(Word, Word),
}

impl fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Uncovered(w) => write!(f, "U_{w:?} is not covered"),
            Self::Overlap(a, b) => write!(f, "U_{a:?} and U_{b:?} overlap"),
        }
    }
}

/// Checks that the cylinders of the (admissible) `words` partition `X_A`.
pub fn check_partition(shift: &Shift, words: &[Word]) -> Result<(), PartitionDefect> {
    let mut set = BTreeSet::new();
    for w in words {
        if !set.insert(w) {
            return Err(PartitionDefect::Overlap(w.clone(), w.clone()));
        }
    }
    let mut prefixes: HashSet<Word> = HashSet::new();
    for w in words {
        for k in 0..w.len() {
            prefixes.insert(w.prefix(k));
        }
    }
    let mut stack = vec![Word::empty()];
    while let Some(w) = stack.pop() {
        if set.contains(&w) {
            if prefixes.contains(&w) {
                let ext = words.iter().find(|u| u.len() > w.len() && w.is_prefix_of(u)).unwrap();
                return Err(PartitionDefect::Overlap(w, ext.clone()));
            }
            continue;
        }
        if !prefixes.contains(&w) {
            return Err(PartitionDefect::Uncovered(w));
        }
        for j in shift.followers_of(&w) {
            stack.push(w.pushed(j));
        }
    }
    Ok(())
}

/// Nonempty words whose cylinders partition the complement of the union of
/// the (pairwise disjoint) cylinders of `words`.
pub fn complement_cover(shift: &Shift, words: &[Word]) -> Vec<Word> {
    let set: HashSet<&Word> = words.iter().collect();
    if set.contains(&Word::empty()) {
        return Vec::new();
    }
    let mut prefixes: HashSet<Word> = HashSet::new();
    for w in words {
        for k in 0..w.len() {
            prefixes.insert(w.prefix(k));
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<Word> = shift.symbols().rev().map(Word::single).collect();
    while let Some(w) = stack.pop() {
        if set.contains(&w) {
            continue;
        }
        if !prefixes.contains(&w) {
            out.push(w);
            continue;
        }
        for j in shift.followers_of(&w).into_iter().rev() {
            stack.push(w.pushed(j));
        }
    }
    out.sort();
    out
}

/// A clopen subset of `X_A`, a union of cylinders of one common depth.
#[derive(Debug, Clone)]
pub struct ClopenSet {
    shift: Shift,
    depth: usize,
    words: BTreeSet<Word>,
}

impl ClopenSet {
    pub fn new(shift: Shift, depth: usize, words: impl IntoIterator<Item = Word>) -> Result<Self, ShiftError> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            if w.len() != depth {
                return Err(ShiftError::WrongDepth { word: w.clone(), len: w.len(), depth });
            }
            shift.check_admissible(w)?;
        }
        Ok(ClopenSet { shift, depth, words })
    }

    /// `U_w`.
    pub fn cylinder(shift: Shift, w: &Word) -> Result<Self, ShiftError> {
        Self::new(shift, w.len(), [w.clone()])
    }

    /// Union of cylinders of arbitrary lengths.
    pub fn from_cylinders(shift: Shift, words: &[Word]) -> Result<Self, ShiftError> {
        let depth = words.iter().map(Word::len).max().unwrap_or(0);
        let mut out = BTreeSet::new();
        for w in words {
            shift.check_admissible(w)?;
            out.extend(shift.extensions(w, depth - w.len()));
        }
        Ok(ClopenSet { shift, depth, words: out })
    }

    pub fn whole(shift: Shift) -> Self {
        ClopenSet { shift, depth: 0, words: [Word::empty()].into_iter().collect() }
    }

    pub fn empty(shift: Shift) -> Self {
        ClopenSet { shift, depth: 0, words: BTreeSet::new() }
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn contains(&self, p: &EpPoint) -> bool {
        self.words.contains(&p.prefix(self.depth))
    }

    /// Same set, described at depth `d ≥ self.depth`.
    pub fn refine_to(&self, d: usize) -> Self {
        let d = d.max(self.depth);
        let words = self
            .words
            .iter()
            .flat_map(|w| self.shift.extensions(w, d - self.depth))
            .collect();
        ClopenSet { shift: self.shift.clone(), depth: d, words }
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self), ShiftError> {
        if self.shift != other.shift {
            return Err(ShiftError::ShiftMismatch);
        }
        let d = self.depth.max(other.depth);
        Ok((self.refine_to(d), other.refine_to(d)))
    }

    pub fn union(&self, other: &Self) -> Result<Self, ShiftError> {
        let (a, b) = self.aligned(other)?;
        let words = a.words.union(&b.words).cloned().collect();
        Ok(ClopenSet { words, ..a })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, ShiftError> {
        let (a, b) = self.aligned(other)?;
        let words = a.words.intersection(&b.words).cloned().collect();
        Ok(ClopenSet { words, ..a })
    }

    pub fn complement(&self) -> Self {
        let words = self
            .shift
            .admissible_words(self.depth)
            .into_iter()
            .filter(|w| !self.words.contains(w))
            .collect();
        ClopenSet { shift: self.shift.clone(), depth: self.depth, words }
    }

    pub fn is_whole(&self) -> bool {
        self.words.len() == self.shift.admissible_words(self.depth).len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Equality of the denoted subsets of `X_A`.
    pub fn same_set(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok((a, b)) => a.words == b.words,
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::{sweep_points, MarkovShift};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn partition_checks() {
        let f = MarkovShift::golden_mean();
        assert_eq!(check_partition(&f, &[w("11"), w("12"), w("21")]), Ok(()));
        assert_eq!(check_partition(&f, &[w("1"), w("21")]), Ok(()));
        assert_eq!(
            check_partition(&f, &[w("11"), w("12")]),
            Err(PartitionDefect::Uncovered(w("2")))
        );
        assert!(matches!(
            check_partition(&f, &[w("1"), w("12"), w("2")]),
            Err(PartitionDefect::Overlap(_, _))
        ));
    }

    #[test]
    fn complement_of_cylinders() {
        let a = MarkovShift::full(2);
        assert_eq!(complement_cover(&a, &[w("2"), w("12")]), vec![w("11")]);
        let f = MarkovShift::golden_mean();
        assert_eq!(complement_cover(&f, &[w("111"), w("211")]), vec![w("112"), w("12"), w("212")]);
        assert!(complement_cover(&f, &[w("1"), w("2")]).is_empty());
    }

    #[test]
    fn boolean_identities() {
        let f = MarkovShift::golden_mean();
        let u2 = ClopenSet::cylinder(f.clone(), &w("2")).unwrap();
        assert!(u2.complement().union(&u2).unwrap().is_whole());
        assert!(u2.complement().intersection(&u2).unwrap().is_empty());
        let u11 = ClopenSet::cylinder(f.clone(), &w("11")).unwrap();
        assert!(u11.contains(&EpPoint::parse("|1").unwrap()));
        let u21 = ClopenSet::cylinder(f.clone(), &w("21")).unwrap();
        assert!(u21.same_set(&u2));
    }

    #[test]
    fn refinement_preserves_points() {
        let a = MarkovShift::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]).unwrap();
        let c = ClopenSet::from_cylinders(a.clone(), &[w("12"), w("3")]).unwrap();
        for d in 2..5 {
            let r = c.refine_to(d);
            for p in sweep_points(&a, d, 2).iter().filter(|p| p.pre().len() + p.period().len() <= d + 2) {
                assert_eq!(c.contains(p), r.contains(p));
            }
        }
    }
}
