use std::collections::BTreeMap;

use super::{EpPoint, Shift, ShiftError, Word};

/// A locally constant function on `X_A`, tabulated on `B_depth(X_A)`.
///
/// Equality compares the denoted functions, not the tables.
#[derive(Debug, Clone)]
pub struct LcFunction<V> {
    shift: Shift,
    depth: usize,
    table: BTreeMap<Word, V>,
}

impl<V: Clone + PartialEq> LcFunction<V> {
    /// Table must be total on `B_depth` and contain nothing else.
    pub fn new(shift: Shift, depth: usize, table: BTreeMap<Word, V>) -> Result<Self, ShiftError> {
        for w in table.keys() {
            if w.len() != depth {
                return Err(ShiftError::WrongDepth { word: w.clone(), len: w.len(), depth });
            }
            shift.check_admissible(w)?;
        }
        for w in shift.admissible_words(depth) {
            if !table.contains_key(&w) {
                return Err(ShiftError::IncompleteTable { depth, missing: w });
            }
        }
        Ok(LcFunction { shift, depth, table })
    }

    pub fn constant(shift: Shift, v: V) -> Self {
        LcFunction { shift, depth: 0, table: [(Word::empty(), v)].into_iter().collect() }
    }

    pub fn from_fn(shift: Shift, depth: usize, mut f: impl FnMut(&Word) -> V) -> Self {
        let table = shift.admissible_words(depth).into_iter().map(|w| {
            let v = f(&w);
            (w, v)
        });
        let table = table.collect();
        LcFunction { shift, depth, table }
    }

    /// A function given on the cylinders of a partition (words of any
    /// lengths); evaluated at the maximal length.
    pub fn from_partition(shift: Shift, pieces: &[(Word, V)]) -> Option<Self> {
        let depth = pieces.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
        let mut table = BTreeMap::new();
        for w in shift.admissible_words(depth) {
            let (_, v) = pieces.iter().find(|(u, _)| u.is_prefix_of(&w))?;
            table.insert(w, v.clone());
        }
        Some(LcFunction { shift, depth, table })
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn table(&self) -> &BTreeMap<Word, V> {
        &self.table
    }

    pub fn eval(&self, p: &EpPoint) -> &V {
        &self.table[&p.prefix(self.depth)]
    }

    /// Value on `U_w`, for `|w| ≥ depth`.
    pub fn value_on(&self, w: &Word) -> Option<&V> {
        if w.len() < self.depth {
            return None;
        }
        self.table.get(&w.prefix(self.depth))
    }

    pub fn refine_to(&self, d: usize) -> Self {
        if d <= self.depth {
            return self.clone();
        }
        let mut table = BTreeMap::new();
        for (w, v) in &self.table {
            for u in self.shift.extensions(w, d - self.depth) {
                table.insert(u, v.clone());
            }
        }
        LcFunction { shift: self.shift.clone(), depth: d, table }
    }

    /// Minimal-depth description: sibling cylinders with equal values are
    /// merged while every sibling group at the current depth agrees.
    pub fn canonical(&self) -> Self {
        let mut cur = self.clone();
        while cur.depth > 0 {
            let mut coarse: BTreeMap<Word, V> = BTreeMap::new();
            let mut ok = true;
            for (w, v) in &cur.table {
                match coarse.get(&w.parent()) {
                    Some(prev) if prev != v => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        coarse.insert(w.parent(), v.clone());
                    }
                }
            }
            if !ok {
                break;
            }
            cur = LcFunction { shift: cur.shift.clone(), depth: cur.depth - 1, table: coarse };
        }
        cur
    }

    pub fn map<W: Clone + PartialEq>(&self, mut f: impl FnMut(&V) -> W) -> LcFunction<W> {
        LcFunction {
            shift: self.shift.clone(),
            depth: self.depth,
            table: self.table.iter().map(|(w, v)| (w.clone(), f(v))).collect(),
        }
    }

    pub fn zip_with<U: Clone + PartialEq, W: Clone + PartialEq>(
        &self,
        other: &LcFunction<U>,
        mut f: impl FnMut(&V, &U) -> W,
    ) -> Result<LcFunction<W>, ShiftError> {
        if self.shift != other.shift {
            return Err(ShiftError::ShiftMismatch);
        }
        let d = self.depth.max(other.depth);
        let table = self
            .shift
            .admissible_words(d)
            .into_iter()
            .map(|w| {
                let v = f(self.value_on(&w).unwrap(), other.value_on(&w).unwrap());
                (w, v)
            })
            .collect();
        Ok(LcFunction { shift: self.shift.clone(), depth: d, table })
    }

    /// `f ∘ σ_A`, tabulated at depth + 1: the word `jw` gets the value at `w`.
    pub fn compose_shift(&self) -> Self {
        let d = self.depth + 1;
        let table = self
            .shift
            .admissible_words(d)
            .into_iter()
            .map(|w| {
                let v = self.value_on(&w.drop_front(1)).unwrap().clone();
                (w, v)
            })
            .collect();
        LcFunction { shift: self.shift.clone(), depth: d, table }
    }

    pub fn values(&self) -> impl Iterator<Item = &V> {
        self.table.values()
    }
}

impl<V: Clone + PartialEq> PartialEq for LcFunction<V> {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && {
            let d = self.depth.max(other.depth);
            self.refine_to(d).table == other.refine_to(d).table
        }
    }
}
