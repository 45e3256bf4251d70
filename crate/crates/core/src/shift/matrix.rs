use std::collections::BTreeSet;
use std::sync::Arc;

use super::{ShiftError, Symbol, Word};

/// Shared handle to a validated shift.
pub type Shift = Arc<MarkovShift>;

/// A validated essential 0-1 matrix `A` together with the shift space `X_A`
/// it defines. Symbols are `1..=n`.
#[derive(Debug, Clone)]
pub struct MarkovShift {
    n: usize,
    rows: Vec<Vec<u8>>,
    condition_i: bool,
    transpose_condition_i: bool,
}

impl PartialEq for MarkovShift {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for MarkovShift {}

impl MarkovShift {
    /// Validates a square 0-1 matrix with no zero row and no zero column.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Shift, ShiftError> {
        let n = rows.len();
        if n < 2 {
            return Err(ShiftError::AlphabetTooSmall(n));
        }
        if n > Symbol::MAX as usize {
            return Err(ShiftError::SymbolOutOfRange { symbol: n, n: Symbol::MAX as usize });
        }
        let mut bits = Vec::with_capacity(n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ShiftError::NonSquare { row: r + 1, len: row.len(), expected: n });
            }
            let mut out = Vec::with_capacity(n);
            for (c, &v) in row.iter().enumerate() {
                if v != 0 && v != 1 {
                    return Err(ShiftError::NonBinaryEntry { row: r + 1, col: c + 1, value: v });
                }
                out.push(v as u8);
            }
            bits.push(out);
        }
        for i in 0..n {
            let row_zero = bits[i].iter().all(|&b| b == 0);
            let col_zero = bits.iter().all(|row| row[i] == 0);
            if row_zero || col_zero {
                return Err(ShiftError::ZeroRowOrColumn(i + 1));
            }
        }
        let transposed: Vec<Vec<u8>> =
            (0..n).map(|i| (0..n).map(|j| bits[j][i]).collect()).collect();
        let condition_i = forced_path_free(&bits);
        let transpose_condition_i = forced_path_free(&transposed);
        Ok(Arc::new(MarkovShift { n, rows: bits, condition_i, transpose_condition_i }))
    }

    /// The full shift on `n` symbols.
    pub fn full(n: usize) -> Shift {
        Self::new(vec![vec![1; n]; n]).expect("full matrix is valid")
    }

    /// The golden-mean shift `[[1,1],[1,0]]` (the word `22` is forbidden).
    pub fn golden_mean() -> Shift {
        Self::new(vec![vec![1, 1], vec![1, 0]]).expect("golden mean matrix is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn symbols(&self) -> std::ops::RangeInclusive<Symbol> {
        1..=self.n as Symbol
    }

    /// `A(i, j) = 1`.
    #[inline]
    pub fn allows(&self, i: Symbol, j: Symbol) -> bool {
        self.rows[i as usize - 1][j as usize - 1] == 1
    }

    pub fn row(&self, i: Symbol) -> &[u8] {
        &self.rows[i as usize - 1]
    }

    pub fn out_degree(&self, i: Symbol) -> usize {
        self.row(i).iter().filter(|&&b| b == 1).count()
    }

    /// Symbols that may follow `i`.
    pub fn followers(&self, i: Symbol) -> Vec<Symbol> {
        self.symbols().filter(|&j| self.allows(i, j)).collect()
    }

    /// Symbols that may follow the word `w`; every symbol for the empty word.
    pub fn followers_of(&self, w: &Word) -> Vec<Symbol> {
        match w.last() {
            Some(i) => self.followers(i),
            None => self.symbols().collect(),
        }
    }

    /// Whether `w·s` is admissible given that `w` is.
    #[inline]
    pub fn can_extend(&self, w: &Word, s: Symbol) -> bool {
        w.last().is_none_or(|i| self.allows(i, s))
    }

    pub fn in_alphabet(&self, w: &Word) -> bool {
        w.symbols().iter().all(|&s| s >= 1 && s as usize <= self.n)
    }

    pub fn is_admissible(&self, w: &Word) -> bool {
        self.in_alphabet(w) && w.symbols().windows(2).all(|p| self.allows(p[0], p[1]))
    }

    pub fn check_admissible(&self, w: &Word) -> Result<(), ShiftError> {
        if let Some(&s) = w.symbols().iter().find(|&&s| s == 0 || s as usize > self.n) {
            return Err(ShiftError::SymbolOutOfRange { symbol: s as usize, n: self.n });
        }
        if self.is_admissible(w) {
            Ok(())
        } else {
            Err(ShiftError::WordNotAdmissible(w.clone()))
        }
    }

    /// `X_A` has no isolated point: no symbol starts a forced path, i.e. there
    /// is no symbol all of whose descendants (itself included) have out-degree 1.
    pub fn satisfies_condition_i(&self) -> bool {
        self.condition_i
    }

    pub fn transpose_satisfies_condition_i(&self) -> bool {
        self.transpose_condition_i
    }

    pub fn transpose(&self) -> Shift {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[j][i] as i64).collect())
            .collect();
        Self::new(rows).expect("transpose of an essential matrix is essential")
    }

    /// `B_k(X_A)` in lexicographic order; `B_0 = {ε}`.
    pub fn admissible_words(&self, k: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &layer {
                for j in self.followers_of(w) {
                    next.push(w.pushed(j));
                }
            }
            layer = next;
        }
        layer
    }

    /// All extensions `w·u` with `|u| = extra` (admissible given `w` is).
    pub fn extensions(&self, w: &Word, extra: usize) -> Vec<Word> {
        let mut layer = vec![w.clone()];
        for _ in 0..extra {
            let mut next = Vec::new();
            for u in &layer {
                for j in self.followers_of(u) {
                    next.push(u.pushed(j));
                }
            }
            layer = next;
        }
        layer
    }
}

fn forced_path_free(rows: &[Vec<u8>]) -> bool {
    let n = rows.len();
    let outdeg: Vec<usize> = rows.iter().map(|r| r.iter().filter(|&&b| b == 1).count()).collect();
    (0..n).all(|start| {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if !seen.insert(i) {
                continue;
            }
            for (j, &b) in rows[i].iter().enumerate() {
                if b == 1 {
                    stack.push(j);
                }
            }
        }
        seen.iter().any(|&i| outdeg[i] != 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_errors() {
        assert_eq!(
            MarkovShift::new(vec![vec![1, 1], vec![0, 0]]).unwrap_err(),
            ShiftError::ZeroRowOrColumn(2)
        );
        assert!(matches!(
            MarkovShift::new(vec![vec![1, 1], vec![1]]),
            Err(ShiftError::NonSquare { .. })
        ));
        assert!(matches!(
            MarkovShift::new(vec![vec![1, 2], vec![1, 1]]),
            Err(ShiftError::NonBinaryEntry { row: 1, col: 2, value: 2 })
        ));
        assert!(matches!(MarkovShift::new(vec![vec![1]]), Err(ShiftError::AlphabetTooSmall(1))));
        assert_eq!(
            MarkovShift::new(vec![vec![1, 0], vec![1, 0]]).unwrap_err(),
            ShiftError::ZeroRowOrColumn(2)
        );
    }

    #[test]
    fn condition_i_verdicts() {
        assert!(MarkovShift::full(2).satisfies_condition_i());
        let f = MarkovShift::golden_mean();
        assert!(f.satisfies_condition_i());
        assert!(f.transpose_satisfies_condition_i());
        let swap = MarkovShift::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!swap.satisfies_condition_i());
        // symbol 2 only leads to itself
        let tail = MarkovShift::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert!(!tail.satisfies_condition_i());
    }

    #[test]
    fn golden_mean_words() {
        let f = MarkovShift::golden_mean();
        let b2: Vec<String> = f.admissible_words(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(b2, ["11", "12", "21"]);
        let b3: Vec<String> = f.admissible_words(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(b3, ["111", "112", "121", "211", "212"]);
        assert_eq!(f.admissible_words(0), vec![Word::empty()]);
        let counts: Vec<usize> = (1..=6).map(|k| f.admissible_words(k).len()).collect();
        assert_eq!(counts, [2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn word_count_recursion() {
        let a = MarkovShift::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        for k in 0..6 {
            let bk = a.admissible_words(k);
            let next = a.admissible_words(k + 1);
            let expected: usize = bk.iter().map(|w| a.followers_of(w).len()).sum();
            assert_eq!(next.len(), expected);
            for w in &next {
                assert!(bk.contains(&w.prefix(k)));
            }
        }
    }
}
