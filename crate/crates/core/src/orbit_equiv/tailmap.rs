use super::OeError;
use crate::full_group::PrefixExchangeTable;
use crate::shift::{EpPoint, Shift, Word};

/// One rewrite step of a [`TailMap`] program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clause {
    /// Replace occurrences of `pattern` by `replacement`, scanning from the
    /// left. Consecutive `Sub` clauses share one scan; at each position the
    /// first matching clause wins and unmatched symbols are copied.
    Sub { pattern: Word, replacement: Word },
    /// Replace the prefix `μ` by `ν` for the unique entry with `μ` a prefix.
    Exchange(Vec<(Word, Word)>),
}

/// A homeomorphism `h: X_A → X_B` given as a rewriting program, with an
/// explicit program for `h^{-1}`.
#[derive(Debug, Clone)]
pub struct TailMap {
    source: Shift,
    target: Shift,
    forward: Vec<Clause>,
    inverse: Vec<Clause>,
}

enum Stage<'a> {
    Scan(Vec<(&'a Word, &'a Word)>),
    Exchange(&'a [(Word, Word)]),
}

impl TailMap {
    pub fn new(source: Shift, target: Shift, forward: Vec<Clause>, inverse: Vec<Clause>) -> Result<Self, OeError> {
        for c in forward.iter().chain(&inverse) {
            match c {
                Clause::Sub { pattern, .. } if pattern.is_empty() => return Err(OeError::EmptyPattern),
                Clause::Exchange(entries) if entries.iter().any(|(m, _)| m.is_empty()) => {
                    return Err(OeError::EmptyPattern)
                }
                _ => {}
            }
        }
        Ok(TailMap { source, target, forward, inverse })
    }

    pub fn identity(shift: Shift) -> Self {
        TailMap { source: shift.clone(), target: shift, forward: Vec::new(), inverse: Vec::new() }
    }

    /// A full-group element viewed as a self-map of `X_A`.
    pub fn from_table(tau: &PrefixExchangeTable) -> Self {
        let fwd: Vec<(Word, Word)> = tau.entries().iter().map(|(m, n)| (m.clone(), n.clone())).collect();
        let inv = fwd.iter().map(|(m, n)| (n.clone(), m.clone())).collect();
        TailMap {
            source: tau.shift().clone(),
            target: tau.shift().clone(),
            forward: vec![Clause::Exchange(fwd)],
            inverse: vec![Clause::Exchange(inv)],
        }
    }

    pub fn source(&self) -> &Shift {
        &self.source
    }

    pub fn target(&self) -> &Shift {
        &self.target
    }

    pub fn forward(&self) -> &[Clause] {
        &self.forward
    }

    pub fn inverse_program(&self) -> &[Clause] {
        &self.inverse
    }

    /// `h^{-1}` as a map `X_B → X_A`.
    pub fn inverted(&self) -> Self {
        TailMap {
            source: self.target.clone(),
            target: self.source.clone(),
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `h(p)`.
    pub fn apply(&self, p: &EpPoint) -> Result<EpPoint, OeError> {
        p.check_in(&self.source)?;
        let out = run(&self.forward, p)?;
        if !out.is_in(&self.target) {
            return Err(OeError::OutputNotAdmissible { input: p.clone(), output: out });
        }
        Ok(out)
    }

    /// `h^{-1}(q)`.
    pub fn apply_inverse(&self, q: &EpPoint) -> Result<EpPoint, OeError> {
        self.inverted().apply(q)
    }
}

fn stages(program: &[Clause]) -> Vec<Stage<'_>> {
    let mut out = Vec::new();
    for c in program {
        match c {
            Clause::Sub { pattern, replacement } => {
                if let Some(Stage::Scan(subs)) = out.last_mut() {
                    subs.push((pattern, replacement));
                } else {
                    out.push(Stage::Scan(vec![(pattern, replacement)]));
                }
            }
            Clause::Exchange(entries) => out.push(Stage::Exchange(entries)),
        }
    }
    out
}

fn run(program: &[Clause], p: &EpPoint) -> Result<EpPoint, OeError> {
    let mut cur = p.clone();
    for stage in stages(program) {
        cur = match stage {
            Stage::Scan(subs) => scan(&subs, &cur)?,
            Stage::Exchange(entries) => {
                let (mu, nu) = entries
                    .iter()
                    .find(|(mu, _)| cur.starts_with(mu))
                    .ok_or_else(|| OeError::NotCovered(cur.clone()))?;
                cur.replace_prefix(mu.len(), nu)
            }
        };
    }
    Ok(cur)
}

/// Greedy leftmost substitution on `pre · period^∞`. Token boundaries past the
/// preperiod eventually repeat modulo `|period|`; the tokens between two such
/// boundaries produce the output period.
fn scan(subs: &[(&Word, &Word)], p: &EpPoint) -> Result<EpPoint, OeError> {
    let pre = p.pre().len();
    let per = p.period().len();
    let longest = subs.iter().map(|(m, _)| m.len()).max().unwrap_or(1);
    let limit = pre + (per + 2) * longest + per;
    let symbol = |i: usize| p.symbol(i);
    let mut pos = 0;
    let mut out: Vec<u8> = Vec::new();
    let mut seen: Vec<Option<usize>> = vec![None; per];
    while pos <= limit {
        if pos >= pre {
            let r = (pos - pre) % per;
            if let Some(start) = seen[r] {
                let period = Word::new(out[start..].to_vec());
                if period.is_empty() {
                    return Err(OeError::PatternStraddlesUnstably(p.clone()));
                }
                return Ok(EpPoint::new(Word::new(out[..start].to_vec()), period)?);
            }
            seen[r] = Some(out.len());
        }
        let hit = subs.iter().find(|(m, _)| m.symbols().iter().enumerate().all(|(k, &s)| symbol(pos + k) == s));
        match hit {
            Some((m, r)) => {
                out.extend_from_slice(r.symbols());
                pos += m.len();
            }
            None => {
                out.push(symbol(pos));
                pos += 1;
            }
        }
    }
    Err(OeError::PatternStraddlesUnstably(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::{sweep_points, MarkovShift};

    fn pt(s: &str) -> EpPoint {
        EpPoint::parse(s).unwrap()
    }

    fn golden() -> TailMap {
        let w = |s: &str| Word::parse(s).unwrap();
        TailMap::new(
            MarkovShift::golden_mean(),
            MarkovShift::full(2),
            vec![Clause::Sub { pattern: w("21"), replacement: w("2") }],
            vec![Clause::Sub { pattern: w("2"), replacement: w("21") }],
        )
        .unwrap()
    }

    #[test]
    fn substitution_examples() {
        let h = golden();
        assert_eq!(h.apply(&pt("|1")).unwrap(), pt("|1"));
        assert_eq!(h.apply(&pt("|21")).unwrap(), pt("|2"));
        assert_eq!(h.apply(&pt("21|1")).unwrap(), pt("2|1"));
        let x = h.apply(&pt("1211212111|1")).unwrap();
        assert!(x.starts_with(&Word::parse("1212211").unwrap()));
        assert!(matches!(h.apply(&pt("|2")), Err(OeError::Shift(_))));
    }

    #[test]
    fn round_trip_sweep() {
        let h = golden();
        for p in sweep_points(h.source(), 6, 4) {
            assert_eq!(h.apply_inverse(&h.apply(&p).unwrap()).unwrap(), p);
        }
        for q in sweep_points(h.target(), 6, 4) {
            assert_eq!(h.apply(&h.apply_inverse(&q).unwrap()).unwrap(), q);
        }
    }

    #[test]
    fn period_alignment() {
        // the pattern 12 straddles the period boundary of |21
        let a2 = MarkovShift::full(2);
        let w = |s: &str| Word::parse(s).unwrap();
        let m = TailMap::new(a2.clone(), a2, vec![Clause::Sub { pattern: w("12"), replacement: w("21") }], vec![])
            .unwrap();
        assert_eq!(m.apply(&pt("|21")).unwrap(), pt("2|21"));
        assert_eq!(m.apply(&pt("1|112")).unwrap(), pt("|112"));
    }

    #[test]
    fn identity_and_tables() {
        let f = MarkovShift::golden_mean();
        let id = TailMap::identity(f.clone());
        let inv = crate::full_group::example_involution();
        let t = TailMap::from_table(&inv);
        for p in sweep_points(&f, 4, 3) {
            assert_eq!(id.apply(&p).unwrap(), p);
            assert_eq!(t.apply(&p).unwrap(), inv.apply(&p));
            assert_eq!(t.apply_inverse(&t.apply(&p).unwrap()).unwrap(), p);
        }
    }
}
