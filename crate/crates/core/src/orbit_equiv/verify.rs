use super::{OeError, TailMap};
use crate::shift::{sweep_points, EpPoint, LcFunction};

/// Continuous orbit cocycles of `h: X_A → X_B`: on `X_A`,
/// `σ_B^{k1(x)}(h(σ_A x)) = σ_B^{l1(x)}(h(x))`, and `k2, l2` do the same for
/// `h^{-1}` on `X_B`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitCocycleData {
    pub k1: LcFunction<u32>,
    pub l1: LcFunction<u32>,
    pub k2: LcFunction<u32>,
    pub l2: LcFunction<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub point: EpPoint,
    pub lhs: EpPoint,
    pub rhs: EpPoint,
    pub identity: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, identity: &str, point: &EpPoint, lhs: EpPoint, rhs: EpPoint) {
        self.checked += 1;
        if lhs != rhs {
            self.counterexamples.push(Counterexample { point: point.clone(), lhs, rhs, identity: identity.to_string() });
        }
    }
}

/// Sums `Σ_{i<n} f(σ^i x)`.
fn summed(f: &LcFunction<u32>, x: &EpPoint, n: usize) -> usize {
    (0..n).map(|i| *f.eval(&x.shift_by(i)) as usize).sum()
}

/// Checks the cocycle identities for `h` and `h^{-1}` on every eventually
/// periodic point within the bounds, together with the iterated identities
/// `σ^{k^n(x)}(h(σ^n x)) = σ^{l^n(x)}(h(x))` for `n ≤ 3`.
pub fn verify_orbit_cocycles(
    h: &TailMap,
    data: &OrbitCocycleData,
    max_pre: usize,
    max_period: usize,
) -> Result<VerificationReport, OeError> {
    if data.k1.shift() != h.source()
        || data.l1.shift() != h.source()
        || data.k2.shift() != h.target()
        || data.l2.shift() != h.target()
    {
        return Err(OeError::ShiftMismatch);
    }
    let mut report = VerificationReport::default();
    let inv = h.inverted();
    for (map, k, l, name) in [(h, &data.k1, &data.l1, "h"), (&inv, &data.k2, &data.l2, "h^-1")] {
        for x in sweep_points(map.source(), max_pre, max_period) {
            let hx = map.apply(&x)?;
            for n in 1..=3 {
                let lhs = map.apply(&x.shift_by(n))?.shift_by(summed(k, &x, n));
                let rhs = hx.shift_by(summed(l, &x, n));
                let identity = if n == 1 { name.to_string() } else { format!("{name} power {n}") };
                report.record(&identity, &x, lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// Uniform orbit equivalence with constant exponents:
/// `σ^{k1}(h(σx)) = σ^{k1+1}(h(x))` on `X_A` and the mirror statement with
/// `k2` for `h^{-1}`.
pub fn is_uniform_orbit_equivalence(
    h: &TailMap,
    k1: usize,
    k2: usize,
    max_pre: usize,
    max_period: usize,
) -> Result<VerificationReport, OeError> {
    let mut report = VerificationReport::default();
    let inv = h.inverted();
    for (map, k, name) in [(h, k1, "h uniform"), (&inv, k2, "h^-1 uniform")] {
        for x in sweep_points(map.source(), max_pre, max_period) {
            let lhs = map.apply(&x.shift())?.shift_by(k);
            let rhs = map.apply(&x)?.shift_by(k + 1);
            report.record(name, &x, lhs, rhs);
        }
    }
    Ok(report)
}

/// `h^{-1}(h(x)) = x` on `X_A` and `h(h^{-1}(y)) = y` on `X_B`.
pub fn verify_round_trip(h: &TailMap, max_pre: usize, max_period: usize) -> Result<VerificationReport, OeError> {
    let mut report = VerificationReport::default();
    let inv = h.inverted();
    for (map, back, name) in [(h, &inv, "h^-1 h"), (&inv, h, "h h^-1")] {
        for x in sweep_points(map.source(), max_pre, max_period) {
            let y = back.apply(&map.apply(&x)?)?;
            report.record(name, &x, y, x.clone());
        }
    }
    Ok(report)
}
