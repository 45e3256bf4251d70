use std::fmt;
use std::str::FromStr;

/// Sweep sizes: eventually periodic points with preperiod at most `pre` and
/// period at most `period`; words and tables up to length `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub pre: usize,
    pub period: usize,
    pub depth: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { pre: 6, period: 4, depth: 8 }
    }
}

impl Bounds {
    pub const ENV: &'static str = "MFG_BOUNDS";

    pub fn new(pre: usize, period: usize, depth: usize) -> Result<Self, String> {
        if pre == 0 || period == 0 || depth == 0 {
            return Err(format!("bounds must be positive, got {pre},{period},{depth}"));
        }
        Ok(Bounds { pre, period, depth })
    }

    /// Defaults, overridden by `MFG_BOUNDS="P,Q,D"` when set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(Self::ENV) {
            Ok(s) => s.parse(),
            Err(_) => Ok(Self::default()),
        }
    }
}

impl FromStr for Bounds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [p, q, d] = parts.as_slice() else {
            return Err(format!("expected P,Q,D, got {s:?}"));
        };
        let num = |x: &str| x.parse::<usize>().map_err(|_| format!("not a bound: {x:?}"));
        Bounds::new(num(p)?, num(q)?, num(d)?)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.pre, self.period, self.depth)
    }
}
