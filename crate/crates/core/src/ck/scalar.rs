use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `ℚ(ζ_M)` in the power basis `1, ζ, …, ζ^{φ(M)-1}`.
///
/// Coordinates are always reduced modulo the cyclotomic polynomial, so
/// structural equality is field equality. Arithmetic that needs `M` goes
/// through [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Vec<BigRational>);

impl Scalar {
    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Scalar(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Scalar(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Scalar(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Scalar(self.0.iter().map(|a| a * r).collect())
    }

    /// The rational value, if the scalar lies in `ℚ`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.0[1..].iter().all(Zero::is_zero).then(|| &self.0[0])
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let coef = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            let z = match k {
                0 => String::new(),
                1 => "ζ".to_string(),
                _ => format!("ζ^{k}"),
            };
            let sep = if !coef.is_empty() && !z.is_empty() { "·" } else { "" };
            write!(f, "{sign}{coef}{sep}{z}")?;
            first = false;
        }
        Ok(())
    }
}

/// The cyclotomic field `ℚ(ζ_M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    m: u32,
    /// `Φ_M`, monic, low degree first.
    phi: Vec<BigInt>,
    powers: Vec<Scalar>,
}

impl Field {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1, "cyclotomic order must be positive");
        let phi: Vec<BigInt> = cyclotomic(m as usize).into_iter().map(BigInt::from).collect();
        let mut field = Field { m, phi, powers: Vec::new() };
        field.powers = (0..m as usize)
            .map(|e| {
                let mut p = vec![BigRational::zero(); e + 1];
                p[e] = BigRational::one();
                field.reduce(p)
            })
            .collect();
        field
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    /// `φ(M)`, the number of coordinates.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Scalar {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = p[k].clone();
            for i in 0..d {
                p[k - d + i] -= &c * BigRational::from_integer(self.phi[i].clone());
            }
            p[k] = BigRational::zero();
        }
        p.resize(d, BigRational::zero());
        Scalar(p)
    }

    pub fn zero(&self) -> Scalar {
        Scalar(vec![BigRational::zero(); self.degree()])
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        let mut s = self.zero();
        s.0[0] = r;
        s
    }

    /// Rejects coordinate vectors of the wrong length.
    pub fn from_coords(&self, coords: Vec<BigRational>) -> Option<Scalar> {
        (coords.len() == self.degree()).then_some(Scalar(coords))
    }

    /// `ζ_M^e` for any integer `e`.
    pub fn zeta_pow(&self, e: i64) -> Scalar {
        self.powers[e.rem_euclid(self.m as i64) as usize].clone()
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let d = self.degree();
        let mut p = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        self.reduce(p)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, a: &Scalar) -> Scalar {
        let mut out = self.zero();
        for (k, c) in a.0.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.zeta_pow(-(k as i64)).scale_rational(c));
            }
        }
        out
    }

    pub fn is_unimodular(&self, a: &Scalar) -> bool {
        self.mul(a, &self.conj(a)) == self.one()
    }

    /// `e` with `a = ζ_M^e`, `0 ≤ e < M`.
    pub fn as_root_of_unity(&self, a: &Scalar) -> Option<u32> {
        self.powers.iter().position(|p| p == a).map(|e| e as u32)
    }

    /// Inverse of a nonzero scalar, via the norm: `a⁻¹ = ∏_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        let m = self.m as usize;
        let mut prod = self.one();
        for k in 2..=m {
            if gcd(k, m) == 1 {
                prod = self.mul(&prod, &self.galois(a, k));
            }
        }
        let norm = self.mul(a, &prod);
        let n = norm.as_rational().expect("norm is rational").clone();
        Some(prod.scale_rational(&n.recip()))
    }

    /// The automorphism `ζ ↦ ζ^k` for `gcd(k, M) = 1`.
    fn galois(&self, a: &Scalar, k: usize) -> Scalar {
        let mut out = self.zero();
        for (i, c) in a.0.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.zeta_pow((i * k) as i64).scale_rational(c));
            }
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Φ_n` with integer coefficients, low degree first.
fn cyclotomic(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = divide_monic(&p, &cyclotomic(d));
    }
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        quot[k - dd] = c;
        for i in 0..=dd {
            rem[k - dd + i] -= c * den[i];
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn gaussian_rationals() {
        let k = Field::new(4);
        let i = k.zeta_pow(1);
        assert_eq!(k.mul(&i, &i), k.from_int(-1));
        assert_eq!(k.conj(&i), k.zeta_pow(3));
        assert!(k.is_unimodular(&i));
        assert_eq!(k.as_root_of_unity(&k.from_int(-1)), Some(2));
        let half = BigRational::new(1.into(), 2.into());
        let z = k.from_rational(half.clone()).add(&i.scale_rational(&half));
        assert!(!k.is_unimodular(&z));
        assert_eq!(k.mul(&z, &k.inv(&z).unwrap()), k.one());
        // (3 + 4i)/5 is unimodular but not a root of unity
        let fifth = BigRational::new(1.into(), 5.into());
        let w = k.from_int(3).add(&i.scale_rational(&BigRational::from_integer(4.into()))).scale_rational(&fifth);
        assert!(k.is_unimodular(&w));
        assert_eq!(k.as_root_of_unity(&w), None);
    }

    #[test]
    fn roots_of_unity_cycle() {
        for m in [1, 2, 3, 4, 5, 6, 8, 12] {
            let k = Field::new(m);
            let z = k.zeta_pow(1);
            let mut acc = k.one();
            for e in 0..m as i64 {
                assert_eq!(acc, k.zeta_pow(e));
                assert_eq!(k.mul(&acc, &k.conj(&acc)), k.one());
                acc = k.mul(&acc, &z);
            }
            assert_eq!(acc, k.one());
        }
    }

    #[test]
    fn display() {
        let k = Field::new(4);
        assert_eq!(k.zeta_pow(3).to_string(), "-ζ");
        assert_eq!(k.from_int(2).add(&k.zeta_pow(1)).to_string(), "2+ζ");
        assert_eq!(k.zero().to_string(), "0");
    }
}
