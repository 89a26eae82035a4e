//! Exact arithmetic in `Z[zeta_N]` for `N` an odd prime or `N = 4`.
//!
//! Values are kept in the group ring `Z[C_N]` (one integer per power of
//! `zeta`) and only reduced to canonical form when compared or serialized.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::field::is_prime;

/// A cyclotomic integer `sum_j c_j zeta_N^j`.
#[derive(Clone, Debug)]
pub struct CycloNum {
    n: u32,
    coeffs: Vec<i64>,
}

fn check_order(n: u32) {
    assert!(n == 4 || (is_prime(n) && n > 2), "unsupported root order {n}");
}

impl CycloNum {
    pub fn zero(n: u32) -> Self {
        check_order(n);
        CycloNum { n, coeffs: vec![0; n as usize] }
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = k;
        z
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// `zeta_N^e` with `e` taken mod `N`.
    pub fn root_power(n: u32, e: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[e.rem_euclid(n as i64) as usize] = 1;
        z
    }

    /// `k * zeta_N^e`.
    pub fn monomial(n: u32, k: i64, e: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[e.rem_euclid(n as i64) as usize] = k;
        z
    }

    /// Builds a value from group-ring coefficients; missing ones are 0.
    pub fn from_coeffs(n: u32, coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= n as usize, "too many coefficients");
        let mut z = Self::zero(n);
        z.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        z
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// Group-ring coefficients (not necessarily canonical).
    pub fn raw_coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The unique reduced coefficient vector: length `N - 1` for prime `N`
    /// (basis `1, zeta, ..., zeta^{N-2}`), length 2 for `N = 4` (basis `1, i`).
    pub fn canonical_coeffs(&self) -> Vec<i64> {
        if self.n == 4 {
            vec![self.coeffs[0] - self.coeffs[2], self.coeffs[1] - self.coeffs[3]]
        } else {
            let last = self.coeffs[self.n as usize - 1];
            self.coeffs[..self.n as usize - 1].iter().map(|c| c - last).collect()
        }
    }

    /// The canonical representative.
    pub fn canonicalize(&self) -> Self {
        let c = self.canonical_coeffs();
        Self::from_coeffs(self.n, &c)
    }

    pub fn is_zero(&self) -> bool {
        self.canonical_coeffs().iter().all(|&c| c == 0)
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical_coeffs();
        c[1..].iter().all(|&x| x == 0).then_some(c[0])
    }

    /// Complex conjugation `zeta^j -> zeta^{N-j}`.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut out = Self::zero(self.n);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - j) % n] = c;
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        CycloNum {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// `|z|^2 = z * conj(z)`, which is a non-negative integer whenever `z` is
    /// a sum of roots of unity times a real integer; `None` otherwise.
    pub fn norm_sq(&self) -> Option<i64> {
        (self * &self.conj()).as_integer()
    }

    /// If every canonical coefficient is divisible by `d`, the quotient.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        let c = self.canonical_coeffs();
        if c.iter().all(|x| x % d == 0) {
            Some(Self::from_coeffs(self.n, &c.iter().map(|x| x / d).collect::<Vec<_>>()))
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.n, other.n, "mixing cyclotomic orders");
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_coeffs() == other.canonical_coeffs()
    }
}

impl Eq for CycloNum {}

impl Hash for CycloNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.canonical_coeffs().hash(state);
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check_same(rhs);
        CycloNum {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check_same(rhs);
        CycloNum {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(-1)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check_same(rhs);
        let n = self.n as usize;
        let mut out = CycloNum::zero(self.n);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[(i + j) % n] += a * b;
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $f(self, rhs: CycloNum) -> CycloNum {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(-1)
    }
}

impl fmt::Display for CycloNum {
    /// Renders the canonical form as `c0+c1*z^1+...`, keeping zero terms so
    /// that every value has the same shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.canonical_coeffs().iter().enumerate() {
            match j {
                0 => write!(f, "{c}")?,
                _ if *c < 0 => write!(f, "{c}*z^{j}")?,
                _ => write!(f, "+{c}*z^{j}")?,
            }
        }
        Ok(())
    }
}

/// An element `num / den` of `Q(zeta_N)` with `den > 0`, kept reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloRat {
    num: CycloNum,
    den: i64,
}

impl CycloRat {
    pub fn new(num: CycloNum, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = den.signum();
        let num = num.canonicalize().scale(sign);
        let den = den.abs();
        let g = num.coeffs.iter().fold(den, |g, &c| g.gcd(&c));
        CycloRat {
            num: CycloNum {
                n: num.n,
                coeffs: num.coeffs.iter().map(|c| c / g).collect(),
            },
            den: den / g,
        }
    }

    pub fn numerator(&self) -> &CycloNum {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// Whether the value lies in `Z[zeta_N]`. The power basis is an integral
    /// basis, so this is exactly divisibility of the reduced coefficients.
    pub fn is_integral(&self) -> bool {
        self.den == 1
    }
}

impl Add for &CycloRat {
    type Output = CycloRat;
    fn add(self, rhs: &CycloRat) -> CycloRat {
        CycloRat::new(&self.num.scale(rhs.den) + &rhs.num.scale(self.den), self.den * rhs.den)
    }
}

impl Mul for &CycloRat {
    type Output = CycloRat;
    fn mul(self, rhs: &CycloRat) -> CycloRat {
        CycloRat::new(&self.num * &rhs.num, self.den * rhs.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let z = CycloNum::from_coeffs(3, &[1, 1, 1]);
        assert!(z.is_zero());
        let w = CycloNum::from_coeffs(4, &[1, 0, 1, 0]);
        assert!(w.is_zero());
        let i = CycloNum::root_power(4, 1);
        assert_eq!(i.conj(), CycloNum::root_power(4, 3));
        assert_eq!(i.conj(), -&i);
    }

    #[test]
    fn root_powers() {
        assert_eq!(CycloNum::root_power(3, 0), CycloNum::one(3));
        assert_eq!(CycloNum::root_power(4, 2), CycloNum::from_int(4, -1));
        assert_eq!(CycloNum::root_power(5, -1), CycloNum::root_power(5, 4));
        for n in [3, 4, 5, 7] {
            let s = (0..n as i64).fold(CycloNum::zero(n), |acc, e| &acc + &CycloNum::root_power(n, e));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn norms_and_integrality() {
        let z = CycloNum::from_coeffs(3, &[2, 0, 0]);
        assert_eq!(z.norm_sq(), Some(4));
        let i = CycloNum::root_power(4, 1);
        assert_eq!((&i * &i).as_integer(), Some(-1));
        let r = CycloRat::new(CycloNum::from_coeffs(3, &[4, 2, 0]), 2);
        assert!(r.is_integral());
        let r = CycloRat::new(CycloNum::from_coeffs(3, &[1, 0, 0]), 2);
        assert!(!r.is_integral());
        assert_eq!((&r + &r).denominator(), 1);
    }

    #[test]
    fn display_is_canonical() {
        let z = CycloNum::from_coeffs(3, &[0, 1, 2]);
        assert_eq!(z.to_string(), "-2-1*z^1");
        assert_eq!(CycloNum::root_power(4, 3).to_string(), "0-1*z^1");
    }
}
