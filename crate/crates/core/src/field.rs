//! Arithmetic in `GF(p^m)` with a fixed primitive modulus.
//!
//! Elements are stored as their enumeration index: the coefficient vector
//! with respect to the power basis of the modulus root, read as a base-`p`
//! little-endian digit string. Index 0 is zero and index 1 is one.
//! Multiplication goes through discrete-log tables of the primitive root, so
//! every operation is a table lookup or a short digit loop.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldContext::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

/// An element of `GF(p^m)`, identified by its enumeration index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw enumeration index. The caller guarantees `index < p^m`.
    #[inline]
    pub const fn from_index(index: u32) -> Self {
        FieldElement(index)
    }

    #[inline]
    pub const fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The finite field `F = GF(p^m)`.
///
/// Immutable after construction; share it behind an `Arc`.
pub struct FieldContext {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    frob: Vec<Vec<u32>>,
    add_table: Option<Vec<u32>>,
    neg_table: Vec<u32>,
    abs_trace: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Powers of the class of `x` modulo `modulus` (ascending, monic, length
/// `m + 1`), as enumeration indices. Returns `None` unless `x` has order
/// exactly `p^m - 1`, which also certifies irreducibility.
fn primitive_power_table(p: u32, modulus: &[u32], pow_p: &[u32]) -> Option<Vec<u32>> {
    let m = modulus.len() - 1;
    let q = pow_p[m] as usize;
    let mut digits = vec![0u32; m];
    digits[0] = 1;
    let mut exp = Vec::with_capacity(q - 1);
    for i in 0..q - 1 {
        let idx: u32 = digits.iter().zip(pow_p).map(|(d, w)| d * w).sum();
        if i > 0 && idx == 1 {
            return None;
        }
        if idx == 0 {
            return None;
        }
        exp.push(idx);
        // multiply by x and reduce with x^m = -sum f_j x^j
        let top = digits[m - 1];
        for j in (1..m).rev() {
            digits[j] = (digits[j - 1] + (p - (top * modulus[j]) % p)) % p;
        }
        digits[0] = (p - (top * modulus[0]) % p) % p;
    }
    let back: u32 = digits.iter().zip(pow_p).map(|(d, w)| d * w).sum();
    (back == 1).then_some(exp)
}

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (1..p)
        .find(|&g| {
            let mut x = 1u64;
            for i in 1..p {
                x = x * g as u64 % p as u64;
                if x == 1 {
                    return i == p - 1;
                }
            }
            false
        })
        .expect("every prime field has a primitive root")
}

impl FieldContext {
    /// Builds `GF(p^m)`.
    ///
    /// Without `modulus` the field uses the lexicographically least monic
    /// primitive polynomial, comparing the non-leading coefficients from
    /// degree `m - 1` down to 0. For `m = 1` the modulus is `x - g` with `g`
    /// the least primitive root mod `p`. A user modulus is given in ascending
    /// order including its leading 1.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q64) = q64 else {
            return Err(Error::FieldTooLarge { p, m });
        };
        let q = q64 as u32;
        let pow_p: Vec<u32> = (0..=m).map(|i| p.pow(i)).collect();

        let (modulus, exp) = match modulus {
            Some(f) => {
                if f.len() != m as usize + 1 || f[m as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {m} (ascending coefficients)"
                    )));
                }
                if f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
                }
                let exp = primitive_power_table(p, f, &pow_p).ok_or_else(|| {
                    Error::InvalidModulus("polynomial is reducible or not primitive".into())
                })?;
                (f.to_vec(), exp)
            }
            None if m == 1 => {
                let g = least_primitive_root(p);
                let f = vec![(p - g) % p, 1];
                let exp = primitive_power_table(p, &f, &pow_p).expect("primitive root");
                (f, exp)
            }
            None => {
                let mut found = None;
                for t in 0..q {
                    let mut f: Vec<u32> = (0..m).map(|j| (t / pow_p[j as usize]) % p).collect();
                    if f[0] == 0 {
                        continue;
                    }
                    f.push(1);
                    if let Some(exp) = primitive_power_table(p, &f, &pow_p) {
                        found = Some((f, exp));
                        break;
                    }
                }
                found.expect("a primitive polynomial exists in every degree")
            }
        };

        let mut log = vec![u32::MAX; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }

        let mut ctx = FieldContext {
            p,
            m,
            q,
            modulus,
            pow_p,
            exp,
            log,
            frob: Vec::new(),
            add_table: None,
            neg_table: Vec::new(),
            abs_trace: Vec::new(),
        };
        ctx.neg_table = (0..q).map(|x| ctx.neg_slow(x)).collect();
        if p != 2 && q <= 1024 {
            let mut t = vec![0u32; (q as usize) * (q as usize)];
            for x in 0..q {
                for y in 0..q {
                    t[(x * q + y) as usize] = ctx.add_slow(x, y);
                }
            }
            ctx.add_table = Some(t);
        }
        let order = (q - 1) as u64;
        ctx.frob = (0..m)
            .map(|j| {
                let e = (p as u64).pow(j) % order.max(1);
                (0..q)
                    .map(|x| {
                        if x == 0 {
                            0
                        } else {
                            let l = ctx.log[x as usize] as u64;
                            ctx.exp[((l * e) % order) as usize]
                        }
                    })
                    .collect()
            })
            .collect();
        ctx.abs_trace = (0..q)
            .map(|x| {
                let mut acc = FieldElement::ZERO;
                for j in 0..m as usize {
                    acc = ctx.add(acc, FieldElement(ctx.frob[j][x as usize]));
                }
                debug_assert!(acc.0 < p);
                acc.0
            })
            .collect();
        Ok(ctx)
    }

    fn add_slow(&self, x: u32, y: u32) -> u32 {
        let (mut x, mut y, mut out, mut w) = (x, y, 0u32, 1u32);
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * w;
            x /= self.p;
            y /= self.p;
            w = w.wrapping_mul(self.p);
        }
        out
    }

    fn neg_slow(&self, x: u32) -> u32 {
        let (mut x, mut out, mut w) = (x, 0u32, 1u32);
        for _ in 0..self.m {
            out += ((self.p - x % self.p) % self.p) * w;
            x /= self.p;
            w = w.wrapping_mul(self.p);
        }
        out
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order `p^m`.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients in ascending order, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of the modulus variable, a generator of `F^*`.
    pub fn gamma(&self) -> FieldElement {
        FieldElement(self.exp[1 % self.exp.len()])
    }

    /// `gamma^i`.
    pub fn gamma_pow(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::InvalidElement(format!("index {index} out of range for GF({}^{})", self.p, self.m)))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    /// Coefficient vector (length `m`) of `x` in the power basis.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        (0..self.m as usize).map(|j| self.digit(x, j)).collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidElement(format!(
                "expected at most {} coefficients in [0, {})",
                self.m, self.p
            )));
        }
        Ok(FieldElement(coeffs.iter().zip(&self.pow_p).map(|(c, w)| c * w).sum()))
    }

    #[inline]
    pub fn digit(&self, x: FieldElement, j: usize) -> u32 {
        (x.0 / self.pow_p[j]) % self.p
    }

    /// The prime-field element `k mod p`.
    #[inline]
    pub fn from_int(&self, k: u64) -> FieldElement {
        FieldElement((k % self.p as u64) as u32)
    }

    /// Integer representative in `[0, p)` of a prime-field element.
    #[inline]
    pub fn to_int(&self, x: FieldElement) -> u32 {
        debug_assert!(x.0 < self.p, "not a prime-field element");
        x.0
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.p == 2 {
            FieldElement(x.0 ^ y.0)
        } else if let Some(t) = &self.add_table {
            FieldElement(t[(x.0 * self.q + y.0) as usize])
        } else {
            FieldElement(self.add_slow(x.0, y.0))
        }
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.neg_table[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let s = self.log[x.0 as usize] + self.log[y.0 as usize];
        let n = self.q - 1;
        FieldElement(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn try_inv(&self, x: FieldElement) -> Option<FieldElement> {
        if x.0 == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[x.0 as usize];
        Some(FieldElement(self.exp[((n - l) % n) as usize]))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// If `x` is zero.
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        self.try_inv(x).expect("inverse of zero")
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = (self.q - 1) as u128;
        let l = self.log[x.0 as usize] as u128;
        FieldElement(self.exp[((l * e as u128) % n) as usize])
    }

    /// Discrete log base `gamma`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        (x.0 != 0).then(|| self.log[x.0 as usize])
    }

    /// `x^{p^j}`, with `j` taken mod `m`.
    #[inline]
    pub fn frobenius_power(&self, x: FieldElement, j: u64) -> FieldElement {
        FieldElement(self.frob[(j % self.m as u64) as usize][x.0 as usize])
    }

    /// Multiply by an integer (in the prime field).
    pub fn scale(&self, x: FieldElement, k: u64) -> FieldElement {
        self.mul(x, self.from_int(k))
    }

    /// Relative trace `Tr_{F/F_{p^d}}(x) = sum_{i < m/d} x^{p^{d i}}`.
    pub fn trace(&self, x: FieldElement, d: u32) -> Result<FieldElement> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, m: self.m });
        }
        let mut acc = FieldElement::ZERO;
        for i in 0..self.m / d {
            acc = self.add(acc, self.frobenius_power(x, (d * i) as u64));
        }
        Ok(acc)
    }

    /// Absolute trace `Tr_m(x)` as an integer in `[0, p)`.
    #[inline]
    pub fn abs_trace(&self, x: FieldElement) -> u32 {
        self.abs_trace[x.0 as usize]
    }

    /// Absolute trace of the subfield `F_{p^d}`: `sum_{i < d} x^{p^i}` as an
    /// integer in `[0, p)`. Requires `x` to lie in that subfield.
    pub fn subfield_trace(&self, x: FieldElement, d: u32) -> Result<u32> {
        if !self.in_subfield(x, d)? {
            return Err(Error::NotInSubfield(d));
        }
        let mut acc = FieldElement::ZERO;
        for i in 0..d {
            acc = self.add(acc, self.frobenius_power(x, i as u64));
        }
        Ok(acc.0)
    }

    /// Membership in the `p^d`-element subfield: `x^{p^d} = x`.
    pub fn in_subfield(&self, x: FieldElement, d: u32) -> Result<bool> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, m: self.m });
        }
        Ok(self.frobenius_power(x, d as u64) == x)
    }

    pub fn subfield_elements(&self, d: u32) -> Result<Vec<FieldElement>> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, m: self.m });
        }
        Ok(self.elements().filter(|&x| self.frobenius_power(x, d as u64) == x).collect())
    }

    /// `x^{1/p}`.
    pub fn pth_root(&self, x: FieldElement) -> FieldElement {
        self.frobenius_power(x, (self.m - 1) as u64)
    }

    /// Whether `x` is a square in `F_{p^d}` (p odd, `x` in that subfield).
    pub fn is_square(&self, x: FieldElement, d: u32) -> Result<bool> {
        if self.p == 2 {
            return Err(Error::RequiresOddChar);
        }
        if !self.in_subfield(x, d)? {
            return Err(Error::NotInSubfield(d));
        }
        if x.is_zero() {
            return Ok(true);
        }
        let half = ((self.p as u64).pow(d) - 1) / 2;
        Ok(self.pow(x, half) == FieldElement::ONE)
    }

    /// Least-index `a` with `a^{theta + 1} = target`.
    pub fn solve_norm(&self, theta: &ThetaPower, target: FieldElement) -> Result<FieldElement> {
        if target.is_zero() {
            return Err(Error::ZeroTarget);
        }
        self.nonzero_elements()
            .find(|&a| self.mul(a, theta.apply(self, a)) == target)
            .ok_or_else(|| Error::NoSolution(format!("a^(theta+1) = {target} has no solution")))
    }

    /// Least-index element satisfying the defining equation of `kind`.
    pub fn find_special(&self, kind: SpecialKind) -> Result<FieldElement> {
        let p = self.p;
        match kind {
            SpecialKind::B0 => {
                if p != 2 {
                    return Err(Error::RequiresCharTwo);
                }
                self.elements()
                    .find(|&x| self.abs_trace(x) == 1)
                    .ok_or_else(|| Error::NoSolution("Tr_m(b0) = 1".into()))
            }
            SpecialKind::U0 { n } => {
                if p != 2 {
                    return Err(Error::RequiresCharTwo);
                }
                for x in self.subfield_elements(n)? {
                    if self.subfield_trace(x, n)? == 1 {
                        return Ok(x);
                    }
                }
                Err(Error::NoSolution("Tr_n(u0) = 1".into()))
            }
            SpecialKind::X0 { n } => {
                if p == 2 {
                    return Err(Error::RequiresOddChar);
                }
                for x in self.subfield_elements(n)? {
                    if !x.is_zero() && !self.is_square(x, n)? {
                        return Ok(x);
                    }
                }
                Err(Error::NoSolution("non-square".into()))
            }
            SpecialKind::J { n } => {
                for x in self.subfield_elements(2 * n)? {
                    let s = self.add(x, self.frobenius_power(x, n as u64));
                    if s == FieldElement::ONE {
                        return Ok(x);
                    }
                }
                Err(Error::NoSolution("j + j^(p^n) = 1".into()))
            }
            SpecialKind::CQ { r } => {
                if p != 2 {
                    return Err(Error::RequiresCharTwo);
                }
                if r % 2 != 0 {
                    return Err(Error::CaseMismatch("cQ(r) needs even r".into()));
                }
                for x in self.subfield_elements(r)? {
                    let s = self.add(x, self.frobenius_power(x, (r / 2) as u64));
                    if s == FieldElement::ONE {
                        return Ok(x);
                    }
                }
                Err(Error::NoSolution("c + c^(2^(r/2)) = 1".into()))
            }
        }
    }

    /// The quadratic-type form `Q : F_{2^r} -> F_2` whose polarization on
    /// `Ker(Tr_r)` is the trace form. Needs `cQ(r)` for even `r`.
    pub fn q_form(&self, x: FieldElement, r: u32, c_q: Option<FieldElement>) -> Result<u32> {
        if self.p != 2 {
            return Err(Error::RequiresCharTwo);
        }
        if !self.in_subfield(x, r)? {
            return Err(Error::NotInSubfield(r));
        }
        let tr = |y: FieldElement| self.subfield_trace(y, r);
        let mut acc = 0u32;
        let upper = if r % 2 == 1 { (r - 1) / 2 } else { r / 2 - 1 };
        for i in 0..=upper {
            let y = self.mul(self.frobenius_power(x, i as u64), x);
            acc ^= tr(y)?;
        }
        if r.is_multiple_of(2) {
            let c = c_q.ok_or_else(|| Error::CaseMismatch("even r requires cQ(r)".into()))?;
            let y = self.mul(c, self.mul(self.frobenius_power(x, (r / 2) as u64), x));
            acc ^= tr(y)?;
        }
        Ok(acc)
    }
}

/// Selector for [`FieldContext::find_special`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    /// `Tr_m(b0) = 1` (p = 2).
    B0,
    /// `u0 in F_{2^n}`, `Tr_n(u0) = 1`.
    U0 { n: u32 },
    /// Least non-square of `F_{p^n}^*` (p odd).
    X0 { n: u32 },
    /// `j in F_{p^{2n}}` with `j + j^{p^n} = 1`.
    J { n: u32 },
    /// `c in F_{2^r}` with `c + c^{2^{r/2}} = 1` (r even).
    CQ { r: u32 },
}

/// The Frobenius power `theta : x -> x^{p^l}` of `GF(p^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaPower {
    l: u32,
    m: u32,
    n: u32,
    k: u32,
}

impl ThetaPower {
    pub fn new(l: u32, m: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidParams("l must be at least 1".into()));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let n = l.gcd(&m);
        Ok(ThetaPower { l, m, n, k: m / n })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Degree of the fixed field: `gcd(l, m)`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order of `theta`: `m / n`.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_identity(&self) -> bool {
        self.k == 1
    }

    /// `theta^times`.
    pub fn power(&self, times: u32) -> ThetaPower {
        let l = (self.l as u64 * times as u64 % self.m as u64) as u32;
        ThetaPower::new(if l == 0 { self.m } else { l }, self.m).expect("valid power")
    }

    #[inline]
    pub fn apply(&self, ctx: &FieldContext, x: FieldElement) -> FieldElement {
        ctx.frobenius_power(x, self.l as u64)
    }

    /// `theta^times (x)`.
    #[inline]
    pub fn apply_n(&self, ctx: &FieldContext, x: FieldElement, times: u32) -> FieldElement {
        ctx.frobenius_power(x, self.l as u64 * times as u64)
    }
}

/// `f_{a,theta}(x) = a x^theta - x a^theta`.
#[inline]
pub fn f_map(ctx: &FieldContext, theta: &ThetaPower, a: FieldElement, x: FieldElement) -> FieldElement {
    ctx.sub(ctx.mul(a, theta.apply(ctx, x)), ctx.mul(x, theta.apply(ctx, a)))
}

/// `gcd(p^l + 1, p^m - 1)` from its closed form in terms of `k = m / gcd(l, m)`.
pub fn gcd_pl1(p: u64, l: u32, m: u32) -> u64 {
    let n = l.gcd(&m);
    let k = m / n;
    if k.is_multiple_of(2) {
        p.pow(n) + 1
    } else if p == 2 {
        1
    } else {
        2
    }
}

/// An `F_p`-subspace of `F`, kept in reduced echelon form.
///
/// Each basis vector has a pivot at its most significant non-zero digit,
/// normalized to 1, and every other basis vector is zero at that digit. The
/// form is unique, so equality of subspaces is equality of bases, and
/// [`Subspace::reduce`] returns the least-index element of a coset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<(FieldElement, u32)>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace::default()
    }

    pub fn full(ctx: &FieldContext) -> Self {
        Subspace::span(ctx, (0..ctx.m()).map(|j| FieldElement(ctx.pow_p[j as usize])))
    }

    pub fn span(ctx: &FieldContext, gens: impl IntoIterator<Item = FieldElement>) -> Self {
        let mut s = Subspace::zero();
        for g in gens {
            s.insert(ctx, g);
        }
        s
    }

    fn top_digit(ctx: &FieldContext, x: FieldElement) -> Option<u32> {
        (0..ctx.m()).rev().find(|&j| ctx.digit(x, j as usize) != 0)
    }

    /// Least-index element of `x + W`.
    pub fn reduce(&self, ctx: &FieldContext, mut x: FieldElement) -> FieldElement {
        for &(w, piv) in &self.basis {
            let c = ctx.digit(x, piv as usize);
            if c != 0 {
                x = ctx.sub(x, ctx.scale(w, c as u64));
            }
        }
        x
    }

    pub fn contains(&self, ctx: &FieldContext, x: FieldElement) -> bool {
        self.reduce(ctx, x).is_zero()
    }

    /// Adds `x`; returns whether the dimension grew.
    pub fn insert(&mut self, ctx: &FieldContext, x: FieldElement) -> bool {
        let r = self.reduce(ctx, x);
        let Some(piv) = Self::top_digit(ctx, r) else {
            return false;
        };
        let lead = ctx.digit(r, piv as usize);
        let r = ctx.mul(r, ctx.inv(ctx.from_int(lead as u64)));
        for (w, _) in &mut self.basis {
            let c = ctx.digit(*w, piv as usize);
            if c != 0 {
                *w = ctx.sub(*w, ctx.scale(r, c as u64));
            }
        }
        self.basis.push((r, piv));
        self.basis.sort_by(|a, b| b.1.cmp(&a.1));
        true
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn size(&self, ctx: &FieldContext) -> u64 {
        (ctx.p() as u64).pow(self.dim())
    }

    pub fn basis(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.basis.iter().map(|&(w, _)| w)
    }

    /// All elements, in no particular order.
    pub fn elements(&self, ctx: &FieldContext) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::ZERO];
        for &(w, _) in &self.basis {
            let mut next = Vec::with_capacity(out.len() * ctx.p() as usize);
            for &x in &out {
                let mut y = x;
                for _ in 0..ctx.p() {
                    next.push(y);
                    y = ctx.add(y, w);
                }
            }
            out = next;
        }
        out
    }

    /// Least-index representatives of `F / W`, in increasing order.
    pub fn coset_representatives(&self, ctx: &FieldContext) -> Vec<FieldElement> {
        ctx.elements().filter(|&x| self.reduce(ctx, x) == x).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldContext {
        FieldContext::new(2, 3, None).unwrap()
    }

    fn f9() -> FieldContext {
        FieldContext::new(3, 2, None).unwrap()
    }

    // alpha is the class of x, index 2 (coefficients (0,1,0)).
    const ALPHA: FieldElement = FieldElement(2);

    #[test]
    fn default_moduli() {
        assert_eq!(f8().modulus(), &[1, 1, 0, 1]);
        assert_eq!(f9().modulus(), &[2, 1, 1]);
        let f5 = FieldContext::new(5, 1, None).unwrap();
        assert_eq!(f5.gamma(), FieldElement(2));
        assert_eq!(f8().gamma(), ALPHA);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FieldContext::new(4, 2, None).unwrap_err(), Error::NotPrime(4));
        // x^2 + 1 over Z_3 is irreducible but its root has order 4
        assert!(matches!(FieldContext::new(3, 2, Some(&[1, 0, 1])), Err(Error::InvalidModulus(_))));
        // x^2 + x over Z_2 is reducible
        assert!(matches!(FieldContext::new(2, 2, Some(&[0, 1, 1])), Err(Error::InvalidModulus(_))));
        assert!(FieldContext::new(2, 3, Some(&[1, 0, 1, 1])).is_ok());
    }

    #[test]
    fn traces_in_f8() {
        let f = f8();
        assert_eq!(f.trace(ALPHA, 1).unwrap(), FieldElement::ZERO);
        assert_eq!(f.trace(FieldElement::ONE, 1).unwrap(), FieldElement::ONE);
        assert_eq!(f.trace(FieldElement::ZERO, 3).unwrap(), FieldElement::ZERO);
        assert_eq!(f.abs_trace(ALPHA), 0);
        assert!(matches!(f.trace(ALPHA, 2), Err(Error::NotDivisor { .. })));
    }

    #[test]
    fn frobenius_examples() {
        let f = f8();
        assert_eq!(f.frobenius_power(ALPHA, 1), f.mul(ALPHA, ALPHA));
        for x in f.elements() {
            assert_eq!(f.frobenius_power(x, 3), x);
        }
        let g = f9();
        let beta = FieldElement(3);
        // 2*beta + 2 = coefficients (2, 2) = index 8
        assert_eq!(g.frobenius_power(beta, 1), g.from_coeffs(&[2, 2]).unwrap());
    }

    #[test]
    fn f_map_examples() {
        let f = f8();
        let th = ThetaPower::new(1, 3).unwrap();
        let a2 = f.mul(ALPHA, ALPHA);
        assert_eq!(f_map(&f, &th, FieldElement::ONE, ALPHA), f.add(a2, ALPHA));
        for a in f.elements() {
            assert_eq!(f_map(&f, &th, a, a), FieldElement::ZERO);
        }
        let mut img: Vec<_> = f.elements().map(|x| f_map(&f, &th, FieldElement::ONE, x)).collect();
        img.sort();
        img.dedup();
        let mut expected = vec![FieldElement::ZERO, ALPHA, a2, f.add(ALPHA, a2)];
        expected.sort();
        assert_eq!(img, expected);
        assert!(img.iter().all(|&x| f.abs_trace(x) == 0));
    }

    #[test]
    fn squares_in_f9() {
        let g = f9();
        let beta = FieldElement(3);
        assert!(g.is_square(FieldElement(2), 2).unwrap());
        assert!(g.is_square(FieldElement::ONE, 1).unwrap());
        assert!(!g.is_square(beta, 2).unwrap());
        assert_eq!(f8().is_square(ALPHA, 3), Err(Error::RequiresOddChar));
    }

    #[test]
    fn norm_equation() {
        let f = f8();
        let th = ThetaPower::new(1, 3).unwrap();
        assert_eq!(f.solve_norm(&th, FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f.solve_norm(&th, FieldElement::ZERO), Err(Error::ZeroTarget));
        let g = f9();
        let th = ThetaPower::new(1, 2).unwrap();
        assert_eq!(g.solve_norm(&th, FieldElement(2)).unwrap(), FieldElement(3));
    }

    #[test]
    fn special_elements() {
        assert_eq!(f8().find_special(SpecialKind::B0).unwrap(), FieldElement::ONE);
        let f4 = FieldContext::new(2, 2, None).unwrap();
        let j = f4.find_special(SpecialKind::J { n: 1 }).unwrap();
        // omega is the root of x^2 + x + 1, i.e. the class of x: index 2
        assert_eq!(j, FieldElement(2));
        let f3 = FieldContext::new(3, 1, None).unwrap();
        assert_eq!(f3.find_special(SpecialKind::X0 { n: 1 }).unwrap(), FieldElement(2));
        assert_eq!(f3.find_special(SpecialKind::B0), Err(Error::RequiresCharTwo));
    }

    #[test]
    fn q_form_examples() {
        let f = f8();
        assert_eq!(f.q_form(FieldElement::ZERO, 3, None).unwrap(), 0);
        assert_eq!(f.q_form(ALPHA, 3, None).unwrap(), 1);
        let a2 = f.mul(ALPHA, ALPHA);
        let x = f.add(ALPHA, a2);
        assert_eq!(f.q_form(x, 3, None).unwrap(), 1);
        let rhs = f.q_form(ALPHA, 3, None).unwrap()
            ^ f.q_form(a2, 3, None).unwrap()
            ^ f.abs_trace(f.mul(ALPHA, a2));
        assert_eq!(rhs, 1);
        assert_eq!(f9().q_form(FieldElement::ONE, 2, None), Err(Error::RequiresCharTwo));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_pl1(2, 1, 3), 1);
        assert_eq!(gcd_pl1(3, 1, 3), 2);
        assert_eq!(gcd_pl1(3, 1, 2), 4);
    }

    #[test]
    fn subspace_reduce_gives_least_coset_element() {
        let f = FieldContext::new(3, 3, None).unwrap();
        let w = Subspace::span(&f, [FieldElement(5), FieldElement(13)]);
        assert_eq!(w.dim(), 2);
        for x in f.elements() {
            let coset: Vec<_> = w.elements(&f).into_iter().map(|y| f.add(x, y)).collect();
            assert_eq!(w.reduce(&f, x), *coset.iter().min().unwrap());
        }
        assert_eq!(w.coset_representatives(&f).len(), 3);
        assert_eq!(Subspace::full(&f).dim(), 3);
    }
}
