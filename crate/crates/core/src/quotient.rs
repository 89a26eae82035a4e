//! Central quotients `G_v = G / H_v` and `G_alpha = G / Ker(alpha)` in a
//! cocycle presentation: an element is a head `(a, b)` together with a
//! residue `t` in `Z_d` that records the coset of the central coordinate.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, SpecialKind, ThetaPower};
use crate::group::{Family, GroupElement, GroupParams};

/// A linear character of `Z(C_p(m, theta, 0)) = {(0, b, c)}` in closed form.
///
/// For odd `p` this is `alpha^(v,w)(0,b,c) = psi_w(b) psi_v(c - b^2/2)`.
/// For `p = 2` it is `alpha^(v,w,eps)`, which takes values in `<i>`: with
/// `sqrt(v) b = t b0 + b1`, `Tr(b1) = 0`, the value is
/// `(eps i)^t (-1)^(Q(b1) + Tr(t b0 b1)) psi_w(b1) psi_v(c)`.
/// `alpha^v(0,b,c) = psi_v(b)` is the case `eps = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterCharC {
    pub v: FieldElement,
    pub w: FieldElement,
    /// `+1` or `-1` for `alpha^(v,w,eps)`; 0 for `alpha^v` (p = 2 only).
    pub eps: i8,
    b0: FieldElement,
    c_q: Option<FieldElement>,
}

impl CenterCharC {
    /// `alpha^(v,w)` for odd `p`.
    pub fn odd(ctx: &FieldContext, v: FieldElement, w: FieldElement) -> Result<Self> {
        if ctx.p() == 2 {
            return Err(Error::RequiresOddChar);
        }
        Ok(CenterCharC { v, w, eps: 0, b0: FieldElement::ZERO, c_q: None })
    }

    /// `alpha^(v,w,eps)` for `p = 2`, or `alpha^v` when `eps = 0`.
    pub fn even(ctx: &FieldContext, v: FieldElement, w: FieldElement, eps: i8) -> Result<Self> {
        if ctx.p() != 2 {
            return Err(Error::RequiresCharTwo);
        }
        if !matches!(eps, -1..=1) || (eps != 0 && v.is_zero()) {
            return Err(Error::CaseMismatch("alpha^(v,w,eps) needs v != 0 and eps = +-1".into()));
        }
        let b0 = ctx.find_special(SpecialKind::B0)?;
        let c_q = if ctx.m().is_multiple_of(2) {
            Some(ctx.find_special(SpecialKind::CQ { r: ctx.m() })?)
        } else {
            None
        };
        Ok(CenterCharC { v, w, eps, b0, c_q })
    }

    /// Root order of the values: `p`, or 4 for `p = 2`.
    pub fn root_order(ctx: &FieldContext) -> u32 {
        if ctx.p() == 2 {
            4
        } else {
            ctx.p()
        }
    }

    /// The value at `(0, b, c)` as an exponent of `zeta_N`.
    pub fn exponent(&self, ctx: &FieldContext, b: FieldElement, c: FieldElement) -> u32 {
        let p = ctx.p();
        if p != 2 {
            let half = p.div_ceil(2);
            let b2 = ctx.scale(ctx.mul(b, b), half as u64);
            return (ctx.abs_trace(ctx.mul(self.w, b)) + ctx.abs_trace(ctx.mul(self.v, ctx.sub(c, b2)))) % p;
        }
        if self.eps == 0 {
            return 2 * ctx.abs_trace(ctx.mul(self.v, b));
        }
        let y = ctx.mul(ctx.pth_root(self.v), b);
        let t = ctx.abs_trace(y);
        let b1 = if t == 1 { ctx.add(y, self.b0) } else { y };
        let q = ctx.q_form(b1, ctx.m(), self.c_q).expect("p = 2 and b1 in F");
        let sign_part = if self.eps == 1 { t } else { 3 * t };
        let bits = q ^ ctx.abs_trace(ctx.mul(ctx.scale(self.b0, t as u64), b1))
            ^ ctx.abs_trace(ctx.mul(self.w, b1))
            ^ ctx.abs_trace(ctx.mul(self.v, c));
        (sign_part + 2 * bits) % 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// `H_v = {(0, 0, c) : Tr(v c) = 0}` (families A, B, D).
    Hyperplane { v: FieldElement },
    /// `Ker(alpha)` for a character of `Z(C)` (family C).
    CharKernel(CenterCharC),
}

/// An element of a quotient; `b` is unused for families A and C.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientElement {
    pub a: FieldElement,
    pub b: FieldElement,
    pub t: u32,
}

/// A central quotient of a Suzuki group whose derived subgroup has order `p`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    params: GroupParams,
    kind: QuotientKind,
    d: u32,
}

impl QuotientGroup {
    /// `G / H_v` for families A, B, D.
    pub fn mod_hyperplane(params: &GroupParams, v: FieldElement) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::InvalidParams("v must be non-zero".into()));
        }
        if params.family() == Family::C && !params.eps_nonzero() {
            return Err(Error::CaseMismatch("family C with eps = 0 uses character-kernel quotients".into()));
        }
        Ok(QuotientGroup { params: params.clone(), kind: QuotientKind::Hyperplane { v }, d: params.p() })
    }

    /// `G / Ker(alpha)` for family C.
    pub fn mod_char_kernel(params: &GroupParams, alpha: CenterCharC) -> Result<Self> {
        if params.family() != Family::C || params.is_vz() {
            return Err(Error::CaseMismatch("character-kernel quotients need a non-VZ group of family C".into()));
        }
        if alpha.v.is_zero() {
            return Err(Error::InvalidParams("alpha is trivial on G' (v = 0)".into()));
        }
        let d = CenterCharC::root_order(params.field());
        Ok(QuotientGroup { params: params.clone(), kind: QuotientKind::CharKernel(alpha), d })
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn kind(&self) -> &QuotientKind {
        &self.kind
    }

    /// Modulus of the central residue.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// The `v` of `H_v` or of `alpha`.
    pub fn v(&self) -> FieldElement {
        match &self.kind {
            QuotientKind::Hyperplane { v } => *v,
            QuotientKind::CharKernel(al) => al.v,
        }
    }

    fn has_b(&self) -> bool {
        matches!(self.kind, QuotientKind::Hyperplane { .. }) && self.params.family() != Family::A
    }

    fn head_count(&self) -> u64 {
        let q = self.params.field().order() as u64;
        if self.has_b() {
            q * q
        } else {
            q
        }
    }

    pub fn order(&self) -> u64 {
        self.head_count() * self.d as u64
    }

    fn cocycle(&self, x: &QuotientElement, y: &QuotientElement) -> u32 {
        let f = self.params.field();
        let gx = GroupElement::new(x.a, x.b, FieldElement::ZERO);
        let gy = GroupElement::new(y.a, y.b, FieldElement::ZERO);
        let cross = self.params.cross(&gx, &gy);
        match &self.kind {
            QuotientKind::Hyperplane { v } => f.abs_trace(f.mul(*v, cross)),
            QuotientKind::CharKernel(al) => al.exponent(f, FieldElement::ZERO, cross),
        }
    }

    pub fn multiply(&self, x: &QuotientElement, y: &QuotientElement) -> QuotientElement {
        let f = self.params.field();
        QuotientElement {
            a: f.add(x.a, y.a),
            b: f.add(x.b, y.b),
            t: (x.t + y.t + self.cocycle(x, y)) % self.d,
        }
    }

    pub fn identity(&self) -> QuotientElement {
        QuotientElement::default()
    }

    /// The image of `g` under `G -> Q`.
    pub fn project(&self, g: &GroupElement) -> QuotientElement {
        let f = self.params.field();
        match &self.kind {
            QuotientKind::Hyperplane { v } => QuotientElement { a: g.a, b: g.b, t: f.abs_trace(f.mul(*v, g.z)) },
            QuotientKind::CharKernel(al) => QuotientElement { a: g.a, b: FieldElement::ZERO, t: al.exponent(f, g.b, g.z) },
        }
    }

    /// Generator `(0, 0, d/p)` of the order-`p` derived subgroup.
    pub fn derived_generator(&self) -> QuotientElement {
        QuotientElement { t: self.d / self.params.p(), ..Default::default() }
    }

    pub fn element_index(&self, x: &QuotientElement) -> u64 {
        let q = self.params.field().order() as u64;
        let head = if self.has_b() { x.a.index() as u64 * q + x.b.index() as u64 } else { x.a.index() as u64 };
        head * self.d as u64 + x.t as u64
    }

    pub fn element_at(&self, i: u64) -> QuotientElement {
        let q = self.params.field().order() as u64;
        let t = (i % self.d as u64) as u32;
        let head = i / self.d as u64;
        if self.has_b() {
            QuotientElement {
                a: FieldElement::from_index((head / q) as u32),
                b: FieldElement::from_index((head % q) as u32),
                t,
            }
        } else {
            QuotientElement { a: FieldElement::from_index(head as u32), b: FieldElement::ZERO, t }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = QuotientElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// `x` central iff `Im f_{a,theta}` (and `Im f_{b,theta}`, resp.
    /// `Im f_{b,theta^2}`) lies in `Ker psi_v`, i.e. `v a^{theta+1}` lies in
    /// the fixed field of `theta` (and likewise for `b`). With `eps != 0` the
    /// group law decides.
    pub fn is_central(&self, x: &QuotientElement) -> bool {
        if self.params.eps_nonzero() {
            return self.is_central_by_law(x);
        }
        let f = self.params.field();
        let th = self.params.theta();
        let v = self.v();
        let fixed = |x: FieldElement, th: &ThetaPower| {
            let y = f.mul(v, f.mul(x, th.apply(f, x)));
            th.apply(f, y) == y
        };
        match self.params.family() {
            Family::A | Family::C => fixed(x.a, th),
            Family::B => fixed(x.a, th) && fixed(x.b, th),
            Family::D => fixed(x.a, th) && fixed(x.b, &th.power(2)),
        }
    }

    /// Centrality decided by commuting with a generating set.
    pub fn is_central_by_law(&self, x: &QuotientElement) -> bool {
        let f = self.params.field();
        (0..f.m()).all(|j| {
            let e = FieldElement::from_index(f.p().pow(j));
            let mut gens = vec![QuotientElement { a: e, ..Default::default() }];
            if self.has_b() {
                gens.push(QuotientElement { b: e, ..Default::default() });
            }
            gens.iter().all(|y| self.multiply(x, y) == self.multiply(y, x))
        })
    }

    /// `Z(Q)` in increasing index order.
    pub fn center(&self) -> Vec<QuotientElement> {
        let mut out = Vec::new();
        for h in 0..self.head_count() {
            let head = self.element_at(h * self.d as u64);
            if self.is_central(&head) {
                out.extend((0..self.d).map(|t| QuotientElement { t, ..head }));
            }
        }
        out
    }

    /// `r = sqrt(|Q| / |Z(Q)|)`, the degree of the faithful characters.
    pub fn vz_degree(&self, center_size: u64) -> Result<u64> {
        let ratio = self.order() / center_size;
        let r = ratio.sqrt();
        (r * r == ratio && ratio * center_size == self.order())
            .then_some(r)
            .ok_or_else(|| Error::InvalidTable(format!("|Q/Z(Q)| = {ratio} is not a square")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: Family, p: u32, m: u32, l: u32, e: Option<u32>) -> GroupParams {
        GroupParams::from_spec(f, p, m, l, e).unwrap()
    }

    #[test]
    fn hyperplane_quotient_of_a231() {
        let g = group(Family::A, 2, 3, 1, None);
        let q = QuotientGroup::mod_hyperplane(&g, FieldElement::ONE).unwrap();
        assert_eq!(q.order(), 16);
        assert_eq!(q.project(&GroupElement::IDENTITY), q.identity());
        let z = q.center();
        assert_eq!(z.len(), 4);
        assert!(z.iter().all(|x| x.a == FieldElement::ZERO || x.a == FieldElement::ONE));
        assert!(QuotientGroup::mod_hyperplane(&g, FieldElement::ZERO).is_err());
    }

    #[test]
    fn projection_is_a_homomorphism() {
        for g in [group(Family::A, 3, 3, 1, None), group(Family::B, 2, 3, 1, Some(0)), group(Family::D, 2, 3, 1, Some(0))] {
            let q = QuotientGroup::mod_hyperplane(&g, FieldElement::from_index(3)).unwrap();
            let els: Vec<_> = g.elements().collect();
            for x in els.iter().step_by(37) {
                for y in els.iter().step_by(23) {
                    assert_eq!(q.project(&g.multiply(x, y)), q.multiply(&q.project(x), &q.project(y)));
                }
            }
        }
    }

    #[test]
    fn char_kernel_quotients() {
        let g = group(Family::C, 3, 3, 1, Some(0));
        let al = CenterCharC::odd(g.field(), FieldElement::ONE, FieldElement::ZERO).unwrap();
        let q = QuotientGroup::mod_char_kernel(&g, al).unwrap();
        assert_eq!(q.order(), 81);

        let g = group(Family::C, 2, 3, 1, Some(0));
        let f = g.field();
        let al = CenterCharC::even(f, FieldElement::ONE, FieldElement::ZERO, 1).unwrap();
        for c in f.elements() {
            assert_eq!(al.exponent(f, FieldElement::ZERO, c), 2 * f.abs_trace(c));
        }
        let q = QuotientGroup::mod_char_kernel(&g, al).unwrap();
        assert_eq!(q.d(), 4);
        assert_eq!(q.center().len(), 8);
        let x = GroupElement::new(FieldElement::from_index(2), FieldElement::from_index(5), FieldElement::from_index(3));
        let split = g.multiply(&GroupElement::new(x.a, FieldElement::ZERO, FieldElement::ZERO), &GroupElement { a: FieldElement::ZERO, ..x });
        assert_eq!(split, x);
    }

    #[test]
    fn d241_center_is_large_on_s2_j2() {
        let g = group(Family::D, 2, 4, 1, Some(0));
        let q = QuotientGroup::mod_hyperplane(&g, FieldElement::ONE).unwrap();
        assert_eq!(q.center().len(), 128);
    }

    #[test]
    fn fast_center_matches_law() {
        let g = group(Family::C, 2, 4, 1, Some(0));
        let f = g.field();
        let al = CenterCharC::even(f, FieldElement::from_index(7), FieldElement::from_index(2), 1).unwrap();
        let q = QuotientGroup::mod_char_kernel(&g, al).unwrap();
        for x in q.elements() {
            assert_eq!(q.is_central(&x), q.is_central_by_law(&x));
        }
    }
}
