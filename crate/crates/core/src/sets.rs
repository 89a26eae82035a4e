//! The index sets `T`, `J_1/J_2`, `S_1/S_2` and the family C labels `I`.

use num_integer::Integer;

use crate::error::Result;
use crate::field::{FieldContext, FieldElement, ThetaPower};
use crate::group::{Family, GroupParams};
use crate::quotient::CenterCharC;

/// Membership tables for the parameter sets of a group.
#[derive(Clone, Debug)]
pub struct ParameterSets {
    transversal: Vec<FieldElement>,
    j2: Vec<bool>,
    s2: Vec<bool>,
}

/// Cardinalities of the parameter sets and their intersections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SetCounts {
    pub j1: u64,
    pub j2: u64,
    pub s1: u64,
    pub s2: u64,
    pub s2_j2: u64,
    pub s1_j2: u64,
    pub s2_j1: u64,
    pub s1_j1: u64,
}

/// `v` lies in the norm-type subgroup `{x y^{theta+1}}` of `F^*`, tested by
/// subgroup order: when `theta` has even order `k'` with fixed field of
/// degree `n'`, that subgroup is `<gamma^{p^{n'}+1}>`; otherwise it is `F^*`.
fn in_norm_subgroup(ctx: &FieldContext, theta: &ThetaPower, v: FieldElement) -> bool {
    if theta.k() % 2 == 1 {
        return true;
    }
    let q = ctx.order() as u64;
    let g = (ctx.p() as u64).pow(theta.n()) + 1;
    ctx.pow(v, (q - 1) / g) == FieldElement::ONE
}

/// `exists a != 0 : v a^{theta+1} in F_theta`.
fn by_definition(ctx: &FieldContext, theta: &ThetaPower, v: FieldElement) -> bool {
    ctx.nonzero_elements().any(|a| {
        let y = ctx.mul(v, ctx.mul(a, theta.apply(ctx, a)));
        theta.apply(ctx, y) == y
    })
}

impl ParameterSets {
    pub fn new(params: &GroupParams) -> Self {
        let f = params.field();
        let th = params.theta();
        let th2 = th.power(2);
        let p = f.p();
        let mut seen = vec![false; f.order() as usize];
        let mut transversal = Vec::new();
        for v in f.nonzero_elements() {
            if seen[v.index() as usize] {
                continue;
            }
            transversal.push(v);
            for s in 1..p {
                seen[f.scale(v, s as u64).index() as usize] = true;
            }
        }
        let j2 = f.elements().map(|v| !v.is_zero() && in_norm_subgroup(f, th, v)).collect();
        let s2 = f.elements().map(|v| !v.is_zero() && in_norm_subgroup(f, &th2, v)).collect();
        ParameterSets { transversal, j2, s2 }
    }

    /// `T`: the least-index element of each coset `v F_p^*`, increasing.
    pub fn transversal(&self) -> &[FieldElement] {
        &self.transversal
    }

    pub fn in_j2(&self, v: FieldElement) -> bool {
        self.j2[v.index() as usize]
    }

    pub fn in_s2(&self, v: FieldElement) -> bool {
        self.s2[v.index() as usize]
    }

    pub fn counts(&self) -> SetCounts {
        let mut c = SetCounts::default();
        for i in 1..self.j2.len() {
            let (j, s) = (self.j2[i], self.s2[i]);
            match (s, j) {
                (true, true) => c.s2_j2 += 1,
                (false, true) => c.s1_j2 += 1,
                (true, false) => c.s2_j1 += 1,
                (false, false) => c.s1_j1 += 1,
            }
        }
        c.j2 = c.s2_j2 + c.s1_j2;
        c.j1 = c.s2_j1 + c.s1_j1;
        c.s2 = c.s2_j2 + c.s2_j1;
        c.s1 = c.s1_j2 + c.s1_j1;
        c
    }

    /// `J_2` membership straight from the definition.
    pub fn j2_by_definition(params: &GroupParams, v: FieldElement) -> bool {
        !v.is_zero() && by_definition(params.field(), params.theta(), v)
    }

    /// `S_2` membership straight from the definition.
    pub fn s2_by_definition(params: &GroupParams, v: FieldElement) -> bool {
        !v.is_zero() && by_definition(params.field(), &params.theta().power(2), v)
    }

    /// Closed-form cardinalities.
    pub fn expected_counts(params: &GroupParams) -> SetCounts {
        let p = params.p() as u64;
        let q1 = (params.field().order() - 1) as u64;
        let (n, k) = (params.n(), params.k());
        let pn = p.pow(n);
        let j2 = if k % 2 == 1 { q1 } else { q1 / (pn + 1) };
        let s2 = if k % 4 == 0 { q1 / (pn * pn + 1) } else { q1 };
        let mut c = SetCounts { j1: q1 - j2, j2, s1: q1 - s2, s2, ..Default::default() };
        if k % 4 == 0 {
            let x = q1 / ((pn * pn + 1) * (pn + 1));
            if p == 2 {
                c.s2_j2 = x;
                c.s1_j2 = x * pn * pn;
                c.s2_j1 = x * pn;
                c.s1_j1 = x * pn.pow(3);
            } else {
                c.s2_j2 = 2 * x;
                c.s1_j2 = x * (pn * pn - 1);
                c.s2_j1 = x * (pn - 1);
                c.s1_j1 = x * (pn.pow(3) + 1);
            }
        } else {
            c.s2_j2 = j2;
            c.s2_j1 = q1 - j2;
        }
        c
    }

    /// The label set `I` of family C: `alpha^(v,w)` with `v in T`, `w in F`
    /// for odd `p`; `alpha^(v,w,1)` with `v != 0`, `w in F/F_2` for `p = 2`.
    pub fn c_labels(&self, params: &GroupParams) -> Result<Vec<CenterCharC>> {
        let f = params.field();
        let mut out = Vec::new();
        if f.p() == 2 {
            for v in f.nonzero_elements() {
                for w in f.elements().filter(|w| w.index().is_even()) {
                    out.push(CenterCharC::even(f, v, w, 1)?);
                }
            }
        } else {
            for &v in &self.transversal {
                for w in f.elements() {
                    out.push(CenterCharC::odd(f, v, w)?);
                }
            }
        }
        Ok(out)
    }

    /// `|Z(G_v)|` (resp. `|Z(G_alpha)|`) from the case analysis of the
    /// quotient centres.
    pub fn expected_quotient_center(&self, params: &GroupParams, v: FieldElement) -> u64 {
        let p = params.p() as u64;
        let (n, k) = (params.n(), params.k());
        let j2 = self.in_j2(v);
        let s2 = self.in_s2(v);
        let odd = k % 2 == 1;
        match params.family() {
            Family::A if odd => p.pow(n + 1),
            Family::A => if j2 { p.pow(2 * n + 1) } else { p },
            Family::B if odd => p.pow(2 * n + 1),
            Family::B => if j2 { p.pow(4 * n + 1) } else { p },
            Family::C => {
                let extra = if p == 2 { 2 } else { 1 };
                if odd {
                    p.pow(n) * p * extra
                } else if j2 {
                    p.pow(2 * n) * p * extra
                } else {
                    p * extra
                }
            }
            Family::D if odd => p.pow(2 * n + 1),
            Family::D if (k / 2) % 2 == 1 => if j2 { p.pow(4 * n + 1) } else { p.pow(2 * n + 1) },
            Family::D => match (j2, s2) {
                (true, true) => p.pow(6 * n + 1),
                (true, false) => p.pow(2 * n + 1),
                (false, true) => p.pow(4 * n + 1),
                (false, false) => p,
            },
        }
    }
}
