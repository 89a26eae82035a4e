//! Explicit character formulas, evaluated on the structural classes and
//! compared with the table as sets of value vectors.
//!
//! * `A_p(m, theta)`, `k = 2`: `Lin(G/G')` is
//!   `psi_v(a) phi_w(b + b^{p^n} - a^{p^n+1})`, `v in F`, `w in F_{p^n}`.
//! * `A_p(m, theta)`, `k > 2`: the faithful characters of `Z(G_v)` in the
//!   coordinates `(a_v u, b)`, lifted through `G -> G_v`.
//! * `C_p(m, theta, 0)`, `k = 2`: `Z(G)` characters `alpha^(v,w)` (odd p) or
//!   `alpha^(v,w,eps)`, `alpha^v` (p = 2).

use std::collections::HashSet;

use super::{Check, CheckMode, CheckResult, Counterexample};
use crate::construct::CharacterTable;
use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, SpecialKind};
use crate::group::{Family, GroupElement, GroupParams};
use crate::quotient::{CenterCharC, QuotientGroup};
use crate::sets::ParameterSets;

/// Characters given by one closed formula; `linear` selects which table
/// rows they are compared against.
#[derive(Clone, Debug)]
pub struct ClosedFamily {
    pub name: String,
    pub linear: bool,
    pub vectors: Vec<Vec<CycloNum>>,
}

/// Least element of each coset `v F_p^*`.
fn transversal(f: &FieldContext) -> Vec<FieldElement> {
    f.nonzero_elements()
        .filter(|&v| (2..f.p()).all(|c| f.scale(v, c as u64).index() > v.index()))
        .collect()
}

fn reps(params: &GroupParams) -> Vec<GroupElement> {
    params.conjugacy_classes().iter().map(|c| c.rep).collect()
}

/// `psi_v(a) phi_w(b + b^{p^n} - a^{p^n+1})` for `A` with `k = 2`.
fn a_k2_linear(params: &GroupParams) -> Result<ClosedFamily> {
    let f = params.field();
    let (p, n) = (f.p(), params.n());
    let big_n = params.root_order();
    let scale = (big_n / p) as i64;
    let pn = (p as u64).pow(n);
    let reps = reps(params);
    let mut vectors = Vec::new();
    for v in f.elements() {
        for w in f.subfield_elements(n)? {
            let mut row = Vec::with_capacity(reps.len());
            for g in &reps {
                let y = f.sub(f.add(g.z, f.frobenius_power(g.z, n as u64)), f.pow(g.a, pn + 1));
                let e = f.abs_trace(f.mul(v, g.a)) + f.subfield_trace(f.mul(w, y), n)?;
                row.push(CycloNum::root_power(big_n, e as i64 * scale));
            }
            vectors.push(row);
        }
    }
    Ok(ClosedFamily { name: "A, k = 2: Lin(G/G')".into(), linear: true, vectors })
}

/// Lifted faithful characters of `Z(G_v)` for `A` with `k > 2`.
fn a_lifted(params: &GroupParams) -> Result<ClosedFamily> {
    let f = params.field();
    let th = params.theta();
    let (p, m, n, k) = (f.p(), f.m(), params.n(), params.k());
    let big_n = params.root_order() as i64;
    let scale = big_n / p as i64;
    let reps = reps(params);
    let h = p.div_ceil(2) as i64;
    let mut vectors = Vec::new();
    let pw = |e: u32| (p as i64).pow(e);
    let mut lift = |deg: i64, exps: &dyn Fn(&GroupElement) -> Option<i64>| {
        vectors.push(
            reps.iter()
                .map(|g| exps(g).map_or_else(|| CycloNum::zero(big_n as u32), |e| CycloNum::monomial(big_n as u32, deg, e)))
                .collect::<Vec<_>>(),
        );
    };
    for v in transversal(f) {
        let t_of = |g: &GroupElement| f.abs_trace(f.mul(v, g.z)) as i64;
        if k % 2 == 1 {
            let deg = pw((m - n) / 2);
            if p == 2 {
                let a_v = f.solve_norm(th, f.inv(v))?;
                let u0 = f.find_special(SpecialKind::U0 { n })?;
                let cq = if n % 2 == 0 { Some(f.find_special(SpecialKind::CQ { r: n })?) } else { None };
                let coords = |g: &GroupElement| -> Option<(i64, i64, FieldElement)> {
                    let u = f.div(g.a, a_v);
                    if !f.in_subfield(u, n).ok()? {
                        return None;
                    }
                    let delta = f.subfield_trace(u, n).ok()? as i64;
                    let u1 = if delta == 1 { f.sub(u, u0) } else { u };
                    let q = f.q_form(u1, n, cq).ok()? as i64;
                    let cross = if delta == 1 { f.subfield_trace(f.mul(u0, u1), n).ok()? as i64 } else { 0 };
                    Some((delta, q + cross, u1))
                };
                for w in f.subfield_elements(n)?.into_iter().filter(|w| f.digit(*w, 0) == 0) {
                    for s in [1i64, 3] {
                        lift(deg, &|g| {
                            let (delta, qc, u1) = coords(g)?;
                            let tw = f.subfield_trace(f.mul(w, u1), n).ok()? as i64;
                            Some((s * delta + 2 * (s * (qc + t_of(g)) + tw)).rem_euclid(4))
                        });
                    }
                }
            } else {
                let x_v = if f.is_square(v, m)? { FieldElement::ONE } else { f.find_special(SpecialKind::X0 { n })? };
                let a_v = f.solve_norm(th, f.div(x_v, v))?;
                for w in f.subfield_elements(n)? {
                    for s in 1..p as i64 {
                        lift(deg, &|g| {
                            let u = f.div(g.a, a_v);
                            if !f.in_subfield(u, n).ok()? {
                                return None;
                            }
                            let e = -h * s * f.abs_trace(f.mul(x_v, f.mul(u, u))) as i64
                                + f.subfield_trace(f.mul(w, u), n).ok()? as i64
                                + s * t_of(g);
                            Some(e.rem_euclid(p as i64) * scale)
                        });
                    }
                }
            }
            continue;
        }
        match f.solve_norm(th, f.inv(v)) {
            Err(Error::NoSolution(_)) => {
                let deg = pw(m / 2);
                for s in 1..p as i64 {
                    lift(deg, &|g| g.a.is_zero().then(|| (s * t_of(g)).rem_euclid(p as i64) * scale));
                }
            }
            Err(e) => return Err(e),
            Ok(a_v) => {
                let deg = pw((m - 2 * n) / 2);
                let in_2n = |g: &GroupElement| {
                    let u = f.div(g.a, a_v);
                    f.in_subfield(u, 2 * n).ok().and_then(|b| b.then_some(u))
                };
                if p == 2 {
                    let j = f.find_special(SpecialKind::J { n })?;
                    let sub = f.subfield_elements(n)?;
                    for &w1 in &sub {
                        for &w2 in &sub {
                            lift(deg, &|g| {
                                let u = in_2n(g)?;
                                let u2 = f.add(u, f.frobenius_power(u, n as u64));
                                let u1 = f.add(u, f.mul(j, u2));
                                let bits = f.subfield_trace(f.mul(w1, u1), n).ok()?
                                    + f.subfield_trace(f.mul(w2, u2), n).ok()?
                                    + t_of(g) as u32
                                    + f.abs_trace(f.mul(j, f.mul(u1, u2)));
                                Some(2 * (bits % 2) as i64)
                            });
                        }
                    }
                } else {
                    for w in f.subfield_elements(2 * n)? {
                        for s in 1..p as i64 {
                            lift(deg, &|g| {
                                let u = in_2n(g)?;
                                let e = f.subfield_trace(f.mul(w, u), 2 * n).ok()? as i64
                                    + s * (t_of(g) - h * f.abs_trace(f.mul(u, th.apply(f, u))) as i64);
                                Some(e.rem_euclid(p as i64) * scale)
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(ClosedFamily { name: "A, k > 2: lifts from Z(G_v)".into(), linear: false, vectors })
}

/// `deg * alpha` on `Z(G)`, zero elsewhere, for each `alpha` nontrivial on
/// `G'`, for `C` with `k = 2` and `eps = 0`.
fn c_k2_center(params: &GroupParams) -> Result<ClosedFamily> {
    let f = params.field();
    let big_n = params.root_order();
    let deg = (f.p() as i64).pow(f.m() / 2);
    let mut alphas = Vec::new();
    if f.p() == 2 {
        for v in f.nonzero_elements() {
            for w in f.elements().filter(|w| f.digit(*w, 0) == 0) {
                alphas.push(CenterCharC::even(f, v, w, 1)?);
                alphas.push(CenterCharC::even(f, v, w, -1)?);
            }
        }
        for v in f.elements() {
            alphas.push(CenterCharC::even(f, v, FieldElement::ZERO, 0)?);
        }
    } else {
        for v in f.elements() {
            for w in f.elements() {
                alphas.push(CenterCharC::odd(f, v, w)?);
            }
        }
    }
    let derived: Vec<FieldElement> = params.derived_subspace().basis().collect();
    let reps = reps(params);
    let classes = params.conjugacy_classes();
    let mut vectors = Vec::new();
    for al in &alphas {
        if derived.iter().all(|&c| al.exponent(f, FieldElement::ZERO, c) == 0) {
            continue;
        }
        vectors.push(
            reps.iter()
                .zip(classes.iter())
                .map(|(g, c)| {
                    if c.size == 1 && g.a.is_zero() {
                        CycloNum::monomial(big_n, deg, al.exponent(f, g.b, g.z) as i64)
                    } else {
                        CycloNum::zero(big_n)
                    }
                })
                .collect(),
        );
    }
    Ok(ClosedFamily { name: "C, k = 2: Z(G) characters".into(), linear: false, vectors })
}

/// The closed-form families that apply to `params` (possibly none).
pub fn closed_form_families(params: &GroupParams) -> Result<Vec<ClosedFamily>> {
    let mut out = Vec::new();
    match params.family() {
        Family::A if params.k() == 2 => out.push(a_k2_linear(params)?),
        Family::A => out.push(a_lifted(params)?),
        Family::C if params.k() == 2 && !params.eps_nonzero() => out.push(c_k2_center(params)?),
        _ => {}
    }
    Ok(out)
}

fn fail(detail: String, cx: Option<Counterexample>) -> CheckResult {
    CheckResult::fail(Check::ClosedForm, CheckMode::Full, detail, cx)
}

/// Set equality of closed-form families with the table, parameter-set
/// cardinalities, quotient centre sizes, and vanishing off `Z(G)` for VZ
/// groups.
pub fn closed_form_crosscheck(table: &CharacterTable) -> CheckResult {
    let params = table.params();
    let mut parts = Vec::new();

    let families = match closed_form_families(params) {
        Ok(f) => f,
        Err(e) => return fail(format!("closed forms unavailable: {e}"), None),
    };
    for fam in &families {
        let rows: Vec<usize> = (0..table.len()).filter(|&i| (table.chars()[i].degree == 1) == fam.linear).collect();
        let table_set: HashSet<Vec<CycloNum>> =
            rows.iter().map(|&i| (0..table.classes().len()).map(|j| table.value(i, j).clone()).collect()).collect();
        let closed_set: HashSet<Vec<CycloNum>> = fam.vectors.iter().cloned().collect();
        if closed_set.len() != fam.vectors.len() {
            return fail(format!("{}: closed-form characters are not distinct", fam.name), None);
        }
        if let Some(i) = rows.iter().find(|&&i| {
            let v: Vec<CycloNum> = (0..table.classes().len()).map(|j| table.value(i, j).clone()).collect();
            !closed_set.contains(&v)
        }) {
            let cx = Counterexample { chars: vec![*i], classes: vec![], residual: "not in closed-form family".into() };
            return fail(format!("{}: table character missing from closed form", fam.name), Some(cx));
        }
        if table_set.len() != closed_set.len() {
            return fail(format!("{}: {} closed-form vs {} table characters", fam.name, closed_set.len(), table_set.len()), None);
        }
        parts.push(format!("{} ({} characters)", fam.name, closed_set.len()));
    }

    let sets = ParameterSets::new(params);
    let counts = sets.counts();
    let expected = ParameterSets::expected_counts(params);
    if counts != expected {
        return fail(format!("parameter sets {counts:?}, closed form {expected:?}"), None);
    }
    if params.field().order() <= 1024 {
        if let Some(v) = params.field().nonzero_elements().find(|&v| {
            sets.in_j2(v) != ParameterSets::j2_by_definition(params, v) || sets.in_s2(v) != ParameterSets::s2_by_definition(params, v)
        }) {
            return fail(format!("set membership of v = {} disagrees with the definition", v.index()), None);
        }
    }
    parts.push("parameter-set cardinalities".into());

    if params.is_vz() {
        for (i, ch) in table.chars().iter().enumerate().filter(|(_, c)| c.degree > 1) {
            if let Some(j) = (0..table.classes().len()).find(|&j| table.classes().get(j).size > 1 && !table.value(i, j).is_zero()) {
                let cx = Counterexample { chars: vec![i], classes: vec![j], residual: table.value(i, j).to_string() };
                return fail(format!("degree-{} character does not vanish off Z(G)", ch.degree), Some(cx));
            }
        }
        parts.push("vanishing off Z(G)".into());
    } else {
        let check_center = |q: QuotientGroup, v: FieldElement| -> std::result::Result<(), String> {
            let got = q.center().len() as u64;
            let want = sets.expected_quotient_center(params, v);
            (got == want).then_some(()).ok_or(format!("|Z| of quotient for v = {} is {got}, expected {want}", v.index()))
        };
        let res = if params.family() == Family::C {
            sets.c_labels(params)
                .map_err(|e| e.to_string())
                .and_then(|labels| {
                    labels.into_iter().try_for_each(|al| {
                        let v = al.v;
                        check_center(QuotientGroup::mod_char_kernel(params, al).map_err(|e| e.to_string())?, v)
                    })
                })
        } else {
            sets.transversal().iter().try_for_each(|&v| {
                check_center(QuotientGroup::mod_hyperplane(params, v).map_err(|e| e.to_string())?, v)
            })
        };
        if let Err(e) = res {
            return fail(e, None);
        }
        parts.push("quotient centre sizes".into());
    }
    CheckResult::pass(Check::ClosedForm, CheckMode::Full, parts.join("; "))
}
