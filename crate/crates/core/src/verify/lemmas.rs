//! Exhaustive checks of the field-level lemmas the construction relies on.
//! Each returns a description of the first violation.

use std::collections::HashMap;

use num_integer::Integer;

use crate::field::{f_map, gcd_pl1, FieldContext, FieldElement, SpecialKind, Subspace, ThetaPower};

type Outcome = std::result::Result<(), String>;

/// `Q(x + y) = Q(x) + Q(y) + Tr_r(xy)` for all `x, y` in `Ker Tr_r` of
/// `F_{2^r}`.
pub fn q_form_identity(r: u32) -> Outcome {
    let f = FieldContext::new(2, r, None).map_err(|e| e.to_string())?;
    let c = if r.is_multiple_of(2) { Some(f.find_special(SpecialKind::CQ { r }).map_err(|e| e.to_string())?) } else { None };
    let u: Vec<FieldElement> = f.elements().filter(|&x| f.abs_trace(x) == 0).collect();
    let q: HashMap<FieldElement, u32> = u.iter().map(|&x| (x, f.q_form(x, r, c).expect("x in F_{2^r}"))).collect();
    for &x in &u {
        for &y in &u {
            let lhs = q[&f.add(x, y)];
            let rhs = q[&x] ^ q[&y] ^ f.abs_trace(f.mul(x, y));
            if lhs != rhs {
                return Err(format!("r = {r}: Q fails polarization at x = {}, y = {}", x.index(), y.index()));
            }
        }
    }
    Ok(())
}

/// `gcd(p^l + 1, p^m - 1)` equals 1, 2 or `p^n + 1` according to the parity
/// of `k` and `p`, for all `1 <= l <= 2m`.
pub fn gcd_lemma(p: u64, m: u32) -> Outcome {
    for l in 1..=2 * m {
        let direct = (p.pow(l) + 1).gcd(&(p.pow(m) - 1));
        let closed = gcd_pl1(p, l, m);
        if direct != closed {
            return Err(format!("p = {p}, m = {m}, l = {l}: gcd {direct}, closed form {closed}"));
        }
    }
    Ok(())
}

/// For every `theta != 1`: `Im f_{a,theta}` is the hyperplane
/// `Tr_{F/F_theta}((a a^theta)^{-1} x) = 0`, two images agree iff
/// `a/b in F_{theta^2}`, and (for `q <= 81`) `Im f_{a,theta} ⊆ Ker psi_v`
/// iff `v a^{theta+1} in F_theta`.
pub fn f_map_lemmas(p: u32, m: u32) -> Outcome {
    let f = FieldContext::new(p, m, None).map_err(|e| e.to_string())?;
    for l in 1..m {
        let th = ThetaPower::new(l, m).map_err(|e| e.to_string())?;
        let n = th.n();
        let th2 = th.power(2);
        let mut images: Vec<(FieldElement, Subspace)> = Vec::new();
        for a in f.nonzero_elements() {
            let img = Subspace::span(&f, f.elements().map(|x| f_map(&f, &th, a, x)));
            let inv = f.inv(f.mul(a, th.apply(&f, a)));
            for x in f.elements() {
                let on_hyperplane = f.trace(f.mul(inv, x), n).map_err(|e| e.to_string())?.is_zero();
                if img.contains(&f, x) != on_hyperplane {
                    return Err(format!("GF({p}^{m}), l = {l}: image of f_a for a = {} is not the trace hyperplane", a.index()));
                }
            }
            if img.size(&f) != (p as u64).pow(m - n) {
                return Err(format!("GF({p}^{m}), l = {l}: |Im f_a| = {}", img.size(&f)));
            }
            if f.order() <= 81 {
                for v in f.nonzero_elements() {
                    let inside = img.elements(&f).iter().all(|&x| f.abs_trace(f.mul(v, x)) == 0);
                    let y = f.mul(v, f.mul(a, th.apply(&f, a)));
                    if inside != (th.apply(&f, y) == y) {
                        return Err(format!("GF({p}^{m}), l = {l}: kernel criterion fails at a = {}, v = {}", a.index(), v.index()));
                    }
                }
            }
            images.push((a, img));
        }
        for (a, ia) in &images {
            for (b, ib) in &images {
                let r = f.div(*a, *b);
                if (ia == ib) != (th2.apply(&f, r) == r) {
                    return Err(format!("GF({p}^{m}), l = {l}: images of a = {}, b = {} disagree with F_theta^2", a.index(), b.index()));
                }
            }
        }
    }
    Ok(())
}
