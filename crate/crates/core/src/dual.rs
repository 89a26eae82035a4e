//! Character groups of small finite abelian p-groups.
//!
//! [`AbelianBasis`] decomposes an explicitly enumerated group into a direct
//! sum of cyclic subgroups; its characters are then indexed by exponent
//! vectors. Values are exponents of `zeta_N` with `N = p` (p odd) or
//! `N = 4` (p = 2).

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// Root order used for character values of p-groups of exponent `p` or 4.
pub fn root_order_for(p: u32) -> u32 {
    if p == 2 {
        4
    } else {
        p
    }
}

/// Independent generators of an enumerated abelian group.
#[derive(Clone, Debug)]
pub struct AbelianBasis<E> {
    generators: Vec<E>,
    orders: Vec<u32>,
    coords: HashMap<E, Vec<u32>>,
    root_order: u32,
}

/// A character of an [`AbelianBasis`], given by one exponent per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualCharacter {
    pub exponents: Vec<u32>,
}

impl<E: Copy + Eq + Hash> AbelianBasis<E> {
    /// Greedy decomposition: repeatedly adjoin the first element (in the
    /// order of `elements`) of largest order whose cyclic subgroup meets
    /// the current span trivially.
    pub fn compute(elements: &[E], identity: E, mul: impl Fn(&E, &E) -> E, p: u32) -> Result<Self> {
        let root_order = root_order_for(p);
        let order_of = |x: &E| -> Result<u32> {
            let mut y = *x;
            let mut o = 1u32;
            while y != identity {
                y = mul(&y, x);
                o += 1;
                if o > root_order {
                    return Err(Error::Unsupported(format!("element order exceeds {root_order}")));
                }
            }
            if !root_order.is_multiple_of(o) {
                return Err(Error::Unsupported(format!("element order {o} does not divide {root_order}")));
            }
            Ok(o)
        };
        let orders: Vec<u32> = elements.iter().map(order_of).collect::<Result<_>>()?;
        let pow = |x: &E, e: u32| (0..e).fold(identity, |acc, _| mul(&acc, x));

        let mut span: HashMap<E, Vec<u32>> = HashMap::from([(identity, Vec::new())]);
        let mut generators = Vec::new();
        let mut gen_orders = Vec::new();
        while span.len() < elements.len() {
            let max_order = elements
                .iter()
                .zip(&orders)
                .filter(|&(x, &o)| o > 1 && !span.contains_key(&pow(x, o / p)))
                .map(|(_, &o)| o)
                .max();
            let Some(max_order) = max_order else {
                return Err(Error::Unsupported("no independent element left; group is not abelian".into()));
            };
            let (x, o) = elements
                .iter()
                .zip(&orders)
                .find(|&(x, &o)| o == max_order && !span.contains_key(&pow(x, o / p)))
                .map(|(x, &o)| (*x, o))
                .expect("maximum is attained");
            let mut next = HashMap::with_capacity(span.len() * o as usize);
            for (s, c) in &span {
                let mut y = *s;
                for j in 0..o {
                    let mut cj = c.clone();
                    cj.push(j);
                    next.insert(y, cj);
                    y = mul(&y, &x);
                }
            }
            if next.len() <= span.len() {
                return Err(Error::NotAbelian);
            }
            span = next;
            generators.push(x);
            gen_orders.push(o);
        }
        if span.len() != elements.len() || gen_orders.iter().map(|&o| o as u64).product::<u64>() != elements.len() as u64 {
            return Err(Error::NotAbelian);
        }
        for g in &generators {
            for h in &generators {
                if mul(g, h) != mul(h, g) {
                    return Err(Error::NotAbelian);
                }
            }
        }
        Ok(AbelianBasis { generators, orders: gen_orders, coords: span, root_order })
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn group_order(&self) -> u64 {
        self.orders.iter().map(|&o| o as u64).product()
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    /// Exponent vector of `x` with respect to the generators.
    pub fn coordinates(&self, x: &E) -> Option<&[u32]> {
        self.coords.get(x).map(Vec::as_slice)
    }

    /// All characters, exponent vectors in mixed-radix order with the first
    /// generator most significant.
    pub fn characters(&self) -> Vec<DualCharacter> {
        let mut out = vec![DualCharacter { exponents: Vec::new() }];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..o).map(move |e| {
                        let mut ex = c.exponents.clone();
                        ex.push(e);
                        DualCharacter { exponents: ex }
                    })
                })
                .collect();
        }
        out
    }

    /// `chi(x)` as an exponent of `zeta_N`.
    pub fn eval(&self, chi: &DualCharacter, x: &E) -> Result<u32> {
        let c = self
            .coordinates(x)
            .ok_or_else(|| Error::InvalidElement("element is not in the group".into()))?;
        Ok(self.eval_coords(chi, c))
    }

    pub fn eval_coords(&self, chi: &DualCharacter, coords: &[u32]) -> u32 {
        let n = self.root_order;
        chi.exponents
            .iter()
            .zip(coords)
            .zip(&self.orders)
            .map(|((&e, &x), &o)| e * x * (n / o))
            .sum::<u32>()
            % n
    }

    /// Whether `chi(z) != 1`.
    pub fn restrict_nontrivial(&self, chi: &DualCharacter, z: &E) -> Result<bool> {
        Ok(self.eval(chi, z)? != 0)
    }
}

/// The additive character `x -> zeta_p^{Tr(v x)}` of `F` (level `m`), or of
/// the subfield `F_{p^level}` using that subfield's absolute trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditiveCharacter {
    pub v: FieldElement,
    pub level: u32,
}

impl AdditiveCharacter {
    /// `psi_v`.
    pub fn psi(ctx: &FieldContext, v: FieldElement) -> Self {
        AdditiveCharacter { v, level: ctx.m() }
    }

    /// `phi_w` on `F_{p^level}`.
    pub fn phi(w: FieldElement, level: u32) -> Self {
        AdditiveCharacter { v: w, level }
    }

    /// Trace exponent in `Z_p`.
    pub fn trace_exponent(&self, ctx: &FieldContext, x: FieldElement) -> Result<u32> {
        let y = ctx.mul(self.v, x);
        if self.level == ctx.m() {
            Ok(ctx.abs_trace(y))
        } else {
            ctx.subfield_trace(y, self.level)
        }
    }

    /// Value as an exponent of `zeta_N`.
    pub fn exponent(&self, ctx: &FieldContext, x: FieldElement) -> Result<u32> {
        let n = root_order_for(ctx.p());
        Ok(self.trace_exponent(ctx, x)? * (n / ctx.p()))
    }

    pub fn is_trivial(&self) -> bool {
        self.v.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, GroupParams};
    use crate::quotient::{QuotientElement, QuotientGroup};
    use crate::CycloNum;

    fn zgv_a231() -> (QuotientGroup, Vec<QuotientElement>) {
        let g = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        let q = QuotientGroup::mod_hyperplane(&g, FieldElement::ONE).unwrap();
        let z = q.center();
        (q, z)
    }

    #[test]
    fn center_of_a231_quotient_is_cyclic() {
        let (q, z) = zgv_a231();
        let basis = AbelianBasis::compute(&z, q.identity(), |x, y| q.multiply(x, y), 2).unwrap();
        assert_eq!(basis.orders(), &[4]);
        assert_eq!(basis.generators()[0], QuotientElement { a: FieldElement::ONE, b: FieldElement::ZERO, t: 0 });
        let chars = basis.characters();
        assert_eq!(chars.len(), 4);
        let der = q.derived_generator();
        let faithful = chars.iter().filter(|c| basis.restrict_nontrivial(c, &der).unwrap()).count();
        assert_eq!(faithful, 2);
        assert!(!basis.restrict_nontrivial(&chars[0], &der).unwrap());
    }

    #[test]
    fn trivial_group() {
        let basis = AbelianBasis::compute(&[0u32], 0, |x, y| x + y, 3).unwrap();
        assert!(basis.generators().is_empty());
        assert_eq!(basis.characters().len(), 1);
    }

    #[test]
    fn elementary_center_for_b331() {
        let g = GroupParams::from_spec(Family::B, 3, 3, 1, Some(0)).unwrap();
        let q = QuotientGroup::mod_hyperplane(&g, FieldElement::ONE).unwrap();
        let z = q.center();
        assert_eq!(z.len(), 27);
        let basis = AbelianBasis::compute(&z, q.identity(), |x, y| q.multiply(x, y), 3).unwrap();
        assert_eq!(basis.orders(), &[3, 3, 3]);
    }

    #[test]
    fn dual_orthogonality() {
        let (q, z) = zgv_a231();
        let basis = AbelianBasis::compute(&z, q.identity(), |x, y| q.multiply(x, y), 2).unwrap();
        let chars = basis.characters();
        for a in &chars {
            for b in &chars {
                let mut s = CycloNum::zero(4);
                for x in &z {
                    let e = basis.eval(a, x).unwrap() as i64 - basis.eval(b, x).unwrap() as i64;
                    s = &s + &CycloNum::root_power(4, e);
                }
                let expected = if a == b { z.len() as i64 } else { 0 };
                assert_eq!(s, CycloNum::from_int(4, expected));
            }
        }
    }

    #[test]
    fn rejects_non_abelian() {
        let g = GroupParams::from_spec(Family::A, 2, 2, 1, None).unwrap();
        let els: Vec<_> = g.elements().collect();
        let r = AbelianBasis::compute(&els, crate::GroupElement::IDENTITY, |x, y| g.multiply(x, y), 2);
        assert!(r.is_err());
    }

    #[test]
    fn psi_example() {
        let f = FieldContext::new(2, 3, None).unwrap();
        let psi = AdditiveCharacter::psi(&f, FieldElement::ONE);
        assert_eq!(psi.exponent(&f, FieldElement::from_index(2)).unwrap(), 0);
        assert_eq!(psi.exponent(&f, FieldElement::ONE).unwrap(), 2);
    }
}
