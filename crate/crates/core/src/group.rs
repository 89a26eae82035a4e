//! The four Suzuki p-group families, their commutators, centres, derived
//! subgroups and structural conjugacy classes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{f_map, FieldContext, FieldElement, Subspace, ThetaPower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        }
    }
}

/// An element of a Suzuki group.
///
/// `z` is always the central (last) coordinate. Family A elements `(a, z)`
/// keep `b = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub a: FieldElement,
    pub b: FieldElement,
    pub z: FieldElement,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        a: FieldElement::ZERO,
        b: FieldElement::ZERO,
        z: FieldElement::ZERO,
    };

    pub fn new(a: FieldElement, b: FieldElement, z: FieldElement) -> Self {
        GroupElement { a, b, z }
    }

    /// A family A element `(a, z)`.
    pub fn pair(a: FieldElement, z: FieldElement) -> Self {
        GroupElement { a, b: FieldElement::ZERO, z }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

/// A validated choice of family, field, `theta` and `epsilon`.
#[derive(Clone, Debug)]
pub struct GroupParams {
    family: Family,
    ctx: Arc<FieldContext>,
    theta: ThetaPower,
    epsilon: Option<FieldElement>,
    vz: bool,
}

impl PartialEq for GroupParams {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.theta == other.theta
            && self.epsilon == other.epsilon
            && self.ctx.p() == other.ctx.p()
            && self.ctx.modulus() == other.ctx.modulus()
    }
}

impl Eq for GroupParams {}

impl GroupParams {
    /// Validates the parameters of `A_p(m, theta)` (no `epsilon`) or of
    /// `B/C/D_p(m, theta, epsilon)`.
    pub fn new(family: Family, ctx: Arc<FieldContext>, l: u32, epsilon: Option<FieldElement>) -> Result<Self> {
        let theta = ThetaPower::new(l, ctx.m())?;
        match (family, epsilon) {
            (Family::A, Some(_)) => {
                return Err(Error::InvalidParams("family A takes no epsilon".into()));
            }
            (Family::A, None) if theta.is_identity() => {
                return Err(Error::InvalidParams(format!(
                    "family A requires θ ≠ 1, but l = {l} is a multiple of m = {}, so θ = 1",
                    ctx.m()
                )));
            }
            (Family::B | Family::C | Family::D, None) => {
                return Err(Error::InvalidParams(format!("family {family} requires epsilon")));
            }
            (_, Some(e)) if theta.is_identity() && e.is_zero() => {
                return Err(Error::InvalidParams(
                    "θ = 1 and ε = 0 give an abelian group; need θ ≠ 1 or ε ≠ 0".into(),
                ));
            }
            (_, Some(e)) if e.index() >= ctx.order() => {
                return Err(Error::InvalidParams(format!("epsilon index {} out of range", e.index())));
            }
            _ => {}
        }
        let vz = match epsilon {
            None => theta.k() == 2,
            Some(e) => !e.is_zero() || theta.k() == 2,
        };
        Ok(GroupParams { family, ctx, theta, epsilon, vz })
    }

    /// Convenience constructor building the default field `GF(p^m)`, with
    /// `epsilon` given by its enumeration index.
    pub fn from_spec(family: Family, p: u32, m: u32, l: u32, epsilon: Option<u32>) -> Result<Self> {
        let ctx = Arc::new(FieldContext::new(p, m, None)?);
        let eps = epsilon.map(|e| ctx.element(e)).transpose()?;
        Self::new(family, ctx, l, eps)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn field_arc(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn theta(&self) -> &ThetaPower {
        &self.theta
    }

    pub fn epsilon(&self) -> Option<FieldElement> {
        self.epsilon
    }

    pub fn eps_nonzero(&self) -> bool {
        self.epsilon.is_some_and(|e| !e.is_zero())
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    pub fn l(&self) -> u32 {
        self.theta.l()
    }

    pub fn n(&self) -> u32 {
        self.theta.n()
    }

    pub fn k(&self) -> u32 {
        self.theta.k()
    }

    pub fn is_vz(&self) -> bool {
        self.vz
    }

    /// Root order of the character values: `p` for odd `p`, 4 for `p = 2`.
    pub fn root_order(&self) -> u32 {
        if self.p() == 2 {
            4
        } else {
            self.p()
        }
    }

    /// Number of non-central coordinates (1 for A, 2 otherwise).
    pub fn head_dim(&self) -> u32 {
        if self.family == Family::A {
            1
        } else {
            2
        }
    }

    pub fn order(&self) -> u64 {
        (self.ctx.order() as u64).pow(self.head_dim() + 1)
    }

    /// Number of `(a, b)` heads.
    pub fn head_count(&self) -> u64 {
        (self.ctx.order() as u64).pow(self.head_dim())
    }

    pub fn short_name(&self) -> String {
        match self.epsilon {
            None => format!("{}_{}({},{})", self.family, self.p(), self.m(), self.l()),
            Some(e) => format!("{}_{}({},{},{})", self.family, self.p(), self.m(), self.l(), e.index()),
        }
    }

    /// Whether `G'` is the proper subgroup `{(0,0,c) : c in Im f_{1,theta}}`.
    fn derived_is_hyperplane(&self) -> bool {
        !self.eps_nonzero() && self.k() == 2
    }

    /// `|G'|`.
    pub fn derived_order(&self) -> u64 {
        let p = self.p() as u64;
        if self.derived_is_hyperplane() {
            p.pow(self.m() - self.n())
        } else {
            p.pow(self.m())
        }
    }

    /// `|Z(G)|`.
    pub fn center_order(&self) -> u64 {
        let q = self.ctx.order() as u64;
        match self.family {
            Family::C if !self.eps_nonzero() => q * q,
            Family::D if self.derived_is_hyperplane() => q * q,
            _ => q,
        }
    }

    /// Whether the `b` coordinate is free in the centre.
    pub fn center_has_b(&self) -> bool {
        self.center_order() > self.ctx.order() as u64 && self.family != Family::A
    }

    // --- element arithmetic ---

    /// The twist term of the product `g h` in the central coordinate.
    #[inline]
    pub fn cross(&self, g: &GroupElement, h: &GroupElement) -> FieldElement {
        let f = &*self.ctx;
        let th = &self.theta;
        let ad = f.mul(g.a, th.apply(f, h.a));
        match self.family {
            Family::A => ad,
            Family::B => {
                let mut t = f.add(ad, f.mul(g.b, th.apply(f, h.b)));
                if let Some(e) = self.epsilon.filter(|e| !e.is_zero()) {
                    t = f.add(t, f.mul(e, f.mul(g.a, th.apply(f, h.b))));
                }
                t
            }
            Family::C => {
                let mut t = f.add(ad, f.mul(g.b, h.b));
                if let Some(e) = self.epsilon.filter(|e| !e.is_zero()) {
                    let x = f.mul(f.pth_root(g.a), f.frobenius_power(h.b, th.l() as u64 + 1));
                    t = f.add(t, f.mul(e, x));
                }
                t
            }
            Family::D => {
                let mut t = f.add(ad, f.mul(g.b, th.apply_n(f, h.b, 2)));
                if let Some(e) = self.epsilon.filter(|e| !e.is_zero()) {
                    let x = f.mul(th.apply_n(f, g.a, 3), th.apply(f, h.b));
                    t = f.add(t, f.mul(e, x));
                }
                t
            }
        }
    }

    #[inline]
    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let f = &*self.ctx;
        GroupElement {
            a: f.add(g.a, h.a),
            b: f.add(g.b, h.b),
            z: f.add(f.add(g.z, h.z), self.cross(g, h)),
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        let f = &*self.ctx;
        let head = GroupElement::new(f.neg(g.a), f.neg(g.b), FieldElement::ZERO);
        GroupElement { z: f.sub(f.neg(g.z), self.cross(g, &head)), ..head }
    }

    /// `[g, h] = g^{-1} h^{-1} g h` from its closed form.
    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement::new(FieldElement::ZERO, FieldElement::ZERO, self.commutator_value(g, h))
    }

    /// Central coordinate of `[g, h]`.
    pub fn commutator_value(&self, g: &GroupElement, h: &GroupElement) -> FieldElement {
        let f = &*self.ctx;
        let th = &self.theta;
        let fa = f_map(f, th, g.a, h.a);
        let eps = self.epsilon.filter(|e| !e.is_zero());
        match self.family {
            Family::A => fa,
            Family::B => {
                let mut t = f.add(fa, f_map(f, th, g.b, h.b));
                if let Some(e) = eps {
                    let x = f.sub(f.mul(g.a, th.apply(f, h.b)), f.mul(h.a, th.apply(f, g.b)));
                    t = f.add(t, f.mul(e, x));
                }
                t
            }
            Family::C => {
                let mut t = fa;
                if let Some(e) = eps {
                    let s = th.l() as u64 + 1;
                    let x = f.sub(
                        f.mul(f.pth_root(g.a), f.frobenius_power(h.b, s)),
                        f.mul(f.pth_root(h.a), f.frobenius_power(g.b, s)),
                    );
                    t = f.add(t, f.mul(e, x));
                }
                t
            }
            Family::D => {
                let mut t = f.add(fa, f_map(f, &th.power(2), g.b, h.b));
                if let Some(e) = eps {
                    let x = f.sub(
                        f.mul(th.apply_n(f, g.a, 3), th.apply(f, h.b)),
                        f.mul(th.apply_n(f, h.a, 3), th.apply(f, g.b)),
                    );
                    t = f.add(t, f.mul(e, x));
                }
                t
            }
        }
    }

    /// `[g, h]` computed from the group law.
    pub fn commutator_by_law(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let gi = self.inverse(g);
        let hi = self.inverse(h);
        self.multiply(&self.multiply(&gi, &hi), &self.multiply(g, h))
    }

    /// `h^{-1} g h`.
    pub fn conjugate(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.multiply(&self.multiply(&self.inverse(h), g), h)
    }

    /// The subgroup `[g, G]`, as a subspace of the central coordinate.
    pub fn commutator_image(&self, g: &GroupElement) -> Subspace {
        let f = &*self.ctx;
        let mut w = Subspace::zero();
        for j in 0..f.m() {
            let x = f.from_coeffs(&unit(j, f.m())).expect("basis vector");
            w.insert(f, self.commutator_value(g, &GroupElement::new(x, FieldElement::ZERO, FieldElement::ZERO)));
            if self.family != Family::A {
                w.insert(f, self.commutator_value(g, &GroupElement::new(FieldElement::ZERO, x, FieldElement::ZERO)));
            }
        }
        w
    }

    pub fn is_central(&self, g: &GroupElement) -> bool {
        match self.family {
            Family::A => g.a.is_zero(),
            _ if self.center_has_b() => g.a.is_zero(),
            _ => g.a.is_zero() && g.b.is_zero(),
        }
    }

    pub fn in_derived(&self, g: &GroupElement) -> bool {
        if !(g.a.is_zero() && g.b.is_zero()) {
            return false;
        }
        if self.derived_is_hyperplane() {
            self.ctx.trace(g.z, self.n()).expect("n divides m").is_zero()
        } else {
            true
        }
    }

    /// The subspace `G' = {(0,0,c)}` of the central coordinate.
    pub fn derived_subspace(&self) -> Subspace {
        let f = &*self.ctx;
        if self.derived_is_hyperplane() {
            let one = GroupElement::new(FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO);
            // Im f_{1,theta}, which is the commutator image of (1, 0, 0)
            let mut w = Subspace::zero();
            for x in f.elements() {
                if w.dim() == f.m() - self.n() {
                    break;
                }
                w.insert(f, self.commutator_value(&one, &GroupElement::new(x, FieldElement::ZERO, FieldElement::ZERO)));
            }
            w
        } else {
            Subspace::full(f)
        }
    }

    // --- enumeration ---

    pub fn element_index(&self, g: &GroupElement) -> u64 {
        let q = self.ctx.order() as u64;
        (self.head_index(g) * q) + g.z.index() as u64
    }

    pub fn element_at(&self, index: u64) -> GroupElement {
        let q = self.ctx.order() as u64;
        let z = FieldElement::from_index((index % q) as u32);
        let head = self.head_at(index / q);
        GroupElement { z, ..head }
    }

    pub fn head_index(&self, g: &GroupElement) -> u64 {
        let q = self.ctx.order() as u64;
        match self.family {
            Family::A => g.a.index() as u64,
            _ => g.a.index() as u64 * q + g.b.index() as u64,
        }
    }

    pub fn head_at(&self, index: u64) -> GroupElement {
        let q = self.ctx.order() as u64;
        match self.family {
            Family::A => GroupElement::pair(FieldElement::from_index(index as u32), FieldElement::ZERO),
            _ => GroupElement::new(
                FieldElement::from_index((index / q) as u32),
                FieldElement::from_index((index % q) as u32),
                FieldElement::ZERO,
            ),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// Coordinates in output order: `(a, z)` for A, `(a, b, z)` otherwise.
    pub fn coordinates(&self, g: &GroupElement) -> Vec<FieldElement> {
        match self.family {
            Family::A => vec![g.a, g.z],
            _ => vec![g.a, g.b, g.z],
        }
    }

    pub fn from_coordinates(&self, coords: &[FieldElement]) -> Result<GroupElement> {
        match (self.family, coords) {
            (Family::A, [a, z]) => Ok(GroupElement::pair(*a, *z)),
            (Family::B | Family::C | Family::D, [a, b, z]) => Ok(GroupElement::new(*a, *b, *z)),
            _ => Err(Error::InvalidElement(format!(
                "family {} elements have {} coordinates",
                self.family,
                self.head_dim() + 1
            ))),
        }
    }

    // --- class numbers ---

    /// `k(G)` from its closed form.
    pub fn class_number(&self) -> u64 {
        let p = self.p() as u64;
        let (m, n, k) = (self.m(), self.n(), self.k());
        let pm = p.pow(m);
        if self.vz {
            let g_mod_d = self.order() / self.derived_order();
            let z = self.center_order();
            return g_mod_d + z - z / self.derived_order();
        }
        let pn = p.pow(n);
        match self.family {
            Family::A => pm + pn * (pm - 1),
            Family::B if k % 2 == 1 => pm * pm + pn * pn * (pm - 1),
            Family::B => pm * pm + pn * (pm - 1) * (pn * pn - pn + 1),
            Family::C => pm * pm + pm * pn * (pm - 1),
            Family::D if k % 2 == 1 => pm * pm + pn * pn * (pm - 1),
            Family::D if (k / 2) % 2 == 1 => pm * pm + pn.pow(3) * (pm - 1),
            Family::D if p == 2 => pm * pm + pn.pow(3) * (pm - 1),
            Family::D => pm * pm + (pm - 1) * (2 * pn.pow(3) - pn * pn - pn + 1),
        }
    }

    /// Whether `[g, G] = G'` for every non-central `g`, read off the
    /// commutator images instead of the case table.
    pub fn vz_by_structure(&self) -> bool {
        let derived = self.derived_subspace();
        (0..self.head_count()).all(|h| {
            let w = self.commutator_image(&self.head_at(h));
            w.dim() == 0 || w == derived
        })
    }

    /// Structural conjugacy classes.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        ConjugacyClasses::new(self)
    }
}

fn unit(j: u32, m: u32) -> Vec<u32> {
    (0..m).map(|i| u32::from(i == j)).collect()
}

/// A conjugacy class `g [g, G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: GroupElement,
    pub size: u64,
    pub commutator_image: Subspace,
}

/// The conjugacy classes of a group, in increasing order of their
/// least-index representatives, with constant-time lookup by head.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<ConjClass>,
    head_start: Vec<u32>,
    head_image: Vec<u32>,
    images: Vec<Subspace>,
}

impl ConjugacyClasses {
    fn new(params: &GroupParams) -> Self {
        let f = params.field();
        let heads = params.head_count() as usize;
        let mut classes = Vec::new();
        let mut head_start = Vec::with_capacity(heads + 1);
        let mut head_image = Vec::with_capacity(heads);
        let mut images: Vec<Subspace> = Vec::new();
        for h in 0..heads {
            head_start.push(classes.len() as u32);
            let head = params.head_at(h as u64);
            let w = params.commutator_image(&head);
            let wi = match images.iter().position(|x| *x == w) {
                Some(i) => i,
                None => {
                    images.push(w.clone());
                    images.len() - 1
                }
            };
            head_image.push(wi as u32);
            let size = w.size(f);
            for z in w.coset_representatives(f) {
                classes.push(ConjClass {
                    rep: GroupElement { z, ..head },
                    size,
                    commutator_image: w.clone(),
                });
            }
        }
        head_start.push(classes.len() as u32);
        ConjugacyClasses { classes, head_start, head_image, images }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn get(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ConjClass> {
        self.classes.iter()
    }

    /// Index of the class containing `g`.
    pub fn class_of(&self, params: &GroupParams, g: &GroupElement) -> usize {
        let h = params.head_index(g) as usize;
        let w = &self.images[self.head_image[h] as usize];
        let z = w.reduce(params.field(), g.z);
        let lo = self.head_start[h] as usize;
        let hi = self.head_start[h + 1] as usize;
        let pos = self.classes[lo..hi]
            .binary_search_by(|c| c.rep.z.cmp(&z))
            .expect("reduced coordinate is a representative");
        lo + pos
    }

    /// Every member of class `i`.
    pub fn members(&self, params: &GroupParams, i: usize) -> Vec<GroupElement> {
        let c = &self.classes[i];
        let f = params.field();
        c.commutator_image
            .elements(f)
            .into_iter()
            .map(|x| GroupElement { z: f.add(c.rep.z, x), ..c.rep })
            .collect()
    }
}

impl<'a> IntoIterator for &'a ConjugacyClasses {
    type Item = &'a ConjClass;
    type IntoIter = std::slice::Iter<'a, ConjClass>;
    fn into_iter(self) -> Self::IntoIter {
        self.classes.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(a: u32, b: u32, z: u32) -> GroupElement {
        GroupElement::new(FieldElement::from_index(a), FieldElement::from_index(b), FieldElement::from_index(z))
    }

    const ALPHA: u32 = 2;

    #[test]
    fn make_params_examples() {
        let g = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        assert_eq!((g.n(), g.k(), g.is_vz()), (1, 3, false));
        let g = GroupParams::from_spec(Family::A, 2, 4, 2, None).unwrap();
        assert_eq!(g.k(), 2);
        assert!(g.is_vz());
        let g = GroupParams::from_spec(Family::B, 2, 3, 3, Some(1)).unwrap();
        assert!(g.is_vz());
        assert!(GroupParams::from_spec(Family::A, 2, 3, 3, None).is_err());
        assert!(GroupParams::from_spec(Family::B, 2, 3, 3, Some(0)).is_err());
        assert!(GroupParams::from_spec(Family::C, 2, 3, 1, None).is_err());
        assert!(GroupParams::from_spec(Family::A, 2, 3, 1, Some(1)).is_err());
    }

    #[test]
    fn multiply_examples() {
        let g = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        let x = el(ALPHA, 0, 5);
        assert_eq!(g.multiply(&x, &GroupElement::IDENTITY), x);
        // alpha * alpha^2 = alpha^3 = alpha + 1, index 3
        assert_eq!(g.multiply(&el(ALPHA, 0, 0), &el(ALPHA, 0, 0)), el(0, 0, 3));
        let c = GroupParams::from_spec(Family::C, 2, 3, 1, Some(1)).unwrap();
        // alpha^{1/2} = alpha^2 + alpha, index 6
        assert_eq!(c.multiply(&el(ALPHA, 0, 0), &el(0, 1, 0)), el(ALPHA, 1, 6));
    }

    #[test]
    fn commutator_examples() {
        let g = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        let x = el(ALPHA, 0, 0);
        assert!(g.commutator(&x, &x).is_identity());
        assert_eq!(g.commutator(&x, &el(1, 0, 0)), el(0, 0, 6));
        let b = GroupParams::from_spec(Family::B, 2, 3, 1, Some(0)).unwrap();
        assert_eq!(b.commutator(&el(1, 0, 0), &el(ALPHA, 0, 0)), el(0, 0, 6));
    }

    #[test]
    fn commutator_closed_form_matches_law() {
        for (fam, p, m, l, e) in [
            (Family::A, 3, 2, 1, None),
            (Family::B, 2, 2, 1, Some(1)),
            (Family::C, 3, 2, 1, Some(2)),
            (Family::C, 2, 2, 1, Some(3)),
            (Family::D, 2, 2, 1, Some(2)),
            (Family::D, 3, 2, 1, Some(0)),
        ] {
            let g = GroupParams::from_spec(fam, p, m, l, e).unwrap();
            let all: Vec<_> = g.elements().collect();
            for x in all.iter().step_by(7) {
                for y in all.iter().step_by(5) {
                    assert_eq!(g.commutator(x, y), g.commutator_by_law(x, y), "{}", g.short_name());
                }
                assert!(g.multiply(x, &g.inverse(x)).is_identity());
            }
        }
    }

    #[test]
    fn a231_classes() {
        let g = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        let cl = g.conjugacy_classes();
        assert_eq!(cl.len(), 22);
        assert_eq!(g.class_number(), 22);
        assert_eq!(cl.get(0).rep, GroupElement::IDENTITY);
        assert_eq!(cl.get(0).size, 1);
        let i = cl.class_of(&g, &el(ALPHA, 0, 0));
        assert_eq!(cl.get(i).size, 4);
        let total: u64 = cl.iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
    }

    #[test]
    fn table_class_numbers() {
        let d = GroupParams::from_spec(Family::D, 2, 4, 1, Some(0)).unwrap();
        assert_eq!(d.class_number(), 376);
        let b = GroupParams::from_spec(Family::B, 2, 4, 1, Some(0)).unwrap();
        assert_eq!(b.class_number(), 346);
        assert_eq!(b.conjugacy_classes().len(), 346);
    }

    #[test]
    fn membership_examples() {
        let a = GroupParams::from_spec(Family::A, 2, 3, 1, None).unwrap();
        assert!(a.is_central(&el(0, 0, 5)));
        let c = GroupParams::from_spec(Family::C, 2, 3, 1, Some(0)).unwrap();
        assert!(c.is_central(&el(0, ALPHA, 1)));
        let d = GroupParams::from_spec(Family::D, 2, 2, 1, Some(0)).unwrap();
        // Im f_{1,theta} = ker of the relative trace to F_2 = {0, 1}
        assert!(d.in_derived(&el(0, 0, 1)));
        assert!(!d.in_derived(&el(0, 0, ALPHA)));
        assert_eq!(d.derived_subspace().dim(), 1);
    }
}
