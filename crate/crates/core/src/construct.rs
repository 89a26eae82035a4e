//! Assembly of `Irr(G)`: linear characters, the VZ tables, and the lifting
//! of faithful characters of central quotients for the non-VZ groups.
//!
//! Every value is a monomial `d * zeta_N^e` or zero, so tables store a
//! `u16` index into a small palette of distinct [`CycloNum`]s.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cyclotomic::CycloNum;
use crate::dual::{AbelianBasis, AdditiveCharacter};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::{ConjugacyClasses, Family, GroupElement, GroupParams};
use crate::quotient::QuotientGroup;
use crate::sets::ParameterSets;

/// Raw value code produced before interning: `ZERO_CODE` or an exponent.
const ZERO_CODE: u16 = u16::MAX;

/// One irreducible character; `values[j]` indexes the table's palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrChar {
    pub degree: u64,
    pub provenance: String,
    pub values: Vec<u16>,
}

/// The character table of a Suzuki group in canonical order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    params: GroupParams,
    classes: ConjugacyClasses,
    chars: Vec<IrrChar>,
    palette: Vec<CycloNum>,
    root_order: u32,
}

/// Interns values into a palette.
struct Palette {
    n: u32,
    values: Vec<CycloNum>,
    monomials: HashMap<(u64, u32), u16>,
    general: HashMap<CycloNum, u16>,
}

impl Palette {
    fn new(n: u32) -> Self {
        Palette { n, values: Vec::new(), monomials: HashMap::new(), general: HashMap::new() }
    }

    fn push(&mut self, v: CycloNum) -> Result<u16> {
        if self.values.len() >= ZERO_CODE as usize {
            return Err(Error::Unsupported("too many distinct character values".into()));
        }
        self.values.push(v.canonicalize());
        Ok((self.values.len() - 1) as u16)
    }

    fn intern(&mut self, v: CycloNum) -> Result<u16> {
        if let Some(&i) = self.general.get(&v) {
            return Ok(i);
        }
        let i = self.push(v.clone())?;
        self.general.insert(v, i);
        Ok(i)
    }

    /// `degree * zeta^e`, or zero for `ZERO_CODE`.
    fn intern_code(&mut self, degree: u64, code: u16) -> Result<u16> {
        let key = if code == ZERO_CODE { (0, 0) } else { (degree, code as u32) };
        if let Some(&i) = self.monomials.get(&key) {
            return Ok(i);
        }
        let v = CycloNum::monomial(self.n, key.0 as i64, key.1 as i64);
        let i = self.intern(v)?;
        self.monomials.insert(key, i);
        Ok(i)
    }
}

/// A character before interning: values are exponents of `zeta_N` scaled by
/// the degree, or `ZERO_CODE`.
struct RawChar {
    degree: u64,
    provenance: String,
    codes: Vec<u16>,
}

fn field_label(name: &str, x: FieldElement) -> String {
    format!("{name}={}", x.index())
}

impl CharacterTable {
    fn assemble(params: &GroupParams, classes: ConjugacyClasses, raw: Vec<RawChar>) -> Result<Self> {
        let n = params.root_order();
        let mut palette = Palette::new(n);
        let mut chars = Vec::with_capacity(raw.len());
        for r in raw {
            let mut cache = vec![None; n as usize + 1];
            let mut values = Vec::with_capacity(r.codes.len());
            for c in r.codes {
                let slot = if c == ZERO_CODE { n as usize } else { c as usize };
                let idx = match cache[slot] {
                    Some(i) => i,
                    None => {
                        let i = palette.intern_code(r.degree, c)?;
                        cache[slot] = Some(i);
                        i
                    }
                };
                values.push(idx);
            }
            chars.push(IrrChar { degree: r.degree, provenance: r.provenance, values });
        }
        Ok(CharacterTable { params: params.clone(), classes, chars, palette: palette.values, root_order: n })
    }

    /// Builds a table from explicit values in the structural class order of
    /// `params`; used for stored documents. No validity checks are made.
    pub fn from_values(params: &GroupParams, chars: Vec<(u64, String, Vec<CycloNum>)>) -> Result<Self> {
        let classes = params.conjugacy_classes();
        let n = params.root_order();
        let mut palette = Palette::new(n);
        let mut out = Vec::with_capacity(chars.len());
        for (degree, provenance, vals) in chars {
            if vals.len() != classes.len() {
                return Err(Error::InvalidTable(format!(
                    "character has {} values but there are {} classes",
                    vals.len(),
                    classes.len()
                )));
            }
            let mut values = Vec::with_capacity(vals.len());
            for v in vals {
                if v.order() != n {
                    return Err(Error::InvalidTable(format!("value of order {} in a table of order {n}", v.order())));
                }
                values.push(palette.intern(v)?);
            }
            out.push(IrrChar { degree, provenance, values });
        }
        Ok(CharacterTable { params: params.clone(), classes, chars: out, palette: palette.values, root_order: n })
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn chars(&self) -> &[IrrChar] {
        &self.chars
    }

    pub fn palette(&self) -> &[CycloNum] {
        &self.palette
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// `chi_i(g_j)`.
    pub fn value(&self, i: usize, j: usize) -> &CycloNum {
        &self.palette[self.chars[i].values[j] as usize]
    }

    /// Overwrites one entry; for fault-injection tests.
    pub fn set_value(&mut self, i: usize, j: usize, v: CycloNum) -> Result<()> {
        let mut palette = Palette::new(self.root_order);
        palette.values = std::mem::take(&mut self.palette);
        for (k, x) in palette.values.iter().enumerate() {
            palette.general.insert(x.clone(), k as u16);
        }
        let idx = palette.intern(v)?;
        self.palette = palette.values;
        self.chars[i].values[j] = idx;
        Ok(())
    }

    /// `(degree, count)` pairs in increasing degree order.
    pub fn profile(&self) -> Vec<(u64, u64)> {
        let mut counts = std::collections::BTreeMap::new();
        for c in &self.chars {
            *counts.entry(c.degree).or_insert(0u64) += 1;
        }
        counts.into_iter().collect()
    }
}

/// `Irr(G)` in canonical order: linear characters by label, then the
/// non-linear ones by quotient label and character index.
///
/// Groups that the case table lists as VZ but whose commutator images show
/// otherwise go through the lifting path.
pub fn character_table(params: &GroupParams) -> Result<CharacterTable> {
    if params.is_vz() && params.vz_by_structure() {
        vz_character_table(params)
    } else {
        nonvz_character_table(params)
    }
}

/// Table of a VZ group from the duals of `G/G'` and `Z(G)`.
pub fn vz_character_table(params: &GroupParams) -> Result<CharacterTable> {
    if !params.is_vz() || !params.vz_by_structure() {
        return Err(Error::CaseMismatch("group is not VZ".into()));
    }
    let f = params.field();
    let p = params.p();
    let classes = params.conjugacy_classes();
    let derived = params.derived_subspace();
    let key = |g: &GroupElement| GroupElement { z: derived.reduce(f, g.z), ..*g };

    let z_reps = derived.coset_representatives(f);
    let abel: Vec<GroupElement> = (0..params.head_count())
        .flat_map(|h| {
            let head = params.head_at(h);
            z_reps.iter().map(move |&z| GroupElement { z, ..head })
        })
        .collect();
    let lin = AbelianBasis::compute(&abel, GroupElement::IDENTITY, |x, y| key(&params.multiply(x, y)), p)?;
    let class_keys: Vec<Vec<u32>> = classes
        .iter()
        .map(|c| lin.coordinates(&key(&c.rep)).map(<[u32]>::to_vec))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidTable("class representative outside G/G'".into()))?;
    let mut raw: Vec<RawChar> = lin
        .characters()
        .iter()
        .enumerate()
        .map(|(i, chi)| RawChar {
            degree: 1,
            provenance: format!("linear(index={i})"),
            codes: class_keys.iter().map(|c| lin.eval_coords(chi, c) as u16).collect(),
        })
        .collect();

    let center: Vec<GroupElement> = if params.center_has_b() {
        f.elements()
            .flat_map(|b| f.elements().map(move |z| GroupElement::new(FieldElement::ZERO, b, z)))
            .collect()
    } else {
        f.elements().map(|z| GroupElement::new(FieldElement::ZERO, FieldElement::ZERO, z)).collect()
    };
    let zb = AbelianBasis::compute(&center, GroupElement::IDENTITY, |x, y| params.multiply(x, y), p)?;
    let degree = {
        let ratio = params.order() / center.len() as u64;
        let r = num_integer::Roots::sqrt(&ratio);
        if r * r != ratio {
            return Err(Error::InvalidTable(format!("|G/Z(G)| = {ratio} is not a square")));
        }
        r
    };
    let derived_gens: Vec<GroupElement> =
        derived.basis().map(|c| GroupElement::new(FieldElement::ZERO, FieldElement::ZERO, c)).collect();
    let class_center: Vec<Option<&[u32]>> = classes
        .iter()
        .map(|c| if c.size == 1 { zb.coordinates(&c.rep) } else { None })
        .collect();
    for (i, lam) in zb.characters().iter().enumerate() {
        let faithful = derived_gens.iter().map(|g| zb.eval(lam, g)).collect::<Result<Vec<_>>>()?;
        if faithful.iter().all(|&e| e == 0) {
            continue;
        }
        raw.push(RawChar {
            degree,
            provenance: format!("vz(lambda={i})"),
            codes: class_center
                .iter()
                .map(|c| c.map_or(ZERO_CODE, |c| zb.eval_coords(lam, c) as u16))
                .collect(),
        });
    }
    CharacterTable::assemble(params, classes, raw)
}

/// Linear characters of a non-VZ group: `psi_v(a)` (family A) or
/// `psi_v(a) psi_w(b)`, with `v` outer.
fn nonvz_linear(params: &GroupParams, classes: &ConjugacyClasses) -> Vec<RawChar> {
    let f = params.field();
    let scale = params.root_order() / params.p();
    let tr = |v: FieldElement, x: FieldElement| AdditiveCharacter::psi(f, v).trace_exponent(f, x).expect("level m");
    let mut out = Vec::new();
    for v in f.elements() {
        if params.family() == Family::A {
            out.push(RawChar {
                degree: 1,
                provenance: format!("linear({})", field_label("v", v)),
                codes: classes.iter().map(|c| (tr(v, c.rep.a) * scale) as u16).collect(),
            });
            continue;
        }
        for w in f.elements() {
            out.push(RawChar {
                degree: 1,
                provenance: format!("linear({},{})", field_label("v", v), field_label("w", w)),
                codes: classes
                    .iter()
                    .map(|c| (((tr(v, c.rep.a) + tr(w, c.rep.b)) % params.p()) * scale) as u16)
                    .collect(),
            });
        }
    }
    out
}

/// Lifts of the faithful characters of one central quotient.
fn lift_quotient(q: &QuotientGroup, classes: &ConjugacyClasses, label: &str) -> Result<Vec<RawChar>> {
    let params = q.params();
    let center = q.center();
    let zb = AbelianBasis::compute(&center, q.identity(), |x, y| q.multiply(x, y), params.p())?;
    let degree = q.vz_degree(center.len() as u64)?;
    let der = q.derived_generator();
    let proj: Vec<Option<&[u32]>> = classes
        .iter()
        .map(|c| {
            let x = q.project(&c.rep);
            if q.is_central(&x) {
                zb.coordinates(&x)
            } else {
                None
            }
        })
        .collect();
    let mut out = Vec::new();
    for (i, lam) in zb.characters().iter().enumerate() {
        if zb.eval(lam, &der)? == 0 {
            continue;
        }
        out.push(RawChar {
            degree,
            provenance: format!("lifted({label},lambda={i})"),
            codes: proj.iter().map(|c| c.map_or(ZERO_CODE, |c| zb.eval_coords(lam, c) as u16)).collect(),
        });
    }
    Ok(out)
}

/// Table of a non-VZ group by lifting from `G_v` (or `G_alpha`), whose
/// derived subgroups have order `p`.
pub fn nonvz_character_table(params: &GroupParams) -> Result<CharacterTable> {
    if params.is_vz() && params.vz_by_structure() {
        return Err(Error::CaseMismatch("group is VZ".into()));
    }
    let classes = params.conjugacy_classes();
    let sets = ParameterSets::new(params);
    let mut raw = nonvz_linear(params, &classes);
    let lifted: Vec<Vec<RawChar>> = if params.family() == Family::C {
        sets.c_labels(params)?
            .into_par_iter()
            .map(|alpha| {
                let label = format!(
                    "{},{}",
                    field_label("v", alpha.v),
                    field_label("w", alpha.w)
                );
                let q = QuotientGroup::mod_char_kernel(params, alpha)?;
                lift_quotient(&q, &classes, &label)
            })
            .collect::<Result<_>>()?
    } else {
        sets.transversal()
            .par_iter()
            .map(|&v| {
                let q = QuotientGroup::mod_hyperplane(params, v)?;
                lift_quotient(&q, &classes, &field_label("v", v))
            })
            .collect::<Result<_>>()?
    };
    raw.extend(lifted.into_iter().flatten());
    CharacterTable::assemble(params, classes, raw)
}

/// The closed-form `(degree, count)` rows, in increasing degree order.
pub fn expected_profile(params: &GroupParams) -> Vec<(u64, u64)> {
    let p = params.p() as u64;
    let (m, n, k) = (params.m(), params.n(), params.k());
    let pm = p.pow(m);
    let pn = p.pow(n);
    let pw = |e: u32| p.pow(e);
    let mut rows: Vec<(u64, u64)> = if params.is_vz() {
        match params.family() {
            Family::A => vec![(1, pw(m + n)), (pn, pm - pn)],
            _ if params.eps_nonzero() => vec![(1, pw(2 * m)), (pm, pm - 1)],
            Family::B => vec![(1, pw(2 * m + n)), (pm, pm - pn)],
            _ => vec![(1, pw(2 * m + n)), (pw(m / 2), pm * (pm - pn))],
        }
    } else {
        let odd = k % 2 == 1;
        let u = (pm - 1) / (pn + 1);
        match params.family() {
            Family::A if odd => vec![(1, pm), (pw((m - n) / 2), pn * (pm - 1))],
            Family::A => vec![(1, pm), (pw(m / 2), pn * u), (pw((m - 2 * n) / 2), pn * pn * u)],
            Family::B | Family::D if odd => vec![(1, pw(2 * m)), (pw(m - n), pn * pn * (pm - 1))],
            Family::B => vec![(1, pw(2 * m)), (pm, pn * u), (pw(m - 2 * n), pw(4 * n) * u)],
            Family::C if odd => vec![(1, pw(2 * m)), (pw((m - n) / 2), pw(m + n) * (pm - 1))],
            Family::C => vec![(1, pw(2 * m)), (pw(m / 2), pw(m + n) * u), (pw((m - 2 * n) / 2), pw(m + 2 * n) * u)],
            Family::D if (k / 2) % 2 == 1 => {
                vec![(1, pw(2 * m)), (pw(m - n), pw(3 * n) * u), (pw(m - 2 * n), pw(4 * n) * u)]
            }
            Family::D => {
                let y = (pn + 1) * (pn * pn + 1);
                let mut r = vec![(1, pw(2 * m))];
                if p == 2 {
                    let x = (pm - 1) / y;
                    r.extend([(pm, pw(3 * n) * x), (pw(m - n), pw(4 * n) * x), (pw(m - 2 * n), pw(5 * n) * x), (pw(m - 3 * n), pw(6 * n) * x)]);
                } else {
                    r.extend([
                        (pm, (pw(3 * n) + 1) * (pm - 1) / y),
                        (pw(m - n), (pn * pn - 1) * (pm - 1) * pw(2 * n) / y),
                        (pw(m - 2 * n), (pn - 1) * (pm - 1) * pw(4 * n) / y),
                        (pw(m - 3 * n), 2 * pw(6 * n) * (pm - 1) / y),
                    ]);
                }
                r
            }
        }
    };
    rows.sort_unstable();
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: Family, p: u32, m: u32, l: u32, e: Option<u32>) -> GroupParams {
        GroupParams::from_spec(f, p, m, l, e).unwrap()
    }

    #[test]
    fn a231_profile() {
        let g = group(Family::A, 2, 3, 1, None);
        let t = character_table(&g).unwrap();
        assert_eq!(t.profile(), vec![(1, 8), (2, 14)]);
        assert_eq!(t.profile(), expected_profile(&g));
        for (i, c) in t.chars().iter().enumerate() {
            assert_eq!(t.value(i, 0).as_integer(), Some(c.degree as i64));
        }
    }

    #[test]
    fn a241_profile() {
        let g = group(Family::A, 2, 4, 1, None);
        let t = character_table(&g).unwrap();
        assert_eq!(t.profile(), vec![(1, 16), (2, 20), (4, 10)]);
    }

    #[test]
    fn vz_profiles() {
        for g in [group(Family::B, 2, 2, 2, Some(1)), group(Family::C, 2, 2, 1, Some(1)), group(Family::D, 2, 2, 1, Some(1))] {
            assert_eq!(character_table(&g).unwrap().profile(), vec![(1, 16), (4, 3)], "{}", g.short_name());
        }
        let g = group(Family::A, 3, 2, 1, None);
        assert_eq!(character_table(&g).unwrap().profile(), vec![(1, 27), (3, 6)]);
        let g = group(Family::C, 2, 2, 1, Some(0));
        assert_eq!(character_table(&g).unwrap().profile(), vec![(1, 32), (2, 8)]);
    }

    #[test]
    fn b_with_eps_and_theta_is_not_vz() {
        // The head (1, x) has a one-dimensional commutator image; two of the
        // three nontrivial characters of Z(G) lie under four characters of
        // degree 2 each.
        let g = group(Family::B, 2, 2, 1, Some(1));
        assert!(g.is_vz() && !g.vz_by_structure());
        let t = character_table(&g).unwrap();
        assert_eq!(t.profile(), vec![(1, 16), (2, 8), (4, 1)]);
        assert_eq!(t.len(), g.conjugacy_classes().len());
    }

    #[test]
    fn closed_profiles() {
        let g = group(Family::B, 2, 4, 1, Some(0));
        assert_eq!(expected_profile(&g), vec![(1, 256), (4, 80), (16, 10)]);
        let g = group(Family::D, 2, 6, 1, Some(0));
        assert_eq!(expected_profile(&g), vec![(1, 4096), (16, 336), (32, 168)]);
        let g = group(Family::D, 2, 4, 1, Some(0));
        assert_eq!(expected_profile(&g), vec![(1, 256), (2, 64), (4, 32), (8, 16), (16, 8)]);
        let g = group(Family::C, 3, 2, 1, Some(0));
        assert_eq!(expected_profile(&g), vec![(1, 243), (3, 54)]);
    }

    #[test]
    fn nonvz_family_profiles() {
        for g in [
            group(Family::B, 2, 3, 1, Some(0)),
            group(Family::C, 2, 3, 1, Some(0)),
            group(Family::D, 2, 4, 1, Some(0)),
        ] {
            let t = character_table(&g).unwrap();
            assert_eq!(t.profile(), expected_profile(&g), "{}", g.short_name());
            assert_eq!(t.len() as u64, g.class_number());
        }
    }

    #[test]
    fn set_value_changes_one_entry() {
        let g = group(Family::A, 2, 2, 1, None);
        let mut t = character_table(&g).unwrap();
        t.set_value(1, 1, CycloNum::from_int(4, 7)).unwrap();
        assert_eq!(t.value(1, 1).as_integer(), Some(7));
        assert_eq!(t.value(0, 1).as_integer(), Some(1));
    }
}
