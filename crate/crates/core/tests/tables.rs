use std::collections::HashSet;

use suzuki_core::{character_table, expected_profile, Family, FieldElement, GroupElement, GroupParams, ParameterSets, QuotientGroup};

fn group(f: Family, p: u32, m: u32, l: u32, e: Option<u32>) -> GroupParams {
    GroupParams::from_spec(f, p, m, l, e).unwrap()
}

#[test]
fn vz_predicate_matches_structure() {
    let cases = [
        (group(Family::A, 2, 2, 1, None), true),
        (group(Family::A, 2, 3, 1, None), false),
        (group(Family::B, 2, 3, 1, Some(0)), false),
        (group(Family::C, 2, 2, 1, Some(0)), true),
        (group(Family::C, 2, 3, 1, Some(1)), true),
        (group(Family::D, 2, 2, 1, Some(0)), true),
        (group(Family::D, 2, 4, 1, Some(0)), false),
        (group(Family::B, 2, 3, 3, Some(1)), true),
    ];
    for (g, vz) in cases {
        assert_eq!(g.is_vz(), vz, "{}", g.short_name());
        assert_eq!(g.vz_by_structure(), vz, "{}", g.short_name());
    }
}

#[test]
fn quotient_centres_follow_the_case_table() {
    for g in [
        group(Family::A, 2, 3, 1, None),
        group(Family::A, 2, 4, 1, None),
        group(Family::A, 3, 4, 1, None),
        group(Family::B, 2, 4, 1, Some(0)),
        group(Family::D, 2, 4, 1, Some(0)),
        group(Family::D, 2, 6, 1, Some(0)),
    ] {
        let sets = ParameterSets::new(&g);
        for &v in sets.transversal() {
            let q = QuotientGroup::mod_hyperplane(&g, v).unwrap();
            assert_eq!(q.center().len() as u64, sets.expected_quotient_center(&g, v), "{} v={}", g.short_name(), v.index());
        }
    }
    let g = group(Family::C, 2, 4, 1, Some(0));
    let sets = ParameterSets::new(&g);
    for al in sets.c_labels(&g).unwrap() {
        let v = al.v;
        let q = QuotientGroup::mod_char_kernel(&g, al).unwrap();
        assert_eq!(q.center().len() as u64, sets.expected_quotient_center(&g, v));
    }
}

#[test]
fn values_are_bounded_by_the_degree_and_rows_distinct() {
    for g in [group(Family::A, 3, 3, 1, None), group(Family::C, 2, 3, 1, Some(0)), group(Family::D, 2, 3, 1, Some(0))] {
        let t = character_table(&g).unwrap();
        for (i, c) in t.chars().iter().enumerate() {
            for j in 0..t.classes().len() {
                let n = t.value(i, j).norm_sq().unwrap();
                assert!(n as u64 <= c.degree * c.degree);
            }
        }
        let rows: HashSet<&Vec<u16>> = t.chars().iter().map(|c| &c.values).collect();
        assert_eq!(rows.len(), t.len());
        assert_eq!(t.profile(), expected_profile(&g));
    }
}

#[test]
fn lifted_characters_are_trivial_on_their_kernel() {
    let g = group(Family::A, 2, 4, 1, None);
    let t = character_table(&g).unwrap();
    let f = g.field();
    let classes = t.classes();
    for (i, c) in t.chars().iter().enumerate() {
        let Some(rest) = c.provenance.strip_prefix("lifted(v=") else { continue };
        let v = FieldElement::from_index(rest.split(',').next().unwrap().parse().unwrap());
        let kernel: Vec<FieldElement> = f.elements().filter(|&z| f.abs_trace(f.mul(v, z)) == 0).collect();
        for x in g.elements() {
            let base = t.value(i, classes.class_of(&g, &x));
            for &z in &kernel {
                let y = g.multiply(&x, &GroupElement::pair(FieldElement::ZERO, z));
                assert_eq!(t.value(i, classes.class_of(&g, &y)), base);
            }
        }
    }
}

#[test]
fn linear_characters_are_homomorphisms() {
    let g = group(Family::B, 2, 3, 1, Some(0));
    let t = character_table(&g).unwrap();
    let classes = t.classes();
    let els: Vec<_> = g.elements().step_by(7).collect();
    for i in (0..t.len()).filter(|&i| t.chars()[i].degree == 1).take(12) {
        for x in &els {
            for y in &els {
                let xy = t.value(i, classes.class_of(&g, &g.multiply(x, y)));
                let prod = t.value(i, classes.class_of(&g, x)) * t.value(i, classes.class_of(&g, y));
                assert_eq!(*xy, prod);
            }
        }
    }
}
