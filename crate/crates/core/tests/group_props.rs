use proptest::prelude::*;
use suzuki_core::{Family, FieldElement, GroupElement, GroupParams, QuotientGroup};

fn groups() -> Vec<GroupParams> {
    [
        (Family::A, 2, 4, 1, None),
        (Family::A, 3, 3, 1, None),
        (Family::B, 2, 3, 1, Some(0)),
        (Family::B, 3, 2, 1, Some(1)),
        (Family::C, 2, 3, 1, Some(0)),
        (Family::C, 2, 3, 2, Some(1)),
        (Family::C, 3, 2, 1, Some(0)),
        (Family::D, 2, 4, 1, Some(0)),
        (Family::D, 2, 3, 1, Some(2)),
    ]
    .into_iter()
    .map(|(f, p, m, l, e)| GroupParams::from_spec(f, p, m, l, e).unwrap())
    .collect()
}

fn element(g: &GroupParams, i: u64) -> GroupElement {
    g.element_at(i % g.order())
}

proptest! {
    #[test]
    fn group_axioms(gi in 0usize..9, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let g = &groups()[gi];
        let (x, y, z) = (element(g, x), element(g, y), element(g, z));
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
        prop_assert_eq!(g.multiply(&x, &g.inverse(&x)), GroupElement::IDENTITY);
        prop_assert_eq!(g.multiply(&GroupElement::IDENTITY, &x), x);
    }

    #[test]
    fn commutators_follow_the_closed_form(gi in 0usize..9, x in any::<u64>(), y in any::<u64>()) {
        let g = &groups()[gi];
        let (x, y) = (element(g, x), element(g, y));
        prop_assert_eq!(g.commutator(&x, &y), g.commutator_by_law(&x, &y));
        prop_assert!(g.in_derived(&g.commutator(&x, &y)));
    }

    #[test]
    fn conjugates_stay_in_their_class(gi in 0usize..9, x in any::<u64>(), y in any::<u64>()) {
        let g = &groups()[gi];
        let (x, y) = (element(g, x), element(g, y));
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.class_of(g, &x), classes.class_of(g, &g.conjugate(&x, &y)));
    }

    #[test]
    fn index_round_trip(gi in 0usize..9, i in any::<u64>()) {
        let g = &groups()[gi];
        let x = element(g, i);
        prop_assert_eq!(g.element_at(g.element_index(&x)), x);
        prop_assert_eq!(g.from_coordinates(&g.coordinates(&x)).unwrap(), x);
    }

    #[test]
    fn projection_is_a_homomorphism(x in any::<u64>(), y in any::<u64>(), v in 1u32..16) {
        let g = GroupParams::from_spec(Family::D, 2, 4, 1, Some(0)).unwrap();
        let q = QuotientGroup::mod_hyperplane(&g, FieldElement::from_index(v)).unwrap();
        let (x, y) = (element(&g, x), element(&g, y));
        prop_assert_eq!(q.project(&g.multiply(&x, &y)), q.multiply(&q.project(&x), &q.project(&y)));
    }
}

#[test]
fn class_sizes_partition_the_group() {
    for g in groups() {
        let classes = g.conjugacy_classes();
        let total: u64 = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, g.order(), "{}", g.short_name());
    }
}
