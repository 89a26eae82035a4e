use proptest::prelude::*;
use suzuki_core::{FieldContext, FieldElement};

fn fields() -> Vec<FieldContext> {
    [(2, 5), (2, 8), (3, 4), (5, 3), (7, 2), (11, 1)]
        .into_iter()
        .map(|(p, m)| FieldContext::new(p, m, None).unwrap())
        .collect()
}

fn el(f: &FieldContext, i: u32) -> FieldElement {
    FieldElement::from_index(i % f.order())
}

proptest! {
    #[test]
    fn ring_axioms(fi in 0usize..6, x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        let f = &fields()[fi];
        let (x, y, z) = (el(f, x), el(f, y), el(f, z));
        prop_assert_eq!(f.add(x, y), f.add(y, x));
        prop_assert_eq!(f.mul(x, y), f.mul(y, x));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), FieldElement::ZERO);
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
        if !x.is_zero() {
            prop_assert_eq!(f.mul(x, f.inv(x)), FieldElement::ONE);
        }
    }

    #[test]
    fn frobenius_and_trace(fi in 0usize..6, x in any::<u32>(), y in any::<u32>(), j in 0u64..8) {
        let f = &fields()[fi];
        let (x, y) = (el(f, x), el(f, y));
        prop_assert_eq!(f.frobenius_power(f.add(x, y), j), f.add(f.frobenius_power(x, j), f.frobenius_power(y, j)));
        prop_assert_eq!(f.frobenius_power(f.mul(x, y), j), f.mul(f.frobenius_power(x, j), f.frobenius_power(y, j)));
        prop_assert_eq!(f.frobenius_power(x, f.m() as u64), x);
        prop_assert_eq!(f.abs_trace(f.add(x, y)), (f.abs_trace(x) + f.abs_trace(y)) % f.p());
        prop_assert_eq!(f.frobenius_power(f.pth_root(x), 1), x);
    }

    #[test]
    fn pow_matches_repeated_multiplication(fi in 0usize..6, x in any::<u32>(), e in 0u64..40) {
        let f = &fields()[fi];
        let x = el(f, x);
        let naive = (0..e).fold(FieldElement::ONE, |acc, _| f.mul(acc, x));
        prop_assert_eq!(f.pow(x, e), naive);
    }
}

#[test]
fn subfield_traces_are_transitive() {
    let f = FieldContext::new(2, 6, None).unwrap();
    for x in f.elements() {
        let t3 = f.trace(x, 3).unwrap();
        assert_eq!(f.subfield_trace(t3, 3).unwrap(), f.abs_trace(x));
        let t2 = f.trace(x, 2).unwrap();
        assert!(f.in_subfield(t2, 2).unwrap());
    }
}
