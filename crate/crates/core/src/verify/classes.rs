//! Conjugacy classes by orbit enumeration.

use super::{Check, CheckMode, CheckResult, Counterexample};
use crate::group::GroupParams;

/// Largest `|G|` for which orbits are enumerated.
pub const BRUTE_FORCE_LIMIT: u64 = 4096;

/// Conjugates every element by every element and compares the resulting
/// partition with the structural classes.
pub fn brute_force_classes(params: &GroupParams) -> CheckResult {
    let order = params.order();
    if order > BRUTE_FORCE_LIMIT {
        return CheckResult::not_run(Check::Classes, format!("|G| = {order} exceeds {BRUTE_FORCE_LIMIT}"));
    }
    let elements: Vec<_> = params.elements().collect();
    let inverses: Vec<_> = elements.iter().map(|h| params.inverse(h)).collect();
    let structural = params.conjugacy_classes();
    let mut orbit_of = vec![u32::MAX; elements.len()];
    let mut orbits = 0u32;
    for (gi, g) in elements.iter().enumerate() {
        if orbit_of[gi] != u32::MAX {
            continue;
        }
        let class = structural.class_of(params, g);
        let mut size = 0u64;
        for (h, hinv) in elements.iter().zip(&inverses) {
            let c = params.multiply(&params.multiply(h, g), hinv);
            let ci = params.element_index(&c) as usize;
            if orbit_of[ci] == u32::MAX {
                orbit_of[ci] = orbits;
                size += 1;
                if structural.class_of(params, &c) != class {
                    let cx = Counterexample { chars: vec![], classes: vec![class], residual: format!("conjugate {c:?} of {g:?}") };
                    return CheckResult::fail(Check::Classes, CheckMode::Full, "orbit leaves its structural class", Some(cx));
                }
            }
        }
        if size != structural.get(class).size {
            let cx = Counterexample {
                chars: vec![],
                classes: vec![class],
                residual: format!("orbit size {size}, class size {}", structural.get(class).size),
            };
            return CheckResult::fail(Check::Classes, CheckMode::Full, "orbit size differs", Some(cx));
        }
        orbits += 1;
    }
    if orbits as usize != structural.len() {
        return CheckResult::fail(
            Check::Classes,
            CheckMode::Full,
            format!("{orbits} orbits, {} structural classes", structural.len()),
            None,
        );
    }
    CheckResult::pass(Check::Classes, CheckMode::Full, format!("{orbits} orbits"))
}
