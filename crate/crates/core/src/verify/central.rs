//! The central-character test: `omega_chi(K) = |K| chi(g_K) / chi(1)` must
//! be an algebra homomorphism on the class algebra with integral values.

use rayon::prelude::*;

use super::{Check, CheckMode, CheckResult, Counterexample, CENTRAL_CHECK_LIMIT};
use crate::construct::CharacterTable;
use crate::cyclotomic::{CycloNum, CycloRat};
use crate::group::GroupElement;

/// `b_ijk = #{y in C_j : g_i y in C_k}` for `i <= j`, stored sparsely.
struct ClassConstants {
    entries: Vec<(u32, u32, Vec<(u32, u32)>)>,
}

impl ClassConstants {
    fn new(table: &CharacterTable) -> Self {
        let params = table.params();
        let classes = table.classes();
        let k = classes.len();
        let members: Vec<Vec<GroupElement>> = (0..k).map(|j| classes.members(params, j)).collect();
        let entries = (0..k)
            .into_par_iter()
            .flat_map_iter(|i| {
                let gi = classes.get(i).rep;
                let mut counts = vec![0u32; k];
                let mut touched = Vec::new();
                let mut out = Vec::with_capacity(k - i);
                for (j, mem) in members.iter().enumerate().skip(i) {
                    for y in mem {
                        let c = classes.class_of(params, &params.multiply(&gi, y));
                        if counts[c] == 0 {
                            touched.push(c);
                        }
                        counts[c] += 1;
                    }
                    touched.sort_unstable();
                    let row = touched.iter().map(|&c| (c as u32, counts[c])).collect();
                    for &c in &touched {
                        counts[c] = 0;
                    }
                    touched.clear();
                    out.push((i as u32, j as u32, row));
                }
                out
            })
            .collect();
        ClassConstants { entries }
    }
}

pub fn central_character_check(table: &CharacterTable) -> CheckResult {
    let params = table.params();
    if params.order() > CENTRAL_CHECK_LIMIT {
        return CheckResult::not_run(Check::Central, format!("|G| = {} exceeds {CENTRAL_CHECK_LIMIT}", params.order()));
    }
    let n = table.root_order() as usize;
    let pal = table.palette();
    let sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();

    // Integrality of omega.
    for (x, ch) in table.chars().iter().enumerate() {
        for (c, &v) in ch.values.iter().enumerate() {
            let w = CycloRat::new(pal[v as usize].scale(sizes[c] as i64), ch.degree as i64);
            if !w.is_integral() {
                let cx = Counterexample { chars: vec![x], classes: vec![c], residual: w.numerator().to_string() };
                return CheckResult::fail(Check::Central, CheckMode::Full, "central character value is not integral", Some(cx));
            }
        }
    }

    let consts = ClassConstants::new(table);
    let raw: Vec<&[i64]> = pal.iter().map(|v| v.raw_coeffs()).collect();
    let products: Vec<Vec<Vec<i64>>> =
        pal.iter().map(|x| pal.iter().map(|y| (x * y).raw_coeffs().to_vec()).collect()).collect();
    let bad = table.chars().par_iter().enumerate().find_map_first(|(x, ch)| {
        let vals = &ch.values;
        let deg = ch.degree as i64;
        let mut acc = vec![0i64; n];
        for (i, j, row) in &consts.entries {
            let (i, j) = (*i as usize, *j as usize);
            acc.iter_mut().for_each(|a| *a = 0);
            for &(c, cnt) in row {
                for (a, v) in acc.iter_mut().zip(raw[vals[c as usize] as usize]) {
                    *a += cnt as i64 * v;
                }
            }
            let lhs = &products[vals[i] as usize][vals[j] as usize];
            for (a, l) in acc.iter_mut().zip(lhs) {
                *a = l * sizes[j] as i64 - deg * *a;
            }
            if !is_zero_raw(&acc) {
                let residual = CycloNum::from_coeffs(n as u32, &acc).to_string();
                return Some(Counterexample { chars: vec![x], classes: vec![i, j], residual });
            }
        }
        None
    });
    match bad {
        None => CheckResult::pass(
            Check::Central,
            CheckMode::Full,
            format!("{} class pairs per character", consts.entries.len()),
        ),
        Some(cx) => CheckResult::fail(Check::Central, CheckMode::Full, "central character is not multiplicative", Some(cx)),
    }
}

/// Whether group-ring coefficients represent 0 in `Z[zeta_N]`.
fn is_zero_raw(c: &[i64]) -> bool {
    if c.len() == 4 {
        c[0] == c[2] && c[1] == c[3]
    } else {
        c.iter().all(|&x| x == c[0])
    }
}
