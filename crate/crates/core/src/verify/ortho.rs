//! Row and column orthogonality, exact in `Z[zeta_N]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Check, CheckMode, CheckResult, Counterexample};
use crate::construct::CharacterTable;
use crate::cyclotomic::CycloNum;
use crate::group::GroupParams;

/// Tables with more characters than this are checked on a sample.
pub const FULL_ORTHOGONALITY_LIMIT: usize = 2000;

/// Number of random pairs checked in sampled mode.
pub const SAMPLE_PAIRS: usize = 100_000;

/// `palette[x] * conj(palette[y])` as group-ring coefficients.
struct ConjProducts {
    n: usize,
    len: usize,
    data: Vec<i64>,
}

impl ConjProducts {
    fn new(table: &CharacterTable) -> Self {
        let pal = table.palette();
        let n = table.root_order() as usize;
        let mut data = Vec::with_capacity(pal.len() * pal.len() * n);
        for x in pal {
            for y in pal {
                data.extend_from_slice((x * &y.conj()).raw_coeffs());
            }
        }
        ConjProducts { n, len: pal.len(), data }
    }

    /// `sum_c w_c a_c conj(b_c)`.
    fn pair_sum(&self, a: &[u16], b: &[u16], weights: Option<&[u64]>) -> CycloNum {
        let mut acc = vec![0i64; self.n];
        for (c, (&x, &y)) in a.iter().zip(b).enumerate() {
            let w = weights.map_or(1, |w| w[c] as i64);
            let off = (x as usize * self.len + y as usize) * self.n;
            for (r, v) in acc.iter_mut().zip(&self.data[off..off + self.n]) {
                *r += w * v;
            }
        }
        CycloNum::from_coeffs(self.n as u32, &acc)
    }
}

/// Deterministic seed derived from the group parameters.
pub(crate) fn instance_seed(params: &GroupParams) -> u64 {
    let eps = params.epsilon().map_or(0, |e| e.index() as u64 + 1);
    (params.family().letter() as u64) << 56
        ^ (params.p() as u64) << 40
        ^ (params.m() as u64) << 32
        ^ (params.l() as u64) << 24
        ^ eps
}

/// Index pairs to test: every pair, or the identity row, the diagonal and a
/// seeded random sample.
fn pairs(k: usize, seed: u64) -> (CheckMode, Vec<(usize, usize)>) {
    if k <= FULL_ORTHOGONALITY_LIMIT {
        let all = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        return (CheckMode::Full, all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(usize, usize)> = (0..k).map(|j| (0, j)).chain((1..k).map(|i| (i, i))).collect();
    for _ in 0..SAMPLE_PAIRS {
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        out.push((i.min(j), i.max(j)));
    }
    (CheckMode::Sampled, out)
}

fn run(
    check: Check,
    rows: &[&[u16]],
    products: &ConjProducts,
    weights: Option<&[u64]>,
    seed: u64,
    expected: impl Fn(usize) -> i64 + Sync,
    index_is_char: bool,
) -> CheckResult {
    let (mode, pairs) = pairs(rows.len(), seed);
    let n = products.n as u32;
    let bad = pairs.par_iter().find_first(|&&(i, j)| {
        let want = if i == j { expected(i) } else { 0 };
        products.pair_sum(rows[i], rows[j], weights) != CycloNum::from_int(n, want)
    });
    match bad {
        None => CheckResult::pass(check, mode, format!("{} pairs", pairs.len())),
        Some(&(i, j)) => {
            let want = if i == j { expected(i) } else { 0 };
            let residual = &products.pair_sum(rows[i], rows[j], weights) - &CycloNum::from_int(n, want);
            let cx = if index_is_char {
                Counterexample { chars: vec![i, j], classes: vec![], residual: residual.to_string() }
            } else {
                Counterexample { chars: vec![], classes: vec![i, j], residual: residual.to_string() }
            };
            CheckResult::fail(check, mode, "orthogonality relation violated", Some(cx))
        }
    }
}

/// `sum_C |C| chi_i(g_C) conj(chi_j(g_C)) = |G| delta_ij`.
pub fn first_orthogonality(table: &CharacterTable) -> CheckResult {
    let products = ConjProducts::new(table);
    let sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
    let rows: Vec<&[u16]> = table.chars().iter().map(|c| c.values.as_slice()).collect();
    let order = table.params().order() as i64;
    run(Check::Orth1, &rows, &products, Some(&sizes), instance_seed(table.params()), |_| order, true)
}

/// `sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |G| / |C_i|`.
pub fn second_orthogonality(table: &CharacterTable) -> CheckResult {
    let products = ConjProducts::new(table);
    let k = table.classes().len();
    let columns: Vec<Vec<u16>> = (0..k).map(|j| table.chars().iter().map(|c| c.values[j]).collect()).collect();
    let cols: Vec<&[u16]> = columns.iter().map(Vec::as_slice).collect();
    let order = table.params().order();
    let sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
    let seed = instance_seed(table.params()) ^ 0x5eed;
    run(Check::Orth2, &cols, &products, None, seed, |i| (order / sizes[i]) as i64, false)
}
