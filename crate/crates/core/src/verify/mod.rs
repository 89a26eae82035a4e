//! Independent verification of a finished [`CharacterTable`].
//!
//! Every check is exact. Checks only consume the table; the closed-form
//! cross-check rebuilds its own characters from the explicit formulas.

mod central;
pub mod lemmas;
mod classes;
mod closed;
mod ortho;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::construct::{expected_profile, CharacterTable};
use crate::error::{Error, Result};
use crate::group::GroupParams;

pub use central::central_character_check;
pub use classes::{brute_force_classes, BRUTE_FORCE_LIMIT};
pub use closed::{closed_form_crosscheck, closed_form_families, ClosedFamily};
pub use ortho::{first_orthogonality, second_orthogonality, FULL_ORTHOGONALITY_LIMIT, SAMPLE_PAIRS};

/// Largest `|G|` for which class multiplication constants are computed.
pub const CENTRAL_CHECK_LIMIT: u64 = 1 << 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Orth1,
    Orth2,
    Central,
    Profile,
    Classes,
    ClosedForm,
}

impl Check {
    pub const ALL: [Check; 6] = [Check::Orth1, Check::Orth2, Check::Central, Check::Profile, Check::Classes, Check::ClosedForm];

    pub fn name(self) -> &'static str {
        match self {
            Check::Orth1 => "orth1",
            Check::Orth2 => "orth2",
            Check::Central => "central",
            Check::Profile => "profile",
            Check::Classes => "classes",
            Check::ClosedForm => "closedform",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotRun,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotRun => "not-run",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Full,
    Sampled,
}

impl CheckMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckMode::Full => "full",
            CheckMode::Sampled => "sampled",
        }
    }
}

/// Where a check failed: character and class indices plus the exact
/// residual (computed minus expected).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub chars: Vec<usize>,
    pub classes: Vec<usize>,
    pub residual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chars {:?}, classes {:?}, residual {}", self.chars, self.classes, self.residual)
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: Check,
    pub status: CheckStatus,
    pub mode: CheckMode,
    pub detail: String,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u128,
}

impl CheckResult {
    fn pass(check: Check, mode: CheckMode, detail: impl Into<String>) -> Self {
        CheckResult { check, status: CheckStatus::Pass, mode, detail: detail.into(), counterexample: None, elapsed_ms: 0 }
    }

    fn fail(check: Check, mode: CheckMode, detail: impl Into<String>, cx: Option<Counterexample>) -> Self {
        CheckResult { check, status: CheckStatus::Fail, mode, detail: detail.into(), counterexample: cx, elapsed_ms: 0 }
    }

    fn not_run(check: Check, detail: impl Into<String>) -> Self {
        CheckResult {
            check,
            status: CheckStatus::NotRun,
            mode: CheckMode::Full,
            detail: detail.into(),
            counterexample: None,
            elapsed_ms: 0,
        }
    }
}

/// Results of a verification run, one entry per requested check.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// No check failed (checks that did not run are not failures).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    pub fn get(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Runs `checks` on `table`, using a pool of `threads` workers if given.
pub fn verify(table: &CharacterTable, checks: &[Check], threads: Option<usize>) -> Result<VerificationReport> {
    let run = || {
        let mut report = VerificationReport::default();
        for &c in checks {
            let start = Instant::now();
            let mut r = match c {
                Check::Orth1 => first_orthogonality(table),
                Check::Orth2 => second_orthogonality(table),
                Check::Central => central_character_check(table),
                Check::Profile => profile_check(table),
                Check::Classes => brute_force_classes(table.params()),
                Check::ClosedForm => closed_form_crosscheck(table),
            };
            r.elapsed_ms = start.elapsed().as_millis();
            report.checks.push(r);
        }
        report
    };
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

/// Counts and degrees: `|Irr(G)| = k(G)`, the degree multiset matches the
/// closed form, `|Lin(G)| = |G/G'|`, `sum chi(1)^2 = |G|`, and each
/// character's identity value is its degree.
pub fn profile_check(table: &CharacterTable) -> CheckResult {
    let params: &GroupParams = table.params();
    let mode = CheckMode::Full;
    let k = params.class_number();
    if table.len() as u64 != k || table.classes().len() as u64 != k {
        return CheckResult::fail(
            Check::Profile,
            mode,
            format!("{} characters and {} classes, expected k(G) = {k}", table.len(), table.classes().len()),
            None,
        );
    }
    for (i, c) in table.chars().iter().enumerate() {
        if table.value(i, 0).as_integer() != Some(c.degree as i64) {
            let cx = Counterexample { chars: vec![i], classes: vec![0], residual: table.value(i, 0).to_string() };
            return CheckResult::fail(Check::Profile, mode, "identity value differs from degree", Some(cx));
        }
    }
    let got = table.profile();
    let want = expected_profile(params);
    if got != want {
        return CheckResult::fail(Check::Profile, mode, format!("profile {got:?}, expected {want:?}"), None);
    }
    let linear = table.chars().iter().filter(|c| c.degree == 1).count() as u64;
    let abel = params.order() / params.derived_order();
    if linear != abel {
        return CheckResult::fail(Check::Profile, mode, format!("{linear} linear characters, |G/G'| = {abel}"), None);
    }
    let sum: u64 = table.chars().iter().map(|c| c.degree * c.degree).sum();
    if sum != params.order() {
        return CheckResult::fail(Check::Profile, mode, format!("sum of squared degrees {sum} != |G|"), None);
    }
    CheckResult::pass(Check::Profile, mode, format!("k(G) = {k}, profile {got:?}"))
}
