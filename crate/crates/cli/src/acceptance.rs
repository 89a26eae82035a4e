//! The acceptance corpus and its eight criteria.
//!
//! Each criterion collects per-instance failures. A failure listed in
//! [`KNOWN_DEVIATIONS`] is still reported as a failure; the list only lets
//! callers tell an expected outcome from a regression.

use std::time::Instant;

use suzuki_core::verify::lemmas::{f_map_lemmas, gcd_lemma, q_form_identity};
use suzuki_core::{
    character_table, verify, CharacterTable, Check, CheckMode, CheckStatus, Family, GroupParams, ParameterSets,
    VerificationReport,
};

use crate::document::TableDocument;

/// `(family, p, m, l, epsilon index)`.
pub const CORPUS: [(Family, u32, u32, u32, Option<u32>); 15] = [
    (Family::A, 2, 2, 1, None),
    (Family::A, 2, 3, 1, None),
    (Family::A, 2, 4, 1, None),
    (Family::A, 3, 2, 1, None),
    (Family::A, 3, 3, 1, None),
    (Family::B, 2, 2, 1, Some(1)),
    (Family::B, 2, 3, 1, Some(0)),
    (Family::B, 2, 4, 1, Some(0)),
    (Family::C, 2, 2, 1, Some(0)),
    (Family::C, 2, 3, 1, Some(0)),
    (Family::C, 2, 4, 1, Some(0)),
    (Family::C, 3, 2, 1, Some(0)),
    (Family::D, 2, 3, 1, Some(0)),
    (Family::D, 2, 4, 1, Some(0)),
    (Family::D, 2, 6, 1, Some(0)),
];

/// Instances whose closed-form character families are compared with the
/// generic construction.
pub const CLOSED_FORM_INSTANCES: [&str; 6] = ["A_2(2,1)", "A_2(3,1)", "A_2(4,1)", "A_3(3,1)", "C_2(2,1,0)", "C_3(2,1,0)"];

const CLASS_NUMBERS: [(&str, usize); 5] =
    [("A_2(3,1)", 22), ("B_2(3,1,0)", 92), ("B_2(4,1,0)", 346), ("D_2(4,1,0)", 376), ("D_2(6,1,0)", 4600)];

const PROFILES: [(&str, &[(u64, u64)]); 3] = [
    ("A_2(4,1)", &[(1, 16), (2, 20), (4, 10)]),
    ("D_2(4,1,0)", &[(1, 256), (2, 64), (4, 32), (8, 16), (16, 8)]),
    ("C_3(2,1,0)", &[(1, 243), (3, 54)]),
];

/// An expected failure: the criterion, the instance and why.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub criterion: u8,
    pub instance: &'static str,
    pub reason: &'static str,
}

const B_NOT_VZ: &str = "B_2(2,1,1) is not a VZ-group (the head (1,x) has a commutator image of order 2); \
    it has 25 classes and degrees {1x16, 2x8, 4x1}, while the VZ closed forms give 19 and {1x16, 4x3}";

pub const KNOWN_DEVIATIONS: [Deviation; 3] = [
    Deviation { criterion: 1, instance: "B_2(2,1,1)", reason: B_NOT_VZ },
    Deviation { criterion: 2, instance: "B_2(2,1,1)", reason: B_NOT_VZ },
    Deviation { criterion: 7, instance: "B_2(2,1,1)", reason: B_NOT_VZ },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFailure {
    pub instance: String,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub failures: Vec<InstanceFailure>,
    pub summary: String,
    pub elapsed_ms: u128,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn known(&self, f: &InstanceFailure) -> Option<&'static Deviation> {
        KNOWN_DEVIATIONS.iter().find(|d| d.criterion == self.id && d.instance == f.instance)
    }

    /// Failures not covered by [`KNOWN_DEVIATIONS`].
    pub fn unexpected(&self) -> Vec<&InstanceFailure> {
        self.failures.iter().filter(|f| self.known(f).is_none()).collect()
    }

    /// The one-line report.
    pub fn line(&self) -> String {
        let secs = self.elapsed_ms as f64 / 1000.0;
        if self.passed() {
            return format!("PASS [{}] {}: {} ({secs:.1}s)", self.id, self.title, self.summary);
        }
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|f| match self.known(f) {
                Some(d) => format!("{}: {} [known deviation: {}]", f.instance, f.message, d.reason),
                None => format!("{}: {}", f.instance, f.message),
            })
            .collect();
        format!("FAIL [{}] {}: {} ({secs:.1}s)", self.id, self.title, parts.join("; "))
    }
}

struct Prepared {
    name: String,
    params: GroupParams,
    table: CharacterTable,
    report: VerificationReport,
}

fn prepare(threads: Option<usize>) -> Result<Vec<Prepared>, String> {
    CORPUS
        .iter()
        .map(|&(f, p, m, l, e)| {
            let params = GroupParams::from_spec(f, p, m, l, e).map_err(|e| e.to_string())?;
            let name = params.short_name();
            let table = character_table(&params).map_err(|e| format!("{name}: {e}"))?;
            let report = verify(&table, &Check::ALL, threads).map_err(|e| format!("{name}: {e}"))?;
            Ok(Prepared { name, params, table, report })
        })
        .collect()
}

fn status_failure(r: &Prepared, check: Check) -> Option<String> {
    let c = r.report.get(check)?;
    match c.status {
        CheckStatus::Fail => Some(match &c.counterexample {
            Some(cx) => format!("{check}: {} ({cx})", c.detail),
            None => format!("{check}: {}", c.detail),
        }),
        _ => None,
    }
}

struct Builder {
    id: u8,
    title: &'static str,
    failures: Vec<InstanceFailure>,
}

impl Builder {
    fn new(id: u8, title: &'static str) -> Self {
        Builder { id, title, failures: Vec::new() }
    }

    fn fail(&mut self, instance: &str, message: impl Into<String>) {
        self.failures.push(InstanceFailure { instance: instance.to_string(), message: message.into() });
    }

    fn finish(self, summary: String, start: Instant, shared_ms: u128) -> CriterionOutcome {
        CriterionOutcome {
            id: self.id,
            title: self.title,
            failures: self.failures,
            summary,
            elapsed_ms: start.elapsed().as_millis() + shared_ms,
        }
    }
}

fn check_ms<'a>(runs: impl IntoIterator<Item = &'a Prepared>, checks: &[Check]) -> u128 {
    runs.into_iter()
        .flat_map(|r| r.report.checks.iter())
        .filter(|c| checks.contains(&c.check))
        .map(|c| c.elapsed_ms)
        .sum()
}

fn class_numbers(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(1, "class numbers");
    let mut brute = 0;
    for r in runs {
        let structural = r.table.classes().len() as u64;
        let closed = r.params.class_number();
        if structural != closed {
            b.fail(&r.name, format!("structural {structural}, closed form {closed}"));
        }
        if let Some(m) = status_failure(r, Check::Classes) {
            b.fail(&r.name, m);
        }
        match r.report.get(Check::Classes).map(|c| c.status) {
            Some(CheckStatus::Pass) => brute += 1,
            Some(CheckStatus::Fail) => {}
            _ if r.params.order() <= suzuki_core::verify::BRUTE_FORCE_LIMIT => {
                b.fail(&r.name, "brute-force oracle did not run")
            }
            _ => {}
        }
    }
    for (name, k) in CLASS_NUMBERS {
        match runs.iter().find(|r| r.name == name) {
            Some(r) if r.table.classes().len() == k => {}
            Some(r) => b.fail(name, format!("k(G) = {}, expected {k}", r.table.classes().len())),
            None => b.fail(name, "missing from corpus"),
        }
    }
    let summary = format!("{} instances, {brute} confirmed by brute force", runs.len());
    b.finish(summary, start, check_ms(runs, &[Check::Classes]))
}

fn profiles(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(2, "degree profiles");
    for r in runs {
        if let Some(m) = status_failure(r, Check::Profile) {
            b.fail(&r.name, m);
        }
    }
    for (name, want) in PROFILES {
        match runs.iter().find(|r| r.name == name) {
            Some(r) if r.table.profile() == want => {}
            Some(r) => b.fail(name, format!("profile {:?}, expected {want:?}", r.table.profile())),
            None => b.fail(name, "missing from corpus"),
        }
    }
    b.finish(format!("{} instances", runs.len()), start, check_ms(runs, &[Check::Profile]))
}

fn orthogonality(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(3, "orthogonality");
    let mut sampled = Vec::new();
    for r in runs {
        for check in [Check::Orth1, Check::Orth2] {
            let Some(c) = r.report.get(check) else { continue };
            match c.status {
                CheckStatus::Pass => {}
                CheckStatus::Fail => b.fail(&r.name, status_failure(r, check).unwrap_or_default()),
                CheckStatus::NotRun => b.fail(&r.name, format!("{check} did not run")),
            }
            let want = if r.table.len() > suzuki_core::verify::FULL_ORTHOGONALITY_LIMIT {
                CheckMode::Sampled
            } else {
                CheckMode::Full
            };
            if c.mode != want {
                b.fail(&r.name, format!("{check} ran in {} mode", c.mode.as_str()));
            }
            if c.mode == CheckMode::Sampled && check == Check::Orth1 {
                sampled.push(r.name.clone());
            }
        }
    }
    if !sampled.iter().any(|s| s == "D_2(6,1,0)") {
        b.fail("D_2(6,1,0)", "expected sampled mode");
    }
    let summary = format!("{} instances, sampled: {}", runs.len(), sampled.join(", "));
    b.finish(summary, start, check_ms(runs, &[Check::Orth1, Check::Orth2]))
}

fn central(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(4, "central characters");
    let mut ran = 0;
    for r in runs {
        let limit = r.params.order() <= suzuki_core::verify::CENTRAL_CHECK_LIMIT;
        match r.report.get(Check::Central).map(|c| c.status) {
            Some(CheckStatus::Pass) => ran += 1,
            Some(CheckStatus::Fail) => b.fail(&r.name, status_failure(r, Check::Central).unwrap_or_default()),
            _ if limit => b.fail(&r.name, "central check did not run"),
            _ => {}
        }
    }
    b.finish(format!("{ran} instances with |G| <= 8192"), start, check_ms(runs, &[Check::Central]))
}

fn parameter_sets(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(5, "parameter-set cardinalities");
    for r in runs {
        let got = ParameterSets::new(&r.params).counts();
        let want = ParameterSets::expected_counts(&r.params);
        if got != want {
            b.fail(&r.name, format!("enumerated {got:?}, closed form {want:?}"));
        }
    }
    let mut quad = None;
    if let Some(r) = runs.iter().find(|r| r.name == "D_2(4,1,0)") {
        let c = ParameterSets::new(&r.params).counts();
        let q = (c.s2_j2, c.s1_j2, c.s2_j1, c.s1_j1);
        if q != (1, 4, 2, 8) {
            b.fail(&r.name, format!("quadruple {q:?}, expected (1, 4, 2, 8)"));
        }
        quad = Some(q);
    }
    let quad = quad.map_or_else(|| "missing".to_string(), |q| format!("{q:?}"));
    b.finish(format!("{} instances, D_2(4,1,0) quadruple {quad}", runs.len()), start, 0)
}

fn is_closed_form(r: &Prepared) -> bool {
    CLOSED_FORM_INSTANCES.contains(&r.name.as_str())
}

fn closed_forms(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(6, "closed-form families");
    for name in CLOSED_FORM_INSTANCES {
        match runs.iter().find(|r| r.name == name) {
            Some(r) => {
                if let Some(m) = status_failure(r, Check::ClosedForm) {
                    b.fail(name, m);
                }
            }
            None => b.fail(name, "missing from corpus"),
        }
    }
    let ms = check_ms(runs.iter().filter(|r| is_closed_form(r)), &[Check::ClosedForm]);
    b.finish(format!("{} instances", CLOSED_FORM_INSTANCES.len()), start, ms)
}

fn properties(runs: &[Prepared]) -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(7, "property suites");
    for r in runs.iter().filter(|r| !is_closed_form(r)) {
        if let Some(m) = status_failure(r, Check::ClosedForm) {
            b.fail(&r.name, m);
        }
    }
    for r in 1..=8 {
        if let Err(e) = q_form_identity(r) {
            b.fail("Q-form", e);
        }
    }
    for p in [2, 3, 5] {
        for m in 1..=12 {
            if let Err(e) = gcd_lemma(p, m) {
                b.fail("gcd lemma", e);
            }
        }
    }
    for (p, max_m) in [(2, 6), (3, 6), (5, 3), (7, 2)] {
        for m in 2..=max_m {
            if let Err(e) = f_map_lemmas(p, m) {
                b.fail("f-map lemmas", e);
            }
        }
    }
    let others = runs.len() - CLOSED_FORM_INSTANCES.len();
    let summary = format!("VZ vanishing and quotient centres on {others} further instances, field lemmas");
    b.finish(summary, start, check_ms(runs.iter().filter(|r| !is_closed_form(r)), &[Check::ClosedForm]))
}

fn determinism() -> CriterionOutcome {
    let start = Instant::now();
    let mut b = Builder::new(8, "determinism");
    for (f, p, m, l, e) in [(Family::A, 2, 3, 1, None), (Family::B, 2, 3, 1, Some(0)), (Family::D, 2, 4, 1, Some(0))] {
        let render = || -> Result<(String, String), String> {
            let params = GroupParams::from_spec(f, p, m, l, e).map_err(|e| e.to_string())?;
            let doc = TableDocument::from_table(&character_table(&params).map_err(|e| e.to_string())?);
            Ok((doc.to_json(), doc.to_csv()))
        };
        let name = GroupParams::from_spec(f, p, m, l, e).map(|g| g.short_name()).unwrap_or_default();
        match (render(), render()) {
            (Ok(x), Ok(y)) if x == y => {}
            (Ok(_), Ok(_)) => b.fail(&name, "documents differ between runs"),
            (Err(e), _) | (_, Err(e)) => b.fail(&name, e),
        }
    }
    b.finish("JSON and CSV byte-identical across runs".into(), start, 0)
}

/// Builds and verifies the corpus, then evaluates all criteria. `log` sees
/// each outcome as soon as it is known.
pub fn run_acceptance(threads: Option<usize>, mut log: impl FnMut(&CriterionOutcome)) -> Result<Vec<CriterionOutcome>, String> {
    let runs = prepare(threads)?;
    let mut out = Vec::new();
    for c in [
        class_numbers(&runs),
        profiles(&runs),
        orthogonality(&runs),
        central(&runs),
        parameter_sets(&runs),
        closed_forms(&runs),
        properties(&runs),
        determinism(),
    ] {
        log(&c);
        out.push(c);
    }
    Ok(out)
}
