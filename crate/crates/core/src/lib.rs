//! Exact irreducible character tables of the Suzuki p-groups
//! `A_p(m, theta)`, `B_p(m, theta, eps)`, `C_p(m, theta, eps)` and
//! `D_p(m, theta, eps)`, together with independent verification oracles.

pub mod construct;
pub mod cyclotomic;
pub mod dual;
pub mod error;
pub mod field;
pub mod group;
pub mod quotient;
pub mod sets;
pub mod verify;

pub use cyclotomic::{CycloNum, CycloRat};
pub use error::{Error, Result};
pub use field::{f_map, gcd_pl1, FieldContext, FieldElement, SpecialKind, Subspace, ThetaPower};
pub use group::{ConjClass, ConjugacyClasses, Family, GroupElement, GroupParams};
pub use quotient::{CenterCharC, QuotientElement, QuotientGroup, QuotientKind};
pub use dual::{AbelianBasis, AdditiveCharacter, DualCharacter};
pub use sets::{ParameterSets, SetCounts};
pub use construct::{character_table, expected_profile, nonvz_character_table, vz_character_table, CharacterTable, IrrChar};
pub use verify::{verify, Check, CheckMode, CheckResult, CheckStatus, Counterexample, VerificationReport};
