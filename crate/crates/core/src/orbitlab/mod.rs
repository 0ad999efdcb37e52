//! Verification of automorphism actions, orbit cases and extension lists.

mod action;
mod ffiso;
pub mod invariants;
mod qiso;
mod tlist;
pub mod cases;
pub mod expr;
pub mod solve;
mod verify;

pub use action::{
    alpha_var, nabla_cohomology, stated_formula, parametric_action, verify_action, ActionFormula, ActionReport,
};
pub use cases::{cases_for, t_list, OrbitCase, Rule, Target, CASES};
pub use verify::{verify_case, verify_cases, CaseReport, Method, TargetHit};
pub use ffiso::{ff_iso_search, is_fp_hom, FfSearch, FpAlgebra, FpMatrix, SearchMode};
pub use invariants::{center_dim, centroid_dim, derivation_dim, fine_invariants};
pub use tlist::{alpha_oracle, entry_samples, theorem_names, verify_t_list, AlphaRule, NameMatch, Named, SampleReport, TListReport};
