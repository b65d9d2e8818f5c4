//! Executable checks for the value function `v`, the feasible cost space
//! `F_phi(y) = { mu : exists x in F(y), mu >= phi(x, y) }` and the auxiliary
//! problem `v_phi(y) = min { mu : mu in F_phi(y) }`.

mod boundedness;
mod identities;
mod lemma;
mod lipschitz;
mod report;
mod value;

pub use boundedness::{
    check_domain_interior, check_local_lower_bound, check_theorem1, check_theorem2,
    LowerBoundCertificate, MIDPOINT_PAIRS, THEOREM1_SAMPLES,
};
pub use identities::{check_equivalence, check_graph_epigraph, sample_cost_levels};
pub use lemma::{check_lemma, lemma_lower_bound, LemmaCombination, ALPHA_SCHEDULE};
pub use lipschitz::{check_lipschitz, estimate_lipschitz, MIN_PAIR_DISTANCE};
pub use report::{AnalysisReport, CheckKind, CheckResult, GridDescription, Verdict, Witness};
pub use value::{aux_value_function, evaluate_grid, fcost_membership, value_function, ValueGrid};
