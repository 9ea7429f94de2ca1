//! Bell inequalities in phase space: disk eigenvalues, Bell values, the
//! absolute Wigner integral and the CHSH identity.

mod chsh;
mod eigenvalues;
mod inequality;

pub use chsh::{
    chsh_identity_check, chsh_operator, chsh_random_suite, optimize_singlet_chsh, random_dichotomic, random_state,
    singlet, spin_observable, ChshOptimum, Qubit, TwoQubit, TwoQubitState,
};
pub use eigenvalues::{
    lambda_generating, lambda_quadrature, lambda_quadrature_series, lambda_recurrence, lambda_region, EigenMethod,
    EigenvalueSeries, MAX_INDEX,
};
pub use inequality::{
    abs_wigner_integral, bell_expectation_general, bell_expectation_with, bell_value_disk, cirelson_ratio,
    figure1_data, BellResult, BellRoute, CirelsonComparison, CirelsonFlag, Figure1Row, VIOLATION_SLACK,
};
