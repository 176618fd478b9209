//! Combinatorial Nullstellensatz certificates and the cycle computations.

mod certificate;
mod claims;
mod search;

pub use certificate::{
    check_certificate, check_certificate_detailed, soundness_trial, Certificate, CertificateCheck, SoundnessReport,
    MAX_TRIAL_EDGES,
};
pub use claims::{
    build_claim2, build_p1, check_subproduct, claim2_j_piece, claim2_piece, expected_claim2, render, telescope_lhs,
    telescope_rhs, verify_claim1, verify_claim1_with, verify_claim2_direct, verify_claim2_staged,
    verify_telescope_step, ClaimReport, ClaimSetup, CycleVars, IdentityCheck, Method,
};
pub use search::{candidate_count, search_monomial};

/// The certificate behind the C6 computation with palette size 10.
pub fn claim1_certificate() -> Certificate {
    let setup = build_p1();
    let eta = setup.product.coefficient(&setup.j);
    Certificate::from_setup(&setup, eta, 10)
}
