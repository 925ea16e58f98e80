//! Extending B₃ representations to the loop braid group and its quotients.

mod certify;
mod low_dim;
mod oracle;
mod polynomial;
mod slb;
mod standard;
mod sweep;

pub use certify::{certify_no_extension, cube_root_candidates, CandidateVerdict, CertificateReport, CertificateVerdict};
pub use low_dim::{extension_exists_3d, nonstandard_3d, nonstandard_3d_signed, standard_extension_2d, Exists3d};
pub use oracle::{numeric_cubic_oracle, Cluster, OracleConfig, OracleReport};
pub use polynomial::{polynomial_s_solve, uniqueness_linearized, LinearizedSystem, PolynomialS, UniquenessVerdict};
pub use slb::{slb3_commutator_test, slb3_test, vb3_lift, Slb3Report};
pub use standard::{
    build_standard_extension, default_params, extend_with_k, extension_conductor, involution_param_dimension,
    s3_completion_check, standard_extensions, standard_k_candidates, trace_power_test, ExtensionCertificate,
    ExtensionParams, KCandidate, KSearch, KStatus,
};
pub use sweep::{conjecture_sweep, SweepEntry, SweepReport};
