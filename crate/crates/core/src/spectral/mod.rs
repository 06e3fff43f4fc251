//! Adjacency spectra, Ramanujan certificates and the nonbacktracking
//! operator.

mod decomposition;
mod operator;
mod spectrum;
mod upsilon;

pub use decomposition::{
    build_decomposition, dense_b, measure_decomposition, verify_decomposition, BlockDecomposition, PairBlock,
    VerificationReport, VerifyTolerances, JORDAN_TOLERANCE,
};
pub use operator::{
    alpha_exact, build_b, gamma, nbrw_l2_bound, nbrw_l2_constant, nbrw_l2_threshold_time, theta_pair, NonBacktracking,
};
pub use spectrum::{
    adjacency_eigen, adjacency_matrix, adjacency_spectrum, adjacency_spectrum_full, certify, lanczos_nontrivial,
    ramanujan_bound, AdjacencyEigen, Certificate, CertifyConfig, SpectrumReport, CERTIFICATION_TOLERANCE, DENSE_CAP,
};
pub use upsilon::{average_l2_squared, chebyshev_u_shifted, upsilon, upsilon_l2_transitive, UpsilonCheck};
