//! Andrásfai graphs `And(k)` as circulant Cayley graphs over `Z_{3k-1}`.
//!
//! The crate builds the graphs, evaluates their adjacency spectra from the
//! cosine-sum closed form, and checks every index-level spectral claim
//! (distinct count, extremal indices, membership of `±1`) against a dense
//! cyclic-Jacobi eigensolver run on the explicit adjacency matrix.
//!
//! ```
//! use andrasfai::{predict, spectrum_closed_form};
//!
//! let spectrum = spectrum_closed_form(5).unwrap();
//! assert_eq!(spectrum.values[0], 5.0);
//! assert!((spectrum.values[7] + 1.0).abs() < 1e-12);
//!
//! let prediction = predict(5).unwrap();
//! assert_eq!(prediction.distinct_count, 8);
//! assert_eq!(prediction.smallest_indices, (5, 9));
//! ```

pub mod circulant;
pub mod cli;
pub mod closed_form;
mod error;
pub mod export;
pub mod multiplicity;
pub mod oracle;
pub mod prediction;
pub mod spectrum_io;
pub mod verifier;

pub use circulant::{
    adjacency_matrix, andrasfai, andrasfai_connection_set, build_circulant, AdjacencyMatrix, CirculantGraph,
    ConnectionSet,
};
pub use closed_form::{
    eigenvalue_closed_form, spectrum_closed_form, spectrum_general_circulant, Spectrum, SpectrumSource,
};
pub use error::{Error, Result};
pub use export::{export_graph, parse_edge_list, GraphFormat};
pub use multiplicity::{pair_multiplicities, MultiplicityClass, MultiplicityTable};
pub use oracle::{cluster_distinct, compare_spectra, jacobi_eigenvalues, DenseMatrix, OracleResult};
pub use prediction::{gcd_certificate, predict, GcdCertificate, SpectralPrediction};
pub use verifier::{
    run_sweep, run_sweep_with, Analysis, ClaimId, SweepOptions, SweepReport, TheoremVerdict, Tolerances, VerdictStatus,
};

/// Absolute tolerance for the palindrome identity and other exact-in-theory equalities.
pub const TOL_SYM: f64 = 1e-9;
/// Absolute tolerance used to decide whether two eigenvalues coincide.
pub const TOL_CLUSTER: f64 = 1e-8;
