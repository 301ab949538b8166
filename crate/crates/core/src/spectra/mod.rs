//! Spectra: exact character sums, dense Jacobi, moment checks, closed forms.

pub mod exact;
pub mod formulas;
pub mod jacobi;
pub mod moments;
pub mod spectrum;

pub use exact::{
    cayley_spectrum, doubled_connection_set, mirror_spectrum, spectrum_dense_symmetric, spectrum_exact_abelian,
    verified_spectrum, CROSS_CHECK_TOL,
};
pub use formulas::{
    dicyclic_example_spectrum, gcd_graph_spectrum, hamming_spectrum, local_ring_unitary_spectrum, looped_spectrum,
    mdcg_local_ring_spectrum, mdcg_spectrum_formula, mdcg_sum_spectrum_abelian, product_spectrum_formula, semiprimitive_gp_spectrum, MirrorKind,
};
pub use moments::{moment_check, moment_residual, moments, Moments};
pub use spectrum::{
    classify, compare, format_value, isospectral, Eigenvalue, Parity, Spectrum, SpectrumClass, SpectrumComparison,
    SpectrumJson, MERGE_TOL, SNAP_TOL,
};
