//! The claims about mirror di-Cayley graphs as executable checks.
//!
//! Every check returns a [`VerificationReport`]; failures carry a witness and
//! are reported rather than raised.

pub mod checks;
pub mod report;
pub mod rings;
pub mod suite;

pub use checks::{
    check_cayley_even_odd, check_cayley_structure, check_crossed_nonisospectrality,
    check_crossed_nonisospectrality_for, check_directedness, check_gen_isosp, check_gen_isosp_for,
    check_integrality_criterion, check_integrality_criterion_for, check_isosp_transfer, check_parity_and_symmetry,
    check_parity_and_symmetry_for, check_product_decompositions, check_product_decompositions_for,
    check_product_spectra, check_product_spectra_for, check_spectrum_formulas, check_spectrum_formulas_for,
    check_sum_mirror_characters, check_twin_witness, check_unions, integrality_criterion, mirror_sets,
    spectrum_route,
};
pub use report::{describe, Outcome, VerificationReport, Witness};
pub use rings::{
    build_even_odd_pair, check_gp_integrality, check_hamming, check_local_ring, check_semiprimitive,
    even_odd_hypothesis, iterated_pairs, kronecker_unitary_spectrum, local_ring_catalog, CertifiedPair, EvenOddPair,
    ITERATED_VERTEX_CAP,
};
pub use suite::{check_dicyclic_example, dicyclic_example_set, run_suite, Suite, DEFAULT_SEED, Z16_SET, Z4Z4_SET};
