//! Finite commutative rings and finite-field connection sets.

pub mod gp;
pub mod local;
pub mod ring;

pub use gp::{gp_integrality, hamming_gp_parameters, power_residues, semiprimitive_check, Semiprimitive};
pub use local::{LocalKind, LocalRing, LOCAL_SIZE_CAP};
pub use ring::{parse_ring_kinds, FiniteRing};
