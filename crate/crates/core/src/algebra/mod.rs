//! Finite groups, subsets, and abelian characters.

pub mod arith;
pub mod character;
pub mod group;
pub mod subset;

pub use character::{character_sum, characters, AbelianCharacter, CharacterTable};
pub use group::{Element, FiniteGroup, GroupSpec, ORDER_LIMIT};
pub use subset::{
    boolean_algebra_member, gcd_class, gcd_decomposition, gcd_union, is_eulerian, subset_predicates,
    GcdDecomposition, GroupSubset, SubsetPredicates,
};
