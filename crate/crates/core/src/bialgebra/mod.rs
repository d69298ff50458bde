//! Structure constants of group algebras, function algebras and rack
//! bialgebras, with exact checks of the tensor identities between them.

mod derived;
mod invariant;
mod rack;
mod space;
mod tensor;

pub use derived::{derived_map, derk_oracle, frobenius_check, PHI_BASIS, PHI_RANDOM, RANDOM_TUPLES, TRACE, UNIT_VALUE};
pub use invariant::{
    invariant_coproduct, invariant_functions, InvariantBasis, InvariantCoproduct, FIRST_ARGUMENT,
    IN_TENSOR_SQUARE, SECOND_ARGUMENT,
};
pub use rack::{
    corack_check, magma_bialgebra, rack_bialgebra, CorackReport, COMP, COMP_AGREEMENT, COMP_KQ,
    N_HOMOMORPHISM, SELF_DIST, SELF_DIST1,
};
pub use space::{
    basis_tuples, comult_map, functions_space, group_algebra, pairing_check, tensor_identity, tensor_square,
    BuiltSpace, LinearMap, PairingReport, StructureConstantSpace, ASSOCIATIVITY_AGREEMENT, COASSOCIATIVITY,
    PAIRING, TENSOR_ASSOCIATIVITY,
};
pub use tensor::{RationalTensor, TensorElement};
