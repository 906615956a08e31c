//! Tiled orders `O(ñ, M)`: exponent-matrix combinatorics, standard forms,
//! membership and units, block divisibility, and the witness atom families
//! of non-hereditary orders.

mod order;
mod shape;
mod witness;

pub use order::TiledOrder;
pub use shape::{
    is_hereditary_by_staircase, isomorphic, shape_violations, ConjugationRecord, ConjugationStep, ScalarConjugation,
    TiledShape, Violation,
};
pub use witness::{witness_atoms, witness_layout, witness_pair, WitnessLayout, WitnessAtoms, WitnessSummary};
