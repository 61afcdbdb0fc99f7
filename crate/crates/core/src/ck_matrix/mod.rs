//! The CK metric and the antihermitian matrix generators of each family.

mod generator;
mod matrix;
mod omega;

pub use generator::{build_generator, generator_matrices, Family, GeneratorLabel};
pub use matrix::{
    decompose_in_basis, is_metric_antihermitian, is_traceless, mat_commutator, BasisDecomposer,
    MatrixOverK,
};
pub use omega::{build_metric, omega_product, MetricMatrix, OmegaVector};
