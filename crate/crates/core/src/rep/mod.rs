//! Exact representation theory of U(d) and SU(d): irrep labels, dimensions,
//! weight multiplicities and Frobenius–Schur data.

mod dimension;
mod freudenthal;
mod irrep;
mod kostant;
mod lambda_set;
pub mod partition;
mod perm;
mod weight;

pub use dimension::weyl_dimension;
pub use freudenthal::FreudenthalTable;
pub use irrep::{
    freudenthal_multiplicity, fs_indicator, fs_indicator_two, gamma_coefficients, reality_class, weight_multiplicity,
    Irrep, RealityClass, DEFAULT_WEYL_CAP,
};
pub use kostant::{kostant_partition, KostantTable};
pub use lambda_set::{enumerate_lambda_set, sum_of_dimensions};
pub use partition::count_irreps_by_norm;
pub use perm::for_each_permutation;
pub use weight::{DynkinLabel, HighestWeight, WeightVector};
