//! Exact arithmetic in Z[i] and in the cyclotomic localization
//! Z[w8, 1/(1+i)], including the standard-associate normalization and
//! explicit residue systems.

mod cyclo;
mod int;

pub use cyclo::CycloNum;
pub use int::{
    ext_ggcd, factor, ggcd, omega_reps, reduce_mod, standard_divisors, GaussianInt, ResidueSystem,
};
