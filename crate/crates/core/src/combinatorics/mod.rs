//! Discrete objects: symmetry classes, permutations, point configurations,
//! partitions, tableaux and the random-turn walker.

mod hook;
mod lis;
mod partition;
mod permutation;
mod points;
mod sampling;
mod symmetry;
mod tableau;
mod walker;

pub use hook::{hook_dim, HookCache};
pub use lis::{lis_len, lis_len_by};
pub use partition::{for_each_partition, partitions, Partition};
pub use permutation::Permutation;
pub use points::{lis_length, sample_point_config, Point, PointConfig};
pub use sampling::{
    count_uniform_involution_weights, sample_ensemble_element, sample_involution,
    sample_signed_involution, sample_signed_permutation, sample_uniform_involution,
};
pub use symmetry::{EnsembleSpec, SymmetryType};
pub use tableau::{rsk, Tableau};
pub use walker::{simulate_random_turn, tableau_to_walk, walk_to_tableau, WalkHistory};
