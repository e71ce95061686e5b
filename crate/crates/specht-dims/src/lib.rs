//! Hook-length dimensions of Specht modules of the symmetric group, the
//! dimension-gap check that constrains invariant subspaces, and the explicit
//! small matrix representations of the Iwahori–Hecke algebra used as seeds.

pub mod partition;
pub mod seed;

pub use partition::{dim_gap_check, dim_gaps, hook_dim, partitions, sym_dims, Partition, PartitionError};
pub use seed::{check_hecke_relations, seed_matrices, verify_seed_matrices, SeedCheck, SeedFamily, SeedReport};
