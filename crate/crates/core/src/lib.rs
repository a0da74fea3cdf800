//! Abelian extensions of finite abelian groups.
//!
//! A finite abelian group is stored as a map from primes to partitions (the
//! types of its Sylow subgroups). An extension 0 → H → G → K → 0 exists
//! exactly when, at every prime, the Littlewood-Richardson coefficient of
//! the three types is positive. On top of that criterion the crate offers
//! set algebra on group families, a matcher for parameterized families such
//! as `Z/2k x (Z/4)^2 x Z/2`, and bounded verification sweeps.

pub mod abelian;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod families;
pub mod lr;
pub mod partition;
pub mod verify;
mod primes;

pub use abelian::{format_group, parse_group, AbelianGroup};
pub use error::{Error, InputError, ResourceError};
pub use extensions::{
    brute_force_is_extension, extension_set, is_extension, set_extension, set_product, GroupSet,
    OracleConfig,
};
pub use families::{enumerate_family, family_contains, family_product, matches, Family, FamilyPattern, Slot};
pub use lr::{lr_coefficient, lr_expand, lr_positive, Expansion};
pub use partition::{make_partition, Partition};
