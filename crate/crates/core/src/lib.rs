//! Exact characters of the symmetric groups and the decomposition of the
//! permutation character of `S_2n` on the cosets of the centralizer of an
//! `n`-cycle.
//!
//! All arithmetic is over arbitrary-precision integers. Characters come from
//! a memoized Murnaghan–Nakayama recursion ([`character::mn_value`]); the
//! decomposition uses Frobenius reciprocity ([`centralizer::decompose_phi`])
//! and is cross-checked against closed forms ([`closed_forms`]) and an
//! element-level brute force ([`oracle::brute_force_decompose`]).
//!
//! ```
//! use snchar::{decompose_phi, CharacterCache, Partition};
//!
//! let cache = CharacterCache::new();
//! let d = decompose_phi(2, &cache).unwrap();
//! let shapes: Vec<String> = d.nonzero_terms().map(|(mu, _)| mu.to_string()).collect();
//! assert_eq!(shapes, ["(4)", "(3,1)", "(2,2)"]);
//! ```

pub mod centralizer;
pub mod character;
pub mod checks;
pub mod closed_forms;
pub mod decimal;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod rim_hook;

pub use centralizer::{decompose_phi, multiplicity, phi_class_function, Decomposition};
pub use character::{character_table, inner_product, mn_value, CharacterCache, ClassFunction};
pub use error::{Error, ParsePartitionError, Result};
pub use partition::{enumerate_partitions, Partition};
pub use rim_hook::{rim_hooks, RimHookRemoval};
