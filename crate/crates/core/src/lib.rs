//! Graphs defined on finite groups: construction, twin reduction,
//! classification checks and universality embeddings.

mod bits;
pub mod arith;
pub mod embed;
pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod hierarchy;
pub mod par;
pub mod perm;
pub mod subgroups;
pub mod table1;
pub mod twins;

pub use bits::{BitSet, Ones};
pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
pub use group::{Group, Subgroup};
pub use par::Exec;
