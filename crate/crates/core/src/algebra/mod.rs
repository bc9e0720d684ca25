//! Integral homology, Smith normal form and collapsibility.

mod collapse;
mod homology;
mod snf;

pub use collapse::{is_collapsible, replay_collapse, CollapseConfig, CollapseStep, Collapsibility};
pub use homology::{boundary_matrix, euler_characteristic, homology, HomologyGroup, HomologyGroups, HomologyKind};
pub use snf::{IntegerMatrix, SmithForm};
