//! Bipartite graphs embedded in the torus, stored as rotation systems with
//! integer crossing offsets per edge.

mod cycles;
mod format;
mod gauge;
mod graph;
mod iso;

pub use cycles::{class_of, is_cycle, CycleVec};
pub use format::{parse_graph, serialize_graph, ParseError};
pub use gauge::{offset_gauge, tree_gauge};
pub use graph::{Color, Dart, Dir, Edge, Face, TorusGraph, ValidationError, Vertex};
pub use iso::{find_isomorphism, Isomorphism};

/// A lattice vector in Z².
pub type Vec2 = (i64, i64);
