//! Zig-zag strands of a torus graph: extraction, exact consistency decision,
//! Newton polygon, stacky fan and geodesic front arrangements.

mod consistency;
mod fan;
mod fronts;
mod strands;

pub use consistency::{check_consistency, Verdict, Witness};
pub use fan::{newton_polygon, stacky_fan, FanError, PolygonError, Ray, StackyFanData};
pub use fronts::{front_arrangement, FrontError, Geodesic, Segment};
pub use strands::{extract_zigzags, zigzag_next, ZigZag};
