//! Construction, verification and counting of low-segment-number graph
//! drawings in the plane and in space.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`st`]: simple graphs, connectivity, st-numberings.
//! * [`geom`]: exact rational points and predicates, generic projection.
//! * [`drawing`]: polyline drawings, validity per style, segment counting.
//! * [`families`]: generators for the cubic graph families and the
//!   arrangement/tail gadget.
//! * [`construct`]: drawing algorithms and explicit witness drawings.
//! * [`etr`]: existential-reals encoding of `seg <= k` as SMT-LIB text.

pub mod construct;
pub mod drawing;
pub mod etr;
pub mod families;
pub mod geom;
pub mod graph;
pub mod st;

pub use drawing::{Drawing, DrawingStyle, SegmentDecomposition, ValidityReport, VertexAudit};
pub use geom::{Point, Q};
pub use graph::Graph;
pub use st::StNumbering;
