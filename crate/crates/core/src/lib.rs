//! Classification and enumeration of right-angled alternating links on
//! thickened closed orientable surfaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`signatures`] solves the area constraints for the polygon types
//!   `(n, m, k_n, k_m)` that can tile a genus-`g` projection surface, and
//!   evaluates the counting bounds exactly.
//! - [`geometry`] computes the hyperbolic trigonometry of quasiregular
//!   `[n, m, n, m]` tilings.
//! - [`diagrams`] represents projection diagrams as combinatorial maps and
//!   verifies the diagram conditions (vertex pattern, checkerboard coloring,
//!   weak primality, gear-shift edge classes, link components).
//! - [`enumerate`] searches polygon gluings for all diagrams of a signature.

pub mod diagrams;
pub mod enumerate;
pub mod geometry;
pub mod signatures;

pub use diagrams::{CheckerboardColoring, DiagramError, DiagramReport, GluingSpec, SurfaceMap};
pub use enumerate::{EnumerationResult, SearchError, SearchLimits};
pub use geometry::{GeometryError, PolygonGeometry, WedgeAngles};
pub use signatures::{CountBound, SignatureError, TilingSignature};
