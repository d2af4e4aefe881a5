//! Enumeration, counting, verification and rendering of `3m`-polygons with
//! `m`-fold rotational symmetry: the `m`-axial family (exactly `m` mirror
//! axes) and the `m`-circular family (no axes).
//!
//! Polygons are Hamiltonian cycles through `n` regularly spaced circle
//! vertices, encoded by their cycle of sides. See [`polygon`] for the
//! encoding, [`enumerate`] for the closed forms and [`oracle`] for the
//! exhaustive checks that back them.

pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod polygon;
pub mod render;

pub use classify::{classify, side_period, Family};
pub use enumerate::{AxialRep, CircularRep, CountsRow};
pub use error::{Error, Result};
pub use polygon::{EdgeSet, Revolutions, SideTuple, SymmetryProfile, VertexCycle};
pub use render::RenderOptions;
