//! Kauffman bracket, Jones, Alexander and linking-number invariants of link
//! diagrams, plus the bracket-vector calculus of four-ended tangles.

pub mod alexander;
pub mod bracket;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod laurent;
mod statesum;
pub mod tangle;

pub use bracket::{jones, kauffman_bracket, normalized_bracket, JonesPoly, DEFAULT_CAP};
pub use diagram::{parse_pd, Crossing, Diagram, Handedness};
pub use error::{Error, Location, Result};
pub use hopf::{compile_h, hopf_bracket, omega_transform, s_family, thistlethwaite, HopfForm, SFamilyEntry};
pub use laurent::{BracketVector, LaurentPoly, Mat2};
pub use tangle::{bracket_vector, compile_tangle, parse_tangle, TangleDiagram, TangleExpr};
