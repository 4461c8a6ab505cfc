//! Single-fold origami as a construction engine.
//!
//! The crate models flat paper folding the way the classical literature
//! does: a fold is a straight crease, the fold acts on the plane as the
//! reflection across it, and six elementary fold operations generate
//! everything. Five of them reproduce compass-and-straightedge; the sixth
//! (two points onto two lines simultaneously) solves cubics, which is what
//! lifts origami past the euclidean tools to angle trisection, cube roots,
//! the regular heptagon, and every number in a 2-3 field tower.
//!
//! What lives where:
//!
//! - [`scalar`]: arbitrary-precision reals with a tolerance contract.
//! - [`geom`]: points, lines, circles, parabolas, and the euclidean base
//!   constructions (intersections, reflections, perpendiculars).
//! - [`axioms`]: the fold axioms O1-O6 and the perpendicular drop, each a
//!   total solver returning every admissible crease.
//! - [`polysolve`]: real-root solvers (quadratic, Cardano/trigonometric
//!   cubic, resolvent quartic) backing the sixth axiom and the oracles.
//! - [`trace`]: replayable construction traces with named landmarks.
//! - [`constructions`]: the named fold sequences (Haga thirds, golden
//!   section, cube doubling, trisection, cube roots, 7-gon, 17-gon).
//! - [`neusis`]: marked-ruler simulations used as independent oracles.
//! - [`constructibility`]: which numbers and regular n-gons are reachable
//!   with which tool set.
//! - [`script`]: a small text language for writing constructions.
//! - [`render`]: crease-pattern SVG and trace JSON.
//! - [`verify`]: the built-in check suites behind `ori verify`.
//!
//! Run the examples for a tour, e.g. `cargo run --example heptagon`.

pub mod axioms;
pub mod constructibility;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod neusis;
pub mod polysolve;
pub mod render;
pub mod scalar;
pub mod script;
pub mod trace;
pub mod verify;

pub use axioms::{fold_lot, fold_o1, fold_o2, fold_o3, fold_o4, fold_o5, fold_o6, verify_fold};
pub use axioms::{Axiom, Fold, FoldInput};
pub use error::{Error, ParseError, Result};
pub use geom::{intersect_circles, intersect_line_circle, Circle, Line, Parabola, Point};
pub use polysolve::{solve_cubic, solve_cubic_depressed, solve_quadratic, solve_quartic};
pub use polysolve::{Polynomial, RootSet};
pub use scalar::{precision, set_precision, Scalar};
pub use trace::{StartConfig, Trace, TraceBuilder};
