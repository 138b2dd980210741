//! Quadratically enriched counts of rational curves on toric del Pezzo
//! surfaces.
//!
//! * [`gw`]: the Grothendieck-Witt ring GW(Q), equality by local
//!   invariants, and trace forms of quadratic extensions.
//! * [`poly`]: multilinear polynomials in trace symbols `b_i` over GW(Q).
//! * [`newton`]: lattice polygons, presets and corner chops.
//! * [`tropical`]: lattice-path enumeration of rational tropical curves
//!   with their GW-valued multiplicities.
//! * [`wallcross`]: the wall-crossing recursion and invariant tables.
//! * [`notation`]: the text syntax shared by the CLI and JSON output.

pub mod cli;
pub mod error;
pub mod gw;
pub mod newton;
pub mod notation;
pub mod poly;
pub mod tropical;
pub mod wallcross;

pub use error::{Error, Result};
pub use gw::{GwElement, Rational, SquareClass};
pub use poly::BetaPolynomial;
