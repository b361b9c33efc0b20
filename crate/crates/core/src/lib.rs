//! Linear codes over the ring `Z4 + uZ4` (`u^2 = 0`).
//!
//! The crate covers ring arithmetic, the Gray map to `Z4`, complete,
//! symmetrized and Lee weight enumerators with their MacWilliams
//! transforms, projections to `Z4` and `F2 + uF2`, self-duality analysis,
//! and the symmetric, double circulant and bordered double circulant
//! constructions of formally self-dual codes together with a search
//! harness for minimum Lee distance.

pub mod alphabet;
pub mod census;
pub mod code;
pub mod construct;
pub mod error;
pub mod gray;
pub mod io;
pub mod kernel;
pub mod project;
pub mod ring;
pub mod scalars;
pub mod wenum;

pub use alphabet::Alphabet;
pub use code::{
    dual_standard, inner, CodewordSet, F2uCode, LinearCode, Matrix, MinDistance, RingMatrix,
    SelfDuality, Z4Code,
};
pub use error::{CodeError, Result};
pub use ring::{RingElem, UnitClass};
pub use scalars::{F2u, GaussianInt, GaussianRational, Z4};
