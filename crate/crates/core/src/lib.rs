pub mod braiding;
pub mod entwining;
pub mod error;
pub mod forge;
pub mod hom;
pub mod linmap;
pub mod qt;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod suite;
pub mod weak;
pub mod yd;

pub use error::{Error, Result};
pub use linmap::{LinearMap, Wiring};
pub use report::{CheckEntry, CheckReport};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use weak::WeakHomHopfAlgebra;
