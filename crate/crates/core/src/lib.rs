pub mod channel;
pub mod error;
pub mod experiment;
pub mod folded;
pub mod galois;
pub mod interpolation;
pub mod linearized;
pub mod message;
pub mod recovery;
pub mod subspace;
pub mod subspace_code;

pub use error::{Error, Result};
pub use folded::{FoldedCodeword, FoldedGabidulin};
pub use galois::{Field, FieldElement};
pub use linearized::LinearizedPoly;
pub use message::Message;
pub use recovery::AffineSolutionSpace;
pub use subspace::Subspace;
pub use subspace_code::SubspaceCode;
