//! Spectral theory of quasi-twisted codes over finite fields and the
//! defining-set family of minimum-distance bounds built on it.

pub mod bounds;
pub mod codefile;
pub mod distance;
pub mod error;
pub mod examples;
pub mod field;
pub mod linalg;
pub mod ntheory;
pub mod oracle;
pub mod poly;
pub mod polymat;
pub mod qt;
pub mod roots;
pub mod spectral;
pub mod table1;

pub use distance::Distance;
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use linalg::Matrix;
pub use poly::Poly;
pub use polymat::PolyMatrix;
pub use qt::{Codeword, QtCode};
pub use roots::{Embedding, Frobenius, RootSystem};
