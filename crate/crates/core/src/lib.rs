pub mod arith;
pub mod conjugates;
pub mod cubic;
pub mod curve;
pub mod eisenstein;
pub mod heegner;
pub mod height;
pub mod error;
pub mod modular;
pub mod mp;
pub mod qseries;
pub mod recognize;

pub use eisenstein::{ConjugateSet, CubeRoot, CubicCharacter, EisensteinInt};
pub use error::{Error, Result};
pub use mp::{BigComplex, BigReal};
