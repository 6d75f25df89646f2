//! Exact computations with finite root systems, Hermitian markings,
//! Dynkin Π-systems and weighted Dynkin diagrams.
//!
//! ```
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! use rootforge::rootsys::{Family, RootSystem};
//! use rootforge::wdd::{dominate, WeightedDiagram};
//!
//! let e6 = RootSystem::family(Family::E, 6)?;
//! let w: WeightedDiagram = "2,-4,1,3,0;0".parse()?;
//! let (d, word) = dominate(&e6, &w)?;
//! assert_eq!(d.layout(&e6), "1,0,0,0,1;2");
//! println!("{word}");
//! # Ok(())
//! # }
//! ```

pub mod catalog;
pub mod error;
pub mod hermitian;
pub mod linalg;
pub mod pisys;
pub mod rootsys;
pub mod wdd;

pub use error::{Error, Result};
