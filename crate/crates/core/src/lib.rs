pub mod approx;
pub mod classify;
pub mod endocat;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod golden;
pub mod homology;
pub mod pathalg;
pub mod relhom;
pub mod repmod;

pub use error::{Error, Result};
