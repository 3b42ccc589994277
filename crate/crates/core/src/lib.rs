//! Exact computation with braid words in band generators: dual Garside
//! normal forms, strong quasipositivity, Bennequin surfaces, open book
//! foliation combinatorics and Dehornoy-floor intervals for the fractional
//! Dehn twist coefficient.

pub mod braid;
pub mod fdtc;
pub mod foliation;
pub mod garside;
pub mod lab;
pub mod par;
pub mod sample;
pub mod surface;

mod error;

pub use error::{Error, Result};
