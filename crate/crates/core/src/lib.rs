#![allow(clippy::needless_range_loop)]

pub mod exactnum;
pub mod error;
pub mod fusion;
pub mod indicators;
pub mod modular;
pub mod slrep;
pub mod ymat;
