#![no_std]
extern crate alloc;

pub mod arith;
pub mod curve;
mod error;
pub mod forms;
pub mod param;
pub mod pell;
pub mod rational_param;
pub mod verify;

pub use error::{Error, Result};
