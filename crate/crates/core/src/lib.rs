#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod exactla;
pub mod polyring;
pub mod splinecore;
pub mod deltastar;
pub mod structmat;
