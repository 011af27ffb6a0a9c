#![no_std]

extern crate alloc;

pub mod chars;
pub mod error;
pub mod gz;
pub mod mitosis;
pub mod parabox;
pub mod perm;
pub mod poly;
pub mod ring;
