//! Command implementations behind the `fwword` binary.

pub mod bench;
pub mod commands;
pub mod render;
