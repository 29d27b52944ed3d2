//! Command-line front end for `hodge-cones`.

pub mod commands;
pub mod config;
pub mod criteria;
pub mod error;
pub mod output;
pub mod verify;
