pub mod catalog;
pub mod classifier;
pub mod cli;
pub mod fixtures;
pub mod groups;
pub mod numkernel;
pub mod selftest;
