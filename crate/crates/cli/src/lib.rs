//! Command-line front end for `vircalc`: request handling and the
//! `selftest` verification suites.

pub mod app;
pub mod random;
pub mod suites;
