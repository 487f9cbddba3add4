#![allow(clippy::result_large_err, clippy::needless_range_loop)]

pub mod abgroup;
pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod grading;
pub mod json;
pub mod linalg;
pub mod loops;
pub mod scalar;
