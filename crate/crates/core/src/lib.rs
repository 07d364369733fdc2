pub mod algebra;
pub mod bicomplex;
pub mod bimodule;
pub mod complex;
pub mod decat;
pub mod expr;
pub mod fixtures;
pub mod functors;
pub mod homotopy;
pub mod linalg;
pub mod module;
pub mod pipeline;
pub mod proj;
pub mod reduce;
pub mod resolution;
pub mod verify;
pub mod ring;
