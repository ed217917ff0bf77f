pub mod budget;
pub mod cli;
pub mod covering;
pub mod csp;
pub mod dart;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod kkmo;
pub mod nonabelian;
pub mod perm;
pub mod reduction;
pub mod surface;
