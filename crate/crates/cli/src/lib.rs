//! Command-line surface, file formats, on-disk cache, and the verification
//! suite for the exact nilpotent-homology engine in `nilhom-core`.

pub mod cache;
pub mod checks;
pub mod driver;
pub mod dump;
pub mod render;
