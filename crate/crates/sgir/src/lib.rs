//! Desk-scale inverse rendering engine for analytic SDF scenes.
//!
//! Decomposes rendered images into environment light (a spherical-Gaussian
//! mixture), albedo and roughness while removing shadows and indirect
//! illumination. Ground truth comes from the built-in Monte Carlo oracle
//! renderer, geometry from analytic signed-distance scenes traced through a
//! conservative occupancy octree.

pub mod checkpoint;
pub mod cli;
pub mod config;
pub mod fields;
pub mod geometry;
pub mod imageio;
pub mod math;
pub mod octree;
pub mod oracle;
pub mod pipeline;
pub mod quadrature;
pub mod real;
pub mod sg;
pub mod shading;
pub mod tape;
pub mod tonemap;

pub use math::{UnitVec3, Vec3, V3};
pub use real::Real;
