//! Grid intersection representations of graphs: EPG and VPG paths, their
//! transformations, constructions and lower-bound checks.

pub mod bounds;
pub mod construct;
pub mod graph;
pub mod grid;
pub mod interval;
pub mod io;
pub mod representation;
pub mod svg;
pub mod transform;

#[cfg(test)]
mod testgen;
