//! Exact-arithmetic calculator for bordered Heegaard Floer invariants of
//! three-manifolds with torus boundary.

pub mod catalog;
pub mod curve;
pub mod gluing;
pub mod grading_group;
pub mod pairing;
pub mod rational;
pub mod surgery;
pub mod torus_algebra;
pub mod type_a;
pub mod type_d;
pub mod verify;
