//! Computational group theory workbench for derived series.
//!
//! The crate computes derived series and the degree of adorability (the
//! first index at which the derived series becomes stationary) for finite
//! permutation and matrix groups, runs the iterated commutator-subgroup
//! pipeline on finitely presented groups (abelianization by Smith normal
//! form, coset tables, Reidemeister–Schreier rewriting), and decides the
//! question for knot groups through the Alexander polynomial.

pub mod alexander;
pub mod catalog;
pub mod cosets;
pub mod engine;
pub mod finite;
pub mod fpcore;
pub mod intlin;
