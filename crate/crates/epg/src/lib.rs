//! Edge-intersection graphs of paths on a grid (EPG).
//!
//! A representation assigns each vertex an axis-aligned grid path; two
//! vertices are adjacent exactly when their paths share a grid edge. This
//! crate provides the grid/path model, Helly-property verification, the
//! universal stair construction, an exhaustive bounded-grid recognizer for
//! tiny graphs, and the reduction pipeline from positive 1-in-3 3SAT to
//! single-bend Helly representations.

pub mod graph;
pub mod grid;
pub mod io;
pub mod recognize;
pub mod reduction;
pub mod rep;
pub mod stair;

pub use graph::{
    apex_removal_check, degeneracy, generate, helly_bend_bounds, maximal_cliques, BendBounds,
    CliqueList, EulerBoundCheck, GraphKind, SimpleGraph,
};
pub use grid::{
    intersect_via_relevant, paths_intersect, Dir, GridEdge, GridPoint, LatticePath, PathError,
    ReconstructError, RelevantEdge, RelevantEdgeSeq,
};
pub use recognize::{enumerate_paths, recognize_all, recognize_bk, RecognizeOutcome, SearchBudget};
pub use reduction::{
    build_gf, extract_assignment, parse_formula, realize, solve_1in3, Assignment13, Formula13,
    GadgetGraph, Role,
};
pub use rep::{
    classify_c4, compact, find_claw_cliques, helly_by_cliques, helly_by_gilmore,
    helly_by_gilmore_mode, intersection_graph, realizes, shapes_used, C4Shape, EpgRepresentation,
    GilmoreMode, HellyVerdict, HellyViolation, LShape, Realization, RealizationFailure, RepError,
    ViolationKind,
};
pub use stair::stair_representation;
