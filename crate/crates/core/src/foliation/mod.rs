//! Combinatorial open book foliations on Seifert surfaces: signed elliptic
//! and hyperbolic points, typed regions, and the counting arguments built on
//! them.
//!
//! A region is named by its hyperbolic point. Corner rules: aa- and ac-regions
//! meet only positive elliptic points; ab- and bc-regions meet exactly one
//! negative elliptic point; bb-regions meet exactly two distinct ones; every
//! region except cc meets a positive elliptic point.

mod bounds;
mod coherence;
mod complex;
mod graph;
mod moves;
mod sample;

pub use bounds::{
    defect_from_foliation, euler_and_sl, fdtc_upper_bound, negative_elliptic_bound, DefectBound,
    EllipticConstraint,
};
pub use coherence::{coherence_run, CoherenceEvent, CoherenceRun, CoherenceState};
pub use complex::{
    from_bennequin_surface, validate_complex, Elliptic, FoliationComplex, Hyperbolic, PointCounts,
    Region, RegionType, Violation,
};
pub use graph::{extended_graph, key_lemma_check, Edge, ExtendedGraph, KeyLemmaResult, Vertex};
pub use moves::{ab_stabilization, stabilize_all_ab, StabilizationKind, Stabilized};
pub use sample::{sample_complex, SampleProfile, MAX_ELLIPTIC, MAX_HYPERBOLIC};
