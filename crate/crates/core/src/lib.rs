//! Alternating and weakly alternating genus-two Heegaard diagrams.
//!
//! Diagrams are traced in a cut-surface model, checked against the closed-form
//! classification, reduced to canonical parameter classes and identified by
//! their first homology.

pub mod acceptance;
pub mod classification;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod identify;
pub mod params;
pub mod render;

pub use classification::{
    canonical_form_alternating, canonical_form_weak, classify, dihedral_orbits,
    enumerate_alternating, symmetry_orbit, validate_alternating_closed, validate_alternating_trace,
    validate_weakly_alternating, AlternatingWitness, CanonicalClass, DihedralOrbits, Family,
};
pub use diagram::{
    attaching_row, build_cut_model, cyclic_order, homology_class, trace, trace_components, Color,
    Cut, CutSurfaceModel, PastingMap, TracedCurveSystem,
};
pub use error::{Error, Result};
pub use homology::{
    h1, h1_mod2_nontrivial, presentation_matrix, seifert_h1_oracle, smith_normal_form, Fibre,
    H1Invariants, PresentationMatrix,
};
pub use identify::{
    branch_link, consistency_check, fig8_slope_classify, identify, CheckStatus, ConsistencyReport,
    ManifoldId, MontesinosLinkData,
};
pub use params::DiagramParams;
pub use render::{render_branch_link, render_cut_surface, SvgDoc};
