//! Hardness gadgets: instance generators with planted solutions and
//! extractors that read a source solution back off any cheap enough answer.

pub mod dirmc;
pub mod dsn;
pub mod grid;
pub mod labels;
pub mod path;
pub mod scss;
pub mod uniqueness;

pub use dirmc::{
    build_dirmc4, dirmc4_vertex_count, extract_assignment, planted_cut, DirMc4Gadget, DirMcDiagnostics,
    DirMcWeights,
};
pub use dsn::{
    build_dsn_biclique, build_dsn_gt, extract_biclique_assignment, extract_gt_solution_dsn,
    gamma5_for_target_ratio, planted_dsn_biclique_solution, planted_dsn_gt_solution, BicliqueDiagnostics,
    BicliqueExtraction, DsnGadget, DsnSource, DsnVariant,
};
pub use grid::{GadgetGrid, GadgetLayout, RedEdges};
pub use labels::{parse_label, GadgetRef, Label, RowKey};
pub use path::{build_path_gadget, PathGadget, PathLayout};
pub use scss::{
    build_scss_gt, extract_gt_solution_scss, planted_scss_solution, scss_budget_formula, scss_lower_bound_tally,
    ScssBudget, ScssGadget,
};
pub use uniqueness::{
    build_uniqueness_gadget, in_out_satisfied, representation_of, verify_macro_lemma, MacroLemmaReport,
    UniquenessGadget, UniquenessLayout,
};
