//! Finite graded modules over the Steenrod algebra, presented by a basis in
//! each degree and the matrices of the squares, with the constructions and
//! invariants the rest of the crate needs.
mod a1;
mod dump;
mod hom;
mod map;
mod margolis;
mod module;
mod pushout;
mod tensor;

pub use a1::{a1_free_decomposition, a1_orbit, A1Decomposition, A1Witness, A1_DIM};
pub use dump::{
    diagram_edges, dump_json, dump_text, parse_dump, to_dot, DiagramEdge, ModuleDump, SquareBlock,
    DIAGRAM_SQUARES,
};
pub use hom::{hom_solver, hom_space_dimension};
pub use map::ModuleMap;
pub use margolis::{
    class_maps_to_zero, induced_on_homology, is_boundary, is_cycle, is_homology_iso, margolis,
    margolis_with, qm_block, qm_blocks, qm_degree, InducedDegree, MargolisDegree, MargolisReport,
};
pub use module::{module_from_weight, t_module, FiniteGradedModule, PoincareSeries, RowAction};
pub use pushout::{pushout, Pushout, Side};
pub use tensor::{tensor, tensor_up_to};
