//! Size-two factorizations of the theorem cases, the catalog of weight
//! systems with `ε = −1`, and the atlas of reductions, s-adjacencies and
//! strange duality between the corresponding singularities.

mod cases;
mod catalog;
mod duality;
mod enumerate;
mod graph;
mod tables;
mod verify;

pub use cases::{instantiate, CaseId, CaseInstance, XYZ};
pub use catalog::{
    catalog, catalog_equations, CatalogEquation, CatalogRow, TwoVariableCase, TWO_VARIABLE_CASES,
};
pub use duality::{
    duality, duality_from, parse_duality_table, verify_corollary, CorollaryPair, CorollaryReport,
    DualSource, Duality, DualityRecord, BUNDLED_DUALITY_TABLE,
};
pub use enumerate::{
    enumerate_solutions, expected_solutions, project, Projected, Solution, EXTRA_SOLUTIONS,
};
pub use graph::{
    adjacency_pyramid, all_nodes, atlas, find_node, layer_graph, pyramid, virtual_pyramid,
    AtlasGraph, Edge, EdgeKind, Embedding, Layer, SingularityNode, MISPRINTED_2344,
};
pub use tables::{grade_and_class, grade_from_gabrielov, Grade, Kodaira};
pub use verify::{
    case_mf, mapping_homogeneous, theorem_verify, theorem_verify_default, VerificationReport,
};

use classify::ClassifyError;
use grading::GradingError;
use mftwo::MfError;
use polycore::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AtlasError {
    #[error("constraints of case {case} fail for p = {p:?}, m = {m}")]
    Divisibility { case: CaseId, p: [u32; 3], m: u32 },
    #[error("condition of case {case} fails for p = {p:?}, m = {m}")]
    ConditionFails { case: CaseId, p: [u32; 3], m: u32 },
    #[error("case {case}: exponent {exponent} is not a nonnegative integer")]
    NonIntegral { case: CaseId, exponent: String },
    #[error("case {case} cannot exchange arm {arm}")]
    BadArm { case: CaseId, arm: usize },
    #[error("case {case}: det M = {det} differs from f = {f}")]
    Determinant {
        case: CaseId,
        det: String,
        f: String,
    },
    #[error("case {case}: mapping is not homogeneous on equation {equation}")]
    InhomogeneousMapping { case: CaseId, equation: usize },
    #[error("no parameter assignment makes every residue vanish")]
    ResidueNonzero(Box<VerificationReport>),
    #[error("unknown case '{0}'")]
    UnknownCase(String),
    #[error("signature {0:?} matches no row of the grade tables")]
    UnsupportedSignature(Vec<u32>),
    #[error("duality unresolved for {}", .0.join(", "))]
    DualityAmbiguous(Vec<String>),
    #[error("duality table gives {name}* = {table}, matching gives {matching}")]
    DualityConflict {
        name: String,
        table: String,
        matching: String,
    },
    #[error("duality is not an involution at {0}")]
    NotInvolution(String),
    #[error("duality table, record at line {line}: {msg}")]
    DualityTable { line: usize, msg: String },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Mf(#[from] MfError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
