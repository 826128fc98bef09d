use std::fmt::Write;

use classify::Signature;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Embedding {
    Hypersurface,
    CompleteIntersection,
}

/// The three pictures the data is transcribed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layer {
    /// Reductions between the `ε = −1` singularities and the complete
    /// intersections above them, with the `k = 0` series heads.
    Reductions,
    /// The lowest level with the `k = 0` heads replaced by `k = −1` elements.
    Virtual,
    /// s-adjacencies, labelled by Gabrielov numbers.
    Adjacency,
}

impl Layer {
    pub fn name(self) -> &'static str {
        match self {
            Layer::Reductions => "reductions",
            Layer::Virtual => "virtual",
            Layer::Adjacency => "adjacency",
        }
    }
}

impl std::str::FromStr for Layer {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [Layer::Reductions, Layer::Virtual, Layer::Adjacency]
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| {
                format!("unknown layer '{s}' (expected reductions, virtual or adjacency)")
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    /// A reduction given by a size-two factorization.
    Theorem,
    /// The special two-variable reduction.
    #[serde(rename = "R")]
    R,
    Adjacency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityNode {
    pub name: &'static str,
    pub dolgachev: Option<Vec<u32>>,
    pub gabrielov: Option<Vec<u32>>,
    pub embedding: Embedding,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
}

impl SingularityNode {
    pub fn dolgachev_signature(&self) -> Option<Signature> {
        self.dolgachev.clone().and_then(|v| Signature::new(v).ok())
    }

    pub fn gabrielov_signature(&self) -> Option<Signature> {
        self.gabrielov.clone().and_then(|v| Signature::new(v).ok())
    }

    pub fn layers(&self) -> Vec<Layer> {
        let mut out = vec![if self.is_virtual {
            Layer::Virtual
        } else {
            Layer::Reductions
        }];
        if self.gabrielov.is_some() {
            out.push(Layer::Adjacency);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: &'static str,
    pub to: &'static str,
    pub kind: EdgeKind,
    pub layer: Layer,
}

/// Nodes with reduction edges (`from → to`: `to` is a reduction of `from`)
/// and s-adjacency edges (`from` is s-adjacent to `to`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasGraph {
    pub nodes: Vec<SingularityNode>,
    pub reductions: Vec<Edge>,
    pub adjacencies: Vec<Edge>,
}

use Embedding::{CompleteIntersection as C, Hypersurface as H};

type NodeRow = (
    &'static str,
    &'static [u32],
    &'static [u32],
    Embedding,
    bool,
);

const NODES: &[NodeRow] = &[
    ("E12", &[2, 3, 7], &[2, 3, 7], H, false),
    ("Z11", &[2, 3, 8], &[2, 4, 5], H, false),
    ("Q10", &[2, 3, 9], &[3, 3, 4], H, false),
    ("E13", &[2, 4, 5], &[2, 3, 8], H, false),
    ("Z12", &[2, 4, 6], &[2, 4, 6], H, false),
    ("Q11", &[2, 4, 7], &[3, 3, 5], H, false),
    ("W12", &[2, 5, 5], &[2, 5, 5], H, false),
    ("S11", &[2, 5, 6], &[3, 4, 4], H, false),
    ("E14", &[3, 3, 4], &[2, 3, 9], H, false),
    ("Z13", &[3, 3, 5], &[2, 4, 7], H, false),
    ("Q12", &[3, 3, 6], &[3, 3, 6], H, false),
    ("W13", &[3, 4, 4], &[2, 5, 6], H, false),
    ("S12", &[3, 4, 5], &[3, 4, 5], H, false),
    ("U12", &[4, 4, 4], &[4, 4, 4], H, false),
    ("J'9", &[2, 3, 10], &[2, 2, 2, 3], C, false),
    ("J'10", &[2, 4, 8], &[2, 2, 2, 4], C, false),
    ("J'11", &[3, 3, 7], &[2, 2, 2, 5], C, false),
    ("L10", &[2, 5, 7], &[2, 2, 3, 3], C, false),
    ("K'10", &[2, 6, 6], &[2, 2, 3, 3], C, false),
    ("L11", &[3, 4, 6], &[2, 2, 3, 4], C, false),
    ("K'11", &[3, 5, 5], &[2, 2, 3, 4], C, false),
    ("M11", &[4, 4, 5], &[2, 3, 3, 3], C, false),
    ("J3,0", &[2, 2, 2, 3], &[], H, false),
    ("Z1,0", &[2, 2, 2, 4], &[], H, false),
    ("Q2,0", &[2, 2, 2, 5], &[], H, false),
    ("J'2,0", &[2, 2, 2, 6], &[], C, false),
    ("W1,0", &[2, 2, 3, 3], &[], H, false),
    ("S1,0", &[2, 2, 3, 4], &[], H, false),
    ("L1,0", &[2, 2, 3, 5], &[], C, false),
    ("K'1,0", &[2, 2, 4, 4], &[], C, false),
    ("U1,0", &[2, 3, 3, 3], &[], H, false),
    ("M1,0", &[2, 3, 3, 4], &[], C, false),
    ("I1,0", &[3, 3, 3, 3], &[], C, false),
    ("J3,-1", &[2, 2, 2, 3], &[2, 3, 10], H, true),
    ("Z1,-1", &[2, 2, 2, 4], &[2, 4, 8], H, true),
    ("Q2,-1", &[2, 2, 2, 5], &[3, 3, 7], H, true),
    ("J'2,-1", &[2, 2, 2, 6], &[2, 2, 2, 6], C, true),
    ("W#1,-1", &[2, 2, 3, 3], &[2, 5, 7], H, true),
    ("S#1,-1", &[2, 2, 3, 4], &[3, 4, 6], H, true),
    ("L#1,-1", &[2, 2, 3, 5], &[2, 2, 3, 5], C, true),
    ("Kb1,-1", &[2, 2, 4, 4], &[2, 2, 3, 5], C, true),
    ("W1,-1", &[2, 2, 3, 3], &[2, 6, 6], H, true),
    ("S1,-1", &[2, 2, 3, 4], &[3, 5, 5], H, true),
    ("L1,-1", &[2, 2, 3, 5], &[2, 2, 4, 4], C, true),
    ("K'1,-1", &[2, 2, 4, 4], &[2, 2, 4, 4], C, true),
    ("U1,-1", &[2, 3, 3, 3], &[4, 4, 5], H, true),
    ("M#1,-1", &[2, 3, 3, 4], &[2, 3, 3, 4], C, true),
    ("I1,-1", &[3, 3, 3, 3], &[3, 3, 3, 3], C, true),
    ("M1,-1", &[2, 3, 3, 4], &[2, 3, 3, 4], C, true),
];

/// Labels printed as `2344` in the pictures, stored above as `2244`.
pub const MISPRINTED_2344: [(&str, Layer); 5] = [
    ("K'1,0", Layer::Reductions),
    ("Kb1,-1", Layer::Virtual),
    ("K'1,-1", Layer::Virtual),
    ("L1,-1", Layer::Adjacency),
    ("K'1,-1", Layer::Adjacency),
];

const T: EdgeKind = EdgeKind::Theorem;
const R: EdgeKind = EdgeKind::R;
const A: EdgeKind = EdgeKind::Adjacency;

const REDUCTION_EDGES: &[(&str, &str, EdgeKind)] = &[
    ("Z11", "E12", R),
    ("Q10", "Z11", T),
    ("J'9", "Q10", T),
    ("Z12", "E13", R),
    ("Q11", "Z12", T),
    ("J'10", "Q11", T),
    ("W12", "E13", T),
    ("S11", "W12", T),
    ("S11", "Z12", T),
    ("L10", "S11", T),
    ("L10", "Q11", T),
    ("K'10", "S11", T),
    ("Z13", "E14", R),
    ("Q12", "Z13", T),
    ("J'11", "Q12", T),
    ("W13", "E14", T),
    ("S12", "W13", T),
    ("S12", "Z13", T),
    ("L11", "S12", T),
    ("L11", "Q12", T),
    ("K'11", "S12", T),
    ("U12", "W13", T),
    ("M11", "U12", T),
    ("M11", "S12", T),
    ("Z1,0", "J3,0", R),
    ("Q2,0", "Z1,0", T),
    ("J'2,0", "Q2,0", T),
    ("W1,0", "J3,0", T),
    ("S1,0", "W1,0", T),
    ("S1,0", "Z1,0", T),
    ("L1,0", "S1,0", T),
    ("L1,0", "Q2,0", T),
    ("K'1,0", "S1,0", T),
    ("U1,0", "W1,0", T),
    ("M1,0", "U1,0", T),
    ("M1,0", "S1,0", T),
    ("I1,0", "U1,0", T),
];

const VIRTUAL_EDGES: &[(&str, &str, EdgeKind)] = &[
    ("Z1,-1", "J3,-1", R),
    ("Q2,-1", "Z1,-1", T),
    ("J'2,-1", "Q2,-1", T),
    ("W#1,-1", "J3,-1", T),
    ("S#1,-1", "W#1,-1", T),
    ("S#1,-1", "Z1,-1", T),
    ("L#1,-1", "S#1,-1", T),
    ("L#1,-1", "Q2,-1", T),
    ("Kb1,-1", "S#1,-1", T),
    ("W1,-1", "J3,-1", T),
    ("S1,-1", "W1,-1", T),
    ("S1,-1", "Z1,-1", T),
    ("L1,-1", "S1,-1", T),
    ("L1,-1", "Q2,-1", T),
    ("K'1,-1", "S1,-1", T),
    ("U1,-1", "W1,-1", T),
    ("U1,-1", "W#1,-1", T),
    ("M#1,-1", "U1,-1", T),
    ("M#1,-1", "S1,-1", T),
    ("M#1,-1", "S#1,-1", T),
    ("I1,-1", "U1,-1", T),
    ("M1,-1", "U1,-1", T),
    ("M1,-1", "S1,-1", T),
    ("M1,-1", "S#1,-1", T),
];

const ADJACENCY_EDGES: &[(&str, &str, EdgeKind)] = &[
    ("E13", "E12", A),
    ("E14", "E13", A),
    ("J3,-1", "E14", A),
    ("Z12", "Z11", A),
    ("Z13", "Z12", A),
    ("Z1,-1", "Z13", A),
    ("W12", "Z11", A),
    ("W13", "W12", A),
    ("W13", "Z12", A),
    ("W#1,-1", "W13", A),
    ("W#1,-1", "Z13", A),
    ("W1,-1", "W13", A),
    ("Q11", "Q10", A),
    ("Q12", "Q11", A),
    ("Q2,-1", "Q12", A),
    ("S11", "Q10", A),
    ("S12", "S11", A),
    ("S12", "Q11", A),
    ("S#1,-1", "S12", A),
    ("S#1,-1", "Q12", A),
    ("S1,-1", "S12", A),
    ("U12", "S11", A),
    ("U1,-1", "U12", A),
    ("U1,-1", "S12", A),
    ("J'10", "J'9", A),
    ("J'11", "J'10", A),
    ("J'2,-1", "J'11", A),
    ("L10", "J'9", A),
    ("L11", "L10", A),
    ("L11", "J'10", A),
    ("L#1,-1", "L11", A),
    ("L#1,-1", "J'11", A),
    ("L1,-1", "L11", A),
    ("K'10", "J'9", A),
    ("K'11", "K'10", A),
    ("K'11", "J'10", A),
    ("Kb1,-1", "K'11", A),
    ("Kb1,-1", "J'11", A),
    ("K'1,-1", "K'11", A),
    ("M11", "K'10", A),
    ("M11", "L10", A),
    ("M#1,-1", "M11", A),
    ("M#1,-1", "K'11", A),
    ("M#1,-1", "L11", A),
    ("I1,-1", "M11", A),
    ("M1,-1", "M11", A),
    ("M1,-1", "K'11", A),
    ("M1,-1", "L11", A),
];

fn node(row: &NodeRow) -> SingularityNode {
    let sig = |s: &[u32]| (!s.is_empty()).then(|| s.to_vec());
    SingularityNode {
        name: row.0,
        dolgachev: sig(row.1),
        gabrielov: sig(row.2),
        embedding: row.3,
        is_virtual: row.4,
    }
}

fn edges(rows: &[(&'static str, &'static str, EdgeKind)], layer: Layer) -> Vec<Edge> {
    rows.iter()
        .map(|&(from, to, kind)| Edge {
            from,
            to,
            kind,
            layer,
        })
        .collect()
}

pub fn all_nodes() -> Vec<SingularityNode> {
    NODES.iter().map(node).collect()
}

pub fn find_node(name: &str) -> Option<SingularityNode> {
    NODES.iter().find(|r| r.0 == name).map(node)
}

fn layer_nodes(layer: Layer) -> Vec<SingularityNode> {
    all_nodes()
        .into_iter()
        .filter(|n| n.layers().contains(&layer))
        .collect()
}

/// The reductions between the non-virtual singularities.
pub fn pyramid() -> AtlasGraph {
    AtlasGraph {
        nodes: layer_nodes(Layer::Reductions),
        reductions: edges(REDUCTION_EDGES, Layer::Reductions),
        adjacencies: vec![],
    }
}

/// The lowest level of the pyramid with virtual elements.
pub fn virtual_pyramid() -> AtlasGraph {
    AtlasGraph {
        nodes: layer_nodes(Layer::Virtual),
        reductions: edges(VIRTUAL_EDGES, Layer::Virtual),
        adjacencies: vec![],
    }
}

pub fn adjacency_pyramid() -> AtlasGraph {
    AtlasGraph {
        nodes: layer_nodes(Layer::Adjacency),
        reductions: vec![],
        adjacencies: edges(ADJACENCY_EDGES, Layer::Adjacency),
    }
}

/// Every node with every reduction and adjacency edge.
pub fn atlas() -> AtlasGraph {
    let mut reductions = edges(REDUCTION_EDGES, Layer::Reductions);
    reductions.extend(edges(VIRTUAL_EDGES, Layer::Virtual));
    AtlasGraph {
        nodes: all_nodes(),
        reductions,
        adjacencies: edges(ADJACENCY_EDGES, Layer::Adjacency),
    }
}

pub fn layer_graph(layer: Layer) -> AtlasGraph {
    match layer {
        Layer::Reductions => pyramid(),
        Layer::Virtual => virtual_pyramid(),
        Layer::Adjacency => adjacency_pyramid(),
    }
}

fn joined(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl AtlasGraph {
    pub fn node(&self, name: &str) -> Option<&SingularityNode> {
        self.nodes.iter().find(|n| n.name == name)
    }

    /// An edge between `a` and `b` in either direction.
    pub fn adjacent(&self, a: &str, b: &str) -> bool {
        self.adjacencies
            .iter()
            .any(|e| (e.from == a && e.to == b) || (e.from == b && e.to == a))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    /// DOT text; the label of a node is its Gabrielov numbers when the graph
    /// has only adjacency edges, its Dolgachev numbers otherwise.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let gabrielov_labels = self.reductions.is_empty() && !self.adjacencies.is_empty();
        let mut out = String::new();
        writeln!(out, "digraph \"{graph_name}\" {{").unwrap();
        for n in &self.nodes {
            let label = if gabrielov_labels {
                &n.gabrielov
            } else {
                &n.dolgachev
            };
            let label = label
                .as_deref()
                .map(|s| s.iter().map(u32::to_string).collect::<String>())
                .unwrap_or_default();
            write!(out, "  \"{}\" [label=\"{}\\n{}\"", n.name, n.name, label).unwrap();
            if let Some(d) = &n.dolgachev {
                write!(out, ", dolgachev=\"{}\"", joined(d)).unwrap();
            }
            if let Some(g) = &n.gabrielov {
                write!(out, ", gabrielov=\"{}\"", joined(g)).unwrap();
            }
            let embedding = match n.embedding {
                Embedding::Hypersurface => "hypersurface",
                Embedding::CompleteIntersection => "complete-intersection",
            };
            writeln!(
                out,
                ", embedding=\"{embedding}\", virtual=\"{}\"];",
                n.is_virtual
            )
            .unwrap();
        }
        for e in self.reductions.iter().chain(&self.adjacencies) {
            let (kind, style) = match e.kind {
                EdgeKind::Theorem => ("theorem", "solid"),
                EdgeKind::R => ("R", "dashed"),
                EdgeKind::Adjacency => ("adjacency", "solid"),
            };
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [kind=\"{kind}\", style={style}];",
                e.from, e.to
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
