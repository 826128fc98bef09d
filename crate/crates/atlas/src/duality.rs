use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{all_nodes, AtlasGraph, SingularityNode};
use crate::AtlasError;

pub const BUNDLED_DUALITY_TABLE: &str = include_str!("../data/duality.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualSource {
    /// Unique node with the Dolgachev and Gabrielov numbers exchanged.
    Matching,
    /// Read from the duality table.
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRecord {
    pub name: String,
    pub dual: String,
    pub source: DualSource,
}

/// Blank-line separated records of `key: value` lines with keys `name`,
/// `dual-name` and `source`. Lines starting with `#` are comments.
pub fn parse_duality_table(text: &str) -> Result<Vec<DualityRecord>, AtlasError> {
    let mut out = Vec::new();
    let mut cur: BTreeMap<String, String> = BTreeMap::new();
    let mut start = 1;
    let mut finish = |cur: &mut BTreeMap<String, String>, line: usize| -> Result<(), AtlasError> {
        if cur.is_empty() {
            return Ok(());
        }
        let get = |k: &str| {
            cur.get(k).cloned().ok_or_else(|| AtlasError::DualityTable {
                line,
                msg: format!("missing key '{k}'"),
            })
        };
        let source = match get("source")?.as_str() {
            "matching" => DualSource::Matching,
            "table" => DualSource::Table,
            s => {
                return Err(AtlasError::DualityTable {
                    line,
                    msg: format!("unknown source '{s}'"),
                })
            }
        };
        out.push(DualityRecord {
            name: get("name")?,
            dual: get("dual-name")?,
            source,
        });
        cur.clear();
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            finish(&mut cur, start)?;
            start = i + 2;
            continue;
        }
        let Some((k, v)) = line.split_once(':') else {
            return Err(AtlasError::DualityTable {
                line: i + 1,
                msg: "expected 'key: value'".into(),
            });
        };
        let k = k.trim().to_string();
        if !["name", "dual-name", "source"].contains(&k.as_str()) {
            return Err(AtlasError::DualityTable {
                line: i + 1,
                msg: format!("unknown key '{k}'"),
            });
        }
        cur.insert(k, v.trim().to_string());
    }
    finish(&mut cur, start)?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duality {
    pairs: BTreeMap<String, (String, DualSource)>,
}

impl Duality {
    pub fn dual(&self, name: &str) -> Option<&str> {
        self.pairs.get(name).map(|(d, _)| d.as_str())
    }

    pub fn source(&self, name: &str) -> Option<DualSource> {
        self.pairs.get(name).map(|(_, s)| *s)
    }

    /// `(name, dual, source)` in name order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str, DualSource)> {
        self.pairs
            .iter()
            .map(|(a, (b, s))| (a.as_str(), b.as_str(), *s))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn candidates<'a>(x: &SingularityNode, nodes: &'a [SingularityNode]) -> Vec<&'a SingularityNode> {
    nodes
        .iter()
        .filter(|y| y.dolgachev == x.gabrielov && y.gabrielov == x.dolgachev)
        .collect()
}

/// Duality on the nodes carrying both Dolgachev and Gabrielov numbers,
/// by signature matching, with the table deciding where matching is not
/// unique.
pub fn duality_from(table: Option<&[DualityRecord]>) -> Result<Duality, AtlasError> {
    let nodes: Vec<SingularityNode> = all_nodes()
        .into_iter()
        .filter(|n| n.dolgachev.is_some() && n.gabrielov.is_some())
        .collect();
    let lookup = |name: &str| table.and_then(|t| t.iter().find(|r| r.name == name));
    let mut pairs = BTreeMap::new();
    let mut unresolved = Vec::new();
    for x in &nodes {
        let cands = candidates(x, &nodes);
        let record = lookup(x.name);
        if let [only] = cands.as_slice() {
            if let Some(r) = record {
                if r.dual != only.name {
                    return Err(AtlasError::DualityConflict {
                        name: x.name.to_string(),
                        table: r.dual.clone(),
                        matching: only.name.to_string(),
                    });
                }
            }
            pairs.insert(
                x.name.to_string(),
                (only.name.to_string(), DualSource::Matching),
            );
            continue;
        }
        match record {
            Some(r) if cands.iter().any(|c| c.name == r.dual) => {
                pairs.insert(x.name.to_string(), (r.dual.clone(), DualSource::Table));
            }
            Some(r) => {
                let matching = cands.iter().map(|c| c.name).collect::<Vec<_>>().join("|");
                return Err(AtlasError::DualityConflict {
                    name: x.name.to_string(),
                    table: r.dual.clone(),
                    matching,
                });
            }
            None => unresolved.push(x.name.to_string()),
        }
    }
    if !unresolved.is_empty() {
        return Err(AtlasError::DualityAmbiguous(unresolved));
    }
    for (a, (b, _)) in &pairs {
        if pairs.get(b).map(|(c, _)| c) != Some(a) {
            return Err(AtlasError::NotInvolution(a.clone()));
        }
    }
    Ok(Duality { pairs })
}

/// Duality using the bundled table.
pub fn duality() -> Result<Duality, AtlasError> {
    duality_from(Some(&parse_duality_table(BUNDLED_DUALITY_TABLE)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryPair {
    pub from: String,
    pub to: String,
    pub dual_from: String,
    pub dual_to: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub verified: Vec<CorollaryPair>,
    pub failures: Vec<CorollaryPair>,
    /// Reduction edges with an endpoint that has no dual.
    pub skipped: Vec<(String, String)>,
}

/// For every reduction edge `X → Y` of `graph`, looks for an s-adjacency
/// between `X*` and `Y*` among the adjacency edges of `graph`.
pub fn verify_corollary(graph: &AtlasGraph, d: &Duality) -> CorollaryReport {
    let mut report = CorollaryReport::default();
    for e in &graph.reductions {
        let (Some(a), Some(b)) = (d.dual(e.from), d.dual(e.to)) else {
            report.skipped.push((e.from.to_string(), e.to.to_string()));
            continue;
        };
        let pair = CorollaryPair {
            from: e.from.to_string(),
            to: e.to.to_string(),
            dual_from: a.to_string(),
            dual_to: b.to_string(),
        };
        if graph.adjacent(a, b) {
            report.verified.push(pair);
        } else {
            report.failures.push(pair);
        }
    }
    report
}
