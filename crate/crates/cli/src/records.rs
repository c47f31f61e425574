//! Line-delimited JSON records, one object per line.
//!
//! Schema (all names are rendered vertex names):
//!
//! - facet: `{"facet": [..], "witnesses": [{"kind", "tag", "w", "a", "z"}]}`
//! - verdict: `{"graph6", "char", "is_cm", "fast_fail", "witness": {"face", "degree", "betti", "link_dimension"} | null, "route"}`
//! - census: `{"id", "graph6", "order", "edges", "classes": {..}, "screen", "screen_path", "verdicts": [verdict..], "field_disagreement"}`

use serde::{Deserialize, Serialize};

use edgesquare_core::catalog::CatalogFacet;
use edgesquare_core::census::{CensusRecord, ClassFlags};
use edgesquare_core::cm::{CmVerdict, CycleClassification, PurityReport, Rejection};
use edgesquare_core::Graph;

use crate::io::to_graph6;
use crate::text::{face_names, witness_tag, VarStyle};

fn names(g: &Graph, s: edgesquare_core::VertexSet) -> Vec<String> {
    s.iter().map(|v| g.name(v).to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub tag: String,
    pub w: Vec<String>,
    pub a: Vec<String>,
    pub z: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRecord {
    pub facet: Vec<String>,
    pub witnesses: Vec<WitnessRecord>,
}

impl FacetRecord {
    pub fn new(g: &Graph, f: &CatalogFacet, style: VarStyle) -> Self {
        FacetRecord {
            facet: face_names(g, f.facet, style),
            witnesses: f
                .witnesses
                .iter()
                .map(|w| WitnessRecord {
                    kind: w.kind.as_str().into(),
                    tag: witness_tag(g, w),
                    w: names(g, w.w),
                    a: names(g, w.a),
                    z: names(g, w.z),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWitnessRecord {
    pub face: Vec<String>,
    pub degree: isize,
    pub betti: usize,
    pub link_dimension: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph6: String,
    pub char: u32,
    pub is_cm: bool,
    pub fast_fail: Option<String>,
    pub witness: Option<FaceWitnessRecord>,
    pub route: Option<String>,
}

impl VerdictRecord {
    pub fn new(g: &Graph, v: &CmVerdict, style: VarStyle) -> Self {
        VerdictRecord {
            graph6: to_graph6(g),
            char: v.field.characteristic(),
            is_cm: v.is_cm,
            fast_fail: v.fast_fail.map(|f| f.as_str().into()),
            witness: v.witness.map(|w| FaceWitnessRecord {
                face: face_names(g, w.face, style),
                degree: w.degree,
                betti: w.betti,
                link_dimension: w.link_dimension,
            }),
            route: v.route.map(|r| r.as_str().into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub tree: bool,
    pub chordal: bool,
    pub bipartite: bool,
    pub whiskered: bool,
    pub cycle: bool,
    pub cm_bipartite: bool,
}

impl From<ClassFlags> for ClassRecord {
    fn from(c: ClassFlags) -> Self {
        ClassRecord {
            tree: c.tree,
            chordal: c.chordal,
            bipartite: c.bipartite,
            whiskered: c.whiskered,
            cycle: c.cycle,
            cm_bipartite: c.cm_bipartite,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub id: usize,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub classes: ClassRecord,
    pub screen: Option<String>,
    pub screen_path: Option<Vec<String>>,
    pub verdicts: Vec<VerdictRecord>,
    pub field_disagreement: bool,
}

impl CensusLine {
    pub fn new(id: usize, r: &CensusRecord, style: VarStyle) -> Self {
        let g = &r.graph;
        CensusLine {
            id,
            graph6: to_graph6(g),
            order: g.order(),
            edges: g.edge_count(),
            classes: r.classes.into(),
            screen: r.screen.map(|s| s.as_str().into()),
            screen_path: match r.screen {
                Some(Rejection::LeafPath3(p)) => Some(p.iter().map(|&v| g.name(v).to_string()).collect()),
                _ => None,
            },
            verdicts: r.verdicts.iter().map(|v| VerdictRecord::new(g, v, style)).collect(),
            field_disagreement: r.field_disagreement(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityRecord {
    pub is_pure: bool,
    pub expected: bool,
    pub dim: isize,
    pub formula_dim: isize,
}

impl From<PurityReport> for PurityRecord {
    fn from(r: PurityReport) -> Self {
        PurityRecord { is_pure: r.is_pure, expected: r.expected, dim: r.dim, formula_dim: r.formula_dim }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenRecord {
    pub graph6: String,
    pub rejection: Option<String>,
    pub path: Option<Vec<String>>,
}

impl ScreenRecord {
    pub fn new(g: &Graph, r: Option<Rejection>) -> Self {
        ScreenRecord {
            graph6: to_graph6(g),
            rejection: r.map(|r| r.as_str().into()),
            path: match r {
                Some(Rejection::LeafPath3(p)) => Some(p.iter().map(|&v| g.name(v).to_string()).collect()),
                _ => None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub t: usize,
    pub theorem: bool,
    pub unmixed: bool,
    pub verified: Option<VerdictRecord>,
}

impl CycleRecord {
    pub fn new(c: &CycleClassification, style: VarStyle) -> edgesquare_core::Result<Self> {
        let g = Graph::cycle(c.t)?;
        Ok(CycleRecord {
            t: c.t,
            theorem: c.theorem,
            unmixed: c.unmixed,
            verified: c.verified.as_ref().map(|v| VerdictRecord::new(&g, v, style)),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub edge_ideal: Vec<String>,
    pub square: Vec<String>,
    pub polarized: Vec<String>,
}
