//! TOML instance files.
//!
//! ```toml
//! type = "uniform"        # or "mst", "domset"
//! k = 3                   # uniform only
//! k_alpha = 1.0           # optional confidence hint
//! items = [[4, 1], [1, 4], [2, 3], [3, 2]]   # uniform: (mu, var) per item
//!
//! # mst / domset: either an inline 1-based edge list ...
//! n = 4
//! edges = [[1, 2], [2, 3], [3, 4]]
//! # ... or a graph file resolved relative to the instance file
//! graph = "graph.txt"
//! format = "edge_list"
//! weights = [[1, 1], [2, 2], [3, 3]]         # per edge (mst) or vertex (domset)
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::graph_io::{load_graph, GraphFormat};
use crate::error::{Error, Result};
use crate::model::StochItem;
use crate::problems::{DominatingSetInstance, Graph, SpanningTreeInstance, UniformInstance};

/// An instance of any of the three problems.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Uniform {
        instance: UniformInstance,
        k_alpha: Option<f64>,
    },
    SpanningTree(SpanningTreeInstance),
    DominatingSet(DominatingSetInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Uniform { .. } => "uniform",
            Instance::SpanningTree(_) => "mst",
            Instance::DominatingSet(_) => "domset",
        }
    }

    pub fn ground_size(&self) -> usize {
        match self {
            Instance::Uniform { instance, .. } => instance.len(),
            Instance::SpanningTree(inst) => inst.graph().n_edges(),
            Instance::DominatingSet(inst) => inst.n_vertices(),
        }
    }
}

type Pair = (f64, f64);

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Document {
    Uniform {
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_alpha: Option<f64>,
        items: Vec<Pair>,
    },
    Mst {
        #[serde(flatten)]
        graph: GraphSource,
        weights: Vec<Pair>,
    },
    Domset {
        #[serde(flatten)]
        graph: GraphSource,
        weights: Vec<Pair>,
    },
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct GraphSource {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
}

impl GraphSource {
    fn inline(graph: &Graph) -> Self {
        GraphSource {
            n: Some(graph.n_vertices()),
            edges: Some(graph.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()),
            ..GraphSource::default()
        }
    }

    fn resolve(self, base: Option<&Path>) -> Result<Graph> {
        match (self.edges, self.graph) {
            (Some(edges), None) => {
                let n = self
                    .n
                    .ok_or_else(|| Error::domain("inline graph needs a vertex count 'n'"))?;
                let edges = edges
                    .into_iter()
                    .map(|(u, v)| {
                        if u == 0 || v == 0 {
                            Err(Error::domain("edge endpoints are 1-based"))
                        } else {
                            Ok((u - 1, v - 1))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Graph::new(n, edges)
            }
            (None, Some(file)) => {
                let format = match self.format {
                    Some(f) => f.parse()?,
                    None => GraphFormat::default(),
                };
                let path = match base {
                    Some(dir) => dir.join(&file),
                    None => file.into(),
                };
                let graph = load_graph(&path, format)?.graph;
                if let Some(n) = self.n {
                    if n != graph.n_vertices() {
                        return Err(Error::domain(format!(
                            "instance declares {n} vertices but {} has {}",
                            path.display(),
                            graph.n_vertices()
                        )));
                    }
                }
                Ok(graph)
            }
            _ => Err(Error::domain(
                "graph instance needs exactly one of 'edges' or 'graph'",
            )),
        }
    }
}

fn items(pairs: Vec<Pair>, relaxed: bool) -> Result<Vec<StochItem>> {
    pairs
        .into_iter()
        .map(|(mu, var)| {
            if relaxed {
                StochItem::relaxed(mu, var)
            } else {
                StochItem::new(mu, var)
            }
        })
        .collect()
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Parses an instance document. Graph file references resolve against
/// `base`.
pub fn parse_instance(text: &str, source: &str, base: Option<&Path>) -> Result<Instance> {
    let doc: Document = toml::from_str(text).map_err(|e| Error::Parse {
        path: source.to_string(),
        line: e.span().map_or(1, |s| line_of(text, s.start)),
        msg: e.message().to_string(),
    })?;
    Ok(match doc {
        Document::Uniform { k, k_alpha, items: raw } => Instance::Uniform {
            instance: UniformInstance::new(items(raw, false)?, k)?,
            k_alpha,
        },
        Document::Mst { graph, weights } => Instance::SpanningTree(SpanningTreeInstance::new(
            graph.resolve(base)?,
            items(weights, false)?,
        )?),
        Document::Domset { graph, weights } => Instance::DominatingSet(
            DominatingSetInstance::new(graph.resolve(base)?, items(weights, true)?)?,
        ),
    })
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_instance(&text, &path.display().to_string(), path.parent())
}

fn pairs(items: &[StochItem]) -> Vec<Pair> {
    items.iter().map(|&w| w.into()).collect()
}

/// Serializes an instance with its graph inline.
pub fn render_instance(instance: &Instance) -> String {
    let doc = match instance {
        Instance::Uniform { instance, k_alpha } => Document::Uniform {
            k: instance.k(),
            k_alpha: *k_alpha,
            items: pairs(instance.items()),
        },
        Instance::SpanningTree(inst) => Document::Mst {
            graph: GraphSource::inline(inst.graph()),
            weights: pairs(inst.weights()),
        },
        Instance::DominatingSet(inst) => Document::Domset {
            graph: GraphSource::inline(inst.graph()),
            weights: pairs(inst.weights()),
        },
    };
    toml::to_string(&doc).expect("instance documents always serialize")
}

pub fn write_instance(instance: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_instance(instance)).map_err(|e| Error::io(path, e))
}
