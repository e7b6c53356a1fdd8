//! JSON instance files.
//!
//! ```text
//! {
//!   "version": 1,
//!   "system": {"kind": "explicit", "d": 2, "vectors": ["00", "10", "01"]},
//!   "n": 2,
//!   "c": [
//!     [3, 1],
//!     [2, 2]
//!   ],
//!   "meta": {"target": 5}
//! }
//! ```
//!
//! Element and vertex indices in files are 1-based; the leftmost character of
//! a vector string is element 1.

use serde::{Deserialize, Serialize};

use super::{Instance, Meta};
use crate::error::{Error, Result};
use crate::model::{CostMatrix, ElementVector};
use crate::oracles::{BipartiteGraph, ExplicitSystem, LinearOracle, MatroidSpec, PartitionBlock, SystemSpec};

const VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileDto {
    version: u64,
    system: SystemDto,
    n: usize,
    c: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<MetaDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum SystemDto {
    Explicit {
        d: usize,
        vectors: Vec<String>,
    },
    Uniform {
        d: usize,
        rank: usize,
    },
    Partition {
        d: usize,
        blocks: Vec<BlockDto>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Bipartite {
        left: usize,
        right: usize,
        edges: Vec<[usize; 2]>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockDto {
    elements: Vec<usize>,
    capacity: usize,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct MetaDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    optimum: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
}

fn semantic(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidInstance {
        path: path.into(),
        message: message.into(),
    }
}

fn zero_based(path: &str, index: usize, limit: usize) -> Result<usize> {
    if index == 0 || index > limit {
        return Err(semantic(path, format!("index {index} outside 1..={limit}")));
    }
    Ok(index - 1)
}

fn edges_from(path: &str, edges: &[[usize; 2]], left: usize, right: usize) -> Result<Vec<(usize, usize)>> {
    edges
        .iter()
        .enumerate()
        .map(|(e, &[u, v])| {
            let at = format!("{path}[{e}]");
            Ok((zero_based(&at, u, left)?, zero_based(&at, v, right)?))
        })
        .collect()
}

fn system_from(dto: SystemDto) -> Result<SystemSpec> {
    let wrap = |path: &'static str| move |e: Error| semantic(path, e.to_string());
    Ok(match dto {
        SystemDto::Explicit { d, vectors } => {
            let vectors = vectors
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let v: ElementVector = s
                        .parse()
                        .map_err(|e: Error| semantic(format!("system.vectors[{i}]"), e.to_string()))?;
                    if v.len() != d {
                        return Err(semantic(
                            format!("system.vectors[{i}]"),
                            format!("expected {d} characters, found {}", v.len()),
                        ));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            SystemSpec::Explicit(ExplicitSystem::new(d, vectors).map_err(wrap("system.vectors"))?)
        }
        SystemDto::Uniform { d, rank } => SystemSpec::Matroid(MatroidSpec::uniform(d, rank)?),
        SystemDto::Partition { d, blocks } => {
            let blocks = blocks
                .into_iter()
                .enumerate()
                .map(|(b, block)| {
                    let at = format!("system.blocks[{b}].elements");
                    Ok(PartitionBlock {
                        elements: block
                            .elements
                            .iter()
                            .map(|&i| zero_based(&at, i, d))
                            .collect::<Result<_>>()?,
                        capacity: block.capacity,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            SystemSpec::Matroid(MatroidSpec::partition(d, blocks).map_err(wrap("system.blocks"))?)
        }
        SystemDto::Graphic { vertices, edges } => {
            let edges = edges_from("system.edges", &edges, vertices, vertices)?;
            SystemSpec::Matroid(MatroidSpec::graphic(vertices, edges).map_err(wrap("system.edges"))?)
        }
        SystemDto::Bipartite { left, right, edges } => {
            let edges = edges_from("system.edges", &edges, left, right)?;
            SystemSpec::Bipartite(BipartiteGraph::new(left, right, edges).map_err(wrap("system.edges"))?)
        }
    })
}

fn system_to(system: &SystemSpec) -> SystemDto {
    let one_based = |edges: &[(usize, usize)]| edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    match system {
        SystemSpec::Explicit(s) => SystemDto::Explicit {
            d: s.ground_size(),
            vectors: s.vectors().iter().map(ToString::to_string).collect(),
        },
        SystemSpec::Matroid(MatroidSpec::Uniform { d, rank }) => SystemDto::Uniform { d: *d, rank: *rank },
        SystemSpec::Matroid(MatroidSpec::Partition { d, blocks }) => SystemDto::Partition {
            d: *d,
            blocks: blocks
                .iter()
                .map(|b| BlockDto {
                    elements: b.elements.iter().map(|i| i + 1).collect(),
                    capacity: b.capacity,
                })
                .collect(),
        },
        SystemSpec::Matroid(MatroidSpec::Graphic { vertices, edges }) => SystemDto::Graphic {
            vertices: *vertices,
            edges: one_based(edges),
        },
        SystemSpec::Bipartite(g) => SystemDto::Bipartite {
            left: g.left(),
            right: g.right(),
            edges: one_based(g.edges()),
        },
    }
}

/// Reads an instance. Syntax errors carry a line and column; structural
/// errors name the offending field.
pub fn parse(text: &str) -> Result<Instance> {
    let dto: FileDto = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if dto.version != VERSION {
        return Err(semantic("version", format!("unsupported version {}", dto.version)));
    }
    if dto.n == 0 {
        return Err(semantic("n", "n must be at least 1"));
    }
    let system = system_from(dto.system)?;
    let d = system.ground_size();
    if dto.c.len() != d {
        return Err(semantic("c", format!("expected {d} rows, found {}", dto.c.len())));
    }
    if let Some(i) = dto.c.iter().position(|row| row.len() != dto.n) {
        return Err(semantic(
            format!("c[{i}]"),
            format!("expected {} entries, found {}", dto.n, dto.c[i].len()),
        ));
    }
    let c = CostMatrix::new(d, dto.n, dto.c.into_iter().flatten().collect())?;
    let meta = dto.meta.unwrap_or_default();
    Ok(Instance::new(system, c)?.with_meta(Meta {
        target: meta.target,
        optimum: meta.optimum,
        description: meta.description,
    }))
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Writes an instance with one cost row per line.
pub fn serialize(instance: &Instance) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"version\": {VERSION},\n"));
    out.push_str(&format!("  \"system\": {},\n", json(&system_to(&instance.system))));
    out.push_str(&format!("  \"n\": {},\n", instance.n()));
    if instance.d() == 0 {
        out.push_str("  \"c\": []");
    } else {
        out.push_str("  \"c\": [\n");
        let rows: Vec<String> = instance.c.rows().map(|row| format!("    {}", json(row))).collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]");
    }
    let m = &instance.meta;
    if m.target.is_some() || m.optimum.is_some() || m.description.is_some() {
        let dto = MetaDto {
            target: m.target,
            optimum: m.optimum,
            description: m.description.clone(),
        };
        out.push_str(&format!(",\n  \"meta\": {}", json(&dto)));
    }
    out.push_str("\n}\n");
    out
}
