use super::{check_weights, LinearOracle, Membership};
use crate::error::{Error, Result};
use crate::model::ElementVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionBlock {
    /// 0-based element indices.
    pub elements: Vec<usize>,
    pub capacity: usize,
}

/// Matroids whose linear optimization is solved greedily.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSpec {
    /// Sets of size at most `rank`.
    Uniform { d: usize, rank: usize },
    /// Every element lies in exactly one block; at most `capacity` per block.
    Partition { d: usize, blocks: Vec<PartitionBlock> },
    /// Forests of a multigraph; edge `e` is ground element `e`. Vertices are 0-based.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl MatroidSpec {
    pub fn uniform(d: usize, rank: usize) -> Result<Self> {
        Ok(MatroidSpec::Uniform { d, rank })
    }

    pub fn partition(d: usize, blocks: Vec<PartitionBlock>) -> Result<Self> {
        let spec = MatroidSpec::Partition { d, blocks };
        spec.validate()?;
        Ok(spec)
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let spec = MatroidSpec::Graphic { vertices, edges };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            MatroidSpec::Uniform { .. } => Ok(()),
            MatroidSpec::Partition { d, blocks } => {
                let mut owner = vec![None; *d];
                for (b, block) in blocks.iter().enumerate() {
                    for &e in &block.elements {
                        let slot = owner
                            .get_mut(e)
                            .ok_or_else(|| Error::invalid(format!("block {b} names element {e} outside [0,{d})")))?;
                        if let Some(prev) = slot.replace(b) {
                            return Err(Error::invalid(format!("element {e} is in blocks {prev} and {b}")));
                        }
                    }
                }
                match owner.iter().position(Option::is_none) {
                    Some(e) => Err(Error::invalid(format!("element {e} belongs to no block"))),
                    None => Ok(()),
                }
            }
            MatroidSpec::Graphic { vertices, edges } => {
                match edges.iter().position(|&(u, v)| u >= *vertices || v >= *vertices) {
                    Some(e) => Err(Error::invalid(format!("edge {e} references a vertex >= {vertices}"))),
                    None => Ok(()),
                }
            }
        }
    }

    /// Strictly positive elements by decreasing weight, ties by lower index.
    fn greedy_order(weights: &[i64]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] > 0).collect();
        order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        order
    }
}

impl LinearOracle for MatroidSpec {
    fn ground_size(&self) -> usize {
        match self {
            MatroidSpec::Uniform { d, .. } | MatroidSpec::Partition { d, .. } => *d,
            MatroidSpec::Graphic { edges, .. } => edges.len(),
        }
    }

    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        let d = self.ground_size();
        check_weights("matroid oracle weights", d, weights)?;
        let order = Self::greedy_order(weights);
        let chosen: Vec<usize> = match self {
            MatroidSpec::Uniform { rank, .. } => order.into_iter().take(*rank).collect(),
            MatroidSpec::Partition { blocks, .. } => {
                let mut block_of = vec![0; d];
                for (b, block) in blocks.iter().enumerate() {
                    for &e in &block.elements {
                        block_of[e] = b;
                    }
                }
                let mut used = vec![0; blocks.len()];
                order
                    .into_iter()
                    .filter(|&e| {
                        let b = block_of[e];
                        let fits = used[b] < blocks[b].capacity;
                        used[b] += fits as usize;
                        fits
                    })
                    .collect()
            }
            MatroidSpec::Graphic { vertices, edges } => {
                let mut forest = DisjointSets::new(*vertices);
                order
                    .into_iter()
                    .filter(|&e| forest.union(edges[e].0, edges[e].1))
                    .collect()
            }
        };
        Ok(ElementVector::from_support(d, chosen))
    }
}

impl Membership for MatroidSpec {
    fn contains(&self, s: &ElementVector) -> bool {
        if s.len() != self.ground_size() {
            return false;
        }
        match self {
            MatroidSpec::Uniform { rank, .. } => s.count_ones() <= *rank,
            MatroidSpec::Partition { blocks, .. } => blocks
                .iter()
                .all(|b| b.elements.iter().filter(|&&e| s.get(e)).count() <= b.capacity),
            MatroidSpec::Graphic { vertices, edges } => {
                let mut forest = DisjointSets::new(*vertices);
                s.support().all(|e| forest.union(edges[e].0, edges[e].1))
            }
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `u` and `v` were already connected.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_takes_top_positive() {
        let m = MatroidSpec::uniform(3, 2).unwrap();
        let s = m.maximize(&[3, -1, 5]).unwrap();
        assert_eq!(s.to_string(), "101");
        assert_eq!(s.weight(&[3, -1, 5]).unwrap(), 8);
        assert!(m.maximize(&[-3, 0, -5]).unwrap().is_zero());
    }

    #[test]
    fn partition_respects_capacities() {
        let m = MatroidSpec::partition(
            3,
            vec![
                PartitionBlock {
                    elements: vec![0, 1],
                    capacity: 1,
                },
                PartitionBlock {
                    elements: vec![2],
                    capacity: 1,
                },
            ],
        )
        .unwrap();
        assert_eq!(m.maximize(&[4, 7, -2]).unwrap().to_string(), "010");
    }

    #[test]
    fn partition_must_cover_ground_set() {
        let err = MatroidSpec::partition(
            3,
            vec![PartitionBlock {
                elements: vec![0, 1],
                capacity: 1,
            }],
        );
        assert!(err.is_err());
        let dup = MatroidSpec::partition(
            2,
            vec![
                PartitionBlock {
                    elements: vec![0, 1],
                    capacity: 1,
                },
                PartitionBlock {
                    elements: vec![1],
                    capacity: 1,
                },
            ],
        );
        assert!(dup.is_err());
    }

    #[test]
    fn graphic_triangle() {
        // edges 12, 23, 13 on vertices 0..3
        let m = MatroidSpec::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = m.maximize(&[5, 4, 3]).unwrap();
        assert_eq!(s.to_string(), "110");
        assert_eq!(s.weight(&[5, 4, 3]).unwrap(), 9);
        assert!(!m.contains(&"111".parse().unwrap()));
    }

    #[test]
    fn graphic_skips_loops_and_bad_vertices() {
        let m = MatroidSpec::graphic(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(m.maximize(&[9, 1, 2]).unwrap().to_string(), "001");
        assert!(MatroidSpec::graphic(2, vec![(0, 2)]).is_err());
    }
}
