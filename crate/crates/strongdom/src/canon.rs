//! Canonical forms and isomorphism testing for small graphs.
//!
//! The canonical form of a graph is the lexicographically least upper
//! triangle of its adjacency matrix over all relabelings, read column by
//! column like graph6 and packed to bytes. Minimizing over all n!
//! permutations directly is hopeless even at n = 12, so the search first
//! partitions vertices by iterated degree refinement (cells ordered by
//! invariant signatures), then backtracks only over choices inside cells,
//! skipping candidates that are twins of an already-explored one.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Refinement plus cell backtracking stays fast up to this order.
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {0} exceeds the canonical-form budget of {CANON_MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// A labeling-invariant identifier of an isomorphism class: two graphs have
/// equal canonical forms iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Upper-triangle bits of the canonically relabeled graph, column-wise,
    /// most significant bit first.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    Ok(canonical_labeling(g)?.0)
}

/// The canonical form together with a permutation realizing it:
/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError::OrderTooLarge(n));
    }
    let mut search = Search { g, n, best: None };
    search.run(refine(g, initial_cells(g)));
    let (bytes, placed) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in placed.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { order: n, bytes }, perm))
}

/// `g` relabeled into its canonical positions; equal for isomorphic inputs.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.permuted(&perm))
}

/// Canonical-form equality behind a degree-sequence fast reject.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.order() != h.order() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Cells of an ordered partition. Cell order is always derived from
/// invariant data; the order of vertices inside a cell is arbitrary.
type Cells = Vec<Vec<usize>>;

fn initial_cells(g: &Graph) -> Cells {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in g.vertices() {
        by_degree.entry(g.neighbors(v).len()).or_default().push(v);
    }
    by_degree.into_values().collect()
}

/// Splits cells by neighbor counts toward every cell until stable
/// (equitable). Subcells are ordered by their count signatures, which are
/// invariant under relabeling.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig: Vec<usize> =
                    masks.iter().map(|&m| g.neighbors(v).intersection(m).len()).collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Least (packed bits, placement) found so far; placement lists the
    /// original vertex at each canonical position.
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, cells: Cells) {
        if let Some(target) = cells.iter().position(|c| c.len() > 1) {
            let mut tried: Vec<usize> = Vec::new();
            'candidates: for &v in &cells[target] {
                // A twin of an explored candidate reaches the same leaves:
                // swapping the two is an automorphism.
                for &u in &tried {
                    if twins(self.g, u, v) {
                        continue 'candidates;
                    }
                }
                tried.push(v);
                let mut child = cells.clone();
                let rest: Vec<usize> =
                    child[target].iter().copied().filter(|&u| u != v).collect();
                child[target] = vec![v];
                child.insert(target + 1, rest);
                self.run(refine(self.g, child));
            }
            return;
        }

        let placed: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let bytes = self.pack(&placed);
        if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            self.best = Some((bytes, placed));
        }
    }

    fn pack(&self, placed: &[usize]) -> Vec<u8> {
        let nbits = self.n * (self.n - 1) / 2;
        let mut bytes = vec![0u8; nbits.div_ceil(8)];
        let mut idx = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.g.has_edge(placed[i], placed[j]) {
                    bytes[idx / 8] |= 1 << (7 - idx % 8);
                }
                idx += 1;
            }
        }
        bytes
    }
}

/// True when exchanging u and v is an automorphism.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}
