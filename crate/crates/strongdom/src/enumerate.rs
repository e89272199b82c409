//! Exhaustive generation of k-regular graphs of small order, one
//! representative per isomorphism class, disconnected members included.
//!
//! Rows of the adjacency matrix are filled in vertex order; a branch dies
//! when some vertex can no longer reach degree k, when the open degree sum
//! goes odd, or when swapping two adjacent rows would make the decided part
//! of the matrix lexicographically smaller (the minimum labeling of every
//! class survives that test, so no class is lost). Survivors are reduced to
//! canonical form and deduplicated; output is in ascending canonical order.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::graph::{Graph, VertexSet};

/// Beyond this order the generate-and-canonicalize strategy stops being a
/// desk-scale computation.
pub const ENUM_MAX_ORDER: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("no {degree}-regular graph of order {order} exists: n·k must be even")]
    ParityViolation { order: usize, degree: usize },
    #[error("degree {degree} must be smaller than order {order}")]
    DegreeTooLarge { order: usize, degree: usize },
    #[error("order {0} exceeds the enumeration budget of {ENUM_MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// All k-regular graphs of order n up to isomorphism, each returned in its
/// canonical labeling, ascending by canonical form.
pub fn enumerate_regular(n: usize, k: usize, connected_only: bool) -> Result<Vec<Graph>, EnumError> {
    if n > ENUM_MAX_ORDER {
        return Err(EnumError::OrderTooLarge(n));
    }
    if k >= n {
        return Err(EnumError::DegreeTooLarge { order: n, degree: k });
    }
    if n * k % 2 != 0 {
        return Err(EnumError::ParityViolation { order: n, degree: k });
    }
    let mut gen = Generator {
        n,
        k,
        adj: vec![VertexSet::EMPTY; n],
        degree: vec![0; n],
        connected_only,
        classes: BTreeMap::new(),
    };
    gen.fill_row(0);
    Ok(gen.classes.into_values().collect())
}

struct Generator {
    n: usize,
    k: usize,
    adj: Vec<VertexSet>,
    degree: Vec<usize>,
    connected_only: bool,
    classes: BTreeMap<CanonicalForm, Graph>,
}

impl Generator {
    fn fill_row(&mut self, row: usize) {
        if row == self.n {
            self.emit();
            return;
        }
        let need = self.k - self.degree[row];
        let candidates: Vec<usize> =
            (row + 1..self.n).filter(|&j| self.degree[j] < self.k).collect();
        let mut chosen = Vec::with_capacity(need);
        self.choose(row, need, 0, &candidates, &mut chosen);
    }

    fn choose(&mut self, row: usize, need: usize, from: usize, candidates: &[usize], chosen: &mut Vec<usize>) {
        if need == 0 {
            if self.row_is_viable(row) {
                self.fill_row(row + 1);
            }
            return;
        }
        if candidates.len() - from < need {
            return;
        }
        for idx in from..candidates.len() {
            let j = candidates[idx];
            self.adj[row].insert(j);
            self.adj[j].insert(row);
            self.degree[row] += 1;
            self.degree[j] += 1;
            chosen.push(j);
            self.choose(row, need - 1, idx + 1, candidates, chosen);
            chosen.pop();
            self.adj[row].remove(j);
            self.adj[j].remove(row);
            self.degree[row] -= 1;
            self.degree[j] -= 1;
        }
    }

    /// Checks a just-completed row: every later vertex must still be able to
    /// reach degree k, the open degree sum must be even, and no adjacent row
    /// swap may lower the decided part of the matrix.
    fn row_is_viable(&self, row: usize) -> bool {
        let mut open_sum = 0;
        for j in row + 1..self.n {
            let open = self.k - self.degree[j];
            // Future partners of j all lie in row+1..n, minus j itself.
            if open > self.n - row - 2 {
                return false;
            }
            open_sum += open;
        }
        if open_sum % 2 != 0 {
            return false;
        }
        row == 0 || !self.swap_improves(row - 1)
    }

    /// Would exchanging labels r and r+1 make the decided upper triangle
    /// (rows 0..=r+1, read row-major) lexicographically smaller?
    fn swap_improves(&self, r: usize) -> bool {
        let tau = |x: usize| match x {
            _ if x == r => r + 1,
            _ if x == r + 1 => r,
            _ => x,
        };
        for p in 0..=r + 1 {
            for q in p + 1..self.n {
                let original = self.adj[p].contains(q);
                let swapped = self.adj[tau(p)].contains(tau(q));
                if swapped != original {
                    return original; // first difference: smaller iff 1 -> 0
                }
            }
        }
        false
    }

    fn emit(&mut self) {
        let g = Graph::from_adjacency(self.adj.clone());
        debug_assert!(self.degree.iter().all(|&d| d == self.k));
        if self.connected_only && !g.is_connected() {
            return;
        }
        let form = canonical_form(&g).expect("order within canon budget");
        self.classes
            .entry(form)
            .or_insert_with(|| canonical_graph(&g).expect("order within canon budget"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(
            enumerate_regular(5, 3, false),
            Err(EnumError::ParityViolation { order: 5, degree: 3 })
        );
        assert_eq!(
            enumerate_regular(4, 4, false),
            Err(EnumError::DegreeTooLarge { order: 4, degree: 4 })
        );
        assert_eq!(enumerate_regular(13, 2, false), Err(EnumError::OrderTooLarge(13)));
    }

    #[test]
    fn cubic_order_four_is_k4() {
        let graphs = enumerate_regular(4, 3, false).unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(are_isomorphic(&graphs[0], &families::complete(4).unwrap()).unwrap());
    }

    #[test]
    fn cubic_order_six_has_two_classes() {
        let graphs = enumerate_regular(6, 3, false).unwrap();
        assert_eq!(graphs.len(), 2);
        assert!(graphs.iter().any(|g| are_isomorphic(g, &families::complete_bipartite(3, 3).unwrap()).unwrap()));
        assert!(graphs.iter().all(|g| g.is_connected()));
    }

    #[test]
    fn cubic_order_eight_has_six_classes() {
        let graphs = enumerate_regular(8, 3, false).unwrap();
        assert_eq!(graphs.len(), 6);
        let connected = enumerate_regular(8, 3, true).unwrap();
        assert_eq!(connected.len(), 5);
        // The one disconnected class is two copies of K_4.
        let k4 = families::complete(4).unwrap();
        let two_k4 = families::disjoint_union(&k4, &k4);
        let disconnected: Vec<&Graph> = graphs.iter().filter(|g| !g.is_connected()).collect();
        assert_eq!(disconnected.len(), 1);
        assert!(are_isomorphic(disconnected[0], &two_k4).unwrap());
    }

    #[test]
    fn two_regular_classes_are_cycle_partitions() {
        // 2-regular graphs of order n = multisets of cycle lengths >= 3.
        assert_eq!(enumerate_regular(3, 2, false).unwrap().len(), 1); // C_3
        assert_eq!(enumerate_regular(6, 2, false).unwrap().len(), 2); // C_6, 2C_3
        assert_eq!(enumerate_regular(9, 2, false).unwrap().len(), 3); // C_9, C_3+C_6, 3C_3
        assert_eq!(enumerate_regular(9, 2, true).unwrap().len(), 1);
    }

    #[test]
    fn zero_and_one_regular() {
        assert_eq!(enumerate_regular(5, 0, false).unwrap().len(), 1);
        assert_eq!(enumerate_regular(6, 1, false).unwrap().len(), 1); // perfect matching
        assert_eq!(enumerate_regular(7, 1, false), Err(EnumError::ParityViolation { order: 7, degree: 1 }));
    }

    #[test]
    fn output_is_deterministic_and_duplicate_free() {
        let a = enumerate_regular(8, 3, false).unwrap();
        let b = enumerate_regular(8, 3, false).unwrap();
        assert_eq!(a.len(), b.len());
        for (g, h) in a.iter().zip(&b) {
            assert_eq!(g, h);
        }
        for (i, g) in a.iter().enumerate() {
            assert_eq!(g.regular_degree(), Some(3));
            for h in &a[i + 1..] {
                assert!(!are_isomorphic(g, h).unwrap());
            }
        }
    }
}
