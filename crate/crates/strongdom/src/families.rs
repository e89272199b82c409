//! Parametric generators for the graph families whose strong domatic numbers
//! are known in closed form, plus the corona and disjoint-union compositions.
//!
//! Labelings are fixed so that witnesses and goldens reproduce exactly:
//! paths run 0..n-1 in line order, the star hub is vertex 0, the friendship
//! hub is vertex 0, and book pages hang off the spine edge {0, 1}.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{kind} requires {constraint}, got {got}")]
    InvalidSize { kind: FamilyKind, constraint: &'static str, got: usize },
    #[error("corona requires a non-empty first factor")]
    EmptyCoronaHost,
    #[error("unknown family kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} takes {expected} parameter(s), got {got}")]
    WrongArity { kind: FamilyKind, expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Empty,
    Friendship,
    Book,
    Petersen,
}

impl FamilyKind {
    pub fn arity(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite => 2,
            FamilyKind::Petersen => 0,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Star => "star",
            FamilyKind::Empty => "empty",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Book => "book",
            FamilyKind::Petersen => "petersen",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete_bipartite" => FamilyKind::CompleteBipartite,
            "star" => FamilyKind::Star,
            "empty" => FamilyKind::Empty,
            "friendship" => FamilyKind::Friendship,
            "book" => FamilyKind::Book,
            "petersen" => FamilyKind::Petersen,
            _ => return Err(FamilyError::UnknownKind(s.to_string())),
        })
    }
}

/// A family selector: a kind plus its 0, 1 or 2 integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Result<Self, FamilyError> {
        if params.len() != kind.arity() {
            return Err(FamilyError::WrongArity {
                kind,
                expected: kind.arity(),
                got: params.len(),
            });
        }
        Ok(FamilySpec { kind, params })
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match (self.kind, self.params.as_slice()) {
            (FamilyKind::Path, &[n]) => path(n),
            (FamilyKind::Cycle, &[n]) => cycle(n),
            (FamilyKind::Complete, &[n]) => complete(n),
            (FamilyKind::CompleteBipartite, &[a, b]) => complete_bipartite(a, b),
            (FamilyKind::Star, &[n]) => star(n),
            (FamilyKind::Empty, &[n]) => Ok(empty(n)),
            (FamilyKind::Friendship, &[n]) => friendship(n),
            (FamilyKind::Book, &[n]) => book(n),
            (FamilyKind::Petersen, &[]) => Ok(petersen()),
            _ => unreachable!("arity checked at construction"),
        }
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(n, &edges.into_iter().collect::<Vec<_>>())
        .expect("family generators produce valid simple graphs")
}

/// P_n, vertices in line order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Path, constraint: "n >= 1", got: n });
    }
    Ok(build(n, (1..n).map(|v| (v - 1, v))))
}

/// C_n for n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Cycle, constraint: "n >= 3", got: n });
    }
    Ok(build(n, (0..n).map(|v| (v, (v + 1) % n))))
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Complete, constraint: "n >= 1", got: n });
    }
    Ok(build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))))
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(FamilyError::InvalidSize {
            kind: FamilyKind::CompleteBipartite,
            constraint: "both parts >= 1",
            got: a.min(b),
        });
    }
    Ok(build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))))
}

/// K_{1,n}: the star with hub 0 and n leaves.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Star, constraint: "n >= 1", got: n });
    }
    Ok(build(n + 1, (1..=n).map(|v| (0, v))))
}

/// The edgeless graph on n vertices.
pub fn empty(n: usize) -> Graph {
    build(n, [])
}

/// F_n: n triangles sharing hub vertex 0. Triangle i uses vertices
/// 2i-1 and 2i.
pub fn friendship(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Friendship, constraint: "n >= 1", got: n });
    }
    let edges = (1..=n).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    Ok(build(2 * n + 1, edges))
}

/// B_n: n quadrilateral pages through the spine edge {0, 1}. Page i adds
/// vertices a = 2i+2 adjacent to 0 and b = 2i+3 adjacent to 1, with a ~ b.
pub fn book(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidSize { kind: FamilyKind::Book, constraint: "n >= 1", got: n });
    }
    let pages = (0..n).flat_map(|i| {
        let (a, b) = (2 * i + 2, 2 * i + 3);
        [(0, a), (1, b), (a, b)]
    });
    Ok(build(2 * n + 2, std::iter::once((0, 1)).chain(pages)))
}

/// The Petersen graph: outer cycle 0-1-2-3-4, spokes i ~ i+5, and the inner
/// pentagram 5-7-9-6-8-5.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|v| (v, (v + 1) % 5));
    let spokes = (0..5).map(|v| (v, v + 5));
    let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
    build(10, outer.chain(spokes).chain(inner))
}

/// The corona g ∘ h: one copy of `g` plus one copy of `h` per vertex of `g`,
/// the i-th copy fully joined to vertex i. Copy i of `h` occupies indices
/// n + i·m .. n + (i+1)·m - 1, where n = |V(g)| and m = |V(h)|.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    let n = g.order();
    if n == 0 {
        return Err(FamilyError::EmptyCoronaHost);
    }
    let m = h.order();
    let mut edges = g.edges();
    for i in 0..n {
        let base = n + i * m;
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..m {
            edges.push((i, base + u));
        }
    }
    Ok(build(n * (1 + m), edges))
}

/// Disjoint union, with `h`'s vertices shifted past `g`'s.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (n + u, n + v)));
    build(n + h.order(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        g.vertices().map(|v| g.degree(v).unwrap()).collect()
    }

    #[test]
    fn basic_families() {
        assert_eq!(cycle(3).unwrap().edge_count(), 3); // C_3 = K_3
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(degrees(&k23), vec![3, 3, 2, 2, 2]);
        let s5 = star(5).unwrap();
        assert_eq!(s5.max_degree_count().unwrap(), 1);
        assert_eq!(s5.degree(0).unwrap(), 5);
        assert_eq!(empty(0).order(), 0);
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn star_center_and_leaves() {
        let g = star(4).unwrap();
        assert_eq!(g.degree(0).unwrap(), 4);
        for v in 1..=4 {
            assert_eq!(g.degree(v).unwrap(), 1);
        }
    }

    #[test]
    fn friendship_shape() {
        assert_eq!(friendship(1).unwrap().edge_count(), 3); // K_3
        let f3 = friendship(3).unwrap();
        assert_eq!(f3.order(), 7);
        assert_eq!(f3.degree(0).unwrap(), 6);
        assert!((1..7).all(|v| f3.degree(v).unwrap() == 2));
        let f2 = friendship(2).unwrap();
        assert_eq!((f2.order(), f2.edge_count()), (5, 6));
        assert!(friendship(0).is_err());
        // Exactly one vertex of degree 2n for n >= 2.
        for n in 2..=5 {
            let g = friendship(n).unwrap();
            assert_eq!(g.order(), 2 * n + 1);
            assert_eq!(degrees(&g).iter().filter(|&&d| d == 2 * n).count(), 1);
        }
    }

    #[test]
    fn book_shape() {
        let b1 = book(1).unwrap();
        assert_eq!((b1.order(), b1.edge_count()), (4, 4)); // C_4
        let b3 = book(3).unwrap();
        assert_eq!((b3.order(), b3.edge_count()), (8, 10));
        assert_eq!(degrees(&b3).iter().filter(|&&d| d == 4).count(), 2);
        assert_eq!(degrees(&book(2).unwrap()), vec![3, 3, 2, 2, 2, 2]);
        assert!(book(0).is_err());
        for n in 2..=5 {
            let g = book(n).unwrap();
            assert_eq!(g.order(), 2 * n + 2);
            assert_eq!(degrees(&g).iter().filter(|&&d| d == n + 1).count(), 2);
        }
    }

    #[test]
    fn corona_counts() {
        let p2 = path(2).unwrap();
        let k1 = complete(1).unwrap();
        let g = corona(&p2, &k1).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 3)); // P_4 up to isomorphism

        let k3 = complete(3).unwrap();
        let g = corona(&k3, &empty(2)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 9));

        for n in 2..=5 {
            let host = path(n).unwrap();
            let g = corona(&host, &k1).unwrap();
            assert_eq!(g.order(), 2 * n);
            // Host degrees 2 or 3, pendants degree 1.
            for v in 0..n {
                assert!(matches!(g.degree(v).unwrap(), 2 | 3));
            }
            for v in n..2 * n {
                assert_eq!(g.degree(v).unwrap(), 1);
            }
        }

        assert!(corona(&empty(0), &k1).is_err());
    }

    #[test]
    fn corona_edge_count_formula() {
        let g = cycle(4).unwrap();
        let h = path(3).unwrap();
        let c = corona(&g, &h).unwrap();
        assert_eq!(c.order(), 4 * (1 + 3));
        assert_eq!(c.edge_count(), g.edge_count() + 4 * h.edge_count() + 4 * 3);
    }

    #[test]
    fn disjoint_union_blocks() {
        let k4 = complete(4).unwrap();
        let g = disjoint_union(&k4, &k4);
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(!g.is_connected());

        let h = path(4).unwrap();
        assert_eq!(disjoint_union(&empty(0), &h), h);
    }

    #[test]
    fn petersen_structure() {
        let p = petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.neighbors(1).iter().collect::<Vec<_>>(), vec![0, 2, 6]);
        assert_eq!(p.neighbors(4).iter().collect::<Vec<_>>(), vec![0, 3, 9]);
        assert_eq!(p.neighbors(5).iter().collect::<Vec<_>>(), vec![0, 7, 8]);
    }

    #[test]
    fn petersen_girth_five() {
        // No triangles and no 4-cycles: any two adjacent vertices share no
        // neighbor, any two non-adjacent share exactly one.
        let p = petersen();
        for u in 0..10 {
            for v in u + 1..10 {
                let common = p.neighbors(u).intersection(p.neighbors(v)).len();
                if p.has_edge(u, v) {
                    assert_eq!(common, 0);
                } else {
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn family_spec_parsing() {
        let spec = FamilySpec::new(FamilyKind::Cycle, vec![9]).unwrap();
        assert_eq!(spec.build().unwrap().order(), 9);
        assert!(FamilySpec::new(FamilyKind::Cycle, vec![]).is_err());
        assert!(FamilySpec::new(FamilyKind::Petersen, vec![1]).is_err());
        assert_eq!("book".parse::<FamilyKind>().unwrap(), FamilyKind::Book);
        assert!("triangle".parse::<FamilyKind>().is_err());
    }
}
