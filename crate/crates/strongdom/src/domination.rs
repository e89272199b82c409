//! Dominating-set predicates and exact minimum domination numbers.
//!
//! Everything here reduces to one observation: a set D dominates x in the
//! ordinary sense iff D meets the closed neighborhood N[x], and D *strong*
//! dominates x iff D meets the strong closed neighborhood
//! N_st[x] = {x} ∪ {y ∈ N(x) : deg(y) ≥ deg(x)}. So each variant of the
//! domination number is the minimum hitting set of a family of vertex sets,
//! and one cardinality-ascending search serves all three.

use crate::graph::{Graph, GraphError, VertexSet};

/// The set of vertices able to (strong) cover `vertex`: itself plus every
/// neighbor of at least its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongNeighborhood {
    pub vertex: usize,
    pub members: VertexSet,
}

/// N_st[x] for one vertex.
pub fn strong_closed_neighborhood(g: &Graph, x: usize) -> Result<StrongNeighborhood, GraphError> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: x, order: g.order() });
    }
    Ok(StrongNeighborhood { vertex: x, members: strong_members(g, x) })
}

/// The weak mirror: {x} ∪ {y ∈ N(x) : deg(y) ≤ deg(x)}.
pub fn weak_closed_neighborhood(g: &Graph, x: usize) -> Result<StrongNeighborhood, GraphError> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: x, order: g.order() });
    }
    Ok(StrongNeighborhood { vertex: x, members: weak_members(g, x) })
}

fn strong_members(g: &Graph, x: usize) -> VertexSet {
    let dx = g.neighbors(x).len();
    let mut members = VertexSet::singleton(x);
    for y in g.neighbors(x).iter() {
        if g.neighbors(y).len() >= dx {
            members.insert(y);
        }
    }
    members
}

fn weak_members(g: &Graph, x: usize) -> VertexSet {
    let dx = g.neighbors(x).len();
    let mut members = VertexSet::singleton(x);
    for y in g.neighbors(x).iter() {
        if g.neighbors(y).len() <= dx {
            members.insert(y);
        }
    }
    members
}

fn closed_members(g: &Graph, x: usize) -> VertexSet {
    g.neighbors(x).with(x)
}

/// One cover set per vertex; a set is (strong/weak) dominating iff it meets
/// all of them.
pub(crate) fn strong_cover_sets(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|x| strong_members(g, x)).collect()
}

pub(crate) fn weak_cover_sets(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|x| weak_members(g, x)).collect()
}

pub(crate) fn closed_cover_sets(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|x| closed_members(g, x)).collect()
}

/// True iff every vertex is in `d` or adjacent to a vertex of `d`.
pub fn is_dominating_set(g: &Graph, d: VertexSet) -> bool {
    debug_assert!(d.is_subset_of(g.full_set()));
    let mut covered = d;
    for v in d.iter() {
        covered = covered.union(g.neighbors(v));
    }
    covered == g.full_set()
}

/// True iff every vertex outside `d` has a neighbor in `d` of at least its
/// own degree; equivalently, every strong closed neighborhood meets `d`.
pub fn is_strong_dominating_set(g: &Graph, d: VertexSet) -> bool {
    debug_assert!(d.is_subset_of(g.full_set()));
    g.vertices().all(|x| strong_members(g, x).intersects(d))
}

/// The weak mirror of [`is_strong_dominating_set`].
pub fn is_weak_dominating_set(g: &Graph, d: VertexSet) -> bool {
    debug_assert!(d.is_subset_of(g.full_set()));
    g.vertices().all(|x| weak_members(g, x).intersects(d))
}

/// γ(G): minimum size of a dominating set.
pub fn domination_number(g: &Graph) -> Result<usize, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(min_hitting_set(&closed_cover_sets(g), g.order()).0)
}

/// γ_st(G) together with the lexicographically least minimum strong
/// dominating set.
pub fn strong_domination_number(g: &Graph) -> Result<(usize, VertexSet), GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(min_hitting_set(&strong_cover_sets(g), g.order()))
}

/// γ_w(G): minimum size of a weak dominating set.
pub fn weak_domination_number(g: &Graph) -> Result<usize, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(min_hitting_set(&weak_cover_sets(g), g.order()).0)
}

/// Cardinality-ascending search for the smallest set meeting every cover
/// set. Candidates are extended in ascending vertex order, so the first hit
/// at the optimal cardinality is the lexicographically least witness.
///
/// Pruning: a partial choice is abandoned when some cover set is disjoint
/// from both the chosen set and every still-eligible candidate (vertices
/// above the last pick).
fn min_hitting_set(cover: &[VertexSet], n: usize) -> (usize, VertexSet) {
    debug_assert!(cover.iter().all(|s| !s.is_empty()));
    for k in 1..=n {
        let mut chosen = VertexSet::EMPTY;
        if extend(cover, n, k, 0, &mut chosen) {
            return (k, chosen);
        }
    }
    unreachable!("the full vertex set meets every nonempty cover set");
}

fn extend(cover: &[VertexSet], n: usize, remaining: usize, first: usize, chosen: &mut VertexSet) -> bool {
    if remaining == 0 {
        return cover.iter().all(|s| s.intersects(*chosen));
    }
    // future = chosen ∪ everything we could still pick
    let future = chosen.union(VertexSet::full(n).difference(VertexSet::full(first)));
    if cover.iter().any(|s| !s.intersects(future)) {
        return false;
    }
    for v in first..=n - remaining {
        chosen.insert(v);
        if extend(cover, n, remaining - 1, v + 1, chosen) {
            return true;
        }
        chosen.remove(v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Literal transcription of the definition, kept independent of the
    /// cover-set route used by the library.
    fn is_sds_by_definition(g: &Graph, d: VertexSet) -> bool {
        for x in g.vertices() {
            if d.contains(x) {
                continue;
            }
            let dx = g.degree(x).unwrap();
            let ok = g
                .neighbors(x)
                .iter()
                .any(|y| d.contains(y) && g.degree(y).unwrap() >= dx);
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn strong_neighborhood_cases() {
        // Pendant u = 0 in P_4: N_st[0] = {0, 1}.
        let p4 = families::path(4).unwrap();
        let nb = strong_closed_neighborhood(&p4, 0).unwrap();
        assert_eq!(nb.members, [0, 1].into_iter().collect());

        // Star center: nothing matches its degree.
        let s4 = families::star(4).unwrap();
        assert_eq!(strong_closed_neighborhood(&s4, 0).unwrap().members, VertexSet::singleton(0));

        // Regular graph: N_st[x] = N[x].
        let c5 = families::cycle(5).unwrap();
        for v in 0..5 {
            let nb = strong_closed_neighborhood(&c5, v).unwrap();
            assert_eq!(nb.members, c5.neighbors(v).with(v));
        }

        assert!(strong_closed_neighborhood(&c5, 5).is_err());
    }

    #[test]
    fn dominating_predicate() {
        let c6 = families::cycle(6).unwrap();
        assert!(is_dominating_set(&c6, c6.full_set()));
        assert!(!is_dominating_set(&c6, VertexSet::EMPTY));
        assert!(is_dominating_set(&c6, [0, 3].into_iter().collect()));
        assert!(!is_dominating_set(&c6, [0, 1].into_iter().collect()));
    }

    #[test]
    fn strong_dominating_predicate() {
        // Outer five of the Petersen graph.
        let p = families::petersen();
        assert!(is_strong_dominating_set(&p, VertexSet::full(5)));

        // A single vertex of K_n.
        let k5 = families::complete(5).unwrap();
        assert!(is_strong_dominating_set(&k5, VertexSet::singleton(2)));

        // All leaves of K_{1,3} leave the center strong-uncovered.
        let s3 = families::star(3).unwrap();
        let leaves: VertexSet = [1, 2, 3].into_iter().collect();
        assert!(!is_strong_dominating_set(&s3, leaves));
        assert!(is_weak_dominating_set(&s3, leaves));
    }

    #[test]
    fn predicate_matches_definition_exhaustively() {
        for g in [
            families::path(5).unwrap(),
            families::star(4).unwrap(),
            families::cycle(6).unwrap(),
            families::book(2).unwrap(),
        ] {
            let n = g.order();
            for bits in 0..1u64 << n {
                let d = VertexSet::from_bits(bits);
                assert_eq!(is_strong_dominating_set(&g, d), is_sds_by_definition(&g, d));
            }
        }
    }

    #[test]
    fn regular_graphs_collapse_the_variants() {
        for g in [families::cycle(6).unwrap(), families::complete(5).unwrap(), families::petersen()] {
            let n = g.order().min(8); // keep the exhaustive loop small
            for bits in 0..1u64 << n {
                let d = VertexSet::from_bits(bits);
                let plain = is_dominating_set(&g, d.intersection(g.full_set()));
                assert_eq!(is_strong_dominating_set(&g, d), plain);
                assert_eq!(is_weak_dominating_set(&g, d), plain);
            }
        }
    }

    #[test]
    fn superset_closure() {
        let g = families::book(3).unwrap();
        let (_, witness) = strong_domination_number(&g).unwrap();
        let mut d = witness;
        for v in g.vertices() {
            d.insert(v);
            assert!(is_strong_dominating_set(&g, d));
        }
    }

    #[test]
    fn domination_numbers() {
        let c7 = families::cycle(7).unwrap();
        let (gst, _) = strong_domination_number(&c7).unwrap();
        assert_eq!(gst, 3);

        let k6 = families::complete(6).unwrap();
        assert_eq!(strong_domination_number(&k6).unwrap().0, 1);

        let p4 = families::path(4).unwrap();
        assert_eq!(strong_domination_number(&p4).unwrap(), (2, [1, 2].into_iter().collect()));

        assert!(strong_domination_number(&families::empty(0)).is_err());
        assert!(domination_number(&families::empty(0)).is_err());
    }

    #[test]
    fn gamma_at_most_gamma_st_and_gamma_w() {
        for g in [
            families::path(6).unwrap(),
            families::star(5).unwrap(),
            families::friendship(3).unwrap(),
            families::book(3).unwrap(),
            families::complete_bipartite(2, 4).unwrap(),
        ] {
            let gamma = domination_number(&g).unwrap();
            assert!(gamma <= strong_domination_number(&g).unwrap().0);
            assert!(gamma <= weak_domination_number(&g).unwrap());
        }
    }

    #[test]
    fn isolated_vertices_are_forced() {
        let g = families::empty(3);
        let (gst, witness) = strong_domination_number(&g).unwrap();
        assert_eq!(gst, 3);
        assert_eq!(witness, g.full_set());
        assert_eq!(domination_number(&g).unwrap(), 3);
    }

    #[test]
    fn cycle_formula_brute_forced() {
        // γ_st(C_n) = floor((n+2)/3), checked against plain enumeration.
        for n in 3..=12 {
            let g = families::cycle(n).unwrap();
            let expected = (0..1u64 << n)
                .map(VertexSet::from_bits)
                .filter(|&d| is_sds_by_definition(&g, d))
                .map(|d| d.len())
                .min()
                .unwrap();
            assert_eq!(strong_domination_number(&g).unwrap().0, expected);
            assert_eq!(expected, (n + 2) / 3);
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // C_6 has several minimum strong dominating pairs; {0, 3} is least.
        let c6 = families::cycle(6).unwrap();
        let (k, witness) = strong_domination_number(&c6).unwrap();
        assert_eq!(k, 2);
        assert_eq!(witness, [0, 3].into_iter().collect());
    }
}
