//! Exact strong domatic and domatic numbers.
//!
//! A partition of V into k strong dominating sets is the same thing as a
//! k-coloring of V in which every strong closed neighborhood N_st[x] sees
//! all k colors (a rainbow cover): the color classes are then exactly the
//! classes of a strong domatic partition. The solver tests that feasibility
//! for k descending from an upper bound; the first feasible k is d_st,
//! because merging two classes turns a k-partition into a (k-1)-partition.
//!
//! Replacing N_st[x] by the closed neighborhood N[x] in the same engine
//! yields the classic domatic number.

use thiserror::Error;

use crate::domination::{self, strong_closed_neighborhood};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("classes {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("classes do not cover all vertices (missing {missing:?})")]
    NotCovering { missing: VertexSet },
    #[error("class {index} contains vertices outside 0..{order}")]
    OutOfRange { index: usize, order: usize },
    #[error("partition is over order {partition} but the graph has order {graph}")]
    OrderMismatch { partition: usize, graph: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("node budget of {budget} exhausted; result would be unreliable")]
    BudgetExceeded { budget: u64 },
}

/// An ordered list of pairwise-disjoint, non-empty vertex sets covering all
/// of 0..order. Construction validates; the classes never change afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(order: usize, classes: Vec<VertexSet>) -> Result<Partition, PartitionError> {
        let full = VertexSet::full(order);
        let mut seen = VertexSet::EMPTY;
        for (i, &class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(i));
            }
            if !class.is_subset_of(full) {
                return Err(PartitionError::OutOfRange { index: i, order });
            }
            if seen.intersects(class) {
                let j = classes[..i]
                    .iter()
                    .position(|&earlier| earlier.intersects(class))
                    .expect("an earlier class overlaps");
                return Err(PartitionError::Overlap(j, i));
            }
            seen = seen.union(class);
        }
        if seen != full {
            return Err(PartitionError::NotCovering { missing: full.difference(seen) });
        }
        Ok(Partition { order, classes })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// True iff every class of `p` is a strong dominating set of `g`. Malformed
/// partitions are unrepresentable; a partition over the wrong order is an
/// error, distinct from `false`.
pub fn is_strong_domatic_partition(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    if p.order() != g.order() {
        return Err(PartitionError::OrderMismatch { partition: p.order(), graph: g.order() });
    }
    Ok(p.classes().iter().all(|&class| domination::is_strong_dominating_set(g, class)))
}

/// The upper bounds the solver starts from, kept for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// m: number of vertices of maximum degree.
    pub max_degree_count: usize,
    /// δ + 1.
    pub min_degree_plus_one: usize,
    /// min over x of |N_st[x]|; implies both bounds above.
    pub min_strong_neighborhood: usize,
    /// ⌊n / γ_st⌋.
    pub gamma_st_quotient: usize,
}

impl Bounds {
    pub fn tightest(&self) -> usize {
        self.min_strong_neighborhood.min(self.gamma_st_quotient)
    }
}

/// The strong domatic number with a witness partition and the bounds that
/// framed the search.
#[derive(Debug, Clone)]
pub struct DstResult {
    pub value: usize,
    pub witness: Partition,
    pub bounds: Bounds,
}

/// min over x of |N_st[x]|. Any strong domatic partition has at most this
/// many classes, since the classes must split every N_st[x].
pub fn dst_upper_bound(g: &Graph) -> Result<usize, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(g
        .vertices()
        .map(|x| strong_closed_neighborhood(g, x).expect("vertex in range").members.len())
        .min()
        .expect("non-empty graph"))
}

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Abort with [`SolveError::BudgetExceeded`] after this many search
    /// nodes rather than report anything unreliable.
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: 100_000_000 }
    }
}

/// d_st(G) with the default node budget.
pub fn strong_domatic_number(g: &Graph) -> Result<DstResult, SolveError> {
    strong_domatic_number_with(g, &SolverConfig::default())
}

pub fn strong_domatic_number_with(g: &Graph, config: &SolverConfig) -> Result<DstResult, SolveError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    let (gamma_st, _) = domination::strong_domination_number(g)?;
    let bounds = Bounds {
        max_degree_count: g.max_degree_count()?,
        min_degree_plus_one: g.min_degree()? + 1,
        min_strong_neighborhood: dst_upper_bound(g)?,
        gamma_st_quotient: n / gamma_st,
    };
    let cover = domination::strong_cover_sets(g);
    let (value, classes) = max_rainbow(&cover, n, bounds.tightest(), config.node_budget)?;
    let witness = Partition::new(n, classes).expect("solver produces a valid partition");
    debug_assert_eq!(is_strong_domatic_partition(g, &witness), Ok(true));
    debug_assert!(value <= bounds.tightest());
    Ok(DstResult { value, witness, bounds })
}

/// The classic domatic number d(G), via the same engine over closed
/// neighborhoods.
pub fn domatic_number(g: &Graph) -> Result<usize, SolveError> {
    domatic_number_with(g, &SolverConfig::default())
}

pub fn domatic_number_with(g: &Graph, config: &SolverConfig) -> Result<usize, SolveError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    let cover = domination::closed_cover_sets(g);
    let gamma = domination::domination_number(g)?;
    let upper = cover.iter().map(|s| s.len()).min().expect("non-empty").min(n / gamma);
    let (value, _) = max_rainbow(&cover, n, upper, config.node_budget)?;
    Ok(value)
}

/// Finds the largest k ≤ upper for which the cover family admits a rainbow
/// k-coloring, returning the color classes of the first witness found.
fn max_rainbow(
    cover: &[VertexSet],
    n: usize,
    upper: usize,
    node_budget: u64,
) -> Result<(usize, Vec<VertexSet>), SolveError> {
    let mut search = RainbowSearch::new(cover, n, node_budget);
    for k in (2..=upper).rev() {
        if let Some(classes) = search.feasible(k)? {
            return Ok((k, classes));
        }
    }
    // k = 1 is always feasible: V itself is a strong dominating set.
    Ok((1, vec![VertexSet::full(n)]))
}

struct RainbowSearch<'a> {
    cover: &'a [VertexSet],
    n: usize,
    /// member_of[v]: indices of the cover sets containing v.
    member_of: Vec<Vec<usize>>,
    /// Assignment order: most constrained vertex first (smallest cover set
    /// it belongs to), ties by index.
    order: Vec<usize>,
    nodes_left: u64,
    budget: u64,
}

struct SetState {
    /// color_count[c]: how many members of the set currently carry color c.
    color_count: Vec<u32>,
    distinct: usize,
    unassigned: usize,
}

impl<'a> RainbowSearch<'a> {
    fn new(cover: &'a [VertexSet], n: usize, budget: u64) -> Self {
        let mut member_of = vec![Vec::new(); n];
        for (i, set) in cover.iter().enumerate() {
            for v in set.iter() {
                member_of[v].push(i);
            }
        }
        let tightest = |v: usize| {
            member_of[v]
                .iter()
                .map(|&i| cover[i].len())
                .min()
                .unwrap_or(usize::MAX)
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (tightest(v), v));
        RainbowSearch { cover, n, member_of, order, nodes_left: budget, budget }
    }

    fn feasible(&mut self, k: usize) -> Result<Option<Vec<VertexSet>>, SolveError> {
        let mut sets: Vec<SetState> = self
            .cover
            .iter()
            .map(|s| SetState { color_count: vec![0; k], distinct: 0, unassigned: s.len() })
            .collect();
        // A set smaller than k can never become rainbow.
        if sets.iter().any(|s| s.unassigned < k) {
            return Ok(None);
        }
        let mut color = vec![usize::MAX; self.n];
        if self.assign(0, 0, k, &mut color, &mut sets)? {
            let mut classes = vec![VertexSet::EMPTY; k];
            for v in 0..self.n {
                classes[color[v]].insert(v);
            }
            Ok(Some(classes))
        } else {
            Ok(None)
        }
    }

    /// Tries every admissible color for the vertex at `pos`; `used` is the
    /// number of distinct colors already placed (new colors are introduced
    /// in order, breaking color symmetry).
    fn assign(
        &mut self,
        pos: usize,
        used: usize,
        k: usize,
        color: &mut Vec<usize>,
        sets: &mut Vec<SetState>,
    ) -> Result<bool, SolveError> {
        if pos == self.n {
            return Ok(true);
        }
        let v = self.order[pos];
        for c in 0..=used.min(k - 1) {
            if self.nodes_left == 0 {
                return Err(SolveError::BudgetExceeded { budget: self.budget });
            }
            self.nodes_left -= 1;
            if self.place(v, c, k, sets) {
                color[v] = c;
                if self.assign(pos + 1, used.max(c + 1), k, color, sets)? {
                    return Ok(true);
                }
                color[v] = usize::MAX;
            }
            self.unplace(v, c, sets);
        }
        Ok(false)
    }

    /// Records `color[v] = c` in every cover set containing v and reports
    /// whether all of those sets can still become rainbow: a set fails when
    /// the colors it is missing outnumber its unassigned members.
    fn place(&self, v: usize, c: usize, k: usize, sets: &mut [SetState]) -> bool {
        let mut ok = true;
        for &i in &self.member_of[v] {
            let s = &mut sets[i];
            s.color_count[c] += 1;
            if s.color_count[c] == 1 {
                s.distinct += 1;
            }
            s.unassigned -= 1;
            if k - s.distinct > s.unassigned {
                ok = false;
            }
        }
        ok
    }

    fn unplace(&self, v: usize, c: usize, sets: &mut [SetState]) {
        for &i in &self.member_of[v] {
            let s = &mut sets[i];
            s.color_count[c] -= 1;
            if s.color_count[c] == 0 {
                s.distinct -= 1;
            }
            s.unassigned += 1;
        }
    }
}
