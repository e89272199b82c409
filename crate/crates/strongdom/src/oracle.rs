//! Independent brute-force oracles for d_st and γ_st.
//!
//! These share no search machinery with the solvers in [`crate::domatic`]
//! and [`crate::domination`]: partitions come from plain restricted-growth
//! strings and subsets from Gosper's hack, each candidate checked with the
//! public predicate. They exist to catch solver bugs, so they stay dumb.

use thiserror::Error;

use crate::domination::is_strong_dominating_set;
use crate::graph::{Graph, VertexSet};

/// Orders above this make exhaustive partition enumeration unreasonable
/// (Bell(12) ≈ 4.2 million).
pub const ORACLE_MAX_ORDER: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle requires a non-empty graph")]
    EmptyGraph,
    #[error("order {0} exceeds the oracle budget of {ORACLE_MAX_ORDER}")]
    OrderTooLarge(usize),
}

fn check_order(g: &Graph) -> Result<usize, OracleError> {
    match g.order() {
        0 => Err(OracleError::EmptyGraph),
        n if n > ORACLE_MAX_ORDER => Err(OracleError::OrderTooLarge(n)),
        n => Ok(n),
    }
}

/// d_st by trying every set partition of the vertices.
pub fn oracle_strong_domatic(g: &Graph) -> Result<usize, OracleError> {
    let n = check_order(g)?;
    let mut best = 1; // {V} always works
    for classes in set_partitions(n) {
        if classes.len() > best
            && classes.iter().all(|&class| is_strong_dominating_set(g, class))
        {
            best = classes.len();
        }
    }
    Ok(best)
}

/// γ_st by trying every subset in cardinality order.
pub fn oracle_gamma_st(g: &Graph) -> Result<usize, OracleError> {
    let n = check_order(g)?;
    for k in 1..=n {
        let mut found = false;
        subsets_of_size(n, k, |bits| {
            if !found && is_strong_dominating_set(g, VertexSet::from_bits(bits)) {
                found = true;
            }
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set is strong dominating");
}

/// Calls `f` on every n-bit mask with exactly k bits set (Gosper's hack).
fn subsets_of_size(n: usize, k: usize, mut f: impl FnMut(u64)) {
    debug_assert!(k >= 1 && k <= n && n < 64);
    let limit = 1u64 << n;
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        f(mask);
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

/// All set partitions of {0..n-1} as lists of classes, generated from
/// restricted-growth strings: a[0] = 0 and a[i] ≤ 1 + max(a[..i]).
pub(crate) fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions { rgs: vec![0; n], max_prefix: vec![0; n], done: false }
}

pub(crate) struct SetPartitions {
    rgs: Vec<usize>,
    /// max_prefix[i] = max(rgs[..i]), with max_prefix[0] = 0.
    max_prefix: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<VertexSet>;

    fn next(&mut self) -> Option<Vec<VertexSet>> {
        if self.done {
            return None;
        }
        let n = self.rgs.len();
        let k = self.rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![VertexSet::EMPTY; k];
        for (v, &c) in self.rgs.iter().enumerate() {
            classes[c].insert(v);
        }

        // Advance to the next restricted-growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.max_prefix[i] {
                self.rgs[i] += 1;
                let run_max = self.max_prefix[i].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max_prefix[j] = run_max;
                }
                break;
            }
        }
        Some(classes)
    }
}
