//! Permutations of `{1, ..., n}` and their canonical cycle notations.
//!
//! A permutation is a slice `perm` of 1-based images: `perm[t - 1]` is the
//! image of `t`. The determinant sums need each permutation written in a
//! canonical cycle form relative to an anchor index:
//!
//! * **Left-ordered**: the anchor opens the first cycle, which lists the
//!   anchor's orbit in application order. Every other cycle starts with its
//!   minimum element, and those cycles follow in ascending order of their
//!   leading elements.
//! * **Right-ordered**: the mirror image. Each cycle is written reversed
//!   (its leader at the right end), the anchor's cycle closes the list, and
//!   the remaining cycles stand to its left, the one with the smallest
//!   leader written closest to the anchor cycle.
//!
//! Fixed points count as length-1 cycles, so the sign `(-1)^(n - r)` taken
//! over `r` cycles agrees with the classical permutation sign.

use crate::error::{Error, Result};

/// Which of the two canonical cycle orders a decomposition uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleOrder {
    LeftOrdered,
    RightOrdered,
}

/// A permutation written in canonical cycle notation for a given anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub anchor: usize,
    pub order: CycleOrder,
    /// Cycles in written order; see the module docs for the conventions.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Number of cycles `r`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

pub(crate) fn validate_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".to_string()));
    }
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v == 0 || v > n {
            return Err(Error::InvalidPermutation(format!(
                "image {v} outside 1..={n}"
            )));
        }
        if seen[v] {
            return Err(Error::InvalidPermutation(format!("image {v} repeated")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Canonical cycle decomposition of `perm` anchored at `anchor`.
pub fn canonical_cycles(
    perm: &[usize],
    anchor: usize,
    order: CycleOrder,
) -> Result<CycleDecomposition> {
    validate_permutation(perm)?;
    let n = perm.len();
    if anchor == 0 || anchor > n {
        return Err(Error::IndexOutOfRange { index: anchor, bound: n });
    }

    let mut cycles = Vec::new();
    let mut visited = vec![false; n + 1];
    let mut start = anchor;
    loop {
        let mut cycle = vec![start];
        visited[start] = true;
        let mut x = perm[start - 1];
        while x != start {
            visited[x] = true;
            cycle.push(x);
            x = perm[x - 1];
        }
        cycles.push(cycle);
        match (1..=n).find(|&v| !visited[v]) {
            Some(next) => start = next,
            None => break,
        }
    }

    if order == CycleOrder::RightOrdered {
        for cycle in &mut cycles {
            cycle.reverse();
        }
        cycles.reverse();
    }
    Ok(CycleDecomposition { anchor, order, cycles })
}

/// Advances `p` to its lexicographic successor; returns false at the last
/// permutation.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(any(feature = "parallel", test))]
pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `idx`-th permutation of `{1, ..., n}` in lexicographic order,
/// decoded from the factorial number system.
#[cfg(any(feature = "parallel", test))]
pub(crate) fn permutation_at(n: usize, mut idx: u64) -> Vec<usize> {
    debug_assert!(idx < factorial(n));
    let mut available: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let block = factorial(n - 1 - pos);
        let pick = (idx / block) as usize;
        idx %= block;
        out.push(available.remove(pick));
    }
    out
}
