//! Centrality of `τ` in terms of branch data: `τ` is central in `Aut(X)`
//! exactly when exponents are constant on the orbits of the reduced group.

use super::group::ReducedGroup;
use crate::arith::ExtPoint;
use crate::error::{Error, Result};

/// `true` iff `exps` is constant on every block of `orbits` (blocks hold
/// indices into `exps`). Exponents are compared mod `n`.
pub fn centrality_check(n: u64, orbits: &[Vec<usize>], exps: &[u64]) -> bool {
    orbits
        .iter()
        .all(|block| block.windows(2).all(|w| exps[w[0]] % n == exps[w[1]] % n))
}

/// Splits `points` into orbits of `group`; fails if the set is not
/// invariant.
pub fn orbit_partition(group: ReducedGroup, points: &[ExtPoint]) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; points.len()];
    let mut blocks = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut block = Vec::new();
        for p in group.orbit(&points[start]) {
            let idx = points.iter().position(|q| *q == p).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "{group} moves {} to {p}, which is not a branch point",
                    points[start]
                ))
            })?;
            seen[idx] = true;
            block.push(idx);
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}
