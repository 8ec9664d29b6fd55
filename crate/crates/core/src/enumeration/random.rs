//! Uniform random descents of the semigroup tree.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TreeNode;
use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::order::MonomialOrder;

/// Restarts allowed when a descent hits a leaf before the target genus.
pub const DEFAULT_RESTART_BUDGET: usize = 10_000;

/// A random semigroup of genus `genus`, reached by descending from `N^dim`
/// and picking a child uniformly at each level. Deterministic in `seed`.
///
/// This is not uniform over all semigroups of the given genus.
pub fn random_gns(dim: usize, genus: usize, seed: u64) -> Result<Gns> {
    random_node(dim, genus, seed).map(|n| n.semigroup)
}

pub fn random_node(dim: usize, genus: usize, seed: u64) -> Result<TreeNode> {
    random_node_with_budget(dim, genus, seed, DEFAULT_RESTART_BUDGET)
}

pub fn random_node_with_budget(
    dim: usize,
    genus: usize,
    seed: u64,
    restarts: usize,
) -> Result<TreeNode> {
    if dim == 0 {
        return Err(GnsError::ZeroDimension);
    }
    let order = MonomialOrder::graded_lex(dim);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..=restarts {
        let mut node = TreeNode::root(dim);
        while node.genus() < genus {
            let above: Vec<_> = node.generators_above(&order).cloned().collect();
            if above.is_empty() {
                continue 'attempt;
            }
            let x = &above[rng.random_range(0..above.len())];
            node = node.child(x, &order);
        }
        return Ok(node);
    }
    Err(GnsError::Unreachable { genus, restarts })
}
