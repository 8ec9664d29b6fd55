//! The semigroup tree.
//!
//! Every semigroup `T` of genus `g + 1` has a unique parent `T ∪ {Fb(T)}`,
//! where `Fb` is the largest hole under a fixed graded order. Conversely the
//! children of `S` are `S \ {x}` for the minimal generators `x ≻ Fb(S)`. A
//! depth-first walk from `N^d` therefore meets every semigroup exactly once.

mod oracle;
mod random;

use std::cmp::Ordering;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::gns::Gns;
use crate::order::MonomialOrder;
use crate::point::Point;

pub use oracle::{brute_force_enumerate, brute_force_enumerate_with_cap, DEFAULT_ORACLE_CAP};
pub use random::{random_gns, random_node, random_node_with_budget, DEFAULT_RESTART_BUDGET};

/// A node of the semigroup tree together with its minimal generators.
#[derive(Debug, Clone)]
pub struct TreeNode {
    pub semigroup: Gns,
    /// Largest hole under the tree order; `None` is the `(-1, ..., -1)` sentinel.
    pub order_frobenius: Option<Point>,
    /// All minimal generators, canonical order.
    pub generators: Vec<Point>,
}

impl TreeNode {
    pub fn root(dim: usize) -> Self {
        TreeNode {
            semigroup: Gns::full(dim),
            order_frobenius: None,
            generators: (0..dim).rev().map(|i| Point::unit(dim, i)).collect(),
        }
    }

    /// Builds a node for an arbitrary semigroup.
    pub fn from_gns(semigroup: Gns, order: &MonomialOrder) -> Self {
        let order_frobenius = order.max(semigroup.holes()).cloned();
        let generators = semigroup.minimal_generators();
        TreeNode {
            semigroup,
            order_frobenius,
            generators,
        }
    }

    pub fn genus(&self) -> usize {
        self.semigroup.genus()
    }

    /// Minimal generators strictly above the order-Frobenius element; one
    /// child per entry.
    pub fn generators_above<'a>(
        &'a self,
        order: &'a MonomialOrder,
    ) -> impl Iterator<Item = &'a Point> + 'a {
        self.generators
            .iter()
            .filter(move |x| match &self.order_frobenius {
                None => true,
                Some(fb) => order.compare(x, fb) == Ordering::Greater,
            })
    }

    /// The child `S \ {x}` for a minimal generator `x ≻ Fb(S)`.
    pub fn child(&self, x: &Point, order: &MonomialOrder) -> TreeNode {
        let canonical_max = self.semigroup.holes().last().is_none_or(|h| h < x);
        let semigroup = if canonical_max {
            self.semigroup.with_hole_appended(x.clone())
        } else {
            let mut holes = self.semigroup.holes().to_vec();
            let at = holes.binary_search(x).expect_err("x is not a hole");
            holes.insert(at, x.clone());
            Gns::from_canonical_unchecked(self.semigroup.dim(), holes)
        };
        debug_assert!(order.max(semigroup.holes()) == Some(x));
        let generators = generators_after_removal(&semigroup, &self.generators, x);
        TreeNode {
            semigroup,
            order_frobenius: Some(x.clone()),
            generators,
        }
    }
}

/// Minimal generators of `T = S \ {x}` from those of `S`.
///
/// Generators of `S` other than `x` stay minimal. Any new generator `y` is
/// decomposable in `S` only through `x`, so `y = x + s`; if `s = s1 + s2`
/// is not a generator then `y = (x + s1) + s2` still splits in `T` unless
/// `s1 = s2 = x`. Hence the candidates are `x + G(S)` and `3x`. A candidate
/// `y` is minimal in `T` unless `y - a ∈ T*` for some `a ∈ T*` below it,
/// and it suffices to try `a` among the old generators and the candidates.
fn generators_after_removal(t: &Gns, old: &[Point], x: &Point) -> Vec<Point> {
    let kept = old.iter().filter(|g| *g != x);
    let mut candidates: Vec<Point> = old.iter().map(|g| x.add(g)).collect();
    candidates.push(x.scale(3));
    let mut seen = FxHashSet::default();
    candidates.retain(|y| seen.insert(y.clone()));

    let splits = |y: &Point| {
        kept.clone()
            .chain(candidates.iter())
            .any(|a| a.strictly_divides(y) && t.is_element(&y.checked_sub(a).expect("a <= y")))
    };
    let fresh: Vec<Point> = candidates.iter().filter(|y| !splits(y)).cloned().collect();

    let mut out: Vec<Point> = kept.cloned().chain(fresh).collect();
    out.sort();
    out
}

/// All children of `node`, ordered by the removed generator.
pub fn children(node: &TreeNode, order: &MonomialOrder) -> Vec<TreeNode> {
    node.generators_above(order)
        .map(|x| node.child(x, order))
        .collect()
}

/// How a traversal distributes subtrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// Single worker, deterministic depth-first order.
    Serial,
    /// Work-stealing over subtrees; `None` uses every available core.
    Threads(Option<usize>),
}

impl Parallelism {
    pub fn from_jobs(jobs: usize) -> Self {
        match jobs {
            1 => Parallelism::Serial,
            0 => Parallelism::Threads(None),
            n => Parallelism::Threads(Some(n)),
        }
    }
}

/// Subtrees with fewer remaining levels than this are walked serially.
const PARALLEL_CUTOFF: usize = 3;

/// Folds over every node of genus at most `max_genus`.
///
/// `fold` absorbs one node into an accumulator, `merge` combines the
/// accumulators of sibling subtrees. With an associative `merge` the result
/// is independent of `parallelism`.
pub fn fold_tree<A, I, F, M>(
    dim: usize,
    max_genus: usize,
    order: &MonomialOrder,
    parallelism: Parallelism,
    init: I,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(A, &TreeNode) -> A + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let root = TreeNode::root(dim);
    let walker = Walker {
        max_genus,
        order,
        init: &init,
        fold: &fold,
        merge: &merge,
    };
    match parallelism {
        Parallelism::Serial => walker.serial(&root),
        Parallelism::Threads(None) => walker.parallel(&root),
        Parallelism::Threads(Some(n)) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| walker.parallel(&root)),
    }
}

struct Walker<'a, I, F, M> {
    max_genus: usize,
    order: &'a MonomialOrder,
    init: &'a I,
    fold: &'a F,
    merge: &'a M,
}

impl<A, I, F, M> Walker<'_, I, F, M>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(A, &TreeNode) -> A + Sync,
    M: Fn(A, A) -> A + Sync,
{
    fn serial(&self, node: &TreeNode) -> A {
        let mut acc = (self.fold)((self.init)(), node);
        if node.genus() < self.max_genus {
            for x in node.generators_above(self.order) {
                let sub = self.serial(&node.child(x, self.order));
                acc = (self.merge)(acc, sub);
            }
        }
        acc
    }

    fn parallel(&self, node: &TreeNode) -> A {
        if self.max_genus - node.genus() < PARALLEL_CUTOFF {
            return self.serial(node);
        }
        let acc = (self.fold)((self.init)(), node);
        let xs: Vec<&Point> = node.generators_above(self.order).collect();
        let sub = xs
            .into_par_iter()
            .map(|x| self.parallel(&node.child(x, self.order)))
            .reduce(self.init, self.merge);
        (self.merge)(acc, sub)
    }
}

/// Visits every semigroup of genus `genus` in `N^dim` once and returns the count.
pub fn enumerate_genus<V>(
    dim: usize,
    genus: usize,
    order: &MonomialOrder,
    parallelism: Parallelism,
    visitor: V,
) -> u64
where
    V: Fn(&TreeNode) + Sync,
{
    fold_tree(
        dim,
        genus,
        order,
        parallelism,
        || 0u64,
        |acc, node| {
            if node.genus() == genus {
                visitor(node);
                acc + 1
            } else {
                acc
            }
        },
        |a, b| a + b,
    )
}

/// Depth-first walk over the semigroups of genus `genus` on one thread,
/// in a fixed order. Returns the count.
pub fn for_each_of_genus<V>(dim: usize, genus: usize, order: &MonomialOrder, mut visitor: V) -> u64
where
    V: FnMut(&TreeNode),
{
    fn walk<V: FnMut(&TreeNode)>(
        node: &TreeNode,
        genus: usize,
        order: &MonomialOrder,
        visitor: &mut V,
    ) -> u64 {
        if node.genus() == genus {
            visitor(node);
            return 1;
        }
        node.generators_above(order)
            .map(|x| walk(&node.child(x, order), genus, order, visitor))
            .sum()
    }
    walk(&TreeNode::root(dim), genus, order, &mut visitor)
}

/// Number of semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(dim: usize, max_genus: usize, parallelism: Parallelism) -> Vec<u64> {
    let order = MonomialOrder::graded_lex(dim);
    fold_tree(
        dim,
        max_genus,
        &order,
        parallelism,
        || vec![0u64; max_genus + 1],
        |mut acc, node| {
            acc[node.genus()] += 1;
            acc
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}
