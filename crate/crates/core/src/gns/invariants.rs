use std::collections::VecDeque;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::Gns;
use crate::error::{GnsError, Result};
use crate::order::MonomialOrder;
use crate::point::{points_with_volume_at_most, Point};

/// The counting invariants `e, g, n, c, m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    /// Number of minimal generators.
    pub e: usize,
    /// Genus, the number of holes.
    pub g: usize,
    /// Semigroup elements lying below some hole.
    pub n: usize,
    /// Lattice points lying below some hole.
    pub c: usize,
    /// Multiplicity: fundamental holes plus one.
    pub m: usize,
}

impl Gns {
    /// The minimal generating set `S* \ (S* + S*)`, in canonical order.
    ///
    /// A generator `x` satisfies `x_i <= 2 M_i + 1` on every axis: otherwise
    /// `x = (x - (M_i+1) e_i) + (M_i+1) e_i` splits into two non-holes.
    /// Independently, every point strictly between `0` and `x` is a hole or
    /// has a hole as complement, so `prod (x_i + 1) <= 2g + 2`. The search
    /// runs over the intersection of the two regions.
    pub fn minimal_generators(&self) -> Vec<Point> {
        let bounds: Vec<u32> = self
            .maxima
            .iter()
            .map(|&m| (2 * m + 1).max(1) as u32)
            .collect();
        let volume_cap = 2 * self.genus() as u128 + 2;
        let mut gens: Vec<Point> = points_with_volume_at_most(&bounds, volume_cap)
            .into_iter()
            .filter(|x| !x.is_zero() && self.is_element(x) && !self.splits(x))
            .collect();
        gens.sort();
        gens
    }

    /// True if `x = a + b` with `a, b` nonzero elements.
    fn splits(&self, x: &Point) -> bool {
        x.down_set().any(|a| {
            !a.is_zero()
                && &a != x
                && self.is_element(&a)
                && self.is_element(&x.checked_sub(&a).expect("a <= x"))
        })
    }

    /// `C(S)`, the down-closure of the holes, in canonical order.
    pub fn down_closure(&self) -> Vec<Point> {
        let mut seen: FxHashSet<Point> = self.holes.iter().cloned().collect();
        let mut queue: VecDeque<Point> = self.holes.iter().cloned().collect();
        while let Some(p) = queue.pop_front() {
            for i in 0..self.dim {
                if p.coords()[i] > 0 {
                    let mut q = p.clone();
                    q.coords_mut()[i] -= 1;
                    if !seen.contains(&q) {
                        seen.insert(q.clone());
                        queue.push_back(q);
                    }
                }
            }
        }
        let mut out: Vec<Point> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// `(C(S), N(S))`: the points below some hole, and those of them in `S`.
    pub fn region_sets(&self) -> (Vec<Point>, Vec<Point>) {
        let c = self.down_closure();
        let n = c.iter().filter(|x| self.is_element(x)).cloned().collect();
        (c, n)
    }

    /// Fundamental holes `M(S)*`: holes `h` with `C(h) ∩ S = {0}`.
    pub fn fundamental_holes(&self) -> Vec<Point> {
        let g = self.genus() as u128;
        self.holes
            .iter()
            .filter(|h| {
                h.box_volume() - 1 <= g && h.down_set().all(|a| a.is_zero() || self.is_hole(&a))
            })
            .cloned()
            .collect()
    }

    pub fn multiplicity(&self) -> usize {
        self.fundamental_holes().len() + 1
    }

    pub fn invariants(&self) -> InvariantRecord {
        let gens = self.minimal_generators();
        self.invariants_with_generators(gens.len())
    }

    /// Invariants when the generator count is already known.
    pub fn invariants_with_generators(&self, e: usize) -> InvariantRecord {
        let c = self.down_closure().len();
        let g = self.genus();
        InvariantRecord {
            e,
            g,
            n: c - g,
            c,
            m: self.multiplicity(),
        }
    }

    /// Pseudo-Frobenius elements and special gaps.
    ///
    /// `h` is pseudo-Frobenius when `h + S* ⊆ S`, which reduces to
    /// `h + x ∈ S` for each minimal generator `x` since `S` is closed under
    /// addition. `h` is a special gap when additionally `2h ∈ S`.
    pub fn pseudo_frobenius_and_special_gaps(&self) -> Result<(Vec<Point>, Vec<Point>)> {
        if self.holes.is_empty() {
            return Err(GnsError::EmptyHoleSet);
        }
        Ok(self.pf_eh_with(&self.minimal_generators()))
    }

    pub(crate) fn pf_eh_with(&self, gens: &[Point]) -> (Vec<Point>, Vec<Point>) {
        let pf: Vec<Point> = self
            .holes
            .iter()
            .filter(|h| gens.iter().all(|x| self.is_element(&h.add(x))))
            .cloned()
            .collect();
        let eh = pf
            .iter()
            .filter(|h| self.is_element(&h.scale(2)))
            .cloned()
            .collect();
        (pf, eh)
    }

    /// `x = m + s` with `s` the `order`-largest element of `S` below `x`;
    /// returns `(m, s)`, where `m` lies in `M(S)`.
    pub fn canonical_decompose(&self, x: &Point, order: &MonomialOrder) -> Result<(Point, Point)> {
        self.check_dim(x)?;
        if order.dim() != self.dim {
            return Err(GnsError::DimensionMismatch {
                expected: self.dim,
                found: order.dim(),
            });
        }
        let below: Vec<Point> = x.down_set().filter(|t| self.is_element(t)).collect();
        let s = order.max(&below).expect("0 is always an element").clone();
        let m = x.checked_sub(&s).expect("s <= x");
        Ok((m, s))
    }
}
