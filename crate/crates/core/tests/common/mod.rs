//! Brute-force reference implementations that work straight from the
//! definitions, scanning explicit boxes of lattice points.

#![allow(dead_code)]

use std::collections::HashSet;

use gns_core::{Gns, MonomialIdeal, MonomialOrder, Point};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All points of the box `[0, top]`.
pub fn box_points(top: &[u32]) -> Vec<Point> {
    let mut out = vec![Vec::<u32>::new()];
    for &t in top {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=t).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Point::from).collect()
}

pub fn le(a: &Point, b: &Point) -> bool {
    a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
}

pub fn sub(a: &Point, b: &Point) -> Point {
    Point::new(a.coords().iter().zip(b.coords()).map(|(x, y)| x - y))
}

/// Largest hole coordinate on each axis, 0 where no hole reaches.
pub fn hole_box(s: &Gns) -> Vec<u32> {
    (0..s.dim())
        .map(|i| s.holes().iter().map(|h| h.coords()[i]).max().unwrap_or(0))
        .collect()
}

pub struct Naive {
    pub dim: usize,
    pub holes: HashSet<Point>,
    pub top: Vec<u32>,
}

impl Naive {
    pub fn new(s: &Gns) -> Self {
        Naive {
            dim: s.dim(),
            holes: s.holes().iter().cloned().collect(),
            top: hole_box(s),
        }
    }

    pub fn in_s(&self, x: &Point) -> bool {
        !self.holes.contains(x)
    }

    /// Elements of `S*` that are not a sum of two elements of `S*`. Any
    /// generator `x` has `x_i <= 2 top_i + 2`: a coordinate beyond that
    /// peels off `(top_i + 1) e_i`, an element, leaving an element.
    pub fn generators(&self) -> Vec<Point> {
        let bound: Vec<u32> = self.top.iter().map(|t| 2 * t + 2).collect();
        let mut out: Vec<Point> = box_points(&bound)
            .into_iter()
            .filter(|x| !x.is_zero() && self.in_s(x))
            .filter(|x| {
                !box_points(x.coords())
                    .iter()
                    .any(|a| !a.is_zero() && a != x && self.in_s(a) && self.in_s(&sub(x, a)))
            })
            .collect();
        out.sort();
        out
    }

    /// `C(S)`: points below some hole.
    pub fn c_set(&self) -> Vec<Point> {
        let mut out: Vec<Point> = box_points(&self.top)
            .into_iter()
            .filter(|x| self.holes.iter().any(|h| le(x, h)))
            .collect();
        out.sort();
        out
    }

    pub fn n_set(&self) -> Vec<Point> {
        self.c_set().into_iter().filter(|x| self.in_s(x)).collect()
    }

    /// Holes with nothing of `S*` below them.
    pub fn fundamental(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self
            .holes
            .iter()
            .filter(|h| {
                box_points(h.coords())
                    .iter()
                    .all(|x| x.is_zero() || !self.in_s(x))
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    /// Holes `h` with `h + s ∈ S` for every `s ∈ S*`. Only `s` below the
    /// hole box matter; anything else pushes `h + s` outside it.
    pub fn pf(&self) -> Vec<Point> {
        let elements: Vec<Point> = box_points(&self.top)
            .into_iter()
            .filter(|x| !x.is_zero() && self.in_s(x))
            .collect();
        let mut out: Vec<Point> = self
            .holes
            .iter()
            .filter(|h| elements.iter().all(|s| self.in_s(&h.add(s))))
            .cloned()
            .collect();
        out.sort();
        out
    }

    pub fn eh(&self) -> Vec<Point> {
        self.pf()
            .into_iter()
            .filter(|h| self.in_s(&h.scale(2)))
            .collect()
    }

    /// Holes with no strictly larger hole.
    pub fn maximal(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self
            .holes
            .iter()
            .filter(|h| !self.holes.iter().any(|k| k != *h && le(h, k)))
            .cloned()
            .collect();
        out.sort();
        out
    }

    /// `|{x ∈ S : x ≺ fb}|` by scanning every point of degree at most `|fb|`.
    pub fn n_order(&self, order: &MonomialOrder, fb: &Point) -> u64 {
        let deg = fb.degree() as u32;
        box_points(&vec![deg; self.dim])
            .into_iter()
            .filter(|x| x.degree() <= deg as u64 && self.in_s(x))
            .filter(|x| order.compare(x, fb) == std::cmp::Ordering::Less)
            .count() as u64
    }
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Point]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.coords().iter().map(|&c| c as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A finite down-closed set of `size` points in `N^dim`, grown from the
/// origin by adding random outer corners.
pub fn random_staircase(dim: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<Point> {
    let mut set: HashSet<Point> = HashSet::from([Point::zero(dim)]);
    while set.len() < size {
        let mut corners: Vec<Point> = set
            .iter()
            .flat_map(|p| (0..dim).map(move |i| p.add(&Point::unit(dim, i))))
            .filter(|q| !set.contains(q))
            .filter(|q| {
                (0..dim).all(|i| {
                    q.coords()[i] == 0 || {
                        let mut r = q.clone();
                        r.coords_mut()[i] -= 1;
                        set.contains(&r)
                    }
                })
            })
            .collect();
        corners.sort();
        corners.dedup();
        let pick = corners[rng.random_range(0..corners.len())].clone();
        set.insert(pick);
    }
    let mut out: Vec<Point> = set.into_iter().collect();
    out.sort();
    out
}

/// The ideal whose standard monomials are `staircase`.
pub fn ideal_of_staircase(dim: usize, staircase: &[Point]) -> MonomialIdeal {
    let set: HashSet<&Point> = staircase.iter().collect();
    let outside = staircase
        .iter()
        .flat_map(|p| (0..dim).map(move |i| p.add(&Point::unit(dim, i))))
        .filter(|q| !set.contains(q));
    MonomialIdeal::new(dim, outside).unwrap()
}

pub fn random_ideal(rng: &mut ChaCha8Rng, max_dim: usize, max_colength: usize) -> MonomialIdeal {
    let dim = rng.random_range(1..=max_dim);
    let size = rng.random_range(1..=max_colength);
    ideal_of_staircase(dim, &random_staircase(dim, size, rng))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial ideal as an explicit set of monomials inside a box.
pub struct MonoSet {
    pub top: Vec<u32>,
    pub members: HashSet<Point>,
}

impl MonoSet {
    pub fn of(ideal: &MonomialIdeal, top: &[u32]) -> Self {
        let members = box_points(top)
            .into_iter()
            .filter(|x| ideal.generators().iter().any(|g| le(g, x)))
            .collect();
        MonoSet {
            top: top.to_vec(),
            members,
        }
    }

    fn inside(&self, x: &Point) -> bool {
        x.coords().iter().zip(&self.top).all(|(a, b)| a <= b)
    }

    pub fn product(&self, other: &MonoSet) -> MonoSet {
        let mut members = HashSet::new();
        for a in &self.members {
            for b in &other.members {
                let c = a.add(b);
                if self.inside(&c) {
                    members.insert(c);
                }
            }
        }
        MonoSet {
            top: self.top.clone(),
            members,
        }
    }

    /// `{x : x + e_i ∈ self}`, 0-based `i`, trusting the box to be large enough.
    pub fn colon(&self, i: usize) -> MonoSet {
        let dim = self.top.len();
        let members = box_points(&self.top)
            .into_iter()
            .filter(|x| {
                let y = x.add(&Point::unit(dim, i));
                !self.inside(&y) || self.members.contains(&y)
            })
            .collect();
        MonoSet {
            top: self.top.clone(),
            members,
        }
    }

    pub fn matches(&self, ideal: &MonomialIdeal) -> bool {
        box_points(&self.top)
            .iter()
            .all(|x| self.members.contains(x) == ideal.contains_monomial(x))
    }

    pub fn outside_count(&self) -> usize {
        box_points(&self.top).len() - self.members.len()
    }
}
