//! Lattice points of `N^d`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A point of `N^d`.
///
/// `Ord` is the canonical order used throughout the crate: graded
/// lexicographic with variable priority `x_1 > x_2 > ... > x_d`. It refines
/// the componentwise partial order, so `a <= b` componentwise implies
/// `a.cmp(&b) != Greater`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(SmallVec<[u32; 6]>);

impl Point {
    pub fn new(coords: impl IntoIterator<Item = u32>) -> Self {
        Point(coords.into_iter().collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point(SmallVec::from_elem(0, dim))
    }

    /// The unit vector `e_i` with a 0-based index.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Self::zero(dim);
        p.0[i] = 1;
        p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn coords_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// `(x_1 + 1) ... (x_d + 1)`, the size of the box below `self`.
    pub fn box_volume(&self) -> u128 {
        self.0.iter().map(|&c| c as u128 + 1).product()
    }

    /// Componentwise `self <= other`.
    #[inline]
    pub fn divides(&self, other: &Point) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Componentwise `self <= other` and `self != other`.
    #[inline]
    pub fn strictly_divides(&self, other: &Point) -> bool {
        self.divides(other) && self != other
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, k: u32) -> Point {
        Point(self.0.iter().map(|a| a * k).collect())
    }

    /// `self - other` if `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        let mut out = SmallVec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Point(out))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Inserts a new zero coordinate at 0-based position `at`.
    pub fn insert_coord(&self, at: usize, value: u32) -> Point {
        let mut out = self.0.clone();
        out.insert(at, value);
        Point(out)
    }

    /// Drops the coordinates whose 0-based index is in `drop`.
    pub fn remove_coords(&self, drop: &[usize]) -> Point {
        Point(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, c)| *c)
                .collect(),
        )
    }

    /// Every `a` with `0 <= a <= self`, in odometer order (last coordinate fastest).
    pub fn down_set(&self) -> DownSet {
        DownSet {
            top: self.clone(),
            next: Some(Point::zero(self.dim())),
        }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Point {
    fn from(v: Vec<u32>) -> Self {
        Point(SmallVec::from_vec(v))
    }
}

impl From<&[u32]> for Point {
    fn from(v: &[u32]) -> Self {
        Point(SmallVec::from_slice(v))
    }
}

impl<const N: usize> From<[u32; N]> for Point {
    fn from(v: [u32; N]) -> Self {
        Point(SmallVec::from_slice(&v))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct DownSet {
    top: Point,
    next: Option<Point>,
}

impl Iterator for DownSet {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.dim();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ.0[i] < self.top.0[i] {
                succ.0[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ.0[i] = 0;
        }
        Some(current)
    }
}

/// Points of `N^d` (0-based coordinate bounds `bounds[i]`, inclusive) whose
/// box volume `prod (x_i + 1)` is at most `max_volume`.
pub fn points_with_volume_at_most(bounds: &[u32], max_volume: u128) -> Vec<Point> {
    fn rec(bounds: &[u32], max_volume: u128, acc: &mut Vec<u32>, vol: u128, out: &mut Vec<Point>) {
        let i = acc.len();
        if i == bounds.len() {
            out.push(Point::from(acc.as_slice()));
            return;
        }
        let mut c = 0u32;
        while c <= bounds[i] && vol * (c as u128 + 1) <= max_volume {
            acc.push(c);
            rec(bounds, max_volume, acc, vol * (c as u128 + 1), out);
            acc.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    rec(
        bounds,
        max_volume,
        &mut Vec::with_capacity(bounds.len()),
        1,
        &mut out,
    );
    out
}
