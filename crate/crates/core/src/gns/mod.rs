//! Generalized numerical semigroups represented by their hole sets.

mod classify;
mod index;
mod invariants;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{GnsError, Result};
use crate::point::Point;

pub use classify::{Classification, Restriction};
pub use invariants::InvariantRecord;

use index::HoleIndex;

/// A submonoid of `N^d` with finite complement, stored as its hole set.
///
/// Holes are kept in canonical (graded lexicographic) order. Two values are
/// equal iff they have the same dimension and the same holes. Values are
/// immutable once built and can be shared freely between threads.
#[derive(Clone)]
pub struct Gns {
    dim: usize,
    holes: Vec<Point>,
    /// `M_i`, the largest `i`-th coordinate of a hole, or -1 without holes.
    maxima: Vec<i64>,
    index: HoleIndex,
}

impl Gns {
    /// Builds and validates a semigroup from its holes (any order, duplicates ignored).
    ///
    /// Checks that the origin is not a hole and that no hole splits as a sum
    /// of two nonzero non-holes.
    pub fn new(dim: usize, holes: impl IntoIterator<Item = Point>) -> Result<Self> {
        if dim == 0 {
            return Err(GnsError::ZeroDimension);
        }
        let mut holes: Vec<Point> = holes.into_iter().collect();
        for h in &holes {
            if h.dim() != dim {
                return Err(GnsError::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
        }
        holes.sort();
        holes.dedup();
        let s = Self::from_canonical_unchecked(dim, holes);
        s.check_closed()?;
        Ok(s)
    }

    /// `N^d` itself.
    pub fn full(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self::from_canonical_unchecked(dim, Vec::new())
    }

    /// The numerical semigroup `N \ gaps`.
    pub fn numerical(gaps: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(1, gaps.into_iter().map(|g| Point::new([g])))
    }

    /// Caller guarantees `holes` is sorted, duplicate-free and a valid hole set.
    pub(crate) fn from_canonical_unchecked(dim: usize, holes: Vec<Point>) -> Self {
        debug_assert!(holes.windows(2).all(|w| w[0] < w[1]));
        let mut maxima = vec![-1i64; dim];
        for h in &holes {
            for (m, &c) in maxima.iter_mut().zip(h.coords()) {
                *m = (*m).max(c as i64);
            }
        }
        let index = HoleIndex::build(dim, &holes);
        Gns {
            dim,
            holes,
            maxima,
            index,
        }
    }

    fn check_closed(&self) -> Result<()> {
        if self.holes.iter().any(Point::is_zero) {
            return Err(GnsError::ZeroIsHole);
        }
        for h in &self.holes {
            for a in h.down_set() {
                if a.is_zero() || &a == h || self.is_hole(&a) {
                    continue;
                }
                let rest = h.checked_sub(&a).expect("a <= h");
                if !self.is_hole(&rest) {
                    let (part, rest) = if a > rest { (a, rest) } else { (rest, a) };
                    return Err(GnsError::NotClosed {
                        hole: h.clone(),
                        part,
                        rest,
                    });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Holes in canonical order.
    #[inline]
    pub fn holes(&self) -> &[Point] {
        &self.holes
    }

    #[inline]
    pub fn genus(&self) -> usize {
        self.holes.len()
    }

    /// Per-coordinate hole maxima `M_i` (-1 when there are no holes).
    pub fn maxima(&self) -> &[i64] {
        &self.maxima
    }

    #[inline]
    pub fn is_hole(&self, x: &Point) -> bool {
        self.index.is_hole(x)
    }

    /// Membership without a dimension check.
    #[inline]
    pub fn is_element(&self, x: &Point) -> bool {
        !self.index.is_hole(x)
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.is_element(x))
    }

    pub(crate) fn check_dim(&self, x: &Point) -> Result<()> {
        if x.dim() != self.dim {
            return Err(GnsError::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// `self` with one more hole. The caller guarantees `x` is the largest
    /// hole in canonical order and that the result is a semigroup (e.g. `x`
    /// is a minimal generator dominating every hole).
    pub(crate) fn with_hole_appended(&self, x: Point) -> Gns {
        let mut holes = Vec::with_capacity(self.holes.len() + 1);
        holes.extend_from_slice(&self.holes);
        holes.push(x);
        Self::from_canonical_unchecked(self.dim, holes)
    }
}

impl PartialEq for Gns {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.holes == other.holes
    }
}

impl Eq for Gns {}

impl Hash for Gns {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.holes.hash(state);
    }
}

impl fmt::Debug for Gns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N^{} \\ {{", self.dim)?;
        for (i, h) in self.holes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn pts(v: &[&[u32]]) -> Vec<Point> {
        v.iter().map(|c| Point::from(*c)).collect()
    }

    pub(crate) fn exaf() -> Gns {
        Gns::new(
            2,
            pts(&[
                &[0, 1],
                &[1, 0],
                &[1, 1],
                &[1, 2],
                &[1, 3],
                &[1, 4],
                &[2, 1],
                &[3, 0],
                &[3, 2],
            ]),
        )
        .unwrap()
    }

    #[test]
    fn validates_worked_example() {
        assert_eq!(exaf().genus(), 9);
        assert_eq!(exaf().maxima(), &[3, 4]);
    }

    #[test]
    fn empty_hole_set_is_full_lattice() {
        let s = Gns::new(2, Vec::new()).unwrap();
        assert_eq!(s, Gns::full(2));
        assert_eq!(s.genus(), 0);
        assert_eq!(s.maxima(), &[-1, -1]);
    }

    #[test]
    fn rejects_unclosed_hole_set() {
        let err = Gns::new(2, pts(&[&[1, 1]])).unwrap_err();
        assert_eq!(
            err,
            GnsError::NotClosed {
                hole: [1, 1].into(),
                part: [1, 0].into(),
                rest: [0, 1].into()
            }
        );
    }

    #[test]
    fn rejects_zero_and_bad_dimensions() {
        assert_eq!(
            Gns::new(2, pts(&[&[0, 0]])).unwrap_err(),
            GnsError::ZeroIsHole
        );
        assert_eq!(
            Gns::new(2, pts(&[&[1]])).unwrap_err(),
            GnsError::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            Gns::new(0, Vec::new()).unwrap_err(),
            GnsError::ZeroDimension
        );
    }

    #[test]
    fn membership() {
        let s = exaf();
        assert!(s.contains(&[2, 2].into()).unwrap());
        assert!(!s.contains(&[1, 4].into()).unwrap());
        assert!(s.contains(&[40, 0].into()).unwrap());
        assert!(Gns::full(2).contains(&[0, 0].into()).unwrap());
        assert!(s.contains(&[1, 1, 1].into()).is_err());
    }

    #[test]
    fn hashed_index_agrees_with_dense() {
        // A long axis pushes the bounding box past the dense limit.
        let holes = (1..600u32).flat_map(|g| [Point::new([g, 0]), Point::new([0, g])]);
        let s = Gns::new(2, holes).unwrap();
        assert!(matches!(s.index, HoleIndex::Hashed { .. }));
        assert!(s.is_hole(&[599, 0].into()));
        assert!(s.is_hole(&[0, 17].into()));
        assert!(!s.is_hole(&[600, 0].into()));
        assert!(!s.is_hole(&[1, 1].into()));
    }
}
