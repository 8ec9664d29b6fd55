use serde::Serialize;

use super::Gns;
use crate::error::{GnsError, Result};
use crate::point::Point;

/// Structural classification of a semigroup.
///
/// For the semigroup without holes every flag is false, there is no
/// Frobenius element, `pf`/`eh` are empty and every axis is in `axes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub frobenius_element: Option<Point>,
    pub is_symmetric: bool,
    pub is_pseudo_symmetric: bool,
    pub is_irreducible: bool,
    pub is_ordinary: bool,
    pub is_monomial: bool,
    pub has_minimal_multiplicity: bool,
    pub pf: Vec<Point>,
    pub eh: Vec<Point>,
    /// Dimension of the real span of the holes.
    pub span_rank: usize,
    /// 1-based coordinates on which every hole vanishes.
    pub axes: Vec<usize>,
}

/// Output of [`Gns::axes_and_restriction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    /// 1-based axes on which every hole vanishes.
    pub axes: Vec<usize>,
    pub span_rank: usize,
    /// `S ∩ N^r` on the remaining coordinates.
    pub restricted: Gns,
}

impl Gns {
    /// Holes with no other hole above them.
    pub fn maximal_holes(&self) -> Vec<Point> {
        self.holes
            .iter()
            .filter(|h| !self.holes.iter().any(|k| h.strictly_divides(k)))
            .cloned()
            .collect()
    }

    /// The unique maximal hole under the componentwise order, if any.
    pub fn frobenius_element(&self) -> Option<Point> {
        let mut max = self.maximal_holes();
        if max.len() == 1 {
            max.pop()
        } else {
            None
        }
    }

    /// 1-based indices of the coordinates that vanish on every hole.
    pub fn axes(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| self.holes.iter().all(|h| h.coords()[i] == 0))
            .map(|i| i + 1)
            .collect()
    }

    pub fn classify(&self) -> Classification {
        self.classify_with_generators(&self.minimal_generators())
    }

    pub(crate) fn classify_with_generators(&self, gens: &[Point]) -> Classification {
        let axes = self.axes();
        let span_rank = self.dim - axes.len();
        if self.holes.is_empty() {
            return Classification {
                frobenius_element: None,
                is_symmetric: false,
                is_pseudo_symmetric: false,
                is_irreducible: false,
                is_ordinary: false,
                is_monomial: false,
                has_minimal_multiplicity: false,
                pf: Vec::new(),
                eh: Vec::new(),
                span_rank,
                axes,
            };
        }
        let g = self.genus() as u128;
        let f = self.frobenius_element();
        let volume = f.as_ref().map(Point::box_volume);
        let (pf, eh) = self.pf_eh_with(gens);
        let c = self.down_closure().len();
        let n = c - self.genus();
        Classification {
            is_symmetric: volume == Some(2 * g),
            is_pseudo_symmetric: volume == Some(2 * g - 1),
            is_irreducible: eh.len() == 1,
            is_ordinary: volume == Some(g + 1),
            is_monomial: n == 1,
            has_minimal_multiplicity: c == self.multiplicity() * n,
            frobenius_element: f,
            pf,
            eh,
            span_rank,
            axes,
        }
    }

    /// Symmetry and pseudo-symmetry read off the pseudo-Frobenius set:
    /// symmetric iff `PF = {f}`, pseudo-symmetric iff `PF = {f, f/2}`.
    /// Independent of the counting criteria used by [`Gns::classify`].
    pub fn symmetry_from_pseudo_frobenius(&self) -> (bool, bool) {
        let Ok((pf, _)) = self.pseudo_frobenius_and_special_gaps() else {
            return (false, false);
        };
        let symmetric = pf.len() == 1;
        let pseudo = pf.len() == 2 && {
            let (a, b) = (&pf[0], &pf[1]);
            let (half, f) = if a < b { (a, b) } else { (b, a) };
            f.coords().iter().all(|c| c % 2 == 0) && &half.scale(2) == f
        };
        (symmetric, pseudo)
    }

    /// Axes, span rank and the restriction `S ∩ N^r` to the non-axis coordinates.
    ///
    /// The restriction has the same genus, and 0-thickening it back along
    /// the axes reproduces `self`.
    pub fn axes_and_restriction(&self) -> Result<Restriction> {
        if self.holes.is_empty() {
            return Err(GnsError::EmptyHoleSet);
        }
        let axes = self.axes();
        let drop: Vec<usize> = axes.iter().map(|a| a - 1).collect();
        let r = self.dim - axes.len();
        let restricted = Gns::new(r, self.holes.iter().map(|h| h.remove_coords(&drop)))?;
        Ok(Restriction {
            axes,
            span_rank: r,
            restricted,
        })
    }
}
