use rustc_hash::FxHashSet;

use crate::point::Point;

/// Boxes with at most this many cells get a dense bitmap.
const DENSE_LIMIT: u128 = 1 << 18;

/// Constant-time hole lookup.
///
/// Holes live in the bounding box `prod [0, M_i]`; small boxes are stored as
/// a bitmap over the box and large ones fall back to hashing.
#[derive(Clone)]
pub(crate) enum HoleIndex {
    Empty,
    Dense {
        maxima: Vec<u32>,
        strides: Vec<usize>,
        bits: Vec<u64>,
    },
    Hashed {
        maxima: Vec<u32>,
        set: FxHashSet<Point>,
    },
}

impl HoleIndex {
    pub(crate) fn build(dim: usize, holes: &[Point]) -> Self {
        if holes.is_empty() {
            return HoleIndex::Empty;
        }
        let mut maxima = vec![0u32; dim];
        for h in holes {
            for (m, c) in maxima.iter_mut().zip(h.coords()) {
                *m = (*m).max(*c);
            }
        }
        let volume: u128 = maxima.iter().map(|&m| m as u128 + 1).product();
        if volume <= DENSE_LIMIT {
            let mut strides = vec![0usize; dim];
            let mut acc = 1usize;
            for i in (0..dim).rev() {
                strides[i] = acc;
                acc *= maxima[i] as usize + 1;
            }
            let mut bits = vec![0u64; acc.div_ceil(64)];
            for h in holes {
                let k = offset(&strides, h);
                bits[k >> 6] |= 1 << (k & 63);
            }
            HoleIndex::Dense {
                maxima,
                strides,
                bits,
            }
        } else {
            HoleIndex::Hashed {
                maxima,
                set: holes.iter().cloned().collect(),
            }
        }
    }

    #[inline]
    pub(crate) fn is_hole(&self, x: &Point) -> bool {
        match self {
            HoleIndex::Empty => false,
            HoleIndex::Dense {
                maxima,
                strides,
                bits,
            } => {
                if outside(maxima, x) {
                    return false;
                }
                let k = offset(strides, x);
                bits[k >> 6] & (1 << (k & 63)) != 0
            }
            HoleIndex::Hashed { maxima, set } => !outside(maxima, x) && set.contains(x),
        }
    }
}

#[inline]
fn outside(maxima: &[u32], x: &Point) -> bool {
    x.coords().iter().zip(maxima).any(|(c, m)| c > m)
}

#[inline]
fn offset(strides: &[usize], x: &Point) -> usize {
    x.coords()
        .iter()
        .zip(strides)
        .map(|(&c, &s)| c as usize * s)
        .sum()
}
