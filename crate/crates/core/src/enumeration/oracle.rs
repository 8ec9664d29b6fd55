//! Exhaustive enumeration by subset search, independent of the tree.

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::order::binomial;
use crate::point::{points_with_volume_at_most, Point};

/// Default limit on the number of candidate hole sets examined.
pub const DEFAULT_ORACLE_CAP: u128 = 50_000_000;

/// Every semigroup of genus `genus` in `N^dim`, canonical order.
///
/// A hole `h` has all of `[0, h] \ {0}` made of holes or pairs `a, h - a`
/// with one of them a hole, so `prod (h_i + 1) <= 2g` and `h_i <= 2g - 1`.
/// Every `genus`-subset of those candidates is tested for closure.
pub fn brute_force_enumerate(dim: usize, genus: usize) -> Result<Vec<Gns>> {
    brute_force_enumerate_with_cap(dim, genus, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_enumerate_with_cap(dim: usize, genus: usize, cap: u128) -> Result<Vec<Gns>> {
    if dim == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if genus == 0 {
        return Ok(vec![Gns::full(dim)]);
    }
    let bound = (2 * genus - 1) as u32;
    let candidates: Vec<Point> = points_with_volume_at_most(&vec![bound; dim], 2 * genus as u128)
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    let total = binomial(candidates.len() as u128, genus as u128);
    if total > cap {
        return Err(GnsError::OracleTooLarge(total));
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..genus).collect();
    if genus > candidates.len() {
        return Ok(out);
    }
    loop {
        if let Ok(s) = Gns::new(dim, idx.iter().map(|&i| candidates[i].clone())) {
            out.push(s);
        }
        // Advance to the next combination in lexicographic index order.
        let n = candidates.len();
        let mut i = genus;
        while i > 0 && idx[i - 1] == n - genus + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..genus {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out.sort_by(|a, b| a.holes().cmp(b.holes()));
    Ok(out)
}
