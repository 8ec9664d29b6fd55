//! k-thickenings: stack `k + 1` copies of a semigroup along a new axis and
//! fill in everything beyond them.
//!
//! Axes are 1-based positions in the target ambient space. The coordinates
//! of the original semigroup keep their relative order in the complement.

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::point::Point;

/// `T_k(S, axis)` in `N^{d+1}`: holes are `j e_axis + ι(h)` for `0 <= j <= k`.
pub fn thicken(s: &Gns, axis: usize, k: u32) -> Result<Gns> {
    let d = s.dim();
    if axis == 0 || axis > d + 1 {
        return Err(GnsError::AxisOutOfRange { axis, max: d + 1 });
    }
    let holes = s
        .holes()
        .iter()
        .flat_map(|h| (0..=k).map(move |j| h.insert_coord(axis - 1, j)));
    Gns::new(d + 1, holes)
}

/// Minimal generators of `T_k(S, axis)` as predicted from `S`:
/// `{e_axis} ∪ ι(G(S)) ∪ ((k+1) e_axis + ι(M(S)*))`, in canonical order.
pub fn predicted_generators(s: &Gns, axis: usize, k: u32) -> Result<Vec<Point>> {
    let d = s.dim();
    if axis == 0 || axis > d + 1 {
        return Err(GnsError::AxisOutOfRange { axis, max: d + 1 });
    }
    let at = axis - 1;
    let mut out = vec![Point::unit(d + 1, at)];
    out.extend(s.minimal_generators().iter().map(|g| g.insert_coord(at, 0)));
    out.extend(
        s.fundamental_holes()
            .iter()
            .map(|m| m.insert_coord(at, k + 1)),
    );
    out.sort();
    Ok(out)
}

/// Iterated thickening. Each step is `(axis, k)` with `axis` a 1-based
/// coordinate of the final space `N^{d+t}`; the original coordinates fill
/// the remaining positions in order. The result does not depend on the
/// order of the steps.
pub fn thicken_iterated(s: &Gns, steps: &[(usize, u32)]) -> Result<Gns> {
    let total = s.dim() + steps.len();
    let mut new_axes = Vec::with_capacity(steps.len());
    for &(axis, _) in steps {
        if axis == 0 || axis > total {
            return Err(GnsError::AxisOutOfRange { axis, max: total });
        }
        if new_axes.contains(&axis) {
            return Err(GnsError::RepeatedAxis(axis));
        }
        new_axes.push(axis);
    }
    let mut occupied: Vec<usize> = (1..=total).filter(|a| !new_axes.contains(a)).collect();
    let mut current = s.clone();
    for &(axis, k) in steps {
        let position = occupied.iter().filter(|&&a| a < axis).count();
        current = thicken(&current, position + 1, k)?;
        occupied.insert(position, axis);
    }
    Ok(current)
}
