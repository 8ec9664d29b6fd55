//! Explicit families of semigroups with known invariants.
//!
//! All indices are 1-based coordinates.

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::point::Point;
use crate::thickening::thicken_iterated;

/// The ordinary semigroup with holes `{x != 0 : x <= f}`.
pub fn make_ordinary(f: &Point) -> Result<Gns> {
    Gns::new(f.dim(), f.down_set().filter(|p| !p.is_zero()))
}

/// Holes `e_i + t e_k` for `0 <= t < h`.
pub fn make_family_axis(dim: usize, i: usize, k: usize, h: u32) -> Result<Gns> {
    check_axis_params(dim, i, k, h)?;
    Gns::new(dim, (0..h).map(|t| axis_point(dim, i, k, 1, t)))
}

/// Minimal generators of [`make_family_axis`] in closed form:
/// `e_j` for `j != i`, `2 e_i, 3 e_i`, `e_i + h e_k`, `e_i + e_j` for
/// `j != i, k`.
pub fn family_axis_generators(dim: usize, i: usize, k: usize, h: u32) -> Result<Vec<Point>> {
    check_axis_params(dim, i, k, h)?;
    let mut out = Vec::new();
    for j in (1..=dim).filter(|&j| j != i) {
        out.push(Point::unit(dim, j - 1));
        if j != k {
            let mut p = Point::unit(dim, i - 1);
            p.coords_mut()[j - 1] = 1;
            out.push(p);
        }
    }
    out.push(Point::unit(dim, i - 1).scale(2));
    out.push(Point::unit(dim, i - 1).scale(3));
    out.push(axis_point(dim, i, k, 1, h));
    out.sort();
    Ok(out)
}

fn axis_point(dim: usize, i: usize, k: usize, a: u32, t: u32) -> Point {
    let mut p = Point::zero(dim);
    p.coords_mut()[i - 1] = a;
    p.coords_mut()[k - 1] = t;
    p
}

fn check_axis_params(dim: usize, i: usize, k: usize, h: u32) -> Result<()> {
    if dim < 2 {
        return Err(GnsError::BadParameters(format!("dimension {dim} < 2")));
    }
    if i == 0 || i > dim || k == 0 || k > dim || i == k {
        return Err(GnsError::BadParameters(format!(
            "need distinct axes in 1..={dim}, got i={i}, k={k}"
        )));
    }
    if h < 2 {
        return Err(GnsError::BadParameters(format!("h = {h} < 2")));
    }
    Ok(())
}

/// Holes `x` with `x_j` a gap of the numerical semigroup `N \ gaps` and
/// `x_i <= q_i` on the other coordinates (`q` lists them in order). This is
/// the iterated thickening of the numerical semigroup.
pub fn make_family_box(gaps: &[u32], j: usize, q: &[u32]) -> Result<Gns> {
    let numerical = Gns::numerical(gaps.iter().copied())
        .map_err(|e| GnsError::InvalidNumericalSemigroup(e.to_string()))?;
    let dim = q.len() + 1;
    if j == 0 || j > dim {
        return Err(GnsError::AxisOutOfRange { axis: j, max: dim });
    }
    let rest = Point::from(q);
    let holes = numerical.holes().iter().flat_map(|gap| {
        rest.down_set()
            .map(move |p| p.insert_coord(j - 1, gap.coords()[0]))
    });
    let s = Gns::new(dim, holes)?;
    debug_assert_eq!(
        Ok(&s),
        thicken_iterated(&numerical, &box_steps(j, q)).as_ref()
    );
    Ok(s)
}

/// The thickening steps reproducing [`make_family_box`].
pub fn box_steps(j: usize, q: &[u32]) -> Vec<(usize, u32)> {
    (1..=q.len() + 1)
        .filter(|&a| a != j)
        .zip(q.iter().copied())
        .collect()
}

/// The semigroup generated by `a e_i`, `b e_i`, the `e_j` (`j != i`) and
/// `e_i + h_j e_j`, with `h` listing the `h_j` for `j != i` in order.
///
/// Requires `1 < a < b` coprime and every `h_j >= 1`.
pub fn make_family_e2d(dim: usize, i: usize, a: u32, b: u32, h: &[u32]) -> Result<Gns> {
    if dim == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if i == 0 || i > dim {
        return Err(GnsError::AxisOutOfRange { axis: i, max: dim });
    }
    if !(1 < a && a < b) || gcd(a, b) != 1 {
        return Err(GnsError::BadParameters(format!(
            "need 1 < a < b coprime, got a={a}, b={b}"
        )));
    }
    if h.len() != dim - 1 {
        return Err(GnsError::BadParameters(format!(
            "expected {} values of h, got {}",
            dim - 1,
            h.len()
        )));
    }
    if h.contains(&0) {
        return Err(GnsError::BadParameters(
            "every h_j must be at least 1".into(),
        ));
    }
    let full_h: Vec<u32> = (0..dim)
        .map(|c| match c.cmp(&(i - 1)) {
            std::cmp::Ordering::Less => h[c],
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => h[c - 1],
        })
        .collect();
    let mut gens = vec![
        Point::unit(dim, i - 1).scale(a),
        Point::unit(dim, i - 1).scale(b),
    ];
    for j in (0..dim).filter(|&j| j != i - 1) {
        gens.push(Point::unit(dim, j));
        let mut p = Point::unit(dim, i - 1);
        p.coords_mut()[j] = full_h[j];
        gens.push(p);
    }
    // Holes have x_i <= F = ab - a - b, since beyond it x_i e_i is in the
    // semigroup; and x_j < x_i h_j, since otherwise x_i (e_i + h_j e_j)
    // fits below x with a remainder off axis i.
    let frob = a * b - a - b;
    let bounds: Vec<u32> = (0..dim)
        .map(|c| if c == i - 1 { frob } else { frob * full_h[c] })
        .collect();
    from_generators_in_box(dim, &gens, &bounds)
}

/// The semigroup generated by `gens`, given that all of its holes lie in
/// the box `[0, bounds]`. Membership is decided by dynamic programming.
pub fn from_generators_in_box(dim: usize, gens: &[Point], bounds: &[u32]) -> Result<Gns> {
    if dim == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if bounds.len() != dim {
        return Err(GnsError::DimensionMismatch {
            expected: dim,
            found: bounds.len(),
        });
    }
    if let Some(g) = gens.iter().find(|g| g.dim() != dim) {
        return Err(GnsError::DimensionMismatch {
            expected: dim,
            found: g.dim(),
        });
    }
    let top = Point::from(bounds);
    let strides: Vec<usize> = {
        let mut s = vec![1usize; dim];
        for c in (0..dim.saturating_sub(1)).rev() {
            s[c] = s[c + 1] * (bounds[c + 1] as usize + 1);
        }
        s
    };
    let offset = |p: &Point| {
        p.coords()
            .iter()
            .zip(&strides)
            .map(|(&x, &s)| x as usize * s)
            .sum::<usize>()
    };
    let size = strides[0] * (bounds[0] as usize + 1);
    let mut member = vec![false; size];
    let mut holes = Vec::new();
    // The odometer visits x - g before x.
    for x in top.down_set() {
        let inside = x.is_zero()
            || gens.iter().any(|g| {
                !g.is_zero() && g.divides(&x) && member[offset(&x.checked_sub(g).expect("g <= x"))]
            });
        member[offset(&x)] = inside;
        if !inside {
            holes.push(x);
        }
    }
    Gns::new(dim, holes)
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
