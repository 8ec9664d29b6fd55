//! Wilf-type inequalities: the generalized conjecture `e n >= d c`, the
//! order-dependent extended conjecture, and the monomial-ideal form.

use std::fmt;

use serde::Serialize;

use crate::gns::Gns;
use crate::order::MonomialOrder;
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "conjecture", rename_all = "snake_case")]
pub enum WilfContext {
    /// `e(S) n(S) >= d c(S)`.
    Generalized,
    /// `n_≺(S) e(S) >= N(Fb(S)) (+1 when strict)` for one order.
    Extended { order: String, strict: bool },
    /// `d ℓ(R/I) <= ℓ(I/I²)`.
    Monomial,
}

/// Both sides of an inequality `lhs >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WilfReport {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub equality: bool,
    pub slack: i64,
    pub context: WilfContext,
}

impl WilfReport {
    pub fn new(lhs: u64, rhs: u64, context: WilfContext) -> Self {
        WilfReport {
            lhs,
            rhs,
            holds: lhs >= rhs,
            equality: lhs == rhs,
            slack: lhs as i64 - rhs as i64,
            context,
        }
    }
}

impl fmt::Display for WilfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.equality {
            "="
        } else if self.holds {
            ">"
        } else {
            "<"
        };
        let name = match &self.context {
            WilfContext::Generalized => "generalized".to_string(),
            WilfContext::Extended { order, strict } => {
                format!("extended[{order}{}]", if *strict { ",strict" } else { "" })
            }
            WilfContext::Monomial => "monomial".to_string(),
        };
        write!(
            f,
            "{name}: {} {rel} {} (slack {})",
            self.lhs, self.rhs, self.slack
        )
    }
}

pub fn generalized_wilf(s: &Gns) -> WilfReport {
    let inv = s.invariants();
    generalized_wilf_from(s.dim(), inv.e, inv.n, inv.c)
}

pub fn generalized_wilf_from(dim: usize, e: usize, n: usize, c: usize) -> WilfReport {
    WilfReport::new((e * n) as u64, (dim * c) as u64, WilfContext::Generalized)
}

/// The order-Frobenius element and `n_≺(S) = |{x ∈ S : x ≺ Fb(S)}|`.
///
/// `None` stands for the sentinel `(-1, ..., -1)` of the semigroup without
/// holes, for which `n_≺ = 0`. Every hole other than `Fb` precedes it, so
/// `n_≺ = rank(Fb) - (g - 1)` where `rank` counts all predecessors.
pub fn order_frobenius(s: &Gns, order: &MonomialOrder) -> (Option<Point>, u64) {
    match order.max(s.holes()) {
        None => (None, 0),
        Some(fb) => {
            let n = order.rank(fb) - (s.genus() as u128 - 1);
            (
                Some(fb.clone()),
                u64::try_from(n).expect("n_order fits in u64"),
            )
        }
    }
}

/// Extended Wilf check for one order.
///
/// The right side counts the lattice points `x ⪯ Fb(S)`, which is
/// `n_≺ + g`; with `d = 1` this is exactly classical Wilf `e n >= F + 1`.
/// `strict` adds one more, the reading `N(Fb) + 1` with
/// `N(Fb) = n_≺ + g`. The semigroup without holes gives `0 >= 0` either way.
pub fn extended_wilf(s: &Gns, order: &MonomialOrder, strict: bool) -> WilfReport {
    extended_wilf_with(s, order, strict, s.minimal_generators().len())
}

pub fn extended_wilf_with(s: &Gns, order: &MonomialOrder, strict: bool, e: usize) -> WilfReport {
    let (_, n_order) = order_frobenius(s, order);
    let g = s.genus() as u64;
    let rhs = if g == 0 {
        0
    } else {
        n_order + g + u64::from(strict)
    };
    WilfReport::new(
        n_order * e as u64,
        rhs,
        WilfContext::Extended {
            order: order.to_string(),
            strict,
        },
    )
}
