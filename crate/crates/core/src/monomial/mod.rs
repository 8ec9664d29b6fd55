//! Monomial ideals in `k[x_1, ..., x_d]`, stored as minimal exponent vectors.
//!
//! The coefficient field plays no role in any computation here and is not
//! represented. Variables are addressed with 1-based indices.

mod bridge;

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::error::{GnsError, Result};
use crate::point::Point;

pub use bridge::{
    gns_to_ideal, ideal_to_gns, verify_colon_inequality, verify_monomial_wilf, verify_prop_ij,
    ColonReport, ReductionIdentityReport,
};

/// A monomial ideal given by its minimal generators in canonical order.
///
/// The unit ideal is the ideal generated by the zero exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Point>,
}

/// Result of [`MonomialIdeal::ci_analysis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiAnalysis {
    pub is_complete_intersection: bool,
    /// Smallest pure-power exponents `a_i` with `x_i^{a_i}` in the ideal.
    pub exponents: Vec<u32>,
    /// `J = <x_1^{a_1}, ..., x_d^{a_d}>`.
    pub pure_power_ideal: MonomialIdeal,
}

impl MonomialIdeal {
    /// Minimalizes the given generators.
    pub fn new(vars: usize, gens: impl IntoIterator<Item = Point>) -> Result<Self> {
        let gens: Vec<Point> = gens.into_iter().collect();
        for g in &gens {
            if g.dim() != vars {
                return Err(GnsError::DimensionMismatch {
                    expected: vars,
                    found: g.dim(),
                });
            }
        }
        Ok(Self::from_unreduced(vars, gens))
    }

    pub fn unit(vars: usize) -> Self {
        Self {
            vars,
            gens: vec![Point::zero(vars)],
        }
    }

    /// `<x_1^{a_1}, ..., x_d^{a_d}>`.
    pub fn pure_powers(exponents: &[u32]) -> Self {
        let d = exponents.len();
        Self::from_unreduced(
            d,
            exponents
                .iter()
                .enumerate()
                .map(|(i, &a)| Point::unit(d, i).scale(a))
                .collect(),
        )
    }

    /// The power `m^k` of the maximal ideal `<x_1, ..., x_d>`.
    pub fn maximal_power(vars: usize, k: u32) -> Self {
        let top = Point::new(std::iter::repeat_n(k, vars));
        Self::from_unreduced(
            vars,
            top.down_set().filter(|p| p.degree() == k as u64).collect(),
        )
    }

    fn from_unreduced(vars: usize, mut gens: Vec<Point>) -> Self {
        gens.sort();
        gens.dedup();
        // Canonical order is graded, so a divisor always comes earlier.
        let mut minimal: Vec<Point> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Self {
            vars,
            gens: minimal,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> &[Point] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Point::is_zero)
    }

    /// Whether the monomial `x^alpha` lies in the ideal.
    pub fn contains_monomial(&self, alpha: &Point) -> bool {
        self.gens.iter().any(|g| g.divides(alpha))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    fn check_contains(&self, other: &MonomialIdeal) -> Result<()> {
        self.check_vars(other)?;
        match other.gens.iter().find(|g| !self.contains_monomial(g)) {
            Some(g) => Err(GnsError::NotContained(g.clone())),
            None => Ok(()),
        }
    }

    fn check_vars(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars != other.vars {
            return Err(GnsError::DimensionMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        Ok(())
    }

    fn check_var_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.vars {
            return Err(GnsError::AxisOutOfRange {
                axis: i,
                max: self.vars,
            });
        }
        Ok(i - 1)
    }

    /// Smallest `a_i` with `x_i^{a_i}` in the ideal, per variable.
    pub fn pure_power_exponents(&self) -> Result<Vec<u32>> {
        (0..self.vars)
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| {
                        g.coords()
                            .iter()
                            .enumerate()
                            .all(|(j, &c)| j == i || c == 0)
                    })
                    .map(|g| g.coords()[i])
                    .min()
                    .ok_or(GnsError::NotZeroDimensional(i + 1))
            })
            .collect()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_power_exponents().is_ok()
    }

    /// Exponents of the monomials outside the ideal, in canonical order.
    ///
    /// They form a finite down-set (the staircase), grown from the origin.
    pub fn standard_monomials(&self) -> Result<Vec<Point>> {
        self.pure_power_exponents()?;
        let mut out = Vec::new();
        let origin = Point::zero(self.vars);
        if self.contains_monomial(&origin) {
            return Ok(out);
        }
        let mut seen: FxHashSet<Point> = FxHashSet::default();
        let mut queue = VecDeque::from([origin.clone()]);
        seen.insert(origin);
        while let Some(p) = queue.pop_front() {
            for i in 0..self.vars {
                let mut q = p.clone();
                q.coords_mut()[i] += 1;
                if !seen.contains(&q) && !self.contains_monomial(&q) {
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
            out.push(p);
        }
        out.sort();
        Ok(out)
    }

    /// `ℓ(R/I)`; zero for the unit ideal.
    pub fn colength(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.add(b)))
            .collect();
        Ok(Self::from_unreduced(self.vars, gens))
    }

    pub fn square(&self) -> MonomialIdeal {
        self.product(self).expect("same ring")
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        (0..k).fold(Self::unit(self.vars), |acc, _| {
            acc.product(self).expect("same ring")
        })
    }

    /// `I : x_i`.
    pub fn colon_by_variable(&self, i: usize) -> Result<MonomialIdeal> {
        let i = self.check_var_index(i)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                let c = &mut h.coords_mut()[i];
                *c = c.saturating_sub(1);
                h
            })
            .collect();
        Ok(Self::from_unreduced(self.vars, gens))
    }

    /// `(I + <x_i>) / <x_i>` in the ring without `x_i`.
    pub fn eliminate_variable(&self, i: usize) -> Result<MonomialIdeal> {
        let i = self.check_var_index(i)?;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.coords()[i] == 0)
            .map(|g| g.remove_coords(&[i]))
            .collect();
        Ok(Self::from_unreduced(self.vars - 1, gens))
    }

    /// `I ∩ <x^alpha>` for a monomial `x^alpha`: generated by the joins.
    pub fn intersect_principal(&self, alpha: &Point) -> MonomialIdeal {
        Self::from_unreduced(self.vars, self.gens.iter().map(|g| g.join(alpha)).collect())
    }

    /// Multiplies every generator by `x^alpha`.
    pub fn shift(&self, alpha: &Point) -> MonomialIdeal {
        Self::from_unreduced(self.vars, self.gens.iter().map(|g| g.add(alpha)).collect())
    }

    pub fn ci_analysis(&self) -> Result<CiAnalysis> {
        let exponents = self.pure_power_exponents()?;
        let pure_power_ideal = Self::pure_powers(&exponents);
        Ok(CiAnalysis {
            is_complete_intersection: &pure_power_ideal == self,
            exponents,
            pure_power_ideal,
        })
    }

    /// Smallest `k <= cap` with `I^{k+1} = J I^k`, or `None`.
    pub fn reduction_number(&self, j: &MonomialIdeal, cap: u32) -> Result<Option<u32>> {
        self.check_contains(j)?;
        self.pure_power_exponents()?;
        j.pure_power_exponents()?;
        let mut power = Self::unit(self.vars);
        for k in 0..=cap {
            let next = power.product(self)?;
            if next == power.product(j)? {
                return Ok(Some(k));
            }
            power = next;
        }
        Ok(None)
    }
}

/// `ℓ(A/B)` for `B ⊆ A`: the number of monomials in `A` but not in `B`.
pub fn length_of_quotient(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<usize> {
    a.check_contains(b)?;
    Ok(b.colength()? - a.colength()?)
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
