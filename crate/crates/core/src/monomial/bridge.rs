//! Monomial semigroups (`n(S) = 1`) and zero-dimensional monomial ideals are
//! the same objects: `S*` is the set of exponents of monomials in the ideal.

use serde::Serialize;

use super::{length_of_quotient, MonomialIdeal};
use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::point::Point;
use crate::wilf::{WilfContext, WilfReport};

/// The ideal `<x^α : α ∈ S*>` of a monomial semigroup.
///
/// The semigroup without holes maps to the maximal ideal.
pub fn gns_to_ideal(s: &Gns) -> Result<MonomialIdeal> {
    let d = s.dim();
    if s.genus() == 0 {
        return Ok(MonomialIdeal::maximal_power(d, 1));
    }
    let (c, _) = s.region_sets();
    let n = c.len() - s.genus();
    if n != 1 {
        return Err(GnsError::NotMonomialSemigroup(n));
    }
    MonomialIdeal::new(d, s.minimal_generators())
}

/// The semigroup whose holes are the nonzero standard monomials of `ideal`.
pub fn ideal_to_gns(ideal: &MonomialIdeal) -> Result<Gns> {
    if ideal.vars() == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if ideal.is_unit() {
        return Err(GnsError::UnitIdeal);
    }
    let holes: Vec<Point> = ideal
        .standard_monomials()?
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    Gns::new(ideal.vars(), holes)
}

/// `ℓ(I/I²) >= d ℓ(R/I)`, reported as `lhs = ℓ(I/I²)`, `rhs = d ℓ(R/I)`.
/// Equality holds exactly for complete intersections.
pub fn verify_monomial_wilf(ideal: &MonomialIdeal) -> Result<WilfReport> {
    let colength = ideal.colength()?;
    let cotangent = length_of_quotient(ideal, &ideal.square())?;
    Ok(WilfReport::new(
        cotangent as u64,
        (ideal.vars() * colength) as u64,
        WilfContext::Monomial,
    ))
}

/// Both sides of `ℓ(R̄/Ī) <= ℓ((I:y)² / (I²:y))` for `y = x_i`, together
/// with the identities used to derive it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonReport {
    pub variable: usize,
    /// `ℓ(R̄/Ī)` with `Ī` the image of `I` modulo `y`.
    pub eliminated_colength: usize,
    /// `ℓ((I:y)² / (I²:y))`.
    pub colon_quotient_length: usize,
    pub holds: bool,
    /// `I² : y = I (I : y)`.
    pub product_identity: bool,
    /// `I² : y ⊆ (I : y)²`.
    pub containment: bool,
}

pub fn verify_colon_inequality(ideal: &MonomialIdeal, variable: usize) -> Result<ColonReport> {
    ideal.pure_power_exponents()?;
    let colon = ideal.colon_by_variable(variable)?;
    let square_colon = ideal.square().colon_by_variable(variable)?;
    let colon_square = colon.square();
    let eliminated_colength = ideal.eliminate_variable(variable)?.colength()?;
    let containment = colon_square.contains_ideal(&square_colon);
    let colon_quotient_length = length_of_quotient(&colon_square, &square_colon)?;
    Ok(ColonReport {
        variable,
        eliminated_colength,
        colon_quotient_length,
        holds: eliminated_colength <= colon_quotient_length,
        product_identity: square_colon == ideal.product(&colon)?,
        containment,
    })
}

/// The decomposition `ℓ(I/I²) - d ℓ(R/I) = ℓ(R/J) - ℓ(R/I)`, valid when the
/// pure-power ideal `J` satisfies `I² = I J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionIdentityReport {
    pub cotangent_length: usize,
    pub colength: usize,
    pub reduction_colength: usize,
    /// `ℓ(I/I²) - d ℓ(R/I)`.
    pub wilf_slack: i64,
    /// `ℓ(R/J) - ℓ(R/I)`.
    pub staircase_gap: i64,
    pub holds: bool,
}

pub fn verify_prop_ij(ideal: &MonomialIdeal) -> Result<ReductionIdentityReport> {
    let j = ideal.ci_analysis()?.pure_power_ideal;
    let square = ideal.square();
    if square != ideal.product(&j)? {
        return Err(GnsError::HypothesisFailed(format!(
            "I^2 != I J for J = {j:?}"
        )));
    }
    let colength = ideal.colength()?;
    let cotangent_length = length_of_quotient(ideal, &square)?;
    let reduction_colength = j.colength()?;
    let wilf_slack = cotangent_length as i64 - (ideal.vars() * colength) as i64;
    let staircase_gap = reduction_colength as i64 - colength as i64;
    Ok(ReductionIdentityReport {
        cotangent_length,
        colength,
        reduction_colength,
        wilf_slack,
        staircase_gap,
        holds: wilf_slack == staircase_gap,
    })
}
