mod common;

use common::{box_points, ideal_of_staircase, random_ideal, random_staircase, rng, MonoSet};
use gns_core::monomial::{
    gns_to_ideal, ideal_to_gns, length_of_quotient, verify_colon_inequality, verify_monomial_wilf,
};
use gns_core::{MonomialIdeal, Point};
use rand::RngExt;

/// A box containing every standard monomial of `I²`.
fn working_box(ideal: &MonomialIdeal) -> Vec<u32> {
    ideal
        .pure_power_exponents()
        .unwrap()
        .iter()
        .map(|a| 2 * a + 1)
        .collect()
}

#[test]
fn staircase_round_trip() {
    let mut r = rng(1);
    for _ in 0..200 {
        let dim = r.random_range(1..=4);
        let size = r.random_range(1..=25);
        let stairs = random_staircase(dim, size, &mut r);
        let ideal = ideal_of_staircase(dim, &stairs);
        assert_eq!(ideal.standard_monomials().unwrap(), stairs);
        assert_eq!(ideal.colength().unwrap(), stairs.len());
    }
}

#[test]
fn operations_agree_with_monomial_sets() {
    let mut r = rng(2);
    for _ in 0..300 {
        let i = random_ideal(&mut r, 3, 20);
        let j = random_ideal(&mut r, 3, 20);
        if i.vars() != j.vars() {
            continue;
        }
        let top: Vec<u32> = working_box(&i)
            .iter()
            .zip(working_box(&j))
            .map(|(a, b)| *a.max(&b))
            .collect();
        let (si, sj) = (MonoSet::of(&i, &top), MonoSet::of(&j, &top));
        assert_eq!(si.outside_count(), i.colength().unwrap());
        assert!(si.product(&sj).matches(&i.product(&j).unwrap()));
        assert!(si.product(&si).matches(&i.square()));
        for v in 1..=i.vars() {
            assert!(si.colon(v - 1).matches(&i.colon_by_variable(v).unwrap()));
            // Setting x_v = 0 keeps the monomials free of x_v.
            let elim = i.eliminate_variable(v).unwrap();
            let direct = box_points(&top)
                .into_iter()
                .filter(|x| x.coords()[v - 1] == 0 && !si.members.contains(x))
                .count();
            assert_eq!(elim.colength().unwrap(), direct);
        }
        let sq = MonoSet::of(&i.square(), &top);
        assert_eq!(
            length_of_quotient(&i, &i.square()).unwrap(),
            si.members.len() - sq.members.len()
        );
        let both = MonoSet::of(&i, &top)
            .members
            .iter()
            .filter(|x| sj.members.contains(*x))
            .count();
        assert_eq!(i.contains_ideal(&j), both == sj.members.len());
    }
}

#[test]
fn semigroup_translation_statistics() {
    let mut r = rng(3);
    for _ in 0..300 {
        let ideal = random_ideal(&mut r, 4, 30);
        if ideal.is_unit() {
            continue;
        }
        let s = ideal_to_gns(&ideal).unwrap();
        let inv = s.invariants();
        let colength = ideal.colength().unwrap();
        if colength == 1 {
            // The maximal ideal: no holes, nothing below them.
            assert_eq!((inv.g, inv.n, inv.c), (0, 0, 0));
            continue;
        }
        assert_eq!(inv.c, colength);
        assert_eq!(inv.g, colength - 1);
        assert_eq!(inv.n, 1);
        assert_eq!(inv.e, length_of_quotient(&ideal, &ideal.square()).unwrap());
        assert_eq!(gns_to_ideal(&s).unwrap(), ideal);
        let report = verify_monomial_wilf(&ideal).unwrap();
        assert_eq!(report.lhs, (inv.e * inv.n) as u64);
        assert_eq!(report.rhs, (s.dim() * inv.c) as u64);
    }
}

#[test]
fn colon_inequality_on_random_ideals() {
    let mut r = rng(4);
    for _ in 0..300 {
        let ideal = random_ideal(&mut r, 3, 25);
        for v in 1..=ideal.vars() {
            let report = verify_colon_inequality(&ideal, v).unwrap();
            assert!(
                report.holds && report.product_identity && report.containment,
                "{ideal:?} x_{v}"
            );
        }
    }
}

#[test]
fn reduction_number_definition() {
    let mut r = rng(5);
    for _ in 0..100 {
        let ideal = random_ideal(&mut r, 3, 15);
        let ci = ideal.ci_analysis().unwrap();
        let j = ci.pure_power_ideal;
        // J is a reduction exactly when I lies in its integral closure, i.e.
        // every generator is on or above the hyperplane sum x_i / a_i = 1.
        let l: u64 = ci.exponents.iter().map(|&a| a as u64).product();
        let integral = ideal.generators().iter().all(|g| {
            g.coords()
                .iter()
                .zip(&ci.exponents)
                .map(|(&x, &a)| x as u64 * (l / a as u64))
                .sum::<u64>()
                >= l
        });
        match ideal.reduction_number(&j, 12).unwrap() {
            Some(k) => {
                assert!(integral, "{ideal:?}");
                assert_eq!(ideal.power(k + 1), j.product(&ideal.power(k)).unwrap());
                if k > 0 {
                    assert_ne!(ideal.power(k), j.product(&ideal.power(k - 1)).unwrap());
                }
            }
            None => assert!(!integral, "{ideal:?}"),
        }
    }
    let unit = Point::zero(2);
    assert!(MonomialIdeal::new(2, [unit]).unwrap().is_unit());
}
