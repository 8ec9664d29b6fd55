mod common;

use std::collections::HashSet;

use common::{box_points, le, rank, Naive};
use gns_core::enumeration::{fold_tree, random_gns, Parallelism, TreeNode};
use gns_core::families::{box_steps, make_family_axis, make_family_box, make_family_e2d};
use gns_core::thickening::{predicted_generators, thicken, thicken_iterated};
use gns_core::wilf::{extended_wilf, generalized_wilf, order_frobenius};
use gns_core::{Gns, MonomialOrder, OrderKind, Point};
use proptest::prelude::*;

fn all_up_to(dim: usize, max_genus: usize) -> Vec<Gns> {
    let lex = MonomialOrder::graded_lex(dim);
    fold_tree(
        dim,
        max_genus,
        &lex,
        Parallelism::Serial,
        Vec::new,
        |mut acc, node: &TreeNode| {
            acc.push(node.semigroup.clone());
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

fn small_corpus() -> Vec<Gns> {
    let mut v = all_up_to(1, 8);
    v.extend(all_up_to(2, 7));
    v.extend(all_up_to(3, 4));
    v
}

fn check_against_oracle(s: &Gns) {
    let naive = Naive::new(s);
    assert_eq!(
        s.minimal_generators(),
        naive.generators(),
        "generators of {s:?}"
    );
    let (c, n) = s.region_sets();
    assert_eq!(c, naive.c_set(), "C of {s:?}");
    assert_eq!(n, naive.n_set(), "N of {s:?}");
    assert_eq!(s.fundamental_holes(), naive.fundamental(), "M of {s:?}");
    assert_eq!(s.maximal_holes(), naive.maximal());
    if s.genus() > 0 {
        let (pf, eh) = s.pseudo_frobenius_and_special_gaps().unwrap();
        assert_eq!(pf, naive.pf(), "PF of {s:?}");
        assert_eq!(eh, naive.eh(), "EH of {s:?}");
    }
}

#[test]
fn invariants_agree_with_definitions_on_small_trees() {
    for s in small_corpus() {
        check_against_oracle(&s);
    }
}

#[test]
fn classification_agrees_with_definitions() {
    for s in small_corpus() {
        let naive = Naive::new(&s);
        let class = s.classify();
        let maximal = naive.maximal();
        let f = (maximal.len() == 1).then(|| maximal[0].clone());
        assert_eq!(class.frobenius_element, f);
        let g = s.genus() as u128;
        let vol = f.as_ref().map(|f| f.box_volume());
        assert_eq!(class.is_symmetric, vol == Some(2 * g) && g > 0);
        assert_eq!(class.is_pseudo_symmetric, g > 0 && vol == Some(2 * g - 1));
        let (sym, psym) = s.symmetry_from_pseudo_frobenius();
        assert_eq!(
            (sym, psym),
            (class.is_symmetric, class.is_pseudo_symmetric),
            "{s:?}"
        );
        assert_eq!(class.is_irreducible, naive.eh().len() == 1 && g > 0);
        let ordinary = f.as_ref().is_some_and(|f| {
            let below: HashSet<Point> = box_points(f.coords())
                .into_iter()
                .filter(|p| !p.is_zero())
                .collect();
            below == naive.holes
        });
        assert_eq!(class.is_ordinary, ordinary);
        assert_eq!(class.is_monomial, g > 0 && naive.n_set().len() == 1);
        assert_eq!(class.span_rank, rank(s.holes()), "{s:?}");
        assert_eq!(class.span_rank, s.dim() - class.axes.len());
        let axes: Vec<usize> = (1..=s.dim())
            .filter(|&i| s.holes().iter().all(|h| h.coords()[i - 1] == 0))
            .collect();
        assert_eq!(class.axes, axes);
    }
}

#[test]
fn canonical_decomposition_is_injective_on_the_down_closure() {
    for s in all_up_to(2, 6).into_iter().chain(all_up_to(3, 3)) {
        if s.genus() == 0 {
            continue;
        }
        let naive = Naive::new(&s);
        let mut modules = naive.fundamental();
        modules.push(Point::zero(s.dim()));
        for order in MonomialOrder::all_of_kind(OrderKind::GradedLex, s.dim()) {
            let mut seen = HashSet::new();
            for x in naive.c_set() {
                let (m, t) = s.canonical_decompose(&x, &order).unwrap();
                assert_eq!(m.add(&t), x);
                assert!(modules.contains(&m) && naive.in_s(&t));
                let best = box_points(x.coords())
                    .into_iter()
                    .filter(|p| naive.in_s(p))
                    .max_by(|a, b| order.compare(a, b))
                    .unwrap();
                assert_eq!(t, best);
                assert!(seen.insert((m, t)));
            }
        }
    }
}

#[test]
fn order_frobenius_matches_scan() {
    for s in all_up_to(2, 6).into_iter().chain(all_up_to(3, 3)) {
        let naive = Naive::new(&s);
        for kind in [OrderKind::GradedLex, OrderKind::GradedRevLex] {
            for order in MonomialOrder::all_of_kind(kind, s.dim()) {
                let (fb, n) = order_frobenius(&s, &order);
                match fb {
                    None => assert_eq!((s.genus(), n), (0, 0)),
                    Some(fb) => {
                        assert!(s.holes().iter().all(|h| order.compare(h, &fb).is_le()));
                        assert_eq!(n, naive.n_order(&order, &fb));
                        // n <= n_order for every order.
                        assert!(naive.n_set().len() as u64 <= n);
                    }
                }
            }
        }
    }
}

#[test]
fn generalized_implies_extended() {
    for s in all_up_to(2, 7).into_iter().chain(all_up_to(3, 4)) {
        if !generalized_wilf(&s).holds {
            continue;
        }
        for kind in [OrderKind::GradedLex, OrderKind::GradedRevLex] {
            for order in MonomialOrder::all_of_kind(kind, s.dim()) {
                assert!(extended_wilf(&s, &order, false).holds, "{s:?} {order}");
            }
        }
    }
}

#[test]
fn axis_family_is_an_equality_case() {
    for dim in 2..=4 {
        for h in 2..=5 {
            for i in 1..=dim {
                for k in (1..=dim).filter(|&k| k != i) {
                    let s = make_family_axis(dim, i, k, h).unwrap();
                    let inv = s.invariants();
                    assert_eq!((inv.e, inv.n, inv.c), (2 * dim, h as usize, 2 * h as usize));
                    assert!(generalized_wilf(&s).equality);
                }
            }
        }
    }
}

#[test]
fn e2d_family_frobenius_behaviour() {
    for b in [3u32, 5, 7, 9] {
        for h in [vec![1], vec![2], vec![3], vec![2, 2], vec![1, 3]] {
            let dim = h.len() + 1;
            let s = make_family_e2d(dim, 1, 2, b, &h).unwrap();
            // Holes: odd x_1 < b with x_j < h_j elsewhere.
            let mut expect = Vec::new();
            for x1 in (1..b).step_by(2) {
                for rest in box_points(&h.iter().map(|v| v - 1).collect::<Vec<_>>()) {
                    expect.push(rest.insert_coord(0, x1));
                }
            }
            expect.sort();
            assert_eq!(s.holes(), expect);
            assert!(s.classify().is_symmetric);
            assert_eq!(s.invariants().e, 2 * dim);
        }
    }
    for (a, b) in [(3, 4), (3, 5), (4, 5), (3, 7)] {
        for h in [vec![1], vec![2], vec![1, 2]] {
            let s = make_family_e2d(h.len() + 1, 1, a, b, &h).unwrap();
            assert!(
                s.classify().frobenius_element.is_none(),
                "a={a} b={b} h={h:?}"
            );
        }
    }
}

fn gns_strategy() -> impl Strategy<Value = Gns> {
    (1usize..=3, 0usize..=14, any::<u64>()).prop_map(|(d, g, seed)| random_gns(d, g, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_semigroups_agree_with_definitions(s in gns_strategy()) {
        check_against_oracle(&s);
        let inv = s.invariants();
        prop_assert_eq!(inv.c, inv.g + inv.n);
        for h in s.holes() {
            prop_assert!(h.box_volume() <= inv.c as u128);
        }
    }

    #[test]
    fn thickening_statistics(s in gns_strategy(), k in 0u32..4, axis_seed in any::<usize>()) {
        let axis = axis_seed % (s.dim() + 1) + 1;
        let t = thicken(&s, axis, k).unwrap();
        let (a, b) = (s.invariants(), t.invariants());
        prop_assert_eq!(b.e, a.e + a.m);
        prop_assert_eq!(b.n, (k as usize + 1) * a.n);
        prop_assert_eq!(b.c, (k as usize + 1) * a.c);
        prop_assert_eq!(b.g, (k as usize + 1) * a.g);
        prop_assert_eq!(t.minimal_generators(), predicted_generators(&s, axis, k).unwrap());
    }

    #[test]
    fn restriction_round_trip(s in gns_strategy(), k in 0u32..3) {
        prop_assume!(s.genus() > 0);
        let wide = thicken(&s, s.dim() + 1, k).unwrap();
        for candidate in [&s, &wide] {
            let r = candidate.axes_and_restriction().unwrap();
            prop_assert_eq!(r.restricted.genus(), candidate.genus());
            prop_assert_eq!(r.span_rank, rank(candidate.holes()));
            let steps: Vec<(usize, u32)> = r.axes.iter().map(|&a| (a, 0)).collect();
            prop_assert_eq!(&thicken_iterated(&r.restricted, &steps).unwrap(), candidate);
        }
    }

    #[test]
    fn box_family_is_an_iterated_thickening(seed in any::<u64>(), q in prop::collection::vec(0u32..3, 1..3), j_seed in any::<usize>()) {
        let numerical = random_gns(1, (seed % 6) as usize, seed).unwrap();
        let gaps: Vec<u32> = numerical.holes().iter().map(|p| p.coords()[0]).collect();
        let j = j_seed % (q.len() + 1) + 1;
        let s = make_family_box(&gaps, j, &q).unwrap();
        prop_assert_eq!(&s, &thicken_iterated(&numerical, &box_steps(j, &q)).unwrap());
        let naive = Naive::new(&s);
        for h in s.holes() {
            prop_assert!(gaps.contains(&h.coords()[j - 1]));
        }
        prop_assert_eq!(naive.holes.len(), gaps.len() * q.iter().map(|&v| v as usize + 1).product::<usize>());
    }

    #[test]
    fn componentwise_partial_order_is_refined(a in prop::collection::vec(0u32..5, 3), b in prop::collection::vec(0u32..5, 3)) {
        let (a, b) = (Point::from(a), Point::from(b));
        for kind in [OrderKind::GradedLex, OrderKind::GradedRevLex] {
            for order in MonomialOrder::all_of_kind(kind, 3) {
                if le(&a, &b) {
                    prop_assert!(order.compare(&a, &b).is_le());
                }
            }
        }
    }
}
