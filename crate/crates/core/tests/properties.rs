use std::collections::BTreeSet;

use maxplus_hemispaces::enumeration::{
    enumerate_centered_hyperplanes, enumerate_face_partitions, enumerate_hemispaces,
};
use maxplus_hemispaces::faces::{
    classify, face_catalog, random_point_in_face, FaceId, Hyperplane, HyperplaneSpec, IndexSet,
};
use maxplus_hemispaces::hemispace::{standard_grid, validate_partition};
use maxplus_hemispaces::maxplus::{
    segment_breakpoints, segment_point, segment_samples, ExtScalar, Point, Rational,
    SegmentParam,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = ExtScalar> {
    prop_oneof![
        1 => Just(ExtScalar::Bottom),
        4 => (-40i128..=40, 1i128..=4).prop_map(|(p, q)| ExtScalar::Finite(Rational::new(p, q))),
    ]
}

fn point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(scalar(), dim).prop_map(|c| Point::new(c).unwrap())
}

fn points(count: usize) -> impl Strategy<Value = Vec<Point>> {
    (1usize..=4).prop_flat_map(move |d| prop::collection::vec(point(d), count))
}

fn hyperplane() -> impl Strategy<Value = Hyperplane> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(0u8..4, n), any::<bool>()))
        .prop_filter_map("needs I, and J without a free term", |(n, roles, alpha)| {
            let pick = |r: u8| (1..=n).filter(|&c| roles[c - 1] == r).collect::<Vec<_>>();
            Hyperplane::new(&HyperplaneSpec {
                n,
                i: pick(0),
                j: pick(1),
                l: pick(2),
                alpha,
            })
            .ok()
        })
}

/// Comparisons among the coordinates and 0.
fn pattern(p: &Point) -> Vec<std::cmp::Ordering> {
    let mut terms = p.coords().to_vec();
    terms.push(ExtScalar::ZERO);
    let mut out = Vec::new();
    for a in &terms {
        for b in &terms {
            out.push(a.cmp(b));
        }
    }
    out
}

/// Position along `[x, y]`: `(α, 0)` at `α`, `(0, β)` at `-β`; `None` for
/// the endpoints `α = -∞` (at `y`) and `β = -∞` (at `x`).
fn position(p: SegmentParam) -> Option<Rational> {
    match (p.alpha(), p.beta()) {
        (ExtScalar::Finite(a), ExtScalar::Finite(b)) if b == Rational::from_integer(0) => Some(a),
        (ExtScalar::Finite(_), ExtScalar::Finite(b)) => Some(-b),
        _ => None,
    }
}

fn third_of_gap(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    let third = Rational::new(1, 3);
    match (lo, hi) {
        (Some(a), Some(b)) => a + (b - a) * third,
        (None, Some(b)) => b - third,
        (Some(a), None) => a + third,
        (None, None) => Rational::from_integer(0),
    }
}

fn param_at(t: Rational) -> SegmentParam {
    let zero = ExtScalar::ZERO;
    if t <= Rational::from_integer(0) {
        SegmentParam::new(ExtScalar::Finite(t), zero).unwrap()
    } else {
        SegmentParam::new(zero, ExtScalar::Finite(-t)).unwrap()
    }
}

proptest! {
    #[test]
    fn oplus_is_a_semilattice(ps in points(3)) {
        let (x, y, z) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(x.oplus(y).unwrap(), y.oplus(x).unwrap());
        prop_assert_eq!(x.oplus(&y.oplus(z).unwrap()).unwrap(), x.oplus(y).unwrap().oplus(z).unwrap());
        prop_assert_eq!(&x.oplus(x).unwrap(), x);
        prop_assert_eq!(&x.oplus(&Point::bottom(x.dim())).unwrap(), x);
    }

    #[test]
    fn scaling_distributes(ps in points(2), a in scalar(), b in scalar()) {
        let (x, y) = (&ps[0], &ps[1]);
        prop_assert_eq!(x.oplus(y).unwrap().scale(a), x.scale(a).oplus(&y.scale(a)).unwrap());
        prop_assert_eq!(x.scale(a.oplus(b)), x.scale(a).oplus(&x.scale(b)).unwrap());
        prop_assert_eq!(x.scale(a).scale(b), x.scale(a + b));
    }

    #[test]
    fn order_pattern_is_constant_between_breakpoints(ps in points(2)) {
        let (x, y) = (&ps[0], &ps[1]);
        let breaks = segment_breakpoints(x, y).unwrap();
        let samples = segment_samples(x, y).unwrap();
        prop_assert_eq!(samples.len(), 2 * breaks.len() - 1);
        prop_assert_eq!(segment_point(x, y, breaks[0]).unwrap(), y.clone());
        prop_assert_eq!(segment_point(x, y, *breaks.last().unwrap()).unwrap(), x.clone());
        for k in 0..breaks.len() - 1 {
            let gap = samples[2 * k + 1];
            let other = param_at(third_of_gap(position(breaks[k]), position(breaks[k + 1])));
            prop_assert_eq!(
                pattern(&segment_point(x, y, gap).unwrap()),
                pattern(&segment_point(x, y, other).unwrap())
            );
        }
    }

    #[test]
    fn classification_is_a_partition(h in hyperplane(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let catalog = face_catalog(&h);
        for &face in &catalog {
            let p = random_point_in_face(&h, face, &mut rng).unwrap();
            prop_assert_eq!(classify(&h, &p).unwrap(), face);
        }
    }

    #[test]
    fn classify_lands_in_catalog(h in hyperplane(), c in prop::collection::vec(scalar(), 4)) {
        let p = Point::new(c[..h.dim()].to_vec()).unwrap();
        let face = classify(&h, &p).unwrap();
        prop_assert!(face_catalog(&h).contains(&face));
        if let FaceId::K(k) = face {
            prop_assert!(k.is_subset(h.universe()));
        }
    }

    #[test]
    fn faces_are_closed_under_oplus(h in hyperplane(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for face in face_catalog(&h) {
            let x = random_point_in_face(&h, face, &mut rng).unwrap();
            let y = random_point_in_face(&h, face, &mut rng).unwrap();
            prop_assert_eq!(classify(&h, &x.oplus(&y).unwrap()).unwrap(), face);
        }
    }

    #[test]
    fn linear_faces_are_cones(h in hyperplane(), seed in any::<u64>(), lambda in -20i128..20) {
        prop_assume!(!h.has_alpha());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for face in face_catalog(&h) {
            let x = random_point_in_face(&h, face, &mut rng).unwrap();
            prop_assert_eq!(classify(&h, &x.scale(ExtScalar::int(lambda as i64))).unwrap(), face);
        }
    }
}

#[test]
fn enumerated_partitions_validate() {
    for n in 1..=3 {
        for h in enumerate_centered_hyperplanes(n) {
            for part in enumerate_face_partitions(&h).unwrap() {
                let first: Vec<_> = part.first().iter().copied().collect();
                let second: Vec<_> = part.second().iter().copied().collect();
                assert_eq!(validate_partition(&h, &first, &second).unwrap(), part);
                let jbar_single = IndexSet::singleton(h.jbar().iter().next().unwrap());
                assert!(part.first().contains(&jbar_single));
            }
        }
    }
}

#[test]
fn complements_split_the_grid() {
    let grid = standard_grid();
    for hm in enumerate_hemispaces(2) {
        let a = hm.signature(&grid).unwrap();
        let b = hm.complement().signature(&grid).unwrap();
        assert_eq!(b, a.not());
    }
}

#[test]
fn hemispaces_are_unions_of_whole_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for hm in enumerate_hemispaces(3) {
        let h = hm.hyperplane();
        for face in face_catalog(h) {
            let owned: BTreeSet<bool> = (0..20)
                .map(|_| hm.contains(&random_point_in_face(h, face, &mut rng).unwrap()).unwrap())
                .collect();
            assert_eq!(owned.len(), 1, "{face} is split");
        }
    }
}
