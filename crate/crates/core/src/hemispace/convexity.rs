//! Sampled convexity oracle.
//!
//! A set `S` is convex when `[x, y] ⊆ S` for all `x, y ∈ S`. For sets whose
//! membership depends only on the order pattern of the coordinates (every
//! union of faces in this crate), testing the breakpoints of `[x, y]` and one
//! parameter per gap decides the segment exactly; only the choice of the
//! pairs is random.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::assembly::{Hemispace, TypeIShare};
use crate::faces::{face_catalog, random_point_in_face, FaceId, Hyperplane};
use crate::maxplus::{segment_point, segment_samples, ExtScalar, Point, SegmentParam};

/// Draws at most this many candidates when looking for a member point.
const MAX_ATTEMPTS: usize = 256;

/// A source of random points.
pub trait PointSampler: Sync {
    fn dim(&self) -> usize;
    fn sample(&self, rng: &mut dyn RngCore) -> Point;
}

/// Uniform points of `values^dim`.
#[derive(Debug, Clone)]
pub struct GridSampler {
    dim: usize,
    values: Vec<ExtScalar>,
}

impl GridSampler {
    pub fn new(dim: usize, values: Vec<ExtScalar>) -> Self {
        assert!(dim > 0 && !values.is_empty());
        GridSampler { dim, values }
    }
}

impl PointSampler for GridSampler {
    fn dim(&self) -> usize {
        self.dim
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Point {
        let coords = (0..self.dim)
            .map(|_| self.values[(rng.next_u32() as usize) % self.values.len()])
            .collect();
        Point::new(coords).expect("dim > 0")
    }
}

/// Mixture of random points drawn face by face (three draws in four) and
/// uniform grid points. When a type-I face is split by a sub-hemispace, the
/// free coordinates of type-I samples come from a sampler for that
/// sub-hemispace, so its own faces are hit as well.
#[derive(Debug, Clone)]
pub struct FaceSampler {
    hyperplane: Hyperplane,
    faces: Vec<FaceId>,
    grid: GridSampler,
    free_coords: Vec<usize>,
    sub: Option<Box<FaceSampler>>,
}

impl FaceSampler {
    pub fn new(hyperplane: &Hyperplane) -> Self {
        FaceSampler {
            hyperplane: *hyperplane,
            faces: face_catalog(hyperplane),
            grid: GridSampler::new(hyperplane.dim(), super::standard_grid()),
            free_coords: hyperplane.free_coords(),
            sub: None,
        }
    }

    pub fn for_hemispace(hm: &Hemispace) -> Self {
        let mut sampler = FaceSampler::new(hm.hyperplane());
        if let Some(TypeIShare::Part(sub)) = hm.type_i() {
            sampler.sub = Some(Box::new(FaceSampler::for_hemispace(sub)));
        }
        sampler
    }
}

impl PointSampler for FaceSampler {
    fn dim(&self) -> usize {
        self.hyperplane.dim()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Point {
        if rng.next_u32().is_multiple_of(4) {
            return self.grid.sample(rng);
        }
        let face = self.faces[(rng.next_u32() as usize) % self.faces.len()];
        let p = random_point_in_face(&self.hyperplane, face, rng).expect("face from catalog");
        match (&self.sub, face) {
            (Some(sub), FaceId::TypeI) => {
                let inner = sub.sample(rng);
                let mut coords = p.coords().to_vec();
                for (k, &c) in self.free_coords.iter().enumerate() {
                    coords[c - 1] = inner[k];
                }
                Point::new(coords).expect("dim > 0")
            }
            _ => p,
        }
    }
}

/// A point of `[x, y]` outside the set although `x` and `y` are inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub x: Point,
    pub y: Point,
    pub param: SegmentParam,
    pub point: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    /// Member pairs whose segments were checked.
    pub pairs_checked: usize,
    /// Segment points evaluated across all pairs.
    pub points_evaluated: usize,
}

/// Checks `[x, y]` at every breakpoint and one parameter per gap, returning
/// the first point (walking from `y` to `x`) outside the set.
pub fn check_segment(
    member: &(dyn Fn(&Point) -> bool + Sync),
    x: &Point,
    y: &Point,
) -> Option<Counterexample> {
    segment_samples(x, y)
        .expect("sampler dimension matches")
        .into_iter()
        .find_map(|param| {
            let point = segment_point(x, y, param).expect("valid parameter");
            (!member(&point)).then(|| Counterexample {
                x: x.clone(),
                y: y.clone(),
                param,
                point,
            })
        })
}

enum Trial {
    Skipped,
    Checked(usize, Option<Counterexample>),
}

fn draw_member(
    member: &(dyn Fn(&Point) -> bool + Sync),
    sampler: &dyn PointSampler,
    rng: &mut ChaCha8Rng,
) -> Option<Point> {
    (0..MAX_ATTEMPTS)
        .map(|_| sampler.sample(rng))
        .find(|p| member(p))
}

/// Samples `trials` pairs of member points and checks each segment between
/// them exhaustively.
///
/// Trial `t` draws from its own ChaCha stream `t` under `seed`, so the
/// report does not depend on how rayon schedules the trials. A trial whose
/// sampler yields no member point within a bounded number of draws is
/// skipped (the empty set passes trivially).
pub fn convexity_check(
    member: &(dyn Fn(&Point) -> bool + Sync),
    dim: usize,
    sampler: &dyn PointSampler,
    trials: usize,
    seed: u64,
) -> ConvexityReport {
    assert_eq!(dim, sampler.dim(), "sampler dimension");
    let outcomes: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let Some(x) = draw_member(member, sampler, &mut rng) else {
                return Trial::Skipped;
            };
            let Some(y) = draw_member(member, sampler, &mut rng) else {
                return Trial::Skipped;
            };
            let evaluated = segment_samples(&x, &y).map_or(0, |s| s.len());
            Trial::Checked(evaluated, check_segment(member, &x, &y))
        })
        .collect();

    let mut report = ConvexityReport {
        pass: true,
        counterexample: None,
        pairs_checked: 0,
        points_evaluated: 0,
    };
    for outcome in outcomes {
        if let Trial::Checked(evaluated, failure) = outcome {
            report.pairs_checked += 1;
            report.points_evaluated += evaluated;
            if report.counterexample.is_none() {
                if let Some(c) = failure {
                    report.pass = false;
                    report.counterexample = Some(c);
                }
            }
        }
    }
    report
}

/// [`convexity_check`] for a hemispace with its own face sampler.
pub fn check_hemispace(hm: &Hemispace, trials: usize, seed: u64) -> ConvexityReport {
    let member = |p: &Point| hm.contains(p).expect("sampled point has the right dimension");
    convexity_check(
        &member,
        hm.dim(),
        &FaceSampler::for_hemispace(hm),
        trials,
        seed,
    )
}
