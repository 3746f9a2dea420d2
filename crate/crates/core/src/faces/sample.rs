use rand::Rng;

use super::face::{in_catalog, FaceId};
use super::hyperplane::Hyperplane;
use super::index::ExtIndex;
use crate::error::{Error, Result};
use crate::maxplus::{ExtScalar, Point, Rational};

const DENOMS: [i128; 4] = [1, 2, 3, 4];

/// A random rational in `[-12, 12]` with a small denominator.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let d = DENOMS[rng.gen_range(0..DENOMS.len())];
    Rational::new(rng.gen_range(-12 * d..=12 * d), d)
}

/// A random rational in `(0, 8]`.
pub fn random_positive<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let d = DENOMS[rng.gen_range(0..DENOMS.len())];
    Rational::new(rng.gen_range(1..=8 * d), d)
}

/// A random extended scalar, `-∞` about one time in five.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> ExtScalar {
    if rng.gen_ratio(1, 5) {
        ExtScalar::Bottom
    } else {
        ExtScalar::Finite(random_rational(rng))
    }
}

/// A random point of `face`, covering ties, strict gaps, and `-∞` entries.
pub fn random_point_in_face<R: Rng + ?Sized>(
    h: &Hyperplane,
    face: FaceId,
    rng: &mut R,
) -> Result<Point> {
    if !in_catalog(h, face) {
        return Err(Error::FaceNotInCatalog(face));
    }
    let mut coords: Vec<ExtScalar> = (0..h.dim()).map(|_| random_scalar(rng)).collect();
    let ij = h.i_set().union(h.j_set());
    match face {
        FaceId::K(k) => {
            let tie = if k.has_free_term() {
                Rational::from_integer(0)
            } else if h.has_alpha() {
                random_positive(rng)
            } else {
                random_rational(rng)
            };
            for c in ij.coords() {
                coords[c - 1] = if k.contains(ExtIndex::Coord(c)) {
                    ExtScalar::Finite(tie)
                } else if rng.gen_ratio(1, 4) {
                    ExtScalar::Bottom
                } else {
                    ExtScalar::Finite(tie - random_positive(rng))
                };
            }
            for l in h.l_set().coords() {
                coords[l - 1] = ExtScalar::Bottom;
            }
        }
        FaceId::TypeI => {
            for c in ij.union(h.l_set()).coords() {
                coords[c - 1] = ExtScalar::Bottom;
            }
        }
        FaceId::TypeII => {
            let ls: Vec<usize> = h.l_set().coords().collect();
            let forced = ls[rng.gen_range(0..ls.len())];
            coords[forced - 1] = ExtScalar::Finite(random_rational(rng));
        }
    }
    Point::new(coords)
}
