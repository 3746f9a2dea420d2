//! Max-plus segments `[x, y] = { α⊗x ⊕ β⊗y : max(α, β) = 0 }`.
//!
//! The parameter set is two arcs glued at `α = β = 0`: the arc `β = 0`,
//! `α ∈ [-∞, 0]` starting at `y`, and the arc `α = 0`, `β ∈ [-∞, 0]` ending
//! at `x`. Internally a parameter is mapped to a position `t` on the extended
//! line, `t = α` on the first arc and `t = -β` on the second, so that sorting
//! by `t` walks the segment from `y` to `x`.

use std::cmp::Ordering;
use std::fmt;

use super::point::Point;
use super::scalar::{ExtScalar, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentParam {
    alpha: ExtScalar,
    beta: ExtScalar,
}

impl SegmentParam {
    /// The parameter giving the endpoint `x`.
    pub const AT_X: SegmentParam = SegmentParam {
        alpha: ExtScalar::ZERO,
        beta: ExtScalar::Bottom,
    };
    /// The parameter giving the endpoint `y`.
    pub const AT_Y: SegmentParam = SegmentParam {
        alpha: ExtScalar::Bottom,
        beta: ExtScalar::ZERO,
    };
    /// `α = β = 0`, the point `x ⊕ y`.
    pub const MIDPOINT: SegmentParam = SegmentParam {
        alpha: ExtScalar::ZERO,
        beta: ExtScalar::ZERO,
    };

    pub fn new(alpha: ExtScalar, beta: ExtScalar) -> Result<Self> {
        if alpha.oplus(beta) != ExtScalar::ZERO {
            return Err(Error::InvalidSegmentParam {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        Ok(SegmentParam { alpha, beta })
    }

    pub fn alpha(&self) -> ExtScalar {
        self.alpha
    }

    pub fn beta(&self) -> ExtScalar {
        self.beta
    }

    fn from_position(pos: Position) -> Self {
        match pos {
            Position::NegInf => SegmentParam::AT_Y,
            Position::PosInf => SegmentParam::AT_X,
            Position::Finite(t) if t <= Rational::from_integer(0) => SegmentParam {
                alpha: ExtScalar::Finite(t),
                beta: ExtScalar::ZERO,
            },
            Position::Finite(t) => SegmentParam {
                alpha: ExtScalar::ZERO,
                beta: ExtScalar::Finite(-t),
            },
        }
    }
}

impl fmt::Display for SegmentParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, beta={})", self.alpha, self.beta)
    }
}

/// Position along the segment, `-∞` at `y` and `+∞` at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Position {
    NegInf,
    Finite(Rational),
    PosInf,
}

fn interior(a: Position, b: Position) -> Position {
    let one = Rational::from_integer(1);
    match (a, b) {
        (Position::Finite(a), Position::Finite(b)) => Position::Finite((a + b) / 2),
        (Position::NegInf, Position::Finite(b)) => Position::Finite(b - one),
        (Position::Finite(a), Position::PosInf) => Position::Finite(a + one),
        _ => unreachable!("the midpoint parameter separates the two infinite ends"),
    }
}

/// `α⊗x ⊕ β⊗y`.
pub fn segment_point(x: &Point, y: &Point, p: SegmentParam) -> Result<Point> {
    SegmentParam::new(p.alpha, p.beta)?;
    x.scale(p.alpha).oplus(&y.scale(p.beta))
}

/// Relative order of every pair among the coordinates and the constant 0,
/// plus which coordinates are `-∞`.
#[derive(Debug, PartialEq, Eq)]
struct OrderPattern(Vec<Ordering>, Vec<bool>);

impl OrderPattern {
    fn of(z: &Point) -> Self {
        let mut values = z.coords().to_vec();
        values.push(ExtScalar::ZERO);
        let mut cmp = Vec::with_capacity(values.len() * values.len() / 2);
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                cmp.push(a.cmp(b));
            }
        }
        OrderPattern(cmp, z.coords().iter().map(|c| c.is_bottom()).collect())
    }
}

fn candidate_positions(x: &Point, y: &Point) -> Vec<Position> {
    let zero = Rational::from_integer(0);
    let mut out = vec![Position::NegInf, Position::Finite(zero), Position::PosInf];
    let mut push = |t: Rational| {
        if t != zero {
            out.push(Position::Finite(t));
        }
    };
    let xs: Vec<Rational> = x.coords().iter().filter_map(ExtScalar::finite).collect();
    let ys: Vec<Rational> = y.coords().iter().filter_map(ExtScalar::finite).collect();
    for &xi in &xs {
        for &yj in &ys {
            // α + x_i = y_j on the β = 0 arc; x_i = β + y_j on the α = 0 arc.
            let alpha = yj - xi;
            if alpha < zero {
                push(alpha);
            }
            let beta = xi - yj;
            if beta < zero {
                push(-beta);
            }
        }
        // α + x_i = 0
        if -xi < zero {
            push(-xi);
        }
    }
    for &yj in &ys {
        // β + y_j = 0
        if -yj < zero {
            push(yj);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn point_at(x: &Point, y: &Point, pos: Position) -> Point {
    let p = SegmentParam::from_position(pos);
    x.scale(p.alpha)
        .oplus(&y.scale(p.beta))
        .expect("dimensions checked by caller")
}

fn breakpoint_positions(x: &Point, y: &Point) -> Result<Vec<Position>> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let candidates = candidate_positions(x, y);
    let patterns: Vec<OrderPattern> = candidates
        .iter()
        .map(|&c| OrderPattern::of(&point_at(x, y, c)))
        .collect();
    let gaps: Vec<OrderPattern> = candidates
        .windows(2)
        .map(|w| OrderPattern::of(&point_at(x, y, interior(w[0], w[1]))))
        .collect();

    let zero = Position::Finite(Rational::from_integer(0));
    let kept = candidates
        .iter()
        .enumerate()
        .filter(|&(i, &c)| {
            if matches!(c, Position::NegInf | Position::PosInf) || c == zero {
                return true;
            }
            patterns[i] != gaps[i - 1] || patterns[i] != gaps[i]
        })
        .map(|(_, &c)| c)
        .collect();
    Ok(kept)
}

/// Parameters at which the order pattern of the segment point can change.
///
/// Always contains both endpoints and the midpoint `α = β = 0`. Between two
/// consecutive entries, the relative order of the coordinates of the segment
/// point (among themselves, against `0`, and against `-∞`) is constant. The
/// list runs from `y` (`α = -∞`) through the midpoint to `x` (`β = -∞`).
pub fn segment_breakpoints(x: &Point, y: &Point) -> Result<Vec<SegmentParam>> {
    Ok(breakpoint_positions(x, y)?
        .into_iter()
        .map(SegmentParam::from_position)
        .collect())
}

/// Breakpoints interleaved with one interior parameter of every gap, in the
/// same `y`-to-`x` order. Evaluating a pattern-determined predicate at these
/// parameters decides it on the whole segment.
pub fn segment_samples(x: &Point, y: &Point) -> Result<Vec<SegmentParam>> {
    let positions = breakpoint_positions(x, y)?;
    let mut out = Vec::with_capacity(positions.len() * 2);
    for (i, &pos) in positions.iter().enumerate() {
        if i > 0 {
            out.push(SegmentParam::from_position(interior(positions[i - 1], pos)));
        }
        out.push(SegmentParam::from_position(pos));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn param(a: &str, b: &str) -> SegmentParam {
        SegmentParam::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
    }

    #[test]
    fn segment_point_examples() {
        let x = p("2,-inf");
        let y = p("-inf,3");
        assert_eq!(segment_point(&x, &y, param("0", "-2")).unwrap(), p("2,1"));
        assert_eq!(segment_point(&x, &y, SegmentParam::AT_X).unwrap(), x);
        assert_eq!(segment_point(&x, &y, SegmentParam::AT_Y).unwrap(), y);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(SegmentParam::new(ExtScalar::int(-1), ExtScalar::int(-1)).is_err());
        assert!(SegmentParam::new(ExtScalar::int(1), ExtScalar::ZERO).is_err());
        assert!(SegmentParam::new(ExtScalar::Bottom, ExtScalar::Bottom).is_err());
        let bad = SegmentParam {
            alpha: ExtScalar::int(-1),
            beta: ExtScalar::int(-1),
        };
        assert!(segment_point(&p("0"), &p("1"), bad).is_err());
    }

    #[test]
    fn breakpoints_include_tie_between_coordinates() {
        // 2 = β + 3 at β = -1 on the α = 0 arc.
        let bps = segment_breakpoints(&p("2,-inf"), &p("-inf,3")).unwrap();
        assert!(bps.contains(&param("0", "-1")));
        assert_eq!(bps.first(), Some(&SegmentParam::AT_Y));
        assert_eq!(bps.last(), Some(&SegmentParam::AT_X));
        assert!(bps.contains(&SegmentParam::MIDPOINT));
    }

    #[test]
    fn equal_endpoints_have_no_interior_breakpoints() {
        let x = p("1,2,-inf");
        let bps = segment_breakpoints(&x, &x).unwrap();
        assert_eq!(
            bps,
            vec![SegmentParam::AT_Y, SegmentParam::MIDPOINT, SegmentParam::AT_X]
        );
    }

    #[test]
    fn one_dimensional_breakpoint() {
        // max(0, β + 5) leaves 0 at β = -5, on the α = 0 arc.
        let bps = segment_breakpoints(&p("0"), &p("5")).unwrap();
        assert_eq!(
            bps,
            vec![
                SegmentParam::AT_Y,
                SegmentParam::MIDPOINT,
                param("0", "-5"),
                SegmentParam::AT_X
            ]
        );
    }

    #[test]
    fn samples_interleave_gaps() {
        let s = segment_samples(&p("0"), &p("5")).unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(s[1], param("-1", "0"));
        assert_eq!(s[3], param("0", "-5/2"));
        assert_eq!(s[5], param("0", "-6"));
    }
}
