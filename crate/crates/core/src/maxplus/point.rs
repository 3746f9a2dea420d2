use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use super::scalar::ExtScalar;
use crate::error::{Error, ParseError, Result};

/// A point of `R^n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<ExtScalar>,
}

impl Point {
    pub fn new(coords: Vec<ExtScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Point { coords })
    }

    /// Builds a point from integer coordinates, `None` standing for `-∞`.
    pub fn from_ints(coords: &[Option<i64>]) -> Self {
        let coords = coords
            .iter()
            .map(|c| c.map_or(ExtScalar::Bottom, ExtScalar::int))
            .collect();
        Point::new(coords).expect("non-empty coordinate list")
    }

    /// The point with every coordinate at `-∞`.
    pub fn bottom(dim: usize) -> Self {
        Point::new(vec![ExtScalar::Bottom; dim]).expect("dimension must be positive")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExtScalar] {
        &self.coords
    }

    /// Coordinate `x_i` with the 1-based index used throughout the crate.
    pub fn coord(&self, index: usize) -> ExtScalar {
        self.coords[index - 1]
    }

    fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Coordinatewise maximum.
    pub fn oplus(&self, other: &Point) -> Result<Point> {
        self.check_dim(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.oplus(*b))
            .collect();
        Ok(Point { coords })
    }

    /// `λ ⊗ x`: adds `λ` to every coordinate.
    pub fn scale(&self, lambda: ExtScalar) -> Point {
        Point {
            coords: self.coords.iter().map(|c| lambda.otimes(*c)).collect(),
        }
    }

    /// Keeps the listed 1-based coordinates, in order.
    pub fn restrict(&self, indices: &[usize]) -> Result<Point> {
        Point::new(indices.iter().map(|&i| self.coord(i)).collect())
    }
}

impl Index<usize> for Point {
    type Output = ExtScalar;

    fn index(&self, index: usize) -> &Self::Output {
        &self.coords[index]
    }
}

/// Free-function form of [`Point::oplus`].
pub fn oplus(x: &Point, y: &Point) -> Result<Point> {
    x.oplus(y)
}

/// Free-function form of [`Point::scale`].
pub fn scale(lambda: ExtScalar, x: &Point) -> Point {
    x.scale(lambda)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Point {
    type Err = ParseError;

    /// Parses `1,-inf,3/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(ParseError::Point(s.to_string()));
        }
        let coords = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<ExtScalar>, _>>()?;
        Ok(Point { coords })
    }
}
