//! Integer lattice arithmetic on `H_1(T^3; Z) = Z^3`.
//!
//! Directions of linear curves are primitive integer vectors. Horizontal
//! directions `(c1, c2, 0)` are moved to `(1, 0, 0)` by a unimodular matrix
//! that fixes the third coordinate.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Non-negative gcd, with `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// True iff `v` is non-zero and the gcd of its entries is 1.
pub fn is_primitive(v: [i64; 3]) -> bool {
    gcd(gcd(v[0], v[1]), v[2]) == 1
}

/// Primitive direction vector of a linear knot type `K(c1, c2, c3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct Direction([i64; 3]);

impl Direction {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Result<Self> {
        Self::try_from([c1, c2, c3])
    }

    pub fn components(&self) -> [i64; 3] {
        self.0
    }

    pub fn c3(&self) -> i64 {
        self.0[2]
    }

    pub fn is_horizontal(&self) -> bool {
        self.0[2] == 0
    }

    pub fn kind(&self) -> KnotTypeKind {
        match self.0[2].unsigned_abs() {
            0 => KnotTypeKind::Vertical,
            c3_abs => KnotTypeKind::NonVertical { c3_abs },
        }
    }
}

impl TryFrom<[i64; 3]> for Direction {
    type Error = Error;

    fn try_from(v: [i64; 3]) -> Result<Self> {
        if is_primitive(v) {
            Ok(Direction(v))
        } else {
            Err(Error::NotPrimitive)
        }
    }
}

impl From<Direction> for [i64; 3] {
    fn from(d: Direction) -> Self {
        d.0
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Which half of the classification a knot type falls under.
///
/// Horizontal directions (`c3 = 0`) are all equivalent to the vertical
/// type `K(1,0,0)`; everything else is governed by `|c3|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnotTypeKind {
    Vertical,
    NonVertical { c3_abs: u64 },
}

/// Classify a raw integer vector, rejecting non-primitive input.
pub fn knot_type_kind(v: [i64; 3]) -> Result<KnotTypeKind> {
    Direction::try_from(v).map(|d| d.kind())
}

pub type Matrix2 = [[i64; 2]; 2];

pub fn det2(m: &Matrix2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Unimodular `M` with `M (a, b)^T = (1, 0)^T`.
///
/// The second row is forced to be `(-b, a)`. The first row is a Bezout pair
/// `(x, y)` with `x a + y b = 1`, chosen to minimise `|x|` (ties go to
/// `x >= 0`), and then `|y|` when `b = 0` leaves `y` free.
pub fn extend_to_sl2(a: i64, b: i64) -> Result<Matrix2> {
    let eg = a.extended_gcd(&b);
    if eg.gcd.abs() != 1 {
        return Err(Error::NotPrimitive);
    }
    let (x, y) = if b == 0 {
        // a = +-1, so x = a and y is free.
        (a, 0)
    } else {
        let x0 = eg.x * eg.gcd;
        let modulus = b.abs();
        let low = x0.rem_euclid(modulus);
        let high = low - modulus;
        let x = if high.abs() < low { high } else { low };
        (x, (1 - a * x) / b)
    };
    let m = [[x, y], [-b, a]];
    debug_assert_eq!(det2(&m), 1);
    Ok(m)
}

/// Integer 3x3 matrix with determinant exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix3([[i64; 3]; 3]);

impl UnimodularMatrix3 {
    pub fn identity() -> Self {
        UnimodularMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Returns `None` unless the determinant is 1.
    pub fn new(entries: [[i64; 3]; 3]) -> Option<Self> {
        (det3(&entries) == 1).then_some(UnimodularMatrix3(entries))
    }

    /// Block matrix `M (+) 1`.
    pub fn from_block(m: &Matrix2) -> Option<Self> {
        Self::new([[m[0][0], m[0][1], 0], [m[1][0], m[1][1], 0], [0, 0, 1]])
    }

    pub fn entries(&self) -> &[[i64; 3]; 3] {
        &self.0
    }

    pub fn determinant(&self) -> i64 {
        det3(&self.0)
    }

    pub fn apply(&self, v: [i64; 3]) -> [i64; 3] {
        let m = &self.0;
        [0, 1, 2].map(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
    }
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Matrix `A = M (+) 1` in `SL(3, Z)` sending a horizontal direction to
/// `(1, 0, 0)`.
pub fn normalize_horizontal_knot_type(d: &Direction) -> Result<UnimodularMatrix3> {
    let [c1, c2, c3] = d.components();
    if c3 != 0 {
        return Err(Error::NotHorizontal);
    }
    let m = extend_to_sl2(c1, c2)?;
    let a = UnimodularMatrix3::from_block(&m).expect("block of an SL(2,Z) matrix");
    debug_assert_eq!(a.apply(d.components()), [1, 0, 0]);
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitivity() {
        assert!(is_primitive([1, 0, 0]));
        assert!(!is_primitive([2, 4, 6]));
        assert!(is_primitive([6, 10, 15]));
        assert!(!is_primitive([0, 0, 0]));
        assert!(is_primitive([0, 0, -1]));
    }

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(0, -3), 3);
    }

    #[test]
    fn sl2_small_cases() {
        assert_eq!(extend_to_sl2(1, 0).unwrap(), [[1, 0], [0, 1]]);
        assert_eq!(extend_to_sl2(0, 1).unwrap(), [[0, 1], [-1, 0]]);
        assert_eq!(extend_to_sl2(-1, 0).unwrap(), [[-1, 0], [0, -1]]);
        let m = extend_to_sl2(3, 5).unwrap();
        assert_eq!(det2(&m), 1);
        assert_eq!(m[0][0] * 3 + m[0][1] * 5, 1);
        assert_eq!(m[1][0] * 3 + m[1][1] * 5, 0);
        assert_eq!(m, [[2, -1], [-5, 3]]);
        // |b| = 2 is the only tie: x = 1 wins over x = -1.
        assert_eq!(extend_to_sl2(3, 2).unwrap()[0], [1, -1]);
        assert_eq!(extend_to_sl2(4, 6), Err(Error::NotPrimitive));
        assert_eq!(extend_to_sl2(0, 0), Err(Error::NotPrimitive));
    }

    #[test]
    fn horizontal_normalization() {
        let id = normalize_horizontal_knot_type(&Direction::new(1, 0, 0).unwrap()).unwrap();
        assert_eq!(id, UnimodularMatrix3::identity());
        let rot = normalize_horizontal_knot_type(&Direction::new(0, 1, 0).unwrap()).unwrap();
        assert_eq!(rot.entries(), &[[0, 1, 0], [-1, 0, 0], [0, 0, 1]]);
        let a = normalize_horizontal_knot_type(&Direction::new(3, 5, 0).unwrap()).unwrap();
        assert_eq!(a.apply([3, 5, 0]), [1, 0, 0]);
        assert_eq!(a.determinant(), 1);
        assert_eq!(
            normalize_horizontal_knot_type(&Direction::new(0, 1, 1).unwrap()),
            Err(Error::NotHorizontal)
        );
    }

    #[test]
    fn kinds() {
        assert_eq!(knot_type_kind([1, 0, 0]), Ok(KnotTypeKind::Vertical));
        assert_eq!(knot_type_kind([0, 1, 1]), Ok(KnotTypeKind::NonVertical { c3_abs: 1 }));
        assert_eq!(knot_type_kind([1, 2, -4]), Ok(KnotTypeKind::NonVertical { c3_abs: 4 }));
        assert_eq!(knot_type_kind([2, 0, 2]), Err(Error::NotPrimitive));
    }

    #[test]
    fn sl2_exhaustive_small_box() {
        for a in -50i64..=50 {
            for b in -50i64..=50 {
                match extend_to_sl2(a, b) {
                    Ok(m) => {
                        assert_eq!(det2(&m), 1);
                        assert_eq!([m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b], [1, 0]);
                    }
                    Err(_) => assert_ne!(gcd(a, b), 1, "({a},{b})"),
                }
            }
        }
    }

    #[test]
    fn primitivity_agrees_with_gcd_fold() {
        for x in -20i64..=20 {
            for y in -20i64..=20 {
                for z in -20i64..=20 {
                    let g = [x, y, z].iter().fold(0u64, |acc, &c| {
                        let (mut p, mut q) = (acc, c.unsigned_abs());
                        while q != 0 {
                            (p, q) = (q, p % q);
                        }
                        p
                    });
                    assert_eq!(is_primitive([x, y, z]), g == 1);
                }
            }
        }
    }
}
