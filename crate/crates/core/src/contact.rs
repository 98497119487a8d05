//! Discrete data of `(T^3, xi_n)`: maximal Thurston-Bennequin numbers,
//! dividing sets of convex linear tori, and the cyclic dividing set of the
//! horizontal torus.

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{gcd, Direction};

/// The tight contact structure `xi_n`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct ContactStructure(u32);

impl ContactStructure {
    pub fn new(n: u32) -> Result<Self> {
        Self::try_from(n)
    }

    pub fn n(&self) -> u32 {
        self.0
    }

    pub fn horizontal_structure(&self) -> HorizontalDividingStructure {
        HorizontalDividingStructure { n: self.0 }
    }
}

impl TryFrom<u32> for ContactStructure {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidContactParameter)
        } else {
            Ok(ContactStructure(n))
        }
    }
}

impl From<ContactStructure> for u32 {
    fn from(cs: ContactStructure) -> u32 {
        cs.0
    }
}

/// Maximal Thurston-Bennequin invariant of `L_n(d)`: `-n |c3|`.
pub fn tb_max(cs: ContactStructure, d: &Direction) -> i64 {
    -(i64::from(cs.n()) * d.c3().abs())
}

/// Sign of a stabilisation, of a region, or of a rotation number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::MalformedPresentation("sign must be + or -")),
        }
    }
}

/// Two lattice vectors spanning a linear torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusSpan {
    b: [i64; 3],
    c: [i64; 3],
}

impl TorusSpan {
    /// Requires `(b, c)` to extend to a basis of `Z^3` (the 2x2 minors are
    /// jointly coprime) and the torus not to be horizontal.
    pub fn new(b: [i64; 3], c: [i64; 3]) -> Result<Self> {
        let minors = [
            b[1] * c[2] - b[2] * c[1],
            b[2] * c[0] - b[0] * c[2],
            b[0] * c[1] - b[1] * c[0],
        ];
        if gcd(gcd(minors[0], minors[1]), minors[2]) != 1 {
            return Err(Error::NotABasis);
        }
        if b[2] == 0 && c[2] == 0 {
            return Err(Error::HorizontalTorus);
        }
        Ok(TorusSpan { b, c })
    }

    pub fn vectors(&self) -> ([i64; 3], [i64; 3]) {
        (self.b, self.c)
    }
}

/// Extended rational stored as a reduced pair with `den >= 0`; infinity is
/// `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };

    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return (num != 0).then_some(Slope::INFINITY);
        }
        let g = gcd(num, den) * den.signum();
        Some(Slope {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Slope and number of dividing curves of a convex linear torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DividingSetProfile {
    pub slope: Slope,
    pub count: u64,
}

/// Dividing data of the convex torus spanned by `span`: slope `-b3/c3` and
/// `2n gcd(b3, c3)` curves.
pub fn dividing_profile(cs: ContactStructure, span: &TorusSpan) -> DividingSetProfile {
    let (b, c) = span.vectors();
    let slope = Slope::new(-b[2], c[2]).expect("span is not horizontal");
    let count = 2 * u64::from(cs.n()) * gcd(b[2], c[2]).unsigned_abs();
    DividingSetProfile { slope, count }
}

/// Index of a dividing curve `gamma_i` of the horizontal torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Component(pub usize);

/// Index of a region `R_i`, the annulus between `gamma_i` and `gamma_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Region(pub usize);

/// The `2n` parallel dividing curves of the horizontal torus, cyclically
/// ordered, with `R_i` positive iff `i` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HorizontalDividingStructure {
    n: u32,
}

impl HorizontalDividingStructure {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of curves, which equals the number of regions.
    pub fn len(&self) -> usize {
        2 * self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn components(&self) -> impl Iterator<Item = Component> {
        (0..self.len()).map(Component)
    }

    pub fn regions(&self) -> impl Iterator<Item = (Region, Sign)> + '_ {
        (0..self.len()).map(move |i| (Region(i), self.region_sign(Region(i))))
    }

    pub fn check_component(&self, c: Component) -> Result<Component> {
        if c.0 < self.len() {
            Ok(c)
        } else {
            Err(Error::IndexOutOfRange {
                index: c.0,
                count: self.len(),
            })
        }
    }

    pub fn region_sign(&self, r: Region) -> Sign {
        if r.0.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `[R_{i-1}, R_i]` for `gamma_i`.
    pub fn regions_of(&self, c: Component) -> [Region; 2] {
        let len = self.len();
        [Region((c.0 + len - 1) % len), Region(c.0 % len)]
    }

    /// `[gamma_i, gamma_{i+1}]` for `R_i`.
    pub fn components_of(&self, r: Region) -> [Component; 2] {
        [Component(r.0), Component((r.0 + 1) % self.len())]
    }

    /// The region of the given sign adjacent to `c`.
    pub fn region_at(&self, c: Component, sign: Sign) -> Region {
        let [before, after] = self.regions_of(c);
        if self.region_sign(before) == sign {
            before
        } else {
            after
        }
    }

    /// The other dividing curve bounding `region_at(c, sign)`.
    pub fn partner(&self, c: Component, sign: Sign) -> Component {
        let [a, b] = self.components_of(self.region_at(c, sign));
        if a == c {
            b
        } else {
            a
        }
    }

    /// Region of sign `sign` bounded by both `gamma_i` and `gamma_j`, if any.
    pub fn shared_region(&self, i: Component, j: Component, sign: Sign) -> Result<Option<Region>> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Ok(None);
        }
        let r = self.region_at(i, sign);
        Ok(self.components_of(r).contains(&j).then_some(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(n: u32) -> ContactStructure {
        ContactStructure::new(n).unwrap()
    }

    #[test]
    fn tb_max_values() {
        assert_eq!(tb_max(cs(1), &Direction::new(0, 0, 1).unwrap()), -1);
        assert_eq!(tb_max(cs(3), &Direction::new(1, 2, -2).unwrap()), -6);
        assert_eq!(tb_max(cs(2), &Direction::new(1, 0, 0).unwrap()), 0);
    }

    #[test]
    fn zero_n_rejected() {
        assert_eq!(ContactStructure::new(0), Err(Error::InvalidContactParameter));
    }

    #[test]
    fn profiles() {
        let p = dividing_profile(cs(1), &TorusSpan::new([0, 1, 0], [0, 0, 1]).unwrap());
        assert_eq!((p.slope.to_string(), p.count), ("0/1".into(), 2));
        let p = dividing_profile(cs(2), &TorusSpan::new([0, 0, 1], [0, 1, 0]).unwrap());
        assert_eq!((p.slope.to_string(), p.count), ("inf".into(), 4));
        let p = dividing_profile(cs(1), &TorusSpan::new([1, 0, 2], [0, 1, 3]).unwrap());
        assert_eq!((p.slope.to_string(), p.count), ("-2/3".into(), 2));
        let p = dividing_profile(cs(3), &TorusSpan::new([1, 0, 2], [0, 1, 4]).unwrap());
        assert_eq!((p.slope.to_string(), p.count), ("-1/2".into(), 12));
    }

    #[test]
    fn span_errors() {
        assert_eq!(TorusSpan::new([1, 0, 0], [0, 1, 0]), Err(Error::HorizontalTorus));
        assert_eq!(TorusSpan::new([2, 0, 0], [0, 1, 1]), Err(Error::NotABasis));
        assert_eq!(TorusSpan::new([0, 0, 1], [0, 0, 2]), Err(Error::NotABasis));
    }

    #[test]
    fn slope_normalisation() {
        assert_eq!(Slope::new(4, -6).unwrap().to_string(), "-2/3");
        assert_eq!(Slope::new(-3, 0), Some(Slope::INFINITY));
        assert_eq!(Slope::new(0, -5).unwrap().to_string(), "0/1");
        assert_eq!(Slope::new(0, 0), None);
    }

    #[test]
    fn horizontal_structure_shapes() {
        let h = cs(1).horizontal_structure();
        assert_eq!(h.len(), 2);
        assert_eq!(
            h.regions().collect::<Vec<_>>(),
            vec![(Region(0), Sign::Plus), (Region(1), Sign::Minus)]
        );
        let h = cs(2).horizontal_structure();
        let signs: Vec<_> = h.regions().map(|(_, s)| s).collect();
        assert_eq!(signs, [Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus]);
        assert_eq!(cs(3).horizontal_structure().components().count(), 6);
    }

    #[test]
    fn shared_regions() {
        let h = cs(1).horizontal_structure();
        assert_eq!(
            h.shared_region(Component(0), Component(1), Sign::Minus),
            Ok(Some(Region(1)))
        );
        assert_eq!(
            h.shared_region(Component(0), Component(1), Sign::Plus),
            Ok(Some(Region(0)))
        );
        assert_eq!(h.shared_region(Component(0), Component(0), Sign::Plus), Ok(None));
        let h = cs(2).horizontal_structure();
        assert_eq!(
            h.shared_region(Component(1), Component(2), Sign::Minus),
            Ok(Some(Region(1)))
        );
        assert_eq!(h.shared_region(Component(0), Component(1), Sign::Minus), Ok(None));
        assert_eq!(
            h.shared_region(Component(3), Component(0), Sign::Minus),
            Ok(Some(Region(3)))
        );
        assert_eq!(h.shared_region(Component(0), Component(2), Sign::Plus), Ok(None));
        assert!(matches!(
            h.shared_region(Component(4), Component(0), Sign::Plus),
            Err(Error::IndexOutOfRange { index: 4, count: 4 })
        ));
    }

    #[test]
    fn each_component_sees_both_signs() {
        for n in 1..=5 {
            let h = cs(n).horizontal_structure();
            for c in h.components() {
                let [a, b] = h.regions_of(c);
                assert_ne!(h.region_sign(a), h.region_sign(b));
                for s in Sign::BOTH {
                    let p = h.partner(c, s);
                    assert_ne!(p, c);
                    assert_eq!(h.partner(p, s), c);
                }
                for d in h.components() {
                    for s in Sign::BOTH {
                        assert_eq!(h.shared_region(c, d, s), h.shared_region(d, c, s));
                    }
                }
            }
        }
    }
}
