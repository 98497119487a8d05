//! Legendrian isotopy classes of linear curves and the decision procedure.
//!
//! Every Legendrian linear curve is a multiple stabilisation of a curve
//! realising the maximal Thurston-Bennequin number, so a curve is presented
//! as `S+^p S-^m` applied to a maximal base. For `c3 != 0` there is a single
//! maximal class and `(tb, r)` is a complete invariant. For horizontal
//! directions the maximal classes are indexed by the `2n` dividing curves of
//! the horizontal torus, and pure stabilisations only merge bases that bound
//! a common region of the opposite sign.

use serde::{Deserialize, Serialize};

use crate::contact::{tb_max, Component, ContactStructure, HorizontalDividingStructure, Region, Sign};
use crate::error::{Error, Result};
use crate::lattice::{normalize_horizontal_knot_type, Direction, KnotTypeKind, UnimodularMatrix3};

/// Canonical form of a Legendrian isotopy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LegendrianClass {
    /// `c3 != 0`: determined by `(tb, r)`; `max_tb = -n|c3|`.
    NonVertical { max_tb: i64, tb: i64, r: i64 },
    /// `tb = 0`, `r = 0`, one class per dividing curve.
    VerticalMax { component: Component },
    /// `k` stabilisations of one sign; `region` has the opposite sign and is
    /// bounded by the two merged dividing curves. `tb = -k`, `r = sign * k`.
    VerticalPure { sign: Sign, region: Region, k: u32 },
    /// `|r| < |tb|`: a single class per invariant pair.
    VerticalMixed { tb: i64, r: i64 },
}

impl LegendrianClass {
    pub fn tb(&self) -> i64 {
        match *self {
            LegendrianClass::NonVertical { tb, .. } | LegendrianClass::VerticalMixed { tb, .. } => tb,
            LegendrianClass::VerticalMax { .. } => 0,
            LegendrianClass::VerticalPure { k, .. } => -i64::from(k),
        }
    }

    pub fn r(&self) -> i64 {
        match *self {
            LegendrianClass::NonVertical { r, .. } | LegendrianClass::VerticalMixed { r, .. } => r,
            LegendrianClass::VerticalMax { .. } => 0,
            LegendrianClass::VerticalPure { sign, k, .. } => sign.as_i64() * i64::from(k),
        }
    }

    /// `tb - r`, unchanged by negative stabilisation.
    pub fn sl(&self) -> i64 {
        self.tb() - self.r()
    }

    /// Image under the relabelling `i -> i + 1 (mod len)` of the horizontal
    /// dividing curves, which swaps the sign of every region. Rotation
    /// numbers change sign.
    pub fn sign_flipped(&self, len: usize) -> LegendrianClass {
        match *self {
            LegendrianClass::NonVertical { max_tb, tb, r } => LegendrianClass::NonVertical { max_tb, tb, r: -r },
            LegendrianClass::VerticalMax { component } => LegendrianClass::VerticalMax {
                component: Component((component.0 + 1) % len),
            },
            LegendrianClass::VerticalPure { sign, region, k } => LegendrianClass::VerticalPure {
                sign: -sign,
                region: Region((region.0 + 1) % len),
                k,
            },
            LegendrianClass::VerticalMixed { tb, r } => LegendrianClass::VerticalMixed { tb, r: -r },
        }
    }
}

/// A curve given as `S+^p S-^m` of a maximal base curve.
///
/// `base` names a dividing curve of the horizontal torus and is required
/// exactly when the knot type is horizontal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub cs: ContactStructure,
    pub direction: Direction,
    pub base: Option<Component>,
    pub p: u32,
    pub m: u32,
}

impl Presentation {
    pub fn new(cs: ContactStructure, direction: Direction, base: Option<usize>, p: u32, m: u32) -> Self {
        Presentation {
            cs,
            direction,
            base: base.map(Component),
            p,
            m,
        }
    }

    pub fn knot_type(&self) -> KnotType {
        KnotType::new(self.cs, self.direction)
    }

    /// Apply `extra_p` more positive and `extra_m` more negative stabilisations.
    pub fn stabilized(&self, extra_p: u32, extra_m: u32) -> Presentation {
        Presentation {
            p: self.p + extra_p,
            m: self.m + extra_m,
            ..*self
        }
    }

    /// Relabel `gamma_i -> gamma_{i+1}` and swap the stabilisation signs.
    pub fn sign_flipped(&self) -> Presentation {
        let len = 2 * self.cs.n() as usize;
        Presentation {
            base: self.base.map(|b| Component((b.0 + 1) % len)),
            p: self.m,
            m: self.p,
            ..*self
        }
    }
}

/// One row of a mountain range table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeEntry {
    pub tb: i64,
    pub r: i64,
    pub count: u64,
}

/// A knot type `L_n(d)` together with the data the classification needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotType {
    cs: ContactStructure,
    direction: Direction,
    tb_max: i64,
    /// Present iff the direction is horizontal; sends it to `(1, 0, 0)`.
    normalizer: Option<UnimodularMatrix3>,
}

impl KnotType {
    pub fn new(cs: ContactStructure, direction: Direction) -> Self {
        let normalizer = direction
            .is_horizontal()
            .then(|| normalize_horizontal_knot_type(&direction).expect("horizontal primitive direction"));
        KnotType {
            cs,
            direction,
            tb_max: tb_max(cs, &direction),
            normalizer,
        }
    }

    pub fn contact_structure(&self) -> ContactStructure {
        self.cs
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn kind(&self) -> KnotTypeKind {
        self.direction.kind()
    }

    pub fn is_vertical(&self) -> bool {
        self.normalizer.is_some()
    }

    pub fn normalizer(&self) -> Option<&UnimodularMatrix3> {
        self.normalizer.as_ref()
    }

    pub fn tb_max(&self) -> i64 {
        self.tb_max
    }

    pub fn horizontal(&self) -> HorizontalDividingStructure {
        self.cs.horizontal_structure()
    }

    /// Number of maximal classes: `2n` for vertical types, 1 otherwise.
    pub fn base_count(&self) -> usize {
        if self.is_vertical() {
            self.horizontal().len()
        } else {
            1
        }
    }

    pub fn presentation(&self, base: Option<usize>, p: u32, m: u32) -> Presentation {
        Presentation::new(self.cs, self.direction, base, p, m)
    }

    fn check_same_type(&self, pres: &Presentation) -> Result<()> {
        if pres.cs == self.cs && pres.direction == self.direction {
            Ok(())
        } else {
            Err(Error::NotSmoothlyIsotopic)
        }
    }

    pub fn canonicalize(&self, pres: &Presentation) -> Result<LegendrianClass> {
        self.check_same_type(pres)?;
        let (p, m) = (pres.p, pres.m);
        if !self.is_vertical() {
            if pres.base.is_some() {
                return Err(Error::MalformedPresentation("base given for a non-vertical knot type"));
            }
            return Ok(LegendrianClass::NonVertical {
                max_tb: self.tb_max,
                tb: self.tb_max - i64::from(p) - i64::from(m),
                r: i64::from(p) - i64::from(m),
            });
        }
        let h = self.horizontal();
        let base = pres.base.ok_or(Error::MalformedPresentation(
            "vertical knot type needs a base dividing curve",
        ))?;
        let base = h.check_component(base)?;
        Ok(match (p, m) {
            (0, 0) => LegendrianClass::VerticalMax { component: base },
            (k, 0) => LegendrianClass::VerticalPure {
                sign: Sign::Plus,
                region: h.region_at(base, Sign::Minus),
                k,
            },
            (0, k) => LegendrianClass::VerticalPure {
                sign: Sign::Minus,
                region: h.region_at(base, Sign::Plus),
                k,
            },
            (p, m) => LegendrianClass::VerticalMixed {
                tb: -i64::from(p) - i64::from(m),
                r: i64::from(p) - i64::from(m),
            },
        })
    }

    pub fn is_isotopic(&self, a: &Presentation, b: &Presentation) -> Result<bool> {
        Ok(self.canonicalize(a)? == self.canonicalize(b)?)
    }

    pub fn is_realizable(&self, tb: i64, r: i64) -> bool {
        let depth = self.tb_max - tb;
        depth >= 0 && r.abs() <= depth && (depth - r).rem_euclid(2) == 0
    }

    pub fn count_classes(&self, tb: i64, r: i64) -> u64 {
        if !self.is_realizable(tb, r) {
            return 0;
        }
        if !self.is_vertical() {
            return 1;
        }
        let n = u64::from(self.cs.n());
        if tb == 0 {
            2 * n
        } else if r.abs() == tb.abs() {
            n
        } else {
            1
        }
    }

    /// Every canonical class with invariants `(tb, r)`, in sorted order.
    pub fn classes_at(&self, tb: i64, r: i64) -> Vec<LegendrianClass> {
        if !self.is_realizable(tb, r) {
            return Vec::new();
        }
        if !self.is_vertical() {
            return vec![LegendrianClass::NonVertical {
                max_tb: self.tb_max,
                tb,
                r,
            }];
        }
        let h = self.horizontal();
        if tb == 0 {
            return h
                .components()
                .map(|component| LegendrianClass::VerticalMax { component })
                .collect();
        }
        if r.abs() == tb.abs() {
            let sign = if r > 0 { Sign::Plus } else { Sign::Minus };
            let k = u32::try_from(r.unsigned_abs()).expect("stabilisation count fits in u32");
            return h
                .regions()
                .filter(|&(_, s)| s == -sign)
                .map(|(region, _)| LegendrianClass::VerticalPure { sign, region, k })
                .collect();
        }
        vec![LegendrianClass::VerticalMixed { tb, r }]
    }

    /// Whether `c` is a well-formed class of this knot type.
    pub fn is_valid_class(&self, c: &LegendrianClass) -> bool {
        let h = self.horizontal();
        match *c {
            LegendrianClass::NonVertical { max_tb, tb, r } => {
                !self.is_vertical() && max_tb == self.tb_max && self.is_realizable(tb, r)
            }
            LegendrianClass::VerticalMax { component } => self.is_vertical() && component.0 < h.len(),
            LegendrianClass::VerticalPure { sign, region, k } => {
                self.is_vertical() && k > 0 && region.0 < h.len() && h.region_sign(region) == -sign
            }
            LegendrianClass::VerticalMixed { tb, r } => {
                self.is_vertical() && tb < 0 && r.abs() < tb.abs() && (tb - r).rem_euclid(2) == 0
            }
        }
    }

    /// Rows `(tb, r, count)` with `count > 0` and `tb_min <= tb <= tb_max`,
    /// ordered by decreasing `tb` then increasing `r`.
    pub fn enumerate_range(&self, tb_min: i64) -> Result<Vec<RangeEntry>> {
        if tb_min > self.tb_max {
            return Err(Error::EmptyRange {
                tb_min,
                tb_max: self.tb_max,
            });
        }
        let mut rows = Vec::new();
        for tb in (tb_min..=self.tb_max).rev() {
            let span = self.tb_max - tb;
            for r in -span..=span {
                let count = self.count_classes(tb, r);
                if count > 0 {
                    rows.push(RangeEntry { tb, r, count });
                }
            }
        }
        Ok(rows)
    }
}

pub fn canonicalize(pres: &Presentation) -> Result<LegendrianClass> {
    pres.knot_type().canonicalize(pres)
}

pub fn is_isotopic(a: &Presentation, b: &Presentation) -> Result<bool> {
    a.knot_type().is_isotopic(a, b)
}

pub fn is_realizable(cs: ContactStructure, d: &Direction, tb: i64, r: i64) -> bool {
    KnotType::new(cs, *d).is_realizable(tb, r)
}

pub fn count_classes(cs: ContactStructure, d: &Direction, tb: i64, r: i64) -> u64 {
    KnotType::new(cs, *d).count_classes(tb, r)
}

pub fn enumerate_range(cs: ContactStructure, d: &Direction, tb_min: i64) -> Result<Vec<RangeEntry>> {
    KnotType::new(cs, *d).enumerate_range(tb_min)
}
