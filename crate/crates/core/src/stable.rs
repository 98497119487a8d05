//! Stabilisation calculus on canonical classes.
//!
//! `S+` and `S-` act on canonical forms, lowering `tb` by one and moving `r`
//! by one. Stable equivalence questions reduce to comparing canonical forms
//! after adding the same stabilisations to both curves. The quotient by `S-`
//! is graded by `sl = tb - r`.

use crate::classes::{KnotType, LegendrianClass, Presentation};
use crate::contact::{ContactStructure, Sign};
use crate::error::{Error, Result};
use crate::lattice::Direction;

impl KnotType {
    pub fn stabilize(&self, c: &LegendrianClass, sign: Sign) -> LegendrianClass {
        let s = sign.as_i64();
        match *c {
            LegendrianClass::NonVertical { max_tb, tb, r } => LegendrianClass::NonVertical {
                max_tb,
                tb: tb - 1,
                r: r + s,
            },
            LegendrianClass::VerticalMax { component } => LegendrianClass::VerticalPure {
                sign,
                region: self.horizontal().region_at(component, -sign),
                k: 1,
            },
            LegendrianClass::VerticalPure { sign: own, region, k } if own == sign => {
                LegendrianClass::VerticalPure { sign, region, k: k + 1 }
            }
            LegendrianClass::VerticalPure { sign: own, k, .. } => LegendrianClass::VerticalMixed {
                tb: -i64::from(k) - 1,
                r: own.as_i64() * (i64::from(k) - 1),
            },
            // |r| <= |tb| - 2 by parity, so the result stays strictly inside
            // the cone.
            LegendrianClass::VerticalMixed { tb, r } => LegendrianClass::VerticalMixed { tb: tb - 1, r: r + s },
        }
    }

    /// All `(parent, sign)` with `stabilize(parent, sign) == c`, sorted.
    pub fn destabilize_parents(&self, c: &LegendrianClass) -> Vec<(LegendrianClass, Sign)> {
        let (tb, r) = (c.tb(), c.r());
        let mut parents: Vec<_> = Sign::BOTH
            .into_iter()
            .flat_map(|sign| {
                self.classes_at(tb + 1, r - sign.as_i64())
                    .into_iter()
                    .filter(move |parent| self.stabilize(parent, sign) == *c)
                    .map(move |parent| (parent, sign))
            })
            .collect();
        parents.sort();
        parents
    }

    /// Number of `S-` orbits among classes with `tb - r = sl`.
    pub fn negative_stable_class_count(&self, sl: i64) -> u64 {
        if self.is_vertical() {
            match sl {
                0 => u64::from(self.contact_structure().n()),
                s if s < 0 && s % 2 == 0 => 1,
                _ => 0,
            }
        } else {
            let t = self.tb_max();
            u64::from(sl <= t && (t - sl) % 2 == 0)
        }
    }

    /// False iff some `sl` level carries two or more `S-` orbits, which
    /// happens exactly for horizontal directions with `n > 1`.
    pub fn is_transversally_simple(&self) -> bool {
        !(self.is_vertical() && self.contact_structure().n() > 1)
    }
}

/// Two presentations of one knot type plus stabilisations applied to both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StableQuery {
    pub pres1: Presentation,
    pub pres2: Presentation,
    pub extra_p: u32,
    pub extra_m: u32,
}

pub fn stabilize(kt: &KnotType, c: &LegendrianClass, sign: Sign) -> LegendrianClass {
    kt.stabilize(c, sign)
}

pub fn destabilize_parents(kt: &KnotType, c: &LegendrianClass) -> Vec<(LegendrianClass, Sign)> {
    kt.destabilize_parents(c)
}

fn shared_knot_type(a: &Presentation, b: &Presentation) -> Result<KnotType> {
    if a.cs != b.cs || a.direction != b.direction {
        return Err(Error::NotSmoothlyIsotopic);
    }
    Ok(a.knot_type())
}

pub fn becomes_isotopic_after(q: &StableQuery) -> Result<bool> {
    let kt = shared_knot_type(&q.pres1, &q.pres2)?;
    kt.is_isotopic(
        &q.pres1.stabilized(q.extra_p, q.extra_m),
        &q.pres2.stabilized(q.extra_p, q.extra_m),
    )
}

fn first_merge(
    a: &Presentation,
    b: &Presentation,
    candidates: impl IntoIterator<Item = (u32, u32)>,
) -> Result<Option<(u32, u32)>> {
    let kt = shared_knot_type(a, b)?;
    let (ca, cb) = (kt.canonicalize(a)?, kt.canonicalize(b)?);
    if (ca.tb(), ca.r()) != (cb.tb(), cb.r()) {
        return Ok(None);
    }
    for (p, m) in candidates {
        if kt.is_isotopic(&a.stabilized(p, m), &b.stabilized(p, m))? {
            return Ok(Some((p, m)));
        }
    }
    Ok(None)
}

/// Smallest extra `(p, m)` in the order `(p + m, p)` after which the two
/// curves become isotopic. `None` iff their invariants differ.
pub fn minimal_mixed_merge(a: &Presentation, b: &Presentation) -> Result<Option<(u32, u32)>> {
    // One stabilisation of each sign always lands in the mixed cone.
    let candidates = (0..=2u32).flat_map(|total| (0..=total).map(move |p| (p, total - p)));
    first_merge(a, b, candidates)
}

/// Like [`minimal_mixed_merge`] but only tries `(0, k)` and `(k, 0)` with
/// `k <= bound`.
pub fn minimal_same_sign_merge(a: &Presentation, b: &Presentation, bound: u32) -> Result<Option<(u32, u32)>> {
    let candidates = std::iter::once((0, 0)).chain((1..=bound).flat_map(|k| [(0, k), (k, 0)]));
    first_merge(a, b, candidates)
}

pub fn negative_stable_class_count(cs: ContactStructure, d: &Direction, sl: i64) -> u64 {
    KnotType::new(cs, *d).negative_stable_class_count(sl)
}

pub fn is_transversally_simple(cs: ContactStructure, d: &Direction) -> bool {
    KnotType::new(cs, *d).is_transversally_simple()
}
