//! Brute-force verifier for the classification.
//!
//! Enumerates every stabilisation word of length at most `depth` over every
//! maximal base curve and closes the set under two local moves only:
//!
//! * adjacent letters of a word may be swapped (`S+` and `S-` commute);
//! * for a vertical type, a word starting with `S+` (`S-`) on a base curve
//!   equals the same word on the other dividing curve that bounds the
//!   adjacent negative (positive) region with it.
//!
//! Both moves are closed under appending letters, so their equivalence
//! closure is already a congruence for stabilisation. The closed-form class
//! counts are never consulted while building the quotient.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::classes::KnotType;
use crate::contact::{Component, ContactStructure, Sign};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lattice::Direction;

pub const DEFAULT_MAX_NODES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_nodes: u64,
    pub execution: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_nodes: DEFAULT_MAX_NODES,
            execution: Execution::default(),
        }
    }
}

/// A base curve with a stabilisation word, letters in order of application.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordNode {
    pub base: Option<Component>,
    pub word: Vec<Sign>,
}

impl WordNode {
    pub fn plus_count(&self) -> usize {
        self.word.iter().filter(|&&s| s == Sign::Plus).count()
    }
}

/// Packed word: bit `i` set iff letter `i` is `S+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Packed {
    base: usize,
    len: u32,
    bits: u64,
}

#[derive(Debug, Clone, Copy)]
struct Layout {
    bases: usize,
    depth: u32,
    block: usize,
}

impl Layout {
    fn new(bases: usize, depth: u32, max_nodes: u64) -> Result<Self> {
        let block = 1u128.checked_shl(depth + 1).map(|b| b - 1).unwrap_or(u128::MAX);
        let nodes = block.saturating_mul(bases as u128);
        if nodes > u128::from(max_nodes) {
            return Err(Error::ResourceBound {
                depth,
                nodes: u64::try_from(nodes).unwrap_or(u64::MAX),
                bound: max_nodes,
            });
        }
        Ok(Layout {
            bases,
            depth,
            block: block as usize,
        })
    }

    fn node_count(&self) -> usize {
        self.bases * self.block
    }

    fn index(&self, w: Packed) -> usize {
        w.base * self.block + ((1usize << w.len) - 1) + w.bits as usize
    }

    fn decode(&self, idx: usize) -> Packed {
        let base = idx / self.block;
        let offset = idx % self.block + 1;
        let len = usize::BITS - 1 - offset.leading_zeros();
        Packed {
            base,
            len,
            bits: (offset - (1usize << len)) as u64,
        }
    }
}

fn letter(w: Packed, i: u32) -> Sign {
    if w.bits >> i & 1 == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn plus_count(w: Packed) -> i64 {
    i64::from(w.bits.count_ones())
}

/// Stabilisation words modulo the local merge moves.
#[derive(Debug, Clone)]
pub struct Quotient {
    kt: KnotType,
    layout: Layout,
    class_of: Vec<usize>,
    class_invariants: Vec<(i64, i64)>,
    counts: BTreeMap<(i64, i64), u64>,
    negative_orbits: BTreeMap<i64, u64>,
    consistent: bool,
}

/// Build the quotient with default resource bound and execution mode.
pub fn build_quotient(cs: ContactStructure, d: &Direction, depth: u32) -> Result<Quotient> {
    build_quotient_with(cs, d, depth, &OracleConfig::default())
}

pub fn build_quotient_with(cs: ContactStructure, d: &Direction, depth: u32, config: &OracleConfig) -> Result<Quotient> {
    let kt = KnotType::new(cs, *d);
    let layout = Layout::new(kt.base_count(), depth, config.max_nodes)?;
    let h = kt.horizontal();
    let vertical = kt.is_vertical();

    let relations = config.execution.flat_map_range(0..layout.node_count(), |idx| {
        let w = layout.decode(idx);
        let mut out = Vec::new();
        for i in 0..w.len.saturating_sub(1) {
            if letter(w, i) != letter(w, i + 1) {
                let swapped = Packed {
                    bits: w.bits ^ (0b11 << i),
                    ..w
                };
                out.push((idx, layout.index(swapped)));
            }
        }
        if vertical && w.len > 0 {
            let first = letter(w, 0);
            let partner = h.partner(Component(w.base), -first);
            out.push((idx, layout.index(Packed { base: partner.0, ..w })));
        }
        out
    });

    let mut sets = DisjointSets::new(layout.node_count());
    for &(a, b) in &relations {
        sets.union(a, b);
    }

    let tb_max = kt.tb_max();
    let invariants = |w: Packed| {
        let p = plus_count(w);
        let m = i64::from(w.len) - p;
        (tb_max - p - m, p - m)
    };

    let (class_of, class_total) = sets.labels();
    let mut class_invariants: Vec<Option<(i64, i64)>> = vec![None; class_total];
    let mut consistent = true;
    for (idx, &c) in class_of.iter().enumerate() {
        let inv = invariants(layout.decode(idx));
        match class_invariants[c] {
            None => class_invariants[c] = Some(inv),
            Some(seen) => consistent &= seen == inv,
        }
    }
    let class_invariants: Vec<(i64, i64)> = class_invariants.into_iter().map(Option::unwrap).collect();
    let mut counts = BTreeMap::new();
    for &inv in &class_invariants {
        *counts.entry(inv).or_insert(0) += 1;
    }

    // Orbits of S-: join each word to itself followed by one more S-.
    let mut orbits = sets;
    for idx in 0..layout.node_count() {
        let w = layout.decode(idx);
        if w.len < layout.depth {
            orbits.union(idx, layout.index(Packed { len: w.len + 1, ..w }));
        }
    }
    let mut roots_by_sl: BTreeMap<i64, HashSet<usize>> = BTreeMap::new();
    for idx in 0..layout.node_count() {
        let (tb, r) = invariants(layout.decode(idx));
        roots_by_sl.entry(tb - r).or_default().insert(orbits.find(idx));
    }
    let negative_orbits = roots_by_sl
        .into_iter()
        .map(|(sl, roots)| (sl, roots.len() as u64))
        .collect();

    Ok(Quotient {
        kt,
        layout,
        class_of,
        class_invariants,
        counts,
        negative_orbits,
        consistent,
    })
}

impl Quotient {
    pub fn knot_type(&self) -> &KnotType {
        &self.kt
    }

    pub fn depth(&self) -> u32 {
        self.layout.depth
    }

    pub fn node_count(&self) -> usize {
        self.layout.node_count()
    }

    pub fn class_count(&self) -> usize {
        self.class_invariants.len()
    }

    /// True iff no class mixes words with different `(tb, r)`.
    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// Class label of a word, or `None` if it is not in the explored range.
    pub fn class_of(&self, node: &WordNode) -> Option<usize> {
        let base = match (node.base, self.kt.is_vertical()) {
            (Some(c), true) if c.0 < self.layout.bases => c.0,
            (None, false) => 0,
            _ => return None,
        };
        let len = u32::try_from(node.word.len())
            .ok()
            .filter(|&l| l <= self.layout.depth)?;
        let bits = node
            .word
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Plus)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        Some(self.class_of[self.layout.index(Packed { base, len, bits })])
    }

    /// `(tb, r)` of every class, indexed by class label.
    pub fn class_invariants(&self) -> &[(i64, i64)] {
        &self.class_invariants
    }

    pub fn lowest_tb(&self) -> i64 {
        self.kt.tb_max() - i64::from(self.layout.depth)
    }

    /// Number of classes with invariants `(tb, r)`.
    pub fn quotient_count(&self, tb: i64, r: i64) -> Result<u64> {
        if tb < self.lowest_tb() {
            return Err(Error::InsufficientDepth);
        }
        Ok(self.counts.get(&(tb, r)).copied().unwrap_or(0))
    }

    /// Lowest `sl` whose `S-` orbits are fully resolved at this depth.
    ///
    /// Words at level `sl = tb_max - 2p` need one letter beyond their `p`
    /// positive stabilisations for pure words to meet the mixed ones.
    pub fn lowest_resolved_sl(&self) -> i64 {
        self.kt.tb_max() - 2 * (i64::from(self.layout.depth) - 1)
    }

    /// Number of `S-` orbits among classes with `tb - r = sl`.
    pub fn negative_stable_count(&self, sl: i64) -> Result<u64> {
        if sl < self.lowest_resolved_sl() {
            return Err(Error::InsufficientDepth);
        }
        Ok(self.negative_orbits.get(&sl).copied().unwrap_or(0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountComparison {
    pub tb: i64,
    pub r: i64,
    pub oracle: u64,
    pub closed_form: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StableComparison {
    pub sl: i64,
    pub oracle: u64,
    pub closed_form: u64,
}

/// Oracle and closed-form counts side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: u32,
    pub direction: Direction,
    pub depth: u32,
    pub tb_max: i64,
    pub nodes: usize,
    pub classes: usize,
    pub consistent: bool,
    pub entries: Vec<CountComparison>,
    pub stable_entries: Vec<StableComparison>,
    pub mismatches: Vec<CountComparison>,
    pub stable_mismatches: Vec<StableComparison>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.consistent && self.mismatches.is_empty() && self.stable_mismatches.is_empty()
    }
}

pub fn verify_against_closed_form(cs: ContactStructure, d: &Direction, depth: u32) -> Result<VerificationReport> {
    verify_against_closed_form_with(cs, d, depth, &OracleConfig::default())
}

pub fn verify_against_closed_form_with(
    cs: ContactStructure,
    d: &Direction,
    depth: u32,
    config: &OracleConfig,
) -> Result<VerificationReport> {
    let q = build_quotient_with(cs, d, depth, config)?;
    let kt = *q.knot_type();
    let t = kt.tb_max();

    let grid: Vec<(i64, i64)> = (q.lowest_tb()..=t)
        .rev()
        .flat_map(|tb| (tb - t..=t - tb).map(move |r| (tb, r)))
        .collect();
    let entries: Vec<CountComparison> = config.execution.map_slice(&grid, |&(tb, r)| CountComparison {
        tb,
        r,
        oracle: q.quotient_count(tb, r).expect("grid within depth"),
        closed_form: kt.count_classes(tb, r),
    });
    let stable_entries: Vec<StableComparison> = (q.lowest_resolved_sl()..=t)
        .rev()
        .map(|sl| StableComparison {
            sl,
            oracle: q.negative_stable_count(sl).expect("sl within resolved range"),
            closed_form: kt.negative_stable_class_count(sl),
        })
        .collect();

    let mismatches = entries.iter().filter(|e| e.oracle != e.closed_form).copied().collect();
    let stable_mismatches = stable_entries
        .iter()
        .filter(|e| e.oracle != e.closed_form)
        .copied()
        .collect();
    Ok(VerificationReport {
        n: cs.n(),
        direction: *d,
        depth,
        tb_max: t,
        nodes: q.node_count(),
        classes: q.class_count(),
        consistent: q.is_consistent(),
        entries,
        stable_entries,
        mismatches,
        stable_mismatches,
    })
}
