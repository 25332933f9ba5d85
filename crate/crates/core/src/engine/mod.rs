//! Exact Helly numbers of polyominoes.
//!
//! `H(P) >= h` holds exactly when some family of `h` copies is *critical*:
//! empty common intersection, but dropping any one member leaves a non-empty
//! intersection. Such a family is an `(h-1)`-witness. Conversely, if
//! `H(P) = k` then a critical family of size `k` exists (take a smallest
//! `(k-1)`-witness; every proper subfamily intersects, and `k`-Hellyness forces
//! it to have exactly `k` members). So `H(P)` is the largest `h` for which a
//! critical family of `h` copies exists, and it is at most `|P| + 1` because
//! every edge has `|P|` cells.
//!
//! Applying one rigid motion to a whole family preserves criticality, so the
//! search fixes the first member to the identity copy (the *base*). Every
//! member of a critical family of size `h >= 3` then meets the base in at least
//! `h - 2` cells, which bounds the candidate universe.
//!
//! Inside the search, copies are reduced to two bitsets: the cells they share
//! with the base, and the cells they cover outside it. The common intersection
//! of the family lies inside the base, so it is empty iff the base masks AND to
//! zero. Dropping a non-base member must leave a base cell covered by all other
//! members; dropping the base must leave an outside cell covered by all others.
//! Copies with equal base masks are interchangeable except for that last test,
//! so they are grouped and their outside cells unioned.

pub mod hypergraph;
pub mod verify;

use std::collections::{HashMap, HashSet};

use crate::certificate::{CertificateKind, WitnessCertificate};
use crate::error::{Error, Result};
use crate::grid::{Cell, Placement, Polyomino, Transform};
use crate::structures::lower_bound_witness;

pub use hypergraph::Hypergraph;
pub use verify::{check_certificate, is_critical_family, verify_certificate, Violation, WitnessBounds};

/// Copies of `base` meeting it in at least `max(1, level - 2)` cells.
#[derive(Debug, Clone)]
pub struct CandidateUniverse {
    pub base: Polyomino,
    pub level: usize,
    pub copies: Vec<Placement>,
    pub cell_sets: Vec<Vec<Cell>>,
}

/// All copies overlapping `p` in at least `max(1, h - 2)` cells, one placement per
/// distinct cell set, ordered by `(transform, dy, dx)`.
pub fn candidate_copies(p: &Polyomino, h: usize) -> CandidateUniverse {
    let need = h.saturating_sub(2).max(1);
    let mut seen = HashSet::new();
    let mut copies = Vec::new();
    let mut cell_sets = Vec::new();
    for t in Transform::all() {
        let anchor = p.normalizing_placement(t);
        let img = p.image(t);
        for oy in -(img.height() - 1)..p.height() {
            for ox in -(img.width() - 1)..p.width() {
                let pl = Placement::new(t, anchor.dx + ox, anchor.dy + oy);
                let cells = p.apply(&pl);
                if p.overlap(&cells) >= need && seen.insert(cells.clone()) {
                    copies.push(pl);
                    cell_sets.push(cells);
                }
            }
        }
    }
    CandidateUniverse { base: p.clone(), level: h, copies, cell_sets }
}

struct Group {
    mask: u128,
    outside: Vec<u64>,
    members: Vec<usize>,
}

struct Search<'a> {
    groups: &'a [Group],
    target: usize,
    full: u128,
    and_stack: Vec<u128>,
    outside_stack: Vec<Vec<u64>>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Every chosen member still misses a base cell covered by all other chosen members.
    fn private_cells_ok(&self) -> bool {
        let masks: Vec<u128> = self.chosen.iter().map(|&g| self.groups[g].mask).collect();
        let k = masks.len();
        let mut suffix = vec![self.full; k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] & masks[i];
        }
        let mut prefix = self.full;
        for i in 0..k {
            if prefix & suffix[i + 1] & !masks[i] == 0 {
                return false;
            }
            prefix &= masks[i];
        }
        true
    }

    fn run(&mut self, start: usize) -> bool {
        let groups = self.groups;
        let depth = self.chosen.len();
        let acc = self.and_stack[depth];
        for (g, group) in groups.iter().enumerate().skip(start) {
            if groups.len() - g < self.target - depth {
                return false;
            }
            let next = acc & group.mask;
            let filled = depth + 1;
            if filled == self.target {
                if next != 0 {
                    continue;
                }
            } else if (next.count_ones() as usize) < self.target - filled {
                continue;
            }
            let (lower, upper) = self.outside_stack.split_at_mut(depth + 1);
            let out = &mut upper[0];
            let mut any = 0u64;
            for ((o, a), b) in out.iter_mut().zip(&lower[depth]).zip(&group.outside) {
                *o = a & b;
                any |= *o;
            }
            if any == 0 {
                continue;
            }
            self.chosen.push(g);
            if self.private_cells_ok() {
                if filled == self.target {
                    return true;
                }
                self.and_stack[filled] = next;
                if self.run(g + 1) {
                    return true;
                }
            }
            self.chosen.pop();
        }
        false
    }
}

/// A critical family of exactly `h` copies containing the identity copy, if
/// one exists. Existence certifies `H(p) >= h`; absence only says that no
/// critical family has this exact size.
pub fn find_critical_family(p: &Polyomino, h: usize) -> Result<Option<WitnessCertificate>> {
    let n = p.len();
    if h < 2 || h > n + 1 {
        return Err(Error::LevelOutOfRange { h, max: n + 1 });
    }
    if h == 2 {
        let apart = Placement::new(Transform::IDENTITY, p.width(), 0);
        return Ok(Some(finish(p, 2, vec![Placement::IDENTITY, apart])?));
    }
    if n > 128 {
        return Err(Error::TooLarge(n));
    }

    let universe = candidate_copies(p, h);
    let index: HashMap<Cell, usize> = p.cells().iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };

    let mut outside_index: HashMap<Cell, usize> = HashMap::new();
    let mut per_copy: Vec<(u128, Vec<usize>)> = Vec::with_capacity(universe.copies.len());
    for cells in &universe.cell_sets {
        let mut mask = 0u128;
        let mut out = Vec::new();
        for c in cells {
            match index.get(c) {
                Some(&i) => mask |= 1 << i,
                None => {
                    let next = outside_index.len();
                    out.push(*outside_index.entry(*c).or_insert(next));
                }
            }
        }
        per_copy.push((mask, out));
    }
    let words = outside_index.len().div_ceil(64).max(1);

    let mut groups: Vec<Group> = Vec::new();
    let mut by_mask: HashMap<u128, usize> = HashMap::new();
    for (ci, (mask, out)) in per_copy.iter().enumerate() {
        if *mask == full {
            continue;
        }
        let gi = *by_mask.entry(*mask).or_insert_with(|| {
            groups.push(Group { mask: *mask, outside: vec![0; words], members: Vec::new() });
            groups.len() - 1
        });
        let g = &mut groups[gi];
        g.members.push(ci);
        for &o in out {
            g.outside[o / 64] |= 1 << (o % 64);
        }
    }

    let target = h - 1;
    let mut search = Search {
        groups: &groups,
        target,
        full,
        and_stack: vec![full; target + 1],
        outside_stack: vec![vec![u64::MAX; words]; target + 1],
        chosen: Vec::with_capacity(target),
    };
    if !search.run(0) {
        return Ok(None);
    }

    // an outside cell common to one representative of every chosen group
    let common = &search.outside_stack[target];
    let (w, bits) = common.iter().enumerate().find(|(_, b)| **b != 0).expect("non-empty outside meet");
    let shared = w * 64 + bits.trailing_zeros() as usize;
    let mut copies = vec![Placement::IDENTITY];
    for &g in &search.chosen {
        let pick = groups[g]
            .members
            .iter()
            .copied()
            .find(|&ci| per_copy[ci].1.contains(&shared))
            .expect("group union covers the shared cell");
        copies.push(universe.copies[pick]);
    }
    Ok(Some(finish(p, h, copies)?))
}

fn finish(p: &Polyomino, h: usize, copies: Vec<Placement>) -> Result<WitnessCertificate> {
    let cert = WitnessCertificate { polyomino: p.clone(), h, kind: CertificateKind::CriticalFamily, copies };
    let sets = cert.cell_sets();
    if !is_critical_family(&sets, h) {
        return Err(Error::ConstructionFailed(format!("search produced a non-critical family at h={h}")));
    }
    Ok(cert)
}

/// Which argument settled the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shortcut {
    /// Rectangles have Helly number 2.
    Rectangle,
    /// No critical family of 5 or more copies exists, and an empty-quadrant
    /// construction supplies the lower bound 4.
    StructureLowerBound,
    /// The witness search found a critical family of size `H`.
    Search,
}

impl Shortcut {
    pub fn tag(self) -> &'static str {
        match self {
            Shortcut::Rectangle => "rectangle",
            Shortcut::StructureLowerBound => "structure-lower-bound",
            Shortcut::Search => "search",
        }
    }
}

#[derive(Debug, Clone)]
pub struct HellyResult {
    pub polyomino: Polyomino,
    pub helly_number: usize,
    pub certificate: WitnessCertificate,
    pub shortcut: Shortcut,
}

/// Exact Helly number of `p` with a critical-family certificate of size `H(p)`.
///
/// Non-rectangles have `H >= 4`, so levels `|p| + 1` down to 5 are searched
/// in turn and the first level admitting a critical family is the answer.
/// Every level above the answer is an exhaustive negative, so the scan stays
/// exact without assuming that existence at one level implies existence at
/// smaller levels.
pub fn helly_number(p: &Polyomino) -> Result<HellyResult> {
    if p.is_rectangle() {
        let certificate = find_critical_family(p, 2)?.expect("two disjoint copies");
        return Ok(HellyResult { polyomino: p.clone(), helly_number: 2, certificate, shortcut: Shortcut::Rectangle });
    }
    for h in (5..=p.len() + 1).rev() {
        if let Some(certificate) = find_critical_family(p, h)? {
            return Ok(HellyResult { polyomino: p.clone(), helly_number: h, certificate, shortcut: Shortcut::Search });
        }
    }
    let structural = lower_bound_witness(p)?;
    let certificate = if structural.copies.len() == 4 {
        structural
    } else {
        find_critical_family(p, 4)?
            .ok_or_else(|| Error::ConstructionFailed("3-witness exists but no critical family of 4".into()))?
    };
    Ok(HellyResult { polyomino: p.clone(), helly_number: 4, certificate, shortcut: Shortcut::StructureLowerBound })
}
