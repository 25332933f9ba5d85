//! Certificate checking from first principles: recompute every copy's cells
//! and test the intersection pattern directly.

use std::fmt;

use crate::certificate::{CertificateKind, WitnessCertificate};
use crate::grid::Cell;

/// Intersection of sorted cell sets. The empty family yields an empty set.
pub fn intersect_all<'a, I>(sets: I) -> Vec<Cell>
where
    I: IntoIterator<Item = &'a [Cell]>,
{
    let mut iter = sets.into_iter();
    let Some(first) = iter.next() else {
        return Vec::new();
    };
    let mut acc = first.to_vec();
    for s in iter {
        acc = intersect(&acc, s);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

pub fn intersect(a: &[Cell], b: &[Cell]) -> Vec<Cell> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `copies` has exactly `h` members, empty total intersection, and every
/// family obtained by dropping one member intersects.
pub fn is_critical_family(copies: &[Vec<Cell>], h: usize) -> bool {
    if copies.is_empty() || copies.len() != h {
        return false;
    }
    if !intersect_all(copies.iter().map(Vec::as_slice)).is_empty() {
        return false;
    }
    (0..copies.len()).all(|skip| {
        let rest = copies.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, s)| s.as_slice());
        // dropping the only member leaves the empty family, which we treat as intersecting
        copies.len() == 1 || !intersect_all(rest).is_empty()
    })
}

/// First `size`-subfamily (indices ascending) with empty intersection, if any.
pub fn find_disjoint_subfamily(sets: &[Vec<Cell>], size: usize) -> Option<Vec<usize>> {
    fn go(sets: &[Vec<Cell>], size: usize, start: usize, acc: &[Cell], chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            return false;
        }
        for i in start..sets.len() {
            if sets.len() - i < size - chosen.len() {
                break;
            }
            let next = if chosen.is_empty() { sets[i].clone() } else { intersect(acc, &sets[i]) };
            chosen.push(i);
            if next.is_empty() || go(sets, size, i + 1, &next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if size == 0 || size > sets.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(size);
    go(sets, size, 0, &[], &mut chosen).then_some(chosen)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    LevelTooSmall(usize),
    TooFewCopies { copies: usize, h: usize },
    NotExactlyH { copies: usize, h: usize },
    DuplicateCopy(usize, usize),
    CommonCell(Cell),
    DisjointSubfamily(Vec<usize>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LevelTooSmall(h) => write!(f, "h={h} is below 2"),
            Violation::TooFewCopies { copies, h } => write!(f, "{copies} copies is fewer than h={h}"),
            Violation::NotExactlyH { copies, h } => {
                write!(f, "critical-family has {copies} copies but h={h}")
            }
            Violation::DuplicateCopy(i, j) => write!(f, "copies {i} and {j} cover the same cells"),
            Violation::CommonCell(c) => write!(f, "all copies share cell ({}, {})", c.x, c.y),
            Violation::DisjointSubfamily(idx) => {
                let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "copies {{{}}} have empty intersection", list.join(", "))
            }
        }
    }
}

/// Check that `cert` is an `(h-1)`-witness: total intersection empty, every
/// `h - 1` copies intersect. `critical-family` certificates must also have
/// exactly `h` copies.
pub fn check_certificate(cert: &WitnessCertificate) -> Result<(), Violation> {
    let h = cert.h;
    if h < 2 {
        return Err(Violation::LevelTooSmall(h));
    }
    let m = cert.copies.len();
    if m < h {
        return Err(Violation::TooFewCopies { copies: m, h });
    }
    if cert.kind == CertificateKind::CriticalFamily && m != h {
        return Err(Violation::NotExactlyH { copies: m, h });
    }
    let sets = cert.cell_sets();
    for i in 0..m {
        for j in i + 1..m {
            if sets[i] == sets[j] {
                return Err(Violation::DuplicateCopy(i, j));
            }
        }
    }
    if let Some(&c) = intersect_all(sets.iter().map(Vec::as_slice)).first() {
        return Err(Violation::CommonCell(c));
    }
    if let Some(idx) = find_disjoint_subfamily(&sets, h - 1) {
        return Err(Violation::DisjointSubfamily(idx));
    }
    Ok(())
}

pub fn verify_certificate(cert: &WitnessCertificate) -> bool {
    check_certificate(cert).is_ok()
}

/// Size bounds every `(h-1)`-witness must satisfy: at least `h` members, each
/// of at least `h - 1` cells, pairwise overlaps of at least `h - 2` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessBounds {
    pub copies: usize,
    pub min_copy_size: usize,
    pub min_pair_overlap: usize,
}

impl WitnessBounds {
    pub fn of(cert: &WitnessCertificate) -> Self {
        let sets = cert.cell_sets();
        let mut min_pair_overlap = usize::MAX;
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                min_pair_overlap = min_pair_overlap.min(intersect(&sets[i], &sets[j]).len());
            }
        }
        WitnessBounds {
            copies: sets.len(),
            min_copy_size: sets.iter().map(Vec::len).min().unwrap_or(0),
            min_pair_overlap,
        }
    }

    pub fn hold_for(&self, h: usize) -> bool {
        self.copies >= h && self.min_copy_size + 1 >= h && self.min_pair_overlap + 2 >= h
    }
}
