//! Geometric structures that force a Helly number of at least 4, and explicit
//! witness families built from them.
//!
//! Every constructor is generate-and-verify: it lays out copies following the
//! geometric recipe, then runs the independent certificate checker in
//! [`crate::engine`] and refuses to return anything that fails.

use crate::certificate::{CertificateKind, WitnessCertificate};
use crate::engine::check_certificate;
use crate::error::{Error, Result};
use crate::grid::{Cell, Placement, Polyomino, Transform};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrantKind {
    Small,
    Big,
}

/// Where a copy `P' = p.image(transform)` exhibits an empty-quadrant structure.
/// Coordinates refer to the normalized image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadrantEvidence {
    pub kind: QuadrantKind,
    pub transform: Transform,
    pub x1: i32,
    pub y1: i32,
    pub x2: Option<i32>,
    pub y2: Option<i32>,
}

fn box_cells(corner: Cell) -> [Cell; 4] {
    [
        corner,
        Cell::new(corner.x + 1, corner.y),
        Cell::new(corner.x, corner.y + 1),
        Cell::new(corner.x + 1, corner.y + 1),
    ]
}

fn box_count(q: &Polyomino, corner: Cell) -> usize {
    box_cells(corner).iter().filter(|c| q.contains(**c)).count()
}

/// No cell of `q` with `x >= x_from` and `y > y1`.
fn quadrant_empty(q: &Polyomino, x_from: i32, y1: i32) -> bool {
    !q.cells().iter().any(|c| c.x >= x_from && c.y > y1)
}

/// A copy meeting `[x1, x1+1] x [y1-1, y1]` in at least 3 cells with nothing in
/// `{x >= x1, y > y1}`.
pub fn find_small_empty_quadrant(p: &Polyomino) -> Option<QuadrantEvidence> {
    Transform::all().find_map(|t| {
        let q = p.image(t);
        (1..q.height()).find_map(|y1| {
            (0..q.width() - 1).find_map(|x1| {
                (box_count(&q, Cell::new(x1, y1 - 1)) >= 3 && quadrant_empty(&q, x1, y1)).then_some(
                    QuadrantEvidence { kind: QuadrantKind::Small, transform: t, x1, y1, x2: None, y2: None },
                )
            })
        })
    })
}

/// A copy containing `(x1,y1)`, `(x1,y2)`, `(x2,y1)` with `x1 < x2`, `y1 < y2`
/// and nothing in `{x > x1, y > y1}`.
pub fn find_big_empty_quadrant(p: &Polyomino) -> Option<QuadrantEvidence> {
    Transform::all().find_map(|t| {
        let q = p.image(t);
        (0..q.height()).find_map(|y1| {
            (0..q.width()).find_map(|x1| {
                if !q.contains(Cell::new(x1, y1)) || !quadrant_empty(&q, x1 + 1, y1) {
                    return None;
                }
                let y2 = (y1 + 1..q.height()).find(|&y| q.contains(Cell::new(x1, y)))?;
                let x2 = (x1 + 1..q.width()).find(|&x| q.contains(Cell::new(x, y1)))?;
                Some(QuadrantEvidence { kind: QuadrantKind::Big, transform: t, x1, y1, x2: Some(x2), y2: Some(y2) })
            })
        })
    })
}

/// A 2x2 box `[x, x+1] x [y, y+1]` holding exactly three cells of some image.
/// Exists iff `p` is not a rectangle.
pub fn find_2x2_triple(p: &Polyomino) -> Option<(Transform, Cell)> {
    Transform::all().find_map(|t| {
        let q = p.image(t);
        (-1..q.height())
            .flat_map(|y| (-1..q.width()).map(move |x| Cell::new(x, y)))
            .find(|c| box_count(&q, *c) == 3)
            .map(|c| (t, c))
    })
}

fn self_verified(cert: WitnessCertificate) -> Result<WitnessCertificate> {
    check_certificate(&cert).map_err(|v| Error::ConstructionFailed(v.to_string()))?;
    Ok(cert)
}

/// Drop copies whose cell set repeats an earlier one.
fn distinct_copies(p: &Polyomino, copies: Vec<Placement>) -> Vec<Placement> {
    let mut seen = std::collections::HashSet::new();
    copies.into_iter().filter(|pl| seen.insert(p.apply(pl))).collect()
}

/// Four reflections of the evidence copy whose structure triples cover all
/// triples of the rectangle `{x1, x2} x {y1, y2}`.
pub fn witness_from_big_quadrant(p: &Polyomino, ev: &QuadrantEvidence) -> Result<WitnessCertificate> {
    let (Some(x2), Some(y2)) = (ev.x2, ev.y2) else {
        return Err(Error::ConstructionFailed("big-quadrant evidence without (x2, y2)".into()));
    };
    if ev.kind != QuadrantKind::Big {
        return Err(Error::ConstructionFailed("expected big-quadrant evidence".into()));
    }
    let (x1, y1) = (ev.x1, ev.y1);
    let q = p.image(ev.transform);
    if q.contains(Cell::new(x2, y2)) {
        return Err(Error::ConstructionFailed(format!("({x2}, {y2}) lies in the copy")));
    }
    let base = p.normalizing_placement(ev.transform);
    let mirror_x = Transform::from_parts(0, true);
    let mirror_y = Transform::from_parts(2, true);
    let copies = vec![
        base,
        base.then(mirror_x, x1 + x2, 0),
        base.then(mirror_y, 0, y1 + y2),
        base.then(Transform::ROTATE_180, x1 + x2, y1 + y2),
    ];
    self_verified(WitnessCertificate {
        polyomino: p.clone(),
        h: 4,
        kind: CertificateKind::CriticalFamily,
        copies,
    })
}

/// The four quarter-turn motions fixing the 2x2 box with lower-left `corner`.
fn box_rotations(corner: Cell) -> impl Iterator<Item = (Transform, i32, i32)> {
    Transform::rotations().map(move |r| {
        let img = box_cells(corner).map(|c| r.apply(c));
        let min_x = img.iter().map(|c| c.x).min().unwrap();
        let min_y = img.iter().map(|c| c.y).min().unwrap();
        (r, corner.x - min_x, corner.y - min_y)
    })
}

/// Rotations of the evidence copy around its 2x2 box; when the box is full,
/// four more rotations of a translate that puts a 3-cell box on it.
pub fn witness_from_small_quadrant(p: &Polyomino, ev: &QuadrantEvidence) -> Result<WitnessCertificate> {
    if p.is_rectangle() {
        return Err(Error::IsRectangle);
    }
    if ev.kind != QuadrantKind::Small {
        return Err(Error::ConstructionFailed("expected small-quadrant evidence".into()));
    }
    let q = p.image(ev.transform);
    let base = p.normalizing_placement(ev.transform);
    let target = Cell::new(ev.x1, ev.y1 - 1);
    let filled = box_count(&q, target);
    if filled < 3 {
        return Err(Error::ConstructionFailed(format!("box at ({}, {}) holds {filled} cells", target.x, target.y)));
    }

    let mut copies: Vec<Placement> = box_rotations(target).map(|(r, dx, dy)| base.then(r, dx, dy)).collect();
    let kind = if filled == 4 {
        let (t, r) = find_2x2_triple(&q).ok_or(Error::IsRectangle)?;
        debug_assert_eq!(t, Transform::IDENTITY);
        let shifted = base.then(Transform::IDENTITY, target.x - r.x, target.y - r.y);
        copies.extend(box_rotations(target).map(|(r, dx, dy)| shifted.then(r, dx, dy)));
        copies = distinct_copies(p, copies);
        CertificateKind::Witness
    } else {
        CertificateKind::CriticalFamily
    };
    self_verified(WitnessCertificate { polyomino: p.clone(), h: 4, kind, copies })
}

/// A verified 3-witness for any non-rectangle, preferring the big-quadrant
/// construction.
pub fn lower_bound_witness(p: &Polyomino) -> Result<WitnessCertificate> {
    if p.is_rectangle() {
        return Err(Error::IsRectangle);
    }
    if let Some(ev) = find_big_empty_quadrant(p) {
        if let Ok(cert) = witness_from_big_quadrant(p, &ev) {
            return Ok(cert);
        }
    }
    let ev = find_small_empty_quadrant(p)
        .ok_or_else(|| Error::ConstructionFailed("no empty-quadrant structure found".into()))?;
    witness_from_small_quadrant(p, &ev)
}

const MAX_Q: usize = 4096;

/// The bridge polyomino: `[-q/2, -1] x {0}`, `[1, q] x {0}` and `[-1, 1] x {1}`,
/// normalized. Has `floor(3q/2) + 3` cells.
pub fn make_fq(q: usize) -> Result<Polyomino> {
    if !(2..=MAX_Q).contains(&q) {
        return Err(Error::SizeOutOfRange { value: q, min: 2, max: MAX_Q });
    }
    let (half, q) = ((q / 2) as i32, q as i32);
    let cells = (-half..=-1)
        .chain(1..=q)
        .map(|x| Cell::new(x, 0))
        .chain((-1..=1).map(|x| Cell::new(x, 1)));
    Polyomino::new(cells)
}

/// `q + 1` copies of `F_q`: `ceil(q/2)` translates `A_i` and `floor(q/2) + 1`
/// half-turned translates `B_i`, each with its leftmost cell at `(i, 0)`.
pub fn fq_witness(q: usize) -> Result<WitnessCertificate> {
    if !(4..=MAX_Q).contains(&q) {
        return Err(Error::SizeOutOfRange { value: q, min: 4, max: MAX_Q });
    }
    let fq = make_fq(q)?;
    let span = (3 * q / 2) as i32;
    let a = (0..q.div_ceil(2) as i32).map(|i| Placement::new(Transform::IDENTITY, i, 0));
    let b = (0..=(q / 2) as i32).map(|i| Placement::new(Transform::ROTATE_180, span + i, 0));
    self_verified(WitnessCertificate {
        polyomino: fq,
        h: q + 1,
        kind: CertificateKind::CriticalFamily,
        copies: a.chain(b).collect(),
    })
}
