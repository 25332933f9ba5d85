//! Cells, polyominoes and the eight symmetries of the square.
//!
//! A [`Polyomino`] is always stored normalized (minimum x and y are zero) with
//! its cells sorted by `(y, x)`. Alongside the sorted sequence it keeps a packed
//! bit-grid over its bounding box so membership tests are O(1); the witness
//! search spends most of its time counting overlaps between copies.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn neighbors(self) -> [Cell; 4] {
        [
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x, self.y - 1),
        ]
    }

    fn offset(self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }
}

// Row-major: y first, then x.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::new(x, y)
    }
}

/// One of the eight symmetries of the square.
///
/// The index is `r + 4 * f`: when `f = 1` the cell is first reflected across
/// the vertical axis, `(x, y) -> (-x, y)`, then rotated `r` quarter turns
/// counterclockwise, `(x, y) -> (-y, x)` per turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transform(u8);

impl Transform {
    pub const IDENTITY: Transform = Transform(0);
    pub const ROTATE_180: Transform = Transform(2);

    pub fn new(index: u8) -> Option<Self> {
        (index < 8).then_some(Transform(index))
    }

    pub fn from_parts(rotation: u8, reflect: bool) -> Self {
        Transform(rotation % 4 + if reflect { 4 } else { 0 })
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn rotation(self) -> u8 {
        self.0 % 4
    }

    pub fn is_reflected(self) -> bool {
        self.0 >= 4
    }

    pub fn all() -> impl Iterator<Item = Transform> + Clone {
        (0..8).map(Transform)
    }

    pub fn rotations() -> impl Iterator<Item = Transform> + Clone {
        (0..4).map(Transform)
    }

    pub fn apply(self, cell: Cell) -> Cell {
        let Cell { mut x, mut y } = cell;
        if self.is_reflected() {
            x = -x;
        }
        for _ in 0..self.rotation() {
            (x, y) = (-y, x);
        }
        Cell::new(x, y)
    }

    fn matrix(self) -> [i32; 4] {
        let a = self.apply(Cell::new(1, 0));
        let b = self.apply(Cell::new(0, 1));
        [a.x, a.y, b.x, b.y]
    }

    /// The transform equal to applying `self` and then `next`.
    pub fn then(self, next: Transform) -> Transform {
        let a = next.apply(self.apply(Cell::new(1, 0)));
        let b = next.apply(self.apply(Cell::new(0, 1)));
        let target = [a.x, a.y, b.x, b.y];
        Transform::all()
            .find(|t| t.matrix() == target)
            .expect("dihedral group is closed under composition")
    }

    pub fn inverse(self) -> Transform {
        Transform::all()
            .find(|t| self.then(*t) == Transform::IDENTITY)
            .expect("every symmetry has an inverse")
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A symmetry followed by an integer translation; identifies one copy of a
/// polyomino.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub transform: Transform,
    pub dx: i32,
    pub dy: i32,
}

impl Placement {
    pub const IDENTITY: Placement = Placement { transform: Transform::IDENTITY, dx: 0, dy: 0 };

    pub fn new(transform: Transform, dx: i32, dy: i32) -> Self {
        Placement { transform, dx, dy }
    }

    pub fn apply_cell(&self, cell: Cell) -> Cell {
        self.transform.apply(cell).offset(self.dx, self.dy)
    }

    /// This placement followed by the rigid motion `c -> t(c) + (dx, dy)`.
    pub fn then(self, t: Transform, dx: i32, dy: i32) -> Placement {
        let d = t.apply(Cell::new(self.dx, self.dy));
        Placement::new(self.transform.then(t), d.x + dx, d.y + dy)
    }
}

/// Packed membership bitmap over a `width x height` box anchored at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitGrid {
    width: i32,
    height: i32,
    words: Vec<u64>,
}

impl BitGrid {
    fn from_cells(width: i32, height: i32, cells: &[Cell]) -> Self {
        let bits = (width as usize) * (height as usize);
        let mut words = vec![0u64; bits.div_ceil(64)];
        for c in cells {
            let i = (c.y * width + c.x) as usize;
            words[i / 64] |= 1 << (i % 64);
        }
        BitGrid { width, height, words }
    }

    #[inline]
    pub fn contains(&self, cell: Cell) -> bool {
        if cell.x < 0 || cell.y < 0 || cell.x >= self.width || cell.y >= self.height {
            return false;
        }
        let i = (cell.y * self.width + cell.x) as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
}

/// A finite 4-connected set of cells, normalized so its minimum x and y are 0.
#[derive(Clone)]
pub struct Polyomino {
    cells: Vec<Cell>,
    width: i32,
    height: i32,
    grid: BitGrid,
}

/// Translate `cells` so that min x = min y = 0 and check the polyomino invariants.
pub fn normalize(cells: &[Cell]) -> Result<Polyomino> {
    if cells.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = cells.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateCell(w[0]));
    }
    if !is_connected(&sorted)? {
        return Err(Error::NotConnected);
    }
    Ok(Polyomino::from_sorted_unchecked(sorted))
}

/// Whether `cells` induce a connected subgraph of the 4-neighbour grid.
pub fn is_connected(cells: &[Cell]) -> Result<bool> {
    let Some(&start) = cells.first() else {
        return Err(Error::EmptyInput);
    };
    let set: HashSet<Cell> = cells.iter().copied().collect();
    let mut seen = HashSet::with_capacity(set.len());
    let mut queue = VecDeque::from([start]);
    seen.insert(start);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if set.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    Ok(seen.len() == set.len())
}

fn translate_to_origin(cells: &mut [Cell]) {
    let min_x = cells.iter().map(|c| c.x).min().unwrap_or(0);
    let min_y = cells.iter().map(|c| c.y).min().unwrap_or(0);
    for c in cells.iter_mut() {
        *c = c.offset(-min_x, -min_y);
    }
}

impl Polyomino {
    pub fn new<I, C>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        let cells: Vec<Cell> = cells.into_iter().map(Into::into).collect();
        normalize(&cells)
    }

    /// `cells` must be distinct, connected and sorted; they are translated to the origin.
    fn from_sorted_unchecked(mut cells: Vec<Cell>) -> Self {
        translate_to_origin(&mut cells);
        let width = cells.iter().map(|c| c.x).max().unwrap_or(0) + 1;
        let height = cells.iter().map(|c| c.y).max().unwrap_or(0) + 1;
        let grid = BitGrid::from_cells(width, height, &cells);
        Polyomino { cells, width, height, grid }
    }

    /// Axis-aligned `width x height` rectangle.
    pub fn rectangle(width: i32, height: i32) -> Result<Self> {
        if width < 1 || height < 1 {
            return Err(Error::EmptyInput);
        }
        let cells = (0..height).flat_map(|y| (0..width).map(move |x| Cell::new(x, y))).collect();
        Ok(Polyomino::from_sorted_unchecked(cells))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn grid(&self) -> &BitGrid {
        &self.grid
    }

    #[inline]
    pub fn contains(&self, cell: Cell) -> bool {
        self.grid.contains(cell)
    }

    /// Number of `cells` that belong to this polyomino.
    pub fn overlap(&self, cells: &[Cell]) -> usize {
        cells.iter().filter(|c| self.grid.contains(**c)).count()
    }

    /// The cell set of the copy identified by `placement`, sorted by `(y, x)`.
    pub fn apply(&self, placement: &Placement) -> Vec<Cell> {
        let mut out: Vec<Cell> = self.cells.iter().map(|c| placement.apply_cell(*c)).collect();
        out.sort_unstable();
        out
    }

    /// Normalized image under `t`.
    pub fn image(&self, t: Transform) -> Polyomino {
        let mut cells: Vec<Cell> = self.cells.iter().map(|c| t.apply(*c)).collect();
        cells.sort_unstable();
        Polyomino::from_sorted_unchecked(cells)
    }

    /// Placement whose image of `self` sends the transformed bounding box to the origin.
    pub fn normalizing_placement(&self, t: Transform) -> Placement {
        let moved: Vec<Cell> = self.cells.iter().map(|c| t.apply(*c)).collect();
        let min_x = moved.iter().map(|c| c.x).min().unwrap_or(0);
        let min_y = moved.iter().map(|c| c.y).min().unwrap_or(0);
        Placement::new(t, -min_x, -min_y)
    }

    /// Lexicographically smallest normalized image over the eight symmetries.
    pub fn canonical(&self) -> Polyomino {
        Transform::all()
            .map(|t| self.image(t))
            .min_by(|a, b| a.cells.cmp(&b.cells))
            .expect("eight transforms")
    }

    pub fn is_canonical(&self) -> bool {
        Transform::all().skip(1).all(|t| {
            let mut cells: Vec<Cell> = self.cells.iter().map(|c| t.apply(*c)).collect();
            cells.sort_unstable();
            translate_to_origin(&mut cells);
            self.cells <= cells
        })
    }

    /// A placement mapping `self` exactly onto `target`, if `target` is a copy.
    pub fn placement_onto(&self, target: &[Cell]) -> Option<Placement> {
        if target.len() != self.len() {
            return None;
        }
        let mut wanted = target.to_vec();
        wanted.sort_unstable();
        let min_x = wanted.iter().map(|c| c.x).min()?;
        let min_y = wanted.iter().map(|c| c.y).min()?;
        Transform::all().find_map(|t| {
            let base = self.normalizing_placement(t);
            let pl = Placement::new(t, base.dx + min_x, base.dy + min_y);
            (self.apply(&pl) == wanted).then_some(pl)
        })
    }

    /// True iff the polyomino fills its bounding box.
    pub fn is_rectangle(&self) -> bool {
        self.len() == (self.width as usize) * (self.height as usize)
    }

    /// True iff every lattice point of the convex hull of the cells is a cell.
    pub fn is_convex_lattice(&self) -> bool {
        let hull = convex_hull(&self.cells);
        (0..self.height)
            .flat_map(|y| (0..self.width).map(move |x| Cell::new(x, y)))
            .filter(|c| !self.contains(*c))
            .all(|c| !hull_contains(&hull, c))
    }

    /// Rows from top to bottom, `#` for cells and `.` for empty positions.
    pub fn render_ascii(&self) -> String {
        let mut out = String::with_capacity(((self.width + 1) * self.height) as usize);
        for y in (0..self.height).rev() {
            for x in 0..self.width {
                out.push(if self.contains(Cell::new(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Polyomino {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Polyomino {}

impl std::hash::Hash for Polyomino {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl Ord for Polyomino {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells.cmp(&other.cells)
    }
}

impl PartialOrd for Polyomino {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cells.iter().map(|c| (c.x, c.y))).finish()
    }
}

fn cross(o: Cell, a: Cell, b: Cell) -> i64 {
    let (ox, oy) = (o.x as i64, o.y as i64);
    (a.x as i64 - ox) * (b.y as i64 - oy) - (a.y as i64 - oy) * (b.x as i64 - ox)
}

/// Counterclockwise hull without collinear vertices (monotone chain).
fn convex_hull(cells: &[Cell]) -> Vec<Cell> {
    let mut pts = cells.to_vec();
    pts.sort_unstable_by_key(|c| (c.x, c.y));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Cell> = Vec::with_capacity(pts.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Cell>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn hull_contains(hull: &[Cell], p: Cell) -> bool {
    match hull {
        [] => false,
        [a] => *a == p,
        [a, b] => on_segment(*a, *b, p),
        _ => (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], p) >= 0),
    }
}

fn on_segment(a: Cell, b: Cell, p: Cell) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(v: &[(i32, i32)]) -> Vec<Cell> {
        v.iter().map(|&c| c.into()).collect()
    }

    fn poly(v: &[(i32, i32)]) -> Polyomino {
        Polyomino::new(v.iter().copied()).unwrap()
    }

    const EL: [(i32, i32); 3] = [(0, 0), (1, 0), (0, 1)];

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&cells(&[(5, 7)])).unwrap().cells(), cells(&[(0, 0)]));
        assert_eq!(normalize(&cells(&[(1, 1), (2, 1), (1, 2)])).unwrap().cells(), cells(&EL));
        assert_eq!(normalize(&cells(&[(0, 0), (2, 0)])).unwrap_err(), Error::NotConnected);
        assert_eq!(normalize(&[]).unwrap_err(), Error::EmptyInput);
        assert_eq!(
            normalize(&cells(&[(0, 0), (0, 0)])).unwrap_err(),
            Error::DuplicateCell(Cell::new(0, 0))
        );
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&cells(&EL)).unwrap());
        assert!(!is_connected(&cells(&[(0, 0), (1, 1)])).unwrap());
        assert!(is_connected(&cells(&[(0, 0)])).unwrap());
        assert_eq!(is_connected(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn apply_examples() {
        let domino = poly(&[(0, 0), (1, 0)]);
        let t = |i| Transform::new(i).unwrap();
        assert_eq!(domino.apply(&Placement::new(t(0), 3, 0)), cells(&[(3, 0), (4, 0)]));
        assert_eq!(domino.apply(&Placement::new(t(1), 0, 0)), cells(&[(0, 0), (0, 1)]));
        let mut want = cells(&[(1, 1), (0, 1), (1, 0)]);
        want.sort();
        assert_eq!(poly(&EL).apply(&Placement::new(t(2), 1, 1)), want);
    }

    #[test]
    fn transform_encoding() {
        let t5 = Transform::from_parts(1, true);
        assert_eq!(t5.index(), 5);
        // reflect (1,0) -> (-1,0), then rotate -> (0,-1)
        assert_eq!(t5.apply(Cell::new(1, 0)), Cell::new(0, -1));
        for a in Transform::all() {
            assert_eq!(a.then(a.inverse()), Transform::IDENTITY);
            for b in Transform::all() {
                let c = Cell::new(3, -7);
                assert_eq!(b.apply(a.apply(c)), a.then(b).apply(c));
            }
        }
    }

    #[test]
    fn placement_composition() {
        let p = poly(&[(0, 0), (1, 0), (2, 0), (2, 1)]);
        for a in Transform::all() {
            for b in Transform::all() {
                let first = Placement::new(a, 2, -3);
                let composed = first.then(b, -1, 4);
                let by_hand: Vec<Cell> = {
                    let mut v: Vec<Cell> =
                        p.apply(&first).into_iter().map(|c| b.apply(c).offset(-1, 4)).collect();
                    v.sort();
                    v
                };
                assert_eq!(p.apply(&composed), by_hand);
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let h = poly(&[(0, 0), (1, 0)]);
        let v = poly(&[(0, 0), (0, 1)]);
        assert_eq!(h.canonical(), v.canonical());
        let el = poly(&EL);
        let forms: HashSet<_> = Transform::all().map(|t| el.image(t).canonical()).collect();
        assert_eq!(forms.len(), 1);
        let c = el.canonical();
        assert_eq!(c.canonical(), c);
        assert!(c.is_canonical());
    }

    #[test]
    fn rectangle_and_convexity() {
        assert!(Polyomino::rectangle(2, 3).unwrap().is_rectangle());
        assert!(!poly(&EL).is_rectangle());
        assert!(poly(&[(0, 0)]).is_rectangle());

        assert!(poly(&EL).is_convex_lattice());
        assert!(!poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]).is_convex_lattice());
        assert!(Polyomino::rectangle(4, 1).unwrap().is_convex_lattice());
        assert!(Polyomino::rectangle(3, 5).unwrap().is_convex_lattice());
        // staircase: hull contains no missing lattice point
        assert!(poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]).is_convex_lattice());
        // L-tetromino: the missing (1,1) and (1,2) lie outside the hull triangle
        assert!(poly(&[(0, 0), (1, 0), (0, 1), (0, 2)]).is_convex_lattice());
        // S-tetromino: the hull is a parallelogram missing both empty corners
        assert!(poly(&[(0, 0), (1, 0), (1, 1), (2, 1)]).is_convex_lattice());
        // plus shape misses the four corners of its 3x3 box, all outside the diamond hull
        assert!(poly(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]).is_convex_lattice());
        // U-heptomino: (1,0) and (1,1) sit inside the hull
        assert!(!poly(&[(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0)]).is_convex_lattice());
    }

    #[test]
    fn ascii() {
        assert_eq!(poly(&[(0, 0)]).render_ascii(), "#\n");
        assert_eq!(poly(&[(0, 0), (1, 0)]).render_ascii(), "##\n");
        assert_eq!(poly(&EL).render_ascii(), "#.\n##\n");
    }

    #[test]
    fn placement_onto_recovers_copies() {
        let p = poly(&[(0, 0), (1, 0), (2, 0), (1, 1), (1, 2)]);
        for t in Transform::all() {
            let pl = Placement::new(t, -4, 9);
            let target = p.apply(&pl);
            let found = p.placement_onto(&target).unwrap();
            assert_eq!(p.apply(&found), target);
        }
        assert!(p.placement_onto(&cells(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)])).is_none());
    }
}
