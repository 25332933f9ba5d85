//! Redelmeier enumeration of fixed polyominoes and the free-class filter.
//!
//! Growth starts from the origin and only admits cells with `y > 0`, or
//! `y == 0 && x >= 0`, so every fixed polyomino is produced exactly once with
//! its lowest-leftmost cell at the origin. The untried set is copied per depth,
//! which keeps memory at O(n^2) for the active branch.

use crate::error::{Error, Result};
use crate::grid::{Cell, Polyomino};

pub const MAX_ENUMERATION_SIZE: usize = 16;

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange { value: n, min: 1, max: MAX_ENUMERATION_SIZE })
    }
}

struct Frame {
    untried: Vec<Cell>,
    marked: Vec<Cell>,
    placed: bool,
}

/// Depth-first cursor over all fixed polyominoes with `min_size..=max_size` cells.
pub struct EnumerationCursor {
    min_size: usize,
    max_size: usize,
    stack: Vec<Frame>,
    current: Vec<Cell>,
    marks: Vec<bool>,
}

impl EnumerationCursor {
    pub fn new(max_size: usize) -> Result<Self> {
        Self::with_sizes(1, max_size)
    }

    pub fn with_sizes(min_size: usize, max_size: usize) -> Result<Self> {
        check_size(max_size)?;
        check_size(min_size.max(1))?;
        let side = 2 * max_size;
        let origin = Cell::new(0, 0);
        let mut cursor = EnumerationCursor {
            min_size: min_size.max(1),
            max_size,
            stack: Vec::with_capacity(max_size),
            current: Vec::with_capacity(max_size),
            marks: vec![false; side * max_size],
        };
        cursor.set_mark(origin, true);
        cursor.stack.push(Frame { untried: vec![origin], marked: vec![origin], placed: false });
        Ok(cursor)
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    fn allowed(&self, c: Cell) -> bool {
        let n = self.max_size as i32;
        (c.y > 0 || (c.y == 0 && c.x >= 0)) && c.y < n && c.x.abs() < n
    }

    fn mark_index(&self, c: Cell) -> usize {
        let side = 2 * self.max_size;
        c.y as usize * side + (c.x + self.max_size as i32) as usize
    }

    fn is_marked(&self, c: Cell) -> bool {
        self.marks[self.mark_index(c)]
    }

    fn set_mark(&mut self, c: Cell, v: bool) {
        let i = self.mark_index(c);
        self.marks[i] = v;
    }
}

impl Iterator for EnumerationCursor {
    type Item = Polyomino;

    fn next(&mut self) -> Option<Polyomino> {
        loop {
            let frame = self.stack.last_mut()?;
            if frame.placed {
                self.current.pop();
                frame.placed = false;
            }
            let Some(cell) = frame.untried.pop() else {
                let done = self.stack.pop().expect("non-empty stack");
                for c in done.marked {
                    self.set_mark(c, false);
                }
                continue;
            };
            frame.placed = true;
            self.current.push(cell);

            let size = self.current.len();
            if size < self.max_size {
                let mut untried = frame.untried.clone();
                let mut marked = Vec::with_capacity(4);
                for nb in cell.neighbors() {
                    if self.allowed(nb) && !self.is_marked(nb) {
                        self.set_mark(nb, true);
                        untried.push(nb);
                        marked.push(nb);
                    }
                }
                self.stack.push(Frame { untried, marked, placed: false });
            }
            if size >= self.min_size {
                return Some(Polyomino::new(self.current.iter().copied()).expect("grown polyomino is valid"));
            }
        }
    }
}

/// Every fixed polyomino with exactly `n` cells, each once, in growth order.
pub fn enumerate_fixed(n: usize) -> Result<EnumerationCursor> {
    EnumerationCursor::with_sizes(n, n)
}

/// One canonical representative per free polyomino with `n` cells.
pub fn enumerate_free(n: usize) -> Result<impl Iterator<Item = Polyomino>> {
    Ok(enumerate_fixed(n)?.filter(Polyomino::is_canonical))
}

/// `(n, number of free polyominoes of size n)` for `n` in `1..=max_n`.
pub fn count_by_size(max_n: usize) -> Result<Vec<(usize, usize)>> {
    check_size(max_n)?;
    let mut counts = vec![0usize; max_n + 1];
    for p in EnumerationCursor::new(max_n)?.filter(Polyomino::is_canonical) {
        counts[p.len()] += 1;
    }
    Ok((1..=max_n).map(|n| (n, counts[n])).collect())
}
