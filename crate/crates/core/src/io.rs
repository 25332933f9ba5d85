//! Text forms of a polyomino.
//!
//! File form: one `x y` pair per line, `#` comments and blank lines ignored.
//! Inline form: `x,y;x,y;...` with no whitespace.

use crate::error::{Error, Result};
use crate::grid::{normalize, Cell, Polyomino};

fn parse_int(s: &str, line: usize) -> Result<i32> {
    s.parse::<i32>().map_err(|_| Error::Parse { line, message: format!("invalid integer {s:?}") })
}

pub fn parse_cells_file(text: &str) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let Some((x, y)) = raw.split_once(' ') else {
            return Err(Error::Parse { line, message: format!("expected \"x y\", got {raw:?}") });
        };
        cells.push(Cell::new(parse_int(x, line)?, parse_int(y, line)?));
    }
    Ok(cells)
}

/// Parse the inline form. Errors report the 1-based index of the offending pair as `line`.
pub fn parse_cells_inline(text: &str) -> Result<Vec<Cell>> {
    text.split(';')
        .enumerate()
        .map(|(i, pair)| {
            let Some((x, y)) = pair.split_once(',') else {
                return Err(Error::Parse { line: i + 1, message: format!("expected \"x,y\", got {pair:?}") });
            };
            Ok(Cell::new(parse_int(x, i + 1)?, parse_int(y, i + 1)?))
        })
        .collect()
}

/// Parse a file and attribute connectivity and duplicate errors to the line that triggers them.
pub fn polyomino_from_file(text: &str) -> Result<Polyomino> {
    let cells = parse_cells_file(text)?;
    normalize(&cells).map_err(|e| match e {
        Error::DuplicateCell(c) => {
            let line = locate(text, c, 2).unwrap_or(0);
            Error::Parse { line, message: format!("duplicate cell ({}, {})", c.x, c.y) }
        }
        Error::NotConnected => {
            let line = first_disconnecting_line(text).unwrap_or(0);
            Error::Parse { line, message: "cells are not 4-connected".into() }
        }
        Error::EmptyInput => Error::Parse { line: 0, message: "no cells".into() },
        other => other,
    })
}

pub fn polyomino_from_inline(text: &str) -> Result<Polyomino> {
    normalize(&parse_cells_inline(text)?)
}

pub fn format_cells_file(p: &Polyomino) -> String {
    p.cells().iter().map(|c| format!("{} {}\n", c.x, c.y)).collect()
}

pub fn format_cells_inline(p: &Polyomino) -> String {
    p.cells().iter().map(|c| format!("{},{}", c.x, c.y)).collect::<Vec<_>>().join(";")
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Cell)> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let (x, y) = raw.split_once(' ')?;
        Some((i + 1, Cell::new(x.parse().ok()?, y.parse().ok()?)))
    })
}

/// Line of the `nth` occurrence of `cell`.
fn locate(text: &str, cell: Cell, nth: usize) -> Option<usize> {
    data_lines(text).filter(|(_, c)| *c == cell).nth(nth - 1).map(|(l, _)| l)
}

/// First line whose cell leaves the prefix read so far disconnected from all later cells.
fn first_disconnecting_line(text: &str) -> Option<usize> {
    let all: Vec<(usize, Cell)> = data_lines(text).collect();
    let cells: Vec<Cell> = all.iter().map(|(_, c)| *c).collect();
    // component of the first cell
    let set: std::collections::HashSet<Cell> = cells.iter().copied().collect();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![*cells.first()?];
    seen.insert(cells[0]);
    while let Some(c) = stack.pop() {
        for nb in c.neighbors() {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    all.iter().find(|(_, c)| !seen.contains(c)).map(|(l, _)| *l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_roundtrip() {
        let p = polyomino_from_inline("0,0;1,0;0,1").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(format_cells_inline(&p), "0,0;1,0;0,1");
        assert_eq!(polyomino_from_inline(&format_cells_inline(&p)).unwrap(), p);
    }

    #[test]
    fn file_form() {
        let text = "# an El\n0 0\n\n1 0\n0 1\n";
        let p = polyomino_from_file(text).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(polyomino_from_file(&format_cells_file(&p)).unwrap(), p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            polyomino_from_file("0 0\n1 0\nx 2\n").unwrap_err(),
            Error::Parse { line: 3, message: "invalid integer \"x\"".into() }
        );
        assert!(matches!(polyomino_from_file("0 0\n0,1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(polyomino_from_file("0 0\n1 0\n5 5\n2 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(polyomino_from_file("0 0\n1 0\n0 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(polyomino_from_inline("0,0;1 0"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(polyomino_from_inline("0,0;2,0").unwrap_err(), Error::NotConnected);
    }
}
