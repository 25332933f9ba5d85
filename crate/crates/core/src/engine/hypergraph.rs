//! Finite hypergraphs over cells: restriction, heavy-cover restriction and a
//! brute-force Helly number used as an oracle for the polyomino engine.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::grid::Cell;

/// Edge count up to which the oracle enumerates every subfamily.
pub const EXHAUSTIVE_MAX_EDGES: usize = 20;
const EXHAUSTIVE_MAX_GROUND: usize = 64;
/// Limits of the bounded search used above [`EXHAUSTIVE_MAX_EDGES`].
pub const BOUNDED_MAX_EDGES: usize = 512;
pub const BOUNDED_MAX_GROUND: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: Vec<Cell>,
    edges: Vec<Vec<Cell>>,
}

fn collapse(edges: impl IntoIterator<Item = Vec<Cell>>) -> Vec<Vec<Cell>> {
    let mut seen = HashSet::new();
    edges
        .into_iter()
        .map(|mut e| {
            e.sort_unstable();
            e.dedup();
            e
        })
        .filter(|e| seen.insert(e.clone()))
        .collect()
}

impl Hypergraph {
    pub fn new(ground: impl IntoIterator<Item = Cell>, edges: impl IntoIterator<Item = Vec<Cell>>) -> Result<Self> {
        let ground: BTreeSet<Cell> = ground.into_iter().collect();
        let edges = collapse(edges);
        if edges.iter().flatten().any(|c| !ground.contains(c)) {
            return Err(Error::NotASubset);
        }
        Ok(Hypergraph { ground: ground.into_iter().collect(), edges })
    }

    /// Ground set taken as the union of the edges.
    pub fn from_edges(edges: impl IntoIterator<Item = Vec<Cell>>) -> Self {
        let edges = collapse(edges);
        let ground: BTreeSet<Cell> = edges.iter().flatten().copied().collect();
        Hypergraph { ground: ground.into_iter().collect(), edges }
    }

    pub fn ground(&self) -> &[Cell] {
        &self.ground
    }

    pub fn edges(&self) -> &[Vec<Cell>] {
        &self.edges
    }

    /// Keep only `vs`; edges are cut down to `vs` and repeats collapse.
    pub fn restrict(&self, vs: &[Cell]) -> Result<Hypergraph> {
        let keep: BTreeSet<Cell> = vs.iter().copied().collect();
        if keep.iter().any(|c| self.ground.binary_search(c).is_err()) {
            return Err(Error::NotASubset);
        }
        let edges = collapse(self.edges.iter().map(|e| e.iter().copied().filter(|c| keep.contains(c)).collect()));
        Ok(Hypergraph { ground: keep.into_iter().collect(), edges })
    }

    /// Restrict to the vertices lying in at least `k` edges of `family`
    /// (indices into [`Self::edges`]).
    pub fn heavy_cover_restrict(&self, family: &[usize], k: usize) -> Result<Hypergraph> {
        if family.iter().any(|&i| i >= self.edges.len()) {
            return Err(Error::NotASubset);
        }
        let mut cover: HashMap<Cell, usize> = HashMap::new();
        for &i in family {
            for c in &self.edges[i] {
                *cover.entry(*c).or_default() += 1;
            }
        }
        let heavy: Vec<Cell> = self.ground.iter().copied().filter(|c| cover.get(c).copied().unwrap_or(0) >= k).collect();
        self.restrict(&heavy)
    }

    /// Index of `edge` (after sorting) in [`Self::edges`].
    pub fn edge_index(&self, edge: &[Cell]) -> Option<usize> {
        let mut e = edge.to_vec();
        e.sort_unstable();
        e.dedup();
        self.edges.iter().position(|x| *x == e)
    }

    /// `family` has empty intersection while any `k` of its members intersect.
    pub fn is_witness(&self, family: &[usize], k: usize) -> bool {
        let sets: Vec<Vec<Cell>> = family.iter().map(|&i| self.edges[i].clone()).collect();
        let all = super::verify::intersect_all(sets.iter().map(Vec::as_slice));
        if !all.is_empty() || sets.len() <= k {
            return false;
        }
        super::verify::find_disjoint_subfamily(&sets, k).is_none()
    }

    /// Exact Helly number: the smallest `k >= 1` admitting no `k`-witness.
    ///
    /// Up to [`EXHAUSTIVE_MAX_EDGES`] edges this enumerates every subfamily and
    /// applies the definition directly. Larger inputs (up to
    /// [`BOUNDED_MAX_EDGES`]) enumerate inclusion-minimal disjoint subfamilies
    /// whose size is capped by one more than the largest edge, the uniform
    /// upper bound on any Helly number.
    pub fn helly_number_bruteforce(&self) -> Result<usize> {
        let (m, g) = (self.edges.len(), self.ground.len());
        if m <= EXHAUSTIVE_MAX_EDGES && g <= EXHAUSTIVE_MAX_GROUND {
            Ok(self.helly_exhaustive())
        } else if m <= BOUNDED_MAX_EDGES && g <= BOUNDED_MAX_GROUND {
            Ok(self.helly_bounded())
        } else {
            Err(Error::ScaleExceeded { edges: m, ground: g })
        }
    }

    fn index_of(&self, c: &Cell) -> usize {
        self.ground.binary_search(c).expect("edge vertex in ground")
    }

    fn helly_exhaustive(&self) -> usize {
        let m = self.edges.len();
        let full: u64 = if self.ground.len() == 64 { u64::MAX } else { (1u64 << self.ground.len()) - 1 };
        let edge_bits: Vec<u64> =
            self.edges.iter().map(|e| e.iter().fold(0u64, |acc, c| acc | 1 << self.index_of(c))).collect();

        // inter[s]: common vertices of subfamily s (the empty family meets everything)
        let mut inter = vec![full; 1 << m];
        // smallest: size of the smallest sub-subfamily of s with empty intersection
        let mut smallest = vec![u8::MAX; 1 << m];
        let mut best = 0u8;
        for s in 1usize..1 << m {
            let low = s.trailing_zeros() as usize;
            inter[s] = inter[s & (s - 1)] & edge_bits[low];
            let mut z = u8::MAX;
            let mut rest = s;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                z = z.min(smallest[s ^ b]);
                rest ^= b;
            }
            if inter[s] == 0 {
                z = z.min(s.count_ones() as u8);
                // s is a k-witness for every k below z
                best = best.max(z);
            }
            smallest[s] = z;
        }
        best.max(1) as usize
    }

    fn helly_bounded(&self) -> usize {
        type Bits = [u64; 4];
        let words = self.ground.len().div_ceil(64).max(1);
        let to_bits = |e: &Vec<Cell>| {
            let mut b: Bits = [0; 4];
            for c in e {
                let i = self.index_of(c);
                b[i / 64] |= 1 << (i % 64);
            }
            b
        };
        let edges: Vec<Bits> = self.edges.iter().map(to_bits).collect();
        let and = |a: &Bits, b: &Bits| -> Bits { std::array::from_fn(|i| a[i] & b[i]) };
        let empty = |a: &Bits| a[..words].iter().all(|w| *w == 0);
        let cap = self.edges.iter().map(Vec::len).max().unwrap_or(0) + 1;

        struct Ctx<'a> {
            edges: &'a [Bits],
            cap: usize,
            best: usize,
        }
        fn go(
            ctx: &mut Ctx,
            chosen: &mut Vec<usize>,
            acc: Bits,
            and: &dyn Fn(&Bits, &Bits) -> Bits,
            empty: &dyn Fn(&Bits) -> bool,
        ) {
            let start = chosen.last().map_or(0, |l| l + 1);
            for i in start..ctx.edges.len() {
                let next = if chosen.is_empty() { ctx.edges[i] } else { and(&acc, &ctx.edges[i]) };
                chosen.push(i);
                if empty(&next) {
                    let critical = (0..chosen.len()).all(|skip| {
                        let mut it = chosen.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &e)| ctx.edges[e]);
                        match it.next() {
                            None => true,
                            Some(first) => !empty(&it.fold(first, |a, b| and(&a, &b))),
                        }
                    });
                    if critical {
                        ctx.best = ctx.best.max(chosen.len());
                    }
                } else if chosen.len() < ctx.cap {
                    go(ctx, chosen, next, and, empty);
                }
                chosen.pop();
            }
        }
        let mut ctx = Ctx { edges: &edges, cap, best: 0 };
        go(&mut ctx, &mut Vec::with_capacity(cap), [0; 4], &and, &empty);
        ctx.best.max(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: i32) -> Cell {
        Cell::new(i, 0)
    }

    fn edge(ids: &[i32]) -> Vec<Cell> {
        ids.iter().map(|&i| v(i)).collect()
    }

    #[test]
    fn three_subsets_of_four_points() {
        let g = Hypergraph::from_edges([edge(&[1, 2, 3]), edge(&[0, 2, 3]), edge(&[0, 1, 3]), edge(&[0, 1, 2])]);
        assert_eq!(g.helly_number_bruteforce().unwrap(), 4);
        assert_eq!(g.helly_bounded(), 4);
    }

    #[test]
    fn trivial_oracles() {
        assert_eq!(Hypergraph::from_edges([edge(&[0, 1])]).helly_number_bruteforce().unwrap(), 1);
        let two = Hypergraph::from_edges([edge(&[0, 1]), edge(&[2, 3])]);
        assert_eq!(two.helly_number_bruteforce().unwrap(), 2);
        assert_eq!(two.helly_bounded(), 2);
    }

    #[test]
    fn restriction() {
        let g = Hypergraph::from_edges([edge(&[0, 1]), edge(&[0, 2])]);
        assert_eq!(g.restrict(g.ground()).unwrap(), g);
        let none = g.restrict(&[]).unwrap();
        assert_eq!(none.edges(), &[Vec::<Cell>::new()]);
        assert!(none.ground().is_empty());
        let single = g.restrict(&[v(0)]).unwrap();
        assert_eq!(single.edges(), &[edge(&[0])]);
        assert_eq!(g.restrict(&[v(9)]), Err(Error::NotASubset));
        assert_eq!(Hypergraph::new([v(0)], [edge(&[0, 1])]), Err(Error::NotASubset));
    }

    #[test]
    fn heavy_cover() {
        let g = Hypergraph::from_edges([edge(&[0, 1]), edge(&[2, 3]), edge(&[4, 5]), edge(&[0, 2, 4])]);
        let r = g.heavy_cover_restrict(&[0, 1, 2], 2).unwrap();
        assert!(r.ground().is_empty());
        let r = g.heavy_cover_restrict(&[0, 3], 2).unwrap();
        assert_eq!(r.ground(), &[v(0)]);
        assert!(g.heavy_cover_restrict(&[7], 1).is_err());
    }

    #[test]
    fn witness_predicate() {
        let g = Hypergraph::from_edges([edge(&[1, 2, 3]), edge(&[0, 2, 3]), edge(&[0, 1, 3]), edge(&[0, 1, 2])]);
        assert!(g.is_witness(&[0, 1, 2, 3], 3));
        assert!(g.is_witness(&[0, 1, 2, 3], 2));
        assert!(!g.is_witness(&[0, 1, 2, 3], 4));
        assert!(!g.is_witness(&[0, 1, 2], 2));
    }

    #[test]
    fn scale_guard() {
        let g = Hypergraph::from_edges((0..600).map(|i| edge(&[i])));
        assert!(matches!(g.helly_number_bruteforce(), Err(Error::ScaleExceeded { .. })));
    }
}
