use std::collections::HashMap;

use itertools::Itertools;

use polyhelly::engine::{find_critical_family, WitnessBounds};
use polyhelly::enumerate::enumerate_free;
use polyhelly::structures::{fq_witness, make_fq};
use polyhelly::{helly_number, Cell, Hypergraph, Placement, Polyomino, Transform, WitnessCertificate};

fn common_cell(sets: &[&Vec<Cell>]) -> bool {
    sets[0].iter().any(|c| sets[1..].iter().all(|s| s.contains(c)))
}

/// Every `k` members share a cell and all of them together do not.
fn is_k_witness(sets: &[Vec<Cell>], k: usize) -> bool {
    let all: Vec<&Vec<Cell>> = sets.iter().collect();
    !common_cell(&all) && sets.iter().combinations(k).all(|sub| common_cell(&sub))
}

#[test]
fn every_level_up_to_the_helly_number_has_a_critical_family() {
    for n in 3..=6 {
        for p in enumerate_free(n).unwrap().filter(|p| !p.is_rectangle()) {
            let h = helly_number(&p).unwrap().helly_number;
            for level in (2..=h).filter(|&l| l != 3) {
                let cert = find_critical_family(&p, level).unwrap();
                let cert = cert.unwrap_or_else(|| panic!("{p:?}: H={h} but no critical family of size {level}"));
                assert!(is_k_witness(&cert.cell_sets(), level - 1));
            }
            if h < n + 1 {
                assert!(find_critical_family(&p, h + 1).unwrap().is_none(), "{p:?}");
            }
        }
    }
}

#[test]
fn engine_certificates_meet_size_bounds() {
    for n in 1..=7 {
        for p in enumerate_free(n).unwrap() {
            let r = helly_number(&p).unwrap();
            let cert = &r.certificate;
            assert!(WitnessBounds::of(cert).hold_for(cert.h), "{p:?}");
            assert!(is_k_witness(&cert.cell_sets(), cert.h - 1), "{p:?}");
        }
    }
}

fn as_hypergraph(cert: &WitnessCertificate) -> Hypergraph {
    Hypergraph::from_edges(cert.cell_sets())
}

#[test]
fn heavy_cover_on_the_f4_family() {
    let cert = fq_witness(4).unwrap();
    let g = as_hypergraph(&cert);
    let family: Vec<usize> = (0..g.edges().len()).collect();
    let heavy = g.heavy_cover_restrict(&family, 4).unwrap();
    // Only the inner stretch of the shared long row is covered four times.
    let expected: Vec<Cell> = (1..=6).map(|x| Cell::new(x, 0)).collect();
    assert_eq!(heavy.ground(), expected.as_slice());
    assert!(heavy.ground().iter().all(|c| c.y != -1));
    assert!(is_k_witness(heavy.edges(), 4));
}

#[test]
fn heavy_cover_preserves_witnesses() {
    for n in 4..=7 {
        for p in enumerate_free(n).unwrap().filter(|p| !p.is_rectangle()) {
            let cert = helly_number(&p).unwrap().certificate;
            let k = cert.h - 1;
            let g = as_hypergraph(&cert);
            let family: Vec<usize> = (0..g.edges().len()).collect();
            let heavy = g.heavy_cover_restrict(&family, k).unwrap();
            assert_eq!(heavy.edges().len(), g.edges().len(), "{p:?}: restricted edges collapsed");
            assert!(is_k_witness(heavy.edges(), k), "{p:?}");
        }
    }
}

#[test]
fn quarter_turned_copies_of_fq_share_at_most_three_cells() {
    for q in 4..=8 {
        let fq = make_fq(q).unwrap();
        let reach = fq.width() + fq.height();
        let mut worst = 0;
        for r in [1, 3] {
            for reflect in [false, true] {
                let t = Transform::from_parts(r, reflect);
                for dy in -reach..=reach {
                    for dx in -reach..=reach {
                        worst = worst.max(fq.overlap(&fq.apply(&Placement::new(t, dx, dy))));
                    }
                }
            }
        }
        assert!(worst <= 3, "F_{q}: a quarter-turned copy shares {worst} cells");
    }
}

#[test]
fn fq_witness_cover_profile() {
    // Every cell of the F_q witness is covered by at most q copies.
    for q in 4..=8 {
        let cert = fq_witness(q).unwrap();
        let mut cover: HashMap<Cell, usize> = HashMap::new();
        for s in cert.cell_sets() {
            for c in s {
                *cover.entry(c).or_default() += 1;
            }
        }
        assert_eq!(cover.values().max(), Some(&q));
        assert!(is_k_witness(&cert.cell_sets(), q));
    }
}

#[test]
fn single_shapes() {
    let cases: [(&[(i32, i32)], usize); 4] = [
        (&[(0, 0), (1, 0), (0, 1)], 4),
        (&[(0, 0), (1, 0), (2, 0), (1, 1)], 4),
        (&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)], 4),
        (&[(0, 0), (1, 0), (2, 0), (3, 0)], 2),
    ];
    for (cells, want) in cases {
        let p = Polyomino::new(cells.iter().copied()).unwrap();
        assert_eq!(helly_number(&p).unwrap().helly_number, want, "{cells:?}");
    }
}

#[test]
fn theorem_checks_through_size_eight() {
    for n in 1..=8 {
        for p in enumerate_free(n).unwrap() {
            let h = helly_number(&p).unwrap().helly_number;
            assert_eq!(h == 2, p.is_rectangle(), "{p:?}");
            assert_ne!(h, 3, "{p:?}");
            assert!(h <= n + 1, "{p:?}");
            if p.is_convex_lattice() && !p.is_rectangle() {
                assert_eq!(h, 4, "{p:?}");
            }
        }
    }
}
