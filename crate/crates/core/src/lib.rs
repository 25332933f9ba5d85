//! Exact Helly numbers of polyominoes.
//!
//! A copy of a polyomino is its image under one of the eight symmetries of the
//! square followed by an integer translation. The Helly number `H(P)` is the
//! smallest `k` such that any finite family of copies in which every `k`
//! members share a cell has a cell common to all members.
//!
//! The crate enumerates polyominoes ([`enumerate`]), detects the empty-quadrant
//! structures and builds explicit witness families ([`structures`]), computes
//! `H(P)` exactly by a pruned search for critical families ([`engine`]) and
//! tabulates Helly numbers over all free polyominoes of a given size
//! ([`census`]). Every lower bound comes with a [`WitnessCertificate`] that
//! [`verify_certificate`] re-checks from scratch.

pub mod census;
pub mod certificate;
pub mod engine;
pub mod enumerate;
mod error;
pub mod grid;
pub mod io;
pub mod structures;

pub use certificate::{CertificateFile, CertificateKind, WitnessCertificate};
pub use engine::{helly_number, verify_certificate, HellyResult, Hypergraph, Shortcut};
pub use error::{Error, Result};
pub use grid::{Cell, Placement, Polyomino, Transform};
