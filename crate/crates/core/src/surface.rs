//! The marked disk of the module category.
//!
//! Boundary positions `0..=n+2` run counterclockwise: position 0 is the fan
//! point `p` (endpoint of every arc of the fixed arc system), position 1 and
//! position `n+2` are the two extra marked points, and positions `2..=n+1`
//! are the points `v_1..v_n`. Chords are boundary-position pairs, and a
//! triangulation is a maximal set of pairwise non-crossing chords; a chord is
//! trivial exactly when it ends at `p`, and non-trivial chords correspond to
//! interval modules via [`Chord::module`]. Triangulations containing the
//! chord joining the two extra points induce bound quiver algebras, one per
//! tilting module.

use crate::modules::{IntervalModule, ModuleCollection, SttPair};
use crate::quiver::{build_algebra, BoundQuiverAlgebra};
use crate::{check_rank, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The marked disk of rank `n`: `n + 3` boundary positions counterclockwise,
/// with the fan point at 0, the extra points at 1 and `n + 2`, and the point
/// for vertex `k` at position `k + 1`. The fixed arc system is the fan of arcs
/// from position 0 to each vertex point; cutting along it reproduces the
/// linear quiver, which [`MarkedDisk::base_algebra`] rebuilds from the angle
/// rule as a sanity anchor for the conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkedDisk {
    n: usize,
}

impl MarkedDisk {
    pub fn new(n: usize) -> Result<MarkedDisk> {
        check_rank(n)?;
        Ok(MarkedDisk { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of boundary positions.
    pub fn boundary_len(&self) -> usize {
        self.n + 3
    }

    pub fn is_fan_point(&self, position: usize) -> bool {
        position == 0
    }

    pub fn is_extra_point(&self, position: usize) -> bool {
        position == 1 || position == self.n + 2
    }

    /// Boundary position of the vertex-`k` marked point, `1 ≤ k ≤ n`.
    pub fn vertex_position(&self, k: usize) -> usize {
        k + 1
    }

    /// The algebra encoded by the fixed fan arc system: one vertex per fan
    /// arc, one arrow per pair of rotationally adjacent arcs, no relations.
    /// Always isomorphic to the linear quiver.
    pub fn base_algebra(&self) -> BoundQuiverAlgebra {
        let labels: Vec<String> = (1..=self.n).map(|k| format!("(0,{})", k + 1)).collect();
        // adjacent fan arcs share the fan point; the arrow points from the
        // counterclockwise-later side, which is the arc with the larger far
        // position, to the earlier one
        let arrows = (1..self.n).map(|k| (k, k - 1, 0i64)).collect();
        build_algebra(labels, arrows, Vec::new()).expect("fan quiver is well formed")
    }
}

/// A chord between two non-adjacent boundary positions, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord(usize, usize);

impl Chord {
    pub fn new(a: usize, b: usize, n: usize) -> Result<Chord> {
        check_rank(n)?;
        let m = n + 3;
        let (lo, hi) = (a.min(b), a.max(b));
        let adjacent = hi - lo == 1 || (lo == 0 && hi == m - 1);
        if a == b || hi >= m || adjacent {
            return Err(Error::InvalidChord { a, b, n });
        }
        Ok(Chord(lo, hi))
    }

    /// The chord joining the two extra marked points; its module is `[1, n]`.
    pub fn between_extras(n: usize) -> Chord {
        Chord(1, n + 2)
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    /// Trivial chords end at the fan point and carry the zero module.
    pub fn is_trivial(&self) -> bool {
        self.0 == 0
    }

    /// Strict interior crossing; chords sharing an endpoint do not cross.
    pub fn crosses(&self, other: &Chord) -> bool {
        let inside = |x: usize| self.0 < x && x < self.1;
        inside(other.0) != inside(other.1)
            && other.0 != self.0
            && other.0 != self.1
            && other.1 != self.0
            && other.1 != self.1
    }

    /// The interval module of a non-trivial chord: relabelling the non-fan
    /// positions `1..=n+2` to `0..=n+1`, the chord `(a, b)` carries `[a+1, b-1]`.
    pub fn module(&self, n: usize) -> Option<IntervalModule> {
        if self.is_trivial() {
            return None;
        }
        Some(IntervalModule::new(self.0, self.1 - 2, n).expect("chord stays in range"))
    }
}

/// A triangle of a triangulation, corners sorted ascending; `edge_is_chord`
/// follows the edge order `(v0,v1), (v1,v2), (v0,v2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tile {
    pub corners: [usize; 3],
    pub edge_is_chord: [bool; 3],
}

impl Tile {
    pub fn is_complete(&self) -> bool {
        self.edge_is_chord.iter().all(|&b| b)
    }
}

/// Hereditary vs non-hereditary verdict for an induced algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangulationClass {
    Hereditary,
    NonHereditary,
}

/// A maximal set of pairwise non-crossing chords on the disk of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    chords: Vec<Chord>,
}

impl Triangulation {
    pub fn new(n: usize, chords: impl IntoIterator<Item = Chord>) -> Result<Triangulation> {
        check_rank(n)?;
        let set: BTreeSet<Chord> = chords.into_iter().collect();
        let chords: Vec<Chord> = set.into_iter().collect();
        for c in &chords {
            Chord::new(c.0, c.1, n)?;
        }
        for (i, a) in chords.iter().enumerate() {
            for b in &chords[i + 1..] {
                if a.crosses(b) {
                    return Err(Error::InvalidTriangulation(format!(
                        "chords {a:?} and {b:?} cross"
                    )));
                }
            }
        }
        if chords.len() != n {
            return Err(Error::InvalidTriangulation(format!(
                "expected {n} chords, got {}",
                chords.len()
            )));
        }
        Ok(Triangulation { n, chords })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn contains(&self, c: Chord) -> bool {
        self.chords.binary_search(&c).is_ok()
    }

    pub fn contains_extras_chord(&self) -> bool {
        self.contains(Chord::between_extras(self.n))
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        let m = self.n + 3;
        let (lo, hi) = (a.min(b), a.max(b));
        hi - lo == 1 || (lo == 0 && hi == m - 1) || self.contains(Chord(lo, hi))
    }

    /// The `n + 1` triangles cut out by the chords.
    pub fn tiles(&self) -> Vec<Tile> {
        let m = self.n + 3;
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if !self.is_edge(a, b) {
                    continue;
                }
                for c in b + 1..m {
                    if self.is_edge(b, c) && self.is_edge(a, c) {
                        let is_chord = |x: usize, y: usize| self.contains(Chord(x, y));
                        out.push(Tile {
                            corners: [a, b, c],
                            edge_is_chord: [is_chord(a, b), is_chord(b, c), is_chord(a, c)],
                        });
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), self.n + 1, "a triangulation has n+1 tiles");
        out
    }

    pub fn complete_tile_count(&self) -> usize {
        self.tiles().iter().filter(|t| t.is_complete()).count()
    }

    /// The modules of the non-trivial chords together with their support.
    pub fn module_pair(&self) -> SttPair {
        let summands: Vec<IntervalModule> =
            self.chords.iter().filter_map(|c| c.module(self.n)).collect();
        let modules = ModuleCollection::new(self.n, summands).expect("chord modules share rank");
        let support = modules.support();
        SttPair { modules, support }
    }

    /// The bound quiver algebra induced by a triangulation containing the
    /// chord between the extra points.
    ///
    /// Every pair of chord edges of a tile meeting at a corner `q` gives an
    /// arrow between the two chords, pointing from the side whose far
    /// endpoint is counterclockwise-further from `q`, except that a complete
    /// tile suppresses the pair at its middle corner (the corner opposite the
    /// edge whose removal would merge the tile with the region containing the
    /// fan point) and contributes the relation through its spanning edge.
    pub fn induced_algebra(&self) -> Result<BoundQuiverAlgebra> {
        if !self.contains_extras_chord() {
            return Err(Error::ExtrasChordMissing);
        }
        let m = self.n + 3;
        let labels: Vec<String> =
            self.chords.iter().map(|c| format!("({},{})", c.0, c.1)).collect();
        let chord_index = |x: usize, y: usize| -> usize {
            self.chords.binary_search(&Chord(x.min(y), x.max(y))).expect("edge is a chord")
        };
        let mut arrows: Vec<(usize, usize, i64)> = Vec::new();
        let mut relations: Vec<(usize, usize)> = Vec::new();
        // arrow at corner q between chords (q,x) and (q,y): from the
        // counterclockwise-later side to the earlier one
        let arrow_at = |q: usize, x: usize, y: usize| -> (usize, usize, i64) {
            let ord = |z: usize| (z + m - q) % m;
            let (far_src, far_tgt) = if ord(x) > ord(y) { (x, y) } else { (y, x) };
            (chord_index(q, far_src), chord_index(q, far_tgt), 0)
        };
        for tile in self.tiles() {
            let [a, b, c] = tile.corners;
            let [ab, bc, ac] = tile.edge_is_chord;
            if tile.is_complete() {
                // corners a < b < c never include the fan point here, so the
                // fan region sits across the spanning edge (a, c); the angle
                // at b is suppressed
                let alpha = arrow_at(a, c, b);
                let beta = arrow_at(c, a, b);
                // path through the spanning edge: (b,c) -> (a,c) -> (a,b)
                arrows.push(beta);
                arrows.push(alpha);
                relations.push((arrows.len() - 2, arrows.len() - 1));
            } else {
                if ab && bc {
                    arrows.push(arrow_at(b, a, c));
                }
                if ab && ac {
                    arrows.push(arrow_at(a, b, c));
                }
                if bc && ac {
                    arrows.push(arrow_at(c, b, a));
                }
            }
        }
        build_algebra(labels, arrows, relations)
    }

    pub fn classify(&self) -> Result<TriangulationClass> {
        if !self.contains_extras_chord() {
            return Err(Error::ExtrasChordMissing);
        }
        if self.complete_tile_count() > 0 {
            Ok(TriangulationClass::NonHereditary)
        } else {
            Ok(TriangulationClass::Hereditary)
        }
    }

    /// TikZ picture of the disk: fan point and its arcs in green, extra
    /// points as red circles, chords in blue with the extras chord in orange.
    pub fn to_tikz(&self) -> String {
        let m = self.n + 3;
        let coord = |p: usize| {
            let angle = std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * p as f64 / m as f64;
            (2.0 * angle.cos(), 2.0 * angle.sin())
        };
        let mut out = String::from("\\begin{tikzpicture}\n  \\draw[line width=1pt] (0,0) circle (2);\n");
        for k in 1..=self.n {
            let (x, y) = coord(k + 1);
            out.push_str(&format!(
                "  \\draw[green!60!black, opacity=0.4] (0,2) -- ({x:.3},{y:.3});\n"
            ));
        }
        for c in &self.chords {
            let (x0, y0) = coord(c.0);
            let (x1, y1) = coord(c.1);
            let color = if *c == Chord::between_extras(self.n) { "orange" } else { "blue" };
            out.push_str(&format!(
                "  \\draw[{color}, line width=1.2pt] ({x0:.3},{y0:.3}) -- ({x1:.3},{y1:.3});\n"
            ));
        }
        for p in 0..m {
            let (x, y) = coord(p);
            if p == 1 || p == m - 1 {
                out.push_str(&format!("  \\draw[red, line width=1pt] ({x:.3},{y:.3}) circle (0.1);\n"));
            } else {
                out.push_str(&format!(
                    "  \\filldraw[green!60!black] ({x:.3},{y:.3}) circle (0.1);\n"
                ));
            }
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            n: usize,
            chords: Vec<(usize, usize)>,
        }
        Wire { n: self.n, chords: self.chords.iter().map(|c| (c.0, c.1)).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            chords: Vec<(usize, usize)>,
        }
        let wire = Wire::deserialize(d)?;
        let chords = wire
            .chords
            .into_iter()
            .map(|(a, b)| Chord::new(a, b, wire.n))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Triangulation::new(wire.n, chords).map_err(serde::de::Error::custom)
    }
}

/// All triangulations of the disk of rank `n`, in the deterministic order of
/// [`enumerate_triangulations_with`].
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    let mut out = Vec::new();
    enumerate_triangulations_with(n, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Visitor-based enumeration in a fixed order: recursively pick the apex of
/// the triangle over the base edge `(0, n+2)`, smaller apexes first, then
/// triangulate the left range before the right one. Each triangulation is
/// produced exactly once and the order is stable across runs.
pub fn enumerate_triangulations_with(
    n: usize,
    mut visit: impl FnMut(&Triangulation),
) -> Result<()> {
    check_rank(n)?;
    let m = n + 3;
    fn go(
        n: usize,
        pending: &mut Vec<(usize, usize)>,
        acc: &mut Vec<Chord>,
        visit: &mut dyn FnMut(&Triangulation),
    ) {
        let Some((lo, hi)) = pending.pop() else {
            let mut chords = acc.clone();
            chords.sort_unstable();
            visit(&Triangulation { n, chords });
            return;
        };
        if hi - lo < 2 {
            go(n, pending, acc, visit);
            pending.push((lo, hi));
            return;
        }
        for apex in lo + 1..hi {
            let before = acc.len();
            if apex - lo >= 2 {
                acc.push(Chord(lo, apex));
            }
            if hi - apex >= 2 {
                acc.push(Chord(apex, hi));
            }
            pending.push((apex, hi));
            pending.push((lo, apex));
            go(n, pending, acc, visit);
            pending.pop();
            pending.pop();
            acc.truncate(before);
        }
        pending.push((lo, hi));
    }
    let mut pending = vec![(0usize, m - 1)];
    let mut acc = Vec::new();
    go(n, &mut pending, &mut acc, &mut visit);
    Ok(())
}
