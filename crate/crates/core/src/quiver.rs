//! Quivers with graded arrows and quadratic monomial relations.
//!
//! This is the universal output type of the engine: every construction (the
//! algebra induced by a triangulation, the graded algebra induced by an arc
//! system, its degree-zero part, and both endomorphism-algebra oracles) lands
//! here. Isomorphism testing is by a canonical form obtained from color
//! refinement followed by exhaustive minimization over the residual vertex
//! symmetry; instances never exceed a dozen vertices.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A directed graded arrow between vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub grade: i64,
}

/// A finite quiver with integer arrow grades.
///
/// Arrows form a list with stable indices; parallel arrows are permitted by
/// the type even though the disk models never produce them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex label {v:?}")));
            }
        }
        for a in &arrows {
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} -> {} out of range",
                    a.src, a.tgt
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
}

/// A quiver bound by quadratic monomial relations.
///
/// Relations are stored as pairs `(a, b)` of arrow indices with
/// `tgt(a) = src(b)`, meaning the composite path vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: BTreeSet<(usize, usize)>,
}

impl BoundQuiverAlgebra {
    pub fn new(quiver: Quiver, relations: BTreeSet<(usize, usize)>) -> Result<BoundQuiverAlgebra> {
        for &(a, b) in &relations {
            if a >= quiver.arrows.len() || b >= quiver.arrows.len() {
                return Err(Error::InvalidQuiver(format!("relation ({a},{b}) out of range")));
            }
            if quiver.arrows[a].tgt != quiver.arrows[b].src {
                return Err(Error::InvalidQuiver(format!(
                    "relation ({a},{b}) is not composable"
                )));
            }
        }
        Ok(BoundQuiverAlgebra { quiver, relations })
    }

    pub fn hereditary(quiver: Quiver) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra { quiver, relations: BTreeSet::new() }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    /// Largest absolute arrow grade, zero for ungraded outputs.
    pub fn max_grade(&self) -> i64 {
        self.quiver.arrows.iter().map(|a| a.grade.abs()).max().unwrap_or(0)
    }

    /// Connectivity of the underlying undirected graph; the empty quiver is
    /// connected by convention.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let comp = self.component_ids();
        comp.iter().all(|&c| c == comp[0])
    }

    fn component_ids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut id: Vec<usize> = (0..n).collect();
        fn find(id: &mut Vec<usize>, x: usize) -> usize {
            if id[x] != x {
                let root = find(id, id[x]);
                id[x] = root;
            }
            id[x]
        }
        for a in &self.quiver.arrows {
            let (ra, rb) = (find(&mut id, a.src), find(&mut id, a.tgt));
            if ra != rb {
                id[ra.max(rb)] = ra.min(rb);
            }
        }
        (0..n).map(|v| find(&mut id, v)).collect()
    }

    /// Maximal connected sub-bound-quivers, with relations distributed to the
    /// component containing both arrows. Components are ordered by their
    /// sorted vertex label lists.
    pub fn connected_components(&self) -> Vec<BoundQuiverAlgebra> {
        let ids = self.component_ids();
        let roots: BTreeSet<usize> = ids.iter().copied().collect();
        let mut parts: Vec<BoundQuiverAlgebra> = Vec::new();
        for root in roots {
            let verts: Vec<usize> = (0..self.vertex_count()).filter(|&v| ids[v] == root).collect();
            let vmap: BTreeMap<usize, usize> =
                verts.iter().enumerate().map(|(new, &old)| (old, new)).collect();
            let labels = verts.iter().map(|&v| self.quiver.vertices[v].clone()).collect();
            let mut amap = BTreeMap::new();
            let mut arrows = Vec::new();
            for (i, a) in self.quiver.arrows.iter().enumerate() {
                if ids[a.src] == root {
                    amap.insert(i, arrows.len());
                    arrows.push(Arrow { src: vmap[&a.src], tgt: vmap[&a.tgt], grade: a.grade });
                }
            }
            let relations = self
                .relations
                .iter()
                .filter(|(a, _)| ids[self.quiver.arrows[*a].src] == root)
                .map(|&(a, b)| (amap[&a], amap[&b]))
                .collect();
            let quiver = Quiver { vertices: labels, arrows };
            parts.push(BoundQuiverAlgebra { quiver, relations });
        }
        parts.sort_by(|x, y| {
            let mut lx: Vec<&String> = x.quiver.vertices.iter().collect();
            let mut ly: Vec<&String> = y.quiver.vertices.iter().collect();
            lx.sort();
            ly.sort();
            lx.cmp(&ly)
        });
        parts
    }

    /// Gentleness: at most two arrows in and out of each vertex, and for each
    /// arrow at most one composable continuation inside the relation ideal and
    /// at most one outside it, on both sides. Relations are quadratic by type.
    pub fn is_gentle(&self) -> bool {
        let n = self.vertex_count();
        let mut outdeg = vec![0usize; n];
        let mut indeg = vec![0usize; n];
        for a in &self.quiver.arrows {
            outdeg[a.src] += 1;
            indeg[a.tgt] += 1;
        }
        if outdeg.iter().any(|&d| d > 2) || indeg.iter().any(|&d| d > 2) {
            return false;
        }
        let na = self.quiver.arrows.len();
        for i in 0..na {
            let mut succ_in = 0;
            let mut succ_out = 0;
            let mut pred_in = 0;
            let mut pred_out = 0;
            for j in 0..na {
                if i == j {
                    continue;
                }
                if self.quiver.arrows[i].tgt == self.quiver.arrows[j].src {
                    if self.relations.contains(&(i, j)) {
                        succ_in += 1;
                    } else {
                        succ_out += 1;
                    }
                }
                if self.quiver.arrows[j].tgt == self.quiver.arrows[i].src {
                    if self.relations.contains(&(j, i)) {
                        pred_in += 1;
                    } else {
                        pred_out += 1;
                    }
                }
            }
            if succ_in > 1 || succ_out > 1 || pred_in > 1 || pred_out > 1 {
                return false;
            }
        }
        true
    }

    /// True when the underlying undirected graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let ids = self.component_ids();
        let comps: BTreeSet<usize> = ids.iter().copied().collect();
        // forest iff |E| = |V| - #components
        self.quiver.arrows.len() + comps.len() == self.vertex_count()
    }

    /// Global dimension of the quadratic monomial algebra.
    ///
    /// The projective dimension of the simple at `v` is the length of the
    /// longest arrow chain out of `v` in which every consecutive pair is a
    /// relation; the global dimension is the maximum over vertices. Directed
    /// cycles are rejected.
    pub fn global_dimension(&self) -> Result<usize> {
        let n = self.vertex_count();
        let na = self.quiver.arrows.len();
        // detect directed cycles by iterated longest-path relaxation
        let mut order: Vec<usize> = Vec::new();
        {
            let mut indeg = vec![0usize; n];
            for a in &self.quiver.arrows {
                indeg[a.tgt] += 1;
            }
            let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
            while let Some(v) = queue.pop() {
                order.push(v);
                for a in &self.quiver.arrows {
                    if a.src == v {
                        indeg[a.tgt] -= 1;
                        if indeg[a.tgt] == 0 {
                            queue.push(a.tgt);
                        }
                    }
                }
            }
            if order.len() != n {
                return Err(Error::CyclicQuiver);
            }
        }
        // chain[i] = longest relation-linked chain starting with arrow i
        let mut chain = vec![0usize; na];
        let mut arrows_sorted: Vec<usize> = (0..na).collect();
        // process arrows so that successors (by relation) are done first:
        // sort by reverse topological position of the source vertex
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        arrows_sorted.sort_by_key(|&i| std::cmp::Reverse(pos[self.quiver.arrows[i].src]));
        for &i in &arrows_sorted {
            let mut best = 1;
            for &(a, b) in &self.relations {
                if a == i {
                    best = best.max(1 + chain[b]);
                }
            }
            chain[i] = best;
        }
        let mut gldim = 0;
        for v in 0..n {
            let pd = self
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, a)| a.src == v)
                .map(|(i, _)| chain[i])
                .max()
                .unwrap_or(0);
            gldim = gldim.max(pd);
        }
        Ok(gldim)
    }

    /// Canonical byte string: equal for two algebras exactly when some vertex
    /// bijection carries arrows to arrows (grades preserved) and relations to
    /// relations.
    pub fn canonical_form(&self) -> Vec<u8> {
        Canonizer::new(self).run()
    }

    pub fn is_isomorphic(&self, other: &BoundQuiverAlgebra) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// GraphViz DOT output; arrows carry their grade when nonzero and each
    /// relation is drawn as a dotted arc from the start of its first arrow to
    /// the end of its second.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bound_quiver {\n");
        for v in &self.quiver.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for a in &self.quiver.arrows {
            let src = &self.quiver.vertices[a.src];
            let tgt = &self.quiver.vertices[a.tgt];
            if a.grade != 0 {
                out.push_str(&format!("  \"{src}\" -> \"{tgt}\" [label=\"{}\"];\n", a.grade));
            } else {
                out.push_str(&format!("  \"{src}\" -> \"{tgt}\";\n"));
            }
        }
        for &(a, b) in &self.relations {
            let src = &self.quiver.vertices[self.quiver.arrows[a].src];
            let tgt = &self.quiver.vertices[self.quiver.arrows[b].tgt];
            out.push_str(&format!("  \"{src}\" -> \"{tgt}\" [style=dotted, arrowhead=none];\n"));
        }
        out.push_str("}\n");
        out
    }
}

// ---------------------------------------------------------------------------
// serde: the wire format uses vertex labels on arrows and arrow indices on
// relations.

#[derive(Serialize, Deserialize)]
struct ArrowWire {
    src: String,
    tgt: String,
    grade: i64,
}

#[derive(Serialize, Deserialize)]
struct AlgebraWire {
    vertices: Vec<String>,
    arrows: Vec<ArrowWire>,
    relations: Vec<(usize, usize)>,
}

impl Serialize for BoundQuiverAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = AlgebraWire {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowWire {
                    src: self.quiver.vertices[a.src].clone(),
                    tgt: self.quiver.vertices[a.tgt].clone(),
                    grade: a.grade,
                })
                .collect(),
            relations: self.relations.iter().copied().collect(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundQuiverAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = AlgebraWire::deserialize(d)?;
        let index: BTreeMap<&str, usize> =
            wire.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut arrows = Vec::new();
        for a in &wire.arrows {
            let src = *index
                .get(a.src.as_str())
                .ok_or_else(|| serde::de::Error::custom(format!("unknown vertex {:?}", a.src)))?;
            let tgt = *index
                .get(a.tgt.as_str())
                .ok_or_else(|| serde::de::Error::custom(format!("unknown vertex {:?}", a.tgt)))?;
            arrows.push(Arrow { src, tgt, grade: a.grade });
        }
        let quiver = Quiver::new(wire.vertices, arrows).map_err(serde::de::Error::custom)?;
        BoundQuiverAlgebra::new(quiver, wire.relations.into_iter().collect())
            .map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// canonical form

struct Canonizer<'a> {
    alg: &'a BoundQuiverAlgebra,
    n: usize,
    best: Option<Vec<u8>>,
    leaves: usize,
}

impl<'a> Canonizer<'a> {
    fn new(alg: &'a BoundQuiverAlgebra) -> Canonizer<'a> {
        Canonizer { alg, n: alg.vertex_count(), best: None, leaves: 0 }
    }

    fn run(mut self) -> Vec<u8> {
        if self.n == 0 {
            return self.encode(&[]);
        }
        let colors = vec![0usize; self.n];
        let colors = self.refine(colors);
        self.search(colors);
        self.best.expect("canonical search produced no leaf")
    }

    /// Color refinement: repeatedly split color classes by the multiset of
    /// (direction, grade, neighbor color) over incident arrows plus relation
    /// roles, until stable.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        loop {
            let mut sigs: Vec<(usize, Vec<(u8, i64, usize)>, Vec<(u8, usize, usize)>)> =
                Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut adj = Vec::new();
                for a in self.alg.quiver.arrows() {
                    if a.src == v {
                        adj.push((0u8, a.grade, colors[a.tgt]));
                    }
                    if a.tgt == v {
                        adj.push((1u8, a.grade, colors[a.src]));
                    }
                }
                adj.sort();
                let mut rel = Vec::new();
                for &(a, b) in self.alg.relations() {
                    let (aa, ab) = (self.alg.quiver.arrows()[a], self.alg.quiver.arrows()[b]);
                    if aa.src == v {
                        rel.push((0u8, colors[aa.tgt], colors[ab.tgt]));
                    }
                    if aa.tgt == v {
                        rel.push((1u8, colors[aa.src], colors[ab.tgt]));
                    }
                    if ab.tgt == v {
                        rel.push((2u8, colors[aa.src], colors[aa.tgt]));
                    }
                }
                rel.sort();
                sigs.push((colors[v], adj, rel));
            }
            let mut sorted: Vec<&(usize, Vec<(u8, i64, usize)>, Vec<(u8, usize, usize)>)> =
                sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            let new: Vec<usize> = (0..self.n)
                .map(|v| sorted.binary_search(&&sigs[v]).expect("signature present"))
                .collect();
            if new == colors {
                return new;
            }
            colors = new;
        }
    }

    fn search(&mut self, colors: Vec<usize>) {
        // cells grouped by color, in color order
        let ncolors = colors.iter().max().copied().unwrap_or(0) + 1;
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncolors];
        for v in 0..self.n {
            cells[colors[v]].push(v);
        }
        if let Some(cell) = cells.iter().find(|c| c.len() > 1) {
            // individualize each non-twin member in turn
            let mut picked: Vec<usize> = Vec::new();
            for &v in cell {
                if picked.iter().any(|&u| self.twins(u, v)) {
                    continue;
                }
                picked.push(v);
                let mut next = colors.clone();
                for c in next.iter_mut() {
                    *c *= 2;
                }
                next[v] += 1;
                // renumber densely before refining
                let dense = Self::densify(next);
                let refined = self.refine(dense);
                self.search(refined);
            }
        } else {
            self.leaves += 1;
            assert!(self.leaves <= 2_000_000, "canonicalization budget exceeded");
            let mut order: Vec<usize> = (0..self.n).collect();
            order.sort_by_key(|&v| colors[v]);
            let enc = self.encode(&order);
            if self.best.as_ref().is_none_or(|b| enc < *b) {
                self.best = Some(enc);
            }
        }
    }

    fn densify(colors: Vec<usize>) -> Vec<usize> {
        let mut seen: Vec<usize> = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        colors.iter().map(|c| seen.binary_search(c).expect("dense")).collect()
    }

    /// Swapping `u` and `v` must fix arrows and relations for the pair to be
    /// interchangeable; this collapses symmetric branches.
    fn twins(&self, u: usize, v: usize) -> bool {
        let swap = |x: usize| {
            if x == u {
                v
            } else if x == v {
                u
            } else {
                x
            }
        };
        let mut orig: Vec<(usize, usize, i64)> =
            self.alg.quiver.arrows().iter().map(|a| (a.src, a.tgt, a.grade)).collect();
        let mut swapped: Vec<(usize, usize, i64)> =
            self.alg.quiver.arrows().iter().map(|a| (swap(a.src), swap(a.tgt), a.grade)).collect();
        orig.sort_unstable();
        swapped.sort_unstable();
        if orig != swapped {
            return false;
        }
        let rel_key = |pairs: &BTreeSet<(usize, usize)>, f: &dyn Fn(usize) -> usize| {
            let arrows = self.alg.quiver.arrows();
            let mut keys: Vec<((usize, usize, i64), (usize, usize, i64))> = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (arrows[a], arrows[b]);
                    ((f(x.src), f(x.tgt), x.grade), (f(y.src), f(y.tgt), y.grade))
                })
                .collect();
            keys.sort_unstable();
            keys
        };
        rel_key(self.alg.relations(), &|x| x) == rel_key(self.alg.relations(), &swap)
    }

    /// Encode the algebra under the vertex order `order` (position of vertex
    /// `order[i]` is `i`). The encoding alone determines the isomorphism type.
    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut arrows: Vec<(usize, (usize, usize, i64))> = self
            .alg
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| (i, (pos[a.src], pos[a.tgt], a.grade)))
            .collect();
        arrows.sort_by_key(|&(_, key)| key);
        let mut arrow_rank = vec![0usize; arrows.len()];
        for (rank, &(i, _)) in arrows.iter().enumerate() {
            arrow_rank[i] = rank;
        }
        let mut relations: Vec<(usize, usize)> =
            self.alg.relations().iter().map(|&(a, b)| (arrow_rank[a], arrow_rank[b])).collect();
        relations.sort_unstable();

        let mut out = Vec::new();
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&(arrows.len() as u32).to_le_bytes());
        out.extend_from_slice(&(relations.len() as u32).to_le_bytes());
        for &(_, (s, t, g)) in &arrows {
            out.extend_from_slice(&(s as u32).to_le_bytes());
            out.extend_from_slice(&(t as u32).to_le_bytes());
            out.extend_from_slice(&g.to_le_bytes());
        }
        for &(a, b) in &relations {
            out.extend_from_slice(&(a as u32).to_le_bytes());
            out.extend_from_slice(&(b as u32).to_le_bytes());
        }
        out
    }
}

/// Convenience constructor used throughout the engine: vertices by label,
/// arrows by label pairs with grades, relations by arrow index pairs.
pub fn build_algebra(
    labels: Vec<String>,
    arrows: Vec<(usize, usize, i64)>,
    relations: Vec<(usize, usize)>,
) -> Result<BoundQuiverAlgebra> {
    let arrows = arrows.into_iter().map(|(src, tgt, grade)| Arrow { src, tgt, grade }).collect();
    BoundQuiverAlgebra::new(Quiver::new(labels, arrows)?, relations.into_iter().collect())
}

/// The linear quiver `1 → 2 → ⋯ → n` with no relations.
pub fn linear_quiver(n: usize) -> BoundQuiverAlgebra {
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 0)).collect();
    build_algebra(labels, arrows, Vec::new()).expect("linear quiver is valid")
}
