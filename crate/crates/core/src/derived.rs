//! The graded marked disk of the perfect derived category.
//!
//! Green points `m_0..m_n` sit counterclockwise on the boundary with one red
//! point in each gap; the red arc `a_t` (t = 1..n) cuts off `m_t`, and no arc
//! cuts off `m_0`. A graded arc joins two green points and records an integer
//! index at each red-arc crossing: an arc out of `m_0` crosses only the arc
//! at its far endpoint, while an arc between `m_s` and `m_t` (s ≥ 1) crosses
//! both and its two indices differ by exactly one, the far one larger.
//!
//! All sign bookkeeping reduces to the endpoint index [`GradedArc::endpoint_index`]:
//! at a shared green point the oriented comparison of two arcs is the
//! difference of their endpoint indices, non-positive from the
//! counterclockwise-later arc to the earlier one. A system of `n` pairwise
//! compatible arcs whose complement regions each hold one red point encodes a
//! two-term silting complex; the induced graded algebra has one arrow per
//! rotationally adjacent pair and its degree-zero part is the endomorphism
//! algebra of the complex.

use crate::quiver::{build_algebra, Arrow, BoundQuiverAlgebra, Quiver};
use crate::{check_rank, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A graded arc `(s, t)` with `0 ≤ s < t ≤ n` and its crossing indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedArc {
    s: usize,
    t: usize,
    /// index at the crossing with the red arc at `s`; `None` exactly when `s = 0`
    index_at_s: Option<i64>,
    /// index at the crossing with the red arc at `t`
    index_at_t: i64,
}

impl GradedArc {
    /// A fan arc `m_0 — m_t` with the given index at its unique crossing.
    pub fn fan(t: usize, index: i64, n: usize) -> Result<GradedArc> {
        check_rank(n)?;
        if t == 0 || t > n {
            return Err(Error::InvalidArc(format!("fan endpoint {t} out of range")));
        }
        Ok(GradedArc { s: 0, t, index_at_s: None, index_at_t: index })
    }

    /// An arc `m_s — m_t` with `1 ≤ s < t ≤ n`; the index at `t` is forced to
    /// be one more than the index at `s`.
    pub fn string(s: usize, t: usize, index_at_s: i64, n: usize) -> Result<GradedArc> {
        check_rank(n)?;
        if s == 0 || s >= t || t > n {
            return Err(Error::InvalidArc(format!("arc endpoints ({s},{t}) out of range")));
        }
        Ok(GradedArc { s, t, index_at_s: Some(index_at_s), index_at_t: index_at_s + 1 })
    }

    /// The two-term representative of `m_s — m_t`, indices `(0, 1)`.
    pub fn two_term_string(s: usize, t: usize, n: usize) -> Result<GradedArc> {
        GradedArc::string(s, t, 0, n)
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn is_fan(&self) -> bool {
        self.s == 0
    }

    pub fn index_at_low(&self) -> Option<i64> {
        self.index_at_s
    }

    pub fn index_at_high(&self) -> i64 {
        self.index_at_t
    }

    /// All crossing indices lie in `{0, 1}`.
    pub fn is_two_term(&self) -> bool {
        let lo_ok = self.index_at_s.is_none_or(|z| z == 0 || z == 1);
        lo_ok && (self.index_at_t == 0 || self.index_at_t == 1)
    }

    /// The index driving comparisons at the endpoint `m`: the stored index at
    /// the red arc next to `m` for `m ≥ 1`, and the unique crossing index for
    /// `m = 0`.
    pub fn endpoint_index(&self, at: usize) -> Result<i64> {
        if at == self.t {
            Ok(self.index_at_t)
        } else if at == self.s {
            Ok(self.index_at_s.unwrap_or(self.index_at_t))
        } else {
            Err(Error::NotAnEndpoint { s: self.s, t: self.t, at })
        }
    }

    /// Strict interior crossing of the underlying chords.
    pub fn crosses(&self, other: &GradedArc) -> bool {
        let inside = |x: usize| self.s < x && x < self.t;
        inside(other.s) != inside(other.t)
            && other.s != self.s
            && other.s != self.t
            && other.t != self.s
            && other.t != self.t
    }

    pub fn label(&self) -> String {
        match self.index_at_s {
            None => format!("({},{})[{}]", self.s, self.t, self.index_at_t),
            Some(_) => format!("({},{})", self.s, self.t),
        }
    }
}

/// Position of the far endpoint of an arc in the counterclockwise rotational
/// order at its endpoint `m`; larger means later (further counterclockwise).
fn ccw_rank(m: usize, far: usize, n: usize) -> usize {
    (far + n + 1 - m) % (n + 1)
}

/// The oriented endpoint comparison of two arcs meeting at `m`: the degree of
/// the boundary morphism from `a` to `b` when `a` is counterclockwise-later,
/// and its complementary value otherwise. The two orientations always sum to 1.
pub fn endpoint_comparison(a: &GradedArc, b: &GradedArc, m: usize, n: usize) -> Result<i64> {
    let ea = a.endpoint_index(m)?;
    let eb = b.endpoint_index(m)?;
    let fa = if a.s == m { a.t } else { a.s };
    let fb = if b.s == m { b.t } else { b.s };
    if ccw_rank(m, fa, n) > ccw_rank(m, fb, n) {
        Ok(ea - eb)
    } else {
        Ok(ea - eb + 1)
    }
}

/// Pairwise compatibility inside a system: distinct underlying chords, no
/// interior crossing, and at a shared endpoint the counterclockwise-later arc
/// must not carry the larger endpoint index.
pub fn compatible(a: &GradedArc, b: &GradedArc, n: usize) -> bool {
    if (a.s, a.t) == (b.s, b.t) {
        return false;
    }
    if a.crosses(b) {
        return false;
    }
    for m in [a.s, a.t] {
        if m == b.s || m == b.t {
            let (later, earlier) = {
                let fa = if a.s == m { a.t } else { a.s };
                let fb = if b.s == m { b.t } else { b.s };
                if ccw_rank(m, fa, n) > ccw_rank(m, fb, n) {
                    (a, b)
                } else {
                    (b, a)
                }
            };
            let d = endpoint_comparison(later, earlier, m, n).expect("shared endpoint");
            if d > 0 {
                return false;
            }
        }
    }
    true
}

/// A full graded arc system: `n` pairwise compatible two-term arcs cutting
/// the disk into regions with exactly one red point each.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GradedArcSystem {
    n: usize,
    arcs: Vec<GradedArc>,
}

impl GradedArcSystem {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = GradedArc>) -> Result<GradedArcSystem> {
        check_rank(n)?;
        let set: BTreeSet<GradedArc> = arcs.into_iter().collect();
        let arcs: Vec<GradedArc> = set.into_iter().collect();
        for a in &arcs {
            if a.t > n {
                return Err(Error::InvalidArc(format!("endpoint {} beyond rank {n}", a.t)));
            }
            if !a.is_two_term() {
                return Err(Error::NotTwoTerm(format!("{a:?}")));
            }
        }
        if arcs.len() != n {
            return Err(Error::InvalidArcSystem(format!(
                "expected {n} arcs, got {}",
                arcs.len()
            )));
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if !compatible(a, b, n) {
                    return Err(Error::InvalidArcSystem(format!(
                        "incompatible arcs {a:?} and {b:?}"
                    )));
                }
            }
        }
        let system = GradedArcSystem { n, arcs };
        if !system.is_admissible() {
            return Err(Error::InvalidArcSystem(
                "regions do not each contain exactly one red point".into(),
            ));
        }
        Ok(system)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[GradedArc] {
        &self.arcs
    }

    /// Regions of the disk cut by the arcs, each as (bounding arc indices,
    /// red gaps inside). Since the arcs are pairwise non-crossing they form a
    /// laminar family over the gaps `g_0..g_n` (gap `g_j` holds the red point
    /// between `m_j` and `m_{j+1}`).
    fn regions(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let k = self.arcs.len();
        let covers = |i: usize, g: usize| self.arcs[i].s <= g && g < self.arcs[i].t;
        let contains = |j: usize, i: usize| {
            j != i && self.arcs[j].s <= self.arcs[i].s && self.arcs[i].t <= self.arcs[j].t
        };
        // direct parent = smallest container; unique because the family is laminar
        let parent: Vec<Option<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| contains(j, i))
                    .min_by_key(|&j| self.arcs[j].t - self.arcs[j].s)
            })
            .collect();
        let mut regions = Vec::new();
        for i in 0..k {
            let children: Vec<usize> = (0..k).filter(|&c| parent[c] == Some(i)).collect();
            let gaps: Vec<usize> = (self.arcs[i].s..self.arcs[i].t)
                .filter(|&g| children.iter().all(|&c| !covers(c, g)))
                .collect();
            let mut bound = vec![i];
            bound.extend(&children);
            bound.sort_unstable();
            regions.push((bound, gaps));
        }
        let maximal: Vec<usize> = (0..k).filter(|&i| parent[i].is_none()).collect();
        let outer_gaps: Vec<usize> =
            (0..=self.n).filter(|&g| maximal.iter().all(|&i| !covers(i, g))).collect();
        regions.push((maximal, outer_gaps));
        regions
    }

    /// Every region holds exactly one red point.
    pub fn is_admissible(&self) -> bool {
        self.regions().iter().all(|(_, gaps)| gaps.len() == 1)
    }

    /// The system encodes a tilting complex exactly when its fan arcs all
    /// carry the same index; compatibility forces the fan indices to be
    /// weakly decreasing, so a mixed system has an adjacent drop. Agreement
    /// with the chain-map oracle is asserted by the verification suite.
    pub fn is_tilting_system(&self) -> bool {
        let fan_indices: Vec<i64> =
            self.arcs.iter().filter(|a| a.is_fan()).map(|a| a.index_at_t).collect();
        !(fan_indices.contains(&0) && fan_indices.contains(&1))
    }

    /// The graded algebra of the system: one vertex per arc; at every green
    /// point each rotationally adjacent pair contributes one arrow from the
    /// counterclockwise-later arc to the earlier one, graded by the drop of
    /// the endpoint index; relations are the composable pairs whose three
    /// arcs bound a common region.
    pub fn induced_graded_algebra(&self) -> Result<BoundQuiverAlgebra> {
        let labels: Vec<String> = self.arcs.iter().map(GradedArc::label).collect();
        let mut arrows: Vec<Arrow> = Vec::new();
        for m in 0..=self.n {
            let mut at: Vec<usize> = (0..self.arcs.len())
                .filter(|&i| self.arcs[i].s == m || self.arcs[i].t == m)
                .collect();
            at.sort_by_key(|&i| {
                let a = &self.arcs[i];
                ccw_rank(m, if a.s == m { a.t } else { a.s }, self.n)
            });
            for pair in at.windows(2) {
                let (earlier, later) = (pair[0], pair[1]);
                let e_earlier = self.arcs[earlier].endpoint_index(m)?;
                let e_later = self.arcs[later].endpoint_index(m)?;
                arrows.push(Arrow { src: later, tgt: earlier, grade: e_earlier - e_later });
            }
        }
        let regions = self.regions();
        let mut relations = BTreeSet::new();
        for (ai, a) in arrows.iter().enumerate() {
            for (bi, b) in arrows.iter().enumerate() {
                if a.tgt != b.src {
                    continue;
                }
                let triple = [a.src, a.tgt, b.tgt];
                if regions
                    .iter()
                    .any(|(bound, _)| triple.iter().all(|v| bound.contains(v)))
                {
                    relations.insert((ai, bi));
                }
            }
        }
        let arrows_raw: Vec<(usize, usize, i64)> =
            arrows.iter().map(|a| (a.src, a.tgt, a.grade)).collect();
        build_algebra(labels, arrows_raw, relations.into_iter().collect())
    }

    /// TikZ picture: red inner polygon, blue arcs with index annotations.
    pub fn to_tikz(&self) -> String {
        let n = self.n;
        let green = |j: usize| {
            let angle =
                std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * j as f64 / (n + 1) as f64;
            (2.0 * angle.cos(), 2.0 * angle.sin())
        };
        let red = |j: usize| {
            // red point in the gap between m_j and m_{j+1}
            let angle = std::f64::consts::FRAC_PI_2
                + 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / (n + 1) as f64;
            (2.0 * angle.cos(), 2.0 * angle.sin())
        };
        let mut out =
            String::from("\\begin{tikzpicture}\n  \\draw[line width=1pt] (0,0) circle (2);\n");
        for t in 1..=n {
            let (x0, y0) = red(t - 1);
            let (x1, y1) = red(t);
            out.push_str(&format!(
                "  \\draw[red, line width=1pt] ({x0:.3},{y0:.3}) -- ({x1:.3},{y1:.3});\n"
            ));
        }
        for a in &self.arcs {
            let (x0, y0) = green(a.s);
            let (x1, y1) = green(a.t);
            out.push_str(&format!(
                "  \\draw[blue, line width=1.2pt] ({x0:.3},{y0:.3}) -- ({x1:.3},{y1:.3});\n"
            ));
            let (mx, my) = ((x0 * 0.25 + x1 * 0.75), (y0 * 0.25 + y1 * 0.75));
            let ann = match a.index_at_s {
                None => format!("{}", a.index_at_t),
                Some(z) => format!("{z},{}", a.index_at_t),
            };
            out.push_str(&format!("  \\node[cyan] at ({mx:.3},{my:.3}) {{\\tiny {ann}}};\n"));
        }
        for j in 0..=n {
            let (x, y) = green(j);
            out.push_str(&format!(
                "  \\filldraw[green!60!black] ({x:.3},{y:.3}) circle (0.1);\n"
            ));
            let (x, y) = red(j);
            out.push_str(&format!("  \\draw[red, line width=1pt] ({x:.3},{y:.3}) circle (0.07);\n"));
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}

// ---------------------------------------------------------------------------
// serde wire format

#[derive(Serialize, Deserialize)]
struct ArcWire {
    s: usize,
    t: usize,
    indices: IndexWire,
}

#[derive(Serialize, Deserialize)]
struct IndexWire {
    #[serde(skip_serializing_if = "Option::is_none")]
    a_s: Option<i64>,
    a_t: i64,
}

#[derive(Serialize, Deserialize)]
struct SystemWire {
    n: usize,
    arcs: Vec<ArcWire>,
}

impl Serialize for GradedArcSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SystemWire {
            n: self.n,
            arcs: self
                .arcs
                .iter()
                .map(|a| ArcWire {
                    s: a.s,
                    t: a.t,
                    indices: IndexWire { a_s: a.index_at_s, a_t: a.index_at_t },
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedArcSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = SystemWire::deserialize(d)?;
        let mut arcs = Vec::new();
        for a in wire.arcs {
            let arc = match a.indices.a_s {
                None => GradedArc::fan(a.t, a.indices.a_t, wire.n),
                Some(z) => {
                    let arc = GradedArc::string(a.s, a.t, z, wire.n);
                    match &arc {
                        Ok(built) if built.index_at_t != a.indices.a_t => {
                            return Err(serde::de::Error::custom(
                                "indices must differ by one along the arc",
                            ))
                        }
                        _ => arc,
                    }
                }
            }
            .map_err(serde::de::Error::custom)?;
            arcs.push(arc);
        }
        GradedArcSystem::new(wire.n, arcs).map_err(serde::de::Error::custom)
    }
}

/// All two-term silting systems of rank `n`, backtracking over the candidate
/// arcs in sorted order; the order is deterministic.
pub fn enumerate_two_term_silting(n: usize) -> Result<Vec<GradedArcSystem>> {
    let mut out = Vec::new();
    enumerate_two_term_silting_with(n, |s| out.push(s.clone()))?;
    Ok(out)
}

/// Visitor-based version of [`enumerate_two_term_silting`].
pub fn enumerate_two_term_silting_with(
    n: usize,
    mut visit: impl FnMut(&GradedArcSystem),
) -> Result<()> {
    check_rank(n)?;
    let mut candidates: Vec<GradedArc> = Vec::new();
    for t in 1..=n {
        for z in [0, 1] {
            candidates.push(GradedArc::fan(t, z, n)?);
        }
    }
    for s in 1..=n {
        for t in s + 1..=n {
            candidates.push(GradedArc::two_term_string(s, t, n)?);
        }
    }
    candidates.sort_unstable();
    fn dfs(
        n: usize,
        start: usize,
        candidates: &[GradedArc],
        chosen: &mut Vec<GradedArc>,
        visit: &mut dyn FnMut(&GradedArcSystem),
    ) {
        if chosen.len() == n {
            let system = GradedArcSystem { n, arcs: chosen.clone() };
            if system.is_admissible() {
                visit(&system);
            }
            return;
        }
        for i in start..candidates.len() {
            if candidates.len() - i < n - chosen.len() {
                break;
            }
            let c = &candidates[i];
            if chosen.iter().all(|a| compatible(a, c, n)) {
                chosen.push(*c);
                dfs(n, i + 1, candidates, chosen, visit);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::new();
    dfs(n, 0, &candidates, &mut chosen, &mut visit);
    Ok(())
}

/// Drop every arrow of nonzero grade and the relations that lose an arrow;
/// grades must be non-negative.
pub fn h0(algebra: &BoundQuiverAlgebra) -> Result<BoundQuiverAlgebra> {
    if let Some(bad) = algebra.quiver().arrows().iter().find(|a| a.grade < 0) {
        return Err(Error::NegativeGrade { grade: bad.grade });
    }
    let mut keep = Vec::new();
    let mut index_map = std::collections::BTreeMap::new();
    for (i, a) in algebra.quiver().arrows().iter().enumerate() {
        if a.grade == 0 {
            index_map.insert(i, keep.len());
            keep.push(*a);
        }
    }
    let relations: BTreeSet<(usize, usize)> = algebra
        .relations()
        .iter()
        .filter_map(|&(a, b)| Some((*index_map.get(&a)?, *index_map.get(&b)?)))
        .collect();
    let quiver = Quiver::new(algebra.quiver().vertex_labels().to_vec(), keep)?;
    BoundQuiverAlgebra::new(quiver, relations)
}
