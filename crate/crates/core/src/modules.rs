//! Interval modules over the linearly oriented type-A quiver.
//!
//! Convention ledger, fixed once and validated against the explicit
//! representation oracle in the integration tests:
//! arrows `1 → 2 → ⋯ → n`; the interval `[i, j]` is the string module
//! supported on vertices `i..=j`; projectives are `P(i) = [i, n]` and
//! injectives `I(j) = [1, j]`; a nonzero map `[a, b] → [c, d]` exists exactly
//! when `c ≤ a ≤ d ≤ b`, and the composite of two such canonical maps is
//! nonzero exactly when the source's low end does not exceed the target's
//! high end; `τ[i, j] = [i+1, j+1]` for non-projectives.

use crate::quiver::{build_algebra, BoundQuiverAlgebra};
use crate::{check_rank, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The indecomposable module `[lo, hi]` over the linear quiver of rank `ambient`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalModule {
    lo: usize,
    hi: usize,
    ambient: usize,
}

impl IntervalModule {
    pub fn new(lo: usize, hi: usize, ambient: usize) -> Result<IntervalModule> {
        if 1 <= lo && lo <= hi && hi <= ambient {
            Ok(IntervalModule { lo, hi, ambient })
        } else {
            Err(Error::InvalidInterval { lo, hi, ambient })
        }
    }

    pub fn projective(i: usize, ambient: usize) -> Result<IntervalModule> {
        IntervalModule::new(i, ambient, ambient)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_projective(&self) -> bool {
        self.hi == self.ambient
    }

    pub fn is_injective(&self) -> bool {
        self.lo == 1
    }

    pub fn support(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    pub fn label(&self) -> String {
        format!("[{},{}]", self.lo, self.hi)
    }
}

/// Dimension of `Hom(m1, m2)`, always 0 or 1 for intervals.
pub fn hom_dim(m1: IntervalModule, m2: IntervalModule) -> usize {
    assert_eq!(m1.ambient, m2.ambient, "ambient rank mismatch");
    usize::from(m2.lo <= m1.lo && m1.lo <= m2.hi && m2.hi <= m1.hi)
}

/// Is the composite of the canonical maps `a → b → c` nonzero? Both maps are
/// assumed nonzero.
pub fn composite_nonzero(a: IntervalModule, _b: IntervalModule, c: IntervalModule) -> bool {
    a.lo <= c.hi
}

/// The Auslander-Reiten translate; `None` exactly on projectives.
pub fn tau(m: IntervalModule) -> Option<IntervalModule> {
    if m.is_projective() {
        None
    } else {
        Some(IntervalModule { lo: m.lo + 1, hi: m.hi + 1, ambient: m.ambient })
    }
}

/// A basic module: a set of pairwise distinct interval summands over one rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModuleCollection {
    ambient: usize,
    summands: BTreeSet<(usize, usize)>,
}

impl ModuleCollection {
    pub fn new(ambient: usize, summands: impl IntoIterator<Item = IntervalModule>) -> Result<ModuleCollection> {
        let mut set = BTreeSet::new();
        for s in summands {
            if s.ambient != ambient {
                return Err(Error::InvalidInterval { lo: s.lo, hi: s.hi, ambient });
            }
            set.insert((s.lo, s.hi));
        }
        Ok(ModuleCollection { ambient, summands: set })
    }

    pub fn empty(ambient: usize) -> ModuleCollection {
        ModuleCollection { ambient, summands: BTreeSet::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = IntervalModule> + '_ {
        self.summands
            .iter()
            .map(|&(lo, hi)| IntervalModule { lo, hi, ambient: self.ambient })
    }

    pub fn contains(&self, m: IntervalModule) -> bool {
        self.summands.contains(&(m.lo, m.hi))
    }

    /// Union of the summand supports.
    pub fn support(&self) -> BTreeSet<usize> {
        self.summands.iter().flat_map(|&(lo, hi)| lo..=hi).collect()
    }

    /// `Hom(x, τy) = 0` for every ordered pair of summands.
    pub fn is_tau_rigid(&self) -> bool {
        let items: Vec<IntervalModule> = self.summands().collect();
        for &x in &items {
            for &y in &items {
                if let Some(t) = tau(y) {
                    if hom_dim(x, t) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// τ-rigid with as many summands as the rank.
    pub fn is_tau_tilting(&self) -> bool {
        self.len() == self.ambient && self.is_tau_rigid()
    }

    /// The bound quiver of `End(⊕ summands)`: arrows are Hom-space generators
    /// not factoring through a third summand, relations are composable arrow
    /// pairs with vanishing composite.
    pub fn endomorphism_algebra(&self) -> BoundQuiverAlgebra {
        let items: Vec<IntervalModule> = self.summands().collect();
        let k = items.len();
        let labels: Vec<String> = items.iter().map(IntervalModule::label).collect();
        let mut arrows = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || hom_dim(items[i], items[j]) == 0 {
                    continue;
                }
                let factors = (0..k).any(|m| {
                    m != i
                        && m != j
                        && hom_dim(items[i], items[m]) == 1
                        && hom_dim(items[m], items[j]) == 1
                        && composite_nonzero(items[i], items[m], items[j])
                });
                if !factors {
                    arrows.push((i, j, 0i64));
                }
            }
        }
        let mut relations = Vec::new();
        for (ai, &(src_a, tgt_a, _)) in arrows.iter().enumerate() {
            for (bi, &(src_b, tgt_b, _)) in arrows.iter().enumerate() {
                if tgt_a == src_b && !composite_nonzero(items[src_a], items[tgt_a], items[tgt_b]) {
                    relations.push((ai, bi));
                }
            }
        }
        build_algebra(labels, arrows, relations).expect("endomorphism quiver is well formed")
    }
}

/// A support τ-tilting pair: a module together with its support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SttPair {
    pub modules: ModuleCollection,
    pub support: BTreeSet<usize>,
}

impl SttPair {
    /// The pair condition: the support is exactly the union of the summand
    /// supports, and over each maximal run of consecutive support vertices
    /// the summands form a τ-tilting module of the restricted algebra.
    pub fn is_valid(&self) -> bool {
        if self.support != self.modules.support() {
            return false;
        }
        if self.modules.len() != self.support.len() {
            return false;
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &v in &self.support {
            match runs.last_mut() {
                Some((_, hi)) if *hi + 1 == v => *hi = v,
                _ => runs.push((v, v)),
            }
        }
        for (lo, hi) in runs {
            let m = hi - lo + 1;
            let restricted: Vec<IntervalModule> = self
                .modules
                .summands()
                .filter(|s| lo <= s.lo() && s.hi() <= hi)
                .map(|s| IntervalModule::new(s.lo() - lo + 1, s.hi() - lo + 1, m).expect("in run"))
                .collect();
            match ModuleCollection::new(m, restricted) {
                Ok(c) if c.is_tau_tilting() => {}
                _ => return false,
            }
        }
        true
    }
}

impl Serialize for SttPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            modules: Vec<(usize, usize)>,
            support: Vec<usize>,
        }
        Wire {
            modules: self.modules.summands.iter().copied().collect(),
            support: self.support.iter().copied().collect(),
        }
        .serialize(s)
    }
}

/// Deserializer matching [`SttPair::serialize`]; needs the ambient rank.
pub fn stt_pair_from_json(n: usize, text: &str) -> Result<SttPair> {
    #[derive(Deserialize)]
    struct Wire {
        modules: Vec<(usize, usize)>,
        support: Vec<usize>,
    }
    let wire: Wire = serde_json::from_str(text)
        .map_err(|e| Error::InvalidTriangulation(format!("bad stt pair json: {e}")))?;
    let modules = ModuleCollection::new(
        n,
        wire.modules
            .iter()
            .map(|&(lo, hi)| IntervalModule::new(lo, hi, n))
            .collect::<Result<Vec<_>>>()?,
    )?;
    Ok(SttPair { modules, support: wire.support.into_iter().collect() })
}

/// All τ-rigid collections of `m` distinct intervals over the full rank `m`
/// (equivalently the tilting modules), in lexicographic order, memoized by
/// the caller.
fn full_rank_tilting(m: usize) -> Vec<Vec<(usize, usize)>> {
    let intervals: Vec<(usize, usize)> =
        (1..=m).flat_map(|lo| (lo..=m).map(move |hi| (lo, hi))).collect();
    let compatible = |a: (usize, usize), b: (usize, usize)| -> bool {
        let ma = IntervalModule { lo: a.0, hi: a.1, ambient: m };
        let mb = IntervalModule { lo: b.0, hi: b.1, ambient: m };
        let ok_ab = tau(mb).is_none_or(|t| hom_dim(ma, t) == 0);
        let ok_ba = tau(ma).is_none_or(|t| hom_dim(mb, t) == 0);
        ok_ab && ok_ba
    };
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        start: usize,
        need: usize,
        intervals: &[(usize, usize)],
        compatible: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if need == 0 {
            out.push(stack.iter().map(|&i| intervals[i]).collect());
            return;
        }
        for i in start..intervals.len() {
            if intervals.len() - i < need {
                break;
            }
            if stack.iter().all(|&j| compatible(intervals[j], intervals[i])) {
                stack.push(i);
                dfs(i + 1, need - 1, intervals, compatible, stack, out);
                stack.pop();
            }
        }
    }
    dfs(0, m, &intervals, &compatible, &mut stack, &mut out);
    out
}

/// All support τ-tilting pairs over rank `n`, including the zero module with
/// empty support. Deterministic order: supports by ascending bitmask, then
/// collections lexicographically.
pub fn enumerate_stt(n: usize) -> Result<Vec<SttPair>> {
    check_rank(n)?;
    let mut out = Vec::new();
    enumerate_stt_with(n, |pair| out.push(pair.clone()))?;
    Ok(out)
}

/// Visitor-based version of [`enumerate_stt`]; counting does not materialize.
pub fn enumerate_stt_with(n: usize, mut visit: impl FnMut(&SttPair)) -> Result<()> {
    check_rank(n)?;
    let tilting: Vec<Vec<Vec<(usize, usize)>>> =
        (0..=n).map(|m| if m == 0 { vec![vec![]] } else { full_rank_tilting(m) }).collect();
    for mask in 0u32..(1 << n) {
        let support: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        // maximal runs of consecutive vertices
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &v in &support {
            match runs.last_mut() {
                Some((_, hi)) if *hi + 1 == v => *hi = v,
                _ => runs.push((v, v)),
            }
        }
        // cartesian product of per-run tilting modules
        let choices: Vec<&Vec<Vec<(usize, usize)>>> =
            runs.iter().map(|&(lo, hi)| &tilting[hi - lo + 1]).collect();
        let mut idx = vec![0usize; runs.len()];
        'product: loop {
            let mut summands: Vec<IntervalModule> = Vec::new();
            for (r, &(lo, _)) in runs.iter().enumerate() {
                for &(a, b) in &choices[r][idx[r]] {
                    summands.push(IntervalModule {
                        lo: lo + a - 1,
                        hi: lo + b - 1,
                        ambient: n,
                    });
                }
            }
            let pair = SttPair {
                modules: ModuleCollection::new(n, summands).expect("runs stay in range"),
                support: support.iter().copied().collect(),
            };
            visit(&pair);
            // advance the mixed-radix counter, most significant run last
            for k in (0..runs.len()).rev() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'product;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    Ok(())
}
