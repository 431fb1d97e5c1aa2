//! Counting and classification: deduplicated catalogs of tilted and silted
//! algebras, closed forms with their recurrences, and the cross-model
//! verification report.

use crate::complexes::{air_complex, collection_key, endomorphism_algebra_of_complex, hom_dim_complexes, is_tilting_complex, x_of};
use crate::derived::{enumerate_two_term_silting, h0, GradedArcSystem};
use crate::frac::Frac;
use crate::modules::enumerate_stt;
use crate::quiver::BoundQuiverAlgebra;
use crate::surface::{enumerate_triangulations, Triangulation, TriangulationClass};
use crate::{check_rank, Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Exact Catalan number `C_r`.
pub fn catalan(r: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 1..=r as u128 {
        c = c * (4 * k - 2) / (k + 1);
    }
    c
}

fn pow2(k: usize) -> u128 {
    1u128 << k
}

/// `(1+(-1)^{n-1})·2^{(n-5)/2}` as an exact rational: zero for even `n`, and
/// `2·2^{(n-5)/2}` with an integer (possibly negative) exponent for odd `n`.
fn parity_half(n: usize) -> Frac {
    if n % 2 == 1 {
        Frac::int(2) * Frac::pow2((n as i64 - 5) / 2)
    } else {
        Frac::ZERO
    }
}

/// Closed form for the hereditary count: `2^{n-2} + (1+(-1)^{n-1})·2^{(n-5)/2}`.
pub fn hta_closed(n: usize) -> Result<u128> {
    check_rank(n)?;
    let value = Frac::pow2(n as i64 - 2) + parity_half(n);
    integral(value, "hereditary tilted count")
}

fn integral(v: Frac, what: &str) -> Result<u128> {
    v.to_integer()
        .filter(|&x| x >= 0)
        .map(|x| x as u128)
        .ok_or_else(|| Error::CountMismatch { what: what.into(), detail: format!("non-integral value {v}") })
}

/// Closed form for the non-hereditary count: `C_n - 2^{n-1}`.
pub fn nhta_closed(n: usize) -> u128 {
    catalan(n) - pow2(n - 1)
}

/// Recurrence for the non-hereditary count:
/// `a(n) = 2·a(n-1) + Σ_{j=2}^{n-1} C_{j-1} C_{n-j}`, `a(1) = 0`.
pub fn nhta_recurrence(n: usize) -> u128 {
    let mut a: u128 = 0;
    for k in 2..=n {
        let conv: u128 = (2..k).map(|j| catalan(j - 1) * catalan(k - j)).sum();
        a = 2 * a + conv;
    }
    a
}

/// Closed form for the tilted count: `C_n + (1+(-1)^{n-1})·2^{(n-5)/2} - 2^{n-2}`.
pub fn ta_closed(n: usize) -> Result<u128> {
    check_rank(n)?;
    let value = Frac::int(catalan(n) as i128) + parity_half(n) - Frac::pow2(n as i64 - 2);
    integral(value, "tilted count")
}

/// Closed form for the non-connected silted count: half the off-diagonal
/// convolution of tilted counts plus, for even rank, the diagonal pairs
/// counted without order.
pub fn ncsa_closed(n: usize) -> Result<u128> {
    check_rank(n)?;
    let ta: Vec<u128> = (0..n).map(|m| if m == 0 { 0 } else { ta_closed(m).unwrap_or(0) }).collect();
    let mut off = Frac::ZERO;
    for m in 1..n {
        if m != n - m {
            off = off + Frac::int((ta[m] * ta[n - m]) as i128);
        }
    }
    let mut total = off * Frac::new(1, 2);
    if n % 2 == 0 {
        let d = Frac::int(ta[n / 2] as i128);
        total = total + d * (d + Frac::ONE) * Frac::new(1, 2);
    }
    integral(total, "non-connected silted count")
}

/// Closed form for the silted count.
pub fn sa_closed(n: usize) -> Result<u128> {
    Ok(ta_closed(n)? + ncsa_closed(n)?)
}

// ---------------------------------------------------------------------------
// enumerated counts

/// The tilted-algebra catalog: canonical forms of the algebras induced by the
/// triangulations through the extras chord, split hereditary/non-hereditary.
pub struct TiltedCatalog {
    pub hereditary: BTreeSet<Vec<u8>>,
    pub non_hereditary: BTreeSet<Vec<u8>>,
    pub tilting_triangulations: usize,
    pub hereditary_triangulations: usize,
}

impl TiltedCatalog {
    pub fn all_forms(&self) -> BTreeSet<Vec<u8>> {
        self.hereditary.union(&self.non_hereditary).cloned().collect()
    }
}

pub fn tilted_catalog(n: usize) -> Result<TiltedCatalog> {
    check_rank(n)?;
    let mut catalog = TiltedCatalog {
        hereditary: BTreeSet::new(),
        non_hereditary: BTreeSet::new(),
        tilting_triangulations: 0,
        hereditary_triangulations: 0,
    };
    let mut failure: Option<Error> = None;
    crate::surface::enumerate_triangulations_with(n, |t| {
        if failure.is_some() || !t.contains_extras_chord() {
            return;
        }
        catalog.tilting_triangulations += 1;
        match (t.induced_algebra(), t.classify()) {
            (Ok(alg), Ok(class)) => {
                let form = alg.canonical_form();
                match class {
                    TriangulationClass::Hereditary => {
                        catalog.hereditary_triangulations += 1;
                        catalog.hereditary.insert(form);
                    }
                    TriangulationClass::NonHereditary => {
                        catalog.non_hereditary.insert(form);
                    }
                }
            }
            (Err(e), _) | (_, Err(e)) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(catalog),
    }
}

/// Non-hereditary count three ways: recurrence, closed form, enumeration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TripleCount {
    pub recurrence: u128,
    pub closed: u128,
    pub enumerated: u128,
}

pub fn count_nhta(n: usize) -> Result<TripleCount> {
    let catalog = tilted_catalog(n)?;
    let triple = TripleCount {
        recurrence: nhta_recurrence(n),
        closed: nhta_closed(n),
        enumerated: catalog.non_hereditary.len() as u128,
    };
    if triple.recurrence != triple.closed || triple.closed != triple.enumerated {
        return Err(Error::CountMismatch {
            what: format!("non-hereditary tilted algebras at rank {n}"),
            detail: format!("{triple:?}"),
        });
    }
    Ok(triple)
}

/// A count computed by formula and by deduplicated enumeration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DoubleCount {
    pub closed: u128,
    pub enumerated: u128,
}

impl DoubleCount {
    fn checked(self, what: &str) -> Result<DoubleCount> {
        if self.closed != self.enumerated {
            return Err(Error::CountMismatch { what: what.into(), detail: format!("{self:?}") });
        }
        Ok(self)
    }
}

pub fn count_hta(n: usize) -> Result<DoubleCount> {
    let catalog = tilted_catalog(n)?;
    DoubleCount { closed: hta_closed(n)?, enumerated: catalog.hereditary.len() as u128 }
        .checked(&format!("hereditary tilted algebras at rank {n}"))
}

pub fn count_ta(n: usize) -> Result<DoubleCount> {
    let catalog = tilted_catalog(n)?;
    DoubleCount { closed: ta_closed(n)?, enumerated: catalog.all_forms().len() as u128 }
        .checked(&format!("tilted algebras at rank {n}"))
}

/// The silted side, enumerated from the two-term systems.
///
/// Tilting systems are recognized by the fan-index criterion of
/// [`GradedArcSystem::is_tilting_system`]; its agreement with the complex
/// oracle is one of the verification rows.
pub struct SiltedCatalog {
    pub systems: usize,
    pub non_tilting: Vec<GradedArcSystem>,
    /// canonical form of the whole degree-zero algebra per non-tilting system
    pub non_connected_forms: BTreeMap<Vec<u8>, usize>,
}

pub fn silted_catalog(n: usize) -> Result<SiltedCatalog> {
    check_rank(n)?;
    let mut catalog = SiltedCatalog {
        systems: 0,
        non_tilting: Vec::new(),
        non_connected_forms: BTreeMap::new(),
    };
    for sys in enumerate_two_term_silting(n)? {
        catalog.systems += 1;
        if !sys.is_tilting_system() {
            let algebra = h0(&sys.induced_graded_algebra()?)?;
            *catalog.non_connected_forms.entry(algebra.canonical_form()).or_insert(0) += 1;
            catalog.non_tilting.push(sys);
        }
    }
    Ok(catalog)
}

pub fn count_ncsa(n: usize) -> Result<DoubleCount> {
    let catalog = silted_catalog(n)?;
    DoubleCount {
        closed: ncsa_closed(n)?,
        enumerated: catalog.non_connected_forms.len() as u128,
    }
    .checked(&format!("non-connected silted algebras at rank {n}"))
}

pub fn count_sa(n: usize) -> Result<DoubleCount> {
    let catalog = silted_catalog(n)?;
    let tilted = tilted_catalog(n)?;
    let enumerated =
        (catalog.non_connected_forms.len() + tilted.all_forms().len()) as u128;
    DoubleCount { closed: sa_closed(n)?, enumerated }
        .checked(&format!("silted algebras at rank {n}"))
}

// ---------------------------------------------------------------------------
// count report

/// One row of the count table; every `a_*` quantity carries its closed-form
/// and enumerated values plus a match flag.
#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub triangulations: u128,
    pub tilting_triangulations: u128,
    pub stt: u128,
    pub two_term_silting: u128,
    pub non_tilting_2silt: u128,
    pub a_hta: CountPair,
    pub a_nhta: CountTripleWire,
    pub a_ta: CountPair,
    pub a_ncsa: CountPair,
    pub a_sa: CountPair,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CountPair {
    pub closed: u128,
    pub enumerated: u128,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CountTripleWire {
    pub closed: u128,
    pub recurrence: u128,
    pub enumerated: u128,
    pub matches: bool,
}

impl CountRow {
    pub fn all_match(&self) -> bool {
        self.a_hta.matches
            && self.a_nhta.matches
            && self.a_ta.matches
            && self.a_ncsa.matches
            && self.a_sa.matches
    }
}

/// The full count table for `1..=n_max`; rows are computed even when a
/// mismatch occurs, with the flag recording it.
pub fn count_report(n_max: usize) -> Result<Vec<CountRow>> {
    check_rank(n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut triangulations = 0u128;
        crate::surface::enumerate_triangulations_with(n, |_| triangulations += 1)?;
        let mut stt = 0u128;
        crate::modules::enumerate_stt_with(n, |_| stt += 1)?;
        let tilted = tilted_catalog(n)?;
        let silted = silted_catalog(n)?;
        let pair = |closed: u128, enumerated: u128| CountPair {
            closed,
            enumerated,
            matches: closed == enumerated,
        };
        let nh_closed = nhta_closed(n);
        let nh_rec = nhta_recurrence(n);
        let nh_enum = tilted.non_hereditary.len() as u128;
        rows.push(CountRow {
            n,
            triangulations,
            tilting_triangulations: tilted.tilting_triangulations as u128,
            stt,
            two_term_silting: silted.systems as u128,
            non_tilting_2silt: silted.non_tilting.len() as u128,
            a_hta: pair(hta_closed(n)?, tilted.hereditary.len() as u128),
            a_nhta: CountTripleWire {
                closed: nh_closed,
                recurrence: nh_rec,
                enumerated: nh_enum,
                matches: nh_closed == nh_rec && nh_rec == nh_enum,
            },
            a_ta: pair(ta_closed(n)?, tilted.all_forms().len() as u128),
            a_ncsa: pair(ncsa_closed(n)?, silted.non_connected_forms.len() as u128),
            a_sa: pair(
                sa_closed(n)?,
                (silted.non_connected_forms.len() + tilted.all_forms().len()) as u128,
            ),
        });
    }
    Ok(rows)
}

/// CSV rendering of the count table.
pub fn count_report_csv(rows: &[CountRow]) -> String {
    let mut out = String::from(
        "n,triangulations,tilting_triangulations,stt,two_term_silting,non_tilting_2silt,\
         a_hta_closed,a_hta_enumerated,a_hta_match,\
         a_nhta_closed,a_nhta_recurrence,a_nhta_enumerated,a_nhta_match,\
         a_ta_closed,a_ta_enumerated,a_ta_match,\
         a_ncsa_closed,a_ncsa_enumerated,a_ncsa_match,\
         a_sa_closed,a_sa_enumerated,a_sa_match\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.triangulations,
            r.tilting_triangulations,
            r.stt,
            r.two_term_silting,
            r.non_tilting_2silt,
            r.a_hta.closed,
            r.a_hta.enumerated,
            r.a_hta.matches,
            r.a_nhta.closed,
            r.a_nhta.recurrence,
            r.a_nhta.enumerated,
            r.a_nhta.matches,
            r.a_ta.closed,
            r.a_ta.enumerated,
            r.a_ta.matches,
            r.a_ncsa.closed,
            r.a_ncsa.enumerated,
            r.a_ncsa.matches,
            r.a_sa.closed,
            r.a_sa.enumerated,
            r.a_sa.matches,
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// full verification

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn check(rows: &mut Vec<CheckRow>, name: &str, n: usize, pass: bool, detail: String) {
    rows.push(CheckRow { name: name.into(), n, pass, detail });
}

/// Run every cross-model invariant for ranks `1..=n_max`.
///
/// The derived-side checks that grow quickly (dimension formula, oracle
/// comparisons) are capped at rank 6 internally; count checks run to `n_max`.
pub fn full_verify(n_max: usize) -> Result<VerifyReport> {
    check_rank(n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        verify_rank(n, &mut rows)?;
    }
    if n_max >= 4 {
        verify_rank_four_golden(&mut rows)?;
    }
    Ok(VerifyReport { n_max, rows })
}

fn verify_rank(n: usize, rows: &mut Vec<CheckRow>) -> Result<()> {
    let triangulations = enumerate_triangulations(n)?;
    let stt = enumerate_stt(n)?;
    let cn1 = catalan(n + 1);
    check(
        rows,
        "triangulation_count",
        n,
        triangulations.len() as u128 == cn1,
        format!("{} vs C_{} = {}", triangulations.len(), n + 1, cn1),
    );
    check(
        rows,
        "stt_count",
        n,
        stt.len() as u128 == cn1,
        format!("{} vs C_{} = {}", stt.len(), n + 1, cn1),
    );

    let tilting: Vec<&Triangulation> =
        triangulations.iter().filter(|t| t.contains_extras_chord()).collect();
    check(
        rows,
        "tilting_triangulation_count",
        n,
        tilting.len() as u128 == catalan(n),
        format!("{} vs C_{} = {}", tilting.len(), n, catalan(n)),
    );
    let hereditary = tilting.iter().filter(|t| t.complete_tile_count() == 0).count();
    check(
        rows,
        "hereditary_triangulation_count",
        n,
        hereditary as u128 == pow2(n - 1),
        format!("{hereditary} vs 2^{} = {}", n - 1, pow2(n - 1)),
    );

    // the geometric map hits each support τ-tilting pair exactly once
    let mut images = BTreeSet::new();
    let mut all_rigid = true;
    for t in &triangulations {
        let pair = t.module_pair();
        all_rigid &= pair.modules.len() == pair.support.len();
        all_rigid &= stt.contains(&pair);
        images.insert(pair);
    }
    check(
        rows,
        "triangulation_module_bijection",
        n,
        all_rigid && images.len() == stt.len(),
        format!("{} distinct images vs {} pairs", images.len(), stt.len()),
    );

    // every full-support pair keeps the projective-injective interval
    let full_support_keeps_extremal = stt
        .iter()
        .filter(|p| p.support.len() == n)
        .all(|p| p.modules.summands().any(|m| m.lo() == 1 && m.hi() == n));
    check(
        rows,
        "tau_tilting_contains_projective_injective",
        n,
        full_support_keeps_extremal,
        "every τ-tilting module keeps [1,n]".into(),
    );

    // geometric algebra vs endomorphism oracle, and hereditary iff gldim 1
    let mut oracle_ok = true;
    let mut gldim_ok = true;
    let mut gentle_ok = true;
    let mut forms = BTreeSet::new();
    for t in &tilting {
        let alg = t.induced_algebra()?;
        let end = t.module_pair().modules.endomorphism_algebra();
        oracle_ok &= alg.canonical_form() == end.canonical_form();
        let gd = alg.global_dimension()?;
        let class = t.classify()?;
        gldim_ok &= match class {
            TriangulationClass::Hereditary => gd <= 1,
            TriangulationClass::NonHereditary => gd >= 2,
        };
        gentle_ok &= alg.is_gentle() && alg.is_forest() && alg.is_connected();
        if class == TriangulationClass::NonHereditary {
            forms.insert(alg.canonical_form());
        }
    }
    check(rows, "induced_equals_endomorphism", n, oracle_ok, "canonical forms agree".into());
    check(rows, "classification_matches_gldim", n, gldim_ok, "complete tile iff gldim ≥ 2".into());
    check(rows, "induced_algebras_gentle_trees", n, gentle_ok, "gentle connected forests".into());
    let nh_count = tilting
        .iter()
        .filter(|t| t.complete_tile_count() > 0)
        .count();
    check(
        rows,
        "non_hereditary_injectivity",
        n,
        forms.len() == nh_count,
        format!("{} forms from {} triangulations", forms.len(), nh_count),
    );

    // section-5 counts agree three ways
    let counts_ok = count_nhta(n).is_ok() && count_hta(n).is_ok() && count_ta(n).is_ok();
    check(rows, "tilted_counts_agree", n, counts_ok, "closed = recurrence = enumerated".into());

    // derived side: caps keep the quadratic-in-objects checks quick
    let derived_cap = 6;
    let silted_counts_cap = 8;
    if n <= silted_counts_cap {
        let systems = enumerate_two_term_silting(n)?;
        check(
            rows,
            "two_term_count_matches_stt",
            n,
            systems.len() == stt.len(),
            format!("{} systems vs {} pairs", systems.len(), stt.len()),
        );
        if n <= derived_cap {
            verify_derived(n, &systems, rows)?;
        }
    }
    Ok(())
}

fn verify_derived(n: usize, systems: &[GradedArcSystem], rows: &mut Vec<CheckRow>) -> Result<()> {
    let stt = enumerate_stt(n)?;
    // the air correspondence is a bijection onto the enumerated systems
    let mut air_keys = BTreeSet::new();
    for pair in &stt {
        air_keys.insert(collection_key(&air_complex(pair)?)?);
    }
    let mut sys_keys = BTreeSet::new();
    for sys in systems {
        let complexes: Vec<_> =
            sys.arcs().iter().map(|a| x_of(a, n)).collect::<Result<Vec<_>>>()?;
        sys_keys.insert(collection_key(&complexes)?);
    }
    check(
        rows,
        "air_bijection",
        n,
        air_keys == sys_keys && air_keys.len() == stt.len(),
        format!("{} keys either way", air_keys.len()),
    );

    // dimension formula: oriented intersection counts equal Hom dimensions
    let mut dim_ok = true;
    let arcs = all_two_term_arcs(n)?;
    for a in &arcs {
        for b in &arcs {
            let xa = x_of(a, n)?;
            let xb = x_of(b, n)?;
            for d in -1..=1 {
                if hom_dim_complexes(&xa, &xb, d) != oriented_intersections(a, b, d, n) {
                    dim_ok = false;
                }
            }
        }
    }
    check(rows, "dimension_formula", n, dim_ok, "Int^d equals Hom dimension, d in -1..=1".into());

    // endpoint comparisons complementary at every shared endpoint
    let mut eq_ok = true;
    for sys in systems {
        for (i, a) in sys.arcs().iter().enumerate() {
            for b in &sys.arcs()[i + 1..] {
                let (s1, t1) = a.endpoints();
                let (s2, t2) = b.endpoints();
                for m in [s1, t1] {
                    if m == s2 || m == t2 {
                        let d = crate::derived::endpoint_comparison(a, b, m, n)?;
                        let dd = crate::derived::endpoint_comparison(b, a, m, n)?;
                        eq_ok &= d + dd == 1;
                    }
                }
            }
        }
    }
    check(rows, "endpoint_comparisons_complementary", n, eq_ok, "d + d' = 1".into());

    // tilting dichotomy, degree-zero oracle agreement, component structure
    let mut dichotomy_ok = true;
    let mut h0_ok = true;
    let mut structure_ok = true;
    let mut shod_ok = true;
    let tilted_forms: Vec<BTreeSet<Vec<u8>>> = (0..n)
        .map(|m| if m == 0 { Ok(BTreeSet::new()) } else { Ok(tilted_catalog(m)?.all_forms()) })
        .collect::<Result<Vec<_>>>()?;
    let mut connected_forms = BTreeSet::new();
    for sys in systems {
        let complexes: Vec<_> =
            sys.arcs().iter().map(|a| x_of(a, n)).collect::<Result<Vec<_>>>()?;
        let tilting = is_tilting_complex(&complexes, n)?;
        dichotomy_ok &= tilting == sys.is_tilting_system();

        let degree_zero = h0(&sys.induced_graded_algebra()?)?;
        let end = endomorphism_algebra_of_complex(&complexes, n)?;
        h0_ok &= degree_zero.canonical_form() == end.canonical_form();

        let comps = degree_zero.connected_components();
        for c in &comps {
            shod_ok &= c.global_dimension()? <= 2;
        }
        if tilting {
            structure_ok &= degree_zero.is_connected();
            connected_forms.insert(degree_zero.canonical_form());
        } else {
            structure_ok &= comps.len() == 2;
            let ranks: usize = comps.iter().map(BoundQuiverAlgebra::vertex_count).sum();
            structure_ok &= ranks == n;
            for c in &comps {
                structure_ok &= c.vertex_count() < n
                    && tilted_forms[c.vertex_count()].contains(&c.canonical_form());
            }
        }
    }
    check(rows, "tilting_iff_no_fan_drop", n, dichotomy_ok, "oracle matches fan characterization".into());
    check(rows, "h0_matches_complex_endomorphism", n, h0_ok, "canonical forms agree".into());
    check(
        rows,
        "non_tilting_components_are_smaller_tilted",
        n,
        structure_ok,
        "two components, ranks sum to n, each a smaller tilted algebra".into(),
    );
    check(rows, "global_dimension_at_most_two", n, shod_ok, "components have gldim ≤ 2".into());
    check(
        rows,
        "connected_silted_equal_tilted",
        n,
        connected_forms == tilted_catalog(n)?.all_forms(),
        "canonical form sets coincide".into(),
    );
    let counts_ok = count_ncsa(n).is_ok() && count_sa(n).is_ok();
    check(rows, "silted_counts_agree", n, counts_ok, "closed = enumerated".into());
    Ok(())
}

/// All candidate two-term arcs, used by the dimension-formula sweep.
fn all_two_term_arcs(n: usize) -> Result<Vec<crate::derived::GradedArc>> {
    let mut arcs = Vec::new();
    for t in 1..=n {
        for z in [0, 1] {
            arcs.push(crate::derived::GradedArc::fan(t, z, n)?);
        }
    }
    for s in 1..=n {
        for t in s + 1..=n {
            arcs.push(crate::derived::GradedArc::two_term_string(s, t, n)?);
        }
    }
    Ok(arcs)
}

/// Oriented intersection count `Int^d(a, b)` from the index bookkeeping: one
/// contribution per interior crossing in both directions with complementary
/// degrees, one contribution at a shared endpoint from the
/// counterclockwise-later arc only, and the parallel-copy convention for
/// equal underlying chords.
pub fn oriented_intersections(
    a: &crate::derived::GradedArc,
    b: &crate::derived::GradedArc,
    d: i64,
    n: usize,
) -> usize {
    let (sa, ta) = a.endpoints();
    let (sb, tb) = b.endpoints();
    let mut count = 0usize;
    if (sa, ta) == (sb, tb) {
        // same underlying chord: identity for the same grading, a single
        // degree-difference morphism otherwise
        let ea = a.index_at_high();
        let eb = b.index_at_high();
        return usize::from(d == ea - eb);
    }
    if a.crosses(b) {
        // both curves traverse the central region; the lower-start curve sees
        // the other with the complementary degree
        let (first, second) = if sa < sb { (a, b) } else { (b, a) };
        let hi_first = first.index_at_high();
        let hi_second = second.index_at_high();
        let d_second_first = hi_second - hi_first;
        if (first.endpoints() == (sa, ta) && d == 1 - d_second_first)
            || (second.endpoints() == (sa, ta) && d == d_second_first)
        {
            count += 1;
        }
    }
    for m in [sa, ta] {
        if m == sb || m == tb {
            let fa = if sa == m { ta } else { sa };
            let fb = if sb == m { tb } else { sb };
            let rank = |far: usize| (far + n + 1 - m) % (n + 1);
            if rank(fa) > rank(fb) {
                // a is counterclockwise-later: the boundary morphism runs a -> b
                let deg = a.endpoint_index(m).unwrap() - b.endpoint_index(m).unwrap();
                if d == deg {
                    count += 1;
                }
            }
        }
    }
    count
}

fn verify_rank_four_golden(rows: &mut Vec<CheckRow>) -> Result<()> {
    let tilted = tilted_catalog(4)?;
    check(
        rows,
        "rank_four_tilted_classes",
        4,
        tilted.hereditary.len() == 4 && tilted.non_hereditary.len() == 6,
        format!("{} hereditary + {} non-hereditary", tilted.hereditary.len(), tilted.non_hereditary.len()),
    );
    let silted = silted_catalog(4)?;
    let mut multiplicities: Vec<usize> = silted.non_connected_forms.values().copied().collect();
    multiplicities.sort_unstable();
    check(
        rows,
        "rank_four_non_tilting_systems",
        4,
        silted.non_tilting.len() == 14,
        format!("{} systems", silted.non_tilting.len()),
    );
    check(
        rows,
        "rank_four_non_connected_classes",
        4,
        multiplicities == vec![2, 2, 2, 4, 4],
        format!("multiplicities {multiplicities:?}"),
    );
    check(
        rows,
        "rank_four_silted_total",
        4,
        silted.non_connected_forms.len() + tilted.all_forms().len() == 15,
        "10 tilted + 5 non-connected".into(),
    );

    // The fourteen non-tilting rank-4 systems usually quoted for this
    // classification contain one set of arcs that fails the compatibility
    // conditions; the engine's enumeration replaces it. This row records how
    // the quoted list compares with the enumerated one, and passes when the
    // thirteen valid quoted systems all appear among the fourteen enumerated.
    let quoted = rank_four_quoted_systems();
    let mut valid_quoted = Vec::new();
    let mut invalid_quoted = 0usize;
    for arcs in quoted {
        match GradedArcSystem::new(4, arcs) {
            Ok(sys) => valid_quoted.push(sys),
            Err(_) => invalid_quoted += 1,
        }
    }
    let enumerated: BTreeSet<&GradedArcSystem> = silted.non_tilting.iter().collect();
    let all_present = valid_quoted.iter().all(|s| enumerated.contains(s));
    check(
        rows,
        "rank_four_quoted_list",
        4,
        all_present && valid_quoted.len() == 13,
        format!(
            "{} of 14 quoted systems validate and appear; {} rejected by the \
             compatibility conditions; enumeration supplies {} systems in total",
            valid_quoted.len(),
            invalid_quoted,
            silted.non_tilting.len()
        ),
    );
    Ok(())
}

/// The fourteen rank-4 arc systems as usually quoted; entry 11 fails the
/// shared-endpoint condition and is expected to be rejected.
fn rank_four_quoted_systems() -> Vec<Vec<crate::derived::GradedArc>> {
    use crate::derived::GradedArc;
    let fan = |t: usize, z: i64| GradedArc::fan(t, z, 4).expect("fan arc");
    let string = |s: usize, t: usize| GradedArc::two_term_string(s, t, 4).expect("string arc");
    vec![
        vec![fan(1, 1), fan(2, 1), fan(3, 1), fan(4, 0)],
        vec![fan(1, 1), fan(2, 0), fan(3, 0), fan(4, 0)],
        vec![fan(1, 1), fan(2, 1), fan(3, 0), fan(4, 0)],
        vec![fan(1, 1), fan(2, 0), fan(3, 0), string(3, 4)],
        vec![fan(1, 1), fan(2, 1), fan(3, 0), string(3, 4)],
        vec![string(1, 2), fan(2, 1), fan(3, 1), fan(4, 0)],
        vec![string(1, 2), fan(2, 1), fan(3, 0), fan(4, 0)],
        vec![fan(1, 1), fan(2, 0), fan(4, 0), string(2, 3)],
        vec![fan(1, 1), fan(3, 1), fan(4, 0), string(2, 3)],
        vec![fan(1, 1), fan(2, 0), string(2, 3), string(2, 4)],
        vec![fan(1, 1), fan(2, 0), string(2, 3), string(3, 4)],
        vec![fan(3, 1), fan(4, 0), string(1, 3), string(2, 3)],
        vec![fan(3, 1), fan(4, 0), string(1, 2), string(1, 3)],
        vec![fan(2, 1), fan(3, 0), string(1, 2), string(3, 4)],
    ]
}
