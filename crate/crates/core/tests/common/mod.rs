//! Independent oracle: interval modules as explicit matrix representations of
//! the linear quiver, with Hom spaces, compositions, the Auslander-Reiten
//! translate via the Nakayama functor, and an endomorphism-quiver
//! reconstruction computed purely by linear algebra. Nothing here reuses the
//! engine's combinatorial Hom or τ rules.

use silted::frac::Frac;
use silted::linalg::Mat;
use silted::modules::IntervalModule;
use silted::quiver::{build_algebra, BoundQuiverAlgebra};

/// A representation of `1 → 2 → ⋯ → n`: a dimension per vertex and a matrix
/// per arrow, `maps[v] : V_{v+1} ← V_v` stored as rows × cols = dim(v+1) × dim(v).
#[derive(Clone, Debug)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

pub fn interval_rep(m: &IntervalModule) -> Rep {
    let n = m.ambient();
    let dims: Vec<usize> = (1..=n).map(|v| usize::from(m.lo() <= v && v <= m.hi())).collect();
    let maps = (0..n - 1)
        .map(|i| {
            let (rows, cols) = (dims[i + 1], dims[i]);
            let mut mat = Mat::zeros(rows, cols);
            if rows == 1 && cols == 1 {
                mat[(0, 0)] = Frac::ONE;
            }
            mat
        })
        .collect();
    Rep { dims, maps }
}

/// The injective `I(j) = [1, j]`.
pub fn injective_rep(j: usize, n: usize) -> Rep {
    interval_rep(&IntervalModule::new(1, j, n).unwrap())
}

/// A homomorphism as one matrix per vertex, `phi[v] : N_v ← M_v`.
pub type RepMap = Vec<Mat>;

/// Basis of `Hom(m, n)` by solving the intertwining equations.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<RepMap> {
    let verts = m.dims.len();
    // unknown layout: per vertex, row-major entries of phi[v]
    let mut offsets = vec![0usize; verts + 1];
    for v in 0..verts {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let total = offsets[verts];
    if total == 0 {
        return Vec::new();
    }
    let slot = |v: usize, r: usize, c: usize, mdims: &[usize]| offsets[v] + r * mdims[v] + c;
    let mut rows: Vec<Vec<Frac>> = Vec::new();
    for a in 0..verts - 1 {
        // phi[a+1] ∘ M_a  -  N_a ∘ phi[a]  = 0, an equation per (row of N_{a+1}, col of M_a)
        for r in 0..n.dims[a + 1] {
            for c in 0..m.dims[a] {
                let mut row = vec![Frac::ZERO; total];
                for k in 0..m.dims[a + 1] {
                    let coeff = m.maps[a][(k, c)];
                    if !coeff.is_zero() {
                        let s = slot(a + 1, r, k, &m.dims);
                        row[s] = row[s] + coeff;
                    }
                }
                for k in 0..n.dims[a] {
                    let coeff = n.maps[a][(r, k)];
                    if !coeff.is_zero() {
                        let s = slot(a, k, c, &m.dims);
                        row[s] = row[s] - coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        Mat::zeros(1, total).nullspace()
    } else {
        Mat::from_rows(rows).nullspace()
    };
    solutions
        .into_iter()
        .map(|vector| {
            (0..verts)
                .map(|v| {
                    let mut mat = Mat::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            mat[(r, c)] = vector[slot(v, r, c, &m.dims)];
                        }
                    }
                    mat
                })
                .collect()
        })
        .collect()
}

pub fn hom_dim_rep(m: &Rep, n: &Rep) -> usize {
    hom_basis(m, n).len()
}

pub fn compose_maps(g: &RepMap, f: &RepMap) -> RepMap {
    g.iter().zip(f).map(|(gm, fm)| gm.matmul(fm)).collect()
}

pub fn map_is_zero(f: &RepMap) -> bool {
    f.iter().all(|mat| {
        (0..mat.rows).all(|r| (0..mat.cols).all(|c| mat[(r, c)].is_zero()))
    })
}

/// The AR translate of a non-projective interval, via the Nakayama functor on
/// the minimal projective presentation `P(hi+1) → P(lo)`: the kernel of the
/// induced map `I(hi+1) → I(lo)`, identified by its dimension vector.
pub fn tau_oracle(m: &IntervalModule) -> Option<IntervalModule> {
    let n = m.ambient();
    if m.hi() == n {
        return None;
    }
    let src = injective_rep(m.hi() + 1, n);
    let tgt = injective_rep(m.lo(), n);
    let basis = hom_basis(&src, &tgt);
    assert_eq!(basis.len(), 1, "the induced injective map is unique up to scalar");
    let phi = &basis[0];
    // pointwise kernel dimensions
    let kernel_dims: Vec<usize> = (0..n)
        .map(|v| {
            if src.dims[v] == 0 {
                0
            } else {
                phi[v].nullspace().len()
            }
        })
        .collect();
    // identify the interval from its dimension vector
    let lo = kernel_dims.iter().position(|&d| d == 1)? + 1;
    let hi = kernel_dims.iter().rposition(|&d| d == 1)? + 1;
    assert!(
        kernel_dims.iter().enumerate().all(|(v, &d)| (d == 1) == (lo <= v + 1 && v + 1 <= hi)),
        "kernel of an injective map between intervals is an interval"
    );
    Some(IntervalModule::new(lo, hi, n).unwrap())
}

/// Endomorphism quiver reconstructed from the representation oracle alone:
/// arrows are Hom generators whose every two-step composite vanishes,
/// relations the arrow pairs composing to zero.
pub fn endomorphism_oracle(items: &[IntervalModule]) -> BoundQuiverAlgebra {
    let reps: Vec<Rep> = items.iter().map(interval_rep).collect();
    let k = items.len();
    let mut maps: Vec<Vec<Option<RepMap>>> = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut basis = hom_basis(&reps[i], &reps[j]);
            assert!(basis.len() <= 1, "interval Hom spaces are at most one-dimensional");
            if let Some(f) = basis.pop() {
                maps[i][j] = Some(f);
            }
        }
    }
    let labels: Vec<String> = items.iter().map(IntervalModule::label).collect();
    let mut arrows = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || maps[i][j].is_none() {
                continue;
            }
            let factors = (0..k).any(|m| {
                m != i
                    && m != j
                    && maps[i][m].is_some()
                    && maps[m][j].is_some()
                    && !map_is_zero(&compose_maps(
                        maps[m][j].as_ref().unwrap(),
                        maps[i][m].as_ref().unwrap(),
                    ))
            });
            if !factors {
                arrows.push((i, j, 0i64));
            }
        }
    }
    let mut relations = Vec::new();
    for (ai, &(src_a, mid, _)) in arrows.iter().enumerate() {
        for (bi, &(src_b, tgt_b, _)) in arrows.iter().enumerate() {
            if mid == src_b
                && map_is_zero(&compose_maps(
                    maps[mid][tgt_b].as_ref().unwrap(),
                    maps[src_a][mid].as_ref().unwrap(),
                ))
            {
                relations.push((ai, bi));
            }
        }
    }
    build_algebra(labels, arrows, relations).unwrap()
}

/// Every interval module over rank `n`.
pub fn all_intervals(n: usize) -> Vec<IntervalModule> {
    (1..=n)
        .flat_map(|lo| (lo..=n).map(move |hi| IntervalModule::new(lo, hi, n).unwrap()))
        .collect()
}
