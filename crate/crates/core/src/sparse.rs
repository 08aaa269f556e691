//! Sparse exact linear solver used by bounded-degree ideal membership.

use std::collections::BTreeMap;

use crate::field::GaussRat;

/// One equation `Σ coeffs[c]·x_c = rhs`.
#[derive(Clone, Debug, Default)]
pub struct SparseRow {
    pub coeffs: BTreeMap<usize, GaussRat>,
    pub rhs: GaussRat,
}

fn axpy(target: &mut SparseRow, factor: &GaussRat, source: &SparseRow) {
    for (&c, v) in &source.coeffs {
        let delta = factor * v;
        let entry = target.coeffs.entry(c).or_insert_with(GaussRat::zero);
        *entry -= &delta;
        if entry.is_zero() {
            target.coeffs.remove(&c);
        }
    }
    target.rhs -= &(factor * &source.rhs);
}

/// Solves the system column by column in index order, choosing the sparsest
/// available pivot row. Free columns are set to zero, so among all solutions
/// the one returned vanishes on every non-pivot column. Returns `None` when
/// the system is inconsistent.
pub fn solve(ncols: usize, mut rows: Vec<SparseRow>) -> Option<Vec<GaussRat>> {
    rows.retain(|r| !(r.coeffs.is_empty() && r.rhs.is_zero()));
    if rows.iter().any(|r| r.coeffs.is_empty()) {
        return None;
    }
    let mut pivots: Vec<(usize, SparseRow)> = Vec::new();
    for col in 0..ncols {
        let Some(best) =
            rows.iter().enumerate().filter(|(_, r)| r.coeffs.contains_key(&col)).min_by_key(|(_, r)| r.coeffs.len()).map(|(k, _)| k)
        else {
            continue;
        };
        let mut pivot = rows.swap_remove(best);
        let inv = pivot.coeffs[&col].inv().expect("pivot is nonzero");
        for v in pivot.coeffs.values_mut() {
            *v = &*v * &inv;
        }
        pivot.rhs = &pivot.rhs * &inv;
        for r in rows.iter_mut() {
            if let Some(f) = r.coeffs.get(&col).cloned() {
                axpy(r, &f, &pivot);
            }
        }
        rows.retain(|r| !(r.coeffs.is_empty() && r.rhs.is_zero()));
        if rows.iter().any(|r| r.coeffs.is_empty()) {
            return None;
        }
        pivots.push((col, pivot));
    }
    if !rows.is_empty() {
        // every remaining row has no pivot column left; it cannot be nonzero
        return None;
    }
    let mut x = vec![GaussRat::zero(); ncols];
    for (col, row) in pivots.iter().rev() {
        let mut val = row.rhs.clone();
        for (&c, v) in &row.coeffs {
            if c != *col {
                val -= &(v * &x[c]);
            }
        }
        x[*col] = val;
    }
    Some(x)
}
