//! Finite matrix groups given by generators.

use crate::field::GaussRat;
use crate::linalg::Matrix;

/// All products of the generators, by breadth-first closure. Stops and
/// returns `None` once more than `limit` elements have been found.
pub fn closure(generators: &[Matrix<GaussRat>], limit: usize) -> Option<Vec<Matrix<GaussRat>>> {
    let n = generators.first().map_or(0, Matrix::rows);
    let mut elements = vec![Matrix::identity(n)];
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in generators {
                let h = g.mul(s);
                if !elements.contains(&h) {
                    if elements.len() >= limit {
                        return None;
                    }
                    elements.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Some(elements)
}

/// Multiplicative order of a matrix, if at most `limit`.
pub fn element_order(g: &Matrix<GaussRat>, limit: usize) -> Option<usize> {
    let id = Matrix::identity(g.rows());
    let mut acc = g.clone();
    for k in 1..=limit {
        if acc == id {
            return Some(k);
        }
        acc = acc.mul(g);
    }
    None
}

/// Sorted list of element orders, a cheap isomorphism-class fingerprint.
pub fn order_profile(elements: &[Matrix<GaussRat>]) -> Vec<usize> {
    let mut v: Vec<usize> = elements.iter().map(|g| element_order(g, elements.len()).unwrap_or(0)).collect();
    v.sort_unstable();
    v
}
