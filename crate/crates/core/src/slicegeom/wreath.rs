//! `T` as the quotient of ℂ⁴ by the dihedral group `H = ⟨σ, τ⟩` of order 8.

use std::collections::{HashMap, HashSet};

use super::{canonical_sign, g1, g2};
use crate::error::Result;
use crate::field::GaussRat;
use crate::group::{closure, order_profile};
use crate::linalg::{Matrix, Scalar};
use crate::par::Exec;
use crate::poly::{MultiPoly, VarSet};
use crate::proof::{ProofReport, Tally};
use crate::sample::Sampler;

/// Coordinates `(x₁, x₂, y₁, y₂)` on ℂ⁴.
pub const XY_VARS: [&str; 4] = ["x1", "x2", "y1", "y2"];

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathPoint {
    pub q: [GaussRat; 4],
}

impl WreathPoint {
    pub fn new(q: [GaussRat; 4]) -> Self {
        WreathPoint { q }
    }

    pub fn apply(&self, h: &Matrix<GaussRat>) -> WreathPoint {
        let v = h.apply(&self.q);
        WreathPoint { q: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()] }
    }
}

/// The six invariants `(a, u)` of a point of ℂ⁴, over any scalar ring.
fn mu<T: Scalar>(q: &[T; 4]) -> ([T; 3], [T; 3]) {
    let [x1, x2, y1, y2] = q;
    let c = |n: i64, d: i64| x1.constant_like(&GaussRat::frac(n, d));
    let ci = |n: i64, d: i64| x1.constant_like(&(&GaussRat::frac(n, d) * &GaussRat::i()));
    let sq = |v: &T| v.times(v);
    let p = sq(x1).plus(&sq(y1));
    let r = sq(x2).plus(&sq(y2));
    let a1 = ci(-1, 2).times(&p.plus(&r));
    let a2 = c(1, 2).times(&p.minus(&r));
    let a3 = x1.times(x2).plus(&y1.times(y2));
    let u1 = x1.times(y1).plus(&x2.times(y2));
    let u2 = ci(1, 1).times(&x1.times(y1).minus(&x2.times(y2)));
    let u3 = ci(1, 1).times(&x1.times(y2).plus(&x2.times(y1)));
    ([a1, a2, a3], [u1, u2, u3])
}

pub fn wreath_mu(p: &WreathPoint) -> ([GaussRat; 3], [GaussRat; 3]) {
    mu(&p.q)
}

/// `μ` over the polynomial ring in `x₁, x₂, y₁, y₂`.
pub fn wreath_mu_symbolic() -> (VarSet, [MultiPoly; 3], [MultiPoly; 3]) {
    let vars = VarSet::new(XY_VARS).expect("distinct names");
    let q = [0, 1, 2, 3].map(|k| MultiPoly::var_at(&vars, k));
    let (a, u) = mu(&q);
    (vars, a, u)
}

fn permutation_with_signs(images: [(usize, i64); 4]) -> Matrix<GaussRat> {
    let mut m = Matrix::zeros(4, 4);
    for (col, (row, sign)) in images.into_iter().enumerate() {
        m.set(row, col, GaussRat::from_int(sign));
    }
    m
}

/// `σ(x, y) = (y, x)` and `τ(x, y) = (−x, y)` as matrices acting on column
/// vectors `(x₁, x₂, y₁, y₂)`.
pub fn wreath_generators() -> [Matrix<GaussRat>; 2] {
    let sigma = permutation_with_signs([(2, 1), (3, 1), (0, 1), (1, 1)]);
    let tau = permutation_with_signs([(0, -1), (1, -1), (2, 1), (3, 1)]);
    [sigma, tau]
}

/// Gram matrix of `dx₁∧dx₂ + dy₁∧dy₂`.
pub fn wreath_form() -> Matrix<GaussRat> {
    Matrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]])
}

pub fn wreath_group() -> Vec<Matrix<GaussRat>> {
    closure(&wreath_generators(), 64).expect("the group is finite")
}

/// Substitutes a linear map of ℂ⁴ into polynomials in `x₁, x₂, y₁, y₂`.
fn pull_back(p: &MultiPoly, h: &Matrix<GaussRat>, vars: &VarSet) -> Result<MultiPoly> {
    let xs: Vec<MultiPoly> = (0..4).map(|k| MultiPoly::var_at(vars, k)).collect();
    let mut assignment = HashMap::new();
    for (i, name) in XY_VARS.iter().enumerate() {
        let image = (0..4).fold(MultiPoly::zero(vars), |acc, j| &acc + &xs[j].scale(h.get(i, j)));
        assignment.insert(name.to_string(), image);
    }
    p.substitute(vars, &assignment)
}

/// Checks that `μ` lands in `T`, is `H`-equivariant for `u ↦ −u`, that `H`
/// is dihedral of order 8 and symplectic, and that generic fibres of `μ` over
/// the cover are `H`-orbits mapping onto `{(a, ±u)}`.
pub fn verify_wreath_iso(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let mut report = ProofReport::new("wreath product quotient");
    let (vars, a, u) = wreath_mu_symbolic();
    report.push_zero("g1(mu) = 0", &g1(&a, &u));
    report.push_zero("g2(mu) = 0", &g2(&a, &u));

    let [sigma, tau] = wreath_generators();
    for (name, h, flip) in [("sigma", &sigma, false), ("tau", &tau, true)] {
        let mut offending = None;
        for (k, p) in a.iter().chain(u.iter()).enumerate() {
            let pulled = pull_back(p, h, &vars)?;
            let expected = if flip && k >= 3 { -p } else { p.clone() };
            if pulled != expected && offending.is_none() {
                offending = Some(format!("{} o {name} - expected = {}", super::AU_VARS[k], &pulled - &expected));
            }
        }
        let label = if flip { "mu o tau = (a, -u)" } else { "mu o sigma = mu" };
        match offending {
            None => report.push(label, true, "all six components agree as polynomials"),
            Some(w) => report.push(label, false, w),
        }
    }

    let group = wreath_group();
    report.push("|H| = 8", group.len() == 8, format!("closure has {} elements", group.len()));
    let omega = wreath_form();
    let symplectic = group.iter().all(|h| h.transpose().mul(&omega).mul(h) == omega);
    report.push("H preserves dx1^dx2 + dy1^dy2", symplectic, format!("form {omega}"));
    let profile = order_profile(&group);
    let dihedral = vec![1, 2, 2, 2, 2, 2, 4, 4];
    report.push("H is dihedral of order 8", profile == dihedral, format!("element orders {profile:?}"));

    let outcomes = exec.map_range(samples, |k| {
        let mut s = Sampler::new(seed, k as u64);
        let p = WreathPoint::new([s.nonzero_rational(), s.nonzero_rational(), s.nonzero_rational(), s.nonzero_rational()]);
        let orbit: HashSet<WreathPoint> = group.iter().map(|h| p.apply(h)).collect();
        let images: HashSet<([GaussRat; 3], [GaussRat; 3])> = orbit.iter().map(wreath_mu).collect();
        let (pa, pu) = wreath_mu(&p);
        let minus_u = [-&pu[0], -&pu[1], -&pu[2]];
        let expected: HashSet<_> = [(pa.clone(), pu.clone()), (pa.clone(), minus_u)].into_iter().collect();
        let generic = !canonical_sign(&pu).iter().all(GaussRat::is_zero);
        let ok = orbit.len() == 8 && images == expected && (!generic || images.len() == 2);
        (ok, format!("q = {:?}: orbit size {}, image size {}", p.q, orbit.len(), images.len()))
    });
    Tally::collect(outcomes).push_into(&mut report, "generic H-orbits have 8 points and two images (a, u), (a, -u)");
    Ok(report)
}
