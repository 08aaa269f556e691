//! The two singular surfaces of `T`, both isomorphic to the cone
//! `Σaᵢ² = 0`: `XI` (`u = 0`) and `DELTA` (`uᵀu = −4Z₁²`, i.e. `u = ±i·a`).

use std::fmt;

use serde::Serialize;

use super::wreath::{wreath_mu, WreathPoint};
use super::{au_symbols, au_vars, g1, g2, on_variety, outer, slice_matrix_from_au, z1, SlicePoint};
use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::linalg::{Matrix, Subspace};
use crate::orbits::{jordan_type, JordanType};
use crate::par::Exec;
use crate::poly::{MultiPoly, VarSet};
use crate::proof::{ProofReport, Tally};
use crate::sample::Sampler;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Component {
    Origin,
    Delta,
    Xi,
    Smooth,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Component::Origin => "ORIGIN",
            Component::Delta => "DELTA",
            Component::Xi => "XI",
            Component::Smooth => "SMOOTH",
        };
        f.write_str(s)
    }
}

impl Component {
    /// Jordan type of the slice matrix at a point of the component other
    /// than the origin.
    pub fn generic_jordan_type(self) -> JordanType {
        let parts = match self {
            Component::Origin => vec![2, 2, 2],
            Component::Delta => vec![3, 3],
            Component::Xi => vec![4, 1, 1],
            Component::Smooth => vec![4, 2],
        };
        JordanType::new(parts).expect("positive parts")
    }
}

fn is_zero3(v: &[GaussRat; 3]) -> bool {
    v.iter().all(GaussRat::is_zero)
}

pub fn singular_component(p: &SlicePoint) -> Component {
    let (a, u) = (p.a(), p.u());
    let on_cone = super::sum_of_squares(a).is_zero();
    if is_zero3(a) && is_zero3(u) {
        Component::Origin
    } else if on_cone && is_zero3(u) {
        Component::Xi
    } else if on_cone && outer(u) == z1(a).mul(&z1(a)).scale(&GaussRat::from_int(-4)) {
        Component::Delta
    } else {
        Component::Smooth
    }
}

/// Classification of an arbitrary pair, rejecting points off `T`.
pub fn classify(a: &[GaussRat; 3], u: &[GaussRat; 3]) -> Result<Component> {
    if !on_variety(a, u) {
        return Err(Error::OffVariety);
    }
    Ok(singular_component(&SlicePoint::new(a.clone(), u.clone())?))
}

/// `a(s, t) = (i(s² + t²), s² − t², 2st)`, a parametrization of the cone
/// `Σaᵢ² = 0` by ℂ², two-to-one off the origin.
pub fn cone_point(s: &GaussRat, t: &GaussRat) -> [GaussRat; 3] {
    let (s2, t2) = (s * s, t * t);
    [&GaussRat::i() * &(&s2 + &t2), &s2 - &t2, &GaussRat::from_int(2) * &(s * t)]
}

fn cone_symbolic(vars: &VarSet) -> [MultiPoly; 3] {
    let s = MultiPoly::var_at(vars, 0);
    let t = MultiPoly::var_at(vars, 1);
    let (s2, t2) = (s.pow(2), t.pow(2));
    [(&s2 + &t2).scale(&GaussRat::i()), &s2 - &t2, (&s * &t).scale(&GaussRat::from_int(2))]
}

/// Rank of the Jacobian of `(g₁, g₂)` on the cover ℂ⁶ at `(a, u)`.
pub fn jacobian_rank(a: &[GaussRat; 3], u: &[GaussRat; 3]) -> usize {
    jacobian(a, u).rank()
}

fn jacobian(a: &[GaussRat; 3], u: &[GaussRat; 3]) -> Matrix<GaussRat> {
    let vars = au_vars();
    let (sa, su) = au_symbols(&vars);
    let point: Vec<GaussRat> = a.iter().chain(u.iter()).cloned().collect();
    let gens = [g1(&sa, &su), g2(&sa, &su)];
    Matrix::from_fn(2, 6, |i, k| gens[i].derivative(k).eval(&point).expect("six coordinates"))
}

/// Singularity of `T = V/ℤ₂` at the image of `(a, u) ∈ V`, `V` the cover
/// surface in ℂ⁶. Either `V` is singular there (Jacobian rank below 2), or
/// the point is fixed by `u ↦ −u` and the involution acts on the tangent
/// plane of `V` with a `−1`-eigenspace of dimension at least 2, so that it is
/// not a reflection.
pub fn quotient_singular(p: &SlicePoint) -> bool {
    let (a, u) = (p.a(), p.u());
    let jac = jacobian(a, u);
    if jac.rank() < 2 {
        return true;
    }
    if !is_zero3(u) {
        return false;
    }
    let tangent = Subspace::kernel(&jac);
    let vertical = Subspace::span(6, &(3..6).map(|k| crate::linalg::unit_vector(6, k)).collect::<Vec<_>>()).expect("unit vectors");
    tangent.intersect(&vertical).map(|s| s.dim() >= 2).unwrap_or(false)
}

fn nonzero_pair(s: &mut Sampler) -> (GaussRat, GaussRat) {
    (s.nonzero_rational(), s.nonzero_rational())
}

/// Point of `T` of the requested kind, drawn from stream `(seed, k)`.
fn sample_point(kind: Component, seed: u64, k: u64) -> Result<SlicePoint> {
    let mut s = Sampler::new(seed, k);
    match kind {
        Component::Origin => Ok(SlicePoint::origin()),
        Component::Xi => {
            let (x, y) = nonzero_pair(&mut s);
            let a = cone_point(&x, &y);
            SlicePoint::new(a, [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()])
        }
        Component::Delta => {
            let (x, y) = nonzero_pair(&mut s);
            let a = cone_point(&x, &y);
            let sign = if s.coin() { GaussRat::i() } else { -GaussRat::i() };
            let u = [&sign * &a[0], &sign * &a[1], &sign * &a[2]];
            SlicePoint::new(a, u)
        }
        Component::Smooth => {
            for _ in 0..64 {
                let q = WreathPoint::new([0; 4].map(|_| s.nonzero_rational()));
                let (a, u) = wreath_mu(&q);
                let p = SlicePoint::new(a, u)?;
                if singular_component(&p) == Component::Smooth {
                    return Ok(p);
                }
            }
            Err(Error::Internal("no smooth point drawn".into()))
        }
    }
}

/// Symbolic identities on the two singular families, plus the Jacobian
/// criterion at sampled points.
pub fn verify_singular_loci_symbolic(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let mut report = ProofReport::new("singular locus");
    let st = VarSet::new(["s", "t"])?;
    let a = cone_symbolic(&st);
    report.push_zero("sum a(s,t)_i^2 = 0", &super::sum_of_squares(&a));

    let zero = MultiPoly::zero(&st);
    let xi = slice_matrix_from_au(&a, &[zero.clone(), zero.clone(), zero]);
    report.push_zero_matrix("XI family: A^4 = 0", &xi.pow(4));
    report.push("XI family: A^2 != 0", !xi.pow(2).is_zero(), "A^2 has a nonzero entry");

    let u = a.clone().map(|p| p.scale(&GaussRat::i()));
    let z = z1(&a);
    let delta_eq = outer(&u).add(&z.mul(&z).scale(&MultiPoly::constant(&st, GaussRat::from_int(4))));
    report.push_zero_matrix("u = i*a(s,t) solves u^T u = -4 Z1^2", &delta_eq);
    report.push_zero_matrix("DELTA family: A^3 = 0", &slice_matrix_from_au(&a, &u).pow(3));

    let per_kind = samples.max(1);
    let smooth = exec.map_range(per_kind, |k| sample_point(Component::Smooth, seed, k as u64));
    let singular = exec.map_range(per_kind, |k| {
        let kind = if k % 2 == 0 { Component::Delta } else { Component::Xi };
        sample_point(kind, seed, (per_kind + k) as u64).map(|p| (kind, p))
    });
    let smooth: Vec<SlicePoint> = smooth.into_iter().collect::<Result<_>>()?;
    let singular: Vec<(Component, SlicePoint)> = singular.into_iter().collect::<Result<_>>()?;

    let describe = |p: &SlicePoint| format!("a = {:?}, u = {:?}, rank {}", p.a(), p.u(), jacobian_rank(p.a(), p.u()));
    Tally::collect(smooth.iter().map(|p| (jacobian_rank(p.a(), p.u()) == 2, describe(p))))
        .push_into(&mut report, "cover Jacobian of (g1, g2) has rank 2 at SMOOTH points");
    let on = |c: Component| singular.iter().filter(move |(k, _)| *k == c).map(|(_, p)| p);
    Tally::collect(on(Component::Delta).map(|p| (jacobian_rank(p.a(), p.u()) < 2, describe(p))))
        .push_into(&mut report, "cover Jacobian of (g1, g2) has rank < 2 at DELTA points");
    Tally::collect(on(Component::Xi).map(|p| (jacobian_rank(p.a(), p.u()) == 2, describe(p))))
        .push_into(&mut report, "cover Jacobian of (g1, g2) has rank 2 at XI points (cover smooth, quotient singular)");
    let verdicts = smooth
        .iter()
        .map(|p| (!quotient_singular(p), describe(p)))
        .chain(singular.iter().map(|(_, p)| (quotient_singular(p), describe(p))));
    Tally::collect(verdicts).push_into(&mut report, "quotient singularity test flags exactly the DELTA and XI points");
    report
        .note("XI is the image of the fixed locus u = 0 of u -> -u; the cover is smooth there and the singularity comes from the quotient");
    Ok(report)
}

/// Compares the component of sampled points with the Jordan type of their
/// slice matrix. Points come from the cone parametrization and from the
/// images of generic and reflection-fixed points of ℂ⁴ under `μ`.
pub fn classification_check(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let mut report = ProofReport::new("component classification");
    let outcomes = exec.map_range(samples, |k| -> Result<(bool, String)> {
        let mut s = Sampler::new(seed, k as u64);
        let (expected, p) = match k % 5 {
            _ if k == 0 => (Component::Origin, SlicePoint::origin()),
            0 => (Component::Smooth, sample_point(Component::Smooth, seed, k as u64)?),
            1 => {
                let (x1, x2) = nonzero_pair(&mut s);
                let q = WreathPoint::new([x1.clone(), x2.clone(), x1, x2]);
                let (a, u) = wreath_mu(&q);
                (Component::Delta, SlicePoint::new(a, u)?)
            }
            2 => {
                let (y1, y2) = nonzero_pair(&mut s);
                let q = WreathPoint::new([GaussRat::zero(), GaussRat::zero(), y1, y2]);
                let (a, u) = wreath_mu(&q);
                (Component::Xi, SlicePoint::new(a, u)?)
            }
            3 => (Component::Delta, sample_point(Component::Delta, seed, k as u64)?),
            _ => (Component::Xi, sample_point(Component::Xi, seed, k as u64)?),
        };
        let got = singular_component(&p);
        let jt = jordan_type(&p.matrix())?;
        let ok = got == expected && jt == got.generic_jordan_type();
        Ok((ok, format!("a = {:?}, u = {:?}: {got}, Jordan type {jt}", p.a(), p.u())))
    });
    let outcomes: Vec<(bool, String)> = outcomes.into_iter().collect::<Result<_>>()?;
    Tally::collect(outcomes).push_into(&mut report, "component matches Jordan type");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn zero3() -> [GaussRat; 3] {
        [g(0), g(0), g(0)]
    }

    #[test]
    fn named_points() {
        let a = [g(1), GaussRat::i(), g(0)];
        let xi = SlicePoint::new(a.clone(), zero3()).unwrap();
        assert_eq!(singular_component(&xi), Component::Xi);
        let m = xi.matrix();
        assert!(m.pow(4).is_zero());
        assert!(!m.pow(2).is_zero());
        assert_eq!(m.rank(), 3);

        let u = [GaussRat::i(), g(-1), g(0)];
        let delta = SlicePoint::new(a, u).unwrap();
        assert_eq!(singular_component(&delta), Component::Delta);
        assert!(delta.matrix().pow(3).is_zero());
        assert_eq!(delta.matrix().rank(), 4);

        let smooth = SlicePoint::new([g(1), g(0), g(0)], [g(0), g(1), g(0)]).unwrap();
        assert_eq!(singular_component(&smooth), Component::Smooth);
        assert_eq!(jordan_type(&smooth.matrix()).unwrap().to_string(), "[4,2]");
        assert_eq!(singular_component(&SlicePoint::origin()), Component::Origin);
        assert_eq!(classify(&[g(1), g(0), g(0)], &zero3()), Err(Error::OffVariety));
    }

    #[test]
    fn jacobian_ranks() {
        let a = [g(1), GaussRat::i(), g(0)];
        assert_eq!(jacobian_rank(&a, &zero3()), 2);
        assert_eq!(jacobian_rank(&a, &[GaussRat::i(), g(-1), g(0)]), 1);
        assert_eq!(jacobian_rank(&zero3(), &zero3()), 0);
        assert_eq!(jacobian_rank(&[g(1), g(0), g(0)], &[g(0), g(1), g(0)]), 2);
        assert!(quotient_singular(&SlicePoint::new(a, zero3()).unwrap()));
        assert!(!quotient_singular(&SlicePoint::new([g(1), g(0), g(0)], [g(0), g(1), g(0)]).unwrap()));
    }

    #[test]
    fn cone_parametrization() {
        let a = cone_point(&g(2), &GaussRat::frac(1, 3));
        assert!(super::super::sum_of_squares(&a).is_zero());
    }

    #[test]
    fn reports_pass() {
        let r = verify_singular_loci_symbolic(20, 3, Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
        let r = classification_check(60, 3, Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
