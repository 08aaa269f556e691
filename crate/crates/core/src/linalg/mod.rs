//! Exact dense linear algebra over [`GaussRat`] and [`MultiPoly`] entries.

mod matrix;
mod subspace;

pub use matrix::{determinant, minor_vanishing, Matrix};
pub use subspace::{perp_omega, Subspace};

use std::fmt::Debug;

use crate::field::GaussRat;
use crate::poly::MultiPoly;

/// Commutative ring operations needed by the generic matrix code.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// The scalar `c` embedded in the same ring as `self`.
    fn constant_like(&self, c: &GaussRat) -> Self;
}

impl Scalar for GaussRat {
    fn zero_like(&self) -> Self {
        GaussRat::zero()
    }
    fn one_like(&self) -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn constant_like(&self, c: &GaussRat) -> Self {
        c.clone()
    }
}

impl Scalar for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn constant_like(&self, c: &GaussRat) -> Self {
        MultiPoly::constant(self.vars(), c.clone())
    }
}

/// Standard split symplectic Gram matrix `[[0, I], [-I, 0]]` of size `2n`,
/// i.e. `ω = Σ e_i* ∧ e_{i+n}*`.
pub fn j_split(n: usize) -> Matrix<GaussRat> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            GaussRat::one()
        } else if i == j + n {
            GaussRat::from_int(-1)
        } else {
            GaussRat::zero()
        }
    })
}

/// Unit vector `e_k` (zero-based) in dimension `dim`.
pub fn unit_vector(dim: usize, k: usize) -> Vec<GaussRat> {
    (0..dim).map(|j| if j == k { GaussRat::one() } else { GaussRat::zero() }).collect()
}

pub fn dot(u: &[GaussRat], v: &[GaussRat]) -> GaussRat {
    u.iter().zip(v).fold(GaussRat::zero(), |acc, (a, b)| acc + a * b)
}
