use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::linalg::Matrix;

/// Linear subspace of `ℚ(i)^n`, stored as the reduced row-echelon basis so
/// that equal subspaces are structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix<GaussRat>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// Span of the given vectors (dependent or zero vectors allowed).
    pub fn span(ambient: usize, vectors: &[Vec<GaussRat>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {ambient}", v.len())));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        Ok(Self::from_row_space(&m))
    }

    /// Row space of `m`.
    pub fn from_row_space(m: &Matrix<GaussRat>) -> Self {
        let (r, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis: r.block(0, 0, pivots.len(), m.cols()) }
    }

    /// Right null space `{x : Mx = 0}`.
    pub fn kernel(m: &Matrix<GaussRat>) -> Self {
        let n = m.cols();
        let (r, pivots) = m.rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<GaussRat>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![GaussRat::zero(); n];
                v[f] = GaussRat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect();
        Self::span(n, &vectors).expect("kernel vectors have the ambient length")
    }

    /// Column space of `m`.
    pub fn image_of(m: &Matrix<GaussRat>) -> Self {
        Self::from_row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<GaussRat> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<GaussRat>> {
        self.basis.to_rows()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("ambient {} vs {}", self.ambient, other.ambient)))
        }
    }

    /// Row vectors `a` with `a·v = 0` for all `v` in the subspace.
    fn annihilator(&self) -> Self {
        if self.dim() == 0 {
            return Self::full(self.ambient);
        }
        Self::kernel(&self.basis)
    }

    fn stacked(&self, other: &Subspace) -> Vec<Vec<GaussRat>> {
        let mut v = self.basis_vectors();
        v.extend(other.basis_vectors());
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self> {
        self.check(other)?;
        Self::span(self.ambient, &self.stacked(other))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Self> {
        self.check(other)?;
        let constraints = self.annihilator().stacked(&other.annihilator());
        if constraints.is_empty() {
            return Ok(Self::full(self.ambient));
        }
        Ok(Self::kernel(&Matrix::from_rows(constraints)?))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn contains_vector(&self, v: &[GaussRat]) -> Result<bool> {
        self.contains(&Self::span(self.ambient, &[v.to_vec()])?)
    }

    /// `{M v : v ∈ self}`.
    pub fn image(&self, m: &Matrix<GaussRat>) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!("{}-column map on dimension {}", m.cols(), self.ambient)));
        }
        let vecs: Vec<Vec<GaussRat>> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        if vecs.is_empty() {
            return Ok(Self::zero(m.rows()));
        }
        Self::span(m.rows(), &vecs)
    }

    /// `{x : M x ∈ self}`.
    pub fn preimage(&self, m: &Matrix<GaussRat>) -> Result<Self> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch(format!("{}-row map into dimension {}", m.rows(), self.ambient)));
        }
        let ann = self.annihilator();
        if ann.dim() == 0 {
            return Ok(Self::full(m.cols()));
        }
        Ok(Self::kernel(&ann.basis.mul(m)))
    }
}

/// Orthogonal complement `{w : vᵀ J w = 0 ∀ v ∈ V}` under the symplectic
/// Gram matrix `J`.
pub fn perp_omega(v: &Subspace, j: &Matrix<GaussRat>) -> Result<Subspace> {
    if !j.is_square() || j.rows() != v.ambient_dim() {
        return Err(Error::DimensionMismatch("form size differs from the ambient dimension".into()));
    }
    if j.transpose() != j.neg() {
        return Err(Error::NotAntisymmetric);
    }
    if j.rank() != j.rows() {
        return Err(Error::NotInvertible);
    }
    if v.dim() == 0 {
        return Ok(Subspace::full(v.ambient_dim()));
    }
    Ok(Subspace::kernel(&v.basis().mul(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{j_split, unit_vector};

    fn e(k: usize) -> Vec<GaussRat> {
        unit_vector(6, k - 1)
    }

    fn span(vs: &[Vec<GaussRat>]) -> Subspace {
        Subspace::span(6, vs).unwrap()
    }

    fn x0() -> Matrix<GaussRat> {
        let z = Matrix::zeros(3, 3);
        Matrix::from_blocks(&z, &Matrix::identity(3), &z, &z).unwrap()
    }

    #[test]
    fn kernel_and_image_of_x0_are_k() {
        let k = span(&[e(1), e(2), e(3)]);
        assert_eq!(Subspace::kernel(&x0()), k);
        assert_eq!(Subspace::full(6).image(&x0()).unwrap(), k);
        assert_eq!(Subspace::image_of(&x0()), k);
        assert_eq!(Subspace::kernel(&Matrix::identity(6)), Subspace::zero(6));
    }

    #[test]
    fn lattice_operations() {
        let v = span(&[e(1), e(2)]);
        let w = span(&[e(2), e(3)]);
        assert_eq!(v.intersect(&w).unwrap(), span(&[e(2)]));
        assert_eq!(v.sum(&Subspace::zero(6)).unwrap(), v);
        assert!(v.sum(&w).unwrap().contains(&v).unwrap());
        assert!(!v.contains(&w).unwrap());
        assert!(v.sum(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn preimage_of_k_under_x0() {
        let f1 = span(&[e(1)]);
        let pre = f1.preimage(&x0()).unwrap();
        assert_eq!(pre, span(&[e(1), e(2), e(3), e(4)]));
    }

    #[test]
    fn symplectic_perps() {
        let j = j_split(3);
        let k = span(&[e(1), e(2), e(3)]);
        assert_eq!(perp_omega(&k, &j).unwrap(), k);
        assert_eq!(perp_omega(&Subspace::zero(6), &j).unwrap(), Subspace::full(6));
        assert_eq!(perp_omega(&span(&[e(1)]), &j).unwrap(), span(&[e(1), e(2), e(3), e(5), e(6)]));
        assert_eq!(perp_omega(&k, &Matrix::identity(6)), Err(Error::NotAntisymmetric));
        assert_eq!(perp_omega(&k, &Matrix::zeros(6, 6)), Err(Error::NotInvertible));
    }

    #[test]
    fn canonical_form_is_independent_of_spanning_set() {
        let a = span(&[e(1), e(2)]);
        let b = span(&[e(1).iter().zip(e(2)).map(|(x, y)| x + &y).collect(), e(1).iter().zip(e(2)).map(|(x, y)| x - &y).collect()]);
        assert_eq!(a, b);
    }
}
