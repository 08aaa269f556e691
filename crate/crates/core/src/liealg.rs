//! The symplectic Lie algebra sp(2n) in explicit matrix form.
//!
//! Two bases of `ℚ(i)^{2n}` appear. The *split* basis carries the Gram
//! matrix `[[0, I], [-I, 0]]`; block matrices of the slice live there. The
//! *antidiagonal* basis reorders the second half backwards so that the Gram
//! matrix is antidiagonal and standard parabolics are block upper
//! triangular. [`antidiagonal_intertwiner`] converts between them. Unless a
//! function says otherwise, matrices are in the split basis.
//!
//! Every subalgebra below (centralizers, Levi factors, nilradicals) is found
//! by solving linear conditions on the `(2n)²`-dimensional matrix space.

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::group;
use crate::linalg::{j_split, Matrix, Subspace};
use crate::poly::{MultiPoly, VarSet};
use crate::proof::ProofReport;
use crate::sample::Sampler;

/// Matrix of a linear map on `size × size` matrices, acting on row-major
/// flattenings.
fn operator_matrix(size: usize, f: impl Fn(&Matrix<GaussRat>) -> Matrix<GaussRat>) -> Matrix<GaussRat> {
    let n2 = size * size;
    let columns: Vec<Vec<GaussRat>> = (0..n2).map(|k| f(&Matrix::elementary(size, k / size, k % size)).to_vector()).collect();
    Matrix::from_fn(n2, n2, |i, j| columns[j][i].clone())
}

fn stack(parts: &[Matrix<GaussRat>]) -> Matrix<GaussRat> {
    let rows: Vec<Vec<GaussRat>> = parts.iter().flat_map(Matrix::to_rows).collect();
    Matrix::from_rows(rows).expect("stacked constraint rows share a width")
}

fn vectors_to_matrices(size: usize, space: &Subspace) -> Vec<Matrix<GaussRat>> {
    space.basis_vectors().iter().map(|v| Matrix::from_vector(size, size, v)).collect()
}

/// Span of a list of matrices inside the flattened matrix space.
pub fn matrix_span(size: usize, mats: &[Matrix<GaussRat>]) -> Subspace {
    let vecs: Vec<Vec<GaussRat>> = mats.iter().map(Matrix::to_vector).collect();
    Subspace::span(size * size, &vecs).expect("matrices of one size")
}

/// `AB − BA`.
pub fn bracket(a: &Matrix<GaussRat>, b: &Matrix<GaussRat>) -> Matrix<GaussRat> {
    a.commutator(b)
}

/// sp(2n) relative to an invertible antisymmetric Gram matrix.
#[derive(Clone, Debug)]
pub struct SpAlgebra {
    n: usize,
    form: Matrix<GaussRat>,
    membership: Matrix<GaussRat>,
    basis: Vec<Matrix<GaussRat>>,
}

impl SpAlgebra {
    /// sp(2n) for the split form.
    pub fn split(n: usize) -> Self {
        Self::with_form(j_split(n)).expect("split form is symplectic")
    }

    pub fn with_form(form: Matrix<GaussRat>) -> Result<Self> {
        if !form.is_square() || !form.rows().is_multiple_of(2) || form.rows() == 0 {
            return Err(Error::DimensionMismatch("form must be square of even size".into()));
        }
        if form.transpose() != form.neg() {
            return Err(Error::NotAntisymmetric);
        }
        if form.rank() != form.rows() {
            return Err(Error::NotInvertible);
        }
        let size = form.rows();
        let membership = operator_matrix(size, |a| a.transpose().mul(&form).add(&form.mul(a)));
        let basis = vectors_to_matrices(size, &Subspace::kernel(&membership));
        Ok(SpAlgebra { n: size / 2, form, membership, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    pub fn form(&self) -> &Matrix<GaussRat> {
        &self.form
    }

    /// Basis of the membership solution space.
    pub fn basis(&self) -> &[Matrix<GaussRat>] {
        &self.basis
    }

    /// Dimension computed from the membership equations; `n(2n+1)`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn check_size(&self, a: &Matrix<GaussRat>) -> Result<()> {
        if a.rows() != self.size() || a.cols() != self.size() {
            return Err(Error::DimensionMismatch(format!("{}x{} matrix in sp({})", a.rows(), a.cols(), self.size())));
        }
        Ok(())
    }

    /// `AᵀJ + JA = 0`.
    pub fn in_sp(&self, a: &Matrix<GaussRat>) -> Result<bool> {
        self.check_size(a)?;
        Ok(a.transpose().mul(&self.form).add(&self.form.mul(a)).is_zero())
    }

    /// Basis of `{z ∈ sp : [z, y] = 0}`.
    pub fn centralizer(&self, y: &Matrix<GaussRat>) -> Result<Vec<Matrix<GaussRat>>> {
        self.check_size(y)?;
        if !self.in_sp(y)? {
            return Err(Error::NotSymplectic);
        }
        let ad = operator_matrix(self.size(), |z| z.commutator(y));
        let system = stack(&[self.membership.clone(), ad]);
        Ok(vectors_to_matrices(self.size(), &Subspace::kernel(&system)))
    }

    /// `dim [sp, x] = dim sp − dim centralizer(x)`.
    pub fn orbit_dimension(&self, x: &Matrix<GaussRat>) -> Result<usize> {
        Ok(self.dim() - self.centralizer(x)?.len())
    }

    pub fn random_element(&self, s: &mut Sampler) -> Matrix<GaussRat> {
        let size = self.size();
        self.basis.iter().fold(Matrix::zeros(size, size), |acc, b| acc.add(&b.scale(&s.rational())))
    }

    /// Random nilpotent element of the upper (`upper = true`) or lower Borel
    /// nilradical in the split basis: `[[P, Q], [0, −Pᵀ]]` with `P` strictly
    /// upper triangular and `Q` symmetric, or the transpose shape.
    pub fn random_borel_nilpotent(&self, s: &mut Sampler, upper: bool) -> Matrix<GaussRat> {
        let n = self.n;
        let p = Matrix::from_fn(n, n, |i, j| if i < j { s.small_int() } else { GaussRat::zero() });
        let mut q = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = s.small_int();
                q.set(i, j, v.clone());
                q.set(j, i, v);
            }
        }
        let z = Matrix::zeros(n, n);
        let m = Matrix::from_blocks(&p, &q, &z, &p.transpose().neg()).expect("square blocks");
        if upper {
            m
        } else {
            m.transpose()
        }
    }

    /// Random group element `exp(N₁)·exp(N₂)·…` alternating upper and lower
    /// Borel nilpotents, with its exact inverse.
    pub fn random_unipotent_product(&self, s: &mut Sampler, factors: usize) -> (Matrix<GaussRat>, Matrix<GaussRat>) {
        let size = self.size();
        let mut g = Matrix::identity(size);
        let mut g_inv = Matrix::identity(size);
        for k in 0..factors {
            let nil = self.random_borel_nilpotent(s, k % 2 == 0);
            g = g.mul(&nil.exp_nilpotent().expect("Borel nilradical elements are nilpotent"));
            g_inv = nil.neg().exp_nilpotent().expect("nilpotent").mul(&g_inv);
        }
        (g, g_inv)
    }
}

/// `(x, y, h)` with `[x, y] = h`, `[h, x] = 2x`, `[h, y] = −2y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub x: Matrix<GaussRat>,
    pub y: Matrix<GaussRat>,
    pub h: Matrix<GaussRat>,
}

impl Sl2Triple {
    pub fn verify(&self) -> bool {
        let two = GaussRat::from_int(2);
        bracket(&self.x, &self.y) == self.h
            && bracket(&self.h, &self.x) == self.x.scale(&two)
            && bracket(&self.h, &self.y) == self.y.scale(&two).neg()
    }

    /// `x₀ = [[0, I], [0, 0]]`, `y₀ = [[0, 0], [I, 0]]`, `h₀ = diag(I, −I)`
    /// in sp(2n); for `n = 3`, `x₀` has Jordan type `[2,2,2]`.
    pub fn square_zero(n: usize) -> Self {
        let z = Matrix::zeros(n, n);
        let i = Matrix::identity(n);
        Sl2Triple {
            x: Matrix::from_blocks(&z, &i, &z, &z).unwrap(),
            y: Matrix::from_blocks(&z, &z, &i, &z).unwrap(),
            h: Matrix::from_blocks(&i, &z, &z, &i.neg()).unwrap(),
        }
    }
}

/// The affine slice `x + g^y`, with a chosen basis of `g^y` and one
/// parameter name per basis element.
#[derive(Clone, Debug)]
pub struct SlodowySlice {
    pub triple: Sl2Triple,
    pub centralizer_basis: Vec<Matrix<GaussRat>>,
    pub params: VarSet,
}

/// Parameter names of the normalized slice to `x₀` in sp(6).
pub const SLICE_PARAMS: [&str; 9] = ["a1", "a2", "a3", "x1", "x2", "x3", "y1", "y2", "y3"];

/// Antisymmetric `Z₁ = ½[[0, a₃, −a₂], [−a₃, 0, a₁], [a₂, −a₁, 0]]`, over any
/// scalar type via `half`.
pub(crate) fn z1_pattern<T: crate::linalg::Scalar>(a: &[T; 3], half: &T) -> Matrix<T> {
    let z = a[0].zero_like();
    let h = |x: &T| x.times(half);
    let nh = |x: &T| x.times(half).negated();
    Matrix::from_rows(vec![vec![z.clone(), h(&a[2]), nh(&a[1])], vec![nh(&a[2]), z.clone(), h(&a[0])], vec![h(&a[1]), nh(&a[0]), z]])
        .unwrap()
}

impl SlodowySlice {
    /// Slice with the canonical (echelon) centralizer basis and parameters
    /// `c1, c2, …`.
    pub fn new(triple: Sl2Triple, g: &SpAlgebra) -> Result<Self> {
        if !triple.verify() {
            return Err(Error::InvalidTriple);
        }
        let basis = g.centralizer(&triple.y)?;
        let params = VarSet::new((1..=basis.len()).map(|k| format!("c{k}")))?;
        Ok(SlodowySlice { triple, centralizer_basis: basis, params })
    }

    /// Slice to `x₀` in sp(6) with the basis normalized to the block form
    /// `[[Z₁, I], [Z₂, Z₁]]`, `Z₂ = [[x₁, y₁, y₂], [y₁, x₂, y₃], [y₂, y₃, x₃]]`.
    /// Fails if the normalized basis does not span the computed centralizer.
    pub fn standard() -> Result<Self> {
        let g = SpAlgebra::split(3);
        let triple = Sl2Triple::square_zero(3);
        let computed = g.centralizer(&triple.y)?;
        let half = GaussRat::frac(1, 2);
        let mut basis = Vec::new();
        for k in 0..3 {
            let mut a = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
            a[k] = GaussRat::one();
            let z1 = z1_pattern(&a, &half);
            let z = Matrix::zeros(3, 3);
            basis.push(Matrix::from_blocks(&z1, &z, &z, &z1)?);
        }
        let sym = |i: usize, j: usize| {
            let mut m = Matrix::elementary(3, i, j);
            m.set(j, i, GaussRat::one());
            m
        };
        for z2 in [sym(0, 0), sym(1, 1), sym(2, 2), sym(0, 1), sym(0, 2), sym(1, 2)] {
            let z = Matrix::zeros(3, 3);
            basis.push(Matrix::from_blocks(&z, &z, &z2, &z)?);
        }
        if matrix_span(6, &basis) != matrix_span(6, &computed) || basis.len() != computed.len() {
            return Err(Error::Internal("normalized slice basis does not span the centralizer".into()));
        }
        Ok(SlodowySlice { triple, centralizer_basis: basis, params: VarSet::new(SLICE_PARAMS)? })
    }

    pub fn dim(&self) -> usize {
        self.centralizer_basis.len()
    }

    /// General element `x + Σ pₖ bₖ` with polynomial entries.
    pub fn element(&self) -> Matrix<MultiPoly> {
        let mut m = self.triple.x.to_poly(&self.params);
        for (k, b) in self.centralizer_basis.iter().enumerate() {
            let p = MultiPoly::var_at(&self.params, k);
            m = m.add(&b.map(|c| p.scale(c)));
        }
        m
    }

    pub fn at(&self, values: &[GaussRat]) -> Result<Matrix<GaussRat>> {
        if values.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("{} values for {} parameters", values.len(), self.dim())));
        }
        let mut m = self.triple.x.clone();
        for (b, v) in self.centralizer_basis.iter().zip(values) {
            m = m.add(&b.scale(v));
        }
        Ok(m)
    }
}

/// Coefficients of `λ^{2n−2}, λ^{2n−4}, …, λ⁰` in the characteristic
/// polynomial. The odd coefficients of a member of sp(2n) vanish; a nonzero
/// one is reported as an error.
pub fn adjoint_invariants(a: &Matrix<GaussRat>) -> Result<Vec<GaussRat>> {
    let cp = a.charpoly()?;
    if let Some((k, c)) = cp.iter().enumerate().find(|(k, c)| k % 2 == 1 && !c.is_zero()) {
        return Err(Error::OddInvariant(format!("coefficient of λ^{} is {c}", cp.len() - 1 - k)));
    }
    Ok(cp.into_iter().enumerate().filter(|(k, _)| k % 2 == 0 && *k > 0).map(|(_, c)| c).collect())
}

/// Gram matrix `[[0, K], [−K, 0]]`, `K` the `n × n` antidiagonal of ones.
pub fn j_antidiagonal(n: usize) -> Matrix<GaussRat> {
    let p = antidiagonal_intertwiner(n);
    p.transpose().mul(&j_split(n)).mul(&p)
}

/// Permutation `P` with `P f_k = e_{σ(k)}`, where `σ` keeps the first half and
/// reverses the second. A matrix `M` in the antidiagonal basis is `P M Pᵀ` in
/// the split basis.
pub fn antidiagonal_intertwiner(n: usize) -> Matrix<GaussRat> {
    let perm: Vec<usize> = (0..n).chain((n..2 * n).rev()).collect();
    Matrix::from_fn(2 * n, 2 * n, |i, j| if perm[j] == i { GaussRat::one() } else { GaussRat::zero() })
}

/// Standard parabolic attached to a palindromic flag type, in the split basis.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub flag_type: Vec<usize>,
    pub levi_center_basis: Vec<Matrix<GaussRat>>,
    pub levi_basis: Vec<Matrix<GaussRat>>,
    pub nilradical_basis: Vec<Matrix<GaussRat>>,
    pub levi_dim: usize,
    /// Levi elements strictly upper / lower triangular in the antidiagonal
    /// basis; random combinations are nilpotent.
    pub levi_upper_nilpotent: Vec<Matrix<GaussRat>>,
    pub levi_lower_nilpotent: Vec<Matrix<GaussRat>>,
    intertwiner: Matrix<GaussRat>,
}

fn block_index(flag: &[usize]) -> Vec<usize> {
    flag.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
}

impl ParabolicData {
    /// Realizes the stabilizer of the standard isotropic flag with the given
    /// block sizes: block upper triangular in the antidiagonal basis.
    pub fn new(flag_type: &[usize], g: &SpAlgebra) -> Result<Self> {
        let size = g.size();
        let palindromic = flag_type.iter().eq(flag_type.iter().rev());
        if flag_type.iter().sum::<usize>() != size || !palindromic || flag_type.contains(&0) || g.form() != &j_split(g.n()) {
            return Err(Error::BadFlagType(flag_type.to_vec()));
        }
        let anti = SpAlgebra::with_form(j_antidiagonal(g.n()))?;
        let blocks = block_index(flag_type);
        let zero_entries = |keep: &dyn Fn(usize, usize) -> bool| -> Matrix<GaussRat> {
            let rows: Vec<Vec<GaussRat>> =
                (0..size * size).filter(|&k| !keep(k / size, k % size)).map(|k| crate::linalg::unit_vector(size * size, k)).collect();
            if rows.is_empty() {
                Matrix::zeros(1, size * size)
            } else {
                Matrix::from_rows(rows).unwrap()
            }
        };
        let solve = |keep: &dyn Fn(usize, usize) -> bool| -> Vec<Matrix<GaussRat>> {
            let system = stack(&[anti.membership.clone(), zero_entries(keep)]);
            vectors_to_matrices(size, &Subspace::kernel(&system))
        };
        let levi = solve(&|i, j| blocks[i] == blocks[j]);
        let nil = solve(&|i, j| blocks[i] < blocks[j]);
        let levi_upper = solve(&|i, j| blocks[i] == blocks[j] && i < j);
        let levi_lower = solve(&|i, j| blocks[i] == blocks[j] && i > j);

        // center: coefficient vectors c with Σ c_k [L_k, L_m] = 0 for all m
        let mut rows: Vec<Vec<GaussRat>> = Vec::new();
        for lm in &levi {
            let cols: Vec<Vec<GaussRat>> = levi.iter().map(|lk| lk.commutator(lm).to_vector()).collect();
            for r in 0..size * size {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        let coeffs = Subspace::kernel(&Matrix::from_rows(rows)?);
        let center: Vec<Matrix<GaussRat>> = coeffs
            .basis_vectors()
            .iter()
            .map(|c| levi.iter().zip(c).fold(Matrix::zeros(size, size), |acc, (l, x)| acc.add(&l.scale(x))))
            .collect();

        let p = antidiagonal_intertwiner(g.n());
        let to_split = |ms: Vec<Matrix<GaussRat>>| -> Vec<Matrix<GaussRat>> { ms.iter().map(|m| p.mul(m).mul(&p.transpose())).collect() };
        Ok(ParabolicData {
            flag_type: flag_type.to_vec(),
            levi_dim: levi.len(),
            levi_center_basis: to_split(center),
            levi_basis: to_split(levi),
            nilradical_basis: to_split(nil),
            levi_upper_nilpotent: to_split(levi_upper),
            levi_lower_nilpotent: to_split(levi_lower),
            intertwiner: p,
        })
    }

    pub fn size(&self) -> usize {
        self.intertwiner.rows()
    }

    /// Number of blocks strictly before the middle of the flag; the Levi
    /// center has this dimension.
    pub fn center_params(&self) -> usize {
        self.flag_type.len() / 2
    }

    /// Element of the Levi center acting by `values[b]` on the `b`-th block of
    /// the flag and by `−values[b]` on its mirror.
    pub fn center_element(&self, values: &[GaussRat]) -> Result<Matrix<GaussRat>> {
        if values.len() != self.center_params() {
            return Err(Error::DimensionMismatch(format!("{} values for {} blocks", values.len(), self.center_params())));
        }
        let blocks = block_index(&self.flag_type);
        let last = self.flag_type.len() - 1;
        let diag: Vec<GaussRat> = blocks
            .iter()
            .map(|&b| {
                if b < self.center_params() {
                    values[b].clone()
                } else if last - b < self.center_params() {
                    -&values[last - b]
                } else {
                    GaussRat::zero()
                }
            })
            .collect();
        let p = &self.intertwiner;
        Ok(p.mul(&Matrix::diag(&diag)).mul(&p.transpose()))
    }

    pub fn nilradical_space(&self) -> Subspace {
        matrix_span(self.size(), &self.nilradical_basis)
    }

    pub fn parabolic_basis(&self) -> Vec<Matrix<GaussRat>> {
        self.levi_basis.iter().chain(&self.nilradical_basis).cloned().collect()
    }

    fn combine(basis: &[Matrix<GaussRat>], s: &mut Sampler, size: usize) -> Matrix<GaussRat> {
        basis.iter().fold(Matrix::zeros(size, size), |acc, b| acc.add(&b.scale(&s.small_int())))
    }

    pub fn random_nilradical(&self, s: &mut Sampler) -> Matrix<GaussRat> {
        Self::combine(&self.nilradical_basis, s, self.size())
    }

    pub fn random_levi_nilpotent(&self, s: &mut Sampler, upper: bool) -> Matrix<GaussRat> {
        let basis = if upper { &self.levi_upper_nilpotent } else { &self.levi_lower_nilpotent };
        Self::combine(basis, s, self.size())
    }
}

/// Cartan subalgebra `diag(h₁, …, hₙ, −h₁, …, −hₙ)`.
pub fn cartan_element(h: &[GaussRat]) -> Matrix<GaussRat> {
    let d: Vec<GaussRat> = h.iter().cloned().chain(h.iter().map(|x| -x)).collect();
    Matrix::diag(&d)
}

/// Weyl-group data for the parabolic of flag type `[1,2,2,1]` in sp(6).
#[derive(Clone, Debug)]
pub struct CartanData {
    /// Signed permutation matrices on `(h₁, h₂, h₃)`; order 48.
    pub weyl_group: Vec<Matrix<GaussRat>>,
    /// `W(L)`, the stabilizer in the Weyl group of a generic Levi-center point.
    pub wl_group: Vec<Matrix<GaussRat>>,
    pub wl_generators: Vec<Matrix<GaussRat>>,
    /// Common fixed space of `W(L)` in `𝔥`.
    pub fixed_space: Subspace,
    /// `N(W(L))/W(L)` acting on the fixed space in coordinates `(h₁, h₂)` of
    /// `(h₁, h₂, h₂)`.
    pub wp_group: Vec<Matrix<GaussRat>>,
    pub wp_generators: Vec<Matrix<GaussRat>>,
}

pub fn weyl_data() -> Result<CartanData> {
    let neg = |k: usize| {
        let mut m = Matrix::identity(3);
        m.set(k, k, GaussRat::from_int(-1));
        m
    };
    let swap = |a: usize, b: usize| {
        let mut m = Matrix::identity(3);
        m.set(a, a, GaussRat::zero());
        m.set(b, b, GaussRat::zero());
        m.set(a, b, GaussRat::one());
        m.set(b, a, GaussRat::one());
        m
    };
    let weyl = group::closure(&[swap(0, 1), swap(1, 2), neg(2)], 100)
        .ok_or_else(|| Error::Internal("Weyl group generation did not close".into()))?;

    // generic point (s, t, t) of the Levi center
    let generic = vec![GaussRat::from_int(1), GaussRat::from_int(2), GaussRat::from_int(2)];
    let wl: Vec<Matrix<GaussRat>> = weyl.iter().filter(|w| w.apply(&generic) == generic).cloned().collect();
    let wl_generators: Vec<Matrix<GaussRat>> = wl.iter().filter(|w| **w != Matrix::identity(3)).cloned().collect();

    let id = Matrix::identity(3);
    let fixed_constraints: Vec<Vec<GaussRat>> = wl.iter().flat_map(|w| w.sub(&id).to_rows()).collect();
    let fixed_space = Subspace::kernel(&Matrix::from_rows(fixed_constraints)?);

    let normalizer: Vec<&Matrix<GaussRat>> = weyl
        .iter()
        .filter(|w| {
            let w_inv = w.transpose();
            wl.iter().all(|l| wl.contains(&w.mul(l).mul(&w_inv)))
        })
        .collect();
    // coordinates on the fixed space: (h1, h2) for the vector (h1, h2, h2)
    let coords = [vec![GaussRat::one(), GaussRat::zero(), GaussRat::zero()], vec![GaussRat::zero(), GaussRat::one(), GaussRat::one()]];
    let mut wp_group: Vec<Matrix<GaussRat>> = Vec::new();
    for w in normalizer {
        let images: Vec<Vec<GaussRat>> = coords.iter().map(|v| w.apply(v)).collect();
        let restricted = Matrix::from_fn(2, 2, |i, j| images[j][i].clone());
        if !wp_group.contains(&restricted) {
            wp_group.push(restricted);
        }
    }
    let m1 = GaussRat::from_int(-1);
    let one = GaussRat::one();
    let wp_generators = vec![Matrix::diag(&[m1.clone(), one.clone()]), Matrix::diag(&[one, m1])];
    Ok(CartanData { weyl_group: weyl, wl_group: wl, wl_generators, fixed_space, wp_group, wp_generators })
}

/// Quotient `𝔥^{W(L)} → 𝔥^{W(L)}/W^P`, `(s, t, t) ↦ (s², t²)`.
pub fn eta(z: &[GaussRat; 3]) -> Result<(GaussRat, GaussRat)> {
    if z[1] != z[2] {
        return Err(Error::DimensionMismatch("point is not in the W(L)-fixed space".into()));
    }
    Ok((&z[0] * &z[0], &z[1] * &z[1]))
}

/// Slice basis, triple relations and the dimension of the slice.
pub fn slice_basis_check() -> Result<ProofReport> {
    let mut report = ProofReport::new("sl2-triple and slice");
    let g = SpAlgebra::split(3);
    let triple = Sl2Triple::square_zero(3);
    report.push("[x0, y0] = h0, [h0, x0] = 2 x0, [h0, y0] = -2 y0", triple.verify(), format!("h0 = {}", triple.h));
    let centralizer = g.centralizer(&triple.y)?;
    report.push("dim g^y0 = 9", centralizer.len() == 9, format!("dim {}", centralizer.len()));
    let slice = SlodowySlice::standard()?;
    report.push(
        "the block basis [[Z1, 0], [0, Z1]], [[0, 0], [Z2, 0]] spans g^y0",
        true,
        format!("parameters {}", slice.params.names().join(", ")),
    );
    let mut s = Sampler::new(0, 0);
    let in_sp = (0..10).map(|_| g.in_sp(&slice.at(&s.rationals(9))?)).collect::<Result<Vec<bool>>>()?;
    report.push("slice points lie in sp(6)", in_sp.iter().all(|b| *b), "10 random parameter values");
    Ok(report)
}

/// Levi, center and nilradical dimensions of the standard parabolics.
pub fn parabolic_check() -> Result<ProofReport> {
    let mut report = ProofReport::new("parabolic subalgebras");
    let g = SpAlgebra::split(3);
    for (flag, levi, nil, center) in [(vec![1, 2, 2, 1], 5, 8, 2), (vec![2, 1, 1, 2], 5, 8, 2), (vec![1, 1, 1, 1, 1, 1], 3, 9, 3)] {
        let pd = ParabolicData::new(&flag, &g)?;
        let dims = (pd.levi_dim, pd.nilradical_basis.len(), pd.levi_center_basis.len());
        report.push(
            &format!("flag type {flag:?}: (dim l, dim u, dim c) = ({levi}, {nil}, {center})"),
            dims == (levi, nil, center),
            format!("computed {dims:?}"),
        );
        let nil_space = pd.nilradical_space();
        let ideal = pd
            .parabolic_basis()
            .iter()
            .all(|p| pd.nilradical_basis.iter().all(|u| nil_space.contains_vector(&bracket(p, u).to_vector()).unwrap_or(false)));
        let nilpotent = pd.nilradical_basis.iter().all(Matrix::is_nilpotent);
        let central = pd.levi_center_basis.iter().all(|c| pd.levi_basis.iter().all(|l| bracket(c, l).is_zero()));
        report.push(
            &format!("flag type {flag:?}: u is a nilpotent ideal and c is central in l"),
            ideal && nilpotent && central,
            format!("ideal {ideal}, nilpotent {nilpotent}, central {central}"),
        );
    }
    Ok(report)
}

/// Orders of `W`, `W(L)` and `W^P`, the fixed space of `W(L)`, and the
/// `W^P`-invariance of `η`.
pub fn weyl_check(samples: usize, seed: u64) -> Result<ProofReport> {
    let mut report = ProofReport::new("Weyl groups");
    let data = weyl_data()?;
    let orders = (data.weyl_group.len(), data.wl_group.len(), data.wp_group.len());
    report.push("(|W|, |W(L)|, |W^P|) = (48, 2, 4)", orders == (48, 2, 4), format!("computed {orders:?}"));
    let expected_fixed = Subspace::span(
        3,
        &[vec![GaussRat::one(), GaussRat::zero(), GaussRat::zero()], vec![GaussRat::zero(), GaussRat::one(), GaussRat::one()]],
    )?;
    report.push("h^W(L) = {(s, t, t)}", data.fixed_space == expected_fixed, format!("basis {}", data.fixed_space.basis()));
    let signs = data.wp_group.iter().all(|w| {
        (0..2).all(|i| (0..2).all(|j| if i == j { w.get(i, i).is_one() || (-w.get(i, i)).is_one() } else { w.get(i, j).is_zero() }))
    });
    report.push("W^P acts on (s, t) by independent sign changes", signs && data.wp_group.len() == 4, "diagonal entries are +1 or -1");
    let mut ok = true;
    let mut witness = format!("holds on {samples} samples");
    for k in 0..samples {
        let mut s = Sampler::new(seed, k as u64);
        let (a, b) = (s.rational(), s.rational());
        let base = eta(&[a.clone(), b.clone(), b.clone()])?;
        for w in &data.wp_group {
            let moved = w.apply(&[a.clone(), b.clone()]);
            if eta(&[moved[0].clone(), moved[1].clone(), moved[1].clone()])? != base && ok {
                ok = false;
                witness = format!("s = {a}, t = {b}, w = {w}");
            }
        }
    }
    report.push("eta is W^P-invariant", ok, witness);
    Ok(report)
}
