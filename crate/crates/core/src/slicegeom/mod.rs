//! Geometry of the six-dimensional slice `T` to the `[2,2,2]` orbit inside
//! the closure of the `[4,2]` orbit of sp(6).
//!
//! Points of `T` are written `(a, u)` with `a, u ∈ ℂ³`, subject to
//! `g₁ = Σuᵢ² − Σaᵢ² = 0` and `g₂ = Σaᵢuᵢ = 0`, modulo `u ↦ −u`.

mod deform;
mod singular;
mod springer;
mod wreath;

pub use crate::proof::{ProofItem, ProofReport};
pub use deform::{deformation_family_check, expected_charpoly};
pub use singular::{
    classification_check, classify, cone_point, jacobian_rank, quotient_singular, singular_component, verify_singular_loci_symbolic,
    Component,
};
pub use springer::{
    deformation_z, deformation_z_symbolic, fiber_sampler, fiber_suite, kernel_limit_check, springer_fiber_member, FiberCase, FiberOutcome,
    FiberParams, FlagPair, Flavor,
};
pub use wreath::{verify_wreath_iso, wreath_form, wreath_generators, wreath_group, wreath_mu, wreath_mu_symbolic, WreathPoint};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::liealg::z1_pattern;
use crate::linalg::{minor_vanishing, Matrix, Scalar};
use crate::par::Exec;
use crate::poly::{Membership, MultiPoly, VarSet};
use crate::proof::Tally;
use crate::sample::Sampler;

/// Variable names of the cover `ℂ⁶ → T`.
pub const AU_VARS: [&str; 6] = ["a1", "a2", "a3", "u1", "u2", "u3"];

pub fn au_vars() -> VarSet {
    VarSet::new(AU_VARS).expect("distinct names")
}

/// The coordinate functions `(a, u)` over [`au_vars`].
pub fn au_symbols(vars: &VarSet) -> ([MultiPoly; 3], [MultiPoly; 3]) {
    let v = |k| MultiPoly::var_at(vars, k);
    ([v(0), v(1), v(2)], [v(3), v(4), v(5)])
}

fn sum_of_squares<T: Scalar>(v: &[T; 3]) -> T {
    v.iter().fold(v[0].zero_like(), |acc, x| acc.plus(&x.times(x)))
}

fn dot3<T: Scalar>(v: &[T; 3], w: &[T; 3]) -> T {
    v.iter().zip(w).fold(v[0].zero_like(), |acc, (x, y)| acc.plus(&x.times(y)))
}

pub fn g1<T: Scalar>(a: &[T; 3], u: &[T; 3]) -> T {
    sum_of_squares(u).minus(&sum_of_squares(a))
}

pub fn g2<T: Scalar>(a: &[T; 3], u: &[T; 3]) -> T {
    dot3(a, u)
}

/// Outer product `uᵀu` of a row vector with itself.
fn outer<T: Scalar>(u: &[T; 3]) -> Matrix<T> {
    Matrix::from_fn(3, 3, |i, j| u[i].times(&u[j]))
}

/// `Z₁` of the slice parametrization.
pub fn z1<T: Scalar>(a: &[T; 3]) -> Matrix<T> {
    z1_pattern(a, &a[0].constant_like(&GaussRat::frac(1, 2)))
}

/// Slice element `[[Z₁, I], [Z₂, Z₁]]`.
pub fn slice_matrix<T: Scalar>(a: &[T; 3], z2: &Matrix<T>) -> Result<Matrix<T>> {
    if z2.rows() != 3 || z2.cols() != 3 {
        return Err(Error::DimensionMismatch(format!("Z2 is {}x{}", z2.rows(), z2.cols())));
    }
    if !z2.is_symmetric() {
        return Err(Error::AsymmetricBlock);
    }
    let z1 = z1(a);
    let id = z1.identity_like();
    Matrix::from_blocks(&z1, &id, z2, &z1)
}

/// Slice element with `Z₂ = uᵀu + Z₁²`.
pub fn slice_matrix_from_au<T: Scalar>(a: &[T; 3], u: &[T; 3]) -> Matrix<T> {
    let z1 = z1(a);
    let z2 = outer(u).add(&z1.mul(&z1));
    slice_matrix(a, &z2).expect("uᵀu + Z₁² is symmetric")
}

/// The slice matrix over [`au_vars`].
pub fn symbolic_slice() -> Matrix<MultiPoly> {
    let vars = au_vars();
    let (a, u) = au_symbols(&vars);
    slice_matrix_from_au(&a, &u)
}

/// Point of `T`, stored with `u` sign-normalized so that `(a, u)` and
/// `(a, −u)` are the same value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SlicePoint {
    a: [GaussRat; 3],
    u: [GaussRat; 3],
}

/// Representative of `{u, −u}`: the first nonzero real part is positive, or,
/// if every real part vanishes, the first nonzero imaginary part is.
pub fn canonical_sign(u: &[GaussRat; 3]) -> [GaussRat; 3] {
    let negative = match u.iter().find(|x| !x.re().is_zero()) {
        Some(x) => x.re().is_negative(),
        None => u.iter().find(|x| !x.im().is_zero()).is_some_and(|x| x.im().is_negative()),
    };
    if negative {
        [-&u[0], -&u[1], -&u[2]]
    } else {
        u.clone()
    }
}

pub fn on_variety(a: &[GaussRat; 3], u: &[GaussRat; 3]) -> bool {
    g1(a, u).is_zero() && g2(a, u).is_zero()
}

impl SlicePoint {
    pub fn new(a: [GaussRat; 3], u: [GaussRat; 3]) -> Result<Self> {
        if !on_variety(&a, &u) {
            return Err(Error::OffVariety);
        }
        let u = canonical_sign(&u);
        Ok(SlicePoint { a, u })
    }

    pub fn origin() -> Self {
        let z = || [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        SlicePoint { a: z(), u: z() }
    }

    pub fn a(&self) -> &[GaussRat; 3] {
        &self.a
    }

    pub fn u(&self) -> &[GaussRat; 3] {
        &self.u
    }

    pub fn matrix(&self) -> Matrix<GaussRat> {
        slice_matrix_from_au(&self.a, &self.u)
    }
}

/// Checks the block shape `[[Z₁, I], [Z₂, Z₁]]`, `Z₁` antisymmetric and `Z₂`
/// symmetric.
fn is_slice_shape(m: &Matrix<GaussRat>) -> bool {
    if m.rows() != 6 || m.cols() != 6 {
        return false;
    }
    let tl = m.block(0, 0, 3, 3);
    m.block(0, 3, 3, 3) == Matrix::identity(3)
        && m.block(3, 3, 3, 3) == tl
        && tl.transpose() == tl.neg()
        && m.block(3, 0, 3, 3).is_symmetric()
}

/// Membership in `T` by rank and traces: `rank A ≤ 4` and `tr Aᵏ = 0` for
/// `k = 1, …, 4`.
pub fn point_in_t(m: &Matrix<GaussRat>) -> Result<bool> {
    if !is_slice_shape(m) {
        return Err(Error::NotSliceShape);
    }
    if m.rank() > 4 {
        return Ok(false);
    }
    let mut power = m.clone();
    for _ in 0..4 {
        if !power.trace().is_zero() {
            return Ok(false);
        }
        power = power.mul(m);
    }
    Ok(true)
}

/// Symbolic check of the defining equations of `T` on the slice matrix.
pub fn verify_t_equations(exec: Exec) -> Result<ProofReport> {
    let vars = au_vars();
    let (a, u) = au_symbols(&vars);
    let m = slice_matrix_from_au(&a, &u);
    let (p1, p2) = (g1(&a, &u), g2(&a, &u));
    let m2 = m.mul(&m);
    let traces = [m.trace(), m2.trace(), m2.mul(&m).trace(), m2.mul(&m2).trace()];
    let mut report = ProofReport::new("slice equations");

    for k in [0, 2] {
        report.push_zero(&format!("tr(A^{}) = 0", k + 1), &traces[k]);
    }
    let two = GaussRat::from_int(2);
    report.push_zero("tr(A^2) - 2*g1 = 0", &(&traces[1] - &p1.scale(&two)));
    let direct = &(&traces[3] - &p1.pow(2).scale(&two)) - &p2.pow(2).scale(&GaussRat::from_int(4));
    report.push_zero("tr(A^4) - 2*g1^2 - 4*g2^2 = 0", &direct);

    match traces[3].express_in_ideal(&[p1.clone(), p2.clone()], 2)? {
        Membership::Found(q) => {
            let expected = [p1.scale(&two), p2.scale(&GaussRat::from_int(4))];
            let holds = q[0] == expected[0] && q[1] == expected[1];
            report.push("tr(A^4) = q1*g1 + q2*g2 with cofactors (2*g1, 4*g2)", holds, format!("q1 = {}; q2 = {}", q[0], q[1]));
        }
        Membership::NotFound => report.push("tr(A^4) lies in (g1, g2)", false, format!("tr(A^4) = {}", traces[3])),
    }

    let minors_vanish = minor_vanishing(&m, 5, exec)?;
    let witness = if minors_vanish { "all 36 minors of size 5 expand to 0".to_string() } else { first_nonzero_minor(&m, 5) };
    report.push("rank(A) <= 4", minors_vanish, witness);
    report.note("tr(A^4) meets the ideal (g1, g2) only through g2^2; the reduced equations are used throughout");
    Ok(report)
}

/// `point_in_t` on slice matrices agrees with the equations `g₁ = g₂ = 0`,
/// on a mix of points of `T` (images of `μ`, cone points) and random pairs.
pub fn membership_equivalence_check(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let outcomes = exec.map_range(samples, |k| -> Result<(bool, String)> {
        let mut s = Sampler::new(seed, k as u64);
        let (a, u) = match k % 4 {
            0 => wreath_mu(&WreathPoint::new([0; 4].map(|_| s.rational()))),
            1 => {
                let a = cone_point(&s.rational(), &s.rational());
                let u = if s.coin() { a.clone().map(|x| &x * &GaussRat::i()) } else { [0; 3].map(|_| GaussRat::zero()) };
                (a, u)
            }
            _ => ([0; 3].map(|_| s.rational()), [0; 3].map(|_| s.rational())),
        };
        let by_equations = on_variety(&a, &u);
        let by_traces = point_in_t(&slice_matrix_from_au(&a, &u))?;
        Ok((by_equations == by_traces, format!("a = {a:?}, u = {u:?}: equations {by_equations}, traces {by_traces}")))
    });
    let outcomes: Vec<(bool, String)> = outcomes.into_iter().collect::<Result<_>>()?;
    let on = outcomes.iter().filter(|(_, w)| w.contains("equations true")).count();
    let mut report = ProofReport::new("membership in T");
    Tally::collect(outcomes).push_into(&mut report, "rank and trace test agrees with g1 = g2 = 0");
    report.note(&format!("{on} of {samples} samples lie on T"));
    Ok(report)
}

fn first_nonzero_minor(m: &Matrix<MultiPoly>, k: usize) -> String {
    let subsets = k_subsets(m.rows(), k);
    for r in &subsets {
        for c in &k_subsets(m.cols(), k) {
            if let Ok(d) = crate::linalg::determinant(&m.select(r, c)) {
                if !d.is_zero() {
                    return format!("minor rows {r:?} cols {c:?} = {d}");
                }
            }
        }
    }
    String::new()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|mask| mask.count_ones() as usize == k).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Sl2Triple, SpAlgebra};
    use crate::orbits::jordan_type;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn zero3() -> [GaussRat; 3] {
        [g(0), g(0), g(0)]
    }

    #[test]
    fn base_point_is_x0() {
        assert_eq!(slice_matrix_from_au(&zero3(), &zero3()), Sl2Triple::square_zero(3).x);
        assert!(point_in_t(&Sl2Triple::square_zero(3).x).unwrap());
    }

    #[test]
    fn isotropic_u_gives_a_rank_four_point() {
        let u = [g(1), GaussRat::i(), g(0)];
        let m = slice_matrix_from_au(&zero3(), &u);
        assert_eq!(m.rank(), 4);
        assert!(!m.mul(&m).is_zero());
        assert!(point_in_t(&m).unwrap());
        assert!(SpAlgebra::split(3).in_sp(&m).unwrap());
    }

    #[test]
    fn off_variety_slice_element() {
        let m = slice_matrix(&[g(1), g(0), g(0)], &Matrix::zeros(3, 3)).unwrap();
        // 2 tr(Z₁²) + 2 tr(Z₂) with tr(Z₁²) = −|a|²/2
        assert_eq!(m.mul(&m).trace(), g(-1));
        let from_au = slice_matrix_from_au(&[g(1), g(0), g(0)], &zero3());
        assert_eq!(from_au.mul(&from_au).trace(), g(-2));
        assert!(!point_in_t(&from_au).unwrap());
        assert!(!point_in_t(&m).unwrap());
        assert_eq!(slice_matrix(&zero3(), &Matrix::elementary(3, 0, 1)), Err(Error::AsymmetricBlock));
        assert_eq!(point_in_t(&Matrix::identity(6)), Err(Error::NotSliceShape));
    }

    #[test]
    fn symbolic_slice_is_traceless_and_symplectic_pointwise() {
        let m = symbolic_slice();
        assert!(m.trace().is_zero());
        let pt = [g(1), g(2), g(-1), GaussRat::frac(1, 3), g(0), g(5)];
        assert!(SpAlgebra::split(3).in_sp(&m.eval(&pt).unwrap()).unwrap());
    }

    #[test]
    fn membership_equivalence_passes() {
        let r = membership_equivalence_check(40, 4, Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn t_equations_report_passes() {
        let r = verify_t_equations(Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.items.len(), 6);
        assert!(r.items.iter().all(|i| i.holds));
    }

    #[test]
    fn canonical_sign_identifies_u_and_minus_u() {
        let u = [GaussRat::i(), g(-1), g(0)];
        let minus = [-&u[0], -&u[1], -&u[2]];
        assert_eq!(canonical_sign(&u), canonical_sign(&minus));
        assert_eq!(canonical_sign(&canonical_sign(&u)), canonical_sign(&u));
        assert_eq!(canonical_sign(&u), [-GaussRat::i(), g(1), g(0)]);
        assert_eq!(canonical_sign(&[GaussRat::complex(0, -2), g(0), g(0)]), [GaussRat::complex(0, 2), g(0), g(0)]);
        assert_eq!(canonical_sign(&zero3()), zero3());
    }

    #[test]
    fn slice_points_validate_the_equations() {
        let a = [g(1), g(0), g(0)];
        assert!(SlicePoint::new(a.clone(), [g(0), g(1), g(0)]).is_ok());
        assert_eq!(SlicePoint::new(a.clone(), zero3()), Err(Error::OffVariety));
        let p = SlicePoint::new(a.clone(), [g(0), g(-1), g(0)]).unwrap();
        assert_eq!(p, SlicePoint::new(a, [g(0), g(1), g(0)]).unwrap());
        assert_eq!(jordan_type(&p.matrix()).unwrap().to_string(), "[4,2]");
    }
}
