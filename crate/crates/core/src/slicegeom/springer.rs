//! Springer fibres over `x₀` for the two parabolics stabilizing isotropic
//! flags `F₁ ⊂ F₂` (`dim F₁ = 1` or `2`, `F₂` Lagrangian), and the family
//! `z_t` degenerating to `x₀`.

use std::fmt;

use serde::Serialize;

use super::point_in_t;
use super::singular::cone_point;
use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::liealg::{Sl2Triple, SpAlgebra};
use crate::linalg::{determinant, j_split, perp_omega, unit_vector, Matrix, Scalar, Subspace};
use crate::par::Exec;
use crate::poly::{MultiPoly, VarSet};
use crate::proof::{ProofReport, Tally};
use crate::sample::Sampler;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Flavor {
    P1,
    P2,
}

impl Flavor {
    pub fn f1_dim(self) -> usize {
        match self {
            Flavor::P1 => 1,
            Flavor::P2 => 2,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FiberCase {
    /// `dim(K ∩ F₂) = 2`.
    Generic,
    /// `F₂ = K`.
    Special,
}

/// Partial flag `F₁ ⊂ F₂` in ℂ⁶ with `dim F₂ = 3`. Isotropy of `F₂` is not
/// required here; it is part of the fibre condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagPair {
    f1: Subspace,
    f2: Subspace,
    flavor: Flavor,
}

impl FlagPair {
    pub fn new(f1: Subspace, f2: Subspace, flavor: Flavor) -> Result<Self> {
        if f1.ambient_dim() != 6 || f2.ambient_dim() != 6 {
            return Err(Error::MalformedFlag("subspaces must lie in a six-dimensional space".into()));
        }
        if f1.dim() != flavor.f1_dim() {
            return Err(Error::MalformedFlag(format!("dim F1 = {} for {flavor}", f1.dim())));
        }
        if f2.dim() != 3 {
            return Err(Error::MalformedFlag(format!("dim F2 = {}", f2.dim())));
        }
        if !f2.contains(&f1)? {
            return Err(Error::MalformedFlag("F1 is not contained in F2".into()));
        }
        Ok(FlagPair { f1, f2, flavor })
    }

    pub fn f1(&self) -> &Subspace {
        &self.f1
    }

    pub fn f2(&self) -> &Subspace {
        &self.f2
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }
}

/// `z F₂ ⊆ F₁ ⊆ ker z` and `F₂ = F₂^⊥`.
pub fn springer_fiber_member(z: &Matrix<GaussRat>, f: &FlagPair) -> Result<bool> {
    if z.rows() != 6 || z.cols() != 6 {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix on a six-dimensional space", z.rows(), z.cols())));
    }
    Ok(f.f1.contains(&f.f2.image(z)?)? && Subspace::kernel(z).contains(&f.f1)? && perp_omega(&f.f2, &j_split(3))? == f.f2)
}

/// Inputs of [`fiber_sampler`]: `F₁` is spanned by `a` (and `b`) inside
/// `K = span{e₁, e₂, e₃}`; `shift` moves the completing vector by an element
/// of `K`.
#[derive(Clone, Debug)]
pub struct FiberParams {
    pub a: [GaussRat; 3],
    pub b: Option<[GaussRat; 3]>,
    pub shift: [GaussRat; 3],
}

impl FiberParams {
    pub fn p1(a: [GaussRat; 3]) -> Self {
        FiberParams { a, b: None, shift: zero3() }
    }

    pub fn p2(a: [GaussRat; 3], b: [GaussRat; 3]) -> Self {
        FiberParams { a, b: Some(b), shift: zero3() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberOutcome {
    Flag(FlagPair),
    /// Every admissible `F₂` lies in `search_space = F₁^⊥ ∩ x₀⁻¹F₁`, and this
    /// space is contained in `K`, so no flag with `dim(K ∩ F₂) = 2` exists.
    NoCompletion {
        search_space: Subspace,
    },
}

fn zero3() -> [GaussRat; 3] {
    [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()]
}

fn lift_k(v: &[GaussRat; 3]) -> Vec<GaussRat> {
    v.iter().cloned().chain(zero3()).collect()
}

fn k_space() -> Subspace {
    Subspace::span(6, &(0..3).map(|k| unit_vector(6, k)).collect::<Vec<_>>()).expect("unit vectors")
}

/// Flag in the fibre over `x₀`, built from `params` by the case analysis on
/// `K ∩ F₂`.
pub fn fiber_sampler(flavor: Flavor, case: FiberCase, params: &FiberParams) -> Result<FiberOutcome> {
    let mut gens = vec![lift_k(&params.a)];
    match (flavor, &params.b) {
        (Flavor::P1, None) => {}
        (Flavor::P2, Some(b)) => gens.push(lift_k(b)),
        _ => return Err(Error::MalformedFlag(format!("{flavor} takes {} spanning vectors", flavor.f1_dim()))),
    }
    let f1 = Subspace::span(6, &gens)?;
    if f1.dim() != flavor.f1_dim() {
        return Err(Error::MalformedFlag("spanning vectors of F1 are dependent".into()));
    }
    let k = k_space();
    if case == FiberCase::Special {
        return Ok(FiberOutcome::Flag(FlagPair::new(f1, k, flavor)?));
    }
    let x0 = Sl2Triple::square_zero(3).x;
    let j = j_split(3);
    let search = perp_omega(&f1, &j)?.intersect(&f1.preimage(&x0)?)?;
    let Some(w) = search.basis_vectors().into_iter().find(|v| !k.contains_vector(v).unwrap_or(true)) else {
        return Ok(FiberOutcome::NoCompletion { search_space: search });
    };
    let w: Vec<GaussRat> = w.iter().zip(lift_k(&params.shift)).map(|(x, y)| x + &y).collect();
    let w_space = Subspace::span(6, &[w])?;
    let f2 = k.intersect(&perp_omega(&w_space, &j)?)?.sum(&w_space)?;
    Ok(FiberOutcome::Flag(FlagPair::new(f1, f2, flavor)?))
}

/// The bilinear (not Hermitian) dot product on ℂ³.
fn dot3(a: &[GaussRat; 3], b: &[GaussRat; 3]) -> GaussRat {
    a.iter().zip(b).fold(GaussRat::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn on_conic(a: &[GaussRat; 3]) -> bool {
    dot3(a, a).is_zero()
}

fn on_quadric(a: &[GaussRat; 3], b: &[GaussRat; 3]) -> bool {
    &dot3(a, a) * &dot3(b, b) == dot3(a, b).pow(2)
}

fn random3(s: &mut Sampler) -> [GaussRat; 3] {
    [s.rational(), s.rational(), s.rational()]
}

/// A plane through the isotropic line `c` inside `c^⊥`; the dot product
/// restricted to it is degenerate.
fn quadric_plane(s: &mut Sampler) -> ([GaussRat; 3], [GaussRat; 3]) {
    let c = cone_point(&s.nonzero_rational(), &s.nonzero_rational());
    let perp = Subspace::kernel(&Matrix::from_rows(vec![c.to_vec()]).expect("one row"));
    let basis = perp.basis_vectors();
    loop {
        let comb = |s: &mut Sampler| -> [GaussRat; 3] {
            let (p, q) = (s.small_int(), s.small_int());
            [0, 1, 2].map(|i| &(&p * &basis[0][i]) + &(&q * &basis[1][i]))
        };
        let (a, b) = (comb(s), comb(s));
        if Subspace::span(3, &[a.to_vec(), b.to_vec()]).map(|v| v.dim()) == Ok(2) {
            return (a, b);
        }
    }
}

/// Sampler outputs lie in the fibre, conic and quadric violations give
/// verified negatives, and hand-built violations are rejected.
pub fn fiber_suite(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let mut report = ProofReport::new("Springer fibres over x0");
    let x0 = Sl2Triple::square_zero(3).x;
    let k = k_space();

    let outcomes = exec.map_range(samples, |idx| -> Result<[(bool, String); 3]> {
        let mut s = Sampler::new(seed, idx as u64);
        let flavor = if idx % 2 == 0 { Flavor::P1 } else { Flavor::P2 };
        let mut on = match flavor {
            Flavor::P1 => FiberParams::p1(cone_point(&s.nonzero_rational(), &s.nonzero_rational())),
            Flavor::P2 => {
                let (a, b) = quadric_plane(&mut s);
                FiberParams::p2(a, b)
            }
        };
        on.shift = random3(&mut s);
        let member = |case| -> Result<(bool, String)> {
            let w = format!("{flavor} {case:?} a = {:?}, b = {:?}", on.a, on.b);
            Ok(match fiber_sampler(flavor, case, &on)? {
                FiberOutcome::Flag(f) => {
                    let dim_meet = k.intersect(f.f2())?.dim();
                    let expected_meet = if case == FiberCase::Generic { 2 } else { 3 };
                    (springer_fiber_member(&x0, &f)? && dim_meet == expected_meet, w)
                }
                FiberOutcome::NoCompletion { .. } => (false, format!("{w}: no completion")),
            })
        };
        let generic = member(FiberCase::Generic)?;
        let special = member(FiberCase::Special)?;

        let off = match flavor {
            Flavor::P1 => FiberParams::p1(random3(&mut s)),
            Flavor::P2 => FiberParams::p2(random3(&mut s), random3(&mut s)),
        };
        let predicted = match (&off.b, flavor) {
            (Some(b), Flavor::P2) => on_quadric(&off.a, b),
            _ => on_conic(&off.a),
        };
        let negative = match fiber_sampler(flavor, FiberCase::Generic, &off) {
            Ok(FiberOutcome::NoCompletion { search_space }) => {
                (!predicted && k.contains(&search_space)?, format!("{flavor} a = {:?}, b = {:?}", off.a, off.b))
            }
            Ok(FiberOutcome::Flag(f)) => (predicted && springer_fiber_member(&x0, &f)?, format!("{flavor} completed {:?}", off.a)),
            Err(Error::MalformedFlag(_)) => (true, String::new()),
            Err(e) => return Err(e),
        };
        Ok([generic, special, negative])
    });
    let outcomes: Vec<[(bool, String); 3]> = outcomes.into_iter().collect::<Result<_>>()?;
    let labels = [
        "GENERIC sampler flags lie in the fibre with dim(K meet F2) = 2",
        "SPECIAL sampler flags (F2 = K) lie in the fibre",
        "a completion exists exactly on the conic (P1) or quadric (P2)",
    ];
    for (col, label) in labels.iter().enumerate() {
        Tally::collect(outcomes.iter().map(|o| o[col].clone())).push_into(&mut report, label);
    }

    let e = |i: usize| unit_vector(6, i - 1);
    let span = |vs: Vec<Vec<GaussRat>>| Subspace::span(6, &vs);
    let non_isotropic = FlagPair::new(span(vec![e(1)])?, span(vec![e(1), e(4), e(5)])?, Flavor::P1)?;
    let off_kernel = FlagPair::new(span(vec![e(4)])?, span(vec![e(4), e(2), e(3)])?, Flavor::P1)?;
    let rejected = !springer_fiber_member(&x0, &non_isotropic)? && !springer_fiber_member(&x0, &off_kernel)?;
    report.push("constructed violations are rejected", rejected, "F2 = span{e1,e4,e5} is not isotropic; F1 = span{e4} is not in ker x0");
    let off_conic = fiber_sampler(Flavor::P1, FiberCase::Generic, &FiberParams::p1([1, 0, 0].map(GaussRat::from_int)))?;
    report.push(
        "a = (1,0,0) has no completion",
        matches!(off_conic, FiberOutcome::NoCompletion { ref search_space } if *search_space == k),
        "F1^perp meet x0^{-1}F1 = K",
    );
    Ok(report)
}

fn b_matrix<T: Scalar>(t: &T) -> Matrix<T> {
    let c = |n: i64| t.constant_like(&GaussRat::from_int(n));
    let ci = |n: i64| t.constant_like(&GaussRat::complex(0, n));
    Matrix::from_rows(vec![vec![c(0), ci(1), c(1)], vec![ci(-1), c(0), c(0)], vec![c(-1), c(0), c(0)]]).expect("square rows")
}

fn z_of<T: Scalar>(t: &T) -> Matrix<T> {
    let b = b_matrix(t);
    let tb = b.scale(t);
    let corner = b.mul(&b).scale(&t.times(t).times(&t.constant_like(&GaussRat::from_int(-3))));
    Matrix::from_blocks(&tb, &b.identity_like(), &corner, &tb).expect("3x3 blocks")
}

/// `z_t = [[tB, I], [−3t²B², tB]]` with `B = [[0, i, 1], [−i, 0, 0], [−1, 0, 0]]`.
pub fn deformation_z(t: &GaussRat) -> Matrix<GaussRat> {
    z_of(t)
}

/// `z_t` over the polynomial ring in `t`.
pub fn deformation_z_symbolic() -> Matrix<MultiPoly> {
    let vars = VarSet::new(["t"]).expect("one name");
    z_of(&MultiPoly::var_at(&vars, 0))
}

/// Spanning family of `ker M` with entries polynomial in the single variable,
/// valid wherever the pivot minor chosen at `probe` is nonzero.
fn kernel_family(m: &Matrix<MultiPoly>, probe: &GaussRat) -> Result<Vec<Vec<MultiPoly>>> {
    let at_probe = m.eval(std::slice::from_ref(probe))?;
    let (_, cols) = at_probe.rref();
    let (_, rows) = at_probe.transpose().rref();
    let minor = m.select(&rows, &cols);
    let d = determinant(&minor)?;
    if d.is_zero() {
        return Err(Error::Internal("pivot minor vanishes identically".into()));
    }
    let mut family = Vec::new();
    for f in (0..m.cols()).filter(|c| !cols.contains(c)) {
        let mut v = vec![d.zero_like(); m.cols()];
        v[f] = d.clone();
        for (pos, &c) in cols.iter().enumerate() {
            let mut replaced = cols.clone();
            replaced[pos] = f;
            v[c] = -determinant(&m.select(&rows, &replaced))?;
        }
        family.push(v);
    }
    for v in &family {
        let column = Matrix::from_rows(v.iter().map(|p| vec![p.clone()]).collect())?;
        if !m.mul(&column).is_zero() {
            return Err(Error::Internal("kernel family does not annihilate".into()));
        }
    }
    Ok(family)
}

fn strip_t(v: &mut [MultiPoly]) {
    if v.iter().all(MultiPoly::is_zero) {
        return;
    }
    while let Some(divided) = v.iter().map(|p| p.div_by_var(0)).collect::<Option<Vec<_>>>() {
        v.clone_from_slice(&divided);
    }
}

fn at_zero(v: &[MultiPoly]) -> Vec<GaussRat> {
    v.iter().map(MultiPoly::constant_term).collect()
}

/// Replaces `family` by a family spanning the same module localized away
/// from `t = 0` whose values at `t = 0` are independent, and returns the span
/// of those values.
fn flat_limit(family: &mut [Vec<MultiPoly>]) -> Result<Subspace> {
    let n = family.first().map_or(0, Vec::len);
    for _ in 0..64 {
        family.iter_mut().for_each(|v| strip_t(v));
        let values: Vec<Vec<GaussRat>> = family.iter().map(|v| at_zero(v)).collect();
        let span = Subspace::span(n, &values)?;
        if span.dim() == family.len() {
            return Ok(span);
        }
        let relations = Subspace::kernel(&Matrix::from_rows(values)?.transpose());
        let c = relations.basis_vectors().remove(0);
        let j = (0..c.len()).rev().find(|&k| !c[k].is_zero()).expect("nonzero relation");
        let combo: Vec<MultiPoly> = (0..n)
            .map(|i| family.iter().zip(&c).fold(MultiPoly::zero(family[0][i].vars()), |acc, (v, ck)| &acc + &v[i].scale(ck)))
            .collect();
        family[j] = combo
            .iter()
            .map(|p| p.div_by_var(0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Internal("relation at t = 0 is not divisible by t".into()))?;
    }
    Err(Error::Internal("saturation did not terminate".into()))
}

/// Limit of `ker z_t` as `t → 0`, by specializing a saturated polynomial
/// family, with spot checks at sampled `t`.
pub fn kernel_limit_check(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let mut report = ProofReport::new("kernel of z_t");
    let zt = deformation_z_symbolic();
    report.push_zero_matrix("z_t^3 = 0", &zt.pow(3));
    report.push("z_0 = x0", deformation_z(&GaussRat::zero()) == Sl2Triple::square_zero(3).x, "direct evaluation");

    let i = GaussRat::i();
    let e = |k: usize| unit_vector(6, k - 1);
    let combo = |terms: &[(usize, GaussRat)]| {
        let mut v = vec![GaussRat::zero(); 6];
        for (k, c) in terms {
            v[k - 1] = c.clone();
        }
        v
    };
    let at_one = Subspace::span(
        6,
        &[combo(&[(1, GaussRat::one()), (5, i.clone()), (6, GaussRat::one())]), combo(&[(2, GaussRat::one()), (3, -&i)])],
    )?;
    let kernel_one = Subspace::kernel(&deformation_z(&GaussRat::one()));
    report.push("ker z_1 = span{e1 + i e5 + e6, e2 - i e3}", kernel_one == at_one, format!("ker z_1 has basis {}", kernel_one.basis()));

    let mut family = kernel_family(&zt, &GaussRat::frac(7, 3))?;
    let raw = family.clone();
    let limit = flat_limit(&mut family)?;
    let expected = Subspace::span(6, &[e(1), combo(&[(2, GaussRat::one()), (3, -&i)])])?;
    report.push("lim_{t->0} ker z_t = span{e1, e2 - i e3}", limit == expected, format!("limit has basis {}", limit.basis()));
    report.push(
        "the limit is 2-dimensional and lies in K",
        limit.dim() == 2 && k_space().contains(&limit)?,
        format!("dim {}", limit.dim()),
    );
    let raw_at_zero = Subspace::span(6, &raw.iter().map(|v| at_zero(v)).collect::<Vec<_>>())?;
    report.note(&format!("the unsaturated Cramer family specializes at t = 0 to a space of dimension {}", raw_at_zero.dim()));

    let g = SpAlgebra::split(3);
    let checks = exec.map_range(samples, |k| -> Result<[(bool, String); 2]> {
        let mut s = Sampler::new(seed, k as u64);
        let t = s.nonzero_rational();
        let z = deformation_z(&t);
        let direct = Subspace::kernel(&z);
        let values: Vec<Vec<GaussRat>> =
            family.iter().map(|v| v.iter().map(|p| p.eval(std::slice::from_ref(&t))).collect::<Result<_>>()).collect::<Result<_>>()?;
        let specialized = Subspace::span(6, &values)?;
        let closed_form =
            Subspace::span(6, &[combo(&[(1, GaussRat::one()), (5, &i * &t), (6, t.clone())]), combo(&[(2, GaussRat::one()), (3, -&i)])])?;
        Ok([
            (specialized == direct && direct == closed_form, format!("t = {t}: kernel basis {}", direct.basis())),
            (point_in_t(&z)? && g.in_sp(&z)?, format!("t = {t}")),
        ])
    });
    let checks: Vec<[(bool, String); 2]> = checks.into_iter().collect::<Result<_>>()?;
    Tally::collect(checks.iter().map(|c| c[0].clone()))
        .push_into(&mut report, "family specializes to ker z_t = span{e1 + i t e5 + t e6, e2 - i e3} at sampled t");
    Tally::collect(checks.iter().map(|c| c[1].clone())).push_into(&mut report, "z_t lies in sp(6) and in T at sampled t");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn e(k: usize) -> Vec<GaussRat> {
        unit_vector(6, k - 1)
    }

    fn span(vs: &[Vec<GaussRat>]) -> Subspace {
        Subspace::span(6, vs).unwrap()
    }

    fn x0() -> Matrix<GaussRat> {
        Sl2Triple::square_zero(3).x
    }

    #[test]
    fn membership_examples() {
        let special = FlagPair::new(span(&[e(1)]), span(&[e(1), e(2), e(3)]), Flavor::P1).unwrap();
        assert!(springer_fiber_member(&x0(), &special).unwrap());
        let bad = FlagPair::new(span(&[e(1)]), span(&[e(1), e(4), e(5)]), Flavor::P1).unwrap();
        assert!(!springer_fiber_member(&x0(), &bad).unwrap());
        assert!(matches!(FlagPair::new(span(&[e(1), e(2)]), span(&[e(1), e(2), e(3)]), Flavor::P1), Err(Error::MalformedFlag(_))));
        assert!(FlagPair::new(span(&[e(4)]), span(&[e(1), e(2), e(3)]), Flavor::P1).is_err());
    }

    #[test]
    fn conic_point_completes() {
        let a = [g(1), GaussRat::i(), g(0)];
        let FiberOutcome::Flag(f) = fiber_sampler(Flavor::P1, FiberCase::Generic, &FiberParams::p1(a.clone())).unwrap() else {
            panic!("expected a flag");
        };
        assert_eq!(f.f1(), &span(&[vec![g(1), GaussRat::i(), g(0), g(0), g(0), g(0)]]));
        assert!(springer_fiber_member(&x0(), &f).unwrap());
        assert_eq!(k_space().intersect(f.f2()).unwrap().dim(), 2);
        let off = fiber_sampler(Flavor::P1, FiberCase::Generic, &FiberParams::p1([g(1), g(0), g(0)])).unwrap();
        assert!(matches!(off, FiberOutcome::NoCompletion { .. }));
    }

    #[test]
    fn quadric_pair_completes() {
        let params = FiberParams::p2([g(1), GaussRat::i(), g(0)], [g(0), g(0), g(1)]);
        assert!(on_quadric(&params.a, params.b.as_ref().unwrap()));
        let FiberOutcome::Flag(f) = fiber_sampler(Flavor::P2, FiberCase::Generic, &params).unwrap() else {
            panic!("expected a flag");
        };
        assert!(springer_fiber_member(&x0(), &f).unwrap());
        let off = FiberParams::p2([g(1), g(0), g(0)], [g(0), g(1), g(0)]);
        assert!(matches!(fiber_sampler(Flavor::P2, FiberCase::Generic, &off).unwrap(), FiberOutcome::NoCompletion { .. }));
        assert!(fiber_sampler(Flavor::P2, FiberCase::Generic, &FiberParams::p1([g(1), g(0), g(0)])).is_err());
    }

    #[test]
    fn z_t_examples() {
        assert_eq!(deformation_z(&g(0)), x0());
        let g6 = SpAlgebra::split(3);
        assert!(g6.in_sp(&deformation_z(&GaussRat::frac(2, 5))).unwrap());
        assert!(point_in_t(&deformation_z(&g(1))).unwrap());
        let half = Subspace::kernel(&deformation_z(&GaussRat::frac(1, 2)));
        assert_eq!(half.dim(), 2);
    }

    #[test]
    fn reports_pass() {
        let r = kernel_limit_check(10, 5, Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
        let r = fiber_suite(30, 5, Exec::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
