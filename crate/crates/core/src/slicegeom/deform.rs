//! The families `z + u ↦ g·(z + u)·g⁻¹` over the Levi center `𝔠` of the two
//! parabolics, checked at the level of adjoint invariants.

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::liealg::{adjoint_invariants, eta, ParabolicData, SpAlgebra};
use crate::linalg::Matrix;
use crate::par::Exec;
use crate::proof::{ProofReport, Tally};
use crate::sample::Sampler;

fn block_sizes(flag_type: &[usize]) -> Result<(usize, usize)> {
    match flag_type {
        [1, 2, 2, 1] => Ok((1, 2)),
        [2, 1, 1, 2] => Ok((2, 1)),
        _ => Err(Error::BadFlagType(flag_type.to_vec())),
    }
}

/// Quotient `(s, t) ↦ (s², t²)` of the Levi center by `W^P`, read off the
/// diagonal of a center element in the split basis.
fn center_invariants(flag_type: &[usize], z: &Matrix<GaussRat>) -> Result<(GaussRat, GaussRat)> {
    let d: Vec<GaussRat> = (0..3).map(|k| z.get(k, k).clone()).collect();
    match block_sizes(flag_type)? {
        (1, _) => eta(&[d[0].clone(), d[1].clone(), d[2].clone()]),
        _ => {
            let (t2, s2) = eta(&[d[2].clone(), d[0].clone(), d[1].clone()])?;
            Ok((s2, t2))
        }
    }
}

/// Characteristic polynomial, leading coefficient first, predicted from the
/// invariants `(σ, τ) = (s², t²)`: `(λ² − σ)^{m_s} (λ² − τ)^{m_t}` with the
/// multiplicities given by the flag blocks.
pub fn expected_charpoly(flag_type: &[usize], sigma: &GaussRat, tau: &GaussRat) -> Result<Vec<GaussRat>> {
    let (ms, mt) = block_sizes(flag_type)?;
    let mut poly = vec![GaussRat::one()];
    for root in std::iter::repeat_n(sigma, ms).chain(std::iter::repeat_n(tau, mt)) {
        let factor = [GaussRat::one(), GaussRat::zero(), -root];
        let mut next = vec![GaussRat::zero(); poly.len() + 2];
        for (i, p) in poly.iter().enumerate() {
            for (j, f) in factor.iter().enumerate() {
                next[i + j] += &(p * f);
            }
        }
        poly = next;
    }
    Ok(poly)
}

fn exp_pair(x: &Matrix<GaussRat>) -> Result<(Matrix<GaussRat>, Matrix<GaussRat>)> {
    Ok((x.exp_nilpotent()?, x.neg().exp_nilpotent()?))
}

/// Per-sample checks: conjugating `z` by the unipotent radical stays in
/// `z + 𝔲`; `g` is symplectic; the characteristic polynomial of
/// `g(z + u)g⁻¹` matches the prediction from `(s², t²)`.
pub fn deformation_family_check(flag_type: &[usize], samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    block_sizes(flag_type)?;
    let g6 = SpAlgebra::split(3);
    let pd = ParabolicData::new(flag_type, &g6)?;
    let nil = pd.nilradical_space();
    let j = g6.form().clone();
    let mut report = ProofReport::new(&format!("deformation family for flag type {flag_type:?}"));

    let outcomes = exec.map_range(samples, |k| -> Result<[(bool, String); 4]> {
        let mut s = Sampler::new(seed, k as u64);
        let (a, b) = loop {
            let (a, b) = (s.nonzero_rational(), s.nonzero_rational());
            if a != b && a != -&b {
                break (a, b);
            }
        };
        let z = pd.center_element(&[a.clone(), b.clone()])?;
        let u = pd.random_nilradical(&mut s);

        let (en, en_inv) = exp_pair(&pd.random_nilradical(&mut s))?;
        let moved = en.mul(&z).mul(&en_inv).sub(&z);
        let in_radical = nil.contains_vector(&moved.to_vector())?;

        let mut g = Matrix::identity(6);
        let mut g_inv = Matrix::identity(6);
        for x in [
            pd.random_nilradical(&mut s),
            pd.random_levi_nilpotent(&mut s, true),
            pd.random_levi_nilpotent(&mut s, false),
            pd.random_nilradical(&mut s),
        ] {
            let (e, e_inv) = exp_pair(&x)?;
            g = g.mul(&e);
            g_inv = e_inv.mul(&g_inv);
        }
        let symplectic = g.transpose().mul(&j).mul(&g) == j && g.mul(&g_inv) == Matrix::identity(6);

        let v = g.mul(&z.add(&u)).mul(&g_inv);
        let (sigma, tau) = center_invariants(flag_type, &z)?;
        let predicted = expected_charpoly(flag_type, &sigma, &tau)?;
        let charpoly = v.charpoly()?;
        let invariants_match = adjoint_invariants(&v)? == predicted.iter().skip(2).step_by(2).cloned().collect::<Vec<_>>();
        let in_sp = g6.in_sp(&v)?;

        let tag = format!("s = {a}, t = {b}");
        Ok([
            (in_radical, format!("{tag}: exp(n) z exp(-n) - z = {moved}")),
            (symplectic, format!("{tag}: g = {g}")),
            (charpoly == predicted && invariants_match, format!("{tag}: charpoly {charpoly:?}, predicted {predicted:?}")),
            (in_sp, format!("{tag}: g(z+u)g^-1 = {v}")),
        ])
    });
    let outcomes: Vec<[(bool, String); 4]> = outcomes.into_iter().collect::<Result<_>>()?;
    let labels =
        ["exp(n) z exp(-n) lies in z + u", "g^T J g = J", "charpoly of g(z+u)g^-1 is determined by (s^2, t^2)", "g(z+u)g^-1 lies in sp(6)"];
    for (col, label) in labels.iter().enumerate() {
        Tally::collect(outcomes.iter().map(|o| o[col].clone())).push_into(&mut report, label);
    }
    Ok(report)
}
