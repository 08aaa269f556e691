//! Jordan types of nilpotent matrices and the closure order on nilpotent
//! orbits of sp(2n).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::liealg::SpAlgebra;
use crate::linalg::Matrix;
use crate::par::Exec;
use crate::proof::{ProofReport, Tally};
use crate::sample::Sampler;

/// Partition of the ambient dimension listing Jordan block sizes, largest
/// first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct JordanType {
    parts: Vec<usize>,
}

impl JordanType {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JordanType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every odd part occurs with even multiplicity.
    pub fn is_symplectic(&self) -> bool {
        self.parts.iter().filter(|p| *p % 2 == 1).all(|p| self.parts.iter().filter(|q| *q == p).count() % 2 == 0)
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|k| {
                acc += self.parts.get(k).copied().unwrap_or(0);
                acc
            })
            .collect()
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for JordanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        JordanType::new(parts)
    }
}

/// Jordan type from the rank sequence `r_k = rank(A^k)`: the number of parts
/// of size at least `k` is `r_{k−1} − r_k`.
pub fn jordan_type(a: &Matrix<GaussRat>) -> Result<JordanType> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    for _ in 0..n {
        power = power.mul(a);
        ranks.push(power.rank());
    }
    if ranks[n] != 0 {
        return Err(Error::NotNilpotent);
    }
    // at_least[k-1] = #parts ≥ k
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in 1..=n {
        let longer = at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, at_least[k - 1] - longer));
    }
    JordanType::new(parts)
}

/// Dominance: every partial sum of `p` is at most the matching one of `q`.
pub fn dominance_leq(p: &JordanType, q: &JordanType) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::UnequalSums(p.size(), q.size()));
    }
    let len = p.parts.len().max(q.parts.len());
    Ok(p.partial_sums(len).iter().zip(q.partial_sums(len)).all(|(a, b)| *a <= b))
}

pub fn in_orbit(a: &Matrix<GaussRat>, t: &JordanType) -> Result<bool> {
    Ok(jordan_type(a)? == *t)
}

pub fn in_closure(a: &Matrix<GaussRat>, t: &JordanType) -> Result<bool> {
    dominance_leq(&jordan_type(a)?, t)
}

/// All partitions of `size`, in decreasing lexicographic order.
pub fn partitions(size: usize) -> Vec<JordanType> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<JordanType>) {
        if left == 0 {
            out.push(JordanType { parts: cur.clone() });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

pub fn symplectic_partitions(size: usize) -> Vec<JordanType> {
    partitions(size).into_iter().filter(JordanType::is_symplectic).collect()
}

/// Nilpotent representative of a symplectic Jordan type in sp(2n), split
/// basis. Each even part `2m` becomes `[[J_m, E_mm], [0, −J_mᵀ]]` on `m`
/// symplectic pairs; each pair of equal odd parts `k` becomes
/// `[[J_k, 0], [0, −J_kᵀ]]` on `k` pairs.
pub fn representative(t: &JordanType) -> Result<Matrix<GaussRat>> {
    if !t.size().is_multiple_of(2) || !t.is_symplectic() {
        return Err(Error::Parse(format!("{t} is not a symplectic partition")));
    }
    let n = t.size() / 2;
    // (half-dimension, carries the E_mm corner)
    let mut pieces: Vec<(usize, bool)> = Vec::new();
    let mut odd_pending: Option<usize> = None;
    for &p in &t.parts {
        if p % 2 == 0 {
            pieces.push((p / 2, true));
        } else if odd_pending.take().is_none() {
            odd_pending = Some(p);
        } else {
            pieces.push((p, false));
        }
    }
    let mut a = Matrix::zeros(2 * n, 2 * n);
    let mut offset = 0;
    for (d, corner) in pieces {
        for i in 0..d.saturating_sub(1) {
            a.set(offset + i, offset + i + 1, GaussRat::one());
            a.set(n + offset + i + 1, n + offset + i, GaussRat::from_int(-1));
        }
        if corner {
            a.set(offset + d - 1, n + offset + d - 1, GaussRat::one());
        }
        offset += d;
    }
    Ok(a)
}

/// The `[4,2]` representative used throughout the tests, as integer rows.
pub const REP_42_ROWS: [[i64; 6]; 6] =
    [[0, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0], [0, 0, 0, -1, 0, 0]];

pub fn rep_42() -> Matrix<GaussRat> {
    Matrix::from_fn(6, 6, |i, j| GaussRat::from_int(REP_42_ROWS[i][j]))
}

/// Jordan types and orbit dimensions of `x₀` and of the `[4,2]`
/// representative.
pub fn orbit_dimension_check() -> Result<ProofReport> {
    let g = SpAlgebra::split(3);
    let x0 = crate::liealg::Sl2Triple::square_zero(3).x;
    let rep = rep_42();
    let mut report = ProofReport::new("orbit dimensions");
    let (j0, j1) = (jordan_type(&x0)?, jordan_type(&rep)?);
    report.push(
        "Jordan types of x0 and the [4,2] representative",
        j0.to_string() == "[2,2,2]" && j1.to_string() == "[4,2]",
        format!("{j0}, {j1}"),
    );
    report.push("both lie in sp(6)", g.in_sp(&x0)? && g.in_sp(&rep)?, "membership solve");
    let (d0, d1) = (g.orbit_dimension(&x0)?, g.orbit_dimension(&rep)?);
    report.push(
        "dim O[2,2,2] = 12, dim O[4,2] = 16, codimension 4",
        d0 == 12 && d1 == 16,
        format!("dimensions {d0}, {d1}; codimension {}", d1 - d0),
    );
    Ok(report)
}

/// On random conjugates of the representatives of every symplectic
/// partition of 6: the Jordan type is a conjugation invariant, and the power
/// conditions `A⁴ = 0`, `A² = 0` cut out the closures of `[4,2]`, `[2,2,2]`.
pub fn power_closure_check(samples: usize, seed: u64, exec: Exec) -> Result<ProofReport> {
    let g = SpAlgebra::split(3);
    let types = symplectic_partitions(6);
    let reps: Vec<Matrix<GaussRat>> = types.iter().map(representative).collect::<Result<_>>()?;
    let (t42, t222) = (JordanType { parts: vec![4, 2] }, JordanType { parts: vec![2, 2, 2] });
    let outcomes = exec.map_range(samples, |k| -> Result<[(bool, String); 3]> {
        let mut s = Sampler::new(seed, k as u64);
        let which = s.int(0, types.len() as i64 - 1) as usize;
        let (h, h_inv) = g.random_unipotent_product(&mut s, 4);
        let a = h.mul(&reps[which]).mul(&h_inv);
        let jt = jordan_type(&a)?;
        let tag = format!("conjugate of {}", types[which]);
        let a2 = a.mul(&a);
        Ok([
            (jt == types[which] && g.in_sp(&a)?, format!("{tag}: Jordan type {jt}")),
            (a2.mul(&a2).is_zero() == dominance_leq(&jt, &t42)?, format!("{tag}: A^4 = 0 disagrees with closure of [4,2]")),
            (a2.is_zero() == dominance_leq(&jt, &t222)?, format!("{tag}: A^2 = 0 disagrees with closure of [2,2,2]")),
        ])
    });
    let outcomes: Vec<[(bool, String); 3]> = outcomes.into_iter().collect::<Result<_>>()?;
    let mut report = ProofReport::new("nilpotent orbit closures");
    let labels =
        ["Jordan type is invariant under symplectic conjugation", "A^4 = 0 iff Jordan type <= [4,2]", "A^2 = 0 iff Jordan type <= [2,2,2]"];
    for (col, label) in labels.iter().enumerate() {
        Tally::collect(outcomes.iter().map(|o| o[col].clone())).push_into(&mut report, label);
    }
    Ok(report)
}
