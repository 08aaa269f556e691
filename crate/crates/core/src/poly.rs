//! Sparse multivariate polynomials over ℚ(i).
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so two polynomials are equal exactly when their term
//! maps are. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::sparse::{self, SparseRow};

/// Ordered alphabet of variable names shared by a family of polynomials.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::Parse(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarSet(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector ordered by total degree, then lexicographically with the
/// first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k] = 1;
        Exponents(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors in `n` variables of total degree at most `d`,
/// ascending in graded-lex order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exponents> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if cur.len() == n {
            out.push(Exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Exponents, GaussRat>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, GaussRat::one())
    }

    pub fn constant(vars: &VarSet, c: GaussRat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Exponents::zero(vars.len()), c);
        }
        p
    }

    /// The variable at position `k` of the alphabet.
    pub fn var_at(vars: &VarSet, k: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Exponents::unit(vars.len(), k), GaussRat::one());
        p
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let k = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var_at(vars, k))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// repeats and dropping zeros.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GaussRat, Vec<u32>)>,
    {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch(format!("exponent vector of length {} for {} variables", e.len(), vars.len())));
            }
            p.add_term(Exponents(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> GaussRat {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coeff(&Exponents::zero(self.vars.len()))
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let mut acc: HashMap<Exponents, GaussRat> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ea.mul(eb)).and_modify(|v| *v += &prod).or_insert(prod);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    pub fn scale(&self, c: &GaussRat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point given in alphabet order.
    pub fn eval(&self, point: &[GaussRat]) -> Result<GaussRat> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!("point of length {} for {} variables", point.len(), self.vars.len())));
        }
        let mut cache: HashMap<(usize, u32), GaussRat> = HashMap::new();
        let mut total = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &p) in e.0.iter().enumerate() {
                if p > 0 {
                    let f = cache.entry((k, p)).or_insert_with(|| point[k].pow(p));
                    t = &t * f;
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Composes with `assignment`, a map from variable names of `self` to
    /// polynomials over `target`. Unassigned variables map to the variable of
    /// the same name in `target`.
    pub fn substitute(&self, target: &VarSet, assignment: &HashMap<String, MultiPoly>) -> Result<MultiPoly> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let img = match assignment.get(name) {
                Some(p) if p.vars == *target => p.clone(),
                Some(_) => return Err(Error::VarSetMismatch),
                None => MultiPoly::var(target, name)?,
            };
            images.push(img);
        }
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (k, &p) in e.0.iter().enumerate() {
                if p > 0 {
                    let f = cache.entry((k, p)).or_insert_with(|| images[k].pow(p));
                    t = &t * &*f;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Partial derivative in the variable at position `k`.
    pub fn derivative(&self, k: usize) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let p = e.0[k];
            if p > 0 {
                let mut e2 = e.clone();
                e2.0[k] -= 1;
                out.add_term(e2, c * &GaussRat::from_int(p as i64));
            }
        }
        out
    }

    /// Divides by the variable at position `k` when every term contains it.
    pub fn div_by_var(&self, k: usize) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.0[k] == 0 {
                return None;
            }
            let mut e2 = e.clone();
            e2.0[k] -= 1;
            terms.insert(e2, c.clone());
        }
        Some(MultiPoly { vars: self.vars.clone(), terms })
    }

    /// Searches for cofactors `q_j` of degree at most `degree_bound` with
    /// `self = Σ q_j·gens[j]`, by solving the linear system on monomial
    /// coefficients. A [`Membership::NotFound`] answer only says no such
    /// combination exists at this bound.
    pub fn express_in_ideal(&self, gens: &[MultiPoly], degree_bound: u32) -> Result<Membership> {
        for g in gens {
            self.check(g)?;
        }
        let n = self.vars.len();
        let basis = monomials_up_to(n, degree_bound);
        let mut row_of: HashMap<Exponents, usize> = HashMap::new();
        let mut rows: Vec<SparseRow> = Vec::new();
        let mut row_index = |e: Exponents, rows: &mut Vec<SparseRow>| -> usize {
            *row_of.entry(e).or_insert_with(|| {
                rows.push(SparseRow::default());
                rows.len() - 1
            })
        };
        for (e, c) in &self.terms {
            let r = row_index(e.clone(), &mut rows);
            rows[r].rhs = c.clone();
        }
        for (j, g) in gens.iter().enumerate() {
            for (m, mono) in basis.iter().enumerate() {
                let col = j * basis.len() + m;
                for (e, c) in &g.terms {
                    let r = row_index(mono.mul(e), &mut rows);
                    rows[r].coeffs.insert(col, c.clone());
                }
            }
        }
        let Some(sol) = sparse::solve(gens.len() * basis.len(), rows) else {
            return Ok(Membership::NotFound);
        };
        let cofactors: Vec<MultiPoly> = (0..gens.len())
            .map(|j| {
                let mut q = Self::zero(&self.vars);
                for (m, mono) in basis.iter().enumerate() {
                    q.add_term(mono.clone(), sol[j * basis.len() + m].clone());
                }
                q
            })
            .collect();
        let recombined = cofactors.iter().zip(gens).fold(Self::zero(&self.vars), |acc, (q, g)| &acc + &(q * g));
        if recombined != *self {
            return Err(Error::Internal("ideal-membership certificate failed re-expansion".into()));
        }
        Ok(Membership::Found(cofactors))
    }
}

/// Outcome of a bounded-degree ideal membership search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Found(Vec<MultiPoly>),
    NotFound,
}

macro_rules! poly_binop {
    ($tr:ident $m:ident $try:ident) => {
        /// Panics when the operands have different variable sets.
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomial operands over different variable sets")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
poly_binop!(Add add try_add);
poly_binop!(Sub sub try_sub);
poly_binop!(Mul mul try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&GaussRat::from_int(-1))
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Prints terms in descending graded-lex order, e.g. `a1^2 - 2*a1*u1 + (1+1i)`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> =
                e.0.iter()
                    .zip(self.vars.names())
                    .filter(|(p, _)| **p > 0)
                    .map(|(p, n)| if *p == 1 { n.clone() } else { format!("{n}^{p}") })
                    .collect();
            let (neg, mag) = if c.is_real() && c.sign_key() < 0 { (true, -c) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
