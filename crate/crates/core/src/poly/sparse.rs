use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::monomial::MultiIndex;
use crate::error::{Error, Result};

/// Coefficient field for [`Poly`]: exact Gaussian rationals or complex floats.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn conj(&self) -> Self;
    fn from_gaussian(g: &GaussianRational) -> Self;
    fn from_i64(k: i64) -> Self;
}

impl Coeff for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }
    fn from_i64(k: i64) -> Self {
        GaussianRational::from(k)
    }
}

impl Coeff for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn from_gaussian(g: &GaussianRational) -> Self {
        g.to_complex()
    }
    fn from_i64(k: i64) -> Self {
        Complex64::new(k as f64, 0.0)
    }
}

/// A ring variable: `Z(k)` is `z_{k+1}`, `WBar(k)` is the conjugated block variable `w̄_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z(usize),
    WBar(usize),
}

impl Var {
    pub fn index(self, n: usize) -> usize {
        match self {
            Var::Z(k) => k,
            Var::WBar(k) => n + k,
        }
    }

    pub fn from_index(k: usize, n: usize) -> Var {
        if k < n {
            Var::Z(k)
        } else {
            Var::WBar(k - n)
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::Z(k) => format!("z{}", k + 1),
            Var::WBar(k) => format!("wbar{}", k + 1),
        }
    }

    fn check(self, n: usize) -> Result<usize> {
        let k = match self {
            Var::Z(k) | Var::WBar(k) => k,
        };
        if k < n {
            Ok(self.index(n))
        } else {
            Err(Error::UnknownVariable(self.name()))
        }
    }
}

/// One of the two variable blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Z,
    WBar,
}

/// Sparse polynomial in `z_1..z_n, w̄_1..w̄_n`.
///
/// Zero coefficients are never stored. Terms are kept in graded-lex order, so the
/// last entry is the leading term.
#[derive(Clone, PartialEq)]
pub struct Poly<C> {
    n: usize,
    terms: BTreeMap<MultiIndex, C>,
}

/// Exact polynomial over ℚ(i).
pub type CPoly = Poly<GaussianRational>;
/// Floating-point polynomial over ℂ.
pub type FloatPoly = Poly<Complex64>;

impl<C: Coeff> Poly<C> {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(n, MultiIndex::zero(2 * n), c)
    }

    pub fn monomial(n: usize, m: MultiIndex, c: C) -> Self {
        assert_eq!(m.len(), 2 * n, "monomial length does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { n, terms }
    }

    /// Panics if the variable is outside the ring.
    pub fn var(n: usize, v: Var) -> Self {
        let k = v.check(n).expect("variable outside ring");
        Self::monomial(n, MultiIndex::unit(2 * n, k), C::one())
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing duplicates.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (MultiIndex, C)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(MultiIndex::is_constant)
    }

    /// The constant value, when the polynomial is constant.
    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&MultiIndex, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        let k = v.index(self.n);
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    pub(crate) fn degree_in_index(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    /// True when no term involves a `w̄` variable.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|m| m.0[self.n..].iter().all(|&e| e == 0))
    }

    pub fn add_term(&mut self, m: MultiIndex, c: C) {
        assert_eq!(m.len(), 2 * self.n, "monomial length does not match ring");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, o: &Self) -> Result<()> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.n, right: o.n })
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_ring(o)?;
        let mut r = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = k;
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

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = C::one() / c.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut r = Poly::zero(self.n);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    /// Conjugates every coefficient, leaving monomials alone.
    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(C::conj)
    }

    /// Formal partial derivative.
    pub fn differentiate(&self, v: Var) -> Result<Self> {
        let k = v.check(self.n)?;
        Ok(self.diff_index(k))
    }

    pub(crate) fn diff_index(&self, k: usize) -> Self {
        let mut r = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[k] = e - 1;
            r.add_term(m2, c.clone() * C::from_i64(e as i64));
        }
        r
    }

    /// Univariate view in variable index `k`: entry `i` is the coefficient of `x_k^i`.
    pub(crate) fn coefficients_in_index(&self, k: usize) -> Vec<Self> {
        let d = self.degree_in_index(k) as usize;
        let mut out = vec![Self::zero(self.n); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[k] as usize;
            let mut m2 = m.clone();
            m2.0[k] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    pub fn coefficients_in(&self, v: Var) -> Result<Vec<Self>> {
        let k = v.check(self.n)?;
        Ok(self.coefficients_in_index(k))
    }

    /// Inverse of [`Poly::coefficients_in`]: `Σ coeffs[i] · x_k^i`.
    pub(crate) fn from_coefficients_in_index(n: usize, k: usize, coeffs: &[Self]) -> Self {
        let mut r = Self::zero(n);
        for (i, a) in coeffs.iter().enumerate() {
            for (m, c) in &a.terms {
                let mut m2 = m.clone();
                m2.0[k] += i as u32;
                r.add_term(m2, c.clone());
            }
        }
        r
    }

    /// Writes `p = Σ_I x^I g_I` where `I` ranges over exponents of one block.
    ///
    /// Keys are exponent vectors of the chosen block (length `n`); values carry no
    /// variables from that block.
    pub fn collect_coefficients(&self, block: Block) -> BTreeMap<Vec<u32>, Self> {
        let n = self.n;
        let range = match block {
            Block::Z => 0..n,
            Block::WBar => n..2 * n,
        };
        let mut out: BTreeMap<Vec<u32>, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.0[range.clone()].to_vec();
            let mut rest = m.clone();
            for k in range.clone() {
                rest.0[k] = 0;
            }
            out.entry(key).or_insert_with(|| Self::zero(n)).add_term(rest, c.clone());
        }
        out
    }

    /// Substitutes every variable `x_k` by `subs[k]`; all substitutes share one target ring.
    pub fn compose(&self, subs: &[Self]) -> Self {
        assert_eq!(subs.len(), 2 * self.n, "one substitute per variable required");
        let target_n = subs.first().map(|p| p.n).unwrap_or(self.n);
        let mut cache: Vec<Vec<Self>> = subs.iter().map(|s| vec![Self::one(s.n), s.clone()]).collect();
        let mut r = Self::zero(target_n);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target_n, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[k].len() <= e as usize {
                    let next = cache[k].last().unwrap() * &subs[k];
                    cache[k].push(next);
                }
                t = &t * &cache[k][e as usize];
            }
            for (mt, ct) in t.terms {
                r.add_term(mt, ct);
            }
        }
        r
    }

    /// Fixes the variables that have a value in `assign` (one slot per variable).
    pub fn partial_eval(&self, assign: &[Option<C>]) -> Self {
        assert_eq!(assign.len(), 2 * self.n);
        let mut r = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut m2 = m.clone();
            for (k, val) in assign.iter().enumerate() {
                if let Some(x) = val {
                    let e = m.0[k];
                    if e > 0 {
                        coef = coef * pow_c(x, e);
                        m2.0[k] = 0;
                    }
                }
            }
            r.add_term(m2, coef);
        }
        r
    }

    /// Evaluates at a full point (`2n` values) by nested Horner: variables are
    /// eliminated in order `z_1, …, z_n, w̄_1, …, w̄_n`, the innermost being `w̄_n`.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), 2 * self.n, "point must assign every variable");
        let mut lex: Vec<(&[u32], &C)> = self.terms.iter().map(|(m, c)| (m.0.as_slice(), c)).collect();
        lex.sort_by(|a, b| b.0.cmp(a.0));
        horner(&lex, 0, point)
    }

    /// Evaluates at `(z, w̄)`.
    pub fn eval_split(&self, z: &[C], wbar: &[C]) -> C {
        let mut p = Vec::with_capacity(2 * self.n);
        p.extend_from_slice(z);
        p.extend_from_slice(wbar);
        self.eval(&p)
    }

    /// Evaluates with an explicit variable map; every variable must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<Var, C>) -> Result<C> {
        let point = (0..2 * self.n)
            .map(|k| {
                let v = Var::from_index(k, self.n);
                assignment.get(&v).cloned().ok_or_else(|| Error::MissingAssignment(v.name()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval(&point))
    }
}

fn pow_c<C: Coeff>(x: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc * x.clone();
    }
    acc
}

fn horner<C: Coeff>(terms: &[(&[u32], &C)], k: usize, point: &[C]) -> C {
    if terms.is_empty() {
        return C::zero();
    }
    if k == point.len() {
        return terms.iter().fold(C::zero(), |acc, (_, c)| acc + (*c).clone());
    }
    let x = &point[k];
    let mut acc = C::zero();
    let mut prev: Option<u32> = None;
    let mut i = 0;
    while i < terms.len() {
        let e = terms[i].0[k];
        let mut j = i;
        while j < terms.len() && terms[j].0[k] == e {
            j += 1;
        }
        let inner = horner(&terms[i..j], k + 1, point);
        acc = match prev {
            None => inner,
            Some(p) => acc * pow_c(x, p - e) + inner,
        };
        prev = Some(e);
        i = j;
    }
    acc * pow_c(x, prev.unwrap_or(0))
}

impl FloatPoly {
    /// Largest coefficient modulus.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl CPoly {
    pub fn to_float(&self) -> FloatPoly {
        self.map_coeffs(GaussianRational::to_complex)
    }

    /// Evaluates at a complex-float point.
    pub fn eval_f64(&self, point: &[Complex64]) -> Complex64 {
        self.to_float().eval(point)
    }
}

macro_rules! ring_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, C: Coeff> $tr<&'a Poly<C>> for &'a Poly<C> {
            type Output = Poly<C>;
            /// Panics when the operands live in different rings; use the `checked_*` form to recover.
            fn $m(self, o: &Poly<C>) -> Poly<C> {
                self.$checked(o).expect("ring mismatch")
            }
        }
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, o: Poly<C>) -> Poly<C> {
                (&self).$m(&o)
            }
        }
    };
}

ring_op!(Add, add, checked_add);
ring_op!(Sub, sub, checked_sub);
ring_op!(Mul, mul, checked_mul);

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

fn fmt_monomial(m: &MultiIndex, n: usize, f: &mut fmt::Formatter<'_>, first: bool) -> fmt::Result {
    let mut first = first;
    for (k, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k < n {
            write!(f, "z{}", k + 1)?;
        } else {
            write!(f, "conj(z{})", k - n + 1)?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for CPoly {
    /// Canonical expression form (descending graded-lex), with `w̄_k` printed as `conj(zk)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg_real = c.im.is_zero() && c.re < num_rational::BigRational::zero();
            let shown = if neg_real { -c } else { c.clone() };
            if idx == 0 {
                if neg_real {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg_real { "-" } else { "+" })?;
            }
            if m.is_constant() {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                fmt_monomial(m, self.n, f, true)?;
            } else {
                write!(f, "{shown}*")?;
                fmt_monomial(m, self.n, f, true)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poly").field("n", &self.n).field("terms", &self.terms).finish()
    }
}
