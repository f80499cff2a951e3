use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A variable of the polynomial ring: `x_i` (1-based), `q` or `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Q,
    T,
}

/// Target of a substitution in [`MPoly::specialize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Int(BigInt),
    Var(Var),
}

impl From<i64> for Binding {
    fn from(v: i64) -> Self {
        Binding::Int(BigInt::from(v))
    }
}

impl From<Var> for Binding {
    fn from(v: Var) -> Self {
        Binding::Var(v)
    }
}

/// Exponent vector `(e_1..e_n, e_q, e_t)`, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with integer coefficients in `x_1..x_n, q, t`.
///
/// Every exponent vector has exactly `nvars + 2` slots. Binary operations on
/// polynomials of different widths are errors; the `try_*` methods report
/// them and the operator impls panic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars + 2], c.into());
        p
    }

    /// The variable `x_i`, 1-based.
    ///
    /// # Panics
    /// If `i` is not in `1..=nvars`.
    pub fn x(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "x_{i} out of range for {nvars} variables");
        let mut e = vec![0; nvars + 2];
        e[i - 1] = 1;
        Self::from_exponents(nvars, e, BigInt::one())
    }

    pub fn q(nvars: usize) -> Self {
        Self::q_t_monomial(nvars, 1, 0)
    }

    pub fn t(nvars: usize) -> Self {
        Self::q_t_monomial(nvars, 0, 1)
    }

    /// `q^eq t^et` with coefficient 1.
    pub fn q_t_monomial(nvars: usize, eq: u32, et: u32) -> Self {
        let mut e = vec![0; nvars + 2];
        e[nvars] = eq;
        e[nvars + 1] = et;
        Self::from_exponents(nvars, e, BigInt::one())
    }

    /// `c · x^x q^eq t^et`.
    ///
    /// # Panics
    /// If `x.len() != nvars`.
    pub fn monomial(nvars: usize, x: &[u32], eq: u32, et: u32, c: impl Into<BigInt>) -> Self {
        assert_eq!(x.len(), nvars, "x-exponent length must equal nvars");
        let mut e = x.to_vec();
        e.push(eq);
        e.push(et);
        Self::from_exponents(nvars, e, c.into())
    }

    /// Single term from a full exponent vector of length `nvars + 2`.
    ///
    /// # Panics
    /// If the exponent vector has the wrong length.
    pub fn from_exponents(nvars: usize, exps: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term involves an x-variable.
    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|m| m.0[..self.nvars].iter().all(|&e| e == 0))
    }

    /// Terms in descending graded-lex order as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Coefficient of a full exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Adds `c · m` in place, dropping the term if it cancels.
    ///
    /// # Panics
    /// If `exps.len() != nvars + 2`.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars + 2, "exponent width mismatch");
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_width(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_width(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_width(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_width(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.0.clone(), v * c);
        }
        out
    }

    /// Multiplies by the monomial with full exponent vector `exps`.
    pub fn shift(&self, exps: &[u32]) -> MPoly {
        assert_eq!(exps.len(), self.nvars + 2, "exponent width mismatch");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(exps).map(|(a, b)| a + b).collect();
                (Monomial(e), c.clone())
            })
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Re-embeds the polynomial in `nvars` x-variables.
    ///
    /// Growing always succeeds. Shrinking fails if a dropped variable occurs.
    pub fn with_nvars(&self, nvars: usize) -> Result<MPoly> {
        let mut out = MPoly::zero(nvars);
        for (m, c) in &self.terms {
            let x = &m.0[..self.nvars];
            if x.iter().skip(nvars).any(|&e| e > 0) {
                return Err(Error::NvarsMismatch {
                    left: self.nvars,
                    right: nvars,
                });
            }
            let mut e = vec![0; nvars + 2];
            for (slot, &v) in e.iter_mut().zip(x) {
                *slot = v;
            }
            e[nvars] = m.0[self.nvars];
            e[nvars + 1] = m.0[self.nvars + 1];
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Total x-degree of each term, or `None` for the zero polynomial or a
    /// polynomial that is not homogeneous in x.
    pub fn x_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.0[..self.nvars].iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    /// `s_i p`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<MPoly> {
        self.check_index(i)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(i - 1, i);
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(MPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Divided difference `∂_i p = (p − s_i p) / (x_i − x_{i+1})`, term by term.
    pub fn divided_difference(&self, i: usize) -> Result<MPoly> {
        self.check_index(i)?;
        let (a_idx, b_idx) = (i - 1, i);
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let (a, b) = (m.0[a_idx], m.0[b_idx]);
            if a == b {
                continue;
            }
            // x_i^a x_{i+1}^b = (x_i x_{i+1})^lo · x^{hi-lo} in one slot.
            let (lo, d, sign) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c) };
            for k in 0..d {
                let mut e = m.0.clone();
                e[a_idx] = lo + d - 1 - k;
                e[b_idx] = lo + k;
                out.add_term(e, sign.clone());
            }
        }
        Ok(out)
    }

    /// Exact quotient `p / d` for an x-free nonzero divisor `d`.
    ///
    /// The division runs independently for each x-monomial as bivariate
    /// division in `(q, t)` under lex order. A nonzero remainder is an error.
    pub fn exact_div_xfree(&self, d: &MPoly) -> Result<MPoly> {
        self.check_width(d)?;
        if d.is_zero() || !d.is_x_free() {
            return Err(Error::BadDivisor);
        }
        let n = self.nvars;
        let divisor: BTreeMap<(u32, u32), BigInt> =
            d.terms.iter().map(|(m, c)| ((m.0[n], m.0[n + 1]), c.clone())).collect();
        let (&(lq, lt), lc) = divisor.iter().next_back().expect("nonzero divisor");

        let mut groups: BTreeMap<Vec<u32>, BTreeMap<(u32, u32), BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.0[..n].to_vec())
                .or_default()
                .insert((m.0[n], m.0[n + 1]), c.clone());
        }

        let mut out = MPoly::zero(n);
        for (x, mut rem) in groups {
            while let Some((&(rq, rt), rc)) = rem.iter().next_back() {
                if rq < lq || rt < lt {
                    return Err(Error::NonzeroRemainder);
                }
                let (quot, r) = (rc / lc, rc % lc);
                if !r.is_zero() {
                    return Err(Error::NonzeroRemainder);
                }
                let (sq, st) = (rq - lq, rt - lt);
                for (&(dq, dt), dc) in &divisor {
                    let key = (dq + sq, dt + st);
                    let v = rem.entry(key).or_default();
                    *v -= &quot * dc;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                let mut e = x.clone();
                e.push(sq);
                e.push(st);
                out.add_term(e, quot);
            }
        }
        Ok(out)
    }

    /// Substitutes integers or other variables for the bound variables.
    ///
    /// # Panics
    /// If a binding refers to an x-variable outside `1..=nvars`.
    pub fn specialize(&self, bindings: &[(Var, Binding)]) -> MPoly {
        let n = self.nvars;
        let slot = |v: &Var| match *v {
            Var::X(i) => {
                assert!((1..=n).contains(&i), "x_{i} out of range for {n} variables");
                i - 1
            }
            Var::Q => n,
            Var::T => n + 1,
        };
        let mut table: Vec<Option<&Binding>> = vec![None; n + 2];
        for (v, b) in bindings {
            table[slot(v)] = Some(b);
        }
        let mut out = MPoly::zero(n);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = vec![0u32; n + 2];
            for (k, &exp) in m.0.iter().enumerate() {
                match table[k] {
                    None => e[k] += exp,
                    Some(Binding::Int(v)) => coeff *= num_traits::pow(v.clone(), exp as usize),
                    Some(Binding::Var(w)) => e[slot(w)] += exp,
                }
            }
            out.add_term(e, coeff);
        }
        out
    }

    /// Shorthand for specializing `q` and/or `t` to integers.
    pub fn at_qt(&self, q: Option<i64>, t: Option<i64>) -> MPoly {
        let mut b = Vec::new();
        if let Some(v) = q {
            b.push((Var::Q, Binding::from(v)));
        }
        if let Some(v) = t {
            b.push((Var::T, Binding::from(v)));
        }
        self.specialize(&b)
    }

    /// Evaluates every variable at the given integers.
    pub fn eval(&self, x: &[i64], q: i64, t: i64) -> BigInt {
        assert_eq!(x.len(), self.nvars, "one value per x-variable");
        let mut b: Vec<(Var, Binding)> = x.iter().enumerate().map(|(i, &v)| (Var::X(i + 1), v.into())).collect();
        b.push((Var::Q, q.into()));
        b.push((Var::T, t.into()));
        self.specialize(&b).coeff(&vec![0; self.nvars + 2])
    }

    /// True if the polynomial is invariant under every `s_i`.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i).is_ok_and(|s| &s == self))
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        self.check_width(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(m.0.clone(), c.clone());
        }
    }
}

impl AddAssign<MPoly> for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        if self.is_zero() && self.nvars == rhs.nvars {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

pub(crate) fn fmt_coeff_sign(c: &BigInt, first: bool) -> (String, BigInt) {
    let sign = if c.is_negative() {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    (sign.to_string(), c.abs())
}

impl std::fmt::Display for MPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.nvars;
        for (k, (e, c)) in self.terms().enumerate() {
            let (sign, abs) = fmt_coeff_sign(c, k == 0);
            write!(f, "{sign}")?;
            let mut factors = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = if i < n {
                    format!("x{}", i + 1)
                } else if i == n {
                    "q".to_string()
                } else {
                    "t".to_string()
                };
                factors.push(if p == 1 { name } else { format!("{name}^{p}") });
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
