//! Sparse bivariate and dense univariate polynomials over exact rings.
//!
//! The same [`Poly2`] type backs three named polynomial families, which
//! differ only in what the two variables mean:
//!
//! | alias      | coefficients | variable 0 | variable 1 |
//! |------------|--------------|------------|------------|
//! | [`BiPoly`] | `Int`        | `P`        | `Q`        |
//! | [`DEPoly`] | `Rat`        | `D`        | `E`        |
//! | [`JNPoly`] | `Rat`        | `J`        | `N`        |

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use thiserror::Error;

use crate::exact::{Int, Rat};

pub trait Coeff: Clone + fmt::Debug + fmt::Display + Signed {}

impl<T: Clone + fmt::Debug + fmt::Display + Signed> Coeff for T {}

/// Polynomial in two commuting variables. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly2<C> {
    terms: BTreeMap<(u32, u32), C>,
}

pub type BiPoly = Poly2<Int>;
pub type DEPoly = Poly2<Rat>;
pub type JNPoly = Poly2<Rat>;

impl<C: Coeff> Default for Poly2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly2<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn monomial(c: C, x_exp: u32, y_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_exp, y_exp), c);
        }
        Self { terms }
    }

    /// The first variable, `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    /// The second variable, `y`.
    pub fn y() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · x^i y^j` in place.
    pub fn add_term(&mut self, c: C, x_exp: u32, y_exp: u32) {
        if c.is_zero() {
            return;
        }
        let key = (x_exp, y_exp);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> C {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Nonzero terms as `((x_exp, y_exp), coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.weighted_degree(1, 1)
    }

    pub fn weighted_degree(&self, x_weight: u32, y_weight: u32) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| i * x_weight + j * y_weight)
            .max()
    }

    pub fn degree_in_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(v.clone() * c.clone(), i, j);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &C, y: &C) -> C {
        let mut total = C::zero();
        for (&(i, j), v) in &self.terms {
            total = total + v.clone() * pow_c(x, i) * pow_c(y, j);
        }
        total
    }

    /// Replace `x` and `y` by polynomials.
    pub fn substitute(&self, x: &Self, y: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            let term = (&x.pow(i) * &y.pow(j)).scale(v);
            out = &out + &term;
        }
        out
    }

    /// Fix `x` to a value, leaving a polynomial in `y`.
    pub fn specialize_x(&self, x: &C) -> UniPoly<C> {
        let mut coeffs = Vec::new();
        for (&(i, j), v) in &self.terms {
            let j = j as usize;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, C::zero());
            }
            coeffs[j] = coeffs[j].clone() + v.clone() * pow_c(x, i);
        }
        UniPoly::new(coeffs)
    }

    /// Fix `y` to a value, leaving a polynomial in `x`.
    pub fn specialize_y(&self, y: &C) -> UniPoly<C> {
        self.swap_vars().specialize_x(y)
    }

    /// Coefficient of `x^i` as a polynomial in `y`.
    pub fn x_coefficient(&self, x_exp: u32) -> UniPoly<C> {
        let mut coeffs = Vec::new();
        for (&(i, j), v) in &self.terms {
            if i == x_exp {
                let j = j as usize;
                if coeffs.len() <= j {
                    coeffs.resize(j + 1, C::zero());
                }
                coeffs[j] = v.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn is_even_in_x(&self) -> bool {
        self.terms.keys().all(|&(i, _)| i % 2 == 0)
    }

    pub fn is_odd_in_x(&self) -> bool {
        self.terms.keys().all(|&(i, _)| i % 2 == 1)
    }

    /// Canonical text with every coefficient explicit, e.g. `-1*P^2*Q + 1*P*Q^2`.
    ///
    /// Terms are sorted by x-degree then y-degree, both descending, and joined
    /// with `" + "`; each coefficient carries its own sign.
    pub fn to_explicit_string(&self, names: [&str; 2]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.cmp(a));
        keys.iter()
            .map(|&(i, j)| {
                let mut s = self.terms[&(i, j)].to_string();
                s.push_str(&monomial_suffix(names, i, j));
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Human-oriented text, e.g. `N - 2*J^2 + J + 1`.
    ///
    /// Terms are sorted by weighted degree descending, ties broken by the
    /// y-degree descending. Unit coefficients are dropped and negative terms
    /// are written with `" - "`.
    pub fn to_natural_string(&self, names: [&str; 2], weights: [u32; 2]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i * weights[0] + j * weights[1], j)));
        let mut out = String::new();
        for (pos, &(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            match (pos, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let suffix = monomial_suffix(names, i, j);
            if suffix.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&suffix[1..]);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(&suffix);
            }
        }
        out
    }
}

fn monomial_suffix(names: [&str; 2], i: u32, j: u32) -> String {
    let mut s = String::new();
    for (name, e) in [(names[0], i), (names[1], j)] {
        match e {
            0 => {}
            1 => {
                s.push('*');
                s.push_str(name);
            }
            _ => {
                s.push('*');
                s.push_str(name);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
    }
    s
}

fn pow_c<C: Coeff>(base: &C, e: u32) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

impl Poly2<Int> {
    pub fn to_rat(&self) -> Poly2<Rat> {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, Rat::from_integer(v.clone())))
                .collect(),
        }
    }
}

impl Poly2<Rat> {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    /// Demote to integer coefficients when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Poly2<Int>> {
        if !self.is_integral() {
            return None;
        }
        Some(Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v.to_integer()))
                .collect(),
        })
    }
}

impl<C: Coeff> Add for &Poly2<C> {
    type Output = Poly2<C>;

    fn add(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.terms {
            out.add_term(v.clone(), i, j);
        }
        out
    }
}

impl<C: Coeff> Sub for &Poly2<C> {
    type Output = Poly2<C>;

    fn sub(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.terms {
            out.add_term(-v.clone(), i, j);
        }
        out
    }
}

impl<C: Coeff> Mul for &Poly2<C> {
    type Output = Poly2<C>;

    fn mul(self, rhs: &Poly2<C>) -> Poly2<C> {
        let mut out = Poly2::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(a.clone() * b.clone(), i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Poly2<C> {
    type Output = Poly2<C>;

    fn neg(self) -> Poly2<C> {
        Poly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial term {0:?}")]
pub struct PolyParseError(pub String);

/// Text form of a [`BiPoly`]; see [`Poly2::to_explicit_string`].
pub fn bipoly_text(f: &BiPoly) -> String {
    f.to_explicit_string(["P", "Q"])
}

/// Text form of a [`DEPoly`], in the same grammar as [`bipoly_text`].
pub fn depoly_text(f: &DEPoly) -> String {
    f.to_explicit_string(["D", "E"])
}

/// Text form of a [`JNPoly`] with `deg J = 1`, `deg N = 2`.
pub fn jnpoly_text(f: &JNPoly) -> String {
    f.to_natural_string(["J", "N"], [1, 2])
}

/// Parses the explicit grammar produced by [`bipoly_text`].
impl FromStr for Poly2<Int> {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = Poly2::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let err = || PolyParseError(term.to_string());
            let mut factors = term.trim().split('*');
            let coeff: Int = factors.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            let (mut i, mut j) = (0u32, 0u32);
            for factor in factors {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                match name {
                    "P" => i += exp,
                    "Q" => j += exp,
                    _ => return Err(err()),
                }
            }
            out.add_term(coeff, i, j);
        }
        Ok(out)
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: C) -> Self {
        Self::new(vec![-root, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = C>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(C::one()), |acc, r| &acc * &Self::linear(r))
    }
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Coeff> UniPoly<C> {
    /// Text like `3*x^2 + -1*x + 2`, highest degree first.
    pub fn to_explicit_string(&self, name: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            s.push_str(&monomial_suffix([name, ""], i as u32, 0));
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn p() -> BiPoly {
        BiPoly::x()
    }
    fn q() -> BiPoly {
        BiPoly::y()
    }

    #[test]
    fn explicit_text_matches_fixture() {
        let f = &(&p() * &(&q() * &q())) - &(&(&p() * &p()) * &q());
        assert_eq!(bipoly_text(&f), "-1*P^2*Q + 1*P*Q^2");
        assert_eq!(bipoly_text(&BiPoly::zero()), "0");
        assert_eq!(bipoly_text(&BiPoly::constant(Int::from(-3))), "-3");
        assert_eq!("-1*P^2*Q + 1*P*Q^2".parse::<BiPoly>().unwrap(), f);
        assert!("2*X".parse::<BiPoly>().is_err());
    }

    #[test]
    fn natural_text() {
        // n + 1 - j(2j - 1)
        let j = JNPoly::x();
        let n = JNPoly::y();
        let two_j_minus_one = &j.scale(&rat(2)) - &JNPoly::one();
        let g = &(&n + &JNPoly::one()) - &(&j * &two_j_minus_one);
        assert_eq!(jnpoly_text(&g), "N - 2*J^2 + J + 1");
        assert_eq!(jnpoly_text(&JNPoly::zero()), "0");
        assert_eq!(jnpoly_text(&(-&n).scale(&ratio(3, 2))), "-3/2*N");
    }

    #[test]
    fn substitution_and_degrees() {
        // PQ with P = E - D, Q = E + D  ->  E^2 - D^2
        let d = DEPoly::x();
        let e = DEPoly::y();
        let pq = (&p() * &q()).to_rat();
        let sub = pq.substitute(&(&e - &d), &(&e + &d));
        assert_eq!(depoly_text(&sub), "-1*D^2 + 1*E^2");
        assert!(sub.is_even_in_x());
        assert_eq!(sub.total_degree(), Some(2));
        assert_eq!(BiPoly::zero().total_degree(), None);
    }

    #[test]
    fn specialization() {
        // (P + 1) Q^2 at P = -1 vanishes
        let f = &(&p() + &BiPoly::one()) * &(&q() * &q());
        assert!(f.specialize_x(&Int::from(-1)).is_zero());
        assert_eq!(
            f.specialize_y(&Int::from(2)).coeffs(),
            &[Int::from(4), Int::from(4)]
        );
    }

    #[test]
    fn univariate_basics() {
        let f = UniPoly::from_roots([rat(1), rat(-1)]);
        assert_eq!(f.coeffs(), &[rat(-1), rat(0), rat(1)]);
        assert_eq!(f.eval(&rat(3)), rat(8));
        assert_eq!(f.to_explicit_string("E"), "1*E^2 + -1");
        assert_eq!((&f - &f).degree(), None);
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec((-20i64..=20, 0u32..5, 0u32..5), 0..8).prop_map(|ts| {
            let mut f = BiPoly::zero();
            for (c, i, j) in ts {
                f.add_term(Int::from(c), i, j);
            }
            f
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(f in arb_bipoly()) {
            prop_assert_eq!(bipoly_text(&f).parse::<BiPoly>().unwrap(), f);
        }

        #[test]
        fn product_evaluates_pointwise(f in arb_bipoly(), g in arb_bipoly(), x in -5i64..5, y in -5i64..5) {
            let (x, y) = (Int::from(x), Int::from(y));
            prop_assert_eq!((&f * &g).eval(&x, &y), f.eval(&x, &y) * g.eval(&x, &y));
            prop_assert_eq!((&f - &g).eval(&x, &y), f.eval(&x, &y) - g.eval(&x, &y));
        }
    }
}
