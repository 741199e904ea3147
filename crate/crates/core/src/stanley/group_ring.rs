use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::perm::Perm;
use crate::exact::Int;

/// An element of the integral group ring `ℤ[S_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    degree: usize,
    terms: BTreeMap<Perm, Int>,
}

impl GroupRingElem {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::basis(Perm::identity(degree))
    }

    pub fn basis(perm: Perm) -> Self {
        let degree = perm.degree();
        let mut terms = BTreeMap::new();
        terms.insert(perm, Int::one());
        Self { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, perm: Perm, c: Int) {
        debug_assert_eq!(perm.degree(), self.degree);
        let slot = self.terms.entry(perm).or_insert_with(Int::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, perm: &Perm) -> Int {
        self.terms.get(perm).cloned().unwrap_or_else(Int::zero)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// `Σ_{σ ∈ S_k} σ`.
    pub fn sum_of_all(degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for s in Perm::all(degree) {
            out.terms.insert(s, Int::one());
        }
        out
    }

    /// Jucys–Murphy element `J_i = (1,i) + ... + (i-1,i)`, one-based `i`.
    pub fn jucys_murphy(degree: usize, i: usize) -> Self {
        let mut out = Self::zero(degree);
        for m in 1..i {
            out.add_term(Perm::transposition(degree, m, i), Int::one());
        }
        out
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;

    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;

    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut acc: BTreeMap<Perm, Int> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *acc.entry(a.compose(b)).or_insert_with(Int::zero) += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupRingElem {
            degree: self.degree,
            terms: acc,
        }
    }
}

/// Checks `(1 + J_1)(1 + J_2)...(1 + J_k) = Σ_{σ ∈ S_k} σ` in `ℤ[S_k]`.
pub fn jm_factorization_check(k: usize) -> bool {
    let one = GroupRingElem::one(k);
    let mut product = one.clone();
    for i in 1..=k {
        let factor = &one + &GroupRingElem::jucys_murphy(k, i);
        product = &product * &factor;
    }
    product == GroupRingElem::sum_of_all(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_small_degrees() {
        for k in 1..=5 {
            assert!(jm_factorization_check(k), "k = {k}");
        }
    }

    #[test]
    fn jucys_murphy_elements_commute() {
        let k = 4;
        for a in 1..=k {
            for b in 1..=k {
                let ja = GroupRingElem::jucys_murphy(k, a);
                let jb = GroupRingElem::jucys_murphy(k, b);
                assert_eq!(&ja * &jb, &jb * &ja);
            }
        }
    }

    #[test]
    fn missing_factor_breaks_the_identity() {
        // dropping a factor loses the top-degree permutations
        let k = 3;
        let one = GroupRingElem::one(k);
        let partial = &(&one + &GroupRingElem::jucys_murphy(k, 2)) * &one;
        assert_ne!(partial, GroupRingElem::sum_of_all(k));
        assert_eq!(GroupRingElem::jucys_murphy(k, 1), GroupRingElem::zero(k));
        assert_eq!(GroupRingElem::sum_of_all(k).support_size(), 6);
    }
}
