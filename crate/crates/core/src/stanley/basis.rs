//! Expansion of an even polynomial in `D` over the falling-square basis
//! `1, D², D²(D² - 1²), D²(D² - 1²)(D² - 2²), ...` (or its half-integer shift).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{ratio, Rat};
use crate::poly::{DEPoly, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("polynomial has an odd power of D")]
    NotEven,
    #[error("degree {degree} in D exceeds 2j = {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },
}

/// Nodes of the basis products `∏_{r<k} (D² - node_r²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenBasis {
    /// `node_r = r`
    Integer,
    /// `node_r = r + 1/2`
    HalfInteger,
}

impl EvenBasis {
    pub fn node(self, r: u32) -> Rat {
        match self {
            EvenBasis::Integer => ratio(r as i64, 1),
            EvenBasis::HalfInteger => ratio(2 * r as i64 + 1, 2),
        }
    }

    /// `∏_{r=from}^{to-1} (x² - node_r²)` as a polynomial in `x`.
    pub fn square_product(self, from: u32, to: u32) -> UniPoly<Rat> {
        let mut acc = UniPoly::constant(Rat::one());
        for r in from..to {
            let n = self.node(r);
            let factor = UniPoly::new(vec![-(&n * &n), Rat::zero(), Rat::one()]);
            acc = &acc * &factor;
        }
        acc
    }
}

/// Coefficients `P_0(E), ..., P_j(E)` with `f = Σ_k P_k(E) ∏_{r<k} (D² - r²)`.
pub fn decompose_even_basis(f: &DEPoly, j: u32) -> Result<Vec<UniPoly<Rat>>, BasisError> {
    decompose_even_basis_with(f, j, EvenBasis::Integer)
}

pub fn decompose_even_basis_with(
    f: &DEPoly,
    j: u32,
    basis: EvenBasis,
) -> Result<Vec<UniPoly<Rat>>, BasisError> {
    if !f.is_even_in_x() {
        return Err(BasisError::NotEven);
    }
    let bound = 2 * j;
    if let Some(degree) = f.degree_in_x().filter(|&d| d > bound) {
        return Err(BasisError::DegreeTooHigh { degree, bound });
    }
    // remainder as D-coefficients, each a polynomial in E
    let mut rem: Vec<UniPoly<Rat>> = (0..=bound).map(|i| f.x_coefficient(i)).collect();
    let mut out = vec![UniPoly::zero(); j as usize + 1];
    for k in (0..=j).rev() {
        let pk = rem[2 * k as usize].clone();
        if pk.is_zero() {
            continue;
        }
        // the basis element of index k is monic of degree 2k in D
        let element = basis.square_product(0, k);
        for (deg, c) in element.coeffs().iter().enumerate() {
            if !c.is_zero() {
                rem[deg] = &rem[deg] - &pk.scale(c);
            }
        }
        out[k as usize] = pk;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    Ok(out)
}

/// Inverse of [`decompose_even_basis_with`].
pub fn reconstruct_even_basis(coeffs: &[UniPoly<Rat>], basis: EvenBasis) -> DEPoly {
    let mut out = DEPoly::zero();
    for (k, pk) in coeffs.iter().enumerate() {
        let element = basis.square_product(0, k as u32);
        for (dd, a) in element.coeffs().iter().enumerate() {
            for (ee, b) in pk.coeffs().iter().enumerate() {
                out.add_term(a * b, dd as u32, ee as u32);
            }
        }
    }
    out
}

/// The expansion of a degree-`2j` even polynomial together with the
/// constants predicted by its top-degree monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisStructure {
    pub j: u32,
    pub basis: EvenBasis,
    pub coefficients: Vec<UniPoly<Rat>>,
    /// `[D^{2k} E^{2(j-k)}] f`, one per `k`.
    pub monomial_constants: Vec<Rat>,
}

impl BasisStructure {
    /// `P_k` scaled back to a product of shifted squares: `c_k ∏_{r=k}^{j-1} (E² - node_r²)`.
    pub fn expected(&self, k: u32) -> UniPoly<Rat> {
        self.basis
            .square_product(k, self.j)
            .scale(&self.monomial_constants[k as usize])
    }

    /// Every `P_k` equals `c_k ∏_{r=k}^{j-1} (E² - node_r²)` with `c_k` the monomial coefficient.
    pub fn holds(&self) -> bool {
        (0..=self.j).all(|k| self.coefficients[k as usize] == self.expected(k))
    }
}

pub fn basis_structure(f: &DEPoly, j: u32, basis: EvenBasis) -> Result<BasisStructure, BasisError> {
    let coefficients = decompose_even_basis_with(f, j, basis)?;
    let monomial_constants = (0..=j).map(|k| f.coeff(2 * k, 2 * (j - k))).collect();
    Ok(BasisStructure {
        j,
        basis,
        coefficients,
        monomial_constants,
    })
}
