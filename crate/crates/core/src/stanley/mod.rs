//! Stanley's formula for characters on rectangles.
//!
//! `Ch_π(p × q) = (-1)^k Σ_{σ1 σ2 = w_π} (-q)^{κ(σ1)} p^{κ(σ2)}` where `k = |π|`,
//! `κ` counts cycles and `w_π` is a fixed permutation of cycle type `π`.
//! Only `σ1` is enumerated; `σ2 = σ1⁻¹ w_π` is determined by it.

mod basis;
mod group_ring;
mod perm;

pub use basis::{
    basis_structure, decompose_even_basis, decompose_even_basis_with, reconstruct_even_basis,
    BasisError, BasisStructure, EvenBasis,
};
pub use group_ring::{jm_factorization_check, GroupRingElem};
pub use perm::Perm;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exact::{Int, Rat};
use crate::poly::{BiPoly, DEPoly};
use crate::young::Partition;
use perm::{cycle_count_of, next_permutation};

/// Joint distribution of `(κ(σ1), κ(σ2))` over all factorizations `σ1 σ2 = w_π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleHistogram {
    k: usize,
    /// `counts[a][b]` = number of `σ1` with `κ(σ1) = a`, `κ(σ1⁻¹ w) = b`.
    counts: Vec<Vec<u64>>,
}

impl CycleHistogram {
    /// Enumerates `S_k`, split by the first one-line entry across the rayon pool.
    pub fn of(pi: &Partition) -> Self {
        let k = pi.size();
        let w = Perm::of_cycle_type(pi);
        let w = w.images();
        let blank = vec![vec![0u64; k + 1]; k + 1];
        if k == 0 {
            let mut counts = blank;
            counts[0][0] = 1;
            return Self { k, counts };
        }
        let counts = (0..k)
            .into_par_iter()
            .map(|first| {
                let mut counts = vec![vec![0u64; k + 1]; k + 1];
                let mut sigma: Vec<usize> = std::iter::once(first)
                    .chain((0..k).filter(|&v| v != first))
                    .collect();
                let mut inv = vec![0usize; k];
                let mut tau = vec![0usize; k];
                loop {
                    for (i, &v) in sigma.iter().enumerate() {
                        inv[v] = i;
                    }
                    for x in 0..k {
                        tau[x] = inv[w[x]];
                    }
                    counts[cycle_count_of(&sigma)][cycle_count_of(&tau)] += 1;
                    if !next_permutation(&mut sigma[1..]) {
                        break;
                    }
                }
                counts
            })
            .reduce(
                || blank.clone(),
                |mut a, b| {
                    for (ra, rb) in a.iter_mut().zip(b) {
                        for (x, y) in ra.iter_mut().zip(rb) {
                            *x += y;
                        }
                    }
                    a
                },
            );
        Self { k, counts }
    }

    pub fn count(&self, kappa1: usize, kappa2: usize) -> u64 {
        self.counts
            .get(kappa1)
            .and_then(|r| r.get(kappa2))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// The character polynomial in `ℤ[P, Q]`.
    pub fn to_poly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (a, row) in self.counts.iter().enumerate() {
            for (b, &h) in row.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let mut c = Int::from(h);
                if (self.k + a) % 2 == 1 {
                    c = -c;
                }
                out.add_term(c, b as u32, a as u32);
            }
        }
        out
    }
}

/// `Ch_π(p × q)` from the factorization sum, at arbitrary rational `p`, `q`.
pub fn stanley_eval(pi: &Partition, p: &Rat, q: &Rat) -> Rat {
    let hist = CycleHistogram::of(pi);
    let minus_q = -q.clone();
    let mut total = Rat::zero();
    for (a, row) in hist.counts.iter().enumerate() {
        for (b, &h) in row.iter().enumerate() {
            if h != 0 {
                total += Rat::from_integer(Int::from(h)) * pow(&minus_q, a) * pow(p, b);
            }
        }
    }
    if hist.k % 2 == 1 {
        -total
    } else {
        total
    }
}

fn pow(x: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * x)
}

/// The exact polynomial `Ch_π(P × Q) ∈ ℤ[P, Q]`.
pub fn stanley_poly(pi: &Partition) -> BiPoly {
    CycleHistogram::of(pi).to_poly()
}

/// Change of variables `P = E - D`, `Q = E + D`.
pub fn substitute_ed(f: &BiPoly) -> DEPoly {
    let d = DEPoly::x();
    let e = DEPoly::y();
    f.to_rat().substitute(&(&e - &d), &(&e + &d))
}
