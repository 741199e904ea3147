//! Verification suites run by `rectchar verify`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed::{
    ch_rect_fast, corollary_poly, integrality_witness, leading_square_coeff, minus_one_row_poly,
    signed_catalan, CycleParity,
};
use crate::exact::{Int, Rat};
use crate::mn_oracle::{normalized_character, one_cycle_character};
use crate::poly::UniPoly;
use crate::stanley::{
    basis_structure, jm_factorization_check, stanley_poly, substitute_ed, EvenBasis,
};
use crate::young::{partitions_of, rectangle, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    OracleMatch,
    Transpose,
    Integrality,
    Vanishing,
    Jm,
    LeadingCatalan,
    Basis,
    MinusOne,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::OracleMatch,
        Suite::Transpose,
        Suite::Integrality,
        Suite::Vanishing,
        Suite::Jm,
        Suite::LeadingCatalan,
        Suite::Basis,
        Suite::MinusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleMatch => "oracle-match",
            Suite::Transpose => "transpose",
            Suite::Integrality => "integrality",
            Suite::Vanishing => "vanishing",
            Suite::Jm => "jm",
            Suite::LeadingCatalan => "leading-catalan",
            Suite::Basis => "basis",
            Suite::MinusOne => "minus-one",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Optional overrides of each suite's default range.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub k_max: Option<usize>,
    pub pq_max: Option<usize>,
    pub j_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub case: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseResult {
    fn check(suite: Suite, case: String, mismatch: Option<String>) -> Self {
        Self {
            suite: suite.name(),
            case,
            passed: mismatch.is_none(),
            detail: mismatch,
        }
    }
}

pub fn cmd_verify(suite: Suite, bounds: &Bounds) -> Vec<CaseResult> {
    match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| cmd_verify(s, bounds))
            .collect(),
        Suite::OracleMatch => oracle_match(bounds.k_max.unwrap_or(7), bounds.pq_max.unwrap_or(6)),
        Suite::Transpose => transpose(bounds.k_max.unwrap_or(8)),
        Suite::Integrality => integrality(bounds.k_max.unwrap_or(12)),
        Suite::Vanishing => vanishing(bounds.j_max.unwrap_or(6)),
        Suite::Jm => jm(bounds.k_max.unwrap_or(6)),
        Suite::LeadingCatalan => leading_catalan(bounds.j_max.unwrap_or(4)),
        Suite::Basis => basis(bounds.j_max.unwrap_or(3)),
        Suite::MinusOne => minus_one(bounds.k_max.unwrap_or(8)),
    }
}

fn show(v: &Rat) -> String {
    super::engine::format_value(v)
}

/// Oracle against Stanley on every `π` with `|π| <= k_max`, plus the closed
/// form for single cycles.
fn oracle_match(k_max: usize, pq_max: usize) -> Vec<CaseResult> {
    let pis: Vec<Partition> = (1..=k_max).flat_map(partitions_of).collect();
    pis.par_iter()
        .flat_map_iter(|pi| {
            let poly = stanley_poly(pi);
            let pi = pi.clone();
            (1..=pq_max)
                .flat_map(move |p| (1..=pq_max).map(move |q| (p, q)))
                .map(move |(p, q)| {
                    let oracle = normalized_character(&pi, &rectangle(p, q));
                    let stanley = Rat::from_integer(poly.eval(&Int::from(p), &Int::from(q)));
                    let closed = (pi.len() == 1).then(|| {
                        ch_rect_fast(pi.parts()[0] as u64, p as u64, q as u64)
                            .unwrap_or_else(|e| panic!("closed form failed on {p}x{q}: {e}"))
                    });
                    let mut bad = None;
                    if stanley != oracle {
                        bad = Some(format!(
                            "oracle {} stanley {}",
                            show(&oracle),
                            show(&stanley)
                        ));
                    } else if let Some(c) = closed.filter(|c| *c != oracle) {
                        bad = Some(format!("oracle {} closed {}", show(&oracle), show(&c)));
                    }
                    CaseResult::check(Suite::OracleMatch, format!("pi={pi} p={p} q={q}"), bad)
                })
        })
        .collect()
}

fn transpose(k_max: usize) -> Vec<CaseResult> {
    let pis: Vec<Partition> = (1..=k_max).flat_map(partitions_of).collect();
    pis.par_iter()
        .map(|pi| {
            let f = stanley_poly(pi);
            let sign = if (pi.size() - pi.len()) % 2 == 0 {
                1
            } else {
                -1
            };
            let twisted = f.swap_vars().scale(&Int::from(sign));
            let bound = (pi.size() + pi.len()) as u32;
            let degree = f.total_degree().unwrap_or(0);
            let bad = if twisted != f {
                Some("P <-> Q symmetry fails".to_string())
            } else if degree > bound || (pi.len() == 1 && degree != bound) {
                Some(format!("degree {degree}, bound {bound}"))
            } else {
                None
            };
            CaseResult::check(Suite::Transpose, format!("pi={pi}"), bad)
        })
        .collect()
}

fn integrality(witness_k_max: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for two_d in -12i64..=12 {
        for cycle in [CycleParity::Odd, CycleParity::Even] {
            let f = corollary_poly(two_d, cycle);
            let bad = (!f.is_integral()).then(|| "non-integer coefficient".to_string());
            out.push(CaseResult::check(
                Suite::Integrality,
                format!("family polynomial 2d={two_d} cycle={cycle:?}"),
                bad,
            ));
        }
    }
    for k in 1..=witness_k_max as u64 {
        let bad = (-20i64..=20)
            .find(|&d| !integrality_witness(d, k).is_integer())
            .map(|d| format!("d={d} gives {}", show(&integrality_witness(d, k))));
        out.push(CaseResult::check(
            Suite::Integrality,
            format!("witness k={k} d=-20..20"),
            bad,
        ));
    }
    out
}

fn vanishing(j_max: usize) -> Vec<CaseResult> {
    (2..=j_max)
        .into_par_iter()
        .map(|j| {
            let (p, q, k) = (2 * j - 2, 2 * j + 1, 2 * j - 1);
            let chi = one_cycle_character(&rectangle(p, q), k).expect("k <= n");
            let fast = ch_rect_fast(k as u64, p as u64, q as u64).expect("valid diagram");
            let bad = (!chi.is_zero_int() || fast != Rat::from_integer(Int::from(0)))
                .then(|| format!("character {chi}, closed {}", show(&fast)));
            CaseResult::check(Suite::Vanishing, format!("j={j} {p}x{q} cycle {k}"), bad)
        })
        .collect()
}

trait IsZeroInt {
    fn is_zero_int(&self) -> bool;
}

impl IsZeroInt for Int {
    fn is_zero_int(&self) -> bool {
        *self == Int::from(0)
    }
}

fn jm(k_max: usize) -> Vec<CaseResult> {
    (1..=k_max)
        .map(|k| {
            let bad = (!jm_factorization_check(k)).then(|| "group ring identity fails".to_string());
            CaseResult::check(Suite::Jm, format!("k={k}"), bad)
        })
        .collect()
}

fn leading_catalan(j_max: usize) -> Vec<CaseResult> {
    (1..=j_max as u64)
        .map(|j| {
            let got = leading_square_coeff(j);
            let want = signed_catalan(j);
            let bad = (got != want).then(|| format!("got {}, want {}", show(&got), show(&want)));
            CaseResult::check(Suite::LeadingCatalan, format!("j={j}"), bad)
        })
        .collect()
}

fn basis(j_max: usize) -> Vec<CaseResult> {
    (1..=j_max as u32)
        .map(|j| {
            let pi = Partition::new(vec![2 * j as usize - 1]).expect("positive");
            let f = substitute_ed(&stanley_poly(&pi));
            let whole = basis_structure(&f, j, EvenBasis::Integer);
            let half = basis_structure(&f, j, EvenBasis::HalfInteger);
            let bad = match (whole, half) {
                (Ok(w), Ok(h)) if w.holds() && h.holds() => None,
                (Ok(w), Ok(h)) => Some(format!(
                    "integer holds: {}, half holds: {}",
                    w.holds(),
                    h.holds()
                )),
                (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
            };
            CaseResult::check(Suite::Basis, format!("j={j}"), bad)
        })
        .collect()
}

fn minus_one(k_max: usize) -> Vec<CaseResult> {
    (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let f = stanley_poly(&Partition::new(vec![k]).expect("positive"));
            let row = f.specialize_x(&Int::from(-1));
            let col = f.specialize_y(&Int::from(-1));
            let want_row = minus_one_row_poly(k as u64);
            let sign = Int::from(if k % 2 == 0 { 1 } else { -1 });
            let want_col: UniPoly<Int> = want_row.scale(&-sign);
            let bad = if row != want_row {
                Some("P = -1 specialization differs".to_string())
            } else if col != want_col {
                Some("Q = -1 specialization differs".to_string())
            } else {
                None
            };
            CaseResult::check(Suite::MinusOne, format!("k={k}"), bad)
        })
        .collect()
}
