//! Ground-truth characters via the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{falling_factorial, Int, Rat};
use crate::young::{dim_f, rim_hooks_of_length, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("shape {shape} and class {class} have different sizes")]
    SizeMismatch { shape: Partition, class: Partition },
    #[error("cycle length {k} is out of range for a diagram with {n} boxes")]
    OutOfRange { k: usize, n: usize },
}

/// A raw character query `χ^λ_μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharQuery {
    pub shape: Partition,
    pub class_type: Partition,
}

impl CharQuery {
    pub fn evaluate(&self) -> Result<Int, OracleError> {
        character_mn(&self.shape, &self.class_type)
    }
}

/// `χ^λ_μ` by recursive rim-hook removal, longest cycles first.
///
/// Once only fixed points remain the value is `f^λ`, so the recursion never
/// descends through the trailing ones of `μ`.
pub fn character_mn(lambda: &Partition, mu: &Partition) -> Result<Int, OracleError> {
    if lambda.size() != mu.size() {
        return Err(OracleError::SizeMismatch {
            shape: lambda.clone(),
            class: mu.clone(),
        });
    }
    let mut cycles = mu.parts().to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, &cycles, 0, &mut memo))
}

fn mn_rec(
    shape: &Partition,
    cycles: &[usize],
    idx: usize,
    memo: &mut HashMap<(Partition, usize), Int>,
) -> Int {
    if idx == cycles.len() || cycles[idx] == 1 {
        return dim_f(shape);
    }
    let key = (shape.clone(), idx);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = Int::zero();
    for hook in rim_hooks_of_length(shape, cycles[idx]) {
        let sub = mn_rec(&hook.remainder, cycles, idx + 1, memo);
        if hook.sign() > 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ^λ_{(k, 1^{n-k})}`: a single signed sum over rim hooks of length `k`.
pub fn one_cycle_character(lambda: &Partition, k: usize) -> Result<Int, OracleError> {
    let n = lambda.size();
    if k == 0 || k > n {
        return Err(OracleError::OutOfRange { k, n });
    }
    let mut total = Int::zero();
    for hook in rim_hooks_of_length(lambda, k) {
        let f = dim_f(&hook.remainder);
        if hook.sign() > 0 {
            total += f;
        } else {
            total -= f;
        }
    }
    Ok(total)
}

/// `Ch_π(λ) = n^{↓k} χ^λ_{π ∪ 1^{n-k}} / f^λ`, and zero when `n < k`.
pub fn normalized_character(pi: &Partition, lambda: &Partition) -> Rat {
    let n = lambda.size();
    let k = pi.size();
    if n < k {
        return Rat::zero();
    }
    let mu = pi.with_fixed_points(n - k);
    let chi = character_mn(lambda, &mu).expect("sizes agree by construction");
    if chi.is_zero() {
        return Rat::zero();
    }
    let scale = falling_factorial(&Rat::from_integer(Int::from(n)), k as u32);
    scale * Rat::new(chi, dim_f(lambda))
}

/// Same as [`normalized_character`] for a single cycle, via [`one_cycle_character`].
pub fn normalized_one_cycle(k: usize, lambda: &Partition) -> Rat {
    let n = lambda.size();
    if n < k {
        return Rat::zero();
    }
    if k == 0 {
        return Rat::one();
    }
    let chi = one_cycle_character(lambda, k).expect("1 <= k <= n");
    let scale = falling_factorial(&Rat::from_integer(Int::from(n)), k as u32);
    scale * Rat::new(chi, dim_f(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::young::{partitions_of, rectangle, transpose};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_examples() {
        assert_eq!(
            character_mn(&part(&[2, 2]), &part(&[3, 1])).unwrap(),
            Int::from(-1)
        );
        assert_eq!(
            character_mn(&part(&[1, 1]), &part(&[2])).unwrap(),
            Int::from(-1)
        );
        assert_eq!(
            character_mn(&Partition::empty(), &Partition::empty()).unwrap(),
            Int::from(1)
        );
        for mu in partitions_of(6) {
            assert_eq!(character_mn(&part(&[6]), &mu).unwrap(), Int::from(1));
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let err = character_mn(&part(&[2, 2]), &part(&[3])).unwrap_err();
        assert!(matches!(err, OracleError::SizeMismatch { .. }));
        let q = CharQuery {
            shape: part(&[2, 1]),
            class_type: part(&[2, 1]),
        };
        assert_eq!(q.evaluate().unwrap(), Int::from(0));
    }

    #[test]
    fn character_table_of_s4() {
        // rows λ = 4, 31, 22, 211, 1111; columns μ = 4, 31, 22, 211, 1111
        let table: [[i64; 5]; 5] = [
            [1, 1, 1, 1, 1],
            [-1, 0, -1, 1, 3],
            [0, -1, 2, 0, 2],
            [1, 0, -1, -1, 3],
            [-1, 1, 1, -1, 1],
        ];
        let ps = partitions_of(4);
        for (i, lambda) in ps.iter().enumerate() {
            for (j, mu) in ps.iter().enumerate() {
                assert_eq!(
                    character_mn(lambda, mu).unwrap(),
                    Int::from(table[i][j]),
                    "{lambda} {mu}"
                );
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        // Σ_λ χ^λ_μ χ^λ_ν = δ_{μν} z_μ; check the diagonal is positive and off-diagonal vanishes
        for n in 1..=7 {
            let ps = partitions_of(n);
            for (a, mu) in ps.iter().enumerate() {
                for nu in &ps[a + 1..] {
                    let s: Int = ps
                        .iter()
                        .map(|l| character_mn(l, mu).unwrap() * character_mn(l, nu).unwrap())
                        .sum();
                    assert!(s.is_zero(), "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn one_cycle_examples() {
        assert_eq!(
            one_cycle_character(&part(&[2, 2]), 3).unwrap(),
            Int::from(-1)
        );
        assert_eq!(
            one_cycle_character(&part(&[5, 5]), 3).unwrap(),
            Int::from(0)
        );
        assert_eq!(one_cycle_character(&part(&[7]), 4).unwrap(), Int::from(1));
        assert_eq!(
            one_cycle_character(&part(&[2]), 3),
            Err(OracleError::OutOfRange { k: 3, n: 2 })
        );
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized_character(&part(&[1]), &part(&[2, 2])), rat(4));
        assert_eq!(normalized_character(&part(&[3]), &part(&[2, 2])), rat(-12));
        assert_eq!(normalized_character(&part(&[3]), &part(&[1, 1])), rat(0));
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                let ones = Partition::empty().with_fixed_points(n);
                assert_eq!(character_mn(&lambda, &ones).unwrap(), dim_f(&lambda));
            }
        }
    }

    #[test]
    fn conjugation_twists_by_sign() {
        for n in 1..=10 {
            let ps = partitions_of(n);
            for lambda in &ps {
                let lt = transpose(lambda);
                for mu in &ps {
                    let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        character_mn(&lt, mu).unwrap(),
                        character_mn(lambda, mu).unwrap() * sign
                    );
                }
            }
        }
    }

    #[test]
    fn one_cycle_agrees_with_recursion() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                for k in 1..=n {
                    let mu = part(&[k]).with_fixed_points(n - k);
                    assert_eq!(
                        one_cycle_character(&lambda, k).unwrap(),
                        character_mn(&lambda, &mu).unwrap()
                    );
                    assert_eq!(
                        normalized_one_cycle(k, &lambda),
                        normalized_character(&part(&[k]), &lambda)
                    );
                }
            }
        }
    }

    #[test]
    fn rectangular_characters_are_integers() {
        for p in 1..=5 {
            for q in 1..=5 {
                for k in 1..=6 {
                    for pi in partitions_of(k) {
                        let v = normalized_character(&pi, &rectangle(p, q));
                        assert!(v.is_integer(), "{pi} on {p}x{q}: {v}");
                    }
                }
            }
        }
    }
}
