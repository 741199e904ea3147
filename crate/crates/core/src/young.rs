//! Partitions, Young diagrams and their combinatorics.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{factorial, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("parts must be strictly decreasing, got {0:?}")]
    NotStrict(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// Serializes as a plain JSON array of integers and displays as `[a1,a2,...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros; use for cycle types given in any order.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Appends `count` parts equal to one, e.g. `π ∪ 1^{n-k}`.
    pub fn with_fixed_points(&self, count: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, count));
        Self { parts }
    }

    /// Hook length of the box in row `i`, column `j` (both zero-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `[3,3,1]`, `3,3,1` or a single part `4`; `[]` is the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Self::new(parts)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// A border strip removed from a diagram, described by what is left behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    pub remainder: Partition,
    /// Rows spanned minus one.
    pub height: usize,
}

impl RimHook {
    pub fn sign(&self) -> i32 {
        if self.height.is_even() {
            1
        } else {
            -1
        }
    }
}

/// The `p × q` rectangle: `p` rows of length `q`.
pub fn rectangle(p: usize, q: usize) -> Partition {
    if p == 0 || q == 0 {
        return Partition::empty();
    }
    Partition { parts: vec![q; p] }
}

/// Conjugate partition (column lengths).
pub fn transpose(lambda: &Partition) -> Partition {
    let first = lambda.parts.first().copied().unwrap_or(0);
    let parts = (0..first)
        .map(|j| lambda.parts.iter().take_while(|&&p| p > j).count())
        .collect();
    Partition { parts }
}

/// Number of standard Young tableaux, `n! / ∏ hooks`.
pub fn dim_f(lambda: &Partition) -> Int {
    let mut hooks = Int::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            hooks *= lambda.hook_length(i, j);
        }
    }
    let (q, r) = factorial(lambda.size() as u64).div_rem(&hooks);
    debug_assert!(r.is_zero());
    q
}

/// All border strips with exactly `k` boxes.
///
/// Uses the beta-set picture: a strip of length `k` is a bead slid from
/// position `x` to a free position `x - k`, its height the number of beads
/// jumped over. Hooks are listed by their upper row, lowest row first.
pub fn rim_hooks_of_length(lambda: &Partition, k: usize) -> Vec<RimHook> {
    let len = lambda.len();
    if k == 0 || k > lambda.size() {
        return Vec::new();
    }
    // beads[i] = λ_i + (len - 1 - i), strictly decreasing
    let beads: Vec<usize> = lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut hooks = Vec::new();
    for row in (0..len).rev() {
        let x = beads[row];
        if x < k {
            continue;
        }
        let target = x - k;
        if beads.contains(&target) {
            continue;
        }
        let height = beads.iter().filter(|&&b| b > target && b < x).count();
        let mut moved = beads.clone();
        moved[row] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        hooks.push(RimHook {
            remainder: Partition { parts },
            height,
        });
    }
    hooks
}

/// `Δ_p = (p, p-1, ..., 1)`.
pub fn staircase(p: usize) -> StrictPartition {
    StrictPartition {
        parts: (1..=p).rev().collect(),
    }
}

/// The double of a strict partition: Frobenius coordinates `(ξ_1, ..., ξ_l | ξ_1 - 1, ..., ξ_l - 1)`.
pub fn double_strict(xi: &StrictPartition) -> Partition {
    let arms = &xi.parts;
    let rank = arms.len();
    // column i (i < rank) has length leg_i + i + 1 = ξ_i + i
    let col_len: Vec<usize> = arms.iter().enumerate().map(|(i, &a)| a + i).collect();
    let mut parts: Vec<usize> = arms.iter().enumerate().map(|(i, &a)| a + i + 1).collect();
    let depth = col_len.first().copied().unwrap_or(0);
    for row in rank..depth {
        parts.push(col_len.iter().filter(|&&c| c > row).count());
    }
    Partition { parts }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Counts standard tableaux by removing corners one at a time.
    fn count_tableaux(lambda: &[usize]) -> u64 {
        if lambda.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..lambda.len() {
            let is_corner = i + 1 == lambda.len() || lambda[i + 1] < lambda[i];
            if is_corner {
                let mut smaller = lambda.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += count_tableaux(&smaller);
            }
        }
        total
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(
            Partition::new(vec![2, 3]),
            Err(PartitionError::NotDecreasing(_))
        ));
        assert!(matches!(
            Partition::new(vec![2, 0]),
            Err(PartitionError::ZeroPart(_))
        ));
        assert!(matches!(
            StrictPartition::new(vec![2, 2]),
            Err(PartitionError::NotStrict(_))
        ));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,3,1]".parse::<Partition>().unwrap(), part(&[3, 3, 1]));
        assert_eq!("4, 2".parse::<Partition>().unwrap(), part(&[4, 2]));
        assert_eq!("7".parse::<Partition>().unwrap(), part(&[7]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(part(&[4, 2, 1]).to_string(), "[4,2,1]");
        assert_eq!(serde_json::to_string(&part(&[4, 2, 1])).unwrap(), "[4,2,1]");
        assert_eq!(
            serde_json::from_str::<Partition>("[5,5]").unwrap(),
            rectangle(2, 5)
        );
        assert!(serde_json::from_str::<Partition>("[1,5]").is_err());
    }

    #[test]
    fn dim_f_values() {
        assert_eq!(dim_f(&part(&[1])), Int::from(1));
        assert_eq!(dim_f(&part(&[9])), Int::from(1));
        assert_eq!(dim_f(&Partition::empty()), Int::from(1));
        assert_eq!(dim_f(&part(&[2, 2])), Int::from(count_tableaux(&[2, 2])));
        assert_eq!(dim_f(&part(&[2, 2])), Int::from(2));
    }

    #[test]
    fn dim_f_matches_tableau_count() {
        for n in 0..=9 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    dim_f(&lambda),
                    Int::from(count_tableaux(lambda.parts())),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions_is_factorial() {
        for n in 0..=8 {
            let total: Int = partitions_of(n).iter().map(|l| dim_f(l) * dim_f(l)).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn transpose_values() {
        assert_eq!(transpose(&part(&[3, 3])), part(&[2, 2, 2]));
        assert_eq!(transpose(&Partition::empty()), Partition::empty());
        assert_eq!(transpose(&part(&[4, 2, 1])), part(&[3, 2, 1, 1]));
    }

    #[test]
    fn dim_f_invariant_under_transpose() {
        for n in 0..=20 {
            for lambda in partitions_of(n) {
                assert_eq!(dim_f(&lambda), dim_f(&transpose(&lambda)));
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        assert_eq!(
            rim_hooks_of_length(&part(&[2, 2]), 3),
            vec![RimHook {
                remainder: part(&[1]),
                height: 1
            }]
        );
        assert!(rim_hooks_of_length(&part(&[2, 2]), 5).is_empty());
        assert_eq!(
            rim_hooks_of_length(&part(&[5, 5]), 3),
            vec![
                RimHook {
                    remainder: part(&[5, 2]),
                    height: 0
                },
                RimHook {
                    remainder: part(&[4, 3]),
                    height: 1
                },
            ]
        );
        // whole diagram as one strip
        assert_eq!(
            rim_hooks_of_length(&part(&[3, 1]), 4),
            vec![RimHook {
                remainder: Partition::empty(),
                height: 1
            }]
        );
    }

    /// Border strips by brute force: subtract every partition μ ⊂ λ of the
    /// right size and keep skew shapes that are connected and contain no 2×2 block.
    fn brute_force_strips(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
        let n = lambda.size();
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        for mu in partitions_of(n - k) {
            if mu.len() > lambda.len() || mu.parts().iter().zip(lambda.parts()).any(|(a, b)| a > b)
            {
                continue;
            }
            let inner = |i: usize| mu.parts().get(i).copied().unwrap_or(0);
            let cells: Vec<(usize, usize)> = (0..lambda.len())
                .flat_map(|i| (inner(i)..lambda.parts()[i]).map(move |j| (i, j)))
                .collect();
            let has_square = cells.iter().any(|&(i, j)| {
                cells.contains(&(i + 1, j))
                    && cells.contains(&(i, j + 1))
                    && cells.contains(&(i + 1, j + 1))
            });
            if has_square {
                continue;
            }
            // connectivity by flood fill
            let mut seen = vec![cells[0]];
            let mut stack = vec![cells[0]];
            while let Some((i, j)) = stack.pop() {
                for c in cells.iter().copied() {
                    let adj = (c.0 == i && (c.1 + 1 == j || j + 1 == c.1))
                        || (c.1 == j && (c.0 + 1 == i || i + 1 == c.0));
                    if adj && !seen.contains(&c) {
                        seen.push(c);
                        stack.push(c);
                    }
                }
            }
            if seen.len() != cells.len() {
                continue;
            }
            let rows: std::collections::BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
            out.push((mu, rows.len() - 1));
        }
        out
    }

    #[test]
    fn rim_hooks_match_brute_force() {
        for n in 1..=9 {
            for lambda in partitions_of(n) {
                for k in 1..=n {
                    let mut fast: Vec<(Partition, usize)> = rim_hooks_of_length(&lambda, k)
                        .into_iter()
                        .map(|h| (h.remainder, h.height))
                        .collect();
                    let mut slow = brute_force_strips(&lambda, k);
                    fast.sort();
                    slow.sort();
                    assert_eq!(fast, slow, "λ = {lambda}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn staircase_and_double() {
        assert_eq!(staircase(1).parts(), &[1]);
        assert_eq!(staircase(3).parts(), &[3, 2, 1]);
        assert_eq!(staircase(4).parts(), &[4, 3, 2, 1]);
        let single = StrictPartition::new(vec![1]).unwrap();
        assert_eq!(double_strict(&single), part(&[2]));
        assert_eq!(double_strict(&staircase(2)), part(&[3, 3]));
        assert_eq!(double_strict(&staircase(3)), part(&[4, 4, 4]));
        let xi = StrictPartition::new(vec![4, 1]).unwrap();
        // Frobenius (4,1 | 3,0): rows 5,3 then columns of length 4,2
        assert_eq!(double_strict(&xi), part(&[5, 3, 1, 1]));
    }

    #[test]
    fn double_of_staircase_is_almost_square() {
        for p in 1..=8 {
            assert_eq!(double_strict(&staircase(p)), rectangle(p, p + 1));
        }
    }

    #[test]
    fn rectangle_values() {
        assert_eq!(rectangle(2, 3), part(&[3, 3]));
        assert_eq!(rectangle(0, 5), Partition::empty());
        assert_eq!(rectangle(3, 1), part(&[1, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), c);
        }
    }

    fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..=max_size, 0..=max_size).prop_map(move |mut v| {
            let mut total = 0;
            v.retain(|&x| {
                total += x;
                total <= max_size
            });
            Partition::from_multiset(v)
        })
    }

    fn arb_strict() -> impl Strategy<Value = StrictPartition> {
        proptest::collection::btree_set(1usize..=12, 0..6)
            .prop_map(|s| StrictPartition::new(s.into_iter().rev().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn transpose_is_involution(lambda in arb_partition(30)) {
            prop_assert_eq!(transpose(&transpose(&lambda)), lambda);
        }

        #[test]
        fn rim_hook_remainders_are_partitions(lambda in arb_partition(25), k in 1usize..12) {
            for hook in rim_hooks_of_length(&lambda, k) {
                prop_assert_eq!(hook.remainder.size() + k, lambda.size());
                prop_assert!(Partition::new(hook.remainder.parts().to_vec()).is_ok());
                prop_assert!(hook.height < k);
            }
        }

        #[test]
        fn double_has_twice_the_size(xi in arb_strict()) {
            let d = double_strict(&xi);
            prop_assert_eq!(d.size(), 2 * xi.size());
            prop_assert!(Partition::new(d.parts().to_vec()).is_ok());
        }
    }
}
