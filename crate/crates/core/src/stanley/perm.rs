use std::fmt;

use crate::young::Partition;

/// A permutation of `{1..k}`, stored zero-based in one-line form.
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(k: usize) -> Self {
        Self {
            images: (0..k).collect(),
        }
    }

    /// From one-line notation over `{1..k}`; `None` if not a bijection.
    pub fn from_one_line(one_based: &[usize]) -> Option<Self> {
        let k = one_based.len();
        let mut seen = vec![false; k];
        let mut images = Vec::with_capacity(k);
        for &v in one_based {
            if v == 0 || v > k || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Some(Self { images })
    }

    /// The transposition swapping `a` and `b` (one-based) in `S_k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a - 1, b - 1);
        Self { images }
    }

    /// Canonical representative of the class `π`: cycles on consecutive
    /// blocks, largest part first.
    pub fn of_cycle_type(pi: &Partition) -> Self {
        let k = pi.size();
        let mut images = vec![0; k];
        let mut start = 0;
        for &len in pi.parts() {
            for i in 0..len {
                images[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-based images.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Self { images }
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        cycle_count_of(&self.images)
    }

    /// Minimal number of transpositions, `k - κ(σ)`.
    pub fn length(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    pub fn cycle_type(&self) -> Partition {
        let k = self.images.len();
        let mut seen = vec![false; k];
        let mut lens = Vec::new();
        for s in 0..k {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_multiset(lens)
    }

    /// Advance to the lexicographically next arrangement; `false` at the last one.
    pub fn next_lex(&mut self) -> bool {
        next_permutation(&mut self.images)
    }

    /// Every element of `S_k` in lexicographic one-line order.
    pub fn all(k: usize) -> impl Iterator<Item = Perm> {
        let mut current = Some(Perm::identity(k));
        std::iter::from_fn(move || {
            let out = current.take()?;
            let mut next = out.clone();
            if next.next_lex() {
                current = Some(next);
            }
            Some(out)
        })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

pub(crate) fn cycle_count_of(images: &[usize]) -> usize {
    let mut seen: u128 = 0;
    let mut cycles = 0;
    if images.len() <= 128 {
        for s in 0..images.len() {
            if seen >> s & 1 == 1 {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = images[x];
            }
        }
        return cycles;
    }
    let mut seen = vec![false; images.len()];
    for s in 0..images.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
        }
    }
    cycles
}

pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<Perm> = Perm::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Perm::identity(4));
        assert_eq!(all[23].one_line(), vec![4, 3, 2, 1]);
        assert_eq!(Perm::all(0).count(), 1);
    }

    #[test]
    fn cycle_type_representative() {
        let pi = Partition::new(vec![3, 2, 1]).unwrap();
        let w = Perm::of_cycle_type(&pi);
        assert_eq!(w.one_line(), vec![2, 3, 1, 5, 4, 6]);
        assert_eq!(w.cycle_type(), pi);
        assert_eq!(w.cycle_count(), 3);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn composition_and_inverse() {
        let a = Perm::from_one_line(&[2, 3, 1]).unwrap();
        let b = Perm::transposition(3, 1, 2);
        // a(b(1)) = a(2) = 3
        assert_eq!(a.compose(&b).one_line(), vec![3, 2, 1]);
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        assert!(Perm::from_one_line(&[1, 1, 2]).is_none());
        assert_eq!(a.to_string(), "[2 3 1]");
    }

    #[test]
    fn cycle_count_large_degree() {
        let mut images: Vec<usize> = (0..200).collect();
        images.swap(0, 150);
        assert_eq!(cycle_count_of(&images), 199);
    }

    #[test]
    fn cycle_counts_follow_stirling_numbers() {
        // unsigned Stirling numbers of the first kind, k = 5
        let mut hist = [0u64; 6];
        for s in Perm::all(5) {
            hist[s.cycle_count()] += 1;
        }
        assert_eq!(hist, [0, 24, 50, 35, 10, 1]);
    }
}
