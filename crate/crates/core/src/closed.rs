//! Closed formulas for one-cycle characters on rectangles.
//!
//! Write the rectangle as `(e - d) × (e + d)`, so that `p = e - d`,
//! `q = e + d` and `n = pq = e² - d²`. The character `Ch_k` then has four
//! expansions, one per combination of the parity of `k` and of `2d = q - p`.
//! For fixed `d` they collapse to a product over `n` times one of four
//! polynomials `G_d, H_d, I_d, J_d` in `(j, n)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{
    binomial, catalan, double_factorial, double_rising_factorial, extended_product, factorial,
    falling_factorial, rat, ratio, ExactError, HalfInt, Int, Rat,
};
use crate::poly::{JNPoly, UniPoly};
use crate::stanley::{stanley_poly, substitute_ed};
use crate::young::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleParity {
    /// `k = 2j - 1`
    Odd,
    /// `k = 2j`
    Even,
}

impl CycleParity {
    pub fn of(k_cycle: u64) -> Self {
        if k_cycle % 2 == 1 {
            CycleParity::Odd
        } else {
            CycleParity::Even
        }
    }

    /// The `j` with `k = 2j - 1` or `k = 2j`.
    pub fn half_index(k_cycle: u64) -> u64 {
        k_cycle.div_ceil(2)
    }
}

/// Parity of `2d = q - p`. Even means integer shifts `r`, odd means half-integer shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiffParity {
    Even,
    Odd,
}

impl DiffParity {
    pub fn of(two_d: i64) -> Self {
        if two_d % 2 == 0 {
            DiffParity::Even
        } else {
            DiffParity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityCase {
    pub cycle: CycleParity,
    pub diff: DiffParity,
}

/// The four polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    G,
    H,
    I,
    J,
}

impl ParityCase {
    pub fn new(cycle: CycleParity, diff: DiffParity) -> Self {
        Self { cycle, diff }
    }

    pub fn family(self) -> Family {
        match (self.cycle, self.diff) {
            (CycleParity::Odd, DiffParity::Even) => Family::G,
            (CycleParity::Odd, DiffParity::Odd) => Family::H,
            (CycleParity::Even, DiffParity::Even) => Family::I,
            (CycleParity::Even, DiffParity::Odd) => Family::J,
        }
    }
}

impl Family {
    pub fn case(self) -> ParityCase {
        match self {
            Family::G => ParityCase::new(CycleParity::Odd, DiffParity::Even),
            Family::H => ParityCase::new(CycleParity::Odd, DiffParity::Odd),
            Family::I => ParityCase::new(CycleParity::Even, DiffParity::Even),
            Family::J => ParityCase::new(CycleParity::Even, DiffParity::Odd),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::G => "G",
            Family::H => "H",
            Family::I => "I",
            Family::J => "J",
        };
        f.write_str(s)
    }
}

/// `f_k(j) = (-1)^k j^{↓k} (2j-1)^{↑↑k} / (k! (2k-1)!!)`, with `f_0 = 1`.
pub fn coeff_f(j: u64, k: u64) -> Rat {
    let num = falling_factorial(&rat(j as i64), k as u32)
        * double_rising_factorial(&rat(2 * j as i64 - 1), k as u32);
    let den = factorial(k) * double_factorial(2 * k as i64 - 1).expect("odd and >= -1");
    signed(num / Rat::from_integer(den), k)
}

/// `g_k(j) = (-1)^k j^{↓k} (2j+1)^{↑↑k} / (k! (2k+1)!!)`, with `g_0 = 1`.
pub fn coeff_g(j: u64, k: u64) -> Rat {
    let num = falling_factorial(&rat(j as i64), k as u32)
        * double_rising_factorial(&rat(2 * j as i64 + 1), k as u32);
    let den = factorial(k) * double_factorial(2 * k as i64 + 1).expect("odd and >= -1");
    signed(num / Rat::from_integer(den), k)
}

fn signed(x: Rat, k: u64) -> Rat {
    if k % 2 == 1 {
        -x
    } else {
        x
    }
}

/// `(-1)^{j-1} Cat(j-1)` for odd cycles, `(-1)^{j-1} C(2j-1, j)` for even ones.
fn family_prefactor(cycle: CycleParity, j: u64) -> Rat {
    let magnitude = match cycle {
        CycleParity::Odd => catalan(j - 1),
        CycleParity::Even => binomial(2 * j - 1, j),
    };
    signed(Rat::from_integer(magnitude), j - 1)
}

/// `Ch_k((e - d) × (e + d))` from the finite sum for its parity family.
///
/// `basis` picks the shifts used in the products: integers for
/// [`DiffParity::Even`], half-integers for [`DiffParity::Odd`]. Both
/// expansions are polynomial identities in `e` and `d`, so any rational
/// `e`, `d` is accepted with either choice and the results agree.
pub fn closed_char_ed(k_cycle: u64, e: &Rat, d: &Rat, basis: DiffParity) -> Rat {
    assert!(k_cycle >= 1, "cycle length must be positive");
    let cycle = CycleParity::of(k_cycle);
    let j = CycleParity::half_index(k_cycle);
    let d2 = d * d;
    let e2 = e * e;
    // shift(r) for the d-products of index r
    let shift = |r: u64| -> Rat {
        match (cycle, basis) {
            (_, DiffParity::Even) => rat(r as i64),
            (CycleParity::Odd, DiffParity::Odd) => ratio(2 * r as i64 + 1, 2),
            (CycleParity::Even, DiffParity::Odd) => ratio(2 * r as i64 - 1, 2),
        }
    };
    let sq = |r: u64| {
        let s = shift(r);
        &s * &s
    };

    let mut total = Rat::zero();
    let mut d_prod = Rat::one();
    for k in 0..=j {
        let term = match cycle {
            CycleParity::Odd => {
                if k > 0 {
                    d_prod *= &d2 - sq(k - 1);
                }
                let e_prod: Rat = (k..j).map(|r| &e2 - sq(r)).product();
                coeff_f(j, k) * &d_prod * e_prod
            }
            CycleParity::Even => {
                if k > 0 {
                    d_prod *= &d2 - sq(k);
                }
                let e_prod: Rat = (k + 1..=j).map(|r| &e2 - sq(r)).product();
                coeff_g(j, k) * rat(2) * d * &d_prod * e_prod
            }
        };
        total += term;
        if d_prod.is_zero() {
            // every later term carries the same vanishing factor
            break;
        }
    }
    family_prefactor(cycle, j) * total
}

/// Symbolic `f_k(J)` or `g_k(J)` as a polynomial in `J` (variable 0).
fn coeff_poly(cycle: CycleParity, k: u64) -> JNPoly {
    let j = JNPoly::x();
    let offset = match cycle {
        CycleParity::Odd => -1,
        CycleParity::Even => 1,
    };
    let mut acc = JNPoly::one();
    for r in 0..k as i64 {
        acc = &acc * &(&j - &JNPoly::constant(rat(r)));
        acc = &acc * &(&j.scale(&rat(2)) + &JNPoly::constant(rat(offset + 2 * r)));
    }
    let den = factorial(k) * double_factorial(2 * k as i64 + offset).expect("odd and >= -1");
    acc.scale(&signed(Rat::new(Int::one(), den), k))
}

/// The shifts and ranges shared by the symbolic and numeric corollary forms.
struct CorollaryShape {
    family: Family,
    /// `2d`, signed
    two_d: i64,
    /// number of summands minus one
    top: u64,
}

impl CorollaryShape {
    fn new(two_d: i64, cycle: CycleParity) -> Self {
        let family = ParityCase::new(cycle, DiffParity::of(two_d)).family();
        let t = two_d.unsigned_abs();
        let top = match family {
            Family::G => t / 2,
            Family::H | Family::J => (t - 1) / 2,
            Family::I => (t / 2).saturating_sub(1),
        };
        Self { family, two_d, top }
    }

    fn d(&self) -> Rat {
        ratio(self.two_d, 2)
    }

    /// The shift entering the `r`-th product factor.
    fn node(&self, r: u64) -> Rat {
        match self.family {
            Family::G | Family::I => rat(r as i64),
            Family::H => ratio(2 * r as i64 + 1, 2),
            Family::J => ratio(2 * r as i64 - 1, 2),
        }
    }

    /// Index range of the `d`-product for summand `k`.
    fn d_range(&self, k: u64) -> std::ops::Range<u64> {
        match self.family {
            Family::G | Family::H => 0..k,
            Family::I | Family::J => 1..k + 1,
        }
    }

    /// Index range of the `n`-product for summand `k`.
    fn n_range(&self, k: u64) -> std::ops::Range<u64> {
        match self.family {
            Family::G | Family::H => k..self.top_n(),
            Family::I | Family::J => k + 1..self.top_n(),
        }
    }

    fn top_n(&self) -> u64 {
        let t = self.two_d.unsigned_abs();
        match self.family {
            Family::G => t / 2,
            Family::H => (t - 1) / 2,
            Family::I => t / 2,
            Family::J => t.div_ceil(2),
        }
    }

    fn outer_factor(&self) -> Rat {
        match self.family {
            Family::G | Family::H => Rat::one(),
            Family::I => self.d(),
            Family::J => rat(self.two_d),
        }
    }

    fn cycle(&self) -> CycleParity {
        self.family.case().cycle
    }

    fn is_identically_zero(&self) -> bool {
        self.family == Family::I && self.two_d == 0
    }
}

/// The polynomial `G_d`, `H_d`, `I_d` or `J_d` in `(J, N)`, chosen by the
/// parities of `2d` and of the cycle.
pub fn corollary_poly(two_d: i64, cycle: CycleParity) -> JNPoly {
    let shape = CorollaryShape::new(two_d, cycle);
    if shape.is_identically_zero() {
        return JNPoly::zero();
    }
    let d = shape.d();
    let d2 = &d * &d;
    let n = JNPoly::y();
    let mut total = JNPoly::zero();
    for k in 0..=shape.top {
        let d_prod: Rat = shape
            .d_range(k)
            .map(|r| &d2 - shape.node(r) * shape.node(r))
            .product();
        if d_prod.is_zero() {
            continue;
        }
        let mut term = coeff_poly(shape.cycle(), k).scale(&d_prod);
        for r in shape.n_range(k) {
            let c = &d2 - shape.node(r) * shape.node(r);
            term = &term * &(&n + &JNPoly::constant(c));
        }
        total = &total + &term;
    }
    total.scale(&shape.outer_factor())
}

/// Numeric value of [`corollary_poly`] at `(j, n)`, without building the polynomial.
pub fn corollary_value(two_d: i64, cycle: CycleParity, j: u64, n: &Int) -> Rat {
    let shape = CorollaryShape::new(two_d, cycle);
    if shape.is_identically_zero() {
        return Rat::zero();
    }
    let d = shape.d();
    let d2 = &d * &d;
    let n = Rat::from_integer(n.clone());
    let top_n = shape.top_n();
    // suffix[r] = ∏_{s=r}^{top_n-1} (n + d² - node_s²)
    let mut suffix = vec![Rat::one(); top_n as usize + 2];
    for r in (0..top_n).rev() {
        let factor = &n + &d2 - shape.node(r) * shape.node(r);
        suffix[r as usize] = &suffix[r as usize + 1] * factor;
    }
    let mut total = Rat::zero();
    for k in 0..=shape.top.min(j) {
        let c = match shape.cycle() {
            CycleParity::Odd => coeff_f(j, k),
            CycleParity::Even => coeff_g(j, k),
        };
        if c.is_zero() {
            continue;
        }
        let d_prod: Rat = shape
            .d_range(k)
            .map(|r| &d2 - shape.node(r) * shape.node(r))
            .product();
        let start = shape.n_range(k).start.min(top_n);
        total += c * d_prod * &suffix[start as usize];
    }
    total * shape.outer_factor()
}

/// `Ch_k(p × q)` from the product form of the matching corollary.
///
/// Runs in time polynomial in `k` and the bit length of `p`, `q`. The
/// trailing product over `n - r(r + 2|d|)` follows the inverted-range
/// convention of [`extended_product`] when `j` is small compared to `|d|`.
pub fn ch_rect_fast(k_cycle: u64, p: u64, q: u64) -> Result<Rat, ExactError> {
    assert!(
        k_cycle >= 1 && p >= 1 && q >= 1,
        "cycle length and sides must be positive"
    );
    let d = HalfInt::from_twice(q as i128 - p as i128);
    let two_d = d
        .twice_i64()
        .expect("difference of two u64 sides fits in i64 for sane inputs");
    let t = d.abs().twice_i64().expect("fits");
    let n = Int::from(p) * Int::from(q);
    let cycle = CycleParity::of(k_cycle);
    let j = CycleParity::half_index(k_cycle);
    let family = ParityCase::new(cycle, DiffParity::of(two_d)).family();
    debug_assert_eq!(d.is_integer(), matches!(family, Family::G | Family::I));

    let ji = j as i64;
    let (prefactor, upper) = match family {
        Family::G => (catalan(j - 1), ji - t / 2 - 1),
        Family::H => (catalan(j - 1), ji - (t + 1) / 2),
        Family::I => (binomial(2 * j, j), ji - t / 2),
        Family::J => (binomial(2 * j - 1, j), ji - (t + 1) / 2),
    };
    let prefactor = signed(Rat::from_integer(prefactor), j - 1);
    let value = corollary_value(two_d, cycle, j, &n);
    if value.is_zero() {
        return Ok(Rat::zero());
    }
    let nr = Rat::from_integer(n.clone());
    let tail = extended_product(0, upper, |r| &nr - rat(r) * rat(r + t))?;
    Ok(prefactor * value * tail)
}

/// `Ch_k((-1) × q) = -q (q+1) ... (q+k-1)`.
pub fn minus_one_row_char(k: u64, q: &Rat) -> Rat {
    -rising(q, k)
}

/// `Ch_k(p × (-1)) = (-1)^k p (p+1) ... (p+k-1)`.
pub fn minus_one_col_char(k: u64, p: &Rat) -> Rat {
    signed(rising(p, k), k)
}

fn rising(x: &Rat, k: u64) -> Rat {
    (0..k).map(|i| x + rat(i as i64)).product()
}

/// `-Q (Q+1) ... (Q+k-1)` as a polynomial in `Q`.
pub fn minus_one_row_poly(k: u64) -> UniPoly<Int> {
    let rising = UniPoly::from_roots((0..k).map(|i| -Int::from(i)));
    rising.scale(&Int::from(-1))
}

/// `2d ∏_{r=-k+1}^{k-1} (d + r) / (2k)!`, an integer for every integer `d`.
pub fn integrality_witness(d: i64, k: u64) -> Rat {
    let k = k as i64;
    let num: Int = (-k + 1..k).map(|r| Int::from(d + r)).product::<Int>() * Int::from(2 * d);
    Rat::new(num, factorial(2 * k as u64))
}

/// `[E^{2j}]` of `Ch_{2j-1}(E × E)`, read off the exact Stanley polynomial.
pub fn leading_square_coeff(j: u64) -> Rat {
    let pi = Partition::new(vec![2 * j as usize - 1]).expect("positive part");
    substitute_ed(&stanley_poly(&pi)).coeff(0, 2 * j as u32)
}

/// `(-1)^{j-1} Cat(j-1)`, the expected value of [`leading_square_coeff`].
pub fn signed_catalan(j: u64) -> Rat {
    signed(Rat::from_integer(catalan(j - 1)), j - 1)
}
