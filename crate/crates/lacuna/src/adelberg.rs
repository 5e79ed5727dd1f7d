//! Adelberg A/B polynomials and their supporting combinatorics.
//!
//! `b_poly` builds B_u(y, m) from the partition-sum formula (a chain of
//! binomial factors in m times per-part factors C(y-1,j)/(j+1)), and
//! `a_poly` builds A_u(x, y, m) as the convolution of binomial polynomials
//! C(x, j) with B-polynomials. Both are exact polynomials over rationals in
//! the fixed variable set (m, x, y).
//!
//! `a_value`/`b_value` evaluate the same polynomials at integer points
//! through the generating function (((1+z)^y - 1)/(yz))^m, which stays fast
//! for large polynomial indices; negative m and x are handled by series
//! inversion and signed binomial series. The two routes are cross-checked in
//! the test suites.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::exactnum::{
    binom_int, factorial, int_pow, is_prime, rat, rat_from_int, rat_pow, rat_string, Rat,
};
use crate::series::binomial_ratio_series;
use crate::{Error, Result};

/// Variables a [`MultiPoly`] may mention, in canonical print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyVar {
    M,
    X,
    Y,
}

/// Exponents of (m, x, y) for one term.
type Exps = (u32, u32, u32);

fn total_degree(e: &Exps) -> u32 {
    e.0 + e.1 + e.2
}

/// Sparse exact polynomial in the fixed variables (m, x, y).
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality, and the canonical string is deterministic: terms sorted by
/// total degree, then lexicographically by (m-, x-, y-exponent).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.insert((0, 0, 0), c);
        p
    }

    pub fn var(v: PolyVar) -> Self {
        let mut p = Self::zero();
        let e = match v {
            PolyVar::M => (1, 0, 0),
            PolyVar::X => (0, 1, 0),
            PolyVar::Y => (0, 0, 1),
        };
        p.insert(e, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert((ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest exponent of the variable, or None for the zero polynomial.
    pub fn degree(&self, v: PolyVar) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| match v {
                PolyVar::M => e.0,
                PolyVar::X => e.1,
                PolyVar::Y => e.2,
            })
            .max()
    }

    /// Exact evaluation at rational (m, x, y).
    pub fn eval(&self, m: &Rat, x: &Rat, y: &Rat) -> Rat {
        let dm = self.degree(PolyVar::M).unwrap_or(0) as usize;
        let dx = self.degree(PolyVar::X).unwrap_or(0) as usize;
        let dy = self.degree(PolyVar::Y).unwrap_or(0) as usize;
        let pows = |base: &Rat, d: usize| {
            let mut v = Vec::with_capacity(d + 1);
            v.push(Rat::one());
            for i in 1..=d {
                let next = &v[i - 1] * base;
                v.push(next);
            }
            v
        };
        let pm = pows(m, dm);
        let px = pows(x, dx);
        let py = pows(y, dy);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            acc += c * &pm[e.0 as usize] * &px[e.1 as usize] * &py[e.2 as usize];
        }
        acc
    }

    /// Substitutes a rational constant for one variable.
    pub fn substitute(&self, v: PolyVar, value: &Rat) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let (exp, rest) = match v {
                PolyVar::M => (e.0, (0, e.1, e.2)),
                PolyVar::X => (e.1, (e.0, 0, e.2)),
                PolyVar::Y => (e.2, (e.0, e.1, 0)),
            };
            out.insert(rest, c * rat_pow(value, exp as i64));
        }
        out
    }

    /// Substitutes x + c for x.
    pub fn shift_x(&self, c: i64) -> Self {
        let mut out = Self::zero();
        let cc = rat(c);
        for (e, coeff) in &self.terms {
            let ex = e.1 as i64;
            for i in 0..=ex {
                let w = rat_from_int(binom_int(ex, i)) * rat_pow(&cc, ex - i);
                out.insert((e.0, i as u32, e.2), coeff * w);
            }
        }
        out
    }

    /// Canonical human/golden form: terms sorted by total degree then by
    /// (m, x, y) exponents, each printed as `c*m^a*x^b*y^c` with unit
    /// exponents elided and negative coefficients absorbed into the joining
    /// sign.
    pub fn canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Exps, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (total_degree(e), **e));
        let mut out = String::new();
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&rat_string(&mag));
            for (exp, name) in [(e.0, "m"), (e.1, "x"), (e.2, "y")] {
                match exp {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(name);
                    }
                    _ => {
                        out.push_str(&format!("*{name}^{exp}"));
                    }
                }
            }
        }
        out
    }
}

/// C(var + offset, k) expanded as an exact polynomial:
/// the falling-factorial product divided by k!.
pub(crate) fn binom_in_var(var: PolyVar, offset: i64, k: u32) -> MultiPoly {
    let v = MultiPoly::var(var);
    let mut acc = MultiPoly::one();
    for i in 0..k as i64 {
        acc = acc.mul(&v.add(&MultiPoly::constant(rat(offset - i))));
    }
    acc.scale(&(Rat::one() / rat_from_int(factorial(k as u64))))
}

/// A partition of u encoded by part multiplicities: `multiplicities()[i]` is
/// the multiplicity of the part i+1, and the weighted sum of parts is u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMultiplicity {
    mult: Vec<i64>,
}

impl PartitionMultiplicity {
    pub fn multiplicities(&self) -> &[i64] {
        &self.mult
    }

    /// Multiplicity of a given part value (1-based).
    pub fn multiplicity_of(&self, part: i64) -> i64 {
        if part >= 1 && (part as usize) <= self.mult.len() {
            self.mult[part as usize - 1]
        } else {
            0
        }
    }

    /// Number of parts.
    pub fn part_count(&self) -> i64 {
        self.mult.iter().sum()
    }

    /// Weighted sum of parts (the partitioned integer).
    pub fn weight(&self) -> i64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, t)| (i as i64 + 1) * t)
            .sum()
    }
}

/// All partitions of u as multiplicity vectors, enumerated with parts in
/// decreasing order (the one-part partition first, all-ones last). u = 0
/// yields the single
/// empty partition.
pub fn partitions_of(u: i64) -> Result<Vec<PartitionMultiplicity>> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    let mut out = Vec::new();
    let mut mult = vec![0i64; u as usize];
    fn descend(
        remaining: i64,
        max_part: i64,
        mult: &mut Vec<i64>,
        out: &mut Vec<PartitionMultiplicity>,
    ) {
        if remaining == 0 {
            out.push(PartitionMultiplicity { mult: mult.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            mult[part as usize - 1] += 1;
            descend(remaining - part, part, mult, out);
            mult[part as usize - 1] -= 1;
        }
    }
    descend(u, u, &mut mult, &mut out);
    Ok(out)
}

/// A length-m tuple of nonnegative integers; compositions produced by
/// [`weak_compositions`] sum to the target u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakComposition {
    parts: Vec<i64>,
}

impl WeakComposition {
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }
}

/// All weak compositions of u into m nonnegative parts, in lexicographic
/// order of the tuples. For m = 0 the list is empty unless u = 0, which has
/// the single empty composition.
pub fn weak_compositions(u: i64, m: i64) -> Result<Vec<WeakComposition>> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if m < 0 {
        return Err(Error::Negative {
            name: "m",
            value: m,
        });
    }
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(m as usize);
    fn descend(remaining: i64, slots: i64, parts: &mut Vec<i64>, out: &mut Vec<WeakComposition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(WeakComposition {
                    parts: parts.clone(),
                });
            }
            return;
        }
        if slots == 1 {
            parts.push(remaining);
            out.push(WeakComposition {
                parts: parts.clone(),
            });
            parts.pop();
            return;
        }
        for first in 0..=remaining {
            parts.push(first);
            descend(remaining - first, slots - 1, parts, out);
            parts.pop();
        }
    }
    descend(u, m, &mut parts, &mut out);
    Ok(out)
}

fn b_cache() -> &'static Mutex<HashMap<i64, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<i64, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn a_cache() -> &'static Mutex<HashMap<i64, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<i64, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// B-polynomial B_u(y, m): sum over all partitions of u of the chain
/// C(m, t_u) C(m - t_u, t_{u-1}) ... times prod_j (C(y-1, j)/(j+1))^{t_j}.
pub fn b_poly(u: i64) -> Result<MultiPoly> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if let Some(p) = b_cache().lock().unwrap().get(&u) {
        return Ok(p.clone());
    }
    let mut total = MultiPoly::zero();
    for part in partitions_of(u)? {
        let mut term = MultiPoly::one();
        let mut used: i64 = 0;
        for j in (1..=u).rev() {
            let t = part.multiplicity_of(j);
            if t == 0 {
                continue;
            }
            term = term.mul(&binom_in_var(PolyVar::M, -used, t as u32));
            let y_factor = binom_in_var(PolyVar::Y, -1, j as u32).scale(&(Rat::one() / rat(j + 1)));
            term = term.mul(&y_factor.pow(t as u32));
            used += t;
        }
        total = total.add(&term);
    }
    b_cache().lock().unwrap().insert(u, total.clone());
    Ok(total)
}

/// A-polynomial A_u(x, y, m) = sum_{j=0}^{u} C(x, j) B_{u-j}(y, m).
pub fn a_poly(u: i64) -> Result<MultiPoly> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if let Some(p) = a_cache().lock().unwrap().get(&u) {
        return Ok(p.clone());
    }
    let mut total = MultiPoly::zero();
    for j in 0..=u {
        total = total.add(&binom_in_var(PolyVar::X, 0, j as u32).mul(&b_poly(u - j)?));
    }
    a_cache().lock().unwrap().insert(u, total.clone());
    Ok(total)
}

/// Weak-composition form of B_u at a fixed integer m, symbolic in y:
/// the sum over compositions (k_1..k_m) of u of prod_i C(y-1, k_i)/(k_i+1).
pub fn b_poly_from_compositions(u: i64, m0: i64) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero();
    for comp in weak_compositions(u, m0)? {
        let mut term = MultiPoly::one();
        for &k in comp.parts() {
            let f = binom_in_var(PolyVar::Y, -1, k as u32).scale(&(Rat::one() / rat(k + 1)));
            term = term.mul(&f);
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// The defining divided-difference sum for the A-polynomial at integer
/// arguments: (1/y0^m0) sum_k (-1)^(m0-k) C(m0, k) C(x0 + k y0, m0 + u).
///
/// Negative u is allowed so callers can observe the vanishing of the sum
/// when the binomial degree drops below the difference order.
pub fn a_num_divided_difference(u: i64, x0: i64, y0: i64, m0: i64) -> Result<Rat> {
    if y0 == 0 {
        return Err(Error::OutOfRange {
            name: "y0",
            value: 0,
            expected: "nonzero",
        });
    }
    if m0 < 0 {
        return Err(Error::Negative {
            name: "m0",
            value: m0,
        });
    }
    let mut s = crate::Int::zero();
    for k in 0..=m0 {
        let mut t = binom_int(m0, k) * binom_int(x0 + k * y0, m0 + u);
        if (m0 - k) % 2 == 1 {
            t = -t;
        }
        s += t;
    }
    Ok(rat_from_int(s) / rat_pow(&rat(y0), m0))
}

/// Binomial symmetry: sum_j C(m0, j) y0^j A_u(x + j, y0, j) equals
/// (y0 + 1)^m0 A_u(x, y0 + 1, m0), as exact polynomials in x.
pub fn sym_sxvi_check(u: i64, m0: i64, y0: i64) -> Result<bool> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if m0 < 0 {
        return Err(Error::Negative {
            name: "m0",
            value: m0,
        });
    }
    if y0 < 1 {
        return Err(Error::OutOfRange {
            name: "y0",
            value: y0,
            expected: "y0 >= 1",
        });
    }
    let a = a_poly(u)?;
    let mut lhs = MultiPoly::zero();
    for j in 0..=m0 {
        let shifted = a
            .substitute(PolyVar::M, &rat(j))
            .substitute(PolyVar::Y, &rat(y0))
            .shift_x(j);
        let w = rat_from_int(binom_int(m0, j) * int_pow(y0, j as u32));
        lhs = lhs.add(&shifted.scale(&w));
    }
    let rhs = a
        .substitute(PolyVar::M, &rat(m0))
        .substitute(PolyVar::Y, &rat(y0 + 1))
        .scale(&rat_from_int(int_pow(y0 + 1, m0 as u32)));
    Ok(lhs == rhs)
}

/// Index bundle tying the polynomial index u to congruence parameters
/// (p, l, s) through u = l(p-1) + s - 1, with p prime and 0 < s < p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdelbergIndex {
    pub u: i64,
    pub s: i64,
    pub l: i64,
    pub p: i64,
}

impl AdelbergIndex {
    pub fn from_params(p: i64, l: i64, s: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime {
                name: "p",
                value: p,
            });
        }
        if l < 0 {
            return Err(Error::Negative {
                name: "l",
                value: l,
            });
        }
        if s <= 0 || s >= p {
            return Err(Error::OutOfRange {
                name: "s",
                value: s,
                expected: "0 < s < p",
            });
        }
        Ok(AdelbergIndex {
            u: l * (p - 1) + s - 1,
            s,
            l,
            p,
        })
    }
}

const GF_MEMO_ORDER: usize = 64;

/// Memoized coefficient vectors keyed by (y0, m0).
type GfMemo = HashMap<(i64, i64), Vec<Rat>>;

fn gf_memo() -> &'static Mutex<GfMemo> {
    static CACHE: OnceLock<Mutex<GfMemo>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients 0..=order of (((1+z)^y0 - 1)/(y0 z))^m0, memoized for
/// orders within the desk-scale window.
fn gf_power_coeffs(y0: i64, m0: i64, order: usize) -> Vec<Rat> {
    if order <= GF_MEMO_ORDER {
        let mut memo = gf_memo().lock().unwrap();
        let coeffs = memo
            .entry((y0, m0))
            .or_insert_with(|| {
                binomial_ratio_series(y0, GF_MEMO_ORDER)
                    .pow(m0)
                    .coeffs()
                    .to_vec()
            })
            .clone();
        drop(memo);
        coeffs
    } else {
        binomial_ratio_series(y0, order).pow(m0).coeffs().to_vec()
    }
}

/// B_u(y0, m0) at integer arguments via the generating function; m0 may be
/// negative (series inversion). Agrees exactly with evaluating [`b_poly`].
pub fn b_value(u: i64, y0: i64, m0: i64) -> Result<Rat> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if y0 == 0 {
        return Err(Error::OutOfRange {
            name: "y0",
            value: 0,
            expected: "nonzero",
        });
    }
    Ok(gf_power_coeffs(y0, m0, u as usize)[u as usize].clone())
}

/// A_u(x0, y0, m0) at integer arguments: the z^u coefficient of
/// (1+z)^x0 (((1+z)^y0 - 1)/(y0 z))^m0. Agrees exactly with evaluating
/// [`a_poly`].
pub fn a_value(u: i64, x0: i64, y0: i64, m0: i64) -> Result<Rat> {
    if u < 0 {
        return Err(Error::Negative {
            name: "u",
            value: u,
        });
    }
    if y0 == 0 {
        return Err(Error::OutOfRange {
            name: "y0",
            value: 0,
            expected: "nonzero",
        });
    }
    let g = gf_power_coeffs(y0, m0, u as usize);
    let mut s = Rat::zero();
    for k in 0..=u {
        let b = binom_int(x0, k);
        if !b.is_zero() {
            s += rat_from_int(b) * &g[(u - k) as usize];
        }
    }
    Ok(s)
}

/// Finite-window certificate that p^l B_u(p, m) is an integer for every m
/// in the window, where u = l(p-1) + s - 1 and 0 < s < p.
pub fn scaled_b_integrality(p: i64, l: i64, s: i64, m_range: RangeInclusive<i64>) -> Result<bool> {
    let idx = AdelbergIndex::from_params(p, l, s)?;
    let scale = rat_from_int(int_pow(p, l as u32));
    for m0 in m_range {
        let v = &scale * b_value(idx.u, p, m0)?;
        if !v.is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use proptest::prelude::*;

    fn mp_int(v: i64) -> MultiPoly {
        MultiPoly::constant(rat(v))
    }

    fn mvar(v: PolyVar) -> MultiPoly {
        MultiPoly::var(v)
    }

    /// Table entry B_1 = (1/2) m (-1 + y).
    fn table_b1() -> MultiPoly {
        mvar(PolyVar::M)
            .mul(&mvar(PolyVar::Y).add(&mp_int(-1)))
            .scale(&Rat::new(int(1), int(2)))
    }

    /// Table entry B_2 = (1/24) m (-1+y) (-5 - 3m + y + 3my).
    fn table_b2() -> MultiPoly {
        let inner = mp_int(-5)
            .add(&mvar(PolyVar::M).scale(&rat(-3)))
            .add(&mvar(PolyVar::Y))
            .add(&mvar(PolyVar::M).mul(&mvar(PolyVar::Y)).scale(&rat(3)));
        mvar(PolyVar::M)
            .mul(&mvar(PolyVar::Y).add(&mp_int(-1)))
            .mul(&inner)
            .scale(&Rat::new(int(1), int(24)))
    }

    /// Table entry B_3 = (1/48) m (-1+y) (-2 - m + my) (-3 - m + y + my).
    fn table_b3() -> MultiPoly {
        let f1 = mp_int(-2)
            .sub(&mvar(PolyVar::M))
            .add(&mvar(PolyVar::M).mul(&mvar(PolyVar::Y)));
        let f2 = mp_int(-3)
            .sub(&mvar(PolyVar::M))
            .add(&mvar(PolyVar::Y))
            .add(&mvar(PolyVar::M).mul(&mvar(PolyVar::Y)));
        mvar(PolyVar::M)
            .mul(&mvar(PolyVar::Y).add(&mp_int(-1)))
            .mul(&f1)
            .mul(&f2)
            .scale(&Rat::new(int(1), int(48)))
    }

    /// Table entry B_4: (1/5760) m (-1+y) (big degree-3 factor).
    fn table_b4() -> MultiPoly {
        // coefficients of the inner factor, as (coeff, m-power, y-power)
        let inner_terms: &[(i64, u32, u32)] = &[
            (-502, 0, 0),
            (-485, 1, 0),
            (-150, 2, 0),
            (-15, 3, 0),
            (218, 0, 1),
            (655, 1, 1),
            (330, 2, 1),
            (45, 3, 1),
            (-2, 0, 2),
            (-175, 1, 2),
            (-210, 2, 2),
            (-45, 3, 2),
            (-2, 0, 3),
            (5, 1, 3),
            (30, 2, 3),
            (15, 3, 3),
        ];
        let mut inner = MultiPoly::zero();
        for &(c, em, ey) in inner_terms {
            let t = mvar(PolyVar::M)
                .pow(em)
                .mul(&mvar(PolyVar::Y).pow(ey))
                .scale(&rat(c));
            inner = inner.add(&t);
        }
        mvar(PolyVar::M)
            .mul(&mvar(PolyVar::Y).add(&mp_int(-1)))
            .mul(&inner)
            .scale(&Rat::new(int(1), int(5760)))
    }

    /// Table entry A_1 = (1/2)(-m + 2x + my).
    fn table_a1() -> MultiPoly {
        mvar(PolyVar::M)
            .scale(&rat(-1))
            .add(&mvar(PolyVar::X).scale(&rat(2)))
            .add(&mvar(PolyVar::M).mul(&mvar(PolyVar::Y)))
            .scale(&Rat::new(int(1), int(2)))
    }

    /// Table entry A_2 = (1/24)(5m + 3m^2 - 12x - 12mx + 12x^2 - 6my - 6m^2 y
    /// + 12mxy + my^2 + 3m^2 y^2).
    fn table_a2() -> MultiPoly {
        let terms: &[(i64, u32, u32, u32)] = &[
            (5, 1, 0, 0),
            (3, 2, 0, 0),
            (-12, 0, 1, 0),
            (-12, 1, 1, 0),
            (12, 0, 2, 0),
            (-6, 1, 0, 1),
            (-6, 2, 0, 1),
            (12, 1, 1, 1),
            (1, 1, 0, 2),
            (3, 2, 0, 2),
        ];
        let mut p = MultiPoly::zero();
        for &(c, em, ex, ey) in terms {
            let t = mvar(PolyVar::M)
                .pow(em)
                .mul(&mvar(PolyVar::X).pow(ex))
                .mul(&mvar(PolyVar::Y).pow(ey))
                .scale(&rat(c));
            p = p.add(&t);
        }
        p.scale(&Rat::new(int(1), int(24)))
    }

    /// Table entry A_3 = ((-2 - m + 2x + my)/48)(3m + m^2 - 8x - 4mx + 4x^2
    /// - 4my - 2m^2 y + 4mxy + my^2 + m^2 y^2).
    fn table_a3() -> MultiPoly {
        let lead = mp_int(-2)
            .sub(&mvar(PolyVar::M))
            .add(&mvar(PolyVar::X).scale(&rat(2)))
            .add(&mvar(PolyVar::M).mul(&mvar(PolyVar::Y)));
        let terms: &[(i64, u32, u32, u32)] = &[
            (3, 1, 0, 0),
            (1, 2, 0, 0),
            (-8, 0, 1, 0),
            (-4, 1, 1, 0),
            (4, 0, 2, 0),
            (-4, 1, 0, 1),
            (-2, 2, 0, 1),
            (4, 1, 1, 1),
            (1, 1, 0, 2),
            (1, 2, 0, 2),
        ];
        let mut inner = MultiPoly::zero();
        for &(c, em, ex, ey) in terms {
            let t = mvar(PolyVar::M)
                .pow(em)
                .mul(&mvar(PolyVar::X).pow(ex))
                .mul(&mvar(PolyVar::Y).pow(ey))
                .scale(&rat(c));
            inner = inner.add(&t);
        }
        lead.mul(&inner).scale(&Rat::new(int(1), int(48)))
    }

    #[test]
    fn partition_counts() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (u, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(u as i64).unwrap().len(), count, "u={u}");
        }
        assert!(matches!(partitions_of(-1), Err(Error::Negative { .. })));
    }

    #[test]
    fn partition_shape_and_order() {
        let parts = partitions_of(4).unwrap();
        let as_mults: Vec<Vec<i64>> = parts.iter().map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(
            as_mults,
            vec![
                vec![0, 0, 0, 1], // 4
                vec![1, 0, 1, 0], // 3+1
                vec![0, 2, 0, 0], // 2+2
                vec![2, 1, 0, 0], // 2+1+1
                vec![4, 0, 0, 0], // 1+1+1+1
            ]
        );
        for p in &parts {
            assert_eq!(p.weight(), 4);
        }
        assert_eq!(
            partitions_of(0).unwrap(),
            vec![PartitionMultiplicity { mult: vec![] }]
        );
    }

    #[test]
    fn weak_composition_examples() {
        let c = weak_compositions(2, 2).unwrap();
        let tuples: Vec<Vec<i64>> = c.iter().map(|w| w.parts().to_vec()).collect();
        assert_eq!(tuples, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(weak_compositions(0, 3).unwrap().len(), 1);
        assert_eq!(weak_compositions(0, 3).unwrap()[0].parts(), &[0, 0, 0]);
        assert_eq!(weak_compositions(3, 1).unwrap()[0].parts(), &[3]);
        assert_eq!(weak_compositions(3, 0).unwrap().len(), 0);
        assert_eq!(weak_compositions(0, 0).unwrap().len(), 1);
        assert!(matches!(
            weak_compositions(-1, 2),
            Err(Error::Negative { .. })
        ));
    }

    #[test]
    fn b_poly_matches_tables() {
        assert_eq!(b_poly(0).unwrap(), MultiPoly::one());
        assert_eq!(b_poly(1).unwrap(), table_b1());
        assert_eq!(b_poly(2).unwrap(), table_b2());
        assert_eq!(b_poly(3).unwrap(), table_b3());
        assert_eq!(b_poly(4).unwrap(), table_b4());
        assert!(matches!(b_poly(-2), Err(Error::Negative { .. })));
    }

    #[test]
    fn a_poly_matches_tables() {
        assert_eq!(a_poly(0).unwrap(), MultiPoly::one());
        assert_eq!(a_poly(1).unwrap(), table_a1());
        assert_eq!(a_poly(2).unwrap(), table_a2());
        assert_eq!(a_poly(3).unwrap(), table_a3());
    }

    #[test]
    fn canonical_string_examples() {
        assert_eq!(b_poly(0).unwrap().canonical_string(), "1");
        assert_eq!(b_poly(1).unwrap().canonical_string(), "-1/2*m + 1/2*m*y");
        assert_eq!(MultiPoly::zero().canonical_string(), "0");
    }

    #[test]
    fn degrees_and_roots() {
        for u in 0..=6i64 {
            let b = b_poly(u).unwrap();
            assert_eq!(b.degree(PolyVar::M), Some(u as u32), "deg_m B_{u}");
            assert_eq!(b.degree(PolyVar::Y), Some(u as u32), "deg_y B_{u}");
            let a = a_poly(u).unwrap();
            assert_eq!(a.degree(PolyVar::M), Some(u as u32));
            assert_eq!(a.degree(PolyVar::X), Some(u as u32));
            assert_eq!(a.degree(PolyVar::Y), Some(u as u32));
        }
        for u in 1..=6i64 {
            let b = b_poly(u).unwrap();
            assert!(
                b.substitute(PolyVar::Y, &rat(1)).is_zero(),
                "y=1 root of B_{u}"
            );
            assert!(
                b.substitute(PolyVar::M, &rat(0)).is_zero(),
                "m=0 root of B_{u}"
            );
        }
    }

    #[test]
    fn composition_form_agrees_with_partition_form() {
        for u in 0..=6i64 {
            let b = b_poly(u).unwrap();
            for m0 in 0..=6i64 {
                let via_comp = b_poly_from_compositions(u, m0).unwrap();
                let via_part = b.substitute(PolyVar::M, &rat(m0));
                assert_eq!(via_comp, via_part, "u={u} m0={m0}");
            }
        }
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(a_num_divided_difference(1, 0, 3, 1).unwrap(), rat(1));
        assert_eq!(a_num_divided_difference(1, 0, 3, 2).unwrap(), rat(2));
        for (x0, y0, m0) in [(0i64, 1i64, 0i64), (2, 3, 1), (4, 5, 5), (1, 2, 3)] {
            assert_eq!(a_num_divided_difference(0, x0, y0, m0).unwrap(), rat(1));
        }
        assert!(matches!(
            a_num_divided_difference(1, 0, 0, 1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn divided_difference_agrees_with_a_poly() {
        for u in 0..=5i64 {
            let a = a_poly(u).unwrap();
            for x0 in 0..=4i64 {
                for y0 in 1..=5i64 {
                    for m0 in 0..=5i64 {
                        let dd = a_num_divided_difference(u, x0, y0, m0).unwrap();
                        let sym = a.eval(&rat(m0), &rat(x0), &rat(y0));
                        assert_eq!(dd, sym, "u={u} x0={x0} y0={y0} m0={m0}");
                    }
                }
            }
        }
    }

    #[test]
    fn divided_difference_vanishes_below_degree() {
        // With s < 1 the binomial degree m + s - 1 drops below the difference
        // order m, so the m-th divided difference is exactly zero.
        for u in -4..0i64 {
            for x0 in 0..=3 {
                for y0 in 1..=4 {
                    for m0 in 1..=5 {
                        if m0 + u >= 0 {
                            assert_eq!(
                                a_num_divided_difference(u, x0, y0, m0).unwrap(),
                                Rat::zero(),
                                "u={u} x0={x0} y0={y0} m0={m0}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(sym_sxvi_check(1, 1, 1).unwrap());
        assert!(sym_sxvi_check(2, 2, 2).unwrap());
        for m0 in 0..=4 {
            for y0 in 1..=4 {
                assert!(sym_sxvi_check(0, m0, y0).unwrap());
            }
        }
    }

    #[test]
    fn symmetry_window() {
        for u in 0..=3i64 {
            for m0 in 0..=4i64 {
                for y0 in 1..=5i64 {
                    assert!(sym_sxvi_check(u, m0, y0).unwrap(), "u={u} m0={m0} y0={y0}");
                }
            }
        }
    }

    #[test]
    fn gf_value_routes_agree_with_symbolic() {
        for u in 0..=8i64 {
            let b = b_poly(u).unwrap();
            let a = a_poly(u).unwrap();
            for y0 in [-3i64, 2, 3, 7] {
                for m0 in -4..=4i64 {
                    let bv = b_value(u, y0, m0).unwrap();
                    assert_eq!(
                        bv,
                        b.eval(&rat(m0), &Rat::zero(), &rat(y0)),
                        "B u={u} y0={y0} m0={m0}"
                    );
                    for x0 in [-2i64, 0, 3] {
                        let av = a_value(u, x0, y0, m0).unwrap();
                        assert_eq!(
                            av,
                            a.eval(&rat(m0), &rat(x0), &rat(y0)),
                            "A u={u} x0={x0} y0={y0} m0={m0}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gf_values_beyond_memo_order() {
        // orders above the memoized window take the ad-hoc series path;
        // both must agree where they overlap
        let direct = crate::series::adelberg_gf_coeff(3, 2, 70, None).unwrap();
        assert_eq!(b_value(70, 3, 2).unwrap(), direct);
        assert_eq!(
            a_value(70, 0, 3, 2).unwrap(),
            direct,
            "x0 = 0 reduces the A value to the B value"
        );
        // the memoized path agrees with a series truncated exactly at u
        for u in 0..=8i64 {
            assert_eq!(
                b_value(u, 5, 3).unwrap(),
                crate::series::adelberg_gf_coeff(5, 3, u as usize, None).unwrap()
            );
        }
    }

    #[test]
    fn scaled_integrality_examples() {
        assert!(scaled_b_integrality(3, 1, 1, -5..=5).unwrap());
        assert!(scaled_b_integrality(5, 0, 3, -5..=5).unwrap());
        assert!(scaled_b_integrality(7, 0, 1, -6..=6).unwrap());
        // spot values from the closed forms B_2(3, m) = m(3m-1)/6 and B_2(5, m) = 2m^2
        assert_eq!(b_value(2, 3, 2).unwrap() * rat(3), rat(5));
        assert_eq!(b_value(2, 5, 3).unwrap(), rat(18));
        assert!(matches!(
            scaled_b_integrality(4, 1, 1, 0..=1),
            Err(Error::NotPrime { .. })
        ));
        assert!(matches!(
            scaled_b_integrality(5, 1, 5, 0..=1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn adelberg_index_relation() {
        let idx = AdelbergIndex::from_params(7, 3, 4).unwrap();
        assert_eq!(idx.u, 3 * 6 + 3);
        assert!(matches!(
            AdelbergIndex::from_params(9, 1, 1),
            Err(Error::NotPrime { .. })
        ));
    }

    #[test]
    fn shift_x_is_substitution() {
        let a = a_poly(2).unwrap();
        for c in [-2i64, 1, 3] {
            let shifted = a.shift_x(c);
            for x0 in -3..=3i64 {
                for m0 in 0..=3i64 {
                    for y0 in 1..=3i64 {
                        assert_eq!(
                            shifted.eval(&rat(m0), &rat(x0), &rat(y0)),
                            a.eval(&rat(m0), &rat(x0 + c), &rat(y0))
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn weak_composition_count_is_binomial(u in 0i64..=8, m in 1i64..=6) {
            let count = weak_compositions(u, m).unwrap().len() as i64;
            prop_assert_eq!(crate::Int::from(count), binom_int(u + m - 1, m - 1));
        }

        #[test]
        fn partition_weights_are_exact(u in 0i64..=12) {
            let parts = partitions_of(u).unwrap();
            for p in &parts {
                prop_assert_eq!(p.weight(), u);
                prop_assert!(p.multiplicities().iter().all(|&t| t >= 0));
            }
            // all distinct
            let mut seen = std::collections::HashSet::new();
            for p in &parts {
                prop_assert!(seen.insert(p.multiplicities().to_vec()));
            }
        }
    }
}
