//! Verifiers, with explicit quotients, for the three lacunary congruence
//! families, the mixed Stirling identity and its corollary, the classical
//! cross-check congruences, and the lacunary rewrites.
//!
//! Sums that the statements leave unbounded are truncated at their provable
//! finite support (a binomial factor vanishes beyond its upper index); each
//! operation documents its bound. "a = b mod M" is implemented as
//! M | (a - b), with M = 1 meaning vacuous truth and M = 0 meaning exact
//! equality.

use serde::ser::{Serialize, SerializeMap, Serializer};

use num_traits::{One, Zero};

use crate::adelberg::{a_poly, a_value, AdelbergIndex};
use crate::exactnum::{
    binom_int, int_pow, is_prime, rat, rat_from_int, rat_pow, rat_string, Int, Rat,
};
use crate::stirling::{stirling1, stirling2};
use crate::{Error, Result};

/// Parameters of the three congruence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceParams {
    pub p: i64,
    pub m: i64,
    pub l: i64,
    pub s: i64,
}

/// Parameters of the classical cross-check congruences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalParams {
    pub p: i64,
    pub s: i64,
    pub h: i64,
    pub l: i64,
    pub q: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Glaisher,
    Fleck,
    Wan,
    SunTauraso,
}

impl ClassicalKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalKind::Glaisher => "glaisher",
            ClassicalKind::Fleck => "fleck",
            ClassicalKind::Wan => "wan",
            ClassicalKind::SunTauraso => "suntauraso",
        }
    }
}

/// The two lacunary rewrites: form 1 keeps the lower binomial index fixed
/// and sums over lacunary upper indices, form 2 the other way around.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteForm {
    FleckLike,
    AdelbergLike,
}

/// One verification record: the exact sum, the predicted modulus, whether
/// the congruence holds, and the exact quotient (lhs - rhs)/modulus,
/// together with the Adelberg-polynomial prediction when there is one.
///
/// `modulus = 0` encodes an exact-equality check (identity rows); then
/// `holds` means `lhs_sum == rhs` and no quotient is carried.
#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub congruence: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub lhs_sum: Int,
    pub rhs: Int,
    pub modulus: Int,
    pub holds: bool,
    pub quotient: Option<Rat>,
    pub predicted_quotient: Option<Rat>,
}

impl CongruenceReport {
    fn congruence_row(
        congruence: &'static str,
        params: Vec<(&'static str, i64)>,
        lhs_sum: Int,
        rhs: Int,
        modulus: Int,
        predicted_quotient: Option<Rat>,
    ) -> Self {
        debug_assert!(modulus >= Int::one());
        let quotient = Rat::new(&lhs_sum - &rhs, modulus.clone());
        let mut holds = quotient.is_integer();
        if let Some(pq) = &predicted_quotient {
            holds = holds && quotient == *pq;
        }
        CongruenceReport {
            congruence,
            params,
            lhs_sum,
            rhs,
            modulus,
            holds,
            quotient: Some(quotient),
            predicted_quotient,
        }
    }

    fn identity_row(
        congruence: &'static str,
        params: Vec<(&'static str, i64)>,
        lhs_sum: Int,
        rhs: Int,
    ) -> Self {
        let holds = lhs_sum == rhs;
        CongruenceReport {
            congruence,
            params,
            lhs_sum,
            rhs,
            modulus: Int::zero(),
            holds,
            quotient: None,
            predicted_quotient: None,
        }
    }

    /// One-line JSON form with the interchange fields in canonical order.
    pub fn json_row(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    /// Tab-separated row: congruence, parameter values, lhs_sum, modulus,
    /// holds, quotient.
    pub fn tsv_row(&self) -> String {
        let mut cols: Vec<String> = vec![self.congruence.to_string()];
        cols.extend(self.params.iter().map(|(_, v)| v.to_string()));
        cols.push(self.lhs_sum.to_string());
        cols.push(self.modulus.to_string());
        cols.push(self.holds.to_string());
        cols.push(self.quotient.as_ref().map(rat_string).unwrap_or_default());
        cols.join("\t")
    }
}

impl Serialize for CongruenceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("congruence", self.congruence)?;
        for (k, v) in &self.params {
            map.serialize_entry(k, v)?;
        }
        map.serialize_entry("lhs_sum", &self.lhs_sum.to_string())?;
        map.serialize_entry("modulus", &self.modulus.to_string())?;
        map.serialize_entry("holds", &self.holds)?;
        if let Some(q) = &self.quotient {
            map.serialize_entry("quotient", &rat_string(q))?;
        }
        map.end()
    }
}

fn neg_if(cond: bool, v: Int) -> Int {
    if cond {
        -v
    } else {
        v
    }
}

fn require_prime(p: i64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime {
            name: "p",
            value: p,
        })
    }
}

fn require_nonneg(name: &'static str, v: i64) -> Result<()> {
    if v >= 0 {
        Ok(())
    } else {
        Err(Error::Negative { name, value: v })
    }
}

fn require_s_window(s: i64, p: i64) -> Result<()> {
    if s <= 0 || s >= p {
        Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "0 < s < p",
        })
    } else {
        Ok(())
    }
}

/// Mixed-kind Stirling identity, exact for any positive integer p:
/// (-1)^(p-1) C(n-1, p-1) s1(n-p+1, k)
///   = sum_i (-1)^i C(k-1+i, i) S2(i, p-1) s1(n, i+k),
/// summing i over [0, n-k].
pub fn identity33_check(p: i64, n: i64, k: i64) -> Result<bool> {
    let report = identity33_report(p, n, k)?;
    Ok(report.holds)
}

pub fn identity33_report(p: i64, n: i64, k: i64) -> Result<CongruenceReport> {
    if p < 1 {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            expected: "p >= 1",
        });
    }
    if n < p - 1 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            expected: "n >= p - 1",
        });
    }
    require_nonneg("k", k)?;
    let lhs = neg_if((p - 1) % 2 == 1, binom_int(n - 1, p - 1)) * stirling1(n - p + 1, k)?;
    let mut rhs = Int::zero();
    let mut i = 0;
    while i <= n - k {
        let term = binom_int(k - 1 + i, i) * stirling2(i, p - 1)? * stirling1(n, i + k)?;
        rhs += neg_if(i % 2 == 1, term);
        i += 1;
    }
    Ok(CongruenceReport::identity_row(
        "identity33",
        vec![("p", p), ("n", n), ("k", k)],
        lhs,
        rhs,
    ))
}

/// Corollary congruence: sum over i > 0 with (p-1) | i of
/// C(k-1+i, k-1) s1(n, i+k), congruent to [p | n] s1(n-p+1, k) mod p.
pub fn cor34_check(p: i64, n: i64, k: i64) -> Result<bool> {
    Ok(cor34_report(p, n, k)?.holds)
}

pub fn cor34_report(p: i64, n: i64, k: i64) -> Result<CongruenceReport> {
    require_prime(p)?;
    if n < p - 1 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            expected: "n >= p - 1",
        });
    }
    require_nonneg("k", k)?;
    let mut lhs = Int::zero();
    let mut i = p - 1;
    while i <= n - k {
        lhs += binom_int(k - 1 + i, k - 1) * stirling1(n, i + k)?;
        i += p - 1;
    }
    let rhs = if n % p == 0 {
        stirling1(n - p + 1, k)?
    } else {
        Int::zero()
    };
    Ok(CongruenceReport::congruence_row(
        "cor34",
        vec![("p", p), ("n", n), ("k", k)],
        lhs,
        rhs,
        Int::from(p),
        None,
    ))
}

/// First congruence family (strong form): for m > l >= 0 and any s >= 0,
/// sum_(i >= l+1) (-1)^(m-i) C(m + s/p, i + s/p)
///                C(m+s-1+i(p-1), m+s-1+l(p-1))
/// is congruent mod p to [p | s] (-1)^(m-1-l) C(m-1+s/p, l+s/p).
/// The support ends at i = m since the first binomial vanishes beyond.
pub fn cong1_report(params: &CongruenceParams) -> Result<CongruenceReport> {
    let &CongruenceParams { p, m, l, s } = params;
    require_prime(p)?;
    require_nonneg("l", l)?;
    require_nonneg("s", s)?;
    if m <= l {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            expected: "m > l",
        });
    }
    let sq = s / p;
    let low = m + s - 1 + l * (p - 1);
    let mut lhs = Int::zero();
    for i in (l + 1)..=m {
        let term = binom_int(m + sq, i + sq) * binom_int(m + s - 1 + i * (p - 1), low);
        lhs += neg_if((m - i) % 2 == 1, term);
    }
    let rhs = if s % p == 0 {
        neg_if((m - 1 - l) % 2 == 1, binom_int(m - 1 + sq, l + sq))
    } else {
        Int::zero()
    };
    if s == 0 {
        // s = 0 specialization: the rearranged alternating form equals
        // (-1)^m (lhs - rhs) exactly.
        let mut alt = Int::zero();
        for i in (l + 1)..=m {
            let term = binom_int(m, i) * binom_int(m - 1 + i * (p - 1), m - 1 + l * (p - 1));
            alt += neg_if(i % 2 == 1, term);
        }
        alt += neg_if(l % 2 == 1, binom_int(m - 1, l));
        assert_eq!(alt, neg_if(m % 2 == 1, &lhs - &rhs));
    }
    Ok(CongruenceReport::congruence_row(
        "cong1",
        vec![("p", p), ("m", m), ("l", l), ("s", s)],
        lhs,
        rhs,
        Int::from(p),
        None,
    ))
}

/// First congruence in its n-indexed corollary form, for p not dividing n:
/// sum_(i >= l+1) (-1)^i C(n-r, i) C(n-1+i(p-1), n-1+l(p-1)) = 0 mod p,
/// where r is the (nonzero) residue of n mod p. Support ends at i = n - r.
pub fn cong1_n_report(p: i64, n: i64, l: i64) -> Result<CongruenceReport> {
    require_prime(p)?;
    require_nonneg("l", l)?;
    if n <= 0 || n % p == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            expected: "n > 0 with p not dividing n",
        });
    }
    let r = n % p;
    let low = n - 1 + l * (p - 1);
    let mut lhs = Int::zero();
    for i in (l + 1)..=(n - r) {
        let term = binom_int(n - r, i) * binom_int(n - 1 + i * (p - 1), low);
        lhs += neg_if(i % 2 == 1, term);
    }
    Ok(CongruenceReport::congruence_row(
        "cong1_n",
        vec![("p", p), ("n", n), ("l", l)],
        lhs,
        Int::zero(),
        Int::from(p),
        None,
    ))
}

/// Second congruence family: sum_(i=0..m) (-1)^(m-i) C(m, i) C(l+ip, m+s-1)
/// is divisible by p^m, with quotient the Adelberg polynomial A_(s-1)(l, p, m).
pub fn cong2_report(params: &CongruenceParams) -> Result<CongruenceReport> {
    let &CongruenceParams { p, m, l, s } = params;
    require_prime(p)?;
    require_nonneg("m", m)?;
    require_nonneg("l", l)?;
    require_s_window(s, p)?;
    let lhs = divided_difference_sum(p, m, l, s);
    let predicted = a_poly(s - 1)?.eval(&rat(m), &rat(l), &rat(p));
    Ok(CongruenceReport::congruence_row(
        "cong2",
        vec![("p", p), ("m", m), ("l", l), ("s", s)],
        lhs,
        Int::zero(),
        int_pow(p, m as u32),
        Some(predicted),
    ))
}

/// The bare sum of the second family, defined for any modulus-like base n.
fn divided_difference_sum(n: i64, m: i64, l: i64, s: i64) -> Int {
    let mut lhs = Int::zero();
    for i in 0..=m {
        let term = binom_int(m, i) * binom_int(l + i * n, m + s - 1);
        lhs += neg_if((m - i) % 2 == 1, term);
    }
    lhs
}

/// Exact identity behind the second family, valid for any integer base
/// n != 0 (prime or not): the sum equals n^m A_(s-1)(l, n, m) as rationals.
pub fn adelberg_sum_identity(n: i64, m: i64, l: i64, s: i64) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            expected: "nonzero",
        });
    }
    require_nonneg("m", m)?;
    require_nonneg("l", l)?;
    if s < 1 {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            expected: "s >= 1",
        });
    }
    let lhs = divided_difference_sum(n, m, l, s);
    let rhs = rat_pow(&rat(n), m) * a_value(s - 1, l, n, m)?;
    Ok(rat_from_int(lhs) == rhs)
}

/// Third congruence family: the double sum
/// sum_(j,i >= l) (-1)^(j-i) C(m,j) C(j,i) C(j+s-1+i(p-1), j+s-1+l(p-1))
/// equals p^m A_u(s-1, p, m) with u = l(p-1)+s-1 and is divisible by
/// p^(m-l). Support: l <= i <= j <= m.
pub fn cong3_report(params: &CongruenceParams) -> Result<CongruenceReport> {
    let &CongruenceParams { p, m, l, s } = params;
    let idx = AdelbergIndex::from_params(p, l, s)?;
    if m < l {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            expected: "m >= l",
        });
    }
    let lhs = cong3_sum(p, m, l, s);
    let a = a_value(idx.u, s - 1, p, m)?;
    let predicted = rat_pow(&rat(p), l) * &a;
    // the stronger statement: exact equality with p^m A_u(s-1, p, m)
    let equality = rat_from_int(lhs.clone()) == rat_pow(&rat(p), m) * &a;
    let mut report = CongruenceReport::congruence_row(
        "cong3",
        vec![("p", p), ("m", m), ("l", l), ("s", s)],
        lhs,
        Int::zero(),
        int_pow(p, (m - l) as u32),
        Some(predicted),
    );
    report.holds = report.holds && equality;
    Ok(report)
}

fn cong3_sum(p: i64, m: i64, l: i64, s: i64) -> Int {
    let mut lhs = Int::zero();
    for j in l..=m {
        let low = j + s - 1 + l * (p - 1);
        for i in l..=j {
            let term = binom_int(m, j) * binom_int(j, i) * binom_int(j + s - 1 + i * (p - 1), low);
            lhs += neg_if((j - i) % 2 == 1, term);
        }
    }
    lhs
}

/// The single sum whose binomial transform produces the third family.
fn s_seq(p: i64, s: i64, l: i64, m: i64) -> Int {
    let low = m + s - 1 + l * (p - 1);
    let mut acc = Int::zero();
    for i in l..=m {
        let term = binom_int(m, i) * binom_int(m + s - 1 + i * (p - 1), low);
        acc += neg_if((m - i) % 2 == 1, term);
    }
    acc
}

/// Binomial-transform remark: with u = l(p-1)+s-1,
/// sum_j C(m,j) s_seq(j) = p^m A_u(s-1, p, m) for all m <= m_max, and the
/// inverse transform recovers s_seq from the A-values.
pub fn s_seq_transform_check(p: i64, s: i64, l: i64, m_max: i64) -> Result<bool> {
    let idx = AdelbergIndex::from_params(p, l, s)?;
    require_nonneg("m_max", m_max)?;
    for m in 0..=m_max {
        let mut forward = Int::zero();
        for j in 0..=m {
            forward += binom_int(m, j) * s_seq(p, s, l, j);
        }
        if rat_from_int(forward) != rat_pow(&rat(p), m) * a_value(idx.u, s - 1, p, m)? {
            return Ok(false);
        }
        let mut inverse = Rat::zero();
        for j in 0..=m {
            let term =
                rat_from_int(binom_int(m, j)) * rat_pow(&rat(p), j) * a_value(idx.u, s - 1, p, j)?;
            inverse += if (m - j) % 2 == 1 { -term } else { term };
        }
        if inverse != rat_from_int(s_seq(p, s, l, m)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classical cross-check congruences, each evaluated exactly over its
/// finite support.
pub fn classical_check(kind: ClassicalKind, params: &ClassicalParams) -> Result<CongruenceReport> {
    let &ClassicalParams { p, s, h, l, q } = params;
    require_prime(p)?;
    require_s_window(s, p)?;
    if h < 0 || h >= p {
        return Err(Error::OutOfRange {
            name: "h",
            value: h,
            expected: "0 <= h < p",
        });
    }
    require_nonneg("l", l)?;
    require_nonneg("q", q)?;
    match kind {
        ClassicalKind::Glaisher => {
            let n = s + l * (p - 1);
            let mut lhs = Int::zero();
            let mut idx = h;
            while idx <= n {
                lhs += binom_int(n, idx);
                idx += p - 1;
            }
            Ok(CongruenceReport::congruence_row(
                kind.name(),
                vec![("p", p), ("s", s), ("h", h), ("l", l)],
                lhs,
                binom_int(s, h),
                Int::from(p),
                None,
            ))
        }
        ClassicalKind::Fleck => {
            let n = s + q * (p - 1);
            let mut lhs = Int::zero();
            let mut i = 0;
            while h + i * p <= n {
                lhs += neg_if((i * p) % 2 == 1, binom_int(n, h + i * p));
                i += 1;
            }
            Ok(CongruenceReport::congruence_row(
                kind.name(),
                vec![("p", p), ("s", s), ("h", h), ("q", q)],
                lhs,
                Int::zero(),
                int_pow(p, q as u32),
                None,
            ))
        }
        ClassicalKind::Wan => {
            let n = l * p + s + q * (p - 1);
            let mut lhs = Int::zero();
            let mut i = 0;
            while h + i * p <= n {
                let term = binom_int(i, l) * binom_int(n, h + i * p);
                lhs += neg_if((i * p) % 2 == 1, term);
                i += 1;
            }
            Ok(CongruenceReport::congruence_row(
                kind.name(),
                vec![("p", p), ("s", s), ("h", h), ("l", l), ("q", q)],
                lhs,
                Int::zero(),
                int_pow(p, q as u32),
                None,
            ))
        }
        ClassicalKind::SunTauraso => {
            let mut lhs = Int::zero();
            for j in 0..=q {
                let n = h + j * (p - 1);
                let mut i = 0;
                while s + i * (p - 1) <= n {
                    let term = binom_int(q, j) * binom_int(n, s + i * (p - 1));
                    lhs += neg_if((j + i * (p - 1)) % 2 == 1, term);
                    i += 1;
                }
            }
            Ok(CongruenceReport::congruence_row(
                kind.name(),
                vec![("p", p), ("s", s), ("h", h), ("q", q)],
                lhs,
                Int::zero(),
                int_pow(p, q as u32),
                None,
            ))
        }
    }
}

/// The two lacunary rewrites. Form 1 sums C(l(p-1), t) C(r+tp, m) with
/// alternating signs over t in [0, l(p-1)] and checks divisibility by
/// p^(l(p-1)) under m < (p-1)(l+1); form 2 sums C((k-r)/p, l) C(m, k) over
/// k = r, r+p, ..., <= m and checks divisibility by
/// p^floor((m - pl - 1)/(p-1)), a vacuous modulus when the exponent is <= 0.
pub fn lacunary_rewrite_check(
    form: RewriteForm,
    p: i64,
    m: i64,
    l: i64,
    r: i64,
) -> Result<CongruenceReport> {
    require_prime(p)?;
    require_nonneg("m", m)?;
    require_nonneg("l", l)?;
    require_nonneg("r", r)?;
    match form {
        RewriteForm::FleckLike => {
            if m >= (p - 1) * (l + 1) {
                return Err(Error::OutOfRange {
                    name: "m",
                    value: m,
                    expected: "m < (p-1)(l+1)",
                });
            }
            let e = l * (p - 1);
            let mut lhs = Int::zero();
            for t in 0..=e {
                let term = binom_int(e, t) * binom_int(r + t * p, m);
                lhs += neg_if(t % 2 == 1, term);
            }
            Ok(CongruenceReport::congruence_row(
                "rewrite",
                vec![("form", 1), ("p", p), ("m", m), ("l", l), ("r", r)],
                lhs,
                Int::zero(),
                int_pow(p, e as u32),
                None,
            ))
        }
        RewriteForm::AdelbergLike => {
            if r >= p {
                return Err(Error::OutOfRange {
                    name: "r",
                    value: r,
                    expected: "r < p",
                });
            }
            let mut lhs = Int::zero();
            let mut k = r;
            while k <= m {
                let t = (k - r) / p;
                let term = binom_int(t, l) * binom_int(m, k);
                lhs += neg_if((k - r) % 2 == 1, term);
                k += p;
            }
            let e = (m - p * l - 1).div_euclid(p - 1);
            let modulus = if e <= 0 {
                Int::one()
            } else {
                int_pow(p, e as u32)
            };
            Ok(CongruenceReport::congruence_row(
                "rewrite",
                vec![("form", 2), ("p", p), ("m", m), ("l", l), ("r", r)],
                lhs,
                Int::zero(),
                modulus,
                None,
            ))
        }
    }
}
