//! Stirling numbers of both kinds and the prime-modulus closed form for
//! numbers of the first kind.
//!
//! Values come from a shared triangular table grown on demand from the basic
//! recurrences; results are identical to uncached recomputation, and the
//! shared cache is behind a mutex so concurrent lookups are safe.

use std::sync::{Mutex, OnceLock};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::exactnum::{binom_int, is_prime, Int};
use crate::{Error, Result};

/// Which triangle: cycle numbers (first kind) or partition numbers (second kind).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Unsigned Stirling numbers of the first kind (cycle counts).
    Cycle,
    /// Stirling numbers of the second kind (set-partition counts).
    Partition,
}

/// Triangular table of Stirling numbers, grown row by row.
///
/// Row 0 is `[1]`; the cycle recurrence is
/// `e(n,k) = (n-1) e(n-1,k) + e(n-1,k-1)` and the partition recurrence is
/// `e(n,k) = k e(n-1,k) + e(n-1,k-1)`. Entries outside `0 <= k <= n` are zero.
#[derive(Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<Int>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable {
            kind,
            rows: vec![vec![Int::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    fn grow_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let nn = self.rows.len();
            let row = {
                let prev = self.rows.last().unwrap();
                let mut row = Vec::with_capacity(nn + 1);
                for k in 0..=nn {
                    let factor = match self.kind {
                        StirlingKind::Cycle => Int::from(nn as i64 - 1),
                        StirlingKind::Partition => Int::from(k as i64),
                    };
                    let mut v = if k < prev.len() {
                        factor * &prev[k]
                    } else {
                        Int::zero()
                    };
                    if k > 0 {
                        v += &prev[k - 1];
                    }
                    row.push(v);
                }
                row
            };
            self.rows.push(row);
        }
    }

    /// Entry (n, k); zero when k < 0 or k > n, error when n < 0.
    pub fn entry(&mut self, n: i64, k: i64) -> Result<Int> {
        if n < 0 {
            return Err(Error::Negative {
                name: "n",
                value: n,
            });
        }
        if k < 0 || k > n {
            return Ok(Int::zero());
        }
        self.grow_to(n as usize);
        Ok(self.rows[n as usize][k as usize].clone())
    }
}

fn shared(kind: StirlingKind) -> &'static Mutex<StirlingTable> {
    static CYCLE: OnceLock<Mutex<StirlingTable>> = OnceLock::new();
    static PARTITION: OnceLock<Mutex<StirlingTable>> = OnceLock::new();
    match kind {
        StirlingKind::Cycle => {
            CYCLE.get_or_init(|| Mutex::new(StirlingTable::new(StirlingKind::Cycle)))
        }
        StirlingKind::Partition => {
            PARTITION.get_or_init(|| Mutex::new(StirlingTable::new(StirlingKind::Partition)))
        }
    }
}

/// Unsigned Stirling number of the first kind.
pub fn stirling1(n: i64, k: i64) -> Result<Int> {
    shared(StirlingKind::Cycle).lock().unwrap().entry(n, k)
}

/// Stirling number of the second kind.
pub fn stirling2(n: i64, k: i64) -> Result<Int> {
    shared(StirlingKind::Partition).lock().unwrap().entry(n, k)
}

/// Euclidean data for the prime-modulus closed form: n = q p + r with
/// 0 <= r < p, rho the residue of k - q modulo p - 1, and
/// j = rho + [rho = 0][r = p-1](p-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EuclideanSplit {
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub k: i64,
    pub rho: i64,
    pub j: i64,
}

pub fn euclidean_split(n: i64, k: i64, p: i64) -> EuclideanSplit {
    let q = n.div_euclid(p);
    let r = n.rem_euclid(p);
    let rho = (k - q).rem_euclid(p - 1);
    let j = if rho == 0 && r == p - 1 { p - 1 } else { rho };
    EuclideanSplit {
        n,
        p,
        q,
        r,
        k,
        rho,
        j,
    }
}

/// Residue in [0, p) of the first-kind Stirling number (n, k) modulo a prime
/// p, computed from the closed form
/// `(-1)^(q - i) * s1(r, j) * C(q, i)` with `i = (k - q - j)/(p - 1)`,
/// without touching the exact value.
pub fn stirling1_mod_p(n: i64, k: i64, p: i64) -> Result<Int> {
    if !is_prime(p) {
        return Err(Error::NotPrime {
            name: "p",
            value: p,
        });
    }
    if n < 0 {
        return Err(Error::Negative {
            name: "n",
            value: n,
        });
    }
    if k < 0 || k > n {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            expected: "0 <= k <= n",
        });
    }
    let split = euclidean_split(n, k, p);
    let t = split.k - split.q - split.j;
    // The definition of j makes t a multiple of p-1; keep the no-solution
    // branch explicit anyway.
    if t.rem_euclid(p - 1) != 0 {
        return Ok(Int::zero());
    }
    let i = t.div_euclid(p - 1);
    if i < 0 || i > split.q {
        return Ok(Int::zero());
    }
    let mut v = stirling1(split.r, split.j)? * binom_int(split.q, i);
    if (split.q - i).rem_euclid(2) == 1 {
        v = -v;
    }
    Ok(v.mod_floor(&Int::from(p)))
}

/// Residue of the second-kind Stirling number (n, p-1) modulo a prime p,
/// which equals 1 exactly when p-1 divides n (and 0 otherwise) for n > 0.
pub fn stirling2_col_mod_p(n: i64, p: i64) -> Result<Int> {
    if !is_prime(p) {
        return Err(Error::NotPrime {
            name: "p",
            value: p,
        });
    }
    if n <= 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            expected: "n > 0",
        });
    }
    let v = stirling2(n, p - 1)?.mod_floor(&Int::from(p));
    let expected = if n % (p - 1) == 0 {
        Int::one()
    } else {
        Int::zero()
    };
    assert_eq!(
        v, expected,
        "second-kind column congruence violated at n={n}, p={p}"
    );
    Ok(v)
}

/// Residue of the lacunary first-kind Stirling number
/// `s1(m+s+m(p-1), m+s+i(p-1))` modulo a prime p, checked against the
/// binomial closed form `(-1)^(m-i) C(m + s/p, i + s/p)`.
pub fn lacunary_stirling_mod(m: i64, s: i64, i: i64, p: i64) -> Result<Int> {
    if !is_prime(p) {
        return Err(Error::NotPrime {
            name: "p",
            value: p,
        });
    }
    for (name, value) in [("m", m), ("s", s), ("i", i)] {
        if value < 0 {
            return Err(Error::Negative { name, value });
        }
    }
    let n = m + s + m * (p - 1);
    let k = m + s + i * (p - 1);
    let lhs = if k > n {
        Int::zero()
    } else {
        stirling1_mod_p(n, k, p)?
    };
    let mut rhs = binom_int(m + s / p, i + s / p);
    if (m - i).rem_euclid(2) == 1 {
        rhs = -rhs;
    }
    let rhs = rhs.mod_floor(&Int::from(p));
    assert_eq!(
        lhs, rhs,
        "lacunary Stirling congruence violated at m={m} s={s} i={i} p={p}"
    );
    Ok(lhs)
}

/// Exact check of the second-kind convolution identity
/// `C(l+m, l) * S2(n, l+m) = sum_k S2(k, l) S2(n-k, m) C(n, k)`
/// for nonnegative arguments.
pub fn identity_628_check(l: i64, m: i64, n: i64) -> Result<bool> {
    for (name, value) in [("l", l), ("m", m), ("n", n)] {
        if value < 0 {
            return Err(Error::Negative { name, value });
        }
    }
    let lhs = binom_int(l + m, l) * stirling2(n, l + m)?;
    let mut rhs = Int::zero();
    for k in 0..=n {
        rhs += stirling2(k, l)? * stirling2(n - k, m)? * binom_int(n, k);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{factorial, int};

    /// Oracle for the first kind: coefficients of prod_{j=0}^{n-1} (x + j).
    fn rising_factorial_coeffs(n: usize) -> Vec<Int> {
        let mut c = vec![Int::one()];
        for j in 0..n as i64 {
            let mut next = vec![Int::zero(); c.len() + 1];
            for (i, v) in c.iter().enumerate() {
                next[i + 1] += v;
                next[i] += Int::from(j) * v;
            }
            c = next;
        }
        c
    }

    /// Oracle for the second kind: the explicit alternating sum
    /// ((-1)^k / k!) * sum_j (-1)^j C(k, j) j^n.
    fn stirling2_explicit(n: i64, k: i64) -> Int {
        let mut s = Int::zero();
        for j in 0..=k {
            let mut t = binom_int(k, j) * Int::from(j).pow(n as u32);
            if (k - j) % 2 == 1 {
                t = -t;
            }
            s += t;
        }
        let f = factorial(k as u64);
        assert!((&s % &f).is_zero());
        s / f
    }

    #[test]
    fn frozen_first_kind() {
        assert_eq!(stirling1(0, 0).unwrap(), int(1));
        assert_eq!(stirling1(4, 2).unwrap(), int(11));
        assert_eq!(stirling1(3, 5).unwrap(), int(0));
        assert_eq!(stirling1(7, 3).unwrap(), int(1624));
        assert_eq!(stirling1(5, -1).unwrap(), int(0));
        assert!(matches!(stirling1(-1, 0), Err(Error::Negative { .. })));
    }

    #[test]
    fn frozen_second_kind() {
        assert_eq!(stirling2(0, 0).unwrap(), int(1));
        assert_eq!(stirling2(4, 2).unwrap(), int(7));
        assert_eq!(stirling2(4, -1).unwrap(), int(0));
        assert_eq!(stirling2_explicit(4, 2), int(7));
        assert!(matches!(stirling2(-3, 1), Err(Error::Negative { .. })));
    }

    #[test]
    fn horizontal_generating_function() {
        for n in 0..=20usize {
            let coeffs = rising_factorial_coeffs(n);
            for (k, coeff) in coeffs.iter().enumerate() {
                assert_eq!(
                    &stirling1(n as i64, k as i64).unwrap(),
                    coeff,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn explicit_formula_second_kind() {
        for n in 0..=14i64 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k).unwrap(),
                    stirling2_explicit(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn table_type_matches_module_functions() {
        let mut t = StirlingTable::new(StirlingKind::Cycle);
        assert_eq!(t.kind(), StirlingKind::Cycle);
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(t.entry(n, k).unwrap(), stirling1(n, k).unwrap());
            }
        }
    }

    #[test]
    fn mod_p_closed_form_examples() {
        assert_eq!(stirling1_mod_p(7, 3, 3).unwrap(), int(1));
        assert_eq!(stirling1_mod_p(5, 1, 5).unwrap(), int(4));
        for p in [2i64, 3, 5, 7, 11] {
            for n in 1..p {
                assert_eq!(stirling1_mod_p(n, n, p).unwrap(), int(1));
            }
        }
        assert!(matches!(
            stirling1_mod_p(5, 2, 4),
            Err(Error::NotPrime { .. })
        ));
        assert!(matches!(
            stirling1_mod_p(5, 6, 3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn mod_p_closed_form_matches_exact() {
        for p in [2i64, 3, 5, 7] {
            for n in 0..=80i64 {
                for k in 0..=n {
                    let exact = stirling1(n, k).unwrap().mod_floor(&Int::from(p));
                    assert_eq!(
                        stirling1_mod_p(n, k, p).unwrap(),
                        exact,
                        "p={p} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn second_kind_column_lemma() {
        assert_eq!(stirling2_col_mod_p(4, 3).unwrap(), int(1));
        assert_eq!(stirling2_col_mod_p(3, 3).unwrap(), int(0));
        assert_eq!(stirling2_col_mod_p(2, 2).unwrap(), int(1));
        for p in [2i64, 3, 5, 7, 11, 13] {
            for n in 1..=40i64 {
                let v = stirling2_col_mod_p(n, p).unwrap();
                let expect = if n % (p - 1) == 0 { 1 } else { 0 };
                assert_eq!(v, int(expect));
            }
        }
        assert!(matches!(
            stirling2_col_mod_p(0, 3),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            stirling2_col_mod_p(4, 6),
            Err(Error::NotPrime { .. })
        ));
    }

    #[test]
    fn lacunary_stirling_examples() {
        assert_eq!(lacunary_stirling_mod(1, 1, 0, 3).unwrap(), int(2));
        assert_eq!(lacunary_stirling_mod(2, 1, 1, 2).unwrap(), int(0));
        for p in [2i64, 3, 5] {
            for m in 0..=4 {
                for s in 0..=4 {
                    assert_eq!(
                        lacunary_stirling_mod(m, s, m, p).unwrap(),
                        int(1).mod_floor(&Int::from(p))
                    );
                }
            }
        }
    }

    #[test]
    fn lacunary_stirling_window() {
        // The assert inside the function is the check; i > m exercises the
        // vanishing branch.
        for p in [2i64, 3, 5] {
            for m in 0..=5 {
                for s in 0..=5 {
                    for i in 0..=m + 2 {
                        lacunary_stirling_mod(m, s, i, p).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn wilson_theorem_window() {
        for p in [2i64, 3, 5, 7, 11, 13, 17, 19, 23] {
            let f = factorial(p as u64 - 1).mod_floor(&Int::from(p));
            assert_eq!(f, int(p - 1));
        }
    }

    #[test]
    fn binomial_row_alternating_mod_p() {
        for p in [2i64, 3, 5, 7, 11, 13] {
            for j in 0..=p - 1 {
                let lhs = binom_int(p - 1, j).mod_floor(&Int::from(p));
                let rhs = if j % 2 == 0 { int(1) } else { int(p - 1) };
                assert_eq!(lhs, rhs, "p={p} j={j}");
            }
        }
    }

    #[test]
    fn power_sum_mod_p() {
        for p in [2i64, 3, 5, 7, 11, 13] {
            for k in 1..=3 * (p - 1) {
                let mut s = Int::zero();
                for j in 1..=p - 1 {
                    s += Int::from(j).pow(k as u32);
                }
                let s = s.mod_floor(&Int::from(p));
                let expect = if k % (p - 1) == 0 { int(p - 1) } else { int(0) };
                assert_eq!(s, expect, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn identity_628_examples() {
        assert!(identity_628_check(1, 1, 2).unwrap());
        assert!(identity_628_check(0, 0, 5).unwrap());
        assert!(identity_628_check(2, 1, 4).unwrap());
        assert!(matches!(
            identity_628_check(-1, 0, 0),
            Err(Error::Negative { .. })
        ));
    }

    #[test]
    fn identity_628_window() {
        for l in 0..=3i64 {
            for m in 0..=3i64 {
                for n in 0..=8i64 {
                    assert!(identity_628_check(l, m, n).unwrap(), "l={l} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn shared_cache_is_safe_under_concurrent_growth() {
        let expected = stirling1(150, 70).unwrap();
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let expected = expected.clone();
                std::thread::spawn(move || {
                    for k in (t * 18)..=150 {
                        stirling1(150, k).unwrap();
                        stirling2(140, k.min(140)).unwrap();
                    }
                    assert_eq!(stirling1(150, 70).unwrap(), expected);
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }

    #[test]
    fn euclidean_split_invariants() {
        for p in [2i64, 3, 5, 7] {
            for n in 0..=40 {
                for k in 0..=n {
                    let sp = euclidean_split(n, k, p);
                    assert_eq!(sp.q * p + sp.r, n);
                    assert!(sp.r >= 0 && sp.r < p);
                    assert!(sp.rho >= 0 && sp.rho < p - 1 || (p == 2 && sp.rho == 0));
                    if sp.rho == 0 && sp.r == p - 1 {
                        assert_eq!(sp.j, p - 1);
                    } else {
                        assert_eq!(sp.j, sp.rho);
                    }
                }
            }
        }
    }
}
