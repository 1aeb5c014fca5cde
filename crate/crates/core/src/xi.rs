//! Exact arithmetic in the number field generated by the real root
//! ξ ≈ 0.334981556 of ξ⁶ − 3ξ⁵ − 11ξ⁴ + 24ξ³ − 6ξ² − 48ξ + 16.
//!
//! Elements are coordinate vectors in the basis 1, ξ, …, ξ⁵. Signs are
//! decided by interval evaluation on a rational isolating interval of ξ,
//! refined by bisection until the interval excludes zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{count_roots, Poly};
use crate::scalar::{fmt_rat, rat, rat_to_f64, Field, Ring};

pub const DEGREE: usize = 6;

/// Coefficients of the defining sextic, constant term first.
pub const MIN_POLY: [i64; 7] = [16, -48, -6, 24, -11, -3, 1];

/// Rational isolating interval for ξ.
pub fn isolating_interval() -> (BigRational, BigRational) {
    (rat(1, 3), rat(34, 100))
}

pub fn min_poly() -> Poly<BigRational> {
    Poly::new(MIN_POLY.iter().map(|&c| rat(c, 1)).collect())
}

struct Refined {
    lo: BigRational,
    hi: BigRational,
    mid: f64,
}

fn bisect(lo: &mut BigRational, hi: &mut BigRational) {
    let p = min_poly();
    let mid = (lo.clone() + hi.clone()) / rat(2, 1);
    let sl = p.eval(lo).signum();
    let sm = p.eval(&mid).signum();
    if sm.is_zero() {
        *lo = mid.clone();
        *hi = mid;
    } else if sm == sl {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

fn refined() -> &'static Refined {
    static CELL: OnceLock<Refined> = OnceLock::new();
    CELL.get_or_init(|| {
        let (mut lo, mut hi) = isolating_interval();
        for _ in 0..160 {
            bisect(&mut lo, &mut hi);
        }
        let mid = rat_to_f64(&((lo.clone() + hi.clone()) / rat(2, 1)));
        Refined { lo, hi, mid }
    })
}

/// ξ as a float.
pub fn xi_f64() -> f64 {
    refined().mid
}

/// Checks that the isolating interval holds exactly one root and that no
/// root lies in (0, lo]; returns the Sturm root counts on both intervals.
pub fn certify_interval() -> (usize, usize) {
    let s = min_poly().sturm_sequence();
    let (lo, hi) = isolating_interval();
    (count_roots(&s, &lo, &hi), count_roots(&s, &rat(0, 1), &lo))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Xi {
    c: Vec<BigRational>,
}

impl Xi {
    pub fn from_coords(c: &[BigRational]) -> Self {
        assert!(c.len() <= DEGREE);
        let mut v = c.to_vec();
        v.resize(DEGREE, BigRational::zero());
        Xi { c: v }
    }

    /// Element `(Σ num[i] ξ^i) / den`.
    pub fn from_ints(num: &[i64], den: i64) -> Self {
        Xi::from_coords(&num.iter().map(|&n| rat(n, den)).collect::<Vec<_>>())
    }

    pub fn xi() -> Self {
        Xi::from_ints(&[0, 1], 1)
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    pub fn as_poly(&self) -> Poly<BigRational> {
        Poly::new(self.c.clone())
    }

    fn from_poly(p: &Poly<BigRational>) -> Self {
        let r = p.div_rem_monic(&min_poly()).1;
        Xi::from_coords(r.coeffs())
    }

    fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let (mut a, mut b) = (BigRational::zero(), BigRational::zero());
        let (mut plo, mut phi) = (rat(1, 1), rat(1, 1));
        for c in &self.c {
            if c.is_positive() {
                a += c * &plo;
                b += c * &phi;
            } else {
                a += c * &phi;
                b += c * &plo;
            }
            plo *= lo;
            phi *= hi;
        }
        (a, b)
    }

    pub fn signum(&self) -> Ordering {
        if self.c.iter().all(|c| c.is_zero()) {
            return Ordering::Equal;
        }
        let r = refined();
        let (mut lo, mut hi) = (r.lo.clone(), r.hi.clone());
        for _ in 0..2000 {
            let (a, b) = self.eval_interval(&lo, &hi);
            if a.is_positive() {
                return Ordering::Greater;
            }
            if b.is_negative() {
                return Ordering::Less;
            }
            bisect(&mut lo, &mut hi);
        }
        unreachable!("nonzero element of an irreducible extension evaluated to zero")
    }

    pub fn to_f64(&self) -> f64 {
        let x = xi_f64();
        self.c.iter().rev().fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    pub fn inverse(&self) -> Option<Xi> {
        self.as_poly()
            .inverse_mod(&min_poly())
            .map(|p| Xi::from_poly(&p))
    }

    /// Human-readable form `(c5 ξ^5 + … + c0)/d` with a common denominator.
    pub fn display(&self) -> String {
        use num_integer::Integer;
        let mut den = num_bigint::BigInt::from(1);
        for c in &self.c {
            den = den.lcm(c.denom());
        }
        let dq = BigRational::from_integer(den.clone());
        let mut parts = vec![];
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let n = fmt_rat(&(c * &dq));
            let lead = match n.as_str() {
                "1" => String::new(),
                "-1" => "-".into(),
                _ => format!("{n}*"),
            };
            parts.push(match i {
                0 => n,
                1 => format!("{lead}xi"),
                _ => format!("{lead}xi^{i}"),
            });
        }
        let body = if parts.is_empty() { "0".into() } else { parts.join(" + ").replace("+ -", "- ") };
        if den == num_bigint::BigInt::from(1) {
            body
        } else {
            format!("({body})/{den}")
        }
    }
}

impl fmt::Display for Xi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for Xi {
    type Output = Xi;
    fn add(self, o: Xi) -> Xi {
        Xi {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for Xi {
    type Output = Xi;
    fn sub(self, o: Xi) -> Xi {
        Xi {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for Xi {
    type Output = Xi;
    fn neg(self) -> Xi {
        Xi {
            c: self.c.into_iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for Xi {
    type Output = Xi;
    fn mul(self, o: Xi) -> Xi {
        let mut prod = vec![BigRational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        // ξ⁶ = −Σ MIN_POLY[k] ξ^k for k < 6
        for d in (DEGREE..prod.len()).rev() {
            let top = std::mem::take(&mut prod[d]);
            if top.is_zero() {
                continue;
            }
            for (k, &m) in MIN_POLY[..DEGREE].iter().enumerate() {
                prod[d - DEGREE + k] -= &top * rat(m, 1);
            }
        }
        prod.truncate(DEGREE);
        Xi { c: prod }
    }
}

impl Div for Xi {
    type Output = Xi;
    fn div(self, o: Xi) -> Xi {
        self * o.inverse().expect("division by zero in Q(xi)")
    }
}

impl Zero for Xi {
    fn zero() -> Self {
        Xi::from_coords(&[])
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }
}

impl One for Xi {
    fn one() -> Self {
        Xi::from_ints(&[1], 1)
    }
}

impl Ring for Xi {
    fn from_int(v: i64) -> Self {
        Xi::from_ints(&[v], 1)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }
}

impl Field for Xi {
    fn from_rational(q: &BigRational) -> Self {
        Xi::from_coords(std::slice::from_ref(q))
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
    fn sign(&self) -> Ordering {
        self.signum()
    }
    fn is_exact() -> bool {
        true
    }
}

/// Irreducibility certificate: a prime `p` for which the sextic stays
/// irreducible over GF(p) (Rabin's test), which implies irreducibility
/// over the rationals since the polynomial is monic.
pub fn irreducibility_witness() -> Option<u64> {
    (3..200u64)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .find(|&p| gfp::rabin_irreducible(&MIN_POLY, p))
}

mod gfp {
    //! Polynomials over GF(p), coefficients low to high.

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let dm = m.len() - 1;
        let li = inv(m[dm], p);
        while a.len() > dm {
            let d = a.len() - 1;
            let q = a[d] * li % p;
            for (k, &mk) in m.iter().enumerate() {
                let idx = d - dm + k;
                a[idx] = (a[idx] + p * p - q * mk % p) % p;
            }
            a = trim(a);
        }
        a
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    fn powmod_x(e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut base = rem(&[0, 1], m, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        result
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub_x(a: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        a.resize(a.len().max(2), 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a)
    }

    pub fn rabin_irreducible(coeffs: &[i64], p: u64) -> bool {
        let m: Vec<u64> = coeffs
            .iter()
            .map(|&c| (c.rem_euclid(p as i64)) as u64)
            .collect();
        let n = (m.len() - 1) as u32;
        if m[n as usize] == 0 {
            return false;
        }
        // x^(p^n) == x (mod f)
        if sub_x(&powmod_x(p.pow(n), &m, p), p) != Vec::<u64>::new() {
            return false;
        }
        // gcd(x^(p^(n/q)) - x, f) == 1 for each prime q | n
        for q in [2u32, 3] {
            if n % q == 0 {
                let h = sub_x(&powmod_x(p.pow(n / q), &m, p), p);
                if gcd(&m, &h, p).len() != 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_isolates_smallest_positive_root() {
        assert_eq!(certify_interval(), (1, 0));
        assert!((xi_f64() - 0.334981556).abs() < 1e-9);
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        let x = Xi::xi();
        let mut acc = Xi::zero();
        let mut pw = Xi::one();
        for &c in MIN_POLY.iter() {
            acc = acc + pw.clone() * Xi::from_int(c);
            pw = pw * x.clone();
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn inverse_and_sign() {
        let a = Xi::from_ints(&[-74, 44, 49, -16, -4, 1], 90);
        assert_eq!(a.signum(), Ordering::Less);
        let inv = a.inverse().unwrap();
        assert_eq!(a * inv, Xi::one());
        let tiny = Xi::xi() - Xi::from_coords(&[rat(334981556, 1_000_000_000)]);
        assert_eq!(tiny.signum(), Ordering::Less);
    }

    #[test]
    fn sextic_is_irreducible() {
        assert!(irreducibility_witness().is_some());
    }
}
