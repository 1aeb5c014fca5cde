//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{fmt_rat, Field, Ring};

pub const MAX_VARS: usize = 5;

/// Exponent vector; lexicographic order with variable 0 most significant.
pub type Mono = [u16; MAX_VARS];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut p = MPoly::default();
        if !c.is_zero() {
            p.terms.insert([0; MAX_VARS], c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; MAX_VARS];
        m[i] = 1;
        let mut p = MPoly::default();
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; MAX_VARS]).cloned(),
            _ => None,
        }
    }

    fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Mono, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return MPoly::default();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    fn mul_ref(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut m = *ma;
                for (e, f) in m.iter_mut().zip(mb) {
                    *e += f;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    fn add_ref(&self, o: &MPoly, sign: bool) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, if sign { c.clone() } else { -c.clone() });
        }
        out
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::default();
        while let Some((rm, rc)) = rem.leading() {
            let mut qm = [0u16; MAX_VARS];
            for i in 0..MAX_VARS {
                qm[i] = rm[i].checked_sub(dm[i])?;
            }
            let qc = rc / &dc;
            let mut t = MPoly::default();
            t.terms.insert(qm, qc.clone());
            rem = rem.add_ref(&t.mul_ref(d), false);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Largest `k` with `f^k | self`, together with the cofactor.
    pub fn strip_factor(&self, f: &MPoly) -> (usize, MPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_empty() || f.as_constant().is_some() {
            return (0, cur);
        }
        while let Some(q) = cur.div_exact(f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::default();
        for (m, c) in &self.terms {
            if m[var] > 0 {
                let mut d = *m;
                d[var] -= 1;
                out.add_term(d, c * BigRational::from_integer(m[var].into()));
            }
        }
        out
    }

    pub fn eval<F: Field>(&self, point: &[F]) -> F {
        let maxdeg: Vec<usize> = (0..MAX_VARS)
            .map(|i| self.terms.keys().map(|m| m[i] as usize).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<F>> = (0..MAX_VARS)
            .map(|i| {
                let mut v = vec![F::one()];
                for _ in 0..maxdeg[i] {
                    let next = v.last().unwrap().clone() * point[i].clone();
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_rational(c);
            for i in 0..MAX_VARS {
                if m[i] > 0 {
                    t = t * powers[i][m[i] as usize].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Multiply through so the coefficients are coprime integers with a
    /// positive leading coefficient.
    pub fn primitive(&self) -> MPoly {
        use num_integer::Integer;
        let Some((_, lead)) = self.leading() else {
            return MPoly::default();
        };
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c * BigRational::from_integer(den.clone())).to_integer());
        }
        let mut s = BigRational::new(den, num);
        if lead.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn display(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = vec![];
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, fmt_rat(&mag));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&["x0", "x1", "x2", "x3", "x4"]))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        self.add_ref(&o, true)
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        self.add_ref(&o, false)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        self.mul_ref(&o)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.mul_ref(o)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.add_ref(o, false)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-BigRational::one())
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::int(1)
    }
}

impl Ring for MPoly {
    fn from_int(v: i64) -> Self {
        MPoly::int(v)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn exact_division_roundtrip() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let f = x.clone() * y.clone() - MPoly::int(3) + x.clone() * x.clone();
        let g = y.clone() - x.clone() + MPoly::int(2);
        let h = f.clone() * g.clone();
        assert_eq!(h.div_exact(&g), Some(f.clone()));
        assert_eq!(h.div_exact(&(x.clone() + y.clone())), None);
        let (k, rest) = (h.clone() * g.clone()).strip_factor(&g);
        assert_eq!((k, rest), (2, f));
    }

    #[test]
    fn evaluation_and_derivative() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let f = x.clone() * x.clone() * y.clone() - MPoly::int(5) * y.clone();
        let v: BigRational = f.eval(&[rat(2, 1), rat(1, 3), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(v, rat(-1, 3));
        assert_eq!(f.derivative(0), MPoly::int(2) * x * y);
    }

    #[test]
    fn primitive_form() {
        let x = MPoly::var(0);
        let f = (x.clone() * MPoly::constant(rat(-2, 3))) + MPoly::constant(rat(4, 9));
        assert_eq!(f.primitive(), x * MPoly::int(3) - MPoly::int(2));
    }
}
