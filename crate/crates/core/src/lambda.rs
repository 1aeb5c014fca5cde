//! Five distinguished eigenvalues, the twelve feasible regions, and the
//! greedy path matrices `C_n` built from them.

use std::cmp::Ordering;

use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::numeric::{path_char_polys, SymTridiag};
use crate::poly::Poly;
use crate::scalar::{cmp, is_positive, rat, Field, Ring};
use crate::weights::WeightFn;
use crate::{Error, Result};

/// Index order of each region (0 = α1, 1 = α2, 2 = β2, 3 = β3, 4 = β4),
/// smallest first, plus the sign of `α2 + β2 - β3 - β4` where required.
const REGIONS: [([usize; 5], Option<Ordering>); 12] = [
    ([2, 0, 1, 3, 4], None),
    ([2, 4, 0, 1, 3], None),
    ([4, 2, 0, 1, 3], Some(Ordering::Greater)),
    ([3, 2, 0, 1, 4], Some(Ordering::Less)),
    ([3, 2, 4, 0, 1], None),
    ([4, 3, 2, 0, 1], None),
    ([4, 3, 1, 0, 2], None),
    ([3, 1, 0, 4, 2], None),
    ([3, 1, 0, 2, 4], Some(Ordering::Less)),
    ([4, 1, 0, 2, 3], Some(Ordering::Greater)),
    ([1, 0, 4, 2, 3], None),
    ([1, 0, 2, 3, 4], None),
];

pub const NAMES: [&str; 5] = ["alpha1", "alpha2", "beta2", "beta3", "beta4"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaTuple<F> {
    pub alpha1: F,
    pub alpha2: F,
    pub beta2: F,
    pub beta3: F,
    pub beta4: F,
    pub region: Option<u8>,
}

/// Index of the region containing `v`, if any.
pub fn region_of<F: Field>(v: &[F; 5]) -> Result<Option<u8>> {
    for i in 0..5 {
        for j in i + 1..5 {
            if cmp(&v[i], &v[j]) == Ordering::Equal {
                return Err(Error::DuplicateValues);
            }
        }
    }
    let extra = (v[1].clone() + v[2].clone() - v[3].clone() - v[4].clone()).sign();
    let hits: Vec<u8> = REGIONS
        .iter()
        .enumerate()
        .filter(|(_, (order, side))| {
            order.windows(2).all(|w| cmp(&v[w[0]], &v[w[1]]) == Ordering::Less)
                && side.map_or(true, |s| s == extra)
        })
        .map(|(k, _)| k as u8 + 1)
        .collect();
    assert!(hits.len() <= 1, "regions overlap at {hits:?}");
    Ok(hits.first().copied())
}

impl<F: Ring> LambdaTuple<F> {
    /// Stores the values without classifying them.
    pub fn unchecked(v: [F; 5]) -> Self {
        let [alpha1, alpha2, beta2, beta3, beta4] = v;
        LambdaTuple { alpha1, alpha2, beta2, beta3, beta4, region: None }
    }

    pub fn values(&self) -> [F; 5] {
        [self.alpha1.clone(), self.alpha2.clone(), self.beta2.clone(), self.beta3.clone(), self.beta4.clone()]
    }

    /// `α_i`: `α1` on odd and `α2` on even indices.
    pub fn alpha(&self, i: usize) -> &F {
        if i % 2 == 1 {
            &self.alpha1
        } else {
            &self.alpha2
        }
    }

    /// `β_i` for `i ≥ 2`, period three.
    pub fn beta(&self, i: usize) -> &F {
        match (i + 1) % 3 {
            0 => &self.beta2,
            1 => &self.beta3,
            _ => &self.beta4,
        }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> LambdaTuple<G> {
        LambdaTuple {
            alpha1: f(&self.alpha1),
            alpha2: f(&self.alpha2),
            beta2: f(&self.beta2),
            beta3: f(&self.beta3),
            beta4: f(&self.beta4),
            region: self.region,
        }
    }

    /// `a_1..a_n` and `b_2..b_n` without any positivity check.
    pub fn coefficients(&self, n: usize) -> Result<(Vec<F>, Vec<F>)> {
        let (a1, a2, b2, b3, b4) = (&self.alpha1, &self.alpha2, &self.beta2, &self.beta3, &self.beta4);
        let a = (1..=n)
            .map(|i| match i {
                2 => a2.clone() + b2.clone() - a1.clone(),
                _ => self.alpha(i).clone(),
            })
            .collect();
        let mut b = vec![];
        for i in 2..=n {
            let bi = match i {
                2 => (b2.clone() - a1.clone()) * (a1.clone() - a2.clone()),
                3 => (b3.clone() - a2.clone()) * (b3.clone() - b2.clone()),
                4 => {
                    let num = (b4.clone() - a1.clone())
                        * (b3.clone() - b4.clone())
                        * (a2.clone() + b2.clone() - b3.clone() - b4.clone());
                    num.try_div(&(b4.clone() - b2.clone())).ok_or(Error::DuplicateValues)?
                }
                _ => {
                    let bj = self.beta(i).clone();
                    (bj.clone() - a1.clone()) * (bj - a2.clone())
                }
            };
            b.push(bi);
        }
        Ok((a, b))
    }

    /// `p_0..p_n` for `C_n`.
    pub fn char_polys(&self, n: usize) -> Result<Vec<Poly<F>>> {
        let (a, b) = self.coefficients(n)?;
        Ok(path_char_polys(&a, &b))
    }

    /// `r_n = p_n / ((x - α_n)(x - β_n))`, exact.
    pub fn remainder_poly(&self, n: usize) -> Result<Poly<F>> {
        assert!(n >= 2);
        let p = self.char_polys(n)?.pop().unwrap();
        let d = Poly::linear_root(self.alpha(n).clone()) * Poly::linear_root(self.beta(n).clone());
        let (q, r) = p.div_rem_monic(&d);
        if !r.is_zero() {
            return Err(Error::NonzeroRemainder(n));
        }
        Ok(q)
    }
}

impl<F: Field> LambdaTuple<F> {
    /// Classifies the tuple; fails on repeated values.
    pub fn new(v: [F; 5]) -> Result<Self> {
        let region = region_of(&v)?;
        let mut lam = LambdaTuple::unchecked(v);
        lam.region = region;
        Ok(lam)
    }

    pub fn negated(&self) -> Result<Self> {
        LambdaTuple::new(self.values().map(|x| -x))
    }

    pub fn to_f64(&self) -> LambdaTuple<f64> {
        self.map(|x| x.approx())
    }

    /// `(a, b)` for `C_n`, requiring every `b_i > 0`.
    pub fn abc(&self, n: usize) -> Result<(Vec<F>, Vec<F>)> {
        if n >= 4 && (self.alpha2.clone() + self.beta2.clone() - self.beta3.clone() - self.beta4.clone()).sign() == Ordering::Equal {
            return Err(Error::DegenerateSum);
        }
        let (a, b) = self.coefficients(n)?;
        if let Some(k) = b.iter().position(|x| !is_positive(x)) {
            return Err(Error::NotInB(k + 2));
        }
        Ok((a, b))
    }

    /// Weight of `C_n` on the path `P_n` rooted at its top vertex.
    pub fn build_c(&self, n: usize) -> Result<WeightFn<F>> {
        let (a, b) = self.abc(n)?;
        Ok(WeightFn::path(&a, &b))
    }

    /// Symmetric tridiagonal image of every `C_i`, `i = 1..=n`, as level spectra.
    pub fn level_spectra(&self, n: usize) -> Result<Vec<Vec<f64>>> {
        let (a, b) = self.abc(n)?;
        let a: Vec<f64> = a.iter().map(Field::approx).collect();
        let b: Vec<f64> = b.iter().map(|x| x.approx().sqrt()).collect();
        (1..=n)
            .map(|i| SymTridiag::new(a[..i].to_vec(), b[..i - 1].to_vec())?.eigenvalues())
            .collect()
    }
}

/// `α2 + β2 - β3`, the eigenvalue forced by four high multiplicities.
pub fn forced_fifth_eigenvalue<F: Field>(a1: &F, a2: &F, b2: &F, b3: &F) -> Result<F> {
    let v = [a1, a2, b2, b3];
    for i in 0..4 {
        for j in i + 1..4 {
            if cmp(v[i], v[j]) == Ordering::Equal {
                return Err(Error::NotInB3);
            }
        }
    }
    let b2c = (b2.clone() - a1.clone()) * (a1.clone() - a2.clone());
    let b3c = (b3.clone() - a2.clone()) * (b3.clone() - b2.clone());
    if !is_positive(&b2c) || !is_positive(&b3c) {
        return Err(Error::NotInB3);
    }
    Ok(a2.clone() + b2.clone() - b3.clone())
}

/// Violations of the eigenvalue-step rules on `C_1..C_n`; empty when all hold.
pub fn step_lemma_checks(lam: &LambdaTuple<f64>, n: usize, tol: f64) -> Result<Vec<String>> {
    let (a, b) = lam.abc(n)?;
    let levels = lam.level_spectra(n)?;
    let scale = {
        let all: Vec<f64> = levels.iter().flatten().copied().collect();
        let lo = all.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (hi - lo).max(1e-300)
    };
    let member = |x: f64, set: &[f64]| set.iter().any(|y| (x - y).abs() <= tol * scale);
    let mut out = vec![];
    for k in 2..=n {
        let (prev, cur) = (&levels[k - 2], &levels[k - 1]);
        if let Some(x) = prev.iter().find(|x| member(**x, cur)) {
            out.push(format!("levels {} and {k} share {x}", k - 1));
        }
        if k >= 3 {
            for &al in &levels[k - 3] {
                let lhs = member(al, cur);
                let rhs = (a[k - 1] - al).abs() <= tol * scale;
                if lhs != rhs {
                    out.push(format!("level {k}: value {al} of level {} breaks the diagonal rule", k - 2));
                }
            }
        }
        if k >= 4 {
            for &be in &levels[k - 4] {
                let lhs = member(be, cur);
                let target = (be - a[k - 1]) * (be - a[k - 2]);
                let rhs = (b[k - 2] - target).abs() <= tol * scale * scale.max(1.0);
                if lhs != rhs {
                    out.push(format!("level {k}: value {be} of level {} breaks the edge rule", k - 3));
                }
            }
        }
    }
    Ok(out)
}

/// Random rational tuple in the given region (values are multiples of 1/8
/// in `[-10, 10]`).
pub fn sample_region<R: Rng>(region: u8, rng: &mut R) -> LambdaTuple<BigRational> {
    assert!((1..=12).contains(&region));
    let (order, _) = REGIONS[region as usize - 1];
    loop {
        let mut picks: Vec<i64> = Vec::with_capacity(5);
        while picks.len() < 5 {
            let k = rng.gen_range(-80..=80);
            if !picks.contains(&k) {
                picks.push(k);
            }
        }
        picks.sort_unstable();
        let mut v: [BigRational; 5] = std::array::from_fn(|_| rat(0, 1));
        for (slot, &idx) in order.iter().enumerate() {
            v[idx] = rat(picks[slot], 8);
        }
        if let Ok(lam) = LambdaTuple::new(v) {
            if lam.region == Some(region) {
                return lam;
            }
        }
    }
}

/// The one-parameter family with `β2 = 1/3`, `β3 = 1/9` and `δ2 = 0`, `δ3 = 1`.
pub fn cubic_family(x: &BigRational) -> LambdaTuple<BigRational> {
    let c = |n| rat(n, 1);
    let den = c(9) * (c(4) - c(3) * x);
    let alpha2 = (c(28) - c(30) * x) / &den;
    let beta4 = (c(-27) * x * x + c(24) * x + c(4)) / &den;
    LambdaTuple::new([x.clone(), alpha2, rat(1, 3), rat(1, 9), beta4]).expect("distinct on the family's interval")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn q(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    #[test]
    fn simple_regions() {
        let v = [q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(3, 1)];
        assert_eq!(region_of(&v).unwrap(), Some(1));
        let neg = v.clone().map(|x| -x);
        assert_eq!(region_of(&neg).unwrap(), Some(7));
        assert_eq!(region_of(&[q(0, 1), q(0, 1), q(1, 1), q(2, 1), q(3, 1)]), Err(Error::DuplicateValues));
    }

    #[test]
    fn negation_pairs_regions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for r in 1..=12u8 {
            for _ in 0..20 {
                let lam = sample_region(r, &mut rng);
                let back = lam.negated().unwrap().region.unwrap();
                assert_eq!(back, if r <= 6 { r + 6 } else { r - 6 });
            }
        }
    }

    #[test]
    fn cubic_family_at_two_fifths() {
        let lam = cubic_family(&q(2, 5));
        assert_eq!(lam.values(), [q(2, 5), q(40, 63), q(1, 3), q(1, 9), q(116, 315)]);
        assert_eq!(lam.region, Some(5));
        let (a, b) = lam.abc(4).unwrap();
        assert_eq!(a, vec![q(2, 5), q(179, 315), q(2, 5), q(40, 63)]);
        assert_eq!(b, vec![q(74, 4725), q(22, 189), q(4, 35)]);
        let r3 = lam.remainder_poly(3).unwrap();
        assert_eq!(r3, Poly::linear_root(q(6, 7)));
        let r4 = lam.remainder_poly(4).unwrap();
        assert_eq!(r4, Poly::new(vec![q(0, 1), q(-1, 1), q(1, 1)]));
    }

    #[test]
    fn cubic_family_at_one_half() {
        let lam = cubic_family(&q(1, 2));
        assert_eq!(lam.values(), [q(1, 2), q(26, 45), q(1, 3), q(1, 9), q(37, 90)]);
        let (a, b) = lam.abc(4).unwrap();
        assert_eq!(a, vec![q(1, 2), q(37, 90), q(1, 2), q(26, 45)]);
        assert_eq!(b, vec![q(7, 540), q(14, 135), q(2, 15)]);
        assert_eq!(lam.remainder_poly(3).unwrap(), Poly::linear_root(q(4, 5)));
    }

    #[test]
    fn two_by_two_matrix() {
        let lam = LambdaTuple::unchecked([q(2, 1), q(5, 1), q(1, 1), q(7, 1), q(9, 1)]);
        let (a, b) = lam.coefficients(2).unwrap();
        assert_eq!(a, vec![q(2, 1), q(4, 1)]);
        assert_eq!(b, vec![q(3, 1)]);
    }

    #[test]
    fn forced_fifth() {
        assert_eq!(forced_fifth_eigenvalue(&q(0, 1), &q(1, 1), &q(-1, 1), &q(2, 1)).unwrap(), q(-2, 1));
        assert_eq!(forced_fifth_eigenvalue(&q(2, 5), &q(40, 63), &q(1, 3), &q(1, 9)).unwrap(), q(6, 7));
        let s = 2.0 * 6f64.sqrt();
        let v = forced_fifth_eigenvalue(&2.0, &5.0, &1.0, &(3.0 - s)).unwrap();
        assert!((v - (3.0 + s)).abs() < 1e-12);
        assert_eq!(forced_fifth_eigenvalue(&q(0, 1), &q(0, 1), &q(1, 1), &q(2, 1)), Err(Error::NotInB3));
    }

    #[test]
    fn every_region_sample_builds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for r in 1..=12u8 {
            let lam = sample_region(r, &mut rng);
            assert!(lam.abc(9).is_ok());
            for n in 3..=9 {
                lam.remainder_poly(n).unwrap();
            }
            assert!(step_lemma_checks(&lam.to_f64(), 9, 1e-8).unwrap().is_empty());
        }
    }
}
