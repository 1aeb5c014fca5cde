//! Dense symmetric eigenvalues, exact characteristic polynomials,
//! multiplicity clustering and nullity estimates.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{count_roots, Poly};
use crate::scalar::{cmp, rat, Field, Ring};
use crate::weights::WeightFn;
use crate::{Error, Result};

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-7;
pub const DEFAULT_NULLITY_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = DenseMatrix::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "matrix must be square");
            m.data[i * n..(i + 1) * n].copy_from_slice(r);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let scale = self.data.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        (0..self.n).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol * scale))
    }

    pub fn principal(&self, idx: &[usize]) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    pub fn shifted(&self, lambda: f64) -> DenseMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] -= lambda;
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Symmetric tridiagonal matrix with strictly positive off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if off.len() + 1 != diag.len().max(1) || off.iter().any(|&b| !(b > 0.0)) {
            return Err(Error::NotSymmetric);
        }
        Ok(SymTridiag { diag, off })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let mut d = self.diag.clone();
        let mut e = vec![0.0; d.len()];
        e[1..].copy_from_slice(&self.off);
        tql(&mut d, &mut e)?;
        d.sort_by(f64::total_cmp);
        Ok(d)
    }
}

/// All eigenvalues of a dense symmetric matrix, ascending.
pub fn eigenvalues_sym(m: &DenseMatrix) -> Result<Vec<f64>> {
    if !m.is_symmetric(1e-12) {
        return Err(Error::NotSymmetric);
    }
    let n = m.n;
    if n == 0 {
        return Ok(vec![]);
    }
    let mut a = m.rows();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder(&mut a, &mut d, &mut e);
    tql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Householder reduction to tridiagonal form; `e[i]` couples rows i-1 and i.
fn householder(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|v| v.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i][i];
    }
}

/// Implicit-shift QL on a symmetric tridiagonal matrix.
fn tql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Distinct eigenvalues with multiplicities, strictly increasing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMultiset<F = f64> {
    entries: Vec<(F, usize)>,
}

impl<F: Field> SpectrumMultiset<F> {
    /// Builds from `(value, multiplicity)` pairs; equal values are merged.
    pub fn from_pairs(mut pairs: Vec<(F, usize)>) -> Self {
        pairs.retain(|(_, m)| *m > 0);
        pairs.sort_by(|a, b| cmp(&a.0, &b.0));
        let mut entries: Vec<(F, usize)> = vec![];
        for (v, m) in pairs {
            match entries.last_mut() {
                Some((u, k)) if *u == v => *k += m,
                _ => entries.push((v, m)),
            }
        }
        SpectrumMultiset { entries }
    }

    pub fn entries(&self) -> &[(F, usize)] {
        &self.entries
    }

    pub fn values(&self) -> Vec<F> {
        self.entries.iter().map(|(v, _)| v.clone()).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, m)| *m).collect()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, v: &F, tol: f64) -> usize {
        self.entries
            .iter()
            .find(|(u, _)| u.near(v, tol))
            .map_or(0, |(_, m)| *m)
    }

    pub fn to_f64(&self) -> SpectrumMultiset<f64> {
        SpectrumMultiset {
            entries: self.entries.iter().map(|(v, m)| (v.approx(), *m)).collect(),
        }
    }
}

impl SpectrumMultiset<f64> {
    /// Same multiplicities and values within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|((a, m), (b, k))| m == k && (a - b).abs() <= tol)
    }

    /// Every value listed once per unit of multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
            .collect()
    }
}

/// Scale used to normalize a sorted list to unit spectral width.
pub fn width_scale(sorted: &[f64]) -> f64 {
    let (Some(lo), Some(hi)) = (sorted.first(), sorted.last()) else {
        return 1.0;
    };
    let mag = sorted.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let width = hi - lo;
    if width > 1e-9 * mag {
        width
    } else {
        mag
    }
}

/// Greedy gap clustering of sorted values after normalizing to unit width.
pub fn cluster_multiplicities(values: &[f64], tol: f64) -> SpectrumMultiset<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let scale = width_scale(&sorted);
    let mut groups: Vec<Vec<f64>> = vec![];
    for v in sorted {
        match groups.last_mut() {
            Some(g) if (v - g.last().unwrap()) / scale <= tol => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    SpectrumMultiset {
        entries: groups
            .into_iter()
            .map(|g| (g.iter().sum::<f64>() / g.len() as f64, g.len()))
            .collect(),
    }
}

/// Number of eigenvalues of a symmetric matrix below `tol * max(1, |λ|max)`.
pub fn nullity_sym(m: &DenseMatrix, tol: f64) -> Result<usize> {
    let ev = eigenvalues_sym(m)?;
    let top = ev.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    Ok(ev.iter().filter(|v| v.abs() < tol * top).count())
}

/// `p_0, …, p_n` for the path matrix with diagonal `a_1..a_n` (bottom up)
/// and edge weights `b_2..b_n`: `p_k = (x - a_k) p_{k-1} - b_k p_{k-2}`.
pub fn path_char_polys<R: Ring>(a: &[R], b: &[R]) -> Vec<Poly<R>> {
    assert!(b.len() + 1 >= a.len());
    let mut p = vec![Poly::constant(R::one())];
    for k in 0..a.len() {
        let next = Poly::linear_root(a[k].clone()) * p[k].clone();
        let next = if k == 0 {
            next
        } else {
            next - p[k - 1].scale(&b[k - 1])
        };
        p.push(next);
    }
    p
}

/// Characteristic polynomial of any matrix in the class of `w`, by the
/// rooted recursion `p(T_v) = (x - a_v) Π p(T_c) - Σ_c w(v,c) p(T_c - c) Π_{c' ≠ c} p(T_c')`.
pub fn char_poly_exact<R: Ring>(w: &WeightFn<R>) -> Poly<R> {
    let t = w.tree();
    let order = t.postorder();
    let mut full: Vec<Poly<R>> = vec![Poly::zero(); t.n()];
    let mut minus_root: Vec<Poly<R>> = vec![Poly::zero(); t.n()];
    for &v in &order {
        let kids = t.children(v);
        let mut prod = Poly::constant(R::one());
        for &c in kids {
            prod = prod * full[c].clone();
        }
        let mut p = Poly::linear_root(w.vertex(v).clone()) * prod.clone();
        for (i, &c) in kids.iter().enumerate() {
            let mut term = minus_root[c].clone().scale(w.edge(c));
            for (j, &d) in kids.iter().enumerate() {
                if i != j {
                    term = term * full[d].clone();
                }
            }
            p = p - term;
        }
        full[v] = p;
        minus_root[v] = prod;
    }
    full[t.root()].clone()
}

/// Real roots of a squarefree rational polynomial, isolated by Sturm
/// bisection and refined to absolute width `tol`.
pub fn isolate_real_roots(p: &Poly<BigRational>, tol: f64) -> Vec<f64> {
    let Some(deg) = p.degree() else { return vec![] };
    if deg == 0 {
        return vec![];
    }
    let g = p.gcd(&p.derivative());
    let sq = if g.degree() == Some(0) { p.clone() } else { p.div_rem(&g).0 };
    let s = sq.sturm_sequence();
    let lead = sq.leading().unwrap().clone();
    let bound = sq.coeffs().iter().fold(BigRational::zero(), |m, c| {
        let r = (c / &lead).abs();
        if r > m {
            r
        } else {
            m
        }
    }) + BigRational::one();
    let tolq = crate::scalar::rat_from_f64(tol).unwrap_or_else(|| rat(1, 1_000_000_000));
    let mut out = vec![];
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let k = count_roots(&s, &lo, &hi);
        if k == 0 {
            continue;
        }
        if k == 1 && &hi - &lo <= tolq {
            out.push(((lo + hi) / rat(2, 1)).approx());
            continue;
        }
        let mid = (&lo + &hi) / rat(2, 1);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_symmetric_spectra() {
        let m = DenseMatrix::from_rows(&[vec![4.0, 3f64.sqrt()], vec![3f64.sqrt(), 2.0]]);
        let ev = eigenvalues_sym(&m).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 5.0).abs() < 1e-12);
        let ev = eigenvalues_sym(&DenseMatrix::identity(5)).unwrap();
        assert!(ev.iter().all(|v| (v - 1.0).abs() < 1e-14));
        let t = SymTridiag::new(vec![8.0, 4.0, 2.0], vec![20f64.sqrt(), 3f64.sqrt()]).unwrap();
        let ev = t.eigenvalues().unwrap();
        for (a, b) in ev.iter().zip([0.0, 3.0, 11.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(eigenvalues_sym(&m), Err(Error::NotSymmetric));
    }

    #[test]
    fn clustering() {
        let s = cluster_multiplicities(&[0.0, 1.0, 1.0 + 1e-12, 2.0], 1e-7);
        assert_eq!(s.multiplicities(), vec![1, 2, 1]);
    }

    #[test]
    fn path_recursion() {
        let a: Vec<BigRational> = [2, 4, 8].iter().map(|&v| rat(v, 1)).collect();
        let b: Vec<BigRational> = [3, 20].iter().map(|&v| rat(v, 1)).collect();
        let p = path_char_polys(&a, &b);
        assert_eq!(p[3].to_string(), "x^3 - 14x^2 + 33x");
        assert_eq!(p[1].to_string(), "x - 2");
    }
}
