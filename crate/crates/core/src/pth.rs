//! Path-to-hedge construction, its spectrum, critical multiplicity lists,
//! the collapse-cascade recognizer, gap vectors and the two counterexample
//! reports.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::covers::{m_formula, mhat_formula};
use crate::lambda::{cubic_family, LambdaTuple};
use crate::numeric::{cluster_multiplicities, SpectrumMultiset, SymTridiag, DEFAULT_CLUSTER_TOL};
use crate::scalar::{rat, Field};
use crate::tree::{HedgeProfile, RootedTree};
use crate::weights::{check_split, weights_near, WeightFn};
use crate::{Error, Result};

/// How edge weights of a path are shared among children.
#[derive(Clone, Debug)]
pub enum Splits<F> {
    Uniform,
    /// One split per vertex (internal index), matching its children in label order.
    PerVertex(Vec<Vec<F>>),
}

/// Random positive splits with integer numerators in `1..=9`.
pub fn random_splits<F: Field, R: Rng>(t: &RootedTree, rng: &mut R) -> Splits<F> {
    let per = (0..t.n())
        .map(|v| {
            let k = t.children(v).len();
            let raw: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
            let total: i64 = raw.iter().sum();
            raw.iter().map(|&r| F::from_ratio(r, total)).collect()
        })
        .collect();
    Splits::PerVertex(per)
}

/// Builds a member of `PH(c, t)`: diagonal by height, edge weights into
/// each vertex's children summing to the matching edge of `c`.
pub fn ph_construct<F: Field>(c: &WeightFn<F>, t: &RootedTree, splits: &Splits<F>) -> Result<WeightFn<F>> {
    let (a, b) = c
        .path_coefficients()
        .ok_or_else(|| Error::BadShape("the source weight must live on a path".into()))?;
    if !t.is_hedge() {
        return Err(Error::NotAHedge);
    }
    let h = t.heights();
    let height = h[t.root()];
    if a.len() != height + 1 {
        return Err(Error::HeightMismatch { expected: height + 1, found: a.len() });
    }
    let n = t.n();
    let vertex: Vec<F> = (0..n).map(|v| a[h[v]].clone()).collect();
    let mut edge = vec![F::zero(); n];
    for v in 0..n {
        let kids = t.children(v);
        if kids.is_empty() {
            continue;
        }
        let share: Vec<F> = match splits {
            Splits::Uniform => vec![F::from_ratio(1, kids.len() as i64); kids.len()],
            Splits::PerVertex(per) => per[v].clone(),
        };
        if share.len() != kids.len() {
            return Err(Error::BadSplit(format!(
                "vertex {} has {} children but {} parts",
                t.label(v),
                kids.len(),
                share.len()
            )));
        }
        check_split(&share)?;
        let total = &b[h[v] - 1];
        for (&c, s) in kids.iter().zip(share) {
            edge[c] = s * total.clone();
        }
    }
    WeightFn::new(t.clone(), vertex, edge)
}

/// Whether `w` lies in `PH(c, T)`.
pub fn is_ph_member<F: Field>(w: &WeightFn<F>, c: &WeightFn<F>, tol: f64) -> bool {
    let Some((a, b)) = c.path_coefficients() else { return false };
    let t = w.tree();
    let h = t.heights();
    if h[t.root()] + 1 != a.len() {
        return false;
    }
    (0..t.n()).all(|v| {
        let kids = t.children(v);
        let diag_ok = weights_near(w.vertex(v), &a[h[v]], tol);
        let sum_ok = kids.is_empty() || {
            let s = kids.iter().fold(F::zero(), |acc, &k| acc + w.edge(k).clone());
            weights_near(&s, &b[h[v] - 1], tol)
        };
        diag_ok && sum_ok && kids.iter().all(|&k| crate::scalar::is_positive(w.edge(k)))
    })
}

/// Spectra of the trailing blocks `C_1..C_n` of a path weight.
pub fn level_spectra<F: Field>(c: &WeightFn<F>) -> Result<Vec<Vec<f64>>> {
    let (a, b) = c
        .path_coefficients()
        .ok_or_else(|| Error::BadShape("the source weight must live on a path".into()))?;
    let a: Vec<f64> = a.iter().map(Field::approx).collect();
    let b: Vec<f64> = b.iter().map(|x| x.approx().sqrt()).collect();
    (1..=a.len())
        .map(|i| SymTridiag::new(a[..i].to_vec(), b[..i - 1].to_vec())?.eigenvalues())
        .collect()
}

/// `⋃ ℓ_i σ(C_i)` for a hedge profile.
pub fn ph_spectrum<F: Field>(c: &WeightFn<F>, profile: &HedgeProfile, tol: f64) -> Result<SpectrumMultiset> {
    let levels = level_spectra(c)?;
    if levels.len() != profile.height + 1 {
        return Err(Error::HeightMismatch { expected: profile.height + 1, found: levels.len() });
    }
    let values: Vec<f64> = levels
        .iter()
        .enumerate()
        .flat_map(|(i, ev)| {
            let k = profile.ell(i + 1);
            ev.iter().flat_map(move |&x| std::iter::repeat(x).take(k))
        })
        .collect();
    Ok(cluster_multiplicities(&values, tol))
}

/// Lower bounds `(m1, m2, n2, n3, n4)` and the strict upper bound `ℓ3` for `n4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    pub bounds: [usize; 5],
    pub ell3: usize,
}

pub fn thresholds(p: &HedgeProfile) -> Thresholds {
    Thresholds {
        bounds: [m_formula(p, 0), m_formula(p, 1), mhat_formula(p, 1), mhat_formula(p, 2), mhat_formula(p, 3)],
        ell3: p.ell(3),
    }
}

/// Five entries of a list meeting the critical thresholds. An index of
/// `None` marks the zero-multiplicity placeholder for `n4`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalWitness {
    pub indices: [Option<usize>; 5],
    pub multiplicities: [usize; 5],
}

fn check_lush(t: &RootedTree) -> Result<HedgeProfile> {
    if !t.is_lush()? || t.height() < 2 {
        return Err(Error::NotLush);
    }
    t.profile()
}

/// First assignment (in index order) of list entries to `(m1, m2, n2, n3, n4)`.
pub fn critical_check(t: &RootedTree, m: &[usize]) -> Result<Option<CriticalWitness>> {
    let th = thresholds(&check_lush(t)?);
    Ok(critical_assignments(&th, m).into_iter().next())
}

/// All assignments of list entries meeting the thresholds.
pub fn critical_assignments(th: &Thresholds, m: &[usize]) -> Vec<CriticalWitness> {
    let mut out = vec![];
    let fits = |slot: usize, x: usize| x >= th.bounds[slot] && (slot < 4 || x < th.ell3);
    let k = m.len();
    let mut pick = [0usize; 4];
    fn rec(slot: usize, pick: &mut [usize; 4], m: &[usize], fits: &dyn Fn(usize, usize) -> bool, th: &Thresholds, out: &mut Vec<CriticalWitness>) {
        let k = m.len();
        if slot == 4 {
            let mut cands: Vec<Option<usize>> = (0..k).filter(|i| !pick.contains(i) && fits(4, m[*i])).map(Some).collect();
            if th.bounds[4] == 0 && th.ell3 > 0 {
                cands.push(None);
            }
            for c in cands {
                let mut idx = [None; 5];
                let mut mult = [0; 5];
                for s in 0..4 {
                    idx[s] = Some(pick[s]);
                    mult[s] = m[pick[s]];
                }
                idx[4] = c;
                mult[4] = c.map_or(0, |i| m[i]);
                out.push(CriticalWitness { indices: idx, multiplicities: mult });
            }
            return;
        }
        for i in 0..k {
            if pick[..slot].contains(&i) || !fits(slot, m[i]) {
                continue;
            }
            pick[slot] = i;
            rec(slot + 1, pick, m, fits, th, out);
        }
    }
    if k >= 4 {
        rec(0, &mut pick, m, &fits, th, &mut out);
    }
    out
}

/// Largest number of distinct eigenvalues of a member of `PH(C_{H+1}^Λ, T)`.
pub fn max_distinct(height: usize) -> usize {
    let top = height + 1;
    let all: usize = (1..=top).sum();
    all - (3..=top).count() - (5..=top).count()
}

/// Outcome of the collapse cascade.
#[derive(Clone, Debug)]
pub struct Recognition<F> {
    /// The assignment that was verified.
    pub assigned: LambdaTuple<F>,
    /// Values read back from the spectra of the recovered path.
    pub recovered: LambdaTuple<f64>,
    /// `C_{H+1}` recovered by collapsing.
    pub path: WeightFn<F>,
    pub ph_member: bool,
}

fn not_from(step: usize, detail: impl Into<String>) -> Error {
    Error::NotFromConstruction { step, detail: detail.into() }
}

/// Runs the collapse cascade on `w` for a given eigenvalue assignment.
pub fn recognize<F: Field>(w: &WeightFn<F>, assign: &LambdaTuple<F>, tol: f64) -> Result<Recognition<F>> {
    let t = w.tree();
    check_lush(t)?;
    let heights = t.heights();
    let big_h = heights[t.root()];
    for v in 0..t.n() {
        let want = match heights[v] {
            1 => continue,
            h if h % 2 == 0 => &assign.alpha1,
            _ => &assign.alpha2,
        };
        if !weights_near(w.vertex(v), want, tol) {
            return Err(not_from(0, format!("diagonal at vertex {} is {}", t.label(v), w.vertex(v).approx())));
        }
    }
    let (a, b) = assign.abc(big_h + 1).map_err(|e| not_from(0, e.to_string()))?;
    let mut cur = w.clone();
    for h in 1..=big_h {
        let tree = cur.tree().clone();
        for p in tree.pendent_paths(h) {
            for (j, &v) in p.vertices.iter().enumerate() {
                if !weights_near(cur.vertex(v), &a[h - 1 - j], tol) {
                    return Err(not_from(h, format!("vertex {} does not match C_{h}", tree.label(v))));
                }
                if j > 0 && !weights_near(cur.edge(v), &b[h - j - 1], tol) {
                    return Err(not_from(h, format!("edge above {} does not match C_{h}", tree.label(v))));
                }
            }
        }
        cur = cur
            .collapse_pendent_paths(h, tol)
            .map_err(|e| not_from(h, e.to_string()))?
            .weight;
    }
    let (pa, pb) = cur
        .path_coefficients()
        .ok_or_else(|| not_from(big_h + 1, "collapsing did not end in a path"))?;
    let matches = pa.iter().zip(&a).all(|(x, y)| weights_near(x, y, tol))
        && pb.iter().zip(&b).all(|(x, y)| weights_near(x, y, tol));
    if pa.len() != a.len() || !matches {
        return Err(not_from(big_h + 1, "collapsed path differs from C_{H+1}"));
    }
    if big_h >= 3 && assign.region.is_none() {
        return Err(not_from(big_h + 1, "assignment lies outside every region"));
    }
    let levels = level_spectra(&cur)?;
    let nearest = |level: usize, target: f64| {
        levels[level - 1]
            .iter()
            .copied()
            .min_by(|x, y| (x - target).abs().total_cmp(&(y - target).abs()))
            .unwrap()
    };
    let f = assign.to_f64();
    let recovered = LambdaTuple {
        alpha1: levels[0][0],
        alpha2: nearest(2, f.alpha2),
        beta2: nearest(2, f.beta2),
        beta3: nearest(3, f.beta3),
        beta4: if big_h >= 3 { nearest(4, f.beta4) } else { f.beta4 },
        region: assign.region,
    };
    let c = WeightFn::path(&a, &b);
    let ph_member = is_ph_member(w, &c, tol);
    Ok(Recognition { assigned: assign.clone(), recovered, path: cur, ph_member })
}

/// Every eigenvalue assignment compatible with the multiplicity thresholds
/// that passes the cascade. Distinct assignments can yield the same path.
pub fn recognize_search(w: &WeightFn<f64>, tol: f64) -> Result<Vec<Recognition<f64>>> {
    let t = w.tree();
    let profile = check_lush(t)?;
    let th = thresholds(&profile);
    let spec = cluster_multiplicities(&w.eigenvalues()?, DEFAULT_CLUSTER_TOL);
    let mults = spec.multiplicities();
    let values = spec.values();
    let mut last = not_from(0, "no assignment meets the multiplicity thresholds");
    let mut found = vec![];
    for cand in critical_assignments(&th, &mults) {
        let pick = |s: usize| cand.indices[s].map(|i| values[i]);
        let (a1, a2, b2, b3) = (pick(0).unwrap(), pick(1).unwrap(), pick(2).unwrap(), pick(3).unwrap());
        let lam = match pick(4) {
            Some(b4) => match LambdaTuple::new([a1, a2, b2, b3, b4]) {
                Ok(l) => l,
                Err(_) => continue,
            },
            None if profile.height < 3 => LambdaTuple::unchecked([a1, a2, b2, b3, f64::NAN]),
            None => continue,
        };
        match recognize(w, &lam, tol) {
            Ok(r) => found.push(r),
            Err(e) => last = e,
        }
    }
    if found.is_empty() {
        Err(last)
    } else {
        Ok(found)
    }
}

/// Consecutive gaps of distinct sorted values divided by the total width.
pub fn gap_vector<F: Field>(sorted: &[F]) -> Result<Vec<F>> {
    if sorted.len() < 2 {
        return Err(Error::SingleEigenvalue);
    }
    let width = sorted.last().unwrap().clone() - sorted[0].clone();
    Ok(sorted.windows(2).map(|w| (w[1].clone() - w[0].clone()) / width.clone()).collect())
}

/// Residuals of the three height-three constraints and their combination.
#[derive(Clone, Debug, PartialEq)]
pub struct T31Report<F> {
    pub linear: F,
    pub trace: F,
    pub cubic: F,
    pub combined: F,
}

impl<F: Field> T31Report<F> {
    pub fn holds(&self, tol: f64) -> [bool; 4] {
        [&self.linear, &self.trace, &self.cubic, &self.combined].map(|r| weights_near(r, &F::zero(), tol))
    }
}

/// Evaluates the constraints on labelled values `λ1..λ8`.
pub fn t31_constraints_check<F: Field>(l: &[F]) -> Result<T31Report<F>> {
    if l.len() != 8 {
        return Err(Error::WrongArity { expected: 8, found: l.len() });
    }
    let v = |i: usize| l[i - 1].clone();
    let two = F::from_int(2);
    let three = F::from_int(3);
    Ok(T31Report {
        linear: v(3) + v(6) - v(2) - v(7),
        trace: v(3) + v(5) + v(6) - v(1) - v(4) - v(8),
        cubic: (v(2) - v(3)) * (v(5) - v(3)) * (v(7) - v(3)) - (v(1) - v(3)) * (v(4) - v(3)) * (v(8) - v(3)),
        combined: v(5) + three.clone() * v(3) + three * v(6)
            - two.clone() * v(2)
            - two * v(7)
            - v(1)
            - v(4)
            - v(8),
    })
}

/// Position of `λ1..λ8` in the sorted spectrum of the cubic family.
pub const CUBIC_FAMILY_LABELS: [usize; 8] = [3, 1, 2, 0, 4, 5, 6, 7];

pub fn label_sorted<F: Clone>(sorted: &[F]) -> Vec<F> {
    CUBIC_FAMILY_LABELS.iter().map(|&i| sorted[i].clone()).collect()
}

/// Distinct eigenvalues of the height-three construction for the cubic
/// family at `x`, with their multiplicities for profile `ell`, sorted.
pub fn cubic_family_spectrum(x: &BigRational, ell: &[usize]) -> Result<SpectrumMultiset<BigRational>> {
    let lam = cubic_family(x);
    let r3 = lam.remainder_poly(3)?;
    let r4 = lam.remainder_poly(4)?;
    let delta1 = -r3.coeff(0);
    let zero = rat(0, 1);
    let one = rat(1, 1);
    if !r4.eval(&zero).is_zero() || !r4.eval(&one).is_zero() {
        return Err(Error::Parse("the family's quadratic remainder must vanish at 0 and 1".into()));
    }
    let l = |i: usize| ell[i - 1];
    Ok(SpectrumMultiset::from_pairs(vec![
        (lam.alpha1.clone(), l(1) + l(3)),
        (lam.alpha2.clone(), l(2) + l(4)),
        (lam.beta2.clone(), l(2)),
        (lam.beta3.clone(), l(3)),
        (delta1, l(3)),
        (lam.beta4.clone(), l(4)),
        (zero, l(4)),
        (one, l(4)),
    ]))
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    /// Realized list, largest multiplicity first.
    pub m: Vec<usize>,
    /// The list with one multiplicity split, largest first.
    pub m_prime: Vec<usize>,
    pub delta: f64,
    pub max_distinct: usize,
    pub m_realized_by_matrix: bool,
    pub m_prime_critical: bool,
}

/// Builds a maximal critical list by the construction and the list obtained
/// by splitting the multiplicity of `δ1 = α2 + β2 - β3`.
pub fn splitting_counterexample(t: &RootedTree, lam: &LambdaTuple<BigRational>) -> Result<SplittingReport> {
    let profile = check_lush(t)?;
    if profile.height < 3 {
        return Err(Error::HeightTooSmall(profile.height));
    }
    let c = lam.build_c(profile.height + 1)?;
    let spec = ph_spectrum(&c, &profile, DEFAULT_CLUSTER_TOL)?;
    let mut m = spec.multiplicities();
    let delta = (lam.alpha2.clone() + lam.beta2.clone() - lam.beta3.clone()).approx();
    let idx = spec
        .values()
        .iter()
        .position(|v| (v - delta).abs() < 1e-9 * 1f64.max(delta.abs()))
        .ok_or_else(|| Error::UnexpectedCoincidence("δ1 missing from the spectrum".into()))?;
    let realized = if t.n() <= 400 {
        let w = ph_construct(&c.to_f64(), t, &Splits::Uniform)?;
        let direct = cluster_multiplicities(&w.eigenvalues()?, DEFAULT_CLUSTER_TOL);
        direct.approx_eq(&spec, 1e-8)
    } else {
        false
    };
    let mut m_prime = m.clone();
    m_prime[idx] -= 1;
    m_prime.push(1);
    m.sort_unstable_by(|a, b| b.cmp(a));
    m_prime.sort_unstable_by(|a, b| b.cmp(a));
    let critical = critical_check(t, &m_prime)?.is_some();
    Ok(SplittingReport {
        max_distinct: max_distinct(profile.height),
        m,
        m_prime,
        delta,
        m_realized_by_matrix: realized,
        m_prime_critical: critical,
    })
}

impl SplittingReport {
    /// `m` has the maximal length and `m'` is critical yet longer.
    pub fn certifies(&self) -> bool {
        self.m.len() == self.max_distinct
            && self.m_realized_by_matrix
            && self.m_prime_critical
            && self.m_prime.len() > self.max_distinct
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroOneReport {
    /// Number of children of each height-one vertex, by label.
    pub child_counts: Vec<(usize, usize)>,
    pub critical_list: Vec<usize>,
    pub list_is_critical: bool,
    /// True when two height-one vertices have different child counts, so
    /// no realization can have all off-diagonal entries equal to one.
    pub contradiction: bool,
}

/// Checks the unit off-diagonal obstruction on a lush hedge of height two.
pub fn zero_one_counterexample_check(t: &RootedTree) -> Result<ZeroOneReport> {
    if !t.is_hedge() || t.height() != 2 || !t.is_lush()? {
        return Err(Error::BadShape("expected a lush hedge of height 2".into()));
    }
    let p = t.profile()?;
    let h = t.heights();
    let child_counts: Vec<(usize, usize)> = {
        let mut v: Vec<(usize, usize)> = (0..t.n())
            .filter(|&v| h[v] == 1)
            .map(|v| (t.label(v), t.children(v).len()))
            .collect();
        v.sort_unstable();
        v
    };
    let critical_list = vec![p.ell(1) + p.ell(3), p.ell(2), p.ell(2), 1, 1];
    let list_is_critical = critical_check(t, &critical_list)?.is_some();
    let first = child_counts[0].1;
    let contradiction = child_counts.iter().any(|&(_, k)| k != first);
    Ok(ZeroOneReport { child_counts, critical_list, list_is_critical, contradiction })
}

/// The three-vertex path weights with diagonals `(top, 4, 2)` and edges `20`, `3`.
pub fn small_example_path(top: i64) -> WeightFn<BigRational> {
    WeightFn::path(&[rat(2, 1), rat(4, 1), rat(top, 1)], &[rat(3, 1), rat(20, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_spectra() {
        let tbf = RootedTree::t_bf();
        let p = tbf.profile().unwrap();
        let s = ph_spectrum(&small_example_path(8), &p, 1e-9).unwrap();
        assert_eq!(s.multiplicities(), vec![1, 2, 3, 1, 2, 1]);
        let expect = [0.0, 1.0, 2.0, 3.0, 5.0, 11.0];
        for (v, e) in s.values().iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }
        let s2 = ph_spectrum(&small_example_path(2), &p, 1e-9).unwrap();
        assert_eq!(s2.multiplicities(), vec![1, 2, 4, 2, 1]);
    }

    #[test]
    fn construct_on_path_is_identity() {
        let c = small_example_path(8);
        let w = ph_construct(&c, &RootedTree::path(3), &Splits::Uniform).unwrap();
        assert_eq!(w, c);
        assert!(matches!(
            ph_construct(&c, &RootedTree::path(4), &Splits::Uniform),
            Err(Error::HeightMismatch { .. })
        ));
    }

    #[test]
    fn critical_examples() {
        let t31 = RootedTree::lush_min(3);
        assert!(critical_check(&t31, &[11, 7, 6, 2, 2, 1, 1, 1]).unwrap().is_some());
        assert!(critical_check(&t31, &[11, 7, 6, 2, 1, 1, 1, 1, 1]).unwrap().is_some());
        let w = critical_check(&RootedTree::t_bf(), &[1, 2, 4, 2, 1]).unwrap().unwrap();
        assert_eq!(w.indices[4], None);
        assert_eq!(w.multiplicities, [4, 2, 2, 1, 0]);
        assert_eq!(max_distinct(3), 8);
    }

    #[test]
    fn gaps() {
        assert_eq!(gap_vector(&[rat(0, 1), rat(1, 1)]).unwrap(), vec![rat(1, 1)]);
        assert_eq!(gap_vector(&[rat(3, 1)]), Err(Error::SingleEigenvalue));
    }

    #[test]
    fn recognize_round_trip() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let t = RootedTree::lush_min(3);
        for region in 1..=12u8 {
            let lam = crate::lambda::sample_region(region, &mut rng);
            let c = lam.build_c(4).unwrap();
            let splits = random_splits(&t, &mut rng);
            let w = ph_construct(&c, &t, &splits).unwrap();
            let exact = recognize(&w, &lam, 0.0).unwrap();
            assert!(exact.ph_member);
            let wf = w.to_f64();
            let err = |r: &Recognition<f64>| {
                r.recovered
                    .values()
                    .iter()
                    .zip(lam.to_f64().values())
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max)
            };
            let r = recognize(&wf, &lam.to_f64(), 1e-9).unwrap();
            assert!(r.ph_member && err(&r) < 1e-9, "region {region}");
            let all = recognize_search(&wf, 1e-9).unwrap();
            assert!(all.iter().any(|r| err(r) < 1e-9), "region {region}");
        }
    }

    #[test]
    fn cascade_rejects_perturbation() {
        let lam = crate::lambda::cubic_family(&rat(2, 5));
        let t = RootedTree::lush_min(3);
        let mut w = ph_construct(&lam.build_c(4).unwrap(), &t, &Splits::Uniform).unwrap();
        let leaf = t.leaves()[0];
        w.set_edge(leaf, w.edge(leaf).clone() + rat(1, 100));
        assert!(matches!(recognize(&w, &lam, 0.0), Err(Error::NotFromConstruction { .. })));
    }

    #[test]
    fn cubic_family_constraints() {
        let ell = [4, 4, 3, 1];
        for x in [rat(2, 5), rat(1, 2)] {
            let s = cubic_family_spectrum(&x, &ell).unwrap();
            let labelled = label_sorted(&s.values());
            let rep = t31_constraints_check(&labelled).unwrap();
            assert_eq!(rep.holds(0.0), [true; 4]);
        }
        let s1 = cubic_family_spectrum(&rat(2, 5), &ell).unwrap().values();
        let s2 = cubic_family_spectrum(&rat(1, 2), &ell).unwrap().values();
        let mid: Vec<BigRational> = s1.iter().zip(&s2).map(|(a, b)| (a + b) / rat(2, 1)).collect();
        let rep = t31_constraints_check(&label_sorted(&mid)).unwrap();
        assert!(!rep.holds(0.0)[2]);
    }

    #[test]
    fn counterexamples() {
        let t = RootedTree::lush_min(3);
        let lam = LambdaTuple::new([rat(2, 5), rat(7, 10), rat(-1, 2), rat(-9, 10), rat(-3, 10)]).unwrap();
        let rep = splitting_counterexample(&t, &lam).unwrap();
        assert!(rep.certifies(), "{rep:?}");
        assert_eq!(
            splitting_counterexample(&RootedTree::t_bf(), &lam).unwrap_err(),
            Error::HeightTooSmall(2)
        );
        let fig = RootedTree::from_parent_array(&[0, 1, 2, 1, 4, 1, 6, 2, 4, 6, 2]).unwrap();
        let z = zero_one_counterexample_check(&fig).unwrap();
        assert_eq!(z.critical_list, vec![5, 2, 2, 1, 1]);
        assert!(z.list_is_critical && z.contradiction);
    }
}
