//! Resultants of remainder polynomials and the completely rigid spectrum.
//!
//! Parameters are normalized to `β2 = -1`, `β4 = 1`, leaving the variables
//! `α1 = x0`, `α2 = x1`, `β3 = x2`.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lambda::LambdaTuple;
use crate::mpoly::MPoly;
use crate::numeric::{SymTridiag, DEFAULT_CLUSTER_TOL};
use crate::poly::Poly;
use crate::scalar::{Field, Ring};
use crate::tree::HedgeProfile;
use crate::xi::Xi;
use crate::{Error, Result};

pub const VAR_NAMES: [&str; 3] = ["alpha1", "alpha2", "beta3"];

/// The normalized tuple with symbolic `α1, α2, β3`.
pub fn symbolic_lambda() -> LambdaTuple<MPoly> {
    LambdaTuple::unchecked([MPoly::var(0), MPoly::var(1), MPoly::int(-1), MPoly::var(2), MPoly::int(1)])
}

/// `r_n` with coefficients in the three free parameters.
pub fn symbolic_remainder(n: usize) -> Result<Poly<MPoly>> {
    symbolic_lambda().remainder_poly(n)
}

/// Determinant by fraction-free elimination with row pivoting.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign = R::one();
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.try_div(&prev).expect("Bareiss step must divide exactly");
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Sylvester resultant of two polynomials in `x`.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    let n = df + dg;
    if n == 0 {
        return Ok(R::one());
    }
    let mut m = vec![vec![R::zero(); n]; n];
    let rows = |p: &Poly<R>, count: usize, offset: usize, m: &mut Vec<Vec<R>>| {
        for r in 0..count {
            for (j, c) in p.coeffs().iter().rev().enumerate() {
                m[offset + r][r + j] = c.clone();
            }
        }
    };
    rows(f, dg, 0, &mut m);
    rows(g, df, dg, &mut m);
    Ok(bareiss_det(m))
}

/// Evaluates `p` at a square matrix by Horner's rule.
pub fn poly_at_matrix<R: Ring>(p: &Poly<R>, m: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = m.len();
    let mut acc = vec![vec![R::zero(); n]; n];
    for c in p.coeffs().iter().rev() {
        let mut next = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = if i == j { c.clone() } else { R::zero() };
                for k in 0..n {
                    s = s + acc[i][k].clone() * m[k][j].clone();
                }
                next[i][j] = s;
            }
        }
        acc = next;
    }
    acc
}

/// Companion matrix of a monic quadratic `x² + c1 x + c0`.
pub fn companion2<R: Ring>(p: &Poly<R>) -> Vec<Vec<R>> {
    assert!(p.degree() == Some(2) && p.is_monic());
    vec![vec![-p.coeff(1), -p.coeff(0)], vec![R::one(), R::zero()]]
}

/// The linear forms that never vanish on the parameter domain: pairwise
/// differences of the five values and `α2 + β2 - β3 - β4`.
pub fn trivial_factors() -> Vec<(String, MPoly)> {
    let lam = symbolic_lambda();
    let vals = lam.values();
    let names = ["alpha1", "alpha2", "beta2", "beta3", "beta4"];
    let mut out = vec![];
    for i in 0..5 {
        for j in i + 1..5 {
            out.push((format!("{} - {}", names[i], names[j]), vals[i].clone() - vals[j].clone()));
        }
    }
    out.push((
        "alpha2 + beta2 - beta3 - beta4".into(),
        vals[1].clone() + vals[2].clone() - vals[3].clone() - vals[4].clone(),
    ));
    out
}

#[derive(Clone, Debug)]
pub struct SimplifiedResultant {
    pub a: usize,
    pub b: usize,
    /// Primitive residual after stripping the trivial factors.
    pub reduced: MPoly,
    /// Trivial factors with the power removed.
    pub removed: Vec<(String, usize)>,
}

impl SimplifiedResultant {
    pub fn is_constant(&self) -> bool {
        self.reduced.as_constant().is_some()
    }
}

/// Strips every trivial linear factor from `resultant(r_a, r_b)`.
pub fn simplify_resultant(a: usize, b: usize) -> Result<SimplifiedResultant> {
    if !(3 <= a && a < b && b <= 9) {
        return Err(Error::BadShape(format!("resultant pair ({a}, {b}) out of range")));
    }
    let full = resultant(&symbolic_remainder(a)?, &symbolic_remainder(b)?)?;
    if full.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = full;
    let mut removed = vec![];
    for (name, f) in trivial_factors() {
        let (k, rest) = cur.strip_factor(&f);
        if k > 0 {
            removed.push((name, k));
        }
        cur = rest;
    }
    Ok(SimplifiedResultant { a, b, reduced: cur.primitive(), removed })
}

/// `r′_{3,7}` in closed form.
pub fn r37_reduced() -> MPoly {
    let (a1, a2, b3) = (MPoly::var(0), MPoly::var(1), MPoly::var(2));
    &a1 * &a2 - &a1 * &b3 - a1 - b3
}

#[derive(Clone, Debug)]
pub struct DoubleRootReport {
    /// Lower-left entry of `r_8(R_4)`.
    pub entry: MPoly,
    /// Product of trivial factors it should equal.
    pub target: MPoly,
    /// `entry / target`.
    pub ratio: BigRational,
}

/// Evaluates `r_8` at the companion matrix of `r_4`; if its lower-left
/// entry never vanishes, `r_4` and `r_8` cannot share both roots.
pub fn double_root_exclusion() -> Result<DoubleRootReport> {
    let r4 = symbolic_remainder(4)?;
    let r8 = symbolic_remainder(8)?;
    let m = poly_at_matrix(&r8, &companion2(&r4));
    let entry = m[1][0].clone();
    let lam = symbolic_lambda();
    let target = (lam.beta3.clone() - lam.beta4.clone())
        * (lam.alpha1.clone() - lam.beta2.clone())
        * (lam.beta2.clone() - lam.alpha2.clone())
        * (lam.alpha1.clone() - lam.beta4.clone())
        * (lam.alpha2.clone() + lam.beta2.clone() - lam.beta3.clone() - lam.beta4.clone());
    let q = entry.div_exact(&target).and_then(|q| q.as_constant()).ok_or(Error::InexactDivision)?;
    Ok(DoubleRootReport { entry, target, ratio: q })
}

/// Closed forms of the rigid values in the basis `1, ξ, …, ξ⁵`.
pub const ROUTE_B: [(&str, [i64; 6], i64); 6] = [
    ("alpha1", [-74, 44, 49, -16, -4, 1], 90),
    ("alpha2", [14, 24, -73, 30, 10, -3], 30),
    ("beta3", [92, -134, -22, 25, 1, -1], 60),
    ("lambda37", [-124, 182, -124, 35, 19, -5], 60),
    ("lambda48", [-86, -124, 37, 41, -1, -2], 90),
    ("lambda49", [-42, 80, -69, 11, 9, -2], 30),
];

#[derive(Clone, Debug)]
pub struct RigidSolution {
    pub lam: LambdaTuple<Xi>,
    pub lambda37: Xi,
    pub lambda48: Xi,
    pub lambda49: Xi,
    /// Floats from the independent numerical solve.
    pub route_a: [f64; 6],
    pub max_route_gap: f64,
}

impl RigidSolution {
    pub fn named_values(&self) -> Vec<(&'static str, Xi)> {
        vec![
            ("alpha1", self.lam.alpha1.clone()),
            ("alpha2", self.lam.alpha2.clone()),
            ("beta3", self.lam.beta3.clone()),
            ("lambda37", self.lambda37.clone()),
            ("lambda48", self.lambda48.clone()),
            ("lambda49", self.lambda49.clone()),
        ]
    }
}

/// The three reduced resultants that define the rigid point.
pub fn rigid_system() -> Result<[MPoly; 3]> {
    Ok([
        simplify_resultant(3, 7)?.reduced,
        simplify_resultant(4, 8)?.reduced,
        simplify_resultant(4, 9)?.reduced,
    ])
}

fn route_b_values() -> Vec<Xi> {
    ROUTE_B.iter().map(|(_, num, den)| Xi::from_ints(num, *den)).collect()
}

fn normalized<F: Field>(a1: F, a2: F, b3: F) -> LambdaTuple<F> {
    LambdaTuple::unchecked([a1, a2, F::from_int(-1), b3, F::from_int(1)])
}

/// Exact checks of the closed forms: the system vanishes and each
/// coincidence value is a common root of the matching remainders.
pub fn verify_route_b(system: &[MPoly; 3]) -> Result<LambdaTuple<Xi>> {
    let v = route_b_values();
    let point = [v[0].clone(), v[1].clone(), v[2].clone()];
    for (k, p) in system.iter().enumerate() {
        if !p.eval(&point).is_zero() {
            return Err(Error::RoutesDisagree(format!("closed form misses equation {k}")));
        }
    }
    let lam = LambdaTuple::new([v[0].clone(), v[1].clone(), Xi::from_int(-1), v[2].clone(), Xi::from_int(1)])?;
    for (val, (a, b)) in v[3..].iter().zip([(3, 7), (4, 8), (4, 9)]) {
        for n in [a, b] {
            if !lam.remainder_poly(n)?.eval(val).is_zero() {
                return Err(Error::RoutesDisagree(format!("coincidence value is not a root of r_{n}")));
            }
        }
    }
    lam.abc(9)?;
    Ok(lam)
}

fn solve_linear3(j: [[f64; 3]; 3], f: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(j);
    if d.abs() < 1e-300 {
        return None;
    }
    let mut x = [0.0; 3];
    for c in 0..3 {
        let mut m = j;
        for r in 0..3 {
            m[r][c] = f[r];
        }
        x[c] = det(m) / d;
    }
    Some(x)
}

/// Distance from the degenerate boundary below which a numerical root is discarded.
pub const BOUNDARY_MARGIN: f64 = 1e-4;

/// Damped Newton from seeded starts with `-1 < α1 < α2 < β3 < 1`; keeps
/// converged points inside the feasible domain.
pub fn route_a(system: &[MPoly; 3], starts: usize, seed: u64) -> Vec<[f64; 3]> {
    let jac: Vec<Vec<MPoly>> = system.iter().map(|p| (0..3).map(|v| p.derivative(v)).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<[f64; 3]> = vec![];
    for _ in 0..starts {
        let mut s: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
        s.sort_by(f64::total_cmp);
        let mut x = [s[0], s[1], s[2]];
        let resid = |x: &[f64; 3]| -> [f64; 3] { [0, 1, 2].map(|k| system[k].eval(x)) };
        let norm = |f: &[f64; 3]| f.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut ok = false;
        for _ in 0..200 {
            let f = resid(&x);
            if norm(&f) < 1e-14 {
                ok = true;
                break;
            }
            let j = [0, 1, 2].map(|r| [0, 1, 2].map(|c| jac[r][c].eval(&x)));
            let Some(step) = solve_linear3(j, f) else { break };
            let mut t = 1.0;
            let base = norm(&f);
            loop {
                let trial = [x[0] - t * step[0], x[1] - t * step[1], x[2] - t * step[2]];
                if norm(&resid(&trial)) < base || t < 1e-6 {
                    x = trial;
                    break;
                }
                t /= 2.0;
            }
            if step.iter().map(|v| v.abs()).fold(0.0, f64::max) < 1e-15 {
                ok = norm(&resid(&x)) < 1e-10;
                break;
            }
        }
        if !ok || !x.iter().all(|v| v.is_finite()) {
            continue;
        }
        let vals = [x[0], x[1], -1.0, x[2], 1.0];
        let separated = (0..5).all(|i| (i + 1..5).all(|j| (vals[i] - vals[j]).abs() > BOUNDARY_MARGIN))
            && (x[1] - x[2] - 2.0).abs() > BOUNDARY_MARGIN;
        let feasible = separated
            && LambdaTuple::new(vals)
            .ok()
            .and_then(|l| l.abc(9).ok())
            .is_some();
        if feasible && !found.iter().any(|y| (0..3).all(|k| (y[k] - x[k]).abs() < 1e-8)) {
            found.push(x);
        }
    }
    found
}

/// Common root of `r_a` and `r_b` at a float parameter point.
fn common_root(lam: &LambdaTuple<f64>, a: usize, b: usize) -> Result<f64> {
    let quotient = |n: usize| -> Result<Poly<f64>> {
        let p = lam.char_polys(n)?.pop().unwrap();
        let d = Poly::linear_root(*lam.alpha(n)) * Poly::linear_root(*lam.beta(n));
        Ok(p.div_rem_monic(&d).0)
    };
    let (ra, rb) = (quotient(a)?, quotient(b)?);
    let roots: Vec<f64> = match ra.degree() {
        Some(1) => vec![-ra.coeff(0)],
        Some(2) => {
            let (c1, c0) = (ra.coeff(1), ra.coeff(0));
            let d = (c1 * c1 - 4.0 * c0).max(0.0).sqrt();
            vec![(-c1 - d) / 2.0, (-c1 + d) / 2.0]
        }
        _ => return Err(Error::BadShape("expected a linear or quadratic remainder".into())),
    };
    Ok(roots
        .into_iter()
        .min_by(|x, y| rb.eval(x).abs().total_cmp(&rb.eval(y).abs()))
        .unwrap())
}

/// Solves the rigid system by both routes and checks that they agree.
pub fn solve_rigid(seed: u64) -> Result<RigidSolution> {
    let system = rigid_system()?;
    let lam = verify_route_b(&system)?;
    let sols = route_a(&system, 20, seed);
    if sols.len() != 1 {
        return Err(Error::RoutesDisagree(format!("numerical route found {} feasible points", sols.len())));
    }
    let x = sols[0];
    let lam_a = normalized(x[0], x[1], x[2]);
    let route_a = [
        x[0],
        x[1],
        x[2],
        common_root(&lam_a, 3, 7)?,
        common_root(&lam_a, 4, 8)?,
        common_root(&lam_a, 4, 9)?,
    ];
    let v = route_b_values();
    let gap = v.iter().zip(route_a).map(|(b, a)| (b.to_f64() - a).abs()).fold(0.0, f64::max);
    if gap > 1e-9 {
        return Err(Error::RoutesDisagree(format!("max gap {gap:e}")));
    }
    Ok(RigidSolution {
        lam,
        lambda37: v[3].clone(),
        lambda48: v[4].clone(),
        lambda49: v[5].clone(),
        route_a,
        max_route_gap: gap,
    })
}

/// Sorted eigenvalues of `C_1..C_max` for a tuple with exact coefficients.
pub fn level_spectra_exact<F: Field>(lam: &LambdaTuple<F>, max: usize) -> Result<Vec<Vec<f64>>> {
    let (a, b) = lam.abc(max)?;
    let a: Vec<f64> = a.iter().map(Field::approx).collect();
    let b: Vec<f64> = b.iter().map(|x| x.approx().sqrt()).collect();
    (1..=max)
        .map(|i| SymTridiag::new(a[..i].to_vec(), b[..i - 1].to_vec())?.eigenvalues())
        .collect()
}

/// One distinct eigenvalue of the rigid construction.
#[derive(Clone, Debug, Serialize)]
pub struct RigidEntry {
    pub value: f64,
    pub levels: Vec<usize>,
    pub multiplicity: usize,
    pub name: Option<&'static str>,
}

/// Levels on which each exact rigid value is an eigenvalue, up to `top`.
fn expected_levels(name: &str, top: usize) -> Vec<usize> {
    let all = 1..=top;
    match name {
        "alpha1" => all.filter(|i| i % 2 == 1).collect(),
        "alpha2" => all.filter(|i| i % 2 == 0).collect(),
        "beta2" => all.filter(|i| i % 3 == 2).collect(),
        "beta3" => all.filter(|i| *i >= 3 && i % 3 == 0).collect(),
        "beta4" => all.filter(|i| *i >= 4 && i % 3 == 1).collect(),
        "lambda37" => vec![3, 7],
        "lambda48" => vec![4, 8],
        "lambda49" => vec![4, 9],
        _ => vec![],
    }
}

/// Ordered multiplicity list for a lush profile of height at least 8.
pub fn rigid_multiplicity_list(sol: &RigidSolution, profile: &HedgeProfile) -> Result<Vec<RigidEntry>> {
    if profile.height < 8 {
        return Err(Error::HeightTooSmall(profile.height));
    }
    let top = profile.height + 1;
    let levels = level_spectra_exact(&sol.lam, top)?;
    let named: Vec<(&'static str, Xi)> = vec![
        ("alpha1", sol.lam.alpha1.clone()),
        ("alpha2", sol.lam.alpha2.clone()),
        ("beta2", sol.lam.beta2.clone()),
        ("beta3", sol.lam.beta3.clone()),
        ("beta4", sol.lam.beta4.clone()),
        ("lambda37", sol.lambda37.clone()),
        ("lambda48", sol.lambda48.clone()),
        ("lambda49", sol.lambda49.clone()),
    ];
    let polys = sol.lam.char_polys(top)?;
    for (name, v) in &named {
        let exact: Vec<usize> = (1..=top).filter(|&i| polys[i].eval(v).is_zero()).collect();
        if exact != expected_levels(name, top) {
            return Err(Error::UnexpectedCoincidence(format!("{name} is a root on levels {exact:?}")));
        }
    }
    let mut pts: Vec<(f64, usize)> = levels
        .iter()
        .enumerate()
        .flat_map(|(i, ev)| ev.iter().map(move |&x| (x, i + 1)))
        .collect();
    pts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut out: Vec<RigidEntry> = vec![];
    for (x, lvl) in pts {
        match out.last_mut() {
            Some(e) if (x - e.value).abs() < 1e-9 => e.levels.push(lvl),
            _ => out.push(RigidEntry { value: x, levels: vec![lvl], multiplicity: 0, name: None }),
        }
    }
    for e in &mut out {
        e.levels.sort_unstable();
        e.multiplicity = e.levels.iter().map(|&i| profile.ell(i)).sum();
        e.name = named.iter().find(|(_, v)| (v.to_f64() - e.value).abs() < 1e-9).map(|(n, _)| *n);
        match e.name {
            Some(n) if e.levels == expected_levels(n, top) => {}
            None if e.levels.len() == 1 => {}
            _ => {
                return Err(Error::UnexpectedCoincidence(format!(
                    "value {} shared by levels {:?}",
                    e.value, e.levels
                )))
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelPoint {
    pub level: usize,
    pub index: usize,
    pub value: f64,
    /// Other levels sharing this eigenvalue.
    pub shared_with: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelFigure {
    pub points: Vec<LevelPoint>,
    /// Every `b_i`, `i <= max + 1`, is certified positive.
    pub b_positive: bool,
    /// Smallest width-normalized distance between consecutive-level spectra.
    pub min_interlace_gap: f64,
}

/// Eigenvalues of `C_1..C_max` at the rigid point.
pub fn level_figure_data(sol: &RigidSolution, max: usize) -> Result<LevelFigure> {
    if !(1..=40).contains(&max) {
        return Err(Error::BadShape(format!("level count {max} outside 1..=40")));
    }
    let (_, b) = sol.lam.coefficients(max + 1)?;
    let b_positive = b.iter().all(crate::scalar::is_positive);
    let levels = level_spectra_exact(&sol.lam, max)?;
    let width = {
        let all: Vec<f64> = levels.iter().flatten().copied().collect();
        let lo = all.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (hi - lo).max(1.0)
    };
    let mut min_gap = f64::INFINITY;
    for w in levels.windows(2) {
        for x in &w[0] {
            for y in &w[1] {
                min_gap = min_gap.min((x - y).abs() / width);
            }
        }
    }
    let mut points = vec![];
    for (i, ev) in levels.iter().enumerate() {
        for (k, &x) in ev.iter().enumerate() {
            let shared_with = levels
                .iter()
                .enumerate()
                .filter(|(j, other)| *j != i && other.iter().any(|y| (x - y).abs() < DEFAULT_CLUSTER_TOL))
                .map(|(j, _)| j + 1)
                .collect();
            points.push(LevelPoint { level: i + 1, index: k + 1, value: x, shared_with });
        }
    }
    Ok(LevelFigure { points, b_positive, min_interlace_gap: min_gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn linear_resultant() {
        let u = Poly::new(vec![rat(-3, 1), rat(1, 1)]);
        let v = Poly::new(vec![rat(-5, 1), rat(1, 1)]);
        assert_eq!(num_traits::Signed::abs(&resultant(&u, &v).unwrap()), rat(2, 1));
        assert_eq!(resultant(&Poly::<BigRational>::zero(), &v), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn r37_matches_closed_form() {
        let s = simplify_resultant(3, 7).unwrap();
        assert_eq!(s.reduced, r37_reduced());
        for (a, b) in [(3, 5), (3, 6), (4, 6), (4, 7)] {
            assert!(simplify_resultant(a, b).unwrap().is_constant(), "({a}, {b})");
        }
        let s48 = simplify_resultant(4, 8).unwrap();
        assert_eq!(s48.reduced.total_degree(), 5);
        let powers: Vec<usize> = s48.removed.iter().map(|(_, k)| *k).collect();
        assert_eq!(powers.iter().sum::<usize>(), 2 + 2 + 2 + 3 + 2);
    }

    #[test]
    fn double_root_entry_is_trivial() {
        let r = double_root_exclusion().unwrap();
        assert_eq!(num_traits::Signed::abs(&r.ratio), rat(1, 1));
    }

    #[test]
    fn rigid_point_and_t8_list() {
        let sol = solve_rigid(1).unwrap();
        assert!(sol.max_route_gap < 1e-9);
        let expect = [-0.604555194, 0.502965741, 0.759864937, -1.256899196, -1.354063522, -0.747525931];
        for ((_, v), e) in sol.named_values().iter().zip(expect) {
            assert!((v.to_f64() - e).abs() < 1e-9);
        }
        let p = HedgeProfile::from_ell(&[2187, 1458, 486, 162, 54, 18, 6, 2, 1]).unwrap();
        let list: Vec<usize> = rigid_multiplicity_list(&sol, &p).unwrap().iter().map(|e| e.multiplicity).collect();
        assert_eq!(
            list,
            vec![
                1, 2, 6, 18, 54, 1, 164, 492, 18, 1, 1514, 6, 163, 18, 2, 2734, 1640, 1, 6, 54, 2, 505, 168, 2, 1,
                54, 18, 6, 2, 1
            ]
        );
        let fig = level_figure_data(&sol, 40).unwrap();
        assert!(fig.b_positive && fig.min_interlace_gap > 1e-9);
        assert_eq!(fig.points.len(), 40 * 41 / 2);
    }
}
