//! Self-checking reproductions of the worked examples, one per id.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::io::{num, nums, RunReport, Reporter};
use crate::lambda::{cubic_family, forced_fifth_eigenvalue, sample_region, LambdaTuple};
use crate::numeric::{cluster_multiplicities, width_scale, DEFAULT_CLUSTER_TOL};
use crate::pth::{
    critical_check, gap_vector, label_sorted, ph_construct, ph_spectrum, random_splits, recognize,
    small_example_path, splitting_counterexample, t31_constraints_check, zero_one_counterexample_check,
    cubic_family_spectrum, Splits,
};
use crate::rigid::{level_figure_data, rigid_multiplicity_list, solve_rigid};
use crate::scalar::{fmt_rat, rat};
use crate::tree::RootedTree;
use crate::xi::{certify_interval, xi_f64};
use crate::{Error, Result};

pub const IDS: [&str; 10] = [
    "table1",
    "table2",
    "bf-rs",
    "t31-constraints",
    "nonconvexity",
    "splitting-t31",
    "zeroone-11",
    "rigid-values",
    "rigid-t8-list",
    "levels-40",
];

pub fn run(id: &str, seed: u64) -> Result<RunReport> {
    let mut r = Reporter::new(format!("repro {id}"), seed);
    match id {
        "table1" => table(&mut r, 8, &[0.0, 1.0, 1.0, 2.0, 2.0, 2.0, 3.0, 5.0, 5.0, 11.0])?,
        "table2" => {
            let s = 24f64.sqrt();
            table(&mut r, 2, &[3.0 - s, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 3.0 + s])?;
            table2_extras(&mut r)?;
        }
        "bf-rs" => bf_rs(&mut r, seed)?,
        "t31-constraints" => t31_constraints(&mut r)?,
        "nonconvexity" => nonconvexity(&mut r)?,
        "splitting-t31" => splitting(&mut r, seed)?,
        "zeroone-11" => zeroone(&mut r)?,
        "rigid-values" => rigid_values(&mut r, seed)?,
        "rigid-t8-list" => rigid_list(&mut r, seed)?,
        "levels-40" => levels(&mut r, seed)?,
        _ => return Err(Error::UnknownExample(id.into())),
    }
    Ok(r.finish())
}

/// Largest absolute difference after scaling both spectra to unit width.
pub fn normalized_gap(got: &[f64], want: &[f64]) -> f64 {
    let (lo, w) = (want[0], width_scale(want));
    let (glo, gw) = (got[0], width_scale(got));
    got.iter()
        .zip(want)
        .map(|(g, e)| ((g - glo) / gw - (e - lo) / w).abs())
        .fold(0.0, f64::max)
}

fn table(r: &mut Reporter, top: i64, want: &[f64]) -> Result<()> {
    let c = small_example_path(top);
    let t = RootedTree::t_bf();
    let w = ph_construct(&c, &t, &Splits::Uniform)?;
    let ev = w.eigenvalues()?;
    let gap = normalized_gap(&ev, want);
    r.check("eigensolver matches the table", gap < 1e-9, format!("max normalized error {gap:e}"));
    let formula = ph_spectrum(&c, &t.profile()?, DEFAULT_CLUSTER_TOL)?;
    let direct = cluster_multiplicities(&ev, DEFAULT_CLUSTER_TOL);
    r.check("level formula equals direct spectrum", formula.approx_eq(&direct, 1e-9), "");
    let rows: Vec<Vec<String>> =
        w.unit_lower_representative().iter().map(|row| row.iter().map(fmt_rat).collect()).collect();
    r.output("matrix", rows);
    r.output("eigenvalues", nums(&ev));
    r.output("multiplicities", direct.multiplicities());
    Ok(())
}

fn table2_extras(r: &mut Reporter) -> Result<()> {
    let b3 = 3.0 - 24f64.sqrt();
    let fifth = forced_fifth_eigenvalue(&2.0, &5.0, &1.0, &b3)?;
    r.check("forced fifth eigenvalue", (fifth - (3.0 + 24f64.sqrt())).abs() < 1e-12, format!("{fifth}"));
    let w = ph_construct(&small_example_path(2), &RootedTree::t_bf(), &Splits::Uniform)?.to_f64();
    let lam = LambdaTuple::unchecked([2.0, 5.0, 1.0, b3, f64::NAN]);
    let rec = recognize(&w, &lam, 1e-9)?;
    let ok = rec.path.approx_eq(&small_example_path(2).to_f64(), 1e-9) && rec.ph_member;
    r.check("cascade recovers the source path", ok, "");
    let crit = critical_check(&RootedTree::t_bf(), &[1, 2, 4, 2, 1])?;
    r.check("(1,2,4,2,1) is critical with a zero placeholder", crit.is_some_and(|c| c.indices[4].is_none()), "");
    Ok(())
}

fn bf_rs(r: &mut Reporter, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = RootedTree::t_bf();
    let mut worst = 0.0f64;
    let mut lists_ok = true;
    let mut exact_ok = true;
    let trials = 100;
    for _ in 0..trials {
        let mut v: Vec<i64> = (0..4).map(|_| rng.gen_range(-40..=40)).collect();
        v.sort_unstable();
        v.dedup();
        if v.len() < 4 {
            continue;
        }
        let (b3, b2, a1, a2) = (rat(v[0], 4), rat(v[1], 4), rat(v[2], 4), rat(v[3], 4));
        let lam = LambdaTuple::unchecked([a1.clone(), a2.clone(), b2.clone(), b3.clone(), rat(0, 1)]);
        let c = lam.build_c(3)?;
        let w = ph_construct(&c, &t, &random_splits(&t, &mut rng))?;
        let spec = cluster_multiplicities(&w.eigenvalues()?, DEFAULT_CLUSTER_TOL);
        lists_ok &= spec.multiplicities() == vec![1, 2, 4, 2, 1];
        let p = gap_vector(&spec.values())?;
        worst = worst.max((p[0] - p[3]).abs());
        let delta = a2.clone() + b2.clone() - b3.clone();
        let exact = gap_vector(&[b3, b2, a1, a2, delta])?;
        exact_ok &= exact[0] == exact[3];
    }
    r.check("ordered list is (1,2,4,2,1)", lists_ok, format!("{trials} random realizations"));
    r.check("p1 = p4 numerically", worst < 1e-9, format!("max |p1 - p4| = {worst:e}"));
    r.check("p1 = p4 exactly", exact_ok, "");
    Ok(())
}

/// Rational sample points strictly inside the family's interval.
pub fn family_points(count: usize) -> Vec<BigRational> {
    let lo = rat(1, 3);
    let hi = rat(5463, 10000);
    (1..=count as i64)
        .map(|k| lo.clone() + (hi.clone() - lo.clone()) * rat(k, count as i64 + 1))
        .collect()
}

pub const T31_ELL: [usize; 4] = [9, 6, 2, 1];

pub fn p1() -> Vec<BigRational> {
    vec![rat(1, 9), rat(2, 9), rat(11, 315), rat(2, 63), rat(74, 315), rat(2, 9), rat(1, 7)]
}

pub fn p2() -> Vec<BigRational> {
    vec![rat(1, 9), rat(2, 9), rat(7, 90), rat(4, 45), rat(7, 90), rat(2, 9), rat(1, 5)]
}

fn t31_constraints(r: &mut Reporter) -> Result<()> {
    let mut all = true;
    for x in family_points(50) {
        let s = cubic_family_spectrum(&x, &T31_ELL)?;
        all &= s.distinct() == 8 && t31_constraints_check(&label_sorted(&s.values()))?.holds(0.0) == [true; 4];
    }
    r.check("constraints hold exactly at 50 points", all, "");
    let g1 = gap_vector(&cubic_family_spectrum(&rat(2, 5), &T31_ELL)?.values())?;
    let g2 = gap_vector(&cubic_family_spectrum(&rat(1, 2), &T31_ELL)?.values())?;
    r.check("gap vector at 2/5", g1 == p1(), g1.iter().map(fmt_rat).collect::<Vec<_>>().join(", "));
    r.check("gap vector at 1/2", g2 == p2(), g2.iter().map(fmt_rat).collect::<Vec<_>>().join(", "));
    let t = RootedTree::lush_min(3);
    let lam = cubic_family(&rat(2, 5));
    let w = ph_construct(&lam.build_c(4)?, &t, &Splits::Uniform)?;
    let direct = cluster_multiplicities(&w.eigenvalues()?, DEFAULT_CLUSTER_TOL);
    let formula = cubic_family_spectrum(&rat(2, 5), &T31_ELL)?.to_f64();
    r.check("31-vertex matrix has the predicted spectrum", direct.approx_eq(&formula, 1e-9), "");
    r.output("p1", g1.iter().map(fmt_rat).collect::<Vec<_>>());
    r.output("p2", g2.iter().map(fmt_rat).collect::<Vec<_>>());
    Ok(())
}

fn nonconvexity(r: &mut Reporter) -> Result<()> {
    let s1 = cubic_family_spectrum(&rat(2, 5), &T31_ELL)?.values();
    let s2 = cubic_family_spectrum(&rat(1, 2), &T31_ELL)?.values();
    let mut residuals = vec![];
    for t in [rat(1, 4), rat(1, 2), rat(3, 4)] {
        let mix: Vec<BigRational> =
            s1.iter().zip(&s2).map(|(a, b)| t.clone() * a + (rat(1, 1) - t.clone()) * b).collect();
        let rep = t31_constraints_check(&label_sorted(&mix))?;
        r.check(&format!("cubic fails at t = {}", fmt_rat(&t)), !rep.holds(0.0)[2], fmt_rat(&rep.cubic));
        residuals.push(fmt_rat(&rep.cubic));
    }
    let pts = family_points(6);
    let mut all_fail = true;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let a = cubic_family_spectrum(&pts[i], &T31_ELL)?.values();
            let b = cubic_family_spectrum(&pts[j], &T31_ELL)?.values();
            let mid: Vec<BigRational> = a.iter().zip(&b).map(|(x, y)| (x + y) / rat(2, 1)).collect();
            all_fail &= !t31_constraints_check(&label_sorted(&mid))?.holds(0.0)[2];
        }
    }
    r.check("midpoints of distinct sweep points violate the cubic", all_fail, "");
    r.output("cubicResiduals", residuals);
    Ok(())
}

fn splitting(r: &mut Reporter, seed: u64) -> Result<()> {
    let t31 = RootedTree::lush_min(3);
    let rep = splitting_counterexample(&t31, &cubic_family(&rat(2, 5)))?;
    r.check("m = {11,7,6,2,2,1,1,1}", rep.m == vec![11, 7, 6, 2, 2, 1, 1, 1], format!("{:?}", rep.m));
    r.check("m' = {11,7,6,2,1,1,1,1,1}", rep.m_prime == vec![11, 7, 6, 2, 1, 1, 1, 1, 1], format!("{:?}", rep.m_prime));
    r.check("31-vertex pair certified", rep.certifies(), "");
    r.output("t31", &rep);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t94 = RootedTree::lush_min(4);
    let mut done = false;
    for _ in 0..20 {
        let lam = sample_region(1, &mut rng);
        let rep4 = splitting_counterexample(&t94, &lam)?;
        if rep4.certifies() {
            r.output("t94", &rep4);
            done = true;
            break;
        }
    }
    r.check("94-vertex pair certified", done, "");
    let short = splitting_counterexample(&RootedTree::t_bf(), &cubic_family(&rat(2, 5)));
    r.check("height 2 is rejected", matches!(short, Err(Error::HeightTooSmall(2))), "");
    Ok(())
}

pub fn zero_one_tree() -> RootedTree {
    RootedTree::from_parent_array(&[0, 1, 2, 1, 4, 1, 6, 2, 4, 6, 2]).expect("valid parent array")
}

fn zeroone(r: &mut Reporter) -> Result<()> {
    let rep = zero_one_counterexample_check(&zero_one_tree())?;
    r.check("critical list {5,2,2,1,1}", rep.critical_list == vec![5, 2, 2, 1, 1] && rep.list_is_critical, "");
    r.check("unequal child counts give a contradiction", rep.contradiction, format!("{:?}", rep.child_counts));
    let bf = zero_one_counterexample_check(&RootedTree::t_bf())?;
    r.check("balanced hedge is inconclusive", !bf.contradiction, "");
    r.output("report", &rep);
    Ok(())
}

pub const RIGID_PRINTED: [(&str, f64); 7] = [
    ("xi", 0.334981556),
    ("alpha1", -0.604555194),
    ("alpha2", 0.502965741),
    ("beta3", 0.759864937),
    ("lambda37", -1.256899196),
    ("lambda48", -1.354063522),
    ("lambda49", -0.747525931),
];

fn rigid_values(r: &mut Reporter, seed: u64) -> Result<()> {
    let (inside, below) = certify_interval();
    r.check("isolating interval holds one root, none below", inside == 1 && below == 0, "");
    let sol = solve_rigid(seed)?;
    r.check("routes agree", sol.max_route_gap < 1e-9, format!("max gap {:e}", sol.max_route_gap));
    let mut got = vec![("xi", xi_f64())];
    got.extend(sol.named_values().into_iter().map(|(n, v)| (n, v.to_f64())));
    let mut out = serde_json::Map::new();
    for ((name, v), (_, printed)) in got.iter().zip(RIGID_PRINTED) {
        r.check(&format!("{name} matches 9 decimals"), (v - printed).abs() < 5e-10, format!("{v:.12}"));
        out.insert(name.to_string(), num(*v));
    }
    let coords: Vec<(String, String)> =
        sol.named_values().into_iter().map(|(n, v)| (n.to_string(), v.display())).collect();
    r.output("values", out);
    r.output("coordinates", coords);
    r.output("routeA", nums(&sol.route_a));
    Ok(())
}

pub fn t8_expected() -> Vec<usize> {
    vec![
        1, 2, 6, 18, 54, 1, 164, 492, 18, 1, 1514, 6, 163, 18, 2, 2734, 1640, 1, 6, 54, 2, 505, 168, 2, 1, 54, 18, 6,
        2, 1,
    ]
}

fn rigid_list(r: &mut Reporter, seed: u64) -> Result<()> {
    let sol = solve_rigid(seed)?;
    let profile = RootedTree::lush_min(8).profile()?;
    let entries = rigid_multiplicity_list(&sol, &profile)?;
    let list: Vec<usize> = entries.iter().map(|e| e.multiplicity).collect();
    r.check("list matches", list == t8_expected(), format!("{list:?}"));
    r.check("sum is 7654", list.iter().sum::<usize>() == 7654, "");
    let accounting = (1..=9).all(|i| entries.iter().filter(|e| e.levels.contains(&i)).count() == i);
    r.check("level i contributes to exactly i entries", accounting, "");
    r.output("list", list);
    r.output(
        "named",
        entries
            .iter()
            .filter_map(|e| e.name.map(|n| json!({"name": n, "multiplicity": e.multiplicity, "levels": e.levels})))
            .collect::<Vec<_>>(),
    );
    Ok(())
}

fn levels(r: &mut Reporter, seed: u64) -> Result<()> {
    let sol = solve_rigid(seed)?;
    let fig = level_figure_data(&sol, 40)?;
    r.check("b_i > 0 through level 41", fig.b_positive, "");
    r.check("consecutive levels strictly interlace", fig.min_interlace_gap > 1e-9, format!("{:e}", fig.min_interlace_gap));
    let at = |lvl: usize| fig.points.iter().filter(move |p| p.level == lvl);
    let a1 = RIGID_PRINTED[1].1;
    let shared37: Vec<f64> = at(3)
        .filter(|p| p.shared_with.contains(&7) && (p.value - a1).abs() > 1e-6)
        .map(|p| p.value)
        .collect();
    r.check(
        "levels 3 and 7 share one value besides alpha1",
        shared37.len() == 1 && (shared37[0] - RIGID_PRINTED[4].1).abs() < 1e-9,
        format!("{shared37:?}"),
    );
    let l2: Vec<f64> = at(2).map(|p| p.value).collect();
    r.check("level 2 is {-1, alpha2}", (l2[0] + 1.0).abs() < 1e-12 && (l2[1] - RIGID_PRINTED[2].1).abs() < 1e-9, "");
    r.output("points", fig.points.len());
    Ok(())
}
