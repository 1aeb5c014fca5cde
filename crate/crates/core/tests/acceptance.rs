//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{dup_case, dup_collapse_laws, nullity_case, spectrum_gap};
use hedge_iep::covers::{m_formula, nullity_bound_check, path_cover_number, zero_forcing_number, Forest};
use hedge_iep::lambda::{cubic_family, sample_region, LambdaTuple};
use hedge_iep::numeric::cluster_multiplicities;
use hedge_iep::pth::{
    cubic_family_spectrum, gap_vector, label_sorted, ph_construct, ph_spectrum, random_splits, recognize_search,
    small_example_path, t31_constraints_check, Splits,
};
use hedge_iep::repro::{family_points, p1, p2, t8_expected, RIGID_PRINTED, T31_ELL};
use hedge_iep::rigid::{
    double_root_exclusion, level_figure_data, level_spectra_exact, r37_reduced, rigid_multiplicity_list,
    rigid_system, simplify_resultant, solve_rigid, verify_route_b, RigidSolution,
};
use hedge_iep::scalar::rat;
use hedge_iep::tree::RootedTree;
use hedge_iep::xi::xi_f64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_TOL: f64 = 1e-9;
const ROUND_TRIP_TOL: f64 = 1e-9;
const PERTURBATION: f64 = 0.01;
const ROUTE_TOL: f64 = 1e-9;
const PRINTED_TOL: f64 = 5e-10;
const PROPERTY_TOL: f64 = 1e-8;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn tables() -> Outcome {
    let s6 = 24f64.sqrt();
    let cases = [
        (8, vec![0.0, 1.0, 1.0, 2.0, 2.0, 2.0, 3.0, 5.0, 5.0, 11.0]),
        (2, vec![3.0 - s6, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 3.0 + s6]),
    ];
    let t = RootedTree::t_bf();
    let mut worst = 0.0f64;
    for (top, want) in cases {
        let c = small_example_path(top);
        let w = ph_construct(&c, &t, &Splits::Uniform).map_err(e)?;
        let eig = w.eigenvalues().map_err(e)?;
        worst = worst.max(spectrum_gap(eig.clone(), want.clone()));
        let formula = ph_spectrum(&c, &t.profile().map_err(e)?, 1e-7).map_err(e)?;
        worst = worst.max(spectrum_gap(formula.expanded(), want));
    }
    ensure(worst < TABLE_TOL, format!("normalized error {worst:e}"))?;
    Ok(format!("max normalized error {worst:.1e}"))
}

fn covers() -> Outcome {
    let mut checked = 0;
    let agree = |t: &RootedTree| -> Result<(), String> {
        let p = path_cover_number(t).0;
        let z = zero_forcing_number(t).0;
        let f = Forest::from_tree(t);
        let (bp, bz) = (f.brute_force_path_cover(), f.brute_force_zero_forcing());
        ensure(p == z && p == bp && z == bz, format!("{}: P={p} Z={z} brute {bp}/{bz}", t.canonical_form()))
    };
    for n in 1..=10 {
        for t in RootedTree::all_rooted(n) {
            agree(&t)?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=20);
        agree(&RootedTree::random(n, &mut rng))?;
        checked += 1;
    }
    let mut hedges = vec![RootedTree::t_bf(), RootedTree::lush_min(3)];
    for _ in 0..40 {
        let h = rng.gen_range(2..=3);
        hedges.push(RootedTree::random_lush(h, 40, &mut rng));
    }
    for t in &hedges {
        let profile = t.profile().map_err(e)?;
        let chain = t.subtree_chain(Default::default()).map_err(e)?;
        for (h, th) in chain.trees.iter().enumerate() {
            let p = path_cover_number(th).0;
            ensure(p == m_formula(&profile, h), format!("{} at h = {h}: P = {p}", t.canonical_form()))?;
        }
    }
    Ok(format!("{checked} trees against brute force, {} lush hedges against the parity formula", hedges.len()))
}

fn max_component_error(a: &LambdaTuple<f64>, b: &LambdaTuple<f64>) -> f64 {
    a.values().iter().zip(b.values()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    let mut rejected = 0;
    let mut root_members = 0;
    for trial in 0..200 {
        let region = (trial % 12) as u8 + 1;
        let t = RootedTree::random_lush(3, 40, &mut rng);
        let lam = sample_region(region, &mut rng);
        let w = ph_construct(&lam.build_c(4).map_err(e)?, &t, &random_splits(&t, &mut rng)).map_err(e)?.to_f64();
        let found = recognize_search(&w, ROUND_TRIP_TOL).map_err(|x| format!("trial {trial}: {x}"))?;
        let truth = lam.to_f64();
        let best = found
            .iter()
            .filter(|r| r.ph_member)
            .map(|r| max_component_error(&r.recovered, &truth))
            .fold(f64::INFINITY, f64::min);
        ensure(best < ROUND_TRIP_TOL, format!("trial {trial} (region {region}): error {best:e}"))?;
        worst = worst.max(best);
        if trial < 50 {
            let inner: Vec<usize> = (0..t.n()).filter(|&v| t.parent(v).is_some_and(|p| p != t.root())).collect();
            let v = inner[rng.gen_range(0..inner.len())];
            let mut bad = w.clone();
            bad.set_edge(v, bad.edge(v) * (1.0 + PERTURBATION));
            if recognize_search(&bad, ROUND_TRIP_TOL).is_err() {
                rejected += 1;
            }
            let top = t.children(t.root())[rng.gen_range(0..t.children(t.root()).len())];
            let mut moved = w.clone();
            moved.set_edge(top, moved.edge(top) * (1.0 + PERTURBATION));
            if let Ok(found) = recognize_search(&moved, ROUND_TRIP_TOL) {
                let shifted = found.iter().all(|r| r.ph_member && (r.recovered.beta4 - truth.beta4).abs() > 1e-6);
                ensure(shifted, format!("trial {trial}: root-edge perturbation accepted with the original beta4"))?;
                root_members += 1;
            }
        }
    }
    ensure(rejected == 50, format!("only {rejected}/50 perturbations rejected"))?;
    Ok(format!(
        "200 recovered (max error {worst:.1e}), 50/50 inner-edge perturbations rejected, \
         {root_members}/50 root-edge perturbations certified under a shifted beta4"
    ))
}

fn below_upper_end(x: &BigRational) -> bool {
    let d = rat(11, 1) - rat(9, 1) * x;
    d > rat(0, 1) && d.clone() * d > rat(37, 1)
}

fn t31_suite() -> Outcome {
    let pts = family_points(50);
    ensure(pts.len() == 50, "need 50 points")?;
    for x in &pts {
        ensure(*x > rat(1, 3) && below_upper_end(x), format!("point {x} outside the interval"))?;
        let s = cubic_family_spectrum(x, &T31_ELL).map_err(e)?;
        let rep = t31_constraints_check(&label_sorted(&s.values())).map_err(e)?;
        ensure(s.distinct() == 8 && rep.holds(0.0) == [true; 4], format!("constraints fail at {x}"))?;
    }
    let s1 = cubic_family_spectrum(&rat(2, 5), &T31_ELL).map_err(e)?.values();
    let s2 = cubic_family_spectrum(&rat(1, 2), &T31_ELL).map_err(e)?.values();
    ensure(gap_vector(&s1).map_err(e)? == p1(), "gap vector at 2/5")?;
    ensure(gap_vector(&s2).map_err(e)? == p2(), "gap vector at 1/2")?;
    let mid: Vec<BigRational> = s1.iter().zip(&s2).map(|(a, b)| (a + b) / rat(2, 1)).collect();
    let rep = t31_constraints_check(&label_sorted(&mid)).map_err(e)?;
    ensure(!rep.holds(0.0)[2], "midpoint satisfies the cubic")?;
    let lam = cubic_family(&rat(2, 5));
    let w = ph_construct(&lam.build_c(4).map_err(e)?, &RootedTree::lush_min(3), &Splits::Uniform).map_err(e)?;
    let direct = cluster_multiplicities(&w.eigenvalues().map_err(e)?, 1e-7);
    ensure(
        spectrum_gap(direct.expanded(), cubic_family_spectrum(&rat(2, 5), &T31_ELL).map_err(e)?.to_f64().expanded()) < 1e-9,
        "31-vertex eigensolve",
    )?;
    Ok(format!("50 points exact, p1/p2 exact, midpoint cubic residual {}", rep.cubic))
}

fn resultants() -> Outcome {
    let r37 = simplify_resultant(3, 7).map_err(e)?.reduced;
    let want = r37_reduced();
    ensure(r37 == want || r37 == want.scale(&rat(-1, 1)), "r'(3,7) differs")?;
    for (a, b) in [(3, 5), (3, 6), (4, 6), (4, 7)] {
        let s = simplify_resultant(a, b).map_err(e)?;
        let c = s.reduced.as_constant();
        ensure(c.is_some_and(|c| c == rat(1, 1) || c == rat(-1, 1)), format!("r({a},{b}) keeps a factor"))?;
    }
    let d = double_root_exclusion().map_err(e)?;
    ensure(d.ratio != rat(0, 1), "zero ratio")?;
    Ok(format!("r'(3,7) closed form, four unit residuals, r8(R4) ratio {}", d.ratio))
}

fn rigid(sol: &RigidSolution) -> Outcome {
    ensure(sol.max_route_gap < ROUTE_TOL, format!("routes differ by {:e}", sol.max_route_gap))?;
    verify_route_b(&rigid_system().map_err(e)?).map_err(e)?;
    let mut got = vec![("xi", xi_f64())];
    got.extend(sol.named_values().into_iter().map(|(n, v)| (n, v.to_f64())));
    let mut worst = 0.0f64;
    for ((name, v), (pname, printed)) in got.iter().zip(RIGID_PRINTED) {
        ensure(name == &pname, "name order")?;
        worst = worst.max((v - printed).abs());
    }
    ensure(worst < PRINTED_TOL, format!("printed value off by {worst:e}"))?;
    Ok(format!("route gap {:.1e}, printed gap {worst:.1e}, exact zeros in Q(xi)", sol.max_route_gap))
}

fn t8_list(sol: &RigidSolution) -> Outcome {
    let profile = RootedTree::lush_min(8).profile().map_err(e)?;
    let entries = rigid_multiplicity_list(sol, &profile).map_err(e)?;
    let list: Vec<usize> = entries.iter().map(|x| x.multiplicity).collect();
    ensure(list == t8_expected(), format!("{list:?}"))?;
    ensure(list.iter().sum::<usize>() == 7654, "sum")?;
    let accounting = (1..=9).all(|i| entries.iter().filter(|x| x.levels.contains(&i)).count() == i);
    ensure(accounting, "level accounting")?;
    Ok(format!("{} entries, sum 7654", list.len()))
}

fn properties(sol: &RigidSolution) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for i in 0..500 {
        let case = dup_case(&mut rng, 12);
        let (law, inverse, restored) = dup_collapse_laws(&case);
        ensure(law < PROPERTY_TOL && inverse < PROPERTY_TOL && restored, format!("duplication case {i}"))?;
        worst = worst.max(law).max(inverse);
    }
    let mut nontrivial = 0;
    for i in 0..1000 {
        let c = nullity_case(&mut rng);
        nontrivial += usize::from(!c.subtrees.is_empty());
        ensure(nullity_bound_check(&c.t, &c.subtrees, &c.a, 1e-8).map_err(e)?, format!("nullity case {i}"))?;
    }
    let levels = level_spectra_exact(&sol.lam, 40).map_err(e)?;
    for (i, w) in levels.windows(2).enumerate() {
        let (lo, hi) = (&w[0], &w[1]);
        let strict = lo.iter().enumerate().all(|(k, x)| hi[k] < *x && *x < hi[k + 1]);
        ensure(strict, format!("levels {} and {} do not interlace strictly", i + 1, i + 2))?;
    }
    let fig = level_figure_data(sol, 40).map_err(e)?;
    ensure(fig.b_positive, "nonpositive b")?;
    Ok(format!(
        "500 duplication cases (max gap {worst:.1e}), 1000 nullity cases ({nontrivial} with subtrees), interlacing through 40"
    ))
}

fn main() {
    let total = Instant::now();
    let mut failed = 0;
    let mut report = |id: usize, name: &str, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let in_time = took <= limit;
        let pass = out.is_ok() && in_time;
        failed += usize::from(!pass);
        let detail = match &out {
            Ok(s) if in_time => s.clone(),
            Ok(s) => format!("{s}; over the {:.0} s limit", limit.as_secs_f64()),
            Err(s) => s.clone(),
        };
        println!(
            "{} {id} {name:<22} {:>8.3} s  {detail}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    };
    let secs = Duration::from_secs;
    report(1, "tables", secs(1), &mut tables);
    report(2, "covers oracle", secs(60), &mut covers);
    report(3, "recognizer round trip", secs(30), &mut round_trip);
    report(4, "height-three suite", secs(10), &mut t31_suite);
    report(5, "resultants", secs(120), &mut resultants);
    let mut sol: Option<RigidSolution> = None;
    report(6, "rigid solution", secs(60), &mut || {
        let s = solve_rigid(0).map_err(e)?;
        let out = rigid(&s);
        sol = Some(s);
        out
    });
    let missing = || Err::<String, _>("no rigid solution".to_string());
    report(7, "rigid list", secs(10), &mut || sol.as_ref().map_or_else(missing, t8_list));
    report(8, "property suites", secs(600), &mut || sol.as_ref().map_or_else(missing, properties));
    println!("acceptance: {} of 8 passed in {:.2} s", 8 - failed, total.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
