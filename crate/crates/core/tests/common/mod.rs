#![allow(dead_code)]

use hedge_iep::numeric::{nullity_sym, DenseMatrix};
use hedge_iep::tree::RootedTree;
use hedge_iep::weights::WeightFn;
use rand::Rng;

pub fn random_weight<R: Rng>(t: &RootedTree, rng: &mut R) -> WeightFn<f64> {
    let vertex = (0..t.n()).map(|_| rng.gen_range(-3.0..3.0)).collect();
    let edge = (0..t.n()).map(|_| rng.gen_range(0.2..3.0)).collect();
    WeightFn::new(t.clone(), vertex, edge).expect("positive edges")
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

/// Largest entrywise gap between two spectra, scaled by the wider one's width.
pub fn spectrum_gap(a: Vec<f64>, b: Vec<f64>) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let (a, b) = (sorted(a), sorted(b));
    let width = |v: &[f64]| v.last().zip(v.first()).map_or(0.0, |(hi, lo)| hi - lo);
    let scale = width(&a).max(width(&b)).max(1.0);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs() / scale).fold(0.0, f64::max)
}

/// Random weight plus a duplication that a pendent-path collapse can undo.
pub struct DupCase {
    pub w: WeightFn<f64>,
    pub attach: usize,
    pub top: usize,
    pub k: usize,
    pub split: Vec<f64>,
}

/// Picks a pendent `k`-path whose attach vertex holds no other pendent
/// `k`-path, on a tree where every attach vertex holds at most one.
pub fn dup_case<R: Rng>(rng: &mut R, max_n: usize) -> DupCase {
    loop {
        let t = RootedTree::random(rng.gen_range(3..=max_n), rng);
        let ks: Vec<usize> = (1..t.n())
            .filter(|&k| {
                let paths = t.pendent_paths(k);
                let mut attach: Vec<usize> = paths.iter().map(|p| p.attach).collect();
                let before = attach.len();
                attach.sort_unstable();
                attach.dedup();
                before > 0 && attach.len() == before
            })
            .collect();
        if ks.is_empty() {
            continue;
        }
        let k = ks[rng.gen_range(0..ks.len())];
        let paths = t.pendent_paths(k);
        let p = &paths[rng.gen_range(0..paths.len())];
        let copies = rng.gen_range(2..=4);
        let raw: Vec<f64> = (0..copies).map(|_| rng.gen_range(0.1..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let split = raw.iter().map(|r| r / total).collect();
        return DupCase { w: random_weight(&t, rng), attach: p.attach, top: p.vertices[0], k, split };
    }
}

/// Spectrum gaps for the duplication law and the collapse law, and whether
/// the collapse restored the original weight.
pub fn dup_collapse_laws(c: &DupCase) -> (f64, f64, bool) {
    let dup = c.w.duplicate_branch(c.attach, c.top, &c.split).unwrap();
    let branch = c.w.branch(c.top).eigenvalues().unwrap();
    let mut expect = c.w.eigenvalues().unwrap();
    for _ in 1..c.split.len() {
        expect.extend(&branch);
    }
    let dup_eigs = dup.eigenvalues().unwrap();
    let law = spectrum_gap(dup_eigs.clone(), expect);
    let col = dup.collapse_pendent_paths(c.k, 1e-12).unwrap();
    let mut back = col.weight.eigenvalues().unwrap();
    let removed = col.branch.expect("one group collapsed").eigenvalues().unwrap();
    for _ in 0..col.removed {
        back.extend(&removed);
    }
    let inverse = spectrum_gap(dup_eigs, back);
    (law, inverse, col.removed + 1 == c.split.len() && col.weight.approx_eq(&c.w, 1e-12))
}

/// Random tree, a singular matrix on it and independent branches whose
/// principal submatrices are invertible.
pub struct NullityCase {
    pub t: RootedTree,
    pub a: DenseMatrix,
    pub subtrees: Vec<Vec<usize>>,
}

pub fn nullity_case<R: Rng>(rng: &mut R) -> NullityCase {
    loop {
        let t = RootedTree::random(rng.gen_range(2..=14), rng);
        let base = random_weight(&t, rng);
        let w = if rng.gen_bool(0.5) && t.n() >= 3 {
            let v = rng.gen_range(0..t.n());
            match t.children(v).first() {
                Some(&c) => {
                    let split: Vec<f64> = vec![0.5, 0.3, 0.2];
                    base.duplicate_branch(v, c, &split).unwrap()
                }
                None => base,
            }
        } else {
            base
        };
        let t = w.tree().clone();
        let m = w.symmetric_representative().unwrap();
        let eigs = w.eigenvalues().unwrap();
        let shift = eigs[rng.gen_range(0..eigs.len())];
        let a = m.shifted(shift);
        let mut taken = vec![false; t.n()];
        let mut subtrees = vec![];
        let mut order: Vec<usize> = (0..t.n()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        for &v in order.iter().take(rng.gen_range(0..=3)) {
            let members = descendants(&t, v);
            let blocked = members.iter().any(|&u| taken[u] || t.neighbors(u).iter().any(|&x| taken[x]));
            if blocked || nullity_sym(&a.principal(&members), 1e-8).unwrap() > 0 {
                continue;
            }
            for &u in &members {
                taken[u] = true;
            }
            subtrees.push(members);
        }
        return NullityCase { t, a, subtrees };
    }
}

pub fn descendants(t: &RootedTree, v: usize) -> Vec<usize> {
    let mut out = vec![v];
    let mut i = 0;
    while i < out.len() {
        out.extend_from_slice(t.children(out[i]));
        i += 1;
    }
    out
}
