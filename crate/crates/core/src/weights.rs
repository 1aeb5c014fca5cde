//! Weight functions on rooted trees.
//!
//! A [`WeightFn`] stores one diagonal entry per vertex and one positive
//! product `a_uv * a_vu` per edge. Every matrix with the same weight is
//! diagonally similar to the symmetric representative, so spectra are a
//! property of the weight alone.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::numeric::{eigenvalues_sym, DenseMatrix};
use crate::scalar::{fmt_rat, is_positive, parse_rat, Field, Ring};
use crate::tree::{RootedTree, TreeFile};
use crate::{Error, Result};

/// Absolute tolerance used when comparing float weights.
pub const DEFAULT_WEIGHT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightFn<R> {
    tree: RootedTree,
    vertex: Vec<R>,
    /// `edge[v]` is the weight of the edge from `v` to its parent.
    edge: Vec<R>,
}

/// Result of collapsing all pendent `k`-paths.
#[derive(Clone, Debug)]
pub struct Collapse<R> {
    pub weight: WeightFn<R>,
    /// Number of deleted copies of `P_k`.
    pub removed: usize,
    /// Weight of one deleted path, top vertex first.
    pub branch: Option<WeightFn<R>>,
    /// Kept vertices of the old tree.
    pub kept: Vec<bool>,
}

/// Relative comparison for floats, equality for exact scalars.
pub fn weights_near<F: Field>(a: &F, b: &F, tol: f64) -> bool {
    if F::is_exact() {
        return a == b;
    }
    let (x, y) = (a.approx(), b.approx());
    (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs())
}

impl<R: Ring> WeightFn<R> {
    /// Weights indexed by internal vertex index; `edge[root]` is ignored.
    pub fn from_parts(tree: RootedTree, vertex: Vec<R>, mut edge: Vec<R>) -> Result<Self> {
        let n = tree.n();
        if vertex.len() != n || edge.len() != n {
            return Err(Error::InvalidTree(format!(
                "expected {n} vertex and edge weights, got {} and {}",
                vertex.len(),
                edge.len()
            )));
        }
        edge[tree.root()] = R::zero();
        Ok(WeightFn { tree, vertex, edge })
    }

    /// Path `P_n` with labels `1..n` from the root, diagonal `a_1..a_n`
    /// listed from the bottom vertex up and edge weights `b_2..b_n`.
    pub fn path(a: &[R], b: &[R]) -> Self {
        let n = a.len();
        assert!(n >= 1 && b.len() + 1 >= n);
        let tree = RootedTree::path(n);
        let vertex = (0..n).map(|i| a[n - 1 - i].clone()).collect();
        let edge = (0..n)
            .map(|i| if i == 0 { R::zero() } else { b[n - 1 - i].clone() })
            .collect();
        WeightFn { tree, vertex, edge }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn vertex(&self, v: usize) -> &R {
        &self.vertex[v]
    }

    pub fn edge(&self, child: usize) -> &R {
        &self.edge[child]
    }

    pub fn vertex_weights(&self) -> &[R] {
        &self.vertex
    }

    pub fn edge_weights(&self) -> &[R] {
        &self.edge
    }

    pub fn set_vertex(&mut self, v: usize, x: R) {
        self.vertex[v] = x;
    }

    pub fn set_edge(&mut self, child: usize, x: R) {
        if child != self.tree.root() {
            self.edge[child] = x;
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> WeightFn<S> {
        WeightFn {
            tree: self.tree.clone(),
            vertex: self.vertex.iter().map(&f).collect(),
            edge: self.edge.iter().map(&f).collect(),
        }
    }

    /// Diagonal `a_1..a_n` (bottom up) and `b_2..b_n` when the tree is a path.
    pub fn path_coefficients(&self) -> Option<(Vec<R>, Vec<R>)> {
        let order = self.tree.preorder();
        if order.iter().any(|&v| self.tree.children(v).len() > 1) {
            return None;
        }
        let a: Vec<R> = order.iter().rev().map(|&v| self.vertex[v].clone()).collect();
        let b: Vec<R> = order.iter().rev().take(order.len() - 1).map(|&v| self.edge[v].clone()).collect();
        Some((a, b))
    }

    /// Restriction to the subtree hanging from `v` (inclusive).
    pub fn branch(&self, v: usize) -> WeightFn<R> {
        let mut keep = vec![false; self.tree.n()];
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            keep[u] = true;
            stack.extend_from_slice(self.tree.children(u));
        }
        self.restrict(&keep, Some(v))
    }

    /// Restriction to a parent-closed vertex set (or a subtree rooted at `top`).
    pub fn restrict(&self, keep: &[bool], top: Option<usize>) -> WeightFn<R> {
        let map = self.tree.index_map(keep);
        let mut parent = vec![];
        let mut labels = vec![];
        let mut vertex = vec![];
        let mut edge = vec![];
        for v in 0..self.tree.n() {
            if !keep[v] {
                continue;
            }
            let p = if Some(v) == top { None } else { self.tree.parent(v).and_then(|p| map[p]) };
            parent.push(p);
            labels.push(self.tree.label(v));
            vertex.push(self.vertex[v].clone());
            edge.push(if p.is_some() { self.edge[v].clone() } else { R::zero() });
        }
        let tree = build_tree(parent, labels);
        WeightFn { tree, vertex, edge }
    }
}

fn build_tree(parent: Vec<Option<usize>>, labels: Vec<usize>) -> RootedTree {
    let n = parent.len();
    let root = parent.iter().position(|p| p.is_none()).expect("restriction keeps a root");
    let edges: Vec<(usize, usize)> = (0..n).filter_map(|v| parent[v].map(|p| (p, v))).collect();
    RootedTree::from_edges(n, root, &edges, labels).expect("restriction of a tree is a tree")
}

impl<F: Field> WeightFn<F> {
    /// Like [`WeightFn::from_parts`] but also checks that edge weights are positive.
    pub fn new(tree: RootedTree, vertex: Vec<F>, edge: Vec<F>) -> Result<Self> {
        let w = WeightFn::from_parts(tree, vertex, edge)?;
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        for v in 0..self.tree.n() {
            if let Some(p) = self.tree.parent(v) {
                if !is_positive(&self.edge[v]) {
                    return Err(Error::NonPositiveEdgeWeight(self.tree.label(p), self.tree.label(v)));
                }
            }
        }
        Ok(())
    }

    pub fn to_f64(&self) -> WeightFn<f64> {
        self.map(|x| x.approx())
    }

    /// Symmetric matrix with off-diagonal entries `sqrt(w(u, v))`.
    pub fn symmetric_representative(&self) -> Result<DenseMatrix> {
        self.validate()?;
        let n = self.tree.n();
        let mut m = DenseMatrix::zeros(n);
        for v in 0..n {
            m[(v, v)] = self.vertex[v].approx();
            if let Some(p) = self.tree.parent(v) {
                let s = self.edge[v].approx().sqrt();
                m[(v, p)] = s;
                m[(p, v)] = s;
            }
        }
        Ok(m)
    }

    /// Matrix with `a_ij = 1` whenever `label(i) > label(j)` on an edge and
    /// the full edge weight in the partner entry. Rows follow internal order.
    pub fn unit_lower_representative(&self) -> Vec<Vec<F>> {
        let n = self.tree.n();
        let mut m = vec![vec![F::zero(); n]; n];
        for v in 0..n {
            m[v][v] = self.vertex[v].clone();
            if let Some(p) = self.tree.parent(v) {
                let (hi, lo) = if self.tree.label(v) > self.tree.label(p) { (v, p) } else { (p, v) };
                m[hi][lo] = F::one();
                m[lo][hi] = self.edge[v].clone();
            }
        }
        m
    }

    /// Weight of a combinatorially symmetric matrix on `tree` (rows in internal order).
    pub fn from_matrix(tree: RootedTree, m: &[Vec<F>]) -> Result<Self> {
        let n = tree.n();
        let vertex = (0..n).map(|v| m[v][v].clone()).collect();
        let edge = (0..n)
            .map(|v| match tree.parent(v) {
                Some(p) => m[v][p].clone() * m[p][v].clone(),
                None => F::zero(),
            })
            .collect();
        WeightFn::new(tree, vertex, edge)
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigenvalues_sym(&self.symmetric_representative()?)
    }

    /// Attach `split.len() - 1` copies of the branch rooted at `c` (a child of
    /// `v`); the edge weight `w(v, c)` is shared out as `t_k * w(v, c)`.
    pub fn duplicate_branch(&self, v: usize, c: usize, split: &[F]) -> Result<WeightFn<F>> {
        if self.tree.parent(c) != Some(v) {
            return Err(Error::NotABranch { vertex: self.tree.label(v), branch: self.tree.label(c) });
        }
        check_split(split)?;
        let base = self.edge[c].clone();
        let branch = self.branch(c);
        let border = branch.tree.preorder();
        let mut parent: Vec<Option<usize>> = (0..self.tree.n()).map(|u| self.tree.parent(u)).collect();
        let mut labels = self.tree.labels().to_vec();
        let mut vertex = self.vertex.clone();
        let mut edge = self.edge.clone();
        edge[c] = split[0].clone() * base.clone();
        let mut next_label = labels.iter().copied().max().unwrap_or(0) + 1;
        for t in &split[1..] {
            let offset = parent.len();
            let mut new_index = vec![0; branch.tree.n()];
            for (i, &u) in border.iter().enumerate() {
                new_index[u] = offset + i;
            }
            for &u in &border {
                let p = match branch.tree.parent(u) {
                    Some(q) => Some(new_index[q]),
                    None => Some(v),
                };
                parent.push(p);
                labels.push(next_label);
                next_label += 1;
                vertex.push(branch.vertex[u].clone());
                edge.push(if branch.tree.parent(u).is_some() {
                    branch.edge[u].clone()
                } else {
                    t.clone() * base.clone()
                });
            }
        }
        let tree = build_tree(parent, labels);
        WeightFn::new(tree, vertex, edge)
    }

    /// Whether the branches rooted at `a` and `b` agree up to a
    /// weight-preserving isomorphism (attaching edges excluded).
    pub fn branches_match(&self, a: usize, b: usize, tol: f64) -> bool {
        if !weights_near(&self.vertex[a], &self.vertex[b], tol) {
            return false;
        }
        let (ka, kb) = (self.tree.children(a), self.tree.children(b));
        if ka.len() != kb.len() {
            return false;
        }
        let mut used = vec![false; kb.len()];
        ka.iter().all(|&x| {
            let hit = kb.iter().enumerate().position(|(j, &y)| {
                !used[j] && weights_near(&self.edge[x], &self.edge[y], tol) && self.branches_match(x, y, tol)
            });
            match hit {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    }

    /// Children of `v` grouped into classes of collapsible branches.
    pub fn collapsible_branches(&self, v: usize, tol: f64) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = vec![];
        for &c in self.tree.children(v) {
            match groups.iter_mut().find(|g| self.branches_match(g[0], c, tol)) {
                Some(g) => g.push(c),
                None => groups.push(vec![c]),
            }
        }
        groups
    }

    /// Collapse every group of pendent `k`-paths sharing an attach vertex to
    /// the path whose top vertex has the smallest label.
    pub fn collapse_pendent_paths(&self, k: usize, tol: f64) -> Result<Collapse<F>> {
        let paths = self.tree.pendent_paths(k);
        let mut by_attach: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in &paths {
            by_attach.entry(p.attach).or_default().push(p.vertices[0]);
        }
        let mut keep = vec![true; self.tree.n()];
        let mut edge = self.edge.clone();
        let mut removed = 0;
        let mut branch = None;
        for (&attach, tops) in &by_attach {
            if tops.len() < 2 {
                continue;
            }
            let rep = *tops.iter().min_by_key(|&&t| self.tree.label(t)).unwrap();
            let mut total = F::zero();
            for &t in tops {
                if !self.branches_match(rep, t, tol) {
                    return Err(Error::NotCollapsible {
                        vertex: self.tree.label(attach),
                        detail: format!(
                            "branches at {} and {} differ",
                            self.tree.label(rep),
                            self.tree.label(t)
                        ),
                    });
                }
                total = total + self.edge[t].clone();
                if t != rep {
                    let mut u = Some(t);
                    while let Some(x) = u {
                        keep[x] = false;
                        u = self.tree.children(x).first().copied();
                    }
                    removed += 1;
                }
            }
            edge[rep] = total;
            if branch.is_none() {
                branch = Some(self.branch(rep));
            }
        }
        let staged = WeightFn { tree: self.tree.clone(), vertex: self.vertex.clone(), edge };
        let weight = staged.restrict(&keep, None);
        Ok(Collapse { weight, removed, branch, kept: keep })
    }

    /// Weight-preserving comparison of two weights on trees with the same labels.
    pub fn approx_eq(&self, other: &WeightFn<F>, tol: f64) -> bool {
        if self.tree.n() != other.tree.n() || !self.tree.is_isomorphic(&other.tree) {
            return false;
        }
        let root_a = self.tree.root();
        let root_b = other.tree.root();
        let joined = Joined { a: self, b: other };
        joined.matches(root_a, root_b, tol)
    }
}

struct Joined<'a, F> {
    a: &'a WeightFn<F>,
    b: &'a WeightFn<F>,
}

impl<F: Field> Joined<'_, F> {
    fn matches(&self, x: usize, y: usize, tol: f64) -> bool {
        let (a, b) = (self.a, self.b);
        if !weights_near(&a.vertex[x], &b.vertex[y], tol) {
            return false;
        }
        let (kx, ky) = (a.tree.children(x), b.tree.children(y));
        if kx.len() != ky.len() {
            return false;
        }
        let mut used = vec![false; ky.len()];
        kx.iter().all(|&u| {
            let hit = ky.iter().enumerate().position(|(j, &v)| {
                !used[j] && weights_near(&a.edge[u], &b.edge[v], tol) && self.matches(u, v, tol)
            });
            hit.map(|j| used[j] = true).is_some()
        })
    }
}

pub fn check_split<F: Field>(split: &[F]) -> Result<()> {
    if split.is_empty() {
        return Err(Error::BadSplit("empty split".into()));
    }
    if let Some(t) = split.iter().find(|t| !is_positive(*t)) {
        return Err(Error::BadSplit(format!("non-positive part {:?}", t)));
    }
    let sum = split.iter().cloned().fold(F::zero(), |a, b| a + b);
    if !weights_near(&sum, &F::one(), 1e-12) {
        return Err(Error::BadSplit(format!("parts sum to {}", sum.approx())));
    }
    Ok(())
}

/// Split into `k` equal parts.
pub fn uniform_split<F: Field>(k: usize) -> Vec<F> {
    vec![F::from_ratio(1, k as i64); k]
}

/// JSON weight file: labels as keys, edges as `"u-v"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightFile {
    pub tree: TreeFile,
    #[serde(rename = "vertexWeight")]
    pub vertex_weight: BTreeMap<String, Value>,
    #[serde(rename = "edgeWeight")]
    pub edge_weight: BTreeMap<String, Value>,
}

pub fn value_to_rat(v: &Value) -> Result<BigRational> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::Parse(format!("weight {v} is not a number"))),
    };
    parse_rat(&text).ok_or_else(|| Error::Parse(format!("cannot read weight {text}")))
}

pub fn rat_to_value(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Ok(i) = q.to_integer().to_string().parse::<i64>() {
            return Value::from(i);
        }
    }
    Value::String(fmt_rat(q))
}

impl WeightFile {
    pub fn from_rational(w: &WeightFn<BigRational>) -> Result<Self> {
        let t = w.tree();
        if (1..=t.n()).any(|l| t.index_of(l).is_none()) {
            return Err(Error::InvalidTree("labels must be 1..n to write a weight file".into()));
        }
        let mut vertex_weight = BTreeMap::new();
        let mut edge_weight = BTreeMap::new();
        for v in 0..t.n() {
            vertex_weight.insert(t.label(v).to_string(), rat_to_value(w.vertex(v)));
            if let Some(p) = t.parent(v) {
                edge_weight.insert(format!("{}-{}", t.label(p), t.label(v)), rat_to_value(w.edge(v)));
            }
        }
        Ok(WeightFile { tree: t.to_file(), vertex_weight, edge_weight })
    }

    pub fn from_f64(w: &WeightFn<f64>) -> Result<Self> {
        let t = w.tree();
        let mut vertex_weight = BTreeMap::new();
        let mut edge_weight = BTreeMap::new();
        for v in 0..t.n() {
            vertex_weight.insert(t.label(v).to_string(), Value::from(*w.vertex(v)));
            if let Some(p) = t.parent(v) {
                edge_weight.insert(format!("{}-{}", t.label(p), t.label(v)), Value::from(*w.edge(v)));
            }
        }
        Ok(WeightFile { tree: t.to_file(), vertex_weight, edge_weight })
    }

    pub fn to_rational(&self) -> Result<WeightFn<BigRational>> {
        let tree = RootedTree::from_file(&self.tree)?;
        let n = tree.n();
        let mut vertex = vec![None; n];
        let mut edge: Vec<Option<BigRational>> = vec![None; n];
        for (k, v) in &self.vertex_weight {
            let label: usize = k.parse().map_err(|_| Error::Parse(format!("bad vertex key {k}")))?;
            let i = tree.index_of(label).ok_or_else(|| Error::Parse(format!("unknown vertex {k}")))?;
            vertex[i] = Some(value_to_rat(v)?);
        }
        for (k, v) in &self.edge_weight {
            let (a, b) = k.split_once('-').ok_or_else(|| Error::Parse(format!("bad edge key {k}")))?;
            let parse = |s: &str| -> Result<usize> {
                let l: usize = s.trim().parse().map_err(|_| Error::Parse(format!("bad edge key {k}")))?;
                tree.index_of(l).ok_or_else(|| Error::Parse(format!("unknown vertex in edge {k}")))
            };
            let (a, b) = (parse(a)?, parse(b)?);
            let child = if tree.parent(a) == Some(b) {
                a
            } else if tree.parent(b) == Some(a) {
                b
            } else {
                return Err(Error::Parse(format!("{k} is not an edge of the tree")));
            };
            edge[child] = Some(value_to_rat(v)?);
        }
        let root = tree.root();
        let vertex = vertex
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::Parse(format!("missing weight for vertex {}", tree.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        let edge = edge
            .into_iter()
            .enumerate()
            .map(|(i, x)| match x {
                Some(x) => Ok(x),
                None if i == root => Ok(BigRational::from_int(0)),
                None => Err(Error::Parse(format!("missing weight for edge at vertex {}", tree.label(i)))),
            })
            .collect::<Result<Vec<_>>>()?;
        WeightFn::new(tree, vertex, edge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn c3() -> WeightFn<BigRational> {
        WeightFn::path(&[rat(2, 1), rat(4, 1), rat(8, 1)], &[rat(3, 1), rat(20, 1)])
    }

    #[test]
    fn unit_lower_matches_printed_matrix() {
        let m = c3().unit_lower_representative();
        let expect = [[8, 20, 0], [1, 4, 3], [0, 1, 2]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[i][j], rat(expect[i][j], 1));
            }
        }
        let back = WeightFn::from_matrix(c3().tree().clone(), &m).unwrap();
        assert_eq!(back, c3());
    }

    #[test]
    fn path_coefficients_round_trip() {
        let (a, b) = c3().path_coefficients().unwrap();
        assert_eq!(a, vec![rat(2, 1), rat(4, 1), rat(8, 1)]);
        assert_eq!(b, vec![rat(3, 1), rat(20, 1)]);
    }

    #[test]
    fn duplicate_then_collapse_is_identity() {
        let w = c3();
        let split = vec![rat(1, 2), rat(1, 3), rat(1, 6)];
        let d = w.duplicate_branch(0, 1, &split).unwrap();
        assert_eq!(d.tree().n(), 7);
        let c1 = d.collapse_pendent_paths(1, 0.0).unwrap();
        assert_eq!(c1.removed, 0);
        let c2 = d.collapse_pendent_paths(2, 0.0).unwrap();
        assert_eq!(c2.removed, 2);
        assert_eq!(c2.weight, w);
    }

    #[test]
    fn unequal_leaves_do_not_collapse() {
        let t = RootedTree::star(2);
        let w = WeightFn::new(t, vec![rat(0, 1), rat(1, 1), rat(2, 1)], vec![rat(0, 1), rat(1, 1), rat(1, 1)]).unwrap();
        assert!(matches!(w.collapse_pendent_paths(1, 0.0), Err(Error::NotCollapsible { .. })));
        assert_eq!(w.collapsible_branches(0, 0.0).len(), 2);
    }

    #[test]
    fn bad_splits() {
        assert!(check_split(&[rat(1, 2), rat(1, 3)]).is_err());
        assert!(check_split(&[rat(3, 2), rat(-1, 2)]).is_err());
        assert!(check_split(&[rat(1, 1)]).is_ok());
    }

    #[test]
    fn file_round_trip() {
        let f = WeightFile::from_rational(&c3()).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        let back: WeightFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_rational().unwrap(), c3());
    }
}
