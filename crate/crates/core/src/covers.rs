//! Path covers and zero forcing on forests, with brute-force oracles and
//! the closed forms for the subtree chain of a lush hedge.

use serde::Serialize;

use crate::numeric::{nullity_sym, DenseMatrix};
use crate::tree::{HedgeProfile, RootedTree};
use crate::{Error, Result};

/// Largest forest accepted by [`brute_force_path_cover`].
pub const BRUTE_FORCE_CAP: usize = 24;

/// Induced subforest of a rooted tree.
#[derive(Clone, Debug)]
pub struct Forest {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCover {
    /// Each path as internal indices in walking order.
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

impl Forest {
    pub fn from_tree(t: &RootedTree) -> Self {
        Forest::induced(t, &vec![true; t.n()])
    }

    pub fn induced(t: &RootedTree, keep: &[bool]) -> Self {
        let mut adj = vec![vec![]; t.n()];
        for (p, c) in t.edges() {
            if keep[p] && keep[c] {
                adj[p].push(c);
                adj[c].push(p);
            }
        }
        for a in &mut adj {
            a.sort_by_key(|&v| t.label(v));
        }
        Forest { adj, alive: keep.to_vec(), labels: t.labels().to_vec() }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.adj.len()).filter(|&v| self.alive[v])
    }

    pub fn order(&self) -> usize {
        self.vertices().count()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertices of every component in DFS preorder, each rooted at its smallest label.
    fn components(&self) -> Vec<(Vec<usize>, Vec<Option<usize>>)> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut starts: Vec<usize> = self.vertices().collect();
        starts.sort_by_key(|&v| self.labels[v]);
        let mut out = vec![];
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut order = vec![];
            let mut parent = vec![None; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                order.push(u);
                for &v in self.adj[u].iter().rev() {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = Some(u);
                        stack.push(v);
                    }
                }
            }
            out.push((order, parent));
        }
        out
    }

    /// Minimum path cover by bottom-up greedy joining.
    pub fn path_cover(&self) -> PathCover {
        let n = self.adj.len();
        let mut chosen: Vec<Vec<usize>> = vec![vec![]; n];
        for (order, parent) in self.components() {
            let mut open = vec![false; n];
            for &v in order.iter().rev() {
                let mut kids: Vec<usize> = self.adj[v]
                    .iter()
                    .copied()
                    .filter(|&c| parent[c] == Some(v) && open[c])
                    .collect();
                kids.sort_by_key(|&c| self.labels[c]);
                for &c in kids.iter().take(2) {
                    chosen[v].push(c);
                    chosen[c].push(v);
                }
                open[v] = kids.len() < 2;
            }
        }
        let mut seen = vec![false; n];
        let mut starts: Vec<usize> = self.vertices().filter(|&v| chosen[v].len() <= 1).collect();
        starts.sort_by_key(|&v| self.labels[v]);
        let mut paths = vec![];
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut path = vec![s];
            seen[s] = true;
            let mut cur = s;
            while let Some(&next) = chosen[cur].iter().find(|&&u| !seen[u]) {
                seen[next] = true;
                path.push(next);
                cur = next;
            }
            paths.push(path);
        }
        PathCover { paths }
    }

    pub fn path_cover_number(&self) -> usize {
        self.path_cover().len()
    }

    /// Closure of `blue` under the color change rule.
    pub fn derived_set(&self, blue: &[bool]) -> Vec<bool> {
        let mut b = blue.to_vec();
        loop {
            let mut changed = false;
            for v in self.vertices() {
                if !b[v] {
                    continue;
                }
                let mut white = self.adj[v].iter().filter(|&&u| !b[u]);
                if let (Some(&u), None) = (white.next(), white.next()) {
                    b[u] = true;
                    changed = true;
                }
            }
            if !changed {
                return b;
            }
        }
    }

    pub fn is_forcing_set(&self, set: &[usize]) -> bool {
        let mut blue = vec![false; self.adj.len()];
        for &v in set {
            blue[v] = true;
        }
        let d = self.derived_set(&blue);
        self.vertices().all(|v| d[v])
    }

    /// Zero forcing set of size `P`: the first end of each cover path.
    pub fn zero_forcing_set(&self) -> Vec<usize> {
        let set: Vec<usize> = self.path_cover().paths.iter().map(|p| p[0]).collect();
        assert!(self.is_forcing_set(&set), "cover ends failed to force");
        set
    }

    /// Minimum over all edge sets of maximum degree two; exponential.
    pub fn brute_force_path_cover(&self) -> usize {
        let n = self.order();
        assert!(n <= BRUTE_FORCE_CAP, "brute force limited to {BRUTE_FORCE_CAP} vertices");
        let edges = self.edges();
        let mut deg = vec![0u8; self.adj.len()];
        let mut best = 0;
        fn go(i: usize, used: usize, edges: &[(usize, usize)], deg: &mut [u8], best: &mut usize) {
            if used + (edges.len() - i) <= *best {
                return;
            }
            if i == edges.len() {
                *best = used;
                return;
            }
            let (u, v) = edges[i];
            if deg[u] < 2 && deg[v] < 2 {
                deg[u] += 1;
                deg[v] += 1;
                go(i + 1, used + 1, edges, deg, best);
                deg[u] -= 1;
                deg[v] -= 1;
            }
            go(i + 1, used, edges, deg, best);
        }
        go(0, 0, &edges, &mut deg, &mut best);
        n - best
    }

    /// Smallest forcing set found by trying subsets in size order; exponential.
    pub fn brute_force_zero_forcing(&self) -> usize {
        let verts: Vec<usize> = self.vertices().collect();
        let n = verts.len();
        assert!(n <= BRUTE_FORCE_CAP, "brute force limited to {BRUTE_FORCE_CAP} vertices");
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let set: Vec<usize> = idx.iter().map(|&i| verts[i]).collect();
                if self.is_forcing_set(&set) {
                    return k;
                }
                let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                    break;
                };
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
            }
        }
        n
    }
}

pub fn path_cover_number(t: &RootedTree) -> (usize, PathCover) {
    let c = Forest::from_tree(t).path_cover();
    (c.len(), c)
}

pub fn zero_forcing_number(t: &RootedTree) -> (usize, Vec<usize>) {
    let s = Forest::from_tree(t).zero_forcing_set();
    (s.len(), s)
}

pub fn derived_set(t: &RootedTree, blue: &[usize]) -> Vec<usize> {
    let f = Forest::from_tree(t);
    let mut b = vec![false; t.n()];
    for &v in blue {
        b[v] = true;
    }
    let d = f.derived_set(&b);
    (0..t.n()).filter(|&v| d[v]).collect()
}

/// `Σ ℓ_i` over `i ≥ h+1` with `i ≡ h+1 (mod 2)`.
pub fn m_formula(p: &HedgeProfile, h: usize) -> usize {
    (h + 1..=p.height + 1).step_by(2).map(|i| p.ell(i)).sum()
}

/// `Σ ℓ_i` over `i ≥ h+1` with `i ≡ h+1 (mod 3)`.
pub fn mhat_formula(p: &HedgeProfile, h: usize) -> usize {
    (h + 1..=p.height + 1).step_by(3).map(|i| p.ell(i)).sum()
}

/// Whether `v` is a singleton path in some minimum path cover.
pub fn singleton_in_minimal_cover(t: &RootedTree, v: usize) -> bool {
    let mut keep = vec![true; t.n()];
    keep[v] = false;
    Forest::induced(t, &keep).path_cover_number() + 1 == Forest::from_tree(t).path_cover_number()
}

/// `(P(T^(h) ∖ (Q ∪ V̂)), P(T^(h) ∖ V̂))` for a pendent `(h+1)`-path `Q`
/// of `T^(h)` given by labels; for `h = H`, `Q` is all of `T^(H)`.
pub fn sigma_counts(t: &RootedTree, h: usize, q_labels: &[usize]) -> Result<(usize, usize)> {
    if t.height() < 2 || !t.is_lush()? {
        return Err(Error::NotLush);
    }
    let big_h = t.height();
    if h > big_h {
        return Err(Error::BadPath(format!("h = {h} exceeds the height {big_h}")));
    }
    let chain = t.subtree_chain(Default::default())?;
    let th = &chain.trees[h];
    let heights = th.heights();
    let mut q: Vec<usize> = q_labels
        .iter()
        .map(|&l| th.index_of(l).ok_or_else(|| Error::BadPath(format!("vertex {l} is not in the subtree"))))
        .collect::<Result<_>>()?;
    q.sort_unstable();
    let valid = if h == big_h {
        q.len() == th.n()
    } else {
        th.pendent_paths(h + 1).iter().any(|p| {
            let mut v = p.vertices.clone();
            v.sort_unstable();
            v == q
        })
    };
    if !valid {
        return Err(Error::BadPath(format!("{q_labels:?} is not a pendent {}-path", h + 1)));
    }
    let hat: Vec<bool> = heights.iter().map(|&x| x >= h + 2 && (x - h - 2) % 3 == 0).collect();
    let without_hat: Vec<bool> = hat.iter().map(|&x| !x).collect();
    let mut without_both = without_hat.clone();
    for &v in &q {
        without_both[v] = false;
    }
    Ok((
        Forest::induced(th, &without_both).path_cover_number(),
        Forest::induced(th, &without_hat).path_cover_number(),
    ))
}

/// Checks `null(A) ≤ P(T ∖ ∪ T_i)` for mutually independent subtrees with
/// invertible principal submatrices.
pub fn nullity_bound_check(t: &RootedTree, subtrees: &[Vec<usize>], a: &DenseMatrix, tol: f64) -> Result<bool> {
    let n = t.n();
    let mut owner = vec![None; n];
    for (i, s) in subtrees.iter().enumerate() {
        for &v in s {
            if owner[v].is_some() {
                return Err(Error::SubtreesNotIndependent);
            }
            owner[v] = Some(i);
        }
    }
    for (p, c) in t.edges() {
        if let (Some(x), Some(y)) = (owner[p], owner[c]) {
            if x != y {
                return Err(Error::SubtreesNotIndependent);
            }
        }
    }
    for (i, s) in subtrees.iter().enumerate() {
        let mut keep = vec![false; n];
        for &v in s {
            keep[v] = true;
        }
        if Forest::induced(t, &keep).components().len() != 1 {
            return Err(Error::InvalidTree(format!("subtree {i} is not connected")));
        }
        if nullity_sym(&a.principal(s), tol)? > 0 {
            return Err(Error::SubmatrixSingular(i));
        }
    }
    let rest: Vec<bool> = owner.iter().map(|o| o.is_none()).collect();
    Ok(nullity_sym(a, tol)? <= Forest::induced(t, &rest).path_cover_number())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        let tbf = RootedTree::t_bf();
        assert_eq!(path_cover_number(&tbf).0, 4);
        assert_eq!(zero_forcing_number(&tbf).0, 4);
        assert_eq!(path_cover_number(&RootedTree::path(6)).0, 1);
        assert_eq!(path_cover_number(&RootedTree::star(4)).0, 3);
        let f = Forest::from_tree(&RootedTree::star(4));
        assert_eq!(f.brute_force_zero_forcing(), 3);
        assert_eq!(f.brute_force_path_cover(), 3);
    }

    #[test]
    fn first_ends_force_exhaustively() {
        for n in 1..=11 {
            for t in RootedTree::all_rooted(n) {
                let f = Forest::from_tree(&t);
                let c = f.path_cover();
                let ends: Vec<usize> = c.paths.iter().map(|p| p[0]).collect();
                assert!(f.is_forcing_set(&ends), "{}", t.canonical_form());
            }
        }
    }

    #[test]
    fn forcing_rules() {
        let p4 = RootedTree::path(4);
        assert_eq!(derived_set(&p4, &[0]).len(), 4);
        let k13 = RootedTree::star(3);
        assert_eq!(derived_set(&k13, &[0]), vec![0]);
    }

    #[test]
    fn formulas_on_small_profiles() {
        let p = HedgeProfile::from_ell(&[9, 6, 2, 1]).unwrap();
        let got = (m_formula(&p, 0), m_formula(&p, 1), mhat_formula(&p, 1), mhat_formula(&p, 2), mhat_formula(&p, 3));
        assert_eq!(got, (11, 7, 6, 2, 1));
        let q = HedgeProfile::from_ell(&[3, 2, 1]).unwrap();
        let got = (m_formula(&q, 0), m_formula(&q, 1), mhat_formula(&q, 1), mhat_formula(&q, 2), mhat_formula(&q, 3));
        assert_eq!(got, (4, 2, 2, 1, 0));
        assert_eq!(mhat_formula(&p, 0), 10);
    }
}
