//! Rooted trees, hedges, level profiles, the subtree chain and pendent paths.
//!
//! Vertices are stored with dense internal indices `0..n`; every vertex also
//! carries an external label, which is preserved when taking induced
//! subtrees so that pieces of the subtree chain can be compared with the
//! original tree.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Parent array of the 10-vertex tree with `ℓ = (3, 2, 1)`.
pub const T_BF_PARENTS: [usize; 10] = [0, 1, 2, 1, 4, 1, 6, 2, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    labels: Vec<usize>,
    root: usize,
}

/// JSON form `{"n": …, "parent": […]}` with 1-based labels and 0 for the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFile {
    pub n: usize,
    pub parent: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HedgeProfile {
    pub height: usize,
    /// `|V_i|` for `0 ≤ i ≤ H`.
    pub level_sizes: Vec<usize>,
    /// `ℓ_1, …, ℓ_{H+1}`.
    pub ell: Vec<usize>,
}

impl HedgeProfile {
    /// Profile from `ℓ_1..ℓ_{H+1}`.
    pub fn from_ell(ell: &[usize]) -> Result<Self> {
        if ell.last() != Some(&1) {
            return Err(Error::InvalidTree("last branching number must be 1".into()));
        }
        let height = ell.len() - 1;
        let mut level_sizes = vec![0; height + 1];
        level_sizes[height] = 1;
        for i in (1..=height).rev() {
            level_sizes[i - 1] = level_sizes[i] + ell[i - 1];
        }
        Ok(HedgeProfile { height, level_sizes, ell: ell.to_vec() })
    }

    /// `ℓ_i`, zero outside `1..=H+1`.
    pub fn ell(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.ell.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.level_sizes.iter().sum()
    }

    /// `ℓ_i ≥ 2 Σ_{j>i} ℓ_j` for every `i ≥ 2`.
    pub fn satisfies_lush_decay(&self) -> bool {
        (2..=self.height + 1).all(|i| {
            let tail: usize = (i + 1..=self.height + 1).map(|j| self.ell(j)).sum();
            self.ell(i) >= 2 * tail
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChildPolicy {
    #[default]
    SmallestLabel,
    LargestLabel,
}

#[derive(Clone, Debug)]
pub struct SubtreeChain {
    /// `T^(0) ⊇ T^(1) ⊇ … ⊇ T^(H)`, labels preserved.
    pub trees: Vec<RootedTree>,
    /// Internal indices of the original tree kept in each `T^(h)`.
    pub masks: Vec<Vec<bool>>,
    /// Chosen child `v*` of each non-leaf vertex of the original tree.
    pub star_child: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendentPath {
    /// Internal indices, from the vertex next to the attach point down to a leaf.
    pub vertices: Vec<usize>,
    pub attach: usize,
}

impl RootedTree {
    fn assemble(parent: Vec<Option<usize>>, labels: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            if roots.is_empty() && n > 0 {
                return Err(Error::CycleDetected(labels[0]));
            }
            return Err(Error::MultipleRoots(roots.len()));
        }
        let root = roots[0];
        for start in 0..n {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = parent[v] {
                v = p;
                steps += 1;
                if steps > n {
                    return Err(Error::CycleDetected(labels[start]));
                }
            }
        }
        let mut children = vec![vec![]; n];
        for v in 0..n {
            if let Some(p) = parent[v] {
                children[p].push(v);
            }
        }
        for c in &mut children {
            c.sort_by_key(|&v| labels[v]);
        }
        Ok(RootedTree { parent, children, labels, root })
    }

    /// From a 1-based parent array; the root has parent 0 (or itself).
    pub fn from_parent_array(parent: &[usize]) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::InvalidTree("empty parent array".into()));
        }
        let mut par = vec![None; n];
        for (i, &p) in parent.iter().enumerate() {
            if p > n {
                return Err(Error::InvalidTree(format!("parent {p} of vertex {} out of range", i + 1)));
            }
            if p != 0 && p != i + 1 {
                par[i] = Some(p - 1);
            }
        }
        RootedTree::assemble(par, (1..=n).collect())
    }

    /// Builds from an undirected edge list on internal indices, rooted at `root`.
    pub fn from_edges(n: usize, root: usize, edges: &[(usize, usize)], labels: Vec<usize>) -> Result<Self> {
        if edges.len() + 1 != n {
            return Err(if edges.len() + 1 > n { Error::CycleDetected(labels[0]) } else { Error::Disconnected });
        }
        let mut adj = vec![vec![]; n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }
        RootedTree::assemble(parent, labels)
    }

    pub fn from_file(f: &TreeFile) -> Result<Self> {
        if f.parent.len() != f.n {
            return Err(Error::InvalidTree(format!("n = {} but {} parents", f.n, f.parent.len())));
        }
        RootedTree::from_parent_array(&f.parent)
    }

    /// Parent array indexed by label order; labels must be exactly `1..=n`.
    pub fn to_file(&self) -> TreeFile {
        let n = self.n();
        let mut parent = vec![0; n];
        for v in 0..n {
            if let Some(p) = self.parent[v] {
                parent[self.labels[v] - 1] = self.labels[p];
            }
        }
        TreeFile { n, parent }
    }

    /// Every vertex of level `i` (counted from the root) gets an as-even-as-possible
    /// share of the vertices on level `i + 1`.
    pub fn from_level_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.first() != Some(&1) {
            return Err(Error::InvalidTree("top level must hold exactly the root".into()));
        }
        let mut parent = vec![0usize];
        let mut prev_start = 1;
        for w in sizes.windows(2) {
            let (above, below) = (w[0], w[1]);
            if below < above {
                return Err(Error::InvalidTree("level sizes must not shrink towards the leaves".into()));
            }
            let base = below / above;
            let extra = below % above;
            for i in 0..above {
                let k = base + usize::from(i < extra);
                parent.extend(std::iter::repeat(prev_start + i).take(k));
            }
            prev_start += above;
        }
        RootedTree::from_parent_array(&parent)
    }

    /// Hedge with the given `ℓ_1..ℓ_{H+1}`.
    pub fn from_ell(ell: &[usize]) -> Result<Self> {
        let p = HedgeProfile::from_ell(ell)?;
        let sizes: Vec<usize> = p.level_sizes.iter().rev().copied().collect();
        RootedTree::from_level_sizes(&sizes)
    }

    pub fn single() -> Self {
        RootedTree::from_parent_array(&[0]).unwrap()
    }

    /// `P_n` rooted at an end, labels `1..n` from the root.
    pub fn path(n: usize) -> Self {
        let parent: Vec<usize> = (0..n).collect();
        RootedTree::from_parent_array(&parent).unwrap()
    }

    /// `K_{1,k}` rooted at the centre.
    pub fn star(k: usize) -> Self {
        let mut parent = vec![0];
        parent.extend(std::iter::repeat(1).take(k));
        RootedTree::from_parent_array(&parent).unwrap()
    }

    pub fn t_bf() -> Self {
        RootedTree::from_parent_array(&T_BF_PARENTS).unwrap()
    }

    /// Smallest lush hedge of height `h`, labelled chain by chain.
    pub fn lush_min(h: usize) -> Self {
        let mut sizes = vec![1usize];
        for level in 1..=h {
            let per = if level == h { 2 } else { 3 };
            sizes.push(sizes[level - 1] * per);
        }
        if h == 0 {
            return RootedTree::single();
        }
        RootedTree::from_level_sizes(&sizes).unwrap().chain_relabeled()
    }

    /// Complete `k`-ary tree of height `h`.
    pub fn perfect(k: usize, h: usize) -> Self {
        let sizes: Vec<usize> = (0..=h).map(|i| k.pow(i as u32)).collect();
        RootedTree::from_level_sizes(&sizes).unwrap()
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn index_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut l: Vec<usize> = (0..self.n()).filter(|&v| self.is_leaf(v)).collect();
        l.sort_by_key(|&v| self.labels[v]);
        l
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.parent[v].into_iter().collect();
        out.extend_from_slice(&self.children[v]);
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).filter_map(|v| self.parent[v].map(|p| (p, v))).collect()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    pub fn postorder(&self) -> Vec<usize> {
        let mut out = self.preorder();
        out.reverse();
        out
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for v in self.preorder() {
            if let Some(p) = self.parent[v] {
                d[v] = d[p] + 1;
            }
        }
        d
    }

    /// Largest distance from each vertex down to a leaf of its subtree.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n()];
        for v in self.postorder() {
            h[v] = self.children[v].iter().map(|&c| h[c] + 1).max().unwrap_or(0);
        }
        h
    }

    pub fn height(&self) -> usize {
        self.heights()[self.root]
    }

    pub fn is_hedge(&self) -> bool {
        let d = self.depths();
        let mut leaf_depths = self.leaves().into_iter().map(|v| d[v]);
        let first = leaf_depths.next().unwrap_or(0);
        leaf_depths.all(|x| x == first)
    }

    pub fn is_lush(&self) -> Result<bool> {
        if !self.is_hedge() {
            return Err(Error::NotAHedge);
        }
        let h = self.heights();
        Ok((0..self.n()).all(|v| match h[v] {
            0 => true,
            1 => self.children[v].len() >= 2,
            _ => self.children[v].len() >= 3,
        }))
    }

    pub fn profile(&self) -> Result<HedgeProfile> {
        if !self.is_hedge() {
            return Err(Error::NotAHedge);
        }
        let h = self.heights();
        let height = h[self.root];
        let mut level_sizes = vec![0; height + 1];
        for &x in &h {
            level_sizes[x] += 1;
        }
        let mut ell: Vec<usize> = (1..=height).map(|i| level_sizes[i - 1] - level_sizes[i]).collect();
        ell.push(1);
        Ok(HedgeProfile { height, level_sizes, ell })
    }

    /// Induced subtree on `keep`, which must contain the root and be closed
    /// under taking parents. Labels are carried over.
    pub fn induced(&self, keep: &[bool]) -> Result<RootedTree> {
        let map = self.index_map(keep);
        if map[self.root].is_none() {
            return Err(Error::Disconnected);
        }
        let mut parent = vec![];
        let mut labels = vec![];
        for v in 0..self.n() {
            if keep[v] {
                let p = match self.parent[v] {
                    Some(p) if keep[p] => map[p],
                    Some(_) => return Err(Error::Disconnected),
                    None => None,
                };
                parent.push(p);
                labels.push(self.labels[v]);
            }
        }
        RootedTree::assemble(parent, labels)
    }

    /// Old index → new index for the kept vertices.
    pub fn index_map(&self, keep: &[bool]) -> Vec<Option<usize>> {
        let mut next = 0;
        keep.iter()
            .map(|&k| {
                k.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }

    /// Chosen child `v*` of every non-leaf vertex.
    pub fn star_children(&self, policy: ChildPolicy) -> Vec<Option<usize>> {
        (0..self.n())
            .map(|v| match policy {
                ChildPolicy::SmallestLabel => self.children[v].first().copied(),
                ChildPolicy::LargestLabel => self.children[v].last().copied(),
            })
            .collect()
    }

    pub fn subtree_chain(&self, policy: ChildPolicy) -> Result<SubtreeChain> {
        if !self.is_hedge() {
            return Err(Error::NotAHedge);
        }
        let h = self.heights();
        let height = h[self.root];
        let star = self.star_children(policy);
        let mut trees = vec![];
        let mut masks = vec![];
        for level in 0..=height {
            let mut keep: Vec<bool> = h.iter().map(|&x| x >= level).collect();
            for v in (0..self.n()).filter(|&v| h[v] == level) {
                let mut u = v;
                while let Some(c) = star[u] {
                    keep[c] = true;
                    u = c;
                }
            }
            trees.push(self.induced(&keep)?);
            masks.push(keep);
        }
        Ok(SubtreeChain { trees, masks, star_child: star })
    }

    /// All pendent `k`-paths, ordered by attach label and then top label.
    pub fn pendent_paths(&self, k: usize) -> Vec<PendentPath> {
        let mut out = vec![];
        if k == 0 {
            return out;
        }
        for leaf in self.leaves() {
            let mut path = vec![leaf];
            let mut ok = leaf != self.root;
            while ok && path.len() < k {
                match self.parent[*path.last().unwrap()] {
                    Some(p) if p != self.root && self.children[p].len() == 1 => path.push(p),
                    _ => ok = false,
                }
            }
            if !ok {
                continue;
            }
            let top = *path.last().unwrap();
            let attach = self.parent[top].expect("non-root vertex has a parent");
            path.reverse();
            out.push(PendentPath { vertices: path, attach });
        }
        out.sort_by_key(|p| (self.labels[p.attach], self.labels[p.vertices[0]]));
        out
    }

    /// AHU encoding of the subtree rooted at `v`.
    pub fn ahu_code(&self, v: usize) -> String {
        let mut codes = vec![String::new(); self.n()];
        for u in self.postorder() {
            let mut kids: Vec<&str> = self.children[u].iter().map(|&c| codes[c].as_str()).collect();
            kids.sort_unstable();
            codes[u] = format!("({})", kids.concat());
        }
        std::mem::take(&mut codes[v])
    }

    pub fn canonical_form(&self) -> String {
        self.ahu_code(self.root)
    }

    pub fn is_isomorphic(&self, other: &RootedTree) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Same shape with labels `1..n` assigned in preorder.
    pub fn relabeled_preorder(&self) -> RootedTree {
        let order = self.preorder();
        let mut new_label = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            new_label[v] = i + 1;
        }
        self.with_labels(new_label)
    }

    /// Same shape with new labels (must be distinct).
    pub fn with_labels(&self, labels: Vec<usize>) -> RootedTree {
        RootedTree::assemble(self.parent.clone(), labels).expect("shape unchanged")
    }

    /// Labels assigned so that `T^(H)` gets `1..=H+1`, then `T^(H-1) ∖ T^(H)`
    /// in preorder, and so on down to `T^(0)`.
    pub fn chain_relabeled(&self) -> RootedTree {
        let Ok(chain) = self.subtree_chain(ChildPolicy::SmallestLabel) else {
            return self.relabeled_preorder();
        };
        let order = self.preorder();
        let mut new_label = vec![0; self.n()];
        let mut next = 1;
        for mask in chain.masks.iter().rev() {
            for &v in &order {
                if mask[v] && new_label[v] == 0 {
                    new_label[v] = next;
                    next += 1;
                }
            }
        }
        self.with_labels(new_label)
    }

    /// Uniformly random labelled tree on `n` vertices (Prüfer code), rooted at label 1.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> RootedTree {
        if n <= 2 {
            return RootedTree::path(n.max(1));
        }
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        let mut edges = vec![];
        let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        for &c in &code {
            let leaf = *leaves.iter().next().unwrap();
            leaves.remove(&leaf);
            edges.push((leaf, c));
            degree[c] -= 1;
            if degree[c] == 1 {
                leaves.insert(c);
            }
        }
        let rest: Vec<usize> = leaves.into_iter().collect();
        edges.push((rest[0], rest[1]));
        RootedTree::from_edges(n, 0, &edges, (1..=n).collect()).unwrap()
    }

    /// Random lush hedge of height `h` with at most `max_vertices` vertices
    /// (at least the minimal one). The root is labelled 1; other labels are
    /// shuffled.
    pub fn random_lush<R: Rng>(h: usize, max_vertices: usize, rng: &mut R) -> RootedTree {
        let min_size = |g: usize| -> usize {
            let mut s = 1;
            for level in 1..=g {
                s = 1 + if level == 1 { 2 } else { 3 } * s;
            }
            s
        };
        let mut parent: Vec<Option<usize>> = vec![None];
        let mut height = vec![h];
        fn grow(parent: &mut Vec<Option<usize>>, height: &mut Vec<usize>, at: usize, g: usize) {
            let v = parent.len();
            parent.push(Some(at));
            height.push(g);
            if g > 0 {
                let k = if g == 1 { 2 } else { 3 };
                for _ in 0..k {
                    grow(parent, height, v, g - 1);
                }
            }
        }
        let k = if h == 1 { 2 } else { 3 };
        if h > 0 {
            for _ in 0..k {
                grow(&mut parent, &mut height, 0, h - 1);
            }
        }
        let mut failures = 0;
        while failures < 20 {
            let v = rng.gen_range(0..parent.len());
            if height[v] == 0 {
                continue;
            }
            let g = height[v] - 1;
            if parent.len() + min_size(g) > max_vertices {
                failures += 1;
                continue;
            }
            grow(&mut parent, &mut height, v, g);
        }
        let n = parent.len();
        let mut labels: Vec<usize> = (2..=n).collect();
        labels.shuffle(rng);
        labels.insert(0, 1);
        RootedTree::assemble(parent, labels).unwrap()
    }

    /// All rooted trees on `n` vertices up to isomorphism (canonical level
    /// sequences, generated in reverse lexicographic order).
    pub fn all_rooted(n: usize) -> Vec<RootedTree> {
        if n == 0 {
            return vec![];
        }
        let mut level: Vec<usize> = (0..n).collect();
        let mut out = vec![];
        loop {
            let mut parent = vec![0usize; n];
            let mut last_at = vec![0usize; n];
            for i in 1..n {
                parent[i] = last_at[level[i] - 1] + 1;
                last_at[level[i]] = i;
            }
            out.push(RootedTree::from_parent_array(&parent).unwrap());
            let Some(p) = (1..n).rev().find(|&i| level[i] > 1) else {
                break;
            };
            let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).unwrap();
            for i in p..n {
                level[i] = level[i - p + q];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parent_arrays() {
        assert_eq!(RootedTree::from_parent_array(&[0, 3, 2]), Err(Error::CycleDetected(2)));
        assert_eq!(RootedTree::from_parent_array(&[0, 0, 1]), Err(Error::MultipleRoots(2)));
        assert!(RootedTree::from_parent_array(&[2, 1]).is_err());
        assert!(RootedTree::from_edges(4, 0, &[(0, 1), (2, 3)], vec![1, 2, 3, 4]).is_err());
    }

    #[test]
    fn level_sizes_spread_evenly() {
        let t = RootedTree::from_level_sizes(&[1, 2, 5]).unwrap();
        assert_eq!(t.children(1).len(), 3);
        assert_eq!(t.children(2).len(), 2);
    }

    #[test]
    fn lush_min_height_two_is_t_bf() {
        assert_eq!(RootedTree::lush_min(2).to_file().parent, T_BF_PARENTS.to_vec());
    }

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| RootedTree::all_rooted(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn random_lush_is_lush() {
        let mut rng = rand::rngs::mock::StepRng::new(7, 11);
        for h in 1..=3 {
            let t = RootedTree::random_lush(h, 40, &mut rng);
            assert!(t.is_lush().unwrap());
            assert_eq!(t.height(), h);
        }
    }
}
