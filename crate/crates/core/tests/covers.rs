use hedge_iep::covers::{BRUTE_FORCE_CAP, path_cover_number, singleton_in_minimal_cover, zero_forcing_number, Forest};
use hedge_iep::numeric::{cluster_multiplicities, DEFAULT_CLUSTER_TOL};
use hedge_iep::pth::{ph_construct, small_example_path, Splits};
use hedge_iep::scalar::rat;
use hedge_iep::tree::RootedTree;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn agree(t: &RootedTree) {
    let f = Forest::from_tree(t);
    let (p, cover) = path_cover_number(t);
    let (z, forcing) = zero_forcing_number(t);
    assert_eq!(cover.len(), p);
    assert_eq!(forcing.len(), z);
    assert!(f.is_forcing_set(&forcing));
    assert_eq!((p, z), (f.brute_force_path_cover(), f.brute_force_zero_forcing()), "{}", t.canonical_form());
}

#[test]
fn exhaustive_through_twelve_vertices() {
    for n in 1..=12 {
        RootedTree::all_rooted(n).iter().for_each(agree);
    }
}

#[test]
fn random_trees_up_to_the_brute_force_cap() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..150 {
        let n = rng.gen_range(13..=BRUTE_FORCE_CAP);
        agree(&RootedTree::random(n, &mut rng));
    }
}

#[test]
fn singletons_carry_the_top_multiplicity_eigenvalue() {
    let t = RootedTree::t_bf();
    let w = ph_construct(&small_example_path(2), &t, &Splits::Uniform).unwrap();
    let spec = cluster_multiplicities(&w.eigenvalues().unwrap(), DEFAULT_CLUSTER_TOL);
    let top = path_cover_number(&t).0;
    assert_eq!(spec.multiplicity_of(&2.0, 1e-9), top);
    let singles: Vec<usize> = (0..t.n()).filter(|&v| singleton_in_minimal_cover(&t, v)).collect();
    assert!(!singles.is_empty());
    for v in singles {
        assert_eq!(w.vertex(v), &rat(2, 1), "vertex {}", t.label(v));
    }
}
