//! Construct a matrix on a random lush hedge, then recover its tuple by collapsing.
use hedge_iep::lambda::sample_region;
use hedge_iep::pth::{ph_construct, random_splits, recognize, recognize_search};
use hedge_iep::tree::RootedTree;
use rand::SeedableRng;

fn main() -> hedge_iep::Result<()> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let t = RootedTree::random_lush(3, 40, &mut rng);
    let lam = sample_region(9, &mut rng);
    let w = ph_construct(&lam.build_c(4)?, &t, &random_splits(&t, &mut rng))?;
    let exact = recognize(&w, &lam, 0.0)?;
    println!("exact cascade: PH member = {}, recovered {:?}", exact.ph_member, exact.recovered.values());
    let found = recognize_search(&w.to_f64(), 1e-9)?;
    println!("{} assignments pass from the spectrum alone", found.len());
    let mut bad = w.to_f64();
    let leaf = t.leaves()[0];
    bad.set_edge(leaf, bad.edge(leaf) * 1.01);
    println!("perturbed matrix rejected: {}", recognize_search(&bad, 1e-9).is_err());
    Ok(())
}
