//! Build hedges, read their level profiles and test lushness.
use hedge_iep::tree::RootedTree;
use rand::SeedableRng;

fn main() -> hedge_iep::Result<()> {
    for h in 2..=5 {
        let t = RootedTree::lush_min(h);
        let p = t.profile()?;
        println!("smallest lush hedge of height {h}: {} vertices, ell = {:?}", t.n(), p.ell);
    }
    let t = RootedTree::t_bf();
    println!("T_BF level sizes {:?}, lush = {}", t.profile()?.level_sizes, t.is_lush()?);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let r = RootedTree::random_lush(3, 40, &mut rng);
    println!("random lush hedge: {} vertices, canonical form {}", r.n(), r.canonical_form());
    println!("rooted trees on 1..=8 vertices: {:?}", (1..=8).map(|n| RootedTree::all_rooted(n).len()).collect::<Vec<_>>());
    Ok(())
}
