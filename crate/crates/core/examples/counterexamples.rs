//! Critical multiplicity lists and the two counterexample certificates.
use hedge_iep::lambda::cubic_family;
use hedge_iep::pth::{critical_check, splitting_counterexample, zero_one_counterexample_check};
use hedge_iep::repro::zero_one_tree;
use hedge_iep::scalar::rat;
use hedge_iep::tree::RootedTree;

fn main() -> hedge_iep::Result<()> {
    let t31 = RootedTree::lush_min(3);
    println!("witness {:?}", critical_check(&t31, &[11, 7, 6, 2, 2, 1, 1, 1])?);
    let split = splitting_counterexample(&t31, &cubic_family(&rat(2, 5)))?;
    println!("m = {:?}, m' = {:?}, certified = {}", split.m, split.m_prime, split.certifies());
    let z = zero_one_counterexample_check(&zero_one_tree())?;
    println!("child counts {:?}, list {:?}, contradiction = {}", z.child_counts, z.critical_list, z.contradiction);
    Ok(())
}
