//! Duplicating a branch adds copies of its spectrum; collapsing undoes it.
use hedge_iep::numeric::cluster_multiplicities;
use hedge_iep::scalar::rat;
use hedge_iep::weights::WeightFn;

fn main() -> hedge_iep::Result<()> {
    let c = WeightFn::path(&[rat(2, 1), rat(4, 1), rat(8, 1)], &[rat(3, 1), rat(20, 1)]);
    let root = c.tree().root();
    let child = c.tree().children(root)[0];
    let dup = c.duplicate_branch(root, child, &[rat(1, 3), rat(2, 3)])?;
    println!("before: {:?}", cluster_multiplicities(&c.eigenvalues()?, 1e-7).entries());
    println!("after:  {:?}", cluster_multiplicities(&dup.eigenvalues()?, 1e-7).entries());
    let back = dup.collapse_pendent_paths(2, 0.0)?;
    println!("collapse restores the path: {}", back.weight.approx_eq(&c, 1e-12));
    Ok(())
}
