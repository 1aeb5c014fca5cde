//! Spread a path matrix over a hedge and compare the level formula with an eigensolve.
use hedge_iep::numeric::cluster_multiplicities;
use hedge_iep::pth::{ph_construct, ph_spectrum, small_example_path, Splits};
use hedge_iep::scalar::fmt_rat;
use hedge_iep::tree::RootedTree;

fn main() -> hedge_iep::Result<()> {
    let t = RootedTree::t_bf();
    for top in [8, 2] {
        let c = small_example_path(top);
        let w = ph_construct(&c, &t, &Splits::Uniform)?;
        for row in w.unit_lower_representative() {
            println!("  {}", row.iter().map(|x| format!("{:>5}", fmt_rat(x))).collect::<String>());
        }
        let formula = ph_spectrum(&c, &t.profile()?, 1e-7)?;
        let direct = cluster_multiplicities(&w.eigenvalues()?, 1e-7);
        println!("level formula {:?}", formula.entries());
        println!("eigensolve agrees: {}\n", direct.approx_eq(&formula, 1e-9));
    }
    Ok(())
}
