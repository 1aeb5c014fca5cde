//! Path cover and zero forcing numbers, checked against exhaustive search.
use hedge_iep::covers::{m_formula, path_cover_number, zero_forcing_number, Forest};
use hedge_iep::tree::RootedTree;

fn main() -> hedge_iep::Result<()> {
    let t = RootedTree::t_bf();
    let (p, cover) = path_cover_number(&t);
    let (z, forcing) = zero_forcing_number(&t);
    let labels = |vs: &[usize]| vs.iter().map(|&v| t.label(v)).collect::<Vec<_>>();
    println!("P = {p}, Z = {z}");
    for path in &cover.paths {
        println!("  path {:?}", labels(path));
    }
    println!("  forcing set {:?}", labels(&forcing));
    let f = Forest::from_tree(&t);
    println!("exhaustive: P = {}, Z = {}", f.brute_force_path_cover(), f.brute_force_zero_forcing());
    let p31 = RootedTree::lush_min(3).profile()?;
    println!("parity formula on the 31-vertex hedge: {:?}", (0..4).map(|h| m_formula(&p31, h)).collect::<Vec<_>>());
    Ok(())
}
