//! Solve for the completely rigid point and list multiplicities on the 7654-vertex hedge.
use hedge_iep::rigid::{rigid_multiplicity_list, solve_rigid};
use hedge_iep::tree::HedgeProfile;

fn main() -> hedge_iep::Result<()> {
    let sol = solve_rigid(0)?;
    for (name, v) in sol.named_values() {
        println!("{name:>9} = {:.12}  = {}", v.to_f64(), v);
    }
    println!("routes differ by at most {:e}", sol.max_route_gap);
    let p = HedgeProfile::from_ell(&[2187, 1458, 486, 162, 54, 18, 6, 2, 1])?;
    let list: Vec<usize> = rigid_multiplicity_list(&sol, &p)?.iter().map(|e| e.multiplicity).collect();
    println!("{list:?} (sum {})", list.iter().sum::<usize>());
    Ok(())
}
