//! Resultants of remainder polynomials with their trivial factors removed.
use hedge_iep::rigid::{double_root_exclusion, simplify_resultant, VAR_NAMES};

fn main() -> hedge_iep::Result<()> {
    for (a, b) in [(3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (4, 8)] {
        let s = simplify_resultant(a, b)?;
        let shown = if s.reduced.total_degree() <= 2 { s.reduced.display(&VAR_NAMES) } else { format!("degree {}", s.reduced.total_degree()) };
        println!("r'({a},{b}) = {shown}   removed {:?}", s.removed);
    }
    let d = double_root_exclusion()?;
    println!("r8(R4) lower-left / trivial product = {}", d.ratio);
    Ok(())
}
