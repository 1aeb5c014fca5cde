//! Gap vectors along the height-three family and the failure of convexity.
use hedge_iep::pth::{cubic_family_spectrum, gap_vector, label_sorted, t31_constraints_check};
use hedge_iep::scalar::{fmt_rat, rat};

fn main() -> hedge_iep::Result<()> {
    let ell = [9, 6, 2, 1];
    let s1 = cubic_family_spectrum(&rat(2, 5), &ell)?.values();
    let s2 = cubic_family_spectrum(&rat(1, 2), &ell)?.values();
    for s in [&s1, &s2] {
        let g = gap_vector(s)?;
        let rep = t31_constraints_check(&label_sorted(s))?;
        println!("gaps {:?} constraints {:?}", g.iter().map(fmt_rat).collect::<Vec<_>>(), rep.holds(0.0));
    }
    let mid: Vec<_> = s1.iter().zip(&s2).map(|(a, b)| (a + b) / rat(2, 1)).collect();
    let rep = t31_constraints_check(&label_sorted(&mid))?;
    println!("midpoint: cubic residual {}", fmt_rat(&rep.cubic));
    Ok(())
}
