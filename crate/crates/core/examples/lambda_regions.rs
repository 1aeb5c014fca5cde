//! Classify five values into a region and build the path matrices `C_n`.
use hedge_iep::lambda::LambdaTuple;
use hedge_iep::scalar::{fmt_rat, rat};

fn main() -> hedge_iep::Result<()> {
    let lam = LambdaTuple::new([rat(2, 5), rat(37, 63), rat(1, 3), rat(1, 9), rat(8, 7)])?;
    println!("region {:?}", lam.region);
    let (a, b) = lam.abc(6)?;
    println!("a = {:?}", a.iter().map(fmt_rat).collect::<Vec<_>>());
    println!("b = {:?}", b.iter().map(fmt_rat).collect::<Vec<_>>());
    for (i, ev) in lam.level_spectra(6)?.iter().enumerate() {
        println!("sigma(C_{}) = {ev:.6?}", i + 1);
    }
    println!("negated tuple lies in region {:?}", lam.negated()?.region);
    Ok(())
}
