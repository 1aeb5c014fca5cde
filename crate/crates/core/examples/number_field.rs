//! Exact arithmetic in the degree-six field generated by xi.
use hedge_iep::xi::{certify_interval, irreducibility_witness, Xi};

fn main() {
    let xi = Xi::xi();
    let a = xi.clone() * xi.clone() - Xi::from_ints(&[1], 3);
    let inv = a.inverse().expect("nonzero");
    println!("xi = {:.15}", xi.to_f64());
    println!("a = xi^2 - 1/3 = {a}, sign {:?}", a.signum());
    println!("1/a = {inv}");
    println!("a * (1/a) = {}", a * inv);
    println!("Sturm counts {:?}, irreducible mod {:?}", certify_interval(), irreducibility_witness());
}
