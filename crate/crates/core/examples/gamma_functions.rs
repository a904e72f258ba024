//! Gamma, reciprocal gamma, Pochhammer symbols and the classical beta function.
use pqml::extbeta::beta_classical;
use pqml::numcore::{gamma, log_gamma, pochhammer, rgamma};

fn main() -> pqml::Result<()> {
    for x in [0.5, 1.0, 4.7, 10.2, -2.5] {
        println!("gamma({x}) = {:.15e}", gamma(x)?);
    }
    // 1/Γ vanishes at the poles instead of failing
    for x in [0.0, -1.0, -3.0, 2.0] {
        println!("1/gamma({x}) = {}", rgamma(x));
    }
    println!("ln gamma(200) = {}", log_gamma(200.0)?);
    println!("(1.5)_4 = {}", pochhammer(1.5, 4));
    println!("B(2, 3) = {}", beta_classical(2.0, 3.0)?);
    Ok(())
}
