//! Classical, one-parameter and two-parameter extended beta functions.
use pqml::extbeta::{beta_classical, beta_p, beta_pq};
use pqml::QuadConfig;

fn main() -> pqml::Result<()> {
    let cfg = QuadConfig::default();
    let (x, y) = (1.5, 2.5);
    println!("B(x,y)            = {:.15}", beta_classical(x, y)?);
    for p in [0.0, 0.1, 0.5, 1.0, 2.0] {
        let one = beta_p(x, y, p, &cfg)?;
        let two = beta_pq(x, y, p, 2.0 * p, &cfg)?;
        println!("p={p:<4} beta_p = {:.15}   beta_pq(q=2p) = {:.15}", one.value, two.value);
    }
    // the two-parameter kernel is symmetric under (x,p) <-> (y,q)
    let a = beta_pq(x, y, 0.3, 0.8, &cfg)?.value;
    let b = beta_pq(y, x, 0.8, 0.3, &cfg)?.value;
    println!("symmetry gap: {:.1e}", (a - b).abs() / a);
    Ok(())
}
