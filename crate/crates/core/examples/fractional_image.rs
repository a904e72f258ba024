//! The extended fractional integral of τ^{δ-1} E^λ_{α,β}(τ) in closed form.
use pqml::fracderiv::{frac_image_pair, frac_image_printed_pair, ExtKernelParams};
use pqml::{QuadConfig, SeriesConfig};

fn main() -> pqml::Result<()> {
    let (cfg, qcfg) = (SeriesConfig::default(), QuadConfig::default());
    let (alpha, beta, z) = (1.0, 1.5, 0.8);
    for (delta, lam) in [(0.6, 2.0), (1.2, 2.5), (1.8, 3.2)] {
        for (p, q) in [(0.0, 0.0), (0.3, 0.7)] {
            let kp = ExtKernelParams::new(p, q)?;
            let (lhs, rhs) = frac_image_pair(delta, lam, alpha, beta, kp, z, &qcfg, &cfg)?;
            println!(
                "delta={delta} lambda={lam} p={p} q={q}: operator {:.12}  closed {:.12}  gap {:.1e}",
                lhs.value,
                rhs.value,
                (lhs.value - rhs.value).abs() / rhs.value.abs()
            );
        }
    }
    // with a free upper index c the normalisation only matches at c = λ
    let kp = ExtKernelParams::new(0.3, 0.7)?;
    for c in [2.5, 3.0] {
        let (l, r) = frac_image_printed_pair(1.2, 2.5, c, alpha, beta, kp, z, &qcfg, &cfg)?;
        println!("c={c}: {:.12} vs {:.12}", l.value, r.value);
    }
    Ok(())
}
