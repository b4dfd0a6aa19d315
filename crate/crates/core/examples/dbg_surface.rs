use icnf_core::gap::*;
use std::time::Instant;

fn main() {
    let alphas: Vec<f64> = (0..=60).map(|k| k as f64 * 0.05).collect();
    let betas: Vec<f64> = (0..=40).map(|k| k as f64 * 0.05).collect();
    let t0 = Instant::now();
    let snr = 10f64.powf(6.0); // 60 dB
    let surf = symmetric_gap_surface(snr, &alphas, &betas);
    let (a, b, v) = surface_max(&surf, &alphas, &betas);
    println!("60 dB: max {v:.4} bits at alpha={a:.2} beta={b:.2}  ({:?})", t0.elapsed());
    let max_all = surf.iter().flatten().cloned().fold(f64::MIN, f64::max);
    println!("surface max overall {max_all:.4}; everywhere <= 4.4: {}", max_all <= 4.4);
    // spot values
    for (ai, bi) in [(21, 24), (0, 0), (60, 40), (20, 0), (40, 24)] {
        println!("  alpha={:.2} beta={:.2} delta={:.4}", alphas[ai], betas[bi], surf[ai][bi]);
    }
    let t1 = Instant::now();
    let snr80 = 10f64.powf(8.0);
    let surf80 = symmetric_gap_surface(snr80, &alphas, &betas);
    let (a8, b8, v8) = surface_max(&surf80, &alphas, &betas);
    println!("80 dB: max {v8:.4} at alpha={a8:.2} beta={b8:.2} ({:?}); |dmax| = {:.4}", t1.elapsed(), (v8 - v).abs());
}
