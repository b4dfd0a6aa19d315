use icnf_core::gap::*;
use icnf_core::gaussian::*;

fn main() {
    let mut state = 0x1111_2222_3333_4444u64;
    let mut uni = || {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for trial in 0..40 {
        let p = GaussParams::new(
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
        ).unwrap();
        let r = delta(&p).unwrap();
        if r.delta > 4.4 {
            println!("trial {trial}: delta {}  case {}  p = {p:?}", r.delta, r.case_label);
            println!("  report: {r:?}");
            let ev = classify_events(&p);
            println!("  events: {ev:?}");
            for rho in [0.0, 0.0155, 0.5, 1.0] {
                let k = kappa_values(&p, rho).unwrap();
                println!("  rho={rho}: k7={:?} k1={:?} k4={} k5={} k6={}", k.k7, k.k1, k.k4, k.k5, k.k6);
            }
            let c = CodingPoint { rho: r.rho, mu1: r.mu1, mu2: r.mu2 };
            println!("  ach = {:?}", achievable_bounds(&p, &c));
            break;
        }
    }
}
