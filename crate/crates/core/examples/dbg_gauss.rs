use icnf_core::fm::*;
use icnf_core::gaussian::*;
use icnf_core::geometry::vertices_of_rows;
use icnf_core::ld_region::ThetaVector;
use icnf_core::rational::{rat_from_f64, Rational};

fn snap(t: &ThetaVector<f64>) -> ThetaVector<Rational> {
    ThetaVector { th: std::array::from_fn(|l| [rat_from_f64(t.th[l][0]), rat_from_f64(t.th[l][1])]) }
}

fn main() {
    trait RF { fn rf64(&self) -> f64; }
    impl RF for Rational { fn rf64(&self) -> f64 { icnf_core::rational::rat_to_f64(self) } }
    let mut state = 0xabcdef0123456789u64;
    let mut uni = || {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut bad3 = 0; let mut bad5 = 0; let mut proj_mismatch = 0; let mut worst3: f64 = 0.0;
    for trial in 0..400 {
        let p = GaussParams::new(
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
            10f64.powf(uni() * 6.0), 10f64.powf(uni() * 6.0),
        ).unwrap();
        let rho = uni() * p.rho_max();
        let c = CodingPoint::new(&p, rho, uni(), uni()).unwrap();
        let tf = theta_gaussian(&p, &c);
        let t = snap(&tf);
        // 3-term vs 10-term (rational, exact)
        let full = sum_rate_terms_full(&t);
        let simp = sum_rate_terms_simplified(&t);
        let m_full = full.iter().min().unwrap();
        let m_simp = simp.iter().min().unwrap();
        if m_simp != m_full {
            bad3 += 1;
            let gap = (m_simp - m_full).rf64();
            if gap.abs() > worst3.abs() { worst3 = gap; }
            if bad3 <= 3 { println!("3-term mismatch trial {trial}: simp {} full {} p={p:?} c={c:?}", m_simp.rf64(), m_full.rf64()); }
        }
        // 5-term (theorem bound list) vs 10-term
        let g = |l: usize, i: usize| t.get(l, i).clone();
        let five = [
            g(2,1) + g(4,2), g(4,1) + g(2,2),
            g(1,1) + g(4,1) + g(1,2) + g(7,2),
            g(1,1) + g(5,1) + g(1,2) + g(5,2),
            g(1,1) + g(7,1) + g(1,2) + g(4,2),
        ];
        if five.iter().min().unwrap() != m_full { bad5 += 1; }
        // FM projection vs closed form (exact rational)
        if trial < 60 {
            let proj = vertices_of_rows(&project_raw(&t), 0.0);
            let rows_cf: Vec<(i64,i64,Rational)> = closed_form_region(&t).bounds.iter()
                .map(|b| (b.c1 as i64, b.c2 as i64, b.v.clone())).collect();
            if proj != vertices_of_rows(&rows_cf, 0.0) { proj_mismatch += 1; }
        }
    }
    println!("3-term vs 10-term mismatches: {bad3}/400 (worst {worst3:.6})");
    println!("5-term vs 10-term mismatches: {bad5}/400");
    println!("projection vs closed-form mismatches: {proj_mismatch}/60");
}
