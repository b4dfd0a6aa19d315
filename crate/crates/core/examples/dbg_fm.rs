use icnf_core::fm::*;
use icnf_core::geometry::vertices_of_rows;
use icnf_core::ld::LdParams;
use icnf_core::ld_region::{ld_capacity_region, theta_ld, ThetaVector};
use icnf_core::rational::{rat_int, Rational};
use std::time::Instant;

fn main() {
    // 1) Structured random theta: projection == closed form.
    let mut state = 0x8899aabbccddeeffu64;
    let mut next = || {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        (state % 13) as i64
    };
    let mut mismatches = 0;
    for _ in 0..2000 {
        let mut v = [[0i64; 2]; 7];
        for i in 0..2 {
            v[0][i] = next(); v[1][i] = next(); v[2][i] = next(); v[3][i] = next();
            v[4][i] = v[3][i].max(v[2][i]) + next() % 4;
            v[5][i] = v[3][i] + next() % 5;
            v[6][i] = v[5][i].max(v[2][i]) + next() % 4;
        }
        let t = ThetaVector { th: std::array::from_fn(|l| [rat_int(v[l][0]), rat_int(v[l][1])]) };
        let proj = vertices_of_rows(&project_raw(&t), 0.0);
        let rows_cf: Vec<(i64, i64, Rational)> = closed_form_region(&t).bounds.iter()
            .map(|b| (b.c1 as i64, b.c2 as i64, b.v.clone())).collect();
        let cf = vertices_of_rows(&rows_cf, 0.0);
        if proj != cf { mismatches += 1; if mismatches < 4 { println!("MISMATCH theta={v:?}\n  proj={proj:?}\n  cf={cf:?}"); } }
    }
    println!("structured-theta mismatches: {mismatches}/2000");

    // 2) Timing: FM grid cases.
    let t0 = Instant::now();
    let mut bad = 0;
    let mut count = 0;
    for n11 in 0..6u32 { for n22 in 0..6 { for n12 in 0..6 { for n21 in 0..6 {
        let p = LdParams::new(n11, n22, n12, n21, (n11+n12) / 2, (n22+n21) / 2);
        let th = theta_ld(&p);
        let proj = vertices_of_rows(&project_raw(&th), 0.0);
        let reg = ld_capacity_region(&p);
        let rows: Vec<(i64,i64,Rational)> = reg.bounds.iter().map(|b| (b.c1 as i64, b.c2 as i64, b.v.clone())).collect();
        let thm = vertices_of_rows(&rows, 0.0);
        if proj != thm { bad += 1; if bad < 4 { println!("GRID MISMATCH {p:?}\n proj={proj:?}\n thm={thm:?}"); } }
        count += 1;
    }}}}
    println!("grid cases: {count}, mismatches: {bad}, elapsed {:?} ({:?}/case)", t0.elapsed(), t0.elapsed() / count);
}
