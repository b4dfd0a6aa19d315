//! Binary linear deterministic channel model and its dimension bookkeeping.
//!
//! Signals are `q`-dimensional binary vectors stored most-significant-first:
//! index 0 is the top level, the one that survives the deepest downward
//! shift. The channel applies powers of the `q x q` lower shift matrix, so a
//! signal sent through `n` bit-pipes lands in the bottom `n` levels of the
//! receiver. Feedback re-truncates the receiver output to the levels above
//! the feedback noise floor. Feedback delay is one channel use throughout;
//! the region bookkeeping does not depend on it.

use crate::{Error, Result};

/// Positive part.
pub fn pos(x: i64) -> i64 {
    x.max(0)
}

/// The six bit-pipe counts of the LD model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdParams {
    /// Direct pipes transmitter 1 -> receiver 1.
    pub n11_fwd: u32,
    /// Direct pipes transmitter 2 -> receiver 2.
    pub n22_fwd: u32,
    /// Cross pipes transmitter 2 -> receiver 1.
    pub n12: u32,
    /// Cross pipes transmitter 1 -> receiver 2.
    pub n21: u32,
    /// Feedback pipes receiver 1 -> transmitter 1.
    pub n11_fb: u32,
    /// Feedback pipes receiver 2 -> transmitter 2.
    pub n22_fb: u32,
}

/// Identifies one of the two transmitter-receiver pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum User {
    U1,
    U2,
}

impl User {
    pub fn other(self) -> User {
        match self {
            User::U1 => User::U2,
            User::U2 => User::U1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            User::U1 => 0,
            User::U2 => 1,
        }
    }
}

impl LdParams {
    pub fn new(n11_fwd: u32, n22_fwd: u32, n12: u32, n21: u32, n11_fb: u32, n22_fb: u32) -> Self {
        Self {
            n11_fwd,
            n22_fwd,
            n12,
            n21,
            n11_fb,
            n22_fb,
        }
    }

    /// Signal dimension `q`, the largest forward pipe count.
    pub fn q(&self) -> u32 {
        self.n11_fwd.max(self.n22_fwd).max(self.n12).max(self.n21)
    }

    /// Direct pipes of user `i`.
    pub fn fwd(&self, i: User) -> i64 {
        match i {
            User::U1 => self.n11_fwd as i64,
            User::U2 => self.n22_fwd as i64,
        }
    }

    /// Cross pipes into receiver `i` (interference user i suffers).
    pub fn cross_in(&self, i: User) -> i64 {
        match i {
            User::U1 => self.n12 as i64,
            User::U2 => self.n21 as i64,
        }
    }

    /// Cross pipes out of transmitter `i` (interference user i causes).
    pub fn cross_out(&self, i: User) -> i64 {
        self.cross_in(i.other())
    }

    /// Feedback pipes of user `i`.
    pub fn fb(&self, i: User) -> i64 {
        match i {
            User::U1 => self.n11_fb as i64,
            User::U2 => self.n22_fb as i64,
        }
    }
}

/// Applies the lower-shift matrix power: entry `k` of the output is entry
/// `k - shift` of the input (top levels shift toward the bottom, the lowest
/// `shift` entries fall off).
pub fn shift_down(x: &[u8], shift: usize) -> Vec<u8> {
    let q = x.len();
    let mut out = vec![0u8; q];
    for k in shift..q {
        out[k] = x[k - shift];
    }
    out
}

fn check_len(x: &[u8], q: usize) -> Result<()> {
    if x.len() != q {
        return Err(Error::LengthMismatch {
            expected: q,
            got: x.len(),
        });
    }
    Ok(())
}

/// Channel output at receiver `i`: the direct signal shifted by `q - n_ii`
/// XOR the cross signal shifted by `q - n_ij`.
pub fn ld_output(p: &LdParams, x1: &[u8], x2: &[u8], i: User) -> Result<Vec<u8>> {
    let q = p.q() as usize;
    check_len(x1, q)?;
    check_len(x2, q)?;
    let (own, other) = match i {
        User::U1 => (x1, x2),
        User::U2 => (x2, x1),
    };
    let direct = shift_down(own, (q as i64 - p.fwd(i)) as usize);
    let cross = shift_down(other, (q as i64 - p.cross_in(i)) as usize);
    Ok(direct
        .iter()
        .zip(cross.iter())
        .map(|(a, b)| a ^ b)
        .collect())
}

/// Feedback seen by transmitter `i`: the previous channel output shifted by
/// `(max(n_ii, n_ij) - fb_i)^+`, keeping the `min(fb_i, max(n_ii, n_ij))`
/// least significant levels.
pub fn ld_feedback(p: &LdParams, y_prev: &[u8], i: User) -> Result<Vec<u8>> {
    let q = p.q() as usize;
    check_len(y_prev, q)?;
    let span = p.fwd(i).max(p.cross_in(i));
    let shift = pos(span - p.fb(i)) as usize;
    let keep = p.fb(i).min(span) as usize;
    let shifted = shift_down(y_prev, shift);
    Ok(shifted[q - keep..].to_vec())
}

/// Per-user signal-space dimensions (converse bookkeeping plus the
/// achievability splits `q1 + q2 + q3 = max(n_ii, n_ji)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdSignalDims {
    /// Bits observed by both receivers.
    pub dim_c: i64,
    /// Bits observed only at the intended receiver.
    pub dim_p: i64,
    /// Bits observed only at the other receiver.
    pub dim_d: i64,
    /// Part of `dim_d` above the other pair's feedback noise floor.
    pub dim_df: i64,
    pub dim_dg: i64,
    /// Part of `dim_c` above the other pair's feedback noise floor.
    pub dim_cf: i64,
    pub dim_cg: i64,
    /// Bits landing at the other receiver clear of its private signal.
    pub dim_u: i64,
    /// Receiver-output levels that survive into the own feedback link.
    pub dim_fb_y: i64,
    /// Receiver-output levels below the own feedback noise floor.
    pub dim_g_y: i64,
    /// Split observed above noise at both the other receiver and transmitter.
    pub q1: i64,
    /// Split observed above noise at the other receiver only.
    pub q2: i64,
    /// Private split.
    pub q3: i64,
}

/// Evaluates every dimension formula for one user.
pub fn signal_dims_for(p: &LdParams, i: User) -> LdSignalDims {
    let j = i.other();
    let n_ii = p.fwd(i);
    let n_jj = p.fwd(j);
    let n_ji = p.cross_out(i); // pipes from tx i into rx j
    let n_ij = p.cross_in(i); // pipes from tx j into rx i
    let fb_i = p.fb(i);
    let fb_j = p.fb(j);

    let dim_c = n_ii.min(n_ji);
    let dim_p = pos(n_ii - n_ji);
    let dim_d = pos(n_ji - n_ii);

    let noise_gap_j = pos(n_jj.max(n_ji) - fb_j);
    let dim_df = pos(n_ji - n_ii).min(pos(
        fb_j - n_ii - pos(n_jj - n_ji).min(n_ij) - pos(pos(n_jj - n_ij) - n_ji),
    ));
    let dim_dg = dim_d - dim_df;

    let dim_cf_df = pos(fb_j.min(n_jj.max(n_ji)) - pos(n_jj - n_ji));
    let dim_cf = dim_cf_df - dim_df;
    let dim_cg = dim_c - dim_cf;

    let dim_u = n_jj.min(n_ij) - pos(n_jj - n_ji).min(n_ij) + pos(n_ji - n_jj);

    let dim_fb_y = fb_i.min(n_ii.max(n_ij));
    let dim_g_y = pos(n_ii.max(n_ij) - fb_i);

    let q1 = pos(n_ji - noise_gap_j);
    let q2 = n_ji.min(noise_gap_j);
    let q3 = pos(n_ii - n_ji);

    LdSignalDims {
        dim_c,
        dim_p,
        dim_d,
        dim_df,
        dim_dg,
        dim_cf,
        dim_cg,
        dim_u,
        dim_fb_y,
        dim_g_y,
        q1,
        q2,
        q3,
    }
}

/// Dimension bookkeeping for both users.
pub fn signal_dims(p: &LdParams) -> (LdSignalDims, LdSignalDims) {
    (signal_dims_for(p, User::U1), signal_dims_for(p, User::U2))
}

impl LdSignalDims {
    /// Structural identities every parameter draw must satisfy.
    pub fn check(&self, p: &LdParams, i: User) {
        let q = p.q() as i64;
        assert!(self.dim_c + self.dim_p + self.dim_d <= q);
        assert_eq!(self.dim_df + self.dim_dg, self.dim_d);
        assert_eq!(self.dim_cf + self.dim_cg, self.dim_c);
        assert_eq!(self.q1 + self.q2 + self.q3, p.fwd(i).max(p.cross_out(i)));
        assert_eq!(self.q1 + self.q2, p.cross_out(i));
        // At most one of the private/invisible parts exists.
        assert!(self.dim_p == 0 || self.dim_d == 0);
        for d in [
            self.dim_c, self.dim_p, self.dim_d, self.dim_df, self.dim_dg, self.dim_cf,
            self.dim_cg, self.dim_u, self.dim_fb_y, self.dim_g_y, self.q1, self.q2, self.q3,
        ] {
            assert!((0..=q).contains(&d), "dimension {d} outside [0, {q}]");
        }
    }
}

/// Aligned-text influence map used by the `ld-trace` CLI subcommand.
pub fn trace_text(p: &LdParams) -> String {
    let q = p.q() as usize;
    let mut out = String::new();
    out.push_str(&format!(
        "q = {}   (n11 {}, n22 {}, n12 {}, n21 {}, fb11 {}, fb22 {})\n",
        q, p.n11_fwd, p.n22_fwd, p.n12, p.n21, p.n11_fb, p.n22_fb
    ));
    for (name, i) in [("tx1", User::U1), ("tx2", User::U2)] {
        let dims = signal_dims_for(p, i);
        out.push_str(&format!(
            "{name}: dims C={} P={} D={} DF={} CF={} U={}  splits q1={} q2={} q3={}\n",
            dims.dim_c, dims.dim_p, dims.dim_d, dims.dim_df, dims.dim_cf, dims.dim_u,
            dims.q1, dims.q2, dims.q3
        ));
        out.push_str("  level   own-rx   other-rx\n");
        for k in 1..=q {
            let own = k as i64 + (q as i64 - p.fwd(i));
            let other = k as i64 + (q as i64 - p.cross_out(i));
            let fmt = |lvl: i64| {
                if lvl <= q as i64 {
                    format!("{lvl:>6}")
                } else {
                    format!("{:>6}", "-")
                }
            };
            out.push_str(&format!("  {k:>5}   {}   {}\n", fmt(own), fmt(other)));
        }
    }
    for (name, i) in [("fb1", User::U1), ("fb2", User::U2)] {
        let span = p.fwd(i).max(p.cross_in(i));
        let keep = p.fb(i).min(span);
        let shift = pos(span - p.fb(i));
        out.push_str(&format!(
            "{name}: keeps {keep} level(s), shift {shift} (receiver span {span})\n"
        ));
    }
    out
}
