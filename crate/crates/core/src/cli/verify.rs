use std::collections::BTreeSet;

use crate::bijections::{
    d_to_do, d_to_o, distinct_odd_to_sc, do_to_d, o_to_d, phi_inverse, phi_verified,
    sc_to_distinct_odd,
};
use crate::classes::{self, ClassId};
use crate::error::Result;
use crate::qseries::{nu_series, p_nu_table, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Class sizes agree with each other and with p_ν(n).
    Counts,
    /// Every bijection is inverted by its partner and lands in its class.
    Roundtrips,
    /// Series coefficients are nonnegative and stable under truncation.
    Series,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Counts => "counts",
            Check::Roundtrips => "roundtrips",
            Check::Series => "series",
        }
    }

    pub fn default_max_n(self) -> u64 {
        match self {
            Check::Roundtrips => 25,
            Check::Counts | Check::Series => 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: u64,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub check: Check,
    pub rows: Vec<VerifyRow>,
    /// First failure in full, if any.
    pub counterexample: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Runs `check` for every n in `0..=max_n`; rows are sorted by n.
pub fn run_check(check: Check, max_n: u64) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    let mut counterexample = None;
    let mut record = |n: u64, outcome: std::result::Result<String, String>| match outcome {
        Ok(detail) => rows.push(VerifyRow {
            n,
            pass: true,
            detail,
        }),
        Err(why) => {
            if counterexample.is_none() {
                counterexample = Some(format!("{} n={n}: {why}", check.as_str()));
            }
            rows.push(VerifyRow {
                n,
                pass: false,
                detail: why,
            });
        }
    };
    match check {
        Check::Counts => {
            let pnu = p_nu_table(max_n as usize)?;
            for n in 0..=max_n {
                record(n, counts_row(n, pnu[n as usize]));
            }
        }
        Check::Roundtrips => {
            for n in 0..=max_n {
                record(n, roundtrip_row(n));
            }
        }
        Check::Series => {
            let lo = nu_series(Sign::Minus, max_n as usize)?;
            let mid = nu_series(Sign::Minus, max_n as usize + 10)?;
            let hi = nu_series(Sign::Minus, max_n as usize + 50)?;
            for n in 0..=max_n {
                let k = n as usize;
                let exact = nu_series(Sign::Minus, k)?.coeff(k);
                let seen = [exact, lo.coeff(k), mid.coeff(k), hi.coeff(k)];
                let outcome = if seen.iter().any(|&c| c != exact) {
                    Err(format!(
                        "coefficient of q^{n} varies with truncation: {seen:?}"
                    ))
                } else if exact < 0 {
                    Err(format!("coefficient of q^{n} is negative: {exact}"))
                } else {
                    Ok(exact.to_string())
                };
                record(n, outcome);
            }
        }
    }
    Ok(VerifyReport {
        check,
        rows,
        counterexample,
    })
}

fn counts_row(n: u64, pnu: u64) -> std::result::Result<String, String> {
    let counts = ClassId::ALL.map(|c| classes::count(c, n));
    let detail = format!(
        "O={} S={} D={} DO={} pnu={pnu}",
        counts[0], counts[1], counts[2], counts[3]
    );
    if counts.iter().all(|&c| c == pnu) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn roundtrip_row(n: u64) -> std::result::Result<String, String> {
    let fail = |what: String| Err(what);
    let graphs = classes::enumerate_o(n);
    let mut phi_images = BTreeSet::new();
    for g in &graphs {
        let s = phi_verified(g).map_err(|e| format!("phi({g}): {e}"))?;
        if s.weight() != 2 * g.weight() - 1 {
            return fail(format!("phi({g}) = {s} has weight {}", s.weight()));
        }
        let back = phi_inverse(&s).map_err(|e| format!("phi_inverse({s}): {e}"))?;
        if back != *g {
            return fail(format!("phi_inverse(phi({g})) = {back}"));
        }
        let d = o_to_d(g).map_err(|e| format!("o_to_d({g}): {e}"))?;
        if !classes::is_in_d(&d, n) {
            return fail(format!("o_to_d({g}) = {d} is not in D"));
        }
        let g2 = d_to_o(&d).map_err(|e| format!("d_to_o({d}): {e}"))?;
        if g2 != *g {
            return fail(format!("d_to_o(o_to_d({g})) = {g2}"));
        }
        let via_d = d_to_do(&d).map_err(|e| format!("d_to_do({d}): {e}"))?;
        let via_s = sc_to_distinct_odd(&s).map_err(|e| format!("sc_to_distinct_odd({s}): {e}"))?;
        if via_d != via_s {
            return fail(format!(
                "square fails at {g}: d_to_do gives {via_d}, sc_to_distinct_odd gives {via_s}"
            ));
        }
        if !classes::is_in_do(&via_d, n) {
            return fail(format!("d_to_do({d}) = {via_d} is not in DO"));
        }
        let d2 = do_to_d(&via_d).map_err(|e| format!("do_to_d({via_d}): {e}"))?;
        if d2 != d {
            return fail(format!("do_to_d(d_to_do({d})) = {d2}"));
        }
        let s2 =
            distinct_odd_to_sc(&via_s).map_err(|e| format!("distinct_odd_to_sc({via_s}): {e}"))?;
        if s2 != s {
            return fail(format!(
                "distinct_odd_to_sc(sc_to_distinct_odd({s})) = {s2}"
            ));
        }
        if !phi_images.insert(s.clone()) {
            return fail(format!("phi is not injective: {s} is hit twice"));
        }
    }
    let targets: BTreeSet<_> = classes::enumerate_s(n).into_iter().collect();
    if phi_images != targets {
        let missing: Vec<String> = targets
            .difference(&phi_images)
            .map(|p| p.to_string())
            .collect();
        return fail(format!("phi misses S members: {}", missing.join(" ")));
    }
    for p in &targets {
        let g = phi_inverse(p).map_err(|e| format!("phi_inverse({p}): {e}"))?;
        let p2 = phi_verified(&g).map_err(|e| format!("phi({g}): {e}"))?;
        if p2 != *p {
            return fail(format!("phi(phi_inverse({p})) = {p2}"));
        }
    }
    for p in classes::enumerate_do(n) {
        let d = do_to_d(&p).map_err(|e| format!("do_to_d({p}): {e}"))?;
        let p2 = d_to_do(&d).map_err(|e| format!("d_to_do({d}): {e}"))?;
        if p2 != p {
            return fail(format!("d_to_do(do_to_d({p})) = {p2}"));
        }
    }
    for p in classes::enumerate_d(n) {
        let g = d_to_o(&p).map_err(|e| format!("d_to_o({p}): {e}"))?;
        let p2 = o_to_d(&g).map_err(|e| format!("o_to_d({g}): {e}"))?;
        if p2 != p {
            return fail(format!("o_to_d(d_to_o({p})) = {p2}"));
        }
    }
    Ok(format!("{} members", graphs.len()))
}
