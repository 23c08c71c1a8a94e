//! The hook-by-hook map φ from 𝒪_{2n+1} to 𝒮_{4n+1}, its inverse, and the
//! hook-sum bijections that carry φ over to a map 𝒟_{2n+1} → 𝒟𝒪_{4n+1}.
//!
//! φ builds its output from hook cell counts. The border hook of weight
//! `s_1` becomes one hook with arm `s_1` (so `2 s_1 - 1` cells); each
//! interior hook of weight `s_i` becomes two hooks of `s_i + 1` and `s_i - 1`
//! cells. The output weight is therefore `2 (s_1 + t) - 1` where `t` is the
//! interior weight.
//!
//! The inverse maps reject anything outside their class with a
//! `Malformed*Class` error that spells out which condition failed.

use crate::classes::is_in_s;
use crate::error::{Error, Result};
use crate::odd_ferrers::OddFerrersGraph;
use crate::partition::{HookList, Partition};

/// Hook cell counts of φ(g), outermost first.
fn phi_cell_counts(g: &OddFerrersGraph) -> Result<Vec<u64>> {
    let sums = g.weighted_hook_sums()?;
    let mut counts = Vec::with_capacity(2 * sums.len() - 1);
    let outer = sums[0].checked_mul(2).ok_or(Error::Overflow)? - 1;
    counts.push(outer);
    for &s in &sums[1..] {
        counts.push(s.checked_add(1).ok_or(Error::Overflow)?);
        counts.push(s - 1);
    }
    Ok(counts)
}

/// φ: self-conjugate odd Ferrers graph of 2n+1 → self-conjugate partition of
/// 4n+1 into odd parts.
pub fn phi(g: &OddFerrersGraph) -> Result<Partition> {
    HookList::from_cell_counts(&phi_cell_counts(g)?)?.compose()
}

/// φ followed by a membership check of the image in 𝒮_{4n+1}.
pub fn phi_verified(g: &OddFerrersGraph) -> Result<Partition> {
    let image = phi(g)?;
    let n = (g.weight() - 1) / 2;
    if !is_in_s(&image, n) {
        return Err(Error::PostconditionViolated(format!(
            "phi({g}) = {image} is not a self-conjugate partition of {} into odd parts",
            4 * n + 1
        )));
    }
    Ok(image)
}

fn malformed_s(p: &Partition, why: impl std::fmt::Display) -> Error {
    Error::MalformedSClass(format!("{p}: {why}"))
}

/// φ⁻¹: reads the hooks of `p` as one outer hook followed by pairs of cell
/// counts `(s + 1, s - 1)` and rebuilds the odd Ferrers graph.
pub fn phi_inverse(p: &Partition) -> Result<OddFerrersGraph> {
    let hooks = p
        .hook_decompose()
        .map_err(|_| malformed_s(p, "not self-conjugate"))?;
    let counts: Vec<u64> = hooks.cell_counts().collect();
    if counts.len().is_multiple_of(2) {
        return Err(malformed_s(
            p,
            format_args!(
                "has {} principal hooks, expected an odd number",
                counts.len()
            ),
        ));
    }
    let border = counts[0].div_ceil(2);
    if border.is_multiple_of(2) {
        return Err(malformed_s(
            p,
            format_args!("outer hook has {} cells, expected 4k+1", counts[0]),
        ));
    }
    let mut arms = vec![border.div_ceil(2)];
    for pair in counts[1..].chunks(2) {
        let (upper, lower) = (pair[0], pair[1]);
        if upper - lower != 2 {
            return Err(malformed_s(
                p,
                format_args!("hooks of {upper} and {lower} cells do not pair with gap 2"),
            ));
        }
        let interior = upper - 1;
        if interior % 4 != 2 {
            return Err(malformed_s(
                p,
                format_args!("paired hooks {upper},{lower} surround {interior}, expected 4k+2"),
            ));
        }
        arms.push((interior + 2) / 4);
    }
    OddFerrersGraph::from_arms(arms)
        .map_err(|e| malformed_s(p, format_args!("recovered arms are invalid ({e})")))
}

/// Self-conjugate partition → partition into distinct odd parts, one part
/// per principal hook.
pub fn sc_to_distinct_odd(p: &Partition) -> Result<Partition> {
    let counts = p.hook_decompose()?.cell_counts().collect();
    Partition::new(counts)
}

pub fn distinct_odd_to_sc(p: &Partition) -> Result<Partition> {
    if !(p.is_distinct() && p.all_odd()) {
        return Err(Error::NotDistinctOdd(p.to_string()));
    }
    HookList::from_cell_counts(p.parts())?.compose()
}

/// 𝒪_{2n+1} → 𝒟_{2n+1}: the weighted hook sums become the parts.
pub fn o_to_d(g: &OddFerrersGraph) -> Result<Partition> {
    Partition::from_unsorted(g.weighted_hook_sums()?)
}

fn malformed_d(p: &Partition, why: impl std::fmt::Display) -> Error {
    Error::MalformedDClass(format!("{p}: {why}"))
}

/// Splits a 𝒟 member into its odd part and its (decreasing) even parts.
fn split_d(p: &Partition) -> Result<(u64, Vec<u64>)> {
    let mut odd = p.parts().iter().copied().filter(|x| x % 2 == 1);
    let w = match (odd.next(), odd.next()) {
        (Some(w), None) => w,
        (None, _) => return Err(malformed_d(p, "has no odd part")),
        _ => return Err(malformed_d(p, "has more than one odd part")),
    };
    let evens: Vec<u64> = p.parts().iter().copied().filter(|x| x % 2 == 0).collect();
    if let Some(e) = evens.iter().find(|&&e| e % 4 != 2) {
        return Err(malformed_d(
            p,
            format_args!("even part {e} is not of the form 4k+2"),
        ));
    }
    if evens.windows(2).any(|w| w[0] == w[1]) {
        return Err(malformed_d(p, "parts are not distinct"));
    }
    if let Some(&e) = evens.first() {
        if 2 * w <= e {
            return Err(malformed_d(
                p,
                format_args!("odd part {w} is not greater than half of {e}"),
            ));
        }
    }
    Ok((w, evens))
}

/// 𝒟_{2n+1} → 𝒪_{2n+1}: the odd part w is the border hook (arm (w+1)/2) and
/// each even part e an interior hook (arm (e+2)/4).
pub fn d_to_o(p: &Partition) -> Result<OddFerrersGraph> {
    let (w, evens) = split_d(p)?;
    let arms = std::iter::once(w.div_ceil(2))
        .chain(evens.iter().map(|e| (e + 2) / 4))
        .collect();
    OddFerrersGraph::from_arms(arms)
        .map_err(|e| malformed_d(p, format_args!("recovered arms are invalid ({e})")))
}

/// 𝒟_{2n+1} → 𝒟𝒪_{4n+1}: the odd part w becomes 2w − 1 and every even part
/// e becomes the pair e + 1, e − 1. Agrees with
/// `sc_to_distinct_odd(phi(d_to_o(p)))`.
pub fn d_to_do(p: &Partition) -> Result<Partition> {
    let (w, evens) = split_d(p)?;
    let mut parts = vec![w.checked_mul(2).ok_or(Error::Overflow)? - 1];
    for e in evens {
        parts.push(e.checked_add(1).ok_or(Error::Overflow)?);
        parts.push(e - 1);
    }
    Partition::new(parts)
}

fn malformed_do(p: &Partition, why: impl std::fmt::Display) -> Error {
    Error::MalformedDOClass(format!("{p}: {why}"))
}

/// 𝒟𝒪_{4n+1} → 𝒟_{2n+1}, inverse of [`d_to_do`].
pub fn do_to_d(p: &Partition) -> Result<Partition> {
    let parts = p.parts();
    if parts.len().is_multiple_of(2) {
        return Err(malformed_do(
            p,
            format_args!("has {} parts, expected an odd number", parts.len()),
        ));
    }
    if !p.all_odd() || !p.is_distinct() {
        return Err(malformed_do(p, "parts are not distinct and odd"));
    }
    if parts[0] % 4 != 1 {
        return Err(malformed_do(
            p,
            format_args!("largest part {} is not of the form 4k+1", parts[0]),
        ));
    }
    let mut out = vec![parts[0].div_ceil(2)];
    for pair in parts[1..].chunks(2) {
        let (upper, lower) = (pair[0], pair[1]);
        if upper - lower != 2 {
            return Err(malformed_do(
                p,
                format_args!("parts {upper} and {lower} do not pair with gap 2"),
            ));
        }
        if upper % 4 != 3 {
            return Err(malformed_do(
                p,
                format_args!("paired part {upper} is not of the form 4k+3"),
            ));
        }
        out.push(upper - 1);
    }
    Partition::from_unsorted(out)
}
