//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's hook or enumeration code.

#![allow(dead_code)]

/// Every partition of `n`, parts decreasing.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Transpose by marking cells in a grid.
pub fn transpose(parts: &[u64]) -> Vec<u64> {
    let rows = parts.len();
    let cols = parts.first().copied().unwrap_or(0) as usize;
    let mut grid = vec![vec![false; cols]; rows];
    for (i, &len) in parts.iter().enumerate() {
        for cell in grid[i].iter_mut().take(len as usize) {
            *cell = true;
        }
    }
    (0..cols)
        .map(|j| (0..rows).filter(|&i| grid[i][j]).count() as u64)
        .collect()
}

/// Sum of cell weights: 1 in the first row and column, 2 elsewhere.
pub fn cell_walk_weight(shape: &[u64]) -> u64 {
    let mut total = 0;
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            total += if i == 0 || j == 0 { 1 } else { 2 };
        }
    }
    total
}

/// All partitions of `n` into at most `k` parts.
fn bounded_parts(n: u64, k: usize) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, k: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == k {
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every self-conjugate partition of `n`, built from a d×d Durfee square, a
/// partition `a` with at most d parts glued to its right, and the transpose
/// of `a` glued below.
pub fn self_conjugate(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut d = 0u64;
    while d * d <= n {
        let rest = n - d * d;
        if rest.is_multiple_of(2) {
            for a in bounded_parts(rest / 2, d as usize) {
                let mut rows: Vec<u64> = (0..d as usize)
                    .map(|i| d + a.get(i).copied().unwrap_or(0))
                    .collect();
                rows.extend(transpose(&a));
                out.push(rows);
            }
        }
        d += 1;
    }
    out
}

pub fn is_distinct(p: &[u64]) -> bool {
    p.windows(2).all(|w| w[0] > w[1])
}

/// The D condition, spelled out directly.
pub fn naive_in_d(p: &[u64], n: u64) -> bool {
    let odd: Vec<u64> = p.iter().copied().filter(|x| x % 2 == 1).collect();
    let even: Vec<u64> = p.iter().copied().filter(|x| x % 2 == 0).collect();
    p.iter().sum::<u64>() == 2 * n + 1
        && is_distinct(p)
        && odd.len() == 1
        && even.iter().all(|e| e % 4 == 2)
        && even.iter().max().is_none_or(|&e| 2 * odd[0] > e)
}

/// Residue alternation 1, 3, 1, ... read from the largest part.
pub fn naive_alternating(p: &[u64], n: u64) -> bool {
    p.iter().sum::<u64>() == 4 * n + 1
        && p.len() % 2 == 1
        && is_distinct(p)
        && p.iter().all(|x| x % 2 == 1)
        && p.iter()
            .enumerate()
            .all(|(i, x)| x % 4 == if i % 2 == 0 { 1 } else { 3 })
}

/// p_ν(0..=40), expanded outside this crate from the defining series.
pub const P_NU: [u64; 41] = [
    1, 1, 2, 2, 2, 3, 4, 4, 5, 6, 6, 8, 10, 10, 12, 14, 15, 18, 20, 22, 26, 29, 32, 36, 40, 44, 50,
    56, 60, 68, 76, 82, 92, 101, 110, 122, 134, 146, 160, 176, 191,
];
