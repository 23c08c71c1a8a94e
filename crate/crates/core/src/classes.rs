//! Membership tests and enumerators for the four classes counted by p_ν(n).
//!
//! Enumerators come in two flavours. `iter_*` streams members in generation
//! order without materializing the class; `enumerate_*` collects and sorts
//! into the canonical descending lexicographic order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::odd_ferrers::OddFerrersGraph;
use crate::partition::{HookList, Partition};

/// Tag for one of the four partition classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassId {
    /// Self-conjugate odd Ferrers graphs of weight 2n+1.
    O,
    /// Self-conjugate partitions of 4n+1 into odd parts.
    S,
    /// Distinct parts summing to 2n+1: one odd part exceeding half the
    /// largest even part, every even part ≡ 2 (mod 4).
    D,
    /// Distinct odd parts summing to 4n+1: largest ≡ 1 (mod 4), the rest in
    /// pairs (4k+3, 4k+1).
    DO,
}

impl ClassId {
    pub const ALL: [ClassId; 4] = [ClassId::O, ClassId::S, ClassId::D, ClassId::DO];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::O => "O",
            ClassId::S => "S",
            ClassId::D => "D",
            ClassId::DO => "DO",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "O" => Ok(ClassId::O),
            "S" => Ok(ClassId::S),
            "D" => Ok(ClassId::D),
            "DO" => Ok(ClassId::DO),
            _ => Err(format!("unknown class {s:?}, expected one of O, S, D, DO")),
        }
    }
}

fn checked_target(n: u64, mul: u64) -> Option<u64> {
    n.checked_mul(mul)?.checked_add(1)
}

pub fn is_in_s(p: &Partition, n: u64) -> bool {
    Some(p.weight()) == checked_target(n, 4) && p.all_odd() && p.is_self_conjugate()
}

pub fn is_in_o(g: &OddFerrersGraph, n: u64) -> bool {
    Some(g.weight()) == checked_target(n, 2) && g.is_self_conjugate()
}

pub fn is_in_d(p: &Partition, n: u64) -> bool {
    if Some(p.weight()) != checked_target(n, 2) || !p.is_distinct() {
        return false;
    }
    let mut odd = p.parts().iter().filter(|&&x| x % 2 == 1);
    let (Some(&w), None) = (odd.next(), odd.next()) else {
        return false;
    };
    let mut evens = p.parts().iter().filter(|&&x| x % 2 == 0).peekable();
    // Parts are decreasing, so the first even part is the greatest.
    let beats_half = evens.peek().is_none_or(|&&e| 2 * w > e);
    beats_half && evens.all(|&e| e % 4 == 2)
}

/// Membership in the image of S under the hook-sum bijection: an odd number
/// of distinct odd parts summing to 4n+1, the largest ≡ 1 (mod 4), and the
/// remaining parts pairing off as (c + 1, c - 1) with c ≡ 2 (mod 4).
///
/// The pairing forces the residues to alternate 1, 3, 1, ... down the parts.
/// Alternation alone ([`is_alternating_distinct_odd`]) is strictly weaker:
/// it also admits 13 + 7 + 1.
pub fn is_in_do(p: &Partition, n: u64) -> bool {
    if !is_alternating_distinct_odd(p, n) {
        return false;
    }
    p.parts()[1..].chunks(2).all(|pair| pair[0] - pair[1] == 2)
}

/// The residue-alternation condition on its own: an odd number of distinct
/// odd parts summing to 4n+1 whose residues mod 4 read 1, 3, 1, ... from the
/// largest part down.
pub fn is_alternating_distinct_odd(p: &Partition, n: u64) -> bool {
    Some(p.weight()) == checked_target(n, 4)
        && p.len() % 2 == 1
        && p.all_odd()
        && p.is_distinct()
        && p.parts()
            .iter()
            .enumerate()
            .all(|(i, &x)| x % 4 == if i % 2 == 0 { 1 } else { 3 })
}

/// Depth-first search over index sets `i_1 < i_2 < ...` of `costs` whose
/// costs sum to `target`, yielded in lexicographic index order.
struct StrictSums {
    costs: Vec<u64>,
    suffix: Vec<u64>,
    target: u64,
    stack: Vec<usize>,
    sum: u64,
    cursor: usize,
    done: bool,
}

impl StrictSums {
    fn new(costs: Vec<u64>, target: u64) -> Self {
        let mut suffix = vec![0u64; costs.len() + 1];
        for i in (0..costs.len()).rev() {
            suffix[i] = suffix[i + 1].saturating_add(costs[i]);
        }
        Self {
            costs,
            suffix,
            target,
            stack: Vec::new(),
            sum: 0,
            cursor: 0,
            done: false,
        }
    }

    fn backtrack(&mut self) -> bool {
        match self.stack.pop() {
            Some(i) => {
                self.sum -= self.costs[i];
                self.cursor = i + 1;
                true
            }
            None => {
                self.done = true;
                false
            }
        }
    }
}

impl Iterator for StrictSums {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.target == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let need = self.target - self.sum;
            if self.cursor >= self.costs.len() || self.suffix[self.cursor] < need {
                if !self.backtrack() {
                    return None;
                }
                continue;
            }
            let c = self.costs[self.cursor];
            if c > need {
                self.cursor += 1;
                continue;
            }
            self.stack.push(self.cursor);
            self.sum += c;
            self.cursor += 1;
            if self.sum == self.target {
                let found = self.stack.clone();
                // Nothing extends an exact hit, so resume by backtracking.
                self.cursor = self.costs.len();
                return Some(found);
            }
        }
    }
}

/// Odd numbers below `bound`, largest first.
fn odd_below(bound: u64) -> Vec<u64> {
    (0..bound / 2).rev().map(|k| 2 * k + 1).collect()
}

/// Streams 𝒪_{2n+1}. For each outer arm a, the inner arms are the distinct
/// values below a whose interior hooks `2 (2b - 1)` make up the rest.
pub fn iter_o(n: u64) -> impl Iterator<Item = OddFerrersGraph> {
    (1..=n + 1).rev().flat_map(move |outer| {
        let border = 2 * outer - 1;
        // Inner hook cell counts are odd and smaller than the outer one; the
        // interior weighs twice their sum.
        let counts = odd_below(border);
        let target = n + 1 - outer;
        StrictSums::new(counts.clone(), target).map(move |idx| {
            let arms = std::iter::once(outer)
                .chain(idx.iter().map(|&i| counts[i] / 2 + 1))
                .collect();
            OddFerrersGraph::from_arms(arms).expect("arms strictly decrease")
        })
    })
}

/// Streams 𝒮_{4n+1}: distinct odd hook cell counts summing to 4n+1,
/// composed, keeping the all-odd results.
pub fn iter_s(n: u64) -> impl Iterator<Item = Partition> {
    let total = 4 * n + 1;
    let counts = odd_below(total + 1);
    StrictSums::new(counts.clone(), total).filter_map(move |idx| {
        let cells: Vec<u64> = idx.iter().map(|&i| counts[i]).collect();
        let p = HookList::from_cell_counts(&cells)
            .and_then(|h| h.compose())
            .expect("distinct odd counts form a hook list");
        p.all_odd().then_some(p)
    })
}

/// Streams 𝒟_{2n+1}: an odd part w, then distinct parts ≡ 2 (mod 4) below
/// 2w making up the remainder.
pub fn iter_d(n: u64) -> impl Iterator<Item = Partition> {
    let total = 2 * n + 1;
    (0..=n).rev().flat_map(move |k| {
        let w = 2 * k + 1;
        let evens: Vec<u64> = (0..k).rev().map(|j| 4 * j + 2).collect();
        StrictSums::new(evens.clone(), total - w).map(move |idx| {
            let parts = std::iter::once(w)
                .chain(idx.iter().map(|&i| evens[i]))
                .collect();
            Partition::from_unsorted(parts).expect("positive parts")
        })
    })
}

/// Streams 𝒟𝒪_{4n+1}: a largest part ≡ 1 (mod 4), then pairs
/// (c + 1, c - 1) with c ≡ 2 (mod 4) and c + 1 below the largest part.
pub fn iter_do(n: u64) -> impl Iterator<Item = Partition> {
    let total = 4 * n + 1;
    (0..=n).rev().flat_map(move |k| {
        let top = 4 * k + 1;
        // Upper members of the pairs: 4j + 3 < top; each pair costs 2 (4j + 2).
        let uppers: Vec<u64> = (0..k).rev().map(|j| 4 * j + 3).collect();
        let costs: Vec<u64> = uppers.iter().map(|u| 2 * u - 2).collect();
        StrictSums::new(costs, total - top).map(move |idx| {
            let mut parts = vec![top];
            for &i in &idx {
                parts.push(uppers[i]);
                parts.push(uppers[i] - 2);
            }
            Partition::new(parts).expect("pairs are generated in decreasing order")
        })
    })
}

fn sorted_desc<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// All of 𝒪_{2n+1}, shapes in descending lexicographic order.
pub fn enumerate_o(n: u64) -> Vec<OddFerrersGraph> {
    sorted_desc(iter_o(n).collect())
}

pub fn enumerate_s(n: u64) -> Vec<Partition> {
    sorted_desc(iter_s(n).collect())
}

pub fn enumerate_d(n: u64) -> Vec<Partition> {
    sorted_desc(iter_d(n).collect())
}

pub fn enumerate_do(n: u64) -> Vec<Partition> {
    sorted_desc(iter_do(n).collect())
}

/// Members of a class as plain partitions (shapes for O), canonical order.
pub fn enumerate(class: ClassId, n: u64) -> Vec<Partition> {
    match class {
        ClassId::O => enumerate_o(n)
            .into_iter()
            .map(OddFerrersGraph::into_shape)
            .collect(),
        ClassId::S => enumerate_s(n),
        ClassId::D => enumerate_d(n),
        ClassId::DO => enumerate_do(n),
    }
}

/// Class size, counted from the streaming enumerator.
pub fn count(class: ClassId, n: u64) -> u64 {
    let c = match class {
        ClassId::O => iter_o(n).count(),
        ClassId::S => iter_s(n).count(),
        ClassId::D => iter_d(n).count(),
        ClassId::DO => iter_do(n).count(),
    };
    c as u64
}

/// `{"class":"S","n":5,"count":K,"members":[[5,5,5,3,3],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassListing {
    pub class: ClassId,
    pub n: u64,
    pub count: u64,
    pub members: Vec<Partition>,
}

impl ClassListing {
    pub fn new(class: ClassId, n: u64) -> Self {
        let members = enumerate(class, n);
        Self {
            class,
            n,
            count: members.len() as u64,
            members,
        }
    }
}
