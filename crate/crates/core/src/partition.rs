//! Partitions, conjugation and the principal-hook view of self-conjugate
//! partitions.
//!
//! A self-conjugate partition is determined by its principal hooks: peel off
//! the first row together with the first column, then repeat on what is left.
//! Each peeled hook is symmetric with arm `a` (its largest part) and `2a - 1`
//! cells, and the arms strictly decrease from the outside in.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
///
/// Construction rejects unsorted or zero parts instead of normalizing them,
/// so two partitions are equal exactly when their part sequences are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, but {} < {} at position {}",
                parts[i],
                parts[i + 1],
                i + 2
            )));
        }
        let weight = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow)?;
        Ok(Self { parts, weight })
    }

    /// Sorts `parts` into decreasing order first. Zero parts are still rejected.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            weight: 0,
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn largest(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let Some(largest) = self.largest() else {
            return Partition::empty();
        };
        let mut parts = Vec::with_capacity(largest as usize);
        // Column j has one cell for every row longer than j.
        let mut rows = self.parts.len();
        for j in 0..largest {
            while rows > 0 && self.parts[rows - 1] <= j {
                rows -= 1;
            }
            parts.push(rows as u64);
        }
        Partition {
            parts,
            weight: self.weight,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Side of the Durfee square: the number of rows `i` (1-based) with
    /// `parts[i] >= i`.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i as u64)
            .count()
    }

    /// Principal hooks of a self-conjugate partition, outermost first.
    pub fn hook_decompose(&self) -> Result<HookList> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(self.to_string()));
        }
        // Row i (0-based) of the Durfee square starts hook i on the diagonal.
        let hooks = self.parts[..self.durfee_size()]
            .iter()
            .enumerate()
            .map(|(i, &p)| Hook { arm: p - i as u64 })
            .collect();
        Ok(HookList { hooks })
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Comma-separated parts, largest first. The empty partition prints as "".
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>().map_err(|_| {
                    Error::InvalidPartition(format!("{tok:?} is not a nonnegative integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// One principal hook of a self-conjugate partition: a row of `arm` cells
/// and a column of `arm` cells sharing their corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hook {
    arm: u64,
}

impl Hook {
    pub fn new(arm: u64) -> Result<Self> {
        if arm == 0 {
            return Err(Error::InvalidHookList(vec![0]));
        }
        Ok(Self { arm })
    }

    pub fn arm(self) -> u64 {
        self.arm
    }

    /// `2 * arm - 1`, always odd.
    pub fn cells(self) -> u64 {
        2 * self.arm - 1
    }
}

/// Principal hooks ordered outermost first; arms strictly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HookList {
    hooks: Vec<Hook>,
}

impl HookList {
    pub fn from_arms(arms: Vec<u64>) -> Result<Self> {
        let valid = arms.iter().all(|&a| a > 0 && a <= u64::MAX / 4)
            && arms.windows(2).all(|w| w[0] > w[1]);
        if !valid {
            return Err(Error::InvalidHookList(arms));
        }
        Ok(Self {
            hooks: arms.into_iter().map(|arm| Hook { arm }).collect(),
        })
    }

    /// Hooks given by their cell counts, which must be odd and strictly
    /// decreasing.
    pub fn from_cell_counts(counts: &[u64]) -> Result<Self> {
        if counts.iter().any(|c| c % 2 == 0) {
            return Err(Error::InvalidHookList(counts.to_vec()));
        }
        Self::from_arms(counts.iter().map(|c| c / 2 + 1).collect())
    }

    pub fn hooks(&self) -> &[Hook] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn arms(&self) -> impl Iterator<Item = u64> + '_ {
        self.hooks.iter().map(|h| h.arm)
    }

    pub fn cell_counts(&self) -> impl Iterator<Item = u64> + '_ {
        self.hooks.iter().map(|h| h.cells())
    }

    /// The unique self-conjugate partition with these principal hooks.
    pub fn compose(&self) -> Result<Partition> {
        let d = self.hooks.len();
        // Hook i contributes arm_i - 1 cells right of the diagonal in row i,
        // so row i has length arm_i + i; by symmetry so does column i.
        let lines = self
            .hooks
            .iter()
            .enumerate()
            .map(|(i, h)| h.arm.checked_add(i as u64).ok_or(Error::Overflow))
            .collect::<Result<Vec<u64>>>()?;
        let mut parts = lines.clone();
        let mut row = d as u64;
        loop {
            // Below the Durfee square only the first d columns reach down.
            let len = lines.iter().take_while(|&&l| l > row).count() as u64;
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition::new(parts)
    }
}
