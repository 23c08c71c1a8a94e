//! Odd Ferrers graphs: Ferrers shapes whose first row and first column
//! cells weigh 1 and whose remaining cells weigh 2.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{HookList, Partition};

/// An odd Ferrers graph, identified by its underlying shape. Cell weights
/// follow from position and are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddFerrersGraph {
    shape: Partition,
}

/// JSON form: `{"shape":[3,3,2],"weight":11,"row_sums":[3,5,3]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub shape: Partition,
    pub weight: u64,
    pub row_sums: Vec<u64>,
}

impl OddFerrersGraph {
    pub fn new(shape: Partition) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::EmptyShape);
        }
        // Keeps 2 * cells within u64 for every derived quantity.
        if shape.weight() > u64::MAX / 4 {
            return Err(Error::Overflow);
        }
        Ok(Self { shape })
    }

    /// The self-conjugate graph whose shape has the given principal hook arms.
    pub fn from_arms(arms: Vec<u64>) -> Result<Self> {
        Self::new(HookList::from_arms(arms)?.compose()?)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    /// Number of weight-1 cells: the first row plus the rest of the first
    /// column.
    pub fn border_cells(&self) -> u64 {
        self.shape.parts()[0] + self.shape.len() as u64 - 1
    }

    /// Total of all cell weights, `2 * cells - border`.
    ///
    /// Odd for every self-conjugate shape; in general its parity is that of
    /// the border size.
    pub fn weight(&self) -> u64 {
        2 * self.shape.weight() - self.border_cells()
    }

    /// Per-row weight totals, top row first. Not necessarily decreasing.
    pub fn row_sums(&self) -> Vec<u64> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| if i == 0 { len } else { 2 * len - 1 })
            .collect()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.shape.is_self_conjugate()
    }

    /// Weighted size of each principal hook, outermost first. The outer hook
    /// is exactly the border, so it weighs `2a - 1`; every inner hook lies in
    /// the interior and weighs `2 (2a - 1)`.
    pub fn weighted_hook_sums(&self) -> Result<Vec<u64>> {
        let hooks = self.shape.hook_decompose()?;
        Ok(hooks
            .cell_counts()
            .enumerate()
            .map(|(i, c)| if i == 0 { c } else { 2 * c })
            .collect())
    }

    /// Total weight of the interior 2-cells; equals `weight() - |h_1|`.
    pub fn interior_sum(&self) -> Result<u64> {
        Ok(self.weighted_hook_sums()?.iter().skip(1).sum())
    }

    /// One line per row, each cell printed as its weight digit. No trailing
    /// newline.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for (i, &len) in self.shape.parts().iter().enumerate() {
            if i > 0 {
                out.push('\n');
                out.push('1');
                out.extend(std::iter::repeat_n('2', len as usize - 1));
            } else {
                out.extend(std::iter::repeat_n('1', len as usize));
            }
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            shape: self.shape.clone(),
            weight: self.weight(),
            row_sums: self.row_sums(),
        }
    }
}

impl fmt::Display for OddFerrersGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}
