use super::{Composition, Permutation};
use crate::error::{Error, Result};

/// Cell `(col, row)`; columns from 1, rows from 1, row 0 is the basement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    /// The cell directly below. `None` for basement cells.
    pub fn south(self) -> Option<Cell> {
        (self.row > 0).then(|| Cell::new(self.col, self.row - 1))
    }
}

/// Contents of row 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Basement {
    None,
    /// Every basement cell holds `∞`.
    Infinity,
    Perm(Permutation),
}

/// `dg(α)` with an optional basement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    shape: Composition,
    basement: Basement,
}

impl Diagram {
    pub fn new(shape: Composition, basement: Basement) -> Result<Self> {
        if let Basement::Perm(p) = &basement {
            if p.len() != shape.len() {
                return Err(Error::InvalidPermutation(format!(
                    "basement has length {}, shape has {} parts",
                    p.len(),
                    shape.len()
                )));
            }
        }
        Ok(Diagram { shape, basement })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn basement(&self) -> &Basement {
        &self.basement
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.shape.contains(c)
    }

    /// Arm of a diagram cell; see [`Composition::arm`].
    pub fn arm(&self, c: Cell) -> Result<usize> {
        self.shape.arm(c)
    }

    pub fn leg(&self, c: Cell) -> Result<usize> {
        self.shape.leg(c)
    }
}
