//! Cauchon diagrams: `m × n` black/white grids in which every black cell has
//! either all cells to its left black or all cells above it black.
//!
//! Rows are numbered top to bottom and columns left to right, both from 1,
//! matching matrix indexing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumeration is capped at `m n ≤ 20`.
pub const MAX_CELLS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CauchonDiagram {
    m: usize,
    n: usize,
    /// 1-based `(row, col)` cells.
    black: BTreeSet<(usize, usize)>,
}

pub fn is_valid(m: usize, n: usize, black: &BTreeSet<(usize, usize)>) -> bool {
    black.iter().all(|&(i, j)| {
        (1..=m).contains(&i)
            && (1..=n).contains(&j)
            && ((1..j).all(|c| black.contains(&(i, c))) || (1..i).all(|r| black.contains(&(r, j))))
    })
}

impl CauchonDiagram {
    pub fn validate(m: usize, n: usize, black: BTreeSet<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = black.iter().find(|&&(i, j)| i == 0 || j == 0 || i > m || j > n) {
            return Err(Error::IndexOutOfRange(format!("cell ({i},{j}) outside {m}x{n}")));
        }
        if !is_valid(m, n, &black) {
            return Err(Error::InvalidSpec("not a Cauchon diagram".into()));
        }
        Ok(Self { m, n, black })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn black(&self) -> &BTreeSet<(usize, usize)> {
        &self.black
    }

    pub fn black_count(&self) -> usize {
        self.black.len()
    }

    pub fn is_black(&self, i: usize, j: usize) -> bool {
        self.black.contains(&(i, j))
    }

    /// Rows of `.` (white) and `#` (black), one per line.
    pub fn to_text(&self) -> String {
        (1..=self.m)
            .map(|i| {
                (1..=self.n)
                    .map(|j| if self.is_black(i, j) { '#' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.chars().count());
        if m == 0 || n == 0 || rows.iter().any(|r| r.chars().count() != n) {
            return Err(Error::Parse {
                pos: 0,
                msg: "diagram rows must be nonempty and of equal length".into(),
            });
        }
        let mut black = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '#' => {
                        black.insert((i + 1, j + 1));
                    }
                    '.' => {}
                    _ => {
                        return Err(Error::Parse {
                            pos: j,
                            msg: format!("unexpected `{ch}` in diagram row {}", i + 1),
                        })
                    }
                }
            }
        }
        Self::validate(m, n, black)
    }

    /// JSON list of black cells, `[[row, col], ...]`.
    pub fn to_json_cells(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.black
                .iter()
                .map(|&(i, j)| serde_json::json!([i, j]))
                .collect(),
        )
    }
}

impl fmt::Display for CauchonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_size(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(format!("grid must be at least 1x1, got {m}x{n}")));
    }
    if m * n > MAX_CELLS {
        return Err(Error::SizeLimit(format!("{m}x{n} has more than {MAX_CELLS} cells")));
    }
    Ok(())
}

/// All valid diagrams, built cell by cell in row-major order. A cell may be
/// black only if its row prefix or column prefix is already all black, so
/// every branch of the search yields a valid diagram.
pub fn enumerate(m: usize, n: usize) -> Result<Vec<CauchonDiagram>> {
    check_size(m, n)?;
    let mut grid = vec![vec![false; n]; m];
    let mut out = Vec::new();
    fill(&mut grid, 0, m, n, &mut out);
    Ok(out)
}

fn fill(grid: &mut [Vec<bool>], cell: usize, m: usize, n: usize, out: &mut Vec<CauchonDiagram>) {
    if cell == m * n {
        let black = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| grid[i][j])
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        out.push(CauchonDiagram { m, n, black });
        return;
    }
    let (i, j) = (cell / n, cell % n);
    fill(grid, cell + 1, m, n, out);
    let left = (0..j).all(|c| grid[i][c]);
    let above = (0..i).all(|r| grid[r][j]);
    if left || above {
        grid[i][j] = true;
        fill(grid, cell + 1, m, n, out);
        grid[i][j] = false;
    }
}

pub fn count(m: usize, n: usize) -> Result<usize> {
    Ok(enumerate(m, n)?.len())
}

/// Number of diagrams keyed by number of black cells.
pub fn count_by_black(m: usize, n: usize) -> Result<BTreeMap<usize, usize>> {
    let mut hist = BTreeMap::new();
    for d in enumerate(m, n)? {
        *hist.entry(d.black_count()).or_insert(0) += 1;
    }
    Ok(hist)
}

/// The single-box diagrams; the box sits in the first row or first column.
pub fn height_one_diagrams(m: usize, n: usize) -> Result<Vec<CauchonDiagram>> {
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(format!("grid must be at least 1x1, got {m}x{n}")));
    }
    let cells = (1..=n).map(|j| (1, j)).chain((2..=m).map(|i| (i, 1)));
    Ok(cells
        .map(|c| CauchonDiagram {
            m,
            n,
            black: BTreeSet::from([c]),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(v: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        v.iter().copied().collect()
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid(2, 2, &cells(&[])));
        assert!(!is_valid(2, 2, &cells(&[(2, 2)])));
        assert!(is_valid(2, 2, &cells(&[(1, 2), (2, 2)])));
        assert!(is_valid(2, 2, &cells(&[(2, 1), (2, 2)])));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(1, 1).unwrap(), 2);
        assert_eq!(count(2, 2).unwrap(), 14);
        assert_eq!(count_by_black(2, 2).unwrap()[&1], 3);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(enumerate(5, 5), Err(Error::SizeLimit(_))));
        assert!(enumerate(4, 5).is_ok());
    }

    #[test]
    fn height_one_lists() {
        let d = height_one_diagrams(2, 2).unwrap();
        let boxes: Vec<_> = d.iter().map(|d| *d.black().iter().next().unwrap()).collect();
        assert_eq!(boxes, vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(height_one_diagrams(1, 4).unwrap().len(), 4);
        assert_eq!(height_one_diagrams(3, 3).unwrap().len(), 5);
    }

    #[test]
    fn text_format() {
        let d = CauchonDiagram::from_text(".#\n.#").unwrap();
        assert_eq!(d.black_count(), 2);
        assert_eq!(d.to_text(), ".#\n.#");
        assert!(CauchonDiagram::from_text("..\n.#").is_err());
        assert!(CauchonDiagram::from_text(".x").is_err());
    }
}
