//! Reference grids indexed by pairs of compositions of `n`: the descent
//! statistic table, the ribbon and elementary coefficient tables of the full
//! degree-`n` sum, and the glued-class table.
//!
//! Rows and columns follow the binary display order of compositions. The
//! coefficient grids are computed from the expanded element, not from closed
//! formulas, so they can serve as an independent check of the latter.

use serde::{Deserialize, Serialize};

use crate::compositions::{compositions, statistic_d, Composition};
use crate::expansion::{expand_in_ribbon, glued_class, ribbon_to_elementary};
use crate::identities::sigma_n;
use crate::qpoly::QPoly;

/// A square grid over the compositions of `n` in display order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    pub n: usize,
    pub kind: String,
    pub rows: Vec<Composition>,
    pub cols: Vec<Composition>,
    pub entries: Vec<Vec<T>>,
}

impl<T> Matrix<T> {
    fn build(n: usize, kind: &str, f: impl Fn(&Composition, &Composition) -> T) -> Matrix<T> {
        assert!(n >= 1, "grids start at degree 1");
        let index = compositions(n);
        let entries = index
            .iter()
            .map(|i| index.iter().map(|j| f(i, j)).collect())
            .collect();
        Matrix { n, kind: kind.to_string(), rows: index.clone(), cols: index, entries }
    }

    /// Entry at row composition `i`, column composition `j`.
    pub fn entry(&self, i: &Composition, j: &Composition) -> &T {
        let r = self.rows.iter().position(|c| c == i).expect("unknown row");
        let c = self.cols.iter().position(|c| c == j).expect("unknown column");
        &self.entries[r][c]
    }
}

/// How a grid entry prints inside a table cell.
pub trait CellText {
    fn cell(&self) -> String;
}

impl CellText for usize {
    /// Zeroes print as dots so the support stands out.
    fn cell(&self) -> String {
        if *self == 0 {
            ".".to_string()
        } else {
            self.to_string()
        }
    }
}

impl CellText for QPoly {
    fn cell(&self) -> String {
        self.cell_string()
    }
}

impl CellText for Composition {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl<T: CellText> Matrix<T> {
    /// Aligned text table: row labels left, cells right, two-space gutter.
    pub fn to_text(&self) -> String {
        let corner = "I\\J";
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(CellText::cell).collect()).collect();
        let label_w = self
            .rows
            .iter()
            .map(|r| r.to_string().len())
            .chain([corner.len()])
            .max()
            .unwrap();
        let col_w: Vec<usize> = self
            .cols
            .iter()
            .enumerate()
            .map(|(k, c)| {
                cells
                    .iter()
                    .map(|row| row[k].len())
                    .chain([c.to_string().len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let mut out = format!("{corner:<label_w$}");
        for (k, c) in self.cols.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&format!("{:>1$}", c.to_string(), col_w[k]));
        }
        out.push('\n');
        for (r, row) in cells.iter().enumerate() {
            out.push_str(&format!("{:<label_w$}", self.rows[r].to_string()));
            for (k, cell) in row.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&format!("{cell:>w$}", w = col_w[k]));
            }
            out.push('\n');
        }
        out
    }

    /// Comma-separated table with the same layout as the text form.
    pub fn to_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains(',') || s.contains('"') || s.contains('\n') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::from("I\\J");
        for c in &self.cols {
            out.push(',');
            out.push_str(&field(&c.to_string()));
        }
        out.push('\n');
        for (r, row) in self.entries.iter().enumerate() {
            out.push_str(&field(&self.rows[r].to_string()));
            for e in row {
                out.push(',');
                out.push_str(&field(&e.cell()));
            }
            out.push('\n');
        }
        out
    }
}

/// Grid of the descent statistic `D(i, j)`.
pub fn d_matrix(n: usize) -> Matrix<usize> {
    Matrix::build(n, "D", statistic_d)
}

/// Ribbon coefficients of the degree-`n` full sum, computed by expanding it.
pub fn m_ribbon_matrix(n: usize) -> Matrix<QPoly> {
    let x = expand_in_ribbon(&sigma_n(n)).expect("the full sum expands in ribbon classes");
    Matrix::build(n, "Mribbon", |i, j| x.coeff(i, j))
}

/// Elementary coefficients of the degree-`n` full sum, computed by expanding
/// it and converting bases.
pub fn m_elementary_matrix(n: usize) -> Matrix<QPoly> {
    let r = expand_in_ribbon(&sigma_n(n)).expect("the full sum expands in ribbon classes");
    let l = ribbon_to_elementary(&r);
    Matrix::build(n, "Mlambda", |i, j| l.coeff(i, j))
}

/// Grid of glued classes: the class sum each pair contributes to.
pub fn n_matrix(n: usize) -> Matrix<Composition> {
    Matrix::build(n, "N", glued_class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn cell_grid<T: CellText>(m: &Matrix<T>) -> Vec<Vec<String>> {
        m.entries.iter().map(|row| row.iter().map(CellText::cell).collect()).collect()
    }

    #[test]
    fn descent_statistic_grids() {
        let d2 = d_matrix(2);
        assert_eq!(cell_grid(&d2), vec![vec![".", "1"], vec![".", "."]]);
        let d3 = d_matrix(3);
        assert_eq!(
            cell_grid(&d3),
            vec![
                vec![".", "2", "1", "2"],
                vec![".", ".", "1", "1"],
                vec![".", "1", ".", "1"],
                vec![".", ".", ".", "."],
            ]
        );
    }

    #[test]
    fn degree_two_coefficient_grids() {
        let mr = m_ribbon_matrix(2);
        assert_eq!(cell_grid(&mr), vec![vec!["1", "1"], vec![".", "1-q"]]);
        let ml = m_elementary_matrix(2);
        assert_eq!(cell_grid(&ml), vec![vec!["-1", "-q"], vec!["1", "1"]]);
    }

    #[test]
    fn degree_three_elementary_grid() {
        let ml = m_elementary_matrix(3);
        assert_eq!(
            cell_grid(&ml),
            vec![
                vec!["1", "q^2", "q", "q^2"],
                vec!["-1", "-1", "-q", "-q"],
                vec!["-1", "-q", "-1", "-q"],
                vec!["1", "1", "1", "1"],
            ]
        );
    }

    #[test]
    fn glued_class_grid() {
        let n3 = n_matrix(3);
        assert_eq!(
            cell_grid(&n3),
            vec![
                vec!["3", "3", "3", "3"],
                vec!["3", "21", "3", "21"],
                vec!["3", "12", "12", "12"],
                vec!["3", "21", "12", "111"],
            ]
        );
        assert_eq!(*n3.entry(&comp("21"), &comp("111")), comp("21"));
    }

    #[test]
    fn text_rendering_is_aligned() {
        let d2 = d_matrix(2);
        assert_eq!(d2.to_text(), "I\\J  2  11\n2    .   1\n11   .   .\n");
        for line in d2.to_text().lines() {
            assert_eq!(line, line.trim_end());
        }
    }

    #[test]
    fn csv_rendering() {
        let d2 = d_matrix(2);
        assert_eq!(d2.to_csv(), "I\\J,2,11\n2,.,1\n11,.,.\n");
    }

    #[test]
    fn json_schema_fields() {
        let d2 = d_matrix(2);
        let v: serde_json::Value = serde_json::from_str(&serde_json::to_string(&d2).unwrap()).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["kind"], "D");
        assert_eq!(v["rows"][1], "11");
        assert_eq!(v["entries"][0][1], 1);
    }
}
