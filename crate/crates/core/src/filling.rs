//! Fillings of shapes with `1..=n`, and the partial fillings that arise as
//! subfillings or as intermediate tree vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Cell, Shape};

/// Read-only access to the boxes of a (possibly partial) filling.
pub trait Tableau {
    fn value_at(&self, cell: Cell) -> Option<usize>;

    /// Every filled box with its value, in row-reading order.
    fn entries(&self) -> Vec<(Cell, usize)>;
}

/// An injective, total placement of `1..=n` into the boxes of a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FillingJson", into = "FillingJson")]
pub struct Filling {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

/// JSON form: `{"shape": [row lengths], "word": [row-reading word]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingJson {
    pub shape: Vec<usize>,
    pub word: Vec<usize>,
}

impl TryFrom<FillingJson> for Filling {
    type Error = Error;

    fn try_from(j: FillingJson) -> Result<Self> {
        Filling::from_word(Shape::composition(j.shape)?, &j.word)
    }
}

impl From<Filling> for FillingJson {
    fn from(f: Filling) -> Self {
        FillingJson {
            shape: f.shape.rows().to_vec(),
            word: f.word(),
        }
    }
}

impl Filling {
    /// Fills `shape` row by row from the row-reading `word`.
    pub fn from_word(shape: Shape, word: &[usize]) -> Result<Self> {
        let n = shape.n();
        if word.len() != n {
            return Err(Error::InvalidFilling(format!(
                "word has {} entries but the shape has {n} boxes",
                word.len()
            )));
        }
        check_permutation(word)?;
        let mut rest = word;
        let rows = shape
            .rows()
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len);
                rest = tail;
                row.to_vec()
            })
            .collect();
        Ok(Self { shape, rows })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Shape::composition(rows.iter().map(Vec::len).collect())?;
        let word: Vec<usize> = rows.concat();
        Self::from_word(shape, &word)
    }

    /// A one-row filling.
    pub fn one_row(word: &[usize]) -> Result<Self> {
        Self::from_word(Shape::row(word.len()), word)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Row-reading word: left to right within a row, top row first.
    pub fn word(&self) -> Vec<usize> {
        self.rows.concat()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row)?.get(cell.col).copied()
    }

    pub fn position(&self, value: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(row, r)| {
            r.iter()
                .position(|&v| v == value)
                .map(|col| Cell::new(row, col))
        })
    }

    /// `T^(i)`: the boxes holding values greater than `i` are removed.
    pub fn subfilling(&self, i: usize) -> PartialFilling {
        PartialFilling {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| (v <= i).then_some(v)).collect())
                .collect(),
        }
    }

    /// Entries strictly increase left to right along every row.
    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// For every `i`, `i` sits in the rightmost remaining box of its row in `T^(i)`.
    pub fn has_subfilling_property(&self) -> bool {
        (1..=self.n()).all(|i| {
            let sub = self.subfilling(i);
            let cell = self.position(i).expect("total filling");
            sub.rows[cell.row][cell.col + 1..]
                .iter()
                .all(Option::is_none)
        })
    }

    pub fn to_partial(&self) -> PartialFilling {
        PartialFilling {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| Some(v)).collect())
                .collect(),
        }
    }

    /// One row per line, entries separated by spaces; empty rows stay empty.
    pub fn render_diagram(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the compact form written by `Display`: rows separated by `/`,
    /// entries as single digits (`12/36/45`) or comma-separated (`10,2/1`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty filling".into()));
        }
        let tokens: Vec<&str> = s.split('/').map(str::trim).collect();
        let numbers = |t: &str| -> Result<Vec<usize>> {
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
                })
                .collect()
        };
        let digits = |t: &str| -> Result<Vec<usize>> {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad filling entry {c:?}")))
                })
                .collect()
        };
        if s.contains(',') {
            return Self::from_rows(tokens.iter().map(|t| numbers(t)).collect::<Result<_>>()?);
        }
        match tokens
            .iter()
            .map(|t| digits(t))
            .collect::<Result<Vec<_>>>()
            .and_then(Self::from_rows)
        {
            Ok(f) => Ok(f),
            // One multi-digit entry per row, e.g. `3/10/1/...`.
            Err(e) => tokens
                .iter()
                .map(|t| numbers(t))
                .collect::<Result<Vec<_>>>()
                .and_then(Self::from_rows)
                .map_err(|_| e),
        }
    }
}

fn check_permutation(word: &[usize]) -> Result<()> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for &v in word {
        if v == 0 || v > n {
            return Err(Error::InvalidFilling(format!("entry {v} outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidFilling(format!("entry {v} repeated")));
        }
    }
    Ok(())
}

impl Tableau for Filling {
    fn value_at(&self, cell: Cell) -> Option<usize> {
        self.get(cell)
    }

    fn entries(&self) -> Vec<(Cell, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(row, r)| {
                r.iter()
                    .enumerate()
                    .map(move |(col, &v)| (Cell::new(row, col), v))
            })
            .collect()
    }
}

/// Compact form: one-row fillings are a bare word (`54213`), otherwise rows
/// are joined by `/` (`12/36/45`). Entries are comma-separated when `n > 9`.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// A shape with some boxes filled. Row widths are those of the underlying
/// shape; empty boxes are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialFilling {
    rows: Vec<Vec<Option<usize>>>,
}

impl PartialFilling {
    pub fn empty(shape: &Shape) -> Self {
        Self {
            rows: shape.rows().iter().map(|&len| vec![None; len]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row)?.get(cell.col).copied().flatten()
    }

    pub fn set(&mut self, cell: Cell, value: usize) {
        self.rows[cell.row][cell.col] = Some(value);
    }

    /// Number of filled boxes in each row.
    pub fn filled_counts(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|v| v.is_some()).count())
            .collect()
    }

    /// Number of empty boxes in each row.
    pub fn empty_counts(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|v| v.is_none()).count())
            .collect()
    }

    /// Whether the filled boxes of every row form a flush-left prefix, i.e.
    /// the subdiagram is again a composition.
    pub fn is_composition(&self) -> bool {
        self.rows.iter().all(|r| {
            let k = r.iter().filter(|v| v.is_some()).count();
            r[..k].iter().all(Option::is_some)
        })
    }

    /// The subdiagram formed by the filled boxes, if it is a composition.
    pub fn subdiagram(&self) -> Option<Shape> {
        self.is_composition()
            .then(|| Shape::composition(self.filled_counts()).expect("at least one row"))
    }

    pub fn is_total(&self) -> bool {
        self.rows.iter().flatten().all(Option::is_some)
    }

    pub fn to_filling(&self) -> Result<Filling> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidFilling("partial filling has empty boxes".into()))?;
        Filling::from_rows(rows)
    }
}

impl Tableau for PartialFilling {
    fn value_at(&self, cell: Cell) -> Option<usize> {
        self.get(cell)
    }

    fn entries(&self) -> Vec<(Cell, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(row, r)| {
                r.iter()
                    .enumerate()
                    .filter_map(move |(col, v)| v.map(|v| (Cell::new(row, col), v)))
            })
            .collect()
    }
}

/// Like `Filling`'s compact form with `.` for empty boxes: `.4/..`.
impl fmt::Display for PartialFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().flatten().any(|&v| v > 9);
        let sep = if wide { "," } else { "" };
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.map_or_else(|| ".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}
