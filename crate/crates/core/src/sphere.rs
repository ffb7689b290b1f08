//! The minimal simplicial 2-sphere.
//!
//! Two nondegenerate simplices: a basepoint `*` in degree 0 and a 2-cell `y`
//! whose faces are all at the basepoint. Every simplex is a canonical
//! degeneracy word applied to one of the two cells, so a degree `n` holds the
//! unique degenerate point plus `C(n, n-2)` degeneracies of `y`.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::operators::{enumerate_degeneracy_words, DegeneracyWord, FacePush};
use crate::Result;

/// The two nondegenerate cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Basepoint,
    TwoCell,
}

impl Cell {
    pub fn degree(self) -> u32 {
        match self {
            Cell::Basepoint => 0,
            Cell::TwoCell => 2,
        }
    }
}

/// A simplex of the 2-sphere: a canonical degeneracy word applied to a cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseSimplex {
    cell: Cell,
    word: DegeneracyWord,
}

impl BaseSimplex {
    pub fn basepoint() -> Self {
        BaseSimplex {
            cell: Cell::Basepoint,
            word: DegeneracyWord::identity(),
        }
    }

    pub fn two_cell() -> Self {
        BaseSimplex {
            cell: Cell::TwoCell,
            word: DegeneracyWord::identity(),
        }
    }

    /// The unique point simplex in degree `n`: `s_{n-1} … s_0 *`.
    pub fn degenerate_point(n: u32) -> Self {
        let word = DegeneracyWord::from_descending((0..n).rev().collect())
            .expect("descending by construction");
        BaseSimplex {
            cell: Cell::Basepoint,
            word,
        }
    }

    /// `word` applied to `cell`; the word must be applicable at the cell's
    /// degree.
    pub fn from_parts(cell: Cell, word: DegeneracyWord) -> Result<Self> {
        if !word.valid_from(cell.degree()) {
            return Err(Error::invalid(
                "sphere simplex",
                format!("word {word} is not applicable at degree {}", cell.degree()),
            ));
        }
        Ok(BaseSimplex { cell, word })
    }

    pub fn cell(&self) -> Cell {
        self.cell
    }

    pub fn word(&self) -> &DegeneracyWord {
        &self.word
    }

    pub fn degree(&self) -> u32 {
        self.cell.degree() + self.word.len() as u32
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// `true` when this simplex is `s_0` of something.
    pub fn is_s0_image(&self) -> bool {
        self.word.innermost() == Some(0)
    }
}

impl fmt::Display for BaseSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = match self.cell {
            Cell::Basepoint => "*",
            Cell::TwoCell => "y",
        };
        if self.word.is_empty() {
            write!(f, "{cell}")
        } else {
            write!(f, "{} {cell}", self.word)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BaseWire {
    cell: String,
    word: Vec<u32>,
    deg: u32,
}

impl Serialize for BaseSimplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BaseWire {
            cell: match self.cell {
                Cell::Basepoint => "pt".to_string(),
                Cell::TwoCell => "y".to_string(),
            },
            word: self.word.indices().to_vec(),
            deg: self.degree(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BaseSimplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = BaseWire::deserialize(deserializer)?;
        let cell = match wire.cell.as_str() {
            "pt" => Cell::Basepoint,
            "y" => Cell::TwoCell,
            other => return Err(D::Error::custom(format!("unknown cell {other:?}"))),
        };
        let word = DegeneracyWord::from_descending(wire.word).map_err(D::Error::custom)?;
        let simplex = BaseSimplex::from_parts(cell, word).map_err(D::Error::custom)?;
        if simplex.degree() != wire.deg {
            return Err(D::Error::custom(format!(
                "simplex {simplex} has degree {} but the payload says {}",
                simplex.degree(),
                wire.deg
            )));
        }
        Ok(simplex)
    }
}

/// Every simplex of the sphere in degree `n`: the degenerate point first,
/// then the degeneracies of the 2-cell in lexicographic word order.
pub fn s2_simplices(n: u32) -> Vec<BaseSimplex> {
    let mut out = vec![BaseSimplex::degenerate_point(n)];
    if n >= 2 {
        for word in enumerate_degeneracy_words(2, n).expect("2 <= n") {
            out.push(BaseSimplex::from_parts(Cell::TwoCell, word).expect("valid from 2"));
        }
    }
    out
}

/// The face `d_i` on the sphere.
pub fn s2_face(i: u32, x: &BaseSimplex) -> Result<BaseSimplex> {
    let n = x.degree();
    if n == 0 {
        return Err(Error::FaceAtDegreeZero);
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    match x.word().with_face(i) {
        FacePush::Degeneracies(word) => BaseSimplex::from_parts(x.cell(), word),
        // A face that reaches a cell lands on that cell's boundary, which is
        // entirely at the basepoint.
        FacePush::Through(..) => Ok(BaseSimplex::degenerate_point(n - 1)),
    }
}

/// The degeneracy `s_i` on the sphere.
pub fn s2_degeneracy(i: u32, x: &BaseSimplex) -> Result<BaseSimplex> {
    let n = x.degree();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    BaseSimplex::from_parts(x.cell(), x.word().with_degeneracy(i))
}
