//! Bounded chain complexes of finitely generated free abelian groups.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::IntMat;
use crate::Result;

/// A non-negatively graded chain complex. Only nonzero ranks and nonzero
/// differentials are stored, so derived equality compares complexes in a
/// canonical form.
///
/// `differentials[n]` is the matrix of `d_n : C_n -> C_{n-1}` with
/// `rank(n-1)` rows and `rank(n)` columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplex {
    ranks: BTreeMap<u32, usize>,
    differentials: BTreeMap<u32, IntMat>,
}

impl ChainComplex {
    /// Build and validate: differential shapes must match the ranks and
    /// consecutive differentials must compose to zero.
    pub fn new(ranks: BTreeMap<u32, usize>, differentials: BTreeMap<u32, IntMat>) -> Result<Self> {
        let mut c = ChainComplex {
            ranks,
            differentials,
        };
        c.ranks.retain(|_, &mut r| r > 0);
        c.differentials.retain(|_, m| !m.is_zero());
        c.validate()?;
        Ok(c)
    }

    /// The complex with a single Z in degree `k` and zero differentials.
    pub fn sphere(k: u32) -> Self {
        let mut ranks = BTreeMap::new();
        ranks.insert(k, 1);
        ChainComplex {
            ranks,
            differentials: BTreeMap::new(),
        }
    }

    /// Two nonzero groups in degrees `top` and `top - 1` connected by `d`.
    pub fn two_term(top: u32, d: IntMat) -> Result<Self> {
        if top == 0 {
            return Err(Error::invalid("chain complex", "two_term needs top >= 1"));
        }
        let mut ranks = BTreeMap::new();
        ranks.insert(top, d.cols());
        ranks.insert(top - 1, d.rows());
        let mut differentials = BTreeMap::new();
        differentials.insert(top, d);
        ChainComplex::new(ranks, differentials)
    }

    pub fn rank(&self, degree: u32) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &BTreeMap<u32, usize> {
        &self.ranks
    }

    /// Largest degree with nonzero rank.
    pub fn top_degree(&self) -> Option<u32> {
        self.ranks.keys().next_back().copied()
    }

    /// The matrix of `d_n`, materialized as a zero matrix when not stored.
    pub fn differential(&self, degree: u32) -> IntMat {
        match self.differentials.get(&degree) {
            Some(m) => m.clone(),
            None => {
                let rows = if degree == 0 { 0 } else { self.rank(degree - 1) };
                IntMat::zeros(rows, self.rank(degree))
            }
        }
    }

    pub fn differentials(&self) -> &BTreeMap<u32, IntMat> {
        &self.differentials
    }

    fn validate(&self) -> Result<()> {
        for (&n, d) in &self.differentials {
            if n == 0 {
                return Err(Error::invalid("chain complex", "differential out of degree 0"));
            }
            if d.rows() != self.rank(n - 1) || d.cols() != self.rank(n) {
                return Err(Error::invalid(
                    "chain complex",
                    format!(
                        "differential at degree {n} has shape {}x{}, expected {}x{}",
                        d.rows(),
                        d.cols(),
                        self.rank(n - 1),
                        self.rank(n)
                    ),
                ));
            }
        }
        for (&n, d) in &self.differentials {
            if n >= 1 && self.differentials.contains_key(&(n - 1)) {
                let dd = self.differential(n - 1).mul(d);
                if !dd.is_zero() {
                    return Err(Error::invalid(
                        "chain complex",
                        format!("d∘d is nonzero out of degree {n}"),
                    ));
                }
            }
        }
        Ok(())
    }
}
