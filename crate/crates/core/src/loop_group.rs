//! The simplicial loop group of `Γ(C)`.
//!
//! In degree `n` the group is free on the degree-`n+1` elements of `Γ(C)`
//! that are not `s_0`-images; the class map `ζ` sends an element of
//! `Γ_{n+1}(C)` to its generator, collapsing `s_0`-images (including 0) to
//! the identity. Faces and degeneracies are the homomorphisms determined on
//! generators by
//!
//! ```text
//! d_0 ζ(x) = ζ(d_0 x)^{-1} · ζ(d_1 x)
//! d_i ζ(x) = ζ(d_{i+1} x)        for i ≥ 1
//! s_i ζ(x) = ζ(s_{i+1} x)
//! ```
//!
//! Every horn in a simplicial group fills; [`fill_horn`] implements the
//! classical constructive filler and re-verifies its output. Over the
//! sphere complex, [`degree_invariant`] reads off the winding number of a
//! degree-1 word, which is the group-side shadow of `H_2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::gamma::{gamma_degeneracy, gamma_face, GammaElement};
use crate::operators::{enumerate_degeneracy_words, DegeneracyWord};
use crate::Result;

/// A free generator: a positive-degree element of `Γ(C)` that is not an
/// `s_0`-image. It generates the group one degree below its own.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopGenerator(GammaElement);

impl LoopGenerator {
    pub fn new(x: GammaElement) -> Result<Self> {
        if x.degree() == 0 {
            return Err(Error::invalid(
                "loop generator",
                "generators live in positive degrees",
            ));
        }
        if x.preimage_under_s0().is_some() {
            return Err(Error::invalid(
                "loop generator",
                "an s_0-image represents the identity, not a generator",
            ));
        }
        Ok(LoopGenerator(x))
    }

    pub fn element(&self) -> &GammaElement {
        &self.0
    }

    /// Degree of the group the generator lives in (one below the element).
    pub fn degree(&self) -> u32 {
        self.0.degree() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Factor {
    gen: LoopGenerator,
    exp: i64,
}

/// A reduced word in the loop group: factors with nonzero exponents and no
/// two adjacent factors sharing a generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopWord {
    degree: u32,
    factors: Vec<Factor>,
}

impl LoopWord {
    pub fn identity(degree: u32) -> Self {
        LoopWord {
            degree,
            factors: Vec::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of factors in the reduced word.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&GammaElement, i64)> {
        self.factors.iter().map(|f| (f.gen.element(), f.exp))
    }

    fn push_reduced(&mut self, gen: LoopGenerator, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.gen == gen {
                last.exp += exp;
                if last.exp == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push(Factor { gen, exp });
    }

    pub fn multiply(&self, other: &LoopWord) -> Result<LoopWord> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for f in &other.factors {
            out.push_reduced(f.gen.clone(), f.exp);
        }
        Ok(out)
    }

    pub fn invert(&self) -> LoopWord {
        LoopWord {
            degree: self.degree,
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| Factor {
                    gen: f.gen.clone(),
                    exp: -f.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> LoopWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = LoopWord::identity(self.degree);
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base).expect("same degree");
        }
        out
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " · ")?;
            }
            write!(f, "⟨{}⟩", factor.gen.element())?;
            if factor.exp != 1 {
                write!(f, "^{}", factor.exp)?;
            }
        }
        Ok(())
    }
}

/// The class map `ζ : Γ_{n+1}(C) → G_n`: the generator of `x`, or the
/// identity when `x` is an `s_0`-image.
pub fn class_of(x: &GammaElement) -> Result<LoopWord> {
    if x.degree() == 0 {
        return Err(Error::invalid(
            "loop class",
            "degree-0 elements have no class in the loop group",
        ));
    }
    let degree = x.degree() - 1;
    let mut out = LoopWord::identity(degree);
    if x.preimage_under_s0().is_none() {
        out.push_reduced(LoopGenerator::new(x.clone())?, 1);
    }
    Ok(out)
}

fn check_word(c: &ChainComplex, w: &LoopWord) -> Result<()> {
    for (x, _) in w.factors() {
        x.validate(c)?;
        if x.degree() != w.degree + 1 {
            return Err(Error::DegreeMismatch {
                left: x.degree(),
                right: w.degree + 1,
            });
        }
    }
    Ok(())
}

/// The face `d_i : G_n → G_{n-1}`, extended from generators as a
/// homomorphism.
pub fn loop_face(c: &ChainComplex, i: u32, w: &LoopWord) -> Result<LoopWord> {
    let n = w.degree();
    if n == 0 {
        return Err(Error::FaceAtDegreeZero);
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    check_word(c, w)?;
    let mut out = LoopWord::identity(n - 1);
    for (x, exp) in w.factors() {
        let image = if i == 0 {
            let d0 = class_of(&gamma_face(c, 0, x)?)?;
            let d1 = class_of(&gamma_face(c, 1, x)?)?;
            d0.invert().multiply(&d1)?
        } else {
            class_of(&gamma_face(c, i + 1, x)?)?
        };
        out = out.multiply(&image.pow(exp))?;
    }
    Ok(out)
}

/// The degeneracy `s_i : G_n → G_{n+1}`.
pub fn loop_degeneracy(c: &ChainComplex, i: u32, w: &LoopWord) -> Result<LoopWord> {
    let n = w.degree();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    check_word(c, w)?;
    let mut out = LoopWord::identity(n + 1);
    for (x, exp) in w.factors() {
        let image = class_of(&gamma_degeneracy(c, i + 1, x)?)?;
        out = out.multiply(&image.pow(exp))?;
    }
    Ok(out)
}

/// `true` when all faces `d_1, …, d_n` of `w` are the identity, i.e. `w`
/// is a chain of the group's Moore complex.
pub fn is_moore_chain(c: &ChainComplex, w: &LoopWord) -> Result<bool> {
    for i in 1..=w.degree() {
        if !loop_face(c, i, w)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fill the horn `Λ^k` at `degree`: `faces` maps each `i ≠ k` in
/// `0..=degree` to a word of degree `degree - 1`; the result `u` satisfies
/// `d_i u = faces[i]` for every such `i`.
///
/// The filler is built by the classical sweep — repair the faces below `k`
/// upward, then the faces above `k` downward; each step multiplies by a
/// degeneracy, which leaves the already-repaired faces fixed. Face
/// compatibility (`d_i w_j = d_{j-1} w_i` for `i < j`) is checked up front,
/// and the output is re-verified against every face of the horn.
pub fn fill_horn(
    c: &ChainComplex,
    degree: u32,
    k: u32,
    faces: &BTreeMap<u32, LoopWord>,
) -> Result<LoopWord> {
    if degree == 0 || k > degree {
        return Err(Error::invalid(
            "horn",
            format!("no horn Λ^{k} in degree {degree}"),
        ));
    }
    for i in 0..=degree {
        let face = faces.get(&i);
        if i == k {
            if face.is_some() {
                return Err(Error::MalformedHorn { degree, missing: k });
            }
            continue;
        }
        match face {
            None => return Err(Error::MalformedHorn { degree, missing: k }),
            Some(w) => {
                if w.degree() != degree - 1 {
                    return Err(Error::DegreeMismatch {
                        left: w.degree(),
                        right: degree - 1,
                    });
                }
                check_word(c, w)?;
            }
        }
    }
    if faces.len() != degree as usize {
        return Err(Error::MalformedHorn { degree, missing: k });
    }

    // Pairwise compatibility, skipping the missing index.
    if degree >= 2 {
        for j in 0..=degree {
            for i in 0..j {
                if i == k || j == k {
                    continue;
                }
                if loop_face(c, i, &faces[&j])? != loop_face(c, j - 1, &faces[&i])? {
                    return Err(Error::IncompatibleHorn { i, j });
                }
            }
        }
    }

    let mut u = LoopWord::identity(degree);
    for i in 0..k {
        let correction = loop_face(c, i, &u)?.invert().multiply(&faces[&i])?;
        u = u.multiply(&loop_degeneracy(c, i, &correction)?)?;
    }
    for i in (k + 1..=degree).rev() {
        let correction = loop_face(c, i, &u)?.invert().multiply(&faces[&i])?;
        u = u.multiply(&loop_degeneracy(c, i - 1, &correction)?)?;
    }

    for (&i, w) in faces {
        if &loop_face(c, i, &u)? != w {
            return Err(Error::FillerVerification { index: i });
        }
    }
    Ok(u)
}

/// Winding number of a degree-1 word over the sphere complex. Every
/// generator there is a multiple `m·z` of the degree-2 chain generator, and
/// the invariant sums `exponent × m`; it is invariant under conjugation and
/// additive under multiplication, and detects the group's `π_1`.
pub fn degree_invariant(w: &LoopWord) -> Result<i64> {
    if w.degree() != 1 {
        return Err(Error::DegreeMismatch {
            left: w.degree(),
            right: 1,
        });
    }
    let mut total = 0i64;
    for (x, exp) in w.factors() {
        let mut terms = x.terms();
        let weight = match (terms.next(), terms.next()) {
            (Some((word, coeffs)), None) if word.is_empty() && coeffs.len() == 1 => coeffs[0],
            _ => {
                return Err(Error::invalid(
                    "degree invariant",
                    format!("factor {x} is not a multiple of the degree-2 generator"),
                ))
            }
        };
        total += exp * weight;
    }
    Ok(total)
}

/// The degeneracy words `J` for which `ζ(s_J z)` is a free generator of the
/// degree-`n` loop group over the sphere complex: words from degree 2 to
/// `n + 1` whose innermost index is nonzero. There are exactly `n` of them.
pub fn symbol_generator_words(n: u32) -> Vec<DegeneracyWord> {
    if n + 1 < 2 {
        return Vec::new();
    }
    enumerate_degeneracy_words(2, n + 1)
        .expect("2 <= n + 1")
        .into_iter()
        .filter(|w| w.innermost() != Some(0))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct FactorWire {
    gen: GammaElement,
    exp: i64,
}

#[derive(Serialize, Deserialize)]
struct LoopWire {
    deg: u32,
    factors: Vec<FactorWire>,
}

impl Serialize for LoopWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LoopWire {
            deg: self.degree,
            factors: self
                .factors
                .iter()
                .map(|f| FactorWire {
                    gen: f.gen.element().clone(),
                    exp: f.exp,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LoopWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = LoopWire::deserialize(deserializer)?;
        // Lenient: fold the factors through the class map, so unreduced
        // input (adjacent duplicates, s_0-images, zero exponents) lands on
        // its reduced form rather than being rejected.
        let mut out = LoopWord::identity(wire.deg);
        for f in wire.factors {
            if f.gen.degree() != wire.deg + 1 {
                return Err(D::Error::custom(format!(
                    "factor of degree {} cannot generate a degree-{} word",
                    f.gen.degree(),
                    wire.deg
                )));
            }
            let class = class_of(&f.gen).map_err(D::Error::custom)?;
            out = out.multiply(&class.pow(f.exp)).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
