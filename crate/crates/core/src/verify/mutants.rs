//! Deliberately broken rule implementations, used only as negative controls.
//!
//! Each function mirrors one production rule with a single plausible mistake
//! baked in — the kind a hurried port would make. Nothing in this module is
//! reachable from production code; the negative-control suite runs each
//! mutant through the same detectors that guard the real implementation and
//! fails loudly if any mutant slips through.

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::gamma::GammaElement;
use crate::loop_group::{class_of, loop_face, LoopWord};
use crate::operators::{OpKind, Operator, OperatorWord};
use crate::sphere::{s2_face, BaseSimplex, Cell};
use crate::twisted_product::TotalSimplex;
use crate::twisting::eta;
use crate::Result;

/// Which rewrite rule the broken engine gets wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineBug {
    /// Faces are inserted into the ascending face list without the index
    /// shift that the swap identity demands.
    FaceInsertWithoutShift,
    /// Degeneracies are inserted without incrementing the indices they
    /// pass, losing the swap identity's `+1`.
    DegeneracyInsertWithoutShift,
    /// `d_i s_j` cancels only at `i = j`, forgetting the `i = j + 1` case.
    CancelOnlyAtEqualIndex,
}

/// A re-implementation of word normalization with one bug injected. The
/// result may fail to be a well-formed word at all, which the caller treats
/// as detection just like a semantic mismatch.
pub fn broken_normalize(bug: EngineBug, w: &OperatorWord) -> Result<OperatorWord> {
    let mut degs: Vec<u32> = Vec::new(); // descending display order
    let mut faces: Vec<u32> = Vec::new(); // ascending display order
    for op in w.ops().iter().rev() {
        match op.kind {
            OpKind::Degeneracy => {
                let i = op.index;
                let mut pos = 0;
                while pos < degs.len() && i <= degs[pos] {
                    if bug != EngineBug::DegeneracyInsertWithoutShift {
                        degs[pos] += 1;
                    }
                    pos += 1;
                }
                degs.insert(pos, i);
            }
            OpKind::Face => {
                let mut i = op.index;
                let mut cancelled = false;
                let mut pos = 0;
                while pos < degs.len() {
                    let h = degs[pos];
                    if i < h {
                        degs[pos] = h - 1;
                        pos += 1;
                    } else if i == h
                        || (i == h + 1 && bug != EngineBug::CancelOnlyAtEqualIndex)
                    {
                        degs.remove(pos);
                        cancelled = true;
                        break;
                    } else {
                        i -= 1;
                        pos += 1;
                    }
                }
                if !cancelled {
                    let mut pos = 0;
                    while pos < faces.len() && i >= faces[pos] {
                        if bug != EngineBug::FaceInsertWithoutShift {
                            i += 1;
                        }
                        pos += 1;
                    }
                    faces.insert(pos, i);
                }
            }
        }
    }
    let ops: Vec<Operator> = degs
        .into_iter()
        .map(Operator::degeneracy)
        .chain(faces.into_iter().map(Operator::face))
        .collect();
    OperatorWord::new(w.source_degree(), ops)
}

/// A sloppy Γ face: shifts the term's word indices past `i` and absorbs a
/// matching index, but never collapses a term to zero and never applies the
/// chain differential. Produces well-formed (wrong) elements on the inputs
/// the golden tables feed it.
pub fn gamma_face_sloppy(i: u32, x: &GammaElement) -> Result<GammaElement> {
    let n = x.degree();
    if n == 0 {
        return Err(Error::FaceAtDegreeZero);
    }
    let mut out = GammaElement::zero(n - 1);
    for (word, coeffs) in x.terms() {
        let shifted: Vec<u32> = word
            .indices()
            .iter()
            .filter(|&&h| h != i)
            .map(|&h| if h > i { h - 1 } else { h })
            .collect();
        let word = crate::operators::DegeneracyWord::from_descending(shifted)?;
        let term = GammaElement::from_term(n - 1, word, coeffs.to_vec())?;
        out = out.add(&term)?;
    }
    Ok(out)
}

fn y_word(indices: &[u32]) -> BaseSimplex {
    BaseSimplex::from_parts(
        Cell::TwoCell,
        crate::operators::DegeneracyWord::from_descending(indices.to_vec())
            .expect("fixed mutant tables use valid words"),
    )
    .expect("fixed mutant tables use valid simplices")
}

fn zeta_symbol(indices: &[u32], m: i64) -> LoopWord {
    class_of(&GammaElement::sphere_symbol(indices, m).expect("valid symbol"))
        .expect("positive degree")
}

/// Twisting mutant: the value on `s_1 y` is swapped for the `s_2 y` value.
/// Breaks the `d_0` twisting identity.
pub fn twisting_swapped_degree_three(b: &BaseSimplex) -> Result<LoopWord> {
    if b == &y_word(&[1]) {
        return Ok(zeta_symbol(&[2], 1));
    }
    eta(1, b)
}

/// Twisting mutant: the value on `s_2 y` is squared. Breaks the inner-face
/// identity `d_i τ(b) = τ(d_{i+1} b)`.
pub fn twisting_doubled_degree_three(b: &BaseSimplex) -> Result<LoopWord> {
    if b == &y_word(&[2]) {
        return Ok(zeta_symbol(&[2], 1).pow(2));
    }
    eta(1, b)
}

/// Twisting mutant: trivial on the 2-cell while the degree-3 values are
/// kept. Breaks the degeneracy identity `s_i τ(b) = τ(s_{i+1} b)`.
pub fn twisting_trivial_on_two_cell(b: &BaseSimplex) -> Result<LoopWord> {
    if b == &BaseSimplex::two_cell() {
        return Ok(LoopWord::identity(1));
    }
    eta(1, b)
}

/// Twisting mutant: a nonvanishing value on the `s_0`-image `s_0 y`.
/// Breaks `τ(s_0 b) = e`.
pub fn twisting_alive_on_s0_image(b: &BaseSimplex) -> Result<LoopWord> {
    if b == &y_word(&[0]) {
        return Ok(zeta_symbol(&[1], 1));
    }
    eta(1, b)
}

/// Total-space mutant: every face taken componentwise, forgetting the
/// twist on `d_0`. This is a perfectly valid simplicial set — the product
/// bundle — so the law suites cannot catch it; only the golden `d_0` value
/// and the comparison into the universal bundle do.
pub fn untwisted_face(i: u32, t: &TotalSimplex) -> Result<TotalSimplex> {
    let c = ChainComplex::sphere(2);
    TotalSimplex::new(loop_face(&c, i, t.fiber())?, s2_face(i, t.base())?)
}
