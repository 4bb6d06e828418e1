//! Kauffman bracket by direct state-sum expansion.
//!
//! Each crossing is smoothed two ways; a state is a choice for every
//! crossing. The bracket is the weighted sum of loop counts over all 2^c
//! states, times one framing unit per twist piece. Exponential in the
//! crossing number, so [`MAX_CROSSINGS`] caps the input; the cap is far
//! above anything the test corpus needs.

use thiserror::Error;

use crate::laurent::LaurentQ;
use crate::tangle::{layout, Orientation, Piece, SlicedDiagram, TangleError};

/// Hard ceiling on the state-sum size (2^20 states).
pub const MAX_CROSSINGS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error("diagram has {count} crossings, the state sum caps at {max}")]
    TooManyCrossings { count: usize, max: usize },
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<u32>,
    classes: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), classes: n }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a as u32), self.find(b as u32));
        if ra != rb {
            self.parent[ra as usize] = rb;
            self.classes -= 1;
        }
    }
}

/// The value of a disjoint circle.
fn loop_value() -> LaurentQ {
    -(LaurentQ::q_pow(4) + LaurentQ::q_pow(-4))
}

/// Kauffman bracket of a closed diagram. Normalized so the empty diagram
/// gives 1 and each extra circle multiplies by `-q - q^-1`; a positive
/// twist piece multiplies by `-q^(3/2)`.
pub fn kauffman_bracket(d: &SlicedDiagram) -> Result<LaurentQ, SkeinError> {
    d.require_closed()?;
    let c = d.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(SkeinError::TooManyCrossings { count: c, max: MAX_CROSSINGS });
    }

    let mut offsets = Vec::with_capacity(d.num_slices() + 2);
    let mut total = 0usize;
    for level in 0..=d.num_slices() {
        offsets.push(total);
        total += d.boundary_width(level);
    }
    offsets.push(total);

    // Ports joined by non-crossing pieces are common to every state.
    let mut base = UnionFind::new(total);
    let mut crossings = Vec::with_capacity(c);
    for (s, slice) in d.slices().iter().enumerate() {
        for (piece, i, o) in layout(slice) {
            let (i, o) = (offsets[s] + i, offsets[s + 1] + o);
            match piece {
                Piece::Id | Piece::TwistPos | Piece::TwistNeg => base.join(i, o),
                Piece::Cup => base.join(o, o + 1),
                Piece::Cap => base.join(i, i + 1),
                Piece::CrossPos | Piece::CrossNeg => {
                    crossings.push((piece == Piece::CrossPos, [i, i + 1, o, o + 1]));
                }
            }
        }
    }

    let delta = loop_value();
    let mut sum = LaurentQ::zero();
    for state in 0u32..1 << c {
        let mut uf = base.clone();
        let mut half_exp = 0i64;
        for (k, &(positive, [i0, i1, o0, o1])) in crossings.iter().enumerate() {
            let parallel = state >> k & 1 == 0;
            if parallel {
                uf.join(i0, o0);
                uf.join(i1, o1);
            } else {
                uf.join(i0, i1);
                uf.join(o0, o1);
            }
            half_exp += if parallel == positive { 1 } else { -1 };
        }
        let term = LaurentQ::monomial(2 * half_exp, 1) * delta.pow(uf.classes as u32);
        sum.add_assign_ref(&term);
    }
    Ok(&sum * &LaurentQ::unit_pow(true, 6, d.twist_excess()))
}

/// Jones polynomial: the bracket rescaled by the writhe so that both
/// framed first moves act trivially. Normalized to `-q - q^-1` on the
/// unknot.
pub fn jones(d: &SlicedDiagram, o: &Orientation) -> Result<LaurentQ, SkeinError> {
    let w = d.writhe(o)?;
    let k = kauffman_bracket(d)?;
    Ok(&k * &LaurentQ::unit_pow(true, 6, -w))
}
