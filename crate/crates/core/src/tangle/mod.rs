//! Sliced (Morse position) diagrams of framed tangles.
//!
//! A diagram is a bottom-to-top stack of slices; each slice is a
//! left-to-right row of elementary pieces. Composition is stacking, the
//! tensor product is side-by-side placement. A closed diagram (no loose ends
//! top or bottom) is a framed link; twists carry the framing, so a plain
//! strand means blackboard framing.

mod catalog;
mod connect;
mod dsl;
mod moves;

pub use catalog::{catalog_diagram, CATALOG_NAMES};
pub use connect::{Components, Orientation};
pub use dsl::{parse, DslError};
pub use moves::{apply_move, insert_curl, insert_zigzag, random_diagram, Move, Side};

use thiserror::Error;

/// Elementary diagram piece. Slots are numbered left to right; a crossing's
/// SW-NE strand runs from its left input to its right output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Piece {
    /// Vertical strand.
    Id,
    /// Local minimum: no inputs, two outputs.
    Cup,
    /// Local maximum: two inputs, no outputs.
    Cap,
    /// Crossing with the SW-NE strand on top.
    CrossPos,
    /// Crossing with the SW-NE strand underneath.
    CrossNeg,
    /// Positive full twist of the ribbon.
    TwistPos,
    /// Negative full twist of the ribbon.
    TwistNeg,
}

impl Piece {
    pub fn arity_in(self) -> usize {
        match self {
            Piece::Cup => 0,
            Piece::Cap | Piece::CrossPos | Piece::CrossNeg => 2,
            _ => 1,
        }
    }

    pub fn arity_out(self) -> usize {
        match self {
            Piece::Cap => 0,
            Piece::Cup | Piece::CrossPos | Piece::CrossNeg => 2,
            _ => 1,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Piece::Id => "|",
            Piece::Cup => "u",
            Piece::Cap => "n",
            Piece::CrossPos => "x+",
            Piece::CrossNeg => "x-",
            Piece::TwistPos => "t+",
            Piece::TwistNeg => "t-",
        }
    }

    /// Piece of the mirror-image diagram (over/under and twist sense swap).
    pub fn mirrored(self) -> Piece {
        match self {
            Piece::CrossPos => Piece::CrossNeg,
            Piece::CrossNeg => Piece::CrossPos,
            Piece::TwistPos => Piece::TwistNeg,
            Piece::TwistNeg => Piece::TwistPos,
            p => p,
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Piece::CrossPos | Piece::CrossNeg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("slice {slice} expects {expected} inputs but is fed {found}")]
    WidthMismatch { slice: usize, expected: usize, found: usize },
    #[error("cannot stack: lower diagram ends with width {lower}, upper starts with width {upper}")]
    ComposeMismatch { lower: usize, upper: usize },
    #[error("diagram is not closed (bottom width {bottom}, top width {top})")]
    NotClosed { bottom: usize, top: usize },
    #[error("orientation assigns {given} signs but the diagram has {needed} components")]
    OrientationSize { given: usize, needed: usize },
    #[error("component index {index} out of range: {count} components")]
    ComponentRange { index: usize, count: usize },
    #[error("{name} does not apply at slice {slice}, position {pos}")]
    MoveNotApplicable { name: &'static str, slice: usize, pos: usize },
}

/// A stack of slices, bottom first. Always width-consistent: construction
/// rejects anything else, so a held value is valid by fiat.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SlicedDiagram {
    slices: Vec<Vec<Piece>>,
}

pub(crate) fn slice_in_width(slice: &[Piece]) -> usize {
    slice.iter().map(|p| p.arity_in()).sum()
}

pub(crate) fn slice_out_width(slice: &[Piece]) -> usize {
    slice.iter().map(|p| p.arity_out()).sum()
}

/// Each piece of a slice with its first input slot and first output slot.
pub(crate) fn layout(slice: &[Piece]) -> Vec<(Piece, usize, usize)> {
    let mut out = Vec::with_capacity(slice.len());
    let (mut i, mut o) = (0, 0);
    for &p in slice {
        out.push((p, i, o));
        i += p.arity_in();
        o += p.arity_out();
    }
    out
}

impl SlicedDiagram {
    pub fn empty() -> Self {
        SlicedDiagram::default()
    }

    pub fn new(slices: Vec<Vec<Piece>>) -> Result<Self, TangleError> {
        let d = SlicedDiagram { slices };
        d.validate()?;
        Ok(d)
    }

    /// Re-checks the width invariant. `new` already enforces it; this is the
    /// public entry point for reporting.
    pub fn validate(&self) -> Result<(), TangleError> {
        for (i, pair) in self.slices.windows(2).enumerate() {
            let found = slice_out_width(&pair[0]);
            let expected = slice_in_width(&pair[1]);
            if found != expected {
                return Err(TangleError::WidthMismatch { slice: i + 1, expected, found });
            }
        }
        Ok(())
    }

    pub fn slices(&self) -> &[Vec<Piece>] {
        &self.slices
    }

    pub fn num_slices(&self) -> usize {
        self.slices.len()
    }

    pub fn bottom_width(&self) -> usize {
        self.slices.first().map_or(0, |s| slice_in_width(s))
    }

    pub fn top_width(&self) -> usize {
        self.slices.last().map_or(0, |s| slice_out_width(s))
    }

    /// Strand count at boundary `level`, with level 0 below the first slice
    /// and level `num_slices()` above the last.
    pub fn boundary_width(&self, level: usize) -> usize {
        if level == self.slices.len() {
            self.top_width()
        } else {
            slice_in_width(&self.slices[level])
        }
    }

    pub fn is_closed(&self) -> bool {
        self.bottom_width() == 0 && self.top_width() == 0
    }

    pub(crate) fn require_closed(&self) -> Result<(), TangleError> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(TangleError::NotClosed { bottom: self.bottom_width(), top: self.top_width() })
        }
    }

    /// Stacks `upper` on top of `self`.
    pub fn compose(&self, upper: &SlicedDiagram) -> Result<SlicedDiagram, TangleError> {
        if !self.slices.is_empty() && !upper.slices.is_empty() && self.top_width() != upper.bottom_width() {
            return Err(TangleError::ComposeMismatch {
                lower: self.top_width(),
                upper: upper.bottom_width(),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(upper.slices.iter().cloned());
        SlicedDiagram::new(slices)
    }

    /// Side-by-side placement; the shorter diagram is padded on top with
    /// identity slices of its final width.
    pub fn tensor(&self, right: &SlicedDiagram) -> SlicedDiagram {
        let height = self.num_slices().max(right.num_slices());
        let mut slices = Vec::with_capacity(height);
        for level in 0..height {
            let mut row = Vec::new();
            match self.slices.get(level) {
                Some(s) => row.extend_from_slice(s),
                None => row.extend(std::iter::repeat(Piece::Id).take(self.top_width())),
            }
            match right.slices.get(level) {
                Some(s) => row.extend_from_slice(s),
                None => row.extend(std::iter::repeat(Piece::Id).take(right.top_width())),
            }
            slices.push(row);
        }
        SlicedDiagram::new(slices).expect("tensor of valid diagrams is valid")
    }

    /// Mirror image: every crossing and twist changes sense.
    pub fn mirror(&self) -> SlicedDiagram {
        let slices = self
            .slices
            .iter()
            .map(|s| s.iter().map(|p| p.mirrored()).collect())
            .collect();
        SlicedDiagram { slices }
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().flatten().filter(|p| p.is_crossing()).count()
    }

    /// Positive minus negative full twists.
    pub fn twist_excess(&self) -> i64 {
        let mut t = 0;
        for p in self.slices.iter().flatten() {
            match p {
                Piece::TwistPos => t += 1,
                Piece::TwistNeg => t -= 1,
                _ => {}
            }
        }
        t
    }

    /// Strand partition of a closed diagram; see [`Components`].
    pub fn components(&self) -> Result<Components, TangleError> {
        Components::analyze(self)
    }

    pub fn num_components(&self) -> Result<usize, TangleError> {
        Ok(self.components()?.count())
    }

    /// Signed crossing count plus twist excess for the directed diagram.
    pub fn writhe(&self, o: &Orientation) -> Result<i64, TangleError> {
        self.components()?.writhe(o)
    }

    pub(crate) fn slices_mut(&mut self) -> &mut Vec<Vec<Piece>> {
        &mut self.slices
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot() -> SlicedDiagram {
        SlicedDiagram::new(vec![vec![Piece::Cup], vec![Piece::Cap]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(unknot().validate().is_ok());
        assert_eq!(
            SlicedDiagram::new(vec![vec![Piece::Cup], vec![Piece::Id]]),
            Err(TangleError::WidthMismatch { slice: 1, expected: 1, found: 2 })
        );
        assert!(SlicedDiagram::empty().validate().is_ok());
        assert!(SlicedDiagram::empty().is_closed());
        assert!(unknot().is_closed());
        let open = SlicedDiagram::new(vec![vec![Piece::Id]]).unwrap();
        assert!(!open.is_closed());
    }

    #[test]
    fn stacking() {
        let cup = SlicedDiagram::new(vec![vec![Piece::Cup]]).unwrap();
        let cap = SlicedDiagram::new(vec![vec![Piece::Cap]]).unwrap();
        assert_eq!(cup.compose(&cap).unwrap(), unknot());
        assert_eq!(unknot().compose(&SlicedDiagram::empty()).unwrap(), unknot());
        assert_eq!(
            cap.compose(&cap),
            Err(TangleError::ComposeMismatch { lower: 0, upper: 2 })
        );
    }

    #[test]
    fn tensoring() {
        let two = unknot().tensor(&unknot());
        assert_eq!(two.num_components().unwrap(), 2);
        assert_eq!(unknot().tensor(&SlicedDiagram::empty()), unknot());
        assert_eq!(SlicedDiagram::empty().tensor(&unknot()), unknot());

        // Different heights: the shorter side gets identity padding.
        let tall = SlicedDiagram::new(vec![
            vec![Piece::Cup],
            vec![Piece::TwistPos, Piece::Id],
            vec![Piece::Cap],
        ])
        .unwrap();
        let t = unknot().tensor(&tall);
        assert!(t.validate().is_ok());
        assert_eq!(t.num_components().unwrap(), 2);
        assert_eq!(t.twist_excess(), 1);
    }

    #[test]
    fn mirroring() {
        let d = SlicedDiagram::new(vec![
            vec![Piece::Cup],
            vec![Piece::TwistPos, Piece::Id],
            vec![Piece::Cap],
        ])
        .unwrap();
        let m = d.mirror();
        assert_eq!(m.twist_excess(), -1);
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn piece_arities() {
        for p in [
            Piece::Id,
            Piece::Cup,
            Piece::Cap,
            Piece::CrossPos,
            Piece::CrossNeg,
            Piece::TwistPos,
            Piece::TwistNeg,
        ] {
            // Every piece preserves strand parity.
            assert_eq!((p.arity_in() + p.arity_out()) % 2, 0);
        }
        assert_eq!(Piece::Cup.arity_in(), 0);
        assert_eq!(Piece::Cup.arity_out(), 2);
        assert_eq!(Piece::Cap.arity_in(), 2);
        assert_eq!(Piece::CrossPos.arity_out(), 2);
    }
}
