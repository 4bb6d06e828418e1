//! Framed Reidemeister rewrites on sliced diagrams, plus generators for
//! randomized isotopy testing.
//!
//! Every move preserves the component partition, the canonical component
//! numbering, and the flow direction at each component's anchor port: new
//! ports only ever appear above a boundary the affected strands already
//! cross. An orientation chosen for the input therefore directs the output
//! verbatim.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{layout, slice_in_width, Piece, SlicedDiagram, TangleError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Insert a cancelling CrossPos/CrossNeg pair on strands `pos`, `pos+1`
    /// at boundary `level`.
    R2 { level: usize, pos: usize },
    /// Braid relation on three stacked same-sense crossings in slices
    /// `slice..slice+3`, strands `pos..pos+3`.
    R3 { slice: usize, pos: usize },
    /// Replace the three-slice curl whose strand enters at `pos` with the
    /// matching full twist.
    FramedR1 { slice: usize, pos: usize },
    /// Straighten the two-slice zig-zag whose strand enters at `pos`.
    SlideCupCap { slice: usize, pos: usize },
}

impl Move {
    fn name(self) -> &'static str {
        match self {
            Move::R2 { .. } => "R2",
            Move::R3 { .. } => "R3",
            Move::FramedR1 { .. } => "FramedR1",
            Move::SlideCupCap { .. } => "SlideCupCap",
        }
    }
}

/// Which side of the strand a curl or zig-zag bulges to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

pub fn apply_move(d: &SlicedDiagram, m: Move) -> Result<SlicedDiagram, TangleError> {
    let fail = || match m {
        Move::R2 { level, pos } => {
            Err(TangleError::MoveNotApplicable { name: m.name(), slice: level, pos })
        }
        Move::R3 { slice, pos }
        | Move::FramedR1 { slice, pos }
        | Move::SlideCupCap { slice, pos } => {
            Err(TangleError::MoveNotApplicable { name: m.name(), slice, pos })
        }
    };
    match m {
        Move::R2 { level, pos } => {
            if level > d.num_slices() || d.boundary_width(level) < pos + 2 {
                return fail();
            }
            let w = d.boundary_width(level);
            let mut out = d.clone();
            out.slices_mut().insert(level, padded(w, pos, Piece::CrossNeg));
            out.slices_mut().insert(level, padded(w, pos, Piece::CrossPos));
            finish(out)
        }
        Move::R3 { slice, pos } => {
            if slice + 3 > d.num_slices() {
                return fail();
            }
            let maps = (0..3).map(|i| slot_map(&d.slices()[slice + i]));
            let Some(window) = maps.collect::<Option<Vec<_>>>() else {
                return fail();
            };
            // lower = true: crossings sit at pos, pos+1, pos (read upward).
            let matches = |lower: bool| -> Option<Piece> {
                let offsets = if lower { [0, 1, 0] } else { [1, 0, 1] };
                let mut kind = None;
                for (row, off) in window.iter().zip(offsets) {
                    let k = crossing_at(row, pos + off)?;
                    if *kind.get_or_insert(k) != k {
                        return None;
                    }
                    id_at(row, pos + 2 - 2 * off)?;
                }
                kind
            };
            let (kind, to_lower) = match (matches(true), matches(false)) {
                (Some(k), _) => (k, false),
                (_, Some(k)) => (k, true),
                _ => return fail(),
            };
            let mut out = d.clone();
            for (i, row) in window.iter().enumerate() {
                let here_lower = (i == 1) != to_lower;
                out.slices_mut()[slice + i] = rebuild(row, pos, here_lower, kind);
            }
            finish(out)
        }
        Move::FramedR1 { slice, pos } => {
            if slice + 3 > d.num_slices() {
                return fail();
            }
            let w = d.boundary_width(slice);
            if pos >= w {
                return fail();
            }
            let (s0, s1, s2) = (&d.slices()[slice], &d.slices()[slice + 1], &d.slices()[slice + 2]);
            let crossing = [Side::Right, Side::Left].into_iter().find_map(|side| {
                let kind = *curl_kind(s1, w, pos, side)?;
                let (cup, cap) = curl_frame(w, pos, side);
                (*s0 == cup && *s2 == cap).then_some(kind)
            });
            let Some(kind) = crossing else { return fail() };
            let twist = if kind == Piece::CrossPos { Piece::TwistPos } else { Piece::TwistNeg };
            let mut out = d.clone();
            out.slices_mut().splice(slice..slice + 3, [padded(w, pos, twist)]);
            finish(out)
        }
        Move::SlideCupCap { slice, pos } => {
            if slice + 1 >= d.num_slices() {
                return fail();
            }
            let cup_right = find_piece(&d.slices()[slice], Piece::Cup, pos + 1, false);
            let cap_right = find_piece(&d.slices()[slice + 1], Piece::Cap, pos, true);
            let cup_left = find_piece(&d.slices()[slice], Piece::Cup, pos, false);
            let cap_left = find_piece(&d.slices()[slice + 1], Piece::Cap, pos + 1, true);
            let (cup_idx, cap_idx) = match (cup_right, cap_right, cup_left, cap_left) {
                (Some(cup), Some(cap), _, _) => (cup, cap),
                (_, _, Some(cup), Some(cap)) => (cup, cap),
                _ => return fail(),
            };
            let mut out = d.clone();
            out.slices_mut()[slice].remove(cup_idx);
            out.slices_mut()[slice + 1].remove(cap_idx);
            finish(out)
        }
    }
}

/// Slice of `w` parallel strands with `piece` dropped in at slot `pos`.
fn padded(w: usize, pos: usize, piece: Piece) -> Vec<Piece> {
    let trailing = w - pos - piece.arity_in().max(piece.arity_out());
    let mut row = vec![Piece::Id; pos];
    row.push(piece);
    row.extend(std::iter::repeat(Piece::Id).take(trailing));
    row
}

/// Per-slot (piece, start-slot) view of a width-preserving slice; None when
/// the slice contains a cup or cap (slots would not line up).
fn slot_map(slice: &[Piece]) -> Option<Vec<(Piece, usize)>> {
    let mut map = Vec::new();
    for &p in slice {
        if p.arity_in() != p.arity_out() {
            return None;
        }
        let start = map.len();
        for _ in 0..p.arity_in() {
            map.push((p, start));
        }
    }
    Some(map)
}

fn crossing_at(row: &[(Piece, usize)], slot: usize) -> Option<Piece> {
    match row.get(slot) {
        Some(&(p, start)) if p.is_crossing() && start == slot => Some(p),
        _ => None,
    }
}

fn id_at(row: &[(Piece, usize)], slot: usize) -> Option<()> {
    matches!(row.get(slot), Some(&(Piece::Id, _))).then_some(())
}

/// Rebuilds a slice from its slot map with the 3-slot window at `pos`
/// replaced by a crossing low (`[kind, Id]`) or high (`[Id, kind]`).
fn rebuild(row: &[(Piece, usize)], pos: usize, lower: bool, kind: Piece) -> Vec<Piece> {
    let mut out = Vec::new();
    let mut slot = 0;
    while slot < row.len() {
        if slot == pos {
            if lower {
                out.push(kind);
                out.push(Piece::Id);
            } else {
                out.push(Piece::Id);
                out.push(kind);
            }
            slot += 3;
        } else {
            let (p, start) = row[slot];
            if start == slot {
                out.push(p);
            }
            slot += 1;
        }
    }
    out
}

/// The cup and cap slices framing a curl at strand `pos` of width `w`.
fn curl_frame(w: usize, pos: usize, side: Side) -> (Vec<Piece>, Vec<Piece>) {
    let at = match side {
        Side::Right => pos + 1,
        Side::Left => pos,
    };
    (padded(w + 2, at, Piece::Cup), padded(w + 2, at, Piece::Cap))
}

/// The crossing inside a curl's middle slice, if that slice has the right
/// shape.
fn curl_kind(s1: &[Piece], w: usize, pos: usize, side: Side) -> Option<&Piece> {
    let at = match side {
        Side::Right => pos,
        Side::Left => pos + 1,
    };
    if s1.len() != w + 1 {
        return None;
    }
    let kind = s1.get(at)?;
    if !kind.is_crossing() {
        return None;
    }
    let shape_ok = s1[..at].iter().all(|&p| p == Piece::Id)
        && s1[at + 1..].iter().all(|&p| p == Piece::Id);
    shape_ok.then_some(kind)
}

/// Index in `slice` of a `want` piece whose first input (`by_input`) or
/// output slot is `slot`.
fn find_piece(slice: &[Piece], want: Piece, slot: usize, by_input: bool) -> Option<usize> {
    layout(slice)
        .iter()
        .position(|&(p, i, o)| p == want && slot == if by_input { i } else { o })
}

fn finish(mut d: SlicedDiagram) -> Result<SlicedDiagram, TangleError> {
    d.slices_mut().retain(|s| !s.is_empty());
    d.validate()?;
    Ok(d)
}

/// Stitches a curl (cup, crossing, cap) into the strand at `pos`, entering
/// at boundary `level`. `positive` picks the crossing sense, which fixes the
/// curl's framing contribution.
pub fn insert_curl(
    d: &SlicedDiagram,
    level: usize,
    pos: usize,
    positive: bool,
    side: Side,
) -> Result<SlicedDiagram, TangleError> {
    let w = d.boundary_width(level.min(d.num_slices()));
    if level > d.num_slices() || pos >= w {
        return Err(TangleError::MoveNotApplicable { name: "insert_curl", slice: level, pos });
    }
    let kind = if positive { Piece::CrossPos } else { Piece::CrossNeg };
    let (cup, cap) = curl_frame(w, pos, side);
    debug_assert_eq!(slice_in_width(&cup), w);
    let cross_at = match side {
        Side::Right => pos,
        Side::Left => pos + 1,
    };
    let middle = padded(w + 2, cross_at, kind);
    let mut out = d.clone();
    out.slices_mut().splice(level..level, [cup, middle, cap]);
    finish(out)
}

/// Stitches a zig-zag (cup then cap) into the strand at `pos`, entering at
/// boundary `level`.
pub fn insert_zigzag(
    d: &SlicedDiagram,
    level: usize,
    pos: usize,
    side: Side,
) -> Result<SlicedDiagram, TangleError> {
    let w = d.boundary_width(level.min(d.num_slices()));
    if level > d.num_slices() || pos >= w {
        return Err(TangleError::MoveNotApplicable { name: "insert_zigzag", slice: level, pos });
    }
    let (cup_at, cap_at) = match side {
        Side::Right => (pos + 1, pos),
        Side::Left => (pos, pos + 1),
    };
    let cup = padded(w + 2, cup_at, Piece::Cup);
    let cap = padded(w + 2, cap_at, Piece::Cap);
    let mut out = d.clone();
    out.slices_mut().splice(level..level, [cup, cap]);
    finish(out)
}

/// Random valid closed diagram, deterministic in the seed. Grows a body of
/// single-feature slices under the given budgets, then caps everything off.
pub fn random_diagram(width_budget: usize, crossing_budget: usize, seed: u64) -> SlicedDiagram {
    let width_budget = width_budget.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slices = vec![vec![Piece::Cup]];
    let mut w = 2usize;
    let mut crossings = 0usize;
    for _ in 0..rng.random_range(3..14) {
        let mut choices: Vec<(u32, Piece)> = Vec::new();
        if w + 2 <= width_budget {
            choices.push((3, Piece::Cup));
        }
        if w >= 2 {
            choices.push((2, Piece::Cap));
            if crossings < crossing_budget {
                let kind = if rng.random() { Piece::CrossPos } else { Piece::CrossNeg };
                choices.push((5, kind));
            }
        }
        if w >= 1 {
            let twist = if rng.random() { Piece::TwistPos } else { Piece::TwistNeg };
            choices.push((1, twist));
        }

        let total: u32 = choices.iter().map(|&(weight, _)| weight).sum();
        let mut roll = rng.random_range(0..total);
        let piece = choices
            .iter()
            .find(|&&(weight, _)| {
                if roll < weight {
                    true
                } else {
                    roll -= weight;
                    false
                }
            })
            .expect("weights cover the roll")
            .1;

        let new_w = w + piece.arity_out() - piece.arity_in();
        let span_w = w.max(new_w);
        let span = piece.arity_in().max(piece.arity_out());
        let pos = rng.random_range(0..=span_w - span);
        slices.push(padded(span_w, pos, piece));
        w = new_w;
        if piece.is_crossing() {
            crossings += 1;
        }
    }
    while w > 0 {
        let pos = rng.random_range(0..w - 1);
        slices.push(padded(w, pos, Piece::Cap));
        w -= 2;
    }
    SlicedDiagram::new(slices).expect("generator respects widths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{parse, Orientation};

    fn unknot_wide() -> SlicedDiagram {
        parse("u\n| |\nn").unwrap()
    }

    #[test]
    fn r2_inserts_a_cancelling_pair() {
        let d = apply_move(&unknot_wide(), Move::R2 { level: 1, pos: 0 }).unwrap();
        assert_eq!(d, parse("u\nx+\nx-\n| |\nn").unwrap());
        assert_eq!(d.num_components().unwrap(), 1);
        assert_eq!(
            d.writhe(&Orientation::all_forward(1)).unwrap(),
            unknot_wide().writhe(&Orientation::all_forward(1)).unwrap()
        );
        assert!(apply_move(&unknot_wide(), Move::R2 { level: 0, pos: 0 }).is_err());
        assert!(apply_move(&unknot_wide(), Move::R2 { level: 1, pos: 1 }).is_err());
    }

    #[test]
    fn r3_rewrites_the_braid_relation_both_ways() {
        // sigma_1 sigma_2 sigma_1 inside a plat closure on three strands.
        let d = parse("u u u\nx+ | | | |\n| x+ | | |\nx+ | | | |\nn n n").unwrap();
        let m = Move::R3 { slice: 1, pos: 0 };
        let e = apply_move(&d, m).unwrap();
        assert_eq!(e, parse("u u u\n| x+ | | |\nx+ | | | |\n| x+ | | |\nn n n").unwrap());
        assert_eq!(apply_move(&e, m).unwrap(), d);
        assert_eq!(e.num_components().unwrap(), d.num_components().unwrap());

        // Mixed senses do not match the relation.
        let bad = parse("u u u\nx+ | | | |\n| x- | | |\nx+ | | | |\nn n n").unwrap();
        assert!(apply_move(&bad, m).is_err());
        assert!(apply_move(&d, Move::R3 { slice: 0, pos: 0 }).is_err());
    }

    #[test]
    fn framed_r1_trades_a_curl_for_a_twist() {
        for side in [Side::Left, Side::Right] {
            for positive in [true, false] {
                let unknot = parse("u\nn").unwrap();
                let curled = insert_curl(&unknot, 1, 0, positive, side).unwrap();
                assert_eq!(curled.num_components().unwrap(), 1);
                let d = apply_move(&curled, Move::FramedR1 { slice: 1, pos: 0 }).unwrap();
                let twist = if positive { "t+" } else { "t-" };
                assert_eq!(d, parse(&format!("u\n{twist} |\nn")).unwrap());
            }
        }
        assert!(apply_move(&unknot_wide(), Move::FramedR1 { slice: 0, pos: 0 }).is_err());
    }

    #[test]
    fn curls_carry_their_writhe() {
        let unknot = parse("u\nn").unwrap();
        let o = Orientation::all_forward(1);
        for side in [Side::Left, Side::Right] {
            let pos_curl = insert_curl(&unknot, 1, 1, true, side).unwrap();
            assert_eq!(pos_curl.writhe(&o).unwrap(), 1);
            let neg_curl = insert_curl(&unknot, 1, 1, false, side).unwrap();
            assert_eq!(neg_curl.writhe(&o).unwrap(), -1);
        }
    }

    #[test]
    fn slide_straightens_zigzags() {
        for side in [Side::Left, Side::Right] {
            let d = insert_zigzag(&unknot_wide(), 1, 1, side).unwrap();
            assert_eq!(d.num_components().unwrap(), 1);
            let back = apply_move(&d, Move::SlideCupCap { slice: 1, pos: 1 }).unwrap();
            // Straightening leaves two identity slices where the bulge was.
            assert_eq!(back, parse("u\n| |\n| |\n| |\nn").unwrap());
        }
        assert!(apply_move(&unknot_wide(), Move::SlideCupCap { slice: 0, pos: 0 }).is_err());
    }

    #[test]
    fn generator_is_deterministic_and_valid() {
        assert_eq!(random_diagram(8, 5, 42), random_diagram(8, 5, 42));
        let mut distinct = std::collections::HashSet::new();
        for seed in 0..60 {
            let d = random_diagram(10, 6, seed);
            assert!(d.validate().is_ok());
            assert!(d.is_closed());
            assert!(d.crossing_count() <= 6);
            assert!((0..=d.num_slices()).all(|l| d.boundary_width(l) <= 10));
            assert!(d.num_components().unwrap() >= 1);
            distinct.insert(d);
        }
        assert!(distinct.len() > 40, "seeds should mostly give distinct diagrams");
    }
}
