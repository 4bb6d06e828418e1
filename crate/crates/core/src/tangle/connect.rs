//! Strand connectivity of a closed diagram: component partition, direction
//! propagation, and the writhe.
//!
//! A port is a point where a strand crosses a slice boundary, indexed by
//! (level, slot). Ports are linked through the pieces; the connected classes
//! of that graph are the link components. Each link carries a parity: a cup
//! or cap reverses the flow direction, everything else preserves it, so one
//! sign per component pins down the direction at every port.

use super::{layout, Piece, SlicedDiagram, TangleError};

/// Direction choice, one sign per component. Component `k` directed forward
/// means the strand flows upward through the component's anchor port (its
/// lowest, then leftmost, slice-boundary crossing).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn all_forward(components: usize) -> Self {
        Orientation { forward: vec![true; components] }
    }

    pub fn from_signs(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn is_forward(&self, component: usize) -> bool {
        self.forward[component]
    }

    /// Flips the listed components.
    pub fn reverse(&self, components: &[usize]) -> Result<Orientation, TangleError> {
        let mut forward = self.forward.clone();
        for &c in components {
            match forward.get_mut(c) {
                Some(s) => *s = !*s,
                None => {
                    return Err(TangleError::ComponentRange { index: c, count: self.forward.len() })
                }
            }
        }
        Ok(Orientation { forward })
    }

    /// All 2^n orientations, all-forward first.
    pub fn enumerate(components: usize) -> impl Iterator<Item = Orientation> {
        assert!(components <= 16, "too many components to enumerate");
        (0..1usize << components).map(move |bits| {
            Orientation {
                forward: (0..components).map(|c| bits >> c & 1 == 0).collect(),
            }
        })
    }
}

struct CrossingSite {
    in0: usize,
    in1: usize,
    positive: bool,
}

/// Component partition of a closed diagram's ports, with enough direction
/// data to evaluate any orientation cheaply.
pub struct Components {
    offsets: Vec<usize>,
    component_of: Vec<usize>,
    /// Port flows upward when its component is directed forward.
    up_when_forward: Vec<bool>,
    count: usize,
    crossings: Vec<CrossingSite>,
    twist_excess: i64,
}

impl Components {
    pub(crate) fn analyze(d: &SlicedDiagram) -> Result<Components, TangleError> {
        d.validate()?;
        d.require_closed()?;
        let levels = d.num_slices() + 1;
        let mut offsets = Vec::with_capacity(levels + 1);
        let mut total = 0;
        for level in 0..levels {
            offsets.push(total);
            total += d.boundary_width(level);
        }
        offsets.push(total);

        // flip = true when the connection turns the flow around (cup, cap).
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); total];
        let link = |a: usize, b: usize, flip: bool, adj: &mut Vec<Vec<(usize, bool)>>| {
            adj[a].push((b, flip));
            adj[b].push((a, flip));
        };
        let mut crossings = Vec::new();
        for (s, slice) in d.slices().iter().enumerate() {
            let base_in = offsets[s];
            let base_out = offsets[s + 1];
            for (piece, i, o) in layout(slice) {
                let (i, o) = (base_in + i, base_out + o);
                match piece {
                    Piece::Id | Piece::TwistPos | Piece::TwistNeg => {
                        link(i, o, false, &mut adj)
                    }
                    Piece::Cup => link(o, o + 1, true, &mut adj),
                    Piece::Cap => link(i, i + 1, true, &mut adj),
                    Piece::CrossPos | Piece::CrossNeg => {
                        link(i, o + 1, false, &mut adj);
                        link(i + 1, o, false, &mut adj);
                        crossings.push(CrossingSite {
                            in0: i,
                            in1: i + 1,
                            positive: piece == Piece::CrossPos,
                        });
                    }
                }
            }
        }

        // Scanning ports in id order makes component numbering canonical:
        // anchors sort by (level, slot).
        let mut component_of = vec![usize::MAX; total];
        let mut up_when_forward = vec![false; total];
        let mut count = 0;
        let mut queue = Vec::new();
        for start in 0..total {
            if component_of[start] != usize::MAX {
                continue;
            }
            component_of[start] = count;
            up_when_forward[start] = true;
            queue.push(start);
            while let Some(p) = queue.pop() {
                for &(nb, flip) in &adj[p] {
                    let dir = up_when_forward[p] != flip;
                    if component_of[nb] == usize::MAX {
                        component_of[nb] = count;
                        up_when_forward[nb] = dir;
                        queue.push(nb);
                    } else {
                        debug_assert_eq!(up_when_forward[nb], dir, "inconsistent direction parity");
                    }
                }
            }
            count += 1;
        }

        Ok(Components {
            offsets,
            component_of,
            up_when_forward,
            count,
            crossings,
            twist_excess: d.twist_excess(),
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    fn port(&self, level: usize, slot: usize) -> usize {
        let p = self.offsets[level] + slot;
        assert!(p < self.offsets[level + 1], "slot {slot} out of range at level {level}");
        p
    }

    /// Component owning the strand through (level, slot).
    pub fn component_of(&self, level: usize, slot: usize) -> usize {
        self.component_of[self.port(level, slot)]
    }

    fn check(&self, o: &Orientation) -> Result<(), TangleError> {
        if o.len() != self.count {
            return Err(TangleError::OrientationSize { given: o.len(), needed: self.count });
        }
        Ok(())
    }

    /// Does the strand flow upward through (level, slot) under `o`?
    pub fn is_upward(&self, level: usize, slot: usize, o: &Orientation) -> Result<bool, TangleError> {
        self.check(o)?;
        let p = self.port(level, slot);
        Ok(self.up_when_forward[p] == o.is_forward(self.component_of[p]))
    }

    pub fn writhe(&self, o: &Orientation) -> Result<i64, TangleError> {
        self.check(o)?;
        let up = |p: usize| self.up_when_forward[p] == o.is_forward(self.component_of[p]);
        let mut w = self.twist_excess;
        for c in &self.crossings {
            w += crossing_sign(c.positive, up(c.in0), up(c.in1));
        }
        Ok(w)
    }
}

/// Sign of a crossing from the flow directions of its two strands. Each
/// strand germ gets a diagonal direction vector; the sign is the sign of
/// det[over, under]. Both strands upward through CrossPos: over = (1,1),
/// under = (-1,1), det = +2, a positive crossing.
fn crossing_sign(positive: bool, in0_up: bool, in1_up: bool) -> i64 {
    // SW-NE strand in0 -> out1, SE-NW strand in1 -> out0.
    let sw_ne = if in0_up { (1i64, 1i64) } else { (-1, -1) };
    let se_nw = if in1_up { (-1, 1) } else { (1, -1) };
    let (over, under) = if positive { (sw_ne, se_nw) } else { (se_nw, sw_ne) };
    (over.0 * under.1 - over.1 * under.0).signum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::parse;

    #[test]
    fn orientation_basics() {
        let o = Orientation::all_forward(2);
        assert!(o.is_forward(0) && o.is_forward(1));
        let r = o.reverse(&[1]).unwrap();
        assert!(r.is_forward(0) && !r.is_forward(1));
        assert_eq!(r.reverse(&[1]).unwrap(), o);
        assert_eq!(
            o.reverse(&[2]),
            Err(TangleError::ComponentRange { index: 2, count: 2 })
        );
        assert_eq!(Orientation::enumerate(2).count(), 4);
        assert_eq!(Orientation::enumerate(0).count(), 1);
    }

    #[test]
    fn component_counts() {
        let unknot = parse("u\nn").unwrap();
        assert_eq!(unknot.num_components().unwrap(), 1);
        let two = parse("u u\nn n").unwrap();
        assert_eq!(two.num_components().unwrap(), 2);
        let hopf = parse("u u\n| x+ |\n| x+ |\nn n").unwrap();
        assert_eq!(hopf.num_components().unwrap(), 2);
        let trefoil = parse("u u\n| x+ |\n| x+ |\n| x+ |\nn n").unwrap();
        assert_eq!(trefoil.num_components().unwrap(), 1);
        assert_eq!(SlicedDiagram::empty().num_components().unwrap(), 0);
    }

    #[test]
    fn open_diagram_rejected() {
        let open = SlicedDiagram::new(vec![vec![Piece::Id]]).unwrap();
        assert!(matches!(open.components(), Err(TangleError::NotClosed { .. })));
    }

    #[test]
    fn unknot_writhe_and_twists() {
        let unknot = parse("u\nn").unwrap();
        let o = Orientation::all_forward(1);
        assert_eq!(unknot.writhe(&o).unwrap(), 0);
        let tw = parse("u\nt+ |\nn").unwrap();
        assert_eq!(tw.writhe(&o).unwrap(), 1);
        let tw2 = parse("u\nt- |\nt- |\nn").unwrap();
        assert_eq!(tw2.writhe(&o).unwrap(), -2);
        // Twists count regardless of direction.
        assert_eq!(tw.writhe(&o.reverse(&[0]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn hopf_writhes_over_orientations() {
        let hopf = parse("u u\n| x+ |\n| x+ |\nn n").unwrap();
        let writhes: Vec<i64> = Orientation::enumerate(2)
            .map(|o| hopf.writhe(&o).unwrap())
            .collect();
        // Relative orientation flips the sign of both crossings together.
        assert_eq!(writhes.iter().filter(|&&w| w == 2).count(), 2);
        assert_eq!(writhes.iter().filter(|&&w| w == -2).count(), 2);
        // Reversing everything never changes the writhe.
        let o = Orientation::all_forward(2);
        assert_eq!(
            hopf.writhe(&o).unwrap(),
            hopf.writhe(&o.reverse(&[0, 1]).unwrap()).unwrap()
        );
    }

    #[test]
    fn knot_writhe_direction_independent() {
        let trefoil = parse("u u\n| x+ |\n| x+ |\n| x+ |\nn n").unwrap();
        let w0 = trefoil.writhe(&Orientation::all_forward(1)).unwrap();
        let w1 = trefoil
            .writhe(&Orientation::all_forward(1).reverse(&[0]).unwrap())
            .unwrap();
        assert_eq!(w0, w1);
        assert_eq!(w0.abs(), 3);
    }

    #[test]
    fn crossing_sign_table() {
        // All four direction pairs for the positive crossing.
        assert_eq!(crossing_sign(true, true, true), 1);
        assert_eq!(crossing_sign(true, false, false), 1);
        assert_eq!(crossing_sign(true, true, false), -1);
        assert_eq!(crossing_sign(true, false, true), -1);
        // The negative crossing is its exact opposite.
        for a in [true, false] {
            for b in [true, false] {
                assert_eq!(crossing_sign(false, a, b), -crossing_sign(true, a, b));
            }
        }
    }

    #[test]
    fn orientation_size_mismatch() {
        let hopf = parse("u u\n| x+ |\n| x+ |\nn n").unwrap();
        assert_eq!(
            hopf.writhe(&Orientation::all_forward(1)),
            Err(TangleError::OrientationSize { given: 1, needed: 2 })
        );
    }
}
