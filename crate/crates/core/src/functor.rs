//! Kauffman bracket by evaluation in the representation category.
//!
//! Two engines share one fold. The undirected engine sends every cap and cup
//! through the duality isomorphism f and needs no orientation; it only works
//! because the half-twist ribbon element makes the two cap constructions
//! agree. The directed engine types each strand V (upward) or V* (downward)
//! and uses the flavor's own quantum-trace maps; with the standard flavor the
//! closed value picks up the sign (-1)^(writhe + #components) relative to
//! the bracket.
//!
//! A diagram is folded bottom slice first. The running state is a sparse
//! vector over bit patterns, one bit per strand, leftmost strand in the most
//! significant position; each slice maps it through the tensor product of
//! its pieces' small matrices.

use std::collections::HashMap;

use thiserror::Error;

use crate::laurent::LaurentQ;
use crate::mat::MatQ;
use crate::qrep::{
    braiding, braiding_inv, duality_iso, structure_maps, Leg, RibbonFlavor, TensorMorphism,
};
use crate::tangle::{layout, Orientation, Piece, SlicedDiagram, TangleError};

/// Hard ceiling on strand count per level (2^16 basis states).
pub const MAX_WIDTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error("diagram is {width} strands wide, evaluation caps at {max}")]
    TooWide { width: usize, max: usize },
    #[error("f_scale must be a unit monomial, got {got}")]
    BadScale { got: LaurentQ },
}

/// Evaluation knobs. `flavor` selects the ribbon element of the directed
/// engine; the undirected engine always uses the half-twist one. `f_scale`
/// multiplies the duality isomorphism by a unit monomial; closed-diagram
/// values never depend on it, which is itself a tested property.
#[derive(Clone, Debug)]
pub struct EvalConfig {
    pub flavor: RibbonFlavor,
    pub f_scale: LaurentQ,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { flavor: RibbonFlavor::HalfTwist, f_scale: LaurentQ::one() }
    }
}

impl EvalConfig {
    pub fn with_flavor(flavor: RibbonFlavor) -> Self {
        EvalConfig { flavor, ..Self::default() }
    }

    /// The scaled duality iso and its inverse, or `BadScale`.
    fn scaled_iso(&self) -> Result<(TensorMorphism, TensorMorphism), EvalError> {
        let inv = self
            .f_scale
            .inv_unit()
            .ok_or_else(|| EvalError::BadScale { got: self.f_scale.clone() })?;
        let (f, f_inv) = duality_iso();
        Ok((f.scale(&self.f_scale), f_inv.scale(&inv)))
    }
}

/// One piece's action, columns stored sparsely by input bit pattern.
struct PieceAction {
    arity_in: usize,
    arity_out: usize,
    cols: Vec<Vec<(usize, LaurentQ)>>,
}

impl PieceAction {
    fn from_mat(mat: &MatQ, arity_in: usize, arity_out: usize) -> Self {
        assert_eq!(mat.cols(), 1 << arity_in);
        assert_eq!(mat.rows(), 1 << arity_out);
        let cols = (0..mat.cols())
            .map(|j| {
                (0..mat.rows())
                    .filter(|&i| !mat[(i, j)].is_zero())
                    .map(|i| (i, mat[(i, j)].clone()))
                    .collect()
            })
            .collect();
        PieceAction { arity_in, arity_out, cols }
    }
}

fn check_width(d: &SlicedDiagram) -> Result<(), EvalError> {
    for level in 0..=d.num_slices() {
        let width = d.boundary_width(level);
        if width > MAX_WIDTH {
            return Err(EvalError::TooWide { width, max: MAX_WIDTH });
        }
    }
    Ok(())
}

/// Folds the state vector through every slice. `actions[s][t]` is the action
/// of the t-th piece of slice s; positions come from the slice layout.
fn fold_slices(d: &SlicedDiagram, actions: &[Vec<PieceAction>]) -> LaurentQ {
    let mut state: HashMap<u64, LaurentQ> = HashMap::new();
    state.insert(0, LaurentQ::one());
    for (s, slice) in d.slices().iter().enumerate() {
        let w_in = d.boundary_width(s);
        let w_out = d.boundary_width(s + 1);
        let placed: Vec<(&PieceAction, usize, usize)> = layout(slice)
            .into_iter()
            .zip(&actions[s])
            .map(|((_, in_start, out_start), action)| (action, in_start, out_start))
            .collect();
        let mut next: HashMap<u64, LaurentQ> = HashMap::new();
        // Depth-first over the pieces of the slice, branching on the sparse
        // columns; crossings fan out to at most two successors.
        let mut stack: Vec<(usize, u64, LaurentQ)> = Vec::new();
        for (&bits, coeff) in &state {
            stack.push((0, 0, coeff.clone()));
            while let Some((t, out_bits, coeff)) = stack.pop() {
                let Some(&(action, in_start, out_start)) = placed.get(t) else {
                    next.entry(out_bits).or_insert_with(LaurentQ::zero).add_assign_ref(&coeff);
                    continue;
                };
                let mut in_pat = 0usize;
                for k in 0..action.arity_in {
                    in_pat = in_pat << 1 | (bits >> (w_in - 1 - (in_start + k)) & 1) as usize;
                }
                for (out_pat, weight) in &action.cols[in_pat] {
                    let mut placed_bits = out_bits;
                    for k in 0..action.arity_out {
                        let bit = (out_pat >> (action.arity_out - 1 - k) & 1) as u64;
                        placed_bits |= bit << (w_out - 1 - (out_start + k));
                    }
                    stack.push((t + 1, placed_bits, &coeff * weight));
                }
            }
        }
        state = next;
    }
    state.remove(&0).unwrap_or_else(LaurentQ::zero)
}

/// Value of a closed diagram under the orientation-free evaluator: caps and
/// cups factor through f, crossings through the braiding, and a twist is the
/// half-twist ribbon scalar (the positive twist gets its inverse).
pub fn eval_undirected(d: &SlicedDiagram, cfg: &EvalConfig) -> Result<LaurentQ, EvalError> {
    d.validate()?;
    d.require_closed()?;
    check_width(d)?;
    let (f, f_inv) = cfg.scaled_iso()?;
    let maps = structure_maps(RibbonFlavor::HalfTwist);
    let id_v = TensorMorphism::identity(&[Leg::V]);
    let cap = maps.ev.compose(&f.tensor(&id_v));
    let cup = id_v.tensor(&f_inv).compose(&maps.coev);
    let actions_for = |piece: Piece| -> PieceAction {
        let flavor = RibbonFlavor::HalfTwist;
        match piece {
            Piece::Id => PieceAction::from_mat(&MatQ::identity(2), 1, 1),
            Piece::Cup => PieceAction::from_mat(&cup.mat, 0, 2),
            Piece::Cap => PieceAction::from_mat(&cap.mat, 2, 0),
            Piece::CrossPos => PieceAction::from_mat(&braiding().mat, 2, 2),
            Piece::CrossNeg => PieceAction::from_mat(&braiding_inv().mat, 2, 2),
            Piece::TwistPos => {
                PieceAction::from_mat(&MatQ::identity(2).scale(&flavor.ribbon_scalar_inv(1)), 1, 1)
            }
            Piece::TwistNeg => {
                PieceAction::from_mat(&MatQ::identity(2).scale(&flavor.ribbon_scalar(1)), 1, 1)
            }
        }
    };
    let actions: Vec<Vec<PieceAction>> = d
        .slices()
        .iter()
        .map(|slice| layout(slice).into_iter().map(|(p, _, _)| actions_for(p)).collect())
        .collect();
    Ok(fold_slices(d, &actions))
}

/// The braiding between typed strands, synthesized from the V⊗V matrix by
/// lifting each dual leg through f⁻¹ and re-typing the swapped outputs
/// through f. Naturality makes closed values independent of that choice.
fn typed_crossing(
    positive: bool,
    in0: Leg,
    in1: Leg,
    f: &TensorMorphism,
    f_inv: &TensorMorphism,
) -> TensorMorphism {
    let lift = |l: Leg| match l {
        Leg::V => TensorMorphism::identity(&[Leg::V]),
        Leg::Dual => f_inv.clone(),
    };
    let lower = |l: Leg| match l {
        Leg::V => TensorMorphism::identity(&[Leg::V]),
        Leg::Dual => f.clone(),
    };
    let sigma = if positive { braiding() } else { braiding_inv() };
    // The strands trade places, so the output word is (in1, in0).
    lower(in1)
        .tensor(&lower(in0))
        .compose(&sigma)
        .compose(&lift(in0).tensor(&lift(in1)))
}

/// Value of a closed diagram under the directed evaluator for the config's
/// ribbon flavor. Each strand is typed by its flow direction, upward V and
/// downward V*; caps and cups become the four structure maps by direction
/// pattern, crossings conjugate the braiding, twists are ribbon scalars.
pub fn eval_directed(
    d: &SlicedDiagram,
    o: &Orientation,
    cfg: &EvalConfig,
) -> Result<LaurentQ, EvalError> {
    let comps = d.components()?;
    check_width(d)?;
    let maps = structure_maps(cfg.flavor);
    let (f, f_inv) = cfg.scaled_iso()?;
    let twist_pos = MatQ::identity(2).scale(&cfg.flavor.ribbon_scalar_inv(1));
    let twist_neg = MatQ::identity(2).scale(&cfg.flavor.ribbon_scalar(1));

    let mut actions: Vec<Vec<PieceAction>> = Vec::with_capacity(d.num_slices());
    for (s, slice) in d.slices().iter().enumerate() {
        let mut row = Vec::new();
        for (piece, in_start, out_start) in layout(slice) {
            let leg_in = |k: usize| -> Result<Leg, EvalError> {
                let up = comps.is_upward(s, in_start + k, o)?;
                Ok(if up { Leg::V } else { Leg::Dual })
            };
            let leg_out = |k: usize| -> Result<Leg, EvalError> {
                let up = comps.is_upward(s + 1, out_start + k, o)?;
                Ok(if up { Leg::V } else { Leg::Dual })
            };
            let action = match piece {
                Piece::Id => PieceAction::from_mat(&MatQ::identity(2), 1, 1),
                Piece::TwistPos => PieceAction::from_mat(&twist_pos, 1, 1),
                Piece::TwistNeg => PieceAction::from_mat(&twist_neg, 1, 1),
                Piece::Cap => {
                    // The two ends of a cap always flow opposite ways.
                    let m = match (leg_in(0)?, leg_in(1)?) {
                        (Leg::Dual, Leg::V) => &maps.ev,
                        (Leg::V, Leg::Dual) => &maps.qtr,
                        same => unreachable!("cap with parallel flow {same:?}"),
                    };
                    PieceAction::from_mat(&m.mat, 2, 0)
                }
                Piece::Cup => {
                    let m = match (leg_out(0)?, leg_out(1)?) {
                        (Leg::V, Leg::Dual) => &maps.coev,
                        (Leg::Dual, Leg::V) => &maps.coqtr,
                        same => unreachable!("cup with parallel flow {same:?}"),
                    };
                    PieceAction::from_mat(&m.mat, 0, 2)
                }
                Piece::CrossPos | Piece::CrossNeg => {
                    let m = typed_crossing(
                        piece == Piece::CrossPos,
                        leg_in(0)?,
                        leg_in(1)?,
                        &f,
                        &f_inv,
                    );
                    debug_assert_eq!(m.cod, vec![leg_out(0)?, leg_out(1)?]);
                    PieceAction::from_mat(&m.mat, 2, 2)
                }
            };
            row.push(action);
        }
        actions.push(row);
    }
    Ok(fold_slices(d, &actions))
}

/// One named exact matrix identity.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

/// Results of [`identity_suite`].
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

/// Checks the exact matrix identities tying the categorical data together:
/// the skein expansion of the braiding, the two constructions of cap and cup
/// (equal with the half-twist flavor, off by a global sign with the standard
/// one), the quantum trace written through the braiding, both snake
/// equations, Yang-Baxter, invertibility, and naturality of the braiding
/// with respect to f.
pub fn identity_suite() -> IdentityReport {
    let (f, f_inv) = duality_iso();
    let id_v = TensorMorphism::identity(&[Leg::V]);
    let t = structure_maps(RibbonFlavor::HalfTwist);
    let s = structure_maps(RibbonFlavor::Standard);
    let sigma = braiding();
    let sigma_inv = braiding_inv();

    let cap_ev = t.ev.compose(&f.tensor(&id_v));
    let cap_qtr_t = t.qtr.compose(&id_v.tensor(&f));
    let cap_qtr_s = s.qtr.compose(&id_v.tensor(&f));
    let cup_coev = id_v.tensor(&f_inv).compose(&t.coev);
    let cup_coqtr_t = f_inv.tensor(&id_v).compose(&t.coqtr);
    let cup_coqtr_s = f_inv.tensor(&id_v).compose(&s.coqtr);

    let mut checks = Vec::new();
    let mut push = |name: &'static str, passed: bool| checks.push(IdentityCheck { name, passed });

    // sigma = q^(1/2) Id + q^(-1/2) cup∘cap.
    let expansion = &MatQ::identity(4).scale(&LaurentQ::q_pow(2))
        + &cup_coev.compose(&cap_qtr_t).mat.scale(&LaurentQ::q_pow(-2));
    push("crossing_skein_expansion", sigma.mat == expansion);

    push("cap_built_two_ways_half_twist", cap_ev == cap_qtr_t);
    push("cup_built_two_ways_half_twist", cup_coev == cup_coqtr_t);
    push(
        "cap_standard_flavor_sign",
        cap_ev.mat == cap_qtr_s.mat.scale(&-LaurentQ::one())
            && cup_coev.mat == cup_coqtr_s.mat.scale(&-LaurentQ::one()),
    );

    // qtr = ev ∘ (f⊗Id) ∘ sigma ∘ (Id⊗Q⁻¹) ∘ (Id⊗f⁻¹), for either flavor's
    // ribbon scalar and grouplike together.
    for (name, maps, flavor) in [
        ("quantum_trace_via_braiding_standard", &s, RibbonFlavor::Standard),
        ("quantum_trace_via_braiding_half_twist", &t, RibbonFlavor::HalfTwist),
    ] {
        let rhs = t
            .ev
            .compose(&f.tensor(&id_v))
            .compose(&sigma)
            .compose(&id_v.tensor(&f_inv).scale(&flavor.ribbon_scalar_inv(1)));
        push(name, maps.qtr == rhs);
    }

    let cap = &cap_ev;
    let cup = &cup_coev;
    let snake_right = cap.tensor(&id_v).compose(&id_v.tensor(cup));
    push("snake_right", snake_right.mat.is_identity());
    let snake_left = id_v.tensor(cap).compose(&cup.tensor(&id_v));
    push("snake_left", snake_left.mat.is_identity());

    let left = sigma.tensor(&id_v);
    let right = id_v.tensor(&sigma);
    push(
        "yang_baxter",
        left.compose(&right).compose(&left) == right.compose(&left).compose(&right),
    );
    push(
        "braiding_inverse",
        sigma.compose(&sigma_inv).mat.is_identity() && sigma_inv.compose(&sigma).mat.is_identity(),
    );

    // (Id⊗f) ∘ sigma = sigma_{V*,V} ∘ (f⊗Id), the naturality square behind
    // the typed crossings.
    let mixed = typed_crossing(true, Leg::Dual, Leg::V, &f, &f_inv);
    push(
        "mixed_crossing_naturality",
        id_v.tensor(&f).compose(&sigma) == mixed.compose(&f.tensor(&id_v)),
    );

    IdentityReport { checks }
}
