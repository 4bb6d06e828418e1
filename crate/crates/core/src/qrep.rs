//! Representation data for the quantum group with generators E, F, K^{±1}:
//! the irreducibles V_n, tensor actions through the coproduct, duals through
//! the antipode, the braiding on V⊗V, the duality isomorphism f: V → V*, and
//! the two ribbon flavors with their grouplike elements and structure maps.
//!
//! Basis conventions, used by every consumer. V_n has ordered basis
//! v_n, v_{n-2}, ..., v_{-n}; index j holds the weight-(n-2j) vector, so
//! index 0 is the highest weight. Dual bases pair by v̂_i(v_j) = δ_ij and
//! keep the same index order. Tensor indices multiply out with the LEFT
//! factor as the most significant digit: on two strands of V the basis order
//! is v₁⊗v₁, v₁⊗v₋₁, v₋₁⊗v₁, v₋₁⊗v₋₁.

use crate::laurent::LaurentQ;
use crate::mat::MatQ;

/// Algebra generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

pub const GENERATORS: [Generator; 4] = [Generator::E, Generator::F, Generator::K, Generator::KInv];

/// One tensor factor of a morphism's boundary word: the two-dimensional
/// fundamental representation or its dual.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Leg {
    V,
    Dual,
}

/// Action matrices of the generators on an (n+1)-dimensional space, either
/// V_n itself or its dual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rep {
    pub n: u32,
    pub e: MatQ,
    pub f: MatQ,
    pub k: MatQ,
    pub k_inv: MatQ,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    /// Subscript of basis vector `j`: the vector is v_{n-2j} (v̂_{n-2j} on a
    /// dual). On V_n the label is the weight; on the dual the weight is its
    /// negative.
    pub fn label(&self, j: usize) -> i64 {
        self.n as i64 - 2 * j as i64
    }

    pub fn action(&self, g: Generator) -> &MatQ {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::K => &self.k,
            Generator::KInv => &self.k_inv,
        }
    }
}

/// The irreducible V_n. E raises the weight, F lowers it, both with
/// quantum-integer ladder coefficients; K is diagonal in the weight.
pub fn rep(n: u32) -> Rep {
    let dim = n as usize + 1;
    let mut e = MatQ::zeros(dim, dim);
    let mut f = MatQ::zeros(dim, dim);
    let mut k = MatQ::zeros(dim, dim);
    let mut k_inv = MatQ::zeros(dim, dim);
    for j in 0..dim {
        let w = n as i64 - 2 * j as i64;
        k[(j, j)] = LaurentQ::q_pow(4 * w);
        k_inv[(j, j)] = LaurentQ::q_pow(-4 * w);
        if j + 1 < dim {
            f[(j + 1, j)] = LaurentQ::quantum_integer(j as u32 + 1);
            e[(j, j + 1)] = LaurentQ::quantum_integer(n - j as u32);
        }
    }
    Rep { n, e, f, k, k_inv }
}

/// The dual of V_n. A generator X acts on a functional through the antipode,
/// (X·v̂)(w) = v̂(S(X)w) with S(E) = -EK⁻¹, S(F) = -KF, S(K) = K⁻¹, so its
/// dual-basis matrix is the transpose of S(X)'s matrix on V_n.
pub fn dual_rep(n: u32) -> Rep {
    let v = rep(n);
    let s_e = (&v.e * &v.k_inv).map(|c| -c);
    let s_f = (&v.k * &v.f).map(|c| -c);
    Rep {
        n,
        e: s_e.transpose(),
        f: s_f.transpose(),
        k: v.k_inv.transpose(),
        k_inv: v.k.transpose(),
    }
}

fn leg_rep(leg: Leg) -> Rep {
    match leg {
        Leg::V => rep(1),
        Leg::Dual => dual_rep(1),
    }
}

fn kron_all(factors: impl Iterator<Item = MatQ>) -> MatQ {
    factors.fold(MatQ::identity(1), |acc, m| acc.kronecker(&m))
}

/// Action of one generator on a tensor word of fundamental legs, through the
/// iterated coproduct: K acts diagonally on every factor, while
/// E ↦ Σᵢ 1⊗..⊗Eᵢ⊗K⊗..⊗K and F ↦ Σᵢ K⁻¹⊗..⊗Fᵢ⊗1⊗..⊗1 (iterating on the
/// left; coassociativity makes the other nesting agree). The empty word
/// carries the counit: E, F act by 0 and K by 1.
pub fn coproduct_action(g: Generator, word: &[Leg]) -> MatQ {
    if word.is_empty() {
        return match g {
            Generator::E | Generator::F => MatQ::zeros(1, 1),
            Generator::K | Generator::KInv => MatQ::identity(1),
        };
    }
    let factors: Vec<Rep> = word.iter().map(|&l| leg_rep(l)).collect();
    match g {
        Generator::K => kron_all(factors.iter().map(|r| r.k.clone())),
        Generator::KInv => kron_all(factors.iter().map(|r| r.k_inv.clone())),
        Generator::E | Generator::F => {
            let dim: usize = factors.iter().map(Rep::dim).product();
            let mut total = MatQ::zeros(dim, dim);
            for i in 0..factors.len() {
                let term = kron_all(factors.iter().enumerate().map(|(j, r)| {
                    use std::cmp::Ordering::*;
                    match (g, j.cmp(&i)) {
                        (_, Equal) => r.action(g).clone(),
                        (Generator::E, Less) | (Generator::F, Greater) => MatQ::identity(r.dim()),
                        (Generator::E, Greater) => r.k.clone(),
                        (Generator::F, Less) => r.k_inv.clone(),
                        _ => unreachable!(),
                    }
                }));
                total = &total + &term;
            }
            total
        }
    }
}

/// A linear map between tensor words of fundamental legs. Rows index the
/// codomain basis, columns the domain basis, leftmost leg most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorMorphism {
    pub dom: Vec<Leg>,
    pub cod: Vec<Leg>,
    pub mat: MatQ,
}

impl TensorMorphism {
    pub fn new(dom: Vec<Leg>, cod: Vec<Leg>, mat: MatQ) -> Self {
        assert_eq!(mat.rows(), 1 << cod.len(), "row count must be 2^|codomain|");
        assert_eq!(mat.cols(), 1 << dom.len(), "column count must be 2^|domain|");
        TensorMorphism { dom, cod, mat }
    }

    pub fn identity(word: &[Leg]) -> Self {
        Self::new(word.to_vec(), word.to_vec(), MatQ::identity(1 << word.len()))
    }

    /// `self ∘ inner`; the words must match up.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(self.dom, inner.cod, "composition along mismatched words");
        Self::new(inner.dom.clone(), self.cod.clone(), &self.mat * &inner.mat)
    }

    /// Side-by-side product, `self` on the left.
    pub fn tensor(&self, right: &Self) -> Self {
        let dom = [self.dom.as_slice(), right.dom.as_slice()].concat();
        let cod = [self.cod.as_slice(), right.cod.as_slice()].concat();
        Self::new(dom, cod, self.mat.kronecker(&right.mat))
    }

    pub fn scale(&self, s: &LaurentQ) -> Self {
        Self::new(self.dom.clone(), self.cod.clone(), self.mat.scale(s))
    }

    /// Does the map commute with the generator's action on both words? True
    /// exactly when the map is a morphism of representations.
    pub fn intertwines(&self, g: Generator) -> bool {
        let dom = coproduct_action(g, &self.dom);
        let cod = coproduct_action(g, &self.cod);
        &cod * &self.mat == &self.mat * &dom
    }

    pub fn intertwines_all(&self) -> bool {
        GENERATORS.iter().all(|&g| self.intertwines(g))
    }
}

/// The braiding on V⊗V. Nonzero entries, columns read as inputs:
/// v₁⊗v₁ and v₋₁⊗v₋₁ are fixed up to q^{1/2}; v₁⊗v₋₁ swaps with weight
/// q^{-1/2}; v₋₁⊗v₁ swaps and also keeps a q^{1/2}-q^{-3/2} diagonal part.
pub fn braiding() -> TensorMorphism {
    let mut m = MatQ::zeros(4, 4);
    m[(0b00, 0b00)] = LaurentQ::q_pow(2);
    m[(0b10, 0b01)] = LaurentQ::q_pow(-2);
    m[(0b01, 0b10)] = LaurentQ::q_pow(-2);
    m[(0b10, 0b10)] = &LaurentQ::q_pow(2) - &LaurentQ::q_pow(-6);
    m[(0b11, 0b11)] = LaurentQ::q_pow(2);
    TensorMorphism::new(vec![Leg::V, Leg::V], vec![Leg::V, Leg::V], m)
}

/// Exact inverse of [`braiding`], the image of the negative crossing.
pub fn braiding_inv() -> TensorMorphism {
    let mut m = MatQ::zeros(4, 4);
    m[(0b00, 0b00)] = LaurentQ::q_pow(-2);
    m[(0b01, 0b01)] = &LaurentQ::q_pow(-2) - &LaurentQ::q_pow(6);
    m[(0b10, 0b01)] = LaurentQ::q_pow(2);
    m[(0b01, 0b10)] = LaurentQ::q_pow(2);
    m[(0b11, 0b11)] = LaurentQ::q_pow(-2);
    TensorMorphism::new(vec![Leg::V, Leg::V], vec![Leg::V, Leg::V], m)
}

/// The isomorphism f: V → V* and its inverse, unscaled. f(v₁) = v̂₋₁ and
/// f(v₋₁) = -q⁻¹v̂₁; any unit multiple works equally well, and the evaluator
/// exposes that freedom as a config knob instead.
pub fn duality_iso() -> (TensorMorphism, TensorMorphism) {
    let mut f = MatQ::zeros(2, 2);
    f[(1, 0)] = LaurentQ::one();
    f[(0, 1)] = -LaurentQ::q_pow(-4);
    let mut f_inv = MatQ::zeros(2, 2);
    f_inv[(1, 0)] = -LaurentQ::q_pow(4);
    f_inv[(0, 1)] = LaurentQ::one();
    (
        TensorMorphism::new(vec![Leg::V], vec![Leg::Dual], f),
        TensorMorphism::new(vec![Leg::Dual], vec![Leg::V], f_inv),
    )
}

/// The two ribbon elements, as systems of scalars on the irreducibles. The
/// standard one acts on V_n by q^{-n²/2-n}; the half-twist one carries an
/// extra (-1)ⁿ, and only it extends to the undirected evaluator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RibbonFlavor {
    Standard,
    HalfTwist,
}

impl RibbonFlavor {
    fn sign(self, n: u32) -> bool {
        self == RibbonFlavor::HalfTwist && n % 2 == 1
    }

    /// Scalar by which the ribbon element acts on V_n.
    pub fn ribbon_scalar(self, n: u32) -> LaurentQ {
        let n = n as i64;
        LaurentQ::signed_monomial(self.sign(n as u32), -2 * n * n - 4 * n)
    }

    pub fn ribbon_scalar_inv(self, n: u32) -> LaurentQ {
        let n = n as i64;
        LaurentQ::signed_monomial(self.sign(n as u32), 2 * n * n + 4 * n)
    }

    /// The grouplike element on V_n: diagonal q^{n-2j}, negated for the
    /// half-twist flavor in odd n.
    pub fn grouplike(self, n: u32) -> MatQ {
        self.diag(n, false)
    }

    pub fn grouplike_inv(self, n: u32) -> MatQ {
        self.diag(n, true)
    }

    fn diag(self, n: u32, inverted: bool) -> MatQ {
        let dim = n as usize + 1;
        let mut m = MatQ::zeros(dim, dim);
        for j in 0..dim {
            let w = 4 * (n as i64 - 2 * j as i64);
            m[(j, j)] = LaurentQ::signed_monomial(self.sign(n), if inverted { -w } else { w });
        }
        m
    }
}

/// The four cap and cup maps on the fundamental strand for one ribbon
/// flavor. `ev` and `coev` pair off dual indices with unit weights; `qtr`
/// and `coqtr` weight the pairing by the grouplike element or its inverse.
#[derive(Clone, Debug)]
pub struct StructureMaps {
    /// V*⊗V → 1, v̂_i⊗v_j ↦ δ_ij.
    pub ev: TensorMorphism,
    /// 1 → V⊗V*, 1 ↦ Σ v_i⊗v̂_i.
    pub coev: TensorMorphism,
    /// V⊗V* → 1, v_j⊗v̂_i ↦ v̂_i(g v_j).
    pub qtr: TensorMorphism,
    /// 1 → V*⊗V, 1 ↦ Σ v̂_i⊗g⁻¹v_i.
    pub coqtr: TensorMorphism,
}

pub fn structure_maps(flavor: RibbonFlavor) -> StructureMaps {
    let g = flavor.grouplike(1);
    let g_inv = flavor.grouplike_inv(1);
    let mut ev = MatQ::zeros(1, 4);
    ev[(0, 0b00)] = LaurentQ::one();
    ev[(0, 0b11)] = LaurentQ::one();
    let mut coev = MatQ::zeros(4, 1);
    coev[(0b00, 0)] = LaurentQ::one();
    coev[(0b11, 0)] = LaurentQ::one();
    let mut qtr = MatQ::zeros(1, 4);
    qtr[(0, 0b00)] = g[(0, 0)].clone();
    qtr[(0, 0b11)] = g[(1, 1)].clone();
    let mut coqtr = MatQ::zeros(4, 1);
    coqtr[(0b00, 0)] = g_inv[(0, 0)].clone();
    coqtr[(0b11, 0)] = g_inv[(1, 1)].clone();
    StructureMaps {
        ev: TensorMorphism::new(vec![Leg::Dual, Leg::V], vec![], ev),
        coev: TensorMorphism::new(vec![], vec![Leg::V, Leg::Dual], coev),
        qtr: TensorMorphism::new(vec![Leg::V, Leg::Dual], vec![], qtr),
        coqtr: TensorMorphism::new(vec![], vec![Leg::Dual, Leg::V], coqtr),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(quarters: i64) -> LaurentQ {
        LaurentQ::q_pow(quarters)
    }

    fn check_relations(r: &Rep) {
        let dim = r.dim();
        assert!((&r.k * &r.k_inv).is_identity(), "K K^-1 at n={}", r.n);
        assert_eq!(&(&r.k * &r.e) * &r.k_inv, r.e.scale(&q(8)), "KEK^-1 at n={}", r.n);
        assert_eq!(&(&r.k * &r.f) * &r.k_inv, r.f.scale(&q(-8)), "KFK^-1 at n={}", r.n);
        // The commutator relation, cleared of its denominator.
        let lhs = (&(&r.e * &r.f) - &(&r.f * &r.e)).scale(&(&q(4) - &q(-4)));
        assert_eq!(lhs, &r.k - &r.k_inv, "EF-FE at n={}", r.n);
        assert_eq!(r.e.rows(), dim);
    }

    #[test]
    fn defining_relations_hold_through_n8() {
        for n in 0..=8 {
            check_relations(&rep(n));
            check_relations(&dual_rep(n));
        }
    }

    #[test]
    fn small_representations_by_hand() {
        let v0 = rep(0);
        assert!(v0.e.is_zero() && v0.f.is_zero());
        assert!(v0.k.is_identity() && v0.k_inv.is_identity());

        // n=1: E v_-1 = v_1, F v_1 = v_-1, K = diag(q, q^-1).
        let v1 = rep(1);
        assert_eq!(v1.e[(0, 1)], LaurentQ::one());
        assert_eq!(v1.f[(1, 0)], LaurentQ::one());
        assert_eq!(v1.k[(0, 0)], q(4));
        assert_eq!(v1.k[(1, 1)], q(-4));
        assert_eq!(v1.label(0), 1);
        assert_eq!(v1.label(1), -1);

        // n=2 ladder: F v_2 = v_0, F v_0 = [2] v_-2, and E mirrors it.
        let v2 = rep(2);
        assert_eq!(v2.f[(1, 0)], LaurentQ::one());
        assert_eq!(v2.f[(2, 1)], LaurentQ::quantum_integer(2));
        assert_eq!(v2.e[(0, 1)], LaurentQ::quantum_integer(2));
        assert_eq!(v2.e[(1, 2)], LaurentQ::one());
        assert_eq!(v2.k[(1, 1)], LaurentQ::one());
    }

    #[test]
    fn dual_fundamental_matches_the_antipode() {
        let d = dual_rep(1);
        // E: v̂_1 ↦ -q v̂_-1 and F: v̂_-1 ↦ -q^-1 v̂_1; K flips its weights.
        assert_eq!(d.e[(1, 0)], -q(4));
        assert_eq!(d.e[(0, 1)], LaurentQ::zero());
        assert_eq!(d.f[(0, 1)], -q(-4));
        assert_eq!(d.f[(1, 0)], LaurentQ::zero());
        assert_eq!(d.k[(0, 0)], q(-4));
        assert_eq!(d.k[(1, 1)], q(4));
        assert!(dual_rep(0).e.is_zero());
    }

    #[test]
    fn coproduct_on_two_strands() {
        let w = [Leg::V, Leg::V];
        let k = coproduct_action(Generator::K, &w);
        for (i, want) in [q(8), q(0), q(0), q(-8)].into_iter().enumerate() {
            assert_eq!(k[(i, i)], want);
        }
        // E(v_-1⊗v_1) = q v_1⊗v_1 and E(v_1⊗v_-1) = v_1⊗v_1.
        let e = coproduct_action(Generator::E, &w);
        assert_eq!(e[(0b00, 0b10)], q(4));
        assert_eq!(e[(0b00, 0b01)], LaurentQ::one());
        // F(v_1⊗v_1) = v_-1⊗v_1 + q^-1 v_1⊗v_-1.
        let f = coproduct_action(Generator::F, &w);
        assert_eq!(f[(0b10, 0b00)], LaurentQ::one());
        assert_eq!(f[(0b01, 0b00)], q(-4));
    }

    #[test]
    fn counit_acts_on_the_empty_word() {
        assert!(coproduct_action(Generator::E, &[]).is_zero());
        assert!(coproduct_action(Generator::F, &[]).is_zero());
        assert!(coproduct_action(Generator::K, &[]).is_identity());
        assert!(coproduct_action(Generator::KInv, &[]).is_identity());
    }

    #[test]
    fn iterated_coproduct_is_coassociative() {
        // The coproduct of g across a two-block split (A|B), with each block
        // acting through its own iterated coproduct.
        fn split(g: Generator, a: &[Leg], b: &[Leg]) -> MatQ {
            let id = |w: &[Leg]| MatQ::identity(1 << w.len());
            match g {
                Generator::K | Generator::KInv => {
                    coproduct_action(g, a).kronecker(&coproduct_action(g, b))
                }
                Generator::E => {
                    &coproduct_action(Generator::E, a)
                        .kronecker(&coproduct_action(Generator::K, b))
                        + &id(a).kronecker(&coproduct_action(Generator::E, b))
                }
                Generator::F => {
                    &coproduct_action(Generator::F, a).kronecker(&id(b))
                        + &coproduct_action(Generator::KInv, a)
                            .kronecker(&coproduct_action(Generator::F, b))
                }
            }
        }
        // Splitting a three-leg word as (1|23) or (12|3) must agree with the
        // flat formula, for every mix of plain and dual legs.
        for bits in 0..8u32 {
            let word: Vec<Leg> = (0..3)
                .map(|i| if bits >> i & 1 == 0 { Leg::V } else { Leg::Dual })
                .collect();
            for g in GENERATORS {
                let flat = coproduct_action(g, &word);
                assert_eq!(flat, split(g, &word[..1], &word[1..]), "{g:?} on {word:?}, 1|23");
                assert_eq!(flat, split(g, &word[..2], &word[2..]), "{g:?} on {word:?}, 12|3");
            }
        }
    }

    #[test]
    fn braiding_column_actions() {
        let s = braiding();
        // v_1⊗v_1 is scaled by q^(1/2); v_1⊗v_-1 swaps with weight q^(-1/2);
        // v_-1⊗v_1 swaps and keeps a diagonal remainder.
        for col in 0..4 {
            for row in 0..4 {
                let want = match (row, col) {
                    (0b00, 0b00) | (0b11, 0b11) => q(2),
                    (0b10, 0b01) | (0b01, 0b10) => q(-2),
                    (0b10, 0b10) => &q(2) - &q(-6),
                    _ => LaurentQ::zero(),
                };
                assert_eq!(s.mat[(row, col)], want, "entry ({row}, {col})");
            }
        }
    }

    #[test]
    fn braiding_in_the_weight_sorted_ordering() {
        // Listing the middle basis vectors in the other order (v_-1⊗v_1
        // before v_1⊗v_-1) turns the same map into the familiar q^(-1/2)
        // [[q,0,0,0],[0,q-q^-1,1,0],[0,1,0,0],[0,0,0,q]] layout.
        let half = q(-2);
        let rows = vec![
            vec![q(4), LaurentQ::zero(), LaurentQ::zero(), LaurentQ::zero()],
            vec![LaurentQ::zero(), &q(4) - &q(-4), LaurentQ::one(), LaurentQ::zero()],
            vec![LaurentQ::zero(), LaurentQ::one(), LaurentQ::zero(), LaurentQ::zero()],
            vec![LaurentQ::zero(), LaurentQ::zero(), LaurentQ::zero(), q(4)],
        ];
        let sorted = MatQ::from_rows(rows).scale(&half);
        let perm = [0usize, 2, 1, 3];
        let s = braiding();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s.mat[(i, j)], sorted[(perm[i], perm[j])], "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn braiding_inverse_and_yang_baxter() {
        let s = braiding();
        let s_inv = braiding_inv();
        assert!(s.compose(&s_inv).mat.is_identity());
        assert!(s_inv.compose(&s).mat.is_identity());

        let id = TensorMorphism::identity(&[Leg::V]);
        let left = s.tensor(&id);
        let right = id.tensor(&s);
        let lhs = left.compose(&right).compose(&left);
        let rhs = right.compose(&left).compose(&right);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braiding_is_a_module_map() {
        assert!(braiding().intertwines_all());
        assert!(braiding_inv().intertwines_all());
    }

    #[test]
    fn duality_iso_pairs_exactly() {
        let (f, f_inv) = duality_iso();
        // f(v_1) = v̂_-1, f(v_-1) = -q^-1 v̂_1.
        assert_eq!(f.mat[(1, 0)], LaurentQ::one());
        assert_eq!(f.mat[(0, 1)], -q(-4));
        assert_eq!(f.mat[(0, 0)], LaurentQ::zero());
        // f^-1(v̂_1) = -q v_-1, f^-1(v̂_-1) = v_1.
        assert_eq!(f_inv.mat[(1, 0)], -q(4));
        assert_eq!(f_inv.mat[(0, 1)], LaurentQ::one());
        assert!(f.compose(&f_inv).mat.is_identity());
        assert!(f_inv.compose(&f).mat.is_identity());
        assert!(f.intertwines_all());
        assert!(f_inv.intertwines_all());
    }

    #[test]
    fn ribbon_scalars_and_grouplikes() {
        use RibbonFlavor::*;
        assert_eq!(Standard.ribbon_scalar(1), q(-6));
        assert_eq!(HalfTwist.ribbon_scalar(1), -q(-6));
        assert_eq!(HalfTwist.ribbon_scalar(2), q(-16));
        assert_eq!(Standard.ribbon_scalar(0), LaurentQ::one());
        for flavor in [Standard, HalfTwist] {
            for n in 0..=8 {
                let prod = &flavor.ribbon_scalar(n) * &flavor.ribbon_scalar_inv(n);
                assert!(prod.is_one(), "{flavor:?} scalar inverse at n={n}");
                assert!((&flavor.grouplike(n) * &flavor.grouplike_inv(n)).is_identity());
            }
        }
        let g_s = Standard.grouplike(1);
        assert_eq!(g_s[(0, 0)], q(4));
        assert_eq!(g_s[(1, 1)], q(-4));
        let g_t = HalfTwist.grouplike(1);
        assert_eq!(g_t[(0, 0)], -q(4));
        assert_eq!(g_t[(1, 1)], -q(-4));
    }

    #[test]
    fn structure_map_coordinates() {
        let maps = structure_maps(RibbonFlavor::HalfTwist);
        assert_eq!(maps.ev.mat[(0, 0b00)], LaurentQ::one());
        assert_eq!(maps.ev.mat[(0, 0b01)], LaurentQ::zero());
        assert_eq!(maps.ev.mat[(0, 0b11)], LaurentQ::one());
        assert_eq!(maps.coev.mat[(0b00, 0)], LaurentQ::one());
        assert_eq!(maps.coev.mat[(0b11, 0)], LaurentQ::one());
        // Half-twist quantum traces: qtr(v_1⊗v̂_1) = -q, qtr(v_-1⊗v̂_-1) = -q^-1.
        assert_eq!(maps.qtr.mat[(0, 0b00)], -q(4));
        assert_eq!(maps.qtr.mat[(0, 0b11)], -q(-4));
        assert_eq!(maps.coqtr.mat[(0b00, 0)], -q(-4));
        assert_eq!(maps.coqtr.mat[(0b11, 0)], -q(4));
        // Closing the loop gives the circle value.
        let circle = maps.qtr.compose(&maps.coev);
        assert_eq!(circle.mat[(0, 0)], -(&q(4) + &q(-4)));
        let circle_rev = maps.ev.compose(&maps.coqtr);
        assert_eq!(circle_rev.mat[(0, 0)], -(&q(4) + &q(-4)));

        // The standard flavor drops the signs, so its loop comes out positive.
        let std_maps = structure_maps(RibbonFlavor::Standard);
        assert_eq!(std_maps.qtr.mat[(0, 0b00)], q(4));
        let std_circle = std_maps.qtr.compose(&std_maps.coev);
        assert_eq!(std_circle.mat[(0, 0)], &q(4) + &q(-4));
    }

    #[test]
    fn structure_maps_are_module_maps() {
        for flavor in [RibbonFlavor::Standard, RibbonFlavor::HalfTwist] {
            let maps = structure_maps(flavor);
            for (name, m) in [
                ("ev", &maps.ev),
                ("coev", &maps.coev),
                ("qtr", &maps.qtr),
                ("coqtr", &maps.coqtr),
            ] {
                for g in GENERATORS {
                    assert!(m.intertwines(g), "{name} vs {g:?} under {flavor:?}");
                }
            }
        }
    }

    #[test]
    fn tensor_morphism_bookkeeping() {
        let id = TensorMorphism::identity(&[Leg::V, Leg::Dual]);
        assert!(id.mat.is_identity());
        let (f, f_inv) = duality_iso();
        let both = f.tensor(&f_inv);
        assert_eq!(both.dom, vec![Leg::V, Leg::Dual]);
        assert_eq!(both.cod, vec![Leg::Dual, Leg::V]);
        // Kronecker blocks: entry of f times entry of f^-1.
        assert_eq!(both.mat[(0b11, 0b00)], -q(4));
        assert_eq!(both.mat[(0b10, 0b01)], LaurentQ::one());
        let scaled = f.scale(&-q(4));
        assert_eq!(scaled.mat[(1, 0)], -q(4));
        assert_eq!(f.compose(&f_inv).cod, vec![Leg::Dual]);
    }
}
