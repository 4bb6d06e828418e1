//! Half-twist operators: antidiagonal maps on each V_n whose inverse square
//! is the half-twist ribbon element, together with the factorization of the
//! braiding as (X⁻¹⊗X⁻¹) ∘ Flip ∘ Δ(X).
//!
//! The coproduct of a half-twist is not given by a formula on generators;
//! it is realized operationally, as the operator acting on each irreducible
//! summand of V⊗V through an exact Clebsch-Gordan change of basis.

use crate::laurent::{Gauss, LaurentQ, LaurentQi};
use crate::mat::{MatQ, MatQi};
use crate::qrep::{braiding, coproduct_action, Generator, Leg};

/// The two half-twist normalizations. `Real` alternates signs (-1)^(n-j)
/// down the antidiagonal and stays inside integer coefficients; `Imaginary`
/// uses the uniform phase i^n and exists only over Gaussian integers, so it
/// has no integer-coefficient constructor at all.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HalfTwistVariant {
    Real,
    Imaginary,
}

fn antidiagonal_quarters(n: u32) -> i64 {
    let n = n as i64;
    n * n + 2 * n
}

/// The real half-twist on V_n: basis vector j maps to position n-j with
/// coefficient (-1)^(n-j) q^((n²+2n)/4).
pub fn half_twist_real(n: u32) -> MatQ {
    let dim = n as usize + 1;
    let quarters = antidiagonal_quarters(n);
    let mut m = MatQ::zeros(dim, dim);
    for j in 0..dim {
        let negative = (dim - 1 - j) % 2 == 1;
        m[(dim - 1 - j, j)] = LaurentQ::signed_monomial(negative, quarters);
    }
    m
}

/// Either half-twist variant on V_n, over Gaussian integers. The imaginary
/// variant scales the whole antidiagonal by i^n instead of alternating
/// signs.
pub fn half_twist(variant: HalfTwistVariant, n: u32) -> MatQi {
    match variant {
        HalfTwistVariant::Real => half_twist_real(n).to_gaussian(),
        HalfTwistVariant::Imaginary => {
            let dim = n as usize + 1;
            let quarters = antidiagonal_quarters(n);
            let phase = match n % 4 {
                0 => Gauss::new(1, 0),
                1 => Gauss::I,
                2 => Gauss::new(-1, 0),
                _ => Gauss::new(0, -1),
            };
            let mut m = MatQi::zeros(dim, dim);
            for j in 0..dim {
                m[(dim - 1 - j, j)] = LaurentQi::monomial(quarters, phase);
            }
            m
        }
    }
}

/// Exact inverse of [`half_twist`]: the square of either variant is the
/// scalar (-1)ⁿ q^((n²+2n)/2), so the inverse is X divided by it.
pub fn half_twist_inv(variant: HalfTwistVariant, n: u32) -> MatQi {
    let square_inv = LaurentQi::signed_monomial(n % 2 == 1, -2 * antidiagonal_quarters(n));
    half_twist(variant, n).scale(&square_inv)
}

/// True when X² equals the inverse of the half-twist ribbon scalar on every
/// V_n up to `n_max`, i.e. X⁻² is exactly the ribbon element.
pub fn verify_ribbon_square(variant: HalfTwistVariant, n_max: u32) -> bool {
    use crate::qrep::RibbonFlavor;
    (0..=n_max).all(|n| {
        let x = half_twist(variant, n);
        let scalar = RibbonFlavor::HalfTwist.ribbon_scalar_inv(n).to_gaussian();
        &x * &x == MatQi::identity(n as usize + 1).scale(&scalar)
    })
}

/// Exact change of basis splitting V⊗V into the three-dimensional ladder
/// summand and the singlet. Columns of `p` are (b0, b1, b2, s) in the
/// product basis; `a` satisfies a·p = p·a = denom·Id with denom = [2], the
/// determinant's non-unit part, so conjugation divides out exactly.
pub struct CgDecomposition {
    pub p: MatQ,
    pub a: MatQ,
    pub denom: LaurentQ,
}

impl CgDecomposition {
    /// Conjugates a product-basis operator into the split basis: (a·m·p)/[2].
    pub fn split(&self, m: &MatQ) -> MatQ {
        (&(&self.a * m) * &self.p).div_exact(&self.denom).expect("operator preserves the summands")
    }

    /// Inverse of [`split`]: (p·m·a)/[2].
    pub fn unsplit(&self, m: &MatQ) -> MatQ {
        (&(&self.p * m) * &self.a).div_exact(&self.denom).expect("conjugation is exact")
    }
}

/// Builds the splitting of V⊗V from scratch: the highest-weight vector is
/// v₁⊗v₁, its F-images ladder down (the second one divided by its [2]
/// coefficient), and the singlet spans the kernel of E in weight zero,
/// solved with a unit-monomial pivot.
pub fn clebsch_gordan() -> CgDecomposition {
    let word = [Leg::V, Leg::V];
    let e = coproduct_action(Generator::E, &word);
    let f = coproduct_action(Generator::F, &word);
    let two = LaurentQ::quantum_integer(2);

    let mut p = MatQ::zeros(4, 4);
    p[(0b00, 0)] = LaurentQ::one();
    for i in 0..4 {
        p[(i, 1)] = f[(i, 0b00)].clone();
    }
    for i in 0..4 {
        // b2 = F(b1)/[2] keeps the ladder normalization b2 = v₋₁⊗v₋₁.
        let mut acc = LaurentQ::zero();
        for k in 0..4 {
            acc.add_assign_ref(&(&f[(i, k)] * &p[(k, 1)]));
        }
        p[(i, 2)] = acc.div_exact(&two).expect("[2] divides the second rung");
    }
    // Weight zero is spanned by indices 0b01 and 0b10; E maps it into the
    // top weight space, and the kernel vector is s = e01 - (alpha/beta) e10.
    let alpha = e[(0b00, 0b01)].clone();
    let beta_inv = e[(0b00, 0b10)].inv_unit().expect("weight-0 pivot is a unit monomial");
    p[(0b01, 3)] = LaurentQ::one();
    p[(0b10, 3)] = -(&alpha * &beta_inv);

    // a = [2]·p⁻¹. Outside the middle block p is a permutation; the middle
    // 2x2 inverts through its adjugate, whose determinant is a unit times
    // [2].
    let (m00, m01) = (p[(0b01, 1)].clone(), p[(0b01, 3)].clone());
    let (m10, m11) = (p[(0b10, 1)].clone(), p[(0b10, 3)].clone());
    let det = &(&m00 * &m11) - &(&m01 * &m10);
    let unit_inv = det
        .div_exact(&two)
        .and_then(|u| u.inv_unit())
        .expect("middle determinant is a unit times [2]");
    let mut a = MatQ::zeros(4, 4);
    a[(0, 0b00)] = two.clone();
    a[(2, 0b11)] = two.clone();
    a[(1, 0b01)] = &m11 * &unit_inv;
    a[(1, 0b10)] = -(&m01 * &unit_inv);
    a[(3, 0b01)] = -(&m10 * &unit_inv);
    a[(3, 0b10)] = &m00 * &unit_inv;

    let scaled_id = MatQ::identity(4).scale(&two);
    assert_eq!(&a * &p, scaled_id, "a·p = [2]·Id");
    assert_eq!(&p * &a, scaled_id, "p·a = [2]·Id");
    CgDecomposition { p, a, denom: two }
}

/// The half-twist acting on V⊗V: X on each summand of the splitting,
/// conjugated back to the product basis. This is the coproduct of X.
pub fn delta_half_twist(variant: HalfTwistVariant) -> MatQi {
    let cg = clebsch_gordan();
    let x2 = half_twist(variant, 2);
    let x0 = half_twist(variant, 0);
    let mut block = MatQi::zeros(4, 4);
    for i in 0..3 {
        for j in 0..3 {
            block[(i, j)] = x2[(i, j)].clone();
        }
    }
    block[(3, 3)] = x0[(0, 0)].clone();
    let p = cg.p.to_gaussian();
    let a = cg.a.to_gaussian();
    (&(&p * &block) * &a)
        .div_exact(&cg.denom.to_gaussian())
        .expect("conjugation is exact")
}

/// The plain tensor-factor swap on V⊗V.
fn flip() -> MatQi {
    let mut m = MatQi::zeros(4, 4);
    for a in 0..2usize {
        for b in 0..2usize {
            m[(b << 1 | a, a << 1 | b)] = LaurentQi::one();
        }
    }
    m
}

/// True when the braiding factors exactly as (X⁻¹⊗X⁻¹) ∘ Flip ∘ Δ(X).
pub fn kr_factorization_check(variant: HalfTwistVariant) -> bool {
    let x_inv = half_twist_inv(variant, 1);
    let rhs = &(&x_inv.kronecker(&x_inv) * &flip()) * &delta_half_twist(variant);
    braiding().mat.to_gaussian() == rhs
}
