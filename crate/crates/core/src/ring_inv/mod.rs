//! Finitely generated rings with anti-involution.
//!
//! A ring is presented on an additive basis `b_0, ..., b_{n-1}` where `b_i`
//! has additive order `d_i >= 0` (0 meaning infinite), so the additive group
//! is `⊕ Z/d_i` with `Z/0 = Z`.  Multiplication is a table of structure
//! constants, the anti-involution is an additive matrix, and elements are
//! coefficient vectors kept in canonical form (`0 <= c_i < d_i` whenever
//! `d_i > 0`).
//!
//! The additive group is always kept diagonal; the constructors in
//! [`construct`] all produce diagonal presentations directly.

pub mod construct;
mod validate;

pub use validate::{Axiom, AxiomFailure, ValidationReport};

use crate::abgroup::{AbelianPresentation, GroupMap, IntMatrix};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of a [`RingWithInvolution`]: coefficients over the additive
/// basis, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingElement {
    pub coeffs: Vec<BigInt>,
}

/// A finitely generated ring with anti-involution.
#[derive(Clone, Debug)]
pub struct RingWithInvolution {
    name: String,
    /// Additive order of each basis element; 0 means infinite order.
    orders: Vec<BigInt>,
    /// `mul[i][j]` is the coefficient vector of `b_i * b_j`.
    mul: Vec<Vec<Vec<BigInt>>>,
    unit: Vec<BigInt>,
    /// Column `i` is the coefficient vector of `α(b_i)`.
    involution: IntMatrix,
    commutative: bool,
    /// Display names for the basis elements.
    basis_names: Vec<String>,
}

impl RingWithInvolution {
    /// Assemble a ring from raw data.  Structural shape is checked here;
    /// the ring axioms are checked by [`RingWithInvolution::validate`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: String,
        orders: Vec<BigInt>,
        mul: Vec<Vec<Vec<BigInt>>>,
        unit: Vec<BigInt>,
        involution: IntMatrix,
        commutative: bool,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        let n = orders.len();
        if orders.iter().any(|d| d.is_negative()) {
            return Err(Error::Input("additive orders must be >= 0".into()));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::Input("multiplication table must be n x n".into()));
        }
        if mul
            .iter()
            .any(|row| row.iter().any(|entry| entry.len() != n))
        {
            return Err(Error::Input(
                "multiplication table entries must have length n".into(),
            ));
        }
        if unit.len() != n {
            return Err(Error::Input("unit vector must have length n".into()));
        }
        if involution.rows() != n || involution.cols() != n {
            return Err(Error::Input("involution matrix must be n x n".into()));
        }
        if basis_names.len() != n {
            return Err(Error::Input("basis names must have length n".into()));
        }
        let mut ring = RingWithInvolution {
            name,
            orders,
            mul,
            unit,
            involution,
            commutative,
            basis_names,
        };
        // keep stored data canonical
        ring.unit = ring.reduce(ring.unit.clone());
        for i in 0..n {
            for j in 0..n {
                ring.mul[i][j] = ring.reduce(ring.mul[i][j].clone());
            }
        }
        let inv = IntMatrix::from_fn(n, n, |r, c| ring.involution[(r, c)].clone());
        for c in 0..n {
            let col = ring.reduce(inv.column(c));
            for (r, v) in col.into_iter().enumerate() {
                ring.involution[(r, c)] = v;
            }
        }
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: String) {
        self.name = name;
    }

    /// Number of additive basis elements.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn multiplication_table(&self) -> &Vec<Vec<Vec<BigInt>>> {
        &self.mul
    }

    pub fn unit_vector(&self) -> &[BigInt] {
        &self.unit
    }

    pub fn involution_matrix(&self) -> &IntMatrix {
        &self.involution
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// The additive group as a presented abelian group (diagonal relations).
    pub fn additive_presentation(&self) -> AbelianPresentation {
        AbelianPresentation::from_orders(&self.orders)
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|d| !d.is_zero())
    }

    /// Number of elements, `None` when infinite.
    pub fn ring_order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.orders.iter().product())
    }

    /// Reduce a coefficient vector into canonical form.
    fn reduce(&self, mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
        for (c, d) in coeffs.iter_mut().zip(&self.orders) {
            if !d.is_zero() {
                let r = c.mod_floor(d);
                *c = r;
            }
        }
        coeffs
    }

    /// Build an element from coefficients, checking the length.
    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<RingElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::Input(format!(
                "element has {} coefficients, ring {} has rank {}",
                coeffs.len(),
                self.name,
                self.rank()
            )));
        }
        Ok(RingElement {
            coeffs: self.reduce(coeffs),
        })
    }

    pub fn element_from_i64(&self, coeffs: &[i64]) -> Result<RingElement> {
        self.element(coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coeffs: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            coeffs: self.unit.clone(),
        }
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        assert!(i < self.rank());
        let mut coeffs = vec![BigInt::zero(); self.rank()];
        coeffs[i] = BigInt::one();
        RingElement {
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        RingElement {
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        RingElement {
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        let coeffs = a.coeffs.iter().map(|x| -x).collect();
        RingElement {
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn scalar_mul(&self, c: &BigInt, a: &RingElement) -> RingElement {
        let coeffs = a.coeffs.iter().map(|x| c * x).collect();
        RingElement {
            coeffs: self.reduce(coeffs),
        }
    }

    /// Product via bilinear extension of the structure constants.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let n = self.rank();
        let mut acc = vec![BigInt::zero(); n];
        for i in 0..n {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coeffs[j].is_zero() {
                    continue;
                }
                let scale = &a.coeffs[i] * &b.coeffs[j];
                for (t, slot) in self.mul[i][j].iter().zip(&mut acc) {
                    if !t.is_zero() {
                        *slot += &scale * t;
                    }
                }
            }
        }
        RingElement {
            coeffs: self.reduce(acc),
        }
    }

    /// Apply the anti-involution.
    pub fn invol(&self, a: &RingElement) -> RingElement {
        RingElement {
            coeffs: self.reduce(self.involution.mul_vec(&a.coeffs)),
        }
    }

    /// The norm `N(a) = a + α(a)`.
    pub fn norm(&self, a: &RingElement) -> RingElement {
        let i = self.invol(a);
        self.add(a, &i)
    }

    pub fn is_zero_elem(&self, a: &RingElement) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    /// Whether 2 is invertible, decided by solving `2x = 1` coordinatewise
    /// on the diagonal additive group.
    pub fn two_invertible(&self) -> bool {
        let two = BigInt::from(2);
        self.unit.iter().zip(&self.orders).all(|(u, d)| {
            if d.is_zero() {
                u.is_even()
            } else {
                u.is_multiple_of(&two.gcd(d))
            }
        })
    }

    /// All elements in mixed-radix order (coefficient 0 varies fastest).
    /// Errors on infinite rings and when the element count exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<RingElement>> {
        let Some(order) = self.ring_order() else {
            return Err(Error::Input(format!(
                "ring {} is infinite and cannot be enumerated",
                self.name
            )));
        };
        if order > BigInt::from(cap) {
            return Err(Error::Input(format!(
                "ring {} has {} elements, above the enumeration cap {}",
                self.name, order, cap
            )));
        }
        let n = self.rank();
        let mut out = Vec::new();
        let mut current = vec![BigInt::zero(); n];
        loop {
            out.push(RingElement {
                coeffs: current.clone(),
            });
            // mixed-radix increment
            let mut pos = 0;
            loop {
                if pos == n {
                    return Ok(out);
                }
                current[pos] += 1;
                if current[pos] < self.orders[pos] {
                    break;
                }
                current[pos] = BigInt::zero();
                pos += 1;
            }
        }
    }

    /// Check every ring axiom, returning a structured report.
    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    /// The fixed subgroup `R^α = ker(α - id)` of the additive group, with
    /// its inclusion map.
    pub fn fixed_subgroup(&self) -> (AbelianPresentation, GroupMap) {
        let add = self.additive_presentation();
        let diff = self.involution.sub(&IntMatrix::identity(self.rank()));
        GroupMap::new(add.clone(), add, diff).kernel()
    }

    /// The norm image `N(R) = im(α + id)` inside the additive group, with
    /// its inclusion map.
    pub fn norm_image(&self) -> (AbelianPresentation, GroupMap) {
        let add = self.additive_presentation();
        let sum = self.involution.add(&IntMatrix::identity(self.rank()));
        GroupMap::new(add.clone(), add, sum).image()
    }

    /// Render an element using the basis names, e.g. `1 + 2·i`.
    pub fn display_element(&self, a: &RingElement) -> String {
        let mut terms = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.basis_names[i];
            if c.is_one() {
                terms.push(name.clone());
            } else if name == "1" {
                terms.push(c.to_string());
            } else {
                terms.push(format!("{}·{}", c, name));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// An additive map between two rings, given by a matrix whose column `i` is
/// the image of the source's basis element `b_i`.  `validate` checks that it
/// is a unital ring homomorphism commuting with the involutions.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub source: RingWithInvolution,
    pub target: RingWithInvolution,
    pub matrix: IntMatrix,
}

impl RingMap {
    pub fn new(source: RingWithInvolution, target: RingWithInvolution, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.cols(), source.rank(), "ring map shape mismatch");
        assert_eq!(matrix.rows(), target.rank(), "ring map shape mismatch");
        RingMap {
            source,
            target,
            matrix,
        }
    }

    pub fn apply(&self, a: &RingElement) -> RingElement {
        RingElement {
            coeffs: self.target.reduce(self.matrix.mul_vec(&a.coeffs)),
        }
    }

    /// Check that the matrix defines an equivariant unital ring
    /// homomorphism.  Returns a human-readable description of the first
    /// failure, if any.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let (src, tgt) = (&self.source, &self.target);
        // additive well-definedness: d_i * f(b_i) must vanish
        for i in 0..src.rank() {
            let d = &src.orders()[i];
            if d.is_zero() {
                continue;
            }
            let img = self.apply(&src.basis_element(i));
            let scaled = tgt.scalar_mul(d, &img);
            if !tgt.is_zero_elem(&scaled) {
                return Err(format!(
                    "not additively well defined: order {} of b{} is not respected",
                    d, i
                ));
            }
        }
        // unital
        let one_img = self.apply(&src.one());
        if one_img != tgt.one() {
            return Err("does not send 1 to 1".into());
        }
        // multiplicative on basis pairs (bilinearity extends it)
        for i in 0..src.rank() {
            for j in 0..src.rank() {
                let lhs = self.apply(&src.mul(&src.basis_element(i), &src.basis_element(j)));
                let rhs = tgt.mul(
                    &self.apply(&src.basis_element(i)),
                    &self.apply(&src.basis_element(j)),
                );
                if lhs != rhs {
                    return Err(format!("not multiplicative on b{} * b{}", i, j));
                }
            }
        }
        // equivariant: f ∘ α = α' ∘ f on the basis
        for i in 0..src.rank() {
            let lhs = self.apply(&src.invol(&src.basis_element(i)));
            let rhs = tgt.invol(&self.apply(&src.basis_element(i)));
            if lhs != rhs {
                return Err(format!("does not commute with the involutions on b{}", i));
            }
        }
        Ok(())
    }

    /// `other` after `self`.
    pub fn then(&self, other: &RingMap) -> RingMap {
        assert_eq!(self.target.rank(), other.source.rank());
        RingMap::new(
            self.source.clone(),
            other.target.clone(),
            other.matrix.mul(&self.matrix),
        )
    }
}
