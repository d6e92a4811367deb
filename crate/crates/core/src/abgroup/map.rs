//! Homomorphisms between presented abelian groups, and the constructions
//! built from them: kernels, images, cokernels, quotients, tensor products,
//! and exact membership in a designated subgroup.
//!
//! A map is stored as a matrix whose column `j` gives the image of the
//! source's generator `j` in the target's generator coordinates.  All
//! subgroup computations reduce to kernel lattices of stacked matrices, so
//! they inherit exactness and determinism from the Smith normal form.

use super::matrix::IntMatrix;
use super::presentation::{kernel_lattice, AbelianPresentation, LatticeSolver};
use num_bigint::BigInt;
use num_traits::Zero;

/// A homomorphism of presented abelian groups.
#[derive(Clone, Debug)]
pub struct GroupMap {
    pub source: AbelianPresentation,
    pub target: AbelianPresentation,
    /// `target.num_generators() x source.num_generators()`; column `j` is
    /// the image of source generator `j`.
    pub matrix: IntMatrix,
}

impl GroupMap {
    pub fn new(
        source: AbelianPresentation,
        target: AbelianPresentation,
        matrix: IntMatrix,
    ) -> Self {
        assert_eq!(matrix.cols(), source.num_generators(), "map shape mismatch");
        assert_eq!(matrix.rows(), target.num_generators(), "map shape mismatch");
        GroupMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(p: &AbelianPresentation) -> Self {
        GroupMap::new(
            p.clone(),
            p.clone(),
            IntMatrix::identity(p.num_generators()),
        )
    }

    /// Whether the matrix defines a homomorphism: every source relation must
    /// map into the target's relation lattice.
    pub fn is_well_defined(&self) -> bool {
        let solver = LatticeSolver::new(&self.target.relations_transposed());
        (0..self.source.relations().rows()).all(|i| {
            let rel = self.source.relations().row(i);
            let image = self.matrix.mul_vec(&rel);
            image.iter().all(BigInt::is_zero) || solver.solve(&image).is_some()
        })
    }

    /// Image of a source element given by generator coordinates.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    /// `other` after `self` (so `self.then(other)` is `other ∘ self`).
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        assert_eq!(
            self.target.num_generators(),
            other.source.num_generators(),
            "composition shape mismatch"
        );
        GroupMap::new(
            self.source.clone(),
            other.target.clone(),
            other.matrix.mul(&self.matrix),
        )
    }

    /// Kernel as a presented group together with its inclusion into the
    /// source.  Generators of the kernel are lattice generators of
    /// `{x : f(x) = 0 in the target}`; zero generators are pruned.
    pub fn kernel(&self) -> (AbelianPresentation, GroupMap) {
        let m = self.source.num_generators();
        // x is in the kernel iff f*x lies in the target relation lattice,
        // i.e. (x, c) solves [f | rels^T] * (x, c)^T = 0 for some c.
        let stacked = self.matrix.hstack(&self.target.relations_transposed());
        let full_kernel = kernel_lattice(&stacked);
        let mut gen_cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..full_kernel.cols() {
            let col: Vec<BigInt> = (0..m).map(|i| full_kernel[(i, j)].clone()).collect();
            if col.iter().any(|x| !x.is_zero()) {
                gen_cols.push(col);
            }
        }
        let k = gen_cols.len();
        let gens = IntMatrix::from_fn(m, k, |i, j| gen_cols[j][i].clone());
        let relations = relations_among(&gens, &self.source);
        let pres = AbelianPresentation::new(k, relations);
        let incl = GroupMap::new(pres.clone(), self.source.clone(), gens);
        (pres, incl)
    }

    /// Image as a presented group together with its inclusion into the
    /// target.  Generators are the images of the source generators (zero
    /// images pruned).
    pub fn image(&self) -> (AbelianPresentation, GroupMap) {
        let n = self.target.num_generators();
        let mut gen_cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..self.matrix.cols() {
            let col = self.matrix.column(j);
            if col.iter().any(|x| !x.is_zero()) {
                gen_cols.push(col);
            }
        }
        let k = gen_cols.len();
        let gens = IntMatrix::from_fn(n, k, |i, j| gen_cols[j][i].clone());
        let relations = relations_among(&gens, &self.target);
        let pres = AbelianPresentation::new(k, relations);
        let incl = GroupMap::new(pres.clone(), self.target.clone(), gens);
        (pres, incl)
    }

    /// Cokernel (target modulo the image) with the projection from the
    /// target.  The projection is the identity on generators.
    pub fn cokernel(&self) -> (AbelianPresentation, GroupMap) {
        let n = self.target.num_generators();
        let image_rows = self.matrix.transpose();
        let relations = self
            .target
            .relations()
            .vstack(&image_rows)
            .without_zero_rows();
        let pres = AbelianPresentation::new(n, relations);
        let proj = GroupMap::new(self.target.clone(), pres.clone(), IntMatrix::identity(n));
        (pres, proj)
    }
}

/// Relation lattice among the columns of `gens`, viewed as elements of `p`:
/// all integer vectors `z` with `gens * z = 0` in the group.  Returned as
/// relation rows.
fn relations_among(gens: &IntMatrix, p: &AbelianPresentation) -> IntMatrix {
    let k = gens.cols();
    let stacked = gens.hstack(&p.relations_transposed());
    let ker = kernel_lattice(&stacked);
    let rows: Vec<Vec<BigInt>> = (0..ker.cols())
        .map(|j| (0..k).map(|i| ker[(i, j)].clone()).collect::<Vec<_>>())
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, k)
    } else {
        IntMatrix::from_bigint_rows(rows)
    }
}

/// Quotient of `p` by the subgroup generated by the given elements, with the
/// projection map (identity on generators).
pub fn quotient_by_subgroup(
    p: &AbelianPresentation,
    subgroup_gens: &[Vec<BigInt>],
) -> (AbelianPresentation, GroupMap) {
    let n = p.num_generators();
    for g in subgroup_gens {
        assert_eq!(g.len(), n, "subgroup generator length mismatch");
    }
    let extra: Vec<Vec<BigInt>> = subgroup_gens
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let relations = if extra.is_empty() {
        p.relations().clone()
    } else {
        p.relations().vstack(&IntMatrix::from_bigint_rows(extra))
    };
    let pres = AbelianPresentation::new(n, relations);
    let proj = GroupMap::new(p.clone(), pres.clone(), IntMatrix::identity(n));
    (pres, proj)
}

/// Tensor product over the integers.  Generators are the pairs
/// `e_i ⊗ f_j` indexed by `i * b.num_generators() + j`; the relations are
/// the relations of each factor tensored with the generators of the other.
pub fn tensor_product(a: &AbelianPresentation, b: &AbelianPresentation) -> AbelianPresentation {
    let (m, n) = (a.num_generators(), b.num_generators());
    let gens = m * n;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..a.relations().rows() {
        let rel = a.relations().row(r);
        for j in 0..n {
            let mut row = vec![BigInt::zero(); gens];
            for i in 0..m {
                if !rel[i].is_zero() {
                    row[i * n + j] = rel[i].clone();
                }
            }
            rows.push(row);
        }
    }
    for r in 0..b.relations().rows() {
        let rel = b.relations().row(r);
        for i in 0..m {
            let mut row = vec![BigInt::zero(); gens];
            for j in 0..n {
                if !rel[j].is_zero() {
                    row[i * n + j] = rel[j].clone();
                }
            }
            rows.push(row);
        }
    }
    let relations = if rows.is_empty() {
        IntMatrix::zeros(0, gens)
    } else {
        IntMatrix::from_bigint_rows(rows)
    };
    AbelianPresentation::new(gens, relations)
}

/// Index of `e_i ⊗ f_j` in [`tensor_product`]'s generator ordering.
pub fn tensor_index(b_gens: usize, i: usize, j: usize) -> usize {
    i * b_gens + j
}

/// Direct sum with block-diagonal relations; generators of `a` come first.
pub fn direct_sum(a: &AbelianPresentation, b: &AbelianPresentation) -> AbelianPresentation {
    let (m, n) = (a.num_generators(), b.num_generators());
    let ra = a.relations();
    let rb = b.relations();
    let relations = IntMatrix::from_fn(ra.rows() + rb.rows(), m + n, |i, j| {
        if i < ra.rows() {
            if j < m {
                ra[(i, j)].clone()
            } else {
                BigInt::zero()
            }
        } else if j >= m {
            rb[(i - ra.rows(), j - m)].clone()
        } else {
            BigInt::zero()
        }
    });
    AbelianPresentation::new(m + n, relations)
}

/// Decide whether `x` lies in the subgroup of `p` generated by
/// `subgroup_gens`; on success return coefficients expressing it.
///
/// The returned vector `c` satisfies `sum c_i * gens_i = x` in the group.
pub fn solve_membership(
    p: &AbelianPresentation,
    subgroup_gens: &[Vec<BigInt>],
    x: &[BigInt],
) -> Option<Vec<BigInt>> {
    let n = p.num_generators();
    assert_eq!(x.len(), n);
    let k = subgroup_gens.len();
    let gens = IntMatrix::from_fn(n, k, |i, j| subgroup_gens[j][i].clone());
    let stacked = gens.hstack(&p.relations_transposed());
    let solver = LatticeSolver::new(&stacked);
    solver.solve(x).map(|sol| sol[..k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn factors(p: &AbelianPresentation) -> Vec<i64> {
        p.invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn z_mod(n: i64) -> AbelianPresentation {
        AbelianPresentation::new(1, IntMatrix::from_rows(&[vec![n]]))
    }

    #[test]
    fn kernel_of_coordinate_swap_difference() {
        // f = A - I for the swap A on Z^2; kernel is the diagonal copy of Z
        let z2 = AbelianPresentation::free(2);
        let f = GroupMap::new(
            z2.clone(),
            z2,
            IntMatrix::from_rows(&[vec![-1, 1], vec![1, -1]]),
        );
        assert!(f.is_well_defined());
        let (ker, incl) = f.kernel();
        assert_eq!(factors(&ker), vec![0]);
        // (1, 1) generates: it must be in the subgroup spanned by the
        // inclusion's columns
        let gens: Vec<Vec<BigInt>> = (0..incl.matrix.cols())
            .map(|j| incl.matrix.column(j))
            .collect();
        assert!(solve_membership(&incl.target, &gens, &[BigInt::one(), BigInt::one()]).is_some());
    }

    #[test]
    fn image_of_multiplication_by_two_on_z() {
        let z = AbelianPresentation::free(1);
        let f = GroupMap::new(z.clone(), z, IntMatrix::from_rows(&[vec![2]]));
        let (im, incl) = f.image();
        assert_eq!(factors(&im), vec![0]);
        assert_eq!(incl.matrix[(0, 0)], BigInt::from(2));
    }

    #[test]
    fn cokernel_of_multiplication_by_two_on_z() {
        let z = AbelianPresentation::free(1);
        let f = GroupMap::new(z.clone(), z, IntMatrix::from_rows(&[vec![2]]));
        let (coker, proj) = f.cokernel();
        assert_eq!(factors(&coker), vec![2]);
        assert!(proj.is_well_defined());
    }

    #[test]
    fn kernel_image_orders_multiply_to_source_order() {
        // doubling on Z/4: kernel Z/2, image Z/2
        let f = GroupMap::new(z_mod(4), z_mod(4), IntMatrix::from_rows(&[vec![2]]));
        let (ker, _) = f.kernel();
        let (im, _) = f.image();
        assert_eq!(factors(&ker), vec![2]);
        assert_eq!(factors(&im), vec![2]);
        assert_eq!(
            ker.order().unwrap() * im.order().unwrap(),
            f.source.order().unwrap()
        );
    }

    #[test]
    fn quotient_of_z4_by_doubled_generator() {
        let p = z_mod(4);
        let (q, proj) = quotient_by_subgroup(&p, &[vec![BigInt::from(2)]]);
        assert_eq!(factors(&q), vec![2]);
        assert!(proj.is_well_defined());
    }

    #[test]
    fn quotient_order_divides_out_subgroup_order() {
        // Z/8 by <2g>: subgroup has order 4, quotient order 2
        let p = z_mod(8);
        let (q, _) = quotient_by_subgroup(&p, &[vec![BigInt::from(2)]]);
        assert_eq!(q.order(), Some(BigInt::from(2)));
        // subgroup order via the image of the map picking out 2g
        let f = GroupMap::new(
            AbelianPresentation::free(1),
            p,
            IntMatrix::from_rows(&[vec![2]]),
        );
        let (im, _) = f.image();
        assert_eq!(im.order(), Some(BigInt::from(4)));
    }

    #[test]
    fn tensor_of_cyclic_groups_is_gcd() {
        let t = tensor_product(&z_mod(6), &z_mod(4));
        assert_eq!(factors(&t), vec![2]);
        let t = tensor_product(&z_mod(5), &z_mod(7));
        assert!(t.is_trivial());
    }

    #[test]
    fn tensor_with_free_factor() {
        // Z ⊗ Z/6 = Z/6, and Z^2 ⊗ Z/2 = (Z/2)^2
        let t = tensor_product(&AbelianPresentation::free(1), &z_mod(6));
        assert_eq!(factors(&t), vec![6]);
        let t = tensor_product(&AbelianPresentation::free(2), &z_mod(2));
        assert_eq!(factors(&t), vec![2, 2]);
    }

    #[test]
    fn tensor_index_layout() {
        // (Z/2 + Z) ⊗ (Z + Z/3): the four generator slots carry orders
        // 2, 1, 0, 3, i.e. the group is Z/6 + Z
        let a = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![2, 0]]));
        let b = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![0, 3]]));
        let t = tensor_product(&a, &b);
        assert_eq!(t.num_generators(), 4);
        assert_eq!(tensor_index(2, 1, 0), 2);
        assert_eq!(factors(&t), vec![6, 0]);
    }

    #[test]
    fn direct_sum_concatenates() {
        let s = direct_sum(&z_mod(2), &z_mod(3));
        assert_eq!(factors(&s), vec![6]);
        let s = direct_sum(&AbelianPresentation::free(1), &z_mod(4));
        assert_eq!(factors(&s), vec![4, 0]);
    }

    #[test]
    fn membership_coefficients_reconstruct_the_element() {
        // in Z/4 + Z/4, subgroup generated by (1, 1) and (0, 2)
        let p = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![4, 0], vec![0, 4]]));
        let gens = vec![
            vec![BigInt::one(), BigInt::one()],
            vec![BigInt::zero(), BigInt::from(2)],
        ];
        let x = vec![BigInt::from(1), BigInt::from(3)];
        let c = solve_membership(&p, &gens, &x).expect("(1,3) = (1,1) + (0,2)");
        let combo: Vec<BigInt> = (0..2)
            .map(|i| &c[0] * &gens[0][i] + &c[1] * &gens[1][i])
            .collect();
        assert!(p.elements_equal(&combo, &x));
        // (0, 1) is not in the subgroup: every combination has even
        // second-minus-first coordinate
        assert!(solve_membership(&p, &gens, &[BigInt::zero(), BigInt::one()]).is_none());
    }

    #[test]
    fn composition_matches_matrix_product() {
        let f = GroupMap::new(z_mod(12), z_mod(12), IntMatrix::from_rows(&[vec![2]]));
        let g = GroupMap::new(z_mod(12), z_mod(12), IntMatrix::from_rows(&[vec![3]]));
        let h = f.then(&g);
        assert_eq!(h.matrix[(0, 0)], BigInt::from(6));
        assert_eq!(h.apply(&[BigInt::from(2)]), vec![BigInt::from(12)]);
    }

    #[test]
    fn well_definedness_catches_bad_maps() {
        // Z/2 -> Z/3 sending g to h is not a homomorphism
        let bad = GroupMap::new(z_mod(2), z_mod(3), IntMatrix::from_rows(&[vec![1]]));
        assert!(!bad.is_well_defined());
        // Z/2 -> Z/4 sending g to 2h is one
        let good = GroupMap::new(z_mod(2), z_mod(4), IntMatrix::from_rows(&[vec![2]]));
        assert!(good.is_well_defined());
    }
}
