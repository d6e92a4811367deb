//! Functoriality: the map on component groups induced by an equivariant
//! ring homomorphism, and the comparison map for a product of rings.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::abgroup::{
    direct_sum, xor_into, AbelianPresentation, F2Span, F2Vec, GroupMap, IntMatrix,
};
use crate::error::{Error, Result};
use crate::geomfix::{pi0_data, GeomFixResult, Method, Pi0Data, RelationStrategy, TensorClass};
use crate::ring_inv::{construct, RingElement, RingMap, RingWithInvolution};
use crate::DEFAULT_ENUMERATION_CAP;

/// The map induced on `(Q ⊗ Q)/I` by an equivariant ring homomorphism,
/// together with the component groups at both ends.
#[derive(Clone, Debug)]
pub struct InducedPi0Map {
    pub source: GeomFixResult,
    pub target: GeomFixResult,
    /// Acts on the canonical mod-2 coordinates underlying the two results.
    pub map: GroupMap,
}

/// Comparison of a product ring against the product of its factors.
#[derive(Clone, Debug)]
pub struct ProductDefectReport {
    pub product_ring: RingWithInvolution,
    pub source: GeomFixResult,
    pub targets: (GeomFixResult, GeomFixResult),
    /// The pair of induced projections, assembled into one map.
    pub comparison: GroupMap,
    pub kernel_witnesses: Vec<TensorClass>,
    pub injective: bool,
    pub surjective: bool,
    source_data: Pi0Data,
    kernel_span: F2Span,
}

impl ProductDefectReport {
    /// Class of `r ⊗ t` in the source component group, in the coordinates
    /// the comparison map acts on.  Both elements must be fixed elements of
    /// the product ring.
    pub fn source_class_of_tensor(&self, r: &RingElement, t: &RingElement) -> Result<F2Vec> {
        self.source_data.class_of_tensor(r, t)
    }

    /// Apply the comparison map to a source class.
    pub fn comparison_applied_to(&self, class: &F2Vec) -> F2Vec {
        let v: Vec<BigInt> = class.iter().map(|&b| BigInt::from(b)).collect();
        let two = BigInt::from(2);
        self.comparison
            .apply(&v)
            .iter()
            .map(|x| u8::try_from(x.mod_floor(&two)).unwrap())
            .collect()
    }

    /// Whether a source class lies in the kernel of the comparison map.
    pub fn kernel_contains(&self, class: &F2Vec) -> bool {
        self.kernel_span.contains(class)
    }
}

/// Compute the map induced by `f` on component groups.
///
/// Fails with an input error unless `f` is a unital ring homomorphism
/// commuting with the involutions.
pub fn induced_map(f: &RingMap) -> Result<InducedPi0Map> {
    f.validate().map_err(|msg| {
        Error::Input(format!(
            "map {} -> {} is not an equivariant ring homomorphism: {}",
            f.source.name(),
            f.target.name(),
            msg
        ))
    })?;
    let src = pi0_data(&f.source, RelationStrategy::Linear, DEFAULT_ENUMERATION_CAP)?;
    let tgt = pi0_data(&f.target, RelationStrategy::Linear, DEFAULT_ENUMERATION_CAP)?;
    let map = induced_on_data(f, &src, &tgt)?;
    Ok(InducedPi0Map {
        source: src.to_result(Method::Linear)?,
        target: tgt.to_result(Method::Linear)?,
        map,
    })
}

/// The induced map in quotient coordinates, with a subgroup-preservation
/// cross-check.
fn induced_on_data(f: &RingMap, src: &Pi0Data, tgt: &Pi0Data) -> Result<GroupMap> {
    // Q-level columns: the class of f(lift_a) for each canonical generator.
    let q_src = src.nq.dim();
    let q_cols: Vec<F2Vec> = (0..q_src)
        .map(|a| tgt.nq.class_of(&f.apply(&src.nq.lifts()[a])))
        .collect::<Result<_>>()?;

    let kron = |v: &F2Vec| kron_apply(&q_cols, tgt.nq.dim(), v);

    // The relation subgroup must map into the target's relation subgroup,
    // otherwise the map does not descend to the quotients.
    for b in src.quo.span().basis() {
        if !tgt.quo.span().contains(&kron(b)) {
            return Err(Error::CrossCheck(format!(
                "induced map {} -> {} does not preserve the relation subgroup",
                f.source.name(),
                f.target.name()
            )));
        }
    }

    let sdim = src.dim();
    let tdim = tgt.dim();
    let mut matrix = IntMatrix::zeros(tdim, sdim);
    for j in 0..sdim {
        let mut e = vec![0u8; sdim];
        e[j] = 1;
        let w = tgt.quo.project(&kron(&src.quo.lift(&e)));
        for (i, &b) in w.iter().enumerate() {
            if b == 1 {
                matrix[(i, j)] = BigInt::from(1);
            }
        }
    }
    Ok(GroupMap::new(
        elementary_two(sdim),
        elementary_two(tdim),
        matrix,
    ))
}

/// Apply `M ⊗ M` to a flattened tensor vector, where `M` is given by its
/// mod-2 columns.
fn kron_apply(q_cols: &[F2Vec], q_tgt: usize, v: &F2Vec) -> F2Vec {
    let q_src = q_cols.len();
    let mut out = vec![0u8; q_tgt * q_tgt];
    for a in 0..q_src {
        for c in 0..q_src {
            if v[a * q_src + c] == 0 {
                continue;
            }
            for (ai, &abit) in q_cols[a].iter().enumerate() {
                if abit == 0 {
                    continue;
                }
                for (ci, &cbit) in q_cols[c].iter().enumerate() {
                    if cbit == 1 {
                        out[ai * q_tgt + ci] ^= 1;
                    }
                }
            }
        }
    }
    out
}

fn elementary_two(dim: usize) -> AbelianPresentation {
    AbelianPresentation::from_orders(&vec![BigInt::from(2); dim])
}

/// Compare the component group of `left x right` with the direct sum of the
/// factors' component groups, via the two induced projections.
pub fn product_defect(
    left: &RingWithInvolution,
    right: &RingWithInvolution,
) -> Result<ProductDefectReport> {
    let prod = construct::product(left, right);
    let (nl, nr) = (left.rank(), right.rank());
    let pr_left = RingMap::new(
        prod.clone(),
        left.clone(),
        IntMatrix::from_fn(nl, nl + nr, |i, j| BigInt::from(u8::from(i == j))),
    );
    let pr_right = RingMap::new(
        prod.clone(),
        right.clone(),
        IntMatrix::from_fn(nr, nl + nr, |i, j| BigInt::from(u8::from(i + nl == j))),
    );
    for pr in [&pr_left, &pr_right] {
        pr.validate().map_err(|msg| {
            Error::CrossCheck(format!(
                "projection {} -> {} is not an equivariant ring homomorphism: {}",
                prod.name(),
                pr.target.name(),
                msg
            ))
        })?;
    }

    let src = pi0_data(&prod, RelationStrategy::Linear, DEFAULT_ENUMERATION_CAP)?;
    let tl = pi0_data(left, RelationStrategy::Linear, DEFAULT_ENUMERATION_CAP)?;
    let tr = pi0_data(right, RelationStrategy::Linear, DEFAULT_ENUMERATION_CAP)?;
    let ml = induced_on_data(&pr_left, &src, &tl)?;
    let mr = induced_on_data(&pr_right, &src, &tr)?;

    let comparison = GroupMap::new(
        elementary_two(src.dim()),
        direct_sum(&elementary_two(tl.dim()), &elementary_two(tr.dim())),
        ml.matrix.vstack(&mr.matrix),
    );

    // Mod-2 rank and nullspace of the comparison matrix.
    let total = tl.dim() + tr.dim();
    let cols: Vec<F2Vec> = (0..src.dim())
        .map(|j| {
            (0..total)
                .map(|i| u8::try_from(&comparison.matrix[(i, j)] % BigInt::from(2)).unwrap())
                .collect()
        })
        .collect();
    let nullspace = f2_nullspace(&cols, total);
    let mut image = F2Span::new(total);
    for col in &cols {
        image.insert(col.clone());
    }

    let kernel_witnesses: Vec<TensorClass> =
        nullspace.iter().map(|v| src.tensor_class(v)).collect();
    let injective = nullspace.is_empty();
    let surjective = image.rank() == total;
    let mut kernel_span = F2Span::new(src.dim());
    for v in nullspace {
        kernel_span.insert(v);
    }

    Ok(ProductDefectReport {
        product_ring: prod,
        source: src.to_result(Method::Linear)?,
        targets: (tl.to_result(Method::Linear)?, tr.to_result(Method::Linear)?),
        comparison,
        kernel_witnesses,
        injective,
        surjective,
        source_data: src,
        kernel_span,
    })
}

/// Basis of the nullspace of the mod-2 matrix with the given columns.
fn f2_nullspace(cols: &[F2Vec], rows: usize) -> Vec<F2Vec> {
    let k = cols.len();
    let mut pivots: Vec<(F2Vec, F2Vec)> = Vec::new();
    let mut null = Vec::new();
    for j in 0..k {
        let mut v = cols[j].clone();
        debug_assert_eq!(v.len(), rows);
        let mut comb = vec![0u8; k];
        comb[j] = 1;
        for (p, pc) in &pivots {
            let lead = p.iter().position(|&b| b == 1).unwrap();
            if v[lead] == 1 {
                xor_into(&mut v, p);
                xor_into(&mut comb, pc);
            }
        }
        if v.iter().all(|&b| b == 0) {
            null.push(comb);
        } else {
            pivots.push((v, comb));
        }
    }
    null
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_inv::construct::*;

    #[test]
    fn identity_map_induces_identity() {
        let r = cyclic_ring(4);
        let f = RingMap::new(r.clone(), r.clone(), IntMatrix::identity(1));
        let ind = induced_map(&f).unwrap();
        assert_eq!(ind.source.f2_dimension, 1);
        assert_eq!(ind.map.matrix, IntMatrix::identity(1));
    }

    #[test]
    fn first_projection_of_f2_square_is_surjective_with_kernel() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        let p = product(&f2, &f2);
        let pr1 = RingMap::new(p.clone(), f2.clone(), IntMatrix::from_rows(&[vec![1, 0]]));
        let ind = induced_map(&pr1).unwrap();
        assert_eq!(ind.source.f2_dimension, 2);
        assert_eq!(ind.target.f2_dimension, 1);
        // (1,0)⊗(1,0) maps to 1⊗1; (0,1)⊗(0,1) maps to 0.
        let src = pi0_data(&p, RelationStrategy::Linear, 4096).unwrap();
        let tgt = pi0_data(&f2, RelationStrategy::Linear, 4096).unwrap();
        let e1 = p.element_from_i64(&[1, 0]).unwrap();
        let e2 = p.element_from_i64(&[0, 1]).unwrap();
        let v1 = src.class_of_tensor(&e1, &e1).unwrap();
        let v2 = src.class_of_tensor(&e2, &e2).unwrap();
        let one = tgt.class_of_tensor(&f2.one(), &f2.one()).unwrap();
        assert_eq!(ind.map.apply(&to_bigint(&v1)), to_bigint(&one));
        assert!(ind
            .map
            .apply(&to_bigint(&v2))
            .iter()
            .all(|x| (x % BigInt::from(2)) == BigInt::from(0)));
    }

    #[test]
    fn inclusion_into_truncated_polynomials_is_injective_on_components() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        let t2 = truncated_polynomial(&f2, 2);
        let incl = RingMap::new(
            f2.clone(),
            t2.clone(),
            IntMatrix::from_rows(&[vec![1], vec![0]]),
        );
        let ind = induced_map(&incl).unwrap();
        assert_eq!(ind.source.f2_dimension, 1);
        assert_eq!(ind.target.f2_dimension, 4);
        let col = ind.map.matrix.column(0);
        assert!(col.iter().any(|x| (x % BigInt::from(2)) != BigInt::from(0)));
    }

    #[test]
    fn composition_of_induced_maps_matches_induced_composition() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        let p = product(&f2, &f2);
        let diag = RingMap::new(
            f2.clone(),
            p.clone(),
            IntMatrix::from_rows(&[vec![1], vec![1]]),
        );
        let pr1 = RingMap::new(p.clone(), f2.clone(), IntMatrix::from_rows(&[vec![1, 0]]));
        let combined = induced_map(&diag.then(&pr1)).unwrap();
        let step1 = induced_map(&diag).unwrap();
        let step2 = induced_map(&pr1).unwrap();
        let composed = step1.map.then(&step2.map);
        assert_eq!(combined.map.matrix, composed.matrix);
        assert_eq!(combined.map.matrix, IntMatrix::identity(1));
    }

    #[test]
    fn defect_report_for_two_fields_is_bijective() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        let report = product_defect(&f2, &f2).unwrap();
        assert!(report.injective);
        assert!(report.surjective);
        assert!(report.kernel_witnesses.is_empty());
        assert_eq!(report.source.f2_dimension, 2);
        assert_eq!(report.targets.0.f2_dimension, 1);
        assert_eq!(report.targets.1.f2_dimension, 1);
    }

    #[test]
    fn defect_report_for_odd_fields_is_trivially_bijective() {
        let f3 = finite_field(3, 1, FieldInvolution::Identity).unwrap();
        let report = product_defect(&f3, &f3).unwrap();
        assert!(report.injective);
        assert!(report.surjective);
        assert_eq!(report.source.f2_dimension, 0);
    }

    fn to_bigint(v: &[u8]) -> Vec<BigInt> {
        v.iter().map(|&b| BigInt::from(b)).collect()
    }
}
