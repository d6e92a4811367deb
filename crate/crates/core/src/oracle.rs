//! Independent checks on the main pipeline.
//!
//! Three oracles, each sharing as little code as possible with the route it
//! verifies:
//!
//! * [`fixed_chain_complex`] / [`homology_H1`] — an unnormalized simplicial
//!   model of the smash square of circles, with the flip-plus-involution
//!   action.  Its first homology recomputes the norm quotient from scratch.
//! * [`coequalizer_pi0`] — the component group as an integral cokernel of
//!   `d0 - d1`, with no mod-2 shortcut anywhere.
//! * [`brute_force_relation_subgroup`] — the relation subgroup by walking
//!   every ring element, quantifying the defining formula literally.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::abgroup::{
    quotient_by_subgroup, solve_membership, AbelianPresentation, F2Span, GroupMap, IntMatrix,
    LatticeSolver,
};
use crate::error::{Error, Result};
use crate::geomfix::{
    face_maps_on_pi0, norm_quotient, GeomFixResult, Method, NormQuotient, TensorClass,
};
use crate::ring_inv::{RingElement, RingWithInvolution};

/// A simplex of the smash square of the simplicial circle at a fixed level:
/// either the collapsed basepoint or a pair of circle vertices `x_a ∧ x_b`
/// with `1 <= a, b <= level`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SmashSimplex {
    Base,
    Pair(usize, usize),
}

/// The smash square of two simplicial circles at one simplicial level.
///
/// The circle has level-`k` vertices `x_0, ..., x_{k+1}` with `x_0` and
/// `x_{k+1}` identified to the basepoint, so the smash has `k² + 1`
/// simplices at level `k`.  Faces and degeneracies act on each factor by the
/// standard vertex maps; [`SimplicialSmashSphere::swap`] exchanges the two
/// factors.
#[derive(Clone, Copy, Debug)]
pub struct SimplicialSmashSphere {
    level: usize,
}

fn face_vertex(s: usize, i: usize) -> usize {
    if i <= s {
        i
    } else {
        i - 1
    }
}

fn degeneracy_vertex(s: usize, i: usize) -> usize {
    if i <= s {
        i
    } else {
        i + 1
    }
}

impl SimplicialSmashSphere {
    pub fn new(level: usize) -> Self {
        SimplicialSmashSphere { level }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// All simplices at this level: the basepoint, then pairs in row-major
    /// order.
    pub fn simplices(&self) -> Vec<SmashSimplex> {
        let mut out = vec![SmashSimplex::Base];
        for a in 1..=self.level {
            for b in 1..=self.level {
                out.push(SmashSimplex::Pair(a, b));
            }
        }
        out
    }

    /// The `s`-th face, landing one level down.  Requires `level >= 1` and
    /// `s <= level`.
    pub fn face(&self, s: usize, x: SmashSimplex) -> SmashSimplex {
        assert!(
            self.level >= 1 && s <= self.level,
            "face index out of range"
        );
        match x {
            SmashSimplex::Base => SmashSimplex::Base,
            SmashSimplex::Pair(a, b) => {
                let (a2, b2) = (face_vertex(s, a), face_vertex(s, b));
                // Basepoint vertices one level down are 0 and level.
                if a2 == 0 || a2 == self.level || b2 == 0 || b2 == self.level {
                    SmashSimplex::Base
                } else {
                    SmashSimplex::Pair(a2, b2)
                }
            }
        }
    }

    /// The `s`-th degeneracy, landing one level up.  Requires `s <= level`.
    pub fn degeneracy(&self, s: usize, x: SmashSimplex) -> SmashSimplex {
        assert!(s <= self.level, "degeneracy index out of range");
        match x {
            SmashSimplex::Base => SmashSimplex::Base,
            SmashSimplex::Pair(a, b) => {
                SmashSimplex::Pair(degeneracy_vertex(s, a), degeneracy_vertex(s, b))
            }
        }
    }

    /// Exchange the two smash factors.
    pub fn swap(&self, x: SmashSimplex) -> SmashSimplex {
        match x {
            SmashSimplex::Base => SmashSimplex::Base,
            SmashSimplex::Pair(a, b) => SmashSimplex::Pair(b, a),
        }
    }
}

/// The chain complex of the fixed points of `R`-chains on the smash square
/// under the flip-plus-involution action.
///
/// At level `k` the fixed chains have one copy of the fixed subgroup for
/// each diagonal simplex `x_a ∧ x_a` and one copy of the additive group of
/// `R` for each unordered pair `{x_a ∧ x_b, x_b ∧ x_a}` with `a < b`,
/// embedded as `r ↦ r·(x_a ∧ x_b) + α(r)·(x_b ∧ x_a)`.  The boundary is the
/// alternating sum of the face maps; the constructor verifies that
/// consecutive boundaries compose to zero.
#[derive(Clone, Debug)]
pub struct FixedChainComplex {
    /// `chain_groups[k]` presents the fixed chains at level `k`.
    pub chain_groups: Vec<AbelianPresentation>,
    /// `boundaries[k]` is the boundary from level `k + 1` to level `k`.
    pub boundaries: Vec<GroupMap>,
}

struct LevelLayout {
    /// Pairs `a < b` at this level, in lexicographic order.
    pairs: Vec<(usize, usize)>,
    fix_gens: usize,
    ring_rank: usize,
    level: usize,
}

impl LevelLayout {
    fn new(level: usize, fix_gens: usize, ring_rank: usize) -> Self {
        let mut pairs = Vec::new();
        for a in 1..=level {
            for b in (a + 1)..=level {
                pairs.push((a, b));
            }
        }
        LevelLayout {
            pairs,
            fix_gens,
            ring_rank,
            level,
        }
    }

    fn generators(&self) -> usize {
        self.level * self.fix_gens + self.pairs.len() * self.ring_rank
    }

    fn diag_offset(&self, a: usize) -> usize {
        debug_assert!(1 <= a && a <= self.level);
        (a - 1) * self.fix_gens
    }

    fn pair_offset(&self, a: usize, b: usize) -> usize {
        let idx = self
            .pairs
            .iter()
            .position(|&p| p == (a, b))
            .expect("pair present at this level");
        self.level * self.fix_gens + idx * self.ring_rank
    }
}

/// Build the fixed chain complex up to the given top level.
pub fn fixed_chain_complex(
    ring: &RingWithInvolution,
    max_level: usize,
) -> Result<FixedChainComplex> {
    let n = ring.rank();
    let (fix_pres, fix_incl_map) = ring.fixed_subgroup();
    let fix_incl = fix_incl_map.matrix.clone();
    let f = fix_pres.num_generators();
    let additive = ring.additive_presentation();
    let solver = LatticeSolver::new(&fix_incl.hstack(&additive.relations_transposed()));

    let fix_coords = |e: &RingElement| -> Result<Vec<BigInt>> {
        let sol = solver.solve(&e.coeffs).ok_or_else(|| {
            Error::CrossCheck(format!(
                "element {} is fixed but not reachable from the fixed-subgroup generators",
                ring.display_element(e)
            ))
        })?;
        Ok(sol[..f].to_vec())
    };

    let layouts: Vec<LevelLayout> = (0..=max_level).map(|k| LevelLayout::new(k, f, n)).collect();

    let chain_groups: Vec<AbelianPresentation> = layouts
        .iter()
        .map(|layout| level_presentation(layout, &fix_pres, &additive))
        .collect();

    let mut boundaries = Vec::new();
    for k in 1..=max_level {
        let src = &layouts[k];
        let tgt = &layouts[k - 1];
        let mut matrix = IntMatrix::zeros(tgt.generators(), src.generators());
        let sphere = SimplicialSmashSphere::new(k);

        // Diagonal blocks: the fixed element rides along unchanged.
        for a in 1..=k {
            for g in 0..f {
                let col = src.diag_offset(a) + g;
                for i in 0..=k {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    match sphere.face(i, SmashSimplex::Pair(a, a)) {
                        SmashSimplex::Base => {}
                        SmashSimplex::Pair(a2, b2) => {
                            debug_assert_eq!(a2, b2);
                            let row = tgt.diag_offset(a2) + g;
                            matrix[(row, col)] += BigInt::from(sign);
                        }
                    }
                }
            }
        }

        // Pair blocks: faces can keep the pair, swap it, or merge it onto
        // the diagonal, where the two summands add up to a norm.
        for &(a, b) in &src.pairs {
            for v in 0..n {
                let col = src.pair_offset(a, b) + v;
                for i in 0..=k {
                    let sign = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
                    match sphere.face(i, SmashSimplex::Pair(a, b)) {
                        SmashSimplex::Base => {}
                        SmashSimplex::Pair(a2, b2) if a2 == b2 => {
                            let coords = fix_coords(&ring.norm(&ring.basis_element(v)))?;
                            for (g, c) in coords.iter().enumerate() {
                                if !c.is_zero() {
                                    let row = tgt.diag_offset(a2) + g;
                                    matrix[(row, col)] += &sign * c;
                                }
                            }
                        }
                        SmashSimplex::Pair(a2, b2) if a2 < b2 => {
                            let row = tgt.pair_offset(a2, b2) + v;
                            matrix[(row, col)] += &sign;
                        }
                        SmashSimplex::Pair(a2, b2) => {
                            // Orientation flips: the stored representative
                            // becomes α(b_v).
                            let alpha = ring.invol(&ring.basis_element(v));
                            for (w, c) in alpha.coeffs.iter().enumerate() {
                                if !c.is_zero() {
                                    let row = tgt.pair_offset(b2, a2) + w;
                                    matrix[(row, col)] += &sign * c;
                                }
                            }
                        }
                    }
                }
            }
        }

        boundaries.push(GroupMap::new(
            chain_groups[k].clone(),
            chain_groups[k - 1].clone(),
            matrix,
        ));
    }

    // Consecutive boundaries must compose to zero in the target group.
    for k in 1..boundaries.len() {
        let composite = boundaries[k - 1].matrix.mul(&boundaries[k].matrix);
        for j in 0..composite.cols() {
            if !chain_groups[k - 1].is_zero_element(&composite.column(j)) {
                return Err(Error::CrossCheck(format!(
                    "boundary squared is nonzero on generator {} at level {}",
                    j,
                    k + 1
                )));
            }
        }
    }

    Ok(FixedChainComplex {
        chain_groups,
        boundaries,
    })
}

fn level_presentation(
    layout: &LevelLayout,
    fix_pres: &AbelianPresentation,
    additive: &AbelianPresentation,
) -> AbelianPresentation {
    let gens = layout.generators();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for a in 1..=layout.level {
        let off = layout.diag_offset(a);
        for r in 0..fix_pres.relations().rows() {
            let rel = fix_pres.relations().row(r);
            let mut row = vec![BigInt::zero(); gens];
            row[off..off + layout.fix_gens].clone_from_slice(&rel);
            rows.push(row);
        }
    }
    for &(a, b) in &layout.pairs {
        let off = layout.pair_offset(a, b);
        for r in 0..additive.relations().rows() {
            let rel = additive.relations().row(r);
            let mut row = vec![BigInt::zero(); gens];
            row[off..off + layout.ring_rank].clone_from_slice(&rel);
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

/// First homology of the fixed chain complex.  Must agree with the norm
/// quotient; disagreement is a cross-check failure.
#[allow(non_snake_case)]
pub fn homology_H1(ring: &RingWithInvolution) -> Result<AbelianPresentation> {
    let complex = fixed_chain_complex(ring, 2)?;
    let d1 = &complex.boundaries[0];
    let d2 = &complex.boundaries[1];

    let (cycles, inclusion) = d1.kernel();
    let kernel_gens: Vec<Vec<BigInt>> = (0..inclusion.matrix.cols())
        .map(|j| inclusion.matrix.column(j))
        .collect();

    let c1 = &complex.chain_groups[1];
    let mut boundary_classes = Vec::new();
    for j in 0..d2.matrix.cols() {
        let img = d2.matrix.column(j);
        let coeffs = solve_membership(c1, &kernel_gens, &img).ok_or_else(|| {
            Error::CrossCheck(format!(
                "boundary of level-2 generator {} is not a cycle",
                j
            ))
        })?;
        boundary_classes.push(coeffs);
    }

    let (h1, _) = quotient_by_subgroup(&cycles, &boundary_classes);

    let expected = norm_quotient(ring)?.q_presentation().invariant_factors();
    if h1.invariant_factors() != expected {
        return Err(Error::CrossCheck(format!(
            "first homology of {} is {:?} but the norm quotient is {:?}",
            ring.name(),
            h1.invariant_factors(),
            expected
        )));
    }
    Ok(h1)
}

/// The component group as the integral cokernel of `d0 - d1`, with no mod-2
/// reduction along the way.
pub fn coequalizer_pi0(ring: &RingWithInvolution) -> Result<GeomFixResult> {
    let nq = norm_quotient(ring)?;
    let faces = face_maps_on_pi0(&nq)?;
    let difference = faces.d0.matrix.sub(&faces.d1.matrix);
    let map = GroupMap::new(faces.triple.clone(), faces.square.clone(), difference);
    let (coker, _) = map.cokernel();

    let factors = coker.invariant_factors();
    let two = BigInt::from(2);
    if factors.iter().any(|d| *d != two) {
        return Err(Error::CrossCheck(format!(
            "coequalizer of {} must be elementary abelian of exponent 2, got {:?}",
            ring.name(),
            factors
        )));
    }

    let canon = coker.canonical_form();
    let q = nq.dim();
    let witnesses: Vec<TensorClass> = (0..canon.dim())
        .map(|c| {
            let section = canon.section_of(c);
            let mut terms = Vec::new();
            for a in 0..q {
                for t in 0..q {
                    if section[a * q + t].mod_floor(&two) == BigInt::from(1) {
                        terms.push((nq.lifts()[a].clone(), nq.lifts()[t].clone()));
                    }
                }
            }
            TensorClass { terms }
        })
        .collect();

    Ok(GeomFixResult {
        ring_name: ring.name().to_string(),
        method: Method::Coequalizer,
        q_invariant_factors: nq.invariant_factors(),
        f2_dimension: factors.len(),
        witnesses,
        cross_check: vec![(Method::Coequalizer, factors.clone())],
        invariant_factors: factors,
    })
}

/// The relation subgroup by literal enumeration: for every ring element `s`
/// and every pair of canonical lifts `(r, t)`, insert the difference
/// `class(α(s)·r·s ⊗ t) - class(r ⊗ s·t·α(s))`.
///
/// Fails with an input error on infinite rings and on rings with more than
/// `cap` elements.
pub fn brute_force_relation_subgroup(nq: &NormQuotient, cap: u64) -> Result<F2Span> {
    let ring = nq.ring();
    let elements = ring.elements(cap)?;
    let q = nq.dim();
    let mut span = F2Span::new(q * q);
    for s in &elements {
        let alpha_s = ring.invol(s);
        let lefts: Vec<Vec<u8>> = (0..q)
            .map(|a| nq.class_of(&ring.mul(&ring.mul(&alpha_s, &nq.lifts()[a]), s)))
            .collect::<Result<_>>()?;
        let rights: Vec<Vec<u8>> = (0..q)
            .map(|c| nq.class_of(&ring.mul(&ring.mul(s, &nq.lifts()[c]), &alpha_s)))
            .collect::<Result<_>>()?;
        for a in 0..q {
            for c in 0..q {
                let mut v = vec![0u8; q * q];
                for (a2, &bit) in lefts[a].iter().enumerate() {
                    if bit == 1 {
                        v[a2 * q + c] ^= 1;
                    }
                }
                for (c2, &bit) in rights[c].iter().enumerate() {
                    if bit == 1 {
                        v[a * q + c2] ^= 1;
                    }
                }
                span.insert(v);
            }
        }
    }
    Ok(span)
}
