//! Minimal linear algebra over GF(2): spans kept in row-echelon form.
//!
//! The geometric-fixed-point pipeline works in elementary abelian 2-groups,
//! where subgroup arithmetic is plain F2 row reduction.  Vectors are dense
//! `Vec<u8>` with entries 0/1 — dimensions here are tiny (squares of the
//! number of norm-quotient generators).

/// A vector over GF(2); entries must be 0 or 1.
pub type F2Vec = Vec<u8>;

/// XOR `b` into `a`.
pub fn xor_into(a: &mut F2Vec, b: &F2Vec) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

pub fn is_zero_vec(v: &F2Vec) -> bool {
    v.iter().all(|&x| x == 0)
}

/// A subspace of GF(2)^n maintained in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct F2Span {
    ambient: usize,
    /// Echelon rows, each with a distinct pivot column, sorted by pivot.
    rows: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl F2Span {
    pub fn new(ambient: usize) -> Self {
        F2Span {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the span (eliminate all pivot coordinates).
    pub fn reduce(&self, mut v: F2Vec) -> F2Vec {
        assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                xor_into(&mut v, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        is_zero_vec(&self.reduce(v.clone()))
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        // back-substitute to keep the basis fully reduced
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[p] != 0 {
                xor_into(row, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    /// Pivot columns, ascending.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, ascending.  Their classes form a basis
    /// of the quotient GF(2)^n / span.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut pi = 0;
        for c in 0..self.ambient {
            if pi < self.pivots.len() && self.pivots[pi] == c {
                pi += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Basis rows in echelon order.
    pub fn basis(&self) -> &[F2Vec] {
        &self.rows
    }

    /// Two spans are equal iff they contain each other's bases; echelon form
    /// makes direct comparison valid.
    pub fn same_span(&self, other: &F2Span) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

/// Quotient of GF(2)^n by a span: classes are read off on the non-pivot
/// coordinates after reduction.
#[derive(Clone, Debug)]
pub struct F2Quotient {
    span: F2Span,
    free_cols: Vec<usize>,
}

impl F2Quotient {
    pub fn new(span: F2Span) -> Self {
        let free_cols = span.free_columns();
        F2Quotient { span, free_cols }
    }

    pub fn ambient_dim(&self) -> usize {
        self.span.ambient_dim()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    /// Class of an ambient vector in quotient coordinates.
    pub fn project(&self, v: &F2Vec) -> F2Vec {
        let r = self.span.reduce(v.clone());
        self.free_cols.iter().map(|&c| r[c]).collect()
    }

    /// An ambient representative of a quotient-coordinate vector.
    pub fn lift(&self, q: &F2Vec) -> F2Vec {
        assert_eq!(q.len(), self.free_cols.len());
        let mut v = vec![0u8; self.span.ambient_dim()];
        for (&c, &x) in self.free_cols.iter().zip(q) {
            v[c] = x;
        }
        v
    }

    pub fn span(&self) -> &F2Span {
        &self.span
    }
}
