//! Isomorphism utilities: invariant fingerprints that separate families, and
//! a bounded exact search for isomorphism witnesses.
//!
//! The witness search works in bases adapted to the power filtration
//! `A ⊇ A^2 ⊇ A^3 ⊇ 0`, where any isomorphism is block lower triangular.
//! The top diagonal block is enumerated over a small Gaussian-rational set;
//! because squares of filtration terms fall deeper, all remaining entries
//! then satisfy a linear system, which is solved exactly. Non-isomorphism is
//! never concluded from search failure: separation claims rest on the
//! fingerprints alone.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::exactnum::{GaussRat, QMatrix, Subspace};

/// Isomorphism-invariant data of an algebra. Every component is preserved by
/// any change of basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_square: usize,
    pub dim_cube: usize,
    pub dim_left_times_square: usize,
    pub dim_square_times_left: usize,
    pub dim_annihilator: usize,
    pub dim_ann_meet_square: usize,
    pub dim_left_kernel: usize,
    pub dim_right_kernel: usize,
    pub dim_derivations: usize,
    pub dim_symmetrized_square: usize,
    pub dim_antisymmetrized_square: usize,
    pub dim_z2t: usize,
    pub dim_z2l: usize,
    pub dim_commutative_center: usize,
    pub dim_left_nucleus: usize,
    pub dim_middle_nucleus: usize,
    pub dim_right_nucleus: usize,
    pub dim_der_derived: usize,
    pub dim_der_on_square: usize,
    pub dim_square_two_sided_ann: usize,
    pub ann_series_dims: Vec<usize>,
    pub nilpotency_index: Option<usize>,
    pub commutative: bool,
    pub left_leibniz: bool,
    pub jordan: bool,
}

pub fn fingerprint(a: &Algebra) -> Fingerprint {
    let n = a.dim();
    let full = Subspace::full(n);
    let square = a.square();
    let cube = a
        .product_subspace(&full, &square)
        .unwrap()
        .sum(&a.product_subspace(&square, &full).unwrap());
    let a_sq = a.product_subspace(&full, &square).unwrap();
    let sq_a = a.product_subspace(&square, &full).unwrap();
    let ann = a.annihilator();
    let (_, der_dim) = a.derivations();
    // Spans of {xy + yx} and {xy - yx} over basis pairs.
    let mut sym = Vec::new();
    let mut antisym = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            let ji = a.basis_product(j, i);
            sym.push(ij.iter().zip(&ji).map(|(x, y)| x + y).collect());
            antisym.push(ij.iter().zip(&ji).map(|(x, y)| x - y).collect());
        }
    }
    Fingerprint {
        dim: n,
        dim_square: square.dim(),
        dim_cube: cube.dim(),
        dim_left_times_square: a_sq.dim(),
        dim_square_times_left: sq_a.dim(),
        dim_annihilator: ann.dim(),
        dim_ann_meet_square: ann.intersect(&square).dim(),
        dim_left_kernel: a.left_kernel().dim(),
        dim_right_kernel: a.right_kernel().dim(),
        dim_derivations: der_dim,
        dim_symmetrized_square: Subspace::from_spanning(n, sym).dim(),
        dim_antisymmetrized_square: Subspace::from_spanning(n, antisym).dim(),
        dim_z2t: crate::cohomology::terminal_cocycles(a).len(),
        dim_z2l: crate::cohomology::leibniz_cocycles(a).len(),
        dim_commutative_center: commutative_center(a).dim(),
        dim_left_nucleus: associator_kernel(a, Slot::Left).dim(),
        dim_middle_nucleus: associator_kernel(a, Slot::Middle).dim(),
        dim_right_nucleus: associator_kernel(a, Slot::Right).dim(),
        dim_der_derived: der_derived_dim(a),
        dim_der_on_square: der_on_square_dim(a),
        dim_square_two_sided_ann: square_two_sided_ann(a).dim(),
        ann_series_dims: a
            .upper_annihilator_series()
            .iter()
            .map(Subspace::dim)
            .collect(),
        nilpotency_index: a.is_nilpotent().1,
        commutative: a.is_commutative(),
        left_leibniz: a.is_left_leibniz(),
        jordan: a.is_jordan(),
    }
}

/// Dimension of the derived algebra `[Der, Der]` of the derivation Lie
/// algebra; the Lie structure of `Der` is a change-of-basis invariant.
fn der_derived_dim(a: &Algebra) -> usize {
    let (basis, _) = a.derivations();
    let n = a.dim();
    let mut brackets = Vec::new();
    for (ix, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(ix + 1) {
            let c = x.matmul(y);
            let d = y.matmul(x);
            let mut v = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    v.push(c.get(i, j) - d.get(i, j));
                }
            }
            brackets.push(v);
        }
    }
    Subspace::from_spanning(n * n, brackets).dim()
}

/// Dimension of `Der(A) . A^2`, the span of derivation images of the square.
fn der_on_square_dim(a: &Algebra) -> usize {
    let (basis, _) = a.derivations();
    let sq = a.square();
    let mut images = Vec::new();
    for d in &basis {
        for v in sq.basis() {
            images.push(d.mul_vec(v));
        }
    }
    Subspace::from_spanning(a.dim(), images).dim()
}

/// `{x : x A^2 = A^2 x = 0}`.
fn square_two_sided_ann(a: &Algebra) -> Subspace {
    let n = a.dim();
    let sq = a.square();
    let e = |i: usize| crate::algebra::basis_vector(n, i);
    let mut rows = Vec::new();
    for v in sq.basis() {
        for k in 0..n {
            rows.push(
                (0..n)
                    .map(|i| a.multiply(&e(i), v).unwrap()[k].clone())
                    .collect::<Vec<_>>(),
            );
            rows.push(
                (0..n)
                    .map(|i| a.multiply(v, &e(i)).unwrap()[k].clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::from_spanning(n, QMatrix::from_rows(rows).nullspace())
}

/// `{x : xy = yx for all y}`.
fn commutative_center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let m = QMatrix::from_fn(n * n, n, |row, i| {
        let (j, k) = (row / n, row % n);
        a.c(i, j, k) - a.c(j, i, k)
    });
    Subspace::from_spanning(n, m.nullspace())
}

enum Slot {
    Left,
    Middle,
    Right,
}

/// `{x : (uv)w = u(vw) whenever x sits in the given slot}`, the linear
/// nucleus-style associator kernels.
fn associator_kernel(a: &Algebra, slot: Slot) -> Subspace {
    let n = a.dim();
    let e = |i: usize| crate::algebra::basis_vector(n, i);
    let assoc = |x: &[GaussRat], y: &[GaussRat], z: &[GaussRat]| -> Vec<GaussRat> {
        let xy = a.multiply(x, y).unwrap();
        let yz = a.multiply(y, z).unwrap();
        let lhs = a.multiply(&xy, z).unwrap();
        let rhs = a.multiply(x, &yz).unwrap();
        lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
    };
    // Rows over the coordinates of x: associator is linear in each slot.
    let mut rows = Vec::new();
    for p in 0..n {
        for q in 0..n {
            // The value for x = e_i in the chosen slot.
            let per_basis: Vec<Vec<GaussRat>> = (0..n)
                .map(|i| match slot {
                    Slot::Left => assoc(&e(i), &e(p), &e(q)),
                    Slot::Middle => assoc(&e(p), &e(i), &e(q)),
                    Slot::Right => assoc(&e(p), &e(q), &e(i)),
                })
                .collect();
            for k in 0..n {
                if per_basis.iter().all(|v| v[k].is_zero()) {
                    continue;
                }
                rows.push((0..n).map(|i| per_basis[i][k].clone()).collect());
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::from_spanning(n, QMatrix::from_rows(rows).nullspace())
}

/// Search budget: an upper bound on the number of enumerated top-block
/// candidates, which keeps runs deterministic.
#[derive(Clone, Copy, Debug)]
pub struct IsoBudget {
    pub max_candidates: usize,
}

impl Default for IsoBudget {
    fn default() -> Self {
        IsoBudget {
            max_candidates: 40_000,
        }
    }
}

/// Outcome of the witness search. `Inconclusive` is a value, not an error,
/// and never certifies non-isomorphism.
#[derive(Clone, Debug)]
pub enum IsoResult {
    Witness(QMatrix),
    Inconclusive,
}

impl IsoResult {
    pub fn witness(&self) -> Option<&QMatrix> {
        match self {
            IsoResult::Witness(m) => Some(m),
            IsoResult::Inconclusive => None,
        }
    }
}

/// Checks `phi(xy) = phi(x)phi(y)` on all basis pairs of `a`, landing in `b`.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, phi: &QMatrix) -> bool {
    let n = a.dim();
    if b.dim() != n || phi.rows() != n || phi.cols() != n || !phi.is_invertible() {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(&a.basis_product(i, j));
            let pi: Vec<GaussRat> = (0..n).map(|r| phi.get(r, i).clone()).collect();
            let pj: Vec<GaussRat> = (0..n).map(|r| phi.get(r, j).clone()).collect();
            let rhs = b.multiply(&pi, &pj).unwrap();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Bounded search for an isomorphism `a -> b`. On success the returned
/// witness has been re-verified multiplicative on all basis pairs.
pub fn find_isomorphism(a: &Algebra, b: &Algebra, budget: IsoBudget) -> IsoResult {
    let n = a.dim();
    if b.dim() != n {
        return IsoResult::Inconclusive;
    }
    let id = QMatrix::identity(n);
    if is_isomorphism(a, b, &id) {
        return IsoResult::Witness(id);
    }
    if fingerprint(a) != fingerprint(b) {
        return IsoResult::Inconclusive;
    }
    // Adapted flags: complement bases along A ⊇ A^2 ⊇ A^3 ⊇ ... ⊇ 0.
    let Some((flag_a, depths)) = adapted_basis(a) else {
        return IsoResult::Inconclusive;
    };
    let Some((flag_b, depths_b)) = adapted_basis(b) else {
        return IsoResult::Inconclusive;
    };
    if depths != depths_b {
        return IsoResult::Inconclusive;
    }
    // Structure constants in the adapted bases.
    let ua = basis_matrix(n, &flag_a);
    let ub = basis_matrix(n, &flag_b);
    let a_ad = change_basis(a, &ua);
    let b_ad = change_basis(b, &ub);

    let top: Vec<usize> = (0..n).filter(|&i| depths[i] == 1).collect();
    let search = BlockSearch {
        n,
        depths: &depths,
        top: &top,
        a: &a_ad,
        b: &b_ad,
    };
    let mut seen = 0usize;
    let mut result = None;
    enumerate_top_blocks(top.len(), &mut |t| {
        if result.is_some() || seen >= budget.max_candidates {
            return false;
        }
        seen += 1;
        if let Some(m) = search.try_top_block(t) {
            result = Some(m);
        }
        true
    });
    match result {
        Some(m) => {
            // Back to the original coordinates.
            let phi = ub
                .matmul(&m)
                .matmul(&ua.inverse().expect("flag basis invertible"));
            if is_isomorphism(a, b, &phi) {
                IsoResult::Witness(phi)
            } else {
                IsoResult::Inconclusive
            }
        }
        None => IsoResult::Inconclusive,
    }
}

/// Adapted basis along the power filtration: returns the basis vectors in
/// order of increasing depth together with each position's depth (1 for the
/// complement of `A^2`, 2 for `A^2` mod `A^3`, ...). `None` when the chain
/// does not reach zero.
fn adapted_basis(a: &Algebra) -> Option<(Vec<Vec<GaussRat>>, Vec<usize>)> {
    let n = a.dim();
    let chain = a.power_chain();
    if !chain.last().unwrap().is_zero() {
        return None;
    }
    // chain[0] = A, chain[1] = A^2, ...
    let mut vectors: Vec<Vec<GaussRat>> = Vec::new();
    let mut depths = Vec::new();
    for depth in (0..chain.len() - 1).rev() {
        // Extend a basis of chain[depth+1] to chain[depth].
        let deeper: Vec<Vec<GaussRat>> = vectors.clone();
        let mut span = Subspace::from_spanning(n, deeper);
        let mut fresh = Vec::new();
        for v in chain[depth].basis() {
            if !span.contains(v) {
                span = span.sum(&Subspace::from_spanning(n, vec![v.clone()]));
                fresh.push(v.clone());
            }
        }
        for v in fresh {
            vectors.push(v);
            depths.push(depth + 1);
        }
    }
    // `vectors` currently lists deepest first; flip to shallow-first order.
    vectors.reverse();
    depths.reverse();
    Some((vectors, depths))
}

fn basis_matrix(n: usize, vectors: &[Vec<GaussRat>]) -> QMatrix {
    QMatrix::from_fn(n, n, |i, j| vectors[j][i].clone())
}

/// Structure constants of `a` in the basis given by the columns of `u`.
fn change_basis(a: &Algebra, u: &QMatrix) -> Algebra {
    let n = a.dim();
    let uinv = u.inverse().expect("basis matrix invertible");
    let mut out = Algebra::zero_algebra(n, a.label().to_string());
    for i in 0..n {
        let ui: Vec<GaussRat> = (0..n).map(|r| u.get(r, i).clone()).collect();
        for j in 0..n {
            let uj: Vec<GaussRat> = (0..n).map(|r| u.get(r, j).clone()).collect();
            let prod = a.multiply(&ui, &uj).unwrap();
            let coords = uinv.mul_vec(&prod);
            for (kk, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set_c(i, j, kk, c);
                }
            }
        }
    }
    out
}

/// Candidate values for the enumerated top-block entries.
fn candidate_values() -> Vec<GaussRat> {
    vec![
        GaussRat::from_int(1),
        GaussRat::from_int(0),
        GaussRat::from_int(-1),
        GaussRat::from_int(2),
        GaussRat::from_int(-2),
        GaussRat::from_ratio(1, 2),
        GaussRat::from_ratio(-1, 2),
        GaussRat::i(),
        -GaussRat::i(),
    ]
}

/// Enumerates square top blocks entry by entry over the candidate set,
/// calling `f` with each; `f` returns `false` to stop.
fn enumerate_top_blocks(k: usize, f: &mut impl FnMut(&QMatrix) -> bool) {
    let values = candidate_values();
    let total = k * k;
    let mut idx = vec![0usize; total];
    loop {
        let m = QMatrix::from_fn(k, k, |i, j| values[idx[i * k + j]].clone());
        if m.is_invertible() && !f(&m) {
            return;
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == total {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

struct BlockSearch<'a> {
    n: usize,
    depths: &'a [usize],
    top: &'a [usize],
    a: &'a Algebra,
    b: &'a Algebra,
}

impl BlockSearch<'_> {
    /// Given a top diagonal block, the remaining allowed entries of the
    /// block-triangular matrix satisfy a linear system; solve it and test
    /// invertibility of the resulting map.
    fn try_top_block(&self, t: &QMatrix) -> Option<QMatrix> {
        let n = self.n;
        // Unknown entries: positions (r, c) with depth(r) >= depth(c),
        // excluding the fixed top block.
        let mut unknowns = Vec::new();
        for c in 0..n {
            for r in 0..n {
                let fixed_top = self.depths[r] == 1 && self.depths[c] == 1;
                if !fixed_top && self.depths[r] >= self.depths[c] {
                    unknowns.push((r, c));
                }
            }
        }
        let unknown_index =
            |r: usize, c: usize| unknowns.iter().position(|&(rr, cc)| (rr, cc) == (r, c));

        // Multiplicativity: for all basis pairs (i, j) of the adapted basis
        // of `a`:  M * a_prod(i,j) = b_prod(M_i, M_j), where M_i is column i.
        // With block-triangular M and the filtration, the right side is
        // affine in the unknowns once the top block is fixed.
        let mut rows: Vec<Vec<GaussRat>> = Vec::new();
        let mut rhs: Vec<GaussRat> = Vec::new();
        let entry = |r: usize, c: usize| -> Option<GaussRat> {
            // Known entries: top block or structural zero.
            if self.depths[r] == 1 && self.depths[c] == 1 {
                let ri = self.top.iter().position(|&x| x == r).unwrap();
                let ci = self.top.iter().position(|&x| x == c).unwrap();
                Some(t.get(ri, ci).clone())
            } else if self.depths[r] < self.depths[c] {
                Some(GaussRat::zero())
            } else {
                None
            }
        };

        for i in 0..n {
            for j in 0..n {
                let aprod = self.a.basis_product(i, j);
                // For each output coordinate m: sum_k M[m][k] aprod[k]
                //   = sum_{p,q} M[p][i] M[q][j] b.c(p,q,m).
                for m in 0..n {
                    let mut row = vec![GaussRat::zero(); unknowns.len()];
                    let mut cst = GaussRat::zero();
                    // Left side.
                    for (kk, av) in aprod.iter().enumerate() {
                        if av.is_zero() {
                            continue;
                        }
                        match entry(m, kk) {
                            Some(v) => cst = &cst + &(&v * av),
                            None => {
                                let ui = unknown_index(m, kk).unwrap();
                                row[ui] = &row[ui] + av;
                            }
                        }
                    }
                    // Right side, negated into the same row.
                    for p in 0..n {
                        for qq in 0..n {
                            let c = self.b.c(p, qq, m);
                            if c.is_zero() {
                                continue;
                            }
                            let ei = entry(p, i);
                            let ej = entry(qq, j);
                            match (ei, ej) {
                                (Some(vp), Some(vq)) => {
                                    cst = &cst - &(&(&vp * &vq) * c);
                                }
                                (Some(vp), None) => {
                                    let ui = unknown_index(qq, j).unwrap();
                                    row[ui] = &row[ui] - &(&vp * c);
                                }
                                (None, Some(vq)) => {
                                    let ui = unknown_index(p, i).unwrap();
                                    row[ui] = &row[ui] - &(&vq * c);
                                }
                                (None, None) => {
                                    // Two unknown entries only meet at depth >= 2, so
                                    // this product lies in A^2 * A^2 = 0 for
                                    // the profiles we search; a nonzero
                                    // structure constant here means the
                                    // bilinear term survives and the ansatz
                                    // does not apply.
                                    return None;
                                }
                            }
                        }
                    }
                    // Row: row * u + cst = 0  =>  row * u = -cst.
                    if row.iter().any(|v| !v.is_zero()) || !cst.is_zero() {
                        rows.push(row);
                        rhs.push(-cst);
                    }
                }
            }
        }
        if rows.is_empty() {
            return None;
        }
        let system = QMatrix::from_rows(rows);
        let particular = system.solve(&rhs)?;
        // Try the particular solution, then small perturbations along the
        // kernel, looking for an invertible matrix.
        let kernel = system.nullspace();
        let build = |sol: &[GaussRat]| -> QMatrix {
            QMatrix::from_fn(n, n, |r, c| match entry(r, c) {
                Some(v) => v,
                None => sol[unknown_index(r, c).unwrap()].clone(),
            })
        };
        let mut candidates = vec![particular.clone()];
        for kv in kernel.iter().take(6) {
            for step in [
                GaussRat::from_int(1),
                GaussRat::from_int(-1),
                GaussRat::from_int(2),
            ] {
                candidates.push(
                    particular
                        .iter()
                        .zip(kv)
                        .map(|(p, k)| p + &(&step * k))
                        .collect(),
                );
            }
        }
        candidates
            .iter()
            .map(|sol| build(sol))
            .find(QMatrix::is_invertible)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn fingerprint_examples() {
        let cat = catalog();
        let n4 = cat.build("N4", &[]).unwrap();
        let fp = fingerprint(&n4);
        assert_eq!(fp.dim_square, 0);
        assert_eq!(fp.dim_annihilator, 4);
        assert_eq!(fp.dim_derivations, 16);
        assert!(fp.left_leibniz);

        let d401 = cat.build("D4_01", &[q(1), q(1), q(1)]).unwrap();
        assert_eq!(fingerprint(&d401).dim_derivations, 2);

        let t441 = cat.build("T4_41", &[q(1)]).unwrap();
        assert_eq!(fingerprint(&t441).dim_derivations, 2);

        let t409 = cat.build("T4_09", &[]).unwrap();
        let t414 = cat.build("T4_14", &[]).unwrap();
        assert_ne!(fingerprint(&t409), fingerprint(&t414));
    }

    #[test]
    fn identity_witness_for_equal_algebras() {
        let cat = catalog();
        let a = cat.build("T4_09", &[]).unwrap();
        match find_isomorphism(&a, &a, IsoBudget::default()) {
            IsoResult::Witness(m) => assert_eq!(m, QMatrix::identity(4)),
            IsoResult::Inconclusive => panic!("identity not found"),
        }
    }

    #[test]
    fn printed_exception_t4_23_to_t4_22() {
        let cat = catalog();
        let a = cat.build("T4_23", &[q(2), q(0)]).unwrap();
        let b = cat.build("T4_22", &[q(2), q(0)]).unwrap();
        match find_isomorphism(&a, &b, IsoBudget::default()) {
            IsoResult::Witness(m) => assert!(is_isomorphism(&a, &b, &m)),
            IsoResult::Inconclusive => panic!("witness expected for T4_23(2,0) ≅ T4_22(2,0)"),
        }
    }

    #[test]
    fn printed_exception_d4_01_to_d4_04() {
        let cat = catalog();
        let a = cat.build("D4_01", &[q(1), q(0), q(3)]).unwrap();
        let b = cat.build("D4_04", &[q(1), q(3)]).unwrap();
        match find_isomorphism(&a, &b, IsoBudget::default()) {
            IsoResult::Witness(m) => assert!(is_isomorphism(&a, &b, &m)),
            IsoResult::Inconclusive => {
                panic!("witness expected for D4_01(1,0,3) ≅ D4_04(1,3)")
            }
        }
    }
}
