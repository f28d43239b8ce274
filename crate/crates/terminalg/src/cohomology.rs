//! Second cohomology for terminal algebras: the cocycle space `Z2T`, the
//! coboundaries `B2`, the quotient `H2T`, the Leibniz subspace `Z2L`/`H2L`,
//! cocycle annihilators, and the automorphism action on cocycles.
//!
//! Bilinear forms are written in the `Delta_{ij}` basis,
//! `Delta_{ij}(e_l, e_m) = delta_{il} delta_{jm}`, so a form is just an `n x n`
//! coefficient matrix and spaces of forms are subspaces of `Q(i)^{n^2}`.

use crate::algebra::{basis_vector, Algebra};
use crate::error::Error;
use crate::exactnum::{GaussRat, QMatrix, Subspace};

/// A bilinear form `theta = sum c_{ij} Delta_{ij}` on an `n`-dimensional
/// algebra, with `theta(e_l, e_m) = c_{lm}`.
#[derive(Clone, PartialEq)]
pub struct Cocycle {
    dim: usize,
    coeffs: QMatrix,
}

impl std::fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = self.coeffs.get(i, j);
                if !c.is_zero() {
                    terms.push(format!("{}*D{}{}", c, i + 1, j + 1));
                }
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Cocycle {
    pub fn zero(dim: usize) -> Self {
        Cocycle {
            dim,
            coeffs: QMatrix::zeros(dim, dim),
        }
    }

    pub fn from_matrix(coeffs: QMatrix) -> Self {
        assert_eq!(
            coeffs.rows(),
            coeffs.cols(),
            "cocycle matrix must be square"
        );
        Cocycle {
            dim: coeffs.rows(),
            coeffs,
        }
    }

    /// The single basis form `Delta_{ij}` (1-based indices, matching the
    /// usual notation `D11, D12, ...`).
    pub fn delta(dim: usize, i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && j >= 1 && i <= dim && j <= dim,
            "Delta index range"
        );
        let mut c = Cocycle::zero(dim);
        c.coeffs.set(i - 1, j - 1, GaussRat::one());
        c
    }

    /// Builds `sum coeff * Delta_{ij}` from 1-based `(i, j, coeff)` terms.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, GaussRat)]) -> Self {
        let mut c = Cocycle::zero(dim);
        for (i, j, v) in terms {
            let cur = c.coeffs.get(i - 1, j - 1).clone();
            c.coeffs.set(i - 1, j - 1, &cur + v);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &QMatrix {
        &self.coeffs
    }

    /// Evaluates the form on arbitrary vectors.
    pub fn eval(&self, x: &[GaussRat], y: &[GaussRat]) -> Result<GaussRat, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::shape(
                format!("vectors of length {}", self.dim),
                format!("{} and {}", x.len(), y.len()),
            ));
        }
        let mut acc = GaussRat::zero();
        for l in 0..self.dim {
            if x[l].is_zero() {
                continue;
            }
            for m in 0..self.dim {
                let c = self.coeffs.get(l, m);
                if !c.is_zero() && !y[m].is_zero() {
                    acc = &acc + &(&(&x[l] * &y[m]) * c);
                }
            }
        }
        Ok(acc)
    }

    /// Row-major vectorization, the coordinates used for all cocycle spaces.
    pub fn to_vec(&self) -> Vec<GaussRat> {
        let n = self.dim;
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            v.extend(self.coeffs.row(i).iter().cloned());
        }
        v
    }

    pub fn from_vec(dim: usize, v: &[GaussRat]) -> Self {
        assert_eq!(v.len(), dim * dim, "vector length mismatch");
        Cocycle {
            dim,
            coeffs: QMatrix::from_fn(dim, dim, |i, j| v[i * dim + j].clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero_matrix()
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        Cocycle::from_vec(
            self.dim,
            &self
                .to_vec()
                .iter()
                .zip(other.to_vec())
                .map(|(a, b)| a + b)
                .collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, c: &GaussRat) -> Cocycle {
        Cocycle::from_vec(
            self.dim,
            &self.to_vec().iter().map(|a| a * c).collect::<Vec<_>>(),
        )
    }

    /// `{x : theta(x, A) = theta(A, x) = 0}`, the kernel of the stacked
    /// coefficient matrix and its transpose.
    pub fn annihilator(&self) -> Subspace {
        let stacked = self.coeffs.vstack(&self.coeffs.transpose());
        Subspace::from_spanning(self.dim, stacked.nullspace())
    }
}

/// The linear rows (over the `n^2` form coefficients) of the terminal cocycle
/// condition on all basis quadruples; a form is in `Z2T` iff it kills every
/// row.
fn terminal_condition_rows(a: &Algebra) -> QMatrix {
    let n = a.dim();
    let bp: Vec<Vec<Vec<GaussRat>>> = (0..n)
        .map(|i| (0..n).map(|j| a.basis_product(i, j)).collect())
        .collect();
    let two_thirds = GaussRat::from_ratio(2, 3);
    let third = GaussRat::from_ratio(1, 3);
    let mul = |x: &[GaussRat], y: &[GaussRat]| a.multiply(x, y).expect("dims fixed");
    let mut rows = Vec::with_capacity(n * n * n * n);
    for ia in 0..n {
        let ea = basis_vector(n, ia);
        for ib in 0..n {
            let eb = basis_vector(n, ib);
            let cstar: Vec<GaussRat> = (0..n)
                .map(|k| &(&two_thirds * &bp[ia][ib][k]) + &(&third * &bp[ib][ia][k]))
                .collect();
            for ix in 0..n {
                let ex = basis_vector(n, ix);
                for iy in 0..n {
                    let ey = basis_vector(n, iy);
                    let xy = &bp[ix][iy];
                    let ax = &bp[ia][ix];
                    let ay = &bp[ia][iy];
                    let bx = &bp[ib][ix];
                    let by = &bp[ib][iy];
                    let mut row = vec![GaussRat::zero(); n * n];
                    let mut add = |sign: i64, u: &[GaussRat], v: &[GaussRat]| {
                        let s = GaussRat::from_int(sign);
                        for l in 0..n {
                            if u[l].is_zero() {
                                continue;
                            }
                            for m in 0..n {
                                if v[m].is_zero() {
                                    continue;
                                }
                                row[l * n + m] = &row[l * n + m] + &(&(&s * &u[l]) * &v[m]);
                            }
                        }
                    };
                    // theta-part of the expanded terminal identity in A_theta.
                    let inner: Vec<GaussRat> = (0..n)
                        .map(|k| &(&mul(&ea, xy)[k] - &mul(ax, &ey)[k]) - &mul(&ex, ay)[k])
                        .collect();
                    add(1, &eb, &inner);
                    add(-1, &ea, &mul(bx, &ey));
                    add(1, &mul(&ea, bx), &ey);
                    add(1, bx, ay);
                    add(-1, &ea, &mul(&ex, by));
                    add(1, ax, by);
                    add(1, &ex, &mul(&ea, by));
                    add(1, &cstar, xy);
                    add(-1, &mul(&cstar, &ex), &ey);
                    add(-1, &ex, &mul(&cstar, &ey));
                    rows.push(row);
                }
            }
        }
    }
    QMatrix::from_rows(rows)
}

/// Rows of the Leibniz cocycle condition
/// `theta(x, yz) - theta(xy, z) - theta(y, xz) = 0` on all basis triples.
fn leibniz_condition_rows(a: &Algebra) -> QMatrix {
    let n = a.dim();
    let bp: Vec<Vec<Vec<GaussRat>>> = (0..n)
        .map(|i| (0..n).map(|j| a.basis_product(i, j)).collect())
        .collect();
    let mut rows = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![GaussRat::zero(); n * n];
                // +theta(e_x, yz)
                for m in 0..n {
                    row[x * n + m] = &row[x * n + m] + &bp[y][z][m];
                }
                // -theta(xy, e_z)
                for l in 0..n {
                    row[l * n + z] = &row[l * n + z] - &bp[x][y][l];
                }
                // -theta(e_y, xz)
                for m in 0..n {
                    row[y * n + m] = &row[y * n + m] - &bp[x][z][m];
                }
                rows.push(row);
            }
        }
    }
    QMatrix::from_rows(rows)
}

/// Exact basis of `Z2T(A, C)`, ordered by the deterministic kernel routine
/// (free `Delta` coordinates in lexicographic order).
pub fn terminal_cocycles(a: &Algebra) -> Vec<Cocycle> {
    terminal_condition_rows(a)
        .nullspace()
        .into_iter()
        .map(|v| Cocycle::from_vec(a.dim(), &v))
        .collect()
}

/// Whether a single form satisfies the terminal cocycle condition.
pub fn is_terminal_cocycle(a: &Algebra, theta: &Cocycle) -> bool {
    let rows = terminal_condition_rows(a);
    let v = theta.to_vec();
    rows.mul_vec(&v).iter().all(|x| x.is_zero())
}

/// Exact basis of `Z2L ∩ Z2T`: forms that are terminal cocycles and satisfy
/// the Leibniz cocycle condition. Computed literally for any base algebra.
pub fn leibniz_cocycles(a: &Algebra) -> Vec<Cocycle> {
    terminal_condition_rows(a)
        .vstack(&leibniz_condition_rows(a))
        .nullspace()
        .into_iter()
        .map(|v| Cocycle::from_vec(a.dim(), &v))
        .collect()
}

/// Canonical basis of the coboundary space `B2 = {delta f : f in Hom(A, C)}`,
/// with `delta f(x, y) = f(xy)`.
pub fn coboundaries(a: &Algebra) -> Vec<Cocycle> {
    coboundary_space(a)
        .basis()
        .iter()
        .map(|v| Cocycle::from_vec(a.dim(), v))
        .collect()
}

/// `B2` as a subspace of `Q(i)^{n^2}`.
pub fn coboundary_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let spanning = (0..n)
        .map(|k| {
            let mut v = vec![GaussRat::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    v[i * n + j] = a.c(i, j, k).clone();
                }
            }
            v
        })
        .collect();
    Subspace::from_spanning(n * n, spanning)
}

/// The coboundary `delta f` of a linear functional given by its values
/// `f(e_k)`.
pub fn coboundary_of(a: &Algebra, f: &[GaussRat]) -> Cocycle {
    let n = a.dim();
    assert_eq!(f.len(), n, "functional length mismatch");
    Cocycle::from_matrix(QMatrix::from_fn(n, n, |i, j| {
        let mut acc = GaussRat::zero();
        for k in 0..n {
            acc = &acc + &(a.c(i, j, k) * &f[k]);
        }
        acc
    }))
}

/// A cohomology class: a representative compared modulo the coboundary space.
#[derive(Clone, Debug)]
pub struct CocycleClass {
    rep: Cocycle,
    b2: Subspace,
}

impl CocycleClass {
    pub fn new(rep: Cocycle, b2: Subspace) -> Self {
        CocycleClass { rep, b2 }
    }

    pub fn representative(&self) -> &Cocycle {
        &self.rep
    }

    pub fn is_zero_class(&self) -> bool {
        self.b2.contains(&self.rep.to_vec())
    }
}

impl PartialEq for CocycleClass {
    fn eq(&self, other: &Self) -> bool {
        self.b2 == other.b2 && {
            let diff: Vec<GaussRat> = self
                .rep
                .to_vec()
                .iter()
                .zip(other.rep.to_vec())
                .map(|(x, y)| x - &y)
                .collect();
            self.b2.contains(&diff)
        }
    }
}

/// The full cohomology picture of one base algebra.
#[derive(Clone, Debug)]
pub struct Cohomology {
    dim: usize,
    z2t: Subspace,
    z2l: Subspace,
    b2: Subspace,
    h2t_reps: Vec<Cocycle>,
    h2l_reps: Vec<Cocycle>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn z2t(&self) -> &Subspace {
        &self.z2t
    }

    pub fn z2l(&self) -> &Subspace {
        &self.z2l
    }

    pub fn b2(&self) -> &Subspace {
        &self.b2
    }

    pub fn dim_z2t(&self) -> usize {
        self.z2t.dim()
    }

    pub fn dim_b2(&self) -> usize {
        self.b2.dim()
    }

    pub fn dim_h2t(&self) -> usize {
        self.z2t.dim() - self.b2.dim()
    }

    pub fn dim_h2l(&self) -> usize {
        self.z2l.dim() - self.b2.dim()
    }

    /// Representatives completing a basis of `B2` to a basis of `Z2T`,
    /// picked deterministically from the kernel basis in `Delta`-lex order.
    pub fn h2t_representatives(&self) -> &[Cocycle] {
        &self.h2t_reps
    }

    pub fn h2l_representatives(&self) -> &[Cocycle] {
        &self.h2l_reps
    }

    pub fn h2t_classes(&self) -> Vec<CocycleClass> {
        self.h2t_reps
            .iter()
            .map(|r| CocycleClass::new(r.clone(), self.b2.clone()))
            .collect()
    }

    pub fn class_of(&self, theta: &Cocycle) -> CocycleClass {
        CocycleClass::new(theta.clone(), self.b2.clone())
    }

    /// Whether `theta` lies in `Z2L` (equivalently `[theta] ∈ H2L`, since
    /// `B2 ⊆ Z2L`).
    pub fn in_leibniz(&self, theta: &Cocycle) -> bool {
        self.z2l.contains(&theta.to_vec())
    }

    /// `B2 + span(thetas)` has dimension `dim B2 + len(thetas)`, i.e. the
    /// classes are linearly independent in `H2T`.
    pub fn classes_independent(&self, thetas: &[Cocycle]) -> bool {
        let mut vectors: Vec<Vec<GaussRat>> = self.b2.basis().iter().cloned().collect();
        vectors.extend(thetas.iter().map(Cocycle::to_vec));
        let s = Subspace::from_spanning(self.dim * self.dim, vectors);
        s.dim() == self.b2.dim() + thetas.len()
    }
}

/// Computes `Z2T`, `Z2L`, `B2` and the quotient representatives for a base
/// algebra.
pub fn cohomology(a: &Algebra) -> Cohomology {
    let n = a.dim();
    let z2t_basis = terminal_cocycles(a);
    let z2l_basis = leibniz_cocycles(a);
    let b2 = coboundary_space(a);
    let z2t = Subspace::from_spanning(n * n, z2t_basis.iter().map(Cocycle::to_vec).collect());
    let z2l = Subspace::from_spanning(n * n, z2l_basis.iter().map(Cocycle::to_vec).collect());
    let pick_reps = |spanning: &[Cocycle]| -> Vec<Cocycle> {
        let mut acc = b2.clone();
        let mut reps = Vec::new();
        for c in spanning {
            let cand = acc.sum(&Subspace::from_spanning(n * n, vec![c.to_vec()]));
            if cand.dim() > acc.dim() {
                reps.push(c.clone());
                acc = cand;
            }
        }
        reps
    };
    let h2t_reps = pick_reps(&z2t_basis);
    let h2l_reps = pick_reps(&z2l_basis);
    Cohomology {
        dim: n,
        z2t,
        z2l,
        b2,
        h2t_reps,
        h2l_reps,
    }
}

/// `{x : theta(x, A) = theta(A, x) = 0}` for a form on the given algebra.
/// Errors when the dimensions disagree.
pub fn cocycle_annihilator(a: &Algebra, theta: &Cocycle) -> Result<Subspace, Error> {
    if theta.dim() != a.dim() {
        return Err(Error::shape(
            format!("cocycle of dimension {}", a.dim()),
            format!("{}", theta.dim()),
        ));
    }
    Ok(theta.annihilator())
}

/// The automorphism action on forms: `(phi theta)(x, y) = theta(phi x, phi y)`,
/// i.e. coefficient matrix `phi^T C phi`. Errors on singular `phi`.
pub fn act(phi: &QMatrix, theta: &Cocycle) -> Result<Cocycle, Error> {
    if phi.rows() != theta.dim() || phi.cols() != theta.dim() {
        return Err(Error::shape(
            format!("{0} x {0} matrix", theta.dim()),
            format!("{} x {}", phi.rows(), phi.cols()),
        ));
    }
    if !phi.is_invertible() {
        return Err(Error::Singular);
    }
    Ok(Cocycle::from_matrix(
        phi.transpose().matmul(theta.coeffs()).matmul(phi),
    ))
}

/// Membership in `T_s(A)`: the classes `[theta_i]` are linearly independent
/// in `H2T` and the joint annihilator meets `Ann(A)` trivially.
pub fn in_t_s(a: &Algebra, thetas: &[Cocycle]) -> bool {
    if thetas.is_empty() {
        return false;
    }
    let coh = cohomology(a);
    in_t_s_with(&coh, a, thetas)
}

/// Same as [`in_t_s`] but reusing a precomputed cohomology.
pub fn in_t_s_with(coh: &Cohomology, a: &Algebra, thetas: &[Cocycle]) -> bool {
    if thetas.is_empty() || !coh.classes_independent(thetas) {
        return false;
    }
    let mut joint = a.annihilator();
    for t in thetas {
        joint = joint.intersect(&t.annihilator());
    }
    joint.is_zero()
}

/// Whether `span{[theta_i]} ⊆ H2L`, i.e. each form is a Leibniz cocycle
/// modulo `B2`.
pub fn is_leibniz_class(a: &Algebra, thetas: &[Cocycle]) -> bool {
    let coh = cohomology(a);
    thetas.iter().all(|t| coh.in_leibniz(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn t3s01() -> Algebra {
        Algebra::from_entries(3, "T3*_01", &[(0, 0, 1, q(1))])
    }

    fn t3s05() -> Algebra {
        Algebra::from_entries(3, "T3*_05", &[(0, 0, 1, q(1)), (0, 1, 2, q(1))])
    }

    fn t301(lambda: i64) -> Algebra {
        Algebra::from_entries(
            3,
            "T3_01",
            &[(0, 0, 1, q(1)), (0, 1, 2, q(lambda)), (1, 0, 2, q(1))],
        )
    }

    fn span_of(dim: usize, cocycles: &[Cocycle]) -> Subspace {
        Subspace::from_spanning(dim * dim, cocycles.iter().map(Cocycle::to_vec).collect())
    }

    #[test]
    fn z2t_of_t3s01_matches_table() {
        let z = terminal_cocycles(&t3s01());
        assert_eq!(z.len(), 8);
        let expected = span_of(
            3,
            &[
                Cocycle::delta(3, 1, 1),
                Cocycle::delta(3, 1, 2),
                Cocycle::delta(3, 1, 3),
                Cocycle::delta(3, 2, 1),
                Cocycle::delta(3, 2, 3),
                Cocycle::delta(3, 3, 1),
                Cocycle::delta(3, 3, 2),
                Cocycle::delta(3, 3, 3),
            ],
        );
        assert_eq!(span_of(3, &z), expected);
    }

    #[test]
    fn z2t_of_zero_algebra_is_everything() {
        let z = terminal_cocycles(&Algebra::zero_algebra(3, "N3"));
        assert_eq!(z.len(), 9);
    }

    #[test]
    fn z2t_of_t3s05_matches_table() {
        let z = terminal_cocycles(&t3s05());
        assert_eq!(z.len(), 5);
        let expected = span_of(
            3,
            &[
                Cocycle::delta(3, 1, 1),
                Cocycle::delta(3, 1, 2),
                Cocycle::delta(3, 1, 3),
                Cocycle::delta(3, 2, 1),
                Cocycle::from_terms(3, &[(2, 2, q(1)), (3, 1, q(-3))]),
            ],
        );
        assert_eq!(span_of(3, &z), expected);
    }

    #[test]
    fn coboundaries_examples() {
        assert!(coboundaries(&Algebra::zero_algebra(3, "N3")).is_empty());
        let b = coboundaries(&t3s01());
        assert_eq!(b.len(), 1);
        assert_eq!(span_of(3, &b), span_of(3, &[Cocycle::delta(3, 1, 1)]));
        let b = coboundaries(&t3s05());
        assert_eq!(
            span_of(3, &b),
            span_of(3, &[Cocycle::delta(3, 1, 1), Cocycle::delta(3, 1, 2)])
        );
    }

    #[test]
    fn h2t_dims_examples() {
        assert_eq!(cohomology(&t3s01()).dim_h2t(), 7);
        assert_eq!(cohomology(&t301(3)).dim_h2t(), 3);
        assert_eq!(cohomology(&t301(0)).dim_h2t(), 4);
    }

    #[test]
    fn h2l_examples() {
        let coh = cohomology(&t3s05());
        assert_eq!(coh.dim_h2l(), 1);
        assert!(coh.in_leibniz(&Cocycle::delta(3, 1, 3)));
        assert!(!coh.in_leibniz(&Cocycle::delta(3, 2, 1)));

        let t3s02 = Algebra::from_entries(3, "T3*_02", &[(0, 0, 2, q(1)), (1, 1, 2, q(1))]);
        assert_eq!(cohomology(&t3s02).dim_h2l(), 3);

        let n2 = Algebra::zero_algebra(2, "N2");
        assert_eq!(leibniz_cocycles(&n2).len(), 4);
    }

    #[test]
    fn cocycle_annihilator_examples() {
        // theta = D21 + D32 on T3*_01 has trivial annihilator.
        let theta = Cocycle::from_terms(3, &[(2, 1, q(1)), (3, 2, q(1))]);
        assert!(theta.annihilator().is_zero());
        // theta = 0 annihilates everything.
        assert_eq!(Cocycle::zero(3).annihilator().dim(), 3);
        // theta = D11 on N2: x1 = 0 forced.
        let theta = Cocycle::delta(2, 1, 1);
        let ann = theta.annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&basis_vector(2, 1)));
        // Kernel route agrees with brute-force evaluation.
        let theta = Cocycle::from_terms(3, &[(1, 2, q(2)), (3, 1, q(-1))]);
        let ann = theta.annihilator();
        for v in ann.basis() {
            for j in 0..3 {
                let e = basis_vector(3, j);
                assert!(theta.eval(v, &e).unwrap().is_zero());
                assert!(theta.eval(&e, v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn act_examples() {
        let theta = Cocycle::from_terms(3, &[(2, 1, q(1)), (3, 2, q(1))]);
        let id = QMatrix::identity(3);
        assert_eq!(act(&id, &theta).unwrap(), theta);
        // Scaling by 2 multiplies the form by 4.
        let two = QMatrix::from_fn(3, 3, |i, j| if i == j { q(2) } else { q(0) });
        assert_eq!(act(&two, &theta).unwrap(), theta.scale(&q(4)));
        // Singular phi is rejected.
        assert!(act(&QMatrix::zeros(3, 3), &theta).is_err());
    }

    #[test]
    fn delta_f_is_terminal_cocycle() {
        for a in [t3s01(), t3s05(), t301(2)] {
            let f = vec![q(3), q(-1), q(7)];
            let df = coboundary_of(&a, &f);
            assert!(is_terminal_cocycle(&a, &df));
        }
    }

    #[test]
    fn t_s_membership_examples() {
        let a = t3s01();
        // nabla5 + nabla7 = D21 + D32.
        let theta = Cocycle::from_terms(3, &[(2, 1, q(1)), (3, 2, q(1))]);
        assert!(in_t_s(&a, &[theta.clone()]));
        // The zero class is dependent.
        assert!(!in_t_s(&a, &[Cocycle::zero(3)]));
        // A coboundary is a dependent class too.
        assert!(!in_t_s(&a, &[Cocycle::delta(3, 1, 1)]));
        // T3*_05 with D13 is in T_1.
        assert!(in_t_s(&t3s05(), &[Cocycle::delta(3, 1, 3)]));
        // Two proportional cocycles are never in T_2.
        assert!(!in_t_s(&a, &[theta.clone(), theta.scale(&q(2))]));
    }

    #[test]
    fn leibniz_class_examples() {
        let a = t3s05();
        assert!(is_leibniz_class(&a, &[Cocycle::delta(3, 1, 3)]));
        assert!(!is_leibniz_class(&a, &[Cocycle::delta(3, 2, 1)]));
        assert!(is_leibniz_class(&a, &[Cocycle::zero(3)]));
    }

    #[test]
    fn class_equality_mod_b2() {
        let a = t3s05();
        let coh = cohomology(&a);
        let theta = Cocycle::delta(3, 1, 3);
        // D13 and D13 + coboundary(D11) are the same class.
        let shifted = theta.add(&Cocycle::delta(3, 1, 1));
        assert_eq!(coh.class_of(&theta), coh.class_of(&shifted));
        assert_ne!(coh.class_of(&theta), coh.class_of(&Cocycle::delta(3, 2, 1)));
    }
}
