//! Degeneration verification via parametric bases: transported structure
//! constants `c_{ij}^k(t)`, their limits at `t -> 0`, the orbit-dimension
//! formula `n^2 - dim Der(A)` (+ parameter count for families), and the
//! necessary-condition filters for non-degeneration.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::catalog::{self, format_instance};
use crate::error::Error;
use crate::exactnum::{GaussRat, LimitAtZero, Mat, RatFun};

/// A parametric basis `E_i^t = sum_j a_i^j(t) e_j`: an `n x n` matrix of
/// rational functions in `t` (row `i` holds the coordinates of `E_i`),
/// optionally with a parametric index mapping `t` to parameter values of the
/// source family.
#[derive(Clone, Debug)]
pub struct ParametricBasis {
    n: usize,
    rows: Vec<Vec<RatFun>>,
    index: Option<BTreeMap<String, RatFun>>,
}

impl ParametricBasis {
    pub fn new(rows: Vec<Vec<RatFun>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::shape(
                format!("{n} x {n} basis matrix"),
                "ragged rows".to_string(),
            ));
        }
        Ok(ParametricBasis {
            n,
            rows,
            index: None,
        })
    }

    pub fn with_index(mut self, index: BTreeMap<String, RatFun>) -> Self {
        self.index = Some(index);
        self
    }

    /// The identity basis in dimension `n`.
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            RatFun::one()
                        } else {
                            RatFun::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        ParametricBasis {
            n,
            rows,
            index: None,
        }
    }

    /// The scaling basis `E_i = t * e_i`.
    pub fn scaling(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { RatFun::t() } else { RatFun::zero() })
                    .collect()
            })
            .collect();
        ParametricBasis {
            n,
            rows,
            index: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> Option<&BTreeMap<String, RatFun>> {
        self.index.as_ref()
    }

    /// The basis-change matrix whose column `i` holds the coordinates of
    /// `E_i` (so it is the transpose of the row layout).
    fn matrix(&self) -> Mat<RatFun> {
        Mat::from_fn(self.n, self.n, |i, j| self.rows[j][i].clone())
    }
}

/// The algebra whose structure constants get transported: a fixed algebra or
/// a catalog family evaluated along the parametric index.
#[derive(Clone, Debug)]
pub enum Source {
    Fixed(Algebra),
    Family { name: String },
}

impl Source {
    /// Structure constants over `Q(i)(t)`. For a family, parameters come from
    /// the witness index (a missing parameter entry is an error); a special
    /// `"theta"` index entry overrides the derived `Theta` when present.
    fn constants(&self, basis: &ParametricBasis) -> Result<(usize, Vec<RatFun>), Error> {
        match self {
            Source::Fixed(a) => {
                let n = a.dim();
                let mut grid = vec![RatFun::zero(); n * n * n];
                for (i, j, k, v) in a.entries() {
                    grid[(i * n + j) * n + k] = RatFun::constant(v);
                }
                Ok((n, grid))
            }
            Source::Family { name } => {
                let cat = catalog::catalog();
                let entry = cat.get(name)?;
                let empty = BTreeMap::new();
                let index = basis.index.as_ref().unwrap_or(&empty);
                let mut params = Vec::new();
                for pname in entry.params {
                    let f = index.get(*pname).ok_or_else(|| {
                        Error::Other(format!(
                            "witness for family `{name}` must map parameter `{pname}`"
                        ))
                    })?;
                    params.push(f.clone());
                }
                let theta = index.get("theta").cloned();
                let (n, sparse) = cat.build_ratfun(name, &params, theta)?;
                let mut grid = vec![RatFun::zero(); n * n * n];
                for (i, j, k, v) in sparse {
                    grid[(i * n + j) * n + k] = grid[(i * n + j) * n + k].add(&v);
                }
                Ok((n, grid))
            }
        }
    }

    pub fn display(&self) -> String {
        match self {
            Source::Fixed(a) => a.label().to_string(),
            Source::Family { name } => format!("{name}(*)"),
        }
    }
}

/// The transported structure constants `c_{ij}^k(t)` of the source in the
/// basis `E_1^t, ..., E_n^t`. Errors when the basis matrix is singular as a
/// matrix of rational functions.
pub fn transported_constants(
    source: &Source,
    basis: &ParametricBasis,
) -> Result<Vec<RatFun>, Error> {
    let (n, grid) = source.constants(basis)?;
    if basis.n != n {
        return Err(Error::shape(
            format!("{n} x {n} basis"),
            format!("{0} x {0}", basis.n),
        ));
    }
    let m = basis.matrix();
    let minv = m.inverse().ok_or(Error::Singular)?;
    let mut out = vec![RatFun::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            // mu(E_i, E_j) in the e-basis.
            let mut prod = vec![RatFun::zero(); n];
            for p in 0..n {
                let ai = &basis.rows[i][p];
                if ai.is_zero() {
                    continue;
                }
                for q in 0..n {
                    let aj = &basis.rows[j][q];
                    if aj.is_zero() {
                        continue;
                    }
                    let f = ai.mul(aj);
                    for (kk, slot) in prod.iter_mut().enumerate() {
                        let c = &grid[(p * n + q) * n + kk];
                        if !c.is_zero() {
                            *slot = slot.add(&f.mul(c));
                        }
                    }
                }
            }
            // Back to E-coordinates.
            let coords = minv.mul_vec(&prod);
            for (kk, c) in coords.into_iter().enumerate() {
                out[(i * n + j) * n + kk] = c;
            }
        }
    }
    Ok(out)
}

/// One failed limit in a degeneration check.
#[derive(Clone, Debug)]
pub struct LimitFailure {
    /// 1-based indices of the offending structure constant.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub outcome: LimitAtZero,
    pub expected: GaussRat,
}

/// Result of a degeneration check: pass, or the list of structure constants
/// whose limits break.
#[derive(Clone, Debug)]
pub enum DegenOutcome {
    Pass,
    Fail(Vec<LimitFailure>),
}

impl DegenOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, DegenOutcome::Pass)
    }
}

/// Checks that every transported constant has a finite limit at `t -> 0`
/// equal to the target's constant. A singular basis or an unresolvable
/// family parameter is an error, distinct from failed limits.
pub fn verify_degeneration(
    source: &Source,
    target: &Algebra,
    basis: &ParametricBasis,
) -> Result<DegenOutcome, Error> {
    let n = target.dim();
    let constants = transported_constants(source, basis)?;
    let mut failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let f = &constants[(i * n + j) * n + k];
                let expected = target.c(i, j, k).clone();
                match f.limit_at_zero() {
                    LimitAtZero::Finite(v) if v == expected => {}
                    outcome => failures.push(LimitFailure {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        outcome,
                        expected,
                    }),
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(DegenOutcome::Pass)
    } else {
        Ok(DegenOutcome::Fail(failures))
    }
}

impl LimitFailure {
    pub fn describe(&self) -> String {
        let lim = match &self.outcome {
            LimitAtZero::Finite(v) => format!("limit {v}"),
            LimitAtZero::Diverges => "diverges".to_string(),
            LimitAtZero::Indeterminate => "indeterminate".to_string(),
        };
        format!(
            "c[{}][{}][{}]: {} but target needs {}",
            self.i, self.j, self.k, lim, self.expected
        )
    }
}

/// The three summands of the orbit-closure dimension of a family:
/// `n^2 - dim Der(A at the sample) + (number of parameters)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDimension {
    pub family: String,
    pub n_squared: usize,
    pub der_dim: usize,
    pub arity: usize,
}

impl OrbitDimension {
    pub fn total(&self) -> isize {
        self.n_squared as isize - self.der_dim as isize + self.arity as isize
    }
}

/// Orbit-closure dimension of a catalog family at a sampled parameter point.
pub fn orbit_closure_dimension(family: &str, sample: &[GaussRat]) -> Result<OrbitDimension, Error> {
    let cat = catalog::catalog();
    let entry = cat.get(family)?;
    let a = cat.build(family, sample)?;
    let (_, der_dim) = a.derivations();
    Ok(OrbitDimension {
        family: format_instance(family, sample),
        n_squared: a.dim() * a.dim(),
        der_dim,
        arity: entry.params.len(),
    })
}

/// A violated necessary condition for a (proper) degeneration `A -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `dim(A^2) < dim(B^2)` rules out any degeneration.
    SquareDimension { a: usize, b: usize },
    /// `dim Der(A) > dim Der(B)` rules out `A -> B` entirely: a proper
    /// degeneration needs derivations to grow, and isomorphic algebras have
    /// equal derivation dimensions.
    DerivationDimension { a: usize, b: usize },
}

impl Violation {
    pub fn describe(&self) -> String {
        match self {
            Violation::SquareDimension { a, b } => {
                format!("dim A^2 = {a} < {b} = dim B^2")
            }
            Violation::DerivationDimension { a, b } => {
                format!("dim Der(A) = {a} > {b} = dim Der(B)")
            }
        }
    }
}

/// Bounded random search for a degeneration witness `source -> target`:
/// tries seeded lower-triangular parametric bases whose entries are small
/// monomials in `t`, attaching `index` (required for parameterized family
/// sources) to every candidate. Returns the first certified witness, or
/// `None` after `attempts` draws. No completeness claim — a `None` never
/// proves a non-degeneration.
pub fn search_witness(
    source: &Source,
    target: &Algebra,
    index: Option<BTreeMap<String, RatFun>>,
    attempts: usize,
    seed: u64,
) -> Option<ParametricBasis> {
    use rand::{Rng, SeedableRng};
    let n = target.dim();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let coeffs = [
        GaussRat::from_int(1),
        GaussRat::from_int(-1),
        GaussRat::from_int(2),
        GaussRat::from_ratio(1, 2),
    ];
    for _ in 0..attempts {
        let mut rows = vec![vec![RatFun::zero(); n]; n];
        for i in 0..n {
            // A monomial diagonal keeps the basis invertible for t != 0.
            rows[i][i] = RatFun::t_pow(rng.gen_range(0..4i64));
            for j in 0..i {
                if rng.gen_range(0..3u8) == 0 {
                    let c = coeffs[rng.gen_range(0..coeffs.len())].clone();
                    let pow = rng.gen_range(0..4i64);
                    rows[i][j] = RatFun::constant(c).mul(&RatFun::t_pow(pow));
                }
            }
        }
        let mut basis = ParametricBasis::new(rows).expect("square rows");
        if let Some(idx) = &index {
            basis = basis.with_index(idx.clone());
        }
        if let Ok(DegenOutcome::Pass) = verify_degeneration(source, target, &basis) {
            return Some(basis);
        }
    }
    None
}

/// Reports each failed necessary condition for `a -> b`; an empty list means
/// "not excluded" (it never certifies a degeneration).
pub fn nondegeneration_filter(a: &Algebra, b: &Algebra) -> Result<Vec<Violation>, Error> {
    if a.dim() != b.dim() {
        return Err(Error::shape(
            format!("algebras of equal dimension, got {}", a.dim()),
            format!("{}", b.dim()),
        ));
    }
    let mut out = Vec::new();
    let sa = a.square().dim();
    let sb = b.square().dim();
    if sa < sb {
        out.push(Violation::SquareDimension { a: sa, b: sb });
    }
    let (_, da) = a.derivations();
    let (_, db) = b.derivations();
    if da > db {
        out.push(Violation::DerivationDimension { a: da, b: db });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratfun::parse_laurent;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn family(name: &str) -> Source {
        Source::Family {
            name: name.to_string(),
        }
    }

    fn basis_from(rows: &[&[&str]]) -> ParametricBasis {
        ParametricBasis::new(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_laurent(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn transported_identity_is_identity() {
        let cat = catalog::catalog();
        let a = cat.build("T4_09", &[]).unwrap();
        let c = transported_constants(&Source::Fixed(a.clone()), &ParametricBasis::identity(4))
            .unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert_eq!(c[(i * 4 + j) * 4 + k].as_constant().unwrap(), *a.c(i, j, k));
                }
            }
        }
    }

    #[test]
    fn transported_scaling_multiplies_by_t() {
        let cat = catalog::catalog();
        let a = cat.build("T3*_05", &[]).unwrap();
        let c =
            transported_constants(&Source::Fixed(a.clone()), &ParametricBasis::scaling(3)).unwrap();
        let t = RatFun::t();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(
                        c[(i * 3 + j) * 3 + k],
                        t.mul(&RatFun::constant(a.c(i, j, k).clone()))
                    );
                }
            }
        }
    }

    #[test]
    fn hand_substitution_example() {
        // T3_01(lambda) in the basis (t e1, t^2 e2, e3):
        // c_12^3(t) = t^3 lambda, c_21^3(t) = t^3, c_11^2(t) = 1.
        let mut index = BTreeMap::new();
        index.insert("lambda".to_string(), RatFun::constant(q(2)));
        let basis =
            basis_from(&[&["t", "0", "0"], &["0", "t^2", "0"], &["0", "0", "1"]]).with_index(index);
        let c = transported_constants(&family("T3_01"), &basis).unwrap();
        let t3 = RatFun::t_pow(3);
        let idx = |i: usize, j: usize, k: usize| (i * 3 + j) * 3 + k;
        assert_eq!(c[idx(0, 1, 2)], t3.mul(&RatFun::constant(q(2))));
        assert_eq!(c[idx(1, 0, 2)], t3);
        assert_eq!(c[idx(0, 0, 1)], RatFun::one());
    }

    #[test]
    fn degeneration_to_zero_algebra() {
        let cat = catalog::catalog();
        let a = cat.build("D4_01", &[q(1), q(1), q(1)]).unwrap();
        let n4 = cat.build("N4", &[]).unwrap();
        assert!(
            verify_degeneration(&Source::Fixed(a), &n4, &ParametricBasis::scaling(4))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn t301_degenerates_to_t3s01() {
        let cat = catalog::catalog();
        let target = cat.build("T3*_01", &[]).unwrap();
        let a = cat.build("T3_01", &[q(2)]).unwrap();
        let basis = basis_from(&[&["t", "0", "0"], &["0", "t^2", "0"], &["0", "0", "1"]]);
        assert!(verify_degeneration(&Source::Fixed(a), &target, &basis)
            .unwrap()
            .passed());
    }

    #[test]
    fn self_degeneration_via_identity() {
        let cat = catalog::catalog();
        let a = cat.build("T4_41", &[q(1)]).unwrap();
        assert!(
            verify_degeneration(&Source::Fixed(a.clone()), &a, &ParametricBasis::identity(4))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn diverging_witness_fails_with_entries() {
        let cat = catalog::catalog();
        let a = cat.build("T3*_05", &[]).unwrap();
        let target = cat.build("N3", &[]).unwrap();
        let basis = basis_from(&[&["t^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
        match verify_degeneration(&Source::Fixed(a), &target, &basis).unwrap() {
            DegenOutcome::Fail(err) => {
                assert!(err
                    .iter()
                    .any(|f| matches!(f.outcome, LimitAtZero::Diverges)));
            }
            DegenOutcome::Pass => panic!("diverging witness must fail"),
        }
    }

    #[test]
    fn orbit_dimensions_match_components() {
        let d = orbit_closure_dimension("D4_01", &[q(1), q(1), q(1)]).unwrap();
        assert_eq!((d.n_squared, d.der_dim, d.arity), (16, 2, 3));
        assert_eq!(d.total(), 17);

        let t = orbit_closure_dimension("T4_41", &[q(1)]).unwrap();
        assert_eq!(t.total(), 15);

        let t = orbit_closure_dimension("T4_43", &[q(2), q(1)]).unwrap();
        assert_eq!(t.total(), 15);

        let z = orbit_closure_dimension("N4", &[]).unwrap();
        assert_eq!(z.total(), 0);
    }

    #[test]
    fn bounded_witness_search_finds_easy_degenerations() {
        let cat = catalog::catalog();
        // Anything to the zero algebra.
        let a = cat.build("T4_09", &[]).unwrap();
        let n4 = cat.build("N4", &[]).unwrap();
        let w = search_witness(&Source::Fixed(a.clone()), &n4, None, 200, 1).unwrap();
        assert!(verify_degeneration(&Source::Fixed(a), &n4, &w)
            .unwrap()
            .passed());
        // The parametric family route with a fixed index.
        let mut index = BTreeMap::new();
        index.insert("lambda".to_string(), RatFun::constant(q(2)));
        let target = cat.build("T3*_01", &[]).unwrap();
        let w = search_witness(&family("T3_01"), &target, Some(index.clone()), 400, 1).unwrap();
        let (src, tgt) = (family("T3_01"), target);
        assert!(verify_degeneration(&src, &tgt, &w).unwrap().passed());
    }

    #[test]
    fn filter_examples() {
        let cat = catalog::catalog();
        let n4 = cat.build("N4", &[]).unwrap();
        let t409 = cat.build("T4_09", &[]).unwrap();
        let d401 = cat.build("D4_01", &[q(1), q(1), q(1)]).unwrap();
        let t441 = cat.build("T4_41", &[q(1)]).unwrap();

        // Zero algebra cannot degenerate to anything with products.
        let v = nondegeneration_filter(&n4, &t409).unwrap();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::SquareDimension { a: 0, b: 2 })));

        // Everything degenerates to zero: no violations.
        assert!(nondegeneration_filter(&d401, &n4).unwrap().is_empty());

        // The mutual-exclusion argument between the big components.
        let v = nondegeneration_filter(&d401, &t441).unwrap();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::SquareDimension { a: 2, b: 3 })));

        // Self-pair: not excluded.
        assert!(nondegeneration_filter(&t441, &t441).unwrap().is_empty());
    }
}
