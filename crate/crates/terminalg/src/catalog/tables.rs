//! Per-base data tables: nabla dictionaries, automorphism families, the
//! closed-form action of an automorphism on cohomology coefficients, the
//! reference cohomology spanning sets, and the extension recipes that
//! rebuild every 4-dimensional entry from its 3-dimensional base.

use super::Ctx;
use crate::cohomology::Cocycle;
use crate::error::Error;
use crate::exactnum::{GaussRat, QMatrix};

fn d(i: usize, j: usize) -> Cocycle {
    Cocycle::delta(3, i, j)
}

fn combo(terms: &[(usize, usize, GaussRat)]) -> Cocycle {
    Cocycle::from_terms(3, terms)
}

/// The nabla dictionary of a base: the printed `Delta`-combinations indexed
/// `nabla_1, nabla_2, ...`. `T3_01` needs its `lambda`.
pub(super) fn nabla_dictionary(
    base: &str,
    lambda: Option<&GaussRat>,
) -> Result<Vec<Cocycle>, Error> {
    let q = GaussRat::from_int;
    Ok(match base {
        "T3*_01" => vec![
            d(1, 2),
            d(1, 3),
            d(3, 1),
            d(3, 3),
            d(2, 1),
            d(2, 3),
            d(3, 2),
        ],
        "T3*_02" => vec![
            d(1, 1),
            d(1, 2),
            d(2, 1),
            d(1, 3),
            d(2, 3),
            d(3, 1),
            d(3, 2),
        ],
        "T3*_03" => vec![
            d(1, 1),
            d(1, 2),
            combo(&[(1, 3, q(1)), (3, 1, q(-1))]),
            d(2, 2),
            combo(&[(2, 3, q(1)), (3, 2, q(-1))]),
            d(3, 1),
            d(3, 2),
        ],
        "T3*_04" => vec![
            d(1, 1),
            d(1, 2),
            d(1, 3),
            d(2, 1),
            d(2, 3),
            d(3, 1),
            d(3, 2),
        ],
        "T3*_05" => vec![d(1, 3), d(2, 1), combo(&[(2, 2, q(1)), (3, 1, q(-3))])],
        "T3_01" => {
            let lam = lambda
                .ok_or_else(|| Error::Other("nabla dictionary of T3_01 needs lambda".into()))?;
            let mut v = vec![
                d(1, 2),
                combo(&[(1, 3, lam - &q(1)), (3, 1, q(3))]),
                combo(&[(1, 3, q(1)), (2, 2, q(1))]),
            ];
            if lam.is_zero() {
                v.push(d(2, 3));
            }
            v
        }
        _ => return Err(Error::UnknownEntry(base.to_string())),
    })
}

/// Free-parameter names of each base's automorphism family.
pub fn aut_param_names(base: &str) -> Result<&'static [&'static str], Error> {
    Ok(match base {
        "T3*_01" => &["x", "y", "z", "u", "v"],
        "T3*_02" => &["x", "y", "z", "u", "n"],
        "T3*_03" => &["x", "y", "z", "u", "v", "w"],
        "T3*_04" => &["x", "y", "z", "u"],
        "T3*_05" | "T3_01" => &["x", "y", "z"],
        _ => return Err(Error::UnknownEntry(base.to_string())),
    })
}

/// Instantiates the automorphism family of a base at the given free
/// parameters (positional, per [`aut_param_names`]; the `n` of `T3*_02` must
/// be 0 or 1). Errors on degenerate parameters.
pub fn automorphism(
    base: &str,
    lambda: Option<&GaussRat>,
    vals: &[GaussRat],
) -> Result<QMatrix, Error> {
    let names = aut_param_names(base)?;
    if vals.len() != names.len() {
        return Err(Error::Arity {
            name: format!("Aut({base})"),
            expected: names.len(),
            got: vals.len(),
        });
    }
    let q = GaussRat::from_int;
    let zero = GaussRat::zero();
    let m = match base {
        "T3*_01" => {
            let (x, y, z, u, v) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4]);
            QMatrix::from_rows(vec![
                vec![x.clone(), zero.clone(), zero.clone()],
                vec![y.clone(), x * x, u.clone()],
                vec![z.clone(), zero.clone(), v.clone()],
            ])
        }
        "T3*_02" => {
            let (x, y, z, u, n) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4]);
            let sign = if n.is_zero() {
                q(1)
            } else if *n == q(1) {
                q(-1)
            } else {
                return Err(Error::DegenerateAut(
                    "branch parameter n must be 0 or 1".into(),
                ));
            };
            QMatrix::from_rows(vec![
                vec![x.clone(), y.clone(), zero.clone()],
                vec![-(&sign * y), &sign * x, zero.clone()],
                vec![z.clone(), u.clone(), x * x + y * y],
            ])
        }
        "T3*_03" => {
            let (x, y, z, u, v, w) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4], &vals[5]);
            QMatrix::from_rows(vec![
                vec![x.clone(), y.clone(), zero.clone()],
                vec![z.clone(), u.clone(), zero.clone()],
                vec![v.clone(), w.clone(), x * u - y * z],
            ])
        }
        "T3*_04" => {
            let lam = lambda.ok_or_else(|| Error::Other("Aut(T3*_04) needs lambda".into()))?;
            let (x, y, z, u) = (&vals[0], &vals[1], &vals[2], &vals[3]);
            QMatrix::from_rows(vec![
                vec![x.clone(), y.clone(), zero.clone()],
                vec![-(lam * y), x - y, zero.clone()],
                vec![z.clone(), u.clone(), x * x - x * y + &(lam * y) * y],
            ])
        }
        "T3*_05" => {
            let (x, y, z) = (&vals[0], &vals[1], &vals[2]);
            QMatrix::from_rows(vec![
                vec![x.clone(), zero.clone(), zero.clone()],
                vec![y.clone(), x * x, zero.clone()],
                vec![z.clone(), x * y, &(x * x) * x],
            ])
        }
        "T3_01" => {
            let lam = lambda.ok_or_else(|| Error::Other("Aut(T3_01) needs lambda".into()))?;
            let (x, y, z) = (&vals[0], &vals[1], &vals[2]);
            QMatrix::from_rows(vec![
                vec![x.clone(), zero.clone(), zero.clone()],
                vec![y.clone(), x * x, zero.clone()],
                vec![z.clone(), &(lam + &q(1)) * &(x * y), &(x * x) * x],
            ])
        }
        _ => return Err(Error::UnknownEntry(base.to_string())),
    };
    if !m.is_invertible() {
        return Err(Error::DegenerateAut(format!(
            "parameters make the Aut({base}) matrix singular"
        )));
    }
    Ok(m)
}

/// The closed-form transformed coefficients `alpha_i^*` of the automorphism
/// action on `H2T` in the nabla coordinates of the base, as functions of the
/// free parameters. The number of `alphas` must match the base's nabla count.
#[allow(clippy::many_single_char_names)]
pub fn action_formula(
    base: &str,
    lambda: Option<&GaussRat>,
    vals: &[GaussRat],
    alphas: &[GaussRat],
) -> Result<Vec<GaussRat>, Error> {
    let q = GaussRat::from_int;
    let two = q(2);
    match base {
        "T3*_01" => {
            let (x, y, z, u, v) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4]);
            let (a1, a2, a3, a4, a5, a6, a7) = (
                &alphas[0], &alphas[1], &alphas[2], &alphas[3], &alphas[4], &alphas[5], &alphas[6],
            );
            let x2 = x * x;
            Ok(vec![
                &x2 * &(a1 * x + a7 * z),
                u * &(a1 * x + a7 * z) + v * &(a2 * x + a6 * y + a4 * z),
                u * &(a5 * x + a6 * z) + v * &(a3 * x + a7 * y + a4 * z),
                v * &(&(a6 + a7) * u + a4 * v),
                &x2 * &(a5 * x + a6 * z),
                a6 * &(&x2 * v),
                a7 * &(&x2 * v),
            ])
        }
        "T3*_02" => {
            let (x, y, z, u, n) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4]);
            let s = if n.is_zero() { q(1) } else { q(-1) };
            let (a1, a2, a3, a4, a5, a6, a7) = (
                &alphas[0], &alphas[1], &alphas[2], &alphas[3], &alphas[4], &alphas[5], &alphas[6],
            );
            let norm = x * x + y * y;
            Ok(vec![
                a1 * &(x * x - y * y) - &(&two * &s) * &(&(a2 + a3) * &(x * y))
                    + &(a4 * x - &s * &(a5 * y) + a6 * x - &s * &(a7 * y)) * z
                    - &(a4 * y + &s * &(a5 * x) + a6 * y + &s * &(a7 * x)) * u,
                &s * &(a2 * &(x * x)) + a1 * &(x * y) - &s * &(a3 * &(y * y))
                    + &(a4 * x - &s * &(a5 * y)) * u
                    + &(a6 * y + &s * &(a7 * x)) * z,
                &s * &(a3 * &(x * x)) + a1 * &(x * y) - &s * &(a2 * &(y * y))
                    + &(a4 * y + &s * &(a5 * x)) * z
                    + &(a6 * x - &s * &(a7 * y)) * u,
                &(a4 * x - &s * &(a5 * y)) * &norm,
                &(a4 * y + &s * &(a5 * x)) * &norm,
                &(a6 * x - &s * &(a7 * y)) * &norm,
                &(a6 * y + &s * &(a7 * x)) * &norm,
            ])
        }
        "T3*_03" => {
            let (x, y, z, u, v, w) = (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4], &vals[5]);
            let (a1, a2, a3, a4, a5, a6, a7) = (
                &alphas[0], &alphas[1], &alphas[2], &alphas[3], &alphas[4], &alphas[5], &alphas[6],
            );
            let det = x * u - y * z;
            Ok(vec![
                a1 * &(x * x) + a2 * &(x * z) + a4 * &(z * z) + v * &(a6 * x + a7 * z),
                x * &(&(&two * a1) * y + a2 * u)
                    + z * &(a2 * y + &(&two * a4) * u)
                    + w * &(a6 * x + a7 * z)
                    + v * &(a6 * y + a7 * u),
                &(a3 * x + a5 * z) * &det,
                y * &(a1 * y + a2 * u) + a4 * &(u * u) + w * &(a6 * y + a7 * u),
                &(a3 * y + a5 * u) * &det,
                &(a6 * x + a7 * z) * &det,
                &(a6 * y + a7 * u) * &det,
            ])
        }
        "T3*_04" => {
            let lam = lambda.ok_or_else(|| Error::Other("action on T3*_04 needs lambda".into()))?;
            let (x, y, z, u) = (&vals[0], &vals[1], &vals[2], &vals[3]);
            let (a1, a2, a3, a4, a5, a6, a7) = (
                &alphas[0], &alphas[1], &alphas[2], &alphas[3], &alphas[4], &alphas[5], &alphas[6],
            );
            let quad = x * x - x * y + &(lam * y) * y;
            let a57 = a5 + a7;
            let mix = -a3 + a5 - a6 + a7;
            // The yz term carries lambda: expanding the congruence
            // (phi^T C phi)_(1,1) - lambda * (phi^T C phi)_(2,2) forces it.
            Ok(vec![
                a1 * &(x * x) + &(lam * &(-a1 + a2 + a4)) * &(y * y)
                    - &(&(&two * lam) * &(a2 + a4)) * &(x * y)
                    + &(a3 + a6) * &(x * z)
                    - &(lam * &a57) * &(y * z)
                    - &(lam * &a57) * &(u * x)
                    + &(lam * &mix) * &(u * y),
                a2 * &(x * x) - &(lam * a4) * &(y * y)
                    + &(a1 - a2) * &(x * y)
                    + a7 * &(x * z)
                    + &(a6 - a7) * &(y * z)
                    - &(a5 * lam) * &(u * y)
                    + a3 * &(u * x),
                &quad * &(a3 * x - &(lam * a5) * y),
                a4 * &(x * x)
                    + &(-a1 + &(&(&q(1) - lam) * a2) + a4) * &(y * y)
                    + &(a1 - a2 - &(&two * a4)) * &(x * y)
                    + &(a3 - a5) * &(y * z)
                    + a5 * &(x * z)
                    - &(a7 * lam) * &(u * y)
                    + &(-a5 + a6 - a7) * &(u * x)
                    + &mix * &(u * y),
                &quad * &(a5 * x + &(a3 - a5) * y),
                &quad * &(a6 * x - &(lam * a7) * y),
                &quad * &(a7 * x + &(a6 - a7) * y),
            ])
        }
        "T3*_05" => {
            let (x, y) = (&vals[0], &vals[1]);
            let (a1, a2, a3) = (&alphas[0], &alphas[1], &alphas[2]);
            let x2 = x * x;
            let x4 = &x2 * &x2;
            Ok(vec![a1 * &x4, &x2 * &(a2 * x - &(&two * a3) * y), a3 * &x4])
        }
        "T3_01" => {
            let lam = lambda.ok_or_else(|| Error::Other("action on T3_01 needs lambda".into()))?;
            let (x, y) = (&vals[0], &vals[1]);
            let x2 = x * x;
            let x3 = &x2 * x;
            let x4 = &x2 * &x2;
            if lam.is_zero() {
                let (a1, a2, a3, a4) = (&alphas[0], &alphas[1], &alphas[2], &alphas[3]);
                Ok(vec![
                    x * &(&x2 * a1 - &(x * y) * &(a2 - &(&two * a3)) + &(y * y) * a4),
                    a2 * &x4,
                    &x3 * &(x * a3 + y * a4),
                    a4 * &(&x4 * x),
                ])
            } else {
                let (a1, a2, a3) = (&alphas[0], &alphas[1], &alphas[2]);
                let c = &(lam + &q(1)) * &(&(&two * lam) + &q(1));
                Ok(vec![
                    &x2 * &(a1 * x + &(&(&two * a3) - &(&c * a2)) * y),
                    a2 * &x4,
                    a3 * &x4,
                ])
            }
        }
        _ => Err(Error::UnknownEntry(base.to_string())),
    }
}

/// Reference spanning sets for the cohomology of a base algebra: `Z2T`
/// absolutely, `H2T` and (for the Leibniz bases) `H2L` as spanning sets
/// modulo the coboundaries.
pub struct PrintedCohomology {
    pub z2t: Vec<Cocycle>,
    pub h2t: Vec<Cocycle>,
    pub h2l: Option<Vec<Cocycle>>,
}

pub fn printed_cohomology(
    base: &str,
    lambda: Option<&GaussRat>,
) -> Result<PrintedCohomology, Error> {
    let q = GaussRat::from_int;
    Ok(match base {
        "T3*_01" => PrintedCohomology {
            z2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 1),
                d(2, 3),
                d(3, 1),
                d(3, 2),
                d(3, 3),
            ],
            h2t: vec![
                d(1, 2),
                d(1, 3),
                d(2, 1),
                d(2, 3),
                d(3, 1),
                d(3, 2),
                d(3, 3),
            ],
            h2l: Some(vec![d(1, 2), d(1, 3), d(3, 1), d(3, 3)]),
        },
        "T3*_02" => PrintedCohomology {
            z2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 1),
                d(2, 2),
                d(2, 3),
                d(3, 1),
                d(3, 2),
            ],
            h2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 1),
                d(2, 3),
                d(3, 1),
                d(3, 2),
            ],
            h2l: Some(vec![d(1, 1), d(1, 2), d(2, 1)]),
        },
        "T3*_03" => PrintedCohomology {
            z2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 1),
                d(2, 2),
                d(2, 3),
                d(3, 1),
                d(3, 2),
            ],
            h2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 2),
                d(2, 3),
                d(3, 1),
                d(3, 2),
            ],
            h2l: Some(vec![
                d(1, 1),
                d(1, 2),
                combo(&[(1, 3, q(1)), (3, 1, q(-1))]),
                d(2, 2),
                combo(&[(2, 3, q(1)), (3, 2, q(-1))]),
            ]),
        },
        "T3*_04" => {
            let lam = lambda
                .ok_or_else(|| Error::Other("printed cohomology of T3*_04 needs lambda".into()))?;
            let mut h2l = vec![d(1, 1), d(1, 2), d(2, 1)];
            if lam.is_zero() {
                h2l.push(d(2, 3));
            }
            PrintedCohomology {
                z2t: vec![
                    d(1, 1),
                    d(1, 2),
                    d(1, 3),
                    d(2, 1),
                    d(2, 2),
                    d(2, 3),
                    d(3, 1),
                    d(3, 2),
                ],
                h2t: vec![
                    d(1, 1),
                    d(1, 2),
                    d(1, 3),
                    d(2, 1),
                    d(2, 3),
                    d(3, 1),
                    d(3, 2),
                ],
                h2l: Some(h2l),
            }
        }
        "T3*_05" => PrintedCohomology {
            z2t: vec![
                d(1, 1),
                d(1, 2),
                d(1, 3),
                d(2, 1),
                combo(&[(2, 2, q(1)), (3, 1, q(-3))]),
            ],
            h2t: vec![d(1, 3), d(2, 1), combo(&[(2, 2, q(1)), (3, 1, q(-3))])],
            h2l: Some(vec![d(1, 3)]),
        },
        "T3_01" => {
            let lam = lambda
                .ok_or_else(|| Error::Other("printed cohomology of T3_01 needs lambda".into()))?;
            let nabla2 = combo(&[(1, 3, lam - &q(1)), (3, 1, q(3))]);
            let nabla3 = combo(&[(1, 3, q(1)), (2, 2, q(1))]);
            let mut z2t = vec![d(1, 1), d(1, 2), nabla2.clone(), d(2, 1), nabla3.clone()];
            let mut h2t = vec![d(1, 2), nabla2, nabla3];
            if lam.is_zero() {
                z2t.push(d(2, 3));
                h2t.push(d(2, 3));
            }
            PrintedCohomology {
                z2t,
                h2t,
                h2l: None,
            }
        }
        _ => return Err(Error::UnknownEntry(base.to_string())),
    })
}

/// How a recipe's base parameter is obtained from the target's parameters.
#[derive(Clone, Copy, Debug)]
enum LambdaSource {
    /// The base takes no parameters.
    None,
    /// The base shares the target's `lambda` (parameter 0).
    TargetParam0,
    /// The base is instantiated at `lambda = 0`.
    FixedZero,
}

/// One extension recipe: which base, how its `lambda` is derived, and the
/// nabla combination rebuilding the target.
pub struct ReconSpec {
    pub target: &'static str,
    pub base: &'static str,
    lambda: LambdaSource,
}

impl ReconSpec {
    pub fn base_lambda(&self, target_params: &[GaussRat]) -> Option<GaussRat> {
        match self.lambda {
            LambdaSource::None => None,
            LambdaSource::TargetParam0 => Some(target_params[0].clone()),
            LambdaSource::FixedZero => Some(GaussRat::zero()),
        }
    }

    /// The nabla combination for the target at the given context (target
    /// parameters plus `Theta` when applicable): `(nabla index, coefficient)`.
    pub fn rep(&self, ctx: &Ctx<GaussRat>) -> Vec<(usize, GaussRat)> {
        recon_rep(self.target, ctx)
    }

    /// Parameter samples appropriate for this recipe: `lambda` stays away
    /// from the orbit-table boundary values `{0, 1/4}`.
    pub fn samples(&self) -> Vec<Vec<GaussRat>> {
        let cat = super::catalog();
        let entry = cat.get(self.target).expect("recon target exists");
        let pool = [
            GaussRat::from_int(2),
            GaussRat::from_ratio(1, 2),
            GaussRat::from_int(-3),
        ];
        let theta_pool = [GaussRat::from_ratio(1, 2), GaussRat::from_int(-2)];
        let count = if entry.params.is_empty() { 1 } else { 3 };
        let mut out = Vec::new();
        for k in 0..count {
            let mut sample = Vec::new();
            for (j, pname) in entry.params.iter().enumerate() {
                if *pname == "lambda" {
                    if entry.needs_theta {
                        sample.push(theta_pool[k % theta_pool.len()].clone());
                    } else {
                        sample.push(pool[k % pool.len()].clone());
                    }
                } else {
                    sample.push(pool[(k + j) % pool.len()].clone());
                }
            }
            if entry.excluded(&sample).is_none() && !out.contains(&sample) {
                out.push(sample);
            }
        }
        out
    }
}

/// All printed extension recipes, one per 4-dimensional catalog family
/// (except `T4_02`, whose annihilator has dimension 2 and which is covered
/// by the 2-cocycle tests instead).
pub fn reconstruction_specs() -> Vec<ReconSpec> {
    use LambdaSource::{FixedZero, None as NoLambda, TargetParam0};
    let mut v = Vec::new();
    let mut add = |target: &'static str, base: &'static str, lambda: LambdaSource| {
        v.push(ReconSpec {
            target,
            base,
            lambda,
        });
    };
    for t in [
        "T4_03", "T4_04", "T4_05", "T4_06", "T4_07", "T4_08", "T4_09", "T4_10", "T4_11", "T4_12",
        "T4_13", "T4_14", "T4_15", "T4_16", "T4_17",
    ] {
        add(t, "T3*_01", NoLambda);
    }
    for t in [
        "T4_18", "T4_19", "T4_20", "T4_21", "T4_22", "T4_23", "T4_24", "T4_25", "T4_26", "T4_27",
        "T4_28", "T4_29", "T4_30", "T4_31", "T4_32", "T4_33", "T4_34",
    ] {
        add(t, "T3*_02", NoLambda);
    }
    add("T4_35", "T3*_03", NoLambda);
    add("T4_36", "T3*_03", NoLambda);
    add("T4_37", "T3*_05", NoLambda);
    add("T4_38", "T3*_05", NoLambda);
    add("T4_39", "T3_01", TargetParam0);
    add("T4_40", "T3_01", TargetParam0);
    add("T4_41", "T3_01", FixedZero);
    add("T4_42", "T3_01", FixedZero);
    add("T4_43", "T3_01", TargetParam0);
    add("T4_44", "T3_01", FixedZero);
    for t in [
        "D4_01", "D4_02", "D4_03", "D4_04", "D4_05", "D4_06", "D4_07", "D4_08", "D4_09", "D4_10",
        "D4_11", "D4_12", "D4_13", "D4_14", "D4_15",
    ] {
        add(t, "T3*_04", TargetParam0);
    }
    add("D4_16", "T3*_04", FixedZero);
    add("D4_17", "T3*_04", FixedZero);
    for t in [
        "D4_18", "D4_19", "D4_20", "D4_21", "D4_22", "D4_23", "D4_24", "D4_25", "D4_26", "D4_27",
        "D4_28", "D4_29", "D4_30", "D4_31", "D4_32", "D4_33",
    ] {
        add(t, "T3*_04", TargetParam0);
    }
    add("D4_34", "T3*_04", FixedZero);
    for t in ["D4_35", "D4_36", "D4_37", "D4_38", "D4_39", "D4_40"] {
        add(t, "T3*_04", TargetParam0);
    }
    v
}

/// The nabla combination rebuilding each target (1-based nabla indices).
#[allow(clippy::too_many_lines)]
fn recon_rep(target: &str, ctx: &Ctx<GaussRat>) -> Vec<(usize, GaussRat)> {
    let one = GaussRat::one;
    let k = GaussRat::from_int;
    let im = GaussRat::i;
    let p = |i: usize| ctx.param(i).clone();

    match target {
        "T4_03" => vec![(1, one()), (4, one()), (6, p(0)), (7, one())],
        "T4_04" => vec![(1, one()), (6, p(0)), (7, one())],
        "T4_05" => vec![(2, one()), (4, one()), (6, k(-1)), (7, one())],
        "T4_06" => vec![(2, one()), (5, one()), (7, one())],
        "T4_07" => vec![(2, one()), (6, p(0)), (7, one())],
        "T4_08" => vec![(4, one()), (6, k(-1)), (7, one())],
        "T4_09" => vec![(5, one()), (7, one())],
        "T4_10" => vec![(6, p(0)), (7, one())],
        "T4_11" => vec![(1, one()), (6, one())],
        "T4_12" => vec![(1, one()), (3, one()), (6, one())],
        "T4_13" => vec![(3, one()), (6, one())],
        "T4_14" => vec![(6, one())],
        "T4_15" => vec![(1, p(0)), (2, one()), (5, one())],
        "T4_16" => vec![(1, one()), (2, one()), (4, one()), (5, one())],
        "T4_17" => vec![(1, p(0)), (4, one()), (5, one())],

        "T4_18" => vec![(4, one())],
        "T4_19" => vec![(3, one()), (4, one())],
        "T4_20" => vec![(1, one()), (4, im()), (5, one())],
        "T4_21" => vec![(4, im()), (5, one())],
        "T4_22" => vec![(4, p(0)), (5, p(1)), (6, one())],
        "T4_23" => vec![(1, one()), (4, p(0)), (5, p(1)), (6, one())],
        "T4_24" => vec![(3, one()), (4, p(0)), (6, one())],
        "T4_25" => vec![(1, one()), (3, p(0)), (4, k(-1)), (6, one())],
        "T4_26" => vec![(1, one()), (2, p(0)), (5, im()), (6, one())],
        "T4_27" => vec![(2, one()), (5, p(0)), (6, one())],
        "T4_28" => vec![(1, one()), (4, p(0)), (6, im()), (7, one())],
        "T4_29" => vec![(4, p(0)), (6, im()), (7, one())],
        "T4_30" => vec![
            (2, one()),
            (4, im() * p(0)),
            (5, p(0)),
            (6, im()),
            (7, one()),
        ],
        "T4_31" => vec![(4, im() * p(0)), (5, p(0)), (6, im()), (7, one())],
        "T4_32" => vec![
            (1, im()),
            (2, one()),
            (4, im()),
            (5, one()),
            (6, im()),
            (7, one()),
        ],
        "T4_33" => vec![
            (1, im()),
            (2, one()),
            (4, -im()),
            (5, k(-1)),
            (6, im()),
            (7, one()),
        ],
        "T4_34" => vec![
            (1, -im()),
            (2, one()),
            (4, -im()),
            (5, k(-1)),
            (6, im()),
            (7, one()),
        ],

        "T4_35" => vec![(4, one()), (5, one()), (6, one())],
        "T4_36" => vec![(5, one()), (6, one())],

        "T4_37" => vec![(1, one()), (2, one())],
        "T4_38" => vec![(1, p(0)), (3, one())],

        "T4_39" => vec![(1, one()), (2, one())],
        "T4_40" => {
            let l = p(0);
            let c = (&l + &one()) * (&(&k(2) * &l) + &one());
            vec![(1, c.clone()), (2, k(2)), (3, c)]
        }
        "T4_41" => vec![(1, p(0)), (2, one()), (4, one())],
        "T4_42" => vec![(1, one()), (4, one())],
        "T4_43" => vec![(2, p(1)), (3, one())],
        "T4_44" => vec![(4, one())],

        "D4_01" => vec![(1, one()), (3, p(1)), (5, p(2)), (6, one())],
        "D4_02" => vec![(3, p(1)), (5, p(2)), (6, one())],
        "D4_03" => vec![(2, one()), (5, p(1)), (6, one())],
        "D4_04" => vec![(5, p(1)), (6, one())],
        "D4_05" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![(2, l.clone()), (4, &l * &p(1)), (5, th), (6, l)]
        }
        "D4_06" => {
            let th = ctx.theta().clone();
            vec![
                (2, one()),
                (4, p(1)),
                (5, th.inv().expect("Theta nonzero")),
                (6, one()),
            ]
        }
        "D4_07" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![(4, l.clone()), (5, th), (6, l)]
        }
        "D4_08" => {
            let th = ctx.theta().clone();
            vec![
                (4, one()),
                (5, th.inv().expect("Theta nonzero")),
                (6, one()),
            ]
        }
        "D4_09" => vec![(2, one()), (3, p(1)), (6, one())],
        "D4_10" => vec![(3, p(1)), (6, one())],
        "D4_11" => vec![(1, one()), (2, p(1)), (3, k(-1)), (6, one())],
        "D4_12" => vec![(1, one()), (3, p(1)), (6, ctx.theta().clone()), (7, one())],
        "D4_13" => vec![(1, one()), (3, p(1)), (6, one() - ctx.theta()), (7, one())],
        "D4_14" => vec![(3, p(1)), (6, ctx.theta().clone()), (7, one())],
        "D4_15" => vec![(3, p(1)), (6, one() - ctx.theta()), (7, one())],
        "D4_16" => vec![(3, p(0)), (4, one()), (6, one()), (7, one())],
        "D4_17" => vec![(1, one()), (3, k(-1)), (4, p(0)), (6, one()), (7, one())],
        "D4_18" => {
            let th = ctx.theta().clone();
            vec![(1, one()), (3, &th * &p(1)), (5, p(1)), (6, th), (7, one())]
        }
        "D4_19" => {
            let f = one() - ctx.theta();
            vec![(1, one()), (3, &f * &p(1)), (5, p(1)), (6, f), (7, one())]
        }
        "D4_20" => {
            let th = ctx.theta().clone();
            vec![(3, &th * &p(1)), (5, p(1)), (6, th), (7, one())]
        }
        "D4_21" => {
            let f = one() - ctx.theta();
            vec![(3, &f * &p(1)), (5, p(1)), (6, f), (7, one())]
        }
        "D4_22" => {
            let l = p(0);
            let th = ctx.theta().clone();
            let thinv = th.inv().expect("Theta nonzero");
            vec![
                (1, one() - &k(2) * &l),
                (2, one()),
                (3, &th - &one()),
                (5, one() - thinv),
                (6, th),
                (7, one()),
            ]
        }
        "D4_23" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, &(one() - &k(2) * &l) * &l),
                (2, l.clone()),
                (3, -(&l * &th)),
                (5, -(&th * &th)),
                (6, &l * &(one() - &th)),
                (7, l),
            ]
        }
        "D4_24" => {
            let th = ctx.theta().clone();
            let thinv = th.inv().expect("Theta nonzero");
            vec![
                (1, th.clone()),
                (2, one()),
                (3, &th - &one()),
                (5, one() - thinv),
                (6, th),
                (7, one()),
            ]
        }
        "D4_25" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, &l * &(one() - &th)),
                (2, l.clone()),
                (3, -(&l * &th)),
                (5, -(&th * &th)),
                (6, &l * &(one() - &th)),
                (7, l),
            ]
        }
        "D4_26" => {
            let th = ctx.theta().clone();
            vec![
                (1, th.clone()),
                (2, one()),
                (3, -th.clone()),
                (5, k(-1)),
                (6, th),
                (7, one()),
            ]
        }
        "D4_27" => {
            let f = one() - ctx.theta();
            vec![
                (1, f.clone()),
                (2, one()),
                (3, -f.clone()),
                (5, k(-1)),
                (6, f),
                (7, one()),
            ]
        }
        "D4_28" => {
            let th = ctx.theta().clone();
            vec![
                (1, one() - &th),
                (2, one()),
                (3, -th.clone()),
                (5, k(-1)),
                (6, th),
                (7, one()),
            ]
        }
        "D4_29" => {
            let th = ctx.theta().clone();
            vec![
                (1, th.clone()),
                (2, one()),
                (3, &th - &one()),
                (5, k(-1)),
                (6, one() - th),
                (7, one()),
            ]
        }
        "D4_30" => {
            let th = ctx.theta().clone();
            vec![
                (1, one()),
                (3, &th - &one()),
                (5, k(-1)),
                (6, th),
                (7, one()),
            ]
        }
        "D4_31" => {
            let th = ctx.theta().clone();
            vec![
                (1, one()),
                (3, -th.clone()),
                (5, k(-1)),
                (6, one() - th),
                (7, one()),
            ]
        }
        "D4_32" => {
            let th = ctx.theta().clone();
            vec![(3, &th - &one()), (5, k(-1)), (6, th), (7, one())]
        }
        "D4_33" => {
            let th = ctx.theta().clone();
            vec![(3, -th.clone()), (5, k(-1)), (6, one() - th), (7, one())]
        }
        "D4_34" => vec![(1, one()), (4, one()), (6, one()), (7, one())],
        "D4_35" => vec![(3, one()), (4, one())],
        "D4_36" => vec![(3, one())],
        "D4_37" => vec![(1, one()), (3, ctx.theta().clone()), (5, one())],
        "D4_38" => vec![(1, one()), (3, one() - ctx.theta()), (5, one())],
        "D4_39" => vec![(3, ctx.theta().clone()), (5, one())],
        "D4_40" => vec![(3, one() - ctx.theta()), (5, one())],

        other => panic!("no reconstruction recipe for `{other}`"),
    }
}
