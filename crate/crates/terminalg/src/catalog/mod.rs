//! The bundled classification catalog: parameterized structure constants for
//! every algebra the crate knows about, the per-base nabla dictionaries, the
//! automorphism families, the printed orbit-action formulas, reconstruction
//! recipes, and isomorphism utilities (fingerprints and witness search).

mod entries;
mod iso;
mod tables;

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use crate::algebra::Algebra;
use crate::cohomology::{self, Cocycle};
use crate::error::Error;
use crate::exactnum::{Field, GaussRat, RatFun};

pub use entries::{CatalogEntry, LeibnizFlag};
pub use iso::{find_isomorphism, fingerprint, is_isomorphism, Fingerprint, IsoBudget, IsoResult};
pub use tables::{
    action_formula, aut_param_names, automorphism, printed_cohomology, reconstruction_specs,
    PrintedCohomology, ReconSpec,
};

/// Field values a catalog builder can produce: the Gaussian rationals
/// themselves, or rational functions in `t` for parametric degeneration
/// indices.
pub trait CatalogField: Field {
    fn from_gauss(q: GaussRat) -> Self;
}

impl CatalogField for GaussRat {
    fn from_gauss(q: GaussRat) -> Self {
        q
    }
}

impl CatalogField for RatFun {
    fn from_gauss(q: GaussRat) -> Self {
        RatFun::constant(q)
    }
}

/// Resolved parameters handed to a builder, plus `Theta` when the entry's
/// constants mention it.
pub struct Ctx<F> {
    vals: Vec<F>,
    theta: Option<F>,
}

impl<F: CatalogField> Ctx<F> {
    pub fn new(vals: Vec<F>, theta: Option<F>) -> Self {
        Ctx { vals, theta }
    }

    pub fn param(&self, i: usize) -> &F {
        &self.vals[i]
    }

    pub fn theta(&self) -> &F {
        self.theta
            .as_ref()
            .expect("entry declared needs_theta; Theta must be supplied")
    }
}

/// The root `Theta = (1 + sqrt(1 - 4*lambda))/2` of `x^2 - x + lambda`,
/// with the square root branch fixed as in [`GaussRat::sqrt_exact`]. Errors
/// when `1 - 4*lambda` is not a square in `Q(i)`.
pub fn theta_for(lambda: &GaussRat) -> Result<GaussRat, Error> {
    let disc = GaussRat::from_int(1) - GaussRat::from_int(4) * lambda;
    let s = disc.sqrt_exact().ok_or_else(|| Error::ThetaNotSquare {
        value: disc.format(),
    })?;
    Ok((GaussRat::from_int(1) + s) / GaussRat::from_int(2))
}

/// `lambda` together with its `Theta`; the defining quadratic
/// `Theta^2 - Theta + lambda = 0` is a tested invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaParam {
    pub lambda: GaussRat,
    pub theta: GaussRat,
}

impl ThetaParam {
    pub fn new(lambda: GaussRat) -> Result<Self, Error> {
        let theta = theta_for(&lambda)?;
        Ok(ThetaParam { lambda, theta })
    }

    /// `theta^2 - theta + lambda`, which must be zero.
    pub fn quadratic_residual(&self) -> GaussRat {
        &(&self.theta * &self.theta) - &self.theta + &self.lambda
    }
}

/// The immutable catalog, built once.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_name: BTreeMap<&'static str, usize>,
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: Lazy<Catalog> = Lazy::new(|| {
        let entries = entries::all_entries();
        let by_name = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name, i))
            .collect();
        Catalog { entries, by_name }
    });
    &CATALOG
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry, Error> {
        self.by_name
            .get(name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))
    }

    /// Builds the exact algebra of a named entry at the given parameters.
    pub fn build(&self, name: &str, params: &[GaussRat]) -> Result<Algebra, Error> {
        let entry = self.get(name)?;
        if entry.unresolved {
            return Err(Error::Other(format!(
                "`{name}` is an unresolved placeholder with no structure constants"
            )));
        }
        entry.check_params(params)?;
        let theta = if entry.needs_theta {
            Some(theta_for(&params[0])?)
        } else {
            None
        };
        let ctx = Ctx::new(params.to_vec(), theta);
        let raw = entries::raw_constants::<GaussRat>(name, &ctx)
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
        let shifted: Vec<(usize, usize, usize, GaussRat)> = raw
            .into_iter()
            .map(|(i, j, k, v)| (i - 1, j - 1, k - 1, v))
            .collect();
        Ok(Algebra::from_entries(
            entry.dim,
            format_instance(name, params),
            &shifted,
        ))
    }

    /// Builds the structure constants over rational functions in `t`, for a
    /// parametric index. `Theta`, when the entry needs it, is taken from
    /// `theta`: either supplied directly, or derived when the `lambda`
    /// component is constant in `t`.
    pub fn build_ratfun(
        &self,
        name: &str,
        params: &[RatFun],
        theta: Option<RatFun>,
    ) -> Result<(usize, Vec<(usize, usize, usize, RatFun)>), Error> {
        let entry = self.get(name)?;
        if params.len() != entry.params.len() {
            return Err(Error::Arity {
                name: name.to_string(),
                expected: entry.params.len(),
                got: params.len(),
            });
        }
        let theta = if entry.needs_theta {
            match theta {
                Some(t) => Some(t),
                None => {
                    let lam = params[0].as_constant().ok_or_else(|| {
                        Error::Other(format!(
                            "entry `{name}` needs Theta; supply it explicitly or use a \
                             t-independent lambda"
                        ))
                    })?;
                    Some(RatFun::constant(theta_for(&lam)?))
                }
            }
        } else {
            None
        };
        let ctx = Ctx::new(params.to_vec(), theta);
        let raw = entries::raw_constants::<RatFun>(name, &ctx)
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
        Ok((
            entry.dim,
            raw.into_iter()
                .map(|(i, j, k, v)| (i - 1, j - 1, k - 1, v))
                .collect(),
        ))
    }

    /// The nabla dictionary of a base algebra: the printed
    /// `Delta`-combinations, 1-indexed by the nabla number.
    pub fn nabla_dictionary(
        &self,
        base: &str,
        lambda: Option<&GaussRat>,
    ) -> Result<Vec<Cocycle>, Error> {
        tables::nabla_dictionary(base, lambda)
    }

    /// Default deterministic parameter samples for an entry: values rotate
    /// through `{2, 1/2, -3}`, with `lambda` drawn from the
    /// `Theta`-compatible set `{1/2, -2, 1/4}` for entries whose constants
    /// mention `Theta`. Samples hitting the exclusion predicate are dropped.
    pub fn default_samples(&self, entry: &CatalogEntry) -> Vec<Vec<GaussRat>> {
        default_samples_with(entry, 3)
    }

    /// Like [`Catalog::default_samples`] with an adjustable sample count.
    pub fn samples_with_count(&self, entry: &CatalogEntry, count: usize) -> Vec<Vec<GaussRat>> {
        default_samples_with(entry, count)
    }
}

fn base_sample_values() -> Vec<GaussRat> {
    vec![
        GaussRat::from_int(2),
        GaussRat::from_ratio(1, 2),
        GaussRat::from_int(-3),
        GaussRat::from_int(5),
        GaussRat::from_ratio(-1, 2),
        GaussRat::from_int(7),
    ]
}

/// `lambda` values with `1 - 4*lambda` a square in `Q(i)`; the corresponding
/// square roots are `i, 3, 0, 5, 1`.
pub fn theta_lambda_samples() -> Vec<GaussRat> {
    vec![
        GaussRat::from_ratio(1, 2),
        GaussRat::from_int(-2),
        GaussRat::from_ratio(1, 4),
        GaussRat::from_int(-6),
        GaussRat::from_int(0),
    ]
}

fn default_samples_with(entry: &CatalogEntry, count: usize) -> Vec<Vec<GaussRat>> {
    if entry.params.is_empty() {
        return vec![Vec::new()];
    }
    let pool = base_sample_values();
    let theta_pool = theta_lambda_samples();
    let mut out = Vec::new();
    for k in 0..count {
        let mut sample = Vec::with_capacity(entry.params.len());
        for (j, pname) in entry.params.iter().enumerate() {
            if entry.needs_theta && *pname == "lambda" {
                sample.push(theta_pool[k % theta_pool.len()].clone());
            } else {
                sample.push(pool[(k + j) % pool.len()].clone());
            }
        }
        if entry.excluded(&sample).is_none() {
            out.push(sample);
        }
    }
    out
}

/// `"T4_07(2)"`-style display name for a built instance.
pub fn format_instance(name: &str, params: &[GaussRat]) -> String {
    if params.is_empty() {
        name.to_string()
    } else {
        let inner: Vec<String> = params.iter().map(GaussRat::format).collect();
        format!("{}({})", name, inner.join(","))
    }
}

/// Parses `"T4_07(2)"` / `"T3_01(1/2-3i)"` / `"N4"` into a name plus
/// parameter values.
pub fn parse_instance(input: &str) -> Result<(String, Vec<GaussRat>), Error> {
    let s = input.trim();
    match s.find('(') {
        None => Ok((s.to_string(), Vec::new())),
        Some(open) => {
            if !s.ends_with(')') {
                return Err(Error::Parse(format!("unbalanced parens in `{input}`")));
            }
            let name = s[..open].trim().to_string();
            let inner = &s[open + 1..s.len() - 1];
            let mut params = Vec::new();
            if !inner.trim().is_empty() {
                for piece in inner.split(',') {
                    // Accept both plain values and `name=value`.
                    let val = match piece.split_once('=') {
                        Some((_, v)) => v,
                        None => piece,
                    };
                    params.push(GaussRat::parse(val)?);
                }
            }
            Ok((name, params))
        }
    }
}

/// Outcome of checking one reconstruction recipe at one parameter sample.
#[derive(Clone, Debug)]
pub struct ProcedureReport {
    pub target: String,
    pub base: String,
    pub in_t1: bool,
    pub non_split: bool,
    pub non_leibniz_class: bool,
    pub constants_match: bool,
    pub mismatch: Vec<String>,
}

impl ProcedureReport {
    pub fn passed(&self) -> bool {
        self.in_t1 && self.non_split && self.non_leibniz_class && self.constants_match
    }
}

/// Runs the three-step check for one recipe: membership in `T_1`,
/// non-splitness, non-membership in the Leibniz cohomology (the `U_1`
/// filter), and entrywise equality of the built extension with the named
/// catalog entry at the same parameters.
pub fn procedure_verify(spec: &ReconSpec, params: &[GaussRat]) -> Result<ProcedureReport, Error> {
    let cat = catalog();
    let target_entry = cat.get(spec.target)?;
    target_entry.check_params(params)?;
    let theta = if target_entry.needs_theta {
        Some(theta_for(&params[0])?)
    } else {
        None
    };
    let ctx = Ctx::new(params.to_vec(), theta);

    let base_lambda = spec.base_lambda(params);
    let base_params: Vec<GaussRat> = base_lambda.iter().cloned().collect();
    let base = cat.build(spec.base, &base_params)?;
    let nablas = cat.nabla_dictionary(spec.base, base_lambda.as_ref())?;

    let mut theta_form = Cocycle::zero(base.dim());
    for (idx, coeff) in spec.rep(&ctx) {
        theta_form = theta_form.add(&nablas[idx - 1].scale(&coeff));
    }

    let coh = cohomology::cohomology(&base);
    let in_t1 = cohomology::in_t_s_with(&coh, &base, std::slice::from_ref(&theta_form));
    let non_leibniz_class = !coh.in_leibniz(&theta_form);
    let ext_spec = crate::extensions::ExtensionSpec::new(base.clone(), vec![theta_form])?;
    let non_split = match crate::extensions::is_split_with(&coh, &ext_spec) {
        Ok(split) => !split,
        Err(_) => false,
    };
    let built = crate::extensions::central_extension(&ext_spec);
    let expected = cat.build(spec.target, params)?;

    let mut mismatch = Vec::new();
    let n = expected.dim();
    if built.dim() != n {
        mismatch.push(format!("dimension {} vs {}", built.dim(), n));
    } else {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if built.c(i, j, k) != expected.c(i, j, k) {
                        mismatch.push(format!(
                            "c[{}][{}][{}]: built {} expected {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            built.c(i, j, k),
                            expected.c(i, j, k)
                        ));
                    }
                }
            }
        }
    }
    Ok(ProcedureReport {
        target: format_instance(spec.target, params),
        base: format_instance(spec.base, &base_params),
        in_t1,
        non_split,
        non_leibniz_class,
        constants_match: mismatch.is_empty(),
        mismatch,
    })
}

/// Resolves a user-facing extension request: base given by name-with-params,
/// cocycles given as nabla strings (parsed against the base dictionary) or
/// explicit coefficient matrices.
pub fn resolve_nabla_string(
    base: &str,
    lambda: Option<&GaussRat>,
    expr: &str,
    params: &BTreeMap<String, GaussRat>,
) -> Result<Cocycle, Error> {
    let cat = catalog();
    let nablas = cat.nabla_dictionary(base, lambda)?;
    let dim = nablas[0].dim();
    let cleaned: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut acc = Cocycle::zero(dim);
    for (sign, term) in split_terms(&cleaned)? {
        // term := [coeff '*'] 'n' index
        let (coeff_str, nabla_str) = match term.rfind('n') {
            Some(pos) => (&term[..pos], &term[pos..]),
            None => return Err(Error::UnknownNabla(term.clone())),
        };
        let idx: usize = nabla_str[1..]
            .parse()
            .map_err(|_| Error::UnknownNabla(term.clone()))?;
        if idx == 0 || idx > nablas.len() {
            return Err(Error::UnknownNabla(term.clone()));
        }
        let coeff_str = coeff_str.trim_end_matches('*');
        let mut coeff = if coeff_str.is_empty() {
            GaussRat::one()
        } else if let Some(v) = params.get(coeff_str) {
            v.clone()
        } else {
            GaussRat::parse(coeff_str)?
        };
        if !sign {
            coeff = -coeff;
        }
        acc = acc.add(&nablas[idx - 1].scale(&coeff));
    }
    Ok(acc)
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut out = Vec::new();
    let mut sign = true;
    let mut cur = String::new();
    for (i, c) in s.char_indices() {
        match c {
            '+' | '-' if i > 0 && !cur.is_empty() => {
                out.push((sign, std::mem::take(&mut cur)));
                sign = c == '+';
            }
            '+' | '-' if cur.is_empty() => {
                if i > 0 {
                    return Err(Error::Parse(format!("consecutive signs in `{s}`")));
                }
                sign = c == '+';
            }
            _ => cur.push(c),
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((sign, cur));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn build_examples() {
        let cat = catalog();
        // T3_01(2): e1e1 = e2, e1e2 = 2e3, e2e1 = e3.
        let a = cat.build("T3_01", &[q(2)]).unwrap();
        assert_eq!(*a.c(0, 0, 1), q(1));
        assert_eq!(*a.c(0, 1, 2), q(2));
        assert_eq!(*a.c(1, 0, 2), q(1));

        // N4 is the zero algebra.
        let n4 = cat.build("N4", &[]).unwrap();
        assert!(n4.entries().is_empty());

        // D4_22(1/2): Theta = (1+i)/2; e3e1 = Theta e4.
        let d = cat.build("D4_22", &[GaussRat::from_ratio(1, 2)]).unwrap();
        assert_eq!(*d.c(2, 0, 3), GaussRat::from_parts(1, 1, 2));

        // Arity and exclusion errors.
        assert!(matches!(cat.build("T3_01", &[]), Err(Error::Arity { .. })));
        assert!(matches!(
            cat.build("T4_03", &[q(0)]),
            Err(Error::ExcludedParameter { .. })
        ));
        assert!(matches!(
            cat.build("D4_22", &[q(1)]),
            Err(Error::ThetaNotSquare { .. })
        ));
        assert!(matches!(
            cat.build("nope", &[]),
            Err(Error::UnknownEntry(_))
        ));
    }

    #[test]
    fn theta_param_quadratic() {
        for lam in theta_lambda_samples() {
            let tp = ThetaParam::new(lam).unwrap();
            assert!(tp.quadratic_residual().is_zero());
        }
        // The branch values for the sample set.
        let tp = ThetaParam::new(GaussRat::from_ratio(1, 2)).unwrap();
        assert_eq!(tp.theta, GaussRat::from_parts(1, 1, 2));
        let tp = ThetaParam::new(q(-2)).unwrap();
        assert_eq!(tp.theta, q(2));
        let tp = ThetaParam::new(GaussRat::from_ratio(1, 4)).unwrap();
        assert_eq!(tp.theta, GaussRat::from_ratio(1, 2));
        let tp = ThetaParam::new(q(0)).unwrap();
        assert_eq!(tp.theta, q(1));
    }

    #[test]
    fn entry_counts() {
        let cat = catalog();
        let t4: Vec<_> = cat
            .entries()
            .iter()
            .filter(|e| e.name.starts_with("T4_") && !e.unresolved)
            .collect();
        let d4: Vec<_> = cat
            .entries()
            .iter()
            .filter(|e| e.name.starts_with("D4_"))
            .collect();
        assert_eq!(t4.len(), 43);
        assert_eq!(d4.len(), 40);
        let placeholder = cat.get("T4_01").unwrap();
        assert!(placeholder.unresolved);
        assert!(cat.build("T4_01", &[]).is_err());
    }

    #[test]
    fn instance_name_parsing() {
        assert_eq!(parse_instance("N4").unwrap(), ("N4".to_string(), vec![]));
        assert_eq!(
            parse_instance("T3_01(2)").unwrap(),
            ("T3_01".to_string(), vec![q(2)])
        );
        assert_eq!(
            parse_instance("D4_01(lambda=2, alpha=1/2, beta=-3)").unwrap(),
            (
                "D4_01".to_string(),
                vec![q(2), GaussRat::from_ratio(1, 2), q(-3)]
            )
        );
        assert!(parse_instance("T3_01(2").is_err());
    }

    #[test]
    fn nabla_strings_resolve() {
        // "n2+a*n6+n7" over T3*_01 with a=2 is D13 + 2*D23 + D32.
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), q(2));
        let c = resolve_nabla_string("T3*_01", None, "n2+a*n6+n7", &params).unwrap();
        let expected = Cocycle::from_terms(3, &[(1, 3, q(1)), (2, 3, q(2)), (3, 2, q(1))]);
        assert_eq!(c, expected);
        assert!(resolve_nabla_string("T3*_01", None, "n9", &params).is_err());
    }
}
