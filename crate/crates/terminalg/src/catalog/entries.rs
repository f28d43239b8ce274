//! Entry metadata and the structure-constant table for every catalog family.
//!
//! Constants are written with 1-based indices `(i, j, k, coeff)` meaning
//! `e_i e_j += coeff * e_k`, exactly as the families are usually displayed.
//! Builders are generic over [`CatalogField`] so the same table also serves
//! parametric (t-dependent) instantiation.

use super::{CatalogField, Ctx};
use crate::error::Error;
use crate::exactnum::GaussRat;

/// Where an entry's Leibniz flag sits: always Leibniz, never, or exactly on
/// a parameter locus.
#[derive(Clone, Copy)]
pub enum LeibnizFlag {
    Always,
    Never,
    /// Leibniz exactly where the predicate holds.
    At(fn(&[GaussRat]) -> bool),
}

/// One named, parameterized catalog family.
pub struct CatalogEntry {
    pub name: &'static str,
    pub dim: usize,
    pub params: &'static [&'static str],
    /// The structure constants mention `Theta(lambda)`.
    pub needs_theta: bool,
    /// Printed exclusion on the parameters, if any: predicate is true when
    /// the parameters are excluded, string is the printed condition.
    pub exclusion: Option<(&'static str, fn(&[GaussRat]) -> bool)>,
    pub leibniz: LeibnizFlag,
    /// Short note on where the family comes from within the catalog.
    pub origin: &'static str,
    /// A placeholder whose defining constants are not recoverable; it cannot
    /// be built and the harness skips it rather than inventing data.
    pub unresolved: bool,
}

impl CatalogEntry {
    /// `Some(printed condition)` when the parameters are excluded.
    pub fn excluded(&self, params: &[GaussRat]) -> Option<&'static str> {
        match self.exclusion {
            Some((cond, test)) if test(params) => Some(cond),
            _ => None,
        }
    }

    pub fn check_params(&self, params: &[GaussRat]) -> Result<(), Error> {
        if params.len() != self.params.len() {
            return Err(Error::Arity {
                name: self.name.to_string(),
                expected: self.params.len(),
                got: params.len(),
            });
        }
        if let Some(cond) = self.excluded(params) {
            return Err(Error::ExcludedParameter {
                name: self.name.to_string(),
                condition: cond.to_string(),
            });
        }
        Ok(())
    }

    /// Whether the entry is flagged Leibniz at the given parameters.
    pub fn leibniz_at(&self, params: &[GaussRat]) -> bool {
        match self.leibniz {
            LeibnizFlag::Always => true,
            LeibnizFlag::Never => false,
            LeibnizFlag::At(p) => p(params),
        }
    }
}

fn lambda_zero(p: &[GaussRat]) -> bool {
    p[0].is_zero()
}

fn alpha0_zero(p: &[GaussRat]) -> bool {
    p[0].is_zero()
}

pub(super) fn all_entries() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    let mut add = |name: &'static str,
                   dim: usize,
                   params: &'static [&'static str],
                   needs_theta: bool,
                   exclusion: Option<(&'static str, fn(&[GaussRat]) -> bool)>,
                   leibniz: LeibnizFlag,
                   origin: &'static str| {
        v.push(CatalogEntry {
            name,
            dim,
            params,
            needs_theta,
            exclusion,
            leibniz,
            origin,
            unresolved: false,
        });
    };
    use LeibnizFlag::{Always, At, Never};

    // Zero algebras and the 2-dimensional seed.
    for (name, dim) in [("N1", 1), ("N2", 2), ("N3", 3), ("N4", 4)] {
        add(name, dim, &[], false, None, Always, "zero multiplication");
    }
    add("T2*_01", 2, &[], false, None, Always, "2-dim base");

    // 3-dimensional bases.
    add("T3*_01", 3, &[], false, None, Always, "3-dim base");
    add("T3*_02", 3, &[], false, None, Always, "3-dim base");
    add("T3*_03", 3, &[], false, None, Always, "3-dim base");
    add("T3*_04", 3, &["lambda"], false, None, Always, "3-dim base");
    add("T3*_05", 3, &[], false, None, Always, "3-dim base");
    add("T3_01", 3, &["lambda"], false, None, Never, "3-dim base");

    // The unique 4-dim non-Leibniz entry with 2-dim annihilator.
    add(
        "T4_02",
        4,
        &[],
        false,
        None,
        Never,
        "2-dim central extension of T2*_01",
    );

    let ext01 = "1-dim central extension of T3*_01";
    add(
        "T4_03",
        4,
        &["alpha"],
        false,
        Some(("alpha != 0", alpha0_zero)),
        Never,
        ext01,
    );
    add(
        "T4_04",
        4,
        &["alpha"],
        false,
        Some(("alpha != 0", alpha0_zero)),
        Never,
        ext01,
    );
    add("T4_05", 4, &[], false, None, Never, ext01);
    add("T4_06", 4, &[], false, None, Never, ext01);
    add("T4_07", 4, &["alpha"], false, None, Never, ext01);
    add("T4_08", 4, &[], false, None, Never, ext01);
    add("T4_09", 4, &[], false, None, Never, ext01);
    add("T4_10", 4, &["alpha"], false, None, Never, ext01);
    add("T4_11", 4, &[], false, None, Never, ext01);
    add("T4_12", 4, &[], false, None, Never, ext01);
    add("T4_13", 4, &[], false, None, Never, ext01);
    add("T4_14", 4, &[], false, None, Never, ext01);
    add("T4_15", 4, &["alpha"], false, None, Never, ext01);
    add("T4_16", 4, &[], false, None, Never, ext01);
    add("T4_17", 4, &["alpha"], false, None, Never, ext01);

    let ext02 = "1-dim central extension of T3*_02";
    add("T4_18", 4, &[], false, None, Never, ext02);
    add("T4_19", 4, &[], false, None, Never, ext02);
    add("T4_20", 4, &[], false, None, Never, ext02);
    add("T4_21", 4, &[], false, None, Never, ext02);
    add("T4_22", 4, &["alpha", "beta"], false, None, Never, ext02);
    add("T4_23", 4, &["alpha", "beta"], false, None, Never, ext02);
    add("T4_24", 4, &["alpha"], false, None, Never, ext02);
    add("T4_25", 4, &["alpha"], false, None, Never, ext02);
    add("T4_26", 4, &["alpha"], false, None, Never, ext02);
    add("T4_27", 4, &["alpha"], false, None, Never, ext02);
    add("T4_28", 4, &["alpha"], false, None, Never, ext02);
    add("T4_29", 4, &["alpha"], false, None, Never, ext02);
    add("T4_30", 4, &["alpha"], false, None, Never, ext02);
    add("T4_31", 4, &["alpha"], false, None, Never, ext02);
    add("T4_32", 4, &[], false, None, Never, ext02);
    add("T4_33", 4, &[], false, None, Never, ext02);
    add("T4_34", 4, &[], false, None, Never, ext02);

    let ext03 = "1-dim central extension of T3*_03";
    add("T4_35", 4, &[], false, None, Never, ext03);
    add("T4_36", 4, &[], false, None, Never, ext03);

    let ext05 = "1-dim central extension of T3*_05";
    add("T4_37", 4, &[], false, None, Never, ext05);
    add("T4_38", 4, &["alpha"], false, None, Never, ext05);

    let ext301 = "1-dim central extension of T3_01";
    add("T4_39", 4, &["lambda"], false, None, Never, ext301);
    add("T4_40", 4, &["lambda"], false, None, Never, ext301);
    add("T4_41", 4, &["alpha"], false, None, Never, ext301);
    add("T4_42", 4, &[], false, None, Never, ext301);
    add("T4_43", 4, &["lambda", "alpha"], false, None, Never, ext301);
    add("T4_44", 4, &[], false, None, Never, ext301);

    let ext04 = "1-dim central extension of T3*_04";
    add(
        "D4_01",
        4,
        &["lambda", "alpha", "beta"],
        false,
        None,
        Never,
        ext04,
    );
    add(
        "D4_02",
        4,
        &["lambda", "alpha", "beta"],
        false,
        None,
        Never,
        ext04,
    );
    add("D4_03", 4, &["lambda", "alpha"], false, None, Never, ext04);
    add("D4_04", 4, &["lambda", "alpha"], false, None, Never, ext04);
    add(
        "D4_05",
        4,
        &["lambda", "alpha"],
        true,
        None,
        At(lambda_zero),
        ext04,
    );
    add("D4_06", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_07", 4, &["lambda"], true, None, At(lambda_zero), ext04);
    add("D4_08", 4, &["lambda"], true, None, Never, ext04);
    add("D4_09", 4, &["lambda", "alpha"], false, None, Never, ext04);
    add("D4_10", 4, &["lambda", "alpha"], false, None, Never, ext04);
    add("D4_11", 4, &["lambda", "alpha"], false, None, Never, ext04);
    add("D4_12", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_13", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_14", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_15", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_16", 4, &["alpha"], false, None, Never, ext04);
    add("D4_17", 4, &["alpha"], false, None, Never, ext04);
    add("D4_18", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_19", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_20", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_21", 4, &["lambda", "alpha"], true, None, Never, ext04);
    add("D4_22", 4, &["lambda"], true, None, Never, ext04);
    add("D4_23", 4, &["lambda"], true, None, At(lambda_zero), ext04);
    add("D4_24", 4, &["lambda"], true, None, Never, ext04);
    add("D4_25", 4, &["lambda"], true, None, At(lambda_zero), ext04);
    add("D4_26", 4, &["lambda"], true, None, Never, ext04);
    add("D4_27", 4, &["lambda"], true, None, Never, ext04);
    add("D4_28", 4, &["lambda"], true, None, Never, ext04);
    add("D4_29", 4, &["lambda"], true, None, Never, ext04);
    add("D4_30", 4, &["lambda"], true, None, Never, ext04);
    add("D4_31", 4, &["lambda"], true, None, Never, ext04);
    add("D4_32", 4, &["lambda"], true, None, Never, ext04);
    add("D4_33", 4, &["lambda"], true, None, Never, ext04);
    add("D4_34", 4, &[], false, None, Never, ext04);
    add("D4_35", 4, &["lambda"], false, None, Never, ext04);
    add("D4_36", 4, &["lambda"], false, None, Never, ext04);
    add("D4_37", 4, &["lambda"], true, None, Never, ext04);
    add("D4_38", 4, &["lambda"], true, None, At(lambda_zero), ext04);
    add("D4_39", 4, &["lambda"], true, None, Never, ext04);
    add("D4_40", 4, &["lambda"], true, None, At(lambda_zero), ext04);

    // The four Leibniz anchor families used by the geometric part.
    add(
        "N3a",
        4,
        &["alpha"],
        false,
        None,
        Always,
        "Leibniz anchor family",
    );
    add("L2", 4, &[], false, None, Always, "Leibniz anchor");
    add("L5", 4, &[], false, None, Always, "Leibniz anchor");
    add("L11", 4, &[], false, None, Always, "Leibniz anchor");

    // The printed enumeration of the 4-dimensional families starts at
    // T4_02; T4_01 stays as an unresolved placeholder with no constants.
    let t4_02 = v
        .iter()
        .position(|e| e.name == "T4_02")
        .expect("T4_02 exists");
    v.insert(
        t4_02,
        CatalogEntry {
            name: "T4_01",
            dim: 4,
            params: &[],
            needs_theta: false,
            exclusion: None,
            leibniz: Never,
            origin: "placeholder; defining constants not recoverable",
            unresolved: true,
        },
    );

    v
}

/// The structure constants of every family, 1-based sparse triples.
/// `None` for unknown names.
#[allow(clippy::too_many_lines)]
pub(super) fn raw_constants<F: CatalogField>(
    name: &str,
    ctx: &Ctx<F>,
) -> Option<Vec<(usize, usize, usize, F)>> {
    let one = F::one;
    let k = |n: i64| F::from_gauss(GaussRat::from_int(n));
    let im = || F::from_gauss(GaussRat::i());
    let p = |i: usize| ctx.param(i).clone();

    Some(match name {
        "N1" | "N2" | "N3" | "N4" => Vec::new(),
        "T2*_01" => vec![(1, 1, 2, one())],

        "T3*_01" => vec![(1, 1, 2, one())],
        "T3*_02" => vec![(1, 1, 3, one()), (2, 2, 3, one())],
        "T3*_03" => vec![(1, 2, 3, one()), (2, 1, 3, k(-1))],
        "T3*_04" => vec![(1, 1, 3, p(0)), (2, 1, 3, one()), (2, 2, 3, one())],
        "T3*_05" => vec![(1, 1, 2, one()), (1, 2, 3, one())],
        "T3_01" => vec![(1, 1, 2, one()), (1, 2, 3, p(0)), (2, 1, 3, one())],

        "T4_02" => vec![(1, 1, 2, one()), (1, 2, 4, one()), (2, 1, 3, one())],

        "T4_03" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, one()),
            (2, 3, 4, p(0)),
            (3, 2, 4, one()),
            (3, 3, 4, one()),
        ],
        "T4_04" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, one()),
            (2, 3, 4, p(0)),
            (3, 2, 4, one()),
        ],
        "T4_05" => vec![
            (1, 1, 2, one()),
            (1, 3, 4, one()),
            (2, 3, 4, k(-1)),
            (3, 2, 4, one()),
            (3, 3, 4, one()),
        ],
        "T4_06" => vec![
            (1, 1, 2, one()),
            (1, 3, 4, one()),
            (2, 1, 4, one()),
            (3, 2, 4, one()),
        ],
        "T4_07" => vec![
            (1, 1, 2, one()),
            (1, 3, 4, one()),
            (2, 3, 4, p(0)),
            (3, 2, 4, one()),
        ],
        "T4_08" => vec![
            (1, 1, 2, one()),
            (2, 3, 4, k(-1)),
            (3, 2, 4, one()),
            (3, 3, 4, one()),
        ],
        "T4_09" => vec![(1, 1, 2, one()), (2, 1, 4, one()), (3, 2, 4, one())],
        "T4_10" => vec![(1, 1, 2, one()), (2, 3, 4, p(0)), (3, 2, 4, one())],
        "T4_11" => vec![(1, 1, 2, one()), (1, 2, 4, one()), (2, 3, 4, one())],
        "T4_12" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, one()),
            (2, 3, 4, one()),
            (3, 1, 4, one()),
        ],
        "T4_13" => vec![(1, 1, 2, one()), (2, 3, 4, one()), (3, 1, 4, one())],
        "T4_14" => vec![(1, 1, 2, one()), (2, 3, 4, one())],
        "T4_15" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, p(0)),
            (1, 3, 4, one()),
            (2, 1, 4, one()),
        ],
        "T4_16" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, one()),
            (1, 3, 4, one()),
            (2, 1, 4, one()),
            (3, 3, 4, one()),
        ],
        "T4_17" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, p(0)),
            (2, 1, 4, one()),
            (3, 3, 4, one()),
        ],

        "T4_18" => vec![(1, 1, 3, one()), (1, 3, 4, one()), (2, 2, 3, one())],
        "T4_19" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, one()),
            (2, 1, 4, one()),
            (2, 2, 3, one()),
        ],
        "T4_20" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, one()),
            (1, 3, 4, im()),
            (2, 2, 3, one()),
            (2, 3, 4, one()),
        ],
        "T4_21" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, im()),
            (2, 2, 3, one()),
            (2, 3, 4, one()),
        ],
        "T4_22" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, p(0)),
            (2, 2, 3, one()),
            (2, 3, 4, p(1)),
            (3, 1, 4, one()),
        ],
        "T4_23" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, one()),
            (1, 3, 4, p(0)),
            (2, 2, 3, one()),
            (2, 3, 4, p(1)),
            (3, 1, 4, one()),
        ],
        "T4_24" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, p(0)),
            (2, 1, 4, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
        ],
        "T4_25" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, one()),
            (1, 3, 4, k(-1)),
            (2, 1, 4, p(0)),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
        ],
        "T4_26" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, one()),
            (1, 2, 4, p(0)),
            (2, 2, 3, one()),
            (2, 3, 4, im()),
            (3, 1, 4, one()),
        ],
        "T4_27" => vec![
            (1, 1, 3, one()),
            (1, 2, 4, one()),
            (2, 2, 3, one()),
            (2, 3, 4, p(0)),
            (3, 1, 4, one()),
        ],
        "T4_28" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, one()),
            (1, 3, 4, p(0)),
            (2, 2, 3, one()),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_29" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, p(0)),
            (2, 2, 3, one()),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_30" => vec![
            (1, 1, 3, one()),
            (1, 2, 4, one()),
            (1, 3, 4, im().mul(&p(0))),
            (2, 2, 3, one()),
            (2, 3, 4, p(0)),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_31" => vec![
            (1, 1, 3, one()),
            (1, 3, 4, im().mul(&p(0))),
            (2, 2, 3, one()),
            (2, 3, 4, p(0)),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_32" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, im()),
            (1, 2, 4, one()),
            (1, 3, 4, im()),
            (2, 2, 3, one()),
            (2, 3, 4, one()),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_33" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, im()),
            (1, 2, 4, one()),
            (1, 3, 4, im().neg()),
            (2, 2, 3, one()),
            (2, 3, 4, k(-1)),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],
        "T4_34" => vec![
            (1, 1, 3, one()),
            (1, 1, 4, im().neg()),
            (1, 2, 4, one()),
            (1, 3, 4, im().neg()),
            (2, 2, 3, one()),
            (2, 3, 4, k(-1)),
            (3, 1, 4, im()),
            (3, 2, 4, one()),
        ],

        "T4_35" => vec![
            (1, 2, 3, one()),
            (2, 1, 3, k(-1)),
            (2, 2, 4, one()),
            (2, 3, 4, one()),
            (3, 1, 4, one()),
            (3, 2, 4, k(-1)),
        ],
        "T4_36" => vec![
            (1, 2, 3, one()),
            (2, 1, 3, k(-1)),
            (2, 3, 4, one()),
            (3, 1, 4, one()),
            (3, 2, 4, k(-1)),
        ],

        "T4_37" => vec![
            (1, 1, 2, one()),
            (1, 2, 3, one()),
            (1, 3, 4, one()),
            (2, 1, 4, one()),
        ],
        "T4_38" => vec![
            (1, 1, 2, one()),
            (1, 2, 3, one()),
            (1, 3, 4, p(0)),
            (2, 2, 4, one()),
            (3, 1, 4, k(-3)),
        ],

        "T4_39" => {
            let l = p(0);
            vec![
                (1, 1, 2, one()),
                (1, 2, 3, l.clone()),
                (1, 2, 4, one()),
                (1, 3, 4, l.sub(&one())),
                (2, 1, 3, one()),
                (3, 1, 4, k(3)),
            ]
        }
        "T4_40" => {
            let l = p(0);
            // (lambda+1)(2*lambda+1) and 2*lambda^2 + 5*lambda - 1.
            let c = l.add(&one()).mul(&k(2).mul(&l).add(&one()));
            let d = k(2).mul(&l.mul(&l)).add(&k(5).mul(&l)).sub(&one());
            vec![
                (1, 1, 2, one()),
                (1, 2, 3, l.clone()),
                (1, 2, 4, c.clone()),
                (1, 3, 4, d),
                (2, 1, 3, one()),
                (2, 2, 4, c),
                (3, 1, 4, k(6)),
            ]
        }
        "T4_41" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, p(0)),
            (1, 3, 4, k(-1)),
            (2, 1, 3, one()),
            (2, 3, 4, one()),
            (3, 1, 4, k(3)),
        ],
        "T4_42" => vec![
            (1, 1, 2, one()),
            (1, 2, 4, one()),
            (2, 1, 3, one()),
            (2, 3, 4, one()),
        ],
        "T4_43" => {
            let l = p(0);
            let a = p(1);
            // alpha*(lambda - 1) + 1.
            let c = a.mul(&l.sub(&one())).add(&one());
            vec![
                (1, 1, 2, one()),
                (1, 2, 3, l),
                (1, 3, 4, c),
                (2, 1, 3, one()),
                (2, 2, 4, one()),
                (3, 1, 4, k(3).mul(&a)),
            ]
        }
        "T4_44" => vec![(1, 1, 2, one()), (2, 1, 3, one()), (2, 3, 4, one())],

        "D4_01" => vec![
            (1, 1, 3, p(0)),
            (1, 1, 4, one()),
            (1, 3, 4, p(1)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (2, 3, 4, p(2)),
            (3, 1, 4, one()),
        ],
        "D4_02" => vec![
            (1, 1, 3, p(0)),
            (1, 3, 4, p(1)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (2, 3, 4, p(2)),
            (3, 1, 4, one()),
        ],
        "D4_03" => vec![
            (1, 1, 3, p(0)),
            (1, 2, 4, one()),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (2, 3, 4, p(1)),
            (3, 1, 4, one()),
        ],
        "D4_04" => vec![
            (1, 1, 3, p(0)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (2, 3, 4, p(1)),
            (3, 1, 4, one()),
        ],
        "D4_05" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, l.clone()),
                (1, 2, 4, l.clone()),
                (2, 1, 3, one()),
                (2, 1, 4, l.mul(&p(1))),
                (2, 2, 3, one()),
                (2, 3, 4, th),
                (3, 1, 4, l),
            ]
        }
        "D4_06" => {
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, p(0)),
                (1, 2, 4, one()),
                (2, 1, 3, one()),
                (2, 1, 4, p(1)),
                (2, 2, 3, one()),
                (
                    2,
                    3,
                    4,
                    th.inv().expect("Theta is nonzero under the branch rule"),
                ),
                (3, 1, 4, one()),
            ]
        }
        "D4_07" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, l.clone()),
                (2, 1, 3, one()),
                (2, 1, 4, l.clone()),
                (2, 2, 3, one()),
                (2, 3, 4, th),
                (3, 1, 4, l),
            ]
        }
        "D4_08" => {
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, p(0)),
                (2, 1, 3, one()),
                (2, 1, 4, one()),
                (2, 2, 3, one()),
                (
                    2,
                    3,
                    4,
                    th.inv().expect("Theta is nonzero under the branch rule"),
                ),
                (3, 1, 4, one()),
            ]
        }
        "D4_09" => vec![
            (1, 1, 3, p(0)),
            (1, 2, 4, one()),
            (1, 3, 4, p(1)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
        ],
        "D4_10" => vec![
            (1, 1, 3, p(0)),
            (1, 3, 4, p(1)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
        ],
        "D4_11" => vec![
            (1, 1, 3, p(0)),
            (1, 1, 4, one()),
            (1, 2, 4, p(1)),
            (1, 3, 4, k(-1)),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
        ],
        "D4_12" | "D4_13" | "D4_14" | "D4_15" => {
            let th = ctx.theta().clone();
            let factor = match name {
                "D4_12" | "D4_14" => th,
                _ => one().sub(&th),
            };
            let mut v = vec![
                (1, 1, 3, p(0)),
                (1, 3, 4, p(1)),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (3, 1, 4, factor),
                (3, 2, 4, one()),
            ];
            if matches!(name, "D4_12" | "D4_13") {
                v.push((1, 1, 4, one()));
            }
            v
        }
        "D4_16" => vec![
            (1, 3, 4, p(0)),
            (2, 1, 3, one()),
            (2, 1, 4, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
            (3, 2, 4, one()),
        ],
        "D4_17" => vec![
            (1, 1, 4, one()),
            (1, 3, 4, k(-1)),
            (2, 1, 3, one()),
            (2, 1, 4, p(0)),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
            (3, 2, 4, one()),
        ],
        "D4_18" | "D4_19" | "D4_20" | "D4_21" => {
            let th = ctx.theta().clone();
            let factor = match name {
                "D4_18" | "D4_20" => th,
                _ => one().sub(&th),
            };
            let mut v = vec![
                (1, 1, 3, p(0)),
                (1, 3, 4, factor.mul(&p(1))),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, p(1)),
                (3, 1, 4, factor),
                (3, 2, 4, one()),
            ];
            if matches!(name, "D4_18" | "D4_19") {
                v.push((1, 1, 4, one()));
            }
            v
        }
        "D4_22" => {
            let l = p(0);
            let th = ctx.theta().clone();
            let thinv = th.inv().expect("Theta is nonzero under the branch rule");
            vec![
                (1, 1, 3, l.clone()),
                (1, 1, 4, one().sub(&k(2).mul(&l))),
                (1, 2, 4, one()),
                (1, 3, 4, th.sub(&one())),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, one().sub(&thinv)),
                (3, 1, 4, th),
                (3, 2, 4, one()),
            ]
        }
        "D4_23" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, l.clone()),
                (1, 1, 4, l.mul(&one().sub(&k(2).mul(&l)))),
                (1, 2, 4, l.clone()),
                (1, 3, 4, l.mul(&th).neg()),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, th.mul(&th).neg()),
                (3, 1, 4, l.mul(&one().sub(&th))),
                (3, 2, 4, l),
            ]
        }
        "D4_24" => {
            let l = p(0);
            let th = ctx.theta().clone();
            let thinv = th.inv().expect("Theta is nonzero under the branch rule");
            vec![
                (1, 1, 3, l),
                (1, 1, 4, th.clone()),
                (1, 2, 4, one()),
                (1, 3, 4, th.sub(&one())),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, one().sub(&thinv)),
                (3, 1, 4, th),
                (3, 2, 4, one()),
            ]
        }
        "D4_25" => {
            let l = p(0);
            let th = ctx.theta().clone();
            vec![
                (1, 1, 3, l.clone()),
                (1, 1, 4, l.mul(&one().sub(&th))),
                (1, 2, 4, l.clone()),
                (1, 3, 4, l.mul(&th).neg()),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, th.mul(&th).neg()),
                (3, 1, 4, l.mul(&one().sub(&th))),
                (3, 2, 4, l),
            ]
        }
        "D4_26" | "D4_27" | "D4_28" | "D4_29" => {
            let l = p(0);
            let th = ctx.theta().clone();
            let (head, e13, e31) = match name {
                "D4_26" => (th.clone(), th.neg(), th.clone()),
                "D4_27" => (one().sub(&th), th.sub(&one()), one().sub(&th)),
                "D4_28" => (one().sub(&th), th.neg(), th.clone()),
                _ => (th.clone(), th.sub(&one()), one().sub(&th)),
            };
            vec![
                (1, 1, 3, l),
                (1, 1, 4, head),
                (1, 2, 4, one()),
                (1, 3, 4, e13),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, k(-1)),
                (3, 1, 4, e31),
                (3, 2, 4, one()),
            ]
        }
        "D4_30" | "D4_31" | "D4_32" | "D4_33" => {
            let l = p(0);
            let th = ctx.theta().clone();
            let (e13, e31) = match name {
                "D4_30" | "D4_32" => (th.sub(&one()), th.clone()),
                _ => (th.neg(), one().sub(&th)),
            };
            let mut v = vec![
                (1, 1, 3, l),
                (1, 3, 4, e13),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, k(-1)),
                (3, 1, 4, e31),
                (3, 2, 4, one()),
            ];
            if matches!(name, "D4_30" | "D4_31") {
                v.push((1, 1, 4, one()));
            }
            v
        }
        "D4_34" => vec![
            (1, 1, 4, one()),
            (2, 1, 3, one()),
            (2, 1, 4, one()),
            (2, 2, 3, one()),
            (3, 1, 4, one()),
            (3, 2, 4, one()),
        ],
        "D4_35" => vec![
            (1, 1, 3, p(0)),
            (1, 3, 4, one()),
            (2, 1, 3, one()),
            (2, 1, 4, one()),
            (2, 2, 3, one()),
        ],
        "D4_36" => vec![
            (1, 1, 3, p(0)),
            (1, 3, 4, one()),
            (2, 1, 3, one()),
            (2, 2, 3, one()),
        ],
        "D4_37" | "D4_38" | "D4_39" | "D4_40" => {
            let th = ctx.theta().clone();
            let factor = match name {
                "D4_37" | "D4_39" => th,
                _ => one().sub(&th),
            };
            let mut v = vec![
                (1, 1, 3, p(0)),
                (1, 3, 4, factor),
                (2, 1, 3, one()),
                (2, 2, 3, one()),
                (2, 3, 4, one()),
            ];
            if matches!(name, "D4_37" | "D4_38") {
                v.push((1, 1, 4, one()));
            }
            v
        }

        "N3a" => {
            let a = p(0);
            vec![
                (1, 1, 4, one()),
                (1, 2, 4, a.neg()),
                (2, 1, 4, a),
                (2, 2, 4, one()),
                (3, 3, 4, one()),
            ]
        }
        "L2" => vec![(1, 1, 2, one()), (1, 2, 3, one()), (1, 3, 4, one())],
        "L5" => vec![
            (1, 1, 3, one()),
            (1, 2, 3, one()),
            (1, 3, 4, one()),
            (2, 2, 4, one()),
        ],
        "L11" => vec![
            (1, 1, 4, one()),
            (1, 2, 3, one()),
            (1, 3, 4, one()),
            (2, 1, 3, k(-1)),
            (2, 2, 4, one()),
            (3, 1, 4, k(-1)),
        ],

        _ => return None,
    })
}
