//! The report tying the enumerations together: counts against the
//! Fuss–Catalan numbers and the bijections between the families.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{order_leq, Budget, Classifier, ObjectSet, RootRunner, SetKind};
use crate::derived::{DerivedCategory, Stalk};
use crate::error::{Error, Result};
use crate::exceptional::silting_to_smc;
use crate::field::Field;
use crate::root_data::{fuss_catalan, make_root_datum, to_u64, Variant};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub silting: u64,
    pub smc_minus_window: u64,
    pub smc_plain_window: u64,
    pub sms: u64,
    pub cluster_tilting: u64,
    pub fuss_catalan: u64,
    pub fuss_catalan_positive: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(name: &str, failure: Option<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: failure.is_none(),
            witness: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub type_label: String,
    pub d: u32,
    pub counts: Counts,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Failure text for a map that should send `sources` bijectively onto
/// `targets`, or `None`.
fn bijection_failure<F: Field>(
    cl: &Classifier<'_, F>,
    sources: &[ObjectSet],
    images: &[core::result::Result<Vec<Stalk>, Error>],
    targets: &[ObjectSet],
) -> Option<String> {
    let wanted: BTreeSet<&[Stalk]> = targets.iter().map(|t| t.elements.as_slice()).collect();
    let mut seen: BTreeSet<&[Stalk]> = BTreeSet::new();
    for (src, img) in sources.iter().zip(images) {
        let img = match img {
            Ok(img) => img,
            Err(e) => return Some(alloc::format!("{}: {e}", cl.describe(&src.elements))),
        };
        if !wanted.contains(img.as_slice()) {
            return Some(alloc::format!(
                "{} maps to {}, which is not in the target family",
                cl.describe(&src.elements),
                cl.describe(img)
            ));
        }
        if !seen.insert(img.as_slice()) {
            return Some(alloc::format!("{} is hit twice", cl.describe(img)));
        }
    }
    wanted
        .iter()
        .find(|t| !seen.contains(*t))
        .map(|t| alloc::format!("{} is not hit", cl.describe(t)))
}

/// Failure text if `A ≤ B` and `f A ≤ f B` ever disagree.
fn order_failure<F: Field>(
    cl: &Classifier<'_, F>,
    sources: &[ObjectSet],
    images: &[Vec<Stalk>],
    image_kind: SetKind,
) -> Option<String> {
    let der = cl.derived();
    let mapped: Vec<ObjectSet> = images
        .iter()
        .map(|e| ObjectSet::new(image_kind, cl.d(), e.clone()))
        .collect();
    for i in 0..sources.len() {
        for j in 0..sources.len() {
            let before = order_leq(der, &sources[i], &sources[j]).ok()?;
            let after = order_leq(der, &mapped[i], &mapped[j]).ok()?;
            if before != after {
                return Some(alloc::format!(
                    "{} ≤ {} is {before} but the images give {after}",
                    cl.describe(&sources[i].elements),
                    cl.describe(&sources[j].elements)
                ));
            }
        }
    }
    None
}

fn bridge_checks<F: Field>(
    cl: &Classifier<'_, F>,
    names: (&str, &str),
    sources: &[ObjectSet],
    targets: &[ObjectSet],
    image_kind: SetKind,
) -> [CheckResult; 2] {
    let images: Vec<_> = sources
        .iter()
        .map(|s| silting_to_smc(cl.derived(), &s.elements))
        .collect();
    let bij = bijection_failure(cl, sources, &images, targets);
    let order = if bij.is_some() {
        Some("skipped: the map is not a bijection".to_string())
    } else {
        let ok: Vec<Vec<Stalk>> = images.into_iter().map(|r| r.expect("checked")).collect();
        order_failure(cl, sources, &ok, image_kind)
    };
    [CheckResult::new(names.0, bij), CheckResult::new(names.1, order)]
}

fn same_sets(a: &[ObjectSet], b: &[ObjectSet]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.elements == y.elements)
}

/// Enumerates every family for `(Q, d)` and checks the bijections and
/// counts between them. Failures are reported in the result, not as errors.
pub fn verify_bijections<F: Field, R: RootRunner>(
    der: &DerivedCategory<F>,
    d: u32,
    runner: &R,
    budget: &Budget,
) -> Result<Report> {
    let ty = der
        .quiver()
        .dynkin_type()
        .ok_or_else(|| Error::InvalidArgument("the quiver is not of Dynkin type".into()))?;
    let datum = make_root_datum(ty)?;
    let as_u64 = |v| to_u64(&v).ok_or_else(|| Error::Arithmetic("count exceeds u64".into()));
    let full = as_u64(fuss_catalan(&datum, d, Variant::Full)?)?;
    let positive = as_u64(fuss_catalan(&datum, d, Variant::Positive)?)?;

    let cl = Classifier::new(der, d)?;
    let run = |kind| cl.enumerate(kind, runner, budget);
    let silting = run(SetKind::Silting)?;
    let dterm = run(SetKind::SiltingDTerm)?;
    let smc_plain = run(SetKind::SmcPlain)?;
    let smc_minus = run(SetKind::SmcMinus)?;
    let hl_plain = run(SetKind::HomLeq0Plain)?;
    let hl_minus = run(SetKind::HomLeq0Minus)?;
    let sms = run(SetKind::Sms)?;
    let ct = run(SetKind::ClusterTilting)?;

    let counts = Counts {
        silting: silting.len() as u64,
        smc_minus_window: smc_minus.len() as u64,
        smc_plain_window: smc_plain.len() as u64,
        sms: sms.len() as u64,
        cluster_tilting: ct.len() as u64,
        fuss_catalan: full,
        fuss_catalan_positive: positive,
    };

    let mut checks = Vec::new();

    let projected: Vec<_> = smc_minus
        .iter()
        .map(|s| {
            let mut img: Vec<Stalk> =
                s.elements.iter().map(|&x| cl.minus().project_stalk(x)).collect();
            img.sort();
            Ok(img)
        })
        .collect();
    checks.push(CheckResult::new(
        "projection_onto_sms",
        bijection_failure(&cl, &smc_minus, &projected, &sms),
    ));

    checks.extend(bridge_checks(
        &cl,
        ("silting_to_smc_bijection", "silting_to_smc_order"),
        &silting,
        &smc_minus,
        SetKind::SmcMinus,
    ));

    let c = &counts;
    let positive_fail = [
        ("silting", c.silting),
        ("smc_minus_window", c.smc_minus_window),
        ("sms", c.sms),
    ]
    .into_iter()
    .find(|&(_, v)| v != positive)
    .map(|(name, v)| alloc::format!("{name} count {v} differs from {positive}"));
    checks.push(CheckResult::new("positive_counts", positive_fail));

    let ct_fail = (c.cluster_tilting != full)
        .then(|| alloc::format!("cluster_tilting count {} differs from {full}", c.cluster_tilting));
    checks.push(CheckResult::new("cluster_tilting_count", ct_fail));

    checks.extend(bridge_checks(
        &cl,
        ("dterm_silting_to_plain_smc_bijection", "dterm_silting_to_plain_smc_order"),
        &dterm,
        &smc_plain,
        SetKind::SmcPlain,
    ));

    let hl_fail = if !same_sets(&hl_plain, &smc_plain) {
        Some(alloc::format!(
            "plain window: {} configurations, {} SMCs",
            hl_plain.len(),
            smc_plain.len()
        ))
    } else if !same_sets(&hl_minus, &smc_minus) {
        Some(alloc::format!(
            "minus window: {} configurations, {} SMCs",
            hl_minus.len(),
            smc_minus.len()
        ))
    } else {
        None
    };
    checks.push(CheckResult::new("homleq0_equals_smc", hl_fail));

    Ok(Report {
        type_label: ty.to_string(),
        d,
        counts,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Sequential;
    use crate::field::Rationals;
    use crate::quiver_rep::Quiver;

    fn report(label: &str, d: u32) -> Report {
        let q = Quiver::dynkin(label.parse().unwrap()).unwrap();
        let der = DerivedCategory::new(&q, &Rationals).unwrap();
        verify_bijections(&der, d, &Sequential, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn a3_d1_passes() {
        let r = report("A3", 1);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.counts.sms, 5);
        assert_eq!(r.counts.cluster_tilting, 14);
    }

    #[test]
    fn a2_d2_passes() {
        let r = report("A2", 2);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.counts.sms, 7);
    }

    #[test]
    fn a1_d5_counts() {
        let r = report("A1", 5);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.counts.sms, 5);
    }
}
