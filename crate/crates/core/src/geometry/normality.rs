use rayon::prelude::*;

use super::{default_triangulation, face_partition, hilbert_basis_simplicial, Triangulation};
use crate::error::Result;
use crate::report::{face_label, CertificateReport, CheckItem};
use crate::toric::{Configuration, Semigroup};

/// Checks that `A ∩ cone(A_σ)` generates the Hilbert basis of every facet cone.
pub fn is_delta_normal(c: &Configuration, t: &Triangulation) -> Result<CertificateReport> {
    let items: Vec<Vec<CheckItem>> = t
        .facets()
        .par_iter()
        .map(|sigma| -> Result<Vec<CheckItem>> {
            let part = face_partition(c, sigma)?;
            let semigroup = Semigroup::of_columns(c, &part.closed())?;
            let hb = hilbert_basis_simplicial(c, sigma)?;
            let subject = format!("facet {}", face_label(sigma));
            let mut out = Vec::new();
            for h in &hb {
                if !semigroup.contains(h) {
                    out.push(CheckItem {
                        subject: subject.clone(),
                        passed: false,
                        detail: "Hilbert basis element outside N(A ∩ cone)".into(),
                        witness: Some(h.clone()),
                    });
                }
            }
            if out.is_empty() {
                out.push(CheckItem {
                    subject,
                    passed: true,
                    detail: format!("{} Hilbert basis elements generated", hb.len()),
                    witness: None,
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut report = CertificateReport::new("delta-normal");
    items.into_iter().flatten().for_each(|i| report.push(i));
    Ok(report)
}

/// Normality test: every simplicial Hilbert basis element of some regular
/// triangulation must lie in `N·A`.
pub fn is_normal(c: &Configuration) -> Result<CertificateReport> {
    let semigroup = Semigroup::new(c.clone())?;
    let t = default_triangulation(c)?;
    is_normal_with(c, &t, &semigroup)
}

/// As [`is_normal`], with a given triangulation.
pub fn is_normal_over(c: &Configuration, t: &Triangulation) -> Result<CertificateReport> {
    let semigroup = Semigroup::new(c.clone())?;
    is_normal_with(c, t, &semigroup)
}

fn is_normal_with(
    c: &Configuration,
    t: &Triangulation,
    semigroup: &Semigroup,
) -> Result<CertificateReport> {
    let per_facet: Vec<(Vec<usize>, Vec<Vec<i64>>, usize)> = t
        .facets()
        .par_iter()
        .map(|sigma| -> Result<_> {
            let hb = hilbert_basis_simplicial(c, sigma)?;
            let missing: Vec<Vec<i64>> =
                hb.iter().filter(|h| !semigroup.contains(h)).cloned().collect();
            Ok((sigma.clone(), missing, hb.len()))
        })
        .collect::<Result<_>>()?;
    let mut report = CertificateReport::new("normal");
    for (sigma, missing, total) in per_facet {
        let subject = format!("facet {}", face_label(&sigma));
        if missing.is_empty() {
            report.pass(subject, format!("{total} Hilbert basis elements in N·A"));
            continue;
        }
        for m in missing {
            report.fail(subject.clone(), "Hilbert basis element outside N·A", Some(m));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::order_triangulation;
    use crate::testutil::{example_config, example_order};

    #[test]
    fn example_is_delta_normal_and_normal() {
        let c = example_config();
        let t = order_triangulation(&c, &example_order()).unwrap();
        assert!(is_delta_normal(&c, &t).unwrap().passed);
        assert!(is_normal(&c).unwrap().passed);
    }

    #[test]
    fn gap_in_the_line_is_not_normal() {
        let c = Configuration::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 3]]).unwrap();
        let r = is_normal(&c).unwrap();
        assert!(!r.passed);
        assert_eq!(r.witnesses(), vec![&[1i64, 2][..]]);
        let t = Triangulation::new(vec![vec![0, 1], vec![1, 2]]);
        let d = is_delta_normal(&c, &t).unwrap();
        assert!(!d.passed);
        assert_eq!(d.witnesses(), vec![&[1i64, 2][..]]);
        // the coarse triangulation hides column 2 inside a single cone
        let coarse = Triangulation::new(vec![vec![0, 2]]);
        assert!(!is_delta_normal(&c, &coarse).unwrap().passed);
    }

    #[test]
    fn unit_simplex_is_normal() {
        let c = Configuration::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = Triangulation::new(vec![vec![0, 1, 2]]);
        assert!(is_delta_normal(&c, &t).unwrap().passed);
        assert!(is_normal(&c).unwrap().passed);
    }

    #[test]
    fn non_pointed_is_an_error() {
        let c = Configuration::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(is_normal(&c).is_err());
    }
}
