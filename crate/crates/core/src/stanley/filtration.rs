use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::special::{restriction_of, SpecialPairs};
use crate::error::{Error, Result};
use crate::geometry::{Shelling, Triangulation};
use crate::ideals::{Monomial, MonomialIdeal, StandardPair};
use crate::report::{face_label, CertificateReport};

/// A pair `(x^u · m^σ_u, σ)` of the Stanley decomposition, remembering the
/// standard pair root `x^u` and the restriction face `Q` behind `m^σ_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyPair {
    pub root: Monomial,
    pub face: Vec<usize>,
    pub original_root: Monomial,
    pub q: Vec<usize>,
}

impl StanleyPair {
    pub fn as_pair(&self) -> StandardPair {
        StandardPair::new(self.root.clone(), self.face.clone())
    }
}

/// An ordered list of pairs cut into local lists; `boundaries[i]` is the
/// number of pairs in the first `i + 1` lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyFiltration {
    pub pairs: Vec<StanleyPair>,
    pub boundaries: Vec<usize>,
    /// The global shelling the lists follow, when there is one.
    pub shelling: Option<Vec<Vec<usize>>>,
}

impl StanleyFiltration {
    /// A single local list of plain standard pairs, in the given order.
    pub fn from_pairs(pairs: Vec<StandardPair>) -> Self {
        let n = pairs.len();
        Self {
            pairs: pairs
                .into_iter()
                .map(|p| StanleyPair {
                    original_root: p.root.clone(),
                    root: p.root,
                    face: p.face,
                    q: Vec::new(),
                })
                .collect(),
            boundaries: vec![n],
            shelling: None,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The local lists in order.
    pub fn blocks(&self) -> Vec<&[StanleyPair]> {
        let mut start = 0;
        self.boundaries
            .iter()
            .map(|&end| {
                let b = &self.pairs[start..end];
                start = end;
                b
            })
            .collect()
    }
}

/// Shifts every special pair by its shelling monomial.
pub fn stanley_decomposition(s: &SpecialPairs, global: &Shelling) -> Result<Vec<StanleyPair>> {
    let mut out = Vec::with_capacity(s.len());
    for block in s.facets() {
        for p in &block.pairs {
            let root = &p.pair.root;
            let q = restriction_of(s, root, &block.facet, global)?;
            out.push(StanleyPair {
                root: root.mul(&Monomial::product_of(s.nvars(), &q)),
                face: block.facet.clone(),
                original_root: root.clone(),
                q,
            });
        }
    }
    Ok(out)
}

/// Local lists in shelling order, each sorted by the original root
/// (degree first), then by the shifted root.
pub fn algorithm_list(d: &[StanleyPair], global: &Shelling) -> Result<StanleyFiltration> {
    if let Some(p) = d.iter().find(|p| global.position(&p.face).is_none()) {
        return Err(Error::NotAFace(p.face.clone()));
    }
    let mut pairs = Vec::with_capacity(d.len());
    let mut boundaries = Vec::with_capacity(global.len());
    for facet in global.facets() {
        let mut local: Vec<StanleyPair> = d.iter().filter(|p| p.face == *facet).cloned().collect();
        local.sort_by(|a, b| {
            a.original_root
                .cmp(&b.original_root)
                .then_with(|| a.root.cmp(&b.root))
        });
        pairs.extend(local);
        boundaries.push(pairs.len());
    }
    Ok(StanleyFiltration {
        pairs,
        boundaries,
        shelling: Some(global.facets().to_vec()),
    })
}

/// Truncation degree used when none is given.
pub fn default_check_degree(m: &MonomialIdeal) -> u64 {
    m.max_degree() + 3
}

/// Failures of one kind beyond this count are summarised.
const MAX_WITNESSES: usize = 10;

/// Checks the filtration property up to degree `max_degree`.
///
/// With `p(m)` the pair covering a standard monomial `m`, every prefix
/// condition holds iff the pairs partition the standard monomials and no
/// later pair root divides `m`.
pub fn verify_filtration(m: &MonomialIdeal, f: &StanleyFiltration, max_degree: u64) -> CertificateReport {
    let mut report = CertificateReport::new("stanley-filtration");
    let n = m.nvars();
    if let Some(bad) = f
        .pairs
        .iter()
        .find(|p| p.root.nvars() != n || p.face.iter().any(|&i| i >= n))
    {
        report.fail(
            "input",
            format!("pair over a different ring: root {:?}", bad.root),
            None,
        );
        return report;
    }

    check_local_order(f, &mut report);

    let mut cover: HashMap<Monomial, Vec<usize>> = HashMap::new();
    let mut in_ideal = Vec::new();
    for (k, p) in f.pairs.iter().enumerate() {
        for x in coset_up_to(&p.root, &p.face, max_degree) {
            if m.contains(&x) {
                in_ideal.push((k, x));
                continue;
            }
            cover.entry(x).or_default().push(k);
        }
    }
    summarise(
        &mut report,
        "pairs avoid M",
        in_ideal.iter().map(|(k, x)| (format!("pair {} covers a monomial of M", k + 1), x)),
    );

    let standard = m.standard_monomials_up_to(max_degree);
    let mut uncovered = Vec::new();
    let mut repeated = Vec::new();
    let mut early = Vec::new();
    for x in &standard {
        match cover.get(x).map(Vec::as_slice) {
            None | Some([]) => uncovered.push(x),
            Some([p]) => {
                if let Some(later) = (p + 1..f.len()).find(|&k| f.pairs[k].root.divides(x)) {
                    early.push((*p, later, x));
                }
            }
            Some(ks) => repeated.push((ks.to_vec(), x)),
        }
    }
    summarise(
        &mut report,
        "every standard monomial covered",
        uncovered.iter().map(|x| ("not covered by any pair".to_owned(), *x)),
    );
    summarise(
        &mut report,
        "covering is disjoint",
        repeated.iter().map(|(ks, x)| {
            let ks: Vec<usize> = ks.iter().map(|k| k + 1).collect();
            (format!("covered by pairs {ks:?}"), *x)
        }),
    );
    summarise(
        &mut report,
        "prefixes decompose M_j",
        early.iter().map(|(p, later, x)| {
            (
                format!(
                    "prefix {} covers a multiple of the root of pair {}",
                    p + 1,
                    later + 1
                ),
                *x,
            )
        }),
    );
    if report.passed {
        report.pass(
            "summary",
            format!(
                "{} pairs, {} standard monomials up to degree {max_degree}",
                f.len(),
                standard.len()
            ),
        );
    }
    report
}

fn check_local_order(f: &StanleyFiltration, report: &mut CertificateReport) {
    let mut bad = Vec::new();
    for (b, block) in f.blocks().iter().enumerate() {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                if block[j].root.divides(&block[i].root) {
                    bad.push((b, &block[i].root));
                }
            }
        }
    }
    summarise(
        report,
        "local lists respect divisibility",
        bad.into_iter().map(|(b, r)| {
            (
                format!("list {} places a multiple before its divisor", b + 1),
                r,
            )
        }),
    );
}

fn summarise<'a>(
    report: &mut CertificateReport,
    subject: &str,
    failures: impl Iterator<Item = (String, &'a Monomial)>,
) {
    let mut count = 0usize;
    for (detail, x) in failures {
        if count < MAX_WITNESSES {
            report.fail(subject, detail, Some(x.to_i64()));
        }
        count += 1;
    }
    if count > MAX_WITNESSES {
        report.fail(
            subject,
            format!("{} further failures omitted", count - MAX_WITNESSES),
            None,
        );
    }
}

/// `root · x^v` for every `v` supported on `face` with total degree at most `max_degree`.
fn coset_up_to(root: &Monomial, face: &[usize], max_degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let Some(budget) = max_degree.checked_sub(root.degree()) else {
        return out;
    };
    let mut e = root.exponents().to_vec();
    grow(face, 0, budget, &mut e, &mut out);
    out
}

fn grow(face: &[usize], pos: usize, budget: u64, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if pos == face.len() {
        out.push(Monomial::new(e.clone()));
        return;
    }
    let i = face[pos];
    let base = e[i];
    for k in 0..=budget {
        e[i] = base + k as u32;
        grow(face, pos + 1, budget - k, e, out);
    }
    e[i] = base;
}

/// A filtration whose faces are all facets of `T` certifies that `M` is
/// Cohen-Macaulay.
pub fn certify_cm(
    m: &MonomialIdeal,
    f: &StanleyFiltration,
    t: &Triangulation,
    max_degree: u64,
) -> CertificateReport {
    let mut report = CertificateReport::new("cohen-macaulay");
    let mut faces: Vec<&Vec<usize>> = f.pairs.iter().map(|p| &p.face).collect();
    faces.sort();
    faces.dedup();
    let mut all_facets = true;
    for face in faces {
        if !t.contains_facet(face) {
            all_facets = false;
            report.fail(
                format!("face {}", face_label(face)),
                "not a facet of the triangulation",
                Some(face.iter().map(|&i| i as i64).collect()),
            );
        }
    }
    if all_facets {
        report.pass("faces", "every face is a facet");
    }
    report.absorb(verify_filtration(m, f, max_degree));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::order_triangulation;
    use crate::ideals::{default_names, minimalize, standard_pairs};
    use crate::stanley::special_pairs;
    use crate::testutil::{example_config, example_j, example_order, faces};

    fn printed_shelling() -> Shelling {
        Shelling::from_order(faces(&[&[4, 11, 12], &[11, 12, 13], &[4, 11, 13], &[1, 4, 13]])).unwrap()
    }

    fn example_filtration() -> StanleyFiltration {
        let c = example_config();
        let t = order_triangulation(&c, &example_order()).unwrap();
        let s = special_pairs(&c, &t, &example_order()).unwrap();
        let global = printed_shelling();
        algorithm_list(&stanley_decomposition(&s, &global).unwrap(), &global).unwrap()
    }

    #[test]
    fn example_lists_match_the_fixture() {
        let f = example_filtration();
        let c = example_config();
        let names = c.names();
        let text = include_str!("../../tests/fixtures/example_filtration.txt");
        let mut blocks = Vec::new();
        for line in text.lines().filter(|l| !l.starts_with('#')) {
            let (head, body) = line.split_once(':').unwrap();
            if head == "shelling" {
                continue;
            }
            let face: Vec<usize> = head.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1).collect();
            let entries: Vec<(String, String)> = body
                .split_whitespace()
                .map(|e| {
                    let (r, o) = e.split_once(':').unwrap();
                    (r.to_owned(), o.to_owned())
                })
                .collect();
            blocks.push((face, entries));
        }
        let got = f.blocks();
        assert_eq!(got.len(), blocks.len());
        for (g, (face, entries)) in got.iter().zip(&blocks) {
            assert_eq!(g.len(), entries.len());
            for (p, (r, o)) in g.iter().zip(entries) {
                assert_eq!(&p.face, face);
                assert_eq!(p.root, Monomial::parse(r, names).unwrap());
                assert_eq!(p.original_root, Monomial::parse(o, names).unwrap());
            }
        }
        assert_eq!(f.boundaries, vec![2, 3, 6, 15]);
    }

    #[test]
    fn example_filtration_verifies() {
        let f = example_filtration();
        let j = example_j();
        let r = verify_filtration(&j, &f, 6);
        assert!(r.passed, "{r}");
        let c = example_config();
        let t = order_triangulation(&c, &example_order()).unwrap();
        assert!(certify_cm(&j, &f, &t, 6).passed);
    }

    #[test]
    fn root_blocks_partition_their_pairs() {
        let c = example_config();
        let t = order_triangulation(&c, &example_order()).unwrap();
        let s = special_pairs(&c, &t, &example_order()).unwrap();
        let d = stanley_decomposition(&s, &printed_shelling()).unwrap();
        for root in s.roots() {
            let block: Vec<&StanleyPair> = d.iter().filter(|p| p.original_root == root).collect();
            assert!(block.iter().filter(|p| p.q.is_empty()).count() == 1);
            let mut shifted: Vec<Monomial> = block.iter().flat_map(|p| coset_up_to(&p.root, &p.face, 7)).collect();
            let mut plain: Vec<Monomial> = block.iter().flat_map(|p| coset_up_to(&p.original_root, &p.face, 7)).collect();
            let before = shifted.len();
            shifted.sort();
            shifted.dedup();
            assert_eq!(before, shifted.len(), "overlap in block of {root:?}");
            plain.sort();
            plain.dedup();
            assert_eq!(shifted, plain);
        }
    }

    fn ms_ideal() -> (Vec<String>, MonomialIdeal) {
        let names: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
        let m = minimalize(3, vec![Monomial::parse("x1*x2*x3", &names).unwrap()]).unwrap();
        (names, m)
    }

    #[test]
    fn three_pair_filtration_of_the_triangle() {
        let (names, m) = ms_ideal();
        let p = |r: &str, f: &[usize]| StandardPair::new(Monomial::parse(r, &names).unwrap(), f.to_vec());
        let f = StanleyFiltration::from_pairs(vec![p("1", &[0, 2]), p("x2", &[1, 2]), p("x1*x2", &[0, 1])]);
        assert!(verify_filtration(&m, &f, 6).passed);
        let t = Triangulation::new(vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(certify_cm(&m, &f, &t, 6).passed);
        let coarse = Triangulation::new(vec![vec![0, 1, 2]]);
        let r = certify_cm(&m, &f, &coarse, 6);
        assert!(!r.passed);
    }

    #[test]
    fn no_ordering_of_the_four_pairs_works() {
        let (names, m) = ms_ideal();
        let p = |r: &str, f: &[usize]| StandardPair::new(Monomial::parse(r, &names).unwrap(), f.to_vec());
        let pairs = vec![p("1", &[]), p("x1", &[0, 1]), p("x2", &[1, 2]), p("x3", &[0, 2])];
        let mut idx = [0usize, 1, 2, 3];
        let mut count = 0;
        permute(&mut idx, 0, &mut |perm| {
            count += 1;
            let f = StanleyFiltration::from_pairs(perm.iter().map(|&i| pairs[i].clone()).collect());
            let r = verify_filtration(&m, &f, 5);
            assert!(!r.passed, "{perm:?}");
            // the pairs do partition the standard monomials
            assert!(r.failures().all(|i| {
                i.subject == "prefixes decompose M_j" || i.subject == "local lists respect divisibility"
            }));
        });
        assert_eq!(count, 24);
    }

    fn permute(v: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn defects_are_reported() {
        let names = default_names(2);
        let m = minimalize(2, vec![Monomial::parse("ab", &names).unwrap()]).unwrap();
        let pairs = standard_pairs(&m).unwrap();
        // drop one pair: something is left uncovered
        let f = StanleyFiltration::from_pairs(pairs[..pairs.len() - 1].to_vec());
        let r = verify_filtration(&m, &f, 4);
        assert!(r.failures().any(|i| i.subject == "every standard monomial covered"));
        // a pair running into M
        let f = StanleyFiltration::from_pairs(vec![StandardPair::new(Monomial::one(2), vec![0, 1])]);
        let r = verify_filtration(&m, &f, 4);
        assert!(r.failures().any(|i| i.subject == "pairs avoid M"));
        // divisibility inside a list
        let x = Monomial::parse("a", &names).unwrap();
        let f = StanleyFiltration::from_pairs(vec![
            StandardPair::new(x.mul(&x), vec![]),
            StandardPair::new(x, vec![]),
        ]);
        let r = verify_filtration(&m, &f, 4);
        assert!(r.failures().any(|i| i.subject == "local lists respect divisibility"));
    }

    #[test]
    fn single_facet_decomposition_is_unchanged() {
        let c = crate::toric::Configuration::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap();
        let t = Triangulation::new(vec![vec![0, 2]]);
        let o = crate::toric::TermOrder::from_weight(vec![0, 1, 0]).unwrap();
        let s = special_pairs(&c, &t, &o).unwrap();
        let global = Shelling::from_order(t.facets().to_vec()).unwrap();
        let d = stanley_decomposition(&s, &global).unwrap();
        assert!(d.iter().all(|p| p.root == p.original_root));
        assert_eq!(d.len(), 2);
        let f = algorithm_list(&d, &global).unwrap();
        let m = minimalize(3, vec![Monomial::new(vec![0, 2, 0])]).unwrap();
        assert!(certify_cm(&m, &f, &t, 6).passed);
    }
}
