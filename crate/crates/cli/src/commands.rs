use std::fs;
use std::path::{Path, PathBuf};

use dnormal::families::{
    certify_delta_normal_level, certify_non_delta_normal_tower, check_empty_normal_hypotheses,
    delta_normal_tower, firla_ziegler, graph_configuration, non_delta_normal_tower, parse_edges,
    Tower,
};
use dnormal::geometry::{
    find_shelling, is_delta_normal, is_normal, is_triangulation, is_unimodular, normalized_volume,
    order_triangulation, Shelling, Triangulation,
};
use dnormal::ideals::{
    associated_faces, embedded_prime_free, standard_pairs, MonomialIdeal, StandardPair,
};
use dnormal::stanley::{
    algorithm_list, certify_cm, classify_initial_ideal, default_check_degree, special_pairs,
    stanley_decomposition, verify_filtration, StanleyFiltration,
};
use dnormal::toric::{toric_groebner, Configuration, GroebnerBasis, TermOrder};
use dnormal::CertificateReport;
use serde_json::{json, Map, Value};

use crate::config_file::{parse_ideal, resolve_names, ConfigFile};
use crate::report::{digest, Report, Timer};
use crate::{Cli, CliError, Command, FamilyKind, OrderArgs, ShellingArgs};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<Report> {
    let mut timer = Timer::new(cli.timings);
    let mut flags = Flags::default();
    flags.push("degree-cap", cli.degree_cap.map(|d| d.to_string()));
    let (name, inputs, results, certificates) = match &cli.command {
        Command::Groebner { file, order } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let gb = timer.time("groebner", || s.groebner())?;
            ("groebner", vec![bytes], groebner_json(&s.config, &gb), vec![])
        }
        Command::Triangulate { file, order } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let t = timer.time("triangulation", || s.triangulation())?;
            let (res, cert) = triangulation_json(&s.config, &t, None)?;
            ("triangulate", vec![bytes], res, vec![cert])
        }
        Command::StandardPairs { file, ideal, order } => {
            let (bytes, names, m) = match (file, ideal) {
                (_, Some(path)) => {
                    let bytes = read(path)?;
                    let (names, m) = parse_ideal(&text(path, &bytes)?)?;
                    (bytes, names, m)
                }
                (Some(path), None) => {
                    let (bytes, s) = Setup::load(path, order, &mut flags)?;
                    let gb = timer.time("groebner", || s.groebner())?;
                    (bytes, s.config.names().to_vec(), gb.initial_ideal())
                }
                (None, None) => {
                    return Err(CliError::Input("give a configuration file or --ideal".into()))
                }
            };
            flags.push("ideal", ideal.is_some().then(|| "1".into()));
            let pairs = timer.time("standard pairs", || standard_pairs(&m))?;
            let res = json!({
                "count": pairs.len(),
                "pairs": pairs_json(&pairs, &names),
                "associated_faces": associated_faces(&m)?.iter().map(|f| one_based(f)).collect::<Vec<_>>(),
                "embedded_prime_free": embedded_prime_free(&m)?,
            });
            ("standard-pairs", vec![bytes], res, vec![])
        }
        Command::DeltaNormal { file, order } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let t = timer.time("triangulation", || s.triangulation())?;
            let cert = timer.time("delta-normal", || is_delta_normal(&s.config, &t))?;
            let res = json!({ "facets": facets_json(&t), "delta_normal": cert.passed });
            ("delta-normal", vec![bytes], res, vec![cert])
        }
        Command::Normal { file } => {
            let (bytes, s) = Setup::load(file, &OrderArgs::default(), &mut flags)?;
            let cert = timer.time("normal", || is_normal(&s.config))?;
            ("normal", vec![bytes], json!({ "normal": cert.passed }), vec![cert])
        }
        Command::StanleyFiltration { file, order, shelling } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let run = Pipeline::new(&s, shelling, cli.degree_cap, &mut flags, &mut timer)?;
            let f = run.filtration(&mut timer)?;
            let cap = run.cap;
            let cert = timer.time("verify", || verify_filtration(&run.j, &f, cap));
            let res = json!({
                "degree_cap": cap,
                "filtration": filtration_json(&f, s.config.names()),
            });
            ("stanley-filtration", vec![bytes], res, vec![cert])
        }
        Command::CmCertify { file, order, shelling } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let run = Pipeline::new(&s, shelling, cli.degree_cap, &mut flags, &mut timer)?;
            let f = run.filtration(&mut timer)?;
            let cap = run.cap;
            let cert = timer.time("certify", || certify_cm(&run.j, &f, &run.t, cap));
            let res = json!({ "degree_cap": cap, "cohen_macaulay": cert.passed });
            ("cm-certify", vec![bytes], res, vec![cert])
        }
        Command::DegreeBound { file, order } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let gb = timer.time("groebner", || s.groebner())?;
            let t = timer.time("triangulation", || s.triangulation())?;
            let cls = timer.time("classify", || {
                classify_initial_ideal(&s.config, &t, &gb.initial_ideal())
            })?;
            let names = s.config.names();
            let gens: Vec<Value> = cls
                .generators
                .iter()
                .map(|g| {
                    json!({
                        "generator": g.generator.display(names),
                        "class": format!("{:?}", g.class),
                        "degree": g.degree,
                        "facets": g.facets.iter().map(|f| one_based(f)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let res = json!({ "d": s.config.rank(), "max_degree": gb.max_degree(), "generators": gens });
            ("degree-bound", vec![bytes], res, vec![cls.report])
        }
        Command::Family {
            kind,
            v,
            d,
            base,
            edges,
            vertices,
            out,
        } => {
            let (inputs, res, certs) = family(*kind, v, *d, base, edges, *vertices, out, &mut flags, &mut timer)?;
            ("family", inputs, res, certs)
        }
        Command::Pipeline { file, order, shelling } => {
            let (bytes, s) = Setup::load(file, order, &mut flags)?;
            let (res, certs) = pipeline(&s, shelling, cli.degree_cap, &mut flags, &mut timer)?;
            ("pipeline", vec![bytes], res, certs)
        }
    };
    let refs: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();
    Ok(Report {
        command: name.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        inputs_digest: digest(&refs, &flags.canonical()),
        results,
        certificates,
        timings: timer.finish(),
    })
}

/// Flags that change results, rendered in a fixed order for the digest.
#[derive(Default)]
struct Flags(Vec<(&'static str, String)>);

impl Flags {
    fn push(&mut self, key: &'static str, value: Option<String>) {
        if let Some(v) = value {
            self.0.push((key, v));
        }
    }

    fn canonical(&self) -> String {
        let mut v = self.0.clone();
        v.sort();
        v.iter().map(|(k, x)| format!("{k}={x}\n")).collect()
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn text(path: &Path, bytes: &[u8]) -> Result<String> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Input(format!("{t:?} is not an integer"))))
        .collect()
}

fn one_based(face: &[usize]) -> Vec<usize> {
    face.iter().map(|i| i + 1).collect()
}

/// A configuration with its term order. Without an order in the file or on
/// the command line, grevlex is used.
struct Setup {
    config: Configuration,
    order: TermOrder,
}

impl Setup {
    fn load(path: &Path, args: &OrderArgs, flags: &mut Flags) -> Result<(Vec<u8>, Self)> {
        let bytes = read(path)?;
        let file = ConfigFile::parse(&text(path, &bytes)?)?;
        let n = file.config.n();
        let weight = match &args.weight {
            Some(w) => Some(parse_ints(w)?),
            None => file.weight.clone(),
        };
        let tiebreak = match &args.tiebreak {
            Some(t) => {
                let names: Vec<String> = t
                    .split(|c: char| c.is_whitespace() || c == ',' || c == '>')
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect();
                Some(resolve_names(file.config.names(), &names).map_err(CliError::Input)?)
            }
            None => file.tiebreak.clone(),
        };
        flags.push("weight", args.weight.clone());
        flags.push("tiebreak", args.tiebreak.clone());
        let order = match (weight, tiebreak) {
            (Some(w), Some(t)) => TermOrder::new(w, t)?,
            (Some(w), None) => TermOrder::from_weight(w)?,
            (None, Some(t)) => TermOrder::new(vec![0; n], t)?,
            (None, None) => TermOrder::grevlex(n),
        };
        if order.nvars() != n {
            return Err(CliError::Input(format!(
                "order on {} variables for {n} columns",
                order.nvars()
            )));
        }
        Ok((
            bytes,
            Self {
                config: file.config,
                order,
            },
        ))
    }

    fn groebner(&self) -> Result<GroebnerBasis> {
        Ok(toric_groebner(&self.config, &self.order)?)
    }

    fn triangulation(&self) -> Result<Triangulation> {
        Ok(order_triangulation(&self.config, &self.order)?)
    }
}

fn groebner_json(c: &Configuration, gb: &GroebnerBasis) -> Value {
    let names = c.names();
    let j = gb.initial_ideal();
    json!({
        "binomials": gb.elements.iter().map(|b| b.display(names)).collect::<Vec<_>>(),
        "count": gb.len(),
        "initial_ideal": j.generators().iter().map(|m| m.display(names)).collect::<Vec<_>>(),
        "initial_generators": j.generators().len(),
        "max_degree": gb.max_degree(),
    })
}

/// Facets with volumes, plus a certificate that the facets triangulate the
/// cone and, given an initial ideal, support its radical.
fn triangulation_json(
    c: &Configuration,
    t: &Triangulation,
    j: Option<&MonomialIdeal>,
) -> Result<(Value, CertificateReport)> {
    let mut cert = CertificateReport::new("triangulation");
    if is_triangulation(c, t) {
        cert.pass("facets", format!("{} facets cover the cone", t.len()));
    } else {
        cert.fail("facets", "facets do not triangulate the cone", None);
    }
    if let Some(j) = j {
        let mut top: Vec<Vec<usize>> = associated_faces(j)?;
        let maximal: Vec<Vec<usize>> = top
            .iter()
            .filter(|f| !top.iter().any(|g| g.len() > f.len() && f.iter().all(|x| g.contains(x))))
            .cloned()
            .collect();
        top = maximal;
        top.sort();
        let mut facets = t.facets().to_vec();
        facets.sort();
        if top == facets {
            cert.pass("radical", "maximal associated faces are the facets");
        } else {
            cert.fail("radical", "maximal associated faces differ from the facets", None);
        }
    }
    let volumes = t
        .facets()
        .iter()
        .map(|f| normalized_volume(c, f))
        .collect::<dnormal::Result<Vec<u64>>>()?;
    let res = json!({
        "facets": facets_json(t),
        "volumes": volumes,
        "unimodular": is_unimodular(c, t)?,
    });
    Ok((res, cert))
}

fn facets_json(t: &Triangulation) -> Vec<Vec<usize>> {
    t.facets().iter().map(|f| one_based(f)).collect()
}

fn pairs_json(pairs: &[StandardPair], names: &[String]) -> Vec<Value> {
    pairs
        .iter()
        .map(|p| json!({ "root": p.root.display(names), "face": one_based(&p.face) }))
        .collect()
}

fn filtration_json(f: &StanleyFiltration, names: &[String]) -> Value {
    let lists: Vec<Value> = f
        .blocks()
        .iter()
        .map(|b| {
            Value::Array(
                b.iter()
                    .map(|p| {
                        json!({
                            "root": p.root.display(names),
                            "face": one_based(&p.face),
                            "original_root": p.original_root.display(names),
                            "q": one_based(&p.q),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "shelling": f.shelling.as_ref().map(|s| s.iter().map(|x| one_based(x)).collect::<Vec<_>>()),
        "lists": lists,
    })
}

fn parse_shelling(s: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    s.split('|')
        .map(|facet| {
            facet
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                    _ => Err(CliError::Input(format!("shelling entry {t:?} is not in 1..={n}"))),
                })
                .collect()
        })
        .collect()
}

/// The shared front half of the filtration commands.
struct Pipeline<'a> {
    s: &'a Setup,
    j: MonomialIdeal,
    t: Triangulation,
    shelling: Shelling,
    cap: u64,
}

impl<'a> Pipeline<'a> {
    fn new(
        s: &'a Setup,
        sh: &ShellingArgs,
        cap: Option<u64>,
        flags: &mut Flags,
        timer: &mut Timer,
    ) -> Result<Self> {
        let gb = timer.time("groebner", || s.groebner())?;
        let t = timer.time("triangulation", || s.triangulation())?;
        let shelling = shelling_for(&t, sh, s.config.n(), flags, timer)?;
        let j = gb.initial_ideal();
        let cap = cap.unwrap_or_else(|| default_check_degree(&j));
        Ok(Self { s, j, t, shelling, cap })
    }

    fn filtration(&self, timer: &mut Timer) -> Result<StanleyFiltration> {
        let sp = timer.time("special pairs", || special_pairs(&self.s.config, &self.t, &self.s.order))?;
        let d = timer.time("decomposition", || stanley_decomposition(&sp, &self.shelling))?;
        Ok(timer.time("filtration", || algorithm_list(&d, &self.shelling))?)
    }
}

fn shelling_for(
    t: &Triangulation,
    sh: &ShellingArgs,
    n: usize,
    flags: &mut Flags,
    timer: &mut Timer,
) -> Result<Shelling> {
    flags.push("shelling", sh.shelling.clone());
    match &sh.shelling {
        Some(text) => {
            let order = parse_shelling(text, n)?;
            let shelling = Shelling::from_order(order).map_err(|e| CliError::Input(e.to_string()))?;
            let mut given = shelling.facets().to_vec();
            given.sort();
            let mut facets = t.facets().to_vec();
            facets.sort();
            if given != facets {
                return Err(CliError::Input(
                    "the shelling does not list the facets of the triangulation".into(),
                ));
            }
            Ok(shelling)
        }
        None => Ok(timer.time("shelling", || find_shelling(t))?),
    }
}

fn pipeline(
    s: &Setup,
    sh: &ShellingArgs,
    cap: Option<u64>,
    flags: &mut Flags,
    timer: &mut Timer,
) -> Result<(Value, Vec<CertificateReport>)> {
    let names = s.config.names();
    let mut res = Map::new();
    let mut certs: Vec<CertificateReport> = Vec::new();
    let mut stages: Vec<&str> = Vec::new();
    // stops after the stage whose certificate fails
    macro_rules! stage {
        ($name:expr, $cert:expr) => {{
            let cert: CertificateReport = $cert;
            stages.push($name);
            let ok = cert.passed;
            certs.push(cert);
            if !ok {
                res.insert("stages".into(), json!(stages));
                res.insert("halted_at".into(), json!($name));
                return Ok((Value::Object(res), certs));
            }
        }};
    }

    let gb = timer.time("groebner", || s.groebner())?;
    let j = gb.initial_ideal();
    res.insert("groebner".into(), groebner_json(&s.config, &gb));
    stages.push("groebner");

    let t = timer.time("triangulation", || s.triangulation())?;
    let (tri, cert) = triangulation_json(&s.config, &t, Some(&j))?;
    res.insert("triangulation".into(), tri);
    stage!("triangulation", cert);

    stage!(
        "delta-normal",
        timer.time("delta-normal", || is_delta_normal(&s.config, &t))?
    );

    let sp = timer.time("special pairs", || special_pairs(&s.config, &t, &s.order))?;
    let mut cert = CertificateReport::new("special-pairs");
    for block in sp.facets() {
        let vol = normalized_volume(&s.config, &block.facet)?;
        let label = format!("facet {:?}", one_based(&block.facet));
        if block.pairs.len() as u64 == vol {
            cert.pass(label, format!("{vol} pairs, equal to the volume"));
        } else {
            cert.fail(label, format!("{} pairs but volume {vol}", block.pairs.len()), None);
        }
    }
    let all = timer.time("standard pairs", || standard_pairs(&j))?;
    let mut mine: Vec<StandardPair> = sp.pairs();
    let mut theirs = all.clone();
    mine.sort_by(|a, b| (&a.face, &a.root).cmp(&(&b.face, &b.root)));
    theirs.sort_by(|a, b| (&a.face, &a.root).cmp(&(&b.face, &b.root)));
    if mine == theirs {
        cert.pass("standard pairs", format!("{} pairs agree", mine.len()));
    } else {
        cert.fail("standard pairs", "special pairs differ from the standard pairs", None);
    }
    res.insert(
        "special_pairs".into(),
        json!(sp
            .facets()
            .iter()
            .map(|b| json!({
                "facet": one_based(&b.facet),
                "roots": b.pairs.iter().map(|p| p.pair.root.display(names)).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>()),
    );
    stage!("special-pairs", cert);

    let shelling = shelling_for(&t, sh, s.config.n(), flags, timer)?;
    let mut cert = CertificateReport::new("shelling");
    cert.pass("order", format!("{} facets shelled", shelling.len()));
    stage!("shelling", cert);

    let d = timer.time("decomposition", || stanley_decomposition(&sp, &shelling))?;
    let f = timer.time("filtration", || algorithm_list(&d, &shelling))?;
    let cap = cap.unwrap_or_else(|| default_check_degree(&j));
    res.insert("degree_cap".into(), json!(cap));
    res.insert("filtration".into(), filtration_json(&f, names));
    stage!(
        "filtration",
        timer.time("verify", || verify_filtration(&j, &f, cap))
    );
    stage!(
        "cohen-macaulay",
        timer.time("certify", || certify_cm(&j, &f, &t, cap))
    );

    let cls = timer.time("classify", || classify_initial_ideal(&s.config, &t, &j))?;
    let mut counts = Map::new();
    for class in ["N", "Out", "Cross"] {
        let k = cls
            .generators
            .iter()
            .filter(|g| format!("{:?}", g.class) == class)
            .count();
        counts.insert(class.into(), json!(k));
    }
    res.insert("generator_classes".into(), Value::Object(counts));
    stage!("degree-bound", cls.report);

    res.insert("stages".into(), json!(stages));
    res.insert("halted_at".into(), Value::Null);
    Ok((Value::Object(res), certs))
}

fn write_config(out: &Option<PathBuf>, name: &str, file: &ConfigFile) -> Result<Option<String>> {
    let Some(dir) = out else { return Ok(None) };
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, file.render()).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Some(name.to_string()))
}

fn plain(config: Configuration, weight: Option<Vec<i64>>) -> ConfigFile {
    ConfigFile {
        config,
        weight,
        tiebreak: None,
    }
}

fn tower_levels(tower: &Tower, prefix: &str, out: &Option<PathBuf>) -> Result<Vec<Value>> {
    tower
        .levels
        .iter()
        .map(|l| {
            let name = format!("{prefix}-d{}.cfg", l.d);
            let written = write_config(out, &name, &plain(l.config.clone(), l.weight.clone()))?;
            Ok(json!({
                "d": l.d,
                "file": written,
                "rows": l.config.rows(),
                "apex": one_based(&l.apex),
                "sigma": one_based(&l.sigma),
                "facets": l.triangulation.as_ref().map(facets_json),
            }))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn family(
    kind: FamilyKind,
    v: &str,
    d: Option<usize>,
    base: &Option<PathBuf>,
    edges: &Option<PathBuf>,
    vertices: Option<usize>,
    out: &Option<PathBuf>,
    flags: &mut Flags,
    timer: &mut Timer,
) -> Result<(Vec<Vec<u8>>, Value, Vec<CertificateReport>)> {
    let vector = || -> Result<[i64; 4]> {
        let v = parse_ints(v)?;
        v.as_slice()
            .try_into()
            .map_err(|_| CliError::Input(format!("--v needs four entries, got {}", v.len())))
    };
    flags.push("d", d.map(|x| x.to_string()));
    flags.push("vertices", vertices.map(|x| x.to_string()));
    match kind {
        FamilyKind::Fz => {
            flags.push("kind", Some("fz".into()));
            flags.push("v", Some(format!("{:?}", vector()?)));
            let c = timer.time("family", || firla_ziegler(vector()?).map_err(CliError::from))?;
            let written = write_config(out, "fz.cfg", &plain(c.clone(), None))?;
            let res = json!({ "kind": "fz", "file": written, "rows": c.rows() });
            Ok((vec![], res, vec![]))
        }
        FamilyKind::DeltaTower => {
            flags.push("kind", Some("delta-tower".into()));
            flags.push("v", Some(format!("{:?}", vector()?)));
            let d = d.unwrap_or(6);
            let base = firla_ziegler(vector()?)?;
            let tower = timer.time("tower", || delta_normal_tower(&base, d))?;
            let certs = timer.time("certify", || {
                tower
                    .levels
                    .iter()
                    .map(certify_delta_normal_level)
                    .collect::<dnormal::Result<Vec<_>>>()
            })?;
            let res = json!({ "kind": "delta-tower", "levels": tower_levels(&tower, "delta-tower", out)? });
            Ok((vec![], res, certs))
        }
        FamilyKind::NonDeltaTower => {
            flags.push("kind", Some("non-delta-tower".into()));
            let path = base
                .as_ref()
                .ok_or_else(|| CliError::Input("non-delta-tower needs --base FILE".into()))?;
            let bytes = read(path)?;
            let file = ConfigFile::parse(&text(path, &bytes)?)?;
            let d = d.unwrap_or(file.config.d() + 2);
            let mut certs = vec![timer.time("hypotheses", || check_empty_normal_hypotheses(&file.config))?];
            let tower = timer.time("tower", || non_delta_normal_tower(&file.config, d))?;
            certs.push(timer.time("certify", || certify_non_delta_normal_tower(&tower))?);
            let res = json!({ "kind": "non-delta-tower", "levels": tower_levels(&tower, "non-delta-tower", out)? });
            Ok((vec![bytes], res, certs))
        }
        FamilyKind::Graph => {
            flags.push("kind", Some("graph".into()));
            let path = edges
                .as_ref()
                .ok_or_else(|| CliError::Input("graph needs --edges FILE".into()))?;
            let bytes = read(path)?;
            let (max, list) = parse_edges(&text(path, &bytes)?)?;
            let g = graph_configuration(vertices.unwrap_or(max), &list)?;
            let written = write_config(out, "graph.cfg", &plain(g.config.clone(), None))?;
            let res = json!({
                "kind": "graph",
                "file": written,
                "vertices": g.vertices,
                "edges": g.edges,
                "rows": g.config.rows(),
            });
            Ok((vec![bytes], res, vec![]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shelling_flag_is_one_based() {
        assert_eq!(
            parse_shelling("4 11 12 | 11,12,13", 13).unwrap(),
            vec![vec![3, 10, 11], vec![10, 11, 12]]
        );
        assert!(parse_shelling("0 1 2", 13).is_err());
        assert!(parse_shelling("1 2 14", 13).is_err());
    }

    #[test]
    fn flags_are_order_independent() {
        let mut a = Flags::default();
        a.push("x", Some("1".into()));
        a.push("y", Some("2".into()));
        a.push("z", None);
        let mut b = Flags::default();
        b.push("y", Some("2".into()));
        b.push("x", Some("1".into()));
        assert_eq!(a.canonical(), b.canonical());
    }
}
