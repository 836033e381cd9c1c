use dnormal::ideals::{default_names, minimalize, parse_monomial_list, MonomialIdeal};
use dnormal::toric::Configuration;

use crate::CliError;

/// A configuration file: header `d n`, `d` rows of `n` integers, then
/// optional `names:`, `weight:` and `tiebreak:` lines. `#` starts a comment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigFile {
    pub config: Configuration,
    pub weight: Option<Vec<i64>>,
    /// Variable indices, largest first.
    pub tiebreak: Option<Vec<usize>>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn ints(line: usize, s: &str) -> Result<Vec<i64>, CliError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::Input(format!("line {line}: {t:?} is not an integer")))
        })
        .collect()
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines
            .next()
            .ok_or_else(|| CliError::Input("empty configuration file".into()))?;
        let hdr = ints(hl, header)?;
        let [d, n] = hdr[..] else {
            return Err(CliError::Input(format!(
                "line {hl}: header must be \"d n\", got {header:?}"
            )));
        };
        if d < 0 || n < 0 {
            return Err(CliError::Input(format!("line {hl}: negative size in header")));
        }
        let (d, n) = (d as usize, n as usize);
        let mut rows = Vec::with_capacity(d);
        for _ in 0..d {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| CliError::Input(format!("expected {d} matrix rows")))?;
            let row = ints(ln, l)?;
            if row.len() != n {
                return Err(CliError::Input(format!(
                    "line {ln}: {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        let columns: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        let mut config = Configuration::new(d, columns)?;
        let mut weight = None;
        let mut tiebreak_names = None;
        for (ln, l) in lines {
            let (key, rest) = l
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("line {ln}: unexpected {l:?}")))?;
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            if tokens.len() != n {
                return Err(CliError::Input(format!(
                    "line {ln}: {key} has {} entries, expected {n}",
                    tokens.len()
                )));
            }
            match key.trim() {
                "names" => {
                    config = config.with_names(tokens.iter().map(|s| s.to_string()).collect())?;
                }
                "weight" => weight = Some(ints(ln, rest)?),
                "tiebreak" => tiebreak_names = Some((ln, tokens.iter().map(|s| s.to_string()).collect::<Vec<_>>())),
                other => {
                    return Err(CliError::Input(format!("line {ln}: unknown key {other:?}")));
                }
            }
        }
        let tiebreak = match tiebreak_names {
            Some((ln, names)) => Some(
                resolve_names(config.names(), &names)
                    .map_err(|e| CliError::Input(format!("line {ln}: {e}")))?,
            ),
            None => None,
        };
        Ok(Self {
            config,
            weight,
            tiebreak,
        })
    }

    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = format!("{} {}\n", c.d(), c.n());
        for row in c.rows() {
            out.push_str(&join(&row));
            out.push('\n');
        }
        if c.names() != default_names(c.n()).as_slice() {
            out.push_str(&format!("names: {}\n", c.names().join(" ")));
        }
        if let Some(w) = &self.weight {
            out.push_str(&format!("weight: {}\n", join(w)));
        }
        if let Some(t) = &self.tiebreak {
            let names: Vec<&str> = t.iter().map(|&i| c.names()[i].as_str()).collect();
            out.push_str(&format!("tiebreak: {}\n", names.join(" ")));
        }
        out
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn resolve_names(names: &[String], wanted: &[String]) -> Result<Vec<usize>, String> {
    wanted
        .iter()
        .map(|w| {
            names
                .iter()
                .position(|n| n == w)
                .ok_or_else(|| format!("unknown variable {w:?}"))
        })
        .collect()
}

/// A monomial ideal file: a `names:` line, then generators separated by
/// commas or newlines.
pub fn parse_ideal(text: &str) -> Result<(Vec<String>, MonomialIdeal), CliError> {
    let mut names = None;
    let mut body = String::new();
    for (ln, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("names:") {
            if names.is_some() {
                return Err(CliError::Input(format!("line {ln}: names given twice")));
            }
            names = Some(rest.split_whitespace().map(String::from).collect::<Vec<_>>());
        } else {
            body.push_str(l);
            body.push('\n');
        }
    }
    let names = names.ok_or_else(|| CliError::Input("ideal file needs a names: line".into()))?;
    let gens = parse_monomial_list(&body, &names)?;
    let ideal = minimalize(names.len(), gens)?;
    Ok((names, ideal))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = include_str!("../../core/tests/fixtures/example.cfg");

    #[test]
    fn example_roundtrip() {
        let f = ConfigFile::parse(EXAMPLE).unwrap();
        assert_eq!(f.config.d(), 3);
        assert_eq!(f.config.n(), 13);
        assert_eq!(f.weight.as_ref().unwrap()[0], 7);
        assert_eq!(f.tiebreak.as_ref().unwrap()[..3], [1, 4, 2]);
        assert_eq!(ConfigFile::parse(&f.render()).unwrap(), f);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "3\n",
            "2 2\n1 1\n",
            "2 2\n1 1\n0 x\n",
            "1 2\n1 1\nweight: 1\n",
            "1 2\n1 1\ncolour: 1 2\n",
            "1 2\n1 1\nnames: a a\n",
            "1 2\n1 1\ntiebreak: a z\n",
        ] {
            assert!(ConfigFile::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn ideal_files() {
        let (names, m) = parse_ideal("names: x y z\nxy, yz\nxyz\n").unwrap();
        assert_eq!(names.len(), 3);
        assert_eq!(m.generators().len(), 2);
        assert!(parse_ideal("xy\n").is_err());
    }
}
