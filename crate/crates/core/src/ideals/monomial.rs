use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^u` stored as its exponent vector.
///
/// The `Ord` impl is the canonical display order used everywhere in the
/// crate: total degree first, then the larger exponent vector in
/// lexicographic comparison comes first (so `b` sorts before `c`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    /// Squarefree product of the given variables.
    pub fn product_of(n: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &i in vars {
            e[i] += 1;
        }
        Self(e)
    }

    pub fn from_i64(exponents: &[i64]) -> Result<Self> {
        exponents
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::Input(format!("bad exponent {x}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn support_within(&self, set: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || set.contains(&i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Sets the listed coordinates to zero (the substitution `x_i ↦ 1`).
    pub fn project_out(&self, vars: &[usize]) -> Monomial {
        let mut e = self.0.clone();
        for &i in vars {
            e[i] = 0;
        }
        Monomial(e)
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| i64::from(e)).collect()
    }

    /// Renders with the given variable names. Single-letter names are
    /// juxtaposed, longer names are joined with `*`.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        let sep = if names.iter().all(|s| s.chars().count() == 1) {
            ""
        } else {
            "*"
        };
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses products such as `bc^2d`, `x1*x3^2` or `1`. Variable names are
    /// matched greedily, longest first.
    pub fn parse(s: &str, names: &[String]) -> Result<Monomial> {
        let s = s.trim();
        let mut e = vec![0u32; names.len()];
        if s == "1" {
            return Ok(Monomial(e));
        }
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start_matches(['*', ' ']);
            if rest.is_empty() {
                break;
            }
            let Some(&i) = order.iter().find(|&&i| rest.starts_with(names[i].as_str())) else {
                return Err(Error::Input(format!("cannot parse monomial {s:?} at {rest:?}")));
            };
            rest = &rest[names[i].len()..];
            let mut power = 1u32;
            if let Some(r) = rest.strip_prefix('^') {
                let digits = r.chars().take_while(char::is_ascii_digit).count();
                power = r[..digits]
                    .parse()
                    .map_err(|_| Error::Input(format!("bad exponent in {s:?}")))?;
                rest = &r[digits..];
            }
            e[i] += power;
        }
        Ok(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

/// `a, b, ..., z` for up to 26 variables, otherwise `x1, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Parses a comma separated list of monomials.
pub fn parse_monomial_list(s: &str, names: &[String]) -> Result<Vec<Monomial>> {
    s.split([',', '\n'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| Monomial::parse(t, names))
        .collect()
}
