//! Textual group descriptions such as `sym:6`, `tilde-sym:7@8` or
//! `gens:(1,2)(3,4);(1,3)@4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{alt, alt_embed, cyclic, sym, sym_embed, sym_prime, tilde_sym, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    SymEmbed(usize, usize),
    AltEmbed(usize, usize),
    SymPrime(usize, usize),
    TildeSym(usize),
}

impl Family {
    fn natural_degree(&self) -> usize {
        match *self {
            Family::Sym(n) | Family::Alt(n) | Family::Cyclic(n) | Family::TildeSym(n) => n,
            Family::SymEmbed(_, n) | Family::AltEmbed(_, n) | Family::SymPrime(_, n) => n,
        }
    }

    fn build(&self) -> Result<PermGroup> {
        match *self {
            Family::Sym(n) => sym(n),
            Family::Alt(n) => alt(n),
            Family::Cyclic(n) => cyclic(n),
            Family::SymEmbed(l, n) => sym_embed(l, n),
            Family::AltEmbed(l, n) => alt_embed(l, n),
            Family::SymPrime(k, n) => sym_prime(k, n),
            Family::TildeSym(n) => tilde_sym(n),
        }
    }
}

/// A named family, optionally moved to a larger degree (`@N`), or explicit
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named { family: Family, degree: Option<usize> },
    Gens { gens: Vec<Permutation>, degree: usize },
}

impl GroupSpec {
    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Named { family, degree } => degree.unwrap_or(family.natural_degree()),
            GroupSpec::Gens { degree, .. } => *degree,
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Named { family, degree } => {
                let g = family.build()?;
                match degree {
                    Some(d) if *d < g.degree() => Err(Error::InvalidParameter(format!(
                        "@{d} is below the natural degree {}",
                        g.degree()
                    ))),
                    Some(d) => g.extend_to(*d),
                    None => Ok(g),
                }
            }
            GroupSpec::Gens { gens, degree } => PermGroup::new(*degree, gens.clone()),
        }
    }
}

/// Parses and builds in one step.
pub fn parse_group(text: &str) -> Result<PermGroup> {
    text.parse::<GroupSpec>()?.build()
}

fn err(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}

fn parse_uint(input: &str, s: &str, offset: usize) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| err(input, offset, format!("expected a non-negative integer, found {s:?}")))
}

fn parse_args(input: &str, s: &str, offset: usize, count: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != count {
        return Err(err(input, offset, format!("expected {count} comma-separated integers")));
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for p in parts {
        out.push(parse_uint(input, p, pos)?);
        pos += p.len() + 1;
    }
    Ok(out)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let text = input.trim();
        let lead = input.len() - input.trim_start().len();
        let colon = text
            .find(':')
            .ok_or_else(|| err(input, lead, "expected <family>:<parameters>"))?;
        let name = &text[..colon];
        let rest = &text[colon + 1..];
        let rest_at = lead + colon + 1;
        let (body, degree) = match rest.rfind('@') {
            Some(at) => {
                let d = parse_uint(input, &rest[at + 1..], rest_at + at + 1)?;
                (&rest[..at], Some(d))
            }
            None => (rest, None),
        };
        if name == "gens" {
            let degree = degree.ok_or_else(|| err(input, rest_at + rest.len(), "gens: needs an @degree suffix"))?;
            let mut gens = Vec::new();
            let mut pos = rest_at;
            for part in body.split(';') {
                if !part.trim().is_empty() {
                    let g = Permutation::parse_with_degree(part, degree).map_err(|e| match e {
                        Error::Parse { position, message, .. } => err(input, pos + position, message),
                        other => err(input, pos, other.to_string()),
                    })?;
                    gens.push(g);
                }
                pos += part.len() + 1;
            }
            return Ok(GroupSpec::Gens { gens, degree });
        }
        let one = |s| parse_args(input, s, rest_at, 1).map(|v| v[0]);
        let two = |s| parse_args(input, s, rest_at, 2).map(|v| (v[0], v[1]));
        let family = match name {
            "sym" => Family::Sym(one(body)?),
            "alt" => Family::Alt(one(body)?),
            "cyclic" => Family::Cyclic(one(body)?),
            "tilde-sym" => Family::TildeSym(one(body)?),
            "sym-embed" => {
                let (l, n) = two(body)?;
                Family::SymEmbed(l, n)
            }
            "alt-embed" => {
                let (l, n) = two(body)?;
                Family::AltEmbed(l, n)
            }
            "sym-prime" => {
                let (k, n) = two(body)?;
                Family::SymPrime(k, n)
            }
            other => return Err(err(input, lead, format!("unknown group family {other:?}"))),
        };
        Ok(GroupSpec::Named { family, degree })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Sym(n) => write!(f, "sym:{n}"),
            Family::Alt(n) => write!(f, "alt:{n}"),
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::TildeSym(n) => write!(f, "tilde-sym:{n}"),
            Family::SymEmbed(l, n) => write!(f, "sym-embed:{l},{n}"),
            Family::AltEmbed(l, n) => write!(f, "alt-embed:{l},{n}"),
            Family::SymPrime(k, n) => write!(f, "sym-prime:{k},{n}"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { family, degree } => {
                write!(f, "{family}")?;
                if let Some(d) = degree {
                    write!(f, "@{d}")?;
                }
                Ok(())
            }
            GroupSpec::Gens { gens, degree } => {
                let g: Vec<String> = gens.iter().map(ToString::to_string).collect();
                write!(f, "gens:{}@{degree}", g.join(";"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_group("cyclic:12").unwrap().order(), 12);
        assert_eq!(parse_group("tilde-sym:7").unwrap().order(), 120);
        // (1,2)(3,4) and (1,3) generate a dihedral group of order 8
        assert_eq!(parse_group("gens:(1,2)(3,4);(1,3)@4").unwrap().order(), 8);
        let v4 = parse_group("gens:(1,2)(3,4);(1,3)(2,4)@4").unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        let h = parse_group("tilde-sym:7@8").unwrap();
        assert_eq!((h.degree(), h.order()), (8, 120));
        assert_eq!(parse_group("sym-embed:3,6").unwrap().order(), 6);
        assert_eq!(parse_group(" alt:5 ").unwrap().order(), 60);
    }

    #[test]
    fn round_trip() {
        for s in [
            "sym:6",
            "alt:7",
            "cyclic:8",
            "sym-embed:3,6",
            "alt-embed:4,7",
            "sym-prime:2,6",
            "tilde-sym:7",
            "tilde-sym:5@8",
            "gens:(1,2)(3,4);(1,3)@4",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn errors() {
        for (s, pos) in [
            ("sim:6", 0),
            ("sym:x", 4),
            ("sym-embed:3", 10),
            ("gens:(1,2)", 10),
            ("sym", 0),
        ] {
            match s.parse::<GroupSpec>() {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{s}"),
                other => panic!("{s}: {other:?}"),
            }
        }
        assert!(matches!(parse_group("sym-embed:7,6"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group("tilde-sym:3"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_group("sym:6@4"), Err(Error::InvalidParameter(_))));
    }
}
