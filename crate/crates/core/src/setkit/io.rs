//! Textual family format.
//!
//! A uniform family serializes as a header line `n=<n> k=<k>` followed by one
//! member per line, each member as its sorted comma-separated elements
//! (e.g. `1,2,5`). The empty set serializes as `-`. Mixed-cardinality subset
//! lists use the header `n=<n> k=mixed`.

use super::{KSubset, SetFamily};
use crate::error::{Error, Result};
use std::fmt::Write as _;

pub fn write_family(f: &SetFamily) -> String {
    let mut out = format!("n={} k={}\n", f.n(), f.k());
    for x in f.iter() {
        writeln!(out, "{}", member_line(&x)).unwrap();
    }
    out
}

pub fn write_subsets(n: u32, members: &[KSubset]) -> String {
    let mut out = format!("n={n} k=mixed\n");
    for x in members {
        writeln!(out, "{}", member_line(x)).unwrap();
    }
    out
}

fn member_line(x: &KSubset) -> String {
    if x.card() == 0 {
        return "-".to_string();
    }
    x.elements()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let (n, k, body) = parse_header(text)?;
    let k = k.ok_or_else(|| Error::Parse("expected a uniform family, got k=mixed".into()))?;
    let mut members = Vec::new();
    for line in body {
        let x = parse_member(line, n)?;
        if x.card() != k {
            return Err(Error::Parse(format!(
                "member `{line}` has cardinality {} but header says k={k}",
                x.card()
            )));
        }
        members.push(x.mask());
    }
    SetFamily::new(n, k, members).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_subsets(text: &str) -> Result<(u32, Vec<KSubset>)> {
    let (n, _, body) = parse_header(text)?;
    let mut members: Vec<KSubset> = body
        .into_iter()
        .map(|line| parse_member(line, n))
        .collect::<Result<_>>()?;
    members.sort_unstable();
    members.dedup();
    Ok((n, members))
}

fn parse_header(text: &str) -> Result<(u32, Option<u32>, Vec<&str>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty family text".into()))?;
    let mut n = None;
    let mut k = None;
    let mut mixed = false;
    for field in header.split_whitespace() {
        if let Some(v) = field.strip_prefix("n=") {
            n = Some(parse_u32(v)?);
        } else if let Some(v) = field.strip_prefix("k=") {
            if v == "mixed" {
                mixed = true;
            } else {
                k = Some(parse_u32(v)?);
            }
        } else {
            return Err(Error::Parse(format!("unrecognized header field `{field}`")));
        }
    }
    let n = n.ok_or_else(|| Error::Parse("header missing n=<n>".into()))?;
    if !mixed && k.is_none() {
        return Err(Error::Parse("header missing k=<k>".into()));
    }
    Ok((n, k, lines.collect()))
}

fn parse_member(line: &str, n: u32) -> Result<KSubset> {
    if line == "-" {
        return KSubset::empty(n).map_err(|e| Error::Parse(e.to_string()));
    }
    let elements: Vec<u32> = line
        .split(',')
        .map(|p| parse_u32(p.trim()))
        .collect::<Result<_>>()?;
    KSubset::from_elements(&elements, n).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_u32(s: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}
