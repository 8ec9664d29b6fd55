//! JSON formats for hole sets and monomial ideals.
//!
//! A hole set is `{"dim": d, "holes": [[...], ...]}`; an ideal is
//! `{"vars": d, "generators": [[...], ...]}`. Holes may be given in any order
//! and are always written in canonical order.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::monomial::MonomialIdeal;
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleSetFile {
    pub dim: usize,
    pub holes: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: usize,
    pub generators: Vec<Point>,
}

impl From<&Gns> for HoleSetFile {
    fn from(s: &Gns) -> Self {
        HoleSetFile {
            dim: s.dim(),
            holes: s.holes().to_vec(),
        }
    }
}

impl From<&MonomialIdeal> for IdealFile {
    fn from(i: &MonomialIdeal) -> Self {
        IdealFile {
            vars: i.vars(),
            generators: i.generators().to_vec(),
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| GnsError::Parse(e.to_string()))
}

pub fn gns_from_json(text: &str) -> Result<Gns> {
    let f: HoleSetFile = parse(text)?;
    Gns::new(f.dim, f.holes)
}

pub fn gns_to_json(s: &Gns) -> String {
    serde_json::to_string(&HoleSetFile::from(s)).expect("hole sets serialize")
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let f: IdealFile = parse(text)?;
    MonomialIdeal::new(f.vars, f.generators)
}

pub fn ideal_to_json(i: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealFile::from(i)).expect("ideals serialize")
}

pub fn read_gns(mut r: impl Read) -> Result<Gns> {
    let mut text = String::new();
    r.read_to_string(&mut text)
        .map_err(|e| GnsError::Parse(e.to_string()))?;
    gns_from_json(&text)
}

pub fn write_gns(s: &Gns, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "{}", gns_to_json(s))
}
