//! Fixture manifolds: a presentation plus optional annotations.
//!
//! ```text
//! gens a b z
//! rel a b a^-1 b^-1 z^-1
//! ball: 2 0          # one even functional per line
//! ball: 0 2
//! base: 1,1 2        # base point of a face and its cover degree
//! euler: v1 2,0      # labeled Euler classes
//! meridian: x
//! longitude: x y x^-1
//! flags: trnh
//! ```

use crate::error::{Error, Result};
use crate::medley::BaseDatum;
use crate::polytope::NormBallPair;
use crate::presentation::{parse_with_extras, Presentation, Word};
use crate::rational::{parse_rational_csv, RVec};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub presentation: Presentation,
    pub ball: Option<NormBallPair>,
    pub base: Option<BaseDatum>,
    pub euler: Vec<(String, RVec)>,
    pub meridian: Option<Word>,
    pub longitude: Option<Word>,
    pub flags: Vec<String>,
}

impl Fixture {
    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let parsed = parse_with_extras(text)?;
    let p = parsed.presentation;
    let p = Presentation::new(p.generators().to_vec(), p.relators().to_vec())?;
    let mut functionals: Vec<Vec<i64>> = Vec::new();
    let mut fixture = Fixture {
        presentation: p,
        ball: None,
        base: None,
        euler: Vec::new(),
        meridian: None,
        longitude: None,
        flags: Vec::new(),
    };
    for (line, key, value) in parsed.extra {
        match key {
            "ball" => {
                let u = value
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| parse_err(line, format!("bad integer `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                functionals.push(u);
            }
            "base" => {
                let mut it = value.split_whitespace();
                let point = it
                    .next()
                    .and_then(parse_rational_csv)
                    .ok_or_else(|| parse_err(line, "expected `base: <point> <degree>`"))?;
                let cover_degree = match it.next() {
                    None => 1,
                    Some(t) => t.parse().map_err(|_| parse_err(line, format!("bad cover degree `{t}`")))?,
                };
                fixture.base = Some(BaseDatum { point, cover_degree });
            }
            "euler" => {
                let (label, vec) = value
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| parse_err(line, "expected `euler: <label> <vector>`"))?;
                let v = parse_rational_csv(vec.trim()).ok_or_else(|| parse_err(line, "bad rational vector"))?;
                fixture.euler.push((label.to_string(), v));
            }
            "meridian" => fixture.meridian = Some(fixture.presentation.parse_word(value)?),
            "longitude" => fixture.longitude = Some(fixture.presentation.parse_word(value)?),
            "flags" => fixture.flags.extend(value.split_whitespace().map(str::to_string)),
            other => return Err(parse_err(line, format!("unknown section `{other}:`"))),
        }
    }
    if !functionals.is_empty() {
        fixture.ball = Some(NormBallPair::seminorm(&functionals)?);
    }
    Ok(fixture)
}
