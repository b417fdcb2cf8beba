//! Finite group presentations, their text format, and integral homology.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intmat::{self, IntMatrix};

/// `gen^exp` with `exp ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

/// A freely reduced word: adjacent letters have distinct generators and no
/// exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Word::empty();
        for (gen, exp) in letters {
            w.push(gen, exp);
        }
        w
    }

    /// Appends `gen^exp`, merging with the last letter.
    pub fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.gen == gen {
                last.exp += exp;
                if last.exp == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(Letter { gen, exp });
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn inverse(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in &other.0 {
            w.push(l.gen, l.exp);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Cyclic rotation by `k` letters.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut letters = self.0[k..].to_vec();
        letters.extend_from_slice(&self.0[..k]);
        Word::from_letters(letters.into_iter().map(|l| (l.gen, l.exp)))
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for l in &self.0 {
            v[l.gen] += l.exp;
        }
        v
    }

    /// Relabels generators through `map`.
    pub fn map_generators(&self, map: &[usize]) -> Word {
        Word::from_letters(self.0.iter().map(|l| (map[l.gen], l.exp)))
    }

    pub fn render(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    names[l.gen].clone()
                } else {
                    format!("{}^{}", names[l.gen], l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if seen.insert(g.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator {
                    line: 0,
                    name: g.clone(),
                });
            }
        }
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= generators.len()) {
                return Err(Error::UnknownGenerator(l.gen));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Self {
        Presentation {
            generators: self.generators.clone(),
            relators,
        }
    }

    /// Parses a word such as `a b^-1 c^2` against this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let index: HashMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        parse_word_tokens(text.split_whitespace(), &index, 0)
    }

    /// Free product: generators and relators of `other` appended after ours.
    pub fn free_product(&self, other: &Presentation) -> Result<Self> {
        let offset = self.generators.len();
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        let map: Vec<usize> = (0..other.generators.len()).map(|i| i + offset).collect();
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| r.map_generators(&map)));
        Presentation::new(generators, relators)
    }

    /// Relator exponent-sum matrix (relators × generators).
    pub fn relation_matrix(&self) -> IntMatrix {
        self.relators
            .iter()
            .map(|r| {
                r.exponent_sums(self.generators.len())
                    .into_iter()
                    .map(BigInt::from)
                    .collect()
            })
            .collect()
    }

    /// Abelianization via Smith normal form.
    pub fn homology(&self) -> AbelianizationData {
        let g = self.generators.len();
        let smith = intmat::smith(&self.relation_matrix(), g);
        let r = smith.rank();
        let torsion: Vec<BigInt> = smith
            .diagonal
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        let b = g - r;
        // Rows of V restricted to the last b columns send generators onto
        // the free quotient; Hermite reduction fixes the basis of H.
        let raw: IntMatrix = smith
            .col_transform
            .iter()
            .map(|row| row[r..].to_vec())
            .collect();
        let free_map = if b == 0 {
            vec![Vec::new(); g]
        } else {
            let h = intmat::hermite_rows(&intmat::transpose(&raw, b), g);
            intmat::transpose(&h, g)
        };
        let free_map = free_map
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.to_i64().expect("abelianization coordinates fit in i64"))
                    .collect()
            })
            .collect();
        AbelianizationData {
            b,
            torsion,
            free_map,
        }
    }
}

impl fmt::Display for Presentation {
    /// The text file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel {}", r.render(&self.generators))?;
        }
        Ok(())
    }
}

/// Free abelianization data of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationData {
    /// Free rank of `H_1`.
    pub b: usize,
    /// Invariant factors `d_1 | d_2 | …`, each `> 1`.
    pub torsion: Vec<BigInt>,
    /// Row `j` holds the `H`-coordinates of generator `j`.
    pub free_map: Vec<Vec<i64>>,
}

impl AbelianizationData {
    /// Image in `H` of a word.
    pub fn image(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0; self.b];
        for l in w.letters() {
            for (k, x) in self.free_map[l.gen].iter().enumerate() {
                v[k] += l.exp * x;
            }
        }
        v
    }

    /// `ψ(x_j)` for each generator.
    pub fn psi_values(&self, psi: &[i64]) -> Vec<i64> {
        self.free_map
            .iter()
            .map(|row| row.iter().zip(psi).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion.iter().filter_map(|d| d.to_i64()).collect()
    }

    pub fn is_trivial_torsion(&self) -> bool {
        self.torsion.iter().all(|d| d.is_zero() || d.is_one())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn parse_word_tokens<'a, I: Iterator<Item = &'a str>>(
    tokens: I,
    index: &HashMap<&str, usize>,
    line: usize,
) -> Result<Word> {
    let mut w = Word::empty();
    for tok in tokens {
        let (name, exp) = match tok.split_once('^') {
            Some((name, e)) => {
                let exp: i64 = e.parse().map_err(|_| Error::MalformedExponent {
                    line,
                    token: tok.to_string(),
                })?;
                if exp == 0 {
                    return Err(Error::MalformedExponent {
                        line,
                        token: tok.to_string(),
                    });
                }
                (name, exp)
            }
            None => (tok, 1),
        };
        let gen = *index.get(name).ok_or_else(|| Error::UndeclaredGenerator {
            line,
            name: name.to_string(),
        })?;
        w.push(gen, exp);
    }
    Ok(w)
}

/// Result of scanning a presentation-style file: the presentation plus any
/// lines the caller wants to interpret (`key: value`).
pub(crate) struct ParsedLines<'a> {
    pub presentation: Presentation,
    pub extra: Vec<(usize, &'a str, &'a str)>,
}

pub(crate) fn parse_with_extras(text: &str) -> Result<ParsedLines<'_>> {
    let mut generators: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut relators = Vec::new();
    let mut extra = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(char::is_whitespace)
            .map(|(h, r)| (h, r.trim()))
            .unwrap_or((content, ""));
        match head {
            "gens" => {
                for name in rest.split_whitespace() {
                    if !is_identifier(name) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("invalid generator name `{name}`"),
                        });
                    }
                    if index.insert(name, generators.len()).is_some() {
                        return Err(Error::DuplicateGenerator {
                            line,
                            name: name.to_string(),
                        });
                    }
                    generators.push(name.to_string());
                }
            }
            "rel" => relators.push(parse_word_tokens(rest.split_whitespace(), &index, line)?),
            _ => match content.split_once(':') {
                Some((key, value)) if is_identifier(key.trim()) => {
                    extra.push((line, key.trim(), value.trim()))
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unrecognized line `{content}`"),
                    })
                }
            },
        }
    }
    Ok(ParsedLines {
        presentation: Presentation {
            generators,
            relators,
        },
        extra,
    })
}

/// Parses the line-oriented presentation format (`gens …`, `rel …`, `#` comments).
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let parsed = parse_with_extras(text)?;
    if let Some((line, key, _)) = parsed.extra.first() {
        return Err(Error::Parse {
            line: *line,
            msg: format!("unexpected section `{key}:` in a presentation file"),
        });
    }
    Ok(parsed.presentation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_torus_group() {
        let p = parse_presentation("gens a b\nrel a b a^-1 b^-1").unwrap();
        assert_eq!(p.generators(), &["a".to_string(), "b".to_string()]);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 4);
        let h = p.homology();
        assert_eq!(h.b, 2);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn parses_free_group() {
        let p = parse_presentation("# rank one\ngens x\n").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
        assert_eq!(p.homology().b, 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_presentation("rel a"),
            Err(Error::UndeclaredGenerator {
                line: 1,
                name: "a".into()
            })
        );
        assert_eq!(
            parse_presentation("gens a\nrel a^x"),
            Err(Error::MalformedExponent {
                line: 2,
                token: "a^x".into()
            })
        );
        assert_eq!(
            parse_presentation("gens a b\n\ngens a"),
            Err(Error::DuplicateGenerator {
                line: 3,
                name: "a".into()
            })
        );
        assert!(matches!(
            parse_presentation("gens a\nrel a^0"),
            Err(Error::MalformedExponent { line: 2, .. })
        ));
    }

    #[test]
    fn words_merge_and_cancel() {
        let w = Word::from_letters([(0, 1), (0, 2), (1, 1), (1, -1), (0, -3)]);
        assert!(w.is_empty());
        let w = Word::from_letters([(0, 1), (1, 1)]);
        assert_eq!(w.concat(&w.inverse()), Word::empty());
        assert_eq!(w.rotate(1), Word::from_letters([(1, 1), (0, 1)]));
    }

    #[test]
    fn torsion_and_free_map() {
        let p = parse_presentation("gens a b z\nrel a z a^-1 z^-1\nrel b z b^-1 z^-1\nrel a b a^-1 b^-1 z^-2")
            .unwrap();
        let h = p.homology();
        assert_eq!(h.b, 2);
        assert_eq!(h.torsion_i64(), vec![2]);
        assert_eq!(h.free_map, vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn display_round_trips() {
        let p = parse_presentation("gens x y\nrel x y x y^-1 x^-1 y^-1").unwrap();
        assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }
}
