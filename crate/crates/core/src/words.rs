//! Text words over the group generators.
//!
//! Grammar: a product of factors `gen` or `gen^k` (signed `k`), separated by `*` or
//! whitespace. The empty string and the token `1` denote the identity.
//!
//! Two alphabets are understood. `New` uses the lattice generators `t1, t2` plus the
//! point generators `a` and/or `c`; `Original` uses the generators of the classical
//! Fuchsian presentation of each group (`a1, a2` for G1, `c1, c2, c3` for G2,
//! `c1, c2` for G3..G5, `a, c` for G6).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, GroupElement, GroupId, PointPart};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown generator `{name}` at byte {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("malformed exponent at byte {offset}")]
    MalformedExponent { offset: usize },
    #[error("empty generator name at byte {offset}")]
    EmptyGenerator { offset: usize },
    #[error("unexpected character `{found}` at byte {offset}")]
    UnexpectedChar { found: char, offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Alphabet {
    #[default]
    New,
    Original,
}

impl FromStr for Alphabet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "new" => Ok(Alphabet::New),
            "original" => Ok(Alphabet::Original),
            _ => Err(format!("unknown alphabet `{s}` (expected new or original)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    A,
    C,
    T1,
    T2,
    A1,
    A2,
    C1,
    C2,
    C3,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::A => "a",
            Generator::C => "c",
            Generator::T1 => "t1",
            Generator::T2 => "t2",
            Generator::A1 => "a1",
            Generator::A2 => "a2",
            Generator::C1 => "c1",
            Generator::C2 => "c2",
            Generator::C3 => "c3",
        }
    }

    fn from_name(name: &str) -> Option<Generator> {
        Some(match name {
            "a" => Generator::A,
            "c" => Generator::C,
            "t1" => Generator::T1,
            "t2" => Generator::T2,
            "a1" => Generator::A1,
            "a2" => Generator::A2,
            "c1" => Generator::C1,
            "c2" => Generator::C2,
            "c3" => Generator::C3,
            _ => return None,
        })
    }
}

/// Generators legal for a group under an alphabet. G0 has no separate classical
/// alphabet; both alphabets mean `t1, t2` there.
pub fn alphabet_of(group: GroupId, alphabet: Alphabet) -> &'static [Generator] {
    use Generator::*;
    match (group, alphabet) {
        (GroupId::G0, _) => &[T1, T2],
        (GroupId::G1, Alphabet::New) => &[A, T1, T2],
        (GroupId::G6, _) => match alphabet {
            Alphabet::New => &[A, C, T1, T2],
            Alphabet::Original => &[A, C],
        },
        (_, Alphabet::New) => &[C, T1, T2],
        (GroupId::G1, Alphabet::Original) => &[A1, A2],
        (GroupId::G2, Alphabet::Original) => &[C1, C2, C3],
        (_, Alphabet::Original) => &[C1, C2],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(l.generator.name())?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

pub fn parse_word(text: &str, group: GroupId, alphabet: Alphabet) -> Result<Word, ParseError> {
    let legal = alphabet_of(group, alphabet);
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    let mut need_factor = false;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            if need_factor {
                return Err(ParseError::EmptyGenerator { offset: pos });
            }
            break;
        }

        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        if pos == start {
            return match next_char(text, pos) {
                Some('*') | Some('^') => Err(ParseError::EmptyGenerator { offset: pos }),
                Some(c) => Err(ParseError::UnexpectedChar {
                    found: c,
                    offset: pos,
                }),
                None => Err(ParseError::EmptyGenerator { offset: pos }),
            };
        }
        let name = &text[start..pos];

        let mut exponent = 1i64;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let exp_start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exponent = text[exp_start..pos]
                .parse()
                .map_err(|_| ParseError::MalformedExponent { offset: exp_start })?;
        }

        if name != "1" {
            let generator = Generator::from_name(name)
                .filter(|g| legal.contains(g))
                .ok_or_else(|| ParseError::UnknownGenerator {
                    name: name.to_string(),
                    offset: start,
                })?;
            if exponent != 0 {
                letters.push(Letter {
                    generator,
                    exponent,
                });
            }
        }

        let before_ws = pos;
        skip_ws(&mut pos);
        need_factor = false;
        match next_char(text, pos) {
            None => break,
            Some('*') => {
                pos += 1;
                need_factor = true;
            }
            Some(_) if pos > before_ws => {}
            Some(c) => {
                return Err(ParseError::UnexpectedChar {
                    found: c,
                    offset: pos,
                })
            }
        }
    }
    Ok(Word { letters })
}

fn next_char(text: &str, pos: usize) -> Option<char> {
    text[pos..].chars().next()
}

/// Normal form of a single generator.
pub fn generator_image(
    generator: Generator,
    group: GroupId,
    alphabet: Alphabet,
) -> Result<GroupElement, WordError> {
    if !alphabet_of(group, alphabet).contains(&generator) {
        return Err(ParseError::UnknownGenerator {
            name: generator.name().to_string(),
            offset: 0,
        }
        .into());
    }
    let point = |idx: u8| GroupElement::new(group, 0, 0, PointPart(idx)).map_err(WordError::from);
    match generator {
        Generator::T1 => Ok(group.t1()),
        Generator::T2 => Ok(group.t2()),
        Generator::A => point(1),
        Generator::C if group == GroupId::G6 => point(2),
        Generator::C => point(1),
        _ => evaluate(&original_in_new(generator, group), group, Alphabet::New),
    }
}

/// Classical generators rewritten over the new alphabet. Obtained by solving the
/// Tietze substitutions for the old generators:
///
/// * G1: `a = a1`, `t2 = a1^-1 a2^-1`, so `a2 = t2^-1 a^-1`.
/// * G2: `c = c1`, `t1 = c2 c1`, `t2 = c2 c3`, so `c2 = t1 c`, `c3 = c t1^-1 t2`.
/// * G3: `c = c1^-1`, `t1 = c1^-1 c2`, so `c1 = c^-1`, `c2 = c^-1 t1`.
/// * G4: `c = c1`, `t1 = c2 c1^-1`, so `c2 = t1 c`.
/// * G5: `c = c1`, `t1 = c1^-2 c2`, so `c2 = c^2 t1`.
fn original_in_new(generator: Generator, group: GroupId) -> Word {
    use Generator::*;
    let spec: &[(Generator, i64)] = match (group, generator) {
        (GroupId::G1, A1) => &[(A, 1)],
        (GroupId::G1, A2) => &[(T2, -1), (A, -1)],
        (GroupId::G2, C1) => &[(C, 1)],
        (GroupId::G2, C2) => &[(T1, 1), (C, 1)],
        (GroupId::G2, C3) => &[(C, 1), (T1, -1), (T2, 1)],
        (GroupId::G3, C1) => &[(C, -1)],
        (GroupId::G3, C2) => &[(C, -1), (T1, 1)],
        (GroupId::G4 | GroupId::G5, C1) => &[(C, 1)],
        (GroupId::G4, C2) => &[(T1, 1), (C, 1)],
        (GroupId::G5, C2) => &[(C, 2), (T1, 1)],
        _ => unreachable!("{generator:?} is not a classical generator of {group}"),
    };
    Word {
        letters: spec
            .iter()
            .map(|&(generator, exponent)| Letter {
                generator,
                exponent,
            })
            .collect(),
    }
}

pub fn evaluate(word: &Word, group: GroupId, alphabet: Alphabet) -> Result<GroupElement, WordError> {
    let mut acc = group.identity();
    for letter in &word.letters {
        let image = generator_image(letter.generator, group, alphabet)?;
        acc = acc.multiply(&image.power(letter.exponent)?)?;
    }
    Ok(acc)
}

/// Parse and evaluate in one step.
pub fn parse_element(
    text: &str,
    group: GroupId,
    alphabet: Alphabet,
) -> Result<GroupElement, WordError> {
    evaluate(&parse_word(text, group, alphabet)?, group, alphabet)
}

/// Canonical text `t1^n1*t2^n2*w`, zero factors omitted, `1` for the identity.
pub fn format(x: &GroupElement) -> String {
    let mut parts: Vec<String> = Vec::with_capacity(3);
    for (name, n) in [("t1", x.n1()), ("t2", x.n2())] {
        match n {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{n}")),
        }
    }
    let w = x.point_part();
    if !w.is_one() {
        match (x.group(), w.symbol(x.group())) {
            (GroupId::G6, "ac") => parts.push("a*c".to_string()),
            (_, s) => parts.push(s.to_string()),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}
