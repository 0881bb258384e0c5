//! Line-oriented certificate format.
//!
//! ```text
//! AC-CERT v1
//! class: AC
//! gens: x y
//! rel: X
//! rel: XY
//! INV 1
//! CHECK 1 x
//! CONJ 2 x
//! MUL 2 1
//! final-rel: x
//! final-rel: Y
//! ```
//!
//! Moves are `INV i`, `MUL i j`, `CONJ i <letter>`, `STAB`, `DESTAB` and
//! `AUT g=w ...` followed by `AUTINV g=w ...`. `CHECK i <word>` asserts
//! relator `i` after the moves above it. `#` starts a comment. Words
//! inside the move section are read over the generators in force at that
//! point, which `STAB` and `DESTAB` change.

use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::{Certificate, Checkpoint};
use crate::presentation::{
    parse_names, strip_comment, Automorphism, Move, MoveClass, Presentation, NAME_ORDER,
};
use crate::word::{Letter, Word};

pub const HEADER: &str = "AC-CERT v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unsupported version {found:?}, expected {HEADER:?}")]
    Version { line: usize, found: String },
    #[error("line {line}: relator index {index} out of range (have {len})")]
    IndexOutOfRange { line: usize, index: usize, len: usize },
}

pub fn serialize(cert: &Certificate) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    let _ = writeln!(out, "class: {}", cert.class.tag());
    out.push_str(&cert.initial.to_text());

    let mut names = cert.initial.names().to_vec();
    let mut checks = cert.checkpoints.iter().peekable();
    for k in 0..=cert.moves.len() {
        if k > 0 {
            write_move(&mut out, &cert.moves[k - 1], &mut names);
        }
        while let Some(c) = checks.next_if(|c| c.after_step == k) {
            let _ = writeln!(out, "CHECK {} {}", c.relator, c.expected.format(&names));
        }
    }
    for r in cert.claimed_final.relators() {
        let _ = writeln!(out, "final-rel: {}", cert.claimed_final.format_word(r));
    }
    out
}

fn fresh_name(names: &[char]) -> Option<char> {
    NAME_ORDER.chars().find(|c| !names.contains(c))
}

fn write_table(out: &mut String, tag: &str, table: &[Word], names: &[char]) {
    out.push_str(tag);
    for (g, img) in table.iter().enumerate() {
        let _ = write!(out, " {}={}", names[g], img.format(names));
    }
    out.push('\n');
}

fn write_move(out: &mut String, m: &Move, names: &mut Vec<char>) {
    match m {
        Move::Invert(i) => {
            let _ = writeln!(out, "INV {i}");
        }
        Move::Multiply(i, j) => {
            let _ = writeln!(out, "MUL {i} {j}");
        }
        Move::Conjugate(i, l) => {
            let _ = writeln!(out, "CONJ {i} {}", l.to_char(names));
        }
        Move::Stabilize => {
            out.push_str("STAB\n");
            if let Some(c) = fresh_name(names) {
                names.push(c);
            }
        }
        Move::Destabilize => {
            out.push_str("DESTAB\n");
            names.pop();
        }
        Move::Automorphism(aut) => {
            write_table(out, "AUT", &aut.images, names);
            write_table(out, "AUTINV", &aut.inverse, names);
        }
    }
}

struct Parser<'a> {
    lines: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, strip_comment(l)))
                .filter(|(_, l)| !l.is_empty()),
        );
        Parser { lines: it.peekable() }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> CertParseError {
    CertParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_word(line: usize, text: &str, names: &[char]) -> Result<Word, CertParseError> {
    Word::parse(text, names).map_err(|e| syntax(line, e.to_string()))
}

fn parse_index(line: usize, tok: Option<&str>, len: usize) -> Result<usize, CertParseError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing relator index"))?;
    let index: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("bad index {tok:?}")))?;
    if index == 0 || index > len {
        return Err(CertParseError::IndexOutOfRange { line, index, len });
    }
    Ok(index)
}

fn parse_table(
    line: usize,
    rest: &str,
    names: &[char],
) -> Result<Vec<Word>, CertParseError> {
    let mut table: Vec<Option<Word>> = vec![None; names.len()];
    for item in rest.split_whitespace() {
        let (g, img) = item
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("bad image {item:?}")))?;
        let mut cs = g.chars();
        let slot = match (cs.next(), cs.next()) {
            (Some(c), None) => names.iter().position(|&n| n == c),
            _ => None,
        }
        .ok_or_else(|| syntax(line, format!("unknown generator {g:?}")))?;
        if table[slot].is_some() {
            return Err(syntax(line, format!("generator {g:?} mapped twice")));
        }
        table[slot] = Some(parse_word(line, img, names)?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(g, w)| w.ok_or_else(|| syntax(line, format!("no image for {}", names[g]))))
        .collect()
}

pub fn parse(text: &str) -> Result<Certificate, CertParseError> {
    let mut p = Parser::new(text);

    let (line, head) = p.lines.next().ok_or_else(|| syntax(0, "empty document"))?;
    if head != HEADER {
        if head.starts_with("AC-CERT") {
            return Err(CertParseError::Version {
                line,
                found: head.to_string(),
            });
        }
        return Err(syntax(line, format!("expected {HEADER:?}")));
    }

    let (line, class_line) = p.lines.next().ok_or_else(|| syntax(line, "missing class"))?;
    let class = match class_line.strip_prefix("class:").map(str::trim) {
        Some("AC") => MoveClass::Ac,
        Some("QSS") => MoveClass::Qss,
        _ => return Err(syntax(line, format!("bad class line {class_line:?}"))),
    };

    let (line, gens_line) = p.lines.next().ok_or_else(|| syntax(line, "missing gens"))?;
    let gens = gens_line
        .strip_prefix("gens:")
        .ok_or_else(|| syntax(line, "expected gens line"))?;
    let mut names = parse_names(gens).map_err(|m| syntax(line, m))?;

    let mut rels = Vec::new();
    while let Some((line, rest)) = p.lines.next_if(|(_, l)| l.starts_with("rel:")) {
        rels.push(parse_word(line, rest["rel:".len()..].trim(), &names)?);
    }
    let initial = Presentation::new(names.clone(), rels).map_err(|e| syntax(line, e.to_string()))?;

    let mut moves = Vec::new();
    let mut checkpoints = Vec::new();
    let mut relators = initial.relators().len();
    let mut finals = Vec::new();
    while let Some((line, l)) = p.lines.next() {
        if let Some(rest) = l.strip_prefix("final-rel:") {
            finals.push(parse_word(line, rest.trim(), &names)?);
            continue;
        }
        if !finals.is_empty() {
            return Err(syntax(line, "only final-rel lines may follow final-rel"));
        }
        let mut toks = l.split_whitespace();
        let op = toks.next().unwrap_or_default();
        let m = match op {
            "INV" => Move::Invert(parse_index(line, toks.next(), relators)?),
            "MUL" => {
                let i = parse_index(line, toks.next(), relators)?;
                let j = parse_index(line, toks.next(), relators)?;
                if i == j {
                    return Err(syntax(line, format!("MUL needs distinct relators, got {i} {j}")));
                }
                Move::Multiply(i, j)
            }
            "CONJ" => {
                let i = parse_index(line, toks.next(), relators)?;
                let tok = toks.next().ok_or_else(|| syntax(line, "missing letter"))?;
                let mut cs = tok.chars();
                let letter = match (cs.next(), cs.next()) {
                    (Some(c), None) => Letter::parse(c, &names),
                    _ => None,
                }
                .ok_or_else(|| syntax(line, format!("bad letter {tok:?}")))?;
                Move::Conjugate(i, letter)
            }
            "STAB" => {
                let c = fresh_name(&names).ok_or_else(|| syntax(line, "no fresh generator"))?;
                names.push(c);
                relators += 1;
                Move::Stabilize
            }
            "DESTAB" => {
                if names.pop().is_none() {
                    return Err(syntax(line, "DESTAB on empty presentation"));
                }
                relators -= 1;
                Move::Destabilize
            }
            "AUT" => {
                let images = parse_table(line, l["AUT".len()..].trim(), &names)?;
                let (line2, inv_line) = p
                    .lines
                    .next()
                    .ok_or_else(|| syntax(line, "AUT without AUTINV"))?;
                let rest = inv_line
                    .strip_prefix("AUTINV")
                    .ok_or_else(|| syntax(line2, "expected AUTINV after AUT"))?;
                let inverse = parse_table(line2, rest.trim(), &names)?;
                Move::Automorphism(Automorphism { images, inverse })
            }
            "CHECK" => {
                let i = parse_index(line, toks.next(), relators)?;
                let word = toks.next().unwrap_or("");
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens after CHECK word"));
                }
                checkpoints.push(Checkpoint {
                    after_step: moves.len(),
                    relator: i,
                    expected: parse_word(line, word, &names)?,
                });
                continue;
            }
            _ => return Err(syntax(line, format!("unknown directive {op:?}"))),
        };
        if !matches!(m, Move::Automorphism(_)) && toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
        moves.push(m);
    }

    let claimed_final =
        Presentation::new(names, finals).map_err(|e| syntax(0, format!("final presentation: {e}")))?;
    Ok(Certificate {
        class,
        initial,
        moves,
        checkpoints,
        claimed_final,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::replay;

    #[test]
    fn minimal_document() {
        let c = parse("AC-CERT v1\nclass: AC\ngens: x\nrel: x\nfinal-rel: x\n").unwrap();
        assert!(c.moves.is_empty());
        assert!(replay(&c).unwrap().passed());
        assert_eq!(serialize(&c), "AC-CERT v1\nclass: AC\ngens: x\nrel: x\nfinal-rel: x\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading\nAC-CERT v1\n\nclass: AC # tag\ngens: x y\nrel: X\nrel: XY\nINV 1 # r1\nCONJ 2 x\nMUL 2 1\nfinal-rel: x\nfinal-rel: Y\n";
        let c = parse(text).unwrap();
        assert_eq!(c.moves.len(), 3);
        assert!(replay(&c).unwrap().passed());
    }

    #[test]
    fn equal_mul_indices_rejected() {
        let text = "AC-CERT v1\nclass: AC\ngens: x y\nrel: x\nrel: y\nMUL 1 1\nfinal-rel: x\nfinal-rel: y\n";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, CertParseError::Syntax { line: 6, .. }), "{err}");
    }

    #[test]
    fn version_mismatch() {
        let err = parse("AC-CERT v2\nclass: AC\ngens:\n").unwrap_err();
        assert!(matches!(err, CertParseError::Version { line: 1, .. }));
    }

    #[test]
    fn index_out_of_range() {
        let text = "AC-CERT v1\nclass: AC\ngens: x\nrel: x\nINV 2\nfinal-rel: x\n";
        assert_eq!(
            parse(text).unwrap_err(),
            CertParseError::IndexOutOfRange { line: 5, index: 2, len: 1 }
        );
    }

    #[test]
    fn unknown_directive() {
        let text = "AC-CERT v1\nclass: AC\ngens: x\nrel: x\nSWAP 1 2\nfinal-rel: x\n";
        assert!(matches!(parse(text), Err(CertParseError::Syntax { line: 5, .. })));
    }

    #[test]
    fn stabilize_and_automorphism_round_trip() {
        let text = "AC-CERT v1\nclass: QSS\ngens: x\nrel: x\nSTAB\nCHECK 2 y\nAUT x=xy y=y\nAUTINV x=xY y=y\nCHECK 1 xy\nAUT x=xY y=y\nAUTINV x=xy y=y\nDESTAB\nfinal-rel: x\n";
        let c = parse(text).unwrap();
        assert_eq!(c.moves.len(), 4);
        assert_eq!(serialize(&c), text);
        assert!(replay(&c).unwrap().passed());
    }

    #[test]
    fn aut_requires_inverse_line() {
        let text = "AC-CERT v1\nclass: QSS\ngens: x\nrel: x\nAUT x=x\nfinal-rel: x\n";
        assert!(parse(text).is_err());
    }
}
