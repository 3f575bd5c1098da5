//! Algebraic normal form input: `+`-separated products of `x1..xm`, `0` and
//! `1`, joined by `*`. Whitespace is ignored.

use super::BooleanFunction;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Var(usize),
    Const(bool),
    Plus,
    Star,
}

fn tokenize(text: &str, m: u32) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'0' | b'1' => {
                out.push((i, Token::Const(c == b'1')));
                i += 1;
            }
            b'x' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(Error::Syntax {
                        position: start,
                        message: "expected a variable index after `x`".into(),
                    });
                }
                let index: usize = text[digits_start..i].parse().map_err(|_| Error::Syntax {
                    position: digits_start,
                    message: "variable index too large".into(),
                })?;
                if index == 0 || index > m as usize {
                    return Err(Error::VariableOutOfRange { index, m });
                }
                out.push((start, Token::Var(index)));
            }
            _ => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!(
                        "unexpected character `{}`",
                        text[i..].chars().next().unwrap_or('?')
                    ),
                })
            }
        }
    }
    Ok(out)
}

/// A monomial: the variable mask, or `None` when a `0` factor kills it.
fn parse_terms(tokens: &[(usize, Token)], end: usize) -> Result<Vec<Option<u32>>> {
    let mut terms = Vec::new();
    let mut iter = tokens.iter().peekable();
    loop {
        let mut mask = Some(0u32);
        loop {
            match iter.next() {
                Some(&(_, Token::Var(i))) => mask = mask.map(|m| m | 1 << (i - 1)),
                Some(&(_, Token::Const(true))) => {}
                Some(&(_, Token::Const(false))) => mask = None,
                Some(&(pos, tok)) => {
                    return Err(Error::Syntax {
                        position: pos,
                        message: format!("expected a variable or constant, found {tok:?}"),
                    })
                }
                None => {
                    return Err(Error::Syntax {
                        position: end,
                        message: "unexpected end of input".into(),
                    })
                }
            }
            match iter.peek() {
                Some((_, Token::Star)) => {
                    iter.next();
                }
                _ => break,
            }
        }
        terms.push(mask);
        match iter.next() {
            None => return Ok(terms),
            Some((_, Token::Plus)) => {}
            Some(&(pos, tok)) => {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("expected `+` or `*`, found {tok:?}"),
                })
            }
        }
    }
}

/// Parses an ANF polynomial over F_2 in `m` variables into its truth table.
pub fn parse_anf(text: &str, m: u32) -> Result<BooleanFunction> {
    // Validates m before touching the text.
    let size = BooleanFunction::zero(m)?.size();
    let tokens = tokenize(text, m)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let terms = parse_terms(&tokens, text.len())?;
    let mut acc = vec![false; size];
    for mask in terms.into_iter().flatten() {
        for (x, v) in acc.iter_mut().enumerate() {
            if x as u32 & mask == mask {
                *v ^= true;
            }
        }
    }
    BooleanFunction::from_table(m, Word::from_fn(size, |x| acc[x])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(text: &str, m: u32) -> Vec<bool> {
        parse_anf(text, m).unwrap().table().iter().collect()
    }

    #[test]
    fn and_gate() {
        assert_eq!(tt("x1*x2", 2), vec![false, false, false, true]);
    }

    #[test]
    fn characteristic_two_cancellation() {
        assert_eq!(tt("x1+x1", 1), vec![false, false]);
        assert_eq!(tt("x1*x1", 1), tt("x1", 1));
    }

    #[test]
    fn quadratic_support_size() {
        assert_eq!(parse_anf("x1*x2+x3*x4", 4).unwrap().weight(), 6);
        assert_eq!(parse_anf(" x1 * x2 + x3*x4 + 1 ", 4).unwrap().weight(), 10);
    }

    #[test]
    fn constants() {
        assert_eq!(tt("1", 2), vec![true; 4]);
        assert_eq!(tt("0", 2), vec![false; 4]);
        assert_eq!(tt("0*x1 + x2*1", 2), tt("x2", 2));
    }

    #[test]
    fn syntax_errors_report_position() {
        assert_eq!(
            parse_anf("x1 + + x2", 2).unwrap_err(),
            Error::Syntax {
                position: 5,
                message: "expected a variable or constant, found Plus".into()
            }
        );
        assert!(matches!(
            parse_anf("x1 x2", 2),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_anf("x1 +", 2),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_anf("y1", 2),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_anf("x", 2),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(parse_anf("", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn variable_out_of_range() {
        assert_eq!(
            parse_anf("x3", 2).unwrap_err(),
            Error::VariableOutOfRange { index: 3, m: 2 }
        );
        assert!(matches!(
            parse_anf("x0", 2),
            Err(Error::VariableOutOfRange { .. })
        ));
    }
}
