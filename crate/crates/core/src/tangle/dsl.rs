//! Text form of a diagram: one slice per line, bottom to top, pieces as
//! whitespace-separated tokens. `#` comments to end of line; blank lines are
//! skipped.
//!
//! ```text
//! u u      # two cups
//! | x+ |
//! | x+ |
//! n n      # caps close the Hopf link
//! ```

use std::fmt;

use thiserror::Error;

use super::{Piece, SlicedDiagram, TangleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("line {line}, column {col}: unknown token '{token}'")]
    UnknownToken { line: usize, col: usize, token: String },
    #[error(transparent)]
    Invalid(#[from] TangleError),
}

fn piece_for(token: &str) -> Option<Piece> {
    Some(match token {
        "|" => Piece::Id,
        "u" => Piece::Cup,
        "n" => Piece::Cap,
        "x+" => Piece::CrossPos,
        "x-" => Piece::CrossNeg,
        "t+" => Piece::TwistPos,
        "t-" => Piece::TwistNeg,
        _ => return None,
    })
}

pub fn parse(text: &str) -> Result<SlicedDiagram, DslError> {
    let mut slices = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut slice = Vec::new();
        let mut col = 0;
        for chunk in line.split_inclusive(char::is_whitespace) {
            let token = chunk.trim_end_matches(char::is_whitespace);
            if !token.is_empty() {
                match piece_for(token) {
                    Some(p) => slice.push(p),
                    None => {
                        return Err(DslError::UnknownToken {
                            line: ln + 1,
                            col: col + 1,
                            token: token.to_string(),
                        })
                    }
                }
            }
            col += chunk.chars().count();
        }
        if !slice.is_empty() {
            slices.push(slice);
        }
    }
    Ok(SlicedDiagram::new(slices)?)
}

impl fmt::Display for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for slice in self.slices() {
            let tokens: Vec<&str> = slice.iter().map(|p| p.token()).collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}
