//! Matrix file format: a header line `rows cols` followed by that many
//! rows of whitespace-separated quaternion literals.
//!
//! `serialize` emits the canonical form (explicit coefficients, single
//! spaces, one trailing newline per line); parsing it back is the identity
//! byte for byte. In float mode entries may also carry decimal
//! coefficients, which are converted to exact rationals on input.

use std::str::FromStr;

use num_traits::{One, Zero};
use quatdet::{BigInt, Error, QMatrix, Quaternion, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatFileError {
    Parse { line: usize, col: usize, message: String },
    Shape(String),
}

impl std::fmt::Display for MatFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatFileError::Parse { line, col, message } => {
                write!(f, "line {line}, column {col}: {message}")
            }
            MatFileError::Shape(message) => f.write_str(message),
        }
    }
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> MatFileError {
    MatFileError::Parse { line, col, message: message.into() }
}

/// Parses one entry; with `decimals` the coefficient grammar also accepts
/// `digits.digits`, converted exactly (e.g. `1.25` becomes `5/4`).
pub fn parse_entry(text: &str, decimals: bool) -> Result<Quaternion, Error> {
    if !decimals {
        return text.parse();
    }
    let bytes = text.as_bytes();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(1, "empty entry"));
    }
    let mut parts = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    let mut pos = 0usize;
    let mut first = true;
    while pos < bytes.len() {
        let negative = match bytes[pos] {
            b'+' => {
                pos += 1;
                false
            }
            b'-' => {
                pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(err(pos + 1, "expected '+' or '-' between terms")),
        };
        first = false;
        if pos >= bytes.len() {
            return Err(err(pos + 1, "expected a term after sign"));
        }

        let mut coeff = None;
        if bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b'.' {
                pos += 1;
                let fstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if fstart == pos {
                    return Err(err(pos + 1, "expected digits after '.'"));
                }
                let digits: String = text[start..pos].chars().filter(|&c| c != '.').collect();
                let numer = BigInt::from_str(&digits).expect("digits");
                let denom_str = format!("1{}", "0".repeat(pos - fstart));
                let denom = BigInt::from_str(&denom_str).expect("digits");
                coeff = Some(Rational::new(numer, denom));
            } else {
                let numer = BigInt::from_str(&text[start..pos]).expect("digits");
                let mut denom = BigInt::one();
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let dstart = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if dstart == pos {
                        return Err(err(pos + 1, "expected digits after '/'"));
                    }
                    denom = BigInt::from_str(&text[dstart..pos]).expect("digits");
                    if denom.is_zero() {
                        return Err(err(dstart + 1, "zero denominator"));
                    }
                }
                coeff = Some(Rational::new(numer, denom));
            }
        }

        let slot = if pos < bytes.len() {
            match bytes[pos] {
                b'i' => {
                    pos += 1;
                    1
                }
                b'j' => {
                    pos += 1;
                    2
                }
                b'k' => {
                    pos += 1;
                    3
                }
                _ if coeff.is_some() => 0,
                _ => return Err(err(pos + 1, "expected a coefficient or unit")),
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(err(pos + 1, "expected a term"));
        };

        let mut value = coeff.unwrap_or_else(Rational::one);
        if negative {
            value = -value;
        }
        parts[slot] = &parts[slot] + &value;
    }
    let [w, x, y, z] = parts;
    Ok(Quaternion::new(w, x, y, z))
}

/// Column (1-based) at which each whitespace-separated token of `line`
/// starts, paired with the token.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut cursor = 0usize;
    for token in line.split_whitespace() {
        let at = line[cursor..].find(token).expect("token came from line") + cursor;
        out.push((at + 1, token));
        cursor = at + token.len();
    }
    out
}

pub fn parse_matrix(text: &str, decimals: bool) -> Result<QMatrix, MatFileError> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.is_empty() {
        return Err(parse_err(1, 1, "empty file; expected a `rows cols` header"));
    }
    let header = tokens_with_columns(lines[0]);
    if header.len() != 2 {
        return Err(parse_err(1, 1, "header must be exactly `rows cols`"));
    }
    let dims: Vec<usize> = header
        .iter()
        .map(|(col, tok)| {
            tok.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| parse_err(1, *col, format!("bad dimension `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    let (rows, cols) = (dims[0], dims[1]);

    let mut entries = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let line_no = r + 2;
        let line = lines.get(r + 1).ok_or_else(|| {
            MatFileError::Shape(format!("expected {rows} rows, file ends after {r}"))
        })?;
        let tokens = tokens_with_columns(line);
        if tokens.len() != cols {
            return Err(MatFileError::Shape(format!(
                "row {} has {} entries, expected {cols}",
                r + 1,
                tokens.len()
            )));
        }
        for (col, token) in tokens {
            match parse_entry(token, decimals) {
                Ok(q) => entries.push(q),
                Err(Error::Parse { position, message }) => {
                    return Err(parse_err(line_no, col + position - 1, message));
                }
                Err(other) => return Err(parse_err(line_no, col, other.to_string())),
            }
        }
    }
    for (extra, line) in lines.iter().enumerate().skip(rows + 1) {
        if !line.trim().is_empty() {
            return Err(parse_err(extra + 1, 1, "unexpected content after the last row"));
        }
    }
    QMatrix::new(rows, cols, entries).map_err(|e| MatFileError::Shape(e.to_string()))
}

/// Canonical serialization; `parse_matrix(serialize(m))` is the identity
/// and re-serializing parses back byte-identically.
pub fn serialize(m: &QMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 1..=m.rows() {
        let row: Vec<String> = (1..=m.cols()).map(|j| m.at(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
