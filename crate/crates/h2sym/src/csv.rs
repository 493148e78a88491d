//! Matrix export: a header line
//! `# family=<id> a=<re>+<im>i b=<re>+<im>i N=<n>` followed by `N` rows of
//! `N` comma-separated `re:im` pairs. Floats use the shortest
//! round-trip representation, so re-reading is bit-exact.

use std::io::{self, BufRead, Write};

use h2sym_core::hardy::Matrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::complex_arg::{format_complex, parse_complex};

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixHeader {
    pub family: String,
    pub a: Complex64,
    pub b: Complex64,
    pub n: usize,
}

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

fn format_err(line: usize, msg: impl Into<String>) -> CsvError {
    CsvError::Format {
        line,
        msg: msg.into(),
    }
}

pub fn write_matrix_csv(mut w: impl Write, header: &MatrixHeader, m: &Matrix) -> io::Result<()> {
    writeln!(
        w,
        "# family={} a={} b={} N={}",
        header.family,
        format_complex(header.a),
        format_complex(header.b),
        header.n
    )?;
    for i in 0..m.dim() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|z| format!("{:?}:{:?}", z.re, z.im))
            .collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

fn parse_header(line: &str) -> Result<MatrixHeader, CsvError> {
    let body = line
        .strip_prefix("# ")
        .ok_or_else(|| format_err(1, "header must start with '# '"))?;
    let mut family = None;
    let mut a = None;
    let mut b = None;
    let mut n = None;
    for field in body.split(' ') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| format_err(1, format!("malformed header field {field:?}")))?;
        let bad = |_| format_err(1, format!("bad value for {key}: {value:?}"));
        match key {
            "family" => family = Some(value.to_string()),
            "a" => a = Some(parse_complex(value).map_err(bad)?),
            "b" => b = Some(parse_complex(value).map_err(bad)?),
            "N" => {
                n = Some(
                    value
                        .parse()
                        .map_err(|_| format_err(1, format!("bad value for N: {value:?}")))?,
                )
            }
            _ => return Err(format_err(1, format!("unknown header key {key:?}"))),
        }
    }
    match (family, a, b, n) {
        (Some(family), Some(a), Some(b), Some(n)) => Ok(MatrixHeader { family, a, b, n }),
        _ => Err(format_err(1, "header needs family, a, b and N")),
    }
}

fn parse_entry(text: &str, line: usize) -> Result<Complex64, CsvError> {
    let err = || format_err(line, format!("bad entry {text:?}"));
    let (re, im) = text.split_once(':').ok_or_else(err)?;
    Ok(Complex64::new(
        re.parse().map_err(|_| err())?,
        im.parse().map_err(|_| err())?,
    ))
}

pub fn read_matrix_csv(r: impl BufRead) -> Result<(MatrixHeader, Matrix), CsvError> {
    let mut lines = r.lines();
    let header_line = lines.next().ok_or_else(|| format_err(1, "empty input"))??;
    let header = parse_header(&header_line)?;
    let mut data = Vec::with_capacity(header.n * header.n);
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let lineno = idx + 2;
        if line.is_empty() {
            continue;
        }
        let row: Vec<Complex64> = line
            .split(',')
            .map(|e| parse_entry(e, lineno))
            .collect::<Result<_, _>>()?;
        if row.len() != header.n {
            return Err(format_err(
                lineno,
                format!("expected {} entries, found {}", header.n, row.len()),
            ));
        }
        data.extend(row);
    }
    if data.len() != header.n * header.n {
        return Err(format_err(0, format!("expected {} rows", header.n)));
    }
    let m = Matrix::from_row_major(data).ok_or_else(|| format_err(0, "matrix is not square"))?;
    Ok((header, m))
}
