//! Complex scalars on the command line: `0.5`, `-0.25i`, `0.5+0.25i`,
//! `1e-3-2.5e-1i`.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex number {0:?}: expected <re>, <im>i or <re>(+|-)<im>i")]
pub struct ParseComplexError(pub String);

/// Scans `[+-]? (digits [. digits*] | . digits) ([eE] [+-]? digits)?`
/// starting at `i`; returns the end index.
fn scan_decimal(s: &[u8], mut i: usize) -> Option<usize> {
    if matches!(s.get(i), Some(b'+' | b'-')) {
        i += 1;
    }
    let int_start = i;
    while s.get(i).is_some_and(u8::is_ascii_digit) {
        i += 1;
    }
    let mut digits = i - int_start;
    if s.get(i) == Some(&b'.') {
        i += 1;
        let frac_start = i;
        while s.get(i).is_some_and(u8::is_ascii_digit) {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return None;
    }
    if matches!(s.get(i), Some(b'e' | b'E')) {
        let mut j = i + 1;
        if matches!(s.get(j), Some(b'+' | b'-')) {
            j += 1;
        }
        let exp_start = j;
        while s.get(j).is_some_and(u8::is_ascii_digit) {
            j += 1;
        }
        if j == exp_start {
            return None;
        }
        i = j;
    }
    Some(i)
}

pub fn parse_complex(text: &str) -> Result<Complex64, ParseComplexError> {
    let err = || ParseComplexError(text.to_string());
    let s = text.as_bytes();
    let first_end = scan_decimal(s, 0).ok_or_else(err)?;
    let first: f64 = text[..first_end].parse().map_err(|_| err())?;
    match &s[first_end..] {
        [] => Ok(Complex64::new(first, 0.0)),
        [b'i'] => Ok(Complex64::new(0.0, first)),
        [b'+' | b'-', ..] => {
            let end = scan_decimal(s, first_end).ok_or_else(err)?;
            if &s[end..] != b"i" {
                return Err(err());
            }
            let im: f64 = text[first_end..end].parse().map_err(|_| err())?;
            Ok(Complex64::new(first, im))
        }
        _ => Err(err()),
    }
}

/// Shortest round-trip rendering, always with an explicit imaginary part.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "" } else { "+" };
    format!("{:?}{}{:?}i", z.re, sign, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn accepted_forms() {
        let cases = [
            ("0.5", Complex64::new(0.5, 0.0)),
            ("-0.5", Complex64::new(-0.5, 0.0)),
            ("0.9i", Complex64::new(0.0, 0.9)),
            ("-.25i", Complex64::new(0.0, -0.25)),
            ("0.5+0.25i", Complex64::new(0.5, 0.25)),
            ("0.5-0.25i", Complex64::new(0.5, -0.25)),
            ("1e-3+2E2i", Complex64::new(1e-3, 200.0)),
            ("+3", Complex64::new(3.0, 0.0)),
        ];
        for (s, want) in cases {
            assert_eq!(parse_complex(s), Ok(want), "{s}");
        }
    }

    #[test]
    fn rejected_forms() {
        for s in [
            "", "i", "1+i", "0.5+", "1.2.3", "abc", "1e", "1+2", "1+2j", " 1", "1 + 2i", "inf",
            "NaN", "1i2",
        ] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_complex(Complex64::new(0.5, 0.0)), "0.5+0.0i");
        assert_eq!(format_complex(Complex64::new(0.5, -0.25)), "0.5-0.25i");
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(re in prop::num::f64::NORMAL | prop::num::f64::ZERO,
                                   im in prop::num::f64::NORMAL | prop::num::f64::ZERO) {
            let z = Complex64::new(re, im);
            let back = parse_complex(&format_complex(z)).unwrap();
            prop_assert_eq!(back.re.to_bits(), re.to_bits());
            prop_assert_eq!(back.im.to_bits(), im.to_bits());
        }
    }
}
