//! Parsing of the CLI's number literals: exact Gaussian rationals in the
//! `(a/b)+(c/d)i` grammar, or complex floats (distinguished by a decimal
//! point), e.g. `5`, `-1/2`, `4/5+2/5*i`, `0.25`, `1.5-0.5i`.

use chebseries::exactnum::{ComplexDouble, GaussianRational};

#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Exact(GaussianRational),
    Float(ComplexDouble),
}

impl Literal {
    pub fn to_complex(&self) -> ComplexDouble {
        match self {
            Literal::Exact(g) => g.to_complex(),
            Literal::Float(z) => *z,
        }
    }

    pub fn exact(&self) -> Option<&GaussianRational> {
        match self {
            Literal::Exact(g) => Some(g),
            Literal::Float(_) => None,
        }
    }
}

fn parse_float_part(part: &str) -> Result<(f64, bool), String> {
    let mut body = part.trim();
    let mut imaginary = false;
    if let Some(stripped) = body.strip_suffix('i') {
        imaginary = true;
        body = stripped.strip_suffix('*').unwrap_or(stripped).trim();
        if body.is_empty() || body == "+" {
            return Ok((1.0, true));
        }
        if body == "-" {
            return Ok((-1.0, true));
        }
    }
    body.parse::<f64>()
        .map(|v| (v, imaginary))
        .map_err(|_| format!("invalid float literal part `{part}`"))
}

fn parse_complex_float(s: &str) -> Result<ComplexDouble, String> {
    // split at a top-level +/- that is not a leading sign and not part of a
    // scientific-notation exponent
    let chars: Vec<char> = s.chars().collect();
    let mut split = None;
    for (idx, &c) in chars.iter().enumerate() {
        if (c == '+' || c == '-') && idx > 0 {
            let prev = chars[idx - 1];
            if prev != 'e' && prev != 'E' && prev != '+' && prev != '-' {
                split = Some(idx);
            }
        }
    }
    let (mut re, mut im) = (0.0, 0.0);
    let mut assign = |(value, imaginary): (f64, bool)| {
        if imaginary {
            im += value;
        } else {
            re += value;
        }
    };
    match split {
        Some(idx) => {
            assign(parse_float_part(&s[..idx])?);
            assign(parse_float_part(&s[idx..])?);
        }
        None => assign(parse_float_part(s)?),
    }
    Ok(ComplexDouble::new(re, im))
}

impl std::str::FromStr for Literal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty number literal".into());
        }
        if compact.contains('.') {
            parse_complex_float(&compact).map(Literal::Float)
        } else {
            compact
                .parse::<GaussianRational>()
                .map(Literal::Exact)
                .map_err(|e| e.to_string())
        }
    }
}

/// Render a float with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn format_complex(z: ComplexDouble) -> String {
    if z.im == 0.0 {
        format_float(z.re)
    } else if z.re == 0.0 {
        format!("{}i", format_float(z.im))
    } else if z.im < 0.0 {
        format!("{}{}i", format_float(z.re), format_float(z.im))
    } else {
        format!("{}+{}i", format_float(z.re), format_float(z.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_vs_float_dispatch() {
        assert!(matches!("1/2".parse::<Literal>().unwrap(), Literal::Exact(_)));
        assert!(matches!("0.5".parse::<Literal>().unwrap(), Literal::Float(_)));
        assert!(matches!("i".parse::<Literal>().unwrap(), Literal::Exact(_)));
        let z = "1.5-0.5i".parse::<Literal>().unwrap();
        assert_eq!(z.to_complex(), ComplexDouble::new(1.5, -0.5));
        let z = "2.5e-1".parse::<Literal>().unwrap();
        assert_eq!(z.to_complex(), ComplexDouble::new(0.25, 0.0));
        assert!("abc".parse::<Literal>().is_err());
    }

    #[test]
    fn float_rendering_has_17_significant_digits() {
        assert_eq!(format_float(0.25), "2.5000000000000000e-1");
        assert!(format_complex(ComplexDouble::new(0.0, -1.0)).ends_with('i'));
    }
}
