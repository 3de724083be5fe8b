//! Textual function descriptors such as `poly:1,0,0.5` or `ga:0.9`.

use bergman_kit::kernel::k_disc;
use bergman_kit::projection::WitnessGa;
use bergman_kit::quad::Smoothness;
use bergman_kit::{Complex64, DiscPoint, Samplable, TaylorPoly, Weight};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}, token '{token}': {message}")]
pub struct ParseError {
    pub token: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(token: &str, position: usize, message: impl Into<String>) -> Self {
        Self {
            token: token.to_string(),
            position,
            message: message.into(),
        }
    }
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i` or `-i`, without spaces.
pub fn parse_complex(text: &str) -> Option<Complex64> {
    if text.is_empty() || text.contains(char::is_whitespace) {
        return None;
    }
    let Some(body) = text.strip_suffix('i') else {
        return text.parse::<f64>().ok().filter(|x| x.is_finite()).map(|x| Complex64::new(x, 0.0));
    };
    // the sign that starts the imaginary part, skipping exponent signs
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().ok()?, imaginary_coefficient(&body[k..])?),
        None => (0.0, imaginary_coefficient(body)?),
    };
    (re.is_finite() && im.is_finite()).then_some(Complex64::new(re, im))
}

fn imaginary_coefficient(text: &str) -> Option<f64> {
    match text {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => text.parse().ok(),
    }
}

/// Shortest text that [`parse_complex`] maps back to the same value.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// A function on the disc described by text.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `poly:c0,c1,...`
    Poly(TaylorPoly),
    /// `conj-monomial:k`, the function `conj(z)^k` with `k >= 1`.
    ConjMonomial(u32),
    /// `ga:a`, the unimodular witness `g_a`.
    Ga(WitnessGa),
    /// `normkernel:z0`, the kernel at `z0` divided by its diagonal value.
    NormKernel(DiscPoint),
    /// `const:c`
    Const(Complex64),
}

impl FunctionSpec {
    /// The value of the unweighted or weighted projection at `z` when it is
    /// known in closed form: analytic functions are fixed and `conj(z)^k` is
    /// annihilated.
    pub fn projection_oracle(&self, z: DiscPoint) -> Option<Complex64> {
        match self {
            FunctionSpec::ConjMonomial(_) => Some(Complex64::new(0.0, 0.0)),
            FunctionSpec::Ga(_) => None,
            analytic => Some(analytic.eval(z)),
        }
    }
}

impl Samplable for FunctionSpec {
    fn eval(&self, z: DiscPoint) -> Complex64 {
        match self {
            FunctionSpec::Poly(p) => p.eval(z.value()),
            FunctionSpec::ConjMonomial(k) => z.value().conj().powu(*k),
            FunctionSpec::Ga(g) => g.eval(z),
            FunctionSpec::NormKernel(z0) => {
                let w = Weight::unweighted();
                k_disc(z, *z0, w) / k_disc(*z0, *z0, w)
            }
            FunctionSpec::Const(c) => *c,
        }
    }

    fn smoothness(&self) -> Smoothness {
        match self {
            FunctionSpec::Ga(_) => Smoothness::Bounded,
            _ => Smoothness::Smooth,
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::new(text, 0, "empty function descriptor"));
        }
        let Some((head, body)) = text.split_once(':') else {
            return Err(ParseError::new(text, 0, "expected HEAD:ARGS"));
        };
        let start = head.len() + 1;
        let complex_at = |token: &str, pos: usize| {
            parse_complex(token).ok_or_else(|| ParseError::new(token, pos, "malformed complex literal"))
        };
        let real_at = |token: &str, pos: usize| {
            token
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| ParseError::new(token, pos, "malformed real literal"))
        };
        match head {
            "poly" => {
                let mut coeffs = Vec::new();
                let mut pos = start;
                for token in body.split(',') {
                    coeffs.push(complex_at(token, pos)?);
                    pos += token.len() + 1;
                }
                Ok(FunctionSpec::Poly(TaylorPoly::new(coeffs)))
            }
            "conj-monomial" => {
                let k: u32 = body
                    .parse()
                    .map_err(|_| ParseError::new(body, start, "malformed integer"))?;
                if k == 0 {
                    return Err(ParseError::new(body, start, "exponent k must be at least 1"));
                }
                Ok(FunctionSpec::ConjMonomial(k))
            }
            "ga" => {
                let a = real_at(body, start)?;
                WitnessGa::new(a)
                    .map(FunctionSpec::Ga)
                    .map_err(|_| ParseError::new(body, start, "parameter a out of (0,1)"))
            }
            "normkernel" => {
                let z0 = complex_at(body, start)?;
                DiscPoint::new(z0)
                    .map(FunctionSpec::NormKernel)
                    .map_err(|_| ParseError::new(body, start, "point z0 must satisfy |z0| < 1"))
            }
            "const" => Ok(FunctionSpec::Const(complex_at(body, start)?)),
            _ => Err(ParseError::new(head, 0, "unknown function head")),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Poly(p) => {
                let coeffs: Vec<String> = if p.is_zero() {
                    vec!["0".into()]
                } else {
                    p.coeffs().iter().map(|c| format_complex(*c)).collect()
                };
                write!(f, "poly:{}", coeffs.join(","))
            }
            FunctionSpec::ConjMonomial(k) => write!(f, "conj-monomial:{k}"),
            FunctionSpec::Ga(g) => write!(f, "ga:{}", g.a()),
            FunctionSpec::NormKernel(z0) => write!(f, "normkernel:{}", format_complex(z0.value())),
            FunctionSpec::Const(c) => write!(f, "const:{}", format_complex(*c)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5"), Some(c(1.5, 0.0)));
        assert_eq!(parse_complex("1+2i"), Some(c(1.0, 2.0)));
        assert_eq!(parse_complex("-0.5-0.25i"), Some(c(-0.5, -0.25)));
        assert_eq!(parse_complex("3i"), Some(c(0.0, 3.0)));
        assert_eq!(parse_complex("-i"), Some(c(0.0, -1.0)));
        assert_eq!(parse_complex("1e-3+2e-2i"), Some(c(1e-3, 2e-2)));
        assert_eq!(parse_complex("1 + 2i"), None);
        assert_eq!(parse_complex("1+2j"), None);
        assert_eq!(parse_complex(""), None);
        assert_eq!(parse_complex("nan"), None);
    }

    #[test]
    fn descriptors() {
        let f: FunctionSpec = "poly:1,0,0.5".parse().unwrap();
        assert_eq!(f, FunctionSpec::Poly(TaylorPoly::from_real(&[1.0, 0.0, 0.5])));
        assert_eq!(f.to_string(), "poly:1,0,0.5");

        let g: FunctionSpec = "ga:0.9".parse().unwrap();
        assert_eq!(g, FunctionSpec::Ga(WitnessGa::new(0.9).unwrap()));

        let err = "ga:1.5".parse::<FunctionSpec>().unwrap_err();
        assert_eq!(err.message, "parameter a out of (0,1)");
        assert_eq!((err.token.as_str(), err.position), ("1.5", 3));
    }

    #[test]
    fn errors_name_token_and_position() {
        let err = "poly:1,x,2".parse::<FunctionSpec>().unwrap_err();
        assert_eq!((err.token.as_str(), err.position), ("x", 7));
        let err = "sine:1".parse::<FunctionSpec>().unwrap_err();
        assert_eq!(err.token, "sine");
        assert!("conj-monomial:0".parse::<FunctionSpec>().is_err());
        assert!("normkernel:1".parse::<FunctionSpec>().is_err());
        assert!("".parse::<FunctionSpec>().is_err());
        assert!("poly".parse::<FunctionSpec>().is_err());
    }

    #[test]
    fn canonical_forms() {
        for (input, canonical) in [
            ("poly:1,0,0,0", "poly:1"),
            ("poly:0,0", "poly:0"),
            ("poly:1.0,+2i,3-0i", "poly:1,2i,3"),
            ("const:-i", "const:-1i"),
            ("normkernel:0.5+0i", "normkernel:0.5"),
        ] {
            let f: FunctionSpec = input.parse().unwrap();
            assert_eq!(f.to_string(), canonical);
            assert_eq!(canonical.parse::<FunctionSpec>().unwrap(), f);
        }
    }

    #[test]
    fn sampled_values() {
        let z = DiscPoint::new(c(0.3, 0.4)).unwrap();
        let f: FunctionSpec = "conj-monomial:2".parse().unwrap();
        assert!((f.eval(z) - c(0.3, -0.4).powu(2)).norm() < 1e-15);
        let k: FunctionSpec = "normkernel:0.5".parse().unwrap();
        let at = DiscPoint::from_real(0.5).unwrap();
        assert!((k.eval(at) - 1.0).norm() < 1e-15);
        assert_eq!(f.projection_oracle(z), Some(c(0.0, 0.0)));
        assert_eq!("ga:0.5".parse::<FunctionSpec>().unwrap().smoothness(), Smoothness::Bounded);
    }

    proptest! {
        #[test]
        fn complex_print_parse_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = c(re, im);
            prop_assert_eq!(parse_complex(&format_complex(z)), Some(z));
        }

        #[test]
        fn descriptor_round_trip(coeffs in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..6)) {
            let text = format!(
                "poly:{}",
                coeffs.iter().map(|&(a, b)| format_complex(c(a, b))).collect::<Vec<_>>().join(",")
            );
            let f: FunctionSpec = text.parse().unwrap();
            let printed = f.to_string();
            prop_assert_eq!(printed.parse::<FunctionSpec>().unwrap(), f);
        }
    }
}
