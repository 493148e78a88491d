use std::f64::consts::PI;

use h2sym_core::exact::{GRat, Rational};
use h2sym_core::{Moebius, SymbolParams};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::complex_arg::format_complex;

/// Summary-region margin kept by every sampler: `|a| + |b(1 - a)| <= 0.9`.
const MARGIN: f64 = 0.9;
const A_RADIUS: f64 = 0.9;
const B_BOUND: f64 = 0.8;
/// Numerators in `[-12, 12]`, denominators in `[1, 12]`.
const RATIONAL_SPAN: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sampler {
    /// Complex `a`, real `b`.
    RealB,
    /// Real `a` and `b`.
    RealAB,
    /// Complex `a`, `b = b1 e^{i theta}`.
    Rotated,
    /// Gaussian-rational `a`, rational `b`.
    ExactRational,
    /// Real `b` only, for operators built from `tau` and `zeta`.
    ConjugationB,
    /// A generic linear-fractional self-map.
    SelfMap,
    /// A single fixed configuration.
    Fixed(FixedConfig),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedConfig {
    /// `sigma` at `(a, b)` under the conjugation built at `b_prime`.
    Mismatched { a: f64, b: f64, b_prime: f64 },
    /// `phi = 1/(3 - z)`.
    OneOverThreeMinusZ,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampleParams {
    Symbol(SymbolParams),
    Rotated {
        params: SymbolParams,
        b1: f64,
        theta: f64,
    },
    Exact(SymbolParams<Rational>),
    Conjugation {
        b: f64,
    },
    SelfMap(Moebius),
    Fixed(FixedConfig),
}

impl SampleParams {
    /// Name/value pairs for reports.
    pub fn describe(&self) -> Vec<(String, String)> {
        let c = |z: Complex64| format_complex(z);
        let r = |x: f64| format!("{x:?}");
        let pairs: Vec<(&str, String)> = match self {
            SampleParams::Symbol(p) => vec![("a", c(*p.a())), ("b", c(*p.b()))],
            SampleParams::Rotated { params, b1, theta } => vec![
                ("a", c(*params.a())),
                ("b", c(*params.b())),
                ("b1", r(*b1)),
                ("theta", r(*theta)),
            ],
            SampleParams::Exact(p) => vec![
                ("a", format!("{}+{}i", p.a().re, p.a().im)),
                ("b", p.b().re.to_string()),
            ],
            SampleParams::Conjugation { b } => vec![("b", r(*b))],
            SampleParams::SelfMap(m) => {
                vec![("a", c(m.a)), ("b", c(m.b)), ("c", c(m.c)), ("d", c(m.d))]
            }
            SampleParams::Fixed(FixedConfig::Mismatched { a, b, b_prime }) => {
                vec![("a", r(*a)), ("b", r(*b)), ("b_prime", r(*b_prime))]
            }
            SampleParams::Fixed(FixedConfig::OneOverThreeMinusZ) => {
                vec![("phi", "1/(3 - z)".to_string())]
            }
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }
}

fn disk_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let z = Complex64::new(
            rng.gen_range(-radius..=radius),
            rng.gen_range(-radius..=radius),
        );
        if z.norm() <= radius {
            return z;
        }
    }
}

/// Rejects until the margin holds; `SymbolParams::new` rejects anything
/// inadmissible, so invalid draws are resampled rather than passed.
fn symbol(
    rng: &mut ChaCha8Rng,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> (Complex64, Complex64),
) -> SymbolParams {
    loop {
        let (a, b) = draw(rng);
        if let Ok(p) = SymbolParams::new(a, b) {
            if p.within(&MARGIN) {
                return p;
            }
        }
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-RATIONAL_SPAN..=RATIONAL_SPAN);
    let d = rng.gen_range(1..=RATIONAL_SPAN);
    BigRational::new(n.into(), d.into())
}

impl Sampler {
    pub fn draw(&self, rng: &mut ChaCha8Rng) -> SampleParams {
        match *self {
            Sampler::RealB => SampleParams::Symbol(symbol(rng, |rng| {
                let a = disk_point(rng, A_RADIUS);
                let b = rng.gen_range(-B_BOUND..B_BOUND);
                (a, Complex64::new(b, 0.0))
            })),
            Sampler::RealAB => SampleParams::Symbol(symbol(rng, |rng| {
                let a = rng.gen_range(-A_RADIUS..=A_RADIUS);
                let b = rng.gen_range(-B_BOUND..B_BOUND);
                (Complex64::new(a, 0.0), Complex64::new(b, 0.0))
            })),
            Sampler::Rotated => {
                let mut b1 = 0.0;
                let mut theta = 0.0;
                let params = symbol(rng, |rng| {
                    let a = disk_point(rng, A_RADIUS);
                    b1 = rng.gen_range(0.0..B_BOUND);
                    theta = rng.gen_range(0.0..2.0 * PI);
                    (a, Complex64::from_polar(b1, theta))
                });
                SampleParams::Rotated { params, b1, theta }
            }
            Sampler::ExactRational => {
                let bound = BigRational::new(9.into(), 10.into());
                loop {
                    let a = GRat::new(small_rational(rng), small_rational(rng));
                    let b = GRat::new(small_rational(rng), Rational::zero());
                    if let Ok(p) = SymbolParams::new(a, b) {
                        if p.within(&bound) {
                            return SampleParams::Exact(p);
                        }
                    }
                }
            }
            Sampler::ConjugationB => SampleParams::Conjugation {
                b: rng.gen_range(-B_BOUND..B_BOUND),
            },
            Sampler::SelfMap => {
                // r * (w - z)/(1 - conj(w) z) + s maps the disk into |z| <= r + |s|
                let r = rng.gen_range(0.05..0.6);
                let w = disk_point(rng, 0.7);
                let s = disk_point(rng, 0.3);
                let m = Moebius {
                    a: -r - s * w.conj(),
                    b: r * w + s,
                    c: -w.conj(),
                    d: Complex64::new(1.0, 0.0),
                };
                SampleParams::SelfMap(m)
            }
            Sampler::Fixed(cfg) => SampleParams::Fixed(cfg),
        }
    }
}
