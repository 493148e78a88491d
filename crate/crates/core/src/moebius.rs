//! Linear-fractional maps `z -> (az + b)/(cz + d)` and the symbol families
//! used to build complex symmetric composition operators.
//!
//! Maps are generic over the real scalar: `Moebius<f64>` drives the
//! numerical matrices, `Moebius<BigRational>` the exact identity checks.
//! Coefficient matrices are projective, so two maps are compared with
//! [`Moebius::same_map`] rather than `==`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::{Complex, Complex64};
use num_traits::{Float, One, Zero};

use crate::error::MoebiusError;
use crate::scalar::{norm_sqr, to_c64, Real};

/// A linear-fractional map `(az + b)/(cz + d)`.
///
/// Either `ad - bc != 0`, or the map is a constant stored as
/// `(0z + b)/(0z + d)` with `d != 0`. Constants arise as the degenerate
/// members `a = 0` of the symbol families.
#[derive(Debug, Clone, PartialEq)]
pub struct Moebius<T = f64> {
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub c: Complex<T>,
    pub d: Complex<T>,
}

impl<T: Real> Moebius<T> {
    /// Builds a map from its coefficient matrix `[[a, b], [c, d]]`.
    ///
    /// A rank-one matrix is read as the constant map it induces and stored
    /// in canonical constant form.
    pub fn new(
        a: Complex<T>,
        b: Complex<T>,
        c: Complex<T>,
        d: Complex<T>,
    ) -> Result<Self, MoebiusError> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if !det.is_zero() {
            return Ok(Moebius { a, b, c, d });
        }
        if c.is_zero() && d.is_zero() {
            return Err(MoebiusError::Degenerate);
        }
        let value = if !d.is_zero() { b / d } else { a / c };
        Ok(Self::constant(value))
    }

    pub fn identity() -> Self {
        Moebius {
            a: Complex::one(),
            b: Complex::zero(),
            c: Complex::zero(),
            d: Complex::one(),
        }
    }

    pub fn constant(value: Complex<T>) -> Self {
        Moebius {
            a: Complex::zero(),
            b: value,
            c: Complex::zero(),
            d: Complex::one(),
        }
    }

    /// `z -> slope * z + offset`.
    pub fn affine(slope: Complex<T>, offset: Complex<T>) -> Self {
        if slope.is_zero() {
            return Self::constant(offset);
        }
        Moebius {
            a: slope,
            b: offset,
            c: Complex::zero(),
            d: Complex::one(),
        }
    }

    pub fn determinant(&self) -> Complex<T> {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn is_constant(&self) -> bool {
        self.a.is_zero() && self.c.is_zero()
    }

    /// `self ∘ inner`, i.e. `z -> self(inner(z))`, from the matrix product
    /// `matrix(self) * matrix(inner)`.
    pub fn compose(&self, inner: &Self) -> Result<Self, MoebiusError> {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&inner.a, &inner.b, &inner.c, &inner.d);
        Self::new(
            a1.clone() * a2.clone() + b1.clone() * c2.clone(),
            a1.clone() * b2.clone() + b1.clone() * d2.clone(),
            c1.clone() * a2.clone() + d1.clone() * c2.clone(),
            c1.clone() * b2.clone() + d1.clone() * d2.clone(),
        )
    }

    /// The map `z -> conj(m(conj z))`: every coefficient conjugated.
    pub fn reflect_conj(&self) -> Self {
        Moebius {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
        }
    }

    /// Scales so that `d = 1`, or `c = 1` when `d = 0`.
    pub fn normalized(&self) -> Self {
        let s = if !self.d.is_zero() {
            self.d.clone()
        } else {
            self.c.clone()
        };
        Moebius {
            a: self.a.clone() / s.clone(),
            b: self.b.clone() / s.clone(),
            c: self.c.clone() / s.clone(),
            d: self.d.clone() / s,
        }
    }

    fn coefficient_minors(&self, other: &Self) -> [Complex<T>; 6] {
        let x = [&self.a, &self.b, &self.c, &self.d];
        let y = [&other.a, &other.b, &other.c, &other.d];
        let minor = |i: usize, j: usize| x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
        [
            minor(0, 1),
            minor(0, 2),
            minor(0, 3),
            minor(1, 2),
            minor(1, 3),
            minor(2, 3),
        ]
    }

    /// Exact equality as maps: the coefficient matrices are proportional.
    pub fn same_map(&self, other: &Self) -> bool {
        self.coefficient_minors(other).iter().all(Zero::is_zero)
    }

    /// Value at `z`, or `None` at the pole.
    pub fn eval(&self, z: &Complex<T>) -> Option<Complex<T>> {
        let den = self.c.clone() * z.clone() + self.d.clone();
        if den.is_zero() {
            return None;
        }
        Some((self.a.clone() * z.clone() + self.b.clone()) / den)
    }

    /// `|d|^2 - |c|^2`, positive exactly when the pole lies outside the
    /// closed disk.
    fn disk_margin(&self) -> Result<T, MoebiusError> {
        let margin = norm_sqr(&self.d) - norm_sqr(&self.c);
        if margin <= T::zero() {
            return Err(MoebiusError::PoleInClosedDisk);
        }
        Ok(margin)
    }

    /// Center numerator `b conj(d) - a conj(c)`; divide by the disk margin.
    fn image_center_numerator(&self) -> Complex<T> {
        self.b.clone() * self.d.conj() - self.a.clone() * self.c.conj()
    }

    /// Whether the image of the open disk lies in the closed disk.
    ///
    /// The image is the disk with center `(b conj(d) - a conj(c)) / D` and
    /// radius `|ad - bc| / D`, `D = |d|^2 - |c|^2`. The containment test
    /// `|center| + radius <= 1` is exact for rational coefficients.
    pub fn is_self_map(&self) -> Result<bool, MoebiusError> {
        let margin = self.disk_margin()?;
        let center_sq = norm_sqr(&self.image_center_numerator());
        let radius_sq = norm_sqr(&self.determinant());
        Ok(T::root_sum_le(&center_sq, &radius_sq, &margin))
    }

    /// Cowen's adjoint data: `C_m^* = T_g C_phi T_h^*` with
    /// `g = 1/(-conj(b) z + conj(d))`, `h = cz + d` and
    /// `phi = (conj(a) z - conj(c)) / (-conj(b) z + conj(d))`.
    pub fn krein_adjoint(&self) -> Result<KreinAdjoint<T>, MoebiusError> {
        if !self.is_self_map()? {
            return Err(MoebiusError::NotSelfMap);
        }
        let g = AnalyticWeight::new(
            [Complex::one(), Complex::zero()],
            [self.d.conj(), -self.b.conj()],
        )?;
        let h = AnalyticWeight::polynomial(self.d.clone(), self.c.clone());
        let phi = Moebius::new(self.a.conj(), -self.c.conj(), -self.b.conj(), self.d.conj())?;
        Ok(KreinAdjoint { g, h, phi })
    }

    pub fn to_f64(&self) -> Moebius<f64> {
        Moebius {
            a: to_c64(&self.a),
            b: to_c64(&self.b),
            c: to_c64(&self.c),
            d: to_c64(&self.d),
        }
    }
}

impl Moebius<f64> {
    /// Equality as maps up to relative tolerance on the coefficient minors.
    pub fn approx_same_map(&self, other: &Self, tol: f64) -> bool {
        let scale = |m: &Self| {
            [m.a, m.b, m.c, m.d]
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max)
        };
        let bound = tol * scale(self) * scale(other);
        self.coefficient_minors(other)
            .iter()
            .all(|m| m.norm() <= bound)
    }

    /// Center and radius of the image of the open unit disk.
    pub fn image_disk(&self) -> Result<(Complex64, f64), MoebiusError> {
        let margin = self.disk_margin()?;
        let center = self.image_center_numerator() / margin;
        let radius = self.determinant().norm() / margin;
        Ok((center, radius))
    }

    /// Fixed points in the extended plane, from `cz^2 + (d - a)z - b = 0`.
    pub fn fixed_points(&self) -> FixedPoints {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if c.is_zero() {
            if a == d {
                return if b.is_zero() {
                    FixedPoints::All
                } else {
                    FixedPoints::Points(vec![ExtendedPoint::Infinity])
                };
            }
            let mut pts = vec![ExtendedPoint::Finite(b / (d - a))];
            if !a.is_zero() {
                pts.push(ExtendedPoint::Infinity);
            }
            return FixedPoints::Points(pts);
        }
        let half_lin = (a - d) / (c * 2.0);
        let disc = (d - a) * (d - a) + b * c * 4.0;
        if disc.is_zero() {
            return FixedPoints::Points(vec![ExtendedPoint::Finite(half_lin)]);
        }
        let root = disc.sqrt() / (c * 2.0);
        FixedPoints::Points(vec![
            ExtendedPoint::Finite(half_lin + root),
            ExtendedPoint::Finite(half_lin - root),
        ])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint {
    Finite(Complex64),
    Infinity,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FixedPoints {
    /// The identity map.
    All,
    Points(Vec<ExtendedPoint>),
}

/// Output of [`Moebius::krein_adjoint`].
#[derive(Debug, Clone, PartialEq)]
pub struct KreinAdjoint<T = f64> {
    pub g: AnalyticWeight<T>,
    pub h: AnalyticWeight<T>,
    pub phi: Moebius<T>,
}

/// A bounded analytic weight `sqrt(s) * (n0 + n1 z) / (d0 + d1 z)`, the
/// prefactor present only when `surd_square` is set.
///
/// The denominator has no zero in the closed disk: `|d1| < |d0|`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticWeight<T = f64> {
    pub num: [Complex<T>; 2],
    pub den: [Complex<T>; 2],
    pub surd_square: Option<T>,
}

impl<T: Real> AnalyticWeight<T> {
    pub fn new(num: [Complex<T>; 2], den: [Complex<T>; 2]) -> Result<Self, MoebiusError> {
        if norm_sqr(&den[1]) >= norm_sqr(&den[0]) {
            return Err(MoebiusError::PoleInClosedDisk);
        }
        Ok(AnalyticWeight {
            num,
            den,
            surd_square: None,
        })
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::polynomial(c, Complex::zero())
    }

    /// `c0 + c1 z`.
    pub fn polynomial(c0: Complex<T>, c1: Complex<T>) -> Self {
        AnalyticWeight {
            num: [c0, c1],
            den: [Complex::one(), Complex::zero()],
            surd_square: None,
        }
    }

    /// Multiplies by the positive square root of `square`.
    pub fn with_surd(mut self, square: T) -> Self {
        self.surd_square = Some(square);
        self
    }

    /// Numerator and denominator scaled so the denominator's constant term
    /// is 1; the surd factor is kept symbolic.
    pub fn normalized(&self) -> Self {
        let s = self.den[0].clone();
        AnalyticWeight {
            num: [
                self.num[0].clone() / s.clone(),
                self.num[1].clone() / s.clone(),
            ],
            den: [Complex::one(), self.den[1].clone() / s],
            surd_square: self.surd_square.clone(),
        }
    }

    pub fn to_f64(&self) -> AnalyticWeight<f64> {
        AnalyticWeight {
            num: [to_c64(&self.num[0]), to_c64(&self.num[1])],
            den: [to_c64(&self.den[0]), to_c64(&self.den[1])],
            surd_square: self.surd_square.as_ref().map(Real::to_f64),
        }
    }
}

impl AnalyticWeight<f64> {
    pub fn prefactor(&self) -> f64 {
        self.surd_square.map_or(1.0, Float::sqrt)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.num[0] + self.num[1] * z) / (self.den[0] + self.den[1] * z) * self.prefactor()
    }
}

/// The parameter pair `(a, b)` of the symbol families, with
/// `|b| < 1` and `|a| + |b(1 - a)| <= 1`.
///
/// The inequality already forces `|a| <= 1`; `|a| = 1` is only possible
/// when `b(1 - a) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolParams<T = f64> {
    a: Complex<T>,
    b: Complex<T>,
}

impl<T: Real> SymbolParams<T> {
    pub fn new(a: Complex<T>, b: Complex<T>) -> Result<Self, MoebiusError> {
        if norm_sqr(&b) >= T::one() {
            return Err(MoebiusError::ParameterOutsideDisk);
        }
        let p = SymbolParams { a, b };
        if !p.within(&T::one()) {
            return Err(MoebiusError::Inadmissible);
        }
        Ok(p)
    }

    /// Whether `|a| + |b(1 - a)| <= bound`.
    pub fn within(&self, bound: &T) -> bool {
        T::root_sum_le(&norm_sqr(&self.a), &norm_sqr(&self.fixed_offset()), bound)
    }

    pub fn a(&self) -> &Complex<T> {
        &self.a
    }

    pub fn b(&self) -> &Complex<T> {
        &self.b
    }

    /// `b(1 - a)`, the value `sigma(0)`.
    pub fn fixed_offset(&self) -> Complex<T> {
        let one: Complex<T> = Complex::one();
        self.b.clone() * (one - self.a.clone())
    }

    /// `(conj a, conj b)`; admissibility is preserved.
    pub fn conj(&self) -> Self {
        SymbolParams {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }

    pub fn to_f64(&self) -> SymbolParams<f64> {
        SymbolParams {
            a: to_c64(&self.a),
            b: to_c64(&self.b),
        }
    }
}

/// `sigma(z) = az + b(1 - a)`.
pub fn sigma_family<T: Real>(p: &SymbolParams<T>) -> Moebius<T> {
    Moebius::affine(p.a.clone(), p.fixed_offset())
}

/// `phi(z) = az / (1 - b(1 - a)z)` and `psi(z) = 1 / (1 - b(1 - a)z)`, with
/// unconjugated parameters.
pub fn phi_psi_family<T: Real>(p: &SymbolParams<T>) -> (Moebius<T>, AnalyticWeight<T>) {
    let shift = p.fixed_offset();
    let phi = if p.a.is_zero() {
        Moebius::constant(Complex::zero())
    } else {
        Moebius {
            a: p.a.clone(),
            b: Complex::zero(),
            c: -shift.clone(),
            d: Complex::one(),
        }
    };
    let psi = AnalyticWeight {
        num: [Complex::one(), Complex::zero()],
        den: [Complex::one(), -shift],
        surd_square: None,
    };
    (phi, psi)
}

/// The adjoint-side pair: `phi_psi_family` at `(conj a, conj b)`, so that
/// `C_sigma^* = T_psi C_phi`. For real `b` this is
/// `phi = conj(a) z / (1 - b(1 - conj a)z)`.
pub fn adjoint_phi_psi_family<T: Real>(p: &SymbolParams<T>) -> (Moebius<T>, AnalyticWeight<T>) {
    phi_psi_family(&p.conj())
}

/// `tau(z) = (b - z)/(1 - bz)` and `zeta(z) = sqrt(1 - b^2) / (1 - bz)` for
/// real `b` in `(-1, 1)`.
pub fn tau_zeta<T: Real>(b: T) -> Result<(Moebius<T>, AnalyticWeight<T>), MoebiusError> {
    let one = T::one();
    if b.clone() * b.clone() >= one {
        return Err(MoebiusError::ParameterOutsideDisk);
    }
    let bc = Complex::new(b.clone(), T::zero());
    let tau = Moebius {
        a: -Complex::one(),
        b: bc.clone(),
        c: -bc.clone(),
        d: Complex::one(),
    };
    let zeta = AnalyticWeight {
        num: [Complex::one(), Complex::zero()],
        den: [Complex::one(), -bc],
        surd_square: Some(one - b.clone() * b),
    };
    Ok((tau, zeta))
}

/// Renders a coefficient; non-real values use the `re+imi` grammar.
fn scalar_text(z: Complex64) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format!("{}", z.re),
        (true, false) => format!("{}i", z.im),
        (false, false) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{}{}i", z.re, sign, z.im.abs())
        }
    }
}

/// Writes `c1 z + c0`, dropping zero terms.
fn fmt_linear(f: &mut fmt::Formatter<'_>, c0: Complex64, c1: Complex64) -> fmt::Result {
    let mut terms: Vec<(bool, String)> = Vec::new();
    if !c1.is_zero() {
        let term = if c1.im != 0.0 {
            (false, format!("({})z", scalar_text(c1)))
        } else if c1.re.abs() == 1.0 {
            (c1.re < 0.0, String::from("z"))
        } else {
            (c1.re < 0.0, format!("{}z", c1.re.abs()))
        };
        terms.push(term);
    }
    if !c0.is_zero() || terms.is_empty() {
        let term = if c0.im != 0.0 {
            (false, format!("({})", scalar_text(c0)))
        } else {
            (c0.re < 0.0, format!("{}", c0.re.abs()))
        };
        terms.push(term);
    }
    for (i, (negative, text)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, true) => write!(f, "-{text}")?,
            (0, false) => write!(f, "{text}")?,
            (_, true) => write!(f, " - {text}")?,
            (_, false) => write!(f, " + {text}")?,
        }
    }
    Ok(())
}

impl fmt::Display for Moebius<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.normalized();
        if m.c.is_zero() && m.d == Complex64::one() {
            return fmt_linear(f, m.b, m.a);
        }
        write!(f, "(")?;
        fmt_linear(f, m.b, m.a)?;
        write!(f, ")/(")?;
        fmt_linear(f, m.d, m.c)?;
        write!(f, ")")
    }
}

impl fmt::Display for AnalyticWeight<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.normalized();
        if let Some(s) = w.surd_square {
            write!(f, "sqrt({s}) * ")?;
        }
        if w.den[1].is_zero() {
            return fmt_linear(f, w.num[0], w.num[1]);
        }
        // a plain non-negative constant numerator needs no parentheses
        if w.num[1].is_zero() && w.num[0].im == 0.0 && w.num[0].re >= 0.0 {
            fmt_linear(f, w.num[0], w.num[1])?;
        } else {
            write!(f, "(")?;
            fmt_linear(f, w.num[0], w.num[1])?;
            write!(f, ")")?;
        }
        write!(f, "/(")?;
        fmt_linear(f, w.den[0], w.den[1])?;
        write!(f, ")")
    }
}
