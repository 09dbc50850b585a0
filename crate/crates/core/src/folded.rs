//! Folded Gabidulin codes and their list decoder.
//!
//! With `γ` primitive, `h | n` and `g = n/h`, the message polynomial `f_u` is
//! evaluated at `γ^0, .., γ^{n-1}` and the evaluations are grouped into a
//! `g × h` matrix whose row `i` is `(f_u(γ^{ih}), .., f_u(γ^{ih+h-1}))`.
//! Expanding each entry over GF(q) gives a `g × hm` matrix, and the distance
//! between codewords is the rank of their difference.
//!
//! The decoder interpolates through the `g(h-s+1)` windows
//! `(γ^{ih+j}, y_{i,j}, .., y_{i,j+s-1})` and reuses the message-recovery
//! solver with the same shift structure as the subspace code.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldArith, FieldElement, Matrix};
use crate::interpolation::{self, InterpolationPoint, InterpolationPolynomials};
use crate::message::Message;
use crate::recovery::{recover_messages, AffineSolutionSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGabidulin {
    field: Field,
    n: usize,
    k: usize,
    h: usize,
    s: usize,
    gamma: FieldElement,
}

/// A `g × h` matrix over GF(q^m), row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoldedCodeword {
    g: usize,
    h: usize,
    entries: Vec<FieldElement>,
}

/// JSON form `{g, h, entries}`; `entries` lists `g*h` coordinate arrays in
/// row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldedCodewordJson {
    pub g: usize,
    pub h: usize,
    pub entries: Vec<Vec<u32>>,
}

impl FoldedCodeword {
    pub fn new(g: usize, h: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != g * h {
            return Err(Error::ShapeMismatch(format!("{} entries for a {g} x {h} codeword", entries.len())));
        }
        Ok(FoldedCodeword { g, h, entries })
    }

    pub fn zero(g: usize, h: usize) -> Self {
        FoldedCodeword { g, h, entries: vec![FieldElement::ZERO; g * h] }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.h + j]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.h..(i + 1) * self.h]
    }

    fn check_shape(&self, other: &FoldedCodeword) -> Result<()> {
        if (self.g, self.h) != (other.g, other.h) {
            return Err(Error::ShapeMismatch(format!("{} x {} vs {} x {}", self.g, self.h, other.g, other.h)));
        }
        Ok(())
    }

    pub fn add(&self, field: &Field, other: &FoldedCodeword) -> Result<FoldedCodeword> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| field.add(a, b)).collect();
        Ok(FoldedCodeword { g: self.g, h: self.h, entries })
    }

    pub fn sub(&self, field: &Field, other: &FoldedCodeword) -> Result<FoldedCodeword> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| field.sub(a, b)).collect();
        Ok(FoldedCodeword { g: self.g, h: self.h, entries })
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> FoldedCodeword {
        let entries = self.entries.iter().map(|&a| field.mul(c, a)).collect();
        FoldedCodeword { g: self.g, h: self.h, entries }
    }

    /// The `g × hm` expansion over GF(q).
    pub fn expand(&self, field: &Field) -> Matrix<u32> {
        let rows: Vec<Vec<u32>> =
            (0..self.g).map(|i| self.row(i).iter().flat_map(|&e| field.coords(e)).collect()).collect();
        Matrix::from_rows(self.h * field.m(), &rows)
    }

    /// Inverse of [`FoldedCodeword::expand`].
    pub fn from_expanded(field: &Field, h: usize, m: &Matrix<u32>) -> Result<Self> {
        let fm = field.m();
        if m.cols() != h * fm {
            return Err(Error::ShapeMismatch(format!("expected {} columns, got {}", h * fm, m.cols())));
        }
        let entries = m
            .row_iter()
            .flat_map(|r| r.chunks(fm).map(|c| field.from_coords(c)).collect::<Vec<_>>())
            .collect::<Result<Vec<_>>>()?;
        FoldedCodeword::new(m.rows(), h, entries)
    }

    pub fn to_json(&self, field: &Field) -> FoldedCodewordJson {
        FoldedCodewordJson { g: self.g, h: self.h, entries: self.entries.iter().map(|&e| field.coords(e)).collect() }
    }

    pub fn from_json(field: &Field, json: &FoldedCodewordJson) -> Result<Self> {
        let entries = json.entries.iter().map(|c| field.from_coords(c)).collect::<Result<Vec<_>>>()?;
        FoldedCodeword::new(json.g, json.h, entries)
    }
}

/// Rank over GF(q) of the expansion of `x - y`.
pub fn rank_distance(field: &Field, x: &FoldedCodeword, y: &FoldedCodeword) -> Result<usize> {
    Ok(x.sub(field, y)?.expand(field).rank(field.base()))
}

impl FoldedGabidulin {
    /// Uses the field's lex-first primitive element as `γ`.
    pub fn new(field: &Field, n: usize, k: usize, h: usize, s: usize) -> Result<Self> {
        Self::with_gamma(field, n, k, h, s, field.primitive_element())
    }

    pub fn with_gamma(field: &Field, n: usize, k: usize, h: usize, s: usize, gamma: FieldElement) -> Result<Self> {
        let m = field.m();
        if !(1 <= k && k <= n && n <= m) {
            return Err(Error::BadParams(format!("need 1 <= k <= n <= m, got k = {k}, n = {n}, m = {m}")));
        }
        if h == 0 || !n.is_multiple_of(h) {
            return Err(Error::BadParams(format!("folding h = {h} must divide n = {n}")));
        }
        if !(1 <= s && s <= h) {
            return Err(Error::BadParams(format!("need 1 <= s <= h, got s = {s}, h = {h}")));
        }
        if !field.is_primitive(gamma) {
            return Err(Error::BadParams("γ must be primitive".into()));
        }
        Ok(FoldedGabidulin { field: field.clone(), n, k, h, s, gamma })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn g(&self) -> usize {
        self.n / self.h
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    pub fn rate(&self) -> Ratio<i64> {
        Ratio::new(self.k as i64, self.n as i64)
    }

    /// Evaluation point `γ^{ih+j}`.
    pub fn point(&self, i: usize, j: usize) -> FieldElement {
        self.field.pow(self.gamma, (i * self.h + j) as u64)
    }

    pub fn encode(&self, u: &Message) -> Result<FoldedCodeword> {
        if u.len() != self.k {
            return Err(Error::WrongMessageLength { expected: self.k, got: u.len() });
        }
        let f = &self.field;
        let poly = u.polynomial(f);
        let mut x = FieldElement::ONE;
        let mut entries = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            entries.push(poly.eval(x));
            x = f.mul(x, self.gamma);
        }
        FoldedCodeword::new(self.g(), self.h, entries)
    }

    /// `⌈(g(h-s+1) + s(k-1) + 1) / (s+1)⌉`.
    pub fn decoder_d(&self) -> Result<usize> {
        fg_decoder_d(self.g(), self.h, self.s, self.k)
    }

    /// Largest `t` with `d <= (g-t)(h-s+1)`, or `-1` if even `t = 0` fails.
    pub fn max_errors(&self) -> i64 {
        fg_max_errors(self.g(), self.h, self.s, self.k)
    }

    /// `s/(s+1) · (1 - h/(h-s+1) · R)`.
    pub fn normalized_radius(&self) -> Ratio<i64> {
        folded_normalized_radius(self.s as i64, self.h as i64, self.rate())
    }

    pub fn interpolation_points(&self, y: &FoldedCodeword) -> Result<Vec<InterpolationPoint>> {
        if (y.g(), y.h()) != (self.g(), self.h) {
            return Err(Error::ShapeMismatch(format!(
                "received {} x {}, code is {} x {}",
                y.g(),
                y.h(),
                self.g(),
                self.h
            )));
        }
        let mut pts = Vec::with_capacity(self.g() * (self.h - self.s + 1));
        for i in 0..self.g() {
            for j in 0..=self.h - self.s {
                pts.push(InterpolationPoint {
                    x: self.point(i, j),
                    ys: (0..self.s).map(|l| y.get(i, j + l)).collect(),
                });
            }
        }
        Ok(pts)
    }

    pub fn interpolate(&self, y: &FoldedCodeword) -> Result<InterpolationPolynomials> {
        let points = self.interpolation_points(y)?;
        let d = self.decoder_d()?;
        interpolation::interpolate(&self.field, &points, d, self.k, self.s)
    }

    pub fn list_decode(&self, y: &FoldedCodeword) -> Result<AffineSolutionSpace> {
        let q = self.interpolate(y)?;
        recover_messages(&q, self.gamma, self.k)
    }

    /// Exhaustive minimum rank distance of the unfolded (`h = 1`) code over
    /// all codeword pairs. Only for tiny parameters.
    pub fn min_distance_bruteforce(&self) -> Result<usize> {
        if self.h != 1 {
            return Err(Error::BadParams("exhaustive distance needs h = 1".into()));
        }
        let f = &self.field;
        let count = f
            .size()
            .checked_pow(self.k as u32)
            .filter(|&c| c <= MAX_BRUTEFORCE_CODEWORDS)
            .ok_or(Error::TooLarge(f.size().saturating_pow(self.k as u32)))?;
        let words: Vec<FoldedCodeword> = (0..count)
            .map(|idx| {
                let mut rest = idx;
                let symbols = (0..self.k)
                    .map(|_| {
                        let e = f.element(rest % f.size());
                        rest /= f.size();
                        e
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.encode(&Message::new(symbols))
            })
            .collect::<Result<_>>()?;
        let mut best = usize::MAX;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                best = best.min(rank_distance(f, a, b)?);
            }
        }
        Ok(best)
    }
}

/// Upper limit on the code size for [`FoldedGabidulin::min_distance_bruteforce`].
pub const MAX_BRUTEFORCE_CODEWORDS: u64 = 1 << 12;

pub fn fg_decoder_d(g: usize, h: usize, s: usize, k: usize) -> Result<usize> {
    let d = (g * (h + 1 - s) + s * (k - 1) + 1).div_ceil(s + 1);
    if d < k {
        return Err(Error::DegenerateParams { d, k });
    }
    Ok(d)
}

pub fn fg_max_errors(g: usize, h: usize, s: usize, k: usize) -> i64 {
    let Ok(d) = fg_decoder_d(g, h, s, k) else {
        return -1;
    };
    (0..=g).rev().find(|&t| d <= (g - t) * (h + 1 - s)).map_or(-1, |t| t as i64)
}

pub fn folded_normalized_radius(s: i64, h: i64, rate: Ratio<i64>) -> Ratio<i64> {
    Ratio::new(s, s + 1) * (Ratio::from_integer(1) - Ratio::new(h, h - s + 1) * rate)
}
