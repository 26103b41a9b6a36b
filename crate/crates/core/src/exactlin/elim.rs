//! Fraction-free row reduction.
//!
//! Rows are scaled to integer (or Gaussian-integer) vectors and reduced with
//! cross-multiplication followed by content removal, so no rational arithmetic
//! happens inside the elimination loop. The reduction runs first on `i128`
//! with checked arithmetic and is replayed on `BigInt` if anything overflows.
//! A final normalization pass divides each row by its pivot, producing the
//! (unique) reduced row-echelon form over Q or Q(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};


use super::scalar::{Field, Scalar};

pub(crate) trait IntLike: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    /// Nonnegative gcd.
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl IntLike for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn gcd_with(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), other.unsigned_abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        // Entries never reach i128::MIN in magnitude; checked ops guard that.
        a as i128
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        // Leave headroom so a single product cannot wrap silently.
        b.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 125))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl IntLike for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Ring in which elimination runs: integers or Gaussian integers over an
/// [`IntLike`] base.
pub(crate) trait Ring: Clone + std::fmt::Debug {
    type Int: IntLike;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    /// Folds the integer parts into a running gcd; returns true once it is 1.
    fn fold_content(&self, g: &mut Self::Int) -> bool;
    fn div_int(&self, g: &Self::Int) -> Self;
    fn from_parts(re: &BigInt, im: &BigInt) -> Option<Self>;
    fn to_scalar(&self) -> Scalar;
    /// Cancels common factors of an elimination multiplier pair.
    fn reduce_pair(a: &Self, b: &Self) -> Option<(Self, Self)> {
        Some((a.clone(), b.clone()))
    }
}

impl<I: IntLike> Ring for I {
    type Int = I;
    fn zero() -> Self {
        I::zero()
    }
    fn is_zero(&self) -> bool {
        IntLike::is_zero(self)
    }
    fn is_one(&self) -> bool {
        IntLike::is_one(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        IntLike::checked_mul(self, other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        IntLike::checked_sub(self, other)
    }
    fn fold_content(&self, g: &mut I) -> bool {
        if !IntLike::is_zero(self) {
            *g = g.gcd_with(self);
        }
        IntLike::is_one(g)
    }
    fn div_int(&self, g: &I) -> Self {
        self.div_exact(g)
    }
    fn from_parts(re: &BigInt, _im: &BigInt) -> Option<Self> {
        I::from_big(re)
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::rational(BigRational::from_integer(self.to_big()))
    }
    fn reduce_pair(a: &Self, b: &Self) -> Option<(Self, Self)> {
        let g = a.gcd_with(b);
        let (mut a, mut b) = (a.div_exact(&g), b.div_exact(&g));
        if IntLike::is_negative(&a) {
            a = I::zero().checked_sub(&a)?;
            b = I::zero().checked_sub(&b)?;
        }
        Some((a, b))
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Gauss<I> {
    re: I,
    im: I,
}

impl<I: IntLike> Ring for Gauss<I> {
    type Int = I;
    fn zero() -> Self {
        Gauss { re: I::zero(), im: I::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        let re = self.re.checked_mul(&o.re)?.checked_sub(&self.im.checked_mul(&o.im)?)?;
        let im = self.re.checked_mul(&o.im)?.checked_add(&self.im.checked_mul(&o.re)?)?;
        Some(Gauss { re, im })
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(Gauss { re: self.re.checked_sub(&o.re)?, im: self.im.checked_sub(&o.im)? })
    }
    fn fold_content(&self, g: &mut I) -> bool {
        for part in [&self.re, &self.im] {
            if !part.is_zero() {
                *g = g.gcd_with(part);
            }
        }
        g.is_one()
    }
    fn div_int(&self, g: &I) -> Self {
        Gauss { re: self.re.div_exact(g), im: self.im.div_exact(g) }
    }
    fn from_parts(re: &BigInt, im: &BigInt) -> Option<Self> {
        Some(Gauss { re: I::from_big(re)?, im: I::from_big(im)? })
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::gaussian(
            BigRational::from_integer(self.re.to_big()),
            BigRational::from_integer(self.im.to_big()),
        )
    }
}

/// `row <- a*row - b*other`, then divide out the content.
fn combine<R: Ring>(row: &mut [R], a: &R, b: &R, other: &[R]) -> Option<()> {
    if a.is_one() {
        for (x, y) in row.iter_mut().zip(other) {
            if !y.is_zero() {
                *x = x.checked_sub(&b.checked_mul(y)?)?;
            }
        }
    } else {
        for (x, y) in row.iter_mut().zip(other) {
            let scaled = if x.is_zero() { R::zero() } else { x.checked_mul(a)? };
            *x = if y.is_zero() { scaled } else { scaled.checked_sub(&b.checked_mul(y)?)? };
        }
    }
    remove_content(row);
    Some(())
}

fn remove_content<R: Ring>(row: &mut [R]) {
    let mut g = <R::Int as IntLike>::zero();
    for x in row.iter() {
        if x.fold_content(&mut g) {
            return;
        }
    }
    if IntLike::is_zero(&g) || IntLike::is_one(&g) {
        return;
    }
    for x in row.iter_mut() {
        *x = x.div_int(&g);
    }
}

/// Incrementally maintained fully reduced echelon basis.
struct Engine<R> {
    ncols: usize,
    rows: Vec<Vec<R>>,
    pivots: Vec<usize>,
}

impl<R: Ring> Engine<R> {
    fn new(ncols: usize) -> Self {
        Engine { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Returns `None` on overflow.
    fn insert(&mut self, mut row: Vec<R>) -> Option<()> {
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let (a, b) = R::reduce_pair(&basis[p], &row[p])?;
            combine(&mut row, &a, &b, basis)?;
        }
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return Some(());
        };
        for basis in self.rows.iter_mut() {
            if basis[lead].is_zero() {
                continue;
            }
            let (a, b) = R::reduce_pair(&row[lead], &basis[lead])?;
            combine(basis, &a, &b, &row)?;
        }
        self.rows.push(row);
        self.pivots.push(lead);
        Some(())
    }
}

/// Scaled integer row: sparse list of (column, real part, imaginary part).
type IntRow = Vec<(usize, BigInt, BigInt)>;

fn scale_row(row: &[(usize, Scalar)]) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, s) in row {
        lcm = lcm.lcm(&s.denom_lcm());
    }
    row.iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(c, s)| {
            let re = (s.re() * &lcm).to_integer();
            let im = (s.im() * &lcm).to_integer();
            (*c, re, im)
        })
        .collect()
}

fn run<R: Ring>(rows: &[IntRow], ncols: usize) -> Option<Engine<R>> {
    let mut engine = Engine::new(ncols);
    for row in rows {
        let mut dense = vec![R::zero(); ncols];
        for (c, re, im) in row {
            dense[*c] = R::from_parts(re, im)?;
        }
        engine.insert(dense)?;
        if engine.rows.len() == engine.ncols {
            break;
        }
    }
    Some(engine)
}

/// Reduced row-echelon form: rows sorted by pivot column, each pivot equal
/// to one and every other entry of a pivot column zero.
#[derive(Clone, Debug)]
pub(crate) struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

fn normalize<R: Ring>(engine: Engine<R>, field: Field) -> Rref {
    let mut order: Vec<usize> = (0..engine.pivots.len()).collect();
    order.sort_by_key(|&k| engine.pivots[k]);
    let mut rows = Vec::with_capacity(order.len());
    let mut pivots = Vec::with_capacity(order.len());
    for k in order {
        let p = engine.pivots[k];
        let row = &engine.rows[k];
        let lead_inv = row[p].to_scalar().inv().expect("pivot is nonzero");
        let normalized = row
            .iter()
            .map(|x| {
                let v = if x.is_zero() { Scalar::zero(field) } else { &x.to_scalar() * &lead_inv };
                v.in_field(field).expect("elimination stays in the input field")
            })
            .collect();
        rows.push(normalized);
        pivots.push(p);
    }
    Rref { rows, pivots }
}

/// Row-reduces sparse rows (column, value) over `field`.
pub(crate) fn rref_sparse(rows: &[Vec<(usize, Scalar)>], ncols: usize, field: Field) -> Rref {
    let scaled: Vec<IntRow> = rows.iter().map(|r| scale_row(r)).filter(|r| !r.is_empty()).collect();
    match field {
        Field::Q => match run::<i128>(&scaled, ncols) {
            Some(e) => normalize(e, field),
            None => normalize(run::<BigInt>(&scaled, ncols).expect("bigint never overflows"), field),
        },
        Field::QI => match run::<Gauss<i128>>(&scaled, ncols) {
            Some(e) => normalize(e, field),
            None => normalize(run::<Gauss<BigInt>>(&scaled, ncols).expect("bigint never overflows"), field),
        },
    }
}

/// Rank and pivot columns without the normalization pass.
pub(crate) fn pivots_sparse(rows: &[Vec<(usize, Scalar)>], ncols: usize, field: Field) -> Vec<usize> {
    let scaled: Vec<IntRow> = rows.iter().map(|r| scale_row(r)).filter(|r| !r.is_empty()).collect();
    let mut pivots = match field {
        Field::Q => run::<i128>(&scaled, ncols)
            .map(|e| e.pivots)
            .unwrap_or_else(|| run::<BigInt>(&scaled, ncols).unwrap().pivots),
        Field::QI => run::<Gauss<i128>>(&scaled, ncols)
            .map(|e| e.pivots)
            .unwrap_or_else(|| run::<Gauss<BigInt>>(&scaled, ncols).unwrap().pivots),
    };
    pivots.sort_unstable();
    pivots
}

pub(crate) fn dense_to_sparse(row: &[Scalar]) -> Vec<(usize, Scalar)> {
    row.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(c, s)| (c, s.clone())).collect()
}
