//! Exact dense linear algebra over a prime field or the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Coefficient field of characteristic 0 or a prime.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn of_int(&self, x: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
}

/// `Z/pZ` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        PrimeField { p }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn of_int(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut base, mut exp, mut acc) = (*a as u128, self.p as u128 - 2, 1u128);
        let m = self.p as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u64
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Residue { value: *a, p: self.p }
    }
}

/// The rational numbers, exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn of_int(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
}

/// A field element detached from its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Residue { value: u64, p: u64 },
    Rational(BigRational),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Rational(q) => write!(f, "{q}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs `$body` with `$f` bound to the coefficient field of characteristic
/// `$p` (0 or prime).
#[macro_export]
macro_rules! with_field {
    ($p:expr, $f:ident => $body:expr) => {{
        let __p: u64 = $p;
        if __p == 0 {
            let $f = $crate::linalg::Rationals;
            $body
        } else {
            let $f = $crate::linalg::PrimeField::new(__p);
            $body
        }
    }};
}

/// A subspace of `F^dim` kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Subspace { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(field: F, dim: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut s = Subspace::new(field, dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Reduces `v` against the current rows; the result vanishes on every
    /// pivot column.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[pc]) {
                let c = v[pc].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let r = self.reduce(v.to_vec());
        r.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[pc]);
        for x in r.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[pc]) {
                let c = row[pc].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, r);
        true
    }

    /// If the subspace is spanned by coordinate vectors, their indices.
    pub fn coordinate_support(&self) -> Option<Vec<usize>> {
        let f = &self.field;
        let mono = self.rows.iter().all(|row| row.iter().filter(|x| !f.is_zero(x)).count() == 1);
        mono.then(|| self.pivots.clone())
    }

    pub fn unit(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[k] = self.field.one();
        v
    }
}

/// Basis of `{c : Σ_k c_k·images[k] = 0}`, in reduced echelon form with
/// respect to the coordinates of `c`.
pub fn kernel<F: Field>(field: &F, images: &[Vec<F::Elem>], target_dim: usize) -> Vec<Vec<F::Elem>> {
    let m = images.len();
    let mut aug = Subspace::new(field.clone(), target_dim + m);
    for (k, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.resize(target_dim + m, field.zero());
        row[target_dim + k] = field.one();
        aug.insert(row);
    }
    let mut out = Subspace::new(field.clone(), m);
    for (row, &pc) in aug.rows().iter().zip(aug.pivots()) {
        if pc >= target_dim {
            out.insert(row[target_dim..].to_vec());
        }
    }
    out.rows().to_vec()
}

/// Integer representative of a vector up to a nonzero scalar: residues in
/// `(-p/2, p/2]` for a prime field, cleared denominators and removed content
/// for the rationals.
pub fn integer_vector(v: &[Scalar]) -> Vec<i64> {
    match v.first() {
        None => Vec::new(),
        Some(Scalar::Residue { p, .. }) => {
            let p = *p as i64;
            v.iter()
                .map(|s| match s {
                    Scalar::Residue { value, .. } => {
                        let x = *value as i64;
                        if 2 * x > p {
                            x - p
                        } else {
                            x
                        }
                    }
                    Scalar::Rational(_) => unreachable!("mixed scalars"),
                })
                .collect()
        }
        Some(Scalar::Rational(_)) => {
            let qs: Vec<&BigRational> = v
                .iter()
                .map(|s| match s {
                    Scalar::Rational(q) => q,
                    Scalar::Residue { .. } => unreachable!("mixed scalars"),
                })
                .collect();
            let mut l = BigInt::one();
            for q in &qs {
                l = l.lcm(q.denom());
            }
            let ints: Vec<BigInt> = qs.iter().map(|q| (*q * &l).to_integer()).collect();
            let mut g = BigInt::zero();
            for x in &ints {
                g = g.gcd(x);
            }
            if g.is_zero() {
                g = BigInt::one();
            }
            ints.iter().map(|x| (x / &g).to_i64().expect("coefficient overflow")).collect()
        }
    }
}
