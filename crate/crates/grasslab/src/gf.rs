//! Exact arithmetic in the finite fields GF(p^m) used as coordinate scalars.
//!
//! Elements are dense coefficient vectors over GF(p) in the polynomial basis
//! of a fixed monic irreducible polynomial; for prime fields the polynomial
//! plays no role. All fields here are tiny (q <= 16), so the arithmetic is
//! written for clarity: multiplication is literal polynomial reduction and
//! inversion is an exhaustive search for the partner element.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("polynomial is not a monic degree-{0} polynomial")]
    BadPolynomial(u32),
    #[error("polynomial is reducible over GF({0})")]
    Reducible(u32),
    #[error("operands belong to different field specs")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported field designator: {0}")]
    UnsupportedField(String),
}

/// A concrete finite field GF(p^m) with a fixed modulus polynomial.
///
/// `poly` holds the coefficients of the monic irreducible modulus, low degree
/// first, including the leading 1 (length m+1). For m = 1 it is the formal
/// polynomial x and is never consulted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub poly: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `b` over GF(p); both low-degree-first.
fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - db;
        if lead != 0 {
            for i in 0..=db {
                let idx = shift + i;
                a[idx] = (a[idx] + p - lead * b[i] % p) % p;
            }
        }
        a.pop();
    }
    a
}

/// Enumerate monic polynomials of exact degree `d` over GF(p), low-first.
fn monic_polys(d: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let total = (p as u64).pow(d as u32);
    for code in 0..total {
        let mut c = code;
        let mut poly = Vec::with_capacity(d + 1);
        for _ in 0..d {
            poly.push((c % p as u64) as u32);
            c /= p as u64;
        }
        poly.push(1);
        out.push(poly);
    }
    out
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let m = poly.len() - 1;
    if m == 1 {
        return true;
    }
    for d in 1..=(m / 2) {
        for div in monic_polys(d, p) {
            let r = poly_rem(poly.to_vec(), &div, p);
            if r.iter().all(|&c| c % p == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Build and validate a field spec. `poly` is ignored for m = 1.
    pub fn new(p: u32, m: u32, poly: Vec<u32>) -> Result<Arc<FieldSpec>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::BadPolynomial(m));
        }
        let poly = if m == 1 { vec![0, 1] } else { poly };
        if poly.len() != m as usize + 1
            || *poly.last().unwrap() != 1
            || poly.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadPolynomial(m));
        }
        if m > 1 && !is_irreducible(&poly, p) {
            return Err(FieldError::Reducible(p));
        }
        Ok(Arc::new(FieldSpec { p, m, poly }))
    }

    /// The supported catalog: prime fields up to GF(13) plus GF(4), GF(8),
    /// GF(9), GF(16) with fixed moduli x^2+x+1, x^3+x+1, x^2+1, x^4+x+1.
    pub fn catalog(designator: &str) -> Result<Arc<FieldSpec>, FieldError> {
        let (p, m) = match designator.split_once('^') {
            Some((p, m)) => (
                p.parse::<u32>()
                    .map_err(|_| FieldError::UnsupportedField(designator.into()))?,
                m.parse::<u32>()
                    .map_err(|_| FieldError::UnsupportedField(designator.into()))?,
            ),
            None => (
                designator
                    .parse::<u32>()
                    .map_err(|_| FieldError::UnsupportedField(designator.into()))?,
                1,
            ),
        };
        Self::for_order(p, m)
    }

    pub fn for_order(p: u32, m: u32) -> Result<Arc<FieldSpec>, FieldError> {
        match (p, m) {
            (2 | 3 | 5 | 7 | 11 | 13, 1) => FieldSpec::new(p, 1, vec![]),
            (2, 2) => FieldSpec::new(2, 2, vec![1, 1, 1]),
            (2, 3) => FieldSpec::new(2, 3, vec![1, 1, 0, 1]),
            (3, 2) => FieldSpec::new(3, 2, vec![1, 0, 1]),
            (2, 4) => FieldSpec::new(2, 4, vec![1, 1, 0, 0, 1]),
            _ => Err(FieldError::UnsupportedField(format!("{p}^{m}"))),
        }
    }

    /// Parse a field order q into the catalog entry with that many elements.
    pub fn for_q(q: u32) -> Result<Arc<FieldSpec>, FieldError> {
        for (p, m) in [
            (2, 1),
            (3, 1),
            (5, 1),
            (7, 1),
            (11, 1),
            (13, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
        ] {
            if (p as u64).pow(m) == q as u64 {
                return Self::for_order(p, m);
            }
        }
        Err(FieldError::UnsupportedField(q.to_string()))
    }

    /// Number of elements p^m.
    pub fn q(&self) -> u32 {
        self.p.pow(self.m)
    }

    /// Designator string "p" or "p^m".
    pub fn designator(&self) -> String {
        if self.m == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.m)
        }
    }

    // ---- value-level arithmetic on packed coefficient vectors ------------
    //
    // A value v encodes the coefficient vector (v mod p, v/p mod p, ...);
    // packing is bijective for q <= 16 so u8 suffices.

    pub fn digits(&self, v: u8) -> Vec<u32> {
        let mut v = v as u32;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn pack(&self, digits: &[u32]) -> u8 {
        let mut v = 0u32;
        for (i, &d) in digits.iter().enumerate() {
            v += (d % self.p) * self.p.pow(i as u32);
        }
        v as u8
    }

    pub fn add_v(&self, a: u8, b: u8) -> u8 {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg_v(&self, a: u8) -> u8 {
        let da = self.digits(a);
        let neg: Vec<u32> = da.iter().map(|x| (self.p - x % self.p) % self.p).collect();
        self.pack(&neg)
    }

    pub fn sub_v(&self, a: u8, b: u8) -> u8 {
        self.add_v(a, self.neg_v(b))
    }

    pub fn mul_v(&self, a: u8, b: u8) -> u8 {
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * self.m as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let r = poly_rem(prod, &self.poly, self.p);
        let mut digits = vec![0u32; self.m as usize];
        for (i, &c) in r.iter().enumerate().take(self.m as usize) {
            digits[i] = c % self.p;
        }
        self.pack(&digits)
    }

    pub fn inv_v(&self, a: u8) -> Result<u8, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        for b in 0..self.q() as u8 {
            if self.mul_v(a, b) == 1 {
                return Ok(b);
            }
        }
        unreachable!("every nonzero element of a field has an inverse")
    }

    pub fn pow_v(&self, a: u8, e: u64) -> u8 {
        let mut acc = 1u8;
        for _ in 0..e {
            acc = self.mul_v(acc, a);
        }
        acc
    }

    /// a^(p^j): the j-th power of the Frobenius automorphism.
    pub fn frob_v(&self, a: u8, j: u32) -> u8 {
        let mut acc = a;
        for _ in 0..(j % self.m) {
            acc = self.pow_v(acc, self.p as u64);
        }
        acc
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            val: 0,
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            val: 1,
        }
    }

    pub fn element(self: &Arc<Self>, val: u8) -> FieldElement {
        assert!((val as u32) < self.q(), "value out of range for field");
        FieldElement {
            spec: self.clone(),
            val,
        }
    }

    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q() as u8).map(move |v| self.element(v))
    }
}

/// An element of a finite field, tagged with its spec.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub spec: Arc<FieldSpec>,
    pub val: u8,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.val, self.spec.q())
    }
}

fn same_spec(a: &FieldElement, b: &FieldElement) -> Result<(), FieldError> {
    if Arc::ptr_eq(&a.spec, &b.spec) || a.spec == b.spec {
        Ok(())
    } else {
        Err(FieldError::SpecMismatch)
    }
}

/// Componentwise sum mod p.
pub fn add(a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
    same_spec(a, b)?;
    Ok(FieldElement {
        spec: a.spec.clone(),
        val: a.spec.add_v(a.val, b.val),
    })
}

/// Polynomial product reduced by the modulus.
pub fn mul(a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
    same_spec(a, b)?;
    Ok(FieldElement {
        spec: a.spec.clone(),
        val: a.spec.mul_v(a.val, b.val),
    })
}

/// Multiplicative inverse; errors on zero.
pub fn inv(a: &FieldElement) -> Result<FieldElement, FieldError> {
    Ok(FieldElement {
        spec: a.spec.clone(),
        val: a.spec.inv_v(a.val)?,
    })
}

/// a^(p^j); j = 0 is the identity and j = m acts as the identity again.
pub fn frobenius(a: &FieldElement, j: u32) -> FieldElement {
    FieldElement {
        spec: a.spec.clone(),
        val: a.spec.frob_v(a.val, j),
    }
}

/// Indices of the automorphisms of the field: always exactly {0, .., m-1}.
///
/// Each candidate power is verified exhaustively to be additive,
/// multiplicative and bijective before it is returned.
pub fn all_automorphisms(spec: &Arc<FieldSpec>) -> Vec<u32> {
    let q = spec.q() as u8;
    let mut out = Vec::new();
    for j in 0..spec.m {
        let mut seen = vec![false; q as usize];
        let mut ok = true;
        for a in 0..q {
            let fa = spec.frob_v(a, j);
            if seen[fa as usize] {
                ok = false;
            }
            seen[fa as usize] = true;
            for b in 0..q {
                let additive = spec.frob_v(spec.add_v(a, b), j)
                    == spec.add_v(spec.frob_v(a, j), spec.frob_v(b, j));
                let multiplicative = spec.frob_v(spec.mul_v(a, b), j)
                    == spec.mul_v(spec.frob_v(a, j), spec.frob_v(b, j));
                if !additive || !multiplicative {
                    ok = false;
                }
            }
        }
        assert!(ok, "Frobenius power {j} failed the automorphism laws");
        out.push(j);
    }
    out
}

/// The constant-polynomial injection GF(p) -> GF(p^m).
pub fn embed_prime(sub: &FieldElement, into: &Arc<FieldSpec>) -> Result<FieldElement, FieldError> {
    if sub.spec.m != 1 || sub.spec.p != into.p {
        return Err(FieldError::SpecMismatch);
    }
    Ok(FieldElement {
        spec: into.clone(),
        val: sub.val,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<FieldSpec> {
        FieldSpec::for_q(q).unwrap()
    }

    /// Brute-force table of GF(4) as pairs (c0 + c1*w) with w^2 = w + 1.
    /// Used as the independent oracle for the packed arithmetic.
    fn gf4_oracle_mul(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
        // (a0 + a1 w)(b0 + b1 w) = a0b0 + (a0b1 + a1b0) w + a1b1 w^2
        // w^2 = w + 1
        let c0 = (a.0 * b.0 + a.1 * b.1) % 2;
        let c1 = (a.0 * b.1 + a.1 * b.0 + a.1 * b.1) % 2;
        (c0, c1)
    }

    #[test]
    fn gf2_add_and_mul() {
        let f = gf(2);
        assert_eq!(f.add_v(1, 1), 0);
        assert_eq!(f.mul_v(1, 1), 1);
        assert_eq!(f.inv_v(1).unwrap(), 1);
    }

    #[test]
    fn gf3_and_gf5_prime_arithmetic() {
        let f3 = gf(3);
        assert_eq!(f3.add_v(2, 2), 1);
        let f5 = gf(5);
        assert_eq!(f5.mul_v(3, 4), 2);
        assert_eq!(f5.inv_v(3).unwrap(), 2);
    }

    #[test]
    fn gf4_matches_brute_force_table() {
        let f = gf(4);
        // w is packed value 2 (digits [0,1]); w+1 is 3.
        for a in 0..4u8 {
            for b in 0..4u8 {
                let da = f.digits(a);
                let db = f.digits(b);
                let (c0, c1) = gf4_oracle_mul((da[0], da[1]), (db[0], db[1]));
                assert_eq!(f.digits(f.mul_v(a, b)), vec![c0, c1]);
            }
        }
        // w * w = w + 1, w + (w+1) = 1, inv(w) = w+1
        assert_eq!(f.mul_v(2, 2), 3);
        assert_eq!(f.add_v(2, 3), 1);
        assert_eq!(f.inv_v(2).unwrap(), 3);
    }

    #[test]
    fn field_axioms_exhaustive_all_supported() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = gf(q);
            let n = f.q() as u8;
            for a in 0..n {
                assert_eq!(f.add_v(a, 0), a);
                assert_eq!(f.mul_v(a, 1), a);
                assert_eq!(f.add_v(a, f.neg_v(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_v(a, f.inv_v(a).unwrap()), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add_v(a, b), f.add_v(b, a));
                    assert_eq!(f.mul_v(a, b), f.mul_v(b, a));
                    for c in 0..n {
                        assert_eq!(f.add_v(f.add_v(a, b), c), f.add_v(a, f.add_v(b, c)));
                        assert_eq!(f.mul_v(f.mul_v(a, b), c), f.mul_v(a, f.mul_v(b, c)));
                        assert_eq!(
                            f.mul_v(a, f.add_v(b, c)),
                            f.add_v(f.mul_v(a, b), f.mul_v(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_laws() {
        // GF(4): frob(w) = w^2 = w+1; frob of order m is the identity.
        let f4 = gf(4);
        assert_eq!(f4.frob_v(2, 1), 3);
        for a in 0..4u8 {
            assert_eq!(f4.frob_v(a, 0), a);
            assert_eq!(f4.frob_v(f4.frob_v(a, 1), 1), a);
        }
        // GF(9): applying the Frobenius twice is the identity on all 9 elements.
        let f9 = gf(9);
        for a in 0..9u8 {
            assert_eq!(f9.frob_v(f9.frob_v(a, 1), 1), a);
        }
        // composition adds indices mod m on every supported extension
        for q in [4u32, 8, 9, 16] {
            let f = gf(q);
            for i in 0..f.m {
                for j in 0..f.m {
                    for a in 0..f.q() as u8 {
                        assert_eq!(
                            f.frob_v(f.frob_v(a, i), j),
                            f.frob_v(a, (i + j) % f.m),
                            "GF({q}) frobenius composition failed"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(all_automorphisms(&gf(2)), vec![0]);
        assert_eq!(all_automorphisms(&gf(4)), vec![0, 1]);
        assert_eq!(all_automorphisms(&gf(8)).len(), 3);
        assert_eq!(all_automorphisms(&gf(9)).len(), 2);
        assert_eq!(all_automorphisms(&gf(16)).len(), 4);
    }

    #[test]
    fn checked_element_ops() {
        let f4 = gf(4);
        let f2 = gf(2);
        let w = f4.element(2);
        let w1 = f4.element(3);
        assert_eq!(add(&w, &w1).unwrap().val, 1);
        assert_eq!(mul(&w, &w).unwrap().val, 3);
        assert_eq!(inv(&w).unwrap().val, 3);
        assert_eq!(frobenius(&w, 1).val, 3);
        assert_eq!(
            add(&w, &f2.one()).unwrap_err(),
            FieldError::SpecMismatch
        );
        assert_eq!(inv(&f4.zero()).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            FieldSpec::new(4, 1, vec![]).unwrap_err(),
            FieldError::NotPrime(4)
        );
        // x^2 + 1 is reducible over GF(2): (x+1)^2
        assert_eq!(
            FieldSpec::new(2, 2, vec![1, 0, 1]).unwrap_err(),
            FieldError::Reducible(2)
        );
        // and irreducible over GF(3)
        assert!(FieldSpec::new(3, 2, vec![1, 0, 1]).is_ok());
        assert!(FieldSpec::catalog("2^4").is_ok());
        assert!(FieldSpec::catalog("6").is_err());
    }

    #[test]
    fn subfield_embedding() {
        let f2 = gf(2);
        let f16 = gf(16);
        let one = embed_prime(&f2.one(), &f16).unwrap();
        assert_eq!(one.val, 1);
        assert!(embed_prime(&gf(3).one(), &f16).is_err());
    }
}
