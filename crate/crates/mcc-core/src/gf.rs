//! Arithmetic in GF(q), q = p^m.
//!
//! A field is described by a [`FieldSpec`]: the characteristic `p`, the
//! extension degree `m`, and for `m > 1` an irreducible monic modulus of
//! degree `m` over GF(p). Elements are canonical representatives. For a
//! prime field that is an integer in `[0, p)`; for an extension field it is
//! the coefficient vector `(c_0, ..., c_{m-1})` of the residue, packed
//! base-p into a single word:
//!
//! ```text
//! value = c_0 + c_1 p + ... + c_{m-1} p^{m-1}
//! ```
//!
//! Packing makes equality a word comparison and gives every element a
//! stable index in `0..q`, which the rest of the crate leans on when it
//! enumerates scalars or stores coefficient rows as `u64` slices.
//!
//! The modulus is checked for irreducibility at construction by trial
//! division against every monic polynomial of degree at most `m / 2`, which
//! is cheap for the supported range (`q <= 2^16`). Built-in moduli cover
//! GF(4), GF(8) and GF(9); other extension fields require an explicit
//! modulus.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Hard upper bound on the field size q = p^m.
pub const MAX_Q: u64 = 1 << 16;

#[derive(Debug, PartialEq, Eq)]
struct FieldSpecData {
    p: u64,
    m: u32,
    /// Monic modulus, `m + 1` coefficients, low degree first. Empty for m = 1.
    modulus: Vec<u64>,
    q: u64,
}

/// Cheap-to-clone handle describing one finite field.
///
/// Elements carry their spec, and every binary operation insists both
/// operands come from equal specs. Two specs are equal when they have the
/// same `p`, `m` and modulus, so elements of independently constructed but
/// identical fields interoperate.
#[derive(Debug, Clone)]
pub struct FieldSpec(Arc<FieldSpecData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldSpec {}

/// One field element: a spec handle plus the packed canonical value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u64,
}

fn is_prime(p: u64) -> bool {
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

/// Moduli shipped with the crate, so the common small extensions work
/// without the caller supplying one.
fn builtin_modulus(p: u64, m: u32) -> Option<Vec<u64>> {
    match (p, m) {
        (2, 2) => Some(vec![1, 1, 1]),    // t^2 + t + 1
        (2, 3) => Some(vec![1, 1, 0, 1]), // t^3 + t + 1
        (3, 2) => Some(vec![1, 0, 1]),    // t^2 + 1
        _ => None,
    }
}

/// Remainder of `a` divided by monic `b` over GF(p). Both little-endian.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c % p).collect();
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - bc % p) % p * lead) % p;
            }
        }
        // The leading coefficient is now zero.
        r.pop();
    }
    r
}

/// True when `modulus` (monic, degree m) has no monic divisor of degree
/// 1..=m/2 over GF(p). Candidate divisors are enumerated by counting.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=(m / 2) {
        // p^d candidates: low coefficients count through base p.
        let count = p.pow(d as u32);
        for c in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = c;
            for _ in 0..d {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            let r = poly_rem(modulus, &cand, p);
            if r.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Extended Euclid over the integers: returns (g, u) with u*a == g (mod p).
fn inv_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 for prime p");
    t0.rem_euclid(p as i64) as u64
}

impl FieldSpec {
    /// Construct GF(p^m). `modulus` is required for m > 1 unless a built-in
    /// one exists; it is ignored for m = 1.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<FieldSpec, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_Q)
            .ok_or(Error::CapExceeded {
                what: "field size",
                value: (p as u128).saturating_pow(m),
                cap: MAX_Q as u128,
            })?;
        let stored = if m == 1 {
            Vec::new()
        } else {
            let mut v = match modulus {
                Some(coeffs) => coeffs.to_vec(),
                None => builtin_modulus(p, m).ok_or_else(|| {
                    Error::InvalidField(format!(
                        "no built-in modulus for GF({p}^{m}); supply one"
                    ))
                })?,
            };
            if v.len() != m as usize + 1 {
                return Err(Error::InvalidField(format!(
                    "modulus must have {} coefficients, got {}",
                    m + 1,
                    v.len()
                )));
            }
            for c in v.iter_mut() {
                *c %= p;
            }
            if v[m as usize] != 1 {
                return Err(Error::InvalidField("modulus must be monic".into()));
            }
            if !is_irreducible(&v, p) {
                return Err(Error::InvalidField("modulus is reducible".into()));
            }
            v
        };
        Ok(FieldSpec(Arc::new(FieldSpecData {
            p,
            m,
            modulus: stored,
            q,
        })))
    }

    /// GF(p) for prime p.
    pub fn prime(p: u64) -> Result<FieldSpec, Error> {
        FieldSpec::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// The stored modulus coefficients, low degree first. Empty for m = 1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            value: 1,
        }
    }

    /// The element whose packed value is `index`. Fails for `index >= q`.
    ///
    /// Packed values enumerate the field, so this is also "the index-th
    /// element" in the canonical order returned by [`FieldSpec::enumerate`].
    pub fn element(&self, index: u64) -> Result<FieldElement, Error> {
        if index >= self.0.q {
            return Err(Error::IndexOutOfRange {
                index: index as usize,
                bound: self.0.q,
            });
        }
        Ok(FieldElement {
            spec: self.clone(),
            value: index,
        })
    }

    /// Element from GF(p) coefficients, low degree first. Shorter vectors
    /// are zero-padded; entries are reduced mod p.
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, Error> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::IndexOutOfRange {
                index: coeffs.len(),
                bound: self.0.m as u64,
            });
        }
        let mut value = 0u64;
        for &c in coeffs.iter().rev() {
            value = value * self.0.p + c % self.0.p;
        }
        Ok(FieldElement {
            spec: self.clone(),
            value,
        })
    }

    /// The image of the integer `k` under the canonical map Z -> GF(q)
    /// (reduction mod p into the prime subfield).
    pub fn element_from_int(&self, k: u64) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            value: k % self.0.p,
        }
    }

    /// All q elements in packed-value order.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.0.q)
            .map(|v| FieldElement {
                spec: self.clone(),
                value: v,
            })
            .collect()
    }

    // Value-level arithmetic on packed representatives. The rest of the
    // crate stores coefficient rows as raw u64 and calls these directly to
    // avoid per-entry spec handling.

    pub(crate) fn add_val(&self, a: u64, b: u64) -> u64 {
        let d = &*self.0;
        if d.m == 1 {
            return (a + b) % d.p;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut a, mut b) = (a, b);
        for _ in 0..d.m {
            out += (a % d.p + b % d.p) % d.p * mult;
            a /= d.p;
            b /= d.p;
            mult *= d.p;
        }
        out
    }

    pub(crate) fn neg_val(&self, a: u64) -> u64 {
        let d = &*self.0;
        if d.m == 1 {
            return (d.p - a) % d.p;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a;
        for _ in 0..d.m {
            out += (d.p - a % d.p) % d.p * mult;
            a /= d.p;
            mult *= d.p;
        }
        out
    }

    pub(crate) fn sub_val(&self, a: u64, b: u64) -> u64 {
        self.add_val(a, self.neg_val(b))
    }

    pub(crate) fn mul_val(&self, a: u64, b: u64) -> u64 {
        let d = &*self.0;
        if d.m == 1 {
            return a * b % d.p;
        }
        let m = d.m as usize;
        let mut av = [0u64; 16];
        let mut bv = [0u64; 16];
        let (mut ta, mut tb) = (a, b);
        for i in 0..m {
            av[i] = ta % d.p;
            bv[i] = tb % d.p;
            ta /= d.p;
            tb /= d.p;
        }
        // Schoolbook product, then reduce t^m = -(modulus minus leading term).
        let mut prod = [0u64; 31];
        for i in 0..m {
            if av[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += av[i] * bv[j];
            }
        }
        for c in prod.iter_mut().take(2 * m - 1) {
            *c %= d.p;
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..m {
                prod[i - m + j] = (prod[i - m + j] + (d.p - d.modulus[j]) * c) % d.p;
            }
        }
        let mut out = 0u64;
        for i in (0..m).rev() {
            out = out * d.p + prod[i];
        }
        out
    }

    pub(crate) fn inv_val(&self, a: u64) -> Result<u64, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = &*self.0;
        if d.m == 1 {
            return Ok(inv_mod_prime(a, d.p));
        }
        // Extended Euclid in GF(p)[t] against the modulus. Invariant:
        // t_i * a == r_i (mod modulus), so when the remainder chain ends at a
        // nonzero constant c, t0 * a == c and the inverse is t0 / c.
        let m = d.m as usize;
        let mut r0 = d.modulus.clone();
        let mut r1 = vec![0u64; m];
        let mut a = a;
        for slot in r1.iter_mut() {
            *slot = a % d.p;
            a /= d.p;
        }
        trim(&mut r1);
        let mut t0: Vec<u64> = vec![];
        let mut t1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1, d.p);
            r0 = std::mem::replace(&mut r1, rem);
            let qt = poly_mul(&q, &t1, d.p);
            let next = poly_sub(&t0, &qt, d.p);
            t0 = std::mem::replace(&mut t1, next);
        }
        // r0 is a nonzero constant: the modulus is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let scale = inv_mod_prime(r0[0], d.p);
        let mut out = 0u64;
        let mut mult = 1u64;
        for i in 0..m {
            let c = t0.get(i).copied().unwrap_or(0);
            out += c * scale % d.p * mult;
            mult *= d.p;
        }
        Ok(out)
    }

    pub(crate) fn pow_val(&self, a: u64, e: u64) -> u64 {
        let mut base = a;
        let mut e = e;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_val(acc, base);
            }
            base = self.mul_val(base, base);
            e >>= 1;
        }
        acc
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

/// Division with remainder in GF(p)[t]; divisor need not be monic but must
/// be nonzero with a trimmed leading coefficient.
fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    debug_assert!(!b.is_empty() && *b.last().unwrap() != 0);
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let lead_inv = inv_mod_prime(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for shift in (0..=a.len() - 1 - db).rev() {
        let lead = r[shift + db];
        if lead == 0 {
            continue;
        }
        let coef = lead * lead_inv % p;
        q[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - bc) % p * coef) % p;
        }
    }
    r.truncate(db);
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Packed canonical value in `[0, q)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// GF(p) coefficients of the representative, low degree first, length m.
    pub fn coeffs(&self) -> Vec<u64> {
        let d = &*self.spec.0;
        let mut v = self.value;
        (0..d.m)
            .map(|_| {
                let c = v % d.p;
                v /= d.p;
                c
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &FieldElement) -> Result<(), Error> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement {
            spec: self.spec.clone(),
            value: self.spec.add_val(self.value, other.value),
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement {
            spec: self.spec.clone(),
            value: self.spec.sub_val(self.value, other.value),
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            value: self.spec.neg_val(self.value),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement {
            spec: self.spec.clone(),
            value: self.spec.mul_val(self.value, other.value),
        })
    }

    pub fn inv(&self) -> Result<FieldElement, Error> {
        Ok(FieldElement {
            spec: self.spec.clone(),
            value: self.spec.inv_val(self.value)?,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            value: self.spec.pow_val(self.value, e),
        }
    }
}

impl fmt::Display for FieldElement {
    /// Prime fields print the integer; extension fields print the
    /// coefficient tuple `(c0,c1,...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.m() == 1 {
            write!(f, "{}", self.value)
        } else {
            let cs: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
            write!(f, "({})", cs.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn prime_field_basics() {
        let f2 = gf(2);
        assert_eq!(f2.one().add(&f2.one()).unwrap(), f2.zero());
        let f3 = gf(3);
        let two = f3.element(2).unwrap();
        assert_eq!(two.add(&two).unwrap(), f3.one());
        assert_eq!(two.mul(&two).unwrap(), f3.one());
        let f5 = gf(5);
        let prod = f5.element(3).unwrap().mul(&f5.element(4).unwrap()).unwrap();
        assert_eq!(prod, f5.element(2).unwrap());
        let f7 = gf(7);
        assert_eq!(f7.element(3).unwrap().inv().unwrap(), f7.element(5).unwrap());
    }

    #[test]
    fn gf4_multiplication_table_spot_checks() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        // t is the element with coefficients (0, 1), packed value 2.
        let t = f4.element_from_coeffs(&[0, 1]).unwrap();
        let t_plus_1 = f4.element_from_coeffs(&[1, 1]).unwrap();
        assert_eq!(t.mul(&t).unwrap(), t_plus_1);
        assert_eq!(t.inv().unwrap(), t_plus_1);
        assert_eq!(t.mul(&t_plus_1).unwrap(), f4.one());
    }

    #[test]
    fn gf8_and_gf9_have_working_inverses() {
        for spec in [FieldSpec::new(2, 3, None).unwrap(), FieldSpec::new(3, 2, None).unwrap()] {
            for e in spec.enumerate() {
                if e.is_zero() {
                    assert!(e.inv().is_err());
                    continue;
                }
                assert_eq!(e.mul(&e.inv().unwrap()).unwrap(), spec.one());
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::new(2, 0, None).is_err());
        // t^2 + 1 = (t + 1)^2 over GF(2).
        assert!(FieldSpec::new(2, 2, Some(&[1, 0, 1])).is_err());
        // Non-monic.
        assert!(FieldSpec::new(3, 2, Some(&[1, 0, 2])).is_err());
        // 2^17 over the cap.
        assert!(FieldSpec::new(2, 17, Some(&[1; 18])).is_err());
    }

    #[test]
    fn accepts_user_modulus() {
        // t^4 + t + 1 over GF(2): GF(16).
        let f16 = FieldSpec::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(f16.q(), 16);
        let t = f16.element_from_coeffs(&[0, 1]).unwrap();
        // t^4 = t + 1.
        assert_eq!(t.pow(4), f16.element_from_coeffs(&[1, 1]).unwrap());
        // Multiplicative order of t is 15.
        assert_eq!(t.pow(15), f16.one());
        assert_ne!(t.pow(5), f16.one());
    }

    #[test]
    fn enumerate_is_closed_and_sized() {
        for spec in [gf(2), gf(3), FieldSpec::new(2, 2, None).unwrap(), FieldSpec::new(3, 2, None).unwrap()] {
            let all = spec.enumerate();
            assert_eq!(all.len(), spec.q() as usize);
            for a in &all {
                for b in &all {
                    let s = a.add(b).unwrap();
                    let m = a.mul(b).unwrap();
                    assert!(s.value() < spec.q());
                    assert!(m.value() < spec.q());
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        let f3 = gf(3);
        assert_eq!(f3.element(2).unwrap().to_string(), "2");
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.element_from_coeffs(&[1, 1]).unwrap().to_string(), "(1,1)");
    }

    #[test]
    fn cross_spec_operations_fail() {
        let a = gf(2).one();
        let b = gf(3).one();
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        // Equal specs from separate constructions interoperate.
        let c = gf(2).one();
        assert_eq!(a.add(&c).unwrap(), gf(2).zero());
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::prime(2).unwrap()),
            Just(FieldSpec::prime(3).unwrap()),
            Just(FieldSpec::prime(7).unwrap()),
            Just(FieldSpec::new(2, 2, None).unwrap()),
            Just(FieldSpec::new(2, 3, None).unwrap()),
            Just(FieldSpec::new(3, 2, None).unwrap()),
            Just(FieldSpec::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap()),
        ]
    }

    fn arb_triple() -> impl Strategy<Value = (FieldSpec, u64, u64, u64)> {
        arb_field().prop_flat_map(|spec| {
            let q = spec.q();
            (Just(spec), 0..q, 0..q, 0..q)
        })
    }

    proptest! {
        #[test]
        fn field_axioms((spec, a, b, c) in arb_triple()) {
            let (a, b, c) = (
                spec.element(a).unwrap(),
                spec.element(b).unwrap(),
                spec.element(c).unwrap(),
            );
            // Commutativity and associativity.
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            // Distributivity.
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            // Identities and inverses.
            prop_assert_eq!(a.add(&spec.zero()).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&spec.one()).unwrap(), a.clone());
            prop_assert_eq!(a.add(&a.neg()).unwrap(), spec.zero());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), spec.one());
            }
        }

        #[test]
        fn frobenius_is_additive((spec, a, b, _c) in arb_triple()) {
            let (a, b) = (spec.element(a).unwrap(), spec.element(b).unwrap());
            let p = spec.p();
            prop_assert_eq!(
                a.add(&b).unwrap().pow(p),
                a.pow(p).add(&b.pow(p)).unwrap()
            );
        }

        #[test]
        fn pow_matches_repeated_multiplication((spec, a, e, _c) in arb_triple()) {
            let a = spec.element(a).unwrap();
            let e = e % 9;
            let mut acc = spec.one();
            for _ in 0..e {
                acc = acc.mul(&a).unwrap();
            }
            prop_assert_eq!(a.pow(e), acc);
        }
    }
}
