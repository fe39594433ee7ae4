//! The quotient ring R = GF(q)[x_1, ..., x_s] / (x_1^rho_1 - 1, ..., x_s^rho_s - 1).
//!
//! Residues are stored as dense coefficient vectors of length n = prod(rho_i),
//! indexed by the lexicographic rank of the exponent vector: the first
//! variable is most significant, the last varies fastest. Under that layout
//! the x_s-coefficient decomposition of an element is a strided slice, which
//! the staircase construction exploits.
//!
//! Exponent arithmetic is componentwise mod rho. Two orders matter:
//!
//! * the componentwise partial order (`partial_leq`, `partial_lt`), with
//!   `partial_lt` strict in every coordinate;
//! * the total lexicographic order (`lex_cmp`), under which `degree` of a
//!   nonzero element is its largest exponent with nonzero coefficient.
//!
//! `degree` of the zero element is an error, not a sentinel value.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::Error;
use crate::gf::{FieldElement, FieldSpec};
use crate::text;

/// Default upper bound on the code length n.
pub const DEFAULT_N_CAP: usize = 4096;

#[derive(Debug, PartialEq, Eq)]
struct RingSpecData {
    field: FieldSpec,
    rho: Vec<u64>,
    n: usize,
}

/// Cheap-to-clone handle describing one quotient ring.
#[derive(Debug, Clone)]
pub struct RingSpec(Arc<RingSpecData>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingSpec {}

/// A reduced exponent vector (alpha_1, ..., alpha_s), 0 <= alpha_j < rho_j.
///
/// Carries no ring handle; operations that combine two vectors check arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    coords: Vec<u64>,
}

/// An element of R: a dense coefficient vector over the field, indexed by
/// exponent rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    spec: RingSpec,
    values: Vec<u64>,
}

impl RingSpec {
    /// Construct the ring with the default length cap.
    pub fn new(field: FieldSpec, rho: &[u64]) -> Result<RingSpec, Error> {
        RingSpec::with_cap(field, rho, DEFAULT_N_CAP)
    }

    /// Construct the ring with an explicit cap on n.
    pub fn with_cap(field: FieldSpec, rho: &[u64], cap: usize) -> Result<RingSpec, Error> {
        if rho.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        if let Some(&bad) = rho.iter().find(|&&r| r == 0) {
            return Err(Error::InvalidRing(format!("rho entry {bad} must be >= 1")));
        }
        let mut n: u128 = 1;
        for &r in rho {
            n = n.saturating_mul(r as u128);
        }
        if n > cap as u128 {
            return Err(Error::CapExceeded {
                what: "code length n",
                value: n,
                cap: cap as u128,
            });
        }
        Ok(RingSpec(Arc::new(RingSpecData {
            field,
            rho: rho.to_vec(),
            n: n as usize,
        })))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn rho(&self) -> &[u64] {
        &self.0.rho
    }

    /// Number of variables s.
    pub fn num_vars(&self) -> usize {
        self.0.rho.len()
    }

    /// Code length n = prod(rho_i).
    pub fn n(&self) -> usize {
        self.0.n
    }

    /// The ring S in the first s - 1 variables. For s = 1 this is the ground
    /// field viewed as a ring with no variables (n = 1); such a spec can only
    /// be produced here, not through [`RingSpec::new`].
    pub fn subring(&self) -> RingSpec {
        assert!(self.num_vars() >= 1, "subring of a zero-variable ring");
        let rho = &self.0.rho[..self.0.rho.len() - 1];
        let n: usize = rho.iter().product::<u64>() as usize;
        RingSpec(Arc::new(RingSpecData {
            field: self.0.field.clone(),
            rho: rho.to_vec(),
            n,
        }))
    }

    /// Validate a reduced exponent vector.
    pub fn exponent(&self, coords: &[u64]) -> Result<ExponentVector, Error> {
        if coords.len() != self.num_vars() {
            return Err(Error::ArityMismatch {
                left: coords.len(),
                right: self.num_vars(),
            });
        }
        for (j, (&c, &r)) in coords.iter().zip(self.0.rho.iter()).enumerate() {
            if c >= r {
                return Err(Error::ExponentOutOfRange {
                    index: j,
                    value: c,
                    bound: r,
                });
            }
        }
        Ok(ExponentVector {
            coords: coords.to_vec(),
        })
    }

    /// Reduce arbitrary exponents componentwise mod rho.
    pub fn exponent_reduced(&self, coords: &[u64]) -> Result<ExponentVector, Error> {
        if coords.len() != self.num_vars() {
            return Err(Error::ArityMismatch {
                left: coords.len(),
                right: self.num_vars(),
            });
        }
        Ok(ExponentVector {
            coords: coords
                .iter()
                .zip(self.0.rho.iter())
                .map(|(&c, &r)| c % r)
                .collect(),
        })
    }

    /// Componentwise (a + b) mod rho.
    pub fn add_exponents(
        &self,
        a: &ExponentVector,
        b: &ExponentVector,
    ) -> Result<ExponentVector, Error> {
        if a.arity() != self.num_vars() || b.arity() != self.num_vars() {
            return Err(Error::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        Ok(ExponentVector {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(self.0.rho.iter())
                .map(|((&x, &y), &r)| (x + y) % r)
                .collect(),
        })
    }

    /// Mixed-radix rank of a reduced exponent vector: alpha_1 is most
    /// significant, alpha_s varies fastest. A bijection onto 0..n that is an
    /// order isomorphism with the lexicographic order.
    pub fn lex_rank(&self, e: &ExponentVector) -> usize {
        debug_assert_eq!(e.arity(), self.num_vars());
        let mut r = 0usize;
        for (&c, &m) in e.coords.iter().zip(self.0.rho.iter()) {
            r = r * m as usize + c as usize;
        }
        r
    }

    /// Inverse of [`RingSpec::lex_rank`].
    pub fn exponent_of_rank(&self, rank: usize) -> ExponentVector {
        debug_assert!(rank < self.0.n.max(1));
        let s = self.num_vars();
        let mut coords = vec![0u64; s];
        let mut r = rank;
        for j in (0..s).rev() {
            let m = self.0.rho[j] as usize;
            coords[j] = (r % m) as u64;
            r /= m;
        }
        coords.into()
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            spec: self.clone(),
            values: vec![0; self.0.n],
        }
    }

    pub fn one(&self) -> RingElement {
        let mut values = vec![0; self.0.n];
        values[0] = 1;
        RingElement {
            spec: self.clone(),
            values,
        }
    }

    /// The monomial c * x^e.
    pub fn monomial(&self, e: &ExponentVector, c: &FieldElement) -> Result<RingElement, Error> {
        if c.spec() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if e.arity() != self.num_vars() {
            return Err(Error::ArityMismatch {
                left: e.arity(),
                right: self.num_vars(),
            });
        }
        let mut values = vec![0; self.0.n];
        values[self.lex_rank(e)] = c.value();
        Ok(RingElement {
            spec: self.clone(),
            values,
        })
    }

    /// Element from a full coefficient vector in rank order.
    pub fn from_coefficients(&self, coeffs: &[FieldElement]) -> Result<RingElement, Error> {
        if coeffs.len() != self.0.n {
            return Err(Error::LengthMismatch {
                got: coeffs.len(),
                want: self.0.n,
            });
        }
        let mut values = Vec::with_capacity(self.0.n);
        for c in coeffs {
            if c.spec() != self.field() {
                return Err(Error::FieldMismatch);
            }
            values.push(c.value());
        }
        Ok(RingElement {
            spec: self.clone(),
            values,
        })
    }

    pub(crate) fn element_from_values(&self, values: Vec<u64>) -> RingElement {
        debug_assert_eq!(values.len(), self.0.n);
        debug_assert!(values.iter().all(|&v| v < self.field().q()));
        RingElement {
            spec: self.clone(),
            values,
        }
    }

    /// Parse the textual polynomial format. See the crate README for the
    /// grammar; errors carry a byte offset into the input.
    pub fn parse_polynomial(&self, input: &str) -> Result<RingElement, Error> {
        text::parse(self, input)
    }

    /// Uniformly random element: every coefficient drawn uniformly from GF(q).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        let q = self.field().q();
        let values = (0..self.0.n).map(|_| rng.random_range(0..q)).collect();
        RingElement {
            spec: self.clone(),
            values,
        }
    }

    /// Lift an element of the subring S into R (x_s-degree zero slot).
    pub fn embed(&self, g: &RingElement) -> Result<RingElement, Error> {
        let sub = self.subring();
        if g.spec != sub {
            return Err(Error::RingMismatch);
        }
        let rho_s = *self.0.rho.last().unwrap() as usize;
        let mut values = vec![0; self.0.n];
        for (j, &v) in g.values.iter().enumerate() {
            values[j * rho_s] = v;
        }
        Ok(RingElement {
            spec: self.clone(),
            values,
        })
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(coords: Vec<u64>) -> Self {
        ExponentVector { coords }
    }
}

impl ExponentVector {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Componentwise a_j <= b_j for all j.
pub fn partial_leq(a: &ExponentVector, b: &ExponentVector) -> Result<bool, Error> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    Ok(a.coords.iter().zip(&b.coords).all(|(x, y)| x <= y))
}

/// Componentwise a_j < b_j for all j (strict in every coordinate; vacuously
/// true for arity zero).
pub fn partial_lt(a: &ExponentVector, b: &ExponentVector) -> Result<bool, Error> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    Ok(a.coords.iter().zip(&b.coords).all(|(x, y)| x < y))
}

/// Lexicographic comparison: decided by the first differing coordinate.
pub fn lex_cmp(a: &ExponentVector, b: &ExponentVector) -> Result<Ordering, Error> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    Ok(a.coords.cmp(&b.coords))
}

/// Coefficient vector of `values` cyclically shifted by `shift` (exponent
/// addition mod rho). A bijection on ranks, so no accumulation happens.
pub(crate) fn shift_values(spec: &RingSpec, values: &[u64], shift: &[u64]) -> Vec<u64> {
    let s = spec.num_vars();
    let rho = spec.rho();
    let mut out = vec![0u64; spec.n()];
    let mut coords = vec![0u64; s];
    for &v in values.iter() {
        if v != 0 {
            let mut t = 0usize;
            for j in 0..s {
                let c = (coords[j] + shift[j]) % rho[j];
                t = t * rho[j] as usize + c as usize;
            }
            out[t] = v;
        }
        for j in (0..s).rev() {
            coords[j] += 1;
            if coords[j] < rho[j] {
                break;
            }
            coords[j] = 0;
        }
    }
    out
}

impl RingElement {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub(crate) fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Result<FieldElement, Error> {
        if e.arity() != self.spec.num_vars() {
            return Err(Error::ArityMismatch {
                left: e.arity(),
                right: self.spec.num_vars(),
            });
        }
        self.spec.field().element(self.values[self.spec.lex_rank(e)])
    }

    /// All n coefficients in rank order.
    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.values
            .iter()
            .map(|&v| self.spec.field().element(v).expect("stored values are reduced"))
            .collect()
    }

    fn check(&self, other: &RingElement) -> Result<(), Error> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check(other)?;
        let field = self.spec.field();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| field.add_val(a, b))
            .collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            values,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check(other)?;
        let field = self.spec.field();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| field.sub_val(a, b))
            .collect();
        Ok(RingElement {
            spec: self.spec.clone(),
            values,
        })
    }

    pub fn neg(&self) -> RingElement {
        let field = self.spec.field();
        RingElement {
            spec: self.spec.clone(),
            values: self.values.iter().map(|&a| field.neg_val(a)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Result<RingElement, Error> {
        if c.spec() != self.spec.field() {
            return Err(Error::FieldMismatch);
        }
        let field = self.spec.field();
        let cv = c.value();
        Ok(RingElement {
            spec: self.spec.clone(),
            values: self.values.iter().map(|&a| field.mul_val(a, cv)).collect(),
        })
    }

    /// Full product in R: convolution of coefficients with exponent addition
    /// mod rho.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.check(other)?;
        let spec = &self.spec;
        let field = spec.field();
        let s = spec.num_vars();
        let rho = spec.rho();
        let n = spec.n();
        // Flat table of all exponent vectors, rank order.
        let mut exps = vec![0u64; n * s];
        let mut coords = vec![0u64; s];
        for r in 0..n {
            exps[r * s..(r + 1) * s].copy_from_slice(&coords);
            for j in (0..s).rev() {
                coords[j] += 1;
                if coords[j] < rho[j] {
                    break;
                }
                coords[j] = 0;
            }
        }
        let mut out = vec![0u64; n];
        for (i, &a) in self.values.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.values.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut t = 0usize;
                for k in 0..s {
                    let c = (exps[i * s + k] + exps[j * s + k]) % rho[k];
                    t = t * rho[k] as usize + c as usize;
                }
                out[t] = field.add_val(out[t], field.mul_val(a, b));
            }
        }
        Ok(RingElement {
            spec: spec.clone(),
            values: out,
        })
    }

    /// Multiply by the monomial x^e. A coefficient permutation.
    pub fn mul_monomial(&self, e: &ExponentVector) -> Result<RingElement, Error> {
        if e.arity() != self.spec.num_vars() {
            return Err(Error::ArityMismatch {
                left: e.arity(),
                right: self.spec.num_vars(),
            });
        }
        Ok(RingElement {
            spec: self.spec.clone(),
            values: shift_values(&self.spec, &self.values, e.coords()),
        })
    }

    /// Largest exponent (lexicographic order) with nonzero coefficient.
    pub fn degree(&self) -> Result<ExponentVector, Error> {
        match self.values.iter().rposition(|&v| v != 0) {
            Some(rank) => Ok(self.spec.exponent_of_rank(rank)),
            None => Err(Error::ZeroPolynomial),
        }
    }

    /// The coefficient of x_s^k as an element of the subring S.
    pub fn xs_coefficient(&self, k: usize) -> Result<RingElement, Error> {
        let rho_s = *self.spec.rho().last().unwrap() as usize;
        if k >= rho_s {
            return Err(Error::IndexOutOfRange {
                index: k,
                bound: rho_s as u64,
            });
        }
        let sub = self.spec.subring();
        let values = (0..sub.n()).map(|j| self.values[j * rho_s + k]).collect();
        Ok(RingElement { spec: sub, values })
    }

    /// Smallest k with a nonzero x_s^k-coefficient.
    pub fn xs_order(&self) -> Result<usize, Error> {
        let rho_s = *self.spec.rho().last().unwrap() as usize;
        for k in 0..rho_s {
            if self.values.iter().skip(k).step_by(rho_s).any(|&v| v != 0) {
                return Ok(k);
            }
        }
        Err(Error::ZeroPolynomial)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u64, rho: &[u64]) -> RingSpec {
        RingSpec::new(FieldSpec::prime(p).unwrap(), rho).unwrap()
    }

    #[test]
    fn rank_roundtrip_and_order() {
        let r = ring(2, &[3, 2, 2]);
        assert_eq!(r.n(), 12);
        for rank in 0..12 {
            let e = r.exponent_of_rank(rank);
            assert_eq!(r.lex_rank(&e), rank);
        }
        // (1,0,0) ranks above (0,1,1): first coordinate dominates.
        let a = r.exponent(&[1, 0, 0]).unwrap();
        let b = r.exponent(&[0, 1, 1]).unwrap();
        assert_eq!(lex_cmp(&a, &b).unwrap(), Ordering::Greater);
        assert!(r.lex_rank(&a) > r.lex_rank(&b));
    }

    #[test]
    fn partial_orders() {
        let r = ring(2, &[4, 4]);
        let a = r.exponent(&[1, 2]).unwrap();
        let b = r.exponent(&[2, 3]).unwrap();
        let c = r.exponent(&[2, 1]).unwrap();
        assert!(partial_leq(&a, &b).unwrap());
        assert!(partial_lt(&a, &b).unwrap());
        assert!(!partial_leq(&b, &a).unwrap());
        // Incomparable pair.
        assert!(!partial_leq(&a, &c).unwrap() && !partial_leq(&c, &a).unwrap());
        // Reflexive for leq, not for lt.
        assert!(partial_leq(&a, &a).unwrap());
        assert!(!partial_lt(&a, &a).unwrap());
        // Arity mismatch is an error.
        let other = ring(2, &[4]).exponent(&[1]).unwrap();
        assert!(partial_leq(&a, &other).is_err());
        assert!(lex_cmp(&a, &other).is_err());
    }

    #[test]
    fn exponent_validation() {
        let r = ring(3, &[2, 3]);
        assert!(r.exponent(&[1, 2]).is_ok());
        assert_eq!(
            r.exponent(&[2, 0]),
            Err(Error::ExponentOutOfRange {
                index: 0,
                value: 2,
                bound: 2
            })
        );
        assert_eq!(
            r.exponent_reduced(&[5, 7]).unwrap(),
            r.exponent(&[1, 1]).unwrap()
        );
    }

    #[test]
    fn multiplication_wraps_exponents() {
        // rho = (2, 2): x1 * x1 = 1, x1 * x2 = x1 x2.
        let r = ring(2, &[2, 2]);
        let x1 = r.parse_polynomial("x1").unwrap();
        let x2 = r.parse_polynomial("x2").unwrap();
        assert_eq!(x1.mul(&x1).unwrap(), r.one());
        let prod = x1.mul(&x2).unwrap();
        assert_eq!(prod, r.parse_polynomial("x1*x2").unwrap());
    }

    #[test]
    fn degree_is_lex_max_and_zero_errors() {
        let r = ring(2, &[3, 3]);
        let f = r.parse_polynomial("1 + x2^2 + x1*x2").unwrap();
        assert_eq!(f.degree().unwrap(), r.exponent(&[1, 1]).unwrap());
        assert_eq!(r.zero().degree(), Err(Error::ZeroPolynomial));
        assert_eq!(r.zero().xs_order(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn degree_product_witness_needs_the_bound() {
        // With rho = (2, 2) and f = g = x1, the exponent wraps and
        // deg(fg) = (0,0), not deg f + deg g = (2,0).
        let r = ring(2, &[2, 2]);
        let x1 = r.parse_polynomial("x1").unwrap();
        let sq = x1.mul(&x1).unwrap();
        assert_eq!(sq.degree().unwrap(), r.exponent(&[0, 0]).unwrap());
    }

    #[test]
    fn xs_decomposition_recovers_element() {
        let r = ring(3, &[3, 2, 3]);
        let f = r
            .parse_polynomial("2 + x1*x3^2 + x2 + 2*x1^2*x2*x3")
            .unwrap();
        let rho_s = 3usize;
        let mut acc = r.zero();
        for k in 0..rho_s {
            let fk = f.xs_coefficient(k).unwrap();
            let lifted = r.embed(&fk).unwrap();
            let xs_k = r.exponent(&[0, 0, k as u64]).unwrap();
            acc = acc.add(&lifted.mul_monomial(&xs_k).unwrap()).unwrap();
        }
        assert_eq!(acc, f);
        assert_eq!(f.xs_order().unwrap(), 0);
        let g = r.parse_polynomial("x3^2 + x1*x3").unwrap();
        assert_eq!(g.xs_order().unwrap(), 1);
    }

    #[test]
    fn subring_of_univariate_is_scalar_ring() {
        let r = ring(2, &[7]);
        let sub = r.subring();
        assert_eq!(sub.num_vars(), 0);
        assert_eq!(sub.n(), 1);
        let c = sub.one();
        assert_eq!(c.degree().unwrap().arity(), 0);
        // Embedding a constant lands in the x_s^0 slot.
        let lifted = r.embed(&c).unwrap();
        assert_eq!(lifted, r.one());
    }

    #[test]
    fn cap_is_enforced() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(RingSpec::new(f2.clone(), &[64, 64, 2]).is_err());
        assert!(RingSpec::with_cap(f2.clone(), &[64, 64, 2], 1 << 13).is_ok());
        assert!(RingSpec::new(f2, &[64, 64]).is_ok());
    }

    fn arb_ring() -> impl Strategy<Value = RingSpec> {
        prop_oneof![
            Just(ring(2, &[2, 2])),
            Just(ring(2, &[4, 3])),
            Just(ring(3, &[3, 2])),
            Just(ring(2, &[2, 2, 2])),
            Just(ring(5, &[4])),
            Just(RingSpec::new(FieldSpec::new(2, 2, None).unwrap(), &[3, 3]).unwrap()),
        ]
    }

    fn arb_elems(k: usize) -> impl Strategy<Value = (RingSpec, Vec<RingElement>)> {
        arb_ring().prop_flat_map(move |spec| {
            let q = spec.field().q();
            let n = spec.n();
            let elems = proptest::collection::vec(
                proptest::collection::vec(0..q, n).prop_map({
                    let spec = spec.clone();
                    move |vals| spec.element_from_values(vals)
                }),
                k,
            );
            (Just(spec), elems)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((spec, es) in arb_elems(3)) {
            let (f, g, h) = (&es[0], &es[1], &es[2]);
            prop_assert_eq!(f.add(g).unwrap(), g.add(f).unwrap());
            prop_assert_eq!(f.add(g).unwrap().add(h).unwrap(), f.add(&g.add(h).unwrap()).unwrap());
            prop_assert_eq!(f.add(&spec.zero()).unwrap(), f.clone());
            prop_assert_eq!(f.add(&f.neg()).unwrap(), spec.zero());
            prop_assert_eq!(f.mul(g).unwrap(), g.mul(f).unwrap());
            prop_assert_eq!(f.mul(&spec.one()).unwrap(), f.clone());
            prop_assert_eq!(
                f.mul(&g.add(h).unwrap()).unwrap(),
                f.mul(g).unwrap().add(&f.mul(h).unwrap()).unwrap()
            );
            prop_assert_eq!(
                f.mul(g).unwrap().mul(h).unwrap(),
                f.mul(&g.mul(h).unwrap()).unwrap()
            );
        }

        #[test]
        fn monomial_shift_agrees_with_full_product((spec, es) in arb_elems(1), seed in 0usize..64) {
            let f = &es[0];
            let e = spec.exponent_of_rank(seed % spec.n());
            let via_shift = f.mul_monomial(&e).unwrap();
            let mono = spec.monomial(&e, &spec.field().one()).unwrap();
            prop_assert_eq!(via_shift, f.mul(&mono).unwrap());
        }

        #[test]
        fn lex_rank_is_an_order_isomorphism((spec, _es) in arb_elems(1), a in 0usize..64, b in 0usize..64) {
            let (a, b) = (a % spec.n(), b % spec.n());
            let ea = spec.exponent_of_rank(a);
            let eb = spec.exponent_of_rank(b);
            prop_assert_eq!(lex_cmp(&ea, &eb).unwrap(), a.cmp(&b));
        }

        #[test]
        fn degree_product_under_no_wrap((spec, _es) in arb_elems(1), seed in any::<u64>()) {
            // Sample degrees whose componentwise sum stays below rho, then
            // check deg(fg) = deg f + deg g.
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let s = spec.num_vars();
            let rho = spec.rho();
            let mut df = vec![0u64; s];
            let mut dg = vec![0u64; s];
            for j in 0..s {
                df[j] = rng.random_range(0..rho[j]);
                dg[j] = rng.random_range(0..rho[j] - df[j]);
            }
            let f = random_with_degree(&spec, &df, &mut rng);
            let g = random_with_degree(&spec, &dg, &mut rng);
            let sum: Vec<u64> = df.iter().zip(&dg).map(|(&a, &b)| a + b).collect();
            let expect = spec.exponent(&sum).unwrap();
            prop_assert_eq!(f.mul(&g).unwrap().degree().unwrap(), expect);
        }
    }

    /// Random element with exact lex degree `deg`: the coefficient there is
    /// nonzero, everything lex-above is zero.
    pub(crate) fn random_with_degree(
        spec: &RingSpec,
        deg: &[u64],
        rng: &mut impl Rng,
    ) -> RingElement {
        let q = spec.field().q();
        let top = spec.lex_rank(&spec.exponent(deg).unwrap());
        let mut values = vec![0u64; spec.n()];
        for v in values.iter_mut().take(top) {
            *v = rng.random_range(0..q);
        }
        values[top] = rng.random_range(1..q);
        spec.element_from_values(values)
    }
}
