//! Arithmetic in GF(2^d) in polynomial basis, the absolute trace, and the
//! Kerdock bent set built from quadratic trace forms.

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

fn degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

/// Remainder of `a` modulo `b` over F_2[x].
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = degree(b).expect("nonzero divisor");
    while let Some(da) = degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(modulus: u32) -> bool {
    let Some(d) = degree(modulus) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    (2u32..(1 << (d / 2 + 1))).all(|g| poly_rem(modulus, g) != 0)
}

/// Smallest irreducible polynomial of degree `d`, as a bit mask.
pub fn smallest_irreducible(d: u32) -> Result<u32> {
    check_degree(d)?;
    ((1u32 << d)..(1u32 << (d + 1)))
        .find(|&p| is_irreducible(p))
        .ok_or_else(|| Error::Parameter(format!("no irreducible polynomial of degree {d}")))
}

fn check_degree(d: u32) -> Result<()> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&d) {
        Err(Error::Parameter(format!(
            "field degree {d} outside {MIN_DEGREE}..={MAX_DEGREE}"
        )))
    } else {
        Ok(())
    }
}

/// GF(2^d) = F_2[x]/(modulus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: u32,
    modulus: u32,
}

/// An element of a specific field; carries its modulus so mixing fields is
/// caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

impl FieldElement {
    /// Polynomial-basis coordinates as an integer.
    pub fn value(&self) -> u32 {
        self.value
    }
}

impl FieldCtx {
    /// Field of degree `d`, with the smallest irreducible modulus unless one
    /// is given.
    pub fn new(d: u32, modulus: Option<u32>) -> Result<Self> {
        check_degree(d)?;
        let modulus = match modulus {
            None => smallest_irreducible(d)?,
            Some(p) => {
                if degree(p) != Some(d) || !is_irreducible(p) {
                    return Err(Error::Reducible {
                        modulus: p,
                        degree: d,
                    });
                }
                p
            }
        };
        Ok(FieldCtx { d, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `2^d`.
    pub fn order(&self) -> u32 {
        1 << self.d
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.order() {
            return Err(Error::Parameter(format!(
                "{value} is not an element of GF(2^{})",
                self.d
            )));
        }
        Ok(FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            modulus: self.modulus,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            modulus: self.modulus,
        }
    }

    /// All elements in integer order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|value| FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    fn own(&self, a: FieldElement) -> Result<u32> {
        if a.modulus != self.modulus {
            Err(Error::ContextMismatch {
                left: self.modulus,
                right: a.modulus,
            })
        } else {
            Ok(a.value)
        }
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement {
            value,
            modulus: self.modulus,
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.own(a)? ^ self.own(b)?))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.mul_raw(self.own(a)?, self.own(b)?)))
    }

    /// Shift-and-add multiply with reduction after every shift.
    fn mul_raw(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.d;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    fn pow_raw(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, a);
            }
            a = self.mul_raw(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement> {
        Ok(self.wrap(self.pow_raw(self.own(a)?, e)))
    }

    /// `a^(2^d - 2)`; fails on zero.
    pub fn inverse(&self, a: FieldElement) -> Result<FieldElement> {
        if self.own(a)? == 0 {
            return Err(Error::Parameter("zero has no inverse".into()));
        }
        self.pow(a, self.order() as u64 - 2)
    }

    fn trace_raw(&self, a: u32) -> bool {
        let mut x = a;
        let mut acc = 0;
        for _ in 0..self.d {
            acc ^= x;
            x = self.mul_raw(x, x);
        }
        debug_assert!(acc <= 1, "trace lies in the prime field");
        acc == 1
    }

    /// `Tr(a) = a + a^2 + a^4 + … + a^(2^(d-1))`.
    pub fn trace(&self, a: FieldElement) -> Result<bool> {
        Ok(self.trace_raw(self.own(a)?))
    }
}

/// `f(x, x_m) = Tr(Σ_{j=1}^{terms} (ux)^(2^j+1)) + x_m·Tr(ux)` on
/// `GF(2^(m-1)) × F_2`, indexed as `value(x) + 2^(m-1)·x_m`.
pub fn quadratic_trace_function(
    ctx: &FieldCtx,
    u: FieldElement,
    m: u32,
    terms: u32,
) -> Result<BooleanFunction> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "m must be even and >= 4, got {m}"
        )));
    }
    if ctx.degree() != m - 1 {
        return Err(Error::DimensionMismatch {
            expected: (m - 1) as usize,
            actual: ctx.degree() as usize,
        });
    }
    let u = ctx.own(u)?;
    let half = 1u32 << (m - 1);
    let exponents: Vec<u64> = (1..=terms).map(|j| (1u64 << j) + 1).collect();
    let per_x: Vec<(bool, bool)> = (0..half)
        .map(|x| {
            let ux = ctx.mul_raw(u, x);
            let q = exponents.iter().fold(0, |acc, &e| acc ^ ctx.pow_raw(ux, e));
            (ctx.trace_raw(q), ctx.trace_raw(ux))
        })
        .collect();
    BooleanFunction::from_fn(m, |idx| {
        let (q, lin) = per_x[(idx & (half - 1)) as usize];
        q ^ (idx >= half && lin)
    })
}

/// Member `f_u` of the Kerdock bent set on `m = 2k` variables: the quadratic
/// trace form with `j = 1..k-1`.
///
/// Over `GF(2^(2k-1))` the `j = k` exponent `2^k + 1` is a Frobenius
/// conjugate of `2^(k-1) + 1`, so including it would cancel the `j = k-1`
/// term and the set would no longer be bent.
pub fn kerdock_function(ctx: &FieldCtx, u: FieldElement, m: u32) -> Result<BooleanFunction> {
    quadratic_trace_function(ctx, u, m, m / 2 - 1)
}

/// `[f_u : u ∈ GF(2^(m-1))]` in element order, using the default modulus.
pub fn kerdock_set(m: u32) -> Result<(FieldCtx, Vec<BooleanFunction>)> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "m must be even and >= 4, got {m}"
        )));
    }
    let ctx = FieldCtx::new(m - 1, None)?;
    let set = ctx
        .elements()
        .map(|u| kerdock_function(&ctx, u, m))
        .collect::<Result<Vec<_>>>()?;
    Ok((ctx, set))
}
