//! Arithmetic over GF(2), GF(3) and GF(2^m) for 2 ≤ m ≤ 16.
//!
//! Elements are carried as canonical integers in `[0, q)`. For the binary
//! extensions an element is the bit pattern of its polynomial residue
//! (bit `i` is the coefficient of `x^i`), so addition is XOR and
//! multiplication goes through log/antilog tables generated by `x`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Primitive moduli for GF(2^m), indexed by `m`. Bit `i` is the coefficient
/// of `x^i`, leading term included.
const BINARY_MODULI: [u32; 17] = [
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// A finite field handle. Cloning is cheap; tables are shared.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    q: u32,
    characteristic: u32,
    degree: u32,
    modulus: u32,
    // exp has 2(q-1) entries so log[a] + log[b] never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    /// Builds the field of cardinality `q`. Supported: 2, 3, 2^m with m ≤ 16.
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Self::prime(2)),
            3 => Ok(Self::prime(3)),
            _ if q.is_power_of_two() && (4..=1 << 16).contains(&q) => {
                Ok(Self::binary_extension(q.trailing_zeros()))
            }
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    pub fn gf2() -> Self {
        Self::prime(2)
    }

    pub fn gf3() -> Self {
        Self::prime(3)
    }

    /// GF(2^m). Panics outside `1..=16`.
    pub fn gf2m(m: u32) -> Self {
        assert!((1..=16).contains(&m), "GF(2^{m}) is not supported");
        if m == 1 {
            Self::prime(2)
        } else {
            Self::binary_extension(m)
        }
    }

    fn prime(p: u32) -> Self {
        Field(Arc::new(Inner {
            q: p,
            characteristic: p,
            degree: 1,
            modulus: 0,
            exp: Vec::new(),
            log: Vec::new(),
        }))
    }

    fn binary_extension(m: u32) -> Self {
        let q = 1u32 << m;
        let modulus = BINARY_MODULI[m as usize];
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut a = 1u32;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = a;
            log[a as usize] = i as u32;
            a <<= 1;
            if a & q != 0 {
                a ^= modulus;
            }
        }
        debug_assert_eq!(a, 1, "modulus {modulus:#x} is not primitive");
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Field(Arc::new(Inner {
            q,
            characteristic: 2,
            degree: m,
            modulus,
            exp,
            log,
        }))
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.degree
    }

    /// Coefficients of the defining polynomial, constant term first.
    /// Empty for prime fields.
    pub fn modulus(&self) -> Vec<u32> {
        if self.0.degree == 1 {
            return Vec::new();
        }
        (0..=self.0.degree).map(|i| (self.0.modulus >> i) & 1).collect()
    }

    /// Modulus as a bit pattern (0 for prime fields).
    pub fn modulus_bits(&self) -> u32 {
        self.0.modulus
    }

    #[inline]
    pub fn contains(&self, a: u32) -> bool {
        a < self.0.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.0.characteristic == 2 {
            a ^ b
        } else {
            (a + b) % 3
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.0.characteristic == 2 {
            a
        } else {
            (3 - a) % 3
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match self.0.q {
            2 => 1,
            3 => (a * b) % 3,
            _ => {
                let l = self.0.log[a as usize] + self.0.log[b as usize];
                self.0.exp[l as usize]
            }
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Domain("zero has no multiplicative inverse".into()));
        }
        Ok(match self.0.q {
            // 1·1 = 1 and 2·2 = 4 ≡ 1 (mod 3)
            2 | 3 => a,
            q => {
                let l = self.0.log[a as usize];
                self.0.exp[((q - 1 - l) % (q - 1)) as usize]
            }
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The generator `x` of the multiplicative group (2 for GF(3)).
    pub fn primitive_element(&self) -> u32 {
        match self.0.q {
            2 => 1,
            3 => 2,
            _ => 2,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        FieldElement::new(self.clone(), value)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.q == other.0.q && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "GF({})", self.0.q)
        } else {
            write!(f, "GF(2^{}; {:#x})", self.0.degree, self.0.modulus)
        }
    }
}

/// A field element bound to its field; mixing fields is an error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn new(field: Field, value: u32) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::Domain(format!(
                "{value} is not an element of GF({})",
                field.q()
            )));
        }
        Ok(Self { field, value })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field.clone(),
            value: self.field.add(self.value, other.value),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field.clone(),
            value: self.field.mul(self.value, other.value),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            field: self.field.clone(),
            value: self.field.inv(self.value)?,
        })
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈{:?}", self.value, self.field)
    }
}

/// Exhaustive irreducibility test for a binary polynomial (bit `i` is the
/// coefficient of `x^i`), by trial division with every polynomial of degree
/// up to half its own.
pub fn binary_poly_is_irreducible(poly: u32) -> bool {
    let deg = 31 - poly.leading_zeros();
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for divisor in (1u32 << d)..(1u32 << (d + 1)) {
            if binary_poly_rem(poly, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

fn binary_poly_rem(mut a: u32, b: u32) -> u32 {
    let db = 31 - b.leading_zeros();
    while a != 0 && 31 - a.leading_zeros() >= db {
        let shift = (31 - a.leading_zeros()) - db;
        a ^= b << shift;
    }
    a
}
