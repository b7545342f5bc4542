use crate::error::{LocalNumError, Result};
use crate::hensel::hensel_lift;
use crate::number::{LocalFieldSpec, LocalNumber};
use hyperlab_algebra::rat;
use hyperlab_algebra::Polynomial;
use std::collections::BTreeSet;

/// Residue-level unit invariant of a square class: the quadratic
/// character of the leading digit in odd residue characteristic, or the
/// unit class mod 8 over Q_2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitClass {
    QuadChar { is_square: bool },
    Mod8(u8),
}

/// The class of a nonzero element in F^x / (F^x)^2: valuation parity plus
/// the unit invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareClass {
    pub val_parity: u8,
    pub unit: UnitClass,
}

impl SquareClass {
    /// Whether the element is itself a square.
    pub fn is_trivial(&self) -> bool {
        self.val_parity == 0
            && match self.unit {
                UnitClass::QuadChar { is_square } => is_square,
                UnitClass::Mod8(u) => u == 1,
            }
    }

    /// A compact index: 0..4 in odd residue characteristic, 0..8 over
    /// Q_2. Index 0 is the trivial class.
    pub fn index(&self) -> u8 {
        match self.unit {
            UnitClass::QuadChar { is_square } => self.val_parity * 2 + u8::from(!is_square),
            UnitClass::Mod8(u) => self.val_parity * 4 + (u - 1) / 2,
        }
    }
}

fn legendre_is_square(d: u64, p: u64) -> bool {
    // Euler criterion d^((p-1)/2) mod p
    let mut acc = 1u128;
    let mut base = (d % p) as u128;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc == 1
}

/// Square class of a nonzero truncated number.
///
/// For odd residue characteristic the class is (v mod 2, chi(u)) where u
/// is the leading residue digit and chi its quadratic character; one-units
/// are squares by Hensel, which is also used here to certify the unit
/// square root when chi(u) = 1. For Q_2 the unit class mod 8 is returned
/// (needing 3 known digits). F_2((t)) is refused: its degree-2 extension
/// theory is Artin-Schreier, not square classes.
pub fn square_class(u: &LocalNumber) -> Result<SquareClass> {
    if u.is_zero() {
        return Err(LocalNumError::ZeroInput);
    }
    let val = match u.valuation() {
        crate::valexp::ValExp::Finite(v) => {
            let i: i64 = v.to_integer().try_into().map_err(|_| LocalNumError::ZeroInput)?;
            i
        }
        crate::valexp::ValExp::Infinity => unreachable!("nonzero number"),
    };
    let val_parity = (val.rem_euclid(2)) as u8;
    match u.spec() {
        LocalFieldSpec::Padic { p } if *p == 2 => {
            let digits = u.padic_digits().expect("padic digits");
            if digits.len() < 3 {
                return Err(LocalNumError::InsufficientPrecision);
            }
            let unit_mod8 = (digits[0] + 2 * digits[1] + 4 * digits[2]) as u8;
            Ok(SquareClass { val_parity, unit: UnitClass::Mod8(unit_mod8) })
        }
        LocalFieldSpec::Padic { p } => {
            let d0 = u.padic_digits().expect("padic digits")[0];
            let is_sq = legendre_is_square(d0, *p);
            if is_sq {
                // certify via Hensel: lift the mod-p square root of d0
                let r0 = (1..*p).find(|r| (r * r) % p == d0 % p).expect("quadratic residue");
                let spec = u.spec().clone();
                let f = Polynomial::new(vec![rat(-(d0 as i64)), rat(0), rat(1)]);
                let start = LocalNumber::from_integer(&spec, r0 as i64, 4)?;
                let lifted = hensel_lift(&f, &start, 2)?;
                debug_assert!(!lifted.is_zero());
            }
            Ok(SquareClass { val_parity, unit: UnitClass::QuadChar { is_square: is_sq } })
        }
        LocalFieldSpec::Laurent { residue } => {
            if residue.characteristic() == 2 {
                return Err(LocalNumError::UnsupportedCharacteristic);
            }
            let lead = &u.laurent_digits().expect("laurent digits")[0];
            let q = residue.order();
            let is_sq = lead.pow(((q - 1) / 2) as u128).is_one();
            Ok(SquareClass { val_parity, unit: UnitClass::QuadChar { is_square: is_sq } })
        }
    }
}

/// |F^x / (F^x)^2| - 1, the number of quadratic extensions up to
/// isomorphism, computed by enumerating the square classes of a covering
/// candidate family (all residue units at both uniformizer parities).
pub fn count_quadratic_extensions(spec: &LocalFieldSpec) -> Result<usize> {
    let mut classes: BTreeSet<SquareClass> = BTreeSet::new();
    match spec {
        LocalFieldSpec::Padic { p } if *p == 2 => {
            for u in [1i64, 3, 5, 7] {
                for e in [0u32, 1] {
                    let n = u * 2i64.pow(e);
                    classes.insert(square_class(&LocalNumber::from_integer(spec, n, 6)?)?);
                }
            }
        }
        LocalFieldSpec::Padic { p } => {
            for u in 1..*p {
                for e in [0u32, 1] {
                    let n = (u as i64) * (*p as i64).pow(e);
                    classes.insert(square_class(&LocalNumber::from_integer(spec, n, 6)?)?);
                }
            }
        }
        LocalFieldSpec::Laurent { residue } => {
            if residue.characteristic() == 2 {
                return Err(LocalNumError::UnsupportedCharacteristic);
            }
            for c in residue.elements() {
                if c.is_zero() {
                    continue;
                }
                for e in [0i64, 1] {
                    classes
                        .insert(square_class(&LocalNumber::laurent_from_parts(spec, e, vec![c.clone()])?)?);
                }
            }
        }
    }
    Ok(classes.len() - 1)
}
