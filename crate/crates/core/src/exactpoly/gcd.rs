//! Polynomial gcd over ℤ[x] and fast coprimality certificates.
//!
//! The exact gcd runs a primitive pseudo-remainder sequence. Coprimality and
//! squarefreeness are first attempted modulo a few word-sized primes: if
//! `p ∤ lc(f)` then `deg gcd_ℤ(f, g) ≤ deg gcd_p(f, g)`, so a trivial modular gcd
//! is a proof. Only inconclusive cases fall back to the exact sequence.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{IntPoly, PolyError};

const PRIMES: [u64; 4] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    4_611_686_018_427_387_847,
    1_000_000_000_000_000_003,
    998_244_353,
];

/// Primitive gcd with positive leading coefficient.
pub fn gcd(f: &IntPoly, g: &IntPoly) -> Result<IntPoly, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = if f.degree() >= g.degree() {
        (f.primitive_part(), g.primitive_part())
    } else {
        (g.primitive_part(), f.primitive_part())
    };
    while !b.is_zero() {
        let r = a.signed_pseudo_rem(&b)?;
        a = b;
        b = r.primitive_part();
    }
    Ok(a.primitive_part())
}

/// True when `gcd(f, g)` is a constant.
pub fn coprime(f: &IntPoly, g: &IntPoly) -> Result<bool, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    if f.is_zero() {
        return Ok(g.is_constant());
    }
    if g.is_zero() {
        return Ok(f.is_constant());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(true);
    }
    if modular_coprime(f, g) {
        return Ok(true);
    }
    Ok(gcd(f, g)?.is_constant())
}

pub fn is_squarefree(f: &IntPoly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(true);
    }
    coprime(f, &f.derivative())
}

/// `f / gcd(f, f')`, primitive with positive leading coefficient.
pub fn squarefree_part(f: &IntPoly) -> Result<IntPoly, PolyError> {
    if is_squarefree(f)? {
        return Ok(f.primitive_part());
    }
    let g = gcd(f, &f.derivative())?;
    Ok(f.primitive_part()
        .div_exact(&g)?
        .expect("gcd divides f")
        .primitive_part())
}

fn modular_coprime(f: &IntPoly, g: &IntPoly) -> bool {
    for &p in &PRIMES {
        let (fp, gp) = (reduce(f, p), reduce(g, p));
        // the bound needs p ∤ lc of at least one input
        if fp.len() != f.coeffs().len() && gp.len() != g.coeffs().len() {
            continue;
        }
        if mod_gcd_degree(fp, gp, p) == Some(0) {
            return true;
        }
    }
    false
}

fn reduce(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r.is_negative() { r + &pb } else { r };
            r.to_u64().unwrap()
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Degree of the gcd over 𝔽_p; `None` when both reduce to zero.
fn mod_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Option<usize> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        let bd = b.len() - 1;
        while a.len() >= b.len() {
            let ad = a.len() - 1;
            let factor = mul_mod(a[ad], inv, p);
            if factor != 0 {
                for j in 0..=bd {
                    let t = mul_mod(factor, b[j], p);
                    let idx = ad - bd + j;
                    a[idx] = if a[idx] >= t { a[idx] - t } else { a[idx] + p - t };
                }
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().checked_sub(1)
}
