use num_rational::BigRational;

use super::{coprime, descartes, gcd, is_squarefree, squarefree_part, IntPoly, Interval, PolyError, Sign};

/// Number of distinct real roots.
pub fn count_real_roots(f: &IntPoly) -> Result<usize, PolyError> {
    Ok(isolate_real_roots(f)?.len())
}

/// Sorted, pairwise-disjoint isolating intervals covering every distinct real
/// root. Open intervals never have a root as an endpoint; exact rational roots
/// come back as degenerate intervals.
pub fn isolate_real_roots(f: &IntPoly) -> Result<Vec<Interval>, PolyError> {
    let g = squarefree_of(f)?;
    let mut ivs = descartes::isolate_squarefree(&g);
    ivs.iter_mut().for_each(|iv| detach_endpoints(&g, iv));
    Ok(ivs)
}

fn squarefree_of(f: &IntPoly) -> Result<IntPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if is_squarefree(f)? {
        Ok(f.clone())
    } else {
        squarefree_part(f)
    }
}

/// Shrink an open isolating interval until neither endpoint is a root.
fn detach_endpoints(g: &IntPoly, iv: &mut Interval) {
    while !iv.is_exact() && (g.sign_at(iv.lo()).is_zero() || g.sign_at(iv.hi()).is_zero()) {
        *iv = bisect_once(g, iv);
    }
}

/// Isolating intervals for the distinct real roots of `f`, as from
/// [`isolate_real_roots`], each paired with the signs of `others` at that
/// root (zero where they share it).
///
/// When every member of `others` is coprime to `f`, roots and signs come out
/// of one subdivision in which the Bernstein coefficients of `others` are
/// carried alongside those of `f`. Otherwise each sign is settled by
/// [`RootSigns`].
pub fn signs_at_roots(f: &IntPoly, others: &[&IntPoly]) -> Result<Vec<(Interval, Vec<Sign>)>, PolyError> {
    let g = squarefree_of(f)?;
    let mut all_coprime = true;
    for o in others {
        if o.is_zero() || !coprime(&g, o)? {
            all_coprime = false;
            break;
        }
    }
    if all_coprime {
        let mut out = descartes::isolate_with_signs(&g, others);
        out.iter_mut().for_each(|(iv, _)| detach_endpoints(&g, iv));
        return Ok(out);
    }
    let roots = isolate_real_roots(&g)?;
    let other_roots: Vec<Vec<Interval>> = others
        .iter()
        .map(|o| if o.is_zero() { Ok(Vec::new()) } else { isolate_real_roots(o) })
        .collect::<Result<_, _>>()?;
    let oracles: Vec<RootSigns> = others
        .iter()
        .zip(&other_roots)
        .map(|(o, r)| RootSigns::new(&g, o, r))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(roots.len());
    for root in roots {
        let mut iv = root;
        let mut signs = Vec::with_capacity(others.len());
        for oracle in &oracles {
            let (next, s) = oracle.at(&iv)?;
            iv = next;
            signs.push(s);
        }
        out.push((iv, signs));
    }
    Ok(out)
}

/// Sign of `f` immediately to the right of `x`, for squarefree `f`.
fn sign_right_of(f: &IntPoly, x: &BigRational) -> Sign {
    match f.sign_at(x) {
        Sign::Zero => f.derivative().sign_at(x),
        s => s,
    }
}

fn sign_left_of(f: &IntPoly, x: &BigRational) -> Sign {
    match f.sign_at(x) {
        Sign::Zero => -f.derivative().sign_at(x),
        s => s,
    }
}

/// Halve an interval isolating a simple root of `f`, keeping the half that
/// holds the root. A midpoint root collapses to the exact interval.
pub fn bisect_once(f: &IntPoly, iv: &Interval) -> Interval {
    if iv.is_exact() {
        return iv.clone();
    }
    let m = iv.midpoint();
    let sm = f.sign_at(&m);
    if sm.is_zero() {
        return Interval::exact(m);
    }
    if sm == sign_right_of(f, iv.lo()) {
        Interval::new(m, iv.hi().clone()).unwrap()
    } else {
        Interval::new(iv.lo().clone(), m).unwrap()
    }
}

fn check_isolating(f: &IntPoly, iv: &Interval) -> Result<(), PolyError> {
    let ok = if iv.is_exact() {
        f.sign_at(iv.lo()).is_zero()
    } else {
        let l = sign_right_of(f, iv.lo());
        let r = sign_left_of(f, iv.hi());
        !l.is_zero() && !r.is_zero() && l != r
    };
    if ok {
        Ok(())
    } else {
        Err(PolyError::NotIsolating(Box::new(iv.clone())))
    }
}

/// Bisect until `hi - lo ≤ width`.
pub fn refine(f: &IntPoly, iv: &Interval, width: &BigRational) -> Result<Interval, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    check_isolating(f, iv)?;
    let mut cur = iv.clone();
    while !cur.is_exact() && &cur.width() > width {
        cur = bisect_once(f, &cur);
    }
    Ok(cur)
}

/// Sign of `g` at the root of `f` isolated by `iv`, decided exactly.
///
/// `g_roots` must be isolating intervals for all real roots of `g` (as from
/// [`isolate_real_roots`]). The interval is bisected until it is disjoint from
/// every root interval of `g`, at which point `g` has constant sign on it. The
/// refined interval is returned alongside the sign. A zero sign means the two
/// polynomials share that root.
pub fn sign_near_root(
    f: &IntPoly,
    iv: &Interval,
    g: &IntPoly,
    g_roots: &[Interval],
) -> Result<(Interval, Sign), PolyError> {
    RootSigns::new(f, g, g_roots)?.at(iv)
}

/// [`sign_near_root`] for many roots of the same `f`, computing
/// `gcd(f, g)` once.
pub struct RootSigns<'a> {
    f: &'a IntPoly,
    g: &'a IntPoly,
    g_roots: &'a [Interval],
    common: Option<IntPoly>,
}

impl<'a> RootSigns<'a> {
    pub fn new(f: &'a IntPoly, g: &'a IntPoly, g_roots: &'a [Interval]) -> Result<Self, PolyError> {
        let common = if g.is_zero() || coprime(f, g)? {
            None
        } else {
            Some(gcd(f, g)?)
        };
        Ok(RootSigns {
            f,
            g,
            g_roots,
            common,
        })
    }

    pub fn at(&self, iv: &Interval) -> Result<(Interval, Sign), PolyError> {
        let (f, g) = (self.f, self.g);
        if iv.is_exact() {
            return Ok((iv.clone(), g.sign_at(iv.lo())));
        }
        if g.is_zero() {
            return Ok((iv.clone(), Sign::Zero));
        }
        if let Some(h) = &self.common {
            // roots of h are roots of f, and iv holds exactly one of those
            if h.sign_at(iv.lo()) != h.sign_at(iv.hi()) {
                return Ok((iv.clone(), Sign::Zero));
            }
        }
        let mut cur = iv.clone();
        let mut others: Vec<Interval> = self.g_roots.iter().filter(|j| j.overlaps(&cur)).cloned().collect();
        while !others.is_empty() {
            cur = bisect_once(f, &cur);
            if cur.is_exact() {
                return Ok((cur.clone(), g.sign_at(cur.lo())));
            }
            others = others
                .iter()
                .filter(|j| j.overlaps(&cur))
                .map(|j| bisect_once(g, j))
                .filter(|j| j.overlaps(&cur))
                .collect();
        }
        let s = g.sign_at(cur.lo());
        Ok((cur, s))
    }
}
