//! Armendariz-type properties: zero products of polynomials force zero
//! coefficient products, under the ordinary or the Hurwitz product.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::seq::SliceRandom;

use super::search::{
    degree_one, exhaustive, random, random_vector, test_pair, to_elems, Arena, Hit, Mult, TableArena, ValueArena, E,
};
use super::{exact_under_truncation, over_budget, space, SearchOpts};
use crate::hurwitz::{multiply, Product};
use crate::ring::{binomial, factorial, Elem, Ring};
use crate::verdict::{Bounds, Claim, Mode, Verdict, Witness};
use crate::{Error, Result};

/// Plain Armendariz: `f g = 0` in `R[x]` forces every `a_i b_j = 0`.
pub fn check_armendariz(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    search(ring, Product::Ordinary, opts)
}

/// Armendariz of the Hurwitz series type, searched on exact Hurwitz
/// polynomials (and on jets in random mode when `trunc > 0`).
pub fn check_hurwitz_armendariz(ring: &Ring, opts: &SearchOpts) -> Result<Verdict> {
    search(ring, Product::Hurwitz, opts)
}

/// Tests one given pair. `Fails` when it is a witness; `Unknown` otherwise,
/// since a single pair says nothing about the property holding.
pub fn check_pair(ring: &Ring, product: Product, f: &[Elem], g: &[Elem]) -> Result<Verdict> {
    let p = multiply(ring, product, f, g)?;
    let bounds = Bounds {
        degree: f.len().max(g.len()).saturating_sub(1),
        trunc: match product {
            Product::Jet(n) => n,
            _ => 0,
        },
        mode: Mode::Directed,
        samples: 1,
        seed: 0,
    };
    if !p.iter().all(|c| ring.is_zero(c)) {
        return Ok(Verdict::unknown(bounds, "the given pair does not multiply to zero"));
    }
    let hit = f
        .iter()
        .enumerate()
        .find_map(|(i, a)| g.iter().enumerate().find(|(_, b)| !ring.is_zero(&ring.mul(a, b))).map(|(j, _)| (i, j)));
    match hit {
        Some((i, j)) => {
            let claim = Claim::ZeroProduct { f: f.to_vec(), g: g.to_vec(), product, i, j };
            Ok(certify(ring, bounds, claim))
        }
        None => Ok(Verdict::unknown(bounds, "all coefficient products of the given pair vanish")),
    }
}

fn certify(ring: &Ring, bounds: Bounds, claim: Claim) -> Verdict {
    let exact = match &claim {
        Claim::ZeroProduct { f, g, .. } => exact_under_truncation(ring, &[f, g]),
        _ => true,
    };
    let w = Witness::new(ring, claim);
    if exact {
        Verdict::fails(bounds, w)
    } else {
        let mut v = Verdict::unknown(bounds, "zero product only within the word-length cap");
        v.witness = Some(w);
        v
    }
}

fn hit_claim<A: Arena>(arena: &A, hit: &Hit<E<A>>, product: Product) -> Claim {
    Claim::ZeroProduct { f: to_elems(arena, &hit.f), g: to_elems(arena, &hit.g), product, i: hit.i, j: hit.j }
}

fn search(ring: &Ring, product: Product, opts: &SearchOpts) -> Result<Verdict> {
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    match ring.table() {
        Ok(table) => run(&TableArena { ring, table }, product, opts),
        Err(e) if opts.mode == Mode::Exhaustive && ring.size().is_none() => Err(e),
        Err(_) => run(&ValueArena::new(ring), product, opts),
    }
}

fn run<A: Arena>(arena: &A, product: Product, opts: &SearchOpts) -> Result<Verdict> {
    let ring = arena.ring();
    let d = opts.degree;
    match opts.mode {
        Mode::Exhaustive => {
            let elems: Vec<E<A>> = match arena.everything() {
                Some(all) => all,
                None => {
                    let n = ring.size().ok_or_else(|| ring.not_enumerable())?;
                    if space(n, 2 * (d + 1)) > opts.budget {
                        return Err(over_budget("exhaustive polynomial scan", space(n, 2 * (d + 1)), opts.budget));
                    }
                    ring.elements()?.map(|x| arena.lift(&x)).collect()
                }
            };
            let cost = space(elems.len() as u64, 2 * (d + 1));
            if cost > opts.budget {
                return Err(over_budget("exhaustive polynomial scan", cost, opts.budget));
            }
            let m = Mult::new(ring.characteristic(), product, d + 1);
            let (hit, count) = exhaustive(arena, &elems, &m, d);
            let bounds = opts.bounds(count);
            Ok(match hit {
                Some(h) => certify(ring, bounds, hit_claim(arena, &h, product)),
                None => Verdict::holds(bounds),
            })
        }
        Mode::Random | Mode::Trivial => random_search(arena, product, opts),
        Mode::Directed => directed(arena, product, opts),
    }
}

fn random_search<A: Arena>(arena: &A, product: Product, opts: &SearchOpts) -> Result<Verdict> {
    let ring = arena.ring();
    let mut rng = opts.rng();
    let d = opts.degree;
    let bounds = |count| Bounds { mode: Mode::Random, ..opts.bounds(count) };
    if opts.trunc > 0 && product == Product::Hurwitz {
        let len = d.min(opts.trunc) + 1;
        let jet = Mult::new(ring.characteristic(), Product::Jet(opts.trunc), len);
        let exact = Mult::new(ring.characteristic(), Product::Hurwitz, len);
        let c = arena.ops();
        let mut candidate = None;
        for k in 0..opts.samples {
            let f = random_vector(arena, len, &mut rng);
            let g = random_vector(arena, len, &mut rng);
            let Some(hit) = test_pair(c, &jet, &f, &g) else { continue };
            if exact.vanishes(c, &f, &g) {
                return Ok(certify(ring, bounds(k + 1), hit_claim(arena, &hit, Product::Hurwitz)));
            }
            candidate.get_or_insert(hit);
        }
        return Ok(match candidate {
            Some(h) => {
                let mut v = Verdict::unknown(bounds(opts.samples), format!("candidate at order {}", opts.trunc));
                v.witness = Some(Witness::new(ring, hit_claim(arena, &h, Product::Jet(opts.trunc))));
                v
            }
            None => Verdict::holds(bounds(opts.samples)),
        });
    }
    let m = Mult::new(ring.characteristic(), product, d + 1);
    let (hit, count) = random(arena, &m, d + 1, opts.samples, &mut rng);
    Ok(match hit {
        Some(h) => certify(ring, bounds(count), hit_claim(arena, &h, product)),
        None => Verdict::holds(bounds(count)),
    })
}

fn directed<A: Arena>(arena: &A, product: Product, opts: &SearchOpts) -> Result<Verdict> {
    let ring = arena.ring();
    let d = opts.degree;
    let bounds = |count| Bounds { mode: Mode::Directed, ..opts.bounds(count) };
    let mut count = 0u64;
    if d == 0 {
        // Constants: f g = 0 is a_0 b_0 = 0, never a counterexample.
        return Ok(Verdict::holds(bounds(0)));
    }
    let pool = ring.pool();
    if product == Product::Hurwitz {
        let (found, spent) = insertion_channel(ring, &pool, d);
        count += spent;
        if let Some(claim) = found {
            return Ok(certify(ring, bounds(count), claim));
        }
        let (found, spent) = monomial_channel(ring, &pool, d)?;
        count += spent;
        if let Some(claim) = found {
            return Ok(certify(ring, bounds(count), claim));
        }
    }
    let elems: Vec<E<A>> = match arena.everything() {
        Some(all) => all,
        None => pool.iter().map(|x| arena.lift(x)).collect(),
    };
    let m = Mult::new(ring.characteristic(), product, 2);
    let (hit, spent, complete) = degree_one(arena.ops(), &m, &elems, opts.budget);
    count += spent;
    if let Some(h) = hit {
        return Ok(certify(ring, bounds(count), hit_claim(arena, &h, product)));
    }
    if !complete {
        return Ok(Verdict::unknown(bounds(count), "degree-one scan stopped at the budget"));
    }
    Ok(Verdict::holds(bounds(count)))
}

/// `u (1 - r x)` times `(k! r^k v)_k`: the product telescopes to
/// `-(K+1)! u r^(K+1) v x^(K+1)`, so once that term dies the pair is an exact
/// zero product, while its coefficient product `u (r v)` may survive.
fn insertion_channel(ring: &Ring, pool: &[Elem], max_deg: usize) -> (Option<Claim>, u64) {
    let mut count = 0u64;
    for u in pool.iter().filter(|u| !ring.is_zero(u)) {
        for v in pool.iter().filter(|v| !ring.is_zero(v)) {
            if !ring.is_zero(&ring.mul(u, v)) {
                continue;
            }
            for r in pool {
                count += 1;
                let ur = ring.mul(u, r);
                if ring.is_zero(&ring.mul(&ur, v)) {
                    continue;
                }
                let mut g = vec![v.clone()];
                let mut power = v.clone();
                let mut closed = false;
                for k in 1..=max_deg + 1 {
                    power = ring.mul(r, &power);
                    let next = ring.scale_big(&BigInt::from(factorial(k as u64)), &power);
                    if ring.is_zero(&ring.mul(u, &next)) {
                        closed = true;
                        break;
                    }
                    if k > max_deg {
                        break;
                    }
                    g.push(next);
                }
                if !closed {
                    continue;
                }
                let f = vec![u.clone(), ring.neg(&ur)];
                let p = multiply(ring, Product::Hurwitz, &f, &g).expect("pool elements belong to the ring");
                if !p.iter().all(|c| ring.is_zero(c)) {
                    continue;
                }
                if let Some((i, j)) = first_violation(ring, &f, &g) {
                    return (Some(Claim::ZeroProduct { f, g, product: Product::Hurwitz, i, j }), count);
                }
            }
        }
    }
    (None, count)
}

/// `a x^i` times `b x^j` is `C(i+j, i) ab x^(i+j)`: a zero product whenever
/// the binomial weight kills `ab != 0`.
fn monomial_channel(ring: &Ring, pool: &[Elem], max_deg: usize) -> Result<(Option<Claim>, u64)> {
    let mut count = 0u64;
    if ring.characteristic() == 0 {
        return Ok((None, 0));
    }
    for a in pool {
        for b in pool {
            let ab = ring.mul(a, b);
            if ring.is_zero(&ab) {
                continue;
            }
            for n in 1..=2 * max_deg {
                for i in n.saturating_sub(max_deg)..=n.min(max_deg) {
                    count += 1;
                    let w = binomial(n as u64, i as u64)?;
                    if !ring.is_zero(&ring.scale_big(&BigInt::from(w), &ab)) {
                        continue;
                    }
                    let j = n - i;
                    let mut f = vec![ring.zero(); i + 1];
                    f[i] = a.clone();
                    let mut g = vec![ring.zero(); j + 1];
                    g[j] = b.clone();
                    return Ok((Some(Claim::ZeroProduct { f, g, product: Product::Hurwitz, i, j }), count));
                }
            }
        }
    }
    Ok((None, count))
}

fn first_violation(ring: &Ring, f: &[Elem], g: &[Elem]) -> Option<(usize, usize)> {
    f.iter()
        .enumerate()
        .find_map(|(i, a)| g.iter().enumerate().find(|(_, b)| !ring.is_zero(&ring.mul(a, b))).map(|(j, _)| (i, j)))
}

/// The Armendariz condition for polynomials whose coefficients all lie in
/// `ideal` (a subset closed under the ring operations, possibly without
/// identity), tested inside the parent ring.
pub fn check_ideal_armendariz(ring: &Ring, ideal: &[Elem], product: Product, opts: &SearchOpts) -> Result<Verdict> {
    let table = ring.table()?;
    let arena = TableArena { ring, table };
    let elems: Vec<u32> = ideal.iter().map(|x| arena.lift(x)).collect();
    let d = opts.degree;
    let m = Mult::new(ring.characteristic(), product, d + 1);
    let cost = space(elems.len() as u64, 2 * (d + 1));
    let (hit, count) = if cost <= opts.budget && opts.mode != Mode::Random {
        exhaustive(&arena, &elems, &m, d)
    } else {
        let mut rng = opts.rng();
        let c = arena.ops();
        let mut found = None;
        let mut count = 0;
        for _ in 0..opts.samples {
            count += 1;
            let f: Vec<u32> = (0..=d).map(|_| *elems.choose(&mut rng).expect("ideal contains zero")).collect();
            let g: Vec<u32> = (0..=d).map(|_| *elems.choose(&mut rng).expect("ideal contains zero")).collect();
            if let Some(h) = test_pair(c, &m, &f, &g) {
                found = Some(h);
                break;
            }
        }
        (found, count)
    };
    let mode = if cost <= opts.budget && opts.mode != Mode::Random { Mode::Exhaustive } else { Mode::Random };
    let bounds = Bounds { mode, ..opts.bounds(count) };
    Ok(match hit {
        Some(h) => certify(ring, bounds, hit_claim(&arena, &h, product)),
        None => Verdict::holds(bounds),
    })
}

/// Requires a bounded Hurwitz-Armendariz `Holds` at the same bounds, then
/// runs [`scan_nproduct`].
pub fn check_nproduct_armendariz(ring: &Ring, n: usize, opts: &SearchOpts) -> Result<Verdict> {
    let base = check_hurwitz_armendariz(ring, opts)?;
    if !base.is_holds() {
        return Err(Error::HypothesisNotEstablished(format!(
            "{ring} is not Armendariz of the Hurwitz series type at degree {} (status {})",
            opts.degree, base.status
        )));
    }
    scan_nproduct(ring, n, opts)
}

/// Random `n`-tuples of Hurwitz polynomials with coefficients among the zero
/// divisors; tuples whose product vanishes must have every product of one
/// coefficient from each factor equal to zero.
pub fn scan_nproduct(ring: &Ring, n: usize, opts: &SearchOpts) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n-product check needs n >= 2, got {n}")));
    }
    if ring.is_trivial() {
        return Ok(Verdict::trivial(opts.bounds(0)));
    }
    let candidates: Vec<Elem> = match ring.table() {
        Ok(_) => ring.elements()?.collect(),
        Err(_) => ring.pool(),
    };
    let divisors: Vec<Elem> = candidates
        .iter()
        .filter(|x| {
            ring.is_zero(x)
                || candidates
                    .iter()
                    .any(|y| !ring.is_zero(y) && (ring.is_zero(&ring.mul(x, y)) || ring.is_zero(&ring.mul(y, x))))
        })
        .cloned()
        .collect();
    let bounds = |count| Bounds { mode: Mode::Random, ..opts.bounds(count) };
    if divisors.len() <= 1 {
        return Ok(Verdict::holds(bounds(0)).with_note("no zero divisors: vacuous"));
    }
    let mut rng = opts.rng();
    let mut tested = 0u64;
    for _ in 0..opts.samples {
        let factors: Vec<Vec<Elem>> = (0..n)
            .map(|_| (0..=opts.degree).map(|_| divisors.choose(&mut rng).expect("nonempty").clone()).collect())
            .collect();
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = multiply(ring, Product::Hurwitz, &acc, f)?;
        }
        if !acc.iter().all(|c| ring.is_zero(c)) {
            continue;
        }
        tested += 1;
        let mut idx = vec![0usize; n];
        loop {
            let mut c = ring.one();
            for (f, &i) in factors.iter().zip(&idx) {
                c = ring.mul(&c, &f[i]);
            }
            if !ring.is_zero(&c) {
                let claim = Claim::NProduct { factors: factors.clone(), product: Product::Hurwitz, indices: idx };
                let flat: Vec<&[Elem]> = factors.iter().map(|f| f.as_slice()).collect();
                let w = Witness::new(ring, claim);
                return Ok(if exact_under_truncation(ring, &flat) {
                    Verdict::fails(bounds(tested), w)
                } else {
                    let mut v = Verdict::unknown(bounds(tested), "zero product only within the word-length cap");
                    v.witness = Some(w);
                    v
                });
            }
            if !super::search::odometer(&mut idx, opts.degree + 1) {
                break;
            }
        }
    }
    Ok(Verdict::holds(bounds(tested)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_gf, make_zmod};

    #[test]
    fn zn4_hurwitz_fails_by_monomials() {
        let r = make_zmod(4).unwrap();
        let v = check_hurwitz_armendariz(&r, &SearchOpts::new(Mode::Directed).degree(2)).unwrap();
        assert!(v.is_fails());
        assert!(v.witness.unwrap().revalidate());
    }

    #[test]
    fn fields_are_armendariz() {
        let r = make_gf(2, None).unwrap();
        let v = check_armendariz(&r, &SearchOpts::new(Mode::Exhaustive).degree(2)).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.bounds.samples, 64);
    }
}
