use alloc::string::ToString;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Elem, Ring};
use crate::verdict::{Bounds, Claim, Mode, Verdict, Witness};
use crate::{Error, Result};

/// Names of the checked laws, in checking order.
pub const LAWS: [&str; 8] = [
    "add-assoc",
    "add-comm",
    "add-identity",
    "add-inverse",
    "mul-assoc",
    "mul-identity",
    "left-distrib",
    "right-distrib",
];

/// Evaluates one law at `(x, y, z)`; `None` for an unknown law name.
pub(crate) fn law_holds(r: &Ring, law: &str, x: &Elem, y: &Elem, z: &Elem) -> Option<bool> {
    Some(match law {
        "add-assoc" => r.add(&r.add(x, y), z) == r.add(x, &r.add(y, z)),
        "add-comm" => r.add(x, y) == r.add(y, x),
        "add-identity" => r.add(x, &r.zero()) == *x,
        "add-inverse" => r.is_zero(&r.add(x, &r.neg(x))),
        "mul-assoc" => r.mul(&r.mul(x, y), z) == r.mul(x, &r.mul(y, z)),
        "mul-identity" => r.mul(x, &r.one()) == *x && r.mul(&r.one(), x) == *x,
        "left-distrib" => r.mul(x, &r.add(y, z)) == r.add(&r.mul(x, y), &r.mul(x, z)),
        "right-distrib" => r.mul(&r.add(x, y), z) == r.add(&r.mul(x, z), &r.mul(y, z)),
        _ => return None,
    })
}

fn first_violation(r: &Ring, x: &Elem, y: &Elem, z: &Elem) -> Option<&'static str> {
    LAWS.iter().copied().find(|law| law_holds(r, law, x, y, z) == Some(false))
}

/// Ring-axiom check: every triple when the ring is enumerable and
/// `size^3 <= budget`, otherwise `budget` random triples.
pub fn ring_axioms(ring: &Ring, budget: u64, seed: u64) -> Result<Verdict> {
    let caps = ring.capabilities();
    if !caps.enumerable && !caps.samplable {
        return Err(Error::CapabilityMissing("ring is neither enumerable nor samplable".into()));
    }
    let fail = |bounds: Bounds, law: &str, x: Elem, y: Elem, z: Elem| {
        Verdict::fails(bounds, Witness::new(ring, Claim::Axiom { law: law.to_string(), x, y, z }))
    };
    if let Some(n) = ring.size().filter(|&n| n.checked_pow(3).is_some_and(|c| c <= budget)) {
        let mut bounds = Bounds::new(Mode::Exhaustive);
        let elems: alloc::vec::Vec<Elem> = ring.elements()?.collect();
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    bounds.samples += 1;
                    if let Some(law) = first_violation(ring, x, y, z) {
                        return Ok(fail(bounds, law, x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
        debug_assert_eq!(bounds.samples, n * n * n);
        return Ok(Verdict::holds(bounds));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bounds = Bounds { seed, ..Bounds::new(Mode::Random) };
    for _ in 0..budget {
        let (x, y, z) = (ring.sample(&mut rng), ring.sample(&mut rng), ring.sample(&mut rng));
        bounds.samples += 1;
        if let Some(law) = first_violation(ring, &x, &y, &z) {
            return Ok(fail(bounds, law, x, y, z));
        }
    }
    Ok(Verdict::holds(bounds))
}
