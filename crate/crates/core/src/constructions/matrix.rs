//! Full, upper triangular and constant-diagonal triangular matrix rings.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::RngCore;

use super::quotient::quotient_parts;
use super::util::{digits, size_product, undigits, POOL_ALL};
use crate::ring::{Cursor, Elem, Ring, RingImpl, Value};
use crate::{Error, Result};

/// A group of cells that always hold the same value from `ring`.
struct Slot {
    cells: Vec<usize>,
    ring: Ring,
}

enum Shape {
    Full,
    Upper,
    /// Constant diagonal from `S`, strictly upper entries from `S/I`.
    ConstDiag {
        quotient: Ring,
    },
}

struct Matrices {
    base: Ring,
    k: usize,
    shape: Shape,
    slots: Vec<Slot>,
    radices: Vec<u64>,
    size: Option<u64>,
}

impl Matrices {
    fn new(base: &Ring, k: usize, shape: Shape) -> Matrices {
        let mut slots = Vec::new();
        match &shape {
            Shape::Full => {
                for c in 0..k * k {
                    slots.push(Slot { cells: alloc::vec![c], ring: base.clone() });
                }
            }
            Shape::Upper => {
                for i in 0..k {
                    for j in i..k {
                        slots.push(Slot { cells: alloc::vec![i * k + j], ring: base.clone() });
                    }
                }
            }
            Shape::ConstDiag { quotient, .. } => {
                slots.push(Slot { cells: (0..k).map(|i| i * k + i).collect(), ring: base.clone() });
                for i in 0..k {
                    for j in i + 1..k {
                        slots.push(Slot { cells: alloc::vec![i * k + j], ring: quotient.clone() });
                    }
                }
            }
        }
        let size = size_product(slots.iter().map(|s| s.ring.size()));
        let radices = slots.iter().map(|s| s.ring.size().unwrap_or(1)).collect();
        Matrices { base: base.clone(), k, shape, slots, radices, size }
    }

    fn b(&self) -> &dyn RingImpl {
        self.base.imp()
    }

    fn fill(&self, vals: impl IntoIterator<Item = Value>) -> Value {
        let mut cells = alloc::vec![self.b().zero(); self.k * self.k];
        for (slot, v) in self.slots.iter().zip(vals) {
            for &c in &slot.cells {
                cells[c] = v.clone();
            }
        }
        Value::Tuple(cells)
    }

    fn cell_ring(&self, cell: usize) -> &dyn RingImpl {
        match &self.shape {
            Shape::ConstDiag { quotient, .. } if cell / self.k != cell % self.k => quotient.imp(),
            _ => self.b(),
        }
    }
}

impl RingImpl for Matrices {
    fn zero(&self) -> Value {
        Value::Tuple(alloc::vec![self.b().zero(); self.k * self.k])
    }
    fn one(&self) -> Value {
        let mut cells = alloc::vec![self.b().zero(); self.k * self.k];
        for i in 0..self.k {
            cells[i * self.k + i] = self.b().one();
        }
        Value::Tuple(cells)
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        Value::Tuple(
            a.tuple().iter().zip(b.tuple()).enumerate().map(|(c, (x, y))| self.cell_ring(c).add(x, y)).collect(),
        )
    }
    fn neg(&self, a: &Value) -> Value {
        Value::Tuple(a.tuple().iter().enumerate().map(|(c, x)| self.cell_ring(c).neg(x)).collect())
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        let (a, b, k) = (a.tuple(), b.tuple(), self.k);
        let mut out = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let r = self.cell_ring(i * k + j);
                let (lo, hi) = match self.shape {
                    Shape::Full => (0, k),
                    _ if j < i => (1, 0),
                    _ => (i, j + 1),
                };
                let mut acc = r.zero();
                for m in lo..hi {
                    acc = r.add(&acc, &r.mul(&a[i * k + m], &b[m * k + j]));
                }
                out.push(acc);
            }
        }
        Value::Tuple(out)
    }
    fn scale(&self, n: &num_bigint::BigInt, a: &Value) -> Value {
        Value::Tuple(a.tuple().iter().enumerate().map(|(c, x)| self.cell_ring(c).scale(n, x)).collect())
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn size(&self) -> Option<u64> {
        self.size
    }
    fn element_at(&self, index: u64) -> Value {
        let ds = digits(index, &self.radices);
        self.fill(self.slots.iter().zip(ds).map(|(s, d)| s.ring.imp().element_at(d)))
    }
    fn index_of(&self, v: &Value) -> u64 {
        let cells = v.tuple();
        undigits(self.slots.iter().map(|s| s.ring.imp().index_of(&cells[s.cells[0]])), &self.radices)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Value {
        let vals: Vec<Value> = self.slots.iter().map(|s| s.ring.imp().sample(rng)).collect();
        self.fill(vals)
    }
    fn pool(&self) -> Vec<Value> {
        if let Some(n) = self.size.filter(|&n| n <= POOL_ALL) {
            return (0..n).map(|i| self.element_at(i)).collect();
        }
        let mut out = alloc::vec![self.zero(), self.one()];
        for slot in &self.slots {
            let imp = slot.ring.imp();
            for c in imp.pool().into_iter().filter(|c| *c != imp.zero()).take(3) {
                let mut cells = alloc::vec![self.b().zero(); self.k * self.k];
                for &cell in &slot.cells {
                    cells[cell] = c.clone();
                }
                let m = Value::Tuple(cells);
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        let units: Vec<Value> = out.clone();
        for x in &units {
            for y in &units {
                if out.len() >= 64 {
                    return out;
                }
                let s = self.add(x, y);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }
    fn write(&self, v: &Value, out: &mut String) {
        let cells = v.tuple();
        out.push('[');
        for i in 0..self.k {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for j in 0..self.k {
                if j > 0 {
                    out.push(',');
                }
                self.cell_ring(i * self.k + j).write(&cells[i * self.k + j], out);
            }
            out.push(']');
        }
        out.push(']');
    }
    fn parse(&self, cur: &mut Cursor<'_>) -> Result<Value> {
        let at = cur.offset();
        let k = self.k;
        let mut cells = Vec::with_capacity(k * k);
        cur.expect('[')?;
        for i in 0..k {
            if i > 0 {
                cur.expect(',')?;
            }
            cur.expect('[')?;
            for j in 0..k {
                if j > 0 {
                    cur.expect(',')?;
                }
                cells.push(self.cell_ring(i * k + j).parse(cur)?);
            }
            cur.expect(']')?;
        }
        cur.expect(']')?;
        let bad = |msg: &str| Error::Literal { offset: at, msg: msg.into() };
        let mut covered = alloc::vec![false; k * k];
        for slot in &self.slots {
            let first = &cells[slot.cells[0]];
            if slot.cells.iter().any(|&c| cells[c] != *first) {
                return Err(bad("diagonal entries must be equal"));
            }
            for &c in &slot.cells {
                covered[c] = true;
            }
        }
        let zero = self.b().zero();
        if cells.iter().zip(&covered).any(|(v, &cov)| !cov && *v != zero) {
            return Err(bad("entries below the diagonal must be zero"));
        }
        Ok(Value::Tuple(cells))
    }
}

fn check_dim(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::InvalidParameter(format!("matrix dimension must be at least {min}, got {k}")));
    }
    Ok(())
}

/// `M_k(R)`; enumeration is row-major over the entries.
pub fn make_matrix_full(base: &Ring, k: usize) -> Result<Ring> {
    check_dim(k, 1)?;
    Ok(Ring::new(format!("Mat({},{k})", base.label()), Matrices::new(base, k, Shape::Full)))
}

/// Upper triangular `k x k` matrices; enumeration is row-major over the
/// entries on or above the diagonal.
pub fn make_upper_triangular(base: &Ring, k: usize) -> Result<Ring> {
    check_dim(k, 1)?;
    Ok(Ring::new(format!("UT({},{k})", base.label()), Matrices::new(base, k, Shape::Upper)))
}

/// Upper triangular matrices with one diagonal value `a` from `S` and
/// strictly upper entries from `S/I`, `I` the ideal generated by `ideal_gens`.
/// The diagonal acts on the upper entries through `S -> S/I`. Enumeration:
/// the diagonal value first, then the upper entries row-major.
pub fn make_const_diag_ut(base: &Ring, ideal_gens: &[Elem], k: usize) -> Result<Ring> {
    check_dim(k, 2)?;
    // With I = 0 the upper entries live in S itself, which also covers
    // infinite S where ideal closure is unavailable.
    let quotient =
        if ideal_gens.iter().all(|g| base.is_zero(g)) { base.clone() } else { quotient_parts(base, ideal_gens)?.0 };
    let gens: Vec<String> = ideal_gens.iter().map(|g| base.render(g)).collect();
    let label = format!("UTc({},[{}],{k})", base.label(), gens.join(","));
    Ok(Ring::new(label, Matrices::new(base, k, Shape::ConstDiag { quotient })))
}
