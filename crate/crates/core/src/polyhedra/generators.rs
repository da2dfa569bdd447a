//! Double description conversion between constraints and generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::constraint::Constraint;
use super::polyhedron::Polyhedron;
use crate::ratlin::rational::Rational;
use crate::ratlin::{Env, Relation};

/// `conv(points) + cone(rays) + span(lines)`; empty when `points` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    pub points: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
    pub lines: Vec<Vec<Rational>>,
}

impl GeneratorSet {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn extend(&mut self, other: GeneratorSet) {
        self.points.extend(other.points);
        self.rays.extend(other.rays);
        self.lines.extend(other.lines);
    }
}

/// A homogeneous halfspace `h·v ≥ 0` (or `= 0`).
struct Halfspace {
    normal: Vec<BigInt>,
    equality: bool,
}

struct Ray {
    v: Vec<BigInt>,
    sat: Vec<u64>,
}

/// Minimal generators of the cone `{v | every halfspace holds}` in `dim` dimensions.
struct Cone {
    lines: Vec<Vec<BigInt>>,
    rays: Vec<Ray>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn reduce(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `s·a + t·b`, reduced.
fn lin(s: &BigInt, a: &[BigInt], t: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| s * x + t * y).collect();
    reduce(&mut v);
    v
}

fn bit_set(bits: &mut Vec<u64>, i: usize) {
    let w = i / 64;
    if bits.len() <= w {
        bits.resize(w + 1, 0);
    }
    bits[w] |= 1 << (i % 64);
}

fn bits_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, x)| x & !b.get(i).copied().unwrap_or(0) == 0)
}

impl Cone {
    fn whole(dim: usize) -> Cone {
        let lines = (0..dim)
            .map(|i| {
                let mut v = vec![BigInt::zero(); dim];
                v[i] = BigInt::one();
                v
            })
            .collect();
        Cone {
            lines,
            rays: Vec::new(),
        }
    }

    fn add(&mut self, h: &Halfspace, index: usize) {
        if let Some(k) = self.lines.iter().position(|l| !dot(&h.normal, l).is_zero()) {
            let l = self.lines.swap_remove(k);
            let hl = dot(&h.normal, &l);
            let project = |v: &[BigInt]| {
                let hv = dot(&h.normal, v);
                if hv.is_zero() {
                    v.to_vec()
                } else {
                    // hl·v − hv·l, sign-corrected so the multiplier of v stays positive
                    let (s, t) = if hl.is_positive() { (hl.clone(), -hv) } else { (-hl.clone(), hv) };
                    lin(&s, v, &t, &l)
                }
            };
            self.lines = self.lines.iter().map(|v| project(v)).collect();
            for r in self.rays.iter_mut() {
                r.v = project(&r.v);
                bit_set(&mut r.sat, index);
            }
            if !h.equality {
                let mut v = l;
                if hl.is_negative() {
                    v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                }
                // The new ray saturates every earlier constraint (lines did).
                let mut sat = vec![u64::MAX; index / 64 + 1];
                let last = sat.len() - 1;
                sat[last] = if index.is_multiple_of(64) { 0 } else { (1u64 << (index % 64)) - 1 };
                // Ray is the only generator off this hyperplane: bit `index` stays clear.
                self.rays.push(Ray { v, sat });
            }
            return;
        }
        let values: Vec<BigInt> = self.rays.iter().map(|r| dot(&h.normal, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let pos: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i].is_negative()).collect();
        for p in &pos {
            for n in &neg {
                let common = bits_and(&self.rays[*p].sat, &self.rays[*n].sat);
                let adjacent = (0..self.rays.len())
                    .filter(|&r| r != *p && r != *n)
                    .all(|r| !bits_subset(&common, &self.rays[r].sat));
                if !adjacent {
                    continue;
                }
                let v = lin(&values[*p], &self.rays[*n].v, &-values[*n].clone(), &self.rays[*p].v);
                let mut sat = common;
                bit_set(&mut sat, index);
                next.push(Ray { v, sat });
            }
        }
        let old = std::mem::take(&mut self.rays);
        for (r, val) in old.into_iter().zip(&values) {
            if val.is_zero() {
                let mut r = r;
                bit_set(&mut r.sat, index);
                self.rays.push(r);
            } else if val.is_positive() && !h.equality {
                self.rays.push(r);
            }
        }
        self.rays.extend(next);
    }

    fn build(dim: usize, halfspaces: &[Halfspace]) -> Cone {
        let mut cone = Cone::whole(dim);
        // Equalities first shrink the lineality space cheaply.
        let mut order: Vec<usize> = (0..halfspaces.len()).collect();
        order.sort_by_key(|&i| !halfspaces[i].equality);
        for (index, &i) in order.iter().enumerate() {
            cone.add(&halfspaces[i], index);
        }
        cone
    }
}

fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = crate::ratlin::rational::denominator_lcm(v);
    let l = Rational::from_integer(l);
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    reduce(&mut out);
    out
}

impl Polyhedron {
    /// Vertices, extreme rays and lineality directions.
    pub fn generators(&self) -> GeneratorSet {
        let d = self.dim();
        if self.is_canonical_empty() {
            return GeneratorSet::default();
        }
        // Homogenize with t as the last coordinate: a·x + c·t ≥ 0, t ≥ 0.
        let mut hs: Vec<Halfspace> = self
            .constraints()
            .iter()
            .map(|c| {
                let mut normal = c.coeffs().to_vec();
                normal.push(c.constant().clone());
                Halfspace {
                    normal,
                    equality: c.is_equality(),
                }
            })
            .collect();
        let mut t = vec![BigInt::zero(); d + 1];
        t[d] = BigInt::one();
        hs.push(Halfspace {
            normal: t,
            equality: false,
        });
        let cone = Cone::build(d + 1, &hs);
        let mut g = GeneratorSet::default();
        for r in &cone.rays {
            let t = &r.v[d];
            if t.is_zero() {
                g.rays.push(to_rational(&r.v[..d]));
            } else {
                let t = Rational::from_integer(t.clone());
                g.points.push(r.v[..d].iter().map(|x| Rational::from_integer(x.clone()) / &t).collect());
            }
        }
        if g.points.is_empty() {
            return GeneratorSet::default();
        }
        g.lines = cone.lines.iter().map(|l| to_rational(&l[..d])).collect();
        g
    }

    /// The polyhedron generated by `g` over `env`, with minimal constraints.
    pub fn from_generators(g: &GeneratorSet, env: Env) -> Polyhedron {
        let d = env.len();
        if g.is_empty() {
            return Polyhedron::empty(env);
        }
        // Polar cone over (a, c): a·p + c ≥ 0, a·r ≥ 0, a·l = 0.
        let mut hs = Vec::new();
        for p in &g.points {
            assert_eq!(p.len(), d, "generator dimension mismatch");
            let mut v = p.clone();
            v.push(Rational::one());
            hs.push(Halfspace {
                normal: clear_denominators(&v),
                equality: false,
            });
        }
        for (vs, equality) in [(&g.rays, false), (&g.lines, true)] {
            for r in vs {
                assert_eq!(r.len(), d, "generator dimension mismatch");
                let mut v = r.clone();
                v.push(Rational::zero());
                hs.push(Halfspace {
                    normal: clear_denominators(&v),
                    equality,
                });
            }
        }
        let cone = Cone::build(d + 1, &hs);
        let split = |v: &[BigInt], rel| Constraint::new(v[..d].to_vec(), v[d].clone(), rel);
        let constraints = cone
            .lines
            .iter()
            .map(|l| split(l, Relation::EqZero))
            .chain(cone.rays.iter().map(|r| split(&r.v, Relation::GeqZero)));
        Polyhedron::new(env, constraints)
    }
}
