use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::HodgeError;

/// Bigraded dimension table `h^{p,q}` of a pure Hodge structure.
///
/// Zero entries are never stored. Keys always satisfy `p + q = weight` and
/// the table is symmetric under `(p, q) ↦ (q, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeNumbers {
    weight: i64,
    dims: BTreeMap<(i64, i64), usize>,
}

impl HodgeNumbers {
    pub fn new(weight: i64, dims: impl IntoIterator<Item = ((i64, i64), usize)>) -> Result<Self, HodgeError> {
        let mut table = BTreeMap::new();
        for ((p, q), h) in dims {
            if p + q != weight {
                return Err(HodgeError::WrongWeight { p, q, weight });
            }
            if h > 0 {
                *table.entry((p, q)).or_insert(0) += h;
            }
        }
        for (&(p, q), &h) in &table {
            if table.get(&(q, p)) != Some(&h) {
                return Err(HodgeError::Asymmetric { p, q });
            }
        }
        Ok(HodgeNumbers { weight, dims: table })
    }

    /// The unit object `Q(0)`.
    pub fn unit() -> Self {
        Self::tate(0)
    }

    /// `Q(m)`, one-dimensional of type `(−m, −m)`.
    pub fn tate(m: i64) -> Self {
        HodgeNumbers {
            weight: -2 * m,
            dims: BTreeMap::from([((-m, -m), 1)]),
        }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn dims(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.dims
    }

    pub fn get(&self, p: i64, q: i64) -> usize {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().all(|(&(p, q), &h)| self.get(q, p) == h)
    }

    /// Each `p` repeated `h^{p,q}` times, in increasing order.
    pub fn p_values(&self) -> Vec<i64> {
        self.dims
            .iter()
            .flat_map(|(&(p, _), &h)| std::iter::repeat(p).take(h))
            .collect()
    }

    pub fn tate_twist(&self, m: i64) -> Self {
        HodgeNumbers {
            weight: self.weight - 2 * m,
            dims: self.dims.iter().map(|(&(p, q), &h)| ((p - m, q - m), h)).collect(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = BTreeMap::new();
        for (&(p1, q1), &h1) in &self.dims {
            for (&(p2, q2), &h2) in &other.dims {
                *dims.entry((p1 + p2, q1 + q2)).or_insert(0) += h1 * h2;
            }
        }
        HodgeNumbers {
            weight: self.weight + other.weight,
            dims,
        }
    }

    pub fn dual(&self) -> Self {
        HodgeNumbers {
            weight: -self.weight,
            dims: self.dims.iter().map(|(&(p, q), &h)| ((-p, -q), h)).collect(),
        }
    }

    /// Exterior power `Λ^k`.
    pub fn wedge(&self, k: usize) -> Self {
        self.power(k, binomial)
    }

    /// Symmetric power `Sym^k`.
    pub fn sym(&self, k: usize) -> Self {
        self.power(k, |h, j| if j == 0 { 1 } else { binomial(h + j - 1, j) })
    }

    // A k-selection splits into j_s elements from each slot s with Σ j_s = k;
    // `choose(h, j)` counts the selections inside one slot of dimension h.
    fn power(&self, k: usize, choose: impl Fn(usize, usize) -> usize) -> Self {
        let mut acc: BTreeMap<(usize, i64, i64), usize> = BTreeMap::from([((0, 0, 0), 1)]);
        for (&(p, q), &h) in &self.dims {
            let mut next = BTreeMap::new();
            for (&(taken, sp, sq), &mult) in &acc {
                for j in 0..=(k - taken) {
                    let c = choose(h, j);
                    if c == 0 {
                        break;
                    }
                    let ji = j as i64;
                    *next.entry((taken + j, sp + ji * p, sq + ji * q)).or_insert(0) += mult * c;
                }
            }
            acc = next;
        }
        let dims = acc
            .into_iter()
            .filter(|&((taken, _, _), m)| taken == k && m > 0)
            .map(|((_, p, q), m)| ((p, q), m))
            .collect();
        HodgeNumbers {
            weight: self.weight * k as i64,
            dims,
        }
    }

    /// `dim F^p` for `p` from the largest Hodge index down to the smallest.
    pub fn filtration_dims(&self) -> Vec<usize> {
        self.filtration_steps().into_iter().map(|(_, d)| d).collect()
    }

    /// Pairs `(p, dim F^p)`, descending in `p`.
    pub fn filtration_steps(&self) -> Vec<(i64, usize)> {
        let mut out = Vec::new();
        let mut total = 0;
        for (&(p, _), &h) in self.dims.iter().rev() {
            total += h;
            out.push((p, total));
        }
        out
    }

    /// `dim F^p` for an arbitrary integer `p`.
    pub fn filtration_dim_at(&self, p: i64) -> usize {
        self.dims.iter().filter(|(&(pp, _), _)| pp >= p).map(|(_, &h)| h).sum()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl fmt::Display for HodgeNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight {}:", self.weight)?;
        if self.dims.is_empty() {
            return write!(f, " (zero)");
        }
        for (&(p, q), &h) in self.dims.iter().rev() {
            write!(f, " h^{{{p},{q}}}={h}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    weight: i64,
    dims: BTreeMap<String, usize>,
}

/// Parses a `"p,q"` key.
pub fn parse_bidegree(key: &str) -> Option<(i64, i64)> {
    let (p, q) = key.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

impl Serialize for HodgeNumbers {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            weight: self.weight,
            dims: self.dims.iter().map(|(&(p, q), &h)| (format!("{p},{q}"), h)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HodgeNumbers {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let mut dims = Vec::with_capacity(wire.dims.len());
        for (k, h) in wire.dims {
            let pq = parse_bidegree(&k).ok_or_else(|| D::Error::custom(format!("bad bidegree key {k:?}, expected \"p,q\"")))?;
            dims.push((pq, h));
        }
        HodgeNumbers::new(wire.weight, dims).map_err(D::Error::custom)
    }
}
