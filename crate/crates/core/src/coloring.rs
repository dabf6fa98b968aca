//! Mod-m colorings of a diagram: validation, kernel bases, enumeration,
//! palettes, and the per-diagram minimum color count.

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::matrix::coloring_matrix;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A coloring modulus m >= 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn get(&self) -> u64 {
        self.0
    }

    pub fn is_odd(&self) -> bool {
        self.0 % 2 == 1
    }

    pub fn is_prime(&self) -> bool {
        let m = self.0;
        if m < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    /// k with m = 2k + 1; defined only for odd m.
    pub fn half_k(&self) -> Result<u64> {
        if !self.is_odd() {
            return Err(Error::ModulusNotOdd(self.0));
        }
        Ok((self.0 - 1) / 2)
    }

    pub fn require_prime(&self) -> Result<()> {
        if !self.is_prime() {
            return Err(Error::ModulusNotPrime(self.0));
        }
        Ok(())
    }

    pub fn require_odd(&self) -> Result<()> {
        if !self.is_odd() {
            return Err(Error::ModulusNotOdd(self.0));
        }
        Ok(())
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The set of distinct residues a coloring uses.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Palette(BTreeSet<u64>);

impl Palette {
    pub fn new<I: IntoIterator<Item = u64>>(colors: I) -> Self {
        Palette(colors.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: u64) -> bool {
        self.0.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &Palette) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Parse a comma-separated residue list like "0,2,3,4,8".
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = BTreeSet::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let v: u64 = tok.parse().map_err(|_| Error::BadLine {
                line: s.to_string(),
                reason: format!("bad residue {tok:?}"),
            })?;
            out.insert(v);
        }
        Ok(Palette(out))
    }
}

impl fmt::Display for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// An assignment of residues mod m to the arcs of one diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Coloring {
    pub modulus: Modulus,
    pub values: Vec<u64>,
}

impl Coloring {
    pub fn constant(modulus: Modulus, arcs: usize, value: u64) -> Self {
        Coloring {
            modulus,
            values: vec![value % modulus.get(); arcs],
        }
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// True iff every crossing relation 2*over - under_in - under_out = 0
/// holds mod m. Crossing-free circles are unconstrained.
pub fn is_coloring(d: &Diagram, c: &Coloring) -> Result<bool> {
    let arcs = d.arcs();
    if c.values.len() != arcs.arc_count {
        return Err(Error::ArcCountMismatch {
            got: c.values.len(),
            want: arcs.arc_count,
        });
    }
    let m = c.modulus.get();
    for (i, cr) in d.crossings().iter().enumerate() {
        let over = c.values[d.over_arc(&arcs, i)];
        let a = c.values[arcs.arc_of_edge[cr.under_in()]];
        let b = c.values[arcs.arc_of_edge[cr.under_out()]];
        if (2 * over + 2 * m - a - b) % m != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn palette_of(c: &Coloring) -> Palette {
    Palette::new(c.values.iter().copied())
}

fn modinv(a: u64, m: u64) -> u64 {
    // m prime, a != 0 mod m.
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not a unit");
    t.rem_euclid(m as i64) as u64
}

/// Basis of the kernel of the coloring matrix over the field of m
/// elements (m prime). Basis vectors correspond to the free columns of
/// the reduced row echelon form, in ascending column order.
pub fn solve_colorings(d: &Diagram, m: Modulus) -> Result<Vec<Vec<u64>>> {
    m.require_prime()?;
    let p = m.get();
    let im = coloring_matrix(d);
    let rows = im.rows;
    let cols = im.cols;
    let bp = num_bigint::BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    use num_integer::Integer;
                    im[(i, j)].mod_floor(&bp).to_u64().unwrap()
                })
                .collect()
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(r) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, r);
        let inv = modinv(a[rank][col], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..rows {
            if r2 != rank && a[r2][col] != 0 {
                let f = a[r2][col];
                for j in 0..cols {
                    a[r2][j] = (a[r2][j] + (p - f) * a[rank][j]) % p;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for col in 0..cols {
            if let Some(r) = pivot_of_col[col] {
                v[col] = (p - a[r][free] % p) % p;
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// All non-trivial colorings mod a prime m: the m^n kernel points minus
/// the m constant ones, enumerated lexicographically over basis
/// coefficients.
pub fn enumerate_nontrivial(d: &Diagram, m: Modulus) -> Result<Vec<Coloring>> {
    let basis = solve_colorings(d, m)?;
    let p = m.get();
    let dim = basis.len();
    let arcs = basis.first().map_or(d.arcs().arc_count, |b| b.len());
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; dim];
    loop {
        let mut values = vec![0u64; arcs];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c == 0 {
                continue;
            }
            for (v, x) in values.iter_mut().zip(b) {
                *v = (*v + c * x) % p;
            }
        }
        let coloring = Coloring { modulus: m, values };
        if !coloring.is_constant() {
            out.push(coloring);
        }
        // Next coefficient vector, last coordinate fastest.
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Minimum palette size over all non-trivial m-colorings of this diagram.
pub fn min_colors_on_diagram(d: &Diagram, m: Modulus) -> Result<usize> {
    let all = enumerate_nontrivial(d, m)?;
    all.iter()
        .map(|c| palette_of(c).len())
        .min()
        .ok_or(Error::NoNontrivialColorings(m.get()))
}
