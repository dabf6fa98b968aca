//! Exact integer matrices, Smith Normal Form, and link determinants.

use crate::diagram::Diagram;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let tmp = a[(k, j)].clone();
                            a[(k, j)] = a[(i, j)].clone();
                            a[(i, j)] = tmp;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = q * &self[(k, j)];
            self[(i, j)] -= d;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let d = q * &self[(i, k)];
            self[(i, j)] -= d;
        }
    }

    fn row_add(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            let d = self[(k, j)].clone();
            self[(i, j)] += d;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// U * A * V = D with U, V unimodular and D diagonal, entries non-negative,
/// each dividing the next. Pivots are chosen by smallest nonzero absolute
/// value to limit entry growth.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let steps = a.rows.min(a.cols);

    for k in 0..steps {
        'pivot: loop {
            // Smallest nonzero entry of the trailing submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in k..d.rows {
                for j in k..d.cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some(b) => d[(i, j)].abs() < d[b].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot;
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut cleared = true;
            for i in k + 1..d.rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = &d[(i, k)] / &d[(k, k)];
                d.row_sub(i, k, &q);
                u.row_sub(i, k, &q);
                if !d[(i, k)].is_zero() {
                    cleared = false;
                }
            }
            for j in k + 1..d.cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = &d[(k, j)] / &d[(k, k)];
                d.col_sub(j, k, &q);
                v.col_sub(j, k, &q);
                if !d[(k, j)].is_zero() {
                    cleared = false;
                }
            }
            if !cleared {
                continue 'pivot;
            }
            // Divisibility chain: drag any non-divisible entry into row k.
            for i in k + 1..d.rows {
                for j in k + 1..d.cols {
                    if !d[(i, j)].mod_floor(&d[(k, k)]).is_zero() {
                        d.row_add(k, i);
                        u.row_add(k, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        if d[(k, k)].is_zero() {
            break;
        }
    }
    (u, d, v)
}

/// Diagonal of a Smith Normal Form plus the derived link invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SNFSummary {
    /// Diagonal entries (non-negative, divisibility chain).
    pub diagonal: Vec<BigInt>,
    /// Number of arc columns of the underlying coloring matrix; columns
    /// beyond the diagonal each contribute a kernel dimension.
    pub arcs: usize,
}

impl SNFSummary {
    pub fn from_snf(d: &IntMatrix) -> Self {
        let len = d.rows.min(d.cols);
        SNFSummary {
            diagonal: (0..len).map(|i| d[(i, i)].clone()).collect(),
            arcs: d.cols,
        }
    }

    /// Dimension of the rational kernel (>= 1 for any coloring matrix).
    pub fn rational_nullity(&self) -> usize {
        let zeros = self.diagonal.iter().filter(|x| x.is_zero()).count();
        zeros + (self.arcs - self.diagonal.len())
    }

    /// The link determinant: product of the diagonal entries with one
    /// forced zero omitted. Any further zero makes the determinant zero.
    pub fn det_link(&self) -> BigInt {
        if self.rational_nullity() != 1 {
            return BigInt::zero();
        }
        let mut p = BigInt::one();
        for x in &self.diagonal {
            if !x.is_zero() {
                p *= x;
            }
        }
        p
    }

    /// Number of diagonal entries divisible by p, counting implicit zero
    /// columns: the dimension of the mod-p kernel.
    pub fn nullity_of(&self, p: u64) -> usize {
        let bp = BigInt::from(p);
        let in_diag = self
            .diagonal
            .iter()
            .filter(|x| x.mod_floor(&bp).is_zero())
            .count();
        in_diag + (self.arcs - self.diagonal.len())
    }
}

/// The coloring matrix: one row per crossing, columns indexed by arcs,
/// +2 on the over-arc and -1 on each under-arc, accumulated when arcs
/// coincide (a monochromatic kink row collapses to zero).
pub fn coloring_matrix(d: &Diagram) -> IntMatrix {
    let arcs = d.arcs();
    let mut m = IntMatrix::zero(d.crossing_count(), arcs.arc_count);
    for (i, c) in d.crossings().iter().enumerate() {
        let over = d.over_arc(&arcs, i);
        m[(i, over)] += BigInt::from(2);
        m[(i, arcs.arc_of_edge[c.under_in()])] -= BigInt::one();
        m[(i, arcs.arc_of_edge[c.under_out()])] -= BigInt::one();
    }
    m
}

/// Smith data of the coloring matrix of `d`.
pub fn link_determinant(d: &Diagram) -> SNFSummary {
    let m = coloring_matrix(d);
    let (_, snf, _) = smith_normal_form(&m);
    let mut s = SNFSummary::from_snf(&snf);
    s.arcs = m.cols;
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_2n;
    use crate::diagram::parse_pd;
    use rand::prelude::*;

    const TREFOIL_PD: &str = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3";

    fn check_snf(a: &IntMatrix) -> IntMatrix {
        let (u, d, v) = smith_normal_form(a);
        assert_eq!(u.mul(a).mul(&v), d, "U*A*V != D");
        assert_eq!(u.determinant().abs(), BigInt::one(), "U not unimodular");
        assert_eq!(v.determinant().abs(), BigInt::one(), "V not unimodular");
        let len = d.rows.min(d.cols);
        for i in 0..len {
            for j in 0..len {
                if i != j {
                    assert!(d[(i, j)].is_zero(), "D not diagonal");
                }
            }
        }
        for i in 0..len.saturating_sub(1) {
            if d[(i, i)].is_zero() {
                assert!(d[(i + 1, i + 1)].is_zero(), "nonzero after zero in chain");
            } else {
                assert!(
                    d[(i + 1, i + 1)].mod_floor(&d[(i, i)]).is_zero(),
                    "divisibility chain broken: {} !| {}",
                    d[(i, i)],
                    d[(i + 1, i + 1)]
                );
            }
        }
        for i in 0..len {
            assert!(!d[(i, i)].is_negative());
        }
        d
    }

    /// Independent oracle: the k-th invariant factor is the gcd of all
    /// k x k minors divided by the gcd of all (k-1) x (k-1) minors.
    fn minor_gcd_diagonal(a: &IntMatrix) -> Vec<BigInt> {
        fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
            fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
                let mut out = Vec::new();
                let mut cur = Vec::new();
                fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                    if cur.len() == k {
                        out.push(cur.clone());
                        return;
                    }
                    for i in start..n {
                        cur.push(i);
                        rec(i + 1, n, k, cur, out);
                        cur.pop();
                    }
                }
                rec(0, n, k, &mut cur, &mut out);
                out
            }
            let mut g = BigInt::zero();
            for rs in combos(a.rows, k) {
                for cs in combos(a.cols, k) {
                    let mut sub = IntMatrix::zero(k, k);
                    for (i, &r) in rs.iter().enumerate() {
                        for (j, &c) in cs.iter().enumerate() {
                            sub[(i, j)] = a[(r, c)].clone();
                        }
                    }
                    g = g.gcd(&sub.determinant());
                }
            }
            g
        }
        let len = a.rows.min(a.cols);
        let mut prev = BigInt::one();
        let mut out = Vec::new();
        for k in 1..=len {
            let g = minors_gcd(a, k);
            if g.is_zero() {
                out.resize(len, BigInt::zero());
                return out;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    #[test]
    fn snf_trefoil_diagonal() {
        let d = parse_pd(TREFOIL_PD).unwrap();
        let m = coloring_matrix(&d);
        for i in 0..3 {
            let mut row: Vec<i64> = (0..3)
                .map(|j| i64::try_from(&m[(i, j)]).unwrap())
                .collect();
            row.sort_unstable();
            assert_eq!(row, vec![-1, -1, 2]);
        }
        let snf = check_snf(&m);
        let diag: Vec<BigInt> = (0..3).map(|i| snf[(i, i)].clone()).collect();
        assert_eq!(
            diag,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(0)]
        );
        // Cross-check against the minors-gcd oracle.
        assert_eq!(diag, minor_gcd_diagonal(&m));
        let s = link_determinant(&d);
        assert_eq!(s.det_link(), BigInt::from(3));
        assert_eq!(s.nullity_of(3), 2);
        assert_eq!(s.nullity_of(5), 1);
    }

    #[test]
    fn snf_trivial_cases() {
        let id = IntMatrix::identity(2);
        let snf = check_snf(&id);
        assert_eq!(snf, id);
        let z = IntMatrix::zero(1, 1);
        let snf = check_snf(&z);
        assert!(snf[(0, 0)].is_zero());
    }

    #[test]
    fn kink_matrix_and_unknot_determinant() {
        let d = parse_pd("X 1 1 2 2").unwrap();
        let m = coloring_matrix(&d);
        assert_eq!(m.rows, 1);
        assert_eq!(m.cols, 1);
        assert!(m[(0, 0)].is_zero());
        let s = link_determinant(&d);
        assert_eq!(s.diagonal, vec![BigInt::zero()]);
        assert_eq!(s.rational_nullity(), 1);
        assert_eq!(s.det_link(), BigInt::one());
    }

    #[test]
    fn torus_circulant_and_determinants() {
        for n in [3i64, 11, 13] {
            let d = torus_2n(n).unwrap();
            let m = coloring_matrix(&d);
            // Every row is a permutation of (-1, 2, -1) over three arcs.
            for i in 0..m.rows {
                let nonzero: Vec<i64> = (0..m.cols)
                    .map(|j| i64::try_from(&m[(i, j)]).unwrap())
                    .filter(|&x| x != 0)
                    .collect();
                let mut sorted = nonzero.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, vec![-1, -1, 2]);
            }
            let s = link_determinant(&d);
            assert_eq!(s.det_link(), BigInt::from(n));
        }
    }

    #[test]
    fn snf_random_matrices_against_oracle() {
        let mut rng = StdRng::seed_from_u64(0xF0C5);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let mut a = IntMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    a[(i, j)] = BigInt::from(rng.gen_range(-9i64..=9));
                }
            }
            let snf = check_snf(&a);
            let got: Vec<BigInt> = (0..rows.min(cols)).map(|i| snf[(i, i)].clone()).collect();
            assert_eq!(got, minor_gcd_diagonal(&a), "matrix {a:?}");
        }
    }

    #[test]
    fn split_link_determinant_is_zero() {
        // Closure of s1 s1^-1 on two strands: a circle clasped over
        // another, the two-component unlink. Split links report det 0.
        let d = crate::braid::parse_braid("s1 s1^-1", 2).unwrap();
        assert_eq!(d.crossing_count(), 2);
        let s = link_determinant(&d);
        assert!(s.rational_nullity() >= 2);
        assert!(s.det_link().is_zero());
        assert_eq!(s.nullity_of(5), 2);
    }
}
