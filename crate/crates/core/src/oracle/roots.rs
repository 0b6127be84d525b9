//! Root systems and Chevalley bases.
//!
//! Structure constants follow the extraspecial-pair construction: positive
//! roots are ordered by height and then lexicographically, the constant on
//! each extraspecial pair is `+(p+1)`, and every other constant is forced by
//! the Jacobi identity.

use std::collections::HashMap;

use crate::error::Result;
use crate::lie_type::LieType;

/// Index of a basis vector of `g`: positive roots first, then their
/// negatives in the same order, then the Cartan elements `h_1..h_n`.
pub type BasisIndex = usize;

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    // n_table[a * n_roots + b] for root indices a, b (0 when a+b is not a root)
    n_table: Vec<i64>,
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        lie_type.check_rank(rank)?;
        let gram = gram_matrix(lie_type, rank);
        let positive = positive_roots(&gram);
        let mut rs = RootSystem {
            lie_type,
            rank,
            gram,
            index: HashMap::new(),
            positive,
            n_table: Vec::new(),
        };
        for i in 0..rs.n_roots() {
            rs.index.insert(rs.root(i), i);
        }
        rs.fill_structure_constants();
        Ok(rs)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn n_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn dim(&self) -> usize {
        self.n_roots() + self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Coefficient vector of root `i` (negative roots have index `>= n_positive`).
    pub fn root(&self, i: usize) -> Vec<i64> {
        let p = self.n_positive();
        if i < p {
            self.positive[i].clone()
        } else {
            self.positive[i - p].iter().map(|c| -c).collect()
        }
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn negate(&self, i: usize) -> usize {
        let p = self.n_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_positive()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.root_index(&unit(self.rank, i)).expect("simple roots come first")
    }

    pub fn height(&self, i: usize) -> i64 {
        self.root(i).iter().sum()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    fn norm(&self, i: usize) -> i64 {
        let r = self.root(i);
        self.inner(&r, &r)
    }

    /// `<alpha, alpha_i^vee>` for root index `a`.
    pub fn pairing(&self, a: usize, i: usize) -> i64 {
        let r = self.root(a);
        let s = self.inner(&r, &unit(self.rank, i));
        2 * s / self.gram[i][i]
    }

    /// Coefficients of the coroot of root `a` over the simple coroots.
    pub fn coroot(&self, a: usize) -> Vec<i64> {
        let r = self.root(a);
        let n = self.norm(a);
        (0..self.rank)
            .map(|i| {
                let v = r[i] * self.gram[i][i];
                debug_assert_eq!(v % n, 0);
                v / n
            })
            .collect()
    }

    fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.root(a).iter().zip(self.root(b)).map(|(x, y)| x + y).collect();
        self.root_index(&s)
    }

    /// Structure constant `N_{a,b}`: `[e_a, e_b] = N_{a,b} e_{a+b}`; zero when
    /// `a+b` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n_table[a * self.n_roots() + b]
    }

    // Basis bookkeeping.

    pub fn cartan_index(&self, i: usize) -> BasisIndex {
        self.n_roots() + i
    }

    pub fn is_cartan(&self, b: BasisIndex) -> bool {
        b >= self.n_roots()
    }

    /// Grading degree of a basis vector for the coloring `u`.
    pub fn degree(&self, b: BasisIndex, u: &[u8]) -> i64 {
        if self.is_cartan(b) {
            return 0;
        }
        self.root(b).iter().zip(u).map(|(c, &w)| c * i64::from(w)).sum()
    }

    /// Bracket of two basis vectors as a sparse integer combination.
    pub fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> Vec<(BasisIndex, i64)> {
        let nr = self.n_roots();
        match (x >= nr, y >= nr) {
            (true, true) => Vec::new(),
            (true, false) => {
                let c = self.pairing(y, x - nr);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(y, c)]
                }
            }
            (false, true) => {
                let c = self.pairing(x, y - nr);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(x, -c)]
                }
            }
            (false, false) => {
                if self.negate(x) == y {
                    // [e_a, e_{-a}] = h_a
                    self.coroot(x)
                        .into_iter()
                        .enumerate()
                        .filter(|&(_, c)| c != 0)
                        .map(|(i, c)| (nr + i, c))
                        .collect()
                } else {
                    match self.sum_index(x, y) {
                        Some(s) => vec![(s, self.n(x, y))],
                        None => Vec::new(),
                    }
                }
            }
        }
    }

    /// Bracket of two sparse elements.
    pub fn bracket(&self, x: &[(BasisIndex, i64)], y: &[(BasisIndex, i64)]) -> Vec<(BasisIndex, i64)> {
        let mut acc: HashMap<BasisIndex, i64> = HashMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for (c, v) in self.bracket_basis(a, b) {
                    *acc.entry(c).or_insert(0) += ca * cb * v;
                }
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        out
    }

    fn fill_structure_constants(&mut self) {
        let p = self.n_positive();
        let nr = self.n_roots();
        self.n_table = vec![0; nr * nr];
        // Positive pairs, by increasing height of the sum.
        for xi in 0..p {
            if self.height(xi) < 2 {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..xi)
                .filter_map(|a| {
                    let rest: Vec<i64> = self.positive[xi].iter().zip(&self.positive[a]).map(|(x, y)| x - y).collect();
                    self.root_index(&rest).filter(|&b| b < p && a < b).map(|b| (a, b))
                })
                .collect();
            let (a0, b0) = pairs[0];
            let pstring = self.string_down(b0, a0);
            let n0 = pstring + 1;
            self.set_n(a0, b0, n0);
            let xi_norm = self.norm(xi);
            for &(a, b) in &pairs[1..] {
                let mut total_num = 0i64;
                let mut total_den = 1i64;
                let mut add = |num: i64, den: i64| {
                    // total += num/den
                    total_num = total_num * den + num * total_den;
                    total_den *= den;
                };
                if let Some(d) = self.diff_index(b, a0) {
                    let t = self.mixed(b, self.negate(a0)) * self.mixed(a, self.negate(b0));
                    add(t, self.norm(d));
                }
                if let Some(d) = self.diff_index(a, a0) {
                    let t = self.mixed(self.negate(a0), a) * self.mixed(b, self.negate(b0));
                    add(t, self.norm(d));
                }
                let num = xi_norm * total_num;
                let den = n0 * total_den;
                assert_eq!(num % den, 0, "non-integral structure constant");
                self.set_n(a, b, num / den);
            }
        }
        // Remaining sign patterns.
        for x in 0..nr {
            for y in 0..nr {
                if self.n_table[x * nr + y] == 0 && x != self.negate(y) && self.sum_index(x, y).is_some() {
                    let v = self.mixed(x, y);
                    self.n_table[x * nr + y] = v;
                }
            }
        }
    }

    fn set_n(&mut self, a: usize, b: usize, v: i64) {
        let nr = self.n_roots();
        self.n_table[a * nr + b] = v;
        self.n_table[b * nr + a] = -v;
    }

    /// Index of `root(a) - root(b)` if that is a root.
    fn diff_index(&self, a: usize, b: usize) -> Option<usize> {
        let d: Vec<i64> = self.root(a).iter().zip(self.root(b)).map(|(x, y)| x - y).collect();
        self.root_index(&d)
    }

    /// Largest `p` with `root(b) - p*root(a)` a root.
    fn string_down(&self, b: usize, a: usize) -> i64 {
        let ra = self.root(a);
        let mut cur = self.root(b);
        let mut p = 0;
        loop {
            for (c, x) in cur.iter_mut().zip(&ra) {
                *c -= x;
            }
            if self.root_index(&cur).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// `N_{x,y}` for arbitrary signs, derived from the positive-pair table.
    /// Only pairs whose sum is a root and whose positive constants are
    /// already known may be requested.
    fn mixed(&self, x: usize, y: usize) -> i64 {
        let p = self.n_positive();
        let nr = self.n_roots();
        if self.sum_index(x, y).is_none() {
            return 0;
        }
        match (x < p, y < p) {
            (true, true) => self.n_table[x * nr + y],
            (false, false) => -self.n_table[self.negate(x) * nr + self.negate(y)],
            (false, true) => -self.mixed(self.negate(x), self.negate(y)),
            (true, false) => {
                let ny = self.negate(y);
                let z = self.diff_index(x, ny).expect("sum is a root");
                if z < p {
                    // x - y' = z > 0
                    -self.norm(z) * self.n_table[ny * nr + z] / self.norm(x)
                } else {
                    // y' - x = z' > 0
                    let zp = self.negate(z);
                    self.norm(zp) * self.n_table[zp * nr + x] / self.norm(ny)
                }
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Symmetric form on the simple roots, Bourbaki numbering, short roots of
/// squared length 2.
pub fn gram_matrix(t: LieType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t {
        LieType::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                edge(&mut g, i, i + 1, -1);
            }
        }
        LieType::B => {
            for i in 0..n {
                g[i][i] = if i + 1 < n { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                edge(&mut g, i, i + 1, -2);
            }
        }
        LieType::C => {
            for i in 0..n {
                g[i][i] = if i + 1 < n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                edge(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
            }
        }
        LieType::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 3, n - 1, -1);
        }
        LieType::E6 | LieType::E7 | LieType::E8 => {
            for i in 0..n {
                g[i][i] = 2;
            }
            edge(&mut g, 0, 2, -1);
            edge(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
        }
        LieType::F4 => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 0, 1, -2);
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -1);
        }
        LieType::G2 => {
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Positive roots by root strings, sorted by height and then
/// lexicographically.
fn positive_roots(gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    let inner = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * gram[i][j] * b[j];
            }
        }
        s
    };
    let mut known: std::collections::HashSet<Vec<i64>> = Default::default();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next = Vec::new();
        for r in &layer {
            for i in 0..n {
                let ai = unit(n, i);
                if *r == ai {
                    continue;
                }
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing = 2 * inner(r, &ai) / gram[i][i];
                let q = p - pairing;
                if q > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    all
}
