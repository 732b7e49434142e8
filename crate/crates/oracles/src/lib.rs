//! Brute-force reference computations.
//!
//! Everything here uses plain machine integers over prime fields `F_p` and
//! exhaustive search, deliberately sharing no code with `ftc-core`.

/// Structure constants of a Hopf algebra over `F_p` with entries in `0..p`.
#[derive(Clone, Debug)]
pub struct PlainHopf {
    pub p: u64,
    pub dim: usize,
    /// `(i, j, k, c)`: `b_i b_j` has coefficient `c` on `b_k`.
    pub mult: Vec<(usize, usize, usize, u64)>,
    /// `comult[i]` lists `(j, k, c)` with `Δ(b_i) ∋ c b_j ⊗ b_k`.
    pub comult: Vec<Vec<(usize, usize, u64)>>,
    pub counit: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// All solutions of `Δ(x) = x ⊗ x`, `ε(x) = 1` by backtracking over the
/// coordinates, checking each equation as soon as its variables are set.
pub fn grouplikes_bruteforce(h: &PlainHopf) -> Vec<Vec<u64>> {
    let n = h.dim;
    let p = h.p;
    // equation (j, k): x_j x_k - sum_i x_i [b_j ⊗ b_k]Δ(b_i) = 0
    let mut lin: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n * n];
    for (i, terms) in h.comult.iter().enumerate() {
        for &(j, k, c) in terms {
            lin[j * n + k].push((i, c % p));
        }
    }
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..n * n {
        let last = lin[e].iter().map(|t| t.0).chain([e / n, e % n]).max().unwrap();
        ready[last].push(e);
    }
    let mut out = Vec::new();
    let mut x = vec![0u64; n];
    fn go(
        t: usize,
        x: &mut Vec<u64>,
        h: &PlainHopf,
        lin: &[Vec<(usize, u64)>],
        ready: &[Vec<usize>],
        out: &mut Vec<Vec<u64>>,
    ) {
        let (n, p) = (h.dim, h.p);
        if t == n {
            let eps = x
                .iter()
                .zip(&h.counit)
                .fold(0, |acc, (a, b)| (acc + mul_mod(*a, *b, p)) % p);
            if eps == 1 % p {
                out.push(x.clone());
            }
            return;
        }
        for v in 0..p {
            x[t] = v;
            let ok = ready[t].iter().all(|&e| {
                let quad = mul_mod(x[e / n], x[e % n], p);
                let linear = lin[e].iter().fold(0, |acc, &(i, c)| (acc + mul_mod(x[i], c, p)) % p);
                quad == linear
            });
            if ok {
                go(t + 1, x, h, lin, ready, out);
            }
        }
        x[t] = 0;
    }
    go(0, &mut x, h, &lin, &ready, &mut out);
    out.sort();
    out
}

/// Dimension of `{z : zb = bz for all basis b}`, by counting all `p^dim`
/// vectors (so keep `p^dim` small).
pub fn commutant_dim_bruteforce(p: u64, dim: usize, mult: &[(usize, usize, usize, u64)]) -> usize {
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for &(i, j, k, c) in mult {
        table[i][j][k] = (table[i][j][k] + c) % p;
    }
    let total = p.pow(dim as u32);
    let mut count = 0u64;
    let mut z = vec![0u64; dim];
    for code in 0..total {
        let mut c = code;
        for zi in z.iter_mut() {
            *zi = c % p;
            c /= p;
        }
        let central = (0..dim).all(|b| {
            (0..dim).all(|k| {
                let mut s = 0;
                for i in 0..dim {
                    s = (s + mul_mod(z[i], table[i][b][k], p)) % p;
                    s = (s + p - mul_mod(z[i], table[b][i][k], p)) % p;
                }
                s == 0
            })
        });
        if central {
            count += 1;
        }
    }
    let mut d = 0;
    while count > 1 {
        count /= p;
        d += 1;
    }
    d
}

/// Number of conjugacy classes of a group given by its multiplication table.
pub fn class_count(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let e = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a)).unwrap();
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| table[a][b] == e).unwrap()).collect();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for a in 0..n {
        if seen[a] {
            continue;
        }
        classes += 1;
        for g in 0..n {
            seen[table[table[g][a]][inv[g]]] = true;
        }
    }
    classes
}

/// Exponent vectors `e` in `(Z/modulus)^n` with `e_i + e_j = e_k` for every
/// listed triple and `e` constant on each block, by exhaustive backtracking.
pub fn lambda_bruteforce(
    n: usize,
    triples: &[(usize, usize, usize)],
    blocks: &[Vec<usize>],
    modulus: u64,
) -> Vec<Vec<u64>> {
    let mut ready: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for &(i, j, k) in triples {
        ready[i.max(j).max(k)].push((i, j, k));
    }
    let mut same: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in blocks {
        for &x in b {
            for &y in b {
                if y < x {
                    same[x].push(y);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut e = vec![0u64; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        t: usize,
        e: &mut Vec<u64>,
        m: u64,
        ready: &[Vec<(usize, usize, usize)>],
        same: &[Vec<usize>],
        out: &mut Vec<Vec<u64>>,
    ) {
        if t == e.len() {
            out.push(e.clone());
            return;
        }
        for v in 0..m {
            e[t] = v;
            if same[t].iter().all(|&y| e[y] == v) && ready[t].iter().all(|&(i, j, k)| (e[i] + e[j]) % m == e[k]) {
                go(t + 1, e, m, ready, same, out);
            }
        }
    }
    go(0, &mut e, modulus.max(1), &ready, &same, &mut out);
    out
}

/// Fusion multiplicities from an integer-valued character table:
/// `N_ij^k = (1/|G|) sum_c |c| χ_i(c) χ_j(c) χ_k(c)` (characters real).
pub fn fusion_from_characters(class_sizes: &[i64], chars: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let order: i64 = class_sizes.iter().sum();
    let r = chars.len();
    let mut n = vec![vec![vec![0; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let s: i64 = (0..class_sizes.len())
                    .map(|c| class_sizes[c] * chars[i][c] * chars[j][c] * chars[k][c])
                    .sum();
                assert_eq!(s % order, 0, "not a character table");
                n[i][j][k] = s / order;
            }
        }
    }
    n
}

/// Complex character table of `S3`: classes `{e}, transpositions, 3-cycles`,
/// characters trivial, sign, standard.
pub fn s3_character_table() -> (Vec<i64>, Vec<Vec<i64>>) {
    (vec![1, 3, 2], vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]])
}

/// Multiplicative order of `a` modulo the prime `p` (`a` nonzero).
pub fn order_mod(a: u64, p: u64) -> u64 {
    let a = a % p;
    assert!(a != 0);
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, p);
        k += 1;
    }
    k
}
