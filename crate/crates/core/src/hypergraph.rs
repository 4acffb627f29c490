//! Explicit `k`-uniform hypergraphs on `[n] = {1, …, n}`.
//!
//! [`sample`] draws `H_k(n, p)` by geometric skipping over the colex rank
//! space of `k`-subsets, so the cost is proportional to the number of edges
//! found rather than to `C(n, k)`. [`components`] computes loose
//! (1-overlap) connectivity by union-find. Together they are the oracle the
//! exploration process is checked against.

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::Path;

use rand::Rng;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::seed::rng_from_seed;

/// A `k`-uniform hypergraph with 1-based vertex labels.
///
/// Edges are stored flat, `k` labels per edge, each edge sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    flat: Vec<u32>,
}

impl Hypergraph {
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, std::iter::empty::<Vec<u32>>())
    }

    /// Validates and normalizes an edge list.
    ///
    /// Each edge must contain exactly `k` distinct labels in `1..=n`; edge
    /// order within the input is kept, vertices within an edge are sorted.
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if k < 2 {
            return Err(Error::Malformed(format!("edge arity {k} < 2")));
        }
        if n < k || n > u32::MAX as usize {
            return Err(Error::Malformed(format!("vertex count {n} invalid for arity {k}")));
        }
        let mut flat = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, edge) in edges.into_iter().enumerate() {
            let mut e = edge.as_ref().to_vec();
            check_edge(&mut e, n, k).map_err(|r| Error::Malformed(format!("edge {idx}: {r}")))?;
            if !seen.insert(e.clone()) {
                return Err(Error::Malformed(format!("edge {idx}: duplicate edge {e:?}")));
            }
            flat.extend_from_slice(&e);
        }
        Ok(Self { n, k, flat })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.flat.len() / self.k
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.flat.chunks_exact(self.k)
    }

    /// Serializes to the text format: `n k`, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for e in self.edges() {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Blank lines are ignored; errors carry the
    /// 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_reader(text.as_bytes(), "<input>")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::parse_reader(std::io::BufReader::new(file), &path.display().to_string())
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }

    fn parse_reader<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let err = |line: usize, reason: String| Error::Parse {
            path: name.to_string(),
            line,
            reason,
        };
        let mut header: Option<(usize, usize)> = None;
        let mut flat = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (i, line) in reader.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| err(lineno, e.to_string()))?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: std::result::Result<Vec<u64>, _> =
                line.split_whitespace().map(str::parse::<u64>).collect();
            let fields = fields.map_err(|e| err(lineno, format!("not an integer list: {e}")))?;
            match header {
                None => {
                    let [n, k] = fields[..] else {
                        return Err(err(lineno, "header must be `n k`".into()));
                    };
                    let (n, k) = (n as usize, k as usize);
                    if k < 2 || n < k || n > u32::MAX as usize {
                        return Err(err(lineno, format!("invalid header n={n} k={k}")));
                    }
                    header = Some((n, k));
                }
                Some((n, k)) => {
                    if fields.len() != k {
                        return Err(err(lineno, format!("edge has {} vertices, expected {k}", fields.len())));
                    }
                    if fields.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(err(lineno, "edge vertices must be strictly ascending".into()));
                    }
                    if fields[0] < 1 || fields[k - 1] > n as u64 {
                        return Err(err(lineno, format!("vertex out of range 1..={n}")));
                    }
                    let e: Vec<u32> = fields.iter().map(|&v| v as u32).collect();
                    if !seen.insert(e.clone()) {
                        return Err(err(lineno, "duplicate edge".into()));
                    }
                    flat.extend_from_slice(&e);
                }
            }
        }
        let (n, k) = header.ok_or_else(|| err(0, "missing header".into()))?;
        Ok(Self { n, k, flat })
    }
}

fn check_edge(e: &mut [u32], n: usize, k: usize) -> std::result::Result<(), String> {
    if e.len() != k {
        return Err(format!("arity {} != {k}", e.len()));
    }
    e.sort_unstable();
    if e.windows(2).any(|w| w[0] == w[1]) {
        return Err("repeated vertex".into());
    }
    if e[0] < 1 || e[k - 1] as usize > n {
        return Err(format!("vertex out of range 1..={n}"));
    }
    Ok(())
}

/// Colex rank of a sorted 1-based `k`-subset: `Σ_i C(c_i - 1, i)`.
pub fn rank(subset: &[u32]) -> Result<u64> {
    let mut r: u64 = 0;
    for (i, &c) in subset.iter().enumerate() {
        let term = binomial(c as i64 - 1, i as u64 + 1)?;
        r = r
            .checked_add(term)
            .ok_or(Error::Overflow { m: c as u64, j: i as u64 + 1 })?;
    }
    Ok(r)
}

/// Inverse of [`rank`]: the `rank`-th `k`-subset of `[n]` in colex order.
pub fn unrank(rank: u64, n: usize, k: usize) -> Result<Vec<u32>> {
    let total = binomial(n as i64, k as u64)?;
    if rank >= total {
        return Err(Error::Malformed(format!("rank {rank} out of range 0..{total}")));
    }
    let mut out = vec![0u32; k];
    let mut r = rank;
    let mut upper = n as u64; // exclusive bound on the next 0-based element
    for i in (1..=k as u64).rev() {
        // Largest c < upper with C(c, i) <= r.
        let (mut lo, mut hi) = (i - 1, upper - 1);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if binomial(mid as i64, i)? <= r {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        r -= binomial(lo as i64, i)?;
        out[i as usize - 1] = lo as u32 + 1;
        upper = lo;
    }
    Ok(out)
}

/// Samples `H_k(n, p)`: every `k`-subset of `[n]` independently with
/// probability `p`, in increasing colex order.
pub fn sample(n: usize, k: usize, p: f64, seed: u64) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain {
            param: "p",
            value: p.to_string(),
            reason: "must lie in [0, 1]",
        });
    }
    if k < 2 || n < k {
        return Err(Error::Malformed(format!("invalid shape n={n} k={k}")));
    }
    let total = binomial(n as i64, k as u64)?;
    let mut flat = Vec::new();
    if p > 0.0 {
        let mut rng = rng_from_seed(seed);
        let log_q = (-p).ln_1p();
        let mut next: u64 = 0;
        loop {
            // Number of subsets skipped before the next present one.
            let skip = if p >= 1.0 {
                0.0
            } else {
                let u: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
                (u.ln() / log_q).floor()
            };
            if skip >= (total - next) as f64 {
                break;
            }
            let r = next + skip as u64;
            if r >= total {
                break;
            }
            flat.extend(unrank(r, n, k)?);
            next = r + 1;
            if next == total {
                break;
            }
        }
    }
    Ok(Hypergraph { n, k, flat })
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn size_of(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// Component structure of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component vertex counts, sorted descending.
    pub sizes: Vec<usize>,
    /// `labels[v - 1]` is the smallest vertex of `v`'s component.
    pub labels: Vec<u32>,
}

/// Loose components: every edge is merged into one class.
pub fn components(h: &Hypergraph) -> Components {
    let mut uf = UnionFind::new(h.n());
    for e in h.edges() {
        let first = e[0] as usize - 1;
        for &v in &e[1..] {
            uf.union(first, v as usize - 1);
        }
    }
    let mut smallest = vec![u32::MAX; h.n()];
    let mut labels = Vec::with_capacity(h.n());
    let mut sizes = Vec::new();
    // Ascending scan: the first vertex seen in a class is its smallest.
    for v in 0..h.n() {
        let root = uf.find(v);
        if smallest[root] == u32::MAX {
            smallest[root] = v as u32 + 1;
            sizes.push(uf.size_of(root));
        }
        labels.push(smallest[root]);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Components { sizes, labels }
}
