//! The component-exploration process.
//!
//! At every time `t` each vertex is explored, active, or unseen. Step `t`
//! explores `v_t`: the oldest active vertex if any exist, otherwise the
//! lowest-labelled unseen vertex (which starts a new component). All edges
//! through `v_t` avoiding previously explored vertices are revealed, and the
//! `η_t` unseen vertices they touch become active. The walk
//! `X_t = A_t - C_t = Σ_{i≤t} (η_i - 1)` hits each new minimum `-i` exactly
//! when the `i`-th component is finished.
//!
//! Two edge sources drive the same status machine: [`ImplicitExplorer`]
//! samples the revealed edges on the fly, and [`explore_given`] replays a
//! fixed [`Hypergraph`].

use std::collections::VecDeque;
use std::io::Write;

use rand::Rng;

use crate::binom::{binomial, sample_binomial};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::seed::{rng_from_seed, SimRng};
use crate::theory::{beta_trajectory, x_trajectory, ModelParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexStatus {
    Explored,
    Active,
    Unseen,
}

/// Outcome of one exploration step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    /// 1-based step index.
    pub t: usize,
    /// 0-based label of the vertex explored.
    pub vertex: u32,
    pub new_component: bool,
    pub eta: usize,
    pub edges: usize,
}

/// Status bookkeeping shared by both exploration modes.
#[derive(Debug, Clone)]
struct Frontier {
    status: Vec<VertexStatus>,
    queue: VecDeque<u32>,
    next_unseen: usize,
    explored: usize,
    unseen: usize,
    started: usize,
    sizes: Vec<usize>,
    current: usize,
}

impl Frontier {
    fn new(n: usize) -> Self {
        Self {
            status: vec![VertexStatus::Unseen; n],
            queue: VecDeque::new(),
            next_unseen: 0,
            explored: 0,
            unseen: n,
            started: 0,
            sizes: Vec::new(),
            current: 0,
        }
    }

    fn n(&self) -> usize {
        self.status.len()
    }

    fn is_done(&self) -> bool {
        self.explored == self.n()
    }

    fn active(&self) -> usize {
        self.queue.len()
    }

    /// Picks and marks the next vertex explored.
    fn select(&mut self) -> (u32, bool) {
        let (v, fresh) = match self.queue.pop_front() {
            Some(v) => (v, false),
            None => {
                while self.status[self.next_unseen] != VertexStatus::Unseen {
                    self.next_unseen += 1;
                }
                let v = self.next_unseen as u32;
                self.unseen -= 1;
                self.started += 1;
                if self.current > 0 {
                    self.sizes.push(self.current);
                }
                self.current = 0;
                (v, true)
            }
        };
        self.status[v as usize] = VertexStatus::Explored;
        self.explored += 1;
        self.current += 1;
        if self.is_done() {
            self.sizes.push(self.current);
        }
        (v, fresh)
    }

    fn activate(&mut self, u: u32) -> bool {
        if self.status[u as usize] == VertexStatus::Unseen {
            self.status[u as usize] = VertexStatus::Active;
            self.unseen -= 1;
            self.queue.push_back(u);
            true
        } else {
            false
        }
    }
}

/// Exploration of `H_k(n, p)` that never materializes the hypergraph.
///
/// At step `t` there are `C(n-t, k-1)` candidate edges through `v_t`
/// avoiding explored vertices. The number present is drawn from
/// Binomial(`C(n-t, k-1)`, `p`) and that many distinct uniform
/// `(k-1)`-subsets of the `n - t` eligible vertices are drawn. Eligible
/// vertices occupy the suffix of a permutation array whose prefix holds the
/// explored ones.
#[derive(Debug, Clone)]
pub struct ImplicitExplorer {
    params: ModelParams,
    rng: SimRng,
    frontier: Frontier,
    perm: Vec<u32>,
    pos: Vec<u32>,
    edge_buf: Vec<u32>,
    pick_buf: Vec<u32>,
}

impl ImplicitExplorer {
    pub fn new(params: ModelParams, seed: u64) -> Result<Self> {
        let n = params.n();
        binomial(n as i64 - 1, params.k() as u64 - 1)?;
        Ok(Self {
            params,
            rng: rng_from_seed(seed),
            frontier: Frontier::new(n),
            perm: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            edge_buf: Vec::new(),
            pick_buf: Vec::with_capacity(params.k()),
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// Number of steps taken so far.
    pub fn time(&self) -> usize {
        self.frontier.explored
    }

    pub fn active(&self) -> usize {
        self.frontier.active()
    }

    pub fn unseen(&self) -> usize {
        self.frontier.unseen
    }

    pub fn started(&self) -> usize {
        self.frontier.started
    }

    pub fn status(&self, v: u32) -> VertexStatus {
        self.frontier.status[v as usize]
    }

    pub fn is_done(&self) -> bool {
        self.frontier.is_done()
    }

    /// Component sizes completed so far, in exploration order.
    pub fn component_sizes(&self) -> &[usize] {
        &self.frontier.sizes
    }

    pub fn step(&mut self) -> Option<Step> {
        if self.frontier.is_done() {
            return None;
        }
        let (v, new_component) = self.frontier.select();
        // Move v to the end of the explored prefix.
        let slot = self.frontier.explored - 1;
        let at = self.pos[v as usize] as usize;
        let w = self.perm[slot];
        self.perm.swap(slot, at);
        self.pos[w as usize] = at as u32;
        self.pos[v as usize] = slot as u32;

        let eligible = self.params.n() - self.frontier.explored;
        let arity = self.params.k() - 1;
        let candidates = binomial(eligible as i64, arity as u64)
            .expect("bounded by C(n-1, k-1), checked at construction");
        let found = sample_binomial(&mut self.rng, candidates, self.params.p()) as usize;

        self.edge_buf.clear();
        let mut eta = 0;
        for e in 0..found {
            loop {
                self.pick_buf.clear();
                while self.pick_buf.len() < arity {
                    let idx = self.rng.random_range(0..eligible);
                    let u = self.perm[self.frontier.explored + idx];
                    if !self.pick_buf.contains(&u) {
                        self.pick_buf.push(u);
                    }
                }
                self.pick_buf.sort_unstable();
                let duplicate = self.edge_buf[..e * arity]
                    .chunks_exact(arity)
                    .any(|prev| prev == self.pick_buf.as_slice());
                if !duplicate {
                    break;
                }
            }
            self.edge_buf.extend_from_slice(&self.pick_buf);
            for i in 0..arity {
                let u = self.pick_buf[i];
                if self.frontier.activate(u) {
                    eta += 1;
                }
            }
        }
        Some(Step {
            t: self.frontier.explored,
            vertex: v,
            new_component,
            eta,
            edges: found,
        })
    }

    /// Runs to completion and returns the component sizes in exploration order.
    pub fn run_to_end(mut self) -> Vec<usize> {
        while self.step().is_some() {}
        self.frontier.sizes
    }
}

/// Per-step record of one exploration.
///
/// State vectors have length `n + 1` (times `0..=n`); per-step vectors
/// have length `n` with index `t - 1` holding step `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationTrace {
    pub n: usize,
    pub k: usize,
    pub eta: Vec<usize>,
    pub edges: Vec<usize>,
    pub active: Vec<usize>,
    pub unseen: Vec<usize>,
    pub started: Vec<usize>,
    pub walk: Vec<i64>,
    /// Sizes in the order the components were explored.
    pub component_sizes: Vec<usize>,
    /// Steps `t` with `A_{t-1} = 0`.
    pub new_component_steps: Vec<usize>,
}

impl ExplorationTrace {
    fn with_capacity(n: usize, k: usize) -> Self {
        let mut trace = Self {
            n,
            k,
            eta: Vec::with_capacity(n),
            edges: Vec::with_capacity(n),
            active: Vec::with_capacity(n + 1),
            unseen: Vec::with_capacity(n + 1),
            started: Vec::with_capacity(n + 1),
            walk: Vec::with_capacity(n + 1),
            component_sizes: Vec::new(),
            new_component_steps: Vec::new(),
        };
        trace.active.push(0);
        trace.unseen.push(n);
        trace.started.push(0);
        trace.walk.push(0);
        trace
    }

    fn record(&mut self, step: &Step, active: usize, unseen: usize, started: usize) {
        self.eta.push(step.eta);
        self.edges.push(step.edges);
        self.active.push(active);
        self.unseen.push(unseen);
        self.started.push(started);
        self.walk.push(active as i64 - started as i64);
        if step.new_component {
            self.new_component_steps.push(step.t);
        }
    }

    /// Component sizes sorted descending.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.component_sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Writes `t,eta,A,U,C,X`, one row per time `0..=n` (η_0 reported as 0).
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "t,eta,A,U,C,X")?;
        for t in 0..=self.n {
            let eta = if t == 0 { 0 } else { self.eta[t - 1] };
            writeln!(
                w,
                "{t},{eta},{},{},{},{}",
                self.active[t], self.unseen[t], self.started[t], self.walk[t]
            )?;
        }
        Ok(())
    }
}

/// Full trace of an implicit-mode exploration.
pub fn explore_implicit(params: &ModelParams, seed: u64) -> Result<ExplorationTrace> {
    let mut ex = ImplicitExplorer::new(*params, seed)?;
    let mut trace = ExplorationTrace::with_capacity(params.n(), params.k());
    while let Some(step) = ex.step() {
        trace.record(&step, ex.active(), ex.unseen(), ex.started());
    }
    trace.component_sizes = ex.frontier.sizes;
    Ok(trace)
}

/// Component sizes (exploration order) of an implicit-mode run, without a trace.
pub fn implicit_component_sizes(params: &ModelParams, seed: u64) -> Result<Vec<usize>> {
    Ok(ImplicitExplorer::new(*params, seed)?.run_to_end())
}

/// Deterministic replay of the exploration on a fixed hypergraph.
///
/// Vertices are taken in ascending label order when a component starts and
/// first-in-first-out among active vertices.
pub fn explore_given(h: &Hypergraph) -> ExplorationTrace {
    let n = h.n();
    // Incidence lists in CSR form.
    let mut offsets = vec![0usize; n + 1];
    for e in h.edges() {
        for &v in e {
            offsets[v as usize] += 1;
        }
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut incident = vec![0usize; offsets[n]];
    for (idx, e) in h.edges().enumerate() {
        for &v in e {
            incident[fill[v as usize - 1]] = idx;
            fill[v as usize - 1] += 1;
        }
    }
    let edges: Vec<&[u32]> = h.edges().collect();
    let mut revealed = vec![false; edges.len()];

    let mut frontier = Frontier::new(n);
    let mut trace = ExplorationTrace::with_capacity(n, h.k());
    while !frontier.is_done() {
        let (v, new_component) = frontier.select();
        let mut eta = 0;
        let mut found = 0;
        for &idx in &incident[offsets[v as usize]..offsets[v as usize + 1]] {
            if revealed[idx] {
                continue;
            }
            revealed[idx] = true;
            found += 1;
            for &u in edges[idx] {
                if u - 1 != v && frontier.activate(u - 1) {
                    eta += 1;
                }
            }
        }
        let step = Step {
            t: frontier.explored,
            vertex: v,
            new_component,
            eta,
            edges: found,
        };
        trace.record(&step, frontier.active(), frontier.unseen, frontier.started);
    }
    trace.component_sizes = frontier.sizes;
    trace
}

/// Component sizes as the gaps between the hitting times `t_i = inf{t : X_t = -i}`.
pub fn component_sizes_from_walk(walk: &[i64]) -> Result<Vec<usize>> {
    match walk.first() {
        Some(0) => {}
        _ => return Err(Error::Malformed("walk must start at 0".into())),
    }
    let mut sizes = Vec::new();
    let mut record = 0i64;
    let mut last_hit = 0usize;
    for (t, w) in walk.windows(2).enumerate() {
        if w[1] - w[0] < -1 {
            return Err(Error::Malformed(format!("increment {} < -1 at step {}", w[1] - w[0], t + 1)));
        }
        if w[1] < record {
            record = w[1];
            sizes.push(t + 1 - last_hit);
            last_hit = t + 1;
        }
    }
    if last_hit != walk.len() - 1 {
        return Err(Error::Malformed("walk does not end at a new minimum".into()));
    }
    Ok(sizes)
}

/// Martingale decomposition `X_t ≈ x_t + β_t S_t` of one trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTrace {
    /// `drift[t-1] = D_t = E(η_t - 1 | F_{t-1})`, exact.
    pub drift: Vec<f64>,
    /// `delta[t-1] = Δ_t = X_t - X_{t-1} - D_t`.
    pub delta: Vec<f64>,
    /// `S_0..S_n`.
    pub martingale: Vec<f64>,
    /// `X̃_0..X̃_n`.
    pub approx_walk: Vec<f64>,
    /// `|X_t - X̃_t|`.
    pub wc_bound: Vec<f64>,
    /// Deterministic trajectory `x_0..x_n`.
    pub x: Vec<f64>,
}

/// Candidate edges through `v_{t+1}` and one fixed unseen `u`: `C(n-t-2, k-2)`.
fn pair_candidates(n: usize, k: usize, t: usize) -> Result<u64> {
    binomial(n as i64 - t as i64 - 2, k as u64 - 2)
}

/// `1 - (1-p)^m`.
fn hit_probability(p: f64, m: u64) -> f64 {
    if p >= 1.0 {
        return if m > 0 { 1.0 } else { 0.0 };
    }
    -(m as f64 * (-p).ln_1p()).exp_m1()
}

/// `(1-p)^m`.
fn miss_probability(p: f64, m: u64) -> f64 {
    1.0 - hit_probability(p, m)
}

pub fn decompose(trace: &ExplorationTrace, params: &ModelParams) -> Result<DecompositionTrace> {
    let (n, k, p) = (params.n(), params.k(), params.p());
    if trace.n != n || trace.k != k || trace.walk.len() != n + 1 || trace.eta.len() != n {
        return Err(Error::Mismatch(format!(
            "trace has n={} k={} ({} walk points), params have n={n} k={k}",
            trace.n,
            trace.k,
            trace.walk.len()
        )));
    }
    let beta = beta_trajectory(params)?;
    let x = x_trajectory(params)?;
    if beta.iter().any(|&b| b <= 0.0) {
        return Err(Error::Mismatch("β_t vanishes; p too large for the decomposition".into()));
    }
    let mut drift = Vec::with_capacity(n);
    let mut delta = Vec::with_capacity(n);
    let mut martingale = Vec::with_capacity(n + 1);
    let mut approx_walk = Vec::with_capacity(n + 1);
    let mut wc_bound = Vec::with_capacity(n + 1);
    martingale.push(0.0);
    approx_walk.push(x[0]);
    wc_bound.push((trace.walk[0] as f64 - x[0]).abs());
    let mut s = 0.0;
    for t in 0..n {
        let u_prime = trace.unseen[t] - usize::from(trace.active[t] == 0);
        let d = u_prime as f64 * hit_probability(p, pair_candidates(n, k, t)?) - 1.0;
        let dl = (trace.walk[t + 1] - trace.walk[t]) as f64 - d;
        s += dl / beta[t + 1];
        let xt = x[t + 1] + beta[t + 1] * s;
        drift.push(d);
        delta.push(dl);
        martingale.push(s);
        approx_walk.push(xt);
        wc_bound.push((trace.walk[t + 1] as f64 - xt).abs());
    }
    Ok(DecompositionTrace {
        drift,
        delta,
        martingale,
        approx_walk,
        wc_bound,
        x,
    })
}

/// Exact conditional mean and variance of `η_{t+1}` given `U'_t = u_prime`.
///
/// With `c = C(n-t-2, k-2)` edges through `v_{t+1}` and a given unseen `u`,
/// of which `b = C(n-t-3, k-3)` also contain a second unseen `u'`:
/// `π₁ = 1 - (1-p)^c`, `π₂ = 1 - (1-p)^b`, and
/// `π₃ = (1-p)^b (1 - (1-p)^{c-b})²` is the probability that both are
/// activated without a common edge.
pub fn conditional_moments(params: &ModelParams, t: usize, u_prime: usize) -> Result<(f64, f64)> {
    let (n, k, p) = (params.n(), params.k(), params.p());
    if t >= n {
        return Err(Error::Domain {
            param: "t",
            value: t.to_string(),
            reason: "must be below n",
        });
    }
    if u_prime + t + 1 > n {
        return Err(Error::Domain {
            param: "u_prime",
            value: u_prime.to_string(),
            reason: "at most n - t - 1 unseen vertices remain",
        });
    }
    let c = pair_candidates(n, k, t)?;
    let b = if k >= 3 && t + 3 <= n {
        binomial(n as i64 - t as i64 - 3, k as u64 - 3)?
    } else {
        0
    };
    let pi1 = hit_probability(p, c);
    let pi2 = hit_probability(p, b);
    let pi3 = miss_probability(p, b) * hit_probability(p, c - b).powi(2);
    let u = u_prime as f64;
    let mean = u * pi1;
    let var = u * (u - 1.0) * (pi2 + pi3) + mean - mean * mean;
    Ok((mean, var.max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{components, sample};

    #[test]
    fn conditional_moments_at_final_steps() {
        for k in 2..=4 {
            let p = params(12, k, 1.5);
            for t in 9..12 {
                let (mean, var) = conditional_moments(&p, t, 11 - t).unwrap();
                assert!(mean.is_finite() && var >= 0.0, "k={k} t={t}");
            }
        }
    }

    fn params(n: usize, k: usize, lambda: f64) -> ModelParams {
        ModelParams::new(n, k, lambda).unwrap()
    }

    fn check_trace_invariants(trace: &ExplorationTrace) {
        let n = trace.n;
        assert_eq!(trace.active[0], 0);
        assert_eq!(trace.unseen[0], n);
        for t in 0..=n {
            assert_eq!(trace.active[t] + trace.unseen[t], n - t);
            assert_eq!(trace.walk[t], trace.active[t] as i64 - trace.started[t] as i64);
        }
        for t in 1..=n {
            assert_eq!(trace.walk[t] - trace.walk[t - 1], trace.eta[t - 1] as i64 - 1);
            assert!(trace.eta[t - 1] <= (trace.k - 1) * trace.edges[t - 1]);
            let u_prime = trace.unseen[t - 1] - usize::from(trace.active[t - 1] == 0);
            if u_prime == 0 {
                assert_eq!(trace.eta[t - 1], 0);
            }
        }
        assert_eq!(trace.walk[n], -(trace.started[n] as i64));
        assert_eq!(trace.component_sizes.iter().sum::<usize>(), n);
        assert_eq!(trace.component_sizes.len(), trace.started[n]);
        assert_eq!(trace.new_component_steps.len(), trace.started[n]);
        for (i, &s) in trace.new_component_steps.iter().enumerate() {
            assert_eq!(trace.active[s - 1], 0);
            if i > 0 {
                assert_eq!(s - trace.new_component_steps[i - 1], trace.component_sizes[i - 1]);
            }
        }
        assert_eq!(component_sizes_from_walk(&trace.walk).unwrap(), trace.component_sizes);
    }

    #[test]
    fn empty_hypergraph_gives_singletons() {
        let p0 = ModelParams::from_edge_probability(30, 3, 0.0).unwrap();
        let trace = explore_implicit(&p0, 1).unwrap();
        assert!(trace.eta.iter().all(|&e| e == 0));
        assert_eq!(trace.component_sizes, vec![1; 30]);
        assert_eq!(trace.started[30], 30);
        assert_eq!(trace.walk[30], -30);
        check_trace_invariants(&trace);
    }

    #[test]
    fn single_certain_edge() {
        let full = ModelParams::from_edge_probability(4, 4, 1.0).unwrap();
        let trace = explore_implicit(&full, 3).unwrap();
        assert_eq!(trace.component_sizes, vec![4]);
        assert_eq!(trace.eta[0], 3);
        check_trace_invariants(&trace);
    }

    #[test]
    fn implicit_traces_satisfy_invariants() {
        for (n, k, lambda) in [(200, 2, 1.5), (200, 3, 1.5), (300, 4, 2.0), (100, 5, 0.7)] {
            for seed in 0..20 {
                check_trace_invariants(&explore_implicit(&params(n, k, lambda), seed).unwrap());
            }
        }
    }

    #[test]
    fn dense_implicit_runs_terminate() {
        // p = 1/2 forces many edges per step and exercises duplicate rejection.
        let dense = ModelParams::from_edge_probability(12, 3, 0.5).unwrap();
        for seed in 0..20 {
            check_trace_invariants(&explore_implicit(&dense, seed).unwrap());
        }
    }

    #[test]
    fn status_conservation_every_step() {
        let mut ex = ImplicitExplorer::new(params(150, 3, 1.8), 11).unwrap();
        while let Some(step) = ex.step() {
            let mut counts = [0usize; 3];
            for v in 0..150u32 {
                counts[ex.status(v) as usize] += 1;
            }
            assert_eq!(counts[VertexStatus::Explored as usize], step.t);
            assert_eq!(counts[VertexStatus::Active as usize], ex.active());
            assert_eq!(counts[VertexStatus::Unseen as usize], ex.unseen());
            assert_eq!(counts.iter().sum::<usize>(), 150);
        }
    }

    #[test]
    fn implicit_is_deterministic() {
        let p = params(2000, 3, 1.4);
        assert_eq!(explore_implicit(&p, 99).unwrap(), explore_implicit(&p, 99).unwrap());
        assert_ne!(explore_implicit(&p, 99).unwrap(), explore_implicit(&p, 100).unwrap());
        assert_eq!(
            implicit_component_sizes(&p, 99).unwrap(),
            explore_implicit(&p, 99).unwrap().component_sizes
        );
    }

    #[test]
    fn given_small_cases() {
        let none = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(explore_given(&none).component_sizes, vec![1; 5]);
        let chain = Hypergraph::new(6, 3, [[1u32, 2, 3], [3, 4, 5]]).unwrap();
        let trace = explore_given(&chain);
        assert_eq!(trace.sorted_sizes(), vec![5, 1]);
        check_trace_invariants(&trace);
    }

    #[test]
    fn given_matches_union_find() {
        for k in 2..=4 {
            for seed in 0..300 {
                let n = 20 + (seed as usize % 41);
                let p = params(n, k, 1.5).p();
                let h = sample(n, k, p, seed).unwrap();
                let trace = explore_given(&h);
                check_trace_invariants(&trace);
                assert_eq!(trace.sorted_sizes(), components(&h).sizes, "k={k} seed={seed}");
            }
        }
        for seed in 0..1000 {
            let h = sample(50, 4, params(50, 4, 1.5).p(), 10_000 + seed).unwrap();
            assert_eq!(explore_given(&h).sorted_sizes(), components(&h).sizes);
        }
    }

    #[test]
    fn walk_to_sizes_examples() {
        assert_eq!(component_sizes_from_walk(&[0, -1, -2]).unwrap(), vec![1, 1]);
        assert_eq!(component_sizes_from_walk(&[0, 1, 0, -1, -2]).unwrap(), vec![3, 1]);
        assert!(component_sizes_from_walk(&[0, 1, -1]).is_err());
        assert!(component_sizes_from_walk(&[1, 0]).is_err());
        assert!(component_sizes_from_walk(&[0, -1, 0]).is_err());
        assert!(component_sizes_from_walk(&[]).is_err());
    }

    #[test]
    fn decompose_empty_hypergraph() {
        let p0 = ModelParams::from_edge_probability(50, 3, 0.0).unwrap();
        let trace = explore_implicit(&p0, 0).unwrap();
        let dec = decompose(&trace, &p0).unwrap();
        assert!(dec.drift.iter().all(|&d| d == -1.0));
        assert!(dec.delta.iter().all(|&d| d == 0.0));
        assert!(dec.martingale.iter().all(|&s| s == 0.0));
        for t in 0..=50 {
            assert_eq!(dec.approx_walk[t], -(t as f64));
            assert_eq!(dec.wc_bound[t], 0.0);
        }
    }

    #[test]
    fn decompose_rejects_mismatch() {
        let trace = explore_implicit(&params(100, 3, 1.5), 0).unwrap();
        assert!(matches!(decompose(&trace, &params(101, 3, 1.5)), Err(Error::Mismatch(_))));
        assert!(matches!(decompose(&trace, &params(100, 4, 1.5)), Err(Error::Mismatch(_))));
    }

    #[test]
    fn decompose_identities() {
        let p = params(3000, 3, 1.5);
        let trace = explore_implicit(&p, 4).unwrap();
        let dec = decompose(&trace, &p).unwrap();
        let beta = beta_trajectory(&p).unwrap();
        let mut s = 0.0;
        for t in 1..=3000 {
            let dx = (trace.walk[t] - trace.walk[t - 1]) as f64;
            assert_eq!(dec.delta[t - 1], dx - dec.drift[t - 1]);
            s += dec.delta[t - 1] / beta[t];
            assert!((dec.martingale[t] - s).abs() < 1e-9);
            let bound = 10.0 * t as f64 * trace.started[t] as f64 / 3000.0;
            assert!(dec.wc_bound[t] <= bound, "t={t}");
        }
    }

    #[test]
    fn conditional_moments_edge_cases() {
        let p = params(1000, 3, 1.5);
        assert_eq!(conditional_moments(&p, 10, 0).unwrap(), (0.0, 0.0));
        assert!(conditional_moments(&p, 1000, 0).is_err());
        assert!(conditional_moments(&p, 10, 990).is_err());
        assert!(conditional_moments(&p, 10, 989).is_ok());

        let g = params(1000, 2, 1.5);
        let (mean, var) = conditional_moments(&g, 5, 700).unwrap();
        let q = g.p();
        assert!((mean - 700.0 * q).abs() < 1e-12);
        assert!((var - 700.0 * q * (1.0 - q)).abs() < 1e-12);
    }

    #[test]
    fn conditional_variance_respects_bound() {
        for k in 2..=6 {
            let p = params(5000, k, 2.0);
            for t in (0..5000).step_by(97) {
                let (_, var) = conditional_moments(&p, t, 5000 - t - 1).unwrap();
                assert!(var <= 2.0 * (k - 1) as f64 * 1.01, "k={k} t={t} var={var}");
            }
        }
    }

    /// Brute-force oracle: enumerate every subset of the candidate edges of
    /// a tiny instance and sum η exactly.
    #[test]
    fn conditional_moments_match_enumeration() {
        // n - t = 6 non-explored vertices (v plus 5 unseen), k = 3: 10 candidate edges.
        let n = 8;
        let t = 2;
        let p = ModelParams::from_edge_probability(n, 3, 0.3).unwrap();
        let others: Vec<u32> = (1..6).collect();
        let mut cands = Vec::new();
        for i in 0..others.len() {
            for j in i + 1..others.len() {
                cands.push([others[i], others[j]]);
            }
        }
        let (mut m1, mut m2) = (0.0, 0.0);
        for mask in 0u32..(1 << cands.len()) {
            let present = mask.count_ones() as i32;
            let prob = 0.3f64.powi(present) * 0.7f64.powi(cands.len() as i32 - present);
            let mut hit = [false; 6];
            for (bit, e) in cands.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    hit[e[0] as usize] = true;
                    hit[e[1] as usize] = true;
                }
            }
            let eta = hit.iter().filter(|&&h| h).count() as f64;
            m1 += prob * eta;
            m2 += prob * eta * eta;
        }
        let (mean, var) = conditional_moments(&p, t, 5).unwrap();
        assert!((mean - m1).abs() < 1e-12, "{mean} vs {m1}");
        assert!((var - (m2 - m1 * m1)).abs() < 1e-12, "{var} vs {}", m2 - m1 * m1);
    }

    #[test]
    fn first_step_moments_match_monte_carlo() {
        let p = params(10_000, 3, 1.5);
        let m = 100_000;
        let etas: Vec<f64> = (0..m)
            .map(|s| {
                let mut ex = ImplicitExplorer::new(p, s).unwrap();
                ex.step().unwrap().eta as f64
            })
            .collect();
        let mean = etas.iter().sum::<f64>() / m as f64;
        let var = etas.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / (m - 1) as f64;
        let (em, ev) = conditional_moments(&p, 0, 9_999).unwrap();
        assert!((mean - em).abs() <= 4.0 * (ev / m as f64).sqrt(), "{mean} vs {em}");
        // Var of the sample variance ≈ (μ4 - σ⁴)/m; bound μ4 by a crude 10σ⁴.
        assert!((var - ev).abs() <= 4.0 * (9.0 * ev * ev / m as f64).sqrt(), "{var} vs {ev}");
    }

    #[test]
    fn trace_csv_format() {
        let p0 = ModelParams::from_edge_probability(3, 2, 0.0).unwrap();
        let trace = explore_implicit(&p0, 0).unwrap();
        let mut buf = Vec::new();
        trace.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "t,eta,A,U,C,X\n0,0,0,3,0,0\n1,0,0,2,1,-1\n2,0,0,1,2,-2\n3,0,0,0,3,-3\n");
    }
}
