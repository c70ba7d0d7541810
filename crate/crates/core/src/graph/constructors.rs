//! Named graphs and seeded random graphs.
//!
//! Random constructors draw from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64(seed)` and switched to stream `stream` (0 unless stated).
//! Vertex pairs are visited in the order `(0,1), (0,2), (1,2), (0,3), ...`
//! and each pair consumes exactly one `random_bool` draw when it is a
//! candidate edge, so a graph is a pure function of `(n, p, seed, stream)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// The generator behind every randomized constructor.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )))
    }
}

impl Graph {
    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    /// `P_n`: the path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// `C_n` for `n >= 3`: the path plus the edge `0 - (n-1)`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Fallible variant of [`Graph::cycle`].
    pub fn try_cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        Ok(Graph::cycle(n))
    }

    /// `K_{1,3}` with centre 0 and leaves 1, 2, 3.
    pub fn claw() -> Graph {
        Graph::from_fn(4, |u, _| u == 0)
    }

    /// `K_3 + e`: triangle 0, 1, 2 with the pendant vertex 3 attached to 2.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    /// `K_4 \ e` with the missing edge between 2 and 3.
    pub fn diamond() -> Graph {
        Graph::from_fn(4, |u, v| !(u == 2 && v == 3))
    }

    /// `K_{a,b}`: parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| u < a && v >= a)
    }

    /// The `m × m` rook graph; square `(r, c)` is vertex `r * m + c`.
    pub fn rook(m: usize) -> Graph {
        Graph::from_fn(m * m, |u, v| u / m == v / m || u % m == v % m)
    }

    /// The Turán graph `T_{k,n}`: `k` classes of `n` vertices, vertex `v` in class `v / n`.
    pub fn turan(k: usize, n: usize) -> Graph {
        if n == 0 {
            return Graph::empty(0);
        }
        Graph::from_fn(k * n, |u, v| u / n != v / n)
    }

    /// The `d`-dimensional hypercube; vertices are bit strings, adjacent when they differ in one bit.
    pub fn hypercube(d: usize) -> Graph {
        Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1)
    }

    /// The Paley graph on `GF(q)` for a prime `q ≡ 1 (mod 4)`:
    /// `i ~ j` iff `i - j` is a nonzero square mod `q`.
    pub fn paley(q: usize) -> Result<Graph, GraphError> {
        if !is_prime(q as u64) || q % 4 != 1 {
            return Err(GraphError::InvalidParameter(format!(
                "paley needs a prime q ≡ 1 (mod 4), got {q}"
            )));
        }
        let mut square = vec![false; q];
        for x in 1..q {
            square[x * x % q] = true;
        }
        Ok(Graph::from_fn(q, |u, v| square[(v - u) % q]))
    }

    /// `G(n, p)` on stream 0.
    pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
        Graph::gnp_stream(n, p, seed, 0)
    }

    /// `G(n, p)` drawn from stream `stream` of `seed`; used for per-sample streams.
    pub fn gnp_stream(n: usize, p: f64, seed: u64, stream: u64) -> Result<Graph, GraphError> {
        check_probability(p)?;
        let mut rng = seeded_rng(seed, stream);
        Ok(Graph::from_fn(n, |_, _| rng.random_bool(p)))
    }

    /// The random Turán subgraph: `T_{k,n}` with each edge kept with probability 1/2.
    pub fn turan_random(k: usize, n: usize, seed: u64) -> Result<Graph, GraphError> {
        Graph::turan_random_stream(k, n, seed, 0)
    }

    pub fn turan_random_stream(
        k: usize,
        n: usize,
        seed: u64,
        stream: u64,
    ) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::InvalidParameter(
                "turan_random needs at least one class".into(),
            ));
        }
        if n == 0 {
            return Ok(Graph::empty(0));
        }
        let mut rng = seeded_rng(seed, stream);
        Ok(Graph::from_fn(k * n, |u, v| {
            u / n != v / n && rng.random_bool(0.5)
        }))
    }
}
