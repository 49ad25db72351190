//! Graph families whose squares have large cliques while the maximum
//! average degree stays below a potential-function threshold.
//!
//! Each builder returns a [`ConstructionCertificate`]: the graph together
//! with the claims made about it. Nothing here checks those claims; that is
//! the job of [`crate::density`] and [`crate::coloring`].
//!
//! Vertex labels follow the usual names: `u`, `v`, `u_i`, `v_i` and
//! `x_{i,j}` for the degree-four families, and `u_i`, `u_{i,j}`, `x_{i,j}`
//! for the `2k` family. Indices of `x` wrap modulo `n` with representatives
//! `1..=n`.

use serde::{Deserialize, Serialize};

use crate::density::PotentialParams;
use crate::error::ConstructionError;
use crate::graph::{Graph, GraphBuilder, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "family")]
pub enum Family {
    /// `G_n`: square clique of size `2Δ + 2`, `mad < 4`.
    Mad4 { n: usize },
    /// `G_{2c}` with the chords at `x_{1,2}` removed: clique `2Δ + 1`, `mad < 4 - 1/c`.
    Tight { c: usize },
    /// `G_{k,n}`: clique `kΔ + k`, `mad < 2k`.
    Mad2k { k: usize, n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Mad4 { .. } => "mad4",
            Family::Tight { .. } => "tight",
            Family::Mad2k { .. } => "mad2k",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionCertificate {
    pub family: Family,
    pub graph: Graph,
    /// Vertex set claimed to be a clique in the square of `graph`.
    pub claimed_clique: Vec<Vertex>,
    pub claimed_max_degree: usize,
    pub claimed_potential_params: PotentialParams,
    /// Every nonempty vertex set is claimed to have potential at least this.
    pub claimed_min_potential_at_least: i64,
}

/// Sidecar JSON written next to a constructed graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub family: String,
    pub params: Family,
    pub claimed_clique: Vec<Vertex>,
    pub claimed_max_degree: usize,
    pub potential_params: PotentialParams,
}

impl From<&ConstructionCertificate> for CertificateJson {
    fn from(c: &ConstructionCertificate) -> Self {
        CertificateJson {
            family: c.family.name().to_string(),
            params: c.family,
            claimed_clique: c.claimed_clique.clone(),
            claimed_max_degree: c.claimed_max_degree,
            potential_params: c.claimed_potential_params,
        }
    }
}

fn invalid(name: &'static str, value: usize, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameter {
        name,
        value: value as i64,
        reason: reason.into(),
    }
}

/// Vertex layout of `G_n`.
#[derive(Clone, Copy, Debug)]
pub struct Mad4Layout {
    pub n: usize,
}

impl Mad4Layout {
    pub const U: Vertex = 0;
    pub const V: Vertex = 1;

    pub fn vertex_count(&self) -> usize {
        self.n * self.n + 2 * self.n + 2
    }

    /// `u_i`, `1 <= i <= n`.
    pub fn s(&self, i: usize) -> Vertex {
        debug_assert!((1..=self.n).contains(&i));
        1 + i
    }

    /// `v_j`, `1 <= j <= n`.
    pub fn t(&self, j: usize) -> Vertex {
        debug_assert!((1..=self.n).contains(&j));
        1 + self.n + j
    }

    /// `x_{i,j}` with both indices reduced modulo `n` into `1..=n`.
    pub fn x(&self, i: usize, j: usize) -> Vertex {
        let n = self.n;
        let (i, j) = ((i - 1) % n + 1, (j - 1) % n + 1);
        2 + 2 * n + (i - 1) * n + (j - 1)
    }
}

fn mad4_graph(n: usize) -> GraphBuilder {
    let lay = Mad4Layout { n };
    let mut b = GraphBuilder::new(lay.vertex_count());
    b.set_label(Mad4Layout::U, "u");
    b.set_label(Mad4Layout::V, "v");
    for i in 1..=n {
        b.set_label(lay.s(i), format!("u_{i}"));
        b.set_label(lay.t(i), format!("v_{i}"));
        for j in 1..=n {
            b.set_label(lay.x(i, j), format!("x_{{{i},{j}}}"));
        }
    }

    let mut add = |x: Vertex, y: Vertex| {
        b.add_edge(x, y)
            .expect("construction vertices are in range");
    };
    add(Mad4Layout::U, Mad4Layout::V);
    for i in 1..=n {
        add(Mad4Layout::U, lay.s(i));
        add(Mad4Layout::V, lay.t(i));
    }
    for i in 1..=n {
        for j in 1..=n {
            add(lay.s(i), lay.x(i, j));
            add(lay.t(j), lay.x(i, j));
        }
    }
    for i in 2..=n {
        add(lay.x(1, 1), lay.x(i, i));
        add(lay.x(1, 2), lay.x(i, i + 1));
    }
    b
}

fn mad4_clique(lay: Mad4Layout, with_x12: bool) -> Vec<Vertex> {
    let mut clique = vec![Mad4Layout::U, Mad4Layout::V, lay.x(1, 1)];
    if with_x12 {
        clique.push(lay.x(1, 2));
    }
    clique.extend((1..=lay.n).map(|i| lay.s(i)));
    clique.extend((1..=lay.n).map(|j| lay.t(j)));
    clique.sort_unstable();
    clique
}

/// `G_n` for `n >= 2`: `Δ = n + 1` and a `(2n + 4)`-clique in the square.
pub fn build_counterexample_mad4(n: usize) -> Result<ConstructionCertificate, ConstructionError> {
    if n < 2 {
        return Err(invalid("n", n, "must be at least 2"));
    }
    let lay = Mad4Layout { n };
    Ok(ConstructionCertificate {
        family: Family::Mad4 { n },
        graph: mad4_graph(n).build(),
        claimed_clique: mad4_clique(lay, true),
        claimed_max_degree: n + 1,
        claimed_potential_params: PotentialParams::MAD4,
        claimed_min_potential_at_least: 1,
    })
}

/// `G_{2c}` minus the chords `x_{1,2} x_{i,i+1}` (`2 <= i <= 2c`, wrapping).
pub fn build_tight_mad4_minus(c: usize) -> Result<ConstructionCertificate, ConstructionError> {
    if c < 2 {
        return Err(invalid("c", c, "must be at least 2"));
    }
    let n = 2 * c;
    let lay = Mad4Layout { n };
    let mut b = mad4_graph(n);
    for i in 2..=n {
        let removed = b.remove_edge(lay.x(1, 2), lay.x(i, i + 1));
        debug_assert!(removed);
    }
    Ok(ConstructionCertificate {
        family: Family::Tight { c },
        graph: b.build(),
        claimed_clique: mad4_clique(lay, false),
        claimed_max_degree: n + 1,
        claimed_potential_params: PotentialParams::mad4_minus(c as i64),
        claimed_min_potential_at_least: 1,
    })
}

/// The `n × n` array `L(i, j) = j + ell·(i − 1) mod n`, stored with
/// representatives `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    ell: usize,
    entries: Vec<usize>,
}

impl LatinSquare {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Entry at row `i`, column `j`, both 1-based; the column wraps modulo the order.
    pub fn get(&self, i: usize, j: usize) -> usize {
        let n = self.order;
        let (i, j) = ((i - 1) % n, (j - 1) % n);
        self.entries[i * n + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        let n = self.order;
        &self.entries[(i - 1) * n..i * n]
    }

    fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
        let mut seen = vec![false; n + 1];
        for v in values {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen[1..].iter().all(|&s| s)
    }

    /// Every row and every column is a permutation of `1..=n`.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        (1..=n).all(|i| Self::is_permutation(self.row(i).iter().copied(), n))
            && (1..=n).all(|j| Self::is_permutation((1..=n).map(|i| self.get(i, j)), n))
    }

    /// The superposition of the two squares hits every ordered pair once.
    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> bool {
        let n = self.order;
        if other.order != n {
            return false;
        }
        let mut seen = vec![false; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let k = (self.get(i, j) - 1) * n + (other.get(i, j) - 1);
                if seen[k] {
                    return false;
                }
                seen[k] = true;
            }
        }
        true
    }
}

pub fn latin_square(n: usize, ell: usize) -> Result<LatinSquare, ConstructionError> {
    if n < 2 {
        return Err(invalid("n", n, "order must be at least 2"));
    }
    if ell == 0 || ell >= n {
        return Err(invalid("ell", ell, format!("must lie in 1..={}", n - 1)));
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            entries.push((j + ell * (i - 1) - 1) % n + 1);
        }
    }
    Ok(LatinSquare {
        order: n,
        ell,
        entries,
    })
}

pub fn primality_check(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Vertex layout of `G_{k,n}`.
#[derive(Clone, Copy, Debug)]
pub struct Mad2kLayout {
    pub k: usize,
    pub n: usize,
}

impl Mad2kLayout {
    pub fn vertex_count(&self) -> usize {
        self.k + self.k * self.n + self.n * self.n
    }

    /// Hub `u_i`, `1 <= i <= k`.
    pub fn hub(&self, i: usize) -> Vertex {
        i - 1
    }

    /// `u_{i,j}`, `1 <= i <= k`, `1 <= j <= n` (wrapping in `j`).
    pub fn leaf(&self, i: usize, j: usize) -> Vertex {
        let j = (j - 1) % self.n + 1;
        self.k + (i - 1) * self.n + (j - 1)
    }

    /// `x_{i,j}` with both indices reduced modulo `n`.
    pub fn x(&self, i: usize, j: usize) -> Vertex {
        let n = self.n;
        let (i, j) = ((i - 1) % n + 1, (j - 1) % n + 1);
        self.k + self.k * n + (i - 1) * n + (j - 1)
    }
}

/// `G_{k,n}` for `k >= 3` and prime `n >= k² − k`.
pub fn build_counterexample_mad2k(
    k: usize,
    n: usize,
) -> Result<ConstructionCertificate, ConstructionError> {
    if k < 3 {
        return Err(invalid("k", k, "must be at least 3"));
    }
    if !primality_check(n as u64) {
        return Err(invalid("n", n, "must be prime"));
    }
    let span = k * k - k;
    if n < span {
        return Err(invalid(
            "n",
            n,
            format!("must be at least k^2 - k = {span}"),
        ));
    }
    let lay = Mad2kLayout { k, n };
    let squares: Vec<LatinSquare> = (1..=k - 2)
        .map(|ell| latin_square(n, ell))
        .collect::<Result<_, _>>()?;

    let mut b = GraphBuilder::new(lay.vertex_count());
    for i in 1..=k {
        b.set_label(lay.hub(i), format!("u_{i}"));
        for j in 1..=n {
            b.set_label(lay.leaf(i, j), format!("u_{{{i},{j}}}"));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            b.set_label(lay.x(i, j), format!("x_{{{i},{j}}}"));
        }
    }

    let mut add = |x: Vertex, y: Vertex| {
        b.add_edge(x, y)
            .expect("construction vertices are in range");
    };
    for i in 1..=k {
        for j in i + 1..=k {
            add(lay.hub(i), lay.hub(j));
        }
        for j in 1..=n {
            add(lay.hub(i), lay.leaf(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let x = lay.x(i, j);
            add(x, lay.leaf(1, i));
            add(x, lay.leaf(2, j));
            for (offset, sq) in squares.iter().enumerate() {
                add(x, lay.leaf(3 + offset, sq.get(i, j)));
            }
        }
    }
    for r in 0..span {
        for i in 2..=n {
            add(lay.x(1, 1 + r), lay.x(i, i + r));
        }
    }

    let mut clique: Vec<Vertex> = (1..=span).map(|j| lay.x(1, j)).collect();
    clique.extend((1..=k).map(|i| lay.hub(i)));
    for i in 1..=k {
        clique.extend((1..=n).map(|j| lay.leaf(i, j)));
    }
    clique.sort_unstable();

    Ok(ConstructionCertificate {
        family: Family::Mad2k { k, n },
        graph: b.build(),
        claimed_clique: clique,
        claimed_max_degree: n + k - 1,
        claimed_potential_params: PotentialParams::mad2k(k as i64),
        claimed_min_potential_at_least: 1,
    })
}

/// Builds any family from its parameters.
pub fn build(family: Family) -> Result<ConstructionCertificate, ConstructionError> {
    match family {
        Family::Mad4 { n } => build_counterexample_mad4(n),
        Family::Tight { c } => build_tight_mad4_minus(c),
        Family::Mad2k { k, n } => build_counterexample_mad2k(k, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_errors() {
        assert!(build_counterexample_mad4(1).is_err());
        assert!(build_tight_mad4_minus(1).is_err());
        assert!(build_counterexample_mad2k(2, 7).is_err());
        assert!(build_counterexample_mad2k(3, 9).is_err());
        assert!(build_counterexample_mad2k(3, 5).is_err());
        assert!(build_counterexample_mad2k(4, 11).is_err());
        assert!(build_counterexample_mad2k(4, 13).is_ok());
        assert!(latin_square(1, 1).is_err());
        assert!(latin_square(5, 0).is_err());
        assert!(latin_square(5, 5).is_err());
    }

    #[test]
    fn primes() {
        assert!(primality_check(7));
        assert!(!primality_check(1));
        assert!(!primality_check(0));
        assert!(!primality_check(91));
        assert!(primality_check(2));
        assert!(primality_check(13));
        assert!(!primality_check(49));
    }

    #[test]
    fn latin_entries() {
        let l1 = latin_square(7, 1).unwrap();
        assert_eq!(l1.get(2, 3), 4);
        assert_eq!(l1.get(7, 7), 6);
        for ell in 1..7 {
            let l = latin_square(7, ell).unwrap();
            assert_eq!(l.row(1), &[1, 2, 3, 4, 5, 6, 7]);
        }
    }

    #[test]
    fn labels_are_attached() {
        let cert = build_counterexample_mad4(3).unwrap();
        let g = &cert.graph;
        let lay = Mad4Layout { n: 3 };
        assert_eq!(g.label(lay.x(3, 4)), Some("x_{3,1}"));
        assert_eq!(g.find_label("v_2"), Some(lay.t(2)));
        let cert = build_counterexample_mad2k(3, 7).unwrap();
        let lay = Mad2kLayout { k: 3, n: 7 };
        assert_eq!(cert.graph.label(lay.leaf(2, 5)), Some("u_{2,5}"));
        assert_eq!(cert.graph.label(lay.hub(3)), Some("u_3"));
    }

    #[test]
    fn tight_x12_keeps_only_its_two_hub_edges() {
        for c in 2..=4 {
            let cert = build_tight_mad4_minus(c).unwrap();
            let lay = Mad4Layout { n: 2 * c };
            let mut ns = cert.graph.neighbors(lay.x(1, 2)).to_vec();
            ns.sort_unstable();
            assert_eq!(ns, vec![lay.s(1), lay.t(2)]);
        }
    }
}
