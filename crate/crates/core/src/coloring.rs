//! Cliques, colourings, list colourings and small choosability checks.
//!
//! All exact searches take a [`Budget`]. Running out of time is reported as
//! [`SolveError::Timeout`], never as an answer.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{GraphError, SolveError};
use crate::graph::{normalize_set, Graph, Vertex};

/// Optional wall-clock limit shared by the exact solvers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + timeout),
        }
    }

    pub fn from_option(timeout: Option<Duration>) -> Self {
        timeout.map_or_else(Self::unlimited, Self::with_timeout)
    }

    fn check(&self) -> Result<(), SolveError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(SolveError::Timeout),
            _ => Ok(()),
        }
    }
}

/// A vertex colouring with colours `1..=palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<u32>,
    pub palette_size: u32,
}

impl Coloring {
    fn from_assignment(assignment: Vec<u32>) -> Self {
        let palette_size = assignment.iter().copied().max().unwrap_or(0);
        Coloring {
            assignment,
            palette_size,
        }
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.assignment[v]
    }

    pub fn colors_used(&self) -> usize {
        let mut cs = self.assignment.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// Every vertex has a colour in `1..=palette_size` and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.vertex_count()
            && self
                .assignment
                .iter()
                .all(|&c| c >= 1 && c <= self.palette_size)
            && g.edges()
                .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// Colour lists per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    /// Validates that every list is nonempty; lists are sorted and deduplicated.
    pub fn new(mut lists: Vec<Vec<u32>>) -> Result<Self, SolveError> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(SolveError::EmptyList(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Is `coloring` proper on `g` with every colour taken from its list?
    pub fn admits(&self, g: &Graph, coloring: &Coloring) -> bool {
        coloring.assignment.len() == g.vertex_count()
            && g.edges()
                .all(|(u, v)| coloring.assignment[u] != coloring.assignment[v])
            && coloring
                .assignment
                .iter()
                .zip(&self.lists)
                .all(|(c, l)| l.binary_search(c).is_ok())
    }
}

struct CliqueSearch {
    adj: Vec<BitSet>,
    best: Vec<usize>,
    budget: Budget,
    steps: u64,
}

impl CliqueSearch {
    /// Greedy colour classes over `p` (in index order) giving an upper bound
    /// for every prefix. Returns vertices and their colour numbers, sorted by colour.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut verts = Vec::with_capacity(p.len());
        let mut bounds = Vec::with_capacity(p.len());
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                verts.push(v);
                bounds.push(color);
            }
        }
        (verts, bounds)
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet) -> Result<(), SolveError> {
        self.steps += 1;
        if self.steps.is_multiple_of(1024) {
            self.budget.check()?;
        }
        let (verts, bounds) = self.color_sort(&p);
        for idx in (0..verts.len()).rev() {
            if r.len() + bounds[idx] <= self.best.len() {
                return Ok(());
            }
            let v = verts[idx];
            r.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next)?;
            }
            r.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
/// Vertices are processed in non-increasing degree order (ties by id).
pub fn max_clique(g: &Graph, budget: Budget) -> Result<Vec<Vertex>, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut s = BitSet::new(n);
            g.neighbors(v).iter().for_each(|&w| s.insert(pos[w]));
            s
        })
        .collect();
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        budget,
        steps: 0,
    };
    search.expand(&mut Vec::new(), BitSet::full(n))?;
    let mut clique: Vec<Vertex> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    debug_assert!(is_clique(g, &clique));
    Ok(clique)
}

pub fn is_clique(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

/// Result of [`is_clique_in_square`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareCliqueCheck {
    pub is_clique: bool,
    /// First pair (in sorted order) at distance greater than two.
    pub failing_pair: Option<(Vertex, Vertex)>,
}

/// Checks that all pairs of `set` are within distance two in `g`, without
/// building the square.
pub fn is_clique_in_square(g: &Graph, set: &[Vertex]) -> Result<SquareCliqueCheck, GraphError> {
    let set = normalize_set(g, set)?;
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if !g.within_two(u, v) {
                return Ok(SquareCliqueCheck {
                    is_clique: false,
                    failing_pair: Some((u, v)),
                });
            }
        }
    }
    Ok(SquareCliqueCheck {
        is_clique: true,
        failing_pair: None,
    })
}

/// DSATUR: repeatedly colour the vertex with the most distinct neighbour
/// colours (ties: larger degree, then smaller id) with its smallest free colour.
pub fn greedy_dsatur(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut color = vec![0u32; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (1..)
            .find(|&c: &u32| !seen[v].get(c as usize).copied().unwrap_or(false))
            .unwrap();
        color[v] = c;
        for &w in g.neighbors(v) {
            let s = &mut seen[w];
            if s.len() <= c as usize {
                s.resize(c as usize + 1, false);
            }
            if !s[c as usize] {
                s[c as usize] = true;
                sat[w] += 1;
            }
        }
    }
    let coloring = Coloring::from_assignment(color);
    assert!(
        coloring.is_proper(g),
        "DSATUR produced an improper colouring"
    );
    coloring
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    /// The reported value is the exact optimum.
    Exact,
    /// The reported value is only an upper bound (search stopped at the hint).
    Bound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
    pub status: SolveStatus,
    /// Size of the clique used as the lower bound.
    pub clique_lower_bound: usize,
}

struct ColorSearch<'a> {
    g: &'a Graph,
    color: Vec<u32>,
    // conflict[v][c]: neighbours of v currently coloured c
    conflict: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    best_color: Vec<u32>,
    lower: usize,
    stop_at: usize,
    budget: Budget,
    steps: u64,
}

impl ColorSearch<'_> {
    fn assign(&mut self, v: Vertex, c: u32) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.conflict[w][c as usize];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.color[v];
        self.color[v] = 0;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.conflict[w][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn done(&self) -> bool {
        self.best <= self.lower || self.best <= self.stop_at
    }

    fn search(&mut self, colored: usize, used: usize) -> Result<(), SolveError> {
        self.steps += 1;
        if self.steps.is_multiple_of(4096) {
            self.budget.check()?;
        }
        let n = self.g.vertex_count();
        if colored == n {
            if used < self.best {
                self.best = used;
                self.best_color = self.color.clone();
            }
            return Ok(());
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit as u32 {
            if self.conflict[v][c as usize] > 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.search(colored + 1, used.max(c as usize));
            self.unassign(v);
            r?;
            if self.done() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Exact chromatic number by DSATUR branch and bound, seeded with a maximum
/// clique (coloured first, as `1..=ω`) and the greedy DSATUR colouring.
///
/// With `upper_hint = Some(h)`, the search stops as soon as a colouring
/// with at most `h` colours is known and reports [`SolveStatus::Bound`]
/// unless that colouring is also provably optimal.
pub fn chromatic_number(
    g: &Graph,
    upper_hint: Option<usize>,
    budget: Budget,
) -> Result<ChromaticResult, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Coloring::from_assignment(Vec::new()),
            status: SolveStatus::Exact,
            clique_lower_bound: 0,
        });
    }
    let clique = max_clique(g, budget)?;
    let lower = clique.len();
    let greedy = greedy_dsatur(g);
    let ub = greedy.palette_size as usize;
    let stop_at = upper_hint.unwrap_or(0);

    let finish = |chi: usize, assignment: Vec<u32>| {
        let witness = Coloring::from_assignment(assignment);
        assert!(
            witness.is_proper(g),
            "colour search produced an improper colouring"
        );
        debug_assert_eq!(witness.palette_size as usize, chi);
        ChromaticResult {
            chi,
            witness,
            status: if chi <= lower {
                SolveStatus::Exact
            } else {
                SolveStatus::Bound
            },
            clique_lower_bound: lower,
        }
    };

    if ub <= lower || ub <= stop_at {
        return Ok(finish(ub, greedy.assignment));
    }

    let mut s = ColorSearch {
        g,
        color: vec![0; n],
        conflict: vec![vec![0; ub + 1]; n],
        sat: vec![0; n],
        best: ub,
        best_color: greedy.assignment,
        lower,
        stop_at,
        budget,
        steps: 0,
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i as u32 + 1);
    }
    s.search(lower, lower)?;
    let mut result = finish(s.best, s.best_color);
    if s.best > stop_at {
        // search ran to completion without hitting the hint: optimal
        result.status = SolveStatus::Exact;
    }
    Ok(result)
}

struct ListSearch<'a> {
    g: &'a Graph,
    // lists as indices into `palette`
    lists: Vec<Vec<usize>>,
    blocked: Vec<Vec<u32>>,
    available: Vec<usize>,
    chosen: Vec<Option<usize>>,
    budget: Budget,
    steps: u64,
}

impl ListSearch<'_> {
    fn in_list(&self, v: Vertex, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Colours `v` with `c`; returns false if some uncoloured neighbour lost its last option.
    fn assign(&mut self, v: Vertex, c: usize) -> bool {
        self.chosen[v] = Some(c);
        let mut ok = true;
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if self.in_list(w, c) {
                if self.blocked[w][c] == 0 {
                    self.available[w] -= 1;
                    if self.available[w] == 0 && self.chosen[w].is_none() {
                        ok = false;
                    }
                }
                self.blocked[w][c] += 1;
            }
        }
        ok
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.chosen[v].take().unwrap();
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if self.in_list(w, c) {
                self.blocked[w][c] -= 1;
                if self.blocked[w][c] == 0 {
                    self.available[w] += 1;
                }
            }
        }
    }

    fn search(&mut self, remaining: usize) -> Result<bool, SolveError> {
        self.steps += 1;
        if self.steps.is_multiple_of(4096) {
            self.budget.check()?;
        }
        if remaining == 0 {
            return Ok(true);
        }
        let v = (0..self.g.vertex_count())
            .filter(|&v| self.chosen[v].is_none())
            .min_by_key(|&v| (self.available[v], v))
            .unwrap();
        for idx in 0..self.lists[v].len() {
            let c = self.lists[v][idx];
            if self.blocked[v][c] > 0 {
                continue;
            }
            let ok = self.assign(v, c);
            let found = ok && self.search(remaining - 1)?;
            if found {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Proper colouring choosing each vertex's colour from its list, or
/// `Ok(None)` when no such colouring exists. Backtracking with
/// forward checking and most-constrained-first vertex order.
pub fn list_color(
    g: &Graph,
    lists: &ListAssignment,
    budget: Budget,
) -> Result<Option<Coloring>, SolveError> {
    let n = g.vertex_count();
    if lists.lists.len() != n {
        return Err(SolveError::EmptyList(lists.lists.len().min(n)));
    }
    let mut palette: Vec<u32> = lists.lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    let index = |c: u32| palette.binary_search(&c).unwrap();
    let idx_lists: Vec<Vec<usize>> = lists
        .lists
        .iter()
        .map(|l| l.iter().map(|&c| index(c)).collect())
        .collect();
    let available = idx_lists.iter().map(Vec::len).collect();
    let mut s = ListSearch {
        g,
        lists: idx_lists,
        blocked: vec![vec![0; palette.len()]; n],
        available,
        chosen: vec![None; n],
        budget,
        steps: 0,
    };
    if !s.search(n)? {
        return Ok(None);
    }
    let assignment: Vec<u32> = s.chosen.iter().map(|c| palette[c.unwrap()]).collect();
    let coloring = Coloring::from_assignment(assignment);
    assert!(
        lists.admits(g, &coloring),
        "list search produced an invalid colouring"
    );
    Ok(Some(coloring))
}

pub const CHOOSABILITY_MAX_VERTICES: usize = 8;
pub const CHOOSABILITY_MAX_K: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choosability {
    pub k: usize,
    pub choosable: bool,
    /// A `k`-list assignment with no admissible colouring.
    pub counterexample: Option<ListAssignment>,
}

/// Vertices of the `k`-core: repeatedly strip vertices of degree below `k`.
/// A stripped vertex can always be coloured last, so choosability is decided
/// on the core alone.
fn k_core(g: &Graph, k: usize) -> Vec<Vertex> {
    let mut alive = vec![true; g.vertex_count()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    while let Some(v) = g.vertices().find(|&v| alive[v] && deg[v] < k) {
        alive[v] = false;
        for &w in g.neighbors(v) {
            deg[w] -= 1;
        }
    }
    g.vertices().filter(|&v| alive[v]).collect()
}

fn k_subsets(pool: usize, size: usize) -> Vec<Vec<u32>> {
    fn rec(start: usize, pool: usize, size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for c in start..pool {
            if pool - c < size - cur.len() {
                break;
            }
            cur.push(c as u32);
            rec(c + 1, pool, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, pool, size, &mut Vec::new(), &mut out);
    out
}

struct ChooseSearch<'a> {
    core: &'a Graph,
    k: usize,
    lists: Vec<Vec<u32>>,
    budget: Budget,
}

impl ChooseSearch<'_> {
    /// Enumerates list assignments up to colour renaming: a vertex's list
    /// takes `k - j` colours already in use plus the next `j` unused ones.
    fn search(&mut self, v: usize, used: usize) -> Result<Option<ListAssignment>, SolveError> {
        let n = self.core.vertex_count();
        if v == n {
            self.budget.check()?;
            let la = ListAssignment::new(
                self.lists
                    .iter()
                    .map(|l| l.iter().map(|c| c + 1).collect())
                    .collect(),
            )?;
            return Ok(match list_color(self.core, &la, self.budget)? {
                Some(_) => None,
                None => Some(la),
            });
        }
        for fresh in 0..=self.k {
            let old = self.k - fresh;
            if old > used {
                continue;
            }
            for base in k_subsets(used, old) {
                let mut list = base;
                list.extend((used..used + fresh).map(|c| c as u32));
                self.lists.push(list);
                let r = self.search(v + 1, used + fresh)?;
                self.lists.pop();
                if r.is_some() {
                    return Ok(r);
                }
            }
        }
        Ok(None)
    }
}

/// Decides `k`-choosability by enumerating every `k`-list assignment up to
/// colour renaming. Limited to [`CHOOSABILITY_MAX_VERTICES`] vertices and
/// `k <= CHOOSABILITY_MAX_K`.
pub fn is_k_choosable_exhaustive(
    g: &Graph,
    k: usize,
    budget: Budget,
) -> Result<Choosability, SolveError> {
    let n = g.vertex_count();
    if n > CHOOSABILITY_MAX_VERTICES {
        return Err(SolveError::SizeCap {
            what: "vertex count",
            cap: CHOOSABILITY_MAX_VERTICES,
            got: n,
        });
    }
    if k > CHOOSABILITY_MAX_K {
        return Err(SolveError::SizeCap {
            what: "list size k",
            cap: CHOOSABILITY_MAX_K,
            got: k,
        });
    }
    if k == 0 {
        // empty lists colour only the empty graph
        let counterexample = (n > 0).then(|| ListAssignment {
            lists: vec![Vec::new(); n],
        });
        return Ok(Choosability {
            k,
            choosable: n == 0,
            counterexample,
        });
    }
    let core_vertices = k_core(g, k);
    let core =
        crate::graph::induced_subgraph(g, &core_vertices).expect("core vertices belong to g");
    let mut s = ChooseSearch {
        core: &core,
        k,
        lists: Vec::new(),
        budget,
    };
    let found = s.search(0, 0)?;
    let counterexample = found.map(|core_lists| {
        let mut lists: Vec<Vec<u32>> = vec![(1..=k as u32).collect(); n];
        for (i, &v) in core_vertices.iter().enumerate() {
            lists[v] = core_lists.lists[i].clone();
        }
        ListAssignment { lists }
    });
    Ok(Choosability {
        k,
        choosable: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::square;

    fn exact_chi(g: &Graph) -> usize {
        chromatic_number(g, None, Budget::unlimited()).unwrap().chi
    }

    #[test]
    fn cliques() {
        assert_eq!(
            max_clique(&square(&Graph::star(3)), Budget::unlimited())
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            max_clique(&Graph::cycle(5), Budget::unlimited())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            max_clique(&Graph::empty(0), Budget::unlimited())
                .unwrap()
                .len(),
            0
        );
    }

    #[test]
    fn square_clique_check() {
        let g = Graph::path(4);
        assert!(is_clique_in_square(&g, &[2]).unwrap().is_clique);
        let r = is_clique_in_square(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(r.failing_pair, Some((0, 3)));
        assert!(is_clique_in_square(&g, &[9]).is_err());
    }

    #[test]
    fn dsatur_named_graphs() {
        assert_eq!(greedy_dsatur(&Graph::complete(5)).palette_size, 5);
        assert_eq!(greedy_dsatur(&Graph::cycle(6)).palette_size, 2);
    }

    #[test]
    fn chromatic_named_graphs() {
        assert_eq!(exact_chi(&Graph::complete(5)), 5);
        assert_eq!(exact_chi(&square(&Graph::cycle(5))), 5);
        assert_eq!(exact_chi(&Graph::cycle(7)), 3);
        assert_eq!(exact_chi(&Graph::empty(3)), 1);
        assert_eq!(exact_chi(&Graph::empty(0)), 0);
    }

    #[test]
    fn hint_stops_early() {
        let g = Graph::cycle(9);
        let r = chromatic_number(&g, Some(5), Budget::unlimited()).unwrap();
        assert!(r.chi <= 5);
        assert!(r.witness.is_proper(&g));
    }

    #[test]
    fn expired_budget_is_a_timeout() {
        assert_eq!(
            Budget::with_timeout(Duration::ZERO).check(),
            Err(SolveError::Timeout)
        );
        assert_eq!(Budget::unlimited().check(), Ok(()));
    }

    #[test]
    fn list_colouring_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(
            list_color(&k4, &ListAssignment::uniform(4, 3), Budget::unlimited()).unwrap(),
            None
        );
        let c = list_color(&k4, &ListAssignment::uniform(4, 4), Budget::unlimited()).unwrap();
        assert!(c.is_some());

        let c4 = Graph::cycle(4);
        let lists =
            ListAssignment::new(vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]]).unwrap();
        let col = list_color(&c4, &lists, Budget::unlimited())
            .unwrap()
            .unwrap();
        assert!(lists.admits(&c4, &col));

        assert_eq!(
            ListAssignment::new(vec![vec![1], vec![]]),
            Err(SolveError::EmptyList(1))
        );
    }

    #[test]
    fn choosability_examples() {
        let b = Budget::unlimited();
        let k4 = is_k_choosable_exhaustive(&Graph::complete(4), 3, b).unwrap();
        assert!(!k4.choosable);
        let ce = k4.counterexample.unwrap();
        assert_eq!(list_color(&Graph::complete(4), &ce, b).unwrap(), None);
        assert!(
            is_k_choosable_exhaustive(&Graph::cycle(4), 2, b)
                .unwrap()
                .choosable
        );
        assert!(
            is_k_choosable_exhaustive(&Graph::complete(3), 3, b)
                .unwrap()
                .choosable
        );
        assert!(
            !is_k_choosable_exhaustive(&Graph::complete(3), 2, b)
                .unwrap()
                .choosable
        );
        assert!(is_k_choosable_exhaustive(&Graph::empty(9), 2, b).is_err());
        assert!(is_k_choosable_exhaustive(&Graph::cycle(4), 4, b).is_err());
    }

    #[test]
    fn k_3_3_is_not_2_choosable() {
        // classic: lists {1,2},{1,3},{2,3} on both sides
        let g = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let r = is_k_choosable_exhaustive(&g, 2, Budget::unlimited()).unwrap();
        assert!(!r.choosable);
        // yet it is 2-colourable
        assert_eq!(exact_chi(&g), 2);
    }
}
