//! Replacement of a 3-vertex by three 2-vertices.
//!
//! For a 3-vertex `u` with neighbours `x1 < x2 < x3`, the surgery deletes `u`
//! and adds `y1 ~ {x1, x2}`, `y2 ~ {x2, x3}`, `y3 ~ {x1, x3}`. Each `x_i`
//! gains one in degree, and any two of them remain at distance two.

use crate::error::DischargeError;
use crate::graph::{Graph, GraphBuilder, Vertex};

#[derive(Clone, Debug)]
pub struct Surgery {
    pub graph: Graph,
    /// Old vertex id to new vertex id; `None` for the removed vertex.
    pub vertex_map: Vec<Option<Vertex>>,
    /// New ids of the three added vertices.
    pub y: [Vertex; 3],
    /// New ids of the former neighbours of the removed vertex.
    pub x: [Vertex; 3],
}

pub fn lemma34_surgery(g: &Graph, u: Vertex) -> Result<Surgery, DischargeError> {
    g.check_vertex(u)?;
    let degree = g.degree(u);
    if degree != 3 {
        return Err(DischargeError::NotThreeVertex { vertex: u, degree });
    }
    let vertex_map: Vec<Option<Vertex>> = g
        .vertices()
        .map(|v| match v.cmp(&u) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let mut b = GraphBuilder::new(g.vertex_count() - 1);
    for (v, text) in g.labels() {
        if let Some(nv) = vertex_map[*v] {
            b.set_label(nv, text.clone());
        }
    }
    for (v, w) in g.edges() {
        if let (Some(a), Some(c)) = (vertex_map[v], vertex_map[w]) {
            b.add_edge(a, c)?;
        }
    }
    let n = g.neighbors(u);
    let x = [n[0], n[1], n[2]].map(|v| vertex_map[v].expect("neighbour survives"));
    let mut y = [0; 3];
    for (i, (p, q)) in [(0, 1), (1, 2), (0, 2)].into_iter().enumerate() {
        y[i] = b.add_vertex(Some(format!("y_{}", i + 1)));
        b.add_edge(y[i], x[p])?;
        b.add_edge(y[i], x[q])?;
    }
    Ok(Surgery {
        graph: b.build(),
        vertex_map,
        y,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_vertex_replaced() {
        let g = Graph::complete(4);
        let s = lemma34_surgery(&g, 1).unwrap();
        assert_eq!(s.graph.vertex_count(), 6);
        assert_eq!(s.graph.edge_count(), 3 + 6);
        assert_eq!(s.x, [0, 1, 2]);
        for &x in &s.x {
            assert_eq!(s.graph.degree(x), 4);
        }
        for &y in &s.y {
            assert_eq!(s.graph.degree(y), 2);
        }
        assert_eq!(s.graph.label(s.y[2]), Some("y_3"));
        assert_eq!(s.vertex_map, vec![Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn needs_degree_three() {
        let err = lemma34_surgery(&Graph::cycle(5), 0).unwrap_err();
        assert!(matches!(
            err,
            DischargeError::NotThreeVertex {
                vertex: 0,
                degree: 2
            }
        ));
        assert!(lemma34_surgery(&Graph::cycle(5), 7).is_err());
    }
}
