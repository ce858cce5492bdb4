use crate::error::{Error, Result};
use crate::problems::{Graph, SpanningTree};
use crate::sim::{Circuit, GateOp, ParamExpr};

/// Vertex cover ansatz over a spanning tree.
///
/// The root qubit gets a free `Ry`. Each tree edge `parent -> child` then gets a VC
/// gate on the child: `Ry(θ) · CZ(parent, child) · Ry(-θ) · X`. With the parent at
/// `|0>` the child ends at `|1>`; with the parent at `|1>` the child is a
/// superposition. Edges are emitted parent-before-child, so every output bitstring
/// covers every tree edge.
pub fn build_mvc_ansatz(graph: &Graph, tree: &SpanningTree) -> Result<Circuit> {
    tree.check_against(graph)?;
    let n = graph.n_vertices();
    let mut circuit = Circuit::new(n, 0)?;
    let root = ParamExpr::new(circuit.new_param());
    circuit.push(GateOp::ry(tree.root(), root))?;
    let mut placed = vec![false; n];
    placed[tree.root()] = true;
    for &(parent, child) in tree.edges() {
        if !placed[parent] {
            return Err(Error::TreeMismatch(format!(
                "edge ({parent}, {child}) appears before its parent is placed"
            )));
        }
        placed[child] = true;
        let theta = ParamExpr::new(circuit.new_param());
        circuit.push(GateOp::ry(child, theta))?;
        circuit.push(GateOp::cz(parent, child))?;
        circuit.push(GateOp::ry(child, theta.negated()))?;
        circuit.push(GateOp::x(child))?;
    }
    Ok(circuit)
}
