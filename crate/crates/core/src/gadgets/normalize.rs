//! Moving the added vertices of a clique gadget to positions `k..2k`.
//!
//! Two kinds of cyclic shift are applied, each of which never raises the
//! cost under `f_k`:
//!
//! * while an added vertex sits among the first `k` positions, the first
//!   base vertex after it is rotated in front of it: that vertex loses at
//!   most the skipped added vertices' worth of credit, and each skipped added
//!   vertex gains exactly one credit;
//! * once the first `k` positions hold base vertices only, every added vertex
//!   is free, and each is rotated forward to the next slot from `k` on,
//!   handing one extra credit to every base vertex it overtakes.
//!
//! Base vertices keep their relative order throughout.

use crate::gadgets::CliqueGadget;
use crate::graph::check_permutation;
use crate::error::Result;

/// Normal form of `order`; see [`normalize_traversal_steps`].
pub fn normalize_traversal(gadget: &CliqueGadget, order: &[usize]) -> Result<Vec<usize>> {
    let steps = normalize_traversal_steps(gadget, order)?;
    Ok(steps.into_iter().last().expect("steps start with the input"))
}

/// Every intermediate order, starting with `order` itself and ending with
/// the normal form. Consecutive entries differ by one cyclic shift.
pub fn normalize_traversal_steps(gadget: &CliqueGadget, order: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_permutation(gadget.graph.n(), order)?;
    let k = gadget.k;
    let mut current = order.to_vec();
    let mut steps = vec![current.clone()];

    while let Some(first) = current.iter().position(|&v| gadget.is_added(v)).filter(|&i| i < k) {
        // At most `first < k` base vertices precede it and the base graph
        // has at least k vertices, so one follows.
        let next_base = (first + 1..current.len())
            .find(|&j| !gadget.is_added(current[j]))
            .expect("a base vertex follows");
        current[first..=next_base].rotate_right(1);
        steps.push(current.clone());
    }

    for slot in k..2 * k {
        let at = (slot..current.len())
            .find(|&j| gadget.is_added(current[j]))
            .expect("k added vertices exist");
        if at != slot {
            current[slot..=at].rotate_right(1);
            steps.push(current.clone());
        }
    }
    Ok(steps)
}
