//! Chordality test via perfect elimination orderings.

use crate::bits::ones;
use crate::graph::Graph;

/// A graph is chordal iff it admits a perfect elimination ordering:
/// repeatedly remove a simplicial vertex (one whose neighborhood is a
/// clique). Greedy removal is complete for this test.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.full_mask();
    while alive != 0 {
        let mut found = false;
        for v in ones(alive) {
            let nb = g.neighbors_mask(v) & alive;
            if is_clique(g, nb) {
                alive &= !(1 << v);
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

fn is_clique(g: &Graph, mask: u64) -> bool {
    for v in ones(mask) {
        if mask & !(g.neighbors_mask(v) | (1 << v)) != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::Pattern;

    #[test]
    fn cycles_and_trees() {
        let c4 = Pattern::cycle4();
        assert!(!is_chordal(c4.graph()));
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_chordal(&tree));
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_chordal(&c3));
    }

    #[test]
    fn house_not_chordal() {
        // contains an induced C_4
        let house = Pattern::house();
        assert!(crate::induced::contains_induced(house.graph(), &Pattern::cycle4()).is_some());
        assert!(!is_chordal(house.graph()));
    }

    #[test]
    fn chordal_iff_no_long_induced_cycle_small() {
        // cross-validate on every connected graph of order <= 5 using the
        // induced-cycle definition directly
        for n in 1..=5usize {
            for g in crate::enumerate::enumerate_connected(n).unwrap() {
                let mut has_hole = false;
                for len in 4..=n {
                    let cyc: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
                    let p = Pattern::new(Graph::from_edges(len, &cyc).unwrap()).unwrap();
                    if crate::induced::contains_induced(&g, &p).is_some() {
                        has_hole = true;
                    }
                }
                assert_eq!(is_chordal(&g), !has_hole);
            }
        }
    }
}
