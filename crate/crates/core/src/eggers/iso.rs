use super::tree::{EggersWallTree, NodeId};

/// A string that is equal for two trees iff they are isomorphic as rooted
/// trees preserving heights and edge weights (and leaf labels, when
/// `labeled`). Children are encoded in sorted order of their own forms.
pub fn canonical_form(t: &EggersWallTree, labeled: bool) -> String {
    fn encode(t: &EggersWallTree, v: NodeId, labeled: bool) -> String {
        let mut kids: Vec<String> = t
            .children(v)
            .iter()
            .map(|&c| {
                let w = t.weight_into(c).expect("child has a parent edge");
                format!("{w}:{}", encode(t, c, labeled))
            })
            .collect();
        kids.sort();
        let label = match (labeled, t.leaves().get(&v)) {
            (true, Some(id)) => format!("={id:?}"),
            _ => String::new(),
        };
        format!("({}{label}[{}])", t.height(v), kids.join(","))
    }
    encode(t, t.root(), labeled)
}

/// With `labeled`, leaves must correspond by branch id; otherwise any
/// relabeling of branches is allowed.
pub fn tree_isomorphic(a: &EggersWallTree, b: &EggersWallTree, labeled: bool) -> bool {
    a.node_count() == b.node_count() && canonical_form(a, labeled) == canonical_form(b, labeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eggers::build_tree;
    use crate::puiseux::{Branch, Curve};

    fn tree(texts: &[&str]) -> EggersWallTree {
        build_tree(&Curve::parse_all(texts).unwrap()).unwrap()
    }

    #[test]
    fn reducible_example_trees_differ() {
        let c = tree(&[
            "x + x^2 + x^(5/2)",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2",
        ]);
        let d = tree(&[
            "x + x^2",
            "x + 2*x^2",
            "2*x + x^2",
            "2*x + 2*x^2",
            "2*x + 3*x^2 + x^(5/2)",
        ]);
        assert!(!tree_isomorphic(&c, &d, false));
        assert!(!tree_isomorphic(&c, &d, true));
    }

    #[test]
    fn self_isomorphic() {
        let c = tree(&["x^(3/2) + x^(5/2)", "x^(3/2) + x^(11/4)", "x^(5/2)"]);
        assert!(tree_isomorphic(&c, &c, true));
        assert!(tree_isomorphic(&c, &c, false));
    }

    #[test]
    fn same_shape_different_coefficients() {
        let a = tree(&["x + x^2", "x + 2*x^2"]);
        let b = tree(&["x + 3*x^2", "x + 5*x^2"]);
        assert!(tree_isomorphic(&a, &b, false));
        assert!(tree_isomorphic(&a, &b, true));
    }

    #[test]
    fn labels_matter_only_when_labeled() {
        let a = tree(&["x^(3/2)", "x^(5/2)"]);
        let swapped = build_tree(
            &Curve::new(vec![
                Branch::parse("C1", "x^(5/2)").unwrap(),
                Branch::parse("C2", "x^(3/2)").unwrap(),
            ])
            .unwrap(),
        )
        .unwrap();
        assert!(tree_isomorphic(&a, &swapped, false));
        assert!(!tree_isomorphic(&a, &swapped, true));
    }
}
