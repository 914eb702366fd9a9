use alloc::vec;

use super::{rel_diff, run_check, CheckRecord, CheckSpec, Inputs};
use crate::group::{Generator, GroupElement};

fn inputs(names: [&'static str; 3], g: &GroupElement) -> Inputs {
    vec![(names[0], g.x), (names[1], g.t), (names[2], g.v)]
}

/// `(g h) k = g (h k)`.
pub fn check_group_associativity(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |s| {
        let (g, h, k) = (s.group_element(), s.group_element(), s.group_element());
        let lhs = g.compose(&h).compose(&k);
        let rhs = g.compose(&h.compose(&k));
        let mut input = inputs(["g.x", "g.t", "g.v"], &g);
        input.extend(inputs(["h.x", "h.t", "h.v"], &h));
        input.extend(inputs(["k.x", "k.t", "k.v"], &k));
        (rel_diff(&lhs.to_array(), &rhs.to_array()), input)
    })
}

/// `e g = g = g e`.
pub fn check_group_identity(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |s| {
        let g = s.group_element();
        let e = GroupElement::IDENTITY;
        let r = rel_diff(&e.compose(&g).to_array(), &g.to_array())
            .max(rel_diff(&g.compose(&e).to_array(), &g.to_array()));
        (r, inputs(["x", "t", "v"], &g))
    })
}

/// `g g^-1 = e = g^-1 g`, and `(g^-1)^-1 = g`.
pub fn check_group_inverse(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |s| {
        let g = s.group_element();
        let inv = g.inverse();
        let e = GroupElement::IDENTITY.to_array();
        // The x component cancels terms of size |x| + |v t|.
        let scale = g.x.abs() + (g.v * g.t).abs();
        let right = g.compose(&inv).to_array();
        let left = inv.compose(&g).to_array();
        let mut r = rel_diff(&inv.inverse().to_array(), &g.to_array());
        for (a, b) in right
            .iter()
            .chain(left.iter())
            .zip(e.iter().chain(e.iter()))
        {
            r = r.max(super::scaled(a - b, scale));
        }
        (r, inputs(["x", "t", "v"], &g))
    })
}

/// `exp(a X) exp(b X) = exp((a + b) X)` for each generator.
pub fn check_one_parameter(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |s| {
        let (a, b) = (s.group_param(), s.group_param());
        let r = Generator::ALL
            .iter()
            .map(|&gen| {
                let lhs = GroupElement::exp(gen, a).compose(&GroupElement::exp(gen, b));
                rel_diff(&lhs.to_array(), &GroupElement::exp(gen, a + b).to_array())
            })
            .fold(0.0, super::nan_max);
        (r, vec![("a", a), ("b", b)])
    })
}
