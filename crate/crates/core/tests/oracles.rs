//! Worked examples checked against routes that do not go through the
//! implementation under test.

use galilei_core::orbits::{
    CoadjointOrbit, ForcedMassiveOrbit, PQState, SpacetimeOrbit, TauQState,
};
use galilei_core::twobody::{BarycenterGroupElement, BarycenterState, ProductState, TwoBodySystem};
use galilei_core::{Generator, GroupElement};

/// The spacetime action written out by hand.
fn spacetime(g: [f64; 3], (tau, q): (f64, f64)) -> (f64, f64) {
    let [x, t, v] = g;
    (tau + t, q + v * tau + x)
}

/// Recovers a group element from its action on the points (0,0), (1,0),
/// which pins down x, t and v.
fn element_from_action(act: impl Fn((f64, f64)) -> (f64, f64)) -> [f64; 3] {
    let (t, x) = act((0.0, 0.0));
    let (_, q1) = act((1.0, 0.0));
    [x, t, q1 - x]
}

#[test]
fn composition_matches_two_spacetime_actions() {
    let (g, h) = ([1.0, 2.0, 3.0], [4.0, 5.0, 6.0]);
    let composed = element_from_action(|s| spacetime(g, spacetime(h, s)));
    assert_eq!(composed, [20.0, 7.0, 9.0]);
    let lib = GroupElement::from(g).compose(&GroupElement::from(h));
    assert_eq!(lib.to_array(), composed);
}

#[test]
fn inverse_matches_inverted_spacetime_action() {
    // Invert (tau, q) -> (tau + t, q + v tau + x) by hand.
    let [x, t, v] = [1.0, 2.0, 3.0];
    let undo = |(tau, q): (f64, f64)| {
        let tau0 = tau - t;
        (tau0, q - v * tau0 - x)
    };
    let inv = element_from_action(undo);
    assert_eq!(inv, [5.0, -2.0, -3.0]);
    assert_eq!(GroupElement::new(x, t, v).inverse().to_array(), inv);
}

#[test]
fn action_examples_by_substitution() {
    // p' = p - m v + f t ; q' = q + (p/m) t + (f/m) t^2/2 + x - v t
    let (m, f) = (2.0, 4.0);
    let (p, q) = (1.0, 0.0);
    let (x, t, v) = (0.0, 1.0, 0.0);
    let expected = (
        p - m * v + f * t,
        q + p / m * t + f / m * t * t / 2.0 + x - v * t,
    );
    assert_eq!(expected, (5.0, 1.5));
    let o = ForcedMassiveOrbit::new(m, f, 0.0).unwrap();
    let s = o.act(&GroupElement::new(x, t, v), PQState::new(p, q));
    assert_eq!((s.p, s.q), expected);

    let st = SpacetimeOrbit::new(2.0, 0.0).unwrap();
    let s = st.act(&GroupElement::new(1.0, 2.0, 3.0), TauQState::new(4.0, 5.0));
    assert_eq!((s.tau, s.q), spacetime([1.0, 2.0, 3.0], (4.0, 5.0)));
}

#[test]
fn hamiltonian_field_matches_derivative_of_action() {
    // Forced orbit, E at (5, 1.5): derivative of t -> act(exp(tE)) at 0 is
    // (f, p/m) = (4, 2.5); the field is its negative.
    let o = ForcedMassiveOrbit::new(2.0, 4.0, 0.0).unwrap();
    let s = PQState::new(5.0, 1.5);
    let v = o.hamiltonian_field(Generator::TimeTranslation, s);
    assert_eq!(v.components, [-4.0, -2.5]);
}

/// Solves a 4x4 linear system by Gaussian elimination with partial
/// pivoting.
fn solve4(mut a: [[f64; 4]; 4], mut b: [f64; 4]) -> [f64; 4] {
    for col in 0..4 {
        let piv = (col..4)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..4 {
            let k = a[row][col] / a[col][col];
            let pivot_row = a[col];
            for (x, p) in a[row].iter_mut().zip(pivot_row).skip(col) {
                *x -= k * p;
            }
            b[row] -= k * b[col];
        }
    }
    let mut x = [0.0; 4];
    for row in (0..4).rev() {
        let s: f64 = (row + 1..4).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

fn decomposition_matrix(m1: f64, m2: f64) -> [[f64; 4]; 4] {
    let m = m1 + m2;
    // rows: p, q, pi, rho ; columns: p1, q1, p2, q2
    [
        [1.0, 0.0, 1.0, 0.0],
        [0.0, m1 / m, 0.0, m2 / m],
        [m2 / m, 0.0, -m1 / m, 0.0],
        [0.0, 1.0, 0.0, -1.0],
    ]
}

#[test]
fn barycenter_example_and_inverse_by_elimination() {
    let sys = TwoBodySystem::new(1.0, 3.0, 2.0, -2.0).unwrap();
    let s = ProductState::new(2.0, 4.0, 2.0, 0.0);
    let a = decomposition_matrix(1.0, 3.0);
    let mut b = [0.0; 4];
    for (i, row) in a.iter().enumerate() {
        b[i] = row.iter().zip(s.to_array()).map(|(x, y)| x * y).sum();
    }
    assert_eq!(b, [4.0, 1.0, 1.0, 4.0]);
    assert_eq!(sys.to_barycenter(&s).to_array(), b);

    let solved = solve4(a, b);
    let lib = sys
        .from_barycenter(&BarycenterState::from_array(b))
        .to_array();
    for (x, y) in solved.iter().zip(lib) {
        assert!((x - y).abs() < 1e-14);
    }
    assert_eq!(lib, [2.0, 4.0, 2.0, 0.0]);
}

#[test]
fn inverse_decomposition_on_awkward_masses() {
    for (m1, m2) in [(0.1, 9.7), (1.0, 1000.0), (3.3, 3.3)] {
        let sys = TwoBodySystem::new(m1, m2, 0.0, 0.0).unwrap();
        let b = [1.5, -2.25, 0.75, 8.0];
        let solved = solve4(decomposition_matrix(m1, m2), b);
        let lib = sys
            .from_barycenter(&BarycenterState::from_array(b))
            .to_array();
        for (x, y) in solved.iter().zip(lib) {
            assert!((x - y).abs() < 1e-12, "{m1} {m2}: {solved:?} vs {lib:?}");
        }
    }
}

#[test]
fn barycentric_example_via_product_route() {
    // m = 4, mu = 0.75, f = 4, phi = 2 needs m1 = 1, m2 = 3, f1 = 3, f2 = 1.
    let sys = TwoBodySystem::new(1.0, 3.0, 3.0, 1.0).unwrap();
    let g = GroupElement::new(0.0, 1.0, 0.0);
    // Each particle separately, written out by hand from the orbit action.
    let particle =
        |m: f64, f: f64, p: f64, q: f64| (p + f * g.t, q + p / m * g.t + f / m * g.t * g.t / 2.0);
    let (p1, q1) = particle(1.0, 3.0, 0.0, 0.0);
    let (p2, q2) = particle(3.0, 1.0, 0.0, 0.0);
    let oracle = [
        p1 + p2,
        (1.0 * q1 + 3.0 * q2) / 4.0,
        (3.0 * p1 - 1.0 * p2) / 4.0,
        q1 - q2,
    ];
    let lib = sys.barycentric_act(
        &BarycenterGroupElement::time(1.0),
        &BarycenterState::default(),
    );
    for (x, y) in oracle.iter().zip(lib.to_array()) {
        assert!((x - y).abs() < 1e-15);
    }
    assert_eq!(oracle[0], 4.0);
    assert_eq!(oracle[1], 0.5);
    assert_eq!(oracle[2], 2.0);
    assert!((oracle[3] - 4.0 / 3.0).abs() < 1e-15);
}

#[test]
fn internal_group_example_by_substitution() {
    let (m1, m2, f) = (1.0, 3.0, 4.0);
    let m = m1 + m2;
    let (r, t, u) = (4.0, 2.0, 8.0);
    let g1 = [f / m * t * t / 2.0 + m2 / m * r, t, f / m * t + m2 / m * u];
    let g2 = [f / m * t * t / 2.0 - m1 / m * r, t, f / m * t - m1 / m * u];
    assert_eq!(g1, [5.0, 2.0, 8.0]);
    assert_eq!(g2, [1.0, 2.0, 0.0]);
    let sys = TwoBodySystem::new(m1, m2, 1.0, 3.0).unwrap();
    let (a, b) = sys.internal_group_element(r, t, u);
    assert_eq!((a.to_array(), b.to_array()), (g1, g2));
}

#[test]
fn isolated_trajectory_is_affine_in_time() {
    let sys = TwoBodySystem::new(1.0, 3.0, 2.0, -2.0).unwrap();
    let b0 = BarycenterState::new(4.0, 1.0, 1.0, 4.0);
    let rows = sys.trajectory(&b0, 7.5, 30).unwrap();
    // Least-squares line through (t, q).
    let n = rows.len() as f64;
    let (st, sq) = rows
        .iter()
        .fold((0.0, 0.0), |(a, b), r| (a + r.t, b + r.state.q));
    let (mt, mq) = (st / n, sq / n);
    let (sxy, sxx) = rows.iter().fold((0.0, 0.0), |(a, b), r| {
        (a + (r.t - mt) * (r.state.q - mq), b + (r.t - mt).powi(2))
    });
    let slope = sxy / sxx;
    let dev = rows
        .iter()
        .map(|r| (r.state.q - (mq + slope * (r.t - mt))).abs())
        .fold(0.0, f64::max);
    assert!(dev <= 1e-9, "deviation {dev}");
    assert!((slope - 1.0).abs() < 1e-12);
    let e0 = rows[0].momentum.j_e;
    assert!(rows.iter().all(|r| (r.momentum.j_e - e0).abs() < 1e-12));
}
