use alloc::format;
use alloc::vec;

use super::{
    nan_max, rel_diff, run_check, scaled, sup_norm, symplectic_defect, tolerance, CheckRecord,
    CheckSpec, Inputs, RunConfig, VerificationReport,
};
use crate::error::Error;
use crate::twobody::{BarycenterGroupElement, BarycenterState, ProductState, TwoBodySystem};

/// `dp1 ^ dq1 + dp2 ^ dq2` in `(p1, q1, p2, q2)` order; the same matrix is
/// `dp ^ dq + dpi ^ drho` in `(p, q, pi, rho)` order.
const OMEGA4: [[f64; 4]; 4] = [
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
];

fn system_inputs(sys: &TwoBodySystem) -> Inputs {
    vec![
        ("m1", sys.m1()),
        ("m2", sys.m2()),
        ("f1", sys.f1()),
        ("f2", sys.f2()),
    ]
}

fn push_state(input: &mut Inputs, names: [&'static str; 4], x: [f64; 4]) {
    input.extend(names.into_iter().zip(x));
}

const PRODUCT_NAMES: [&str; 4] = ["p1", "q1", "p2", "q2"];
const BARY_NAMES: [&str; 4] = ["p", "q", "pi", "rho"];

/// Defect of `A^T OMEGA4 A = OMEGA4` for an affine map, with `A` read off
/// from basis images around `x0`.
fn affine_symplectic_residual(x0: [f64; 4], map: impl Fn([f64; 4]) -> [f64; 4]) -> f64 {
    let base = map(x0);
    let mut a = [[0.0; 4]; 4];
    for j in 0..4 {
        let mut xj = x0;
        xj[j] += 1.0;
        let img = map(xj);
        for i in 0..4 {
            a[i][j] = img[i] - base[i];
        }
    }
    scaled(
        symplectic_defect(&a, &OMEGA4),
        sup_norm(&base).max(sup_norm(&x0)),
    )
}

/// `from_barycenter` inverts `to_barycenter`, both ways round.
pub fn check_barycenter_roundtrip(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let s = smp.product_state();
        let b = smp.barycenter_state();
        let r1 = rel_diff(
            &sys.from_barycenter(&sys.to_barycenter(&s)).to_array(),
            &s.to_array(),
        );
        let r2 = rel_diff(
            &sys.to_barycenter(&sys.from_barycenter(&b)).to_array(),
            &b.to_array(),
        );
        let mut input = system_inputs(sys);
        push_state(&mut input, PRODUCT_NAMES, s.to_array());
        push_state(&mut input, BARY_NAMES, b.to_array());
        (nan_max(r1, r2), input)
    })
}

/// The barycenter change of variables carries `dp1 ^ dq1 + dp2 ^ dq2` to
/// `dp ^ dq + dpi ^ drho`.
pub fn check_barycenter_canonical(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let s = smp.product_state();
        let r = affine_symplectic_residual(s.to_array(), |x| {
            sys.to_barycenter(&ProductState::from_array(x)).to_array()
        });
        let mut input = system_inputs(sys);
        push_state(&mut input, PRODUCT_NAMES, s.to_array());
        (r, input)
    })
}

/// Independent transformations of the two particles preserve the product
/// form.
pub fn check_product_action_symplectic(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let s = smp.product_state();
        let (g1, g2) = (smp.group_element(), smp.group_element());
        let r = affine_symplectic_residual(s.to_array(), |x| {
            sys.product_act(&g1, &g2, &ProductState::from_array(x))
                .to_array()
        });
        let mut input = system_inputs(sys);
        push_state(&mut input, PRODUCT_NAMES, s.to_array());
        input.extend([("x1", g1.x), ("t1", g1.t), ("v1", g1.v)]);
        input.extend([("x2", g2.x), ("t2", g2.t), ("v2", g2.v)]);
        (r, input)
    })
}

fn push_bary_group(input: &mut Inputs, gb: &BarycenterGroupElement) {
    input.extend([
        ("x", gb.x),
        ("t", gb.t),
        ("v", gb.v),
        ("r", gb.r),
        ("u", gb.u),
    ]);
}

/// The shared-time subgroup preserves `dp ^ dq + dpi ^ drho`.
pub fn check_barycentric_action_symplectic(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let gb = smp.barycenter_group_element();
        let r = affine_symplectic_residual(b.to_array(), |x| {
            sys.barycentric_act(&gb, &BarycenterState::from_array(x))
                .to_array()
        });
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        push_bary_group(&mut input, &gb);
        (r, input)
    })
}

/// The reduced action equals the product action conjugated by the
/// barycenter map.
pub fn check_conjugation(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let gb = smp.barycenter_group_element();
        let direct = sys.barycentric_act(&gb, &b);
        let (g1, g2) = sys.barycentric_to_pair(&gb);
        let via_product = sys.to_barycenter(&sys.product_act(&g1, &g2, &sys.from_barycenter(&b)));
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        push_bary_group(&mut input, &gb);
        (rel_diff(&direct.to_array(), &via_product.to_array()), input)
    })
}

/// Internal-group elements fix the center-of-mass origin `(p, q) = (0, 0)`.
pub fn check_stabilizer(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let (r, t, u) = (smp.group_param(), smp.group_param(), smp.group_param());
        let (pi, rho) = (smp.state_coord(), smp.state_coord());
        let (g1, g2) = sys.internal_group_element(r, t, u);
        let mut input = system_inputs(sys);
        input.extend([("r", r), ("t", t), ("u", u), ("pi", pi), ("rho", rho)]);
        let gb = match sys.pair_to_barycentric(&g1, &g2) {
            Ok(gb) => gb,
            Err(_) => return (f64::INFINITY, input),
        };
        let out = sys.barycentric_act(&gb, &BarycenterState::new(0.0, 0.0, pi, rho));
        let params = sys.params();
        let m = params.total_mass;
        let p_scale = (m * gb.v).abs() + (params.total_force * t).abs();
        let q_scale =
            (params.total_force * t * t / (2.0 * m)).abs() + gb.x.abs() + (gb.v * t).abs();
        (
            nan_max(scaled(out.p, p_scale), scaled(out.q, q_scale)),
            input,
        )
    })
}

/// Central differences along the closed-form flow reproduce
/// `p = m q'`, `p' = f`, `q'' = f/m`, `pi = mu rho'`, `pi' = phi` and
/// `rho'' = phi/mu`.
pub fn check_motion_equations(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    let params = sys.params();
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let t = smp.group_param();
        let h1 = tolerance::FD_STEP * t.abs().max(1.0);
        let h2 = tolerance::FD_STEP_SECOND * t.abs().max(1.0);
        let at = |s: f64| sys.evolve(&b, s).to_array();
        let (x0, xp, xm) = (at(t), at(t + h1), at(t - h1));
        let (x2p, x2m) = (at(t + h2), at(t - h2));

        let first = |i: usize| (xp[i] - xm[i]) / (2.0 * h1);
        let second = |i: usize| (x2p[i] - 2.0 * x0[i] + x2m[i]) / (h2 * h2);
        let magnitude = |i: usize| {
            x0[i]
                .abs()
                .max(xp[i].abs())
                .max(x2p[i].abs())
                .max(x2m[i].abs())
        };
        let cmp = |fd: f64, exact: f64, i: usize| scaled(fd - exact, exact.abs().max(magnitude(i)));

        let [p, _, pi, _] = x0;
        let residuals = [
            cmp(first(1), p / params.total_mass, 1),
            cmp(first(0), params.total_force, 0),
            cmp(second(1), params.cm_acceleration(), 1),
            cmp(first(3), pi / params.reduced_mass, 3),
            cmp(first(2), params.relative_force, 2),
            cmp(second(3), params.relative_acceleration(), 3),
        ];
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        input.push(("t", t));
        (residuals.into_iter().fold(0.0, nan_max), input)
    })
}

/// `J_E` is constant along the flow, relative to the size of its terms.
pub fn check_energy_conservation(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let t = smp.group_param();
        let e0 = sys.energy(&b);
        let e1 = sys.energy(&sys.evolve(&b, t));
        let scale =
            (e0.kinetic.abs() + e0.potential.abs()).max(e1.kinetic.abs() + e1.potential.abs());
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        input.push(("t", t));
        (scaled(e1.total() - e0.total(), scale), input)
    })
}

/// `evolve(evolve(b, t1), t2) = evolve(b, t1 + t2)`.
pub fn check_flow_composition(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let (t1, t2) = (smp.group_param(), smp.group_param());
        let lhs = sys.evolve(&sys.evolve(&b, t1), t2);
        let rhs = sys.evolve(&b, t1 + t2);
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        input.extend([("t1", t1), ("t2", t2)]);
        (rel_diff(&lhs.to_array(), &rhs.to_array()), input)
    })
}

/// `pi / mu = p1/m1 - p2/m2`.
pub fn check_relative_kinematics(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let s = sys.from_barycenter(&b);
        let (w1, w2) = (s.p1 / sys.m1(), s.p2 / sys.m2());
        let lhs = b.pi / sys.params().reduced_mass;
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        (
            scaled(lhs - (w1 - w2), w1.abs().max(w2.abs()).max(lhs.abs())),
            input,
        )
    })
}

/// With zero total force the total momentum is constant and the center of
/// mass advances by exactly `(p/m) dt`.
pub fn check_straight_line(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let b = smp.barycenter_state();
        let (t, dt) = (smp.group_param(), smp.group_param());
        let (b1, b2) = (sys.evolve(&b, t), sys.evolve(&b, t + dt));
        let advance = (b.p / sys.params().total_mass) * dt;
        let r = nan_max(
            scaled(b1.p - b.p, b.p),
            scaled(
                (b2.q - b1.q) - advance,
                b1.q.abs().max(b2.q.abs()).max(advance.abs()),
            ),
        );
        let mut input = system_inputs(sys);
        push_state(&mut input, BARY_NAMES, b.to_array());
        input.extend([("t", t), ("dt", dt)]);
        (r, input)
    })
}

/// For opposite forces `f1 = -f2` the relative force is `f1` itself.
///
/// Trial 0 uses `sys`; later trials draw masses and `f1` at random.
pub fn check_isolated_relative_force(sys: &TwoBodySystem, spec: &CheckSpec) -> CheckRecord {
    let mut first = true;
    run_check(spec, |smp| {
        let candidate = if core::mem::take(&mut first) {
            Ok(*sys)
        } else {
            let (m1, m2, f1) = (smp.mass(), smp.mass(), smp.force());
            TwoBodySystem::new(m1, m2, f1, -f1)
        };
        match candidate {
            Ok(s) => {
                let phi = s.params().relative_force;
                let r = nan_max((phi - s.f1()).abs(), (phi + s.f2()).abs());
                (r, system_inputs(&s))
            }
            Err(_) => (f64::INFINITY, Inputs::new()),
        }
    })
}

/// Every two-body check for one system. The isolated-only checks are
/// included when `sys` is isolated.
pub fn check_twobody_suite(
    sys: &TwoBodySystem,
    panel: &str,
    config: &RunConfig,
) -> Result<VerificationReport, Error> {
    let name = |check: &str| format!("twobody.{panel}.{check}");
    let mut report = VerificationReport {
        records: vec![
            check_barycenter_roundtrip(
                sys,
                &config.spec(&name("barycenter_roundtrip"), tolerance::EXACT)?,
            ),
            check_barycenter_canonical(
                sys,
                &config.spec(&name("barycenter_canonical"), tolerance::EXACT)?,
            ),
            check_product_action_symplectic(
                sys,
                &config.spec(&name("product_action_symplectic"), tolerance::EXACT)?,
            ),
            check_barycentric_action_symplectic(
                sys,
                &config.spec(&name("barycentric_action_symplectic"), tolerance::EXACT)?,
            ),
            check_conjugation(sys, &config.spec(&name("conjugation"), tolerance::ACTION)?),
            check_stabilizer(sys, &config.spec(&name("stabilizer"), tolerance::ACTION)?),
            check_motion_equations(
                sys,
                &config.spec(&name("motion_equations"), tolerance::FINITE_DIFFERENCE)?,
            ),
            check_energy_conservation(
                sys,
                &config.spec(&name("energy_conservation"), tolerance::ENERGY)?,
            ),
            check_flow_composition(
                sys,
                &config.spec(&name("flow_composition"), tolerance::ACTION)?,
            ),
            check_relative_kinematics(
                sys,
                &config.spec(&name("relative_kinematics"), tolerance::EXACT)?,
            ),
        ],
    };
    if sys.is_isolated() {
        report.push(check_straight_line(
            sys,
            &config.spec(&name("straight_line"), tolerance::EXACT)?,
        ));
        if sys.f1() == -sys.f2() {
            report.push(check_isolated_relative_force(
                sys,
                &config.spec(&name("relative_force_identity"), tolerance::EXACT)?,
            ));
        }
    }
    Ok(report)
}
