use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::sampling::RandomOrbit;
use super::{
    fixed_casimir_label, nan_max, rel_diff, run_check, scaled, sup_norm, symplectic_defect,
    tolerance, CheckRecord, CheckSpec, Inputs, Interval, RunConfig, VerificationReport,
};
use crate::error::Error;
use crate::group::{Generator, GroupElement};
use crate::orbits::{CoadjointOrbit, OrbitKind, PhaseCoordinates, TangentVector};

fn orbit_inputs<O: RandomOrbit>(orbit: &O, s: O::State) -> Inputs {
    let mut input: Inputs = orbit.describe().into_iter().collect();
    let names = <O::State as PhaseCoordinates>::NAMES;
    let values = s.to_array();
    input.push((names[0], values[0]));
    input.push((names[1], values[1]));
    input
}

fn push_group(input: &mut Inputs, g: &GroupElement) {
    input.extend([("x", g.x), ("t", g.t), ("v", g.v)]);
}

fn basis(i: usize) -> [f64; 2] {
    let mut e = [0.0; 2];
    e[i] = 1.0;
    e
}

/// Matrix of the symplectic form in the orbit chart.
fn form_matrix<O: CoadjointOrbit>(orbit: &O) -> [[f64; 2]; 2] {
    let mut w = [[0.0; 2]; 2];
    for (i, row) in w.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let [a, b] = basis(i);
            let [c, d] = basis(j);
            *entry = orbit.pairing(TangentVector::new(a, b), TangentVector::new(c, d));
        }
    }
    w
}

/// `act(g h, s) = act(g, act(h, s))`.
pub fn check_action_homomorphism<O: RandomOrbit>(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s: O::State = smp.orbit_state();
        let (g, h) = (smp.group_element(), smp.group_element());
        let lhs = orbit.act(&g.compose(&h), s);
        let rhs = orbit.act(&g, orbit.act(&h, s));
        let mut input = orbit_inputs(&orbit, s);
        push_group(&mut input, &g);
        input.extend([("h.x", h.x), ("h.t", h.t), ("h.v", h.v)]);
        (rel_diff(&lhs.to_array(), &rhs.to_array()), input)
    })
}

/// The linear part `A` of the (affine) action satisfies `A^T W A = W`.
///
/// `A` is read off from images of `s0 + e_i` minus the image of `s0`; the
/// residual is scaled by the size of the image of `s0`, which bounds the
/// round-off of that subtraction.
pub fn check_action_symplectic<O: RandomOrbit>(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s0: O::State = smp.orbit_state();
        let g = smp.group_element();
        let base = orbit.act(&g, s0).to_array();
        let x0 = s0.to_array();
        let mut a = [[0.0; 2]; 2];
        for j in 0..2 {
            let mut xj = x0;
            xj[j] += 1.0;
            let img = orbit.act(&g, O::State::from_array(xj)).to_array();
            for i in 0..2 {
                a[i][j] = img[i] - base[i];
            }
        }
        let w = form_matrix(&orbit);
        let w_scale = w.iter().flatten().map(|x| x.abs()).fold(0.0, f64::max);
        let defect = symplectic_defect(&a, &w) / w_scale.max(1.0);
        let mut input = orbit_inputs(&orbit, s0);
        push_group(&mut input, &g);
        (scaled(defect, sup_norm(&base).max(sup_norm(&x0))), input)
    })
}

/// `rho(X)(s) = -(d/ds)|_0 act(exp(sX), s)`, by central differences.
pub fn check_flow_generator<O: RandomOrbit>(generator: Generator, spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s: O::State = smp.orbit_state();
        let h = tolerance::FD_STEP * sup_norm(&s.to_array()).max(1.0);
        let plus = orbit.act(&GroupElement::exp(generator, h), s).to_array();
        let minus = orbit.act(&GroupElement::exp(generator, -h), s).to_array();
        let field = orbit.hamiltonian_field(generator, s).components;
        let r = (0..2)
            .map(|i| {
                let fd = -(plus[i] - minus[i]) / (2.0 * h);
                scaled(fd - field[i], field[i])
            })
            .fold(0.0, nan_max);
        (r, orbit_inputs(&orbit, s))
    })
}

/// `dJ_X = rho(X) _| sigma`: finite-difference gradient of the momentum
/// component against the contraction of the Hamiltonian field.
pub fn check_momentum_gradient<O: RandomOrbit>(
    generator: Generator,
    spec: &CheckSpec,
) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s: O::State = smp.orbit_state();
        let x = s.to_array();
        let covector = orbit.contraction(orbit.hamiltonian_field(generator, s));
        let mut r = 0.0_f64;
        for j in 0..2 {
            let h = tolerance::FD_STEP * x[j].abs().max(1.0);
            let (mut xp, mut xm) = (x, x);
            xp[j] += h;
            xm[j] -= h;
            let jp = orbit
                .momentum(O::State::from_array(xp))
                .component(generator);
            let jm = orbit
                .momentum(O::State::from_array(xm))
                .component(generator);
            let grad = (jp - jm) / (2.0 * h);
            r = nan_max(r, scaled(grad - covector[j], covector[j]));
        }
        (r, orbit_inputs(&orbit, s))
    })
}

/// The Casimir of the momentum equals the orbit label before and after a
/// random group action.
pub fn check_casimir_invariance<O: RandomOrbit>(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s: O::State = smp.orbit_state();
        let g = smp.group_element();
        let j0 = orbit.momentum(s);
        let j1 = orbit.momentum(orbit.act(&g, s));
        let (c0, c1, label) = (orbit.casimir(&j0), orbit.casimir(&j1), orbit.label());
        let scale = orbit
            .casimir_scale(&j0)
            .max(orbit.casimir_scale(&j1))
            .max(label.abs());
        let err = nan_max(
            (c1 - c0).abs(),
            nan_max((c1 - label).abs(), (c0 - label).abs()),
        );
        let mut input = orbit_inputs(&orbit, s);
        push_group(&mut input, &g);
        (scaled(err, scale), input)
    })
}

/// Momentum components left unchanged by single generators: `J_P` under
/// space translations, `J_K` under boosts, and on the massive orbits `J_E`
/// under time translations.
pub fn check_component_invariance<O: RandomOrbit>(spec: &CheckSpec) -> CheckRecord {
    run_check(spec, |smp| {
        let orbit = O::sample(smp);
        let s: O::State = smp.orbit_state();
        let a = smp.group_param();
        let j0 = orbit.momentum(s);
        let moved = |gen| orbit.momentum(orbit.act(&GroupElement::exp(gen, a), s));

        let jp = moved(Generator::SpaceTranslation).j_p;
        let jk = moved(Generator::Boost).j_k;
        let mut r = nan_max(scaled(jp - j0.j_p, j0.j_p), scaled(jk - j0.j_k, j0.j_k));
        if O::KIND != OrbitKind::Spacetime {
            let j1 = moved(Generator::TimeTranslation);
            let scale = orbit.casimir_scale(&j0).max(orbit.casimir_scale(&j1));
            r = nan_max(r, scaled(j1.j_e - j0.j_e, scale));
        }
        let mut input = orbit_inputs(&orbit, s);
        input.push(("a", a));
        (r, input)
    })
}

pub(super) fn suite<O: RandomOrbit>(config: &RunConfig) -> Result<VerificationReport, Error> {
    let kind = O::KIND.name();
    let name = |check: &str| format!("orbit.{kind}.{check}");
    let mut records: Vec<CheckRecord> = vec![
        check_action_homomorphism::<O>(
            &config.spec(&name("action_homomorphism"), tolerance::ACTION)?,
        ),
        check_action_symplectic::<O>(&config.spec(&name("action_symplectic"), tolerance::EXACT)?),
    ];
    for gen in Generator::ALL {
        let n = name(&format!("flow_generator.{}", gen.symbol()));
        records.push(check_flow_generator::<O>(
            gen,
            &config.spec(&n, tolerance::FINITE_DIFFERENCE)?,
        ));
    }
    for gen in Generator::ALL {
        let n = name(&format!("momentum_gradient.{}", gen.symbol()));
        records.push(check_momentum_gradient::<O>(
            gen,
            &config.spec(&n, tolerance::FINITE_DIFFERENCE)?,
        ));
    }
    records.push(check_casimir_invariance::<O>(
        &config.spec(&name("casimir_invariance"), tolerance::CASIMIR)?,
    ));
    let fixed = super::Ranges {
        label: Interval::point(fixed_casimir_label(O::KIND)),
        ..Default::default()
    };
    records.push(check_casimir_invariance::<O>(&config.spec_with_ranges(
        &name("casimir_fixed_label"),
        tolerance::CASIMIR,
        fixed,
    )?));
    records.push(check_component_invariance::<O>(
        &config.spec(&name("component_invariance"), tolerance::EXACT)?,
    ));
    Ok(VerificationReport { records })
}
