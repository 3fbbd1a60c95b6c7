"""Smoke test for the python bindings: import, core tables, one probe."""

import math

import curvotex as cv


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    # Threshold table.
    approx(cv.b_n(4), 2.0 - math.sqrt(3.0), 1e-12)
    approx(cv.b_n(7), 0.0, 1e-12)
    approx(cv.b_n(10), -1.0 / 7.0, 1e-12)

    # Ring kinematics: the ring rotates rigidly at omega0.
    spec = cv.RingSpec()
    spec.n = 6
    spec.r0 = 1.2
    spec.lambda_ = 0.1
    ring = cv.make_ring(spec)
    w = cv.omega0(spec)
    vel = cv.velocities(ring)
    for z, v in zip(ring.positions, vel):
        assert abs(v - 1j * w * z) < 1e-10

    # Hessian shape and agreement at one point.
    h = cv.hessian_closed_form(spec)
    assert h.shape == (12, 12)
    hn = cv.hessian_numerical(spec)
    assert abs(h - hn).max() < 1e-7 * abs(h).max()

    # Classification.
    verdict = cv.classify(6, 0.2)
    assert verdict.classification == cv.StabilityClass.LinearlyUnstable
    assert 3 in verdict.failing_modes
    assert cv.classify(5, 0.0).classification == cv.StabilityClass.Stable

    # Heptagon probe: the degenerate point is nonlinearly stable.
    rep = cv.odd_probe(7)
    assert rep.verdict == cv.ProbeVerdict.StableDegenerate
    d = rep.odd_data
    approx(d.beta, 21.0 / (2.0 * math.pi), 1e-5)
    approx(d.gamma, 63.0 / (4.0 * math.pi), 1e-5)
    approx(d.delta, 1071.0 / (8.0 * math.pi), 1e-3)
    assert d.discriminant > 0.0

    # Short integration conserves the invariants.
    cfg = cv.VortexConfig()
    cfg.lambda_ = 0.2
    cfg.positions = [0.8 + 0.1j, -0.5 + 0.4j, 0.1 - 0.7j]
    cfg.vorticities = [1.0, 0.8, 0.6]
    traj = cv.integrate(cfg, 2.0, 0.01)
    assert not traj.aborted
    drift = max(abs(e - traj.energy[0]) for e in traj.energy)
    assert drift < 1e-10

    print("python smoke: ok")


if __name__ == "__main__":
    main()
