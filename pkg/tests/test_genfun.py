import math

import numpy as np
import pytest
from scipy import integrate

from causalew import genfun as G
from causalew.worldline import Worldline

SWEEP = G.eps_sweep(0.1, 6)
BUMP = G.TestFunction("bump", radius=1.0)


@pytest.mark.parametrize("name", ["poly", "poly_m2", "bump"])
def test_mollifier_unit_integral_and_support(name):
    m = G.mollifier(name)
    total, _ = integrate.quad(m.rho, 0, 1, epsabs=0, epsrel=1e-13)
    assert abs(total - 1) <= 1e-12
    assert m.rho(-0.1) == 0 and m.rho(1.2) == 0
    assert m.cdf(0.0) == 0 and m.cdf(1.0) == pytest.approx(1.0, abs=1e-13) and m.cdf(3.0) == 1.0
    # cdf' = rho and rho' = drho
    u = np.linspace(0.05, 0.95, 7)
    h = 1e-5
    assert np.allclose((m.cdf(u + h) - m.cdf(u - h)) / (2 * h), m.rho(u), atol=1e-7)
    assert np.allclose((m.rho(u + h) - m.rho(u - h)) / (2 * h), m.drho(u), rtol=1e-6, atol=1e-6)


def test_moment_vanishing():
    m = G.mollifier("poly_m2").moments(3)
    assert m[0] == pytest.approx(1, abs=1e-12)
    assert abs(m[1]) < 1e-12 and abs(m[2]) < 1e-12
    assert G.mollifier("poly_m2").moment_order == 2
    assert G.mollifier("poly").moment_order == 0


def test_mollifier_c2_at_endpoints():
    m = G.mollifier("poly")
    for u in (0.0, 1.0):
        assert abs(m.rho(u)) < 1e-14 and abs(m.drho(u)) < 1e-14


def test_unknown_mollifier():
    with pytest.raises(KeyError):
        G.mollifier("gauss")


def test_regularized_kinds():
    ups = G.RegularizedGenFunc("Upsilon")
    assert ups(0.0, 0.1) == 0.0 and ups(0.5, 0.1) == 1.0
    d = G.RegularizedGenFunc("delta")
    total, _ = integrate.quad(lambda x: d(x, 0.01), 0, 0.01, epsrel=1e-12)
    assert total == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        G.RegularizedGenFunc("theta")


def test_delta_against_T_over_xi2():
    r = G.pair_radial(G.RegularizedGenFunc("delta"), BUMP.with_n(2), SWEEP)
    assert r.extrapolated == pytest.approx(1.0, abs=1e-8)
    assert r.converged
    assert r.rate == pytest.approx(2.0, abs=0.05)


@pytest.mark.parametrize("name", ["poly", "bump", "poly_m2"])
def test_delta_limit_profile_independent(name):
    g = G.RegularizedGenFunc("delta", G.mollifier(name))
    r = G.pair_radial(g, BUMP.with_n(2), SWEEP)
    assert r.extrapolated == pytest.approx(1.0, abs=1e-7)


def test_delta_against_T_vanishes_quadratically():
    r = G.pair_radial(G.RegularizedGenFunc("delta"), BUMP, SWEEP)
    assert abs(r.extrapolated) < 1e-10
    assert r.rate >= 1.95
    assert r.converged


def test_moment2_mollifier_converges_faster():
    # first correction for T/xi^2 comes from the second moment times T''(0)
    g0 = G.pair_radial(G.RegularizedGenFunc("delta", G.mollifier("poly")), BUMP.with_n(2), SWEEP)
    g2 = G.pair_radial(G.RegularizedGenFunc("delta", G.mollifier("poly_m2")), BUMP.with_n(2), SWEEP)
    assert g2.rate > 3.5 and g0.rate < 2.5


def test_one_over_xi_against_direct_quadrature():
    r = G.pair_radial(G.RegularizedGenFunc("one_over_xi"), BUMP, SWEEP)
    direct, _ = integrate.quad(lambda x: BUMP.T(x) * x, 0, 1, epsrel=1e-12)
    assert r.extrapolated == pytest.approx(direct, rel=1e-9)


def test_pair_radial_linear():
    eps = [0.05]
    a, b = 2.5, -0.7
    d = G.RegularizedGenFunc("delta")
    f1, f2 = BUMP, G.TestFunction("bump", radius=0.5)
    comb = G.TestFunction("custom", func=lambda x: a * f1.T(x) + b * f2.T(x), support_max=1.0)
    lhs = G.pair_radial(d, comb, eps + [0.025, 0.0125]).samples[0][1]
    rhs = a * G.pair_radial(d, f1, eps + [0.025, 0.0125]).samples[0][1] \
        + b * G.pair_radial(d, f2, eps + [0.025, 0.0125]).samples[0][1]
    assert lhs == pytest.approx(rhs, rel=1e-9)
    ups = G.RegularizedGenFunc("Upsilon")
    mix = G.RegularizedGenFunc("custom", func=lambda x, e: a * d(x, e) + b * ups(x, e))
    # custom kinds are treated as non-compact: integrate over the whole support
    lhs = G.pair_radial(mix, BUMP, [0.05, 0.025, 0.0125]).samples[0][1]
    rhs = a * G.pair_radial(d, BUMP, [0.05, 0.025, 0.0125]).samples[0][1] \
        + b * G.pair_radial(ups, BUMP, [0.05, 0.025, 0.0125]).samples[0][1]
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_pair_radial_rejects_bad_sweep():
    with pytest.raises(ValueError):
        G.pair_radial(G.RegularizedGenFunc("delta"), BUMP, [0.1, 0.2, 0.05])
    with pytest.raises(ValueError):
        G.pair_radial(G.RegularizedGenFunc("delta"), BUMP, [0.1, -0.2, -0.3])


def test_richardson_known_series():
    h = [0.1 * 0.5 ** k for k in range(6)]
    v = [3.0 + 2 * x ** 2 - 5 * x ** 4 + x ** 6 for x in h]
    lim, err, rate = G.richardson(h, v)
    assert lim == pytest.approx(3.0, abs=1e-14)
    assert rate == pytest.approx(2.0, abs=1e-2)
    with pytest.raises(ValueError):
        G.richardson([0.1, 0.05, 0.02], [1, 2, 3])


def test_converged_flag_catches_oscillation():
    g = G.RegularizedGenFunc("custom", func=lambda x, e: np.where(x < e, (1 + (-1) ** round(-math.log2(e))) / e, 0.0))
    r = G.pair_radial(g, BUMP.with_n(2), SWEEP)
    assert not r.converged


# --- Coulomb generating function -------------------------------------------

def test_coulomb_identity_and_limit():
    recs = {r["check"]: r for r in G.coulomb_generating_check(G.eps_sweep(0.1, 6), BUMP)}
    assert recs["coulomb-identity"]["pass"]
    assert recs["coulomb-limit"]["pass"]
    assert recs["coulomb-limit"]["decay_order"] == pytest.approx(2.0, abs=0.05)
    assert recs["coulomb-log-variant"]["expected"] is None
    assert all(b == 0 for b in recs["coulomb-identity"]["boundary_terms"])
    for r in recs.values():
        assert {"check", "parameters", "samples", "extrapolated", "expected", "tolerance", "pass"} <= set(r)


def test_coulomb_at_small_cutoff():
    (ident, _, _) = G.coulomb_generating_check([1e-3 * 0.5 ** k for k in range(3)], BUMP)
    assert ident["extrapolated"] <= 1e-6 * BUMP.sup_norm()


def test_coulomb_shell_test_function_exact():
    T = G.TestFunction("shell", radius=0.3, center=1.0)
    recs = G.coulomb_generating_check([0.5, 0.25, 0.125], T)
    limit = recs[1]
    assert max(abs(v) for _, v in limit["samples"]) < 1e-12
    assert max(abs(v) for _, v in recs[0]["samples"]) < 1e-12


def test_coulomb_rejects_bad_cutoffs():
    with pytest.raises(ValueError):
        G.coulomb_generating_check([0.1, 0.2], BUMP)


# --- delta-shell pairings ----------------------------------------------------

def test_sphere_rule_exactness():
    nodes, w = G.sphere_rule(32, 64)
    assert w.sum() == pytest.approx(1.0, abs=1e-14)
    assert np.allclose(w @ nodes, 0, atol=1e-15)
    assert np.allclose((w[:, None, None] * nodes[:, :, None] * nodes[:, None, :]).sum(0), np.eye(3) / 3, atol=1e-14)


def _dblquad_average(f):
    val, _ = integrate.dblquad(lambda th, ph: f(th, ph) * math.sin(th), 0, 2 * math.pi, 0, math.pi,
                               epsabs=1e-13, epsrel=1e-12)
    return val / (4 * math.pi)


@pytest.mark.parametrize("w,tau", [(Worldline.uniform((0.5, 0.2, 0.0)), 0.0),
                                   (Worldline.hyperbolic(0.8), 0.6),
                                   (Worldline.circular(1.0, 0.6), 1.0)])
def test_angular_average_vs_dblquad(w, tau):
    _, U, A, _ = w.derivatives(tau)
    nodes, wts = G.sphere_rule()
    K = G.null_directions(U, nodes)
    kappa = A[0] * K[:, 0] - K[:, 1:] @ A[1:]
    # K for each direction through an explicit boost matrix
    g = U[0]
    b = U[1:] / g
    L = np.eye(4)
    L[0, 0] = g
    L[0, 1:] = L[1:, 0] = g * b
    if b @ b > 0:
        L[1:, 1:] += (g - 1) * np.outer(b, b) / (b @ b)

    def Kdir(th, ph):
        return L @ np.array([1.0, math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)])

    for c in range(4):
        ref = _dblquad_average(lambda th, ph: Kdir(th, ph)[c])
        assert wts @ K[:, c] == pytest.approx(ref, abs=1e-11)
        assert wts @ K[:, c] == pytest.approx(U[c], abs=1e-12)
        ref_k = _dblquad_average(lambda th, ph: (A[0] * Kdir(th, ph)[0] - Kdir(th, ph)[1:] @ A[1:]) * Kdir(th, ph)[c])
        assert wts @ (kappa * K[:, c]) == pytest.approx(ref_k, abs=1e-10)


def test_shell_pairings_rest_frame():
    recs = G.check_shell_pairings(Worldline.rest(), [0.0], BUMP)
    n0, n2 = recs
    assert n0["pass"] and max(abs(v) for v in n0["extrapolated"]) <= 1e-6
    assert n0["observed_order"] >= 1.95
    assert n2["pass"]
    assert n2["extrapolated"][0] == pytest.approx(1.5, rel=1e-4)
    assert max(abs(v) for v in n2["extrapolated"][1:]) < 1e-12


def test_shell_pairings_charge_scaling():
    n2 = G.check_shell_pairings(Worldline.rest(), [0.0], BUMP, e=-2.0)[1]
    assert n2["extrapolated"][0] == pytest.approx(-3.0, rel=1e-8)


def test_shell_pairings_accelerated():
    # the xi kappa term carries an extra factor xi delta and drops out in the limit
    w = Worldline.hyperbolic(1.0)
    n0, n2 = G.check_shell_pairings(w, [0.3], BUMP)
    _, U, _, _ = w.derivatives(0.3)
    assert n0["pass"] and n2["pass"]
    assert np.allclose(n2["extrapolated"], 1.5 * U, rtol=1e-8, atol=1e-10)


def test_shell_pairings_schwartz_mode_agrees():
    a = G.check_shell_pairings(Worldline.hyperbolic(1.0), [0.3], BUMP, mode="schwartz")[1]
    b = G.check_shell_pairings(Worldline.hyperbolic(1.0), [0.3], BUMP, mode="associative")[1]
    assert np.allclose(a["extrapolated"], b["extrapolated"], rtol=1e-8)


def test_shell_pairings_strict_mode_reports_structure():
    recs = G.check_shell_pairings(Worldline.rest(), [0.0], BUMP, mode="strict")
    # strict mode keeps delta' terms; they are paired radially as well
    assert recs[1]["pass"]


# --- Fourier ---------------------------------------------------------------

@pytest.mark.parametrize("damping", ["exp", "gauss"])
def test_fourier_identities(damping):
    recs = G.fourier_checks([0.5, 1, 2, 5], damping=damping)
    assert all(r["pass"] for r in recs)
    for r in recs:
        if r["check"] == "fourier-1/xi":
            assert r["extrapolated"] == pytest.approx(1 / r["parameters"]["q"] ** 2, rel=1e-6)
        else:
            assert r["extrapolated"] == pytest.approx(1.0, abs=1e-6)


def test_fourier_scaling_collapse():
    recs = G.fourier_checks([50.0, 200.0])
    for r in recs:
        if r["check"] == "fourier-1/xi":
            assert r["q2_times_value"] == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("name", ["bump", "poly_m2"])
def test_fourier_delta_mollifier_independent(name):
    recs = G.fourier_checks([1.0, 2.0], moll_name=name)
    assert all(r["pass"] for r in recs)


def test_fourier_rejects_nonpositive_q():
    with pytest.raises(ValueError):
        G.fourier_checks([0.0])
