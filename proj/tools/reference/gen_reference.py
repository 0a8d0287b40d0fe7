#!/usr/bin/env python3
"""Generate extended-precision reference values for the C++ test suites.

Every value here is computed with mpmath at 50 significant digits, directly
from the defining expressions (sinh/coth for the exact cycle, the raw
high-temperature ratios for the optima).  Argmax values come from a dense
scan followed by golden-section refinement in mpmath, so they are independent
of the cubic-root closed forms used by the library.

Usage:
    python3 tools/reference/gen_reference.py > tests/fixtures/reference_values.hpp
"""

from mpmath import mp, mpf, sqrt, log, sinh, coth, nstr

mp.dps = 50


def fv(v):
    return sqrt(1 - v * v) * log((1 + v) / (1 - v)) / (2 * v)


def lam(sudden, wc, wh):
    return (wc * wc + wh * wh) / (2 * wc * wh) if sudden else mpf(1)


def corners(v, bc, bh, wc, wh, sudden_ab, sudden_cd):
    xp = bc * wc / 2 * sqrt((1 + v) / (1 - v))
    xm = bc * wc / 2 * sqrt((1 - v) / (1 + v))
    lr = log(sinh(xp) / sinh(xm))
    ha = sqrt(1 - v * v) / (2 * bc * v) * lr
    hb = wh * sqrt(1 - v * v) / (2 * wc * bc * v) * lam(sudden_ab, wc, wh) * lr
    hc = wh / 2 * coth(bh * wh / 2)
    hd = wc / 2 * lam(sudden_cd, wc, wh) * coth(bh * wh / 2)
    return ha, hb, hc, hd


def eta_sc(z, a):
    return (1 - z) * (2 * z**2 - a * (1 + z)) / (2 * z**2 - a * (z**2 + 1))


def eta_se(z, a):
    return (1 - z) * (z * (1 + z) - 2 * a) / (2 * (z - a))


def w_sc(z, a):
    return (1 - z) * (2 * z**2 - a * (1 + z)) / (2 * z**2)


def w_se(z, a):
    return (1 - z) * (z * (1 + z) - 2 * a) / (2 * z)


def qh_sc(z, a):
    return (2 * z**2 - a * (z**2 + 1)) / (2 * z**2)


def qh_se(z, a):
    return (z - a) / z


def lower_sc(a):
    return (a + sqrt(a * (a + 8))) / 4


def lower_se(a):
    return (sqrt(1 + 8 * a) - 1) / 2


def argmax(f, lo, hi, n=2000):
    best_i, best = None, None
    for i in range(1, n):
        z = lo + (hi - lo) * mpf(i) / n
        val = f(z)
        if best is None or val > best:
            best_i, best = i, val
    h = (hi - lo) / n
    a, b = lo + (best_i - 1) * h, lo + (best_i + 1) * h
    g = (sqrt(5) - 1) / 2
    for _ in range(220):
        c = b - g * (b - a)
        d = a + g * (b - a)
        if f(c) > f(d):
            b = d
        else:
            a = c
    return (a + b) / 2


def bisect(f, lo, hi):
    flo = f(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


out = []


def emit(name, value, comment=None):
    if comment:
        out.append(f"// {comment}")
    out.append(f"inline constexpr double {name} = {nstr(value, 20, min_fixed=-5, max_fixed=5)};")


half = mpf("0.5")

emit("kFv_0_5", fv(half), "f_v at selected velocities")
emit("kFv_0_95", fv(mpf("0.95")))
emit("kFv_1em4", fv(mpf("1e-4")))
emit("kFv_5em5", fv(mpf("5e-5")))
emit("kFv_0_9", fv(mpf("0.9")))

# Exact cycle at (v=0.5, beta_c=1, beta_h=0.5, omega_c=1, omega_h=2).
for tag, sab, scd in (("Sc", True, False), ("Se", False, True), ("Both", True, True), ("Adi", False, False)):
    ha, hb, hc, hd = corners(half, mpf(1), half, mpf(1), mpf(2), sab, scd)
    emit(f"kCorner{tag}_A", ha, f"corner energies, scenario {tag}")
    emit(f"kCorner{tag}_B", hb)
    emit(f"kCorner{tag}_C", hc)
    emit(f"kCorner{tag}_D", hd)
    emit(f"kCorner{tag}_Qh", hc - hb)
    emit(f"kCorner{tag}_Qc", ha - hd)
    emit(f"kCorner{tag}_W", hc - hb + ha - hd)

# Large beta_c*omega_c, v = 0.99: exact answer from the asymptotic identity.
ha, hb, hc, hd = corners(mpf("0.99"), mpf(500), mpf(1), mpf(1), mpf(2), True, False)
emit("kCornerCold_A", ha, "beta_c*omega_c = 500, v = 0.99, sudden compression")
emit("kCornerCold_B", hb)

a = half * fv(half)
emit("kTauFv_0_5_0_5", a, "tau = v = 0.5")
emit("kZStarEtaSc", argmax(lambda z: eta_sc(z, a), lower_sc(a), mpf(1)), "argmax of the SC efficiency")
emit("kEtaMaxSc", eta_sc(argmax(lambda z: eta_sc(z, a), lower_sc(a), mpf(1)), a))
zse = argmax(lambda z: eta_se(z, a), lower_se(a), mpf(1))
emit("kZStarEtaSe", zse, "argmax of the SE efficiency")
emit("kEtaMaxSe", eta_se(zse, a))
emit("kZStarWork", a ** (mpf(1) / 3), "maximum-work ratio (tau f_v)^(1/3)")
emit("kZStarWorkScOracle", argmax(lambda z: w_sc(z, a), lower_sc(a), mpf(1)))
emit("kZStarWorkSeOracle", argmax(lambda z: w_se(z, a), lower_se(a), mpf(1)))
emit("kEtaMwSc", eta_sc(a ** (mpf(1) / 3), a))
emit("kEtaMwSe", eta_se(a ** (mpf(1) / 3), a))
emit("kWorkCrossing", bisect(lambda z: w_sc(z, a) - w_se(z, a), mpf("0.62"), mpf("0.99")),
     "root of work_sc - work_se")
emit("kSeLowerBound", bisect(lambda z: w_se(z, a), mpf("0.1"), mpf("0.99")), "root of work_se")
emit("kScLowerBound", lower_sc(a))

em_sc = eta_sc(argmax(lambda z: eta_sc(z, a), lower_sc(a), mpf(1)), a)
z_om_sc = argmax(lambda z: 2 * w_sc(z, a) - em_sc * qh_sc(z, a), lower_sc(a), mpf(1))
emit("kZStarOmegaSc", z_om_sc, "argmax of 2W - eta_max Q_h")
emit("kOmegaMaxSc", 2 * w_sc(z_om_sc, a) - em_sc * qh_sc(z_om_sc, a))
emit("kEtaOmegaSc", eta_sc(z_om_sc, a))
z_om_se = argmax(lambda z: 2 * w_se(z, a) - eta_se(zse, a) * qh_se(z, a), lower_se(a), mpf(1))
emit("kZStarOmegaSe", z_om_se)
emit("kEtaOmegaSe", eta_se(z_om_se, a))

a2 = mpf("0.3") * fv(mpf("0.75"))
emit("kZStarEtaSc_0_3_0_75", argmax(lambda z: eta_sc(z, a2), lower_sc(a2), mpf(1)), "tau = 0.3, v = 0.75")
emit("kZStarEtaSe_0_3_0_75", argmax(lambda z: eta_se(z, a2), lower_se(a2), mpf(1)))

# HT operations at two reference points (beta_h = 1).
for tag, z in (("0_726", mpf("0.726")), ("0_7", mpf("0.7"))):
    emit(f"kQhSc_{tag}", qh_sc(z, a), f"high-temperature values at z = {z}, tau = v = 0.5")
    emit(f"kWorkSc_{tag}", w_sc(z, a))
    emit(f"kQhSe_{tag}", qh_se(z, a))
    emit(f"kWorkSe_{tag}", w_se(z, a))

# Non-relativistic limit of the SC max-work efficiency: f_v -> 1.
emit("kEtaMwScNonRel", eta_sc(half ** (mpf(1) / 3), half), "v -> 0, tau = 0.5")
emit("kEtaMwSeNonRel", eta_se(half ** (mpf(1) / 3), half))

print("// Generated by tools/reference/gen_reference.py (mpmath, 50 digits). Do not edit.")
print("#pragma once")
print()
print("namespace otto::reference {")
print()
print("\n".join(out))
print()
print("}  // namespace otto::reference")
