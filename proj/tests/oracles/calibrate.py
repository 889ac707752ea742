#!/usr/bin/env python3
# Copyright 2026 The pwclock Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent calibration sweeps for the constants frozen in
tests/calibrated_constants.hpp. Uses scipy root finding and quadrature only;
shares no code with the C++ library."""

import numpy as np
from scipy import integrate, optimize


def mean_x(n, A, r, w):
    Om = np.sqrt(w * w - r * r / 4)
    return A * np.exp(-r * n / 2) * np.cos(Om * n)


def n_exact(x, A, r, w, hi):
    return optimize.brentq(lambda n: mean_x(n, A, r, w) - x, 0.0, hi,
                           xtol=1e-15, rtol=1e-15)


def slope(xs, ys):
    return np.polyfit(np.log(xs), np.log(ys), 1)[0]


def linear_map_sweep():
    r, w, A = 0.5, 1.0, 1.0
    rns = np.logspace(-3, -1, 21)
    rel = []
    for rn in rns:
        n = rn / r
        x = mean_x(n, A, r, w)
        ne = n_exact(x, A, r, w, 1.0 / r)
        nl = 2 * (A - x) / (r * A)
        rel.append(abs(nl - ne) / ne)
    rel = np.array(rel)
    print("linear map: slope=%.6f  max(rel/rn)=%.6f  rel/rn@0.1=%.6f"
          % (slope(rns, rel), (rel / rns).max(), rel[-1] / rns[-1]))
    # report ratio between rn=0.1 and rn=0.5
    e = {}
    for rn in (0.1, 0.5):
        n = rn / r
        x = mean_x(n, A, r, w)
        ne = n_exact(x, A, r, w, 1.0 / r)
        nl = 2 * (A - x) / (r * A)
        nlog = (2 / r) * np.log(A / x)
        e[rn] = abs(nl - ne) / ne
        print("  rn=%.2f rel_lin=%.6e |nlog-n|=%.3e |nlin-n|=%.3e"
              % (rn, e[rn], abs(nlog - ne), abs(nl - ne)))
    print("  growth ratio 0.5/0.1 = %.4f (O(rn) predicts 5)" % (e[0.5] / e[0.1]))


def wf_density(x, n, m, w, r, A, hbar=1.0):
    mu = mean_x(n, A, r, w)
    var = hbar * np.exp(-r * n) / (2 * m * w)
    return np.exp(-(x - mu) ** 2 / (2 * var)) / np.sqrt(2 * np.pi * var)


def ideal_limit():
    r, w, A, nres, win = 0.1, 1.0, 1.0, 1.5, 0.05
    n0 = 0.5
    x = mean_x(n0, A, r, w)
    up = min(nres, 1 / r)

    def frac(mw):
        m = mw / w
        f = lambda n: wf_density(x, n, m, w, r, A)
        tot = integrate.quad(f, 0, up, points=[n0], limit=500, epsabs=0, epsrel=1e-12)[0]
        ins = integrate.quad(f, n0 - win, n0 + win, limit=500, epsabs=0, epsrel=1e-12)[0]
        return ins / tot
    for mw in (10, 1e2, 1e3, 1e4):
        print("ideal limit mw=%g frac=%.8f" % (mw, frac(mw)))
    cross = optimize.brentq(lambda lmw: frac(10 ** lmw) - 0.99, 2, 4.5, xtol=1e-10)
    print("  0.99 crossing at m*omega = %.6g" % 10 ** cross)


def fidelity_sweep():
    # qubit H = diag(1/2,-1/2), psi=(1,1)/sqrt2; fidelity = cos^2(dn/2)
    n = 1.0
    rns = np.logspace(-3, -1, 21)
    inf = []
    for rn in rns:
        r = rn / n
        w = 2 * r
        A = 1.0
        x = mean_x(n, A, r, w)
        nl = 2 * (A - x) / (r * A)
        inf.append(np.sin((nl - n) / 2) ** 2)
    inf = np.array(inf)
    hn = 0.5  # spectral norm of H_S
    c = (inf / (rns ** 2 * hn ** 2 * n ** 2)).max()
    print("fidelity (fixed n=1, r=w/2): slope=%.6f  c_max=%.6f" % (slope(rns, inf), c))
    # compare_evolutions default: w=1, r=1/n_reset
    for nres in (2.0, 4.0, 10.0):
        r = 1 / nres
        worst = 1.0
        for n in np.linspace(0, nres, 64, endpoint=False):
            x = mean_x(n, 1.0, r, 1.0)
            nl = 2 * (1.0 - x) / r
            worst = min(worst, np.cos((nl - n) / 2) ** 2)
        print("  compare default w=1 n_reset=%g r=%g grid64 worst=%.6f" % (nres, r, worst))


def oracle_equivalence():
    # narrow clock: m*w = 1e4, w=1, r=0.1, n_reset=1.5, A=1
    hbar, w, r, A, nres = 1.0, 1.0, 0.1, 1.0, 1.5
    m = 1e4
    for n0 in (0.3, 0.5, 1.0):
        x = mean_x(n0, A, r, w)
        for K in (2048, 4096):
            up = min(nres, 1 / r)
            ns = np.linspace(0, up, K)
            wts = np.full(K, up / (K - 1)); wts[0] /= 2; wts[-1] /= 2
            var = hbar * np.exp(-r * ns) / (2 * m * w)
            mu = mean_x(ns, A, r, w)
            amp = (2 * np.pi * var) ** -0.25 * np.exp(-(x - mu) ** 2 / (4 * var))
            s0 = np.exp(0.5j * ns) / np.sqrt(2)
            s1 = np.exp(-0.5j * ns) / np.sqrt(2)
            v0 = np.sum(wts * amp * s0); v1 = np.sum(wts * amp * s1)
            D = abs(v0) ** 2 + abs(v1) ** 2
            p0 = abs(v0) ** 2 / D
            ne = n_exact(x, A, r, w, nres)
            ex = abs(np.exp(0.5j * ne) + np.exp(-0.5j * ne)) ** 2 / 4  # projector |+>
            # basis projector |0><0| gives 0.5 trivially for this psi; use |+> too
            vp = (v0 + v1) / np.sqrt(2)
            pp = abs(vp) ** 2 / D
            print("oracle n0=%.2f K=%d p0=%.12f (exact 0.5) p+=%.12f exact=%.12f diff=%.3e"
                  % (n0, K, p0, pp, ex, abs(pp - ex)))


if __name__ == "__main__":
    linear_map_sweep()
    ideal_limit()
    fidelity_sweep()
    oracle_equivalence()
