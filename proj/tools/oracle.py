#!/usr/bin/env python3
"""Independent high-precision reference values frozen into the unit tests.

Everything here is computed from first principles with mpmath (elliptic
functions, adaptive quadrature, numerical differentiation at 40 digits), without
touching the C++ code. Output goes into tests/oracle_values.hpp (names without the k prefix).
"""

from mpmath import mp, mpf, ellipk, ellipe, ellipfun, quad, diff, sqrt, sin, cos, tanh, sech, exp, pi

mp.dps = 40


def emit(name, v):
    print(f"inline constexpr double {name[1:]} = {mp.nstr(v, 20)};")


# Elliptic integrals and Jacobi functions, parameter m = k^2.
for tag, m in [("0", mpf(0)), ("01", mpf("0.1")), ("05", mpf("0.5")), ("09", mpf("0.9")), ("099", mpf("0.99")),
               ("1m8", 1 - mpf("1e-8"))]:
    emit(f"kK_m{tag}", ellipk(m))
    emit(f"kE_m{tag}", ellipe(m))
for tag, u, m in [("a", mpf("0.3"), mpf("0.5")), ("b", mpf("2.1"), mpf("0.9")), ("c", mpf("-1.7"), mpf("0.99"))]:
    emit(f"kSn_{tag}", ellipfun("sn", u, m=m))
    emit(f"kCn_{tag}", ellipfun("cn", u, m=m))
    emit(f"kDn_{tag}", ellipfun("dn", u, m=m))


class Profile:
    def __init__(self, a):
        a = mpf(a)
        self.a = a
        self.g = a * (1 + a)
        self.m = 1 - a**2 / (1 + a) ** 2
        self.K = ellipk(self.m)
        self.E = ellipe(self.m)
        self.tau = self.K / (1 + a)

    def x(self, t):
        return (1 + self.a) * ellipfun("dn", (1 + self.a) * t, m=self.m)

    def zp(self, t):
        return self.x(t) ** 2 - self.g

    def z(self, t):
        return quad(self.zp, [0, t])


for tag, a in [("m03", "-0.3"), ("m01", "-0.1"), ("p02", "0.2"), ("p1", "1.0")]:
    P = Profile(a)
    emit(f"kTau_{tag}", P.tau)
    emit(f"kH_{tag}", P.z(P.tau))
    for tt, t in [("a", mpf("0.37")), ("b", mpf("-2.2"))]:
        emit(f"kX_{tag}_{tt}", P.x(t))
        emit(f"kZ_{tag}_{tt}", P.z(t))
    emit(f"kArea_{tag}", 2 * pi * quad(lambda t: P.x(t) ** 2, [-P.tau, 0, P.tau]))
    # (1/3) integral of X . (X_t ^ X_th) over one period
    emit(f"kVolume_{tag}", 2 * pi / 3 * quad(lambda t: -P.x(t) ** 2 * P.zp(t) + P.z(t) * P.x(t) * diff(P.x, t),
                                          [-P.tau, 0, P.tau]))


def cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def dot(u, v):
    return sum(p * q for p, q in zip(u, v))


def mean_curvature(Y, t, th):
    d = lambda i, j: [diff(lambda s, r: Y(s, r)[c], (t, th), (i, j)) for c in range(3)]
    Yt, Yh, Ytt, Yth, Yhh = d(1, 0), d(0, 1), d(2, 0), d(1, 1), d(0, 2)
    n = cross(Yt, Yh)
    n = [c / sqrt(dot(n, n)) for c in n]
    E, F, G = dot(Yt, Yt), dot(Yt, Yh), dot(Yh, Yh)
    L, M, N = dot(Ytt, n), dot(Yth, n), dot(Yhh, n)
    return (E * N - 2 * F * M + G * L) / (2 * (E * G - F * F))


def torus(P, eps):
    def X(t, th):
        x, s = P.x(t), eps * P.z(t)
        v = [x * cos(th), 1 / eps + x * sin(th), mpf(0)]
        return [v[0], cos(s) * v[1] - sin(s) * v[2], sin(s) * v[1] + cos(s) * v[2]]
    return X


mp.dps = 30
P = Profile("0.2")
emit("kTorusMeanCurvature_p02", mean_curvature(torus(P, mpf("0.05")), mpf("0.4"), mpf("1.0")))


# Round torus (a = -1/2): closed-form z, so nested differentiation stays cheap.
class Round:
    a = mpf(-0.5)
    g = mpf(-0.25)

    def x(self, t):
        return mpf(0.5)

    def z(self, t):
        return t / 2


eps = mpf("0.1")
X = torus(Round(), eps)


def normal(t, th):
    Xt = [diff(lambda s: X(s, th)[c], t) for c in range(3)]
    Xh = [diff(lambda r: X(t, r)[c], th) for c in range(3)]
    n = cross(Xt, Xh)
    return [c / sqrt(dot(n, n)) for c in n]


def phi(t, th):
    return mpf("0.7") * exp(-(t - mpf("0.2")) ** 2) * cos(th + mpf("0.4")) + mpf("0.1")


def graph_M(s):
    Y = lambda t, th: [p + s * phi(t, th) * q for p, q in zip(X(t, th), normal(t, th))]
    return mean_curvature(Y, mpf("0.3"), mpf("0.8"))


mp.dps = 20
emit("kRoundTorusM0", graph_M(mpf(0)))
emit("kRoundTorusFirstVariation", diff(graph_M, 0, 1))
emit("kRoundTorusSecondVariation", diff(graph_M, 0, 2))

mp.dps = 40
g0 = lambda t: 4 * sech(t) ** 3 - 5 * sech(t) ** 5
emit("kRadialFactor", quad(lambda t: (1 - t * tanh(t)) * g0(t), [-mp.inf, 0, mp.inf]))
emit("kI1", quad(lambda t: sech(t) ** 2 * (1 - t * tanh(t)), [-mp.inf, 0, mp.inf]))
