"""High-precision reference values frozen into the Rust test suite.

Run with `python3 reference_values.py`; every number below is computed with
mpmath at 40 significant digits, independently of the Rust code paths.
"""
from mpmath import mp, mpf, quad, gamma, rf, factorial, exp, beta, inf, nsum

mp.dps = 40


def ext_beta(x, y, p, q):
    f = lambda t: t ** (x - 1) * (1 - t) ** (y - 1) * exp(-p / t - q / (1 - t))
    return quad(f, [0, mpf(1) / 4, mpf(1) / 2, mpf(3) / 4, 1])


def beta_p(x, y, p):
    f = lambda t: t ** (x - 1) * (1 - t) ** (y - 1) * exp(-p / (t * (1 - t)))
    return quad(f, [0, mpf(1) / 4, mpf(1) / 2, mpf(3) / 4, 1])


def prabhakar(a, b, g, z, terms=250):
    return sum(rf(g, n) * mpf(z) ** n / (gamma(a * n + b) * factorial(n)) for n in range(terms))


def shukla(a, b, d, k, z, terms=400):
    return sum(rf(d, n * k) * mpf(z) ** n / (gamma(a * n + b) * factorial(n)) for n in range(terms))


def ext_ml_pq(a, b, g, c, p, q, z, terms=80):
    B = beta(g, c - g)
    s = mpf(0)
    for n in range(terms):
        s += ext_beta(g + n, c - g, p, q) / B * rf(c, n) * mpf(z) ** n / (gamma(a * n + b) * factorial(n))
    return s


def ext_ml_p(a, b, g, c, p, z, terms=80):
    B = beta(g, c - g)
    s = mpf(0)
    for n in range(terms):
        s += beta_p(g + n, c - g, p) / B * rf(c, n) * mpf(z) ** n / (gamma(a * n + b) * factorial(n))
    return s


def wright(upper, lower, z, terms=200):
    s = mpf(0)
    for n in range(terms):
        num = mpf(1)
        for a, m in upper:
            num *= gamma(a + m * n)
        den = mpf(1)
        for b, l in lower:
            den *= gamma(b + l * n)
        s += num / den * mpf(z) ** n / factorial(n)
    return s


def rl_ext_pq(f, lam, x, p, q):
    nu = -lam
    g = lambda t: f(t) * (x - t) ** (nu - 1) * exp(-p * x / t - q * x / (x - t))
    return quad(g, [0, x / 2, x]) / gamma(nu)


def rl_ext_p(f, lam, x, p):
    nu = -lam
    g = lambda t: f(t) * (x - t) ** (nu - 1) * exp(-p * x * x / (t * (x - t)))
    return quad(g, [0, x / 2, x]) / gamma(nu)


def mellin_closed(a, b, g, c, s, r, z):
    pre = gamma(s) * gamma(r) * gamma(c + r - g) / (gamma(g) * gamma(c - g))
    return pre * wright([(c, 1), (g + s, 1)], [(b, a), (c + s + r, 1)], z)


if __name__ == "__main__":
    out = {}
    out["quad_bump"] = quad(lambda t: exp(-1 / t - 1 / (1 - t)), [0, mpf(1) / 2, 1])
    out["beta_p_1_1_0.5"] = beta_p(1, 1, mpf("0.5"))
    out["beta_pq_1_2_0.3_0.8"] = ext_beta(1, 2, mpf("0.3"), mpf("0.8"))
    out["prabhakar_0.5_1.5_2_0.8"] = prabhakar(mpf("0.5"), mpf("1.5"), 2, mpf("0.8"))
    out["shukla_1_1_0.5_2_0.2"] = shukla(1, 1, mpf("0.5"), 2, mpf("0.2"))
    out["shukla_1_1_0.5_2_0.3_partial400"] = shukla(1, 1, mpf("0.5"), 2, mpf("0.3"))
    out["ext_ml_p_0.8_1.1_1_2_0.5_1"] = ext_ml_p(mpf("0.8"), mpf("1.1"), 1, 2, mpf("0.5"), 1)
    out["ext_ml_pq_1_1_1.2_2.5_0.3_0.8_0.9"] = ext_ml_pq(1, 1, mpf("1.2"), mpf("2.5"), mpf("0.3"), mpf("0.8"), mpf("0.9"))
    out["wright22_0.4"] = wright([(2, 1), (mpf("1.5"), 1)], [(1, mpf("0.8")), (3, 1)], mpf("0.4"))
    out["rl_ext_p_one_0.5_1_0.5"] = rl_ext_p(lambda t: 1, mpf("-0.5"), 1, mpf("0.5"))
    out["rl_ext_pq_pow0.2_0.7_1_0.3_0.6"] = rl_ext_pq(lambda t: t ** mpf("0.2"), mpf("-0.7"), 1, mpf("0.3"), mpf("0.6"))
    out["mellin_1_1_1.2_2.5_1.5_2_0.5"] = mellin_closed(1, 1, mpf("1.2"), mpf("2.5"), mpf("1.5"), 2, mpf("0.5"))
    for k, v in out.items():
        print(f"{k} = {mp.nstr(v, 20)}")
