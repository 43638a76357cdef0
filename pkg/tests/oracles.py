"""Independent reference computations used as test oracles."""

from fractions import Fraction


def gram_schmidt_monic(points, weights, nmax):
    """Monic orthogonal polynomials for a finite positive measure, exactly.

    Plain Gram-Schmidt on monomials with the inner product
    ``sum w_j f(x_j) g(x_j)``; coefficients low to high.
    """
    def ip(f, g):
        return sum(w * ev(f, x) * ev(g, x) for x, w in zip(points, weights))

    def ev(c, x):
        acc = Fraction(0)
        for a in reversed(c):
            acc = acc * x + a
        return acc

    out = []
    for n in range(nmax + 1):
        p = [Fraction(0)] * n + [Fraction(1)]
        for q in out:
            r = ip(p, q) / ip(q, q)
            for k, a in enumerate(q):
                p[k] -= r * a
        out.append(p)
    return out


def falling_product(N, var_points=None):
    """Coefficients of prod_{j=0..N} (v - v_j), where v_j defaults to j."""
    pts = list(range(N + 1)) if var_points is None else var_points
    c = [Fraction(1)]
    for r in pts:
        nxt = [Fraction(0)] * (len(c) + 1)
        for k, a in enumerate(c):
            nxt[k + 1] += a
            nxt[k] -= r * a
        c = nxt
    return c
