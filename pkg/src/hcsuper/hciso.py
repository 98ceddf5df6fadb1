"""The polynomial side of the Harish-Chandra isomorphism."""
from fractions import Fraction

from .poly import SymPoly
from .rootsys import add, pairing
from .weyl import apply, even_weyl_group


class NotInvariant(ValueError):
    pass


class AtypicalWeight(ValueError):
    pass


def weyl_orbit(W, lam):
    return W.orbit(tuple(Fraction(x) for x in lam))


def is_W_invariant(W, phi):
    return all(phi.linear_change(s) == phi for s in W.gens)


def form_poly(sys, v):
    """The linear form ``lam -> (lam, v)``."""
    d = sys.dim
    return SymPoly.linear([sum((sys.gram[i][j] * v[j] for j in range(d)), Fraction(0)) for i in range(d)])


def quadratic_form_poly(sys):
    """``lam -> (lam, lam)``."""
    d = sys.dim
    terms = {}
    for i in range(d):
        for j in range(d):
            g = sys.gram[i][j]
            if g:
                e = [0] * d
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = terms.get(tuple(e), 0) + g
    return SymPoly(d, terms)


def g_polynomial(sys):
    """Product of ``(lam, a)`` over all isotropic roots ``a``."""
    g = SymPoly.const(sys.dim, 1)
    for r in sys.isotropic_roots():
        g = g * form_poly(sys, r.coords)
    return g


def isotropic_orbit_representatives(sys, W):
    reps, seen = [], set()
    for r in sys.isotropic_roots():
        if r.coords in seen:
            continue
        reps.append(r.coords)
        seen |= W.orbit(r.coords)
    return reps


def translation_defect(sys, phi, alpha):
    """``phi(lam + t a) - phi(lam)`` on ``a``-perp, in variables ``(lam, t)``.

    One coordinate of ``lam`` is eliminated by the linear equation ``(lam, a) = 0``.
    """
    d = sys.dim
    ga = [sum((sys.gram[i][j] * alpha[j] for j in range(d)), Fraction(0)) for i in range(d)]
    k = next(i for i in range(d) if ga[i])
    n = d + 1  # last variable is t
    images = []
    for i in range(d):
        if i == k:
            coeffs = [Fraction(0)] * n
            for j in range(d):
                if j != k:
                    coeffs[j] = -ga[j] / ga[k]
            base = SymPoly.linear(coeffs)
        else:
            base = SymPoly.var(n, i)
        images.append(base)
    shifted = [images[i] + SymPoly.var(n, d) * alpha[i] for i in range(d)]
    return phi.substitute(shifted) - phi.substitute(images)


def vanishes_on_perp(sys, phi, alpha):
    """Whether ``phi`` vanishes identically on the hyperplane ``(lam, a) = 0``."""
    d = sys.dim
    ga = [sum((sys.gram[i][j] * alpha[j] for j in range(d)), Fraction(0)) for i in range(d)]
    cands = [i for i in range(d) if ga[i]]
    k = min(cands, key=lambda i: max((e[i] for e in phi.terms), default=0))
    return phi.eliminate(k, [-ga[j] / ga[k] for j in range(d)]).is_zero()


def in_I_h(sys, W, phi, all_roots=False):
    """Whether ``phi`` is W-invariant and ``phi(lam + t a) = phi(lam)`` on ``a``-perp
    for each isotropic ``a``.

    Since ``a``-perp is stable under translation by an isotropic ``a``, the
    identity holds iff the derivative of ``phi`` along ``a`` vanishes on ``a``-perp.
    """
    if not is_W_invariant(W, phi):
        raise NotInvariant("phi is not W-invariant")
    roots = [r.coords for r in sys.isotropic_roots()] if all_roots else isotropic_orbit_representatives(sys, W)
    return all(vanishes_on_perp(sys, phi.directional_derivative(a), a) for a in roots)


def orbit_power_sum(sys, W, v, k):
    """``sum_{w in W} (lam, w v)^k``, a W-invariant polynomial."""
    out = SymPoly(sys.dim)
    for w in W:
        out = out + form_poly(sys, apply(w, v)) ** k
    return out


def is_typical(sys, P_rho, lam):
    lr = add(lam, P_rho)
    return all(pairing(sys, lr, r.coords) != 0 for r in sys.isotropic_roots())


def linkage(sys, W, P, lam, mu):
    """Whether ``mu + rho`` lies in the W-orbit of ``lam + rho`` (needs typical ``lam``)."""
    from .hwmod import rho
    r = rho(P)
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if not is_typical(sys, r, lam):
        raise AtypicalWeight("lam is atypical: (lam + rho, a) = 0 for an isotropic a")
    return add(mu, r) in W.orbit(add(lam, r))


def default_weyl_group(sys):
    return even_weyl_group(sys)
