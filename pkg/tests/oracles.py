"""Independent reference implementations used only by the tests."""

from itertools import product


def monomial_quotient_generators(gens, f):
    """``(m1..mk) : f`` for monomials as exponent tuples: generated by ``lcm(mi, f)/f``."""
    out = {tuple(max(a, b) - b for a, b in zip(m, f)) for m in gens}
    return minimalize(out)


def minimalize(monos):
    monos = set(monos)
    return {m for m in monos
            if not any(o != m and all(a <= b for a, b in zip(o, m)) for o in monos)}


def in_monomial_ideal(m, gens):
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def monomials_up_to(nvars, degree):
    for e in product(range(degree + 1), repeat=nvars):
        if sum(e) <= degree:
            yield e


def rank_one_homology(n, incoming, outgoing, degree):
    """Homology of ``S -in-> S -out-> S`` at the middle, ``S = k[z1..zn]/(z1*...*zn)``.

    ``incoming``/``outgoing`` are exponent tuples (``None`` for no map) and
    ``degree`` is the monomial degree in the middle module.  Multiplication
    by a monomial sends standard monomials to distinct standard monomials
    or to zero, so both ranks are plain counts.
    """
    std = lambda e: min(e) == 0
    mul = lambda a, b: tuple(x + y for x, y in zip(a, b))
    middle = [e for e in monomials_of_degree(n, degree) if std(e)]
    kernel = sum(1 for e in middle if outgoing is None or not std(mul(e, outgoing)))
    if incoming is None:
        image = 0
    else:
        d_in = degree - sum(incoming)
        image = sum(1 for e in monomials_of_degree(n, d_in) if std(e) and std(mul(e, incoming)))
    return kernel - image


def monomials_of_degree(n, d):
    if d < 0:
        return []
    return [e for e in product(range(d + 1), repeat=n) if sum(e) == d]
