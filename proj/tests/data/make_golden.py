#!/usr/bin/env python3
"""Generate the golden ideal-dimension corpus with sympy.

Run once to (re)create golden_dims.json.  The C++ geometry tests compare
their Groebner/dimension results against this file; keeping the generator
here makes the numbers reproducible with a stock sympy installation.
"""

import json
import sympy as sp

MAXN = 8
SYMS = sp.symbols(f"x1:{MAXN + 1}")


def poly_str(expr, nvars):
    """Render an expression in the tool's polynomial grammar."""
    p = sp.Poly(sp.expand(expr), *SYMS[:nvars])
    chunks = []
    for monom, coeff in zip(p.monoms(), p.coeffs()):
        factors = []
        for i, e in enumerate(monom):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        c = sp.Rational(coeff)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not factors:
            body = str(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = str(c) + "*" + "*".join(factors)
        chunks.append((sign, body))
    if not chunks:
        return "0"
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def dim_from_leading_monomials(lead_monoms, nvars):
    """Affine dimension = max #variables S with no leading monomial supported in S."""
    best = -1 if lead_monoms == [()] else 0  # unit ideal handled by caller
    supports = [frozenset(i for i, e in enumerate(m) if e > 0) for m in lead_monoms]
    if any(len(s) == 0 for s in supports):
        return -1  # a nonzero constant leads: unit ideal
    for mask in range(1 << nvars):
        S = frozenset(i for i in range(nvars) if mask >> i & 1)
        if all(not s <= S for s in supports):
            best = max(best, len(S))
    return best


def entry(name, nvars, gens, modulus=0):
    xs = SYMS[:nvars]
    opts = {"order": "grlex"}
    if modulus:
        opts["modulus"] = modulus
    if gens:
        gb = sp.groebner([sp.expand(g) for g in gens], *xs, **opts)
        basis = list(gb.exprs)
        lead = [sp.Poly(b, *xs).LM(order="grlex").exponents for b in basis]
        dim = dim_from_leading_monomials([tuple(m) for m in lead], nvars)
        basis_str = sorted(poly_str(b, nvars) for b in basis)
    else:
        dim = nvars
        basis_str = []
    return {
        "name": name,
        "nvars": nvars,
        "field": f"Fp:{modulus}" if modulus else "Q",
        "generators": [poly_str(g, nvars) for g in gens],
        "reduced_basis": basis_str,
        "dim": dim,
        "codim": (nvars - dim) if dim >= 0 else nvars,
    }


x1, x2, x3, x4, x5, x6, x7, x8 = SYMS

items = [
    entry("coordinate-line", 3, [x1, x2]),
    entry("hypersurface-x1x2", 3, [x1 * x2]),
    entry("two-quadric-product", 4, [x1 * x2, x3 * x4]),
    entry("smooth-ci-pair", 4, [x1 * x2 + x3 * x4, x1 * x3 - x2 * x4]),
    entry("affine-nonreduced", 2, [x1**2, x1 * x2 - x1]),
    entry("twisted-cubic-cone", 4, [x1 * x3 - x2**2, x1 * x4 - x2 * x3, x2 * x4 - x3**2]),
    entry("sphere-cone", 3, [x1**2 + x2**2 + x3**2]),
    entry("grad-x1x2x3", 3, [x2 * x3, x1 * x3, x1 * x2]),
    entry("generic-2x3-minors", 6, [x1 * x5 - x2 * x4, x1 * x6 - x3 * x4, x2 * x6 - x3 * x5]),
    entry("mixed-pair", 3, [x1**2 - x2 * x3, x1 * x2]),
    entry("jacobian-minors-smooth-ci", 4, [
        sp.expand(J2[0, a] * J2[1, b] - J2[0, b] * J2[1, a])
        for (J2,) in [(sp.Matrix([[x2, x1, x4, x3], [x3, -x4, x1, -x2]]),)]
        for a in range(4)
        for b in range(a + 1, 4)
    ]),
    entry("linear-cubic-ci", 3, [x1 + x2, x1**3 + x3**3]),
    entry("unit-ideal", 2, [x1, x1 - 1]),
    entry("zero-ideal", 3, []),
    entry("fat-point", 1, [x1**2]),
    entry("cyclic-3", 3, [x1 + x2 + x3, x1 * x2 + x2 * x3 + x3 * x1, x1 * x2 * x3 - 1]),
    entry("quadric-cone", 3, [x1 * x2 - x3**2]),
    entry("fermat-gradient", 4, [x1**2, x2**2, x3**2, x4**2]),
    entry("single-2x2-det", 4, [x1 * x4 - x2 * x3]),
    entry("grad-x1sq-x2", 3, [2 * x1 * x2, x1**2]),
    entry("smooth-ci-pair-mod5", 4, [x1 * x2 + x3 * x4, x1 * x3 - x2 * x4], modulus=5),
    entry("twisted-cubic-cone-mod7", 4, [x1 * x3 - x2**2, x1 * x4 - x2 * x3, x2 * x4 - x3**2], modulus=7),
]

with open("golden_dims.json", "w") as fh:
    json.dump(items, fh, indent=1)
print(f"wrote {len(items)} golden entries")
for it in items:
    print(f"  {it['name']:28s} n={it['nvars']} field={it['field']:5s} dim={it['dim']} codim={it['codim']}")
