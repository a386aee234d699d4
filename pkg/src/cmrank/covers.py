"""Fiber-product double covers and their quotient decomposition.

A (Z/2)^2-cover built from two hyperelliptic right-hand sides f1, f2 has
three intermediate quotients, with model polynomials f1, f2 and the
squarefree part f3 of f1*f2; genus and p-rank add across the quotients.
This module also builds the explicit families with controlled p-rank:
z^2 = x^n - t^n, the Moebius-transported branch configurations, the
x(x^{n-1}-1) family, the characteristic-3 genus-3 witness, and the
supersingular genus-2 pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartier import HyperellipticModel, p_rank
from .curves import supersingular_lambdas
from .ff import FieldCtx, FieldElement, field
from .poly import DensePoly, is_squarefree, poly_gcd


def _genus_of_degree(d: int) -> int:
    return (d + 1) // 2 - 1


@dataclass(frozen=True)
class QuotientTriple:
    """The three quotient models of a fiber-product double cover."""

    fE: DensePoly
    f2: DensePoly
    f3: DensePoly
    genera: tuple
    genus_total: int
    prank_total: int | None = None


def kani_rosen_triple(f1: DensePoly, f2: DensePoly) -> QuotientTriple:
    """Quotient data for the normalized fiber product of y^2 = f1 and z^2 = f2."""
    if f1.ctx != f2.ctx:
        raise ValueError("context mismatch between the two covers")
    for f in (f1, f2):
        if f.degree < 3:
            raise ValueError(f"deg {f.degree} < 3: quotient would not be a curve model")
        if not is_squarefree(f):
            raise ValueError("singular input model")
    g = poly_gcd(f1, f2)
    f3 = (f1 // g) * (f2 // g)
    if f3.degree == 0:
        raise ValueError("f1*f2 is a perfect square: the cover is disconnected")
    genera = (
        _genus_of_degree(f1.degree),
        _genus_of_degree(f2.degree),
        _genus_of_degree(f3.degree),
    )
    return QuotientTriple(
        fE=f1, f2=f2, f3=f3, genera=genera, genus_total=sum(genera)
    )


def component_p_rank(f: DensePoly) -> int:
    """p-rank of the quotient with model polynomial f (zero for genus 0)."""
    if _genus_of_degree(f.degree) == 0:
        return 0
    return p_rank(HyperellipticModel(f.ctx, f))


def triple_with_pranks(f1: DensePoly, f2: DensePoly) -> QuotientTriple:
    t = kani_rosen_triple(f1, f2)
    total = (
        component_p_rank(t.fE) + component_p_rank(t.f2) + component_p_rank(t.f3)
    )
    return QuotientTriple(
        fE=t.fE,
        f2=t.f2,
        f3=t.f3,
        genera=t.genera,
        genus_total=t.genus_total,
        prank_total=total,
    )


def prank_fiber_product(f1: DensePoly, f2: DensePoly):
    """(genus, p-rank) of the normalized fiber product, via the quotients."""
    t = triple_with_pranks(f1, f2)
    return t.genus_total, t.prank_total


# -- the explicit families -------------------------------------------------------


def family_xn_tn(n: int, t: FieldElement) -> HyperellipticModel:
    """The model z^2 = x^n - t^n."""
    ctx = t.ctx
    if n < 3:
        raise ValueError("n >= 3 required")
    if n % ctx.p == 0:
        raise ValueError(f"p = {ctx.p} divides n = {n}")
    if t.is_zero:
        raise ValueError("t must be nonzero")
    f = DensePoly.from_elements(
        ctx, [-(t**n)] + [ctx.zero] * (n - 1) + [ctx.one]
    )
    return HyperellipticModel(ctx, f)


def _element_order(a: FieldElement, bound: int) -> int:
    acc = a
    for k in range(1, bound + 1):
        if acc == a.ctx.one:
            return k
        acc = acc * a
    return 0


@lru_cache(maxsize=256)
def primitive_root_of_unity(ctx: FieldCtx, order: int) -> FieldElement:
    """First element of exact multiplicative order `order`, scanning the
    deterministic element ordering."""
    if (ctx.order - 1) % order != 0:
        raise ValueError(f"GF({ctx.order}) has no element of order {order}")
    for a in ctx.elements():
        if a.is_zero:
            continue
        if _element_order(a, order) == order:
            return a
    raise ValueError(f"no element of order {order} found")  # unreachable


class _Moebius:
    """Linear fractional transformation as a projective 2x2 matrix."""

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        if det.is_zero:
            raise ValueError("degenerate linear fractional transformation")
        self.m = (a, b, c, d)

    @classmethod
    def to_zero_one_infty(cls, z1, z2, z3):
        """The unique map sending (z1, z2, z3) to (0, 1, oo)."""
        s = z2 - z3
        t = z2 - z1
        return cls(s, -(z1 * s), t, -(z3 * t))

    def inverse(self):
        a, b, c, d = self.m
        return _Moebius(d, -b, -c, a)

    def compose(self, other):
        a, b, c, d = self.m
        e, f, g, h = other.m
        return _Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def apply(self, z: FieldElement) -> FieldElement:
        a, b, c, d = self.m
        den = c * z + d
        if den.is_zero:
            raise ValueError("transformation sends a required point to infinity")
        return (a * z + b) / den


def moebius_through(src, dst) -> _Moebius:
    """The unique map carrying the ordered triple src to the ordered triple dst."""
    return _Moebius.to_zero_one_infty(*dst).inverse().compose(
        _Moebius.to_zero_one_infty(*src)
    )


def prop44_case2_points(n: int, lam: FieldElement, t: FieldElement) -> list:
    """Branch points x_i = L(zeta^(i+2) t), i = 1..n, where zeta is a fixed
    primitive (n+3)-rd root of unity in GF(p^2) and L carries
    (t, zeta t, zeta^2 t) to (0, 1, lambda).  The resulting third quotient
    is a twist of w^2 = x^(n+3) - t^(n+3) and is superspecial whenever
    p = -1 (mod n+3)."""
    if n % 2 == 0 or n < 1:
        raise ValueError("n must be odd and positive")
    ctx = lam.ctx
    p = ctx.p
    if (n + 3) % p == 0:
        raise ValueError(f"p = {p} divides n + 3")
    if p % (n + 3) != n + 2:
        raise ValueError(f"p = {p} is not -1 mod {n + 3}")
    if lam.is_zero or lam == ctx.one:
        raise ValueError("lambda must avoid 0 and 1")
    if t.ctx != ctx:
        raise ValueError("lambda and t must share a field context")
    if t.is_zero:
        raise ValueError("t must be nonzero")
    if ctx.ext_degree != 2:
        raise ValueError("points live in GF(p^2); pass elements of the extension")
    zeta = primitive_root_of_unity(ctx, n + 3)
    L = moebius_through((t, zeta * t, zeta * zeta * t), (ctx.zero, ctx.one, lam))
    xs = [L.apply(zeta ** (i + 2) * t) for i in range(1, n + 1)]
    forbidden = {ctx.zero, ctx.one, lam}
    if len(set(xs)) != n or any(x in forbidden for x in xs):
        raise ValueError("branch points collide with {0, 1, lambda}; choose other t, lambda")
    return xs


def prop45_models(n: int, lam: FieldElement):
    """The two non-elliptic quotients of the fiber product of
    y^2 = x(x-1)(x-lambda) and z^2 = x(x^(n-1) - 1):
    D1: z^2 = x^n - x and D2: w^2 = (x-lambda)(x^(n-2) + ... + 1).
    For n = 3 the second quotient has genus 0 and None is returned for it."""
    ctx = lam.ctx
    p = ctx.p
    if n < 3:
        raise ValueError("n >= 3 required: smaller n degenerates both quotients")
    if (2 * (n - 1)) % p == 0:
        raise ValueError(f"p = {p} divides 2(n-1)")
    if lam.is_zero or lam == ctx.one:
        raise ValueError("lambda must avoid 0 and 1")
    if lam ** (n - 1) == ctx.one:
        raise ValueError("lambda is a root of x^(n-1) - 1; branch loci collide")
    f1 = DensePoly.from_ints(ctx, [0, -1] + [0] * (n - 2) + [1])  # x^n - x
    d1 = HyperellipticModel(ctx, f1)
    cyclotomic_sum = DensePoly.from_ints(ctx, [1] * (n - 1))
    f2 = DensePoly.from_elements(ctx, [-lam, ctx.one]) * cyclotomic_sum
    if f2.degree < 3:
        return d1, None
    return d1, HyperellipticModel(ctx, f2)


def char3_genus3_witness() -> QuotientTriple:
    """The explicit genus-3 double cover of the supersingular elliptic curve in
    characteristic 3, with total 3-rank 0: quotients
    y^2 = x^4 + x^3 + x, z^2 = x^4 + 2i x^3 + i x,
    w^2 = x^4 + (i+2) x^3 + (2i+2) x + 1 over GF(9)."""
    ctx = field(3, 2)
    fE = DensePoly.from_ints(ctx, [0, 1, 0, 1, 1])
    f2 = DensePoly(ctx, [(0, 0), (0, 1), (0, 0), (0, 2), (1, 0)])
    expected_f3 = DensePoly(ctx, [(1, 0), (2, 2), (0, 0), (2, 1), (1, 0)])
    t = triple_with_pranks(fE, f2)
    if t.f3 != expected_f3:
        raise RuntimeError("third quotient does not match the expected quartic")
    return t


def genus2_supersingular_pair(p: int) -> QuotientTriple:
    """A genus-2 cover of p-rank 0 from two distinct supersingular lambda values."""
    if p <= 3:
        raise ValueError("requires p > 3 (characteristic 3 has a single supersingular lambda)")
    lams = supersingular_lambdas(p)
    if len(lams) < 2:
        raise ValueError(f"fewer than two supersingular lambda values for p = {p}")
    ctx = lams[0].ctx
    lam, lam2 = lams[0], lams[1]
    f1 = DensePoly.from_roots(ctx, [ctx.zero, ctx.one, lam])
    f2 = DensePoly.from_roots(ctx, [ctx.zero, ctx.one, lam2])
    t = triple_with_pranks(f1, f2)
    if t.prank_total != 0:
        raise RuntimeError("supersingular pair produced nonzero total p-rank")
    return t
