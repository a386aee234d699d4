"""Shared generators for randomized model tests (seeded by each caller)."""

from cmrank.cartier import HyperellipticModel
from cmrank.ff import FieldCtx
from cmrank.poly import DensePoly, is_squarefree


def random_poly(rng, ctx: FieldCtx, deg: int, nonzero_const=False) -> DensePoly:
    while True:
        if ctx.ext_degree == 1:
            raw = [rng.randrange(ctx.p) for _ in range(deg)] + [rng.randrange(1, ctx.p)]
        else:
            raw = [(rng.randrange(ctx.p), rng.randrange(ctx.p)) for _ in range(deg)]
            raw.append((rng.randrange(1, ctx.p), rng.randrange(ctx.p)))
        f = DensePoly(ctx, raw)
        if nonzero_const and f.coeff(0).is_zero:
            continue
        return f


def random_squarefree(rng, ctx: FieldCtx, deg: int, nonzero_const=False) -> DensePoly:
    while True:
        f = random_poly(rng, ctx, deg, nonzero_const=nonzero_const)
        if is_squarefree(f):
            return f


def random_model(rng, ctx: FieldCtx, deg: int) -> HyperellipticModel:
    return HyperellipticModel(ctx, random_squarefree(rng, ctx, deg))
