import pytest

from starkbeta.cyclotomic import stark_unit_exact
from starkbeta.unramified import context_for_conductor, embed_cyclotomic


def test_context_degree_and_torsion():
    for (m, p, f) in ((5, 3, 4), (7, 3, 6), (3, 7, 1), (12, 5, 2)):
        ctx, zeta = context_for_conductor(p, m, 12)
        assert ctx.f == f
        assert ctx.pow(zeta, m) == ctx.one()
        assert all(ctx.pow(zeta, k) != ctx.one() for k in range(1, m))


def test_frobenius_is_power_map_on_torsion():
    for (m, p) in ((5, 3), (7, 5), (11, 3)):
        ctx, zeta = context_for_conductor(p, m, 10)
        sigma = ctx.frobenius_map()
        assert sigma(zeta) == ctx.pow(zeta, p)


def test_inverse_and_units():
    ctx, zeta = context_for_conductor(3, 5, 12)
    u = ctx.add(zeta, ctx.scalar(2))
    assert ctx.is_unit(u)
    assert ctx.mul(u, ctx.inv(u)) == ctx.one()
    with pytest.raises(ZeroDivisionError):
        ctx.inv(ctx.zero())


def test_log_is_homomorphism_in_extension():
    ctx, zeta = context_for_conductor(3, 5, 12)
    a = ctx.add(zeta, ctx.scalar(1))
    b = ctx.add(ctx.mul(zeta, zeta), ctx.scalar(3))
    assert ctx.is_unit(a) and ctx.is_unit(b)
    lab = ctx.log(ctx.mul(a, b))
    diff = ctx.sub(lab, ctx.add(ctx.log(a), ctx.log(b)))
    assert ctx.valuation(diff) >= 12


def test_log_kills_torsion():
    ctx, zeta = context_for_conductor(5, 7, 10)
    assert ctx.valuation(ctx.log(zeta)) >= 10


def test_embedding_is_ring_map_on_stark_units():
    m, p = 7, 3
    ctx, zeta = context_for_conductor(p, m, 12)
    u1 = stark_unit_exact(1, m)
    u2 = stark_unit_exact(2, m)
    lhs = embed_cyclotomic(u1 * u2, ctx, zeta)
    rhs = ctx.mul(embed_cyclotomic(u1, ctx, zeta),
                  embed_cyclotomic(u2, ctx, zeta))
    assert lhs == rhs


def test_embedding_rejects_p_in_denominator():
    ctx, zeta = context_for_conductor(3, 5, 8)
    with pytest.raises(ValueError):
        ctx.scalar("1/3")
