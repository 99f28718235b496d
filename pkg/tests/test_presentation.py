import pytest

from cogwork.errors import DegreeTooLarge
from cogwork.freealg import FreeAlgebra
from cogwork.presentation import (Morphism, Presentation, TensorSpace,
                                  tensor_presentation, trivial_presentation)
from cogwork.scalars import QQ, ScalarField


def quantum_plane(field=None, qname="q"):
    field = field or ScalarField("q")
    alg = FreeAlgebra(field, ["x", "y"])
    x, y = alg.gen(0), alg.gen(1)
    q = field.param(qname)
    return Presentation(alg, [y * x - q * (x * y)], name="k_q[x,y]")


def test_no_relations_empty_slice():
    alg = FreeAlgebra(QQ, ["x", "y"])
    p = Presentation(alg, [])
    assert p.ideal_slice(3) == []
    assert p.dims_by_degree(3) == [1, 2, 4, 8]


def test_quantum_plane_slices():
    p = quantum_plane()
    rows = p.ideal_slice(2)
    assert len(rows) == 1
    assert p.dims_by_degree(2) == [1, 2, 3]
    x, y = p.alg.gen(0), p.alg.gen(1)
    q = p.field.param("q")
    assert p.equals_in_quotient(y * x, q * (x * y), 2)
    assert not p.equals_in_quotient(y * x, x * y, 2)


def test_quantum_weyl_filtration():
    F = ScalarField("q")
    alg = FreeAlgebra(F, ["x", "y"])
    x, y = alg.gen(0), alg.gen(1)
    q = F.param("q")
    w = Presentation(alg, [y * x - q * (x * y) - alg.one()], name="A1q")
    assert w.dims_by_degree(3) == [1, 2, 3, 4]
    assert w.equals_in_quotient(y * x, q * (x * y) + alg.one(), 2)


def test_fast_engine_agrees_with_brute_force():
    # the prefix-table basis and the literal u*r*v span must give the same
    # filtration dimensions
    for maker in (quantum_plane,):
        p1 = maker()
        p2 = maker()
        d = 4
        p1.ensure_level(d)
        fast = p1.dims_by_degree(d)
        pivots = {w for r in p2.ideal_slice(d)
                  for w in [max(r.terms, key=p2.alg.wkey)]}
        brute = [sum(1 for w in p2.alg.words_of_degree(k) if w not in pivots)
                 for k in range(d + 1)]
        assert fast == brute


def test_collapsing_presentation_falls_back():
    # x = 1 and x = 0 force 1 into the ideal
    alg = FreeAlgebra(QQ, ["x"])
    x = alg.gen(0)
    p = Presentation(alg, [x - alg.one(), x])
    assert p.equals_in_quotient(alg.one(), alg.zero(), 1)
    assert p.dims_by_degree(1) == [0, 0]


def test_degree_cap():
    p = quantum_plane()
    p.degree_cap = 3
    with pytest.raises(DegreeTooLarge):
        p.ensure_level(4)


def test_tensor_presentation():
    kx = Presentation(FreeAlgebra(QQ, ["x"]), [], name="k[x]")
    ky = Presentation(FreeAlgebra(QQ, ["y"]), [], name="k[y]")
    t = tensor_presentation(kx, ky)
    assert t.alg.ngens == 2
    assert len(t.relations) == 1  # the cross commutation
    assert t.dims_by_degree(1) == [1, 2]
    assert t.dims_by_degree(2)[2] == 3  # x^2, xy, y^2


def test_tensor_presentation_name_clash():
    kx1 = Presentation(FreeAlgebra(QQ, ["x"]), [])
    kx2 = Presentation(FreeAlgebra(QQ, ["x"]), [])
    t = tensor_presentation(kx1, kx2)
    assert t.alg.names == ("x", "x'")


def test_tensor_quotient_matches_componentwise_reduction():
    # equality decided in the tensor presentation agrees with per-factor
    # reduction of split tensors
    F = ScalarField("q")
    p = quantum_plane(F)
    p2 = quantum_plane(F)
    t = tensor_presentation(p, p2)
    x, y = t.alg.gen(0), t.alg.gen(1)
    x2, y2 = t.alg.gen(2), t.alg.gen(3)
    q = p.field.param("q")
    lhs = (y * x) * (y2 * x2)
    rhs = (q * (x * y)) * (q * (x2 * y2))
    assert t.equals_in_quotient(lhs, rhs, 4)
    ts = TensorSpace((p, p2))
    c1 = ts.reduce_free({((1, 0), (1, 0)): p.field.one})
    c2 = ts.reduce_free({((0, 1), (0, 1)): q * q})
    assert c1 == c2


def test_morphism_check_and_failure():
    # counit of the quantum plane: x, y -> 0 is an algebra map; x, y -> 1
    # is not
    p = quantum_plane()
    k = trivial_presentation(p.field)
    good = Morphism(p, k, [k.alg.const(0), k.alg.const(0)], name="eps")
    assert good.check().passed
    bad = Morphism(p, k, [k.alg.const(1), k.alg.const(1)], name="bad")
    cert = bad.check()
    assert not cert.passed
    assert "residue" in (cert.residue or "residue")


def test_anti_morphism():
    # sending each generator to itself but reversing products maps the
    # q-plane onto the q^{-1}-plane; swapping the generators does not
    F = ScalarField("q")
    p = quantum_plane(F)
    alg = FreeAlgebra(F, ["x", "y"])
    q = F.param("q")
    tgt = Presentation(alg, [alg.gen(1) * alg.gen(0)
                             - (F.one / q) * (alg.gen(0) * alg.gen(1))])
    good = Morphism(p, tgt, [alg.gen(0), alg.gen(1)], anti=True)
    assert good.check().passed
    bad = Morphism(p, tgt, [alg.gen(1), alg.gen(0)], anti=True)
    assert not bad.check().passed


def test_tensor_target_morphism_residues():
    # x -> x (x) x is not an algebra map of the quantum plane (coefficient
    # q^2 vs q); the residue is reported against the tensor quotient
    F = ScalarField("q")
    p = quantum_plane(F)
    ts = TensorSpace((p, p))
    phi = Morphism(p, ts, [{((0,), (0,)): p.field.one},
                           {((1,), (1,)): p.field.one}])
    cert = phi.check()
    assert not cert.passed
    assert "x*y (x) x*y" in cert.residue
