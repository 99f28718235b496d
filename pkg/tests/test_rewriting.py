import pytest

from cogwork.errors import NotConfluent
from cogwork.families import (ASTMatrix, glpq_hom_presentation, quantum_torus,
                              s2n_hom_presentation, s2n_witness_images,
                              torus_witness_images_gl, twisted_group_algebra)
from cogwork.freealg import FreeAlgebra, NCPoly
from cogwork.matrices import ExactMatrix
from cogwork.rewriting import RewriteSystem, quantum_torus_witness
from cogwork.scalars import QQ, ScalarField


def test_confluent_toy_system():
    alg = FreeAlgebra(QQ, ["a", "b"])
    rs = RewriteSystem(alg, [((0, 1), alg.one()), ((1, 0), alg.one())])
    assert rs.check_confluence() == []
    nf = rs.normal_form(alg.gen(0) * alg.gen(1) * alg.gen(0))
    assert nf == alg.gen(0)


def test_non_confluent_detected():
    alg = FreeAlgebra(QQ, ["a", "b", "c"])
    # ab -> 1 and bc -> 1 clash on abc
    rs = RewriteSystem(alg, [((0, 1), alg.one()), ((1, 2), alg.one())])
    bad = rs.check_confluence()
    assert bad
    with pytest.raises(NotConfluent):
        rs.require_confluent()


def test_rules_must_decrease_order():
    alg = FreeAlgebra(QQ, ["a", "b"])
    with pytest.raises(ValueError):
        RewriteSystem(alg, [((0,), alg.gen(1) * alg.gen(0))])


def _symbolic_ast(n):
    names = []
    for i in range(n):
        for j in range(i + 1, n):
            names.append("p%d%d" % (i + 1, j + 1))
    field = ScalarField(names)
    rows = [[field.one] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = field.param("p%d%d" % (i + 1, j + 1))
            rows[i][j] = v
            rows[j][i] = field.one / v
    return ASTMatrix(ExactMatrix(field, rows))


def test_quantum_torus_confluent_and_basis():
    p = _symbolic_ast(2)
    rs = quantum_torus(p)
    assert rs.check_confluence() == []
    # normal words of degree <= 2: per index a pure t- or s-power,
    # indices increasing
    words = rs.irreducible_words(2)
    assert len(words) == 1 + 4 + 8  # 1, four letters, eight normal pairs


def test_gl_witness_symbolic():
    for n in (2, 3):
        p = _symbolic_ast(n)
        glp = glpq_hom_presentation(p, ASTMatrix.trivial(p.field, n))
        torus = quantum_torus(p)
        cert = quantum_torus_witness(
            glp, torus, torus_witness_images_gl(glp, torus))
        assert cert.passed and cert.exact


def test_gl_witness_wrong_sign_fails():
    p = _symbolic_ast(2)
    glp = glpq_hom_presentation(p, ASTMatrix.trivial(p.field, 2))
    torus = quantum_torus(p)
    images = torus_witness_images_gl(glp, torus)
    images[0] = -images[0]  # flip the sign of x11 -> t1
    cert = quantum_torus_witness(glp, torus, images)
    assert not cert.passed


def test_s2n_witness():
    pm = ASTMatrix.from_strs(QQ, [["1", "-1"], ["-1", "1"]], pm=True)
    s4 = s2n_hom_presentation(pm, ASTMatrix.trivial(QQ, 2, pm=True))
    tga = twisted_group_algebra(pm)
    assert tga.check_confluence() == []
    cert = quantum_torus_witness(s4, tga, s2n_witness_images(s4, pm, tga))
    assert cert.passed


def test_s2n_witness_wrong_sign_fails():
    pm = ASTMatrix.from_strs(QQ, [["1", "-1"], ["-1", "1"]], pm=True)
    s4 = s2n_hom_presentation(pm, ASTMatrix.trivial(QQ, 2, pm=True))
    tga = twisted_group_algebra(pm)
    images = s2n_witness_images(s4, pm, tga)
    # negate one nonzero image
    for i, img in enumerate(images):
        if img:
            images[i] = -img
            break
    cert = quantum_torus_witness(s4, tga, images)
    assert not cert.passed


def test_diamond_lemma_cross_oracle_quantum_plane():
    # for the quantum plane both engines exist: irreducible words of the
    # rewrite system match the quotient dimensions of the presentation
    F = ScalarField("q")
    alg = FreeAlgebra(F, ["x", "y"])
    q = F.param("q")
    rs = RewriteSystem(alg, [((1, 0), alg.element({(0, 1): q}))])
    assert rs.check_confluence() == []
    from cogwork.presentation import Presentation
    pres = Presentation(alg, [alg.gen(1) * alg.gen(0)
                              - q * (alg.gen(0) * alg.gen(1))])
    for d in range(4):
        assert len(rs.irreducible_words(d)) == pres.dim_leq(d)
