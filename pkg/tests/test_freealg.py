from cogwork.freealg import FreeAlgebra, rank_and_kernel_elements
from cogwork.scalars import QQ, ScalarField


def _alg():
    return FreeAlgebra(QQ, ["x", "y"])


def test_canonical_form_and_degree():
    a = _alg()
    x, y = a.gen(0), a.gen(1)
    e = x * y - x * y
    assert not e
    assert e.degree() == -1
    assert (x * y + y * x).degree() == 2
    assert a.one().degree() == 0


def test_product_is_word_concatenation():
    a = _alg()
    x, y = a.gen(0), a.gen(1)
    p = (x + y) * (x - y)
    assert p.terms == {
        (0, 0): QQ.one, (0, 1): -QQ.one, (1, 0): QQ.one, (1, 1): -QQ.one}


def test_scalar_coefficients_prune():
    a = _alg()
    x = a.gen(0)
    assert (x.scale(QQ.zero)).terms == {}
    assert (2 * x - x - x).terms == {}


def test_words_of_degree():
    a = _alg()
    assert a.words_of_degree(0) == [()]
    assert a.words_of_degree(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_generator_degrees():
    a = FreeAlgebra(QQ, ["u", "w"], degrees=[1, 2])
    assert a.wdeg((1, 0)) == 3
    assert sorted(a.words_of_degree(2)) == [(0, 0), (1,)]


def test_deglex_order():
    a = _alg()
    assert a.wkey((1,)) < a.wkey((0, 0))
    assert a.wkey((0, 1)) < a.wkey((1, 0))


def test_rank_and_kernel_elements():
    a = _alg()
    x, y = a.gen(0), a.gen(1)
    rank, ker = rank_and_kernel_elements([x, y, x + y])
    assert rank == 2 and len(ker) == 1
    rank, ker = rank_and_kernel_elements([y * x - 2 * (x * y)])
    assert rank == 1 and ker == []
    assert rank_and_kernel_elements([]) == (0, [])


def test_evaluate_character():
    F = ScalarField("q")
    a = FreeAlgebra(F, ["x", "y"])
    q = F.param("q")
    e = a.gen(1) * a.gen(0) - q * (a.gen(0) * a.gen(1)) - a.one()
    # x -> 0, y -> 0 leaves -1 (the quantum Weyl algebra has no character)
    assert e.evaluate([F.zero, F.zero]) == -F.one
