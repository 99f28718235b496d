"""Classification of Galois objects by matrix invariants, explicit
isomorphism constructors, and the free-monoid fusion combinatorics.

Congruence of invertible matrices over a characteristic-zero field is
decided through the similarity class of the asymmetry matrix M^-1 M^t
(rational canonical forms compare entrywise); similarity is decided by
the rational canonical form directly.
"""

from collections import Counter
from itertools import product

from .certificates import Certificate, merge
from .errors import (CongruenceWitnessInvalid, SimilarityWitnessInvalid)
from .linalg import rank_and_kernel
from .matrices import ExactMatrix, companion
from .presentation import Morphism, TensorSpace


def congruent_test(F, G):
    """True iff F = P G P^t for some invertible P: equal sizes and equal
    rational canonical forms of the asymmetry matrices."""
    if F.m != G.m:
        return False
    return (F.asymmetry().rational_canonical_form()
            == G.asymmetry().rational_canonical_form())


def similar_test(F, G):
    """True iff F = P G P^-1 for some invertible P."""
    if F.m != G.m:
        return False
    return F.rational_canonical_form() == G.rational_canonical_form()


def matrix_with_asymmetry_trace(field, trace):
    """A rational 3x3 matrix whose asymmetry M^-1 M^t has the given trace.

    A 3x3 asymmetry matrix has determinant 1 and eigenvalues {l, 1/l, 1},
    so its characteristic polynomial (x - 1)(x^2 - a x + 1), a = trace - 1,
    is determined by the trace; we realize the companion matrix J of that
    polynomial and solve the linear system F J = F^t for an invertible F.
    """
    one = field.one
    a = trace - one
    f = [-one, one + a, -(a + one), one]
    J = companion(field, f)
    n = 3
    unknowns = [(i, j) for i in range(n) for j in range(n)]
    cols = []
    for (r, b) in unknowns:
        col = {}
        for j in range(n):
            if J[b, j]:
                col[(r, j)] = col.get((r, j), field.zero) + J[b, j]
        col[(b, r)] = col.get((b, r), field.zero) - one
        cols.append({k: v for k, v in col.items() if v})
    _, kernel = rank_and_kernel(field, cols)
    for coeffs in product([field.zero, one, -one, field.rational(2)],
                          repeat=len(kernel)):
        rows = [[field.zero] * n for _ in range(n)]
        for rel, c in zip(kernel, coeffs):
            if not c:
                continue
            for idx, v in rel.items():
                i, j = unknowns[idx]
                rows[i][j] = rows[i][j] + c * v
        M = ExactMatrix(field, rows)
        if M.det():
            assert M.asymmetry().trace() == trace
            return M
    raise ValueError("no invertible form found for this asymmetry class")


# ---------------------------------------------------------------------------
# explicit isomorphisms between hom-algebras


def _bijectivity_certificate(phi, d):
    """Degreewise bijectivity of a morphism between presented algebras:
    the images of the source basis are independent and span the target
    slice, level by level."""
    src, tgt = phi.source, phi.target.factors[0]
    bad = []
    for k in range(d + 1):
        src_words = [w for w in src.basis_words(k)]
        cols = [{kk[0]: c for kk, c in phi.apply_word(w).items()}
                for w in src_words]
        rank, kern = rank_and_kernel(src.field, cols)
        dim_t = tgt.dim_leq(k)
        if kern:
            bad.append("level %d: kernel of dimension %d" % (k, len(kern)))
        if rank != dim_t:
            bad.append("level %d: rank %d != target dim %d" % (k, rank, dim_t))
    return Certificate(
        check="degreewise-bijectivity", objects=(src.name, tgt.name),
        degree=d, passed=not bad, residue="; ".join(bad) or None)


def _colinearity_certificate(cg_src, cg_tgt, phi, X, F_lab, G_lab, d):
    """Left colinearity: Delta^X_{X,G} phi = (1 x phi) Delta^X_{X,F} on
    generators."""
    src = cg_src.hom[(X, F_lab)]
    bad = []
    for i in range(src.alg.ngens):
        ts0 = TensorSpace(src)
        start = ts0.gen_coords(i)
        sL, cL = ts0.apply_component(start, 0, phi)
        sL, cL = sL.apply_component(cL, 0, cg_tgt.delta[(X, G_lab, X)])
        sR, cR = ts0.apply_component(start, 0, cg_src.delta[(X, F_lab, X)])
        sR, cR = sR.apply_component(cR, 1, phi)
        if sL.factors != sR.factors:
            raise ValueError("colinearity targets disagree")
        if cL != cR:
            bad.append("generator %s" % src.alg.names[i])
    return Certificate(
        check="left-colinearity", objects=(X, F_lab, G_lab), degree=d,
        passed=not bad, residue="; ".join(bad) or None)


def build_iso_B(cogroupoid_pair, E_lab, F_lab, G_lab, P, d=3):
    """Certified isomorphism B(E,F) -> B(E,G), a -> a P^t, from a
    congruence witness F = P G P^t.

    cogroupoid_pair must contain objects E_lab, F_lab, G_lab with their
    matrices; raises CongruenceWitnessInvalid when P fails the equation.
    """
    C = cogroupoid_pair
    F = C.object_data[F_lab]
    G = C.object_data[G_lab]
    if P.m != G.m or P.n != G.m or not P.is_invertible() or \
            F != P * G * P.transpose():
        raise CongruenceWitnessInvalid("P does not satisfy F = P G P^t")
    src = C.hom[(E_lab, F_lab)]
    tgt = C.hom[(E_lab, G_lab)]
    m, n = C.object_data[E_lab].m, F.m
    field = src.field
    images = []
    for i in range(m):
        for j in range(n):
            # f(a_ij) = sum_k a_ik (P^t)_kj = sum_k P_jk a_ik
            terms = {}
            for k in range(n):
                c = P[j, k]
                if c:
                    terms[(i * n + k,)] = c
            images.append(tgt.alg.element(terms))
    phi = Morphism(src, tgt, images, name="iso_B[%s->%s]" % (F_lab, G_lab))
    parts = [phi.check(name="iso-well-defined"),
             _colinearity_certificate(C, C, phi, E_lab, F_lab, G_lab, d),
             _bijectivity_certificate(phi, d)]
    return phi, merge("galois-iso-B", (E_lab, F_lab, G_lab), parts, degree=d)


def build_iso_H(cogroupoid_pair, E_lab, F_lab, G_lab, P, d=3):
    """Certified isomorphism H(E,F) -> H(E,G), u -> u P^t, v -> v P^{-t},
    from a similarity witness F = P G P^-1."""
    C = cogroupoid_pair
    F = C.object_data[F_lab]
    G = C.object_data[G_lab]
    if P.m != G.m or P.n != G.m or not P.is_invertible() or \
            F != P * G * P.inverse():
        raise SimilarityWitnessInvalid("P does not satisfy F = P G P^-1")
    src = C.hom[(E_lab, F_lab)]
    tgt = C.hom[(E_lab, G_lab)]
    m, n = C.object_data[E_lab].m, F.m
    field = src.field
    Pinv = P.inverse()
    images = []
    for i in range(m):
        for j in range(n):
            terms = {}
            for k in range(n):
                c = P[j, k]
                if c:
                    terms[(i * n + k,)] = c
            images.append(tgt.alg.element(terms))
    for i in range(m):
        for j in range(n):
            terms = {}
            for k in range(n):
                c = Pinv[k, j]
                if c:
                    terms[(m * n + i * n + k,)] = c
            images.append(tgt.alg.element(terms))
    phi = Morphism(src, tgt, images, name="iso_H[%s->%s]" % (F_lab, G_lab))
    parts = [phi.check(name="iso-well-defined"),
             _colinearity_certificate(C, C, phi, E_lab, F_lab, G_lab, d),
             _bijectivity_certificate(phi, d)]
    return phi, merge("galois-iso-H", (E_lab, F_lab, G_lab), parts, degree=d)


# ---------------------------------------------------------------------------
# fusion-ring combinatorics of the universal cosovereign family


def word_bar(x):
    """Reverse the word and swap the two letters a <-> b."""
    swap = {"a": "b", "b": "a"}
    return "".join(swap[c] for c in reversed(x))


def fusion_decompose(x, y):
    """Multiset of words in U_x (x) U_y = (+) over {x = a g, y = bar(g) b}
    of U_{a b}."""
    out = Counter()
    for cut in range(len(x) + 1):
        a, g = x[:cut], x[cut:]
        gb = word_bar(g)
        if y.startswith(gb):
            out[a + y[len(gb):]] += 1
    return out


def fusion_mul_linear(xs, ys):
    """Bilinear extension of fusion_decompose to multisets of words."""
    out = Counter()
    for x, cx in xs.items():
        for y, cy in ys.items():
            for z, cz in fusion_decompose(x, y).items():
                out[z] += cx * cy * cz
    return out


def fusion_dimensions(n, max_len):
    """Dimension function d_x solved greedily from d_e = 1, d_a = d_b = n
    through the fusion rules; returns (dims dict, consistent flag)."""
    dims = {"": 1}
    words = [""]
    for length in range(1, max_len + 1):
        words_l = ["".join(w) for w in product("ab", repeat=length)]
        words.extend(words_l)
        for w in words_l:
            # d_{w} from d_{w[:-1]} * d_{w[-1]} = sum of d over decomposition
            head, last = w[:-1], w[-1]
            total = dims[head] * n
            rest = 0
            for z, c in fusion_decompose(head, last).items():
                if z == w:
                    continue
                rest += c * dims[z]
            dims[w] = total - rest
    consistent = True
    for x in words:
        for y in words:
            if len(x) + len(y) > max_len:
                continue
            lhs = dims[x] * dims[y]
            rhs = sum(c * dims[z] for z, c in fusion_decompose(x, y).items())
            if lhs != rhs:
                consistent = False
    return dims, consistent
