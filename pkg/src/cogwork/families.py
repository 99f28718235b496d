"""Constructors for the matrix- and cocycle-parameterized families.

Each cogroupoid constructor takes a finite object list and produces the
hom-algebra presentations together with all structural morphisms; the
diagonal hom-algebras carry Hopf structure.  Constructors always build:
expected-zero instances (mismatched invariants) are tagged, not refused,
since verifying that the algebra collapses is itself a test.
"""

from .errors import (NotACocycle, NotAST, NotPlusMinusOne, SingularMatrix)
from .freealg import FreeAlgebra, NCPoly
from .hopf import CogroupoidData, HopfData, MatrixComodule
from .matrices import ExactMatrix
from .presentation import Morphism, Presentation, TensorSpace, trivial_presentation
from .rewriting import RewriteSystem


def _require_invertible(m, what):
    if not m.is_invertible():
        raise SingularMatrix("%s must be invertible" % what)


# ---------------------------------------------------------------------------
# bilinear-form family B


def bilinear_hom_presentation(E, F, name=None):
    """Hom-algebra on generators a_ij (i <= rows of E, j <= rows of F) with
    the two matrix relations  F^-1 a^t E a = I  and  a F^-1 a^t E = I."""
    _require_invertible(E, "E")
    _require_invertible(F, "F")
    field = E.field
    m, n = E.m, F.m
    names = ["a%d%d" % (i + 1, j + 1) for i in range(m) for j in range(n)]
    alg = FreeAlgebra(field, names)

    def g(i, j):
        return i * n + j

    Einv, Finv = E.inverse(), F.inverse()
    rels = []
    # (F^-1 a^t E a)_{ij} = delta_ij, size n x n
    for i in range(n):
        for j in range(n):
            terms = {}
            for k in range(m):
                for l in range(m):
                    for s in range(n):
                        c = Finv[i, s] * E[k, l]
                        if c:
                            w = (g(k, s), g(l, j))
                            terms[w] = terms.get(w, field.zero) + c
            terms[()] = terms.get((), field.zero) - (field.one if i == j else field.zero)
            rels.append(alg.element(terms))
    # (a F^-1 a^t E)_{ij} = delta_ij, size m x m
    for i in range(m):
        for j in range(m):
            terms = {}
            for k in range(n):
                for l in range(n):
                    for s in range(m):
                        c = Finv[k, l] * E[s, j]
                        if c:
                            w = (g(i, k), g(s, l))
                            terms[w] = terms.get(w, field.zero) + c
            terms[()] = terms.get((), field.zero) - (field.one if i == j else field.zero)
            rels.append(alg.element(terms))
    rels = [r for r in rels if r]
    return Presentation(alg, rels, name=name or "B(%dx%d)" % (m, n))


def bilinear_cogroupoid(objects, name="B"):
    """The B cogroupoid on a finite family {label: invertible matrix}.

    Delta^G(a_ij) = sum_k a_ik x a_kj, eps(a_ij) = delta_ij,
    S(a) = E^-1 a^t F as a map B(E,F) -> B(F,E)^op.
    """
    labels = list(objects)
    field = next(iter(objects.values())).field
    hom = {}
    for x in labels:
        for y in labels:
            hom[(x, y)] = bilinear_hom_presentation(
                objects[x], objects[y], name="%s(%s,%s)" % (name, x, y))
    unit = trivial_presentation(field)
    delta, eps, antipode = {}, {}, {}
    for x in labels:
        for y in labels:
            px, py = objects[x], objects[y]
            m, n = px.m, py.m
            pxy = hom[(x, y)]
            for z in labels:
                p = objects[z].m
                ts = TensorSpace((hom[(x, z)], hom[(z, y)]))
                images = []
                for i in range(m):
                    for j in range(n):
                        img = {((i * p + k,), (k * n + j,)): field.one
                               for k in range(p)}
                        images.append(img)
                delta[(x, y, z)] = Morphism(
                    pxy, ts, images, name="delta[%s,%s;%s]" % (x, y, z))
            # S_{X,Y}: a -> E^-1 a^t F, anti-map into B(F,E)
            pyx = hom[(y, x)]
            Einv = px.inverse()
            images = []
            for i in range(m):
                for j in range(n):
                    img = NCPoly(pyx.alg, {})
                    for k in range(n):
                        for l in range(m):
                            c = Einv[i, l] * py[k, j]
                            if c:
                                img = img + NCPoly(
                                    pyx.alg, {(k * m + l,): c})
                    images.append(img)
            antipode[(x, y)] = Morphism(
                pxy, pyx, images, anti=True, name="S[%s,%s]" % (x, y))
        pxx = hom[(x, x)]
        mm = objects[x].m
        eps[x] = Morphism(
            pxx, unit,
            [unit.alg.const(field.one if i == j else field.zero)
             for i in range(mm) for j in range(mm)],
            name="eps[%s]" % x)
    inv = {x: objects[x].asymmetry().trace() for x in labels}
    expected_zero = {(x, y) for x in labels for y in labels
                     if inv[x] != inv[y]}
    return CogroupoidData(labels, hom, delta, eps, antipode, name=name,
                          object_data=dict(objects),
                          expected_zero=expected_zero)


def make_B(E, F, name="B"):
    """Single hom-algebra with its invariants and zero-expectation tag."""
    pres = bilinear_hom_presentation(E, F, name=name)
    info = {
        "invariant_E": str(E.asymmetry().trace()),
        "invariant_F": str(F.asymmetry().trace()),
        "expected_zero": E.asymmetry().trace() != F.asymmetry().trace(),
    }
    return pres, info


def bilinear_hopf(E, name=None):
    """B(E) with its Hopf structure."""
    name = name or "B(E)"
    cg = bilinear_cogroupoid({"X": E}, name=name)
    h = cg.diagonal_hopf("X")
    h.name = name
    return h


def standard_comodule_B(hopf, E, name="V"):
    """The defining comodule: alpha(v_i) = sum_j v_j x a_ji."""
    p = hopf.presentation
    m = E.m
    mat = [[p.alg.gen(i * m + j) for j in range(m)] for i in range(m)]
    return MatrixComodule(hopf, mat, name=name)


def eq_matrix(field, qname="q"):
    """The 2x2 matrix ((0,1),(-1/q,0)) whose asymmetry trace is -q - 1/q."""
    q = field.param(qname)
    return ExactMatrix(field, [[field.zero, field.one],
                               [-field.one / q, field.zero]])


# ---------------------------------------------------------------------------
# universal cosovereign family H


def cosovereign_hom_presentation(E, F, name=None):
    """Generators u_ij, v_ij with relations
    u v^t = I_m = v F u^t E^-1  and  v^t u = I_n = F u^t E^-1 v."""
    _require_invertible(E, "E")
    _require_invertible(F, "F")
    field = E.field
    m, n = E.m, F.m
    names = (["u%d%d" % (i + 1, j + 1) for i in range(m) for j in range(n)]
             + ["v%d%d" % (i + 1, j + 1) for i in range(m) for j in range(n)])
    alg = FreeAlgebra(field, names)

    def u(i, j):
        return i * n + j

    def v(i, j):
        return m * n + i * n + j

    Einv = E.inverse()
    rels = []

    def add_matrix_relation(entries, size_i, size_j):
        for i in range(size_i):
            for j in range(size_j):
                t = dict(entries(i, j))
                t[()] = t.get((), field.zero) - (field.one if i == j else field.zero)
                r = alg.element(t)
                if r:
                    rels.append(r)

    # (u v^t)_{ij} = delta_ij  (m x m)
    add_matrix_relation(
        lambda i, j: {((u(i, k), v(j, k))): field.one for k in range(n)}, m, m)
    # (v F u^t E^-1)_{ij} = delta_ij  (m x m)
    def vfue(i, j):
        t = {}
        for k in range(n):
            for l in range(n):
                for s in range(m):
                    c = F[k, l] * Einv[s, j]
                    if c:
                        w = (v(i, k), u(s, l))
                        t[w] = t.get(w, field.zero) + c
        return t
    add_matrix_relation(vfue, m, m)
    # (v^t u)_{ij} = delta_ij  (n x n)
    add_matrix_relation(
        lambda i, j: {((v(k, i), u(k, j))): field.one for k in range(m)}, n, n)
    # (F u^t E^-1 v)_{ij} = delta_ij  (n x n)
    def fuev(i, j):
        t = {}
        for k in range(n):
            for l in range(m):
                for s in range(m):
                    c = F[i, k] * Einv[l, s]
                    if c:
                        w = (u(l, k), v(s, j))
                        t[w] = t.get(w, field.zero) + c
        return t
    add_matrix_relation(fuev, n, n)
    return Presentation(alg, rels, name=name or "H(%dx%d)" % (m, n))


def cosovereign_cogroupoid(objects, name="H"):
    """The H cogroupoid: Delta diagonal on u and v; eps = delta;
    S(u, v) = (v^t, E u^t F^-1)."""
    labels = list(objects)
    field = next(iter(objects.values())).field
    hom = {}
    for x in labels:
        for y in labels:
            hom[(x, y)] = cosovereign_hom_presentation(
                objects[x], objects[y], name="%s(%s,%s)" % (name, x, y))
    unit = trivial_presentation(field)
    delta, eps, antipode = {}, {}, {}

    def uidx(n, i, j):
        return i * n + j

    def vidx(m, n, i, j):
        return m * n + i * n + j

    for x in labels:
        for y in labels:
            mx, ny = objects[x].m, objects[y].m
            pxy = hom[(x, y)]
            for z in labels:
                pz = objects[z].m
                ts = TensorSpace((hom[(x, z)], hom[(z, y)]))
                images = []
                for i in range(mx):
                    for j in range(ny):
                        images.append(
                            {((uidx(pz, i, k),), (uidx(ny, k, j),)): field.one
                             for k in range(pz)})
                for i in range(mx):
                    for j in range(ny):
                        images.append(
                            {((vidx(mx, pz, i, k),), (vidx(pz, ny, k, j),)): field.one
                             for k in range(pz)})
                delta[(x, y, z)] = Morphism(
                    pxy, ts, images, name="delta[%s,%s;%s]" % (x, y, z))
            pyx = hom[(y, x)]
            E, F = objects[x], objects[y]
            Finv = F.inverse()
            images = []
            # S(u_ij) = (v^{Y,X})_ji
            for i in range(mx):
                for j in range(ny):
                    images.append(NCPoly(
                        pyx.alg, {(vidx(ny, mx, j, i),): field.one}))
            # S(v_ij) = (E u^{Y,X t} F^-1)_ij = sum_{k,l} E_ik u_{lk} F^-1_lj
            for i in range(mx):
                for j in range(ny):
                    img = NCPoly(pyx.alg, {})
                    for k in range(mx):
                        for l in range(ny):
                            c = E[i, k] * Finv[l, j]
                            if c:
                                img = img + NCPoly(
                                    pyx.alg, {(uidx(mx, l, k),): c})
                    images.append(img)
            antipode[(x, y)] = Morphism(
                pxy, pyx, images, anti=True, name="S[%s,%s]" % (x, y))
        mm = objects[x].m
        pxx = hom[(x, x)]
        imgs = [unit.alg.const(field.one if i == j else field.zero)
                for i in range(mm) for j in range(mm)]
        eps[x] = Morphism(pxx, unit, imgs + imgs, name="eps[%s]" % x)
    inv = {x: (objects[x].trace(), objects[x].inverse().trace())
           for x in labels}
    expected_zero = {(x, y) for x in labels for y in labels
                     if inv[x] != inv[y]}
    return CogroupoidData(labels, hom, delta, eps, antipode, name=name,
                          object_data=dict(objects),
                          expected_zero=expected_zero)


def make_H(E, F, name="H"):
    pres = cosovereign_hom_presentation(E, F, name=name)
    info = {
        "trace_E": str(E.trace()), "trace_Einv": str(E.inverse().trace()),
        "trace_F": str(F.trace()), "trace_Finv": str(F.inverse().trace()),
        "expected_zero": (E.trace(), E.inverse().trace())
                         != (F.trace(), F.inverse().trace()),
    }
    return pres, info


def fq_matrix(field, qname="q"):
    """diag(1/q, q), the standard normalized 2x2 object of the H family."""
    q = field.param(qname)
    return ExactMatrix(field, [[field.one / q, field.zero],
                               [field.zero, q]])


def standard_comodule_H(hopf, E, dual=False, name=None):
    """U (coaction through u) or its dual V (through v)."""
    p = hopf.presentation
    m = E.m
    off = m * m if dual else 0
    mat = [[p.alg.gen(off + i * m + j) for j in range(m)] for i in range(m)]
    return MatrixComodule(hopf, mat, name=name or ("Ustar" if dual else "U"))


# ---------------------------------------------------------------------------
# AST matrices and the multiparametric GL_n family


class ASTMatrix:
    """Parameter matrix with p_ii = 1 and p_ij p_ji = 1."""

    def __init__(self, mat, pm=False):
        self.mat = mat
        field = mat.field
        n = mat.m
        if not mat.is_square:
            raise NotAST("AST matrix must be square")
        for i in range(n):
            if mat[i, i] != field.one:
                raise NotAST("p_%d%d != 1" % (i + 1, i + 1))
            for j in range(n):
                if not mat[i, j]:
                    raise NotAST("zero entry p_%d%d" % (i + 1, j + 1))
                if mat[i, j] * mat[j, i] != field.one:
                    raise NotAST("p_ij p_ji != 1 at (%d,%d)" % (i + 1, j + 1))
        if pm:
            for i in range(n):
                for j in range(n):
                    if mat[i, j] != field.one and mat[i, j] != -field.one:
                        raise NotPlusMinusOne(
                            "entry (%d,%d) is not +-1" % (i + 1, j + 1))
        self.pm = pm
        self.n = n
        self.field = field

    def __getitem__(self, ij):
        return self.mat[ij]

    @classmethod
    def trivial(cls, field, n, pm=False):
        return cls(ExactMatrix(field,
                               [[field.one] * n for _ in range(n)]), pm=pm)

    @classmethod
    def from_strs(cls, field, rows, pm=False):
        return cls(ExactMatrix.from_strs(field, rows), pm=pm)


def glpq_hom_presentation(p, q, name=None):
    """O_{p,q}(GL_n): generators x_ij, y_ij with the three commutation
    families and the two delta-sum relations."""
    if p.n != q.n:
        raise NotAST("AST matrices of different sizes")
    n = p.n
    field = p.field
    names = (["x%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
             + ["y%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)])
    alg = FreeAlgebra(field, names)

    def x(i, j):
        return i * n + j

    def y(i, j):
        return n * n + i * n + j

    rels = []

    def comm(a, b, c):
        # a b - c * b a, accumulating in case the words coincide
        t = {(a, b): field.one}
        t[(b, a)] = t.get((b, a), field.zero) - c
        return alg.element(t)

    for k in range(n):
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    c = p[k, i] * q[j, l]
                    # x_kl x_ij = p_ki q_jl x_ij x_kl, same for y
                    r = comm(x(k, l), x(i, j), c)
                    if r:
                        rels.append(r)
                    r = comm(y(k, l), y(i, j), c)
                    if r:
                        rels.append(r)
                    # y_kl x_ij = p_ik q_lj x_ij y_kl
                    r = comm(y(k, l), x(i, j), p[i, k] * q[l, j])
                    if r:
                        rels.append(r)
    for i in range(n):
        for j in range(n):
            t1 = {(x(i, k), y(j, k)): field.one for k in range(n)}
            t1[()] = -(field.one if i == j else field.zero)
            rels.append(alg.element(t1))
            t2 = {(x(k, i), y(k, j)): field.one for k in range(n)}
            t2[()] = -(field.one if i == j else field.zero)
            rels.append(alg.element(t2))
    return Presentation(alg, rels, name=name or "O_pq(GL%d)" % n)


def glpq_cogroupoid(objects, name="GL"):
    """Multiparametric GL_n cogroupoid on AST matrices.

    Delta diagonal on x and y, eps = delta, S(x, y) = (y^t, x^t)."""
    labels = list(objects)
    some = next(iter(objects.values()))
    field, n = some.field, some.n
    hom = {}
    for a in labels:
        for b in labels:
            hom[(a, b)] = glpq_hom_presentation(
                objects[a], objects[b], name="%s(%s,%s)" % (name, a, b))
    unit = trivial_presentation(field)
    nn = n * n

    def x(i, j):
        return i * n + j

    def y(i, j):
        return nn + i * n + j

    delta, eps, antipode = {}, {}, {}
    for a in labels:
        for b in labels:
            pab = hom[(a, b)]
            for c in labels:
                ts = TensorSpace((hom[(a, c)], hom[(c, b)]))
                images = []
                for i in range(n):
                    for j in range(n):
                        images.append({((x(i, k),), (x(k, j),)): field.one
                                       for k in range(n)})
                for i in range(n):
                    for j in range(n):
                        images.append({((y(i, k),), (y(k, j),)): field.one
                                       for k in range(n)})
                delta[(a, b, c)] = Morphism(
                    pab, ts, images, name="delta[%s,%s;%s]" % (a, b, c))
            pba = hom[(b, a)]
            images = [NCPoly(pba.alg, {(y(j, i),): field.one})
                      for i in range(n) for j in range(n)]
            images += [NCPoly(pba.alg, {(x(j, i),): field.one})
                       for i in range(n) for j in range(n)]
            antipode[(a, b)] = Morphism(
                pab, pba, images, anti=True, name="S[%s,%s]" % (a, b))
        imgs = [unit.alg.const(field.one if i == j else field.zero)
                for i in range(n) for j in range(n)]
        eps[a] = Morphism(hom[(a, a)], unit, imgs + imgs, name="eps[%s]" % a)
    return CogroupoidData(labels, hom, delta, eps, antipode, name=name,
                          object_data=dict(objects))


def quantum_torus(p, name=None):
    """Confluent rewrite system for the p-twisted Laurent algebra on
    t_1..t_n and their inverses."""
    n = p.n
    field = p.field
    names = []
    for i in range(n):
        names.extend(["t%d" % (i + 1), "s%d" % (i + 1)])
    alg = FreeAlgebra(field, names)

    def t(i):
        return 2 * i

    def s(i):
        return 2 * i + 1

    rules = []
    for i in range(n):
        rules.append(((t(i), s(i)), alg.one()))
        rules.append(((s(i), t(i)), alg.one()))
    for i in range(n):
        for k in range(i + 1, n):
            # t_i t_k = p_ik t_k t_i  =>  t_k t_i -> p_ki t_i t_k
            rules.append(((t(k), t(i)),
                          alg.element({(t(i), t(k)): p[k, i]})))
            rules.append(((s(k), s(i)),
                          alg.element({(s(i), s(k)): p[k, i]})))
            # t_i t_k^-1 = p_ki t_k^-1 t_i  =>  t_k s_i -> p_ik s_i t_k
            rules.append(((t(k), s(i)),
                          alg.element({(s(i), t(k)): p[i, k]})))
            rules.append(((s(k), t(i)),
                          alg.element({(t(i), s(k)): p[i, k]})))
    return RewriteSystem(alg, rules, name=name or "k_p[t^+-1]")


def torus_witness_images_gl(glp, torus):
    """Images x_ij -> delta_ij t_i, y_ij -> delta_ij t_i^-1 of the
    nonzero-ness witness for O_{p,1}(GL_n)."""
    n = int(round((len(glp.alg.names) // 2) ** 0.5))
    field = glp.field
    images = []
    for i in range(n):
        for j in range(n):
            images.append(NCPoly(torus.alg, {(2 * i,): field.one})
                          if i == j else NCPoly(torus.alg, {}))
    for i in range(n):
        for j in range(n):
            images.append(NCPoly(torus.alg, {(2 * i + 1,): field.one})
                          if i == j else NCPoly(torus.alg, {}))
    return images


# ---------------------------------------------------------------------------
# twisted S_2n family


def s2n_star(i):
    """The pairing data on 1-based indices: returns (i', i*) 1-based."""
    if i % 2 == 0:
        return i - 1, i // 2
    return i + 1, (i + 1) // 2


def s2n_r_tensor(p, i, j, k, l):
    """Exchange-relation coefficient R_ij^kl for an AST_2 matrix p; all
    indices 1-based in 1..2n."""
    field = p.field
    _, istar = s2n_star(i)
    _, jstar = s2n_star(j)
    _, kstar = s2n_star(k)
    _, lstar = s2n_star(l)
    if istar != lstar or jstar != kstar:
        return field.zero
    sign_il = field.one if (i - l) % 2 == 0 else -field.one
    sign_jk = field.one if (j - k) % 2 == 0 else -field.one
    return (field.one + sign_il + sign_jk
            + sign_il * sign_jk * p[jstar - 1, istar - 1])


def s2n_hom_presentation(p, q, name=None):
    """O_{p,q}(S_2n): magic-square style relations plus the R-encoded
    exchange relations  sum R_ab^kl(p) x_ai x_bj = sum R_ij^ab(q) x_ka x_lb."""
    if not (p.pm and q.pm):
        raise NotPlusMinusOne("S_2n family needs +-1 AST matrices")
    if p.n != q.n:
        raise NotAST("AST matrices of different sizes")
    n2 = 2 * p.n
    field = p.field
    names = ["x%d%d" % (i, j) for i in range(1, n2 + 1) for j in range(1, n2 + 1)]
    alg = FreeAlgebra(field, names)

    def x(i, j):  # 1-based
        return (i - 1) * n2 + (j - 1)

    rels = []
    seen = set()

    def add(terms):
        r = alg.element(terms)
        if r:
            key = frozenset(r.terms.items())
            if key not in seen:
                seen.add(key)
                rels.append(r)

    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            for k in range(1, n2 + 1):
                # x_ij x_ik = delta_jk x_ij ; x_ji x_ki = delta_jk x_ji
                t = {(x(i, j), x(i, k)): field.one}
                if j == k:
                    t[(x(i, j),)] = -field.one
                add(t)
                t = {(x(j, i), x(k, i)): field.one}
                if j == k:
                    t[(x(j, i),)] = -field.one
                add(t)
    for i in range(1, n2 + 1):
        t = {(x(i, l),): field.one for l in range(1, n2 + 1)}
        t[()] = -field.one
        add(t)
        t = {(x(l, i),): field.one for l in range(1, n2 + 1)}
        t[()] = -field.one
        add(t)
    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            for k in range(1, n2 + 1):
                for l in range(1, n2 + 1):
                    t = {}
                    for a in range(1, n2 + 1):
                        for b in range(1, n2 + 1):
                            c = s2n_r_tensor(p, a, b, k, l)
                            if c:
                                w = (x(a, i), x(b, j))
                                t[w] = t.get(w, field.zero) + c
                            c = s2n_r_tensor(q, i, j, a, b)
                            if c:
                                w = (x(k, a), x(l, b))
                                t[w] = t.get(w, field.zero) - c
                    add(t)
    return Presentation(alg, rels, name=name or "O_pq(S%d)" % n2)


def s2n_cogroupoid(objects, name="S2n"):
    """Cogroupoid of the twisted S_2n family: Delta matrix-style,
    eps = delta, S(x) = x^t."""
    labels = list(objects)
    some = next(iter(objects.values()))
    field = some.field
    n2 = 2 * some.n
    hom = {}
    for a in labels:
        for b in labels:
            hom[(a, b)] = s2n_hom_presentation(
                objects[a], objects[b], name="%s(%s,%s)" % (name, a, b))
    unit = trivial_presentation(field)

    def x(i, j):
        return (i - 1) * n2 + (j - 1)

    delta, eps, antipode = {}, {}, {}
    for a in labels:
        for b in labels:
            pab = hom[(a, b)]
            for c in labels:
                ts = TensorSpace((hom[(a, c)], hom[(c, b)]))
                images = []
                for i in range(1, n2 + 1):
                    for j in range(1, n2 + 1):
                        images.append({((x(i, k),), (x(k, j),)): field.one
                                       for k in range(1, n2 + 1)})
                delta[(a, b, c)] = Morphism(
                    pab, ts, images, name="delta[%s,%s;%s]" % (a, b, c))
            pba = hom[(b, a)]
            images = [NCPoly(pba.alg, {(x(j, i),): field.one})
                      for i in range(1, n2 + 1) for j in range(1, n2 + 1)]
            antipode[(a, b)] = Morphism(
                pab, pba, images, anti=True, name="S[%s,%s]" % (a, b))
        imgs = [unit.alg.const(field.one if i == j else field.zero)
                for i in range(1, n2 + 1) for j in range(1, n2 + 1)]
        eps[a] = Morphism(hom[(a, a)], unit, imgs, name="eps[%s]" % a)
    return CogroupoidData(labels, hom, delta, eps, antipode, name=name,
                          object_data=dict(objects))


def twisted_polynomial_presentation(p, name=None):
    """k_p[x_1..x_2n]: the twisted-commutation quadratic algebra coacted on
    by O_p(S_2n)."""
    if not p.pm:
        raise NotPlusMinusOne("needs a +-1 AST matrix")
    n2 = 2 * p.n
    field = p.field
    alg = FreeAlgebra(field, ["x%d" % i for i in range(1, n2 + 1)])

    def xg(i):
        return i - 1

    four = field.rational(4)
    rels = []
    seen = set()
    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            ip, istar = s2n_star(i)
            jp, jstar = s2n_star(j)
            pij = p[istar - 1, jstar - 1]
            t = {}
            t[(xg(i), xg(j))] = four
            for (a, b), coeff in (
                    ((j, i), field.rational(3) + pij),
                    ((jp, i), field.one - pij),
                    ((j, ip), field.one - pij),
                    ((jp, ip), pij - field.one)):
                w = (xg(a), xg(b))
                t[w] = t.get(w, field.zero) - coeff
            r = alg.element(t)
            if r:
                key = frozenset(r.terms.items())
                if key not in seen:
                    seen.add(key)
                    rels.append(r)
    return Presentation(alg, rels, name=name or "k_p[x1..x%d]" % n2)


def twisted_group_algebra(p, name=None):
    """Confluent rewrite system for t_i^2 = 1, t_i t_j = p_ij t_j t_i."""
    if not p.pm:
        raise NotPlusMinusOne("needs a +-1 AST matrix")
    n = p.n
    field = p.field
    alg = FreeAlgebra(field, ["t%d" % (i + 1) for i in range(n)])
    rules = []
    for i in range(n):
        rules.append(((i, i), alg.one()))
    for i in range(n):
        for k in range(i + 1, n):
            rules.append(((k, i), alg.element({(i, k): p[i, k]})))
    return RewriteSystem(alg, rules, name=name or "k_sigma[(Z/2)^%d]" % n)


def s2n_witness_images(pres, p, target):
    """Images x_ij -> (delta_{i*j*}/2)(1 + (-1)^{j-i} t_{i*}) of the
    nonzero-ness witness for O_{p,1}(S_2n)."""
    n2 = 2 * p.n
    field = p.field
    half = field.rational(1, 2)
    images = []
    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            _, istar = s2n_star(i)
            _, jstar = s2n_star(j)
            if istar != jstar:
                images.append(NCPoly(target.alg, {}))
            else:
                sign = field.one if (j - i) % 2 == 0 else -field.one
                images.append(NCPoly(
                    target.alg, {(): half, (istar - 1,): half * sign}))
    return images


# ---------------------------------------------------------------------------
# finite groups, 2-cocycles, and the cocycle cogroupoid of k[G]


class FiniteGroup:
    """Multiplication table on elements 0..n-1 with identity 0."""

    def __init__(self, table, names=None):
        self.table = [list(r) for r in table]
        self.n = len(self.table)
        self.names = list(names) if names else ["g%d" % i for i in range(self.n)]
        for i in range(self.n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("element 0 is not an identity")
        self.inv = [None] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.table[i][j] == 0:
                    self.inv[i] = j
        if any(v is None for v in self.inv):
            raise ValueError("not a group table")

    def mul(self, a, b):
        return self.table[a][b]

    @classmethod
    def z2_power(cls, k):
        n = 2 ** k
        table = [[i ^ j for j in range(n)] for i in range(n)]
        names = []
        for i in range(n):
            bits = [str((i >> b) & 1) for b in range(k)]
            names.append("(" + ",".join(bits) + ")")
        return cls(table, names)

    @classmethod
    def cyclic(cls, n):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])


class GroupCocycle:
    """2-cocycle on a finite group with values in nonzero scalars."""

    def __init__(self, group, table, name="sigma"):
        self.group = group
        self.table = [list(r) for r in table]
        self.name = name
        self.validate()

    def validate(self):
        g = self.group
        n = g.n
        for a in range(n):
            if self.table[a][0] != self.one_value() or \
               self.table[0][a] != self.one_value():
                raise NotACocycle("%s is not normalized" % self.name)
        for a in range(n):
            for b in range(n):
                if not self.table[a][b]:
                    raise NotACocycle("%s vanishes at (%d,%d)" % (self.name, a, b))
                for c in range(n):
                    lhs = self.table[a][b] * self.table[g.mul(a, b)][c]
                    rhs = self.table[b][c] * self.table[a][g.mul(b, c)]
                    if lhs != rhs:
                        raise NotACocycle(
                            "%s fails the cocycle identity at (%d,%d,%d)"
                            % (self.name, a, b, c))

    def one_value(self):
        return self.table[0][0]

    def __call__(self, a, b):
        return self.table[a][b]

    def inverse_value(self, a, b):
        # on group-likes the convolution inverse is the pointwise inverse
        return self.one_value() / self.table[a][b]

    @classmethod
    def trivial(cls, group, field, name="1"):
        return cls(group, [[field.one] * group.n for _ in range(group.n)],
                   name=name)

    @classmethod
    def z2sq_bilinear(cls, group, field, name="sigma"):
        """On (Z/2)^2 with elements (a,b) encoded as bits: the bilinear
        cocycle ((a,b),(c,d)) -> (-1)^(b c)."""
        if group.n != 4:
            raise NotACocycle("expected the Klein four-group")
        tbl = []
        for gidx in range(4):
            row = []
            b = (gidx >> 1) & 1
            for hidx in range(4):
                c = hidx & 1
                row.append(-field.one if (b and c) else field.one)
            tbl.append(row)
        return cls(group, tbl, name=name)


def cocycle_hom_presentation(group, sigma, tau, field, name=None):
    """H(sigma, tau): basis k[G] with product g.h = sigma(g,h)/tau(g,h) gh,
    presented on the non-identity group elements."""
    n = group.n
    alg = FreeAlgebra(field, [group.names[i] for i in range(1, n)])

    def word(gidx):
        return () if gidx == 0 else (gidx - 1,)

    rels = []
    for a in range(1, n):
        for b in range(1, n):
            c = sigma(a, b) * tau.inverse_value(a, b)
            prod = group.mul(a, b)
            rels.append(alg.element(
                {(a - 1, b - 1): field.one, word(prod): -c}))
    return Presentation(alg, rels, name=name or "H(%s,%s)" % (sigma.name, tau.name))


def cocycle_product_value(group, sigma, tau, a, b):
    """(scalar, group element) of the product of basis elements a.b."""
    return sigma(a, b) * tau.inverse_value(a, b), group.mul(a, b)


def cocycle_cogroupoid(group, cocycles, field, name=None):
    """The 2-cocycle cogroupoid of k[G] restricted to a finite set of group
    cocycles: all hom-algebras are |G|-dimensional and every structural map
    is exact."""
    labels = list(cocycles)
    hom = {}
    for a in labels:
        for b in labels:
            hom[(a, b)] = cocycle_hom_presentation(
                group, cocycles[a], cocycles[b], field,
                name="H(%s,%s)" % (a, b))
    unit = trivial_presentation(field)
    delta, eps, antipode = {}, {}, {}
    n = group.n
    for a in labels:
        for b in labels:
            pab = hom[(a, b)]
            for c in labels:
                ts = TensorSpace((hom[(a, c)], hom[(c, b)]))
                images = [{((g - 1,), (g - 1,)): field.one}
                          for g in range(1, n)]
                delta[(a, b, c)] = Morphism(
                    pab, ts, images, name="delta[%s,%s;%s]" % (a, b, c))
            # S_{sigma,tau}(g) = sigma(g, g^-1) tau^-1(g^-1, g) g^-1
            pba = hom[(b, a)]
            sig, tu = cocycles[a], cocycles[b]
            images = []
            for g in range(1, n):
                gi = group.inv[g]
                cval = sig(g, gi) * tu.inverse_value(gi, g)
                w = () if gi == 0 else (gi - 1,)
                images.append(NCPoly(pba.alg, {w: cval}))
            antipode[(a, b)] = Morphism(
                pab, pba, images, anti=True, name="S[%s,%s]" % (a, b))
        eps[a] = Morphism(hom[(a, a)], unit,
                          [unit.alg.const(field.one) for _ in range(n - 1)],
                          name="eps[%s]" % a)
    cg = CogroupoidData(labels, hom, delta, eps, antipode,
                        name=name or "Z2cocycle(%s)" % ",".join(labels),
                        object_data=dict(cocycles))
    for a in labels:
        for b in labels:
            cg.nonzero[(a, b)] = "finite-dimensional with basis G"
    return cg


# ---------------------------------------------------------------------------
# the model comodule algebra A_{M,t}


def amt_presentation(M, t, name=None):
    """A_{M,t} on x_1..x_m with the single relation sum M_ij x_i x_j = t."""
    _require_invertible(M, "M")
    field = M.field
    m = M.m
    alg = FreeAlgebra(field, ["x%d" % (i + 1) for i in range(m)])
    terms = {}
    for i in range(m):
        for j in range(m):
            if M[i, j]:
                terms[(i, j)] = M[i, j]
    tval = t if not isinstance(t, int) else field.rational(t)
    terms[()] = -tval
    return Presentation(alg, [alg.element(terms)],
                        name=name or "A_{M,%s}" % t)


def make_AMt(E, t, hopf=None, name=None):
    """The B(E)-comodule algebra A_{E^-1, t} with its coaction morphism
    alpha(x_i) = sum_k x_k x a_ki, plus the well-definedness certificate."""
    Einv = E.inverse()
    pres = amt_presentation(Einv, t, name=name)
    if hopf is None:
        hopf = bilinear_hopf(E)
    field = E.field
    m = E.m
    ts = TensorSpace((pres, hopf.presentation))
    images = []
    for i in range(m):
        images.append({((k,), (k * m + i,)): field.one for k in range(m)})
    coaction = Morphism(pres, ts, images, name="coaction(A_Mt)")
    cert = coaction.check(name="comodule-algebra:A_{M,%s}" % t)
    return pres, coaction, cert
