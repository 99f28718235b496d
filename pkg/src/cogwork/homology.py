"""Koszul-type equivariant resolutions for the quadric algebras A_{M,t},
exactness and equivariance certificates, resolution transport, and small
Hochschild computations with character coefficients.

The complex is 0 -> A x A -> A x V x A -> A x A -> A -> 0 with
d0 = multiplication, d1(1 x v_i x 1) = x_i x 1 - 1 x x_i, and
gamma(1 x 1) = sum_ij M_ij (x_i x x_j x 1 + 1 x x_i x x_j); the
coefficient pattern is validated on construction by checking that
d1(gamma(1 x 1)) reduces to r x 1 - 1 x r (which vanishes in A x A).
Exactness is certified per filtration level by exact rank computations.
"""

from itertools import product

from .certificates import Certificate, merge
from .errors import NoCharacter, SingularMatrix
from .linalg import Echelon, rank_and_kernel
from .presentation import TensorSpace


def _acc(out, key, val):
    v = out.get(key, 0) + val
    if v:
        out[key] = v
    elif key in out:
        del out[key]


class KoszulComplex:
    """The length-2 free bimodule resolution of A_{M,t}."""

    def __init__(self, A, M, t, hopf=None, coaction=None):
        self.A = A
        self.M = M
        self.t = t
        self.m = M.m
        self.hopf = hopf
        self.coaction = coaction
        field = A.field
        self.gamma_value = {}
        for i in range(self.m):
            for j in range(self.m):
                c = M[i, j]
                if c:
                    _acc(self.gamma_value, (((i,)), j, ()), c)
                    _acc(self.gamma_value, ((), i, ((j,))), c)

    # -- differentials on slice bases ---------------------------------------

    def d0(self, key):
        u, v = key
        return self.A.mul_words(u, v)

    def d1(self, key):
        u, i, v = key
        out = {}
        for w, c in self.A.mul_words(u, (i,)).items():
            _acc(out, (w, v), c)
        for w, c in self.A.mul_words((i,), v).items():
            _acc(out, (u, w), -c)
        return out

    def gamma(self, key):
        u, v = key
        out = {}
        for (a, i, b), c in self.gamma_value.items():
            left = self.A.mul_words(u, a)
            right = self.A.mul_words(b, v)
            for lw, cl in left.items():
                for rw, cr in right.items():
                    _acc(out, (lw, i, rw), c * cl * cr)
        return out

    # -- slice bases ---------------------------------------------------------

    def basis_p1(self, lvl):
        words = self.A.basis_words(lvl)
        wd = self.A.alg.wdeg
        return [(u, v) for u in words for v in words if wd(u) + wd(v) <= lvl]

    def basis_p2(self, lvl):
        words = self.A.basis_words(max(lvl - 1, 0))
        wd = self.A.alg.wdeg
        return [(u, i, v) for u in words for i in range(self.m)
                for v in words if wd(u) + 1 + wd(v) <= lvl]

    def check_dd_zero(self, d):
        """d0 d1 = 0 and d1 gamma = 0, verified on the defining values and
        on every slice basis element up to level d."""
        bad = []
        # defining values: d1(gamma(1 x 1)) reduces to r x 1 - 1 x r = 0
        val = {}
        for (a, i, b), c in self.gamma_value.items():
            for k, cc in self.d1((a, i, b)).items():
                _acc(val, k, c * cc)
        if val:
            bad.append("d1(gamma(1 x 1)) != 0: %s" % str(val)[:120])
        for key in self.basis_p2(d):
            img = self.d1(key)
            out = {}
            for (u, v), c in img.items():
                for w, cc in self.A.mul_words(u, v).items():
                    _acc(out, w, c * cc)
            if out:
                bad.append("m(d1(%s)) != 0" % (key,))
                break
        for key in self.basis_p1(max(d - 2, 0)):
            img = self.gamma(key)
            out = {}
            for k2, c in img.items():
                for k3, cc in self.d1(k2).items():
                    _acc(out, k3, c * cc)
            if out:
                bad.append("d1(gamma(%s)) != 0" % (key,))
                break
        return Certificate(
            check="koszul-d-squared-zero", objects=(self.A.name,), degree=d,
            passed=not bad, residue="; ".join(bad[:3]) or None)


def koszul_complex(M, t, hopf=None, coaction=None, name=None):
    """Build the Koszul complex of A_{M,t} and validate the boundary
    pattern; M must be invertible."""
    from .families import amt_presentation
    if not M.is_invertible():
        raise SingularMatrix("relation coefficient matrix must be invertible")
    A = amt_presentation(M, t, name=name)
    K = KoszulComplex(A, M, t, hopf=hopf, coaction=coaction)
    cert = K.check_dd_zero(2)
    if not cert.passed:
        raise ValueError("gamma pattern failed validation: %s" % cert.residue)
    return K


def check_exactness(K, d):
    """Per-filtration-level homology dimensions of the complex.

    Returns (table, certificate); table[level] is a dict with the ranks
    and homology dimensions at that level."""
    A = K.A
    field = A.field
    table = {}
    bad = []
    for lvl in range(d + 1):
        p1 = K.basis_p1(lvl)
        p2 = K.basis_p2(lvl)
        p3 = K.basis_p1(max(lvl - 2, 0)) if lvl >= 2 else []
        p0dim = A.dim_leq(lvl)
        r0 = _rank(field, [K.d0(k) for k in p1])
        r1 = _rank(field, [K.d1(k) for k in p2])
        rg = _rank(field, [K.gamma(k) for k in p3])
        # composite ranks vanish for a genuine complex; keeping them in the
        # homology formula makes corrupted differentials visible
        r10 = _rank(field, [_compose(K.d0, K.d1(k)) for k in p2])
        rg1 = _rank(field, [_compose(K.d1, K.gamma(k)) for k in p3])
        h0 = p0dim - r0
        h_at_p1 = (len(p1) - r0) - (r1 - r10)
        h_at_p2 = (len(p2) - r1) - (rg - rg1)
        h_at_p3 = len(p3) - rg
        table[lvl] = {
            "dims": [p0dim, len(p1), len(p2), len(p3)],
            "ranks": [r0, r1, rg],
            "composite_ranks": [r10, rg1],
            "coker_d0": h0,
            "H_at_AA": h_at_p1,
            "H_at_AVA": h_at_p2,
            "ker_gamma": h_at_p3,
        }
        if r10 or rg1:
            bad.append("level %d: d compose d has rank %s" % (lvl, (r10, rg1)))
        if h0 or h_at_p1 or h_at_p2 or h_at_p3:
            bad.append("level %d: homology %s" %
                       (lvl, (h0, h_at_p1, h_at_p2, h_at_p3)))
    cert = Certificate(
        check="koszul-exactness", objects=(A.name,), degree=d,
        passed=not bad, residue="; ".join(bad[:3]) or None,
        details={"levels": {str(k): v for k, v in table.items()}})
    return table, cert


def _rank(field, vectors):
    ech = Echelon(field, sortkey=lambda k: str(k))
    for v in vectors:
        if v:
            ech.insert(v)
    return ech.rank


def _compose(dmap, img):
    out = {}
    for key, c in img.items():
        for k2, c2 in dmap(key).items():
            _acc(out, k2, c * c2)
    return out


def check_equivariance(K, d=2):
    """Each differential's defining values are comodule-map data for the
    attached Hopf coaction: d1's values transform like the defining
    comodule, gamma's value is a coinvariant of A x V x A."""
    if K.hopf is None or K.coaction is None:
        raise ValueError("complex carries no Hopf coaction")
    A, H = K.A, K.hopf.presentation
    field = A.field
    m = K.m
    beta = K.coaction  # A -> A x H, x_i -> sum_k x_k x a_ki
    bad = []

    def coact_word(w):
        return beta.apply_word(w)

    # d1 values: x_i x 1 - 1 x x_i transform with the coefficient matrix
    lhs = []
    for i in range(m):
        out = {}
        for (u, hw), c in coact_word((i,)).items():
            _acc(out, (u, (), hw), c)
            # careful: coaction of x_i x 1 - 1 x x_i in (A x A) x H
        for (u, hw), c in coact_word((i,)).items():
            _acc(out, ((), u, hw), -c)
        lhs.append(out)
    for i in range(m):
        rhs = {}
        for k in range(m):
            for hw, c in H.reduce_word((k * m + i,)).items():
                _acc(rhs, ((k,), (), hw), c)
                _acc(rhs, ((), (k,), hw), -c)
        if lhs[i] != rhs:
            bad.append("d1 value %d is not colinear" % i)
    # gamma value: coinvariant of A x V x A
    got = {}
    for (a, i, b), c in K.gamma_value.items():
        for (u1, h1), c1 in coact_word(a).items():
            for (u2, h2), c2 in coact_word(b).items():
                for k in range(m):
                    for h3, c3 in H.reduce_word((k * m + i,)).items():
                        for hw, ch in _mul3(H, h1, h3, h2):
                            _acc(got, (u1, k, u2, hw), c * c1 * c2 * c3 * ch)
    want = {(a, i, b) + ((),): c for (a, i, b), c in K.gamma_value.items()}
    if got != want:
        bad.append("gamma value is not coinvariant")
    return Certificate(
        check="koszul-equivariance", objects=(A.name, K.hopf.name), degree=d,
        passed=not bad, residue="; ".join(bad[:3]) or None)


def _mul3(H, h1, h2, h3):
    out = {}
    for w12, c12 in H.mul_words(h1, h2).items():
        for w, c in H.mul_words(w12, h3).items():
            _acc(out, w, c12 * c)
    return out.items()


def transport_resolution(C, X, Y, K_src, K_tgt, gen_matrix, d):
    """Compare the transported resolution with the directly built one.

    gen_matrix G gives the identification iota(x_i^tgt) =
    sum_k x_k^src x G[k][i] (and the same matrix identifies the defining
    comodules); the transported differentials agree with the direct ones
    when, after applying iota on every A-leg and nu on every V-leg and
    multiplying the C(X,Y)-legs, the defining values of K_tgt map to the
    defining values of K_src tensored with 1."""
    A_s, A_t = K_src.A, K_tgt.A
    pxy = C.hom[(X, Y)]
    field = A_s.field
    m_s, m_t = K_src.m, K_tgt.m
    G = [[pxy.reduce(gen_matrix[k][i]) for i in range(m_t)]
         for k in range(m_s)]
    bad = []
    # gamma comparison: (iota x nu x iota)(gamma_t(1 x 1)), C-legs
    # multiplied, equals gamma_s(1 x 1) x 1
    lhs = {}
    for (a, i, b), c in K_tgt.gamma_value.items():
        # a and b are words of A_t of length <= 1; expand through iota
        for (ua, ca, cwa) in _iota_word(A_s, G, m_s, a, field):
            for (ub, cb, cwb) in _iota_word(A_s, G, m_s, b, field):
                for k in range(m_s):
                    for wv, cv in G[k][i].items():
                        for w1, c1 in pxy.mul_words(cwa, wv).items():
                            for w2, c2 in pxy.mul_words(w1, cwb).items():
                                _acc(lhs, (ua, k, ub, w2),
                                     c * ca * cb * cv * c1 * c2)
    rhs = {(a, i, b) + ((),): c for (a, i, b), c in K_src.gamma_value.items()}
    if lhs != rhs:
        bad.append("transported gamma differs from the direct one")
    # d1 comparison: (iota x iota)(d1_t value_i), C-legs multiplied, equals
    # sum_k (d1_s value_k) x G[k][i]
    for i in range(m_t):
        lhs = {}
        for (ua, ca, cwa) in _iota_word(A_s, G, m_s, (i,), field):
            _acc_key3(lhs, (ua, (), cwa), ca)
        for (ub, cb, cwb) in _iota_word(A_s, G, m_s, (i,), field):
            _acc_key3(lhs, ((), ub, cwb), -cb)
        rhs = {}
        for k in range(m_s):
            for wv, cv in G[k][i].items():
                _acc(rhs, ((k,), (), wv), cv)
                _acc(rhs, ((), (k,), wv), -cv)
        if lhs != rhs:
            bad.append("transported d1 differs at value %d" % i)
    return Certificate(
        check="transport-resolution", objects=(X, Y, A_t.name), degree=d,
        passed=not bad, residue="; ".join(bad) or None,
        details={"identification": "iota and nu from the comodule-algebra "
                                   "and comodule transport certificates"})


def _acc_key3(out, key, val):
    _acc(out, key, val)


def _iota_word(A_s, G, m_s, w, field):
    """Expand iota on a word of the target (length <= 1): list of
    (source word, coeff, C-word)."""
    if w == ():
        return [((), field.one, ())]
    i = w[0]
    out = []
    for k in range(m_s):
        for cw, c in G[k][i].items():
            out.append(((k,), c, cw))
    return out


# ---------------------------------------------------------------------------
# Hochschild with character coefficients


def character_of_amt(K, values):
    """Check that generator values define a character of A_{M,t}."""
    field = K.A.field
    total = field.zero
    for i in range(K.m):
        for j in range(K.m):
            total = total + K.M[i, j] * values[i] * values[j]
    tval = K.t if not isinstance(K.t, int) else field.rational(K.t)
    if total != tval:
        raise NoCharacter("sum M_ij c_i c_j = %s != t = %s" % (total, tval))
    return values


def hochschild_dims(K, chi, d=3):
    """H_0, H_1, H_2 of A_{M,t} with one-dimensional coefficients given by
    the character chi (a list of scalars).  The complex has length 2, so
    H_m = 0 for m > 2 structurally.

    Returns (dims, certificate)."""
    field = K.A.field
    chi = character_of_amt(K, chi)
    m = K.m
    # induced complex  k --gbar--> V --d1bar--> k
    d1bar = [chi[i] - chi[i] for i in range(m)]       # always 0
    gbar = [field.zero] * m
    for i in range(m):
        for j in range(m):
            c = K.M[i, j]
            if c:
                gbar[j] = gbar[j] + c * chi[i]
                gbar[i] = gbar[i] + c * chi[j]
    rank_d1 = 0 if all(not x for x in d1bar) else 1
    rank_g = 1 if any(gbar) else 0
    h0 = 1 - rank_d1
    h1 = (m - rank_d1) - rank_g
    h2 = 1 - rank_g
    cert = Certificate(
        check="hochschild-character-dims", objects=(K.A.name,), degree=d,
        passed=True, exact=True,
        details={"H0": h0, "H1": h1, "H2": h2,
                 "higher": "0 structurally (complex length 2)"})
    return (h0, h1, h2), cert


def bar_homology_dims(P, chi_values, n_max, level):
    """Independent oracle: homology of the normalized bar complex with
    one-dimensional chi coefficients, truncated at filtration <= level.

    Exact per degree for graded presentations.  Returns dims H_0..H_n_max.
    """
    field = P.field
    words = [w for w in P.basis_words(level) if w]
    wd = P.alg.wdeg

    def chi_word(w):
        c = field.one
        for g in w:
            c = c * chi_values[g]
        return c

    def chains(n):
        if n == 0:
            return [()]
        out = []
        for tup in chains(n - 1):
            used = sum(wd(w) for w in tup)
            for w in words:
                if used + wd(w) <= level:
                    out.append(tup + (w,))
        return out

    def boundary(tup):
        n = len(tup)
        out = {}
        if n == 0:
            return out
        _acc(out, tup[1:], chi_word(tup[0]))
        sign = field.one
        for i in range(n - 1):
            sign = -sign
            prod = P.mul_words(tup[i], tup[i + 1])
            for w, c in prod.items():
                if not w:
                    continue        # degenerate (unit slot) chains vanish
                _acc(out, tup[:i] + (w,) + tup[i + 2:], sign * c)
        sign = -sign
        _acc(out, tup[:-1], sign * chi_word(tup[-1]))
        return out

    dims = []
    ranks = {}
    for n in range(n_max + 2):
        ranks[n] = _rank(field, [boundary(t) for t in chains(n)])
    for n in range(n_max + 1):
        dim_cn = len(chains(n))
        dims.append((dim_cn - ranks[n]) - ranks[n + 1])
    return dims
