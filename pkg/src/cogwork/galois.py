"""Canonical maps and their cogroupoid inverses, Galois certificates,
cotensor products, coinvariants, cleftness and triviality tests.

The canonical map kappa and its inverse eta are composed and evaluated on
the full tensor-square basis at the requested filtration level.  Both
composites factor through right (resp. left) multiplication in the second
tensor leg, so the evaluator verifies the core values on (basis word) x 1
and extends by that factorization; the core evaluation interleaves
reduction so that the inner antipode contractions collapse to their
already-verified scalar values, keeping every reduction inside the built
filtration levels.  When the generator contractions fail to be scalar
(corrupted data), the evaluator falls back to the direct composite at low
degree and reports the residue.  For finite-dimensional hom-algebras the
direct composite is evaluated on the whole basis and the certificate is
exact.
"""

from .certificates import Certificate, merge
from .errors import NotConnected, NotStabilized
from .linalg import rank_and_kernel
from .presentation import TensorSpace


def kappa_eta_generator_audit(C, X, Y, side):
    """Instantiated kappa/eta formulas on the first generator, for the
    certificate's audit trail."""
    pxy = C.hom[(X, Y)]
    pxx = C.hom[(X, X)]
    field = pxy.field
    if not pxy.alg.ngens:
        return {}
    ts = TensorSpace((pxy, pxy))
    g0 = {((0,), ()): field.one}
    if side == "left":
        s, c = ts.apply_component(g0, 0, C.delta[(X, Y, X)])
        s, c = s.contract(c, 1, 2)
        kap = s.coords_str(c)
        ts2 = TensorSpace((pxx, pxy))
        if pxx.alg.ngens:
            h0 = {((0,), ()): field.one}
            s2, c2 = ts2.apply_component(h0, 0, C.delta[(X, X, Y)])
            s2, c2 = s2.apply_component(c2, 1, C.antipode[(Y, X)])
            s2, c2 = s2.contract(c2, 1, 2)
            eta = s2.coords_str(c2)
        else:
            eta = "trivial"
    else:
        s, c = ts.apply_component(g0, 1, C.delta[(X, Y, Y)])
        s, c = s.contract(c, 0, 1)
        kap = s.coords_str(c)
        pyy = C.hom[(Y, Y)]
        ts2 = TensorSpace((pxy, pyy))
        if pyy.alg.ngens:
            h0 = {((), (0,)): field.one}
            s2, c2 = ts2.apply_component(h0, 1, C.delta[(Y, Y, X)])
            s2, c2 = s2.apply_component(c2, 1, C.antipode[(Y, X)])
            s2, c2 = s2.contract(c2, 0, 1)
            eta = s2.coords_str(c2)
        else:
            eta = "trivial"
    return {"kappa_on_generator": kap, "eta_on_generator": eta}


# ---------------------------------------------------------------------------
# left side


def _eta_kappa_left_direct(C, X, Y, u, v):
    """Literal eta_l(kappa_l(u x v)) by composing the tensor operations."""
    pxy = C.hom[(X, Y)]
    ts = TensorSpace((pxy, pxy))
    c = {(u, v): pxy.field.one}
    s, c = ts.apply_component(c, 0, C.delta[(X, Y, X)])
    s, c = s.contract(c, 1, 2)           # kappa_l: C(X,X) x C(X,Y)
    s, c = s.apply_component(c, 0, C.delta[(X, X, Y)])
    s, c = s.apply_component(c, 1, C.antipode[(Y, X)])
    s, c = s.contract(c, 1, 2)           # eta_l: back in C(X,Y) x C(X,Y)
    return c


def _kappa_eta_left_direct(C, X, Y, a, b):
    """Literal kappa_l(eta_l(a x b)) on C(X,X) x C(X,Y)."""
    pxx, pxy = C.hom[(X, X)], C.hom[(X, Y)]
    ts = TensorSpace((pxx, pxy))
    c = {(a, b): pxx.field.one}
    s, c = ts.apply_component(c, 0, C.delta[(X, X, Y)])
    s, c = s.apply_component(c, 1, C.antipode[(Y, X)])
    s, c = s.contract(c, 1, 2)           # eta_l: C(X,Y) x C(X,Y)
    s, c = s.apply_component(c, 0, C.delta[(X, Y, X)])
    s, c = s.contract(c, 1, 2)           # kappa_l: C(X,X) x C(X,Y)
    return c


def _phi_left_step_pairs(C, X, Y):
    """Per generator g of C(X,Y): grouped pairs (first-leg word, inner
    contraction S(mid) * last in C(X,Y)) of the three-leg expansion."""
    pxy = C.hom[(X, Y)]
    out = []
    for i in range(pxy.alg.ngens):
        ts0 = TensorSpace(pxy)
        s, c = ts0.apply_component(ts0.gen_coords(i), 0, C.delta[(X, Y, X)])
        s, c = s.apply_component(c, 0, C.delta[(X, X, Y)])
        # factors now (C(X,Y), C(Y,X), C(X,Y))
        s, c = s.apply_component(c, 1, C.antipode[(Y, X)])
        s, c = s.contract(c, 1, 2)
        # factors (C(X,Y), C(X,Y)): group by first word
        groups = {}
        for (w0, w1), coeff in c.items():
            grp = groups.setdefault(w0, {})
            val = grp.get(w1, 0) + coeff
            if val:
                grp[w1] = val
            elif w1 in grp:
                del grp[w1]
        out.append({w0: grp for w0, grp in groups.items() if grp})
    return out


def _psi_left_step_pairs(C, X, Y):
    """Per generator g of C(X,X): grouped pairs (first-leg word, inner
    contraction mid * S(last) in C(X,Y))."""
    pxx = C.hom[(X, X)]
    out = []
    for i in range(pxx.alg.ngens):
        ts0 = TensorSpace(pxx)
        s, c = ts0.apply_component(ts0.gen_coords(i), 0, C.delta[(X, X, Y)])
        # factors (C(X,Y), C(Y,X))
        s, c = s.apply_component(c, 0, C.delta[(X, Y, X)])
        # factors (C(X,X), C(X,Y), C(Y,X))
        s, c = s.apply_component(c, 2, C.antipode[(Y, X)])
        s, c = s.contract(c, 1, 2)
        groups = {}
        for (w0, w1), coeff in c.items():
            grp = groups.setdefault(w0, {})
            val = grp.get(w1, 0) + coeff
            if val:
                grp[w1] = val
            elif w1 in grp:
                del grp[w1]
        out.append({w0: grp for w0, grp in groups.items() if grp})
    return out


def _steps_scalar(steps):
    """Convert grouped step pairs to (word, scalar) lists when every inner
    value is a multiple of 1; else None."""
    out = []
    for grp in steps:
        pairs = []
        for w0, inner in sorted(grp.items()):
            if list(inner) == [()]:
                pairs.append((w0, inner[()]))
            elif inner:
                return None
        out.append(pairs)
    return out


def _extend_by_steps(pres_pair, steps_scalar, words, prepend):
    """Evaluate the composite on each word through the verified scalar
    steps; returns list of (word, coords)."""
    ts = TensorSpace(pres_pair)
    field = pres_pair[0].field
    memo = {(): ts.one()}

    def ev(w):
        got = memo.get(w)
        if got is not None:
            return got
        if prepend:
            g, rest = w[0], w[1:]
            base = ev(rest)
            acc = {}
            for w0, cval in steps_scalar[g]:
                term = ts.mul({(w0, ()): field.one}, base)
                acc = ts.add(acc, term, cval)
        else:
            g, rest = w[-1], w[:-1]
            base = ev(rest)
            acc = {}
            for w0, cval in steps_scalar[g]:
                term = ts.mul(base, {(w0, ()): field.one})
                acc = ts.add(acc, term, cval)
        memo[w] = acc
        return acc

    return [(w, ev(w)) for w in words]


def verify_galois(C, X, Y, side, d, direct_cap=2):
    """Galois certificate for C(X,Y) as a left C(X,X)- (or right
    C(Y,Y)-) comodule algebra: kappa and eta are mutually inverse on the
    tensor-square basis at filtration <= d."""
    if (X, Y) in C.expected_zero:
        raise NotConnected("pair (%s,%s) is tagged as an expected zero algebra"
                           % (X, Y))
    pxy = C.hom[(X, Y)]
    field = pxy.field
    if pxy.dim_leq(d) < 1:
        raise NotConnected("hom-algebra %s has empty slices" % pxy.name)
    finite = pxy.is_finite_dimensional_at(max(1, d))
    parts = []
    if side == "left":
        pother = C.hom[(X, X)]
        phi_steps = _phi_left_step_pairs(C, X, Y)
        psi_steps = _psi_left_step_pairs(C, X, Y)
        phi_scalar = _steps_scalar(phi_steps)
        psi_scalar = _steps_scalar(psi_steps)
        words_xy = pxy.basis_words(d)
        words_xx = pother.basis_words(d)
        bad = []
        exact_mode = finite and pother.is_finite_dimensional_at(max(1, d))
        if exact_mode or phi_scalar is None or psi_scalar is None:
            cap = d if exact_mode else min(d, direct_cap)
            for u in [w for w in words_xy if pxy.alg.wdeg(w) <= cap]:
                for v in [w for w in words_xy
                          if pxy.alg.wdeg(w) + pxy.alg.wdeg(u) <= cap]:
                    got = _eta_kappa_left_direct(C, X, Y, u, v)
                    want_pair = {}
                    ts = TensorSpace((pxy, pxy))
                    want_pair = ts.reduce_free({(u, v): field.one})
                    if got != want_pair:
                        bad.append("eta(kappa(%s x %s)) != id" %
                                   (pxy.alg.word_str(u), pxy.alg.word_str(v)))
            for a in [w for w in words_xx if pother.alg.wdeg(w) <= cap]:
                for b in [w for w in words_xy
                          if pxy.alg.wdeg(w) + pother.alg.wdeg(a) <= cap]:
                    got = _kappa_eta_left_direct(C, X, Y, a, b)
                    ts = TensorSpace((pother, pxy))
                    want = ts.reduce_free({(a, b): field.one})
                    if got != want:
                        bad.append("kappa(eta(%s x %s)) != id" %
                                   (pother.alg.word_str(a), pxy.alg.word_str(b)))
            mode = "direct composite on basis pairs to degree %d" % cap
            checked = None
        else:
            # core values on (word x 1), then extension over pairs through
            # the right-leg factorization
            core1 = _extend_by_steps((pxy, pxy), phi_scalar, words_xy, True)
            for w, got in core1:
                want = {(w2, ()): cc for w2, cc in pxy.reduce_word(w).items()}
                if got != want:
                    bad.append("eta(kappa(%s x 1)) != id" % pxy.alg.word_str(w))
            core2 = _extend_by_steps((pother, pxy), psi_scalar, words_xx, False)
            for w, got in core2:
                want = {(w2, ()): cc for w2, cc in pother.reduce_word(w).items()}
                if got != want:
                    bad.append("kappa(eta(%s x 1)) != id" % pother.alg.word_str(w))
            checked = 0
            if not bad:
                ts = TensorSpace((pxy, pxy))
                core1 = dict(core1)
                for u in words_xy:
                    du = pxy.alg.wdeg(u)
                    for v in words_xy:
                        if du + pxy.alg.wdeg(v) > d:
                            continue
                        got = ts.mul(core1[u], {((), v): field.one})
                        if got != ts.reduce_free({(u, v): field.one}):
                            bad.append("pair (%s,%s)" % (u, v))
                        checked += 1
            mode = ("core values on (basis x 1) via verified scalar "
                    "contractions; right-leg extension over basis pairs")
        # also run the direct composite at low degree as a cross-check
        if not exact_mode and phi_scalar is not None and not bad:
            for u in [w for w in words_xy if pxy.alg.wdeg(w) <= min(d, direct_cap)]:
                got = _eta_kappa_left_direct(C, X, Y, u, ())
                ts = TensorSpace((pxy, pxy))
                if got != ts.reduce_free({(u, ()): field.one}):
                    bad.append("direct cross-check failed at %s" %
                               pxy.alg.word_str(u))
        parts.append(Certificate(
            check="galois-left-inverses", objects=(X, Y), degree=d,
            passed=not bad, exact=exact_mode,
            residue="; ".join(bad[:4]) or None,
            details={"mode": mode,
                     "pairs_extended": checked,
                     "basis_dim": len(words_xy)}))
    else:
        parts.append(_verify_galois_right(C, X, Y, d, direct_cap, finite))
    audit = kappa_eta_generator_audit(C, X, Y, side)
    details = {"side": side, "nonzero": C.nonzero.get((X, Y), "unverified")}
    details.update(audit)
    return merge("galois-certificate", (X, Y, side), parts, degree=d,
                 details=details)


# ---------------------------------------------------------------------------
# right side


def _eta_kappa_right_direct(C, X, Y, a, b):
    """Literal eta_r(kappa_r(a x b)) on C(X,Y) x C(X,Y)."""
    pxy = C.hom[(X, Y)]
    ts = TensorSpace((pxy, pxy))
    c = {(a, b): pxy.field.one}
    s, c = ts.apply_component(c, 1, C.delta[(X, Y, Y)])
    s, c = s.contract(c, 0, 1)           # kappa_r: C(X,Y) x C(Y,Y)
    s, c = s.apply_component(c, 1, C.delta[(Y, Y, X)])
    s, c = s.apply_component(c, 1, C.antipode[(Y, X)])
    s, c = s.contract(c, 0, 1)           # eta_r: C(X,Y) x C(X,Y)
    return c


def _kappa_eta_right_direct(C, X, Y, a, c_word):
    """Literal kappa_r(eta_r(a x c)) on C(X,Y) x C(Y,Y)."""
    pxy, pyy = C.hom[(X, Y)], C.hom[(Y, Y)]
    ts = TensorSpace((pxy, pyy))
    c = {(a, c_word): pxy.field.one}
    s, c = ts.apply_component(c, 1, C.delta[(Y, Y, X)])
    s, c = s.apply_component(c, 1, C.antipode[(Y, X)])
    s, c = s.contract(c, 0, 1)           # eta_r: C(X,Y) x C(X,Y)
    s, c = s.apply_component(c, 1, C.delta[(X, Y, Y)])
    s, c = s.contract(c, 0, 1)           # kappa_r: C(X,Y) x C(Y,Y)
    return c


def _verify_galois_right(C, X, Y, d, direct_cap, finite):
    pxy = C.hom[(X, Y)]
    pyy = C.hom[(Y, Y)]
    field = pxy.field
    exact_mode = finite and pyy.is_finite_dimensional_at(max(1, d))
    words_xy = pxy.basis_words(d)
    words_yy = pyy.basis_words(d)
    bad = []
    cap = d if exact_mode else min(d, direct_cap)
    # the right-side composites factor through left multiplication in the
    # first leg, so the core is (1 x word); for the sizes the right side is
    # used at (finite cocycle cogroupoids and low-degree matrix checks) the
    # direct composite over the basis pairs is affordable
    for a in [w for w in words_xy if pxy.alg.wdeg(w) <= cap]:
        da = pxy.alg.wdeg(a)
        for b in [w for w in words_xy if pxy.alg.wdeg(w) + da <= cap]:
            got = _eta_kappa_right_direct(C, X, Y, a, b)
            ts = TensorSpace((pxy, pxy))
            if got != ts.reduce_free({(a, b): field.one}):
                bad.append("eta_r(kappa_r(%s x %s)) != id" %
                           (pxy.alg.word_str(a), pxy.alg.word_str(b)))
    for a in [w for w in words_xy if pxy.alg.wdeg(w) <= cap]:
        da = pxy.alg.wdeg(a)
        for cw in [w for w in words_yy if pyy.alg.wdeg(w) + da <= cap]:
            got = _kappa_eta_right_direct(C, X, Y, a, cw)
            ts = TensorSpace((pxy, pyy))
            if got != ts.reduce_free({(a, cw): field.one}):
                bad.append("kappa_r(eta_r(%s x %s)) != id" %
                           (pxy.alg.word_str(a), pyy.alg.word_str(cw)))
    return Certificate(
        check="galois-right-inverses", objects=(X, Y), degree=cap,
        passed=not bad, exact=exact_mode,
        residue="; ".join(bad[:4]) or None,
        details={"mode": "direct composite on basis pairs to degree %d" % cap,
                 "basis_dim": len(words_xy)})


# ---------------------------------------------------------------------------
# cotensor, coinvariants, cleftness, characters


class CotensorSpace:
    """Kernel of alpha_V x 1 - 1 x lambda inside V x A, truncated at
    A-degree <= d."""

    def __init__(self, basis, dims_by_level, stabilized, note=""):
        self.basis = basis
        self.dims_by_level = dims_by_level
        self.stabilized = stabilized
        self.note = note

    @property
    def dim(self):
        return len(self.basis)


def cotensor(C, V, X, Y, d):
    """Cotensor V box_{C(X,X)} C(X,Y) for a matrix comodule V, computed
    degreewise as an exact kernel."""
    A = C.hom[(X, Y)]
    H = C.hom[(X, X)]
    lam = C.delta[(X, Y, X)]
    field = A.field
    words = A.basis_words(d)
    keys = [(i, w) for w in words for i in range(V.n)]
    columns = []
    for i, w in keys:
        img = {}
        # alpha_V x 1: v_i -> sum_j v_j x m[j][i] x w
        for j in range(V.n):
            red = H.reduce(V.matrix[j][i])
            for hw, c in red.items():
                k = (j, hw, w)
                v = img.get(k, 0) + c
                if v:
                    img[k] = v
                elif k in img:
                    del img[k]
        # minus 1 x lambda
        for (hw, aw), c in lam.apply_word(w).items():
            k = (i, hw, aw)
            v = img.get(k, 0) - c
            if v:
                img[k] = v
            elif k in img:
                del img[k]
        columns.append(img)
    _, kernel = rank_and_kernel(field, columns)
    basis = []
    levels = []
    for rel in kernel:
        vec = {keys[idx]: c for idx, c in rel.items()}
        basis.append(vec)
        levels.append(max(A.alg.wdeg(k[1]) for k in vec))
    dims = [sum(1 for l in levels if l <= k) for k in range(d + 1)]
    stabilized = d >= 1 and dims[d] == dims[d - 1]
    note = "zero algebra slice" if A.dim_leq(d) == 0 else ""
    return CotensorSpace(basis, dims, stabilized, note)


def coinvariants(B, coaction, d):
    """Per-degree dimensions and basis of {b in B_<=d : beta(b) = b x 1}.

    B is a presentation, coaction a morphism B -> B x H (already certified
    a comodule-algebra map by its own certificate)."""
    field = B.field
    words = B.basis_words(d)
    columns = []
    for w in words:
        img = dict(coaction.apply_word(w))
        k = (w, ())
        v = img.get(k, 0) - field.one
        if v:
            img[k] = v
        elif k in img:
            del img[k]
        columns.append(img)
    _, kernel = rank_and_kernel(field, columns)
    basis = []
    levels = []
    for rel in kernel:
        vec = {words[idx]: c for idx, c in rel.items()}
        basis.append(vec)
        levels.append(max(B.alg.wdeg(w) for w in vec))
    dims = [sum(1 for l in levels if l <= k) for k in range(d + 1)]
    return dims, basis


def cleftness_witness(cot, V):
    """Refutation-only cleftness test: the monoidal image of V has the
    stabilized cotensor dimension, and cleft Galois objects preserve
    dimensions.  Returns "non-cleft" or "inconclusive"."""
    if not cot.stabilized:
        raise NotStabilized("cotensor dimension has not stabilized")
    return "non-cleft" if cot.dim != V.n else "inconclusive"


def character_check(P, assignment):
    """Trivial-Galois witness: an algebra map P -> k given on generators.

    assignment maps generator names (or indices) to scalars; passes iff
    every relation vanishes under it."""
    field = P.field
    vals = [None] * P.alg.ngens
    for key, val in assignment.items():
        idx = P.alg.index[key] if isinstance(key, str) else key
        vals[idx] = val
    if any(v is None for v in vals):
        missing = [P.alg.names[i] for i, v in enumerate(vals) if v is None]
        return Certificate(
            check="character", objects=(P.name,), degree=0, passed=False,
            residue="assignment misses generators: %s" % ", ".join(missing))
    bad = []
    for r in P.relations:
        value = r.evaluate(vals)
        if value:
            bad.append("relation %s evaluates to %s" % (r, value))
    return Certificate(
        check="character", objects=(P.name,), degree=0,
        passed=not bad, exact=True,
        residue="; ".join(bad[:3]) or None,
        details={"verdict": "trivial-Galois witness" if not bad else "fail"})
