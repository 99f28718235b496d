"""Finitely presented noncommutative algebras with exact filtration slices.

Ground truth for every degreewise statement is linear algebra on the span
{u*r*v : r relation, deg(u*r*v) <= d} inside the free algebra, exposed by
ideal_slice.  On top of that, the fast engine builds a prefix-closed
monomial basis level by level together with right-multiplication tables,
which is what all the structural-map checks use; the two engines agree and
are cross-checked in the test suite.  If a relation at some level kills a
lower basis word (a collapsing algebra, e.g. mismatched cogroupoid
invariants), the fast engine is invalid and the presentation transparently
falls back to brute-force slices.
"""

from .errors import BasisCollapse, DegreeTooLarge
from .freealg import FreeAlgebra, NCPoly
from .linalg import Echelon


class Presentation:
    def __init__(self, alg, relations, name="A", degree_cap=10, word_cap=200000):
        self.alg = alg
        self.field = alg.field
        self.name = name
        rels = []
        for r in relations:
            if not isinstance(r, NCPoly) or r.alg is not alg:
                raise ValueError("relations must be NCPoly over the same free algebra")
            if r:
                rels.append(r)
            else:
                raise ValueError("zero relation")
        self.relations = tuple(rels)
        self.degree_cap = degree_cap
        self.word_cap = word_cap
        # fast engine state
        self._basis = [()]                       # prefix-closed, level order
        self._basis_pos = {(): 0}
        self._level_dims = [1]                   # dims by exact degree
        self._built = 0
        self._table = {}                         # (word, gen) -> {word: scalar}
        self._red_memo = {(): {(): self.field.one}}
        self._collapsed = False
        # brute engine: per-level echelons of span{u*r*v}, built on demand
        self._brute_cache = {}

    def __repr__(self):
        return "Presentation(%s)" % self.name

    # -- canonical text ----------------------------------------------------

    def canonical_text(self):
        gens = ", ".join(
            "%s(%d)" % (n, d) for n, d in zip(self.alg.names, self.alg.degrees))
        rels = "; ".join(str(r) for r in self.relations)
        return "generators: %s | relations: %s" % (gens, rels or "none")

    # -- fast engine: prefix basis and multiplication tables ----------------

    def ensure_level(self, d):
        if d > self.degree_cap:
            raise DegreeTooLarge(
                "%s: level %d exceeds degree cap %d" % (self.name, d, self.degree_cap))
        if self._collapsed:
            self._brute_echelon(d)
            return
        while self._built < d:
            try:
                self._build_level(self._built + 1)
            except BasisCollapse:
                self._collapsed = True
                self._brute_echelon(d)
                return

    def _build_level(self, k):
        alg = self.alg
        field = self.field
        wkey = alg.wkey
        # candidate words: (basis word) + (generator), of degree exactly k
        candidates = []
        for b in self._basis:
            db = alg.wdeg(b)
            for g in range(alg.ngens):
                if db + alg.degrees[g] == k:
                    candidates.append(b + (g,))
        candidates.sort(key=wkey)
        if len(candidates) + len(self._basis) > self.word_cap:
            raise DegreeTooLarge(
                "%s: %d candidate words at level %d exceed the word cap"
                % (self.name, len(candidates), k))
        cand_set = set(candidates)
        ech = Echelon(field, wkey)
        for r in self.relations:
            dr = r.degree()
            if dr > k:
                continue
            for b in list(self._basis):
                if alg.wdeg(b) != k - dr:
                    continue
                row = self._expand_in_candidates(b, r, k, cand_set)
                ech.insert(row)
        # install tables; pivots must all be candidates, else the quotient
        # collapsed below this level
        for piv in ech.rows:
            if piv not in cand_set:
                raise BasisCollapse(
                    "%s: relation at level %d kills %s" % (self.name, k, piv))
        new_dim = 0
        for w in candidates:
            b, g = w[:-1], w[-1]
            row = ech.rows.get(w)
            if row is None:
                self._basis_pos[w] = len(self._basis)
                self._basis.append(w)
                new_dim += 1
                self._table[(b, g)] = {w: field.one}
            else:
                self._table[(b, g)] = {w2: -c for w2, c in row.items() if w2 != w}
        self._level_dims.append(new_dim)
        self._built = k

    def _expand_in_candidates(self, b, r, k, cand_set):
        """Coordinates of b*r with tables below level k and free candidate
        symbols at level k."""
        out = {}
        for w, c in r.terms.items():
            cur = {b: c}
            for g in w:
                nxt = {}
                for u, cu in cur.items():
                    if u + (g,) in cand_set:
                        w2 = u + (g,)
                        v = nxt.get(w2, 0) + cu
                        if v:
                            nxt[w2] = v
                        elif w2 in nxt:
                            del nxt[w2]
                    else:
                        for w2, c2 in self._table[(u, g)].items():
                            v = nxt.get(w2, 0) + cu * c2
                            if v:
                                nxt[w2] = v
                            elif w2 in nxt:
                                del nxt[w2]
                cur = nxt
            for w2, c2 in cur.items():
                v = out.get(w2, 0) + c2
                if v:
                    out[w2] = v
                elif w2 in out:
                    del out[w2]
        return out

    # -- brute engine: literal ideal slices ----------------------------------

    def _brute_echelon(self, d):
        """Echelon of span{u*r*v : deg(u*r*v) <= d}, cached per level."""
        if d > self.degree_cap:
            raise DegreeTooLarge(
                "%s: level %d exceeds degree cap %d" % (self.name, d, self.degree_cap))
        got = self._brute_cache.get(d)
        if got is not None:
            return got
        alg = self.alg
        total = sum(len(alg.words_of_degree(j)) for j in range(d + 1))
        if total > self.word_cap:
            raise DegreeTooLarge(
                "%s: %d words at level %d exceed the word cap"
                % (self.name, total, d))
        ech = Echelon(self.field, alg.wkey)
        for r in self.relations:
            dr = r.degree()
            rest = d - dr
            if rest < 0:
                continue
            for du in range(rest + 1):
                for u in alg.words_of_degree(du):
                    for dv in range(rest - du + 1):
                        for v in alg.words_of_degree(dv):
                            row = {}
                            for w, c in r.terms.items():
                                w2 = u + w + v
                                val = row.get(w2, 0) + c
                                if val:
                                    row[w2] = val
                                elif w2 in row:
                                    del row[w2]
                            ech.insert(row)
        self._brute_cache[d] = ech
        return ech

    def ideal_slice(self, d):
        """Row-reduced basis of span{u*r*v : deg <= d}: list of NCPoly."""
        ech = self._brute_echelon(d)
        return [NCPoly(self.alg, dict(row)) for piv, row in
                sorted(ech.rows.items(), key=lambda t: self.alg.wkey(t[0]))]

    # -- reduction to canonical quotient coordinates -------------------------

    def reduce_word(self, w, level=None):
        d = self.alg.wdeg(w)
        if level is not None:
            d = max(d, level)
        self.ensure_level(d)
        if self._collapsed:
            return self._brute_echelon(d).reduce({w: self.field.one})
        memo = self._red_memo
        got = memo.get(w)
        if got is not None:
            return got
        # find the longest memoized prefix, then append letters
        i = len(w) - 1
        while i > 0 and w[:i] not in memo:
            i -= 1
        cur = memo[w[:i]]
        for j in range(i, len(w)):
            g = w[j]
            nxt = {}
            for u, cu in cur.items():
                for w2, c2 in self._table[(u, g)].items():
                    v = nxt.get(w2, 0) + cu * c2
                    if v:
                        nxt[w2] = v
                    elif w2 in nxt:
                        del nxt[w2]
            cur = nxt
            memo[w[: j + 1]] = cur
        return cur

    def reduce(self, p, level=None):
        """Canonical coordinates of an NCPoly on the quotient basis."""
        out = {}
        for w, c in p.terms.items():
            for w2, c2 in self.reduce_word(w, level).items():
                v = out.get(w2, 0) + c * c2
                if v:
                    out[w2] = v
                elif w2 in out:
                    del out[w2]
        return out

    def mul_words(self, w1, w2):
        return self.reduce_word(w1 + w2)

    def is_zero(self, p, level=None):
        if not p:
            return True
        return not self.reduce(p, level)

    def equals_in_quotient(self, e1, e2, d):
        """True iff e1 - e2 lies in the ideal slice at filtration level d."""
        diff = e1 - e2
        if not diff:
            return True
        if diff.degree() > d:
            raise DegreeTooLarge(
                "elements of degree %d compared at level %d" % (diff.degree(), d))
        return not self.reduce(diff, level=d)

    def coords_to_poly(self, coords):
        return NCPoly(self.alg, dict(coords))

    # -- dimensions and bases -------------------------------------------------

    def basis_words(self, d):
        """Quotient basis words of degree <= d, in deglex order."""
        self.ensure_level(d)
        if self._collapsed:
            pivots = set(self._brute_echelon(d).rows)
            out = []
            for k in range(d + 1):
                out.extend(w for w in self.alg.words_of_degree(k) if w not in pivots)
            return out
        return [w for w in self._basis if self.alg.wdeg(w) <= d]

    def dims_by_degree(self, d):
        """Dimension of the exact-degree-k layer of the quotient basis,
        for k = 0..d."""
        self.ensure_level(d)
        if self._collapsed:
            pivots = set(self._brute_echelon(d).rows)
            return [sum(1 for w in self.alg.words_of_degree(k) if w not in pivots)
                    for k in range(d + 1)]
        return list(self._level_dims[: d + 1])

    def dim_leq(self, d):
        return sum(self.dims_by_degree(d))

    def is_finite_dimensional_at(self, d):
        """True when no new basis words appear at level d (the filtration
        has stabilized at least one step)."""
        dims = self.dims_by_degree(d)
        return dims[-1] == 0 if d >= 1 else False


def trivial_presentation(field, name="k"):
    """The base field as a presented algebra (no generators)."""
    return Presentation(FreeAlgebra(field, ()), (), name=name)


def tensor_presentation(p, q, name=None):
    """Tensor product presentation: disjoint generators (auto-renamed on
    clash), both relation families, and cross-commutation relations."""
    if p.field is not q.field:
        raise ValueError("tensor factors over different scalar fields")
    names = list(p.alg.names)
    for n in q.alg.names:
        n2 = n
        while n2 in names:
            n2 = n2 + "'"
        names.append(n2)
    alg = FreeAlgebra(p.field, names, p.alg.degrees + q.alg.degrees)
    np_ = p.alg.ngens

    def lift(poly, shift):
        return NCPoly(alg, {tuple(i + shift for i in w): c
                            for w, c in poly.terms.items()})

    rels = [lift(r, 0) for r in p.relations]
    rels += [lift(r, np_) for r in q.relations]
    for i in range(np_):
        for j in range(q.alg.ngens):
            a, b = alg.gen(i), alg.gen(np_ + j)
            rels.append(a * b - b * a)
    return Presentation(alg, rels, name=name or "%s(x)%s" % (p.name, q.name))


# ---------------------------------------------------------------------------
# reduced tensor coordinates and morphisms


class TensorSpace:
    """Tensor product of quotient algebras, elements held as sparse dicts
    {(word_1, ..., word_r): scalar} with each word a quotient basis word of
    its factor.  Multiplication is componentwise with reduction."""

    def __init__(self, factors):
        if isinstance(factors, Presentation):
            factors = (factors,)
        self.factors = tuple(factors)
        self.r = len(self.factors)

    def __eq__(self, other):
        return isinstance(other, TensorSpace) and self.factors == other.factors

    def sortkey(self, key):
        return tuple(f.alg.wkey(w) for f, w in zip(self.factors, key))

    def one(self):
        one = self.factors[0].field.one
        return {((),) * self.r: one}

    def unit_key(self):
        return ((),) * self.r

    def gen_coords(self, i):
        """Coordinates of generator i (single-factor spaces only)."""
        assert self.r == 1
        return {((i,),): self.factors[0].field.one}

    def mul(self, c1, c2):
        out = {}
        for k1, s1 in c1.items():
            for k2, s2 in c2.items():
                parts = [self.factors[i].mul_words(k1[i], k2[i])
                         for i in range(self.r)]
                self._accumulate(out, parts, s1 * s2)
        return out

    def _accumulate(self, out, parts, scale):
        combos = [((), scale)]
        for part in parts:
            combos = [(key + (w,), sc * c)
                      for key, sc in combos for w, c in part.items()]
        for key, sc in combos:
            v = out.get(key, 0) + sc
            if v:
                out[key] = v
            elif key in out:
                del out[key]

    def reduce_free(self, terms):
        """Reduce a free tensor element {(free words): scalar} to canonical
        coordinates."""
        out = {}
        for key, s in terms.items():
            parts = [self.factors[i].reduce_word(key[i]) for i in range(self.r)]
            self._accumulate(out, parts, s)
        return out

    def scale(self, c, s):
        if not s:
            return {}
        return {k: s * v for k, v in c.items()}

    def add(self, c1, c2, scale=None):
        out = dict(c1)
        for k, v in c2.items():
            v2 = v if scale is None else scale * v
            w = out.get(k, 0) + v2
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return out

    def apply_component(self, coords, i, morphism):
        """Apply a morphism to factor i; returns (new TensorSpace, coords)."""
        if morphism.source is not self.factors[i]:
            raise ValueError("morphism source does not match factor %d" % i)
        tgt = morphism.target
        new_space = TensorSpace(
            self.factors[:i] + tgt.factors + self.factors[i + 1:])
        out = {}
        for key, s in coords.items():
            img = morphism.apply_word(key[i])
            for ikey, c in img.items():
                nkey = key[:i] + ikey + key[i + 1:]
                v = out.get(nkey, 0) + s * c
                if v:
                    out[nkey] = v
                elif nkey in out:
                    del out[nkey]
        return new_space, out

    def contract(self, coords, i, j):
        """Multiply factors i and j (which must be the same presentation,
        j = i+1) into one factor."""
        assert j == i + 1 and self.factors[i] is self.factors[j]
        new_space = TensorSpace(self.factors[:j] + self.factors[j + 1:])
        out = {}
        for key, s in coords.items():
            prod = self.factors[i].mul_words(key[i], key[j])
            for w, c in prod.items():
                nkey = key[:i] + (w,) + key[j + 1:]
                v = out.get(nkey, 0) + s * c
                if v:
                    out[nkey] = v
                elif nkey in out:
                    del out[nkey]
        return new_space, out

    def drop_unit_factor(self, coords, i):
        """Remove a factor over the trivial presentation."""
        assert not self.factors[i].alg.ngens
        new_space = TensorSpace(self.factors[:i] + self.factors[i + 1:])
        out = {}
        for key, s in coords.items():
            nkey = key[:i] + key[i + 1:]
            v = out.get(nkey, 0) + s
            if v:
                out[nkey] = v
            elif nkey in out:
                del out[nkey]
        return new_space, out

    def permute(self, coords, perm):
        """Linear permutation of tensor factors (perm maps new pos -> old)."""
        new_space = TensorSpace(tuple(self.factors[p] for p in perm))
        return new_space, {tuple(key[p] for p in perm): s
                           for key, s in coords.items()}

    def coords_str(self, coords):
        if not coords:
            return "0"
        items = sorted(coords.items(), key=lambda t: self.sortkey(t[0]))
        parts = []
        for key, s in items:
            ws = " (x) ".join(f.alg.word_str(w) for f, w in zip(self.factors, key))
            parts.append("(%s)*[%s]" % (s, ws))
        return " + ".join(parts)


class Morphism:
    """Algebra (or anti-algebra) morphism from a presented algebra into a
    tensor product of presented algebras, given on generators.

    Images are free tensor elements {(free words per factor): scalar}; a
    single-factor target accepts NCPoly images directly.  Well-definedness
    (every relation image reduces to zero) is what check() certifies.
    """

    def __init__(self, source, target, images, anti=False, name="phi"):
        self.source = source
        if isinstance(target, Presentation):
            target = TensorSpace((target,))
        self.target = target
        self.anti = anti
        self.name = name
        imgs = []
        for img in images:
            if isinstance(img, NCPoly):
                if self.target.r != 1 or img.alg is not self.target.factors[0].alg:
                    raise ValueError("NCPoly image needs a matching 1-factor target")
                img = {(w,): c for w, c in img.terms.items()}
            imgs.append(self.target.reduce_free(img))
        if len(imgs) != source.alg.ngens:
            raise ValueError("need one image per generator")
        self.images = imgs
        self._memo = {(): self.target.one()}

    def apply_word(self, w):
        got = self._memo.get(w)
        if got is not None:
            return got
        if self.anti:
            out = self.target.mul(self.images[w[-1]], self.apply_word(w[:-1]))
        else:
            out = self.target.mul(self.apply_word(w[:-1]), self.images[w[-1]])
        self._memo[w] = out
        return out

    def apply(self, p):
        out = {}
        ts = self.target
        for w, c in p.terms.items():
            out = ts.add(out, self.apply_word(w), c)
        return out

    def image_poly(self, i):
        """Generator image as an NCPoly (single-factor targets only)."""
        if self.target.r != 1:
            raise ValueError("image_poly needs a 1-factor target")
        alg = self.target.factors[0].alg
        return NCPoly(alg, {k[0]: c for k, c in self.images[i].items()})

    def check(self, name=None):
        """Well-definedness certificate: each relation image vanishes in the
        target quotient at the image's own filtration level."""
        from .certificates import Certificate
        failures = []
        rows = []
        for idx, r in enumerate(self.relations_source()):
            img = self.apply(r)
            lvl = self._image_level(r)
            ok = not img
            rows.append({"relation": str(r), "level": lvl, "passed": ok})
            if not ok:
                failures.append("relation %d (%s): residue %s" %
                                (idx, r, self.target.coords_str(img)))
        return Certificate(
            check=name or ("morphism-well-defined:%s" % self.name),
            objects=(self.source.name,),
            degree=max((row["level"] for row in rows), default=0),
            passed=not failures,
            residue="; ".join(failures) or None,
            details={"relations": rows,
                     "source": self.source.canonical_text(),
                     "anti": self.anti},
        )

    def relations_source(self):
        return self.source.relations

    def _image_level(self, r):
        lvl = 0
        for w in r.terms:
            deg = 0
            for g in w:
                img = self.images[g]
                deg += max((sum(f.alg.wdeg(x) for f, x in zip(self.target.factors, key))
                            for key in img), default=0)
            lvl = max(lvl, deg)
        return lvl


def check_morphism(phi, name=None):
    """Certificate that the generator images define an algebra map."""
    return phi.check(name=name)
