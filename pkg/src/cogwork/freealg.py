"""Free associative algebra on named generators with degrees.

Words are tuples of generator indices; elements (NCPoly) are sparse dicts
word -> scalar in canonical form: zero coefficients pruned, and ordering
questions always settled by degree-lexicographic comparison.  The zero
element has degree -1 standing in for "minus infinity".
"""

from .errors import DegreeTooLarge


class FreeAlgebra:
    def __init__(self, field, names, degrees=None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.degrees = tuple(degrees) if degrees else (1,) * len(self.names)
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        self.index = {n: i for i, n in enumerate(self.names)}
        self._uniform = all(d == 1 for d in self.degrees)

    def __repr__(self):
        return "FreeAlgebra(%s)" % ",".join(self.names)

    @property
    def ngens(self):
        return len(self.names)

    def wdeg(self, word):
        if self._uniform:
            return len(word)
        return sum(self.degrees[i] for i in word)

    def wkey(self, word):
        """Degree-lexicographic sort key (declared generator order)."""
        return (self.wdeg(word), word)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)

    def zero(self):
        return NCPoly(self, {})

    def one(self):
        return NCPoly(self, {(): self.field.one})

    def gen(self, i):
        if isinstance(i, str):
            i = self.index[i]
        return NCPoly(self, {(i,): self.field.one})

    def const(self, c):
        c = self.field.rational(c) if isinstance(c, int) else c
        return NCPoly(self, {(): c} if c else {})

    def element(self, terms):
        return NCPoly(self, {w: c for w, c in terms.items() if c})

    def words_of_degree(self, d, cap=None):
        """All words of degree exactly d, in lexicographic order."""
        if d == 0:
            return [()]
        out = []

        def rec(prefix, deg):
            if deg == d:
                out.append(prefix)
                return
            for i in range(self.ngens):
                nd = deg + self.degrees[i]
                if nd <= d:
                    rec(prefix + (i,), nd)
            if cap is not None and len(out) > cap:
                raise DegreeTooLarge("word count exceeds cap %d" % cap)
        rec((), 0)
        return out


class NCPoly:
    """Formal linear combination of words, kept in canonical form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alg is other.alg and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((id(self.alg), frozenset(self.terms.items())))

    def degree(self):
        """Max word degree among nonzero terms; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(self.alg.wdeg(w) for w in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w, 0) + c
            if v:
                terms[w] = v
            elif w in terms:
                del terms[w]
        return NCPoly(self.alg, terms)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            if other.alg is not self.alg:
                raise ValueError("mixed free algebras")
            terms = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = terms.get(w, 0) + c1 * c2
                    if v:
                        terms[w] = v
                    elif w in terms:
                        del terms[w]
            return NCPoly(self.alg, terms)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything here
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.alg.field.rational(c)
        if not c:
            return NCPoly(self.alg, {})
        return NCPoly(self.alg, {w: c * v for w, v in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.alg is not self.alg:
                raise ValueError("mixed free algebras")
            return other
        return self.alg.const(other)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.alg.wkey(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in reversed(self.sorted_terms()):
            cs = str(c)
            if "/" in cs or "+" in cs or "-" in cs[1:] or "*" in cs:
                cs = "(%s)" % cs
            if w:
                parts.append("%s*%s" % (cs, self.alg.word_str(w)))
            else:
                parts.append(cs)
        return " + ".join(parts)

    __repr__ = __str__

    def evaluate(self, assignment):
        """Value under a character sending generator i to assignment[i]
        (scalars); returns a scalar."""
        total = self.alg.field.zero
        for w, c in self.terms.items():
            v = c
            for i in w:
                v = v * assignment[i]
            total = total + v
        return total


def rank_and_kernel_elements(vectors, degree_cap=None):
    """Exact rank of a list of free elements and a basis of their linear
    relations (coefficient dicts {vector index: scalar})."""
    from .linalg import rank_and_kernel
    if not vectors:
        return 0, []
    alg = vectors[0].alg
    if degree_cap is not None:
        for v in vectors:
            if v.degree() > degree_cap:
                raise DegreeTooLarge(
                    "vector of degree %d exceeds cap %d" % (v.degree(), degree_cap))
    return rank_and_kernel(alg.field, [v.terms for v in vectors],
                           sortkey=alg.wkey)
