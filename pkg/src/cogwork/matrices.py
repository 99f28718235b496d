"""Exact dense matrices over a scalar field, and the rational canonical form.

The RCF is computed from the invariant factors of xI - M, obtained by
Smith normal form over the univariate polynomial ring k[x].  Two square
matrices over the same field are similar iff their RCFs coincide
entrywise, which is the decision procedure used by the classification
suite.
"""

from .errors import SingularMatrix

# ---------------------------------------------------------------------------
# dense univariate polynomials over a ScalarField: list of coeffs, low->high,
# trailing zeros stripped; [] is the zero polynomial


def _ptrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def padd(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(a + b)
    return _ptrim(out)


def pneg(f):
    return [-a for a in f]


def psub(f, g):
    return padd(f, pneg(g))


def pscale(f, c):
    if not c:
        return []
    return _ptrim([c * a for a in f])


def pmul(f, g, field):
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = out[i + j] + a * b
    return _ptrim(out)


def pshift(f, k, field):
    if not f:
        return []
    return [field.zero] * k + list(f)


def pdivmod(f, g, field):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = []
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        c = f[-1] / lg
        k = len(f) - 1 - dg
        q = padd(q, pshift([c], k, field))
        f = psub(f, pshift(pscale(g, c), k, field))
    return q, f


def pmonic(f):
    if not f:
        return []
    c = f[-1]
    return [a / c for a in f]


def poly_str(f, var="x"):
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        cs = str(c)
        if any(s in cs for s in "+-*/") and not (cs.startswith("-") and
                                                 not any(s in cs[1:] for s in "+-*/")):
            cs = "(%s)" % cs
        if i == 0:
            parts.append(cs)
        elif i == 1:
            parts.append("%s*%s" % (cs, var))
        else:
            parts.append("%s*%s^%d" % (cs, var, i))
    return " + ".join(parts)


# ---------------------------------------------------------------------------


class ExactMatrix:
    """Immutable dense matrix with exact scalar entries."""

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def from_strs(cls, field, rows):
        return cls(field, [[field.parse(s) for s in r] for r in rows])

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero
                            for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, m, n):
        return cls(field, [[field.zero] * n for _ in range(m)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "[" + "; ".join(", ".join(str(c) for c in r) for r in self.rows) + "]"

    @property
    def is_square(self):
        return self.m == self.n

    def transpose(self):
        return ExactMatrix(self.field, [[self.rows[i][j] for i in range(self.m)]
                                        for j in range(self.n)])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.n != other.m:
                raise ValueError("shape mismatch")
            z = self.field.zero
            out = []
            for i in range(self.m):
                row = []
                for j in range(other.n):
                    s = z
                    for k in range(self.n):
                        s = s + self.rows[i][k] * other.rows[k][j]
                    row.append(s)
                out.append(row)
            return ExactMatrix(self.field, out)
        return self.scale(other)

    def scale(self, c):
        return ExactMatrix(self.field, [[c * a for a in r] for r in self.rows])

    __rmul__ = scale

    def __add__(self, other):
        return ExactMatrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ExactMatrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(self.rows, other.rows)])

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.m):
            t = t + self.rows[i][i]
        return t

    def det(self):
        if not self.is_square:
            raise ValueError("det of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.m
        det = self.field.one
        for c in range(n):
            piv = None
            for r in range(c, n):
                if a[r][c]:
                    piv = r
                    break
            if piv is None:
                return self.field.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det = det * a[c][c]
            inv = self.field.one / a[c][c]
            for r in range(c + 1, n):
                if a[r][c]:
                    f = a[r][c] * inv
                    for k in range(c, n):
                        a[r][k] = a[r][k] - f * a[c][k]
        return det

    def inverse(self):
        if not self.is_square:
            raise SingularMatrix("non-square matrix")
        n = self.m
        a = [list(r) + [self.field.one if i == j else self.field.zero
                        for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = None
            for r in range(c, n):
                if a[r][c]:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrix("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv = self.field.one / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return ExactMatrix(self.field, [row[n:] for row in a])

    def is_invertible(self):
        try:
            self.inverse()
            return True
        except SingularMatrix:
            return False

    def asymmetry(self):
        """The matrix M^{-1} M^t, whose similarity class classifies the
        bilinear form of M up to congruence in characteristic zero."""
        return self.inverse() * self.transpose()

    def charpoly(self):
        """Characteristic polynomial det(xI - M) as a coefficient list."""
        invs = self.invariant_factors()
        f = [self.field.one]
        for g in invs:
            f = pmul(f, g, self.field)
        return pmonic(f)

    def invariant_factors(self):
        """Nonconstant invariant factors of xI - M (monic, each dividing
        the next), via Smith normal form over k[x]."""
        if not self.is_square:
            raise ValueError("invariant factors of a non-square matrix")
        field = self.field
        n = self.m
        # entries of xI - M as polynomials
        a = [[([-self.rows[i][j], field.one] if i == j else
               ([-self.rows[i][j]] if self.rows[i][j] else []))
              for j in range(n)] for i in range(n)]
        diag = _smith(a, field)
        return [pmonic(f) for f in diag if len(f) > 1]

    def rational_canonical_form(self):
        """Block-diagonal companion matrices of the invariant factors,
        ordered by increasing degree."""
        blocks = [companion(self.field, f) for f in self.invariant_factors()]
        n = sum(b.m for b in blocks)
        out = [[self.field.zero] * n for _ in range(n)]
        at = 0
        for b in blocks:
            for i in range(b.m):
                for j in range(b.m):
                    out[at + i][at + j] = b.rows[i][j]
            at += b.m
        return ExactMatrix(self.field, out)


def companion(field, f):
    """Companion matrix of a monic polynomial (degree >= 1)."""
    f = pmonic(f)
    d = len(f) - 1
    if d < 1:
        raise ValueError("companion of a constant")
    rows = [[field.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = field.one
    for i in range(d):
        rows[i][d - 1] = -f[i]
    return ExactMatrix(field, rows)


def _smith(a, field):
    """Diagonal of the Smith normal form of a square polynomial matrix.

    Standard pivoting by minimal degree with row/column reduction, then a
    divisibility fix-up so each diagonal entry divides the next.
    """
    n = len(a)
    diag = []
    top = 0
    while top < n:
        # find a nonzero entry of minimal degree in the sub-block
        best = None
        for i in range(top, n):
            for j in range(top, n):
                if a[i][j] and (best is None or len(a[i][j]) < len(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            diag.append([])
            top += 1
            continue
        i0, j0 = best
        a[top], a[i0] = a[i0], a[top]
        for r in range(n):
            a[r][top], a[r][j0] = a[r][j0], a[r][top]
        # clear row and column by division with remainder; remainders have
        # lower degree, so this terminates
        dirty = False
        for i in range(top + 1, n):
            if a[i][top]:
                q, rem = pdivmod(a[i][top], a[top][top], field)
                for j in range(top, n):
                    a[i][j] = psub(a[i][j], pmul(q, a[top][j], field))
                if rem:
                    dirty = True
        for j in range(top + 1, n):
            if a[top][j]:
                q, rem = pdivmod(a[top][j], a[top][top], field)
                for i in range(top, n):
                    a[i][j] = psub(a[i][j], pmul(q, a[i][top], field))
                if rem:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry; if not, mix the offending
        # row into the pivot row and restart this block
        offender = None
        for i in range(top + 1, n):
            for j in range(top + 1, n):
                if a[i][j]:
                    _, rem = pdivmod(a[i][j], a[top][top], field)
                    if rem:
                        offender = i
                        break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, n):
                a[top][j] = padd(a[top][j], a[offender][j])
            continue
        diag.append(a[top][top])
        top += 1
    return diag
