"""Sparse exact linear algebra over a scalar field.

Vectors are dicts mapping hashable coordinate keys to nonzero scalars.
The echelon structure keeps one row per pivot key, with pivot coefficient
1 and every stored row fully reduced against the others, so reducing a
vector is a single descending pass and yields canonical coordinates.
Pivot selection is deterministic: the largest key under the supplied sort
key wins.
"""


class Echelon:
    """Incremental reduced row echelon form over arbitrary sparse keys."""

    def __init__(self, field, sortkey=None):
        self.field = field
        self.sortkey = sortkey if sortkey is not None else (lambda k: k)
        self.rows = {}  # pivot key -> {key: scalar}, pivot coeff 1

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Fully reduce vec against the stored rows; returns a new dict."""
        vec = {k: c for k, c in vec.items() if c}
        out = {}
        while vec:
            k = max(vec, key=self.sortkey)
            c = vec.pop(k)
            row = self.rows.get(k)
            if row is None:
                out[k] = c
                continue
            for k2, c2 in row.items():
                if k2 == k:
                    continue
                v = vec.get(k2, 0) - c * c2
                if v:
                    vec[k2] = v
                elif k2 in vec:
                    del vec[k2]
        return out

    def insert(self, vec):
        """Insert a vector; returns its pivot key, or None if dependent."""
        rem = self.reduce(vec)
        if not rem:
            return None
        piv = max(rem, key=self.sortkey)
        c = rem[piv]
        row = {k: v / c for k, v in rem.items()}
        # keep the structure fully reduced: eliminate piv from older rows
        for p2, r2 in self.rows.items():
            c2 = r2.get(piv)
            if c2:
                for k, v in row.items():
                    w = r2.get(k, 0) - c2 * v
                    if w:
                        r2[k] = w
                    elif k in r2:
                        del r2[k]
        self.rows[piv] = row
        return piv

    def contains(self, vec):
        return not self.reduce(vec)


def rank_and_kernel(field, vectors, sortkey=None):
    """Exact rank of a list of sparse vectors and a basis of their
    linear relations.

    Returns (rank, kernel) where kernel is a list of dicts
    {vector index: scalar} with sum_i c_i * vectors[i] = 0.  The kernel
    vectors are normalized so the highest involved index has coefficient 1.
    """
    ech = Echelon(field, sortkey)
    # tag keys live in a disjoint space: ("#", i); they never collide with
    # data keys because data keys are never such 2-tuples starting with "#"
    tagged = Echelon(field, _TagKey(ech.sortkey))
    kernel = []
    for i, vec in enumerate(vectors):
        row = {("#", i): field.one}
        row.update(vec)
        rem = tagged.reduce(row)
        data = {k: c for k, c in rem.items() if not _is_tag(k)}
        if data:
            tagged.insert(rem)
        else:
            c = rem[("#", i)]
            kernel.append({k[1]: v / c for k, v in rem.items()})
    rank = len(vectors) - len(kernel)
    return rank, kernel


def _is_tag(k):
    return isinstance(k, tuple) and len(k) == 2 and k[0] == "#"


class _TagKey:
    """Orders data keys above tag keys so pivots prefer data columns."""

    def __init__(self, base):
        self.base = base

    def __call__(self, k):
        if _is_tag(k):
            return (0, k[1], None)
        return (1, 0, self.base(k))


def solve_in_span(field, basis, target, sortkey=None):
    """Express target as a combination of basis vectors.

    Returns {index: scalar} or None when target is outside the span.
    """
    ech = Echelon(field, _TagKey(sortkey if sortkey is not None else (lambda k: k)))
    for i, vec in enumerate(basis):
        row = {("#", i): field.one}
        row.update(vec)
        ech.insert(row)
    rem = ech.reduce(dict(target))
    data = {k: c for k, c in rem.items() if not _is_tag(k)}
    if data:
        return None
    return {k[1]: -v for k, v in rem.items()}


def vec_add(a, b, scale=None):
    """a + scale*b on sparse dicts (scale defaults to 1)."""
    out = dict(a)
    for k, c in b.items():
        c2 = c if scale is None else scale * c
        v = out.get(k, 0) + c2
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def vec_scale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}
