"""Dense exact linear algebra over Q(i), plus an incremental sparse reducer."""

from .scalar import ONE, ZERO, Scalar


def canonical(vec):
    """Scale ``vec`` so that its first nonzero entry is 1 (zero vectors unchanged)."""
    for x in vec:
        if x:
            if x == 1:
                return list(vec)
            inv = x.inverse()
            return [y * inv for y in vec]
    return list(vec)


def dot(u, v):
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


class Matrix:
    """Row-major matrix of Scalars.

    Elimination always pivots on the leftmost available column and the first
    row holding a nonzero entry there, so results are deterministic.
    """

    def __init__(self, rows, ncols=None):
        self.rows = [[Scalar.coerce(x) for x in row] for row in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ncols == other.ncols and self.rows == other.rows

    def transpose(self):
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def apply(self, v):
        return [dot(row, v) for row in self.rows]

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == len(rows):
                break
            k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if k is None:
                continue
            rows[r], rows[k] = rows[k], rows[r]
            inv = rows[r][c].inverse()
            piv = [x * inv for x in rows[r]]
            rows[r] = piv
            for i in range(len(rows)):
                if i != r:
                    f = rows[i][c]
                    if f:
                        rows[i] = [x - f * y if y else x for x, y in zip(rows[i], piv)]
            pivots.append(c)
            r += 1
        return Matrix(rows[:r], self.ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of ``{v : M v = 0}``, each vector canonically scaled."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for row, p in zip(R.rows, pivots):
                v[p] = -row[f]
            basis.append(canonical(v))
        return basis

    def solve(self, b):
        """A solution of ``M x = b`` with free variables set to 0, or None if inconsistent."""
        b = [Scalar.coerce(x) for x in b]
        if len(b) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        aug = Matrix([row + [bi] for row, bi in zip(self.rows, b)], self.ncols + 1)
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [ZERO] * self.ncols
        for row, p in zip(R.rows, pivots):
            x[p] = row[-1]
        return x


def rank(rows, ncols):
    return Matrix(rows, ncols).rank()


def nullspace(rows, ncols):
    return Matrix(rows, ncols).nullspace()


def solve(rows, b, ncols):
    return Matrix(rows, ncols).solve(b)


def row_space(rows, ncols):
    """Canonical basis (RREF rows) of the row space."""
    if not rows:
        return []
    return Matrix(rows, ncols).rref()[0].rows


def row_span_equal(a, b, ncols):
    return row_space(a, ncols) == row_space(b, ncols)


def in_row_span(rows, v, ncols):
    if not rows:
        return not any(v)
    return Matrix(list(rows) + [list(v)], ncols).rank() == Matrix(rows, ncols).rank()


class Echelon:
    """Incrementally maintained basis of a span of dense vectors.

    ``add`` returns True when the vector was independent of everything added
    so far. Stored rows keep their pivot entry equal to 1.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return v

    def add(self, v):
        v = self.reduce(v)
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = v[p].inverse()
        self.rows.append([x * inv for x in v])
        self.pivots.append(p)
        return True

    def contains(self, v):
        return not any(self.reduce(v))


class SparseReducer:
    """Gaussian elimination on sparse vectors (dicts), tracking combinations.

    Each stored vector remembers the combination of inserted labels that
    produced it, so a vector that reduces to zero yields a linear dependency.
    """

    def __init__(self):
        self.rows = []  # (pivot key, vector dict, combination dict)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        combo = dict(combo) if combo else {}
        for p, row, rcombo in self.rows:
            f = vec.get(p)
            if f:
                for k, x in row.items():
                    s = vec.get(k, ZERO) - f * x
                    if s:
                        vec[k] = s
                    else:
                        vec.pop(k, None)
                for k, x in rcombo.items():
                    s = combo.get(k, ZERO) - f * x
                    if s:
                        combo[k] = s
                    else:
                        combo.pop(k, None)
        return vec, combo

    def insert(self, vec, label):
        """Insert ``vec`` tagged ``label``.

        Returns None if it was independent, otherwise the dependency
        ``{label: 1, other: c, ...}`` summing (with the stored vectors) to 0.
        """
        vec, combo = self.reduce(vec, {label: ONE})
        if not vec:
            return combo
        p = next(iter(vec))
        inv = vec[p].inverse()
        self.rows.append(
            (p, {k: x * inv for k, x in vec.items()}, {k: x * inv for k, x in combo.items()})
        )
        return None
