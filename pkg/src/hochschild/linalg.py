"""Exact sparse linear algebra over Q and over prime fields.

Everything downstream (algebras, bimodules, cohomology) reduces to ranks,
kernels, solves and quotients computed here.  Vectors are sparse dicts
``{index: scalar}`` internally; the public operations return dense tuples,
which is what small hand-checked examples want.  Scalars are
`fractions.Fraction` over Q and plain ints in ``[0, p)`` over GF(p).

Pivoting is deterministic: smallest column index first, then smallest row
index.  Repeated calls on equal inputs give identical output.
"""

from fractions import Fraction


class FieldMismatch(ValueError):
    pass


class Rationals:
    """The field Q with arbitrary-precision Fraction scalars."""

    tag = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        """Coerce an int, Fraction or 'a/b' string."""
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a / b

    def addmul(self, a, c, b):
        # a + c*b in one call; the elimination hot path.
        return a + c * b

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p); scalars are ints reduced mod p."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.tag = f"Fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        p = self.p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return (x.numerator % p) * pow(den, p - 2, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def addmul(self, a, c, b):
        return (a + c * b) % self.p

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.tag)


QQ = Rationals()


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if tag.startswith("Fp:"):
        return PrimeField(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown field tag {tag!r}")


# ---------------------------------------------------------------------------
# sparse vectors


def axpy(field, dst, c, src):
    """dst += c * src, in place, dropping zeros."""
    addmul = field.addmul
    mul = field.mul
    get = dst.get
    for k, v in src.items():
        cur = get(k)
        if cur is None:
            w = mul(c, v)
            if w:
                dst[k] = w
        else:
            w = addmul(cur, c, v)
            if w:
                dst[k] = w
            else:
                del dst[k]


def scale(field, vec, c):
    mul = field.mul
    return {k: mul(c, v) for k, v in vec.items()}


def dense(vec, n, field):
    out = [field.zero] * n
    for k, v in vec.items():
        out[k] = v
    return tuple(out)


def sparse(seq, field):
    return {i: field.of(v) for i, v in enumerate(seq) if v}


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Sparse matrix, column-major.  Treat as immutable after construction."""

    __slots__ = ("rows", "cols", "field", "_cols")

    def __init__(self, rows, cols, field, cols_data=None):
        self.rows = rows
        self.cols = cols
        self.field = field
        self._cols = cols_data if cols_data is not None else {}

    @classmethod
    def from_entries(cls, rows, cols, field, entries):
        """entries: mapping (row, col) -> scalar-like."""
        data = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
            v = field.of(v)
            if v:
                data.setdefault(c, {})[r] = v
        return cls(rows, cols, field, data)

    @classmethod
    def from_rows(cls, rows_list, field):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        data = {}
        for r, row in enumerate(rows_list):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                v = field.of(v)
                if v:
                    data.setdefault(c, {})[r] = v
        return cls(rows, cols, field, data)

    @classmethod
    def identity(cls, n, field):
        return cls(n, n, field, {j: {j: field.one} for j in range(n)})

    @classmethod
    def zero(cls, rows, cols, field):
        return cls(rows, cols, field, {})

    def column(self, j):
        return self._cols.get(j, {})

    def columns_items(self):
        return self._cols.items()

    def entry(self, r, c):
        return self._cols.get(c, {}).get(r, self.field.zero)

    def nnz(self):
        return sum(len(col) for col in self._cols.values())

    def is_zero(self):
        return not any(self._cols.values())

    def matvec(self, vec):
        """Apply to a sparse vector (dict over column indices)."""
        out = {}
        for j, c in vec.items():
            col = self._cols.get(j)
            if col:
                axpy(self.field, out, c, col)
        return out

    def apply(self, seq):
        """Apply to a dense sequence; returns a dense tuple."""
        if len(seq) != self.cols:
            raise ValueError("shape mismatch")
        vec = {i: self.field.of(v) for i, v in enumerate(seq) if v}
        return dense(self.matvec(vec), self.rows, self.field)

    def matmul(self, other):
        if other.rows != self.cols:
            raise ValueError("shape mismatch in matmul")
        if other.field != self.field:
            raise FieldMismatch("mixed fields in matmul")
        data = {}
        for j, col in other._cols.items():
            out = self.matvec(col)
            if out:
                data[j] = out
        return Mat(self.rows, other.cols, self.field, data)

    def transpose(self):
        data = {}
        for j, col in self._cols.items():
            for r, v in col.items():
                data.setdefault(r, {})[j] = v
        return Mat(self.cols, self.rows, self.field, data)

    def add(self, other, c=None):
        """self + c*other (c defaults to 1)."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        c = self.field.one if c is None else c
        data = {j: dict(col) for j, col in self._cols.items()}
        for j, col in other._cols.items():
            dst = data.setdefault(j, {})
            axpy(self.field, dst, c, col)
            if not dst:
                del data[j]
        return Mat(self.rows, self.cols, self.field, data)

    def scaled(self, c):
        data = {}
        for j, col in self._cols.items():
            sc = scale(self.field, col, c)
            if sc:
                data[j] = sc
        return Mat(self.rows, self.cols, self.field, data)

    def to_dense(self):
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for j, col in self._cols.items():
            for r, v in col.items():
                out[r][j] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) \
            and self.field == other.field and self._cols == other._cols

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols} over {self.field!r}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination

class Sweep:
    """Incremental echelon of sparse vectors with combination tracking.

    Pivots are keyed by leading (smallest) index; a vector is reduced
    against existing pivots until its lead is fresh or it vanishes.  The
    pivot set after feeding columns left to right is exactly the RREF
    pivot-column set, which is what makes kernel output canonical.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}  # lead index -> (vector, track)

    def reduce(self, vec, track=None):
        field = self.field
        pivots = self.pivots
        while vec:
            lead = min(vec)
            hit = pivots.get(lead)
            if hit is None:
                return lead, vec, track
            c = field.neg(vec[lead])
            axpy(field, vec, c, hit[0])
            if track is not None and hit[1]:
                axpy(field, track, c, hit[1])
        return None, vec, track

    def insert(self, vec, track=None):
        """Reduce and adopt as a new pivot; returns lead or None if dependent."""
        lead, vec, track = self.reduce(vec, track)
        if lead is None:
            return None, track
        inv = self.field.inv(vec[lead])
        vec = scale(self.field, vec, inv)
        if track is not None:
            track = scale(self.field, track, inv)
        self.pivots[lead] = (vec, track)
        return lead, track

    @property
    def rank(self):
        return len(self.pivots)


def rank(m):
    """Rank over the matrix's field."""
    sweep = Sweep(m.field)
    for j in range(m.cols):
        col = m.column(j)
        if col:
            sweep.insert(dict(col))
    return sweep.rank


def kernel_basis_sparse(m):
    """Right null space basis as sparse dicts, RREF-canonical order.

    The track of a column that sweeps to zero is a kernel vector with
    coefficient 1 at that (free) column and RREF coefficients elsewhere.
    """
    sweep = Sweep(m.field)
    one = m.field.one
    out = []
    for j in range(m.cols):
        col = dict(m.column(j))
        track = {j: one}
        lead, vec, track = sweep.reduce(col, track)
        if lead is None:
            out.append(track)
        else:
            inv = m.field.inv(vec[lead])
            sweep.pivots[lead] = (scale(m.field, vec, inv),
                                  scale(m.field, track, inv))
    return out


def kernel_basis(m):
    """Kernel basis as dense tuples (deterministic; see module docstring)."""
    return [dense(v, m.cols, m.field) for v in kernel_basis_sparse(m)]


def image_echelon(m):
    """Canonical echelon basis (sparse) of the column space."""
    sweep = Sweep(m.field)
    for j in range(m.cols):
        col = m.column(j)
        if col:
            sweep.insert(dict(col))
    return _back_reduce(sweep)


def _back_reduce(sweep):
    """Turn forward-echelon pivots into fully reduced (RREF) rows."""
    field = sweep.field
    leads = sorted(sweep.pivots)
    reduced = {}
    for lead in reversed(leads):
        vec = dict(sweep.pivots[lead][0])
        for other, ovec in reduced.items():
            c = vec.get(other)
            if c is not None:
                axpy(field, vec, field.neg(c), ovec)
        reduced[lead] = vec
    return [reduced[lead] for lead in leads]


def echelon_basis(vectors, field):
    """Canonical RREF basis of the span of sparse vectors."""
    sweep = Sweep(field)
    for v in vectors:
        if v:
            sweep.insert(dict(v))
    return _back_reduce(sweep)


def reduce_mod(vec, echelon, field):
    """Normal form of a sparse vector modulo an RREF list."""
    vec = dict(vec)
    for row in echelon:
        lead = min(row)
        c = vec.get(lead)
        if c is not None:
            axpy(field, vec, field.neg(c), row)
    return vec


def solve(m, b):
    """Some x with m*x = b, or None.  b is a dense sequence or sparse dict."""
    field = m.field
    if isinstance(b, dict):
        bvec = dict(b)
    else:
        if len(b) != m.rows:
            raise ValueError("shape mismatch in solve")
        bvec = {i: field.of(v) for i, v in enumerate(b) if field.of(v)}
    sweep = Sweep(field)
    one = field.one
    for j in range(m.cols):
        col = dict(m.column(j))
        if col:
            sweep.insert(col, {j: one})
        # an identically zero column can never be a pivot; skip
    lead, _, track = sweep.reduce(bvec, {})
    if lead is not None:
        return None
    x = {j: field.neg(c) for j, c in track.items()}
    return dense(x, m.cols, field)


class QuotientData:
    """A complement of a subspace with canonical class coordinates.

    representatives are standard basis vectors e_j for the non-pivot
    coordinates of the subspace's RREF, ascending.
    """

    def __init__(self, sub_vectors, ambient_dim, field):
        for v in sub_vectors:
            for k in v:
                if not 0 <= k < ambient_dim:
                    raise ValueError("subspace vector outside ambient space")
        self.field = field
        self.ambient_dim = ambient_dim
        self.echelon = echelon_basis(sub_vectors, field)
        pivots = {min(row) for row in self.echelon}
        self.rep_indices = [j for j in range(ambient_dim) if j not in pivots]
        self._pos = {j: i for i, j in enumerate(self.rep_indices)}

    @property
    def dim(self):
        return len(self.rep_indices)

    def representatives(self):
        out = []
        for j in self.rep_indices:
            vec = [self.field.zero] * self.ambient_dim
            vec[j] = self.field.one
            out.append(tuple(vec))
        return out

    def reduce(self, vec):
        if isinstance(vec, dict):
            v = vec
        else:
            if len(vec) != self.ambient_dim:
                raise ValueError("dimension mismatch")
            v = sparse(vec, self.field)
        return reduce_mod(v, self.echelon, self.field)

    def coords(self, vec):
        """Class coordinates of an ambient vector in the representative basis."""
        red = self.reduce(vec)
        out = [self.field.zero] * self.dim
        for k, v in red.items():
            out[self._pos[k]] = v
        return tuple(out)


def quotient_data(sub_vectors, ambient_dim, field=QQ):
    """Complement representatives + coordinate map for span(sub) in k^ambient."""
    vecs = []
    for v in sub_vectors:
        if isinstance(v, dict):
            vecs.append({k: field.of(x) for k, x in v.items() if field.of(x)})
        else:
            if len(v) != ambient_dim:
                raise ValueError("dimension mismatch")
            vecs.append(sparse(v, field))
    return QuotientData(vecs, ambient_dim, field)


def same_subspace(vectors_a, vectors_b, field):
    """Exact equality of spans via canonical echelon bases."""
    return echelon_basis(vectors_a, field) == echelon_basis(vectors_b, field)
