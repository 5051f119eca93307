"""Fraction-free sparse elimination over Z[q, q^-1].

Vectors are dicts mapping an arbitrary hashable key to a nonzero LaurentPoly.
Quotients are only formed at the very end, as RationalFunctions.
"""

from __future__ import annotations

from .laurent import ONE, LaurentPoly, laurent_gcd
from .ratfunc import RationalFunction


class SolveError(ArithmeticError):
    pass


class NoSolution(SolveError):
    pass


class NonUnique(SolveError):
    pass


def axpy(v, f, w):
    """v <- v - f*w in place."""
    for k, c in w.items():
        x = v.get(k)
        x = -(f * c) if x is None else x - f * c
        if x:
            v[k] = x
        else:
            v.pop(k, None)


def scale(v, f):
    return {k: c * f for k, c in v.items()}


def _unit_inverse(p):
    (e, c), = p.items()
    return LaurentPoly.q(-e, c)


def _content(*vecs):
    g = None
    for v in vecs:
        for c in v.values():
            g = c if g is None else laurent_gcd(g, c)
            if g == ONE:
                return g
    return g


class Echelon:
    """Reduced row echelon form built one vector at a time.

    Each stored row remembers which combination of the inserted vectors it
    came from, so that a target can be written back in terms of the inputs.
    Pivots are chosen to be units whenever the row offers one, which keeps
    almost every elimination step division-free.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> (vec, combo)
        self.labels = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return (scale, combo, remainder) with
        scale*vec - sum(combo[l]*input[l]) == remainder, remainder free of pivots."""
        v = dict(vec)
        combo = {}
        s = ONE
        for key in [k for k in v if k in self.rows]:
            e = v.get(key)
            if e is None:
                continue
            rv, rc = self.rows[key]
            p = rv[key]
            if p.is_unit():
                f = e * _unit_inverse(p)
                axpy(v, f, rv)
                for l, c in rc.items():
                    x = combo.get(l)
                    x = c * f if x is None else x + c * f
                    if x:
                        combo[l] = x
                    else:
                        combo.pop(l)
            else:
                v = scale(v, p)
                axpy(v, e, rv)
                combo = scale(combo, p)
                for l, c in rc.items():
                    x = combo.get(l)
                    x = c * e if x is None else x + c * e
                    if x:
                        combo[l] = x
                    else:
                        combo.pop(l)
                s = s * p
                g = _content(v, combo, {None: s})
                if g is not None and g != ONE:
                    v = {k: c.divexact(g) for k, c in v.items()}
                    combo = {k: c.divexact(g) for k, c in combo.items()}
                    s = s.divexact(g)
        return s, combo, v

    def add(self, vec, label=None):
        """Insert a vector; return True when it was independent of the rows so far."""
        if label is None:
            label = len(self.labels)
        self.labels.append(label)
        s, combo, v = self.reduce(vec)
        # the stored row is remainder = s*vec - sum(combo*inputs)
        rc = {l: -c for l, c in combo.items()}
        rc[label] = rc.get(label, LaurentPoly(0)) + s
        if not v:
            return False
        key = _choose_pivot(v)
        p = v[key]
        for pk, (ov, oc) in list(self.rows.items()):
            e = ov.get(key)
            if e is None:
                continue
            if p.is_unit():
                f = e * _unit_inverse(p)
                ov = dict(ov)
                oc = dict(oc)
                axpy(ov, f, v)
                axpy(oc, f, rc)
            else:
                ov = scale(ov, p)
                oc = scale(oc, p)
                axpy(ov, e, v)
                axpy(oc, e, rc)
                g = _content(ov, oc)
                if g is not None and g != ONE:
                    ov = {k: c.divexact(g) for k, c in ov.items()}
                    oc = {k: c.divexact(g) for k, c in oc.items()}
            self.rows[pk] = (ov, oc)
        self.rows[key] = (v, rc)
        return True

    def express(self, vec):
        """Coefficients {label: RationalFunction} with vec == sum(coef*input),
        or None when vec is outside the span."""
        s, combo, v = self.reduce(vec)
        if v:
            return None
        return {l: RationalFunction(c, s) for l, c in combo.items() if c}


def _choose_pivot(v):
    best = None
    for k, c in v.items():
        if c.is_unit():
            if best is None or not v[best].is_unit() or k > best:
                best = k
        elif best is None or (not v[best].is_unit() and k > best):
            best = k
    return best


def rf_solve(matrix, rhs):
    """Exact solution x of matrix @ x == rhs over Q(q).

    Raises NoSolution for an inconsistent system and NonUnique when the
    columns are linearly dependent.
    """
    nrows = len(matrix)
    if len(rhs) != nrows:
        raise ValueError("rhs length does not match matrix")
    ncols = len(matrix[0]) if nrows else 0
    if any(len(r) != ncols for r in matrix):
        raise ValueError("matrix is not rectangular")
    cols = []
    dens = []
    for j in range(ncols):
        entries = [RationalFunction.coerce(matrix[i][j]) for i in range(nrows)]
        d = _lcm_den(entries)
        dens.append(d)
        cols.append({i: (e * d).as_laurent() for i, e in enumerate(entries) if e})
    b = [RationalFunction.coerce(x) for x in rhs]
    db = _lcm_den(b)
    bvec = {i: (e * db).as_laurent() for i, e in enumerate(b) if e}

    ech = Echelon()
    independent = [ech.add(c, j) for j, c in enumerate(cols)]
    coeffs = ech.express(bvec)
    if coeffs is None:
        raise NoSolution("system is inconsistent")
    if not all(independent):
        raise NonUnique(f"rank {ech.rank} < {ncols} unknowns")
    return [
        coeffs.get(j, RationalFunction(0)) * dens[j] / db for j in range(ncols)
    ]


def _lcm_den(entries):
    d = ONE
    for e in entries:
        if e.den != ONE:
            g = laurent_gcd(d, e.den)
            d = (d * e.den).divexact(g)
    return RationalFunction(d)
