"""Exact rank computations over the rationals and over prime fields.

Rational ranks are computed by fraction-free (Bareiss) elimination on
integer matrices, so no Fraction objects are ever created; prime-field
ranks use plain modular elimination. Matrices are lists of rows of ints.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Rationals:
    def __str__(self):
        return "rational"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 2 or not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __str__(self):
        return f"fp:{self.p}"


RATIONALS = Rationals()


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def field_from_string(s):
    """Parse "rational" or "fp:<p>" into a field choice."""
    if s == "rational":
        return RATIONALS
    if s.startswith("fp:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field {s!r}; expected 'rational' or 'fp:<p>'")


def rank(matrix, field=RATIONALS):
    """Rank of an integer matrix over the chosen field."""
    if not matrix or not matrix[0]:
        return 0
    if isinstance(field, PrimeField):
        return _rank_mod_p(matrix, field.p)
    return _rank_bareiss(matrix)


def _rank_bareiss(matrix):
    m = [row[:] for row in matrix]
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        pivot_row = m[rk]
        for r in range(rk + 1, nrows):
            row = m[r]
            f = row[col]
            if f:
                for c in range(col, ncols):
                    row[c] = (p * row[c] - f * pivot_row[c]) // prev
            elif prev != 1 or p != 1:
                for c in range(col, ncols):
                    row[c] = p * row[c] // prev
        prev = p
        rk += 1
        if rk == nrows:
            break
    return rk


def _rank_mod_p(matrix, p):
    m = [[x % p for x in row] for row in matrix]
    nrows, ncols = len(m), len(m[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], p - 2, p)
        pivot_row = m[rk]
        for r in range(rk + 1, nrows):
            f = m[r][col]
            if f:
                factor = f * inv % p
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - factor * pivot_row[c]) % p
        rk += 1
        if rk == nrows:
            break
    return rk
