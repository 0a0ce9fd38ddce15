"""Exact sparse multivariate polynomials over Q.

Everything downstream is built on three ambient variable sets:

* ``cotangent``: z_1..z_n together with xi_1..xi_n,
* ``schubert``:  z_1..z_n together with zb_1..zb_n (affine cell coordinates),
* ``plain``:     z_1..z_n alone.

Variable number i (either half) carries the integer weight i, reversed to
n+1-i on the affine cell, so monomial weights add.  Polynomials are stored
sparsely as a dict mapping exponent tuples to Fractions; the zero polynomial
has an empty dict.  Instances are treated as immutable once constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ExactScalar = Fraction

_KINDS = ("cotangent", "schubert", "plain")


class AmbientMismatch(ValueError):
    """Operands were built over different variable sets."""


def as_scalar(value):
    """Coerce ints, strings and Fractions to an exact rational scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError("not an exact scalar: %r" % (value,))


@dataclass(frozen=True)
class VarSet:
    """An ambient set of weighted commuting variables."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError("unknown variable-set kind %r" % (self.kind,))
        if self.n < 1:
            raise ValueError("need at least one variable")

    @property
    def paired(self):
        return self.kind != "plain"

    @property
    def num_vars(self):
        return 2 * self.n if self.paired else self.n

    def weight(self, i):
        # The affine-cell coordinates are weighted in the reverse order so
        # that the positive-degree part of the cell bivector actually raises
        # weight; the two cotangent halves share the ascending convention.
        if self.kind == "schubert":
            return self.n - i % self.n
        return i % self.n + 1

    def name(self, i):
        if i < self.n:
            return "z%d" % (i + 1)
        j = i - self.n + 1
        return ("xi%d" if self.kind == "cotangent" else "zb%d") % j

    def partner(self, i):
        """Index of xi_k for z_k and vice versa."""
        if not self.paired:
            raise AmbientMismatch("plain variable sets have no second half")
        return i + self.n if i < self.n else i - self.n

    def check_same(self, other):
        if self != other:
            raise AmbientMismatch("mixed variable sets: %r vs %r" % (self, other))


def mono_weight(vs, exps):
    return sum(e * vs.weight(i) for i, e in enumerate(exps) if e)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_grlex_key(exps):
    return (sum(exps), exps)

def mono_str(vs, exps):
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(vs.name(i))
        elif e > 1:
            parts.append("%s^%d" % (vs.name(i), e))
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Multidegree:
    """Per-variable total degrees, split into the two halves of the ambient."""

    m: tuple
    l: tuple

    @property
    def counts(self):
        return self.m + self.l

    def total_m(self):
        return sum(self.m)

    def total_l(self):
        return sum(self.l)

    def weight(self, vs=None):
        total = 0
        for half in (self.m, self.l):
            for i, e in enumerate(half):
                w = vs.weight(i) if vs is not None else i + 1
                total += w * e
        return total

    def balanced(self):
        return self.total_m() == self.total_l()


class Polynomial:
    __slots__ = ("varset", "terms")

    def __init__(self, varset, terms=None):
        self.varset = varset
        clean = {}
        if terms:
            for exps, coef in terms.items():
                if coef:
                    clean[tuple(exps)] = as_scalar(coef)
        self.terms = clean

    @classmethod
    def zero(cls, vs):
        return cls(vs)

    @classmethod
    def constant(cls, vs, c):
        c = as_scalar(c)
        if not c:
            return cls(vs)
        return cls(vs, {(0,) * vs.num_vars: c})

    @classmethod
    def one(cls, vs):
        return cls.constant(vs, 1)

    @classmethod
    def variable(cls, vs, i):
        exps = [0] * vs.num_vars
        exps[i] = 1
        return cls(vs, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, vs, exps, coef=1):
        return cls(vs, {tuple(exps): as_scalar(coef)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self):
        return hash((self.varset, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.varset, other)
        self.varset.check_same(other.varset)
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            acc = out.get(exps, 0) + coef
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        res = Polynomial(self.varset)
        res.terms.update(out)
        return res

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.varset, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if not c:
                return Polynomial(self.varset)
            return Polynomial(self.varset, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self.varset.check_same(other.varset)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = mono_mul(ea, eb)
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        res = Polynomial(self.varset)
        res.terms.update(out)
        return res

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one(self.varset)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def diff(self, i):
        """Partial derivative with respect to variable i."""
        out = {}
        for exps, coef in self.terms.items():
            e = exps[i]
            if e:
                new = list(exps)
                new[i] = e - 1
                out[tuple(new)] = coef * e
        return Polynomial(self.varset, out)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def weight_parts(self):
        """Split into weight-homogeneous pieces, keyed by weight."""
        parts = {}
        for exps, coef in self.terms.items():
            w = mono_weight(self.varset, exps)
            parts.setdefault(w, {})[exps] = coef
        return {w: Polynomial(self.varset, t) for w, t in sorted(parts.items())}

    def bidegree_parts(self):
        """Split by (first-half degree, second-half degree) of each monomial."""
        n = self.varset.n
        parts = {}
        for exps, coef in self.terms.items():
            key = (sum(exps[:n]), sum(exps[n:]))
            parts.setdefault(key, {})[exps] = coef
        return {k: Polynomial(self.varset, t) for k, t in sorted(parts.items())}

    def is_balanced(self):
        """True when every monomial has equal degree in the two halves."""
        n = self.varset.n
        return all(sum(e[:n]) == sum(e[n:]) for e in self.terms)

    def divide_by_variable(self, i):
        """Exact quotient by variable i, or None when some term lacks it."""
        out = {}
        for exps, coef in self.terms.items():
            if exps[i] == 0:
                return None
            new = list(exps)
            new[i] -= 1
            out[tuple(new)] = coef
        return Polynomial(self.varset, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coef in self.sorted_terms():
            mono = mono_str(self.varset, exps)
            if mono == "1":
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = mono
            else:
                body = "%s*%s" % (abs(coef), mono)
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    __repr__ = __str__


def trace_pairing(vs):
    """The pairing sum over both halves: z_1*xi_1 + ... + z_n*xi_n."""
    if not vs.paired:
        raise AmbientMismatch("the pairing needs a paired variable set")
    out = Polynomial.zero(vs)
    for i in range(vs.n):
        out = out + Polynomial.variable(vs, i) * Polynomial.variable(vs, vs.partner(i))
    return out
