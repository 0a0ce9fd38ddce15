"""Polynomial differential forms and multivector fields with exact coefficients.

A form is stored as a dict mapping a strictly increasing tuple of generator
indices (the word, representing dx_{i1} ^ ... ^ dx_{ik}) to a polynomial
coefficient; multivector fields use the same layout with Dx generators.
Sign bookkeeping lives entirely in the word normalization helpers.

Conventions, fixed once and used consistently everywhere:

* single-field contraction inserts into the first slot,
  i_X(a1 ^ ... ^ ak) = sum_m (-1)^(m-1) <X, a_m> a1 ^ ... ^ hat(a_m) ^ ... ^ ak,
  so the Cartan identity L_X = d i_X + i_X d holds on the nose;
* decomposable multivectors contract as the operator product
  i_{X ^ Y} = i_X o i_Y (i_Y acts first), hence i_{Dz1 ^ Dxi1}(dz1 ^ dxi1) = -1;
* the scalar bivector/2-form pairing is the determinant pairing
  <X ^ Y, df ^ dg> = X(f) Y(g) - X(g) Y(f), which equals minus the iterated
  contraction above.  The relative sign is what makes the decomposable
  expansion of the Poisson differential come out with the classical signs.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import AmbientMismatch, Polynomial, as_scalar, mono_grlex_key, mono_weight


def normalize_word(seq):
    """Sort generator indices, counting inversions.

    Returns (sign, word) or None when a generator repeats.
    """
    word = list(seq)
    sign = 1
    for i in range(1, len(word)):
        j = i
        while j > 0 and word[j - 1] > word[j]:
            word[j - 1], word[j] = word[j], word[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and word[j - 1] == word[j]:
            return None
    return sign, tuple(word)


def merge_words(u, v):
    """Concatenate two sorted words; None when they share a generator."""
    res = normalize_word(u + v)
    return res


def remove_generator(word, g):
    """Contract generator g out of word: (sign, shorter word) or None."""
    try:
        pos = word.index(g)
    except ValueError:
        return None
    sign = -1 if pos % 2 else 1
    return sign, word[:pos] + word[pos + 1:]


class _Graded:
    """Shared storage for forms and multivectors."""

    __slots__ = ("varset", "terms")
    _prefix = "?"

    def __init__(self, varset, terms=None):
        self.varset = varset
        clean = {}
        if terms:
            for word, poly in terms.items():
                if poly and not poly.is_zero():
                    varset.check_same(poly.varset)
                    clean[tuple(word)] = poly
        self.terms = clean

    @classmethod
    def zero(cls, vs):
        return cls(vs)

    @classmethod
    def from_polynomial(cls, poly):
        return cls(poly.varset, {(): poly})

    @classmethod
    def generator(cls, vs, i, coef=1):
        c = as_scalar(coef)
        return cls(vs, {(i,): Polynomial.constant(vs, c)})

    @classmethod
    def term(cls, vs, word, poly):
        res = normalize_word(word)
        if res is None:
            return cls(vs)
        sign, sorted_word = res
        return cls(vs, {sorted_word: poly * sign})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self):
        return hash((self.varset, frozenset((w, p) for w, p in self.terms.items())))

    def _check_like(self, other):
        if type(self) is not type(other):
            raise TypeError("cannot mix forms and multivectors")
        self.varset.check_same(other.varset)

    def __add__(self, other):
        self._check_like(other)
        out = dict(self.terms)
        for word, poly in other.terms.items():
            acc = out.get(word)
            acc = poly if acc is None else acc + poly
            if acc.is_zero():
                out.pop(word, None)
            else:
                out[word] = acc
        return type(self)(self.varset, out)

    def __neg__(self):
        return type(self)(self.varset, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiply every coefficient by a polynomial or scalar."""
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.varset, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return type(self)(self.varset, {w: p * other for w, p in self.terms.items()})

    __rmul__ = __mul__

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def homogeneous_degree(self):
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("inhomogeneous element, degrees %r" % (degs,))
        return degs[0]

    def graded_part(self, k):
        return type(self)(self.varset, {w: p for w, p in self.terms.items() if len(w) == k})

    def term_items(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def coefficient(self, word):
        return self.terms.get(tuple(word), Polynomial.zero(self.varset))

    def wedge(self, other):
        self._check_like(other)
        out = type(self)(self.varset)
        acc = {}
        for wa, pa in self.terms.items():
            for wb, pb in other.terms.items():
                res = merge_words(wa, wb)
                if res is None:
                    continue
                sign, word = res
                add = pa * pb * sign
                cur = acc.get(word)
                acc[word] = add if cur is None else cur + add
        return type(self)(self.varset, acc)

    def __xor__(self, other):
        return self.wedge(other)

    def weight_parts(self):
        """Split into weight-homogeneous pieces; generators carry variable weights."""
        sgn = self._generator_weight_sign
        parts = {}
        for word, poly in self.terms.items():
            wword = sgn * sum(self.varset.weight(g) for g in word)
            for exps, coef in poly.terms.items():
                w = wword + mono_weight(self.varset, exps)
                parts.setdefault(w, {}).setdefault(word, {})[exps] = coef
        out = {}
        for w, byword in sorted(parts.items()):
            out[w] = type(self)(
                self.varset,
                {word: Polynomial(self.varset, t) for word, t in byword.items()},
            )
        return out

    def min_weight(self):
        parts = self.weight_parts()
        return min(parts) if parts else None

    def multidegree_parts(self):
        """Split by per-variable counts (coefficient exponents plus generators)."""
        from .poly import Multidegree

        n = self.varset.n
        nv = self.varset.num_vars
        parts = {}
        for word, poly in self.terms.items():
            base = [0] * nv
            for g in word:
                base[g] += 1
            for exps, coef in poly.terms.items():
                counts = tuple(b + e for b, e in zip(base, exps))
                parts.setdefault(counts, {}).setdefault(word, {})[exps] = coef
        out = {}
        for counts, byword in sorted(parts.items()):
            md = Multidegree(counts[:n], counts[n:])
            out[md] = type(self)(
                self.varset,
                {word: Polynomial(self.varset, t) for word, t in byword.items()},
            )
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        vs = self.varset
        pieces = []
        for word, poly in self.term_items():
            gens = "^".join("%s%s" % (self._prefix, vs.name(g)) for g in word)
            if not word:
                pieces.append("(%s)" % poly)
            else:
                pieces.append("(%s) %s" % (poly, gens))
        return " + ".join(pieces)

    __repr__ = __str__


class PolyForm(_Graded):
    _prefix = "d"
    _generator_weight_sign = 1


class PolyVector(_Graded):
    _prefix = "D"
    _generator_weight_sign = -1


def d_of_polynomial(f):
    """Exterior derivative of a polynomial, as a 1-form."""
    out = {}
    for i in range(f.varset.num_vars):
        df = f.diff(i)
        if not df.is_zero():
            out[(i,)] = df
    return PolyForm(f.varset, out)


def exterior_derivative(a):
    """d on forms; squares to zero."""
    if not isinstance(a, PolyForm):
        raise TypeError("exterior derivative expects a form")
    acc = {}
    for word, poly in a.terms.items():
        for i in range(a.varset.num_vars):
            dp = poly.diff(i)
            if dp.is_zero():
                continue
            res = merge_words((i,), word)
            if res is None:
                continue
            sign, new = res
            add = dp * sign
            cur = acc.get(new)
            acc[new] = add if cur is None else cur + add
    return PolyForm(a.varset, acc)


def contract_single(g, a):
    """i_{Dx_g} with first-slot insertion: position m contributes (-1)^(m-1)."""
    acc = {}
    for word, poly in a.terms.items():
        res = remove_generator(word, g)
        if res is None:
            continue
        sign, new = res
        cur = acc.get(new)
        add = poly * sign
        acc[new] = add if cur is None else cur + add
    return PolyForm(a.varset, acc)


def interior_product(v, a):
    """Contraction of a multivector into a form.

    Decomposable words act as i_{X1 ^ ... ^ Xd} = i_{X1} o ... o i_{Xd},
    rightmost factor first; polynomial coefficients ride along.
    """
    if not isinstance(v, PolyVector) or not isinstance(a, PolyForm):
        raise TypeError("interior product contracts a multivector into a form")
    v.varset.check_same(a.varset)
    out = PolyForm.zero(a.varset)
    for word, coef in v.terms.items():
        if not word:
            out = out + a * coef
            continue
        cur = a
        for g in reversed(word):
            cur = contract_single(g, cur)
            if cur.is_zero():
                break
        if not cur.is_zero():
            out = out + cur * coef
    return out


def vector_apply(X, f):
    """Apply a vector field (degree-1 multivector) to a polynomial."""
    if X.degrees() not in ([], [1]):
        raise ValueError("vector_apply needs a degree-1 field")
    out = Polynomial.zero(f.varset)
    for (g,), coef in X.terms.items():
        out = out + coef * f.diff(g)
    return out


def lie_derivative(X, a):
    """Lie derivative along a vector field, built from the Leibniz rule.

    Acts on coefficients as X itself and on each generator dx_g by d(X(x_g)).
    The Cartan identity against d and i_X is a theorem here, not a definition,
    and is pinned by tests.
    """
    if X.degrees() not in ([], [1]):
        raise ValueError("lie_derivative needs a degree-1 field")
    X.varset.check_same(a.varset)
    acc = PolyForm.zero(a.varset)
    xcomp = {g: coef for (g,), coef in X.terms.items()}
    for word, poly in a.terms.items():
        moved = vector_apply(X, poly)
        if not moved.is_zero():
            acc = acc + PolyForm(a.varset, {word: moved})
        for pos, g in enumerate(word):
            fg = xcomp.get(g)
            if fg is None:
                continue
            for h in range(a.varset.num_vars):
                dh = fg.diff(h)
                if dh.is_zero():
                    continue
                res = normalize_word(word[:pos] + (h,) + word[pos + 1:])
                if res is None:
                    continue
                sign, new = res
                acc = acc + PolyForm(a.varset, {new: poly * dh * sign})
    return acc


def schouten_bracket(u, v):
    """Schouten-Nijenhuis bracket of multivector fields.

    Computed in odd coordinates: a p-vector is a polynomial in odd generators
    t_i, left odd derivatives are taken, and

        [u, v] = sum_i (-1)^(p-1) (du/dt_i)(dv/dx_i) - (du/dx_i)(dv/dt_i)

    lands in the classical convention

        [u, v] = -(-1)^((p-1)(q-1)) [v, u],
        [X, f] = X(f),  [X, Y] = Lie bracket,
        [u, v ^ w] = [u, v] ^ w + (-1)^((p-1) deg v) v ^ [u, w].

    For a bivector pi, [pi, pi] = 0 is the Jacobi identity of the induced
    bracket.
    """
    if not isinstance(u, PolyVector) or not isinstance(v, PolyVector):
        raise TypeError("schouten_bracket expects multivector fields")
    u.varset.check_same(v.varset)
    vs = u.varset
    acc = {}

    def add_term(word_u, word_v, poly):
        if poly.is_zero():
            return
        res = merge_words(word_u, word_v)
        if res is None:
            return
        sign, word = res
        cur = acc.get(word)
        add = poly * sign
        acc[word] = add if cur is None else cur + add

    for wu, pu in u.terms.items():
        p = len(wu)
        lead_sign = -1 if p % 2 == 0 else 1
        for wv, pv in v.terms.items():
            for i in range(vs.num_vars):
                res = remove_generator(wu, i)
                if res is not None:
                    sgn, ru = res
                    dv = pv.diff(i)
                    if not dv.is_zero():
                        add_term(ru, wv, pu * dv * (sgn * lead_sign))
                res = remove_generator(wv, i)
                if res is not None:
                    sgn, rv = res
                    du = pu.diff(i)
                    if not du.is_zero():
                        add_term(wu, rv, du * pv * (-sgn))
    return PolyVector(vs, acc)


def bivector_form_pairing(v, a):
    """Determinant pairing of a bivector against a 2-form, as a polynomial.

    <X ^ Y, df ^ dg> = X(f) Y(g) - X(g) Y(f); on sorted words this is plain
    word matching.  Equals minus the iterated contraction, a relation pinned
    by tests.
    """
    if not isinstance(v, PolyVector) or not isinstance(a, PolyForm):
        raise TypeError("pairing takes a bivector and a 2-form")
    v.varset.check_same(a.varset)
    for w in v.terms:
        if len(w) != 2:
            raise ValueError("pairing needs a pure bivector")
    for w in a.terms:
        if len(w) != 2:
            raise ValueError("pairing needs a pure 2-form")
    out = Polynomial.zero(v.varset)
    for word, coef in v.terms.items():
        pa = a.terms.get(word)
        if pa is not None:
            out = out + coef * pa
    return out


def contract_form_into_vector(phi, v):
    """Contract a 1-form into the first slot of a multivector field."""
    if not isinstance(phi, PolyForm) or not isinstance(v, PolyVector):
        raise TypeError("expects a 1-form and a multivector")
    if phi.degrees() not in ([], [1]):
        raise ValueError("contraction slot takes a 1-form")
    phi.varset.check_same(v.varset)
    comp = {g: coef for (g,), coef in phi.terms.items()}
    acc = {}
    for word, coef in v.terms.items():
        for pos, g in enumerate(word):
            fg = comp.get(g)
            if fg is None:
                continue
            sign = -1 if pos % 2 else 1
            new = word[:pos] + word[pos + 1:]
            add = coef * fg * sign
            cur = acc.get(new)
            acc[new] = add if cur is None else cur + add
    return PolyVector(phi.varset, acc)


def interior_diag(i, a):
    """The lowering operator x_i * (contract dx_i)."""
    lowered = contract_single(i, a)
    if lowered.is_zero():
        return lowered
    return lowered * Polynomial.variable(a.varset, i)


def interior_diag_star(i, a):
    """The raising operator dx_i ^ (d/dx_i on coefficients).

    Anticommutes with interior_diag(j, .) for j != i and pairs with it to the
    per-variable grading operator for j == i.
    """
    acc = {}
    for word, poly in a.terms.items():
        dp = poly.diff(i)
        if dp.is_zero():
            continue
        res = merge_words((i,), word)
        if res is None:
            continue
        sign, new = res
        add = dp * sign
        cur = acc.get(new)
        acc[new] = add if cur is None else cur + add
    return PolyForm(a.varset, acc)


def form_weight_term(vs, word, exps):
    return sum(vs.weight(g) for g in word) + mono_weight(vs, exps)


def sort_key_form_term(word, exps):
    return (word, mono_grlex_key(exps))
