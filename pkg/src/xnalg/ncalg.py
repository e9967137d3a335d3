"""Elements of the algebra A = k<x, y>/(yx - xy - x^N) and of its localization
at the normal element x, in the normal-ordered basis {x^i y^j}.

Multiplication rewrites every product into the basis using the closed
commutation rule

    y^j x^i = sum_t (i)_{N-1, j-t} binom(j, t) x^{i + (j-t)(N-1)} y^t,

whose integer Pochhammer symbols stay valid for negative i, so localized
arithmetic uses the same kernel.  The grading puts x in degree 1 and y in
degree N-1; the filtration level of an element is its top y-exponent.
Elements are immutable and operations are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import (
    CycloField,
    SchemaError,
    scalar_from_json,
    scalar_to_json,
)
from .sequences import c_eval, falling_binomial


class CtxMismatchError(ValueError):
    """Two elements from different algebra contexts met in one operation."""


class AlgebraCtx:
    """Ambient description of the algebra: the exponent N of the defining
    relation, whether powers of x are inverted, and the scalar ring."""

    __slots__ = ("N", "localized", "field")

    def __init__(self, N: int, localized: bool = False, field=None):
        if N < 0:
            raise ValueError("the relation exponent N must be >= 0")
        self.N = N
        self.localized = bool(localized)
        self.field = CycloField(1) if field is None else field

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraCtx)
            and other.N == self.N
            and other.localized == self.localized
            and other.field == self.field
        )

    def __hash__(self):
        return hash(("AlgebraCtx", self.N, self.localized, self.field))

    def __repr__(self):
        loc = ", localized" if self.localized else ""
        return f"AlgebraCtx(N={self.N}{loc}, field={self.field!r})"

    def localize(self) -> "AlgebraCtx":
        return AlgebraCtx(self.N, True, self.field)

    def unlocalized(self) -> "AlgebraCtx":
        return AlgebraCtx(self.N, False, self.field)

    def coerce(self, value):
        return self.field.coerce(value)

    # element constructors

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return Element(self, {(0, 0): self.coerce(c)})

    def one(self) -> "Element":
        return self.scalar(1)

    def monomial(self, i: int, j: int, c=1) -> "Element":
        return Element(self, {(i, j): self.coerce(c)})

    def x(self, i: int = 1) -> "Element":
        return self.monomial(i, 0)

    def y(self, j: int = 1) -> "Element":
        return self.monomial(0, j)

    def _check_exponents(self, i: int, j: int):
        if j < 0:
            raise ValueError("y-exponents must be non-negative")
        if i < 0 and not self.localized:
            raise ValueError("negative x-exponents need a localized context")


def poch_int(a: int, k: int, m: int) -> int:
    """Integer Pochhammer symbol a (a+k) (a+2k) ... (a+(m-1)k)."""
    result = 1
    for s in range(m):
        result *= a + s * k
    return result


def comm_move_left(i: int, j: int, N: int):
    """Rewrite y^j x^i in the normal-ordered basis.

    Returns a list of integer-weighted monomials (coeff, xexp, yexp).  The
    exponent i may be negative.
    """
    k = N - 1
    out = []
    for t in range(j + 1):
        m = j - t
        c = poch_int(i, k, m) * math.comb(j, t)
        if c:
            out.append((c, i + m * k, t))
    return out


def comm_move_right(i: int, j: int, N: int):
    """Rewrite x^i y^j as a combination of words x^a y^t x^i.

    Returns a list of (coeff, a, t); the trailing factor x^i is implicit.
    """
    k = N - 1
    out = []
    for t in range(j + 1):
        m = j - t
        c = poch_int(-i, k, m) * math.comb(j, t)
        if c:
            out.append((c, m * k, t))
    return out


class Element:
    """An element of A (or A_x): a finite scalar-coefficient table keyed by
    (x-exponent, y-exponent), fully normal ordered."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms):
        clean = {}
        for (i, j), c in terms.items():
            ctx._check_exponents(i, j)
            if c:
                clean[(i, j)] = c
        self.ctx = ctx
        self.terms = clean

    # basic structure

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def items(self):
        """Terms in sorted key order (deterministic iteration)."""
        return [(key, self.terms[key]) for key in sorted(self.terms)]

    def coefficient(self, i: int, j: int):
        return self.terms.get((i, j), self.ctx.field.zero)

    def _check_ctx(self, other: "Element"):
        if other.ctx != self.ctx:
            raise CtxMismatchError(f"{self.ctx!r} vs {other.ctx!r}")

    # ring operations

    def __neg__(self):
        return Element(self.ctx, {key: -c for key, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return Element(self.ctx, out)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_ctx(other)
            return normalize_product(self, other)
        try:
            c = self.ctx.coerce(other)
        except TypeError:
            return NotImplemented
        return Element(self.ctx, {key: v * c for key, v in self.terms.items()})

    def __rmul__(self, other):
        try:
            c = self.ctx.coerce(other)
        except TypeError:
            return NotImplemented
        return Element(self.ctx, {key: c * v for key, v in self.terms.items()})

    def __truediv__(self, other):
        c = self.ctx.coerce(other)
        return Element(self.ctx, {key: v / c for key, v in self.terms.items()})

    def __pow__(self, k):
        return power(self, k)

    # grading and filtration

    def monomial_degree(self, i: int, j: int) -> int:
        return i + j * (self.ctx.N - 1)

    def degree(self):
        """The common degree of all terms; None for zero, ValueError if the
        element is not homogeneous."""
        degs = {self.monomial_degree(i, j) for (i, j) in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.monomial_degree(i, j) for (i, j) in self.terms}) <= 1

    def level(self) -> int:
        """Filtration level: the top y-exponent (-1 for the zero element)."""
        return max((j for (_, j) in self.terms), default=-1)

    def homogeneous_components(self):
        """Partition of the terms by degree, as sorted (degree, part) pairs."""
        buckets: dict[int, dict] = {}
        for (i, j), c in self.terms.items():
            buckets.setdefault(self.monomial_degree(i, j), {})[(i, j)] = c
        return [(d, Element(self.ctx, buckets[d])) for d in sorted(buckets)]

    # rendering and serialization

    def __repr__(self):
        return f"Element({render_element(self)})"

    def to_json(self):
        field = self.ctx.field
        if not isinstance(field, CycloField):
            raise TypeError("only cyclotomic-field elements serialize to JSON")
        return {
            "N": self.ctx.N,
            "localized": self.ctx.localized,
            "field": {"cyclo_order": field.order},
            "terms": [
                {"xexp": i, "yexp": j, "coeff": scalar_to_json(c)}
                for (i, j), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data, path="element"):
        if not isinstance(data, dict):
            raise SchemaError(path, "expected an object")
        n = data.get("N")
        if not isinstance(n, int) or n < 0:
            raise SchemaError(f"{path}.N", "expected an integer >= 0")
        localized = data.get("localized", False)
        if not isinstance(localized, bool):
            raise SchemaError(f"{path}.localized", "expected a boolean")
        order = 1
        fld = data.get("field")
        if fld is not None:
            if not isinstance(fld, dict) or not isinstance(fld.get("cyclo_order"), int):
                raise SchemaError(f"{path}.field", "expected {'cyclo_order': n}")
            order = fld["cyclo_order"]
        ctx = AlgebraCtx(n, localized, CycloField(order))
        raw = data.get("terms")
        if not isinstance(raw, list):
            raise SchemaError(f"{path}.terms", "expected a list")
        terms = {}
        for k, item in enumerate(raw):
            here = f"{path}.terms[{k}]"
            if not isinstance(item, dict):
                raise SchemaError(here, "expected an object")
            i, j = item.get("xexp"), item.get("yexp")
            if not isinstance(i, int) or not isinstance(j, int):
                raise SchemaError(here, "expected integer 'xexp' and 'yexp'")
            if j < 0:
                raise SchemaError(f"{here}.yexp", "y-exponents must be non-negative")
            if i < 0 and not localized:
                raise SchemaError(f"{here}.xexp", "negative x-exponent outside localized mode")
            c = scalar_from_json(item.get("coeff"), ctx.field, f"{here}.coeff")
            if (i, j) in terms:
                raise SchemaError(here, "duplicate monomial")
            if c:
                terms[(i, j)] = c
        return cls(ctx, terms)


def normalize_product(a: Element, b: Element) -> Element:
    """The normal-ordered product, by bilinear extension of the monomial
    commutation rule."""
    a._check_ctx(b)
    ctx = a.ctx
    k = ctx.N - 1
    out: dict = {}
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            base = c1 * c2
            for t in range(j1 + 1):
                m = j1 - t
                w = poch_int(i2, k, m) * math.comb(j1, t)
                if not w:
                    continue
                key = (i1 + i2 + m * k, t + j2)
                c = base * w
                acc = out.get(key)
                out[key] = c if acc is None else acc + c
    return Element(ctx, out)


def commutator(a: Element, b: Element) -> Element:
    """ab - ba in normal form."""
    return a * b - b * a


def power(a: Element, k: int) -> Element:
    """Repeated normalized product; a^0 = 1."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("element powers take a non-negative integer")
    result = a.ctx.one()
    base = a
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def basis_of_degree(ctx: AlgebraCtx, l: int, i_min=None):
    """All basis monomials (i, j) of total degree l, sorted by y-exponent.

    Degreewise finiteness needs N >= 2.  In a localized context a lower bound
    on the x-exponent is mandatory, because homogeneous components are
    infinite-dimensional there.
    """
    if ctx.N < 2:
        raise ValueError("degreewise enumeration needs N >= 2")
    if ctx.localized:
        if i_min is None:
            raise ValueError("localized contexts need an explicit x-exponent lower bound")
        floor = i_min
    else:
        floor = 0 if i_min is None else max(0, i_min)
    k = ctx.N - 1
    out = []
    j = 0
    while True:
        i = l - j * k
        if i < floor:
            break
        out.append((i, j))
        j += 1
    return out


def hilbert_count(ctx: AlgebraCtx, lo: int, hi: int):
    """Dimensions of the homogeneous components in a degree window."""
    if ctx.localized:
        raise ValueError("hilbert_count works on the unlocalized algebra")
    return [len(basis_of_degree(ctx, l)) for l in range(lo, hi + 1)]


def phi_element(ctx: AlgebraCtx, j: int) -> Element:
    """The unique element of Ay, homogeneous of degree j(N-1), whose
    commutator with x is x^N y^{j-1}:

        (1/j) sum_{i<j} binom(j, i) c_i(N-1) x^{i(N-1)} y^{j-i}.
    """
    if j < 1:
        raise ValueError("phi_element wants j >= 1")
    if ctx.N < 1:
        raise ValueError("phi_element wants N >= 1")
    k = ctx.N - 1
    terms = {}
    for i in range(j):
        c = Fraction(math.comb(j, i), j) * c_eval(i, Fraction(k))
        if c:
            terms[(i * k, j - i)] = ctx.coerce(c)
    return Element(ctx, terms)


def normal_order_power(ctx: AlgebraCtx, j: int) -> Element:
    """The j-th normal-order power z^j y^j, with z = x^{-N+1}/(N-1)."""
    if ctx.N < 2:
        raise ValueError("normal-order powers need N >= 2")
    if not ctx.localized:
        raise ValueError("normal-order powers live in the localization")
    if j < 0:
        raise ValueError("normal_order_power wants j >= 0")
    if j == 0:
        return ctx.one()
    k = ctx.N - 1
    return ctx.monomial(-j * k, j, Fraction(1, k ** j))


def laguerre_identity_check(ctx: AlgebraCtx, i: int, j: int) -> bool:
    """Check that conjugating the j-th normal-order power by x^i agrees with
    the Laguerre-polynomial expansion

        x^{-i} (zy)^j x^i = (-1)^j j! L_j^{(-i/(N-1)-j)}(zy),

    where powers of the indeterminate are replaced by normal-order powers.
    """
    if ctx.N < 2:
        raise ValueError("the identity needs N >= 2")
    if i < 0 or j < 0:
        raise ValueError("exponents must be non-negative")
    loc = ctx if ctx.localized else ctx.localize()
    lhs = loc.x(-i) * normal_order_power(loc, j) * loc.x(i)
    k = loc.N - 1
    alpha = Fraction(-i, k) - j
    rhs = loc.zero()
    sign = (-1) ** j * math.factorial(j)
    for s in range(j + 1):
        c = sign * (-1) ** s * falling_binomial(j + alpha, j - s) / math.factorial(s)
        if c:
            rhs = rhs + c * normal_order_power(loc, s)
    return lhs == rhs


def render_scalar(c) -> str:
    """Scalar rendering for the pretty printer."""
    if isinstance(c, (int, Fraction)):
        return str(c)
    from .scalars import CycloScalar, QPoly

    if isinstance(c, CycloScalar):
        return "(" + QPoly(c.coeffs).format(var="z") + ")"
    if isinstance(c, QPoly):
        return "(" + c.format(var="T") + ")"
    return repr(c)


def render_element(a: Element) -> str:
    """Canonical text form, parseable back by the expression grammar whenever
    the coefficients are rational."""
    if not a.terms:
        return "0"
    parts = []
    for (i, j), c in a.items():
        factors = []
        if i == 1:
            factors.append("x")
        elif i != 0:
            factors.append(f"x^{i}")
        if j == 1:
            factors.append("y")
        elif j != 0:
            factors.append(f"y^{j}")
        mono = "*".join(factors)
        negative = isinstance(c, (int, Fraction)) and c < 0
        body = render_scalar(-c if negative else c)
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        if not parts:
            parts.append(("-" if negative else "") + text)
        else:
            parts.append(("- " if negative else "+ ") + text)
    return " ".join(parts)
