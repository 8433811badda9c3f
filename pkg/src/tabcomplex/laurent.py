"""Sparse Laurent polynomials with exact integer coefficients.

Variables are interned :class:`Var` objects living in a namespace
(``"t"``, ``"x"``, ``"y"``, ...) and carrying an arbitrary hashable key.
A monomial is a tuple of ``(Var, exponent)`` pairs sorted by variable, with
exponents allowed to be negative.  Coefficients are Python ints, so there is
no overflow and no floating point anywhere.
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Mapping, Union

from .labels import label_key, label_str

__all__ = ["Var", "LaurentPolynomial", "Monomial"]


class Var:
    """An interned polynomial variable ``namespace[key]``."""

    __slots__ = ("namespace", "key", "_order", "__weakref__")
    _registry: dict[tuple[str, Hashable], "Var"] = {}

    def __new__(cls, namespace: str, key: Hashable = None) -> "Var":
        ident = (namespace, key)
        found = cls._registry.get(ident)
        if found is not None:
            return found
        obj = super().__new__(cls)
        obj.namespace = namespace
        obj.key = key
        obj._order = (namespace, label_key(key))
        cls._registry[ident] = obj
        return obj

    def __reduce__(self):
        return (Var, (self.namespace, self.key))

    def __lt__(self, other: "Var") -> bool:
        return self._order < other._order

    def __gt__(self, other: "Var") -> bool:
        return self._order > other._order

    def __repr__(self) -> str:
        if self.key is None:
            return self.namespace
        key = self.key
        if self.namespace == "t" and isinstance(key, tuple) and len(key) == 2:
            return f"t[{label_str(key[0])}!{label_str(key[1])}]"
        return f"{self.namespace}[{label_str(key)}]"


Monomial = tuple  # tuple[tuple[Var, int], ...]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_str(m: Monomial) -> str:
    return " * ".join(f"{v!r}^{e}" for v, e in m) if m else "1"


Coercible = Union["LaurentPolynomial", int]


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial over the integers.

    >>> t1, t2 = LaurentPolynomial.gen("t", 1), LaurentPolynomial.gen("t", 2)
    >>> (1 - t1) * (1 - t2) + t1 * (1 - t2) + t2 * (1 - t1)
    1 - t[1]*t[2]
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(sorted((v, int(e)) for v, e in mono if e))
                coeff = clean.get(mono, 0) + int(coeff)
                if coeff:
                    clean[mono] = coeff
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls._raw({(): c})

    @classmethod
    def gen(cls, namespace: str, key: Hashable = None, exponent: int = 1) -> "LaurentPolynomial":
        if exponent == 0:
            return cls.constant(1)
        return cls._raw({((Var(namespace, key), exponent),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[Var, int], coefficient: int = 1) -> "LaurentPolynomial":
        return cls({tuple(exponents.items()): coefficient})

    @classmethod
    def sum(cls, polys: Iterable["LaurentPolynomial"]) -> "LaurentPolynomial":
        """Sum of many polynomials with a single accumulator."""
        out: dict[Monomial, int] = {}
        for p in polys:
            for m, c in p._terms.items():
                out[m] = out.get(m, 0) + c
        return cls._raw(out)

    @staticmethod
    def _coerce(other: Any) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Coercible) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            inv = self.inverse_monomial()
            return inv ** (-n)
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_monomial(self) -> "LaurentPolynomial":
        """Inverse of a unit, i.e. a single monomial with coefficient +-1."""
        if len(self._terms) != 1:
            raise ValueError("only a single monomial can be inverted")
        (mono, coeff), = self._terms.items()
        if coeff not in (1, -1):
            raise ValueError("coefficient is not a unit in Z")
        return LaurentPolynomial._raw({tuple((v, -e) for v, e in mono): coeff})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order (sorted by exponent vector)."""
        return sorted(self._terms.items(), key=lambda mc: tuple((v._order, e) for v, e in mc[0]))

    def coefficient(self, monomial: Mapping[Var, int] | Monomial = ()) -> int:
        if isinstance(monomial, Mapping):
            monomial = tuple(monomial.items())
        mono = tuple(sorted((v, e) for v, e in monomial if e))
        return self._terms.get(mono, 0)

    def variables(self) -> list[Var]:
        return sorted({v for m in self._terms for v, _ in m})

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    @staticmethod
    def _degree(mono: Monomial) -> int:
        return sum(e for _, e in mono)

    def degrees(self) -> list[int]:
        return sorted({self._degree(m) for m in self._terms})

    def homogeneous_component(self, degree: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({m: c for m, c in self._terms.items() if self._degree(m) == degree})

    def lowest_degree_component(self) -> "LaurentPolynomial":
        if not self._terms:
            return self
        return self.homogeneous_component(self.degrees()[0])

    def truncate(self, max_degree: int) -> "LaurentPolynomial":
        """Drop every term of total degree above ``max_degree``."""
        return LaurentPolynomial._raw({m: c for m, c in self._terms.items() if self._degree(m) <= max_degree})

    # -- substitution -------------------------------------------------------

    def map_monomials(self, fn: Callable[[Var, int], "LaurentPolynomial | None"]) -> "LaurentPolynomial":
        """Rebuild the polynomial factor by factor.

        ``fn(var, exponent)`` returns the replacement for ``var**exponent`` or
        ``None`` to keep it unchanged.
        """
        cache: dict[tuple[Var, int], LaurentPolynomial | None] = {}
        parts = []
        for mono, coeff in self._terms.items():
            kept: list[tuple[Var, int]] = []
            factor = LaurentPolynomial.constant(coeff)
            for v, e in mono:
                if (v, e) not in cache:
                    cache[(v, e)] = fn(v, e)
                rep = cache[(v, e)]
                if rep is None:
                    kept.append((v, e))
                else:
                    factor = factor * rep
            if kept:
                factor = factor * LaurentPolynomial._raw({tuple(kept): 1})
            parts.append(factor)
        return LaurentPolynomial.sum(parts)

    def substitute(self, mapping: Mapping[Var, Coercible]) -> "LaurentPolynomial":
        """Replace variables by polynomials (or ints).

        A variable occurring with a negative exponent can only be replaced by
        a monomial with unit coefficient.
        """
        values = {v: LaurentPolynomial._coerce(p) for v, p in mapping.items()}

        def fn(v: Var, e: int):
            if v not in values:
                return None
            return values[v] ** e

        return self.map_monomials(fn)

    def coarsen(self, namespace: str = "t", target: Var | None = None) -> "LaurentPolynomial":
        """Send every variable of ``namespace`` to the single variable ``target``."""
        target = target if target is not None else Var(namespace, None)
        out: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            d: dict[Var, int] = {}
            for v, e in mono:
                w = target if v.namespace == namespace else v
                d[w] = d.get(w, 0) + e
            m = tuple(sorted((v, e) for v, e in d.items() if e))
            out[m] = out.get(m, 0) + coeff
        return LaurentPolynomial._raw(out)

    def evaluate(self, values: Mapping[Var, int] | Callable[[Var], int]) -> int:
        """Evaluate at integer points; every variable must be assigned."""
        get = values if callable(values) else values.__getitem__
        total = 0
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in mono:
                x = get(v)
                if e < 0:
                    if x not in (1, -1):
                        raise ValueError(f"cannot evaluate {v!r}^{e} at {x}")
                    e = -e
                term *= x ** e
            total += term
        return total

    def univariate_coefficients(self, var: Var) -> list[int]:
        """Dense coefficient list ``[c0, c1, ...]`` of a polynomial in ``var`` alone."""
        coeffs: dict[int, int] = {}
        for mono, c in self._terms.items():
            if not mono:
                coeffs[0] = coeffs.get(0, 0) + c
                continue
            if len(mono) != 1 or mono[0][0] is not var or mono[0][1] < 0:
                raise ValueError(f"not a polynomial in {var!r} alone")
            coeffs[mono[0][1]] = c
        top = max(coeffs, default=-1)
        return [coeffs.get(i, 0) for i in range(top + 1)]

    @classmethod
    def from_univariate(cls, coeffs: Iterable[int], var: Var) -> "LaurentPolynomial":
        return cls._raw({(((var, i),) if i else ()): c for i, c in enumerate(coeffs)})

    # -- output -------------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"coefficient": c, "monomial": _mono_str(m)} for m, c in self.terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.terms()):
            body = "*".join(repr(v) if e == 1 else f"{v!r}^{e}" for v, e in mono)
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if i == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)

    __repr__ = __str__
