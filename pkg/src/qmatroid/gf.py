"""Arithmetic in GF(q) and GF(q^m).

Elements of GF(q^m) are stored as coefficient vectors with respect to the
power basis 1, a, ..., a^(m-1) of a primitive element ``a``.  Internally a
vector is packed into one integer, ``code = sum(c_i * q**i)``, so that the
hot loops (matrix rank, Moore determinants) work on plain ints.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DegreeTooLarge, EmptyList, NonPrimeModulus

MAX_FIELD_SIZE = 2**20
LOG_TABLE_LIMIT = 2**16


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimeField:
    """GF(q) for prime q; elements are ints in ``range(q)``."""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise NonPrimeModulus(f"{self.q} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return pow(a, self.q - 2, self.q)


# -- polynomials over GF(q), coefficient lists low degree first ----------


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], q - 2, q)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % q
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % q
        _poly_trim(a)
    return a


def _monic_polys(q: int, deg: int) -> Iterable[list[int]]:
    for code in range(q**deg):
        coeffs = []
        c = code
        for _ in range(deg):
            coeffs.append(c % q)
            c //= q
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(q, d):
            if not _poly_mod(poly, f, q):
                return False
    return True


class ExtField:
    """GF(q^m) = GF(q)[x] / (modulus) with x primitive.

    Build instances with :func:`ext_field_build` (canonical modulus) or pass an
    explicit ``modulus`` (low degree first, monic, length m + 1).
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int]):
        if not is_prime(q):
            raise NonPrimeModulus(f"{q} is not prime")
        if m < 1:
            raise ValueError("extension degree must be positive")
        if q**m > MAX_FIELD_SIZE:
            raise DegreeTooLarge(f"q^m = {q**m} exceeds {MAX_FIELD_SIZE}")
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(modulus, q):
            raise ValueError(f"modulus {modulus} is reducible over GF({q})")
        self.q = q
        self.m = m
        self.modulus = modulus
        self.size = q**m
        self.order = self.size - 1
        # x^m = -sum(modulus[i] x^i)
        self._reduce = tuple((-c) % q for c in modulus[:m])
        self._lock = threading.Lock()
        self._log: list[int] | None = None
        self._exp: list[int] | None = None
        self.alpha_order_checked = self._mul_order(self._x_code()) == self.order
        if not self.alpha_order_checked:
            raise ValueError(f"x is not primitive modulo {modulus}")

    # -- codes <-> coefficient vectors ------------------------------------

    def to_code(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.q + (int(c) % self.q)
        return code

    def to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(code % self.q)
            code //= self.q
        return tuple(out)

    def _x_code(self) -> int:
        if self.m == 1:
            return self._reduce[0]
        return self.q

    # -- raw arithmetic on codes ------------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q, out, place = self.q, 0, 1
        while a or b:
            out += ((a % q + b % q) % q) * place
            a //= q
            b //= q
            place *= q
        return out

    def neg_code(self, a: int) -> int:
        if self.q == 2:
            return a
        q, out, place = self.q, 0, 1
        while a:
            out += ((-(a % q)) % q) * place
            a //= q
            place *= q
        return out

    def sub_codes(self, a: int, b: int) -> int:
        return self.add_codes(a, self.neg_code(b))

    def scale_code(self, c: int, a: int) -> int:
        """Multiply field element ``a`` by the base-field scalar ``c``."""
        c %= self.q
        if c == 0:
            return 0
        if c == 1:
            return a
        q, out, place = self.q, 0, 1
        while a:
            out += ((a % q) * c % q) * place
            a //= q
            place *= q
        return out

    def _poly_mul_codes(self, a: int, b: int) -> int:
        q, m = self.q, self.m
        ca = self.to_coeffs(a)
        cb = self.to_coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % q
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, r in enumerate(self._reduce):
                    prod[d - m + i] = (prod[d - m + i] + c * r) % q
        return self.to_code(prod[:m])

    def _ensure_tables(self) -> bool:
        if self.size > LOG_TABLE_LIMIT:
            return False
        if self._exp is None:
            with self._lock:
                if self._exp is None:
                    exp = [0] * self.order
                    log = [-1] * self.size
                    x = self._x_code()
                    cur = 1
                    for k in range(self.order):
                        exp[k] = cur
                        log[cur] = k
                        cur = self._poly_mul_codes(cur, x)
                    self._log = log
                    self._exp = exp
        return True

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._ensure_tables():
            return self._exp[(self._log[a] + self._log[b]) % self.order]
        return self._poly_mul_codes(a, b)

    def pow_code(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._ensure_tables():
            return self._exp[(self._log[a] * e) % self.order]
        e %= self.order
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul_codes(result, base)
            base = self._poly_mul_codes(base, base)
            e >>= 1
        return result

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow_code(a, self.order - 1)

    def alpha_power_code(self, k: int) -> int:
        return self.pow_code(self._x_code(), k % self.order)

    def log_code(self, a: int) -> int:
        """Discrete log to base alpha (brute force above the table limit)."""
        if a == 0:
            raise ValueError("log of 0")
        if self._ensure_tables():
            return self._log[a]
        cur, x = 1, self._x_code()
        for k in range(self.order):
            if cur == a:
                return k
            cur = self._poly_mul_codes(cur, x)
        raise AssertionError("unreachable: alpha is primitive")

    def _mul_order(self, a: int) -> int:
        order = self.size - 1
        for p in prime_factors(order):
            while order % p == 0 and self._pow_plain(a, order // p) == 1:
                order //= p
        return order if self._pow_plain(a, order) == 1 else -1

    def _pow_plain(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul_codes(result, base)
            base = self._poly_mul_codes(base, base)
            e >>= 1
        return result

    def multiplicative_order(self, a: "ExtElem") -> int:
        return self._mul_order(a.code)

    # -- element-level API ------------------------------------------------

    def elem(self, coeffs: Sequence[int]) -> "ExtElem":
        return ExtElem(self, self.to_code(coeffs))

    def from_code(self, code: int) -> "ExtElem":
        return ExtElem(self, code)

    @property
    def zero(self) -> "ExtElem":
        return ExtElem(self, 0)

    @property
    def one(self) -> "ExtElem":
        return ExtElem(self, 1)

    @cached_property
    def alpha(self) -> "ExtElem":
        return ExtElem(self, self._x_code())

    def alpha_pow(self, k: int) -> "ExtElem":
        return ExtElem(self, self.alpha_power_code(k))

    def elements(self) -> list["ExtElem"]:
        return [ExtElem(self, c) for c in range(self.size)]

    def to_dict(self) -> dict:
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "ExtField":
        return cls(int(d["q"]), int(d["m"]), [int(c) for c in d["modulus"]])

    def __eq__(self, other):
        return isinstance(other, ExtField) and (self.q, self.m, self.modulus) == (
            other.q,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    def __repr__(self):
        return f"ExtField(q={self.q}, m={self.m}, modulus={list(self.modulus)})"


@dataclass(frozen=True, eq=False)
class ExtElem:
    field: ExtField = field(repr=False)
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.to_coeffs(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, ExtElem):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return self.field.scale_code(other, 1)
        return NotImplemented

    def __add__(self, other):
        return ExtElem(self.field, self.field.add_codes(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return ExtElem(self.field, self.field.sub_codes(self.code, self._coerce(other)))

    def __rsub__(self, other):
        return ExtElem(self.field, self.field.sub_codes(self._coerce(other), self.code))

    def __neg__(self):
        return ExtElem(self.field, self.field.neg_code(self.code))

    def __mul__(self, other):
        if isinstance(other, int):
            return ExtElem(self.field, self.field.scale_code(other, self.code))
        return ExtElem(self.field, self.field.mul_codes(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ExtElem(
            self.field,
            self.field.mul_codes(self.code, self.field.inv_code(self._coerce(other))),
        )

    def __pow__(self, e: int):
        if e < 0:
            return ExtElem(self.field, self.field.pow_code(self.field.inv_code(self.code), -e))
        return ExtElem(self.field, self.field.pow_code(self.code, e))

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.scale_code(other, 1)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"ExtElem({list(self.coeffs)})"


def ext_field_build(q: int, m: int) -> ExtField:
    """Field GF(q^m) with the lexicographically least primitive modulus.

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are scanned in increasing
    order of ``sum(c_i * q**i)``, i.e. comparing the high coefficients first.
    For m = 1 this yields x - g for the least primitive root g of GF(q).
    """
    if not is_prime(q):
        raise NonPrimeModulus(f"{q} is not prime")
    if m < 1:
        raise ValueError("extension degree must be positive")
    if q**m > MAX_FIELD_SIZE:
        raise DegreeTooLarge(f"q^m = {q**m} exceeds {MAX_FIELD_SIZE}")
    for low in range(1, q**m):
        coeffs = []
        c = low
        for _ in range(m):
            coeffs.append(c % q)
            c //= q
        poly = coeffs + [1]
        if not is_irreducible(poly, q):
            continue
        try:
            return ExtField(q, m, poly)
        except ValueError:
            continue
    raise AssertionError("no primitive polynomial found")


def gamma(theta: ExtElem) -> tuple[int, ...]:
    """Coordinates of ``theta`` in the basis 1, a, ..., a^(m-1)."""
    return theta.coeffs


def gamma_inverse(F: ExtField, vec: Sequence[int]) -> ExtElem:
    return F.elem(vec)


def _as_codes(F: ExtField, row) -> list[int]:
    return [x.code if isinstance(x, ExtElem) else int(x) for x in row]


def determinant_codes(F: ExtField, rows: list[list[int]]) -> int:
    n = len(rows)
    M = [list(r) for r in rows]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = F.neg_code(det)
        p = M[col][col]
        det = F.mul_codes(det, p)
        inv = F.inv_code(p)
        for r in range(col + 1, n):
            if M[r][col]:
                f = F.mul_codes(M[r][col], inv)
                M[r] = [F.sub_codes(a, F.mul_codes(f, b)) for a, b in zip(M[r], M[col])]
    return det


def moore_determinant(elems: Sequence[ExtElem], step: int | None = None) -> ExtElem:
    """Determinant of the Moore matrix with rows ``elems ** (step ** k)``.

    ``step`` defaults to q (the plain Frobenius).  The determinant is non-zero
    exactly when the elements are linearly independent over the subfield fixed
    by ``x -> x**step``.
    """
    if not elems:
        raise EmptyList("moore_determinant needs at least one element")
    F = elems[0].field
    if step is None:
        step = F.q
    codes = [e.code for e in elems]
    rows = []
    power = 1
    for _ in range(len(codes)):
        rows.append([F.pow_code(c, power) for c in codes])
        power *= step
    return ExtElem(F, determinant_codes(F, rows))


def rank_codes(F: ExtField, rows: list[list[int]]) -> int:
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv_code(M[rank][col])
        pivot_row = [F.mul_codes(inv, x) for x in M[rank]]
        M[rank] = pivot_row
        for r in range(rank + 1, len(M)):
            if M[r][col]:
                f = M[r][col]
                M[r] = [F.sub_codes(a, F.mul_codes(f, b)) for a, b in zip(M[r], pivot_row)]
        rank += 1
        if rank == len(M):
            break
    return rank


def matrix_rank_ext(F: ExtField, M: Sequence[Sequence]) -> int:
    """Row rank over GF(q^m) by Gaussian elimination."""
    return rank_codes(F, [_as_codes(F, row) for row in M])


def subfield_rank(elems: Sequence[ExtElem], step: int) -> int:
    """Dimension of the span of ``elems`` over the subfield fixed by x -> x**step.

    Greedy basis extension; independence is decided by Moore determinants.
    """
    basis: list[ExtElem] = []
    for e in elems:
        if not e:
            continue
        if moore_determinant(basis + [e], step):
            basis.append(e)
    return len(basis)
