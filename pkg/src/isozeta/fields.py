"""Exact arithmetic in F_p and F_{p^k} for odd primes p > 3.

Elements of F_{p^k} are residues of integer polynomials modulo a fixed
monic irreducible, stored as coefficient tuples of length k (least degree
first, trailing zeros kept).  The modulus is chosen deterministically, so
two contexts with equal (p, k) are interchangeable.

Characteristic 2 and 3 are out of scope; constructors reject them.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError

# Exact for all 64-bit integers (and well beyond).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the desk-scale range we care about."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# -- modulus search: plain int-list polynomial arithmetic mod p ------------


def _pmulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pmod(out, mod, p)


def _pmod(f, mod, p):
    f = list(f)
    k = len(mod) - 1
    for i in range(len(f) - 1, k - 1, -1):
        c = f[i]
        if c:
            f[i] = 0
            for j in range(k):
                f[i - k + j] = (f[i - k + j] - c * mod[j]) % p
    while f and f[-1] == 0:
        f.pop()
    return f


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        r = _pmod(f, _monic(g, p), p)
        f, g = g, r
    return f


def _monic(f, p):
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _xq_pow(mod, p, e, k):
    """x^(p^e) mod the monic polynomial `mod`, by repeated p-th powering."""
    x = [0, 1] if k > 1 else _pmod([0, 1], mod, p)
    for _ in range(e):
        acc = [1]
        base = x
        n = p
        while n:
            if n & 1:
                acc = _pmulmod(acc, base, mod, p)
            base = _pmulmod(base, base, mod, p)
            n >>= 1
        x = acc
    return x


def _is_irreducible(mod, p):
    k = len(mod) - 1
    if k == 1:
        return True
    for i in range(1, k // 2 + 1):
        xq = _xq_pow(mod, p, i, k)
        g = _pgcd(list(mod), _sub_x(xq, p), p)
        if len(g) - 1 > 0:
            return False
    return True


def _sub_x(f, p):
    """f(x) - x, trimmed."""
    f = list(f) + [0, 0]
    f[1] = (f[1] - 1) % p
    while f and f[-1] == 0:
        f.pop()
    return f


@lru_cache(maxsize=None)
def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, scanning candidate
    lower-coefficient vectors in lexicographic order (constant term varies
    fastest).  For k = 1 this is x."""
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        lower = [(n // p**i) % p for i in range(k)]
        mod = lower + [1]
        if _is_irreducible(mod, p):
            return tuple(mod)
    raise InputError(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


class Fq:
    """Context for the finite field F_{p^k}."""

    __slots__ = ("p", "k", "modulus", "_red", "_nonresidue")

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if p <= 3 or not is_prime(p):
            raise InputError(f"characteristic must be a prime > 3, got {p}")
        if k < 1:
            raise InputError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InputError("modulus must be monic of degree k")
        if not _is_irreducible(list(modulus), p):
            raise InputError("modulus is not irreducible")
        self.modulus = modulus
        # _red[i] = x^(k+i) reduced mod modulus, for i = 0..k-2
        red = []
        cur = [(-c) % p for c in modulus[:-1]]
        red.append(tuple(cur))
        for _ in range(k - 2):
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [(c + top * r) % p for c, r in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = tuple(red)
        self._nonresidue = None

    # -- context identity ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Fq({self.p}^{self.k})" if self.k > 1 else f"Fq({self.p})"

    @property
    def order(self) -> int:
        return self.p**self.k

    # -- element construction ------------------------------------------------

    def __call__(self, v) -> "Fel":
        if isinstance(v, Fel):
            if v.field != self:
                raise InputError("element belongs to a different field")
            return v
        if isinstance(v, int):
            c = [v % self.p] + [0] * (self.k - 1)
            return Fel(self, tuple(c))
        c = [int(x) % self.p for x in v]
        if len(c) > self.k:
            raise InputError("coefficient vector too long")
        c += [0] * (self.k - len(c))
        return Fel(self, tuple(c))

    @property
    def zero(self) -> "Fel":
        return self(0)

    @property
    def one(self) -> "Fel":
        return self(1)

    def element_from_index(self, n: int) -> "Fel":
        """n-th element in canonical order, 0 <= n < order."""
        return Fel(self, tuple((n // self.p**i) % self.p for i in range(self.k)))

    def elements(self):
        """All field elements in canonical order.  Only for small fields."""
        for n in range(self.order):
            yield self.element_from_index(n)

    # -- raw tuple arithmetic --------------------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:k]]
        for i in range(k - 1):
            c = prod[k + i] % p
            if c:
                row = self._red[i]
                for j in range(k):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def _pow(self, a, e: int):
        if e < 0:
            return self._pow(self._inv(a), -e)
        out = self(1).c
        base = a
        while e:
            if e & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            e >>= 1
        return out

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inversion of zero field element")
        return self._pow(a, self.order - 2)

    # -- square roots ----------------------------------------------------------

    def sqrt(self, a: "Fel"):
        """Deterministic square root, or None for a non-residue.

        Returns the canonically smaller of the two roots.
        """
        a = self(a)
        if not a:
            return a
        q = self.order
        if a ** ((q - 1) // 2) != self.one:
            return None
        if q % 4 == 3:
            r = a ** ((q + 1) // 4)
        else:
            r = self._tonelli(a)
        return min(r, -r, key=canonical_key)

    def _tonelli(self, a: "Fel") -> "Fel":
        q = self.order
        s, t = 0, q - 1
        while t % 2 == 0:
            t //= 2
            s += 1
        z = self._find_nonresidue()
        m = s
        c = z**t
        r = a ** ((t + 1) // 2)
        u = a**t
        one = self.one
        while u != one:
            i, v = 0, u
            while v != one:
                v = v * v
                i += 1
            b = c ** (2 ** (m - i - 1))
            m, c = i, b * b
            r, u = r * b, u * c
        return r

    def _find_nonresidue(self) -> "Fel":
        if self._nonresidue is None:
            q = self.order
            for n in range(1, q):
                z = self.element_from_index(n)
                if z ** ((q - 1) // 2) != self.one:
                    self._nonresidue = z
                    break
        return self._nonresidue


class Fel:
    """Element of an Fq context; immutable and hashable."""

    __slots__ = ("field", "c")

    def __init__(self, field: Fq, coeffs: tuple[int, ...]):
        self.field = field
        self.c = coeffs

    def _coerce(self, other):
        if isinstance(other, Fel):
            if other.field != self.field:
                raise InputError("mixed-field arithmetic")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fel(self.field, self.field._add(self.c, o.c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fel(self.field, self.field._sub(self.c, o.c))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Fel(self.field, self.field._neg(self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fel(self.field, self.field._mul(self.c, o.c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fel(self.field, self.field._mul(self.c, self.field._inv(o.c)))

    def __rtruediv__(self, other):
        return self.field(other) / self

    def __pow__(self, e: int):
        return Fel(self.field, self.field._pow(self.c, e))

    def inverse(self) -> "Fel":
        return Fel(self.field, self.field._inv(self.c))

    def frobenius(self, e: int = 1) -> "Fel":
        """x |-> x^(p^e)."""
        out = self
        for _ in range(e % self.field.k if self.field.k > 1 else 1):
            out = out ** self.field.p
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == self.field(other).c
        return isinstance(other, Fel) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return "[" + ",".join(str(x) for x in self.c) + "]"


def canonical_key(a: Fel) -> tuple[int, ...]:
    """Total-order key: lexicographic with the highest-degree coefficient
    most significant, so the prime subfield sorts first."""
    return tuple(reversed(a.c))


def embedding(small: Fq, big: Fq):
    """Field embedding F_{p^j} -> F_{p^k} for j | k, j <= 2.

    The image of the generator is the canonical-least root of the small
    modulus inside the big field, so the embedding is deterministic.
    """
    if small.p != big.p:
        raise InputError("embedding requires equal characteristic")
    if big.k % small.k != 0:
        raise InputError("no embedding: degree does not divide")
    if small.k == 1:
        def emb1(a: Fel) -> Fel:
            return big(a.c[0])

        return emb1
    if small.k == 2:
        if small == big:
            def embid(a: Fel) -> Fel:
                return a

            return embid
        c0, c1, _ = small.modulus
        disc = big(c1) * big(c1) - 4 * big(c0)
        s = big.sqrt(disc)
        if s is None:
            raise InputError("small modulus has no root in the big field")
        half = big(2).inverse()
        roots = sorted(((-big(c1) + s) * half, (-big(c1) - s) * half), key=canonical_key)
        w = roots[0]

        def emb2(a: Fel) -> Fel:
            return big(a.c[0]) + big(a.c[1]) * w

        return emb2
    raise InputError("only degree 1 and 2 subfield embeddings are supported")
