"""Exact arithmetic for GF(p^e) and two-level towers GF(q^n) over GF(q), q = p^e.

Elements are stored as canonical integer codes: writing an element in the
polynomial basis of its level, code = sum c_i * (size of level below)^i.
Addition, negation and the coefficient views work directly on these codes;
multiplication runs through discrete-log tables for fields of size <= 2^16
and through polynomial arithmetic above that.

Descriptors are interned, so two fields with the same characteristic, degree
chain and moduli are the same object and their elements interoperate.
"""

from __future__ import annotations

from functools import lru_cache

from .caps import check_exhaustive
from .errors import ArgumentError, DomainError, StructureError

PRIME_LIMIT = 257
_LOG_TABLE_LIMIT = 2**16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def _factorize(k: int) -> tuple[int, ...]:
    """Distinct prime factors of k by trial division."""
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return tuple(out)


# ---------------------------------------------------------------------------
# Per-level arithmetic engines.  A level knows only integer codes.


class _Level:
    """Arithmetic for one field level: card, add, sub, neg, mul, inv, pow."""

    __slots__ = (
        "card", "p", "add", "sub", "neg", "mul", "inv", "pow",
        "degree", "sublevel", "modulus", "exp", "log", "_irr_cache",
    )

    def __init__(self):
        self._irr_cache = {}


def _prime_level(p: int) -> _Level:
    lv = _Level()
    lv.card = p
    lv.p = p
    lv.degree = 1
    lv.sublevel = None
    lv.modulus = None
    lv.add = lambda a, b: (a + b) % p
    lv.sub = lambda a, b: (a - b) % p
    lv.neg = lambda a: (-a) % p
    lv.mul = lambda a, b: (a * b) % p

    def inv(a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero")
        return pow(a, p - 2, p)

    lv.inv = inv
    lv.pow = lambda a, k: _generic_pow(lv, a, k)
    lv.exp = None
    lv.log = None
    return lv


def _generic_pow(lv: _Level, a: int, k: int) -> int:
    if k < 0:
        a = lv.inv(a)
        k = -k
    result = 1
    base = a
    while k:
        if k & 1:
            result = lv.mul(result, base)
        base = lv.mul(base, base)
        k >>= 1
    return result


def _code_to_poly(code: int, card: int, degree: int) -> list[int]:
    out = []
    for _ in range(degree):
        code, r = divmod(code, card)
        out.append(r)
    return out


def _poly_to_code(coeffs, card: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * card + c
    return code


def _extension_level(sub: _Level, modulus: tuple[int, ...]) -> _Level:
    """Arithmetic in sub[x]/(modulus). modulus is monic, coded over sub."""
    lv = _Level()
    deg = len(modulus) - 1
    card = sub.card**deg
    lv.card = card
    lv.p = sub.p
    lv.degree = deg
    lv.sublevel = sub
    lv.modulus = modulus
    scard = sub.card
    p = sub.p

    if p == 2:
        lv.add = lambda a, b: a ^ b
        lv.neg = lambda a: a
        lv.sub = lambda a, b: a ^ b
    else:
        sadd = sub.add
        sneg = sub.neg

        def add(a: int, b: int) -> int:
            out = 0
            mult = 1
            while a or b:
                out += sadd(a % scard, b % scard) * mult
                a //= scard
                b //= scard
                mult *= scard
            return out

        def neg(a: int) -> int:
            out = 0
            mult = 1
            while a:
                out += sneg(a % scard) * mult
                a //= scard
                mult *= scard
            return out

        lv.add = add
        lv.neg = neg
        lv.sub = lambda a, b: add(a, neg(b))

    smul, ssub_op = sub.mul, sub.sub
    mod_lower = modulus[:deg]

    def mul_poly(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        fa = _code_to_poly(a, scard, deg)
        fb = _code_to_poly(b, scard, deg)
        acc = [0] * (2 * deg - 1)
        sadd_ = sub.add
        for i, ca in enumerate(fa):
            if ca == 0:
                continue
            for j, cb in enumerate(fb):
                if cb:
                    acc[i + j] = sadd_(acc[i + j], smul(ca, cb))
        for i in range(2 * deg - 2, deg - 1, -1):
            c = acc[i]
            if c:
                acc[i] = 0
                base = i - deg
                for j, mj in enumerate(mod_lower):
                    if mj:
                        acc[base + j] = ssub_op(acc[base + j], smul(c, mj))
        return _poly_to_code(acc[:deg], scard)

    def inv_poly(a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero")
        # extended Euclid in sub[x]
        r0 = list(modulus)
        r1 = _code_to_poly(a, scard, deg)
        _ptrim(r1)
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, sub)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, sub), sub)
        # r0 = gcd, a unit since modulus is irreducible
        c = sub.inv(r0[-1])
        s0 = [sub.mul(c, x) for x in s0]
        s0 += [0] * (deg - len(s0))
        return _poly_to_code(s0[:deg], scard)

    lv.mul = mul_poly
    lv.inv = inv_poly
    lv.pow = lambda a, k: _generic_pow(lv, a, k)
    lv.exp = None
    lv.log = None

    if 4 <= card <= _LOG_TABLE_LIMIT:
        _install_log_tables(lv)
    return lv


def _install_log_tables(lv: _Level) -> None:
    card = lv.card
    qm1 = card - 1
    gen = None
    factors = _factorize(qm1)
    for g in range(2, card):
        if all(lv.pow(g, qm1 // f) != 1 for f in factors):
            gen = g
            break
    if gen is None:  # pragma: no cover - cyclic group always has a generator
        raise StructureError("no multiplicative generator found")
    exp = [1] * qm1
    slow_mul = lv.mul
    for i in range(1, qm1):
        exp[i] = slow_mul(exp[i - 1], gen)
    log = [-1] * card
    for i, v in enumerate(exp):
        log[v] = i
    lv.exp = exp
    lv.log = log

    def mul(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return exp[(log[a] + log[b]) % qm1]

    def inv(a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero")
        return exp[(-log[a]) % qm1]

    def power(a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise DomainError("inverse of zero")
            return 0
        return exp[(log[a] * k) % qm1]

    lv.mul = mul
    lv.inv = inv
    lv.pow = power


# ---------------------------------------------------------------------------
# Polynomial helpers over a level (little-endian coefficient lists).


def _ptrim(f: list[int]) -> None:
    while f and f[-1] == 0:
        f.pop()


def _padd(f, g, lv):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = lv.add(out[i], c)
    _ptrim(out)
    return out


def _psub(f, g, lv):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = lv.sub(out[i], c)
    _ptrim(out)
    return out


def _pmul(f, g, lv):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = lv.add(out[i + j], lv.mul(a, b))
    _ptrim(out)
    return out


def _pdivmod(f, g, lv):
    """Quotient and remainder of f by g over the level lv."""
    if not g:
        raise DomainError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    lead_inv = lv.inv(g[-1])
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = lv.mul(f[-1], lead_inv)
        k = len(f) - 1 - dg
        q[k] = c
        for j, gj in enumerate(g):
            if gj:
                f[k + j] = lv.sub(f[k + j], lv.mul(c, gj))
        _ptrim(f)
        if not f:
            break
    _ptrim(q)
    return q, f


def _monic_polys_of_degree(lv: _Level, deg: int):
    """Yield coefficient tuples (c0..c_{deg-1}, 1) in ascending code order."""
    card = lv.card
    for code in range(card**deg):
        coeffs = _code_to_poly(code, card, deg)
        coeffs.append(1)
        yield tuple(coeffs)


def _irreducibles_up_to(lv: _Level, max_deg: int) -> dict[int, list[tuple[int, ...]]]:
    for d in range(1, max_deg + 1):
        if d in lv._irr_cache:
            continue
        found = []
        for cand in _monic_polys_of_degree(lv, d):
            if _poly_is_irreducible(list(cand), lv):
                found.append(cand)
        lv._irr_cache[d] = found
    return lv._irr_cache


def _poly_is_irreducible(f: list[int], lv: _Level) -> bool:
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    table = _irreducibles_up_to(lv, deg // 2)
    for d in range(1, deg // 2 + 1):
        for g in table[d]:
            _, r = _pdivmod(f, list(g), lv)
            if not r:
                return False
    return True


def _default_modulus(lv: _Level, deg: int, nonzero_constant: bool = False) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree, by element-code order."""
    for cand in _monic_polys_of_degree(lv, deg):
        if nonzero_constant and cand[0] == 0:
            continue
        if _poly_is_irreducible(list(cand), lv):
            return cand
    raise DomainError(f"no irreducible polynomial of degree {deg} found")


# ---------------------------------------------------------------------------
# Descriptors and elements.


_DESCRIPTOR_CACHE: dict[tuple, "FieldDescriptor"] = {}


class FieldDescriptor:
    """An interned description of GF(p^e) or a tower GF((p^e)^n).

    p: characteristic; e: degree of the base level over the prime field;
    n: degree of the top level over the base. A plain field "p^k" is stored
    with e=1, n=k, so the tower view (Frobenius, norm, trace relative to the
    base) degenerates to the usual one over the prime field.
    """

    __slots__ = (
        "p", "e", "n", "base_modulus", "top_modulus",
        "_base_level", "_top", "_frob_tables", "_key",
    )

    def __init__(self, p, e, n, base_modulus, top_modulus, _base_level, _top, _key):
        self.p = p
        self.e = e
        self.n = n
        self.base_modulus = base_modulus
        self.top_modulus = top_modulus
        self._base_level = _base_level
        self._top = _top
        self._frob_tables = {}
        self._key = _key

    # -- construction ------------------------------------------------------

    @staticmethod
    def create(p: int, e: int = 1, n: int = 1,
               base_modulus=None, top_modulus=None) -> "FieldDescriptor":
        if not _is_prime(p):
            raise ArgumentError(f"characteristic {p} is not prime")
        if p > PRIME_LIMIT:
            raise ArgumentError(f"characteristic {p} exceeds the limit {PRIME_LIMIT}")
        if e < 1 or n < 1:
            raise ArgumentError("extension degrees must be >= 1")

        prime = _prime_level(p)
        if e == 1:
            if base_modulus is not None:
                raise ArgumentError("degree-1 base level takes no modulus")
            base_level = prime
            bmod = None
        else:
            bmod = _check_modulus(base_modulus, e, prime)
            base_level = _extension_level(prime, bmod)

        if n == 1:
            if top_modulus is not None:
                raise ArgumentError("degree-1 top level takes no modulus")
            top = base_level
            tmod = None
        else:
            tmod = _check_modulus(top_modulus, n, base_level)
            top = _extension_level(base_level, tmod)

        key = (p, e, n, bmod, tmod)
        cached = _DESCRIPTOR_CACHE.get(key)
        if cached is not None:
            return cached
        desc = FieldDescriptor(p, e, n, bmod, tmod, base_level, top, key)
        _DESCRIPTOR_CACHE[key] = desc
        return desc

    @staticmethod
    def parse(text: str) -> "FieldDescriptor":
        """Parse "p^e" / "p^e^n" optionally + ":modulus=[c0,c1,...];[...]"."""
        text = text.strip()
        mod_lists = None
        if ":" in text:
            sizes, _, modpart = text.partition(":")
            modpart = modpart.strip()
            if not modpart.startswith("modulus="):
                raise ArgumentError(f"bad field text {text!r}")
            mod_lists = _parse_mod_lists(modpart[len("modulus="):])
        else:
            sizes = text
        parts = sizes.strip().split("^")
        if not 1 <= len(parts) <= 3:
            raise ArgumentError(f"bad field text {text!r}")
        try:
            nums = [int(x) for x in parts]
        except ValueError as exc:
            raise ArgumentError(f"bad field text {text!r}") from exc
        if len(nums) == 1:
            p, e, n = nums[0], 1, 1
        elif len(nums) == 2:
            p, e, n = nums[0], 1, nums[1]
        else:
            p, e, n = nums
        base_mod = top_mod = None
        if mod_lists is not None:
            needed = (1 if e > 1 else 0) + (1 if n > 1 else 0)
            if len(mod_lists) != needed:
                raise ArgumentError(
                    f"expected {needed} modulus list(s) for {sizes!r}, got {len(mod_lists)}")
            idx = 0
            if e > 1:
                base_mod = mod_lists[idx]
                idx += 1
            if n > 1:
                top_mod = mod_lists[idx]
        return FieldDescriptor.create(p, e, n, base_mod, top_mod)

    def __str__(self) -> str:
        if self.e == 1 and self.n == 1:
            return str(self.p)
        if self.e == 1:
            s = f"{self.p}^{self.n}"
        else:
            s = f"{self.p}^{self.e}^{self.n}"
        mods = []
        if self.base_modulus is not None:
            mods.append(list(self.base_modulus))
        if self.top_modulus is not None:
            mods.append(list(self.top_modulus))
        if mods:
            s += ":modulus=" + ";".join(str(m).replace(" ", "") for m in mods)
        return s

    def __repr__(self) -> str:
        return f"FieldDescriptor({self})"

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    # -- basic data --------------------------------------------------------

    @property
    def order(self) -> int:
        return self._top.card

    @property
    def base_size(self) -> int:
        """q: size of the level the tower sits on."""
        return self._base_level.card

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        return self.e * self.n

    @property
    def is_prime_field(self) -> bool:
        return self.order == self.p

    def base_field(self) -> "FieldDescriptor":
        if self.e == 1:
            return FieldDescriptor.create(self.p)
        return FieldDescriptor.create(self.p, 1, self.e, top_modulus=self.base_modulus)

    def prime_field(self) -> "FieldDescriptor":
        return FieldDescriptor.create(self.p)

    def extension(self, n: int, modulus=None) -> "FieldDescriptor":
        """The tower GF(self^n) over self; self must be a single-level field."""
        if self.e != 1:
            raise ArgumentError("only two-level towers are supported")
        return FieldDescriptor.create(self.p, self.n, n,
                                      base_modulus=self.top_modulus,
                                      top_modulus=modulus)

    # -- elements ----------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.order:
            raise ArgumentError(f"code {code} out of range for {self}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def poly_gen(self) -> "FieldElement":
        """Generator of the top-level polynomial basis (the class of x)."""
        if self.n > 1:
            return FieldElement(self, self.base_size)
        if self.e > 1:
            return FieldElement(self, self.p)
        return FieldElement(self, 1)

    def elements(self):
        check_exhaustive(self.order, f"iterating all elements of {self}")
        return (FieldElement(self, c) for c in range(self.order))

    def nonzero_elements(self):
        check_exhaustive(self.order, f"iterating all elements of {self}")
        return (FieldElement(self, c) for c in range(1, self.order))

    def polynomial_basis(self) -> tuple["FieldElement", ...]:
        """The F_q-basis (1, x, ..., x^{n-1}) of the top level."""
        q = self.base_size
        return tuple(FieldElement(self, q**i) for i in range(self.n))

    def prime_basis(self) -> tuple["FieldElement", ...]:
        return tuple(FieldElement(self, self.p**t) for t in range(self.degree))

    def from_coefficients(self, coeffs) -> "FieldElement":
        """Element from n base-level codes (or base-field elements)."""
        q = self.base_size
        codes = []
        for c in coeffs:
            c = c.code if isinstance(c, FieldElement) else int(c)
            if not 0 <= c < q:
                raise ArgumentError(f"coefficient {c} out of range for base size {q}")
            codes.append(c)
        if len(codes) != self.n:
            raise ArgumentError(f"expected {self.n} coefficients, got {len(codes)}")
        return FieldElement(self, _poly_to_code(codes, q))

    def from_prime_coefficients(self, coeffs) -> "FieldElement":
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ArgumentError(f"expected {self.degree} prime coefficients")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ArgumentError("prime coefficient out of range")
        return FieldElement(self, _poly_to_code(coeffs, self.p))

    def embed(self, a: "FieldElement") -> "FieldElement":
        """Embed an element of the base field into the tower."""
        if a.field != self.base_field():
            raise StructureError(f"{a!r} is not in the base field of {self}")
        return FieldElement(self, a.code)

    def to_base(self, a: "FieldElement") -> "FieldElement":
        if a.field != self:
            raise StructureError("element not in this field")
        if a.code >= self.base_size:
            raise DomainError(f"element {a.code} is not in the base field")
        return FieldElement(self.base_field(), a.code)

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, int(rng.integers(0, self.order)))

    # -- tower maps on raw codes (used by hot loops) ------------------------

    def frob_code(self, code: int, s: int) -> int:
        """code^(q^s) with q the base size; s arbitrary (reduced mod n)."""
        s %= self.n
        if s == 0 or code == 0:
            return code
        top = self._top
        table = self._frob_tables.get(s)
        if table is not None:
            return table[code]
        if top.card <= _LOG_TABLE_LIMIT:
            q = self.base_size
            qm1 = top.card - 1
            step = pow(q, s, qm1)
            exp, log = top.exp, top.log
            table = [0] * top.card
            for c in range(1, top.card):
                table[c] = exp[(log[c] * step) % qm1]
            self._frob_tables[s] = table
            return table[code]
        exponent = pow(self.base_size, s, top.card - 1)
        return top.pow(code, exponent)

    def prime_frob_code(self, code: int, t: int) -> int:
        """code^(p^t)."""
        if code == 0:
            return 0
        exponent = pow(self.p, t, self._top.card - 1)
        return self._top.pow(code, exponent)

    def norm_code(self, code: int) -> int:
        if code == 0:
            return 0
        expnt = (self._top.card - 1) // (self.base_size - 1)
        return self._top.pow(code, expnt)

    def trace_code(self, code: int) -> int:
        acc = 0
        top = self._top
        for i in range(self.n):
            acc = top.add(acc, self.frob_code(code, i))
        return acc


def _check_modulus(modulus, deg: int, sub: _Level) -> tuple[int, ...]:
    if modulus is None:
        return _default_modulus(sub, deg)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != deg + 1:
        raise StructureError(f"modulus must have degree {deg}")
    if modulus[-1] != 1:
        raise StructureError("modulus must be monic")
    if any(not 0 <= c < sub.card for c in modulus):
        raise StructureError("modulus coefficient out of range")
    if not _poly_is_irreducible(list(modulus), sub):
        raise DomainError(f"modulus {list(modulus)} is reducible")
    return modulus


def _parse_mod_lists(text: str) -> list[tuple[int, ...]]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise ArgumentError(f"bad modulus list {chunk!r}")
        body = chunk[1:-1].strip()
        if not body:
            raise ArgumentError("empty modulus list")
        out.append(tuple(int(x) for x in body.split(",")))
    return out


def GF(p: int, e: int = 1, n: int = 1, *, base_modulus=None, top_modulus=None) -> FieldDescriptor:
    return FieldDescriptor.create(p, e, n, base_modulus, top_modulus)


def field_from_order(q: int) -> FieldDescriptor:
    """GF(q) as a single-level field with the default modulus."""
    if q < 2:
        raise ArgumentError(f"{q} is not a prime power")
    p = min(_factorize(q))
    e = 0
    qq = q
    while qq > 1:
        if qq % p:
            raise ArgumentError(f"{q} is not a prime power")
        qq //= p
        e += 1
    return GF(p, 1, e) if e > 1 else GF(p)


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FieldDescriptor, code: int):
        self.field = field
        self.code = code

    def __repr__(self):
        return f"FieldElement({self.code} in {self.field})"

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.code == other.code)

    def __hash__(self):
        return hash((self.field._key, self.code))

    def __bool__(self):
        return self.code != 0

    def _same(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise StructureError(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise StructureError(f"mixed fields {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._top.add(self.code, other.code))

    def __sub__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._top.sub(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field._top.neg(self.code))

    def __mul__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field._top.mul(self.code, other.code))

    def __truediv__(self, other):
        other = self._same(other)
        return FieldElement(
            self.field, self.field._top.mul(self.code, self.field._top.inv(other.code)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field._top.pow(self.code, int(k)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._top.inv(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def frobenius(self, s: int = 1) -> "FieldElement":
        """a^(q^s), q the base size of the tower."""
        if not 0 <= s < max(self.field.n, 1):
            raise ArgumentError(f"frobenius power {s} out of range [0, {self.field.n})")
        return FieldElement(self.field, self.field.frob_code(self.code, s))

    def norm(self) -> "FieldElement":
        return FieldElement(self.field.base_field(), self.field.norm_code(self.code))

    def trace(self) -> "FieldElement":
        code = self.field.trace_code(self.code)
        if code >= self.field.base_size:  # pragma: no cover - theory guarantees
            raise StructureError("trace fell outside the base field")
        return FieldElement(self.field.base_field(), code)

    def coefficients(self) -> tuple["FieldElement", ...]:
        """Top-level coefficients as base-field elements, lowest degree first."""
        base = self.field.base_field()
        digits = _code_to_poly(self.code, self.field.base_size, self.field.n)
        return tuple(FieldElement(base, d) for d in digits)

    def prime_coefficients(self) -> tuple[int, ...]:
        """Flattened prime-field coefficient view, length e*n."""
        return tuple(_code_to_poly(self.code, self.field.p, self.field.degree))

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise DomainError("zero has no multiplicative order")
        qm1 = self.field.order - 1
        order = qm1
        for f in _factorize(qm1):
            while order % f == 0 and self.field._top.pow(self.code, order // f) == 1:
                order //= f
        return order


# ---------------------------------------------------------------------------
# Contracted free functions.


def field_arith(a: FieldElement, b, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b if not isinstance(b, FieldElement) else b.code)
    raise ArgumentError(f"unknown field operation {op!r}")


def frobenius(a: FieldElement, s: int = 1) -> FieldElement:
    return a.frobenius(s)


def norm_trace(a: FieldElement) -> tuple[FieldElement, FieldElement]:
    return a.norm(), a.trace()


def default_irreducible(field: FieldDescriptor, degree: int,
                        nonzero_constant: bool = False) -> tuple[int, ...]:
    """Default monic irreducible of the given degree over `field` (codes)."""
    return _default_modulus(field._top, degree, nonzero_constant)


def is_irreducible(coeffs, field: FieldDescriptor) -> bool:
    f = [int(c) for c in coeffs]
    _ptrim(f)
    return _poly_is_irreducible(f, field._top)
