"""Finite commutative rings as direct products of residue rings.

A ring here is either Z_{n1} x ... x Z_{nk} (a ``ProductRing``) or an
element-set subring of one (a ``Subring``).  Elements are tuples of
residues, one coordinate per factor, and all arithmetic is coordinate-wise
and exact.

Zero-divisor and annihilator machinery comes in two deliberately separate
flavours:

* closed-form fast paths on product rings, driven by gcd/lcm arithmetic on
  principal ideals per coordinate (an annihilator is encoded by the
  ``AnnKey`` tuple g with g[i] = n_i // gcd(n_i, x_i)), and
* brute-force scans over the element universe, which serve as the oracle
  the fast paths are validated against.

Subrings always use the brute-force route: their annihilators need not be
principal per coordinate, so no key encoding is attempted for them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

import numpy as np

DEFAULT_ELEMENT_CAP = 5000
DEFAULT_PARSE_ORDER_CAP = 10**12

Element = tuple[int, ...]
AnnKey = tuple[int, ...]


class RingSpecError(ValueError):
    """Malformed ring description (bad token, modulus < 2, oversized order)."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured brute-force cap."""


class UnsupportedVariantError(TypeError):
    """Operation only defined for one ring variant (e.g. keys on products)."""


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 2 as a sorted tuple of (prime, exponent)."""
    if n < 2:
        raise ValueError(f"cannot factorize {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    return sum(e for _, e in factorize(n))


# ---------------------------------------------------------------------------
# ring specification


@dataclass(frozen=True)
class RingSpec:
    """Ordered factor moduli of a product ring Z_{n1} x ... x Z_{nk}."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors:
            raise RingSpecError("a ring needs at least one factor")
        for n in self.factors:
            if not isinstance(n, int) or n < 2:
                raise RingSpecError(f"modulus {n!r} is below 2")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def arity(self) -> int:
        return len(self.factors)

    def ring_id(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors)


_TOKEN = re.compile(r"^Z(\d+)$")


def parse_ring_spec(text: str, max_order: int = DEFAULT_PARSE_ORDER_CAP) -> RingSpec:
    """Parse ``Z<n>(xZ<n>)*`` (case-insensitive Z, ASCII x separator)."""
    cleaned = text.strip().upper()
    if not cleaned:
        raise RingSpecError("empty ring spec")
    factors = []
    for token in cleaned.split("X"):
        m = _TOKEN.match(token)
        if not m:
            raise RingSpecError(f"malformed ring token {token!r} in {text!r}")
        n = int(m.group(1))
        if n < 2:
            raise RingSpecError(f"modulus below 2 in token {token!r}")
        factors.append(n)
    spec = RingSpec(tuple(factors))
    if spec.order > max_order:
        raise RingSpecError(f"ring order {spec.order} exceeds cap {max_order}")
    return spec


def format_element(x: Element) -> str:
    """Serialize an element: plain decimal for rank 1, (a,b,...) otherwise."""
    if len(x) == 1:
        return str(x[0])
    return "(" + ",".join(str(a) for a in x) + ")"


# ---------------------------------------------------------------------------
# rings


class FiniteRing:
    """Shared surface of product rings and their subrings."""

    spec: RingSpec

    # --- basic structure, provided by subclasses -------------------------
    @property
    def order(self) -> int:
        raise NotImplementedError

    def elements(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> tuple[Element, ...]:
        raise NotImplementedError

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def add(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def mul(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def neg(self, x: Element) -> Element:
        raise NotImplementedError

    def is_zero_divisor(self, x: Element) -> bool:
        raise NotImplementedError

    def annihilator_set(self, x: Element, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        raise NotImplementedError

    def annihilator_classes(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> list[tuple[object, list[Element]]]:
        raise NotImplementedError

    def ann_sets_intersect(self, key_a: object, key_b: object) -> bool:
        raise NotImplementedError

    # --- shared derived operations ---------------------------------------
    @property
    def arity(self) -> int:
        return self.spec.arity

    @property
    def zero(self) -> Element:
        return tuple(0 for _ in self.spec.factors)

    @property
    def one(self) -> Element:
        return tuple(1 for _ in self.spec.factors)

    def zero_divisor_set(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        """Z(R), with 0 included by convention."""
        return {x for x in self.elements(cap) if self.is_zero_divisor(x)}

    def zero_divisor_ideal_witness(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> tuple[Element, Element] | None:
        """A pair x, y in Z(R) with x + y not in Z(R), or None if Z(R) is an ideal.

        Additive closure is the only condition tested: Z(R) always absorbs
        ring multiplication and additive inverses, so closure under + is
        equivalent to being an ideal.
        """
        zset = self.zero_divisor_set(cap)
        zs = sorted(zset)
        mods = self.spec.factors
        for i, x in enumerate(zs):
            for y in zs[i:]:
                s = tuple((a + b) % n for a, b, n in zip(x, y, mods))
                if s not in zset:
                    return (x, y)
        return None

    def is_zero_divisors_ideal(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> bool:
        return self.zero_divisor_ideal_witness(cap) is None

    def common_annihilator_of_zero_divisors(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> set[Element]:
        """{r in R : r.z = 0 for all z in Z(R)}."""
        zero = self.zero
        candidates = set(self.elements(cap))
        for z in sorted(self.zero_divisor_set(cap)):
            candidates = {r for r in candidates if self.mul(r, z) == zero}
            if candidates == {zero}:
                break
        return candidates

    def nilpotent_set(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        raise NotImplementedError

    def is_reduced(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> bool:
        return self.nilpotent_set(cap) == {self.zero}

    def subring_generated(
        self,
        gens,
        include_one: bool = False,
        cap: int | None = DEFAULT_ELEMENT_CAP,
    ) -> "Subring":
        """Least subset containing gens (and 1 if asked) closed under +, *, -.

        Fixpoint construction: additive subgroup closure first, then
        alternate with multiplicative closure until stable.
        """
        self.elements(cap)  # enforce the cap before any closure work
        gens = list(gens)
        for g in gens:
            if not self.contains(g):
                raise ValueError(f"generator {g} is not a ring member")
        seed = set(gens)
        seed.add(self.zero)
        if include_one:
            seed.add(self.one)

        members = self._additive_closure(seed)
        full = self.order
        while len(members) < full:
            products = {self.mul(a, b) for a in members for b in members}
            if products <= members:
                break
            members = self._additive_closure(members | products)
        if len(members) == full:
            members = set(self.elements(cap))
        parent = self.parent_product()
        return Subring(parent, frozenset(members))

    def _additive_closure(self, seed: set[Element]) -> set[Element]:
        group: set[Element] = {self.zero}
        for g in seed:
            if g in group:
                continue
            # expand by cosets of the current subgroup
            shifted = list(group)
            x = g
            while x not in group:
                layer = [self.add(x, s) for s in shifted]
                group.update(layer)
                x = self.add(x, g)
        return group

    def parent_product(self) -> "ProductRing":
        raise NotImplementedError

    def has_ann_direct_sum_decomposition(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> tuple[bool, tuple[Element, Element] | None]:
        """Whether R splits as ann(x) (+) ann(y) for two distinct x, y in Z*(R).

        The split is realized internally: ann(x) and ann(y) intersect only
        in 0 and their sizes multiply to |R|, which forces ann(x) + ann(y)
        to be all of R.  Same-class pairs can never qualify (their common
        annihilator is the whole nonzero annihilator), so it suffices to
        scan pairs of distinct annihilator classes.
        """
        order = self.order
        classes = self.annihilator_classes(cap)
        ann_sets = [self.annihilator_set(members[0], cap) for _, members in classes]
        zero = self.zero
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                a, b = ann_sets[i], ann_sets[j]
                if len(a) * len(b) == order and a & b == {zero}:
                    return True, (classes[i][1][0], classes[j][1][0])
        return False, None


class ProductRing(FiniteRing):
    """Z_{n1} x ... x Z_{nk} with coordinate-wise arithmetic."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.mods = spec.factors
        self._element_cache: tuple[Element, ...] | None = None
        self._matrix_cache: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"ProductRing({self.spec.ring_id()})"

    @property
    def order(self) -> int:
        return self.spec.order

    def parent_product(self) -> "ProductRing":
        return self

    # --- element plumbing --------------------------------------------------
    def _validate(self, x: Element) -> None:
        if len(x) != self.arity:
            raise ValueError(f"element {x} has arity {len(x)}, ring expects {self.arity}")
        for a, n in zip(x, self.mods):
            if not (0 <= a < n):
                raise ValueError(f"coordinate {a} of {x} out of range for modulus {n}")

    def contains(self, x: Element) -> bool:
        return len(x) == self.arity and all(0 <= a < n for a, n in zip(x, self.mods))

    def reduce(self, x: tuple[int, ...]) -> Element:
        return tuple(a % n for a, n in zip(x, self.mods))

    def elements(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> tuple[Element, ...]:
        if cap is not None and self.order > cap:
            raise CapExceededError(
                f"{self.spec.ring_id()} has order {self.order}, above the cap {cap}"
            )
        if self._element_cache is None:
            self._element_cache = tuple(cartesian(*[range(n) for n in self.mods]))
        return self._element_cache

    def _matrix(self) -> np.ndarray:
        if self._matrix_cache is None:
            self._matrix_cache = np.array(self.elements(), dtype=np.int64)
        return self._matrix_cache

    # --- arithmetic ----------------------------------------------------------
    def add(self, x: Element, y: Element) -> Element:
        self._validate(x)
        self._validate(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.mods))

    def mul(self, x: Element, y: Element) -> Element:
        self._validate(x)
        self._validate(y)
        return tuple((a * b) % n for a, b, n in zip(x, y, self.mods))

    def neg(self, x: Element) -> Element:
        self._validate(x)
        return tuple((-a) % n for a, n in zip(x, self.mods))

    # --- zero divisors and annihilators ---------------------------------------
    def is_zero_divisor(self, x: Element) -> bool:
        """gcd test per coordinate; gcd(n, 0) = n puts 0 in Z(R) as wanted."""
        self._validate(x)
        return any(math.gcd(a, n) != 1 for a, n in zip(x, self.mods))

    def annihilator_key(self, x: Element) -> AnnKey:
        """Per-coordinate principal generator of ann(x): g[i] = n_i // gcd(n_i, x_i)."""
        self._validate(x)
        return tuple(n // math.gcd(a, n) for a, n in zip(x, self.mods))

    def expand_annihilator_key(
        self, key: AnnKey, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> set[Element]:
        """All elements of the ideal encoded by a key (coordinate multiples)."""
        if len(key) != self.arity:
            raise ValueError(f"key {key} has arity {len(key)}, ring expects {self.arity}")
        size = math.prod(n // g for g, n in zip(key, self.mods))
        if cap is not None and size > cap:
            raise CapExceededError(f"ideal of size {size} above the cap {cap}")
        return set(cartesian(*[range(0, n, g) for g, n in zip(key, self.mods)]))

    def ann_intersection_nonzero(self, a: AnnKey, b: AnnKey) -> bool:
        """ann(x) and ann(y) meet beyond 0 iff lcm of generators stays proper somewhere."""
        if len(a) != self.arity or len(b) != self.arity:
            raise ValueError("key arity mismatch")
        return any(math.lcm(g, h) < n for g, h, n in zip(a, b, self.mods))

    def ann_sets_intersect(self, key_a: AnnKey, key_b: AnnKey) -> bool:
        return self.ann_intersection_nonzero(key_a, key_b)

    def annihilator_set(self, x: Element, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        """Exact annihilator by scanning every ring member."""
        self._validate(x)
        elems = self.elements(cap)
        if self.order <= 256:
            mods = self.mods
            return {
                r for r in elems if all(a * b % n == 0 for a, b, n in zip(r, x, mods))
            }
        mat = self._matrix()
        mask = ((mat * np.array(x, dtype=np.int64)) % np.array(self.mods, dtype=np.int64)).max(
            axis=1
        ) == 0
        return {elems[i] for i in np.flatnonzero(mask)}

    def zero_divisor_set(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        gcd = math.gcd
        mods = self.mods
        return {
            x
            for x in self.elements(cap)
            if any(gcd(a, n) != 1 for a, n in zip(x, mods))
        }

    def nilpotent_set(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        """x is nilpotent iff rad(n_i) divides x_i in every coordinate."""
        if cap is not None and self.order > cap:
            raise CapExceededError(
                f"{self.spec.ring_id()} has order {self.order}, above the cap {cap}"
            )
        rads = [radical(n) for n in self.mods]
        return set(cartesian(*[range(0, n, r) for n, r in zip(self.mods, rads)]))

    def annihilator_classes(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> list[tuple[AnnKey, list[Element]]]:
        """Partition of Z*(R) by annihilator, keyed by AnnKey, sorted by least member."""
        groups: dict[AnnKey, list[Element]] = {}
        unit_key = tuple(self.mods)
        zero = self.zero
        gcd = math.gcd
        mods = self.mods
        for x in self.elements(cap):
            if x == zero:
                continue
            key = tuple(n // gcd(a, n) for a, n in zip(x, mods))
            if key == unit_key:
                continue
            groups.setdefault(key, []).append(x)
        out = [(key, sorted(members)) for key, members in groups.items()]
        out.sort(key=lambda item: item[1][0])
        return out


class Subring(FiniteRing):
    """An element-set subring of a product ring.

    Arithmetic delegates to the parent; every enumeration question is
    answered by scanning the member set, never by key arithmetic.
    """

    def __init__(self, parent: ProductRing, members: frozenset[Element]):
        self.parent = parent
        self.spec = parent.spec
        self.members = members
        if parent.zero not in members:
            raise ValueError("subring must contain 0")
        for x in members:
            if not parent.contains(x):
                raise ValueError(f"{x} is outside the parent ring")
        self.has_one = parent.one in members
        self._element_cache: tuple[Element, ...] | None = None
        self._index_cache: dict[Element, int] | None = None
        self._matrix_cache: np.ndarray | None = None
        self._zero_rows_cache: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"Subring({self.spec.ring_id()}, {len(self.members)} members)"

    @property
    def order(self) -> int:
        return len(self.members)

    def parent_product(self) -> ProductRing:
        return self.parent

    def elements(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> tuple[Element, ...]:
        if cap is not None and self.order > cap:
            raise CapExceededError(f"subring order {self.order} above the cap {cap}")
        if self._element_cache is None:
            self._element_cache = tuple(sorted(self.members))
        return self._element_cache

    def contains(self, x: Element) -> bool:
        return x in self.members

    def _check_member(self, x: Element) -> None:
        if x not in self.members:
            raise ValueError(f"{x} is not a member of the subring")

    def add(self, x: Element, y: Element) -> Element:
        self._check_member(x)
        self._check_member(y)
        return self.parent.add(x, y)

    def mul(self, x: Element, y: Element) -> Element:
        self._check_member(x)
        self._check_member(y)
        return self.parent.mul(x, y)

    def neg(self, x: Element) -> Element:
        self._check_member(x)
        return self.parent.neg(x)

    def validate_closure(self) -> None:
        """Assert closure under +, *, additive inverse (vectorized)."""
        mat = self._matrix()
        mods = list(self.spec.factors)
        strides = [1] * len(mods)
        for i in range(len(mods) - 2, -1, -1):
            strides[i] = strides[i + 1] * mods[i + 1]
        stride_vec = np.array(strides, dtype=np.int64)
        codes = np.sort(mat @ stride_vec)
        m = len(mat)
        sum_codes = np.zeros((m, m), dtype=np.int64)
        prod_codes = np.zeros((m, m), dtype=np.int64)
        for c, mod in enumerate(mods):
            col = mat[:, c]
            sum_codes += ((col[:, None] + col[None, :]) % mod) * strides[c]
            prod_codes += ((col[:, None] * col[None, :]) % mod) * strides[c]
        neg_codes = ((-mat) % np.array(mods, dtype=np.int64)) @ stride_vec
        for name, flat in (
            ("+", sum_codes.ravel()),
            ("*", prod_codes.ravel()),
            ("-", neg_codes),
        ):
            if not np.isin(flat, codes).all():
                raise ValueError(f"subring not closed under {name}")

    def annihilator_key(self, x: Element):
        raise UnsupportedVariantError(
            "annihilator keys are defined on product rings only; use annihilator_set"
        )

    # --- brute-force annihilator machinery -------------------------------
    def _matrix(self) -> np.ndarray:
        if self._matrix_cache is None:
            self._matrix_cache = np.array(self.elements(cap=None), dtype=np.int64)
        return self._matrix_cache

    def _zero_product_rows(self) -> np.ndarray:
        """Boolean matrix: rows[i][j] iff e_i * e_j = 0."""
        if self._zero_rows_cache is None:
            mat = self._matrix()
            m = len(mat)
            mask = np.ones((m, m), dtype=bool)
            for c, mod in enumerate(self.spec.factors):
                col = mat[:, c]
                mask &= (col[:, None] * col[None, :]) % mod == 0
            self._zero_rows_cache = mask
        return self._zero_rows_cache

    def _ann_row(self, x: Element) -> np.ndarray:
        if self._index_cache is None:
            self._index_cache = {e: i for i, e in enumerate(self.elements(cap=None))}
        return self._zero_product_rows()[self._index_cache[x]]

    def annihilator_set(self, x: Element, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        self._check_member(x)
        elems = self.elements(cap)
        row = self._ann_row(x)
        return {elems[i] for i in np.flatnonzero(row)}

    def is_zero_divisor(self, x: Element) -> bool:
        self._check_member(x)
        if x == self.parent.zero:
            return True
        return int(self._ann_row(x).sum()) >= 2

    def nilpotent_set(self, cap: int | None = DEFAULT_ELEMENT_CAP) -> set[Element]:
        """Brute powering: square until the power stabilizes or hits 0."""
        out = set()
        zero = self.parent.zero
        steps = max(1, self.order.bit_length())
        for x in self.elements(cap):
            y = x
            for _ in range(steps):
                y = self.parent.mul(y, y)
                if y == zero:
                    break
            if y == zero:
                out.add(x)
        return out

    def annihilator_classes(
        self, cap: int | None = DEFAULT_ELEMENT_CAP
    ) -> list[tuple[bytes, list[Element]]]:
        """Partition of Z*(S) by annihilator, keyed by the scan row bytes."""
        elems = self.elements(cap)
        rows = self._zero_product_rows()
        counts = rows.sum(axis=1)
        zero = self.parent.zero
        groups: dict[bytes, list[Element]] = {}
        for i, x in enumerate(elems):
            if x == zero:
                continue
            if counts[i] < 2:
                continue  # unit: only 0 annihilates it
            groups.setdefault(rows[i].tobytes(), []).append(x)
        out = [(key, sorted(members)) for key, members in groups.items()]
        out.sort(key=lambda item: item[1][0])
        return out

    def ann_sets_intersect(self, key_a: bytes, key_b: bytes) -> bool:
        a = np.frombuffer(key_a, dtype=bool)
        b = np.frombuffer(key_b, dtype=bool)
        return int((a & b).sum()) >= 2  # 0 annihilates everything; need one more


def product_ring(text_or_spec) -> ProductRing:
    """Convenience constructor from a spec string or RingSpec."""
    if isinstance(text_or_spec, RingSpec):
        return ProductRing(text_or_spec)
    return ProductRing(parse_ring_spec(text_or_spec))
