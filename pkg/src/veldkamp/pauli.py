"""Phase-free N-qubit Pauli group with optional phase tracking.

Qubit ``k`` (the ``k``-th letter of the string form, counting from the left)
is stored in bit ``k`` of two integers ``x`` and ``z``::

    I = (0, 0)   X = (1, 0)   Y = (1, 1)   Z = (0, 1)

The letter ``Y`` always denotes the Hermitian matrix [[0, -i], [i, 0]], so a
``SignedPauli`` ``(e, a)`` stands for ``i**a * e``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import ContextError, InvalidParameterError, PauliParseError, WidthMismatchError

_ENCODE = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_DECODE = {v: k for k, v in _ENCODE.items()}

# exponent of i picked up by the single-qubit product a.b
_PHASE = {
    ("X", "Y"): 1, ("Y", "Z"): 1, ("Z", "X"): 1,
    ("Y", "X"): 3, ("Z", "Y"): 3, ("X", "Z"): 3,
}


@dataclass(frozen=True, order=True)
class PauliElement:
    n: int
    x: int
    z: int

    @classmethod
    def parse(cls, s: str) -> PauliElement:
        s = s.strip()
        if not s:
            raise PauliParseError("empty Pauli string")
        x = z = 0
        for k, ch in enumerate(s):
            try:
                bx, bz = _ENCODE[ch]
            except KeyError:
                raise PauliParseError(f"illegal character {ch!r} in {s!r}") from None
            x |= bx << k
            z |= bz << k
        return cls(len(s), x, z)

    @classmethod
    def identity(cls, n: int) -> PauliElement:
        return cls(n, 0, 0)

    def letter(self, k: int) -> str:
        return _DECODE[((self.x >> k) & 1, (self.z >> k) & 1)]

    def format(self) -> str:
        return "".join(self.letter(k) for k in range(self.n))

    __str__ = format

    def __repr__(self):
        return f"PauliElement({self.format()!r})"

    @property
    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def vector(self) -> int:
        """The (x|z) symplectic vector packed into one integer."""
        return self.x | (self.z << self.n)

    def __mul__(self, other: PauliElement) -> PauliElement:
        return mul(self, other)


def parse(s: str) -> PauliElement:
    return PauliElement.parse(s)


def format(e: PauliElement) -> str:  # noqa: A001 - mirrors parse()
    return e.format()


def _check_width(a: PauliElement, b: PauliElement) -> None:
    if a.n != b.n:
        raise WidthMismatchError(f"width mismatch: {a} ({a.n}) vs {b} ({b.n})")


def mul(a: PauliElement, b: PauliElement) -> PauliElement:
    _check_width(a, b)
    return PauliElement(a.n, a.x ^ b.x, a.z ^ b.z)


def product(elements: Iterable[PauliElement], n: int | None = None) -> PauliElement:
    it = iter(elements)
    acc = next(it, None)
    if acc is None:
        if n is None:
            raise InvalidParameterError("empty product needs an explicit width")
        return PauliElement.identity(n)
    for e in it:
        acc = mul(acc, e)
    return acc


@dataclass(frozen=True)
class SignedPauli:
    element: PauliElement
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def sign(self) -> complex:
        return 1j ** self.phase

    def __str__(self):
        return ("", "i", "-", "-i")[self.phase] + str(self.element)


def mul_signed(a: SignedPauli | PauliElement, b: SignedPauli | PauliElement) -> SignedPauli:
    if isinstance(a, PauliElement):
        a = SignedPauli(a)
    if isinstance(b, PauliElement):
        b = SignedPauli(b)
    ea, eb = a.element, b.element
    _check_width(ea, eb)
    phase = a.phase + b.phase
    for k in range(ea.n):
        phase += _PHASE.get((ea.letter(k), eb.letter(k)), 0)
    return SignedPauli(mul(ea, eb), phase)


def symplectic_form(a: PauliElement, b: PauliElement) -> int:
    """0 when ``a`` and ``b`` commute, 1 when they anticommute."""
    _check_width(a, b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


def commutes(a: PauliElement, b: PauliElement) -> bool:
    return symplectic_form(a, b) == 0


def all_elements(n: int, include_identity: bool = True) -> list[PauliElement]:
    out = [PauliElement(n, x, z) for x in range(1 << n) for z in range(1 << n)]
    out.sort(key=str)
    return out if include_identity else [e for e in out if not e.is_identity]


@dataclass(frozen=True)
class MagicSquareVerdict:
    grid: tuple[tuple[PauliElement, ...], ...]
    context_signs: tuple[int, ...]  # rows 0-2 then columns 0-2
    is_magic: bool

    @property
    def sign_product(self) -> int:
        out = 1
        for s in self.context_signs:
            out *= s
        return out


def _context_sign(name: str, ops: Sequence[PauliElement]) -> int:
    for a, b in itertools.combinations(ops, 2):
        if not commutes(a, b):
            raise ContextError(name, f"{a} and {b} anticommute")
    acc = SignedPauli(PauliElement.identity(ops[0].n))
    for op in ops:
        acc = mul_signed(acc, op)
    if not acc.element.is_identity or acc.phase % 2:
        raise ContextError(name, f"product is {acc}, not +-identity")
    return 1 if acc.phase == 0 else -1


def verify_magic_square(grid: Sequence[Sequence[PauliElement]]) -> MagicSquareVerdict:
    rows = tuple(tuple(r) for r in grid)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise InvalidParameterError("a magic square is a 3x3 grid")
    width = rows[0][0].n
    if any(e.n != width for r in rows for e in r):
        raise WidthMismatchError("grid entries differ in width")
    signs = [_context_sign(f"row {i}", rows[i]) for i in range(3)]
    signs += [_context_sign(f"column {j}", [rows[i][j] for i in range(3)]) for j in range(3)]
    total = 1
    for s in signs:
        total *= s
    return MagicSquareVerdict(rows, tuple(signs), total == -1)


def isotropic_lines(lines: Iterable[Sequence[PauliElement]]) -> list:
    """Keep the triples whose labels pairwise commute."""
    return [
        ln for ln in lines
        if all(commutes(a, b) for a, b in itertools.combinations(ln, 2))
    ]


def is_generalized_quadrangle(points: Iterable[Hashable], lines: Iterable[Sequence], s: int, t: int) -> bool:
    """GQ(s, t) check: s+1 points per line, t+1 lines per point, and the
    one-point-collinear axiom for every non-incident point-line pair."""
    pts = list(points)
    lns = [tuple(ln) for ln in lines]
    if any(len(ln) != s + 1 for ln in lns):
        return False
    through = {p: [ln for ln in lns if p in ln] for p in pts}
    if any(len(v) != t + 1 for v in through.values()):
        return False
    if any(q not in through for ln in lns for q in ln):
        return False
    collinear = {p: {q for ln in through[p] for q in ln} for p in pts}
    for p in pts:
        for ln in lns:
            if p in ln:
                continue
            if sum(q in collinear[p] for q in ln) != 1:
                return False
    return True


def check_gq22(points: Sequence[Hashable], lines: Sequence[Sequence]) -> bool:
    if len(points) != 15 or len(lines) != 15:
        raise InvalidParameterError(
            f"GQ(2,2) has 15 points and 15 lines, got {len(points)} and {len(lines)}"
        )
    return is_generalized_quadrangle(points, lines, 2, 2)


@dataclass(frozen=True)
class SubgroupCheck:
    closed: bool
    rank: int
    nondegenerate: bool


def _gf2_rank(rows: list[int]) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def check_subgroup(labels: Iterable[PauliElement]) -> SubgroupCheck:
    elems = set(labels)
    if not elems:
        raise InvalidParameterError("need at least one label")
    n = next(iter(elems)).n
    if any(e.n != n for e in elems):
        raise WidthMismatchError("labels differ in width")
    group = elems | {PauliElement.identity(n)}
    closed = all(mul(a, b) in group for a in group for b in group)

    basis: list[PauliElement] = []
    reduced: list[int] = []
    for e in sorted(elems):
        v = e.vector()
        for b in reduced:
            v = min(v, v ^ b)
        if v:
            reduced.append(v)
            basis.append(e)
    gram = [
        sum(symplectic_form(a, b) << j for j, b in enumerate(basis))
        for a in basis
    ]
    return SubgroupCheck(closed, len(basis), _gf2_rank(gram) == len(basis))
