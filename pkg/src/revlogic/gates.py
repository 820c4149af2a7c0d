"""Reversible gates modeled as permutations over n-bit words.

A reversible gate has as many outputs as inputs and computes a bijection
on {0,1}^n, so the input word can always be recovered from the output
word. Gates are stored as exhaustive truth tables (2^n rows), which keeps
application, inversion, and bijectivity checking exact and cheap for the
small arities used in gate-level design.

Bit ordering is most-significant-bit first everywhere: in `BitWord`, in
truth-table indices, and in printed bitstrings. Gate pins follow the
conventional positional order (A,B,C,D) -> (P,Q,R,S).

The built-in catalog provides the classic reversible gates (Feynman,
Fredkin, Toffoli, New, Peres, HNG) plus SCL, a 4x4 gate that computes the
decimal-carry correction for BCD addition while passing its first three
inputs through untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from importlib import resources
from typing import Callable, Iterable, Sequence

from .errors import RevLogicError

MAX_ARITY = 16


class NotBijective(RevLogicError):
    """Two inputs map to the same output; not a valid reversible gate."""


class BadArity(RevLogicError):
    """Arity outside [1, MAX_ARITY] or output count does not match it."""


class WidthMismatch(RevLogicError):
    """A bit word's width does not match what the operation expects."""


class CostTableError(RevLogicError):
    """Malformed cost-table text."""


@dataclass(frozen=True)
class BitWord:
    """An immutable, fixed-width vector of bits, most significant first.

    Width 0 is permitted so that circuits without garbage (or without
    primary outputs) can still report a uniform word type; gate I/O is
    separately constrained to arity >= 1.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        for b in self.bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")

    @property
    def width(self) -> int:
        return len(self.bits)

    @classmethod
    def from_int(cls, value: int, width: int) -> BitWord:
        if width < 0:
            raise ValueError("width must be nonnegative")
        if not 0 <= value < (1 << width):
            raise ValueError(f"value {value} does not fit in {width} bits")
        return cls(tuple((value >> (width - 1 - i)) & 1 for i in range(width)))

    @classmethod
    def from_string(cls, text: str) -> BitWord:
        if not all(ch in "01" for ch in text):
            raise ValueError(f"bitstring may contain only 0 and 1: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def to_int(self) -> int:
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class TruthTable:
    """Total mapping from every n-bit word to an n-bit word.

    `rows[i]` is the output word (as an MSB-first integer) for the input
    word whose MSB-first integer value is `i`. The table need not be a
    permutation; `is_bijective` decides that, and `GateDef` enforces it.
    """

    arity: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.arity <= MAX_ARITY:
            raise BadArity(f"arity must be in [1, {MAX_ARITY}], got {self.arity}")
        object.__setattr__(self, "rows", tuple(self.rows))
        size = 1 << self.arity
        if len(self.rows) != size:
            raise ValueError(
                f"table for arity {self.arity} needs {size} rows, got {len(self.rows)}"
            )
        for out in self.rows:
            if not 0 <= out < size:
                raise ValueError(f"output word {out} does not fit in {self.arity} bits")

    @property
    def size(self) -> int:
        return 1 << self.arity


def is_bijective(table: TruthTable) -> bool:
    """True iff the table is a permutation of {0,1}^n.

    Uses a seen-bitmap sweep: every output must appear exactly once.
    """
    seen = bytearray(table.size)
    for out in table.rows:
        if seen[out]:
            return False
        seen[out] = 1
    return True


@dataclass(frozen=True)
class GateDef:
    """A named reversible gate: a bijective truth table plus cost metadata.

    `cost` is the gate's quantum cost, an input parameter expressing how
    many primitive 1x1/2x2 reversible operations a realization needs; it
    is configuration data, not derived here. Every gate contributes one
    gate level, so `delay` is fixed at 1.

    `formulas` optionally carries per-output switching-function strings
    (e.g. ``("A", "A^B")``) for display; it does not affect behavior or
    equality.
    """

    name: str
    table: TruthTable
    cost: int = 0
    delay: int = field(default=1, init=False)
    formulas: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.name:
            raise ValueError("gate name must be nonempty")
        if self.cost < 0:
            raise ValueError(f"quantum cost must be nonnegative, got {self.cost}")
        if self.formulas is not None:
            object.__setattr__(self, "formulas", tuple(self.formulas))
            if len(self.formulas) != self.table.arity:
                raise ValueError("need one formula per output pin")
        if not is_bijective(self.table):
            raise NotBijective(f"gate {self.name!r}: truth table is not a permutation")

    @property
    def arity(self) -> int:
        return self.table.arity

    def apply(self, word: BitWord) -> BitWord:
        """Map an input word through the gate's truth table."""
        if word.width != self.arity:
            raise WidthMismatch(
                f"gate {self.name} expects {self.arity} bits, got {word.width}"
            )
        return BitWord.from_int(self.table.rows[word.to_int()], self.arity)

    def inverse(self) -> GateDef:
        """The gate computing the inverse permutation.

        Self-inverse gates come back as the same object, so e.g. the
        inverse of a Feynman gate compares equal to the original.
        """
        inv_rows = [0] * self.table.size
        for src, dst in enumerate(self.table.rows):
            inv_rows[dst] = src
        inv_table = TruthTable(self.arity, tuple(inv_rows))
        if inv_table.rows == self.table.rows:
            return self
        if self.name.endswith("_inv"):
            inv_name = self.name[: -len("_inv")]
        else:
            inv_name = self.name + "_inv"
        return GateDef(inv_name, inv_table, cost=self.cost)


def make_gate(
    name: str,
    arity: int,
    outputs: Sequence[Callable[..., int]],
    cost: int = 0,
    formulas: Sequence[str] | None = None,
) -> GateDef:
    """Build a gate from one boolean expression per output pin.

    Each entry of `outputs` is a callable taking `arity` bit arguments
    (the inputs A, B, ... in order) and returning the corresponding
    output bit. The expressions are evaluated over all 2^arity input
    words; construction fails with NotBijective if the resulting table
    is not a permutation.
    """
    if not 1 <= arity <= MAX_ARITY:
        raise BadArity(f"arity must be in [1, {MAX_ARITY}], got {arity}")
    if len(outputs) != arity:
        raise BadArity(
            f"gate {name!r}: arity {arity} needs {arity} output expressions, "
            f"got {len(outputs)}"
        )
    rows = []
    for value in range(1 << arity):
        ins = tuple((value >> (arity - 1 - i)) & 1 for i in range(arity))
        out = 0
        for fn in outputs:
            bit = fn(*ins)
            if bit not in (0, 1):
                raise ValueError(f"gate {name!r}: expression returned {bit!r}, not a bit")
            out = (out << 1) | bit
        rows.append(out)
    table = TruthTable(arity, tuple(rows))
    fml = tuple(formulas) if formulas is not None else None
    return GateDef(name, table, cost=cost, formulas=fml)


# Switching functions for the built-in catalog. ' is NOT, ^ XOR, + OR,
# juxtaposition AND; pins are (A,B,C,D) -> (P,Q,R,S).
_CATALOG_DEFS: tuple[tuple[str, int, tuple, tuple[str, ...]], ...] = (
    (
        "FG",
        2,
        (lambda a, b: a, lambda a, b: a ^ b),
        ("A", "A^B"),
    ),
    (
        "FRG",
        3,
        (
            lambda a, b, c: a,
            lambda a, b, c: ((a ^ 1) & b) ^ (a & c),
            lambda a, b, c: ((a ^ 1) & c) ^ (a & b),
        ),
        ("A", "A'B^AC", "A'C^AB"),
    ),
    (
        "TG",
        3,
        (lambda a, b, c: a, lambda a, b, c: b, lambda a, b, c: (a & b) ^ c),
        ("A", "B", "AB^C"),
    ),
    (
        "NG",
        3,
        (
            lambda a, b, c: a,
            lambda a, b, c: (a & b) ^ c,
            lambda a, b, c: ((a ^ 1) & (c ^ 1)) ^ (b ^ 1),
        ),
        ("A", "AB^C", "A'C'^B'"),
    ),
    (
        "PG",
        3,
        (lambda a, b, c: a, lambda a, b, c: a ^ b, lambda a, b, c: (a & b) ^ c),
        ("A", "A^B", "AB^C"),
    ),
    (
        "HNG",
        4,
        (
            lambda a, b, c, d: a,
            lambda a, b, c, d: b,
            lambda a, b, c, d: a ^ b ^ c,
            lambda a, b, c, d: ((a ^ b) & c) ^ (a & b) ^ d,
        ),
        ("A", "B", "A^B^C", "(A^B)C^AB^D"),
    ),
    (
        "SCL",
        4,
        (
            lambda a, b, c, d: a,
            lambda a, b, c, d: b,
            lambda a, b, c, d: c,
            lambda a, b, c, d: d ^ (c & (a | b)),
        ),
        ("A", "B", "C", "D^C(A+B)"),
    ),
)


@cache
def _catalog() -> tuple[GateDef, ...]:
    costs = default_cost_table()
    return tuple(
        make_gate(name, arity, exprs, cost=costs[name], formulas=fml)
        for name, arity, exprs, fml in _CATALOG_DEFS
    )


def builtin_catalog() -> list[GateDef]:
    """The built-in gate catalog: FG, FRG, TG, NG, PG, HNG, SCL.

    Costs come from the shipped default cost table; see
    `default_cost_table` for provenance caveats.
    """
    return list(_catalog())


def catalog_by_name() -> dict[str, GateDef]:
    return {g.name: g for g in _catalog()}


def parse_cost_table(text: str) -> dict[str, int]:
    """Parse cost-table text: one `<gate-name> <nonnegative-int>` per line.

    Blank lines are skipped and `#` starts a comment (whole-line or
    trailing). Duplicate gate names are rejected.
    """
    costs: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CostTableError(
                f"line {lineno}: expected '<gate-name> <cost>', got {raw.strip()!r}"
            )
        name, cost_text = parts
        try:
            value = int(cost_text)
        except ValueError:
            raise CostTableError(
                f"line {lineno}: cost for {name!r} is not an integer: {cost_text!r}"
            ) from None
        if value < 0:
            raise CostTableError(f"line {lineno}: cost for {name!r} must be nonnegative")
        if name in costs:
            raise CostTableError(f"line {lineno}: duplicate entry for gate {name!r}")
        costs[name] = value
    return costs


def load_cost_table(path) -> dict[str, int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cost_table(fh.read())


@cache
def _default_costs() -> dict[str, int]:
    text = resources.files("revlogic").joinpath("data/default_costs.txt").read_text()
    return parse_cost_table(text)


def default_cost_table() -> dict[str, int]:
    """Costs from the packaged default table (a fresh copy per call).

    FG/TG/FRG/PG use the common literature figures; NG, HNG, and SCL have
    no authoritative published cost and ship as marked placeholders.
    Supply your own table wherever the numbers matter.
    """
    return dict(_default_costs())


def require_costs(names: Iterable[str], costs: dict[str, int]) -> None:
    """Check that every referenced gate name has a cost entry."""
    missing = sorted({n for n in names if n not in costs})
    if missing:
        raise CostTableError(f"cost table has no entry for: {', '.join(missing)}")
