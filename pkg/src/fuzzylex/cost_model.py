"""Short-circuit cost tables.

A cost model holds the corpus-specific block confusions ("rn" <-> "m",
"tout" <-> "tt", ...) together with their costs. Every other pair of blocks
of length at most one gets the default elementary cost: 0 for identity,
1 for substitution, insertion and deletion.

Blocks are plain ``str`` values; the empty string stands for the empty block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

DEFAULT_COST = 1.0
EPSILON_MARK = "_"
COST_TOLERANCE = 1e-9


class CostModelError(ValueError):
    """Base class for cost-file problems. ``line`` is 1-based, or None."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class MalformedLine(CostModelError):
    pass


class AxiomViolation(CostModelError):
    pass


class ConflictingSymmetry(CostModelError):
    pass


class EpsilonEpsilon(CostModelError):
    pass


@dataclass(frozen=True, order=True)
class ShortCircuit:
    """A block pair with a bespoke cost.

    Construction enforces the axioms: identical pairs are single symbols at
    cost 0, distinct pairs cost strictly more than 0 and strictly less than
    the symbol-by-symbol replacement ``max(len(left), len(right))``.
    """

    left: str
    right: str
    cost: float

    def __post_init__(self) -> None:
        check_axioms(self.left, self.right, self.cost)

    @property
    def is_block(self) -> bool:
        """True when a side is longer than one symbol."""
        return max(len(self.left), len(self.right)) > 1

    def mirror(self) -> ShortCircuit:
        return ShortCircuit(self.right, self.left, self.cost)


def check_axioms(left: str, right: str, cost: float, line: int | None = None) -> None:
    if not left and not right:
        raise EpsilonEpsilon("rule maps the empty block to the empty block", line)
    if not math.isfinite(cost) or cost < 0:
        raise AxiomViolation(f"cost {cost!r} is not a non-negative real", line)
    if left == right:
        if len(left) > 1:
            raise AxiomViolation(
                f"identical multi-symbol pair ({left!r}, {right!r}) is redundant", line
            )
        if cost != 0:
            raise AxiomViolation(
                f"identity pair ({left!r}, {right!r}) must cost 0, got {cost!r}", line
            )
        return
    if cost <= 0:
        raise AxiomViolation(
            f"distinct pair ({left!r}, {right!r}) must have a positive cost", line
        )
    bound = max(len(left), len(right))
    if cost >= bound:
        raise AxiomViolation(
            f"cost {cost!r} for ({left!r}, {right!r}) is not below "
            f"max(|G|, |H|) = {bound}",
            line,
        )


@dataclass(frozen=True)
class CostModel:
    """Validated short-circuit table, closed under mirroring.

    ``shortcuts`` holds both orientations of every non-identity rule, sorted.
    ``alphabet`` starts as the symbols used by the rules and is widened with
    :meth:`with_symbols` once the dictionary and queries are known.
    """

    shortcuts: tuple[ShortCircuit, ...] = ()
    alphabet: frozenset[str] = frozenset()
    _table: dict[tuple[str, str], float] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        table: dict[tuple[str, str], float] = {}
        for sc in self.shortcuts:
            table[sc.left, sc.right] = sc.cost
        for (g, h), cost in table.items():
            if (h, g) not in table:
                raise ConflictingSymmetry(f"missing mirror of ({g!r}, {h!r})")
            if table[h, g] != cost:
                raise ConflictingSymmetry(
                    f"({g!r}, {h!r}) costs {cost!r} but its mirror costs {table[h, g]!r}"
                )
        object.__setattr__(self, "_table", table)
        symbols = set(self.alphabet)
        for sc in self.shortcuts:
            symbols.update(sc.left)
            symbols.update(sc.right)
        object.__setattr__(self, "alphabet", frozenset(symbols))

    @classmethod
    def from_rules(
        cls, rules: Iterable[tuple[str, str, float]], alphabet: Iterable[str] = ()
    ) -> CostModel:
        """Build a model from ``(left, right, cost)`` triples; mirrors are added."""
        merged: dict[tuple[str, str], float] = {}
        for left, right, cost in rules:
            _merge_rule(merged, left, right, float(cost), None)
        scs = sorted(ShortCircuit(g, h, c) for (g, h), c in merged.items())
        return cls(tuple(scs), frozenset(alphabet))

    def with_symbols(self, symbols: Iterable[str]) -> CostModel:
        extra = set(symbols) - self.alphabet
        if not extra:
            return self
        return CostModel(self.shortcuts, self.alphabet | extra)

    def cost(self, g: str, h: str) -> float | None:
        """Cost of rewriting block ``g`` as block ``h``, or None outside the arc set."""
        found = self._table.get((g, h))
        if found is not None:
            return found
        if len(g) > 1 or len(h) > 1 or (not g and not h):
            return None
        if g == h:
            return 0.0
        return DEFAULT_COST

    def block_shortcuts(self) -> Iterator[ShortCircuit]:
        """Stored pairs with a side longer than one symbol (both orientations)."""
        return (sc for sc in self.shortcuts if sc.is_block)

    @property
    def kappa(self) -> int:
        return sum(1 for _ in self.block_shortcuts())

    @property
    def epsilon_min(self) -> float:
        return min([sc.cost for sc in self.shortcuts] + [DEFAULT_COST])


def _merge_rule(
    merged: dict[tuple[str, str], float],
    left: str,
    right: str,
    cost: float,
    line: int | None,
) -> None:
    check_axioms(left, right, cost, line)
    if left == right:
        # identity pairs are implicit
        return
    for key in ((left, right), (right, left)):
        prior = merged.get(key)
        if prior is not None and not math.isclose(prior, cost, abs_tol=COST_TOLERANCE):
            raise ConflictingSymmetry(
                f"({key[0]!r}, {key[1]!r}) already has cost {prior!r}, "
                f"conflicts with {cost!r}",
                line,
            )
    merged.setdefault((left, right), cost)
    merged.setdefault((right, left), cost)


def c1(model: CostModel, g: str, h: str) -> float | None:
    """Total cost function over the extended arc set; None when undefined."""
    return model.cost(g, h)


def kappa(model: CostModel) -> int:
    return model.kappa


def epsilon_min(model: CostModel) -> float:
    return model.epsilon_min


def gamma1_arcs(model: CostModel) -> list[tuple[str, str, float]]:
    """Every arc of the extended set with its cost.

    That is all single-symbol substitutions, deletions and insertions over the
    alphabet, plus the multi-symbol shortcuts; ``(|alphabet| + 1)**2 + kappa - 1``
    arcs in total.
    """
    blocks = [""] + sorted(model.alphabet)
    arcs = []
    for g in blocks:
        for h in blocks:
            if g or h:
                arcs.append((g, h, model.cost(g, h)))
    arcs.extend((sc.left, sc.right, sc.cost) for sc in model.block_shortcuts())
    return arcs


# --- file format -----------------------------------------------------------


def _decode_block(field_text: str) -> str:
    if field_text in ("", EPSILON_MARK):
        return ""
    out = []
    chars = iter(field_text)
    for ch in chars:
        if ch == "\\":
            nxt = next(chars, None)
            if nxt in ("_", "\\"):
                out.append(nxt)
                continue
            out.append(ch)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(ch)
    return "".join(out)


def _encode_block(block: str) -> str:
    if not block:
        return EPSILON_MARK
    escaped = block.replace("\\", "\\\\")
    if escaped == EPSILON_MARK:
        return "\\_"
    return escaped


def _parse_lines(text: str) -> Iterator[tuple[int, str, str, float] | CostModelError]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) != 3:
            yield MalformedLine(
                f"expected 3 tab-separated fields, found {len(fields)}", lineno
            )
            continue
        try:
            cost = float(fields[2].strip())
        except ValueError:
            yield MalformedLine(f"unparsable cost {fields[2]!r}", lineno)
            continue
        if not math.isfinite(cost):
            yield MalformedLine(f"unparsable cost {fields[2]!r}", lineno)
            continue
        yield lineno, _decode_block(fields[0]), _decode_block(fields[1]), cost


def validate_cost_text(text: str) -> tuple[CostModel | None, list[CostModelError]]:
    """Check every line, collecting all problems instead of stopping at the first."""
    merged: dict[tuple[str, str], float] = {}
    errors: list[CostModelError] = []
    for item in _parse_lines(text):
        if isinstance(item, CostModelError):
            errors.append(item)
            continue
        lineno, left, right, cost = item
        try:
            _merge_rule(merged, left, right, cost, lineno)
        except CostModelError as exc:
            errors.append(exc)
    if errors:
        return None, errors
    scs = sorted(ShortCircuit(g, h, c) for (g, h), c in merged.items())
    return CostModel(tuple(scs)), []


def parse_cost_model(text: str) -> CostModel:
    """Parse a ``G<TAB>H<TAB>cost`` document; raises the first problem found."""
    model, errors = validate_cost_text(text)
    if errors:
        raise errors[0]
    assert model is not None
    return model


def load_cost_model(path) -> CostModel:
    with open(path, encoding="utf-8") as fh:
        return parse_cost_model(fh.read())


def serialize_cost_model(model: CostModel) -> str:
    """One line per rule, written in a single orientation."""
    lines = []
    for sc in model.shortcuts:
        if (sc.left, sc.right) > (sc.right, sc.left):
            continue
        lines.append(f"{_encode_block(sc.left)}\t{_encode_block(sc.right)}\t{sc.cost!r}")
    return "\n".join(lines) + ("\n" if lines else "")
