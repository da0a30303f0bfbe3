"""Argumentation frameworks: the apx input format and the attack graph model.

An argumentation framework is a finite directed graph whose vertices are
arguments and whose edges are attacks.  Frameworks are built either from apx
text (facts ``arg(NAME).`` and ``att(NAME,NAME).``, ``%`` comments to end of
line) or directly from a name list plus attack pairs.

Argument sets are plain Python ints used as bitmasks: bit ``i`` set means the
argument with index ``i`` is a member.  This gives set algebra (``|``, ``&``,
``& ~``), subset tests and cardinality (``bit_count``) in a handful of machine
operations per word, which is what the search kernel needs.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ApxError(ValueError):
    """Base class for apx parsing failures."""


class ApxSyntaxError(ApxError):
    """Malformed fact: bad predicate, wrong arity, or missing terminator."""


class EmptyNameError(ApxError):
    """A fact contains an empty argument name, e.g. ``arg().``."""


class UndeclaredArgumentError(ApxError):
    """An att fact references a name with no arg fact anywhere in the input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices set in *mask*, in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def canonical_key(mask: int, n: int) -> int:
    """Sort key realizing the canonical extension order.

    Extensions are ordered lexicographically by their membership word over
    ascending indices (absent < present), which is the numeric order of the
    bit-reversed mask.
    """
    rev = 0
    for i in range(n):
        if (mask >> i) & 1:
            rev |= 1 << (n - 1 - i)
    return rev


class ArgumentationFramework:
    """Immutable directed attack graph over interned arguments.

    Arguments carry dense indices 0..n-1 in declaration order.  ``attackers[i]``
    is the bitmask of arguments attacking ``i``; ``targets[i]`` the bitmask of
    arguments attacked by ``i``.  ``attacks`` lists the (attacker, target)
    index pairs, deduplicated and sorted.
    """

    __slots__ = ("n", "names", "attacks", "attackers", "targets", "all_mask", "_index")

    def __init__(self, names: Sequence[str], attacks: Iterable[tuple[int, int]]):
        names = tuple(names)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not name:
                raise EmptyNameError("argument names must be nonempty")
            if name in index:
                raise ValueError(f"duplicate argument name {name!r}")
            index[name] = i
        n = len(names)
        pairs = sorted(set(attacks))
        attackers = [0] * n
        targets = [0] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"attack ({a},{b}) references an index out of range")
            targets[a] |= 1 << b
            attackers[b] |= 1 << a
        self.n = n
        self.names = names
        self.attacks = tuple(pairs)
        self.attackers = tuple(attackers)
        self.targets = tuple(targets)
        self.all_mask = (1 << n) - 1
        self._index = index

    @classmethod
    def build(cls, names: Sequence[str], named_attacks: Iterable[tuple[str, str]]) -> "ArgumentationFramework":
        """Construct from argument names and (attacker name, target name) pairs."""
        index = {name: i for i, name in enumerate(names)}
        pairs = []
        for a, b in named_attacks:
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise UndeclaredArgumentError(f"att references undeclared argument {missing!r}")
            pairs.append((index[a], index[b]))
        return cls(names, pairs)

    def index_of(self, name: str) -> int:
        """Index of *name*; raises KeyError if not declared."""
        return self._index[name]

    def mask_of(self, names: Iterable[str]) -> int:
        return mask_of_indices(self._index[name] for name in names)

    def names_of(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def attacked_set(self, s: int) -> int:
        """Arguments attacked by some member of *s* (the set S+)."""
        out = 0
        for i in bits(s):
            out |= self.targets[i]
        return out

    def attackers_of_set(self, s: int) -> int:
        """Arguments attacking some member of *s*."""
        out = 0
        for i in bits(s):
            out |= self.attackers[i]
        return out

    def reverse_reachable(self, q: int) -> int:
        """Arguments with a directed path to *q*, including *q* itself."""
        seen = 1 << q
        frontier = seen
        while frontier:
            grown = 0
            for i in bits(frontier):
                grown |= self.attackers[i]
            frontier = grown & ~seen
            seen |= frontier
        return seen

    def restrict(self, s: int) -> "Restriction":
        """Induced sub-framework on the members of *s*."""
        kept = list(bits(s))
        sub_index = {old: new for new, old in enumerate(kept)}
        names = [self.names[old] for old in kept]
        pairs = [
            (sub_index[a], sub_index[b])
            for a, b in self.attacks
            if (s >> a) & 1 and (s >> b) & 1
        ]
        return Restriction(ArgumentationFramework(names, pairs), kept)

    def to_apx(self) -> str:
        lines = [f"arg({name})." for name in self.names]
        lines += [f"att({self.names[a]},{self.names[b]})." for a, b in self.attacks]
        return "\n".join(lines) + ("\n" if lines else "")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.names == other.names and self.attacks == other.attacks

    def __hash__(self) -> int:
        return hash((self.names, self.attacks))

    def __repr__(self) -> str:
        return f"ArgumentationFramework(n={self.n}, attacks={len(self.attacks)})"


@dataclass(frozen=True)
class Restriction:
    """A restricted framework plus the index mapping back to its parent.

    ``kept[i]`` is the parent index of the restricted framework's argument i.
    """

    framework: ArgumentationFramework
    kept: list[int]

    def to_parent_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.kept[i]
        return out

    def sub_index_of(self, parent_index: int) -> int | None:
        lo, hi = 0, len(self.kept)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.kept[mid] < parent_index:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.kept) and self.kept[lo] == parent_index:
            return lo
        return None


_NAME_FORBIDDEN = frozenset("(),.%")


def _is_name_char(ch: str) -> bool:
    return ch not in _NAME_FORBIDDEN and not ch.isspace()


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse apx text into a framework.

    Facts may appear in any order; att facts are validated against the full
    set of arg facts after the whole input has been read.  Duplicate arg facts
    are idempotent and duplicate att facts collapse to one edge.
    """
    pos = 0
    end = len(text)

    def skip_blank(i: int) -> int:
        while i < end:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch == "%":
                while i < end and text[i] != "\n":
                    i += 1
            else:
                break
        return i

    def read_name(i: int) -> tuple[str, int]:
        start = i
        while i < end and _is_name_char(text[i]):
            i += 1
        return text[start:i], i

    names: list[str] = []
    declared: set[str] = set()
    att_facts: list[tuple[str, str]] = []

    while True:
        pos = skip_blank(pos)
        if pos >= end:
            break
        predicate, pos = read_name(pos)
        if not predicate:
            raise ApxSyntaxError(f"unexpected character {text[pos]!r} at offset {pos}")
        pos = skip_blank(pos)
        if pos >= end or text[pos] != "(":
            raise ApxSyntaxError(f"expected '(' after {predicate!r}")
        pos += 1
        terms: list[str] = []
        while True:
            pos = skip_blank(pos)
            term, pos = read_name(pos)
            if not term:
                raise EmptyNameError(f"empty argument name in {predicate!r} fact")
            terms.append(term)
            pos = skip_blank(pos)
            if pos >= end:
                raise ApxSyntaxError("unterminated fact at end of input")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise ApxSyntaxError(f"expected ',' or ')' at offset {pos}")
        pos = skip_blank(pos)
        if pos >= end or text[pos] != ".":
            raise ApxSyntaxError(f"missing terminating period after {predicate!r} fact")
        pos += 1

        if predicate == "arg":
            if len(terms) != 1:
                raise ApxSyntaxError(f"arg fact takes one name, got {len(terms)}")
            if terms[0] not in declared:
                declared.add(terms[0])
                names.append(terms[0])
        elif predicate == "att":
            if len(terms) != 2:
                raise ApxSyntaxError(f"att fact takes two names, got {len(terms)}")
            att_facts.append((terms[0], terms[1]))
        else:
            raise ApxSyntaxError(f"unknown predicate {predicate!r}")

    for a, b in att_facts:
        if a not in declared:
            raise UndeclaredArgumentError(f"att references undeclared argument {a!r}")
        if b not in declared:
            raise UndeclaredArgumentError(f"att references undeclared argument {b!r}")
    return ArgumentationFramework.build(names, att_facts)
