"""Write-once store of the coefficients N^(g)_{ab} of CP^3.

A coefficient is indexed by genus, degree ``n`` and the numbers ``a`` of
lines and ``b`` of points it must meet.  Only cells with ``4n = a + 2b``
carry a value; every other lookup is the *dimension gate* and returns zero.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import ConsistencyViolation, InvalidArgument, MalformedFile, MissingEntry
from .exact import ZERO, format_rational, parse_rational

CACHE_HEADER = "# gwcp3-table v1"
GENERA = (0, 1)


class Provenance(enum.Enum):
    WDVV_SOLVED = "WDVV_SOLVED"
    RELATION_A = "RELATION_A"
    RELATION_B = "RELATION_B"
    SEED = "SEED"
    LOADED_GOLDEN = "LOADED_GOLDEN"
    LOADED_CACHE = "LOADED_CACHE"


def is_valid_cell(degree: int, a: int, b: int) -> bool:
    return degree >= 1 and a >= 0 and b >= 0 and 4 * degree == a + 2 * b


@dataclass(frozen=True, order=True)
class GWKey:
    genus: int
    degree: int
    a: int
    b: int

    def __post_init__(self):
        if self.genus not in GENERA:
            raise InvalidArgument(f"genus must be 0 or 1, got {self.genus}")
        if not is_valid_cell(self.degree, self.a, self.b):
            raise InvalidArgument(
                f"(n={self.degree}, a={self.a}, b={self.b}) violates 4n = a + 2b"
            )

    def __str__(self):
        return f"N{self.genus}[n={self.degree}]({self.a},{self.b})"


def cells_for_degree(genus: int, degree: int) -> List[Tuple[int, int]]:
    """The ``2n + 1`` cells ``(a, b)`` of degree ``n``, by ascending ``b``.

    The cell set does not depend on the genus; the argument is kept so the
    call reads like a table query.
    """
    if genus not in GENERA:
        raise InvalidArgument(f"genus must be 0 or 1, got {genus}")
    if degree < 1:
        raise InvalidArgument(f"degree must be >= 1, got {degree}")
    return [(4 * degree - 2 * b, b) for b in range(2 * degree + 1)]


class GWTable:
    """Memoized map ``GWKey -> (Fraction, Provenance)``.

    Entries are write-once: storing a second, different value for a key
    raises :class:`ConsistencyViolation`, which is the main tripwire for
    transcription mistakes in the recursions.
    """

    def __init__(self):
        self._entries: Dict[GWKey, Tuple[Fraction, Provenance]] = {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def __iter__(self) -> Iterator[GWKey]:
        return iter(sorted(self._entries))

    def __eq__(self, other):
        if not isinstance(other, GWTable):
            return NotImplemented
        return self._entries == other._entries

    def items(self):
        for key in self:
            value, prov = self._entries[key]
            yield key, value, prov

    def get(self, genus: int, degree: int, a: int, b: int) -> Fraction:
        if genus not in GENERA:
            raise InvalidArgument(f"genus must be 0 or 1, got {genus}")
        if not is_valid_cell(degree, a, b):
            return ZERO
        key = GWKey(genus, degree, a, b)
        try:
            return self._entries[key][0]
        except KeyError:
            raise MissingEntry(key) from None

    def provenance(self, key: GWKey) -> Provenance:
        return self._entries[key][1]

    def put(self, key: GWKey, value, provenance: Provenance) -> None:
        value = Fraction(value)
        old = self._entries.get(key)
        if old is not None:
            if old[0] != value:
                raise ConsistencyViolation(
                    f"{key}: stored {format_rational(old[0])} ({old[1].value}), "
                    f"new {format_rational(value)} ({provenance.value})"
                )
            return
        self._entries[key] = (value, provenance)

    def has_degree(self, genus: int, degree: int) -> bool:
        return all(GWKey(genus, degree, a, b) in self._entries
                   for a, b in cells_for_degree(genus, degree))

    def max_complete_degree(self, genus: int) -> int:
        d = 0
        while self.has_degree(genus, d + 1):
            d += 1
        return d

    def copy(self) -> "GWTable":
        new = GWTable()
        new._entries = dict(self._entries)
        return new

    def replace(self, key: GWKey, value) -> None:
        """Overwrite an entry, bypassing write-once.  For mutation tests only."""
        self._entries[key] = (Fraction(value), self._entries[key][1])

    # -- persistence ------------------------------------------------------

    def dumps(self) -> str:
        lines = [CACHE_HEADER]
        for key, value, prov in self.items():
            lines.append(f"{key.genus} {key.degree} {key.a} {key.b} "
                         f"{format_rational(value)} {prov.value}")
        return "\n".join(lines) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str, path="<string>", keep_provenance: bool = True) -> "GWTable":
        """Parse the record format written by :meth:`dumps`.

        With ``keep_provenance=False`` every entry is tagged ``LOADED_CACHE``.
        """
        table = cls()
        lines = text.splitlines()
        if not lines or lines[0].strip() != CACHE_HEADER:
            raise MalformedFile(path, 1, f"expected header {CACHE_HEADER!r}")
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 6:
                raise MalformedFile(path, lineno, f"expected 6 fields, got {len(fields)}")
            try:
                g, n, a, b = (int(f) for f in fields[:4])
                value = parse_rational(fields[4])
                prov = Provenance(fields[5])
                key = GWKey(g, n, a, b)
            except ValueError as exc:
                raise MalformedFile(path, lineno, str(exc)) from None
            if not keep_provenance:
                prov = Provenance.LOADED_CACHE
            try:
                table.put(key, value, prov)
            except ConsistencyViolation as exc:
                raise MalformedFile(path, lineno, str(exc)) from None
        return table

    @classmethod
    def load(cls, path, keep_provenance: bool = True) -> "GWTable":
        return cls.loads(Path(path).read_text(), path=str(path),
                         keep_provenance=keep_provenance)

    # -- export -----------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["genus", "degree", "a", "b", "value"])
        for key, value, _ in self.items():
            writer.writerow([key.genus, key.degree, key.a, key.b, format_rational(value)])
        return buf.getvalue()

    def to_json(self) -> str:
        records = [
            {"g": k.genus, "n": k.degree, "a": k.a, "b": k.b,
             "num": v.numerator, "den": v.denominator, "provenance": p.value}
            for k, v, p in self.items()
        ]
        return json.dumps(records, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GWTable":
        table = cls()
        for rec in json.loads(text):
            key = GWKey(rec["g"], rec["n"], rec["a"], rec["b"])
            table.put(key, Fraction(rec["num"], rec["den"]), Provenance(rec["provenance"]))
        return table


def load_golden_table1(max_degree: Optional[int] = None) -> GWTable:
    """The published table as a :class:`GWTable` tagged ``LOADED_GOLDEN``."""
    from .golden import golden_rows

    table = GWTable()
    for n, a, b, g0, g1, _ in golden_rows():
        if max_degree is not None and n > max_degree:
            continue
        table.put(GWKey(0, n, a, b), g0, Provenance.LOADED_GOLDEN)
        table.put(GWKey(1, n, a, b), g1, Provenance.LOADED_GOLDEN)
    return table


def golden_counts() -> Dict[Tuple[int, int, int], int]:
    """Published elliptic curve counts keyed by ``(n, a, b)``."""
    from .golden import golden_rows

    return {(n, a, b): count for n, a, b, _, _, count in golden_rows()}
