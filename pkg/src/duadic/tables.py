"""Catalogue of the published parameter tables, bundled as package data.

Each entry names a claimed code by its table, printed length, and field
column.  For the two extended-cyclic tables the printed length is the
extended length (underlying cyclic length + 1) and the Hermitian tables'
field column holds the base q of a code over GF(q**2); ``verify`` resolves
both conventions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .constructions import FAMILIES
from .errors import InvalidTableError

__all__ = ["TableEntry", "load_tables", "parse_prime_power", "TABLE_IDS"]

TABLE_IDS = (1, 2, 3, 4, 5, 6)


def parse_prime_power(text: str) -> tuple[int, int]:
    """Parse "q" or "base^exp" into (base, exp).  Purely syntactic."""
    text = text.strip()
    try:
        if "^" in text:
            base_s, exp_s = text.split("^", 1)
            base, exp = int(base_s), int(exp_s)
        else:
            base, exp = int(text), 1
    except ValueError:
        raise InvalidTableError(f"bad field order {text!r}") from None
    if base < 2 or exp < 1:
        raise InvalidTableError(f"bad field order {text!r}")
    return base, exp


@dataclass(frozen=True)
class TableEntry:
    """One cell of a published table: a claimed code to verify."""

    table_id: int
    n: int  # printed length (extended length for the cyclic tables)
    q_base: int
    q_exp: int
    family: str
    note: str = ""

    @property
    def q(self) -> int:
        """The field column's value (base q for Hermitian families)."""
        return self.q_base**self.q_exp

    @property
    def label(self) -> str:
        q_text = str(self.q_base) if self.q_exp == 1 else f"{self.q_base}^{self.q_exp}"
        return f"table {self.table_id}: n = {self.n}, q = {q_text}"

    def to_dict(self) -> dict:
        out = {
            "table_id": self.table_id,
            "n": self.n,
            "q_base": self.q_base,
            "q_exp": self.q_exp,
            "family": self.family,
        }
        if self.note:
            out["note"] = self.note
        return out


@lru_cache(maxsize=1)
def load_tables() -> dict[int, tuple[TableEntry, ...]]:
    """The bundled catalogue, keyed by table id, validated on load."""
    raw = json.loads(
        resources.files("duadic").joinpath("data/tables.json").read_text()
    )
    tables: dict[int, tuple[TableEntry, ...]] = {}
    seen: set[tuple] = set()
    for block in raw["tables"]:
        tid = block["id"]
        if tid in tables:
            raise InvalidTableError(f"table {tid} appears twice")
        default_family = block["family"]
        entries = []
        for item in block["entries"]:
            family = item.get("family", default_family)
            if family not in FAMILIES:
                raise InvalidTableError(
                    f"table {tid}: unknown family {family!r} for n = {item['n']}"
                )
            base, exp = parse_prime_power(item["q"])
            entry = TableEntry(
                tid, item["n"], base, exp, family, item.get("note", "")
            )
            key = (tid, entry.n, entry.q, family)
            if key in seen:
                raise InvalidTableError(f"duplicate entry {key}")
            seen.add(key)
            entries.append(entry)
        if not entries:
            raise InvalidTableError(f"table {tid} is empty")
        tables[tid] = tuple(entries)
    if tuple(sorted(tables)) != TABLE_IDS:
        raise InvalidTableError(f"expected tables {TABLE_IDS}, got {sorted(tables)}")
    return tables
