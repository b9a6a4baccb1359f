"""Normalisation constants of the finite model.

The continuum identities carry factors such as 2^d or 1/|Lambda| that do not
transfer literally to Z_L x Z_L. Each factor used by the library is fitted
once by brute force (``qtfa.testkit.derive``), stored as a functional form in
``data/constants.json`` and read back here. The table is checksummed; a table
whose version or checksum does not match raises ``ConstantsMismatch``.

Set ``QTFA_CONSTANTS`` to point at an alternative table file.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from .errors import ConstantsMismatch

TABLE_VERSION = "qtfa-constants/1"
ENV_VAR = "QTFA_CONSTANTS"

# Forms are functions of the order L and the lattice covolume s.
FORMS: dict[str, Callable[[int, Fraction], Any]] = {
    "1": lambda L, s: 1,
    "L": lambda L, s: L,
    "L^2": lambda L, s: L * L,
    "1/L": lambda L, s: Fraction(1, L),
    "1/s": lambda L, s: 1 / s,
    "s": lambda L, s: s,
}

# Phase conventions are integer exponent coefficients; "h" is 2^{-1} mod L.
PHASE_FORMS: dict[str, Callable[[int], int]] = {
    "2": lambda L: 2,
    "1": lambda L: 1,
    "-h^2": lambda L: -(((L + 1) // 2) ** 2),
    "h^2": lambda L: ((L + 1) // 2) ** 2,
    "-h": lambda L: -((L + 1) // 2),
    "0": lambda L: 0,
}


@dataclass
class ConstantsTable:
    version: str = TABLE_VERSION
    entries: dict[str, dict] = field(default_factory=dict)

    def form(self, name: str) -> str:
        try:
            return self.entries[name]["form"]
        except KeyError:
            raise ConstantsMismatch(f"constant {name!r} missing from table") from None

    def value(self, name: str, L: int, s: Fraction | int = 1):
        form = self.form(name)
        if form in FORMS:
            return FORMS[form](L, Fraction(s))
        if form in PHASE_FORMS:
            return PHASE_FORMS[form](L)
        raise ConstantsMismatch(f"unknown form {form!r} for {name!r}")

    def checksum(self) -> str:
        payload = json.dumps(
            {k: v["form"] for k, v in sorted(self.entries.items())}, sort_keys=True
        )
        return hashlib.sha256((self.version + payload).encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {"version": self.version, "checksum": self.checksum(), "entries": self.entries}

    @classmethod
    def from_dict(cls, data: dict) -> "ConstantsTable":
        if not isinstance(data, dict) or data.get("version") != TABLE_VERSION:
            found = data.get("version") if isinstance(data, dict) else None
            raise ConstantsMismatch(f"constants table version {found!r}, expected {TABLE_VERSION!r}")
        table = cls(version=data["version"], entries=dict(data.get("entries", {})))
        if data.get("checksum") != table.checksum():
            raise ConstantsMismatch("constants table checksum mismatch (corrupted or edited table)")
        for name, entry in table.entries.items():
            if entry.get("form") not in FORMS and entry.get("form") not in PHASE_FORMS:
                raise ConstantsMismatch(f"constant {name!r} has unknown form {entry.get('form')!r}")
        return table

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")


def default_path() -> Path:
    return Path(str(resources.files("qtfa") / "data" / "constants.json"))


def table_path() -> Path:
    return Path(os.environ.get(ENV_VAR) or default_path())


def read_table(path: str | Path) -> ConstantsTable:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConstantsMismatch(f"cannot read constants table {path}: {exc}") from exc
    return ConstantsTable.from_dict(data)


@lru_cache(maxsize=8)
def _load_cached(path: str) -> ConstantsTable:
    return read_table(path)


def load_table(path: str | Path | None = None) -> ConstantsTable:
    return _load_cached(str(path or table_path()))


def kappa(name: str, L: int, s: Fraction | int = 1):
    """Value of a named constant at order L (and covolume s where relevant)."""
    return load_table().value(name, L, s)
