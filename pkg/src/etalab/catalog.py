"""The embedded group catalog.

Groups ship as ordinary group files inside the package, so built-in and
user-supplied groups travel through one parser.  The index lists ids in the
canonical sweep order used by the verification commands.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import GroupFileError
from .groupfile import parse_group
from .perm import PermGroup

__all__ = ["catalog_ids", "catalog_index", "load_catalog_group", "default_catalog"]

_GROUP_MEMO: dict[str, PermGroup] = {}
_INDEX_MEMO: list | None = None


def _read_text(name: str) -> str:
    ref = resources.files("etalab").joinpath("catalog").joinpath(name)
    try:
        return ref.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError):
        raise GroupFileError(f"catalog resource missing: {name}") from None


def catalog_index() -> list[dict]:
    """Entries of the shipped index: id, order, p, degree, description."""
    global _INDEX_MEMO
    if _INDEX_MEMO is None:
        data = json.loads(_read_text("index.json"))
        if not isinstance(data, dict) or data.get("schema") != 1:
            raise GroupFileError("catalog index has an unexpected layout")
        _INDEX_MEMO = list(data["groups"])
    return list(_INDEX_MEMO)


def catalog_ids() -> list[str]:
    return [entry["id"] for entry in catalog_index()]


def load_catalog_group(gid: str) -> PermGroup:
    """Parse and enumerate one catalog group; repeated loads share objects."""
    hit = _GROUP_MEMO.get(gid)
    if hit is not None:
        return hit
    if gid not in catalog_ids():
        raise GroupFileError(f"unknown catalog group: {gid}")
    group = parse_group(_read_text(f"{gid}.grp"))
    _GROUP_MEMO[gid] = group
    return group


def default_catalog(max_order: int | None = None) -> list[tuple[str, PermGroup]]:
    """(id, group) pairs in index order, optionally capped by order."""
    out = []
    for entry in catalog_index():
        if max_order is not None and entry["order"] > max_order:
            continue
        out.append((entry["id"], load_catalog_group(entry["id"])))
    return out
