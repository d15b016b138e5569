"""Regenerate the embedded catalog: one .grp file per group plus index.json.

Run from the repository root:

    python3 scripts/build_catalog.py
"""

from __future__ import annotations

import json
from pathlib import Path

from etalab.constructions import (
    cyclic,
    dihedral,
    direct_product,
    extraspecial_exp_p,
    metacyclic,
    prop5_witness,
    quaternion,
    wreath_cp,
)
from etalab.groupfile import format_group

OUT = Path(__file__).resolve().parent.parent / "src" / "etalab" / "catalog"


def build_all():
    return [
        ("c2", "cyclic of order 2", cyclic(2)),
        ("c4", "cyclic of order 4", cyclic(4)),
        ("c8", "cyclic of order 8", cyclic(8)),
        ("c2xc2", "elementary abelian of order 4", direct_product(cyclic(2), cyclic(2))),
        ("c2xc4", "abelian of type (2, 4)", direct_product(cyclic(2), cyclic(4))),
        ("d8", "dihedral of order 8", dihedral(4)),
        ("q8", "quaternion of order 8", quaternion()),
        ("m16", "modular group of order 16", metacyclic(8, 5, 0)),
        ("d16", "dihedral of order 16", dihedral(8)),
        ("q16", "generalized quaternion of order 16", metacyclic(8, -1, 4)),
        ("c4wrc2", "wreath product C4 wr C2, order 32", wreath_cp(cyclic(4), 2)[0]),
        ("w22", "iterated wreath witness, order 2048", prop5_witness(2, 2).group),
        ("c3", "cyclic of order 3", cyclic(3)),
        ("c9", "cyclic of order 9", cyclic(9)),
        ("c3xc3", "elementary abelian of order 9", direct_product(cyclic(3), cyclic(3))),
        ("es27", "extraspecial of order 27, exponent 3", extraspecial_exp_p(3, 1)),
        ("c3wrc3", "wreath product C3 wr C3, order 81", wreath_cp(cyclic(3), 3)[0]),
        ("c5", "cyclic of order 5", cyclic(5)),
        ("c25", "cyclic of order 25", cyclic(25)),
    ]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    index = []
    for gid, desc, group in build_all():
        info = group.p_group_info()
        path = OUT / f"{gid}.grp"
        path.write_text(format_group(group, comment=f"{gid}: {desc}"), encoding="utf-8")
        index.append(
            {
                "id": gid,
                "order": group.order,
                "p": info.p,
                "degree": group.degree,
                "description": desc,
            }
        )
        print(f"wrote {path.name}: order {group.order} on {group.degree} points")
    (OUT / "index.json").write_text(
        json.dumps({"schema": 1, "groups": index}, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote index.json with {len(index)} groups")


if __name__ == "__main__":
    main()
