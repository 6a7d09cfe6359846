# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Reading and writing combs as JSON documents.

A comb file looks like

.. code-block:: json

    {
      "schema_version": 1,
      "components": [
        {"id": "B", "role": "base", "degrees": [0, 0]},
        {"id": "T1", "role": "tail", "degrees": [0, -1]}
      ],
      "edges": [
        {"parent": "B", "child": "T1", "mode": "general"}
      ]
    }

Edges with ``"mode": "explicit"`` carry a ``"gluing"`` matrix as a list of rows.
"""

import json
from os import PathLike
from pathlib import Path
from typing import Any

from ..exceptions import InvalidInputError
from ..splitcalc import make_split
from ..treebundle import CombSpec, Component, Edge, GluingMode, assemble_comb

__all__ = ["COMB_SCHEMA_VERSION", "comb_from_dict", "comb_to_dict", "read_comb", "write_comb"]

COMB_SCHEMA_VERSION = 1


def comb_to_dict(comb: CombSpec) -> dict[str, Any]:
    """A JSON-compatible view of a comb"""
    edges = []
    for edge in comb.edges:
        entry: dict[str, Any] = {
            "parent": edge.parent,
            "child": edge.child,
            "mode": edge.mode.value,
        }
        if edge.gluing is not None:
            entry["gluing"] = [list(row) for row in edge.gluing]
        edges.append(entry)

    return {
        "schema_version": COMB_SCHEMA_VERSION,
        "components": [
            {"id": c.name, "role": c.role.value, "degrees": list(c.split.degrees)}
            for c in comb.components
        ],
        "edges": edges,
    }


def comb_from_dict(data: dict[str, Any]) -> CombSpec:
    """Builds a comb from its JSON-compatible view.

    Raises:
        InvalidInputError: if the schema version is unsupported, a key is missing, or the
            comb is invalid
    """
    if not isinstance(data, dict):
        raise InvalidInputError(f"A comb document must be a JSON object, got {type(data).__name__}")
    version = data.get("schema_version")
    if version != COMB_SCHEMA_VERSION:
        raise InvalidInputError(f"Unsupported comb schema version {version!r}")

    try:
        components = [
            Component(str(c["id"]), c["role"], make_split(c["degrees"]))
            for c in data["components"]
        ]
        edges = [
            Edge(
                str(e["parent"]),
                str(e["child"]),
                GluingMode(e.get("mode", GluingMode.GENERAL.value)),
                e.get("gluing"),
            )
            for e in data.get("edges", [])
        ]
    except InvalidInputError:
        raise
    except KeyError as err:
        raise InvalidInputError(f"Comb document is missing key {err}") from err
    except (TypeError, ValueError) as err:
        raise InvalidInputError(f"Malformed comb document: {err}") from err

    return assemble_comb(components, edges)


def read_comb(path: str | PathLike) -> CombSpec:
    """Reads a comb file"""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise InvalidInputError(f"{path} is not valid JSON: {err}") from err
    return comb_from_dict(data)


def write_comb(comb: CombSpec, path: str | PathLike):
    """Writes a comb file readable by :func:`read_comb`"""
    Path(path).write_text(json.dumps(comb_to_dict(comb), indent=2) + "\n")
