# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Records of staged normal bundle computations"""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Any

from ..exceptions import InvalidInputError
from ..splitcalc import SplitType
from ..treebundle import CombSpec

__all__ = ["Assumption", "PipelineRecord", "Stage"]


class Assumption(Enum):
    """Geometric inputs a pipeline takes as given rather than computes"""

    TRANSVERSE_UPPER_SUBSPACES = "transverse_upper_subspaces"
    r"""Upper subspaces of the glued components are in general position at the node"""

    RATHMANN_VANISHING = "rathmann_vanishing"
    """The vanishing theorem used to choose general tangent hyperplanes"""

    RESTRICTED_FORMS_GENERAL = "restricted_forms_general"
    """The forms defining the hypersurface restrict to general binary forms on the base curve"""


@dataclass(frozen=True)
class Stage:
    """A labelled intermediate bundle"""

    label: str
    split: SplitType


@dataclass(frozen=True)
class PipelineRecord:
    """The parameters, intermediate bundles and result of a pipeline.

    Args:
        kind: Name of the pipeline

        parameters: Integer parameters, e.g. ``n``, ``e`` and derived quantities. Stored as
            a read-only copy, since records are cached and shared.

        stages: Intermediate bundles in the order they were computed

        predicted: The resulting splitting type

        comb: The comb handed to the smoothing reduction, if any

        assumptions: Granted geometric inputs

        notes: Free-form remarks on degenerate or noteworthy cases
    """

    kind: str
    parameters: Mapping[str, int]
    stages: tuple[Stage, ...]
    predicted: SplitType
    comb: CombSpec | None = None
    assumptions: tuple[Assumption, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parameters", MappingProxyType(dict(self.parameters)))

    def stage(self, label: str) -> SplitType:
        """The bundle recorded under ``label``"""
        for stage in self.stages:
            if stage.label == label:
                return stage.split
        raise InvalidInputError(f"No stage {label!r} in {self.kind} pipeline")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(stage.label for stage in self.stages)

    def to_dict(self) -> dict[str, Any]:
        """A JSON-compatible view of the record"""
        result: dict[str, Any] = {
            "kind": self.kind,
            "parameters": dict(self.parameters),
            "stages": [
                {"label": stage.label, "degrees": list(stage.split.degrees)}
                for stage in self.stages
            ],
            "predicted": list(self.predicted.degrees),
            "balanced": self.predicted.is_balanced,
            "assumptions": [a.value for a in self.assumptions],
            "notes": list(self.notes),
        }
        if self.comb is not None:
            result["comb"] = {
                "base": list(self.comb.base.split.degrees),
                "teeth": len(self.comb.roots),
                "k": self.comb.k,
            }
        return result
