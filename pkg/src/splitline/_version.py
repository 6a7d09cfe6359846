# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import importlib.metadata

__version__ = importlib.metadata.version("splitline")

__all__ = ["__version__"]
