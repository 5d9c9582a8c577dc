# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import hashlib, json, logging
from locale import gettext as _
from pathlib import Path
from typing import Any

import numpy as np

from trajstat.errors import ParseError, ValidationError
from .lindblad_model import LindbladModel

_logger = logging.getLogger(__name__)


def _complex_array(entry: Any, ndim: int, where: str) -> np.ndarray:
    """Decode a ``{"re": ..., "im": ...}`` pair into a complex array."""

    if not isinstance(entry, dict) or "re" not in entry:
        raise ParseError(_("%s must be an object with 're' and 'im'") % where)

    try:
        real = np.asarray(entry["re"], dtype=float)
        imag = np.asarray(entry.get("im", np.zeros_like(real)), dtype=float)
    except (TypeError, ValueError) as e:
        raise ParseError(_("%s holds non numeric values: %s") % (where, e))

    if real.ndim != ndim or real.shape != imag.shape:
        raise ParseError(_("%s has inconsistent shapes") % where)

    return real + 1j * imag


def _encode_array(array: np.ndarray) -> dict:
    return {"re": np.real(array).tolist(), "im": np.imag(array).tolist()}


def model_from_dict(data: dict, name: str = "model") -> LindbladModel:
    """Build a validated model from its JSON document.

    Raises:
        ParseError: If the document does not follow the model schema.
        ValidationError: If the decoded model breaks an invariant.
    """

    if not isinstance(data, dict):
        raise ParseError(_("Model document must be a JSON object"))

    for key in ("dim", "hamiltonian", "jumps", "initial_state"):
        if key not in data:
            raise ParseError(_("Missing model field: %s") % key)

    dim = data["dim"]

    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(_("Field 'dim' must be a positive integer"))

    hamiltonian = _complex_array(data["hamiltonian"], 2, "hamiltonian")
    psi = _complex_array(data["initial_state"], 1, "initial_state")

    if hamiltonian.shape != (dim, dim) or psi.shape != (dim,):
        raise ParseError(_("Declared dimension %d does not match arrays") % dim)

    if not isinstance(data["jumps"], list) or not data["jumps"]:
        raise ParseError(_("Field 'jumps' must be a non empty list"))

    jumps, spins = [], []

    for index, entry in enumerate(data["jumps"]):
        where = f"jumps[{index}]"
        jump = _complex_array(entry, 2, where)

        if jump.shape != (dim, dim):
            raise ParseError(_("%s does not match the dimension") % where)

        spin = entry.get("spin", [])

        if not isinstance(spin, list):
            raise ParseError(_("%s spin must be a list of reals") % where)

        try:
            spins.append([float(value) for value in spin])
        except (TypeError, ValueError):
            raise ParseError(_("%s spin must be a list of reals") % where)

        jumps.append(jump)

    if len({len(spin) for spin in spins}) != 1:
        raise ValidationError(_("Spin labels must share one length"))

    spins = np.asarray(spins, dtype=float)
    model_name = data.get("name", name)

    return LindbladModel(hamiltonian, tuple(jumps), spins, psi, model_name)


def model_to_dict(model: LindbladModel) -> dict:
    """Encode a model with the JSON schema of the model files."""

    return {
        "name": model.name,
        "dim": model.dim,
        "hamiltonian": _encode_array(model.hamiltonian),
        "jumps": [
            dict(_encode_array(jump), spin=model.spins[index].tolist())
            for index, jump in enumerate(model.jumps)
        ],
        "initial_state": _encode_array(model.initial_state),
    }


def load_model(path: str | Path) -> LindbladModel:
    """Load and validate a model file.

    Raises:
        OSError: If the file cannot be read.
        ParseError: If it is not valid JSON or misses schema fields.
        ValidationError: If the model breaks a physical invariant.
    """

    path = Path(path)

    with path.open('r') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(_("Malformed model file %s: %s") % (path, e))

    model = model_from_dict(data, name=path.stem)
    _logger.debug("Loaded model %s from %s", model.name, path)

    return model


def save_model(model: LindbladModel, path: str | Path) -> None:
    """Write a model file."""

    with Path(path).open('w') as f:
        json.dump(model_to_dict(model), f, indent=4)


def model_hash(model: LindbladModel) -> str:
    """SHA-256 digest of the canonical encoding of a model."""

    document = model_to_dict(model)
    document.pop("name")
    normalized = json.dumps(document, sort_keys=True, separators=(",", ":"))

    return hashlib.sha256(normalized.encode("utf-8")).hexdigest()
