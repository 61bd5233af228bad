"""JSON (and two-column CSV) readers and writers for the CLI.

Complex numbers are ``[re, im]`` pairs.  Function files look like
``{"values": [[re, im], ...]}`` in rank order, optionally carrying
``"cyclic_orders"``; cylinder files add ``"base"`` and ``"depth"``.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .dual import Character, LaurentCharacter
from .errors import AbharmError, SchemaError
from .group import GroupSpec, check_element, make_group


def is_inline(source: str) -> bool:
    text = source.lstrip()
    return bool(text) and text[0] in "{["


def load_json(source: str):
    """Parse ``source`` as inline JSON if it looks like JSON, else read it as a path.

    Returns ``(obj, path)`` where ``path`` is None for inline JSON.  I/O
    failures surface as :class:`OSError`.
    """
    if is_inline(source):
        path, text = None, source
    else:
        path = source
        text = Path(source).read_text(encoding="utf-8")
    try:
        return json.loads(text), path
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def with_path(exc: AbharmError, path: str | None) -> AbharmError:
    if getattr(exc, "path", None) is None:
        exc.path = path
    return exc


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{what} must be an integer, got {x!r}")
    return x


def spec_from_json(obj) -> GroupSpec:
    if not isinstance(obj, dict) or not isinstance(obj.get("cyclic_orders"), list):
        raise SchemaError('group must be an object {"cyclic_orders": [...]}')
    return make_group([_int(n, "cyclic order") for n in obj["cyclic_orders"]])


def element_from_json(spec: GroupSpec, obj) -> tuple[int, ...]:
    if not isinstance(obj, list):
        raise SchemaError(f"element must be an array of integers, got {obj!r}")
    return check_element(spec, [_int(r, "residue") for r in obj])


def complex_from_json(obj) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if (isinstance(obj, list) and len(obj) == 2
            and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in obj)):
        return complex(obj[0], obj[1])
    raise SchemaError(f"complex number must be [re, im], got {obj!r}")


def values_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
        raise SchemaError('function must be an object {"values": [[re, im], ...]}')
    return np.array([complex_from_json(v) for v in obj["values"]], dtype=complex)


def values_from_csv(path: str) -> np.ndarray:
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), 1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                re_, im = (float(c) for c in row)
            except ValueError:
                if lineno == 1:  # header
                    continue
                raise SchemaError(f"line {lineno}: expected two numeric columns") from None
            out.append(complex(re_, im))
    return np.array(out, dtype=complex)


def support_from_json(obj) -> list[tuple[int, complex]]:
    items = obj.get("support") if isinstance(obj, dict) else obj
    if not isinstance(items, list):
        raise SchemaError('support must be {"support": [[k, [re, im]], ...]}')
    out = []
    for item in items:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"support entry must be [k, [re, im]], got {item!r}")
        out.append((_int(item[0], "support index"), complex_from_json(item[1])))
    return out


def laurent_from_json(obj) -> LaurentCharacter:
    if isinstance(obj, dict):
        return LaurentCharacter(complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0))))
    return LaurentCharacter(complex_from_json(obj))


def parse_base(text: str) -> LaurentCharacter:
    """``"re,im"`` or a bare real."""
    parts = [p.strip() for p in text.split(",")]
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        nums = []
    if len(nums) not in (1, 2):
        raise SchemaError(f'base must be "re,im", got {text!r}')
    return LaurentCharacter(complex(nums[0], nums[1] if len(nums) == 2 else 0.0))


def character_from_json(spec: GroupSpec, obj) -> Character:
    if not isinstance(obj, dict) or not isinstance(obj.get("frequencies"), list):
        raise SchemaError('character must be {"frequencies": [...]}')
    return Character(spec, tuple(_int(t, "frequency") for t in obj["frequencies"]))


def round_float(x: float, precision: int) -> float:
    if not math.isfinite(x):
        raise SchemaError(f"refusing to serialize non-finite value {x!r}")
    y = float(f"{x:.{precision}g}")
    return 0.0 if y == 0 else y


def complex_to_json(z: complex, precision: int) -> list[float]:
    return [round_float(z.real, precision), round_float(z.imag, precision)]


def values_to_json(values: np.ndarray, precision: int) -> list[list[float]]:
    return [complex_to_json(complex(z), precision) for z in values]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"
