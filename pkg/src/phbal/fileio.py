"""Text formats: system files, trajectory CSVs, and reduction reports.

System file format (line-oriented, diffable):

    # optional comments
    kind lti|ph
    matrix A 2 2
    1 0
    0 1
    matrix B 2 1
    ...

LTI files carry matrices A, B, C; PH files carry J, R, H, B. Values are
written with 17 significant digits so write -> parse round-trips exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Union

import numpy as np

from .analysis import Trajectory
from .errors import ParseError
from .sysmodel import LtiSystem, PhSystem, validate_ph

LTI_MATRICES = ("A", "B", "C")
PH_MATRICES = ("J", "R", "H", "B")


@dataclass(frozen=True)
class SystemFile:
    kind: str
    matrices: Dict[str, np.ndarray]
    label: Optional[str] = None

    def to_system(self) -> Union[LtiSystem, PhSystem]:
        if self.kind == "lti":
            return LtiSystem(a=self.matrices["A"], b=self.matrices["B"],
                             c=self.matrices["C"])
        return validate_ph(self.matrices["J"], self.matrices["R"],
                           self.matrices["H"], self.matrices["B"])


def _format_value(x: float) -> str:
    return format(float(x), ".17g")


def format_system(sys: Union[LtiSystem, PhSystem], label: Optional[str] = None) -> str:
    lines = []
    if label:
        lines.append(f"# {label}")
    if isinstance(sys, PhSystem):
        lines.append("kind ph")
        named = [("J", sys.j), ("R", sys.r), ("H", sys.h), ("B", sys.b)]
    else:
        lines.append("kind lti")
        named = [("A", sys.a), ("B", sys.b), ("C", sys.c)]
    for name, mat in named:
        mat = np.atleast_2d(mat)
        lines.append(f"matrix {name} {mat.shape[0]} {mat.shape[1]}")
        for row in mat:
            lines.append(" ".join(_format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def write_system(path: str, sys: Union[LtiSystem, PhSystem],
                 label: Optional[str] = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_system(sys, label))


def parse_system_text(text: str) -> SystemFile:
    kind = None
    matrices: Dict[str, np.ndarray] = {}
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno = i + 1
        raw = lines[i].strip()
        i += 1
        if not raw or raw.startswith("#"):
            continue
        parts = raw.split()
        if parts[0] == "kind":
            if len(parts) != 2 or parts[1] not in ("lti", "ph"):
                raise ParseError(lineno, f"expected 'kind lti|ph', got {raw!r}")
            kind = parts[1]
        elif parts[0] == "matrix":
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'matrix NAME rows cols'")
            name = parts[1]
            try:
                rows, cols = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "matrix dimensions must be integers")
            if rows <= 0 or cols <= 0:
                raise ParseError(lineno, "matrix dimensions must be positive")
            data = np.empty((rows, cols))
            for r in range(rows):
                if i >= len(lines):
                    raise ParseError(len(lines), f"unexpected end of file in matrix {name}")
                row_lineno = i + 1
                row_raw = lines[i].strip()
                i += 1
                entries = row_raw.split()
                if len(entries) != cols:
                    raise ParseError(
                        row_lineno,
                        f"matrix {name} row has {len(entries)} entries, expected {cols}",
                    )
                try:
                    data[r] = [float(v) for v in entries]
                except ValueError as exc:
                    raise ParseError(row_lineno, f"bad number in matrix {name}: {exc}")
            matrices[name] = data
        else:
            raise ParseError(lineno, f"unrecognized directive {parts[0]!r}")
    if kind is None:
        raise ParseError(1, "missing 'kind' directive")
    required = LTI_MATRICES if kind == "lti" else PH_MATRICES
    missing = [name for name in required if name not in matrices]
    if missing:
        raise ParseError(len(lines), f"missing matrices for kind {kind}: {missing}")
    sf = SystemFile(kind=kind, matrices=matrices)
    sf.to_system()  # validates shapes and structure
    return sf


def parse_system(path: str) -> SystemFile:
    with open(path) as fh:
        return parse_system_text(fh.read())


def write_trajectory(path: str, traj: Trajectory) -> None:
    """CSV with header t,u1..um,y1..yq."""
    m = traj.inputs.shape[1]
    q = traj.outputs.shape[1]
    header = ["t"] + [f"u{i+1}" for i in range(m)] + [f"y{i+1}" for i in range(q)]
    data = np.column_stack([traj.times, traj.inputs, traj.outputs])
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in data:
            fh.write(",".join(_format_value(v) for v in row) + "\n")


def format_report(fields: Dict[str, object], lam: np.ndarray) -> str:
    """key=value lines plus a fenced table of the balanced spectrum."""
    lines = [f"{key}={value}" for key, value in fields.items()]
    lines.append("```")
    lines.append("index sigma")
    for i, s in enumerate(np.asarray(lam, dtype=float), start=1):
        lines.append(f"{i} {_format_value(s)}")
    lines.append("```")
    return "\n".join(lines) + "\n"


def write_report(path: str, fields: Dict[str, object], lam: np.ndarray) -> None:
    with open(path, "w") as fh:
        fh.write(format_report(fields, lam))


__all__ = [
    "SystemFile",
    "format_system",
    "write_system",
    "parse_system",
    "parse_system_text",
    "write_trajectory",
    "format_report",
    "write_report",
]
