"""NLW3 binary snapshots of a full field level.

Layout (little-endian): magic "NLW3", u32 version, three u32 dims,
f64 dx, dy, dz, t, then the row-major f64 payload of prod(dims) values.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import numpy.typing as npt

from ...domain.exceptions import ContractError, SimulationError
from .csv_writer import format_value

logger = logging.getLogger(__name__)

MAGIC = b"NLW3"
VERSION = 1

HEADER_DTYPE = np.dtype(
    [
        ("magic", "S4"),
        ("version", "<u4"),
        ("dims", "<u4", (3,)),
        ("steps", "<f8", (3,)),
        ("t", "<f8"),
    ]
)


@dataclass(frozen=True)
class SnapshotHeader:
    """Header fields of an NLW3 file."""

    dims: tuple[int, int, int]
    dx: float
    dy: float
    dz: float
    t: float
    version: int = VERSION

    @property
    def count(self) -> int:
        return int(np.prod(self.dims))


def write_snapshot(
    path: Path, level: npt.NDArray[np.float64], steps: tuple[float, float, float], t: float
) -> Path:
    """Write a 3D level with its grid steps and time."""
    if level.ndim != 3:
        raise ContractError(f"Snapshot level must be 3D, got shape {level.shape}")
    header = np.zeros(1, dtype=HEADER_DTYPE)
    header["magic"] = MAGIC
    header["version"] = VERSION
    header["dims"] = level.shape
    header["steps"] = steps
    header["t"] = t

    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("wb") as f:
            f.write(header.tobytes())
            f.write(np.ascontiguousarray(level, dtype="<f8").tobytes())
    except OSError as e:
        raise SimulationError(f"Cannot write snapshot {path}: {e}") from e
    logger.debug("Snapshot written", extra={"path": str(path), "t": t})
    return path


def read_snapshot(path: Path) -> tuple[SnapshotHeader, npt.NDArray[np.float64]]:
    """Read and verify an NLW3 file.

    Raises:
        SimulationError: On I/O failure, wrong magic or a truncated payload
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise SimulationError(f"Cannot read snapshot {path}: {e}") from e

    if len(raw) < HEADER_DTYPE.itemsize:
        raise SimulationError(f"{path} is too short for an NLW3 header")
    fields = np.frombuffer(raw[: HEADER_DTYPE.itemsize], dtype=HEADER_DTYPE)[0]
    if bytes(fields["magic"]) != MAGIC:
        raise SimulationError(f"{path} is not an NLW3 snapshot")

    dims = tuple(int(d) for d in fields["dims"])
    dx, dy, dz = (float(s) for s in fields["steps"])
    header = SnapshotHeader(
        dims=(dims[0], dims[1], dims[2]),
        dx=dx,
        dy=dy,
        dz=dz,
        t=float(fields["t"]),
        version=int(fields["version"]),
    )

    payload = raw[HEADER_DTYPE.itemsize :]
    expected = header.count * 8
    if len(payload) != expected:
        raise SimulationError(
            f"{path} payload has {len(payload)} bytes, expected {expected} for dims {dims}"
        )
    values = np.frombuffer(payload, dtype="<f8").astype(np.float64).reshape(header.dims)
    return header, values


def dump_slice_csv(
    snapshot_path: Path, out_path: Path, axis: int = 2, index: int | None = None
) -> Path:
    """Write one plane of a snapshot as CSV rows (i, j, value).

    ``index`` defaults to the first interior layer along ``axis``.
    """
    header, values = read_snapshot(snapshot_path)
    if not 0 <= axis <= 2:
        raise SimulationError(f"Slice axis must be 0, 1 or 2, got {axis}")
    layer = 1 if index is None else index
    if not 0 <= layer < header.dims[axis]:
        raise SimulationError(f"Slice index {layer} outside [0, {header.dims[axis] - 1}]")

    plane = np.take(values, layer, axis=axis)
    out_path = Path(out_path)
    try:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with out_path.open("w", encoding="utf-8") as f:
            f.write("i,j,value\n")
            for (i, j), value in np.ndenumerate(plane):
                f.write(f"{i},{j},{format_value(float(value))}\n")
    except OSError as e:
        raise SimulationError(f"Cannot write {out_path}: {e}") from e
    return out_path
