"""PGM (P2/P5) images, kernel text files and atomic file writes."""
import os
import tempfile
import warnings

import numpy as np

from .errors import KernelFormatError, PgmFormatError, TrailingDataWarning, UnsupportedFormatError
from .kernel import Kernel
from .pipeline import as_gray

_WS = b" \t\n\r\v\f"


class _HeaderReader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 2

    def token(self, name: str) -> int:
        data, n = self.data, len(self.data)
        while self.pos < n:
            ch = data[self.pos : self.pos + 1]
            if ch in _WS and ch:
                self.pos += 1
            elif ch == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = n if end < 0 else end + 1
            else:
                break
        start = self.pos
        while self.pos < n and data[self.pos : self.pos + 1] not in _WS and data[self.pos : self.pos + 1] != b"#":
            self.pos += 1
        tok = data[start : self.pos]
        if not tok:
            raise PgmFormatError(f"{name}: missing (truncated header at byte {start})")
        if not tok.isdigit():
            raise PgmFormatError(f"{name}: expected a decimal integer, got {tok[:16]!r} at byte {start}")
        return int(tok)


def read_pgm(data: bytes) -> np.ndarray:
    """Decode a P2 or P5 graymap into a (height, width) uint8 array.

    Samples are used as stored; a maxval below 255 is accepted without rescaling.
    """
    magic = data[:2]
    if magic in (b"P1", b"P3", b"P4", b"P6", b"P7"):
        raise UnsupportedFormatError(f"magic: unsupported format {magic.decode()} at byte 0 (only P2/P5 graymaps)")
    if magic not in (b"P2", b"P5"):
        raise PgmFormatError(f"magic: expected P2 or P5, got {magic!r} at byte 0")
    header = _HeaderReader(data)
    width = header.token("width")
    height = header.token("height")
    maxval = header.token("maxval")
    for name, value in (("width", width), ("height", height)):
        if value == 0:
            raise PgmFormatError(f"{name}: must be positive, got 0")
    if not 1 <= maxval <= 255:
        raise PgmFormatError(f"maxval: must be in [1, 255], got {maxval}")
    if header.pos >= len(data) or data[header.pos : header.pos + 1] not in _WS:
        raise PgmFormatError(f"maxval: missing whitespace before pixel data at byte {header.pos}")
    offset = header.pos + 1
    count = width * height
    if magic == b"P5":
        body = data[offset : offset + count]
        if len(body) < count:
            raise PgmFormatError(f"pixels: expected {count} bytes, got {len(body)} (truncated at byte {offset + len(body)})")
        pixels = np.frombuffer(body, dtype=np.uint8).copy()
        extra = len(data) - offset - count
    else:
        tokens = data[offset:].split()
        if len(tokens) < count:
            raise PgmFormatError(f"pixels: expected {count} samples, got {len(tokens)} (truncated data after byte {offset})")
        try:
            pixels = np.array([int(t) for t in tokens[:count]], dtype=np.int64)
        except ValueError:
            raise PgmFormatError(f"pixels: non-numeric sample in data after byte {offset}") from None
        extra = len(tokens) - count
    if pixels.max() > maxval:
        raise PgmFormatError(f"pixels: sample {int(pixels.max())} exceeds maxval {maxval}")
    if extra > 0:
        warnings.warn(f"ignoring {extra} trailing {'bytes' if magic == b'P5' else 'samples'} after pixel data", TrailingDataWarning, stacklevel=2)
    return pixels.astype(np.uint8).reshape(height, width)


def write_pgm(image, variant: str = "P5") -> bytes:
    """Encode a gray image (or a boolean edge map, True -> 255) as PGM."""
    arr = np.asarray(image)
    if arr.dtype == bool:
        arr = edges_to_image(arr)
    arr = as_gray(arr)
    height, width = arr.shape
    if variant == "P5":
        return f"P5\n{width} {height}\n255\n".encode() + arr.tobytes()
    if variant == "P2":
        rows = "\n".join(" ".join(str(v) for v in row) for row in arr.tolist())
        return f"P2\n{width} {height}\n255\n{rows}\n".encode()
    raise UnsupportedFormatError(f"unknown PGM variant {variant!r}")


def edges_to_image(edges) -> np.ndarray:
    return np.where(np.asarray(edges, dtype=bool), 255, 0).astype(np.uint8)


def image_to_edges(image) -> np.ndarray:
    return np.asarray(image) > 0


def write_kernel_text(kernel: Kernel) -> bytes:
    lines = [f"# kind {kernel.kind}", f"# normalized {'true' if kernel.normalized else 'false'}"]
    lines += [f"# {m}" for m in kernel.metadata]
    lines.append(f"size {kernel.size}")
    lines += [" ".join(f"{v:.9g}" for v in row) for row in kernel.coefficients.tolist()]
    return ("\n".join(lines) + "\n").encode()


def read_kernel_text(data: bytes) -> Kernel:
    kind, normalized, metadata = None, False, []
    size, rows = None, []
    for lineno, raw in enumerate(data.decode().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, _, value = body.partition(" ")
            if key == "kind" and kind is None:
                kind = value.strip()
            elif key == "normalized":
                normalized = value.strip().lower() == "true"
            else:
                metadata.append(body)
            continue
        if size is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "size" or not parts[1].isdigit() or int(parts[1]) < 1:
                raise KernelFormatError(f"line {lineno}: expected 'size N', got {line!r}")
            size = int(parts[1])
            continue
        values = line.split()
        if len(values) != size:
            raise KernelFormatError(f"line {lineno}: row has {len(values)} entries, expected {size}")
        try:
            rows.append([float(v) for v in values])
        except ValueError:
            raise KernelFormatError(f"line {lineno}: non-numeric coefficient") from None
    if size is None:
        raise KernelFormatError("missing 'size N' line")
    if len(rows) != size:
        raise KernelFormatError(f"expected {size} rows, got {len(rows)}")
    if kind is None:
        raise KernelFormatError("missing '# kind' metadata line")
    try:
        return Kernel(np.array(rows), kind, normalized, tuple(metadata))
    except ValueError as exc:
        raise KernelFormatError(str(exc)) from None


def atomic_write(path, data: bytes):
    """Write via a temporary file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())
