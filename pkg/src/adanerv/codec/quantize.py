"""Per-tensor min-max affine quantization.

dequantized = offset + code * scale, with offset = min, scale spanning the
range over 2^bits - 1 levels. Rounding is half away from zero. A degenerate
(constant) tensor gets scale 0 and all-zero codes, which dequantizes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BitstreamError
from ..utils import round_half_away


@dataclass
class QuantizedTensor:
    codes: np.ndarray  # integer codes in [0, 2^bits - 1]
    scale: float
    offset: float
    bits: int
    shape: tuple[int, ...]
    tensor_id: str = ""

    @property
    def num_values(self) -> int:
        return int(np.prod(self.shape, dtype=np.int64)) if self.shape else 1


def quantize_tensor(
    values: np.ndarray,
    bits: int = 6,
    tensor_id: str = "",
    value_range: tuple[float, float] | None = None,
) -> QuantizedTensor:
    """Quantize a float tensor; `value_range` supplies frozen post-QAT bounds."""
    values = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise BitstreamError(f"non-finite values in tensor {tensor_id!r}")
    if not 2 <= bits <= 16:
        raise BitstreamError(f"bits must be in [2, 16], got {bits}")

    if value_range is None:
        lo = float(values.min()) if values.size else 0.0
        hi = float(values.max()) if values.size else 0.0
    else:
        lo, hi = float(value_range[0]), float(value_range[1])
    levels = (1 << bits) - 1

    if hi <= lo:
        scale = 0.0
        codes = np.zeros(values.shape, dtype=np.uint16)
    else:
        scale = (hi - lo) / levels
        codes = round_half_away((values - lo) / scale)
        codes = np.clip(codes, 0, levels).astype(np.uint16)

    return QuantizedTensor(
        codes=codes,
        scale=scale,
        offset=lo,
        bits=bits,
        shape=tuple(values.shape),
        tensor_id=tensor_id,
    )


def dequantize_tensor(q: QuantizedTensor, dtype=np.float32) -> np.ndarray:
    return (q.offset + q.codes.astype(np.float64) * q.scale).astype(dtype)
