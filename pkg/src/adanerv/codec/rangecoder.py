"""Static-model arithmetic coding with backend selection.

The compiled kernel (`_coder_cy`, built from Cython) is used when available;
otherwise the pure-Python twin takes over. Set ADANERV_NO_EXT=1 to force the
fallback. Both backends are bit-exact against each other.

The probability model is the empirical symbol histogram with Laplace (+1)
smoothing; the table travels in the bitstream header, so encoder and decoder
always agree.
"""

import os

import numpy as np

from ..errors import BitstreamError
from . import _coder_py

if os.environ.get("ADANERV_NO_EXT"):
    _kernel = _coder_py
    BACKEND = "python"
else:
    try:
        from . import _coder_cy as _kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _kernel = _coder_py
        BACKEND = "python"

MAX_TOTAL = _coder_py.MAX_TOTAL


def frequency_table(symbols: np.ndarray, alphabet_size: int) -> np.ndarray:
    """Laplace-smoothed (+1) symbol counts, shape (alphabet_size,)."""
    symbols = np.asarray(symbols)
    counts = np.bincount(symbols.ravel(), minlength=alphabet_size)
    return (counts + 1).astype(np.uint32)


def _cumulative(freqs: np.ndarray) -> np.ndarray:
    cumul = np.zeros(len(freqs) + 1, dtype=np.uint64)
    np.cumsum(freqs, out=cumul[1:])
    if int(cumul[-1]) > MAX_TOTAL:
        raise BitstreamError(f"frequency total {int(cumul[-1])} too large")
    return cumul


def arith_encode(
    symbols: np.ndarray, alphabet_size: int
) -> tuple[bytes, np.ndarray]:
    """Encode an integer stream; returns (payload, frequency table)."""
    symbols = np.ascontiguousarray(symbols, dtype=np.uint32)
    if symbols.size and (symbols.min() < 0 or symbols.max() >= alphabet_size):
        raise BitstreamError(
            f"symbol out of range for alphabet of {alphabet_size}"
        )
    freqs = frequency_table(symbols, alphabet_size)
    payload = _kernel.encode(symbols, _cumulative(freqs))
    return payload, freqs


def arith_decode(payload: bytes, freqs: np.ndarray, length: int) -> np.ndarray:
    """Decode `length` symbols coded against `freqs`."""
    return np.asarray(
        _kernel.decode(payload, _cumulative(np.asarray(freqs)), length)
    )
