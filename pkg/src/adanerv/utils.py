"""Small shared helpers."""

import hashlib
from pathlib import Path

import numpy as np


def round_half_away(x: np.ndarray | float) -> np.ndarray | float:
    """Round to nearest integer, halves away from zero.

    The single rounding convention used repo-wide (quantizer, frame export).
    """
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def sha256_of_file(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def sha256_of_path(path: str | Path) -> str:
    """Hash a file, or a directory's files in sorted order (names + bytes)."""
    p = Path(path)
    if p.is_file():
        return sha256_of_file(p)
    h = hashlib.sha256()
    for f in sorted(p.rglob("*")):
        if f.is_file():
            h.update(f.name.encode())
            h.update(bytes.fromhex(sha256_of_file(f)))
    return h.hexdigest()


def rgb_to_gray(frame: np.ndarray) -> np.ndarray:
    """H x W x 3 -> H x W using the standard luma weights."""
    return (
        0.299 * frame[..., 0] + 0.587 * frame[..., 1] + 0.114 * frame[..., 2]
    )
