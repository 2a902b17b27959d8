"""Video sequence loading, saving, and deterministic synthetic content.

Frames are stored as float32 arrays of shape (T, H, W, 3) with intensities in
[0, 1]. Normalization divides by (2^bit_depth - 1) so the endpoints 0 and 1
are exact; the quantize-on-save rounding is half away from zero, matching the
parameter quantizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image
from scipy import ndimage

from .errors import VideoIOError
from .utils import round_half_away

SYNTHETIC_KINDS = (
    "static_texture",
    "moving_square",
    "brightness_drift",
    "scene_cut",
    "text_overlay",
)


@dataclass
class VideoSequence:
    frames: np.ndarray  # (T, H, W, 3) float32 in [0, 1]
    name: str = ""
    source_bit_depth: int = 8

    def __post_init__(self):
        self.frames = np.asarray(self.frames, dtype=np.float32)
        if self.frames.ndim != 4 or self.frames.shape[-1] != 3:
            raise VideoIOError(
                f"frames must be (T, H, W, 3), got {self.frames.shape}"
            )
        if self.frames.shape[0] < 1:
            raise VideoIOError("sequence needs at least one frame")
        lo, hi = float(self.frames.min()), float(self.frames.max())
        if lo < 0.0 or hi > 1.0:
            raise VideoIOError(f"intensities outside [0, 1]: [{lo}, {hi}]")

    @property
    def num_frames(self) -> int:
        return self.frames.shape[0]

    @property
    def height(self) -> int:
        return self.frames.shape[1]

    @property
    def width(self) -> int:
        return self.frames.shape[2]


@dataclass(frozen=True)
class SyntheticSpec:
    kind: str
    num_frames: int = 8
    height: int = 64
    width: int = 64
    seed: int = 0
    magnitude: float = 0.03  # motion step (pixels) or drift per frame

    def __post_init__(self):
        if self.kind not in SYNTHETIC_KINDS:
            raise VideoIOError(f"unsupported synthetic kind: {self.kind!r}")
        if self.num_frames < 1 or self.height < 1 or self.width < 1:
            raise VideoIOError("synthetic dimensions must be positive")


def _to_uint(frames: np.ndarray, bit_depth: int) -> np.ndarray:
    peak = (1 << bit_depth) - 1
    codes = round_half_away(frames.astype(np.float64) * peak)
    return np.clip(codes, 0, peak).astype(np.uint16 if bit_depth > 8 else np.uint8)


def load_sequence(
    path: str | Path,
    layout: str = "png_dir",
    *,
    width: int | None = None,
    height: int | None = None,
    num_frames: int | None = None,
    bit_depth: int = 8,
) -> VideoSequence:
    """Load a sequence from a PNG directory or a packed raw RGB24 file.

    png_dir reads ``*.png`` in lexicographic order; raw_rgb24 needs the
    sidecar dimensions (width/height/num_frames flags).
    """
    path = Path(path)
    if not path.exists():
        raise VideoIOError(f"no such path: {path}")
    peak = float((1 << bit_depth) - 1)

    if layout == "png_dir":
        files = sorted(path.glob("*.png"))
        if not files:
            raise VideoIOError(f"no PNG frames in {path}")
        frames = []
        for f in files:
            arr = np.asarray(Image.open(f).convert("RGB"))
            if frames and arr.shape != frames[0].shape:
                raise VideoIOError(
                    f"inconsistent frame size: {f.name} is {arr.shape[:2]}, "
                    f"expected {frames[0].shape[:2]}"
                )
            frames.append(arr)
        data = np.stack(frames).astype(np.float32) / peak
        return VideoSequence(data, name=path.name, source_bit_depth=bit_depth)

    if layout == "raw_rgb24":
        if width is None or height is None:
            raise VideoIOError("raw_rgb24 requires width and height")
        raw = path.read_bytes()
        frame_bytes = width * height * 3
        if num_frames is None:
            num_frames = len(raw) // frame_bytes
        if num_frames < 1 or len(raw) < num_frames * frame_bytes:
            raise VideoIOError(
                f"truncated raw file: {len(raw)} bytes, need "
                f"{max(num_frames, 1) * frame_bytes}"
            )
        data = np.frombuffer(
            raw[: num_frames * frame_bytes], dtype=np.uint8
        ).reshape(num_frames, height, width, 3)
        return VideoSequence(
            data.astype(np.float32) / 255.0, name=path.stem, source_bit_depth=8
        )

    raise VideoIOError(f"unsupported layout: {layout!r}")


def save_frames(
    seq: VideoSequence, path: str | Path, layout: str = "png_dir"
) -> None:
    """Write frames as zero-padded frame_%04d.png or a packed raw file."""
    path = Path(path)
    codes = _to_uint(seq.frames, seq.source_bit_depth)
    if layout == "png_dir":
        path.mkdir(parents=True, exist_ok=True)
        for t in range(seq.num_frames):
            Image.fromarray(codes[t].astype(np.uint8), mode="RGB").save(
                path / f"frame_{t:04d}.png"
            )
    elif layout == "raw_rgb24":
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(codes.astype(np.uint8).tobytes())
    else:
        raise VideoIOError(f"unsupported layout: {layout!r}")


def _smooth_texture(rng: np.random.Generator, h: int, w: int) -> np.ndarray:
    """Low-frequency random texture in [0.05, 0.95], shape (h, w, 3)."""
    ch, cw = max(2, h // 8), max(2, w // 8)
    coarse = rng.uniform(0.05, 0.95, size=(ch, cw, 3))
    tex = ndimage.zoom(coarse, (h / ch, w / cw, 1), order=1, grid_mode=True,
                       mode="nearest")
    return np.clip(tex[:h, :w], 0.0, 1.0)


def square_position(spec: SyntheticSpec, t: int) -> tuple[int, int, int]:
    """Closed-form placement rule for the moving_square kind: (y, x, side)."""
    s = max(4, min(spec.height, spec.width) // 8)
    step = max(1, int(round(spec.magnitude)))
    rng = np.random.default_rng(spec.seed)
    y0 = int(rng.integers(0, spec.height - s + 1))
    x0 = int(rng.integers(0, spec.width - s + 1))
    y = (y0 + t * step) % (spec.height - s + 1)
    x = (x0 + t * step) % (spec.width - s + 1)
    return y, x, s


def generate_synthetic(spec: SyntheticSpec) -> VideoSequence:
    """Deterministic test content; frame data is a pure function of the spec."""
    rng = np.random.default_rng(spec.seed)
    T, H, W = spec.num_frames, spec.height, spec.width
    name = f"{spec.kind}_s{spec.seed}"

    if spec.kind == "static_texture":
        tex = _smooth_texture(rng, H, W)
        frames = np.repeat(tex[None], T, axis=0)

    elif spec.kind == "moving_square":
        bg = rng.uniform(0.0, 1.0, size=3)
        fg = (bg + 0.5) % 1.0
        frames = np.empty((T, H, W, 3), dtype=np.float64)
        frames[:] = bg
        for t in range(T):
            y, x, s = square_position(spec, t)
            frames[t, y : y + s, x : x + s] = fg

    elif spec.kind == "brightness_drift":
        base = _smooth_texture(rng, H, W)
        offsets = spec.magnitude * np.arange(T)
        frames = np.clip(base[None] + offsets[:, None, None, None], 0.0, 1.0)

    elif spec.kind == "scene_cut":
        tex_a = _smooth_texture(rng, H, W)
        tex_b = _smooth_texture(rng, H, W)
        frames = np.empty((T, H, W, 3), dtype=np.float64)
        frames[: T // 2] = tex_a if T > 1 else tex_b
        frames[T // 2 :] = tex_b

    elif spec.kind == "text_overlay":
        base = _smooth_texture(rng, H, W)
        # blocky glyph strips: high-contrast screen-content stand-in
        n_strips = max(1, H // 16)
        for i in range(n_strips):
            y = int(rng.integers(0, max(1, H - 8)))
            x = int(rng.integers(0, max(1, W // 2)))
            w = int(rng.integers(W // 4, W - x))
            strip = base[y : y + 8, x : x + w]
            strip[:] = 0.95
            bits = rng.random((4, max(1, w // 2))) > 0.5
            glyph = np.kron(bits, np.ones((2, 2), dtype=bool))[: 8, :w]
            strip[: glyph.shape[0], : glyph.shape[1]][glyph] = 0.05
        frames = np.repeat(base[None], T, axis=0)

    else:  # pragma: no cover - guarded by SyntheticSpec
        raise VideoIOError(f"unsupported synthetic kind: {spec.kind!r}")

    return VideoSequence(frames.astype(np.float32), name=name)
