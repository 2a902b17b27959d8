"""Pure-Python arithmetic coding kernel.

Integer coder with 32-bit state and carry handling via pending underflow
bits. `_coder_cy.pyx` is a transliteration of this file; the two backends
must produce byte-identical output.
"""

import numpy as np

STATE_BITS = 32
MASK = (1 << STATE_BITS) - 1
TOP = 1 << (STATE_BITS - 1)
SECOND = TOP >> 1
# range never drops below this; caps the frequency-table total
MAX_TOTAL = (MASK >> 2) + 2


def encode(symbols, cumul) -> bytes:
    """Encode symbols against a cumulative frequency table.

    cumul has alphabet_size + 1 entries, cumul[0] == 0, cumul[-1] == total.
    Every symbol must have nonzero width in the table.
    """
    total = int(cumul[-1])
    if total > MAX_TOTAL:
        raise ValueError(f"frequency total {total} exceeds {MAX_TOTAL}")
    n = len(symbols)
    if n == 0:
        return b""

    out = bytearray()
    bitbuf = 0
    nbits = 0
    low = 0
    high = MASK
    underflow = 0

    for i in range(n):
        s = int(symbols[i])
        span = high - low + 1
        sym_lo = int(cumul[s])
        sym_hi = int(cumul[s + 1])
        high = low + sym_hi * span // total - 1
        low = low + sym_lo * span // total

        while ((low ^ high) & TOP) == 0:
            bit = low >> (STATE_BITS - 1)
            bitbuf = (bitbuf << 1) | bit
            nbits += 1
            if nbits == 8:
                out.append(bitbuf)
                bitbuf = 0
                nbits = 0
            inv = bit ^ 1
            while underflow > 0:
                bitbuf = (bitbuf << 1) | inv
                nbits += 1
                if nbits == 8:
                    out.append(bitbuf)
                    bitbuf = 0
                    nbits = 0
                underflow -= 1
            low = (low << 1) & MASK
            high = ((high << 1) & MASK) | 1

        while (low & ~high & SECOND) != 0:
            underflow += 1
            low = (low << 1) & (MASK >> 1)
            high = ((high << 1) & (MASK >> 1)) | TOP | 1

    # one disambiguating bit; the decoder pads with zeros
    bitbuf = (bitbuf << 1) | 1
    nbits += 1
    bitbuf <<= 8 - nbits
    out.append(bitbuf & 0xFF)
    return bytes(out)


def decode(data: bytes, cumul, n: int) -> np.ndarray:
    """Exact inverse of encode for the same table and symbol count."""
    total = int(cumul[-1])
    if total > MAX_TOTAL:
        raise ValueError(f"frequency total {total} exceeds {MAX_TOTAL}")
    out = np.empty(n, dtype=np.uint32)
    if n == 0:
        return out

    alphabet = len(cumul) - 1
    nbytes = len(data)
    pos = 0  # next bit index

    code = 0
    for _ in range(STATE_BITS):
        bit = (data[pos >> 3] >> (7 - (pos & 7))) & 1 if (pos >> 3) < nbytes else 0
        pos += 1
        code = (code << 1) | bit

    low = 0
    high = MASK
    for i in range(n):
        span = high - low + 1
        offset = code - low
        value = ((offset + 1) * total - 1) // span

        # highest s with cumul[s] <= value
        lo_idx = 0
        hi_idx = alphabet
        while hi_idx - lo_idx > 1:
            mid = (lo_idx + hi_idx) >> 1
            if int(cumul[mid]) > value:
                hi_idx = mid
            else:
                lo_idx = mid
        s = lo_idx
        out[i] = s

        sym_lo = int(cumul[s])
        sym_hi = int(cumul[s + 1])
        high = low + sym_hi * span // total - 1
        low = low + sym_lo * span // total

        while ((low ^ high) & TOP) == 0:
            bit = (data[pos >> 3] >> (7 - (pos & 7))) & 1 if (pos >> 3) < nbytes else 0
            pos += 1
            code = ((code << 1) & MASK) | bit
            low = (low << 1) & MASK
            high = ((high << 1) & MASK) | 1

        while (low & ~high & SECOND) != 0:
            bit = (data[pos >> 3] >> (7 - (pos & 7))) & 1 if (pos >> 3) < nbytes else 0
            pos += 1
            code = (code & TOP) | ((code << 1) & (MASK >> 1)) | bit
            low = (low << 1) & (MASK >> 1)
            high = ((high << 1) & (MASK >> 1)) | TOP | 1

    return out
