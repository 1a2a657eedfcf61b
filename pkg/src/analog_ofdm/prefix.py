"""Cyclic and zero-padding prefixes, and the discard-prefix circular-convolution check."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .channel import apply_discrete
from .errors import InvalidArgumentError, PrefixLemmaError
from .signal_core import as_complex, circular_convolve


class PrefixKind(enum.Enum):
    CP = "CP"
    ZP = "ZP"
    NONE = "NONE"


@dataclass(frozen=True, eq=False)
class PrefixedBlock:
    samples: np.ndarray
    prefix_kind: PrefixKind
    L: int
    N: int

    def __post_init__(self):
        arr = as_complex(self.samples, "samples")
        if arr.size != self.N + self.L:
            raise InvalidArgumentError("samples length must be N + L")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def payload(self) -> np.ndarray:
        return self.samples[self.L :]


def _check_L(L):
    if int(L) != L or L < 0:
        raise InvalidArgumentError(f"prefix length must be an integer >= 0, got {L!r}")
    return int(L)


def add_cp(payload, L: int) -> PrefixedBlock:
    """Prepend the last ``L`` samples, so ``out[n + L] = x[n mod N]`` for ``-L <= n < N``."""
    x = as_complex(payload, "payload")
    L = _check_L(L)
    if L > x.size:
        raise InvalidArgumentError(f"cyclic prefix length {L} exceeds block length {x.size}")
    return PrefixedBlock(np.concatenate([x[x.size - L :], x]), PrefixKind.CP, L, x.size)


def add_zp(payload, L: int) -> PrefixedBlock:
    """Prepend ``L`` zeros."""
    x = as_complex(payload, "payload")
    L = _check_L(L)
    return PrefixedBlock(np.concatenate([np.zeros(L, dtype=np.complex128), x]), PrefixKind.ZP, L, x.size)


def add_prefix(payload, L: int, kind: PrefixKind) -> PrefixedBlock:
    kind = PrefixKind(kind)
    if kind is PrefixKind.CP:
        return add_cp(payload, L)
    if kind is PrefixKind.ZP:
        return add_zp(payload, L)
    x = as_complex(payload, "payload")
    if L:
        raise InvalidArgumentError("prefix kind NONE requires L = 0")
    return PrefixedBlock(x, PrefixKind.NONE, 0, x.size)


def remove_prefix(received, L: int, N: int) -> np.ndarray:
    """Discard the first ``L`` samples and return the next ``N``."""
    y = as_complex(received, "received")
    L = _check_L(L)
    if y.size < N + L:
        raise InvalidArgumentError(f"received length {y.size} shorter than N + L = {N + L}")
    return y[L : L + N].copy()


def equivalent_circular_channel(payload, h, kind: PrefixKind, check: bool = True, atol: float = 1e-12) -> np.ndarray:
    """Send one prefixed block through ``h``, discard the prefix, and return the payload.

    The prefix length equals ``len(h)``. With ``check`` the result is compared
    against ``circular_convolve(payload, h)`` and :class:`PrefixLemmaError`
    is raised when they differ by more than ``atol`` (relative to the peak
    magnitude). The channel starts silent, so only this block is on the air.
    """
    x = as_complex(payload, "payload")
    h = as_complex(h, "h")
    if h.size > x.size:
        raise InvalidArgumentError(f"channel length {h.size} exceeds block length {x.size}")
    block = add_prefix(x, h.size, kind)
    out = remove_prefix(apply_discrete(block.samples, h), h.size, x.size)
    if check:
        ref = circular_convolve(x, h)
        scale = max(1.0, float(np.max(np.abs(ref))))
        err = float(np.max(np.abs(out - ref)))
        if err > atol * scale:
            raise PrefixLemmaError(
                f"{PrefixKind(kind).value}: discard-prefix output differs from circular "
                f"convolution by {err:.3g}"
            )
    return out
