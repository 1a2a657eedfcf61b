"""Conventional and RTFT-based analog OFDM simulation."""

from ._backend import BACKEND
from .channel import ChannelRealization, RicianSpec, apply_continuous, apply_discrete, rice_pdf, sample_channel
from .conventional import demodulate_discrete, modulate_continuous, modulate_discrete, spectrum
from .design import OfdmProfile, Phi1Case, Phi2Sign, feasibility, rx_params, tx_params
from .errors import (
    AnalogOfdmError,
    EqualizationError,
    InvalidArgumentError,
    PrefixLemmaError,
    ResolutionError,
)
from .phaser import PhaserParams, QpmParams, far_field_ratio, rtft_physical_chain
from .pipeline import PrefixSpec, RunReport, SystemKind, evm, receive, transmit
from .prefix import PrefixKind, add_cp, add_zp, equivalent_circular_channel, remove_prefix
from .rtft import RtftMapping, output_window, rtft_impulse_train, rtft_ofdm_discrete, rtft_sequence
from .signal_core import ComplexSequence, SymbolBlock, circular_convolve, dft, idft, linear_convolve

__version__ = "0.1.0"
