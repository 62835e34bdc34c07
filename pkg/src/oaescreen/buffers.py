"""PCM sample buffers and WAV file I/O.

All audio in this package flows through :class:`SampleBuffer`: real-valued
samples on the signed 16-bit scale, mono or interleaved stereo, at one of
the two hardware rates (15625 or 31250 Hz).  Amplitudes stay real-valued
internally; quantization to int16 happens only on WAV export.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigurationError

SUPPORTED_RATES = (15625, 31250)

INT16_MIN = -32768.0
INT16_MAX = 32767.0
FULL_SCALE = 32767.0


def round_half_up(x: float) -> int:
    """Round to nearest integer, halves away from zero-ward ties going up.

    Used for every seconds->samples conversion so that half-sample periods
    (e.g. 20 ms at 15625 Hz = 312.5 samples) map to a reproducible
    alternating 312/313 grid instead of depending on banker's rounding.
    """
    return int(np.floor(x + 0.5))


@dataclass(frozen=True)
class SampleBuffer:
    """Immutable timestamped PCM audio.

    samples: 1-D float64 array, channel-interleaved when stereo
             (L0 R0 L1 R1 ...).  Values must lie in [-32768, +32767].
    channels: 1 or 2.
    sample_rate_hz: one of 15625 or 31250.
    """

    samples: np.ndarray
    channels: int = 1
    sample_rate_hz: int = 15625

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(np.asarray(self.samples, dtype=np.float64))
        if arr.ndim != 1:
            raise ConfigurationError("samples must be a 1-D interleaved array")
        if self.channels not in (1, 2):
            raise ConfigurationError(f"channels must be 1 or 2, got {self.channels}")
        if arr.size % self.channels != 0:
            raise ConfigurationError(
                f"interleaved length {arr.size} is not a multiple of {self.channels} channels"
            )
        if self.sample_rate_hz not in SUPPORTED_RATES:
            raise ConfigurationError(
                f"sample_rate_hz must be one of {SUPPORTED_RATES}, got {self.sample_rate_hz}"
            )
        if arr.size and (arr.min() < INT16_MIN or arr.max() > INT16_MAX):
            raise ConfigurationError("sample values exceed the signed 16-bit range")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    @property
    def frame_count(self) -> int:
        return self.samples.size // self.channels

    @property
    def duration_s(self) -> float:
        return self.frame_count / self.sample_rate_hz

    def channel(self, index: int) -> np.ndarray:
        """Return one channel as a (read-only) mono sample array."""
        if not 0 <= index < self.channels:
            raise ConfigurationError(f"channel {index} out of range for {self.channels}-channel buffer")
        return self.samples[index :: self.channels]

    @staticmethod
    def from_channels(left: np.ndarray, right: np.ndarray, sample_rate_hz: int) -> "SampleBuffer":
        """Interleave two equal-length mono arrays into a stereo buffer."""
        left = np.asarray(left, dtype=np.float64)
        right = np.asarray(right, dtype=np.float64)
        if left.shape != right.shape or left.ndim != 1:
            raise ConfigurationError("left/right channels must be 1-D arrays of equal length")
        inter = np.empty(left.size * 2, dtype=np.float64)
        inter[0::2] = left
        inter[1::2] = right
        return SampleBuffer(inter, channels=2, sample_rate_hz=sample_rate_hz)


def quantize_int16(samples: np.ndarray) -> np.ndarray:
    """Round real-valued samples to int16.  Out-of-range values are an error."""
    rounded = np.rint(np.asarray(samples, dtype=np.float64))
    if rounded.size and (rounded.min() < INT16_MIN or rounded.max() > INT16_MAX):
        raise ConfigurationError("quantization would clip: samples exceed int16 range")
    return rounded.astype("<i2")


def write_wav(path: str | Path, buf: SampleBuffer) -> None:
    """Write a buffer as 16-bit little-endian PCM WAV (mono or stereo)."""
    data = quantize_int16(buf.samples).tobytes()
    with wave.open(str(path), "wb") as w:
        w.setnchannels(buf.channels)
        w.setsampwidth(2)
        w.setframerate(buf.sample_rate_hz)
        w.writeframes(data)


def read_wav(path: str | Path) -> SampleBuffer:
    """Read a 16-bit PCM WAV recorded at one of the supported rates."""
    with wave.open(str(path), "rb") as w:
        channels = w.getnchannels()
        width = w.getsampwidth()
        rate = w.getframerate()
        raw = w.readframes(w.getnframes())
    if width != 2:
        raise ConfigurationError(f"only 16-bit PCM WAV is supported, got {8 * width}-bit")
    if rate not in SUPPORTED_RATES:
        raise ConfigurationError(f"unsupported WAV sample rate {rate}")
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64)
    return SampleBuffer(samples, channels=channels, sample_rate_hz=rate)
