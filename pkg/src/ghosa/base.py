"""Estimator-style base class and input validation helpers.

Optimizers follow the scikit-learn parameter convention: every constructor
argument is stored verbatim under the same name, ``get_params``/``set_params``
expose them for inspection and replay, and attributes learned by ``fit`` get
a trailing underscore.  No scikit-learn dependency is needed for that.
"""

from __future__ import annotations

import inspect

import numpy as np

from .errors import ConfigError


class ParamMixin:
    """get_params/set_params following the sklearn constructor convention."""

    @classmethod
    def _param_names(cls):
        sig = inspect.signature(cls.__init__)
        return [
            name
            for name, p in sig.parameters.items()
            if name != "self" and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        ]

    def get_params(self) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ConfigError(
                    f"unknown parameter {name!r} for {type(self).__name__}; "
                    f"valid parameters: {sorted(valid)}"
                )
            setattr(self, name, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


def check_probability(value, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ConfigError(f"{name} must be in [0, 1], got {value}")
    return value


def check_positive(value, name: str, *, strict: bool = True) -> float:
    value = float(value)
    if strict and value <= 0:
        raise ConfigError(f"{name} must be > 0, got {value}")
    if not strict and value < 0:
        raise ConfigError(f"{name} must be >= 0, got {value}")
    return value


def check_int_at_least(value, minimum: int, name: str) -> int:
    if int(value) != value:
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_random_state(seed) -> np.random.Generator:
    """Accept None, an int seed, or a ready Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def is_permutation(seq, n: int) -> bool:
    """True iff ``seq`` holds each of 1..n exactly once."""
    arr = np.asarray(seq)
    if arr.shape != (n,):
        return False
    return np.array_equal(np.sort(arr), np.arange(1, n + 1))


def check_bounds_array(bounds, dim: int | None = None) -> np.ndarray:
    """Normalize bounds to a (D, 2) float array with min <= max."""
    arr = np.asarray(bounds, dtype=float)
    if arr.ndim == 1 and arr.shape == (2,):
        if dim is None:
            raise ConfigError("scalar bounds need an explicit dimension")
        arr = np.tile(arr, (dim, 1))
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ConfigError(f"bounds must have shape (D, 2), got {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise ConfigError(f"bounds rows ({arr.shape[0]}) != dimension ({dim})")
    if np.any(arr[:, 0] > arr[:, 1]):
        raise ConfigError("each bounds row must satisfy min <= max")
    return arr
