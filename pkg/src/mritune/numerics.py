"""Low-level numerics: centered orthonormal FFTs, a functional Adam
optimizer, and the finite-difference gradient oracle used to validate
every differentiable code path.

All FFTs in this package use one convention: the DC sample of k-space
sits at index ``(H // 2, W // 2)`` and the transform is orthonormal
(norm-preserving), so the adjoint of the Fourier step equals its inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
import torch

from .errors import NumericalError

__all__ = ["fft2c", "ifft2c", "AdamState", "adam_step", "finite_diff_grad"]


def _fftc(x: torch.Tensor) -> torch.Tensor:
    # centered + orthonormal over the trailing two axes; batch dims pass through
    x = torch.fft.ifftshift(x, dim=(-2, -1))
    x = torch.fft.fft2(x, norm="ortho")
    return torch.fft.fftshift(x, dim=(-2, -1))


def _ifftc(k: torch.Tensor) -> torch.Tensor:
    k = torch.fft.ifftshift(k, dim=(-2, -1))
    k = torch.fft.ifft2(k, norm="ortho")
    return torch.fft.fftshift(k, dim=(-2, -1))


def fft2c(image: torch.Tensor) -> torch.Tensor:
    """Centered orthonormal 2D DFT of an ``H x W`` image.

    A unit impulse at ``(H // 2, W // 2)`` transforms to the constant
    ``1 / sqrt(H * W)``, and ``||fft2c(x)|| == ||x||``.
    """
    if image.ndim != 2:
        raise ValueError(f"fft2c expects a 2D tensor, got shape {tuple(image.shape)}")
    return _fftc(image)


def ifft2c(kspace: torch.Tensor) -> torch.Tensor:
    """Exact inverse of :func:`fft2c`, same centering and scaling."""
    if kspace.ndim != 2:
        raise ValueError(f"ifft2c expects a 2D tensor, got shape {tuple(kspace.shape)}")
    return _ifftc(kspace)


@dataclass(frozen=True)
class AdamState:
    """Moment accumulators and step counter for :func:`adam_step`.

    The state is immutable; each update returns a fresh instance with the
    step counter advanced by exactly one.
    """

    m: tuple[torch.Tensor, ...]
    v: tuple[torch.Tensor, ...]
    step: int
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def initial(
        cls,
        params: Sequence[torch.Tensor],
        lr: float = 1e-3,
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8,
    ) -> "AdamState":
        return cls(
            m=tuple(torch.zeros_like(p) for p in params),
            v=tuple(torch.zeros_like(p) for p in params),
            step=0,
            lr=lr,
            beta1=beta1,
            beta2=beta2,
            eps=eps,
        )


def adam_step(
    params: Sequence[torch.Tensor],
    grads: Sequence[torch.Tensor],
    state: AdamState,
) -> tuple[list[torch.Tensor], AdamState]:
    """One Adam update with bias correction.

    Pure function: inputs are not mutated, and identical inputs produce
    bit-identical outputs. Parameters are real-valued tensors; complex
    degrees of freedom must be split into real pairs by the caller.
    """
    if len(params) != len(grads):
        raise ValueError(f"got {len(params)} parameters but {len(grads)} gradients")
    if len(params) != len(state.m):
        raise ValueError(f"state tracks {len(state.m)} tensors, got {len(params)}")
    t = state.step + 1
    bc1 = 1.0 - state.beta1**t
    bc2 = 1.0 - state.beta2**t
    new_p: list[torch.Tensor] = []
    new_m: list[torch.Tensor] = []
    new_v: list[torch.Tensor] = []
    for p, g, m, v in zip(params, grads, state.m, state.v):
        if g.shape != p.shape:
            raise ValueError(
                f"gradient shape {tuple(g.shape)} does not match parameter shape {tuple(p.shape)}"
            )
        m = state.beta1 * m + (1.0 - state.beta1) * g
        v = state.beta2 * v + (1.0 - state.beta2) * (g * g)
        step_dir = (m / bc1) / (torch.sqrt(v / bc2) + state.eps)
        new_p.append(p - state.lr * step_dir)
        new_m.append(m)
        new_v.append(v)
    return new_p, replace(state, m=tuple(new_m), v=tuple(new_v), step=t)


def finite_diff_grad(
    f: Callable[[np.ndarray], float],
    theta: np.ndarray,
    eps: float = 1e-5,
) -> np.ndarray:
    """Central-difference gradient of a scalar function of a flat vector.

    This is the independent oracle against which all reverse-mode
    gradients in this package are checked; it never shares code with the
    paths it validates. Runs in double precision.

    Parameters
    ----------
    f : callable mapping a float64 vector to a finite scalar
    theta : evaluation point, flattened to 1D
    eps : step size, must be positive
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    theta = np.asarray(theta, dtype=np.float64).ravel()
    grad = np.empty_like(theta)
    for i in range(theta.size):
        e = np.zeros_like(theta)
        e[i] = eps
        fp = float(f(theta + e))
        fm = float(f(theta - e))
        if not (math.isfinite(fp) and math.isfinite(fm)):
            raise NumericalError(f"objective non-finite near coordinate {i}: f+={fp}, f-={fm}")
        grad[i] = (fp - fm) / (2.0 * eps)
    return grad
