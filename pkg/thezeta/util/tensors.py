# +
import functools

import torch

from thezeta.errors import ZetaError


def as_complex(x):
    if isinstance(x, torch.Tensor):
        return x.to(torch.complex128)
    return torch.as_tensor(x, dtype=torch.complex128)


def as_real(x):
    if isinstance(x, torch.Tensor):
        return x.to(torch.float64)
    return torch.as_tensor(x, dtype=torch.float64)


def to_complex(t):
    return complex(t.item())


def has_tensor(*args, **kwargs):
    return any(isinstance(a, torch.Tensor) for a in (*args, *kwargs.values()))


def scalar_io(func):
    """
    Functions decorated with this return python complex (or a tuple
    of them) if none of the inputs is a tensor.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        out = func(*args, **kwargs)
        if has_tensor(*args, **kwargs):
            return out
        if isinstance(out, tuple):
            return tuple(complex(o.item()) if o.is_complex() else float(o) for o in out)
        return to_complex(out)

    return wrapper


def check_finite(t, where="result"):
    if not torch.isfinite(t).all():
        raise ZetaError(f"{where}: non-finite value")
    return t


def cpow(base, expo):
    """principal branch base**expo"""
    return torch.exp(expo * torch.log(base))


def expm1(z):
    if not z.is_complex():
        return torch.expm1(z)
    small = z.abs() < 1e-2
    series = z * (
        1
        + z
        / 2
        * (1 + z / 3 * (1 + z / 4 * (1 + z / 5 * (1 + z / 6 * (1 + z / 7 * (1 + z / 8))))))
    )
    return torch.where(small, series, torch.exp(z) - 1)


def log1p(z):
    if not z.is_complex():
        return torch.log1p(z)
    small = z.abs() < 1e-2
    series = z * (
        1 - z * (1 / 2 - z * (1 / 3 - z * (1 / 4 - z * (1 / 5 - z * (1 / 6 - z * (1 / 7 - z / 8))))))
    )
    return torch.where(small, series, torch.log(1 + z))


def test_expm1():
    z = torch.tensor([1e-12 + 1e-12j, 3e-3 - 2e-3j, 0.5 + 0.25j, 4.0 + 1.0j])
    ref = torch.exp(z.to(torch.complex128)) - 1
    got = expm1(z)
    assert torch.allclose(got[2:], ref[2:], rtol=1e-14, atol=0)
    assert (got[0] - z[0]).abs() < 1e-22
    w = torch.tensor([1e-9, 0.1, 3.0])
    assert torch.allclose(expm1(w), torch.expm1(w))


def test_log1p():
    z = torch.tensor([1e-13 - 2e-13j, 4e-3 + 1e-3j, 0.3 - 0.2j, -0.5 + 2.0j])
    got = log1p(z)
    assert torch.allclose(got[2:], torch.log(1 + z[2:]), rtol=1e-14, atol=0)
    assert (got[0] - z[0]).abs() < 1e-25
    assert (expm1(log1p(z[1])) - z[1]).abs() < 1e-17


def test_scalar_io():
    @scalar_io
    def square(x):
        x = as_complex(x)
        return x * x

    assert square(2.0) == 4 + 0j
    assert isinstance(square(1j), complex)
    assert isinstance(square(torch.tensor([1.0, 2.0])), torch.Tensor)


if __name__ == "__main__":
    test_expm1()
    test_log1p()
    test_scalar_io()
