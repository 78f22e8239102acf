# +
import torch

import thezeta.cl as cline
from thezeta.errors import DomainError
from thezeta.integrate.tanhsinh import integrate_half_line
from thezeta.special.transforms import KERNELS, _beta, check_kind, kernel, kernel_sine_transform, transform_sense
from thezeta.verify.records import FAIL, PASS
from thezeta.verify.sweep import ACCEPT_TOL

METHODS = ("closed", "quad", "both")


def transform_quadrature(kind, w, beta=None, tol=1e-12):
    """∫_0^∞ sin(wt) K(t) dt (cos for cosh) by quadrature"""
    check_kind(kind)
    beta = _beta(kind, beta)
    trig = torch.cos if transform_sense(kind) == "cos" else torch.sin
    return integrate_half_line(lambda t: trig(w * t) * kernel(kind, t, beta), tol=tol, decay_rate=beta)


def transform(kind, w, beta=None, method="both", tol=ACCEPT_TOL, quad_tol=1e-12):
    check_kind(kind)
    if method not in METHODS:
        raise DomainError(f"method should be one of {METHODS}, got {method!r}")
    result = dict(kernel=kind, w=w, beta=_beta(kind, beta), sense=transform_sense(kind))
    closed = quad = None
    if method != "quad":
        closed = kernel_sine_transform(kind, w, beta)
        result["closed"] = closed
    if method != "closed":
        if w < 0:
            raise DomainError(f"{kind} transform: frequency should be non-negative")
        out = transform_quadrature(kind, w, beta, quad_tol)
        quad = out.value.real
        result.update(quad=quad, err_estimate=out.err_estimate)
    if method == "both":
        rel_err = abs(closed - quad) / max(1.0, abs(quad))
        result.update(rel_err=rel_err, status=PASS if rel_err <= tol else FAIL)
    return result


def command(sub, name="transform"):
    parser = sub.add_parser(name, parents=[cline.common()], help="sine (cosine) transform of a kernel")
    parser.add_argument("--kernel", required=True, choices=KERNELS)
    parser.add_argument("--w", type=float, required=True, help="frequency")
    parser.add_argument("--beta", type=float, default=None, help="kernel scale")
    parser.add_argument("--method", choices=METHODS, default=None)
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--quad-tol", dest="quad_tol", type=float, default=None)
    parser.set_defaults(run=run)
    return parser


def run(args):
    kwargs = cline.options(
        transform, args.args, beta=args.beta, method=args.method, tol=args.tol, quad_tol=args.quad_tol
    )
    result = transform(args.kernel, args.w, **kwargs)
    cline.emit_result(result, args)
    return cline.FAILED if result.get("status") == FAIL else cline.OK


def test_transform():
    from math import e, pi

    out = transform("bose", 1.0)
    assert out["status"] == PASS and out["beta"] == 2 * pi
    assert abs(out["closed"] - 0.5 * (1 / (e - 1) - 0.5)) < 1e-15
    out = transform("cosh", 0.0, method="quad")
    assert abs(out["quad"] - 0.5) < 1e-11 and "closed" not in out
    assert transform("fermi", 3.0, beta=2 * pi)["status"] == PASS


def test_transform_command(tmp_path=None):
    import json
    import os
    import tempfile

    from thezeta.cl.__main__ import main

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "transform.json")
    assert main(["transform", "--kernel", "sinh", "--w", "2", "--beta", "3.5", "--out", path]) == 0
    with open(path) as f:
        d = json.load(f)
    assert d["status"] == PASS and d["beta"] == 3.5 and d["sense"] == "sin"
    assert main(["transform", "--kernel", "bose", "--w", "0", "--out", path]) == 2
    assert main(["transform", "--kernel", "sinh", "--w", "1", "--beta", "-1", "--out", path]) == 2
    assert main(["transform", "--kernel", "gauss", "--w", "1"]) == 2


if __name__ == "__main__":
    test_transform()
    test_transform_command()
