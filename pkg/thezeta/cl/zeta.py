# +
import thezeta.cl as cline
from thezeta.special.zeta import hurwitz_zeta, hurwitz_zeta_ds


def zeta(s, a=1.0, deriv=False, tol=1e-13):
    """ζ(s, a), or ∂ζ/∂s with deriv"""
    value = hurwitz_zeta_ds(s, a, tol) if deriv else hurwitz_zeta(s, a)
    return dict(s=cline.pair(s), a=cline.pair(a), deriv=deriv, value=cline.pair(value))


def command(sub, name="zeta"):
    parser = sub.add_parser(name, parents=[cline.common()], help="Hurwitz zeta function")
    parser.add_argument("--s", type=cline.parse_complex, required=True, metavar="RE[,IM]")
    parser.add_argument("--a", type=cline.parse_complex, default=None, metavar="RE[,IM]")
    parser.add_argument("--deriv", action="store_true", default=None, help="derivative in s")
    parser.add_argument("--tol", type=float, default=None, help="quadrature tolerance of --deriv")
    parser.set_defaults(run=run)
    return parser


def run(args):
    kwargs = cline.options(zeta, args.args, a=args.a, deriv=args.deriv, tol=args.tol)
    cline.emit_result(zeta(args.s, **kwargs), args)
    return cline.OK


def test_zeta_command(tmp_path=None):
    import json
    import os
    import tempfile
    from math import log, pi

    from thezeta.cl.__main__ import main

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "zeta.json")
    assert main(["zeta", "--s", "2", "--a", "1", "--out", path]) == 0
    with open(path) as f:
        d = json.load(f)
    assert abs(d["value"][0] - pi**2 / 6) < 1e-13 and abs(d["value"][1]) < 1e-15
    assert d["deriv"] is False

    # ζ'(0, a) = log Γ(a) - log(2π)/2
    assert main(["zeta", "--s", "0", "--a", "1", "--deriv", "--out", path]) == 0
    with open(path) as f:
        d = json.load(f)
    assert abs(d["value"][0] + log(2 * pi) / 2) < 1e-10

    assert main(["zeta", "--s", "1", "--a", "1", "--out", path]) == 2
    assert main(["zeta", "--s", "2", "--a=-1", "--out", path]) == 2
    assert main(["zeta", "--a", "1"]) == 2


if __name__ == "__main__":
    test_zeta_command()
