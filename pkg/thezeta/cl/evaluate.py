# +
import thezeta.cl as cline
from thezeta.closed import hypotheses
from thezeta.closed.theorems import closed_form
from thezeta.errors import DomainError
from thezeta.integrate.families import FAMILIES, FamilySpec, family_quadrature
from thezeta.verify.records import FAIL, NO_CONVERGENCE, VerificationRecord
from thezeta.verify.sweep import ACCEPT_TOL, QUAD_TOL, verify_point

METHODS = ("closed", "quad", "both")


def evaluate(
    family,
    n=0,
    a=1.0,
    s=2.0,
    method=None,
    scale=None,
    q=1.0,
    candidate="canonical",
    tol=ACCEPT_TOL,
    quad_tol=QUAD_TOL,
):
    """
    method:     closed (candidate's closed form), quad (the family
                integral at its default or the given scale) or both
                (a VerificationRecord); default quad for the open
                families, both otherwise
    scale:      kernel scale of the quadrature side
    q:          kernel scale 2πq of the open families
    candidate:  hypothesis id; canonical triggers resolution of the
                family if needed
    """
    spec = FamilySpec(family, n, a, s, kernel_scale=scale, q=q)
    if method is None:
        method = "quad" if spec.is_open else "both"
    if method not in METHODS:
        raise DomainError(f"method should be one of {METHODS}, got {method!r}")
    if spec.is_open and method != "quad":
        raise DomainError(f"{family} has no closed form (use method quad)")
    if method != "quad" and candidate == "canonical":
        cline.ensure_resolved([family])
    if method == "both":
        return verify_point(spec, candidate, tol, quad_tol)

    result = dict(family=spec.family, n=spec.n)
    if spec.is_open:
        result.update(q=spec.q, scale=spec.scale)
    else:
        result.update(a=cline.pair(spec.a), s=cline.pair(spec.s))
    if method == "closed":
        cand = hypotheses.candidate(family, candidate)
        result.update(candidate=cand.id, closed=cline.pair(closed_form(family, spec.n, spec.a, spec.s, cand.id)))
    else:
        out = family_quadrature(spec, quad_tol)
        result.update(
            scale=spec.scale,
            quad=cline.pair(out.value),
            err_estimate=out.err_estimate,
            n_evals=out.n_evals,
        )
    return result


def command(sub, name="eval"):
    parser = sub.add_parser(
        name,
        parents=[cline.common()],
        help="closed form and/or quadrature of one family integral",
    )
    parser.add_argument("--family", required=True, choices=list(FAMILIES))
    parser.add_argument("--n", type=int, default=None, help="power index (k for the open families)")
    parser.add_argument("--a", type=cline.parse_complex, default=None, metavar="RE[,IM]")
    parser.add_argument("--s", type=cline.parse_complex, default=None, metavar="RE[,IM]")
    parser.add_argument("--method", choices=METHODS, default=None)
    parser.add_argument("--scale", type=float, default=None, help="kernel scale of the quadrature")
    parser.add_argument("--q", type=float, default=None, help="open families: kernel 1/(e^2πqt - 1)")
    parser.add_argument("--candidate", default=None, help="hypothesis id (default: canonical)")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--quad-tol", dest="quad_tol", type=float, default=None)
    parser.set_defaults(run=run)
    return parser


def run(args):
    kwargs = cline.options(
        evaluate,
        args.args,
        n=args.n,
        a=args.a,
        s=args.s,
        method=args.method,
        scale=args.scale,
        q=args.q,
        candidate=args.candidate,
        tol=args.tol,
        quad_tol=args.quad_tol,
    )
    result = evaluate(args.family, **kwargs)
    if isinstance(result, VerificationRecord):
        cline.emit_records([result], args)
        return cline.FAILED if result.status in (FAIL, NO_CONVERGENCE) else cline.OK
    cline.emit_result(result, args)
    return cline.OK


def test_evaluate():
    rec = evaluate("bose-even", 0, 1.0, 2.0)
    assert rec.passed and rec.candidate == "printed"
    assert abs(rec.closed - 0.0724670334241132) < 1e-12
    out = evaluate("bose-odd", 0, 1.0, 4.0, method="closed", candidate="corrected")
    quad = evaluate("bose-odd", 0, 1.0, 4.0, method="quad")
    assert abs(complex(*out["closed"]) - complex(*quad["quad"])) < 1e-9
    assert quad["scale"] == FAMILIES["bose-odd"][1]
    out = evaluate("open-L", 2, method="quad", q=0.5)
    assert out["q"] == 0.5 and out["quad"][0] > 0
    out = evaluate("open-T", 1)
    assert "quad" in out and "closed" not in out


def test_eval_command(tmp_path=None):
    import json
    import os
    import tempfile

    from thezeta.cl.__main__ import main

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "eval.json")
    argv = ["eval", "--family", "bose-even", "--n", "0", "--a", "1", "--s", "2", "--method", "both"]
    assert main(argv + ["--out", path]) == 0
    with open(path) as f:
        (d,) = json.load(f)
    assert d["status"] == "PASS"
    assert abs(d["closed"][0] - 0.0724670334) < 1e-10 and abs(d["quad"][0] - 0.0724670334) < 1e-10

    # the printed odd sum has the wrong sign
    argv = ["eval", "--family", "bose-odd", "--n", "0", "--a", "1", "--s", "4", "--out", path]
    assert main(argv + ["--candidate", "printed"]) == 1
    assert main(argv + ["--candidate", "corrected"]) == 0

    # complex a, csv output
    path = os.path.join(folder, "eval.csv")
    argv = ["eval", "--family", "sinh-even", "--n", "1", "--a", "1,0.5", "--s", "3.5"]
    assert main(argv + ["--method", "closed", "--candidate", "printed", "--out", path]) == 0
    with open(path) as f:
        head, row = f.read().splitlines()
    assert head.split(",")[2:4] == ["a_re", "a_im"] and row.split(",")[3] == "0.5"

    # usage errors
    assert main(["eval", "--family", "nope", "--n", "0"]) == 2
    assert main(["eval", "--family", "bose-even", "--n", "2", "--s", "3"]) == 2
    assert main(["eval", "--family", "open-T", "--n", "2", "--method", "closed"]) == 2
    assert main(["eval", "--family", "open-T", "--n", "1"]) == 0
    assert main(["eval", "--family", "bose-even", "--a", "1,x"]) == 2


if __name__ == "__main__":
    test_evaluate()
    test_eval_command()
