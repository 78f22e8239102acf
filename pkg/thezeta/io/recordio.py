# +
import csv
import io
import json
import os

from thezeta.errors import DomainError
from thezeta.integrate.families import FamilySpec
from thezeta.util.parallel import if_master
from thezeta.util.util import abspath
from thezeta.verify.records import FIELDS, VerificationRecord

FORMATS = ("json", "csv", "text")
COMPLEX_FIELDS = ("a", "s", "closed", "quad")


def csv_fields():
    fields = []
    for f in FIELDS:
        if f in COMPLEX_FIELDS:
            fields += [f"{f}_re", f"{f}_im"]
        else:
            fields.append(f)
    return fields


def _number(x):
    if x is None:
        return ""
    if isinstance(x, float):
        # 17 significant digits re-parse to the same double
        return format(x, ".17g")
    return str(x)


def flatten(d):
    """record dict -> csv row with complex fields split in _re/_im"""
    row = {}
    for f in FIELDS:
        v = d[f]
        if f in COMPLEX_FIELDS:
            re, im = (None, None) if v is None else v
            row[f"{f}_re"] = _number(re)
            row[f"{f}_im"] = _number(im)
        else:
            row[f] = _number(v)
    return row


def dumps(obj):
    return json.dumps(obj, indent=1, ensure_ascii=False, allow_nan=False)


def records_json(records):
    return dumps([rec.as_dict() for rec in records])


def records_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=csv_fields(), lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(flatten(rec.as_dict()))
    return buf.getvalue()


def _short(z):
    if z is None:
        return "-"
    if z.imag == 0:
        return f"{z.real:.10g}"
    return f"{z.real:.10g}{z.imag:+.10g}j"


def records_text(records):
    head = ("family", "n", "a", "s", "candidate", "closed", "quad", "rel_err", "status")
    rows = [head]
    for rec in records:
        err = "-" if rec.rel_err is None else f"{rec.rel_err:.2e}"
        rows.append(
            (
                rec.spec.family,
                str(rec.spec.n),
                _short(rec.spec.a),
                _short(rec.spec.s),
                rec.candidate,
                _short(rec.closed),
                _short(rec.quad),
                err,
                rec.status,
            )
        )
    widths = [max(len(row[j]) for row in rows) for j in range(len(head))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def format_records(records, fmt="json"):
    if fmt == "json":
        return records_json(records) + "\n"
    if fmt == "csv":
        return records_csv(records)
    if fmt == "text":
        return records_text(records)
    raise DomainError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def guess_format(path, default="json"):
    ext = os.path.splitext(path)[1].lower()
    return {".json": "json", ".csv": "csv", ".txt": "text"}.get(ext, default)


@if_master
def write_text(text, path):
    with open(abspath(path), "w") as f:
        f.write(text)


def write_records(records, path, fmt=None):
    """fmt defaults to the extension of path (.json, .csv, .txt)"""
    fmt = guess_format(path) if fmt is None else fmt
    write_text(format_records(records, fmt), path)


def read_records(path):
    with open(abspath(path)) as f:
        return [VerificationRecord.from_dict(d) for d in json.load(f)]


def read_grid(path):
    """
    A JSON array of FamilySpec objects (family, n, a, s and optionally
    kernel_scale, q, reading). An item may carry "candidate"; the result
    then holds (spec, candidate) in place of the bare spec.
    """
    with open(abspath(path)) as f:
        try:
            items = json.load(f)
        except json.JSONDecodeError as err:
            raise DomainError(f"{path}: not a JSON file ({err})")
    if not isinstance(items, list):
        raise DomainError(f"{path}: the grid should be a JSON array")
    grid = []
    for num, item in enumerate(items):
        if not isinstance(item, dict) or "family" not in item:
            raise DomainError(f"{path}: item {num} is not a FamilySpec object")
        item = dict(item)
        cand = item.pop("candidate", None)
        try:
            spec = FamilySpec.from_dict(item)
        except TypeError as err:
            raise DomainError(f"{path}: item {num}: {err}")
        grid.append(spec if cand is None else (spec, cand))
    return grid


def _records():
    from thezeta.verify.records import SKIPPED_POLE

    spec = FamilySpec("bose-even", 0, 1.0, 2.0)
    passed = VerificationRecord(spec, "printed", 0.07246703342411321, 0.0724670334241132)
    odd = FamilySpec("bose-odd", 0, complex(1, 0.5), 4.0)
    skipped = VerificationRecord(odd, "corrected", status=SKIPPED_POLE)
    return [passed, skipped]


def test_formats(tmp_path=None):
    import tempfile

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    records = _records()

    path = os.path.join(folder, "out.json")
    write_records(records, path)
    with open(path) as f:
        data = json.load(f)
    assert [tuple(d) for d in data] == [FIELDS, FIELDS]
    assert data[0]["closed"] == [0.07246703342411321, 0.0]
    assert data[1]["a"] == [1.0, 0.5] and data[1]["quad"] is None
    back = read_records(path)
    assert all(x.same_result(y) for x, y in zip(back, records))

    path = os.path.join(folder, "out.csv")
    write_records(records, path)
    with open(path) as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0]) == csv_fields()
    assert float(rows[0]["closed_re"]) == 0.07246703342411321
    assert rows[1]["a_im"] == "0.5" and rows[1]["closed_re"] == ""
    assert rows[1]["status"] == "SKIPPED_POLE"

    text = format_records(records, "text")
    assert text.splitlines()[0].split()[:2] == ["family", "n"]
    assert "SKIPPED_POLE" in text and "1+0.5j" in text


def test_read_grid(tmp_path=None):
    import tempfile

    import pytest

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "grid.json")
    items = [
        {"family": "bose-even", "n": 0, "a": [1.0, 0.0], "s": [2.0, 0.0]},
        {"family": "fermi-odd", "n": 1, "a": [0.7], "s": [4.5, 0], "candidate": "printed@2pi"},
        {"family": "open-T", "n": 2, "q": 1.0},
    ]
    with open(path, "w") as f:
        json.dump(items, f)
    grid = read_grid(path)
    assert grid[0] == FamilySpec("bose-even", 0, 1.0, 2.0)
    spec, cand = grid[1]
    assert cand == "printed@2pi" and spec.a == 0.7 and spec.n == 1
    assert grid[2].is_open

    with open(path, "w") as f:
        json.dump({"family": "bose-even"}, f)
    with pytest.raises(DomainError):
        read_grid(path)
    with open(path, "w") as f:
        json.dump([{"family": "bose-even", "n": 2, "a": [1, 0], "s": [3, 0]}], f)
    with pytest.raises(DomainError):
        read_grid(path)
    with open(path, "w") as f:
        json.dump([{"family": "bose-even", "t": 1}], f)
    with pytest.raises(DomainError):
        read_grid(path)


if __name__ == "__main__":
    test_formats()
    test_read_grid()
