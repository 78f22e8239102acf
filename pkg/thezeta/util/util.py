# +
import ast
import datetime
import inspect
import os


def date(fmt="%m/%d/%Y %H:%M:%S"):
    return datetime.datetime.now().strftime(fmt)


def abspath(f):
    """expands ~ and environment variables"""
    return os.path.abspath(os.path.expanduser(os.path.expandvars(f)))


def get_default_args(func):
    signature = inspect.signature(func)
    return {
        k: v.default
        for k, v in signature.parameters.items()
        if v.default is not inspect.Parameter.empty
    }


def strip(line):
    if "#" in line:
        return line[: line.index("#")].strip()
    else:
        return line.strip()


def read_args(path):
    """
    Reads an ARGS file: one "key = value" per line, # for comments.
    Values are python literals.
    """
    args = {}
    with open(abspath(path)) as f:
        for num, line in enumerate(f):
            line = strip(line)
            if line == "":
                continue
            if "=" not in line:
                raise RuntimeError(f"{path}:{num + 1}: expected 'key = value'")
            key, value = (x.strip() for x in line.split("=", 1))
            args[key] = ast.literal_eval(value)
    return args


def update_args(kwargs, source):
    for kw in kwargs:
        if kw in source:
            kwargs[kw] = source[kw]
    return kwargs


def test_read_args(tmp_path=None):
    import tempfile

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "ARGS")
    with open(path, "w") as f:
        f.write("# sweep settings\n")
        f.write("tol = 1e-6  # relative\n\n")
        f.write("workers = 2\n")
    args = read_args(path)
    assert args == {"tol": 1e-6, "workers": 2}

    def func(grid, tol=1e-8, workers=1, logfile=None):
        pass

    kwargs = update_args(get_default_args(func), args)
    assert kwargs == {"tol": 1e-6, "workers": 2, "logfile": None}


if __name__ == "__main__":
    test_read_args()
