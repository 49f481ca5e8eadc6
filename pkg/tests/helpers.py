import pathlib

DATA = pathlib.Path(__file__).parent / "data"


def log_grid(lo, hi, n):
    return [lo * (hi / lo) ** (i / (n - 1)) for i in range(n)]
