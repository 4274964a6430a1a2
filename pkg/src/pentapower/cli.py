"""Command line front end.

Subcommands: power, eig, verify, det, bench. JSON is the default output
format where a document makes sense; csv and pretty are available too.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error (valid flags, invalid matrix parameters).

Complex values on the command line use a compact literal: ``2``, ``-3.5``,
``1+1i``, ``2-0.5i``, ``i``, ``-i``, ``4.0i``. No whitespace, no exponent
notation, imaginary unit spelled ``i``.
"""

from __future__ import annotations

import json
import re
import statistics
import sys
import time

import click
import numpy as np

from .chebyshev import fibonacci_poly, ipow
from .oracle import build_dense, compare, determinant, determinant_corollary_check, naive_power
from .power import PowerRequest, power_matrix, power_via_spectral
from .spectrum import MatrixSpec, eigenvalues_even, eigenvalues_odd

_REAL = r"[+-]?\d+(?:\.\d+)?"
_IMAG = r"[+-]?(?:\d+(?:\.\d+)?)?i"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<real_only>{_REAL})|(?P<imag_only>{_IMAG})"
    rf"|(?P<real>{_REAL})(?P<sign>[+-])(?P<imag>{_IMAG}))$"
)


def _imag_value(token: str) -> float:
    body = token[:-1]
    if body in ("", "+"):
        return 1.0
    if body == "-":
        return -1.0
    return float(body)


def parse_complex(text: str) -> complex:
    """Parse a complex literal; raises ValueError on anything off-grammar."""
    match = _COMPLEX_RE.match(text)
    if match is None:
        raise ValueError(f"invalid complex literal: {text!r}")
    if match["real_only"] is not None:
        return complex(float(match["real_only"]), 0.0)
    if match["imag_only"] is not None:
        return complex(0.0, _imag_value(match["imag_only"]))
    sign = 1.0 if match["sign"] == "+" else -1.0
    return complex(float(match["real"]), sign * _imag_value(match["imag"]))


def _format_float(value: float) -> str:
    # positional, shortest digits that round-trip; integral values lose the dot
    return np.format_float_positional(value + 0.0, trim="-")


def format_complex(value: complex) -> str:
    re_part = value.real + 0.0
    im_part = value.imag + 0.0
    if im_part == 0.0:
        return _format_float(re_part)
    if re_part == 0.0:
        return f"{_format_float(im_part)}i"
    sign = "+" if im_part >= 0 else "-"
    return f"{_format_float(re_part)}{sign}{_format_float(abs(im_part))}i"


class ComplexValue(click.ParamType):
    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return parse_complex(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


COMPLEX = ComplexValue()


class DomainError(click.ClickException):
    exit_code = 3


def _make_spec(n: int, a: complex, b: complex) -> MatrixSpec:
    try:
        return MatrixSpec(n=n, a=a, b=b)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _pair(value: complex) -> dict:
    return {"re": value.real + 0.0, "im": value.imag + 0.0}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _matrix_json(matrix: np.ndarray, spec: MatrixSpec, r: int, route: str, elapsed_ns: int) -> str:
    rows = [[_pair(complex(v)) for v in row] for row in matrix]
    document = {
        "schema_version": "1",
        "n": spec.n,
        "r": r,
        "a": _pair(spec.a),
        "b": _pair(spec.b),
        "rows": rows,
        "meta": {"route": route, "elapsed_ns": elapsed_ns},
    }
    return json.dumps(document)


def _matrix_csv(matrix: np.ndarray) -> str:
    n = matrix.shape[0]
    header = ",".join(f"c{j}_re,c{j}_im" for j in range(1, n + 1))
    lines = [header]
    for row in matrix:
        cells = []
        for value in row:
            value = complex(value)
            cells.append(_format_float(value.real))
            cells.append(_format_float(value.imag))
        lines.append(",".join(cells))
    return "\n".join(lines)


def _matrix_pretty(matrix: np.ndarray) -> str:
    cells = [[format_complex(complex(v)) for v in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


_ROUTES = {
    "closed_form": lambda spec, r: power_matrix(PowerRequest(spec=spec, r=r)),
    "spectral": lambda spec, r: power_via_spectral(PowerRequest(spec=spec, r=r)),
    "oracle": naive_power,
}


def _random_band_pairs(seed: int, count: int) -> list[tuple[complex, complex]]:
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(count):
        values = []
        for _ in range(2):
            modulus = rng.uniform(0.5, 2.0)
            phase = rng.uniform(0.0, 2.0 * np.pi)
            values.append(complex(modulus * np.exp(1j * phase)))
        pairs.append((values[0], values[1]))
    return pairs


@click.group()
def cli():
    """Powers, eigenvalues and verification for two-band Toeplitz matrices."""


@cli.command("power")
@click.option("--n", type=int, required=True, help="Matrix order (>= 3).")
@click.option("--r", type=int, required=True, help="Exponent (>= 0).")
@click.option("--a", type=COMPLEX, default="1", help="Value on the +2 band.")
@click.option("--b", type=COMPLEX, default="1", help="Value on the -2 band.")
@click.option(
    "--route",
    type=click.Choice(["closed_form", "spectral", "oracle"]),
    default="closed_form",
)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def power_cmd(n, r, a, b, route, fmt, out):
    """Compute the r-th power and print it."""
    spec = _make_spec(n, a, b)
    if r < 0:
        raise DomainError(f"exponent must be >= 0, got {r}")
    start = time.perf_counter_ns()
    matrix = _ROUTES[route](spec, r)
    elapsed_ns = time.perf_counter_ns() - start
    if fmt == "json":
        text = _matrix_json(matrix, spec, r, route, elapsed_ns)
    elif fmt == "csv":
        text = _matrix_csv(matrix)
    else:
        text = _matrix_pretty(matrix)
    _emit(text, out)


@cli.command("eig")
@click.option("--n", type=int, required=True)
@click.option("--a", type=COMPLEX, default="1")
@click.option("--b", type=COMPLEX, default="1")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def eig_cmd(n, a, b, fmt, out):
    """List the eigenvalues, with multiplicities, in construction order."""
    spec = _make_spec(n, a, b)
    if spec.is_even:
        values = np.repeat(eigenvalues_even(spec), 2)
        parity = "even"
    else:
        values = eigenvalues_odd(spec)
        parity = "odd"
    if fmt == "json":
        document = {
            "schema_version": "1",
            "n": spec.n,
            "a": _pair(spec.a),
            "b": _pair(spec.b),
            "parity": parity,
            "eigenvalues": [_pair(complex(v)) for v in values],
        }
        text = json.dumps(document)
    elif fmt == "csv":
        lines = ["re,im"]
        for value in values:
            value = complex(value)
            lines.append(f"{_format_float(value.real)},{_format_float(value.imag)}")
        text = "\n".join(lines)
    else:
        text = "\n".join(format_complex(complex(v)) for v in values)
    _emit(text, out)


@cli.command("verify")
@click.option("--n", type=int, default=6)
@click.option("--r", type=int, default=6)
@click.option("--a", type=COMPLEX, default="1")
@click.option("--b", type=COMPLEX, default="1")
@click.option("--seed", type=int, default=20240811, help="Seed for --sweep band values.")
@click.option("--sweep", is_flag=True, help="Run the full grid instead of one case.")
@click.option("--rel-tol", type=float, default=1e-8)
def verify_cmd(n, r, a, b, seed, sweep, rel_tol):
    """Check the closed form against the brute-force oracle."""
    if rel_tol <= 0:
        raise DomainError(f"rel-tol must be positive, got {rel_tol}")
    if sweep:
        cases = [
            (order, exponent, av, bv)
            for order in range(3, 13)
            for exponent in range(1, 11)
            for av, bv in _random_band_pairs(seed, 5)
        ]
    else:
        if r < 1:
            raise DomainError(f"verification needs r >= 1, got {r}")
        cases = [(n, r, a, b)]
    failures = 0
    for order, exponent, av, bv in cases:
        spec = _make_spec(order, av, bv)
        report = compare(
            power_matrix(PowerRequest(spec=spec, r=exponent)),
            naive_power(spec, exponent),
            rel_tol,
        )
        status = "PASS" if report.passed else "FAIL"
        failures += 0 if report.passed else 1
        click.echo(
            f"{status} n={order} r={exponent} a={format_complex(av)} "
            f"b={format_complex(bv)} max_rel={report.max_rel_deviation:.3e}"
        )
    click.echo(f"{len(cases) - failures}/{len(cases)} cases passed")
    if failures:
        sys.exit(1)


@cli.command("det")
@click.option("--t", type=int, required=True, help="Quarter order; the matrix has n = 4t.")
@click.option("--x", type=COMPLEX, required=True, help="Value placed on the +2 band.")
def det_cmd(t, x):
    """Determinant identity check for order 4t with the -2 band set to i."""
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    report = determinant_corollary_check(t, x)
    n = 4 * t
    spec = MatrixSpec(n=n, a=x, b=1j)
    lu_value = determinant(build_dense(spec))
    formula_value = ipow(1j * fibonacci_poly(2, x), n // 2)
    status = "PASS" if report.passed else "FAIL"
    click.echo(f"lu_det={format_complex(lu_value)}")
    click.echo(f"formula={format_complex(formula_value)}")
    click.echo(f"deviation={report.max_abs_deviation:.3e} {status}")
    if not report.passed:
        sys.exit(1)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise click.UsageError(f"{flag} expects comma-separated integers, got {text!r}") from exc
    if not values:
        raise click.UsageError(f"{flag} must not be empty")
    return values


@cli.command("bench")
@click.option("--n", "n_list", required=True, help="Comma-separated orders.")
@click.option("--r", "r_list", required=True, help="Comma-separated exponents.")
@click.option(
    "--route",
    "route_list",
    default="closed_form",
    help="Comma-separated routes among closed_form, spectral, oracle.",
)
@click.option("--repeats", type=int, default=5)
@click.option("--a", type=COMPLEX, default="1")
@click.option("--b", type=COMPLEX, default="1")
@click.option("--format", "fmt", type=click.Choice(["csv"]), default="csv")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def bench_cmd(n_list, r_list, route_list, repeats, a, b, fmt, out):
    """Time the routes and report deviation from the oracle as CSV."""
    orders = _parse_int_list(n_list, "--n")
    exponents = _parse_int_list(r_list, "--r")
    routes = [tok for tok in route_list.split(",") if tok != ""]
    for route in routes:
        if route not in _ROUTES:
            raise click.UsageError(f"unknown route {route!r}")
    if not routes:
        raise click.UsageError("--route must not be empty")
    if repeats < 3:
        raise DomainError(f"repeats must be >= 3, got {repeats}")
    lines = ["n,r,route,median_ns,max_rel_vs_oracle"]
    for order in orders:
        spec = _make_spec(order, a, b)
        for exponent in exponents:
            if exponent < 0:
                raise DomainError(f"exponent must be >= 0, got {exponent}")
            reference = naive_power(spec, exponent)
            for route in routes:
                runner = _ROUTES[route]
                timings = []
                result = None
                for _ in range(repeats):
                    start = time.perf_counter_ns()
                    result = runner(spec, exponent)
                    timings.append(time.perf_counter_ns() - start)
                deviation = compare(result, reference, 1e-8).max_rel_deviation
                median_ns = int(statistics.median(timings))
                lines.append(f"{order},{exponent},{route},{median_ns},{deviation:.3e}")
    _emit("\n".join(lines), out)


def main():
    cli()


if __name__ == "__main__":
    main()
