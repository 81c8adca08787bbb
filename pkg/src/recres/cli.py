"""Command-line surface and the instance/report JSON formats.

Commands
--------
recres sequence  <file> --n N [--json OUT]          print r_0..r_N
recres resultant <file> --n N --method formula|sylvester|euclid|all
recres verify    <file> --n-max N [--json OUT]      full identity check
recres fuzz --seed S --count C [--d-max --m-max --k-max --i-max
            --n-max --field rational|<p> --coeff-bound B] --out DIR

Exit codes: 0 success / all checks agree; 2 unreadable or malformed
input; 3 validation failure (report printed); 4 any value mismatch --
the falsification signal; 5 fuzz resampling exhausted.

Instance schema (version 1)::

    {"schema": 1,
     "field": "rational" | {"prime": p},
     "d": int, "m": int, "k": int, "l": int,
     "degrees": [i_0, ..., i_d],
     "initials": [[coeff, ...], ...],            # scalar text, ascending degree
     "steps": {"<n>": {"g": [coeff, ...],
                        "t": [{"alpha": [..], "coeffs": [..]}, ...],
                        "v": coeff}},
     "name": optional str, "seed": optional int}

Reports use the same scalar text encoding.  Fuzz reports and instance
dumps contain no timestamps or timings, so identical (seed, bounds,
tool version) runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .closedform import FormulaContext, degree_formula
from .field import FieldDescriptor, InvalidModulus, Scalar, prime_field, rationals
from .poly import Poly
from .recurrence import (
    DegreeMismatchError,
    MissingStepError,
    RecurrenceSpec,
    StepCoeffs,
    TTerm,
    ValidationReport,
    generate,
    validate,
)
from .resultant import resultant_euclid, resultant_sylvester

SCHEMA_VERSION = 1
MAX_RESAMPLE = 200


class InstanceFormatError(ValueError):
    """Instance file is structurally unusable."""


# ---------------------------------------------------------------------------
# instance (de)serialization
# ---------------------------------------------------------------------------


def field_to_json(desc: FieldDescriptor):
    return {"prime": desc.modulus} if desc.is_prime_field else "rational"


def field_from_json(obj) -> FieldDescriptor:
    if obj == "rational":
        return rationals()
    if isinstance(obj, dict) and set(obj) == {"prime"} and isinstance(obj["prime"], int):
        try:
            return prime_field(obj["prime"])
        except InvalidModulus as exc:
            raise InstanceFormatError(str(exc)) from exc
    raise InstanceFormatError(f"bad field spec {obj!r}")


def spec_to_json(spec: RecurrenceSpec, seed: int | None = None) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "field": field_to_json(spec.descriptor),
        "d": spec.d,
        "m": spec.m,
        "k": spec.k,
        "l": spec.l,
        "degrees": list(spec.degrees),
        "initials": [p.to_text() for p in spec.initials],
        "steps": {
            str(n): {
                "g": coeffs.g.to_text(),
                "t": [{"alpha": list(t.alpha), "coeffs": t.poly.to_text()} for t in coeffs.t_terms],
                "v": coeffs.v.to_text(),
            }
            for n, coeffs in sorted(spec.steps.items())
        },
    }
    if spec.name is not None:
        doc["name"] = spec.name
    if seed is not None:
        doc["seed"] = seed
    return doc


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise InstanceFormatError(message)


def spec_from_json(doc) -> RecurrenceSpec:
    _expect(isinstance(doc, dict), "top level must be an object")
    _expect(doc.get("schema") == SCHEMA_VERSION, f"schema must be {SCHEMA_VERSION}")
    desc = field_from_json(doc.get("field"))
    for key in ("d", "m", "k", "l"):
        _expect(isinstance(doc.get(key), int), f"{key!r} must be an integer")
    d = doc["d"]
    _expect(d >= 1, "d must be >= 1")
    degrees = doc.get("degrees")
    _expect(
        isinstance(degrees, list) and all(isinstance(x, int) and x >= 0 for x in degrees),
        "'degrees' must be a list of nonnegative integers",
    )
    initials = doc.get("initials")
    _expect(isinstance(initials, list), "'initials' must be a list")
    _expect(len(initials) == len(degrees) == d + 1, f"need exactly d+1 = {d + 1} degrees and initials")

    def poly_of(coeffs, what: str) -> Poly:
        _expect(isinstance(coeffs, list) and all(isinstance(c, str) for c in coeffs), f"{what} must be a list of scalar strings")
        try:
            return Poly.from_text(desc, coeffs)
        except ValueError as exc:
            raise InstanceFormatError(f"{what}: {exc}") from exc

    initial_polys = tuple(poly_of(c, f"initials[{s}]") for s, c in enumerate(initials))
    steps_doc = doc.get("steps", {})
    _expect(isinstance(steps_doc, dict), "'steps' must be an object keyed by n")
    steps: dict[int, StepCoeffs] = {}
    for key, entry in steps_doc.items():
        try:
            n = int(key)
        except ValueError:
            raise InstanceFormatError(f"step key {key!r} is not an integer") from None
        _expect(n >= d + 1, f"step {n} precedes d+1 = {d + 1}")
        _expect(isinstance(entry, dict), f"step {n} must be an object")
        g = poly_of(entry.get("g"), f"steps[{n}].g")
        _expect(isinstance(entry.get("v"), str), f"steps[{n}].v must be a scalar string")
        try:
            v = Scalar.parse(desc, entry["v"])
        except ValueError as exc:
            raise InstanceFormatError(f"steps[{n}].v: {exc}") from exc
        t_terms = []
        for t in entry.get("t", []):
            _expect(isinstance(t, dict), f"steps[{n}].t entries must be objects")
            alpha = t.get("alpha")
            _expect(
                isinstance(alpha, list) and len(alpha) == d + 1 and all(isinstance(x, int) and x >= 0 for x in alpha),
                f"steps[{n}]: alpha must be {d + 1} nonnegative integers",
            )
            t_terms.append(TTerm(alpha=tuple(alpha), poly=poly_of(t.get("coeffs"), f"steps[{n}].t coeffs")))
        steps[n] = StepCoeffs(g=g, v=v, t_terms=tuple(t_terms))
    name = doc.get("name")
    _expect(name is None or isinstance(name, str), "'name' must be a string")
    return RecurrenceSpec(
        descriptor=desc, d=d, m=doc["m"], k=doc["k"], l=doc["l"],
        degrees=tuple(degrees), initials=initial_polys, steps=steps, name=name,
    )


def load_instance(path: str) -> RecurrenceSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path} is not valid JSON: {exc}") from exc
    return spec_from_json(doc)


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# verification core, shared by `verify`, `resultant` and `fuzz`
# ---------------------------------------------------------------------------


def validation_to_json(report: ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "violations": [{"code": v.code, "n": v.n, "detail": v.detail} for v in report.violations],
        "warnings": [{"code": v.code, "n": v.n, "detail": v.detail} for v in report.warnings],
    }


def verify_records(spec: RecurrenceSpec, n_max: int, *, allow_zero_v: bool = False) -> tuple[list[dict], bool]:
    """One record per n in d+1..n_max; the caller must have validated.

    Each record carries the generated degree next to the closed-form
    degree, the leading/constant cross-checks, and the three resultant
    values with their match flag.
    """
    seq = generate(spec, n_max, allow_zero_v=allow_zero_v)
    ctx = FormulaContext(spec, allow_zero_v=allow_zero_v)
    records = []
    all_ok = True
    for n in range(spec.d + 1, n_max + 1):
        r_n, r_prev = seq[n], seq[n - 1]
        formula = ctx.resultant_formula(n)
        sylvester = resultant_sylvester(r_n, r_prev)
        euclid = resultant_euclid(r_n, r_prev)
        degree_ok = r_n.degree() == degree_formula(spec, n)
        leading_ok = r_n.leading_coeff() == ctx.leading_term(n)
        constant_ok = r_n.evaluate(Scalar(spec.descriptor, 0)) == ctx.constant_value(n)
        match = formula == sylvester == euclid
        record = {
            "n": n,
            "degree": r_n.degree(),
            "degree_formula": degree_formula(spec, n),
            "degree_match": degree_ok,
            "leading_match": leading_ok,
            "constant_match": constant_ok,
            "formula": formula.to_text(),
            "sylvester": sylvester.to_text(),
            "euclid": euclid.to_text(),
            "match": match,
        }
        records.append(record)
        all_ok = all_ok and match and degree_ok and leading_ok and constant_ok
    return records, all_ok


def _base_report(command: str, spec: RecurrenceSpec, instance: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": "recres",
        "tool_version": __version__,
        "command": command,
        "instance": instance,
        "field": field_to_json(spec.descriptor),
        "seed": None,
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _load_or_exit(path: str) -> RecurrenceSpec | int:
    try:
        return load_instance(path)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _validate_or_exit(spec: RecurrenceSpec, up_to: int, allow_zero_v: bool) -> ValidationReport | int:
    try:
        report = validate(spec, up_to, allow_zero_v=allow_zero_v)
    except MissingStepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not report.ok:
        print(f"validation failed: {report}", file=sys.stderr)
        return 3
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return report


def cmd_sequence(args) -> int:
    spec = _load_or_exit(args.instance)
    if isinstance(spec, int):
        return spec
    n_max = args.n
    if n_max < spec.d:
        print(f"error: --n must be >= d = {spec.d}", file=sys.stderr)
        return 2
    report = _validate_or_exit(spec, n_max, args.allow_zero_v)
    if isinstance(report, int):
        return report
    try:
        seq = generate(spec, n_max, allow_zero_v=args.allow_zero_v)
    except DegreeMismatchError as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return 4
    for n, poly in enumerate(seq):
        print(f"r_{n} = {poly}, deg {poly.degree()}")
    if args.json:
        doc = _base_report("sequence", spec, args.instance)
        doc["n_range"] = [0, n_max]
        doc["polynomials"] = [p.to_text() for p in seq]
        doc["degrees"] = [p.degree() if not p.is_zero() else None for p in seq]
        doc["validation"] = validation_to_json(report)
        _write_json(Path(args.json), doc)
    return 0


def cmd_resultant(args) -> int:
    spec = _load_or_exit(args.instance)
    if isinstance(spec, int):
        return spec
    n = args.n
    if n < spec.d + 1:
        print(f"error: --n must be >= d+1 = {spec.d + 1}", file=sys.stderr)
        return 2
    report = _validate_or_exit(spec, n, args.allow_zero_v)
    if isinstance(report, int):
        return report
    started = time.perf_counter()
    values: dict[str, Scalar] = {}
    try:
        if args.method in ("formula", "all"):
            ctx = FormulaContext(spec, allow_zero_v=args.allow_zero_v)
            values["formula"] = ctx.resultant_formula(n)
        if args.method in ("sylvester", "euclid", "all"):
            seq = generate(spec, n, allow_zero_v=args.allow_zero_v)
            if args.method in ("sylvester", "all"):
                values["sylvester"] = resultant_sylvester(seq[n], seq[n - 1])
            if args.method in ("euclid", "all"):
                values["euclid"] = resultant_euclid(seq[n], seq[n - 1])
    except MissingStepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegreeMismatchError as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return 4
    elapsed = time.perf_counter() - started
    for method, value in values.items():
        print(f"{method}: {value}")
    distinct = {v.to_text() for v in values.values()}
    match = len(distinct) == 1
    doc = _base_report("resultant", spec, args.instance)
    doc["n"] = n
    doc["method"] = args.method
    doc["values"] = {method: v.to_text() for method, v in values.items()}
    doc["match"] = match
    doc["validation"] = validation_to_json(report)
    doc["elapsed_seconds"] = round(elapsed, 6)
    if args.json:
        _write_json(Path(args.json), doc)
    if not match:
        print(f"MISMATCH at n={n}: " + ", ".join(f"{m}={v}" for m, v in doc["values"].items()), file=sys.stderr)
        return 4
    return 0


def cmd_verify(args) -> int:
    spec = _load_or_exit(args.instance)
    if isinstance(spec, int):
        return spec
    n_max = args.n_max
    if n_max < spec.d + 1:
        print(f"error: --n-max must be >= d+1 = {spec.d + 1}", file=sys.stderr)
        return 2
    report = _validate_or_exit(spec, n_max, args.allow_zero_v)
    if isinstance(report, int):
        return report
    started = time.perf_counter()
    try:
        records, all_ok = verify_records(spec, n_max, allow_zero_v=args.allow_zero_v)
    except (MissingStepError, DegreeMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, MissingStepError) else 4
    elapsed = time.perf_counter() - started
    for record in records:
        status = "ok" if record["match"] and record["degree_match"] and record["leading_match"] and record["constant_match"] else "MISMATCH"
        print(
            f"n={record['n']}: deg {record['degree']} formula {record['formula']} "
            f"sylvester {record['sylvester']} euclid {record['euclid']} [{status}]"
        )
    doc = _base_report("verify", spec, args.instance)
    doc["n_range"] = [spec.d + 1, n_max]
    doc["records"] = records
    doc["all_match"] = all_ok
    doc["validation"] = validation_to_json(report)
    doc["elapsed_seconds"] = round(elapsed, 6)
    if args.json:
        _write_json(Path(args.json), doc)
    if not all_ok:
        first_bad = next(r["n"] for r in records if not (r["match"] and r["degree_match"] and r["leading_match"] and r["constant_match"]))
        print(f"MISMATCH first at n={first_bad}", file=sys.stderr)
        return 4
    print(f"all {len(records)} checks agree ({elapsed:.3f}s)")
    return 0


# ---------------------------------------------------------------------------
# fuzzing
# ---------------------------------------------------------------------------


class Lcg:
    """64-bit linear congruential generator with fixed constants.

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64,
    seeded with the given integer reduced mod 2^64.  `below(n)` advances
    the state once and returns (state' >> 33) mod n.  Everything is
    specified exactly so streams can be reproduced by any implementation.
    """

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def below(self, n: int) -> int:
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return (self.state >> 33) % n

    def int_in(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        return lo + self.below(hi - lo + 1)

    def nonzero_int_in(self, lo: int, hi: int) -> int:
        while True:
            v = self.int_in(lo, hi)
            if v:
                return v


def _draw_poly(rng: Lcg, desc: FieldDescriptor, degree: int, bound: int) -> Poly:
    """Random polynomial of exact degree with coefficients in [-bound, bound]."""
    coeffs = [rng.int_in(-bound, bound) for _ in range(degree)]
    coeffs.append(rng.nonzero_int_in(-bound, bound))
    return Poly(desc, coeffs)


def _draw_t_poly(rng: Lcg, desc: FieldDescriptor, k: int, bound: int) -> Poly:
    # t(0) = 0 and deg t < k: coefficients only for x^1 .. x^(k-1)
    return Poly(desc, [0] + [rng.int_in(-bound, bound) for _ in range(k - 1)])


def _alphas_below(d: int, m: int) -> list[tuple[int, ...]]:
    """All alpha in N^{d+1} with |alpha| < m, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], budget: int) -> None:
        if len(prefix) == d + 1:
            out.append(prefix)
            return
        for value in range(budget + 1):
            rec(prefix + (value,), budget - value)

    rec((), m - 1)
    return sorted(out)


def _draw_instance(rng: Lcg, desc: FieldDescriptor, bounds: dict, index: int) -> RecurrenceSpec:
    d = rng.int_in(1, bounds["d_max"])
    m = rng.int_in(1, bounds["m_max"])
    k = rng.int_in(0, bounds["k_max"])
    l = rng.int_in(0, k)
    degrees = sorted(rng.int_in(0, bounds["i_max"]) for _ in range(d + 1))
    # one draw in four forces the i_d = i_{d-1}, k = l branch so the
    # alternate leading-term base case gets real coverage
    if rng.below(4) == 0:
        l = k
        degrees[d - 1] = degrees[d]
        degrees = sorted(degrees)
    bound = bounds["coeff_bound"]
    initials = tuple(_draw_poly(rng, desc, deg, bound) for deg in degrees)
    n_max = _resolve_n_max(bounds["n_max"], d, m)
    alphas = _alphas_below(d, m) if k >= 1 else []
    steps = {}
    for n in range(d + 1, n_max + 1):
        g = _draw_poly(rng, desc, k, bound)
        v = Scalar(desc, rng.nonzero_int_in(-bound, bound))
        t_terms = []
        if alphas and k >= 2:
            chosen: set[int] = set()
            for _ in range(rng.below(min(len(alphas), 3) + 1)):
                pick = rng.below(len(alphas))
                if pick in chosen:
                    continue
                chosen.add(pick)
                t = _draw_t_poly(rng, desc, k, bound)
                if not t.is_zero():
                    t_terms.append(TTerm(alpha=alphas[pick], poly=t))
        steps[n] = StepCoeffs(g=g, v=v, t_terms=tuple(t_terms))
    return RecurrenceSpec(
        descriptor=desc, d=d, m=m, k=k, l=l,
        degrees=tuple(degrees), initials=initials, steps=steps,
        name=f"fuzz-{index:03d}",
    )


def _resolve_n_max(setting, d: int, m: int) -> int:
    """--n-max accepts an absolute index, 'd+K', or None for the default
    d+3 (m >= 2) / d+6 (m = 1)."""
    if setting is None:
        return d + 3 if m >= 2 else d + 6
    if isinstance(setting, int):
        return setting
    return d + int(setting)


def _parse_n_max(text: str):
    text = text.strip()
    if text.startswith("d+"):
        int(text[2:])
        return text[2:]
    return int(text)


def _parse_field(text: str) -> FieldDescriptor:
    if text == "rational":
        return rationals()
    try:
        return prime_field(int(text))
    except (ValueError, InvalidModulus) as exc:
        raise argparse.ArgumentTypeError(f"--field must be 'rational' or a prime: {exc}")


def cmd_fuzz(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    desc = args.field
    bounds = {
        "d_max": args.d_max,
        "m_max": args.m_max,
        "k_max": args.k_max,
        "i_max": args.i_max,
        "coeff_bound": args.coeff_bound,
        "n_max": args.n_max,
    }
    rng = Lcg(args.seed)
    instances = []
    edge_count = 0
    mismatch_path = None
    total_draws = 0
    for index in range(args.count):
        spec = None
        for _ in range(MAX_RESAMPLE):
            total_draws += 1
            candidate = _draw_instance(rng, desc, bounds, index)
            n_max = _resolve_n_max(args.n_max, candidate.d, candidate.m)
            if validate(candidate, n_max).ok:
                spec = candidate
                break
        if spec is None:
            print(f"error: no valid instance after {MAX_RESAMPLE} draws (index {index})", file=sys.stderr)
            return 5
        n_max = _resolve_n_max(args.n_max, spec.d, spec.m)
        file_name = f"instance_{index:03d}.json"
        _write_json(out_dir / file_name, spec_to_json(spec, seed=args.seed))
        try:
            records, all_ok = verify_records(spec, n_max)
        except DegreeMismatchError as exc:
            print(f"MISMATCH: {exc} (see {out_dir / file_name})", file=sys.stderr)
            return 4
        edge = spec.degrees[spec.d] == spec.degrees[spec.d - 1] and spec.k == spec.l
        edge_count += edge
        instances.append(
            {
                "index": index,
                "path": file_name,
                "d": spec.d,
                "m": spec.m,
                "k": spec.k,
                "l": spec.l,
                "degrees": list(spec.degrees),
                "edge_branch": edge,
                "n_range": [spec.d + 1, n_max],
                "records": records,
                "all_match": all_ok,
            }
        )
        status = "ok" if all_ok else "MISMATCH"
        print(
            f"instance {index:03d}: d={spec.d} m={spec.m} k={spec.k} l={spec.l} "
            f"degrees={list(spec.degrees)} edge={edge} n<={n_max} [{status}]"
        )
        if not all_ok and mismatch_path is None:
            mismatch_path = out_dir / file_name
    report = {
        "schema": SCHEMA_VERSION,
        "tool": "recres",
        "tool_version": __version__,
        "command": "fuzz",
        "seed": args.seed,
        "count": args.count,
        "field": field_to_json(desc),
        "bounds": {
            "d_max": args.d_max,
            "m_max": args.m_max,
            "k_max": args.k_max,
            "i_max": args.i_max,
            "coeff_bound": args.coeff_bound,
            "n_max": args.n_max if args.n_max is None or isinstance(args.n_max, int) else f"d+{args.n_max}",
        },
        "branch_coverage": {"edge": edge_count, "normal": len(instances) - edge_count},
        "total_draws": total_draws,
        "instances": instances,
        "all_match": all(inst["all_match"] for inst in instances),
    }
    _write_json(out_dir / "report.json", report)
    print(
        f"{sum(inst['all_match'] for inst in instances)}/{len(instances)} instances verified, "
        f"branch coverage: edge={edge_count} normal={len(instances) - edge_count}"
    )
    if mismatch_path is not None:
        print(f"MISMATCH: see {mismatch_path}", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recres",
        description="Exact resultants of recursively defined polynomial sequences: "
        "closed form vs Sylvester determinant vs Euclidean remainders.",
    )
    parser.add_argument("--version", action="version", version=f"recres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("sequence", help="generate and print r_0..r_N")
    seq.add_argument("instance")
    seq.add_argument("--n", type=int, required=True)
    seq.add_argument("--json", metavar="OUT")
    seq.add_argument("--allow-zero-v", action="store_true", help="downgrade v_n = 0 to a warning")
    seq.set_defaults(func=cmd_sequence)

    res = sub.add_parser("resultant", help="Res(r_n, r_{n-1}) by one or all methods")
    res.add_argument("instance")
    res.add_argument("--n", type=int, required=True)
    res.add_argument("--method", choices=("formula", "sylvester", "euclid", "all"), default="all")
    res.add_argument("--json", metavar="OUT")
    res.add_argument("--allow-zero-v", action="store_true")
    res.set_defaults(func=cmd_resultant)

    ver = sub.add_parser("verify", help="check the closed-form identity for d+1 <= n <= N")
    ver.add_argument("instance")
    ver.add_argument("--n-max", type=int, required=True)
    ver.add_argument("--json", metavar="OUT")
    ver.add_argument("--allow-zero-v", action="store_true")
    ver.set_defaults(func=cmd_verify)

    fuzz = sub.add_parser("fuzz", help="verify randomized instances; dump them for replay")
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--count", type=int, required=True)
    fuzz.add_argument("--d-max", type=int, default=2)
    fuzz.add_argument("--m-max", type=int, default=2)
    fuzz.add_argument("--k-max", type=int, default=3)
    fuzz.add_argument("--i-max", type=int, default=3)
    fuzz.add_argument(
        "--n-max",
        type=_parse_n_max,
        default=None,
        help="absolute index or 'd+K'; default d+3 for m >= 2, d+6 for m = 1",
    )
    fuzz.add_argument("--field", type=_parse_field, default=prime_field(10007), help="'rational' or a prime (default 10007)")
    fuzz.add_argument("--coeff-bound", type=int, default=5, help="coefficients drawn from [-B, B] (default 5)")
    fuzz.add_argument("--out", required=True, metavar="DIR")
    fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
