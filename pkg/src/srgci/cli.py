"""``srgci`` command line: JSON reports on stdout, a short summary on stderr.

Exit status: 0 on success, 1 when a check command answers "false" (or a
cross-validation finds discrepancies), 2 on errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .classify import check_gci, check_linear_powers, classify_structure
from .complex import SimplicialComplex, complex_from_dict, dimension
from .crossval import CrossvalConfig, crossval, evaluate_complex
from .errors import OutsideCharacterization, ParseError, SrgciError
from .graph import PathMode
from .homology import FieldSpec
from .ideals import format_ideal, ideal_from_dict, power, stanley_reisner_ideal
from .oracles import graded_betti, has_linear_resolution, is_flc, krull_dimension, local_cohomology

COMMANDS = ("classify", "check-gci", "linear-powers", "betti", "cohomology", "flc", "crossval")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srgci", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", type=Path, help="complex or ideal JSON file ('-' for stdin)")
    p.add_argument("--field", default="32003", help="prime p or 'rational' (default 32003)")
    p.add_argument("--power", type=int, default=1, help="work with the L-th power of the ideal")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--cube-samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--path4-mode", choices=[m.value for m in PathMode], default="simple")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sweeps", default="main,froberg,hhz")
    p.add_argument("--reproducer-dir", type=Path, default=None)
    p.add_argument("--soundness", action="store_true", help="also run the Betti table self-checks")
    return p


def load_input(path: Optional[Path]):
    """Parse a complex ({"n", "facets"}) or an ideal ({"n", "generators"})."""
    if path is None:
        raise ParseError("--input is required for this command")
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data:
        raise ParseError("input must be a JSON object with an 'n' field")
    try:
        if "facets" in data:
            return complex_from_dict(data)
        if "generators" in data:
            return ideal_from_dict(data)
    except (TypeError, KeyError) as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError("input needs either 'facets' or 'generators'")


def _need_complex(obj) -> SimplicialComplex:
    if not isinstance(obj, SimplicialComplex):
        raise ParseError("this command needs a complex file")
    return obj


def _ideal_and_dim(obj, ell: int):
    if isinstance(obj, SimplicialComplex):
        base = stanley_reisner_ideal(obj)
        top = dimension(obj) + 1
    else:
        base = obj
        top = krull_dimension(obj)
    return power(base, ell), top


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _run(args) -> int:
    field = FieldSpec.parse(args.field)
    mode = PathMode(args.path4_mode)
    cmd = args.command

    if cmd == "crossval":
        if args.input is not None:
            cx = _need_complex(load_input(args.input))
            rec = evaluate_complex(cx, args.max_power, field, mode, args.soundness)
            _emit(rec.to_dict())
            print(f"agreement: {rec.agreement}", file=sys.stderr)
            return 0 if rec.agreement else 1
        sweeps = tuple(s.strip() for s in args.sweeps.split(",") if s.strip())
        config = CrossvalConfig(
            max_n=args.max_n,
            max_power=args.max_power,
            samples=args.samples,
            seed=args.seed if args.seed is not None else (0 if not args.samples else None),
            exhaustive=args.exhaustive or args.samples == 0,
            path4_mode=mode,
            field=field,
            sweeps=sweeps,
            cube_samples=args.cube_samples,
            soundness=args.soundness,
        )
        report = crossval(config, args.reproducer_dir)
        _emit(report)
        for s in sweeps:
            if s in report:
                print(f"{s}: {report[s]['checked']} checked, "
                      f"{len(report[s]['discrepancies'])} discrepancies", file=sys.stderr)
        return 0 if report["total_discrepancies"] == 0 else 1

    obj = load_input(args.input)
    if cmd == "classify":
        res = classify_structure(_need_complex(obj))
        _emit(res.to_dict())
        print(f"structure: {res.verdict} ({res.kind})", file=sys.stderr)
        return 0 if res.verdict else 1
    if cmd == "check-gci":
        res = check_gci(_need_complex(obj), mode)
        _emit(res.to_dict())
        print(f"gCI: {res.verdict}", file=sys.stderr)
        return 0 if res.verdict else 1
    if cmd == "linear-powers":
        res = check_linear_powers(_need_complex(obj), mode)
        _emit(res.to_dict())
        print(f"linear powers: {res.verdict}", file=sys.stderr)
        return 0 if res.verdict else 1

    ideal, top = _ideal_and_dim(obj, args.power)
    if cmd == "betti":
        table = graded_betti(ideal, field)
        report = {"ideal": ideal.to_dict(), "power": args.power, "field": str(field)}
        report.update(table.to_dict())
        if ideal.is_equigenerated:
            linear, witness = has_linear_resolution(ideal, field, table)
            report["linear"] = linear
            report["linear_witness"] = list(witness) if witness else None
        else:
            report["linear"] = None
        _emit(report)
        print(f"{format_ideal(ideal)}: total Betti numbers {table.total_ranks()}", file=sys.stderr)
        return 0
    if cmd == "cohomology":
        entries = local_cohomology(ideal, top, field)
        _emit({"ideal": ideal.to_dict(), "power": args.power, "top_dim": top,
               "entries": [e.to_dict() for e in entries]})
        print(f"{len(entries)} nonzero graded pieces below degree {top}", file=sys.stderr)
        return 0
    if cmd == "flc":
        rep = is_flc(ideal, top, field)
        _emit({"ideal": ideal.to_dict(), "power": args.power, "top_dim": top, "flc": rep.to_dict()})
        print(f"FLC: {rep.verdict}", file=sys.stderr)
        return 0 if rep.verdict else 1
    raise AssertionError(cmd)  # pragma: no cover


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except OutsideCharacterization as exc:
        _emit({"error": "OutsideCharacterization", "reason": exc.reason})
        print(f"outside characterization: {exc.reason}", file=sys.stderr)
        return 2
    except (SrgciError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
