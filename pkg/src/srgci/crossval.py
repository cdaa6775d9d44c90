"""Cross-validation of the combinatorial checkers against the algebraic oracles.

Three sweeps:

* main:    classify_structure = check_linear_powers = check_gci and chordal
           = (I^l linear and FLC for l <= max_power), over flag pure complexes
           with core equal to the complex and non-CI ideal;
* froberg: chordal complement <=> linear edge ideal;
* hhz:     I linear => I^2 linear (and I^3 for the first few samples).

Sampling uses ``random.Random(seed)`` (Mersenne Twister), so reports are
reproducible for a given seed.
"""
from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .classify import check_gci, check_linear_powers, classify_structure
from .complex import SimplicialComplex, dimension, one_skeleton_graph, simp_closure
from .enumerate import (
    MAX_N,
    enumerate_complexes,
    nonisomorphic_graphs,
    passes_filters,
    random_graph,
)
from .graph import Graph, PathMode, complement, is_chordal
from .homology import DEFAULT_FIELD, RATIONAL, FieldSpec
from .ideals import MonomialIdeal, power, stanley_reisner_ideal
from .oracles import betti_consistency, graded_betti, has_linear_resolution, is_flc

log = logging.getLogger(__name__)


@dataclass
class CrossvalConfig:
    max_n: int = 4
    max_power: int = 2
    samples: int = 0
    seed: Optional[int] = 0
    exhaustive: bool = True
    path4_mode: PathMode = PathMode.SIMPLE
    field: FieldSpec = DEFAULT_FIELD
    sweeps: tuple = ("main", "froberg", "hhz")
    cube_samples: int = 0
    soundness: bool = False

    def __post_init__(self):
        self.path4_mode = PathMode(self.path4_mode)
        if self.exhaustive and self.max_n > MAX_N:
            raise ValueError(f"exhaustive mode needs max_n <= {MAX_N}")
        if self.samples and self.seed is None:
            raise ValueError("a seed is required when sampling")
        if self.max_power < 1:
            raise ValueError("max_power must be >= 1")

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_power": self.max_power,
            "samples": self.samples,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "path4_mode": self.path4_mode.value,
            "field": str(self.field),
            "sweeps": list(self.sweeps),
        }


def oracle_verdicts(cx: SimplicialComplex, max_power: int, field: FieldSpec, soundness: bool = False) -> dict:
    ideal = stanley_reisner_ideal(cx)
    top = dimension(cx) + 1
    out = {}
    problems = []
    for ell in range(1, max_power + 1):
        p = power(ideal, ell)
        table = graded_betti(p, field)
        linear = has_linear_resolution(p, field, table)[0] if p.is_equigenerated else False
        flc = is_flc(p, top, field, first_only=True).verdict
        out[str(ell)] = {"linear": linear, "flc": flc}
        if soundness:
            problems.extend(f"I^{ell}: {msg}" for msg in betti_consistency(p, table))
    out["verdict"] = all(v["linear"] and v["flc"] for k, v in out.items() if k != "verdict")
    if soundness:
        out["soundness_problems"] = problems
    return out


@dataclass
class CrossvalRecord:
    complex: SimplicialComplex
    checkers: dict
    oracle: dict
    agreement: bool
    rational_replay: Optional[dict] = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        out = {
            "complex": self.complex.to_dict(),
            "checkers": self.checkers,
            "oracle": self.oracle,
            "agreement": self.agreement,
        }
        if self.rational_replay is not None:
            out["rational_replay"] = self.rational_replay
        return out


def evaluate_complex(
    cx: SimplicialComplex,
    max_power: int = 2,
    field: FieldSpec = DEFAULT_FIELD,
    mode: PathMode = PathMode.SIMPLE,
    soundness: bool = False,
) -> CrossvalRecord:
    """Run every checker and the oracle conjunction on one complex."""
    t0 = time.perf_counter()
    gci = check_gci(cx, mode)
    checkers = {
        "classify_structure": classify_structure(cx).verdict,
        "check_linear_powers": check_linear_powers(cx, mode).verdict,
        "gci_and_chordal": gci.verdict and is_chordal(one_skeleton_graph(cx)).chordal,
    }
    oracle = oracle_verdicts(cx, max_power, field, soundness)
    agree = len(set(checkers.values()) | {oracle["verdict"]}) == 1
    replay = None
    if not agree and not field.is_rational:
        replay = oracle_verdicts(cx, max_power, RATIONAL)
    return CrossvalRecord(cx, checkers, oracle, agree, replay, time.perf_counter() - t0)


def main_family(config: CrossvalConfig, rng: random.Random) -> Iterable[SimplicialComplex]:
    if config.exhaustive:
        yield from enumerate_complexes(config.max_n, pure=True, core_equals_delta=True, non_ci=True)
        return
    produced = 0
    attempts = 0
    while produced < config.samples and attempts < 1000 * max(config.samples, 1):
        attempts += 1
        n = rng.randrange(2, config.max_n + 1)
        cx = simp_closure(random_graph(rng, n))
        if passes_filters(cx, pure=True, core_equals_delta=True, non_ci=True):
            produced += 1
            yield cx


def run_main_sweep(config: CrossvalConfig, family: Optional[Iterable[SimplicialComplex]] = None) -> dict:
    rng = random.Random(config.seed)
    family = main_family(config, rng) if family is None else family
    records = [
        evaluate_complex(cx, config.max_power, config.field, config.path4_mode, config.soundness)
        for cx in family
    ]
    problems = [
        {"complex": r.complex.to_dict(), "problems": r.oracle["soundness_problems"]}
        for r in records
        if r.oracle.get("soundness_problems")
    ]
    out = {
        "checked": len(records),
        "agreements": sum(r.agreement for r in records),
        "positives": sum(r.oracle["verdict"] for r in records),
        "discrepancies": [r.to_dict() for r in records if not r.agreement],
        "seconds": sum(r.seconds for r in records),
    }
    if config.soundness:
        out["soundness_problems"] = problems
    return out


def froberg_pairs(graphs: Iterable[Graph], field: FieldSpec = DEFAULT_FIELD) -> dict:
    checked = 0
    discrepancies = []
    for g in graphs:
        if not g.edges:
            continue
        ideal = MonomialIdeal.from_supports(g.n, g.edges)
        chordal = is_chordal(complement(g)).chordal
        linear = has_linear_resolution(ideal, field)[0]
        checked += 1
        if chordal != linear:
            discrepancies.append({"graph": g.to_dict(), "chordal_complement": chordal, "linear": linear})
    return {"checked": checked, "discrepancies": discrepancies}


def froberg_graphs(config: CrossvalConfig, rng: random.Random) -> Iterable[Graph]:
    if config.exhaustive:
        for n in range(1, config.max_n + 1):
            yield from nonisomorphic_graphs(n)
    for _ in range(config.samples):
        yield random_graph(rng, config.max_n)


def hhz_pairs(ideals: Iterable[MonomialIdeal], cube_count: int = 0, field: FieldSpec = DEFAULT_FIELD) -> dict:
    """Linear I must give linear I^2 (and I^3 for the first ``cube_count``).

    The converse fails (the 5-cycle edge ideal is not linear, its square is),
    so such cases are listed under ``converse_only`` and are not discrepancies.
    """
    checked = 0
    discrepancies = []
    converse = []
    for k, ideal in enumerate(ideals):
        verdicts = [has_linear_resolution(ideal, field)[0], has_linear_resolution(power(ideal, 2), field)[0]]
        if k < cube_count:
            verdicts.append(has_linear_resolution(power(ideal, 3), field)[0])
        checked += 1
        if verdicts[0] and not all(verdicts):
            discrepancies.append({"ideal": ideal.to_dict(), "linear_by_power": verdicts})
        elif not verdicts[0] and any(verdicts):
            converse.append({"ideal": ideal.to_dict(), "linear_by_power": verdicts})
    return {
        "checked": checked,
        "cubes_checked": min(cube_count, checked),
        "discrepancies": discrepancies,
        "converse_only": converse,
    }


def sample_degree2_ideals(rng: random.Random, count: int, max_n: int) -> list:
    out = []
    while len(out) < count:
        n = rng.randrange(2, max_n + 1)
        g = random_graph(rng, n)
        if g.edges:
            out.append(MonomialIdeal.from_supports(n, g.edges))
    return out


def crossval(config: CrossvalConfig, reproducer_dir: Optional[Path] = None) -> dict:
    """Run the configured sweeps; returns the JSON-ready summary."""
    report = {"config": config.to_dict()}
    timings = {}
    if "main" in config.sweeps:
        t0 = time.perf_counter()
        report["main"] = run_main_sweep(config)
        timings["main"] = time.perf_counter() - t0
        if reproducer_dir is not None and report["main"]["discrepancies"]:
            report["main"]["reproducers"] = write_reproducers(report["main"]["discrepancies"], reproducer_dir)
    if "froberg" in config.sweeps:
        t0 = time.perf_counter()
        report["froberg"] = froberg_pairs(froberg_graphs(config, random.Random(config.seed)), config.field)
        timings["froberg"] = time.perf_counter() - t0
    if "hhz" in config.sweeps:
        t0 = time.perf_counter()
        rng = random.Random(config.seed)
        ideals = sample_degree2_ideals(rng, config.samples, config.max_n)
        report["hhz"] = hhz_pairs(ideals, config.cube_samples, config.field)
        timings["hhz"] = time.perf_counter() - t0
    total = sum(len(report[s]["discrepancies"]) for s in config.sweeps if s in report)
    report["total_discrepancies"] = total
    for name, secs in timings.items():
        log.info("%s sweep: %.2fs", name, secs)
    # wall-clock numbers are kept out of the JSON so reports stay byte-identical
    if "main" in report:
        report["main"].pop("seconds", None)
    return report


def write_reproducers(discrepancies: list, directory: Path) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, rec in enumerate(discrepancies):
        path = directory / f"discrepancy_{k:03d}.json"
        data = dict(rec["complex"])
        data["discrepancy"] = rec
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        paths.append(str(path))
    return paths
