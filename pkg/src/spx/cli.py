"""
Command-line front end.

    spx homology --named rp2 --n 3 --coeff Z
    spx ring --named sphere --n 4 --coeff Q
    spx verify macdonald --genus 2 --n 3

Exit codes: 0 success, 1 a verification failed, 2 presentation parse
error, 3 invalid configuration, 4 internal arithmetic assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cohomring
from .diagonal import InexactDivision
from .exactlinalg import Coefficients
from .homology import (Report, bigraded_homology, dold_milgram_check, dold_thom_check, homology,
                       splitting_check, torsion_prime_check)
from .presentation import ComplexPresentation, PresentationError, named_complex, parse_presentation

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CONFIG, EXIT_INTERNAL = 0, 1, 2, 3, 4
N_CAP = 6
DEGREE_CAP = 8

SUITES = ("macdonald", "nonorientable", "clifford", "real-clifford",
          "dold-thom", "dold-milgram", "splitting", "torsion")


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


@dataclass
class RunConfig:
    command: str
    complex_name: str | None = None
    path: Path | None = None
    n: int | None = None
    max_n: int | None = None
    max_degree: int | None = None
    genus: int | None = None
    coeff: Coefficients | None = None
    fmt: str = "table"
    output: Path | None = None
    bigraded: bool = False
    suite: str | None = None
    allow_large: bool = False

    def presentation(self) -> ComplexPresentation:
        if self.path is not None:
            try:
                text = self.path.read_text()
            except OSError as exc:
                raise ConfigError(f"cannot read {self.path}: {exc}") from None
            return parse_presentation(text)
        if self.complex_name is None:
            raise ConfigError("give --named or --file")
        try:
            return named_complex(self.complex_name)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def check_n(self, n: int, what: str = "--n"):
        if n < 0:
            raise ConfigError(f"{what} must be >= 0")
        if n > N_CAP and not self.allow_large:
            raise ConfigError(f"{what} {n} exceeds {N_CAP}; pass --allow-large to override")


def _parse_coeff(text: str) -> Coefficients:
    try:
        return Coefficients.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spx", description="Homology and cohomology rings of symmetric products of 2-complexes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, source=True):
        if source:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--named", help="named complex, e.g. rp2, torus, surface:2, lens:6, bouquet:3")
            g.add_argument("--file", type=Path, help="presentation file")
        p.add_argument("--coeff", type=_parse_coeff, help="Z, Q or Fp with p prime")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--output", type=Path, help="write the report here instead of stdout")
        p.add_argument("--allow-large", action="store_true", help=f"permit n above {N_CAP}")

    h = sub.add_parser("homology", help="homology groups of SP^n X")
    common(h)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--bigraded", action="store_true", help="also print the filtration splitting")

    r = sub.add_parser("ring", help="cohomology ring of SP^n X over a field")
    common(r)
    r.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    common(v)
    v.add_argument("--n", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--genus", type=int)
    v.add_argument("--max-degree", type=int)
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, complex_name=ns.named, path=ns.file,
                    n=getattr(ns, "n", None), coeff=ns.coeff, fmt=ns.format, output=ns.output,
                    allow_large=ns.allow_large, bigraded=getattr(ns, "bigraded", False),
                    suite=getattr(ns, "suite", None), max_n=getattr(ns, "max_n", None),
                    genus=getattr(ns, "genus", None), max_degree=getattr(ns, "max_degree", None))
    for attr in ("n", "max_n"):
        val = getattr(cfg, attr)
        if val is not None:
            cfg.check_n(val, "--" + attr.replace("_", "-"))
    if cfg.genus is not None and cfg.genus < 1:
        raise ConfigError("--genus must be >= 1")
    if cfg.max_degree is not None:
        if cfg.max_degree < 1:
            raise ConfigError("--max-degree must be >= 1")
        if cfg.max_degree > DEGREE_CAP and not cfg.allow_large:
            raise ConfigError(f"--max-degree above {DEGREE_CAP} needs --allow-large")
    return cfg


# ---------------------------------------------------------------------------
# Commands. Each returns (exit status, text, json payload).
# ---------------------------------------------------------------------------

def cmd_homology(cfg: RunConfig):
    p = cfg.presentation()
    coeff = cfg.coeff or Coefficients.parse("Z")
    groups = homology(p, cfg.n, coeff)
    lines = [f"H_*(SP^{cfg.n} X; {coeff})"]
    lines += [f"  H_{g.degree} = {g}" for g in groups]
    payload = {"n": cfg.n, "coeff": str(coeff), "complex": p.to_json(),
               "groups": [g.to_json() for g in groups]}
    if cfg.bigraded:
        table = bigraded_homology(p, cfg.n, coeff)
        lines += ["", "by filtration:", table.render()]
        payload["bigraded"] = table.to_json()
    return EXIT_OK, "\n".join(lines), payload


def cmd_ring(cfg: RunConfig):
    p = cfg.presentation()
    coeff = cfg.coeff or Coefficients.parse("Q")
    if not coeff.is_field:
        raise ConfigError("ring needs field coefficients (Q or Fp)")
    pres = cohomring.ring_presentation(p, cfg.n, coeff)
    payload = dict(pres.to_json(), n=cfg.n, description=pres.describe())
    text = f"H^*(SP^{cfg.n} X; {coeff})\n" + pres.render()
    return EXIT_OK, text, payload


def _n_range(cfg: RunConfig, default_max: int):
    if cfg.n is not None:
        return [cfg.n]
    return list(range(1, (cfg.max_n if cfg.max_n is not None else default_max) + 1))


def _need_genus(cfg: RunConfig) -> int:
    if cfg.genus is None:
        raise ConfigError(f"verify {cfg.suite} needs --genus")
    if cfg.n == 0 or cfg.max_n == 0:
        raise ConfigError(f"verify {cfg.suite} needs n >= 1")
    return cfg.genus


def _clifford_report(g: int, ns: list[int]):
    got = [cohomring.clifford_bound(g, n) for n in ns]
    law = [cohomring.clifford_law(g, n) for n in ns]
    stated = [min(n // 2, n - g) + 1 for n in ns]
    failures = [f"n={n}: index {a}, law {b}" for n, a, b in zip(ns, got, law) if a != b]
    details = {"genus": g, "n": ns, "index": got, "max(n//2, n-g)+1": law, "min(n//2, n-g)+1": stated}
    rows = [{"n": n, "index": a, "law": b, "min_law": c} for n, a, b, c in zip(ns, got, law, stated)]
    return Report("Clifford nilpotency index", not failures, details, failures), rows


def cmd_verify(cfg: RunConfig):
    suite = cfg.suite
    reports = []
    extra = {}
    if suite == "macdonald":
        g = _need_genus(cfg)
        coeff = cfg.coeff or Coefficients.parse("Q")
        if not coeff.is_field:
            raise ConfigError("macdonald needs Q or Fp")
        for n in _n_range(cfg, 3):
            reports.append(cohomring.macdonald_verify(g, n, coeff))
            reports.append(cohomring.main_relation_check(g, n, coeff))
    elif suite == "nonorientable":
        g = _need_genus(cfg)
        reports = [cohomring.nonorientable_verify(g, n) for n in _n_range(cfg, 3)]
    elif suite == "clifford":
        g = _need_genus(cfg)
        rep, rows = _clifford_report(g, _n_range(cfg, N_CAP))
        reports.append(rep)
        extra["rows"] = rows
    elif suite == "real-clifford":
        g = _need_genus(cfg)
        reports = [cohomring.real_clifford_quotient(g, n) for n in _n_range(cfg, 4)]
    elif suite == "dold-thom":
        rep = dold_thom_check(cfg.presentation(), cfg.max_degree or 5)
        rep.details.pop("groups", None)
        reports.append(rep)
    elif suite == "dold-milgram":
        p = cfg.presentation()
        coeff = cfg.coeff or Coefficients.parse("Z")
        reports = [dold_milgram_check(p, n, coeff) for n in _n_range(cfg, 4)]
    elif suite == "splitting":
        p = cfg.presentation()
        coeff = cfg.coeff or Coefficients.parse("Z")
        reports = [splitting_check(p, n, coeff) for n in _n_range(cfg, 4)]
    elif suite == "torsion":
        p = cfg.presentation()
        reports = [torsion_prime_check(p, n) for n in _n_range(cfg, 4)]
    passed = all(reports)
    text = "\n".join(r.summary() for r in reports) + f"\n{'PASS' if passed else 'FAIL'} {suite}"
    payload = {"suite": suite, "passed": passed,
               "reports": [{"name": r.name, "passed": r.passed, "details": r.details, "failures": r.failures}
                           for r in reports]}
    payload.update(extra)
    return (EXIT_OK if passed else EXIT_FAIL), text, payload


COMMANDS = {"homology": cmd_homology, "ring": cmd_ring, "verify": cmd_verify}


def run(argv) -> tuple[int, str]:
    """Run one invocation; return (exit status, text to emit)."""
    try:
        cfg = parse_config(argv)
        status, text, payload = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        return EXIT_CONFIG, f"spx: error: {exc}"
    except PresentationError as exc:
        return EXIT_PARSE, f"spx: parse error: {exc}"
    except (InexactDivision, AssertionError) as exc:
        return EXIT_INTERNAL, f"spx: internal error: {exc}"
    except Exception as exc:  # anything else is a bug, not a failed verification
        return EXIT_INTERNAL, f"spx: internal error: {type(exc).__name__}: {exc}"
    if cfg.fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    if cfg.output is not None:
        try:
            cfg.output.write_text(text + "\n")
        except OSError as exc:
            return EXIT_CONFIG, f"spx: error: cannot write {cfg.output}: {exc}"
        return status, ""
    return status, text


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    status, text = run(argv)
    if text:
        stream = sys.stderr if status in (EXIT_PARSE, EXIT_CONFIG, EXIT_INTERNAL) else sys.stdout
        print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
