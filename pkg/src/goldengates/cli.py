"""Command line front end.

Subcommands cover catalog inspection, validation, exact and
approximate synthesis, word enumeration, covering reports, digraph
spectra, and the acceptance selftest.  Everything data-like goes to
stdout or the --out file; wall-clock timings go to stderr so repeated
runs with the same inputs stay byte-identical.

Exit codes: 0 success, 2 domain errors (unknown set, target not in
the group, unsupported modulus), 1 internal failure, 64 bad usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .covering import (
    ball_volume,
    covering_stats,
    enumerate_words,
    identity_gap,
    identity_gap_bound,
)
from .digraph import (
    InvalidModulusError,
    UnsupportedModulusError,
    build_cayley,
    ramanujan_check,
    spectrum,
)
from .gatesets import GateKind, catalog, nonexamples, validate
from .quaternions import parse_quaternion, to_su2
from .selftest import format_result, run_all
from .synthesis import (
    NotInGroupError,
    SynthesisError,
    SynthOptions,
    UnsupportedGateSetError,
    approx_diagonal,
    approx_general,
    exact_synthesize,
)

SCHEMA = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class Config:
    seed: int = 0
    precision_bits: int = 128
    budget: int = 10_000
    output_path: Optional[str] = None
    format: str = "json"


def _lookup(name: str):
    cat = catalog()
    if name in cat:
        return cat[name]
    extra = nonexamples()
    if name in extra:
        return extra[name]
    raise KeyError(name)


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _fmt_complex(z: complex) -> str:
    return f"{_fmt_float(z.real)}{z.imag:+.17g}j"


def _matrix_entries(m: np.ndarray) -> list[str]:
    return [_fmt_complex(complex(m[r, c])) for r in range(2) for c in range(2)]


def _emit(text: str, cfg: Config) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _figure_path(out: str) -> Path:
    p = Path(out)
    return p.with_suffix(".png") if p.suffix != ".png" else p.with_suffix(".fig.png")


# -- subcommands -------------------------------------------------------------


def _cmd_catalog(args, cfg: Config) -> int:
    cat = catalog()
    if not args.name:
        if cfg.format == "json":
            entries = [
                {
                    "name": gs.name,
                    "kind": gs.kind.name.lower(),
                    "ring": gs.ring.value,
                    "k": gs.k,
                    "size": len(gs.C) if gs.kind is GateKind.SUPER else None,
                    "generators": len(gs.generators),
                }
                for gs in cat.values()
            ]
            _emit(json.dumps({"schema": SCHEMA, "entries": entries}, indent=2), cfg)
        else:
            lines = []
            for gs in cat.values():
                tail = (
                    f"|C|={len(gs.C)}"
                    if gs.kind is GateKind.SUPER
                    else f"generators={len(gs.generators)}"
                )
                lines.append(
                    f"{gs.name:12s} {gs.kind.name.lower():7s} "
                    f"{gs.ring.value:6s} k={gs.k:<3d} {tail}"
                )
            _emit("\n".join(lines), cfg)
        return 0

    gs = _lookup(args.name)
    if gs.kind is GateKind.SUPER:
        labeled = [("T", gs.T)] + [(f"c{i}", c) for i, c in enumerate(gs.C)]
    else:
        labeled = [(f"g{i}", g) for i, g in enumerate(gs.generators)]
    if cfg.format == "json":
        gens = [
            {"label": lab, "quaternion": str(q), "matrix": _matrix_entries(to_su2(q))}
            for lab, q in labeled
        ]
        doc = {
            "schema": SCHEMA,
            "name": gs.name,
            "kind": gs.kind.name.lower(),
            "ring": gs.ring.value,
            "k": gs.k,
            "pi": str(gs.pi),
            "generators": gens,
        }
        _emit(json.dumps(doc, indent=2), cfg)
    else:
        lines = [f"{gs.name}: kind={gs.kind.name.lower()} ring={gs.ring.value} k={gs.k}"]
        for lab, q in labeled:
            lines.append(f"{lab} = {q}")
            lines.append("    [" + ", ".join(_matrix_entries(to_su2(q))) + "]")
        _emit("\n".join(lines), cfg)
    return 0


def _cmd_validate(args, cfg: Config) -> int:
    gs = _lookup(args.name)
    report = validate(gs)
    if cfg.format == "json":
        doc = {
            "schema": SCHEMA,
            "name": gs.name,
            "ok": report.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
        }
        _emit(json.dumps(doc, indent=2), cfg)
    else:
        _emit(str(report), cfg)
    return 0 if report.ok else 2


def _word_doc(word, element, distance: float) -> dict:
    return {
        "schema": SCHEMA,
        "gateset": word.gateset,
        "word": list(word.letters),
        "tcount": word.tcount,
        "element": str(element),
        "achieved_distance": distance,
    }


def _emit_word(word, element, distance: float, cfg: Config) -> None:
    if cfg.format == "text":
        _emit(
            f"{'.'.join(word.letters)}\ttcount={word.tcount}\t"
            f"element={element}\tdistance={_fmt_float(distance)}",
            cfg,
        )
    else:
        _emit(json.dumps(_word_doc(word, element, distance)), cfg)


def _cmd_synth(args, cfg: Config) -> int:
    gs = _lookup(args.name)
    opts = SynthOptions(
        budget=cfg.budget, seed=cfg.seed, precision_bits=cfg.precision_bits
    )
    start = time.time()
    if args.mode == "exact":
        try:
            q = parse_quaternion(args.quaternion)
        except ValueError as exc:
            raise _UsageError(f"bad quaternion {args.quaternion!r}: {exc}") from exc
        word = exact_synthesize(q, gs)
        element = q
        distance = 0.0
    elif args.mode == "diag":
        res = approx_diagonal(args.theta, args.eps, gs, opts)
        word, element, distance = res.word, res.element, res.achieved_distance
    else:
        target = _parse_matrix(args.matrix)
        res = approx_general(target, args.eps, gs, opts)
        word, element, distance = res.word, res.element, res.achieved_distance
    wall = time.time() - start
    _emit_word(word, element, distance, cfg)
    print(f"wall-clock: {wall:.3f}s", file=sys.stderr)
    return 0


def _parse_matrix(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 4:
        raise _UsageError("--matrix wants re,im,re,im for the first row")
    try:
        a, b, c, d = (float(p) for p in parts)
    except ValueError as exc:
        raise _UsageError(f"bad matrix entry: {exc}") from exc
    norm = math.sqrt(a * a + b * b + c * c + d * d)
    if norm < 1e-12:
        raise _UsageError("matrix row is numerically zero")
    a, b, c, d = a / norm, b / norm, c / norm, d / norm
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def _cmd_words(args, cfg: Config) -> int:
    gs = _lookup(args.name)
    words = enumerate_words(gs, args.tcount)
    if args.count_only:
        _emit(str(len(words)), cfg)
        return 0
    if cfg.format == "json":
        entries = []
        for q in words:
            w = exact_synthesize(q, gs)
            entries.append(
                {"word": list(w.letters), "tcount": w.tcount, "element": str(q)}
            )
        doc = {
            "schema": SCHEMA,
            "gateset": gs.name,
            "tcount": args.tcount,
            "count": len(words),
            "words": entries,
        }
        _emit(json.dumps(doc, indent=2), cfg)
    else:
        lines = []
        for q in words:
            w = exact_synthesize(q, gs)
            lines.append(f"{q}\t{'.'.join(w.letters)}")
        _emit("\n".join(lines), cfg)
    return 0


def _cmd_cover(args, cfg: Config) -> int:
    gs = _lookup(args.gateset)
    rep = covering_stats(gs, args.tcount, args.samples, cfg.seed)
    size = len(gs.C)
    shell = size if args.tcount == 0 else size * size * (size - 1) ** (args.tcount - 1)
    scale = (1.0 / shell) ** (1.0 / 3.0)
    median = dict(rep.distance_quantiles).get(0.5)
    doc = {
        "schema": SCHEMA,
        "gateset": rep.gateset,
        "tcount": rep.tcount,
        "seed": cfg.seed,
        "num_points": rep.num_points,
        "sample_count": rep.sample_count,
        "distance_quantiles": [[q, v] for q, v in rep.distance_quantiles],
        "max_sampled_hole": rep.max_sampled_hole,
        "min_pairwise_distance": rep.min_pairwise_distance,
        "identity_gap": identity_gap(gs, args.tcount),
        "identity_gap_bound": identity_gap_bound(gs, args.tcount),
        # descriptive context, not asserted: ball-volume window for the
        # largest sampled hole and the median distance in units of the
        # (1/N)^(1/3) ball-radius scale of the deepest shell
        "hole_volume": ball_volume(rep.max_sampled_hole),
        "hole_volume_window": [shell**-1.5, shell**-0.5],
        "median_scale_ratio": None if median is None else median / scale,
    }
    _emit(json.dumps(doc, indent=2), cfg)
    if cfg.output_path and not args.no_figure:
        from .plots import save_cover_figure

        save_cover_figure(rep, _figure_path(cfg.output_path))
    return 0


def _cmd_digraph(args, cfg: Config) -> int:
    gs = _lookup(args.gateset)
    d = build_cayley(gs, args.modulus)
    header = f"{d.group_tag} {d.k} {d.size}"
    sys.stdout.write(header + "\n")
    if args.edges:
        lines = [header]
        for src, row in enumerate(d.adjacency.tolist()):
            lines.extend(f"{src} {dst}" for dst in row)
        Path(args.edges).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if args.spectrum:
        s = spectrum(d)
        rows = [f"{_fmt_float(v.real)},{_fmt_float(v.imag)}" for v in s.eigenvalues]
        Path(args.spectrum).write_text("\n".join(rows) + "\n", encoding="utf-8")
        rep = ramanujan_check(s, d.k)
        status = "ramanujan" if rep.is_ramanujan else "NOT ramanujan"
        print(
            f"max bulk modulus {rep.max_bulk:.6f} vs sqrt({d.k}) = "
            f"{rep.bound:.6f}: {status}",
            file=sys.stderr,
        )
        if not args.no_figure:
            from .plots import save_spectrum_figure

            save_spectrum_figure(
                s,
                d.k,
                _figure_path(args.spectrum),
                title=f"{gs.name} mod {args.modulus}: {header}",
            )
    return 0


def _cmd_selftest(args, cfg: Config) -> int:
    only = None
    if args.only:
        try:
            only = [int(p) for p in args.only.split(",")]
        except ValueError as exc:
            raise _UsageError(f"bad criteria list {args.only!r}") from exc
    results = run_all(slow=args.slow, only=only)
    for r in results:
        sys.stdout.write(format_result(r) + "\n")
    return 0 if all(r.passed for r in results) else 1


# -- wiring -------------------------------------------------------------------


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=10_000)
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", default=None, help="write output to this file")

    top = _Parser(
        prog="ggates",
        description="Gate compilation toolkit: exact and approximate "
        "synthesis over super golden gate sets, covering statistics, and "
        "Ramanujan digraph spectra.  SGF_THREADS caps worker threads.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list or dump gate sets")
    p.add_argument("name", nargs="?", default=None)

    p = sub.add_parser("validate", parents=[common], help="check gate set axioms")
    p.add_argument("name")

    p = sub.add_parser("synth", parents=[common], help="synthesize a word")
    p.add_argument("mode", choices=("exact", "diag", "general"))
    p.add_argument("name")
    p.add_argument("--quaternion", help="exact: element as x0,x1,x2,x3/denom@ring")
    p.add_argument("--theta", type=float, help="diag: rotation angle in radians")
    p.add_argument("--matrix", help="general: first SU(2) row as re,im,re,im")
    p.add_argument("--eps", type=float, default=1e-3)

    p = sub.add_parser("words", parents=[common], help="enumerate reduced words")
    p.add_argument("name")
    p.add_argument("--tcount", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("cover", parents=[common], help="covering-quality report")
    p.add_argument("gateset", nargs="?", default=None)
    p.add_argument("--gateset", dest="gateset_flag", default=None)
    p.add_argument("--tcount", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--no-figure", action="store_true")

    p = sub.add_parser("digraph", parents=[common], help="finite quotient digraph")
    p.add_argument("gateset", nargs="?", default=None)
    p.add_argument("--gateset", dest="gateset_flag", default=None)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--spectrum", help="write eigenvalues as re,im CSV here")
    p.add_argument("--edges", help="write the edge list here")
    p.add_argument("--no-figure", action="store_true")

    p = sub.add_parser("selftest", parents=[common], help="run acceptance checks")
    p.add_argument("--slow", action="store_true", help="include the 6072-vertex run")
    p.add_argument("--only", help="comma-separated criterion numbers")
    return top


def _resolve_gateset_arg(args) -> None:
    flag = getattr(args, "gateset_flag", None)
    pos = getattr(args, "gateset", None)
    if flag and pos:
        raise _UsageError("give the gate set either positionally or via --gateset")
    if not flag and not pos:
        raise _UsageError("a gate set name is required")
    args.gateset = pos or flag


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "synth":
            need = {"exact": "quaternion", "diag": "theta", "general": "matrix"}[
                args.mode
            ]
            if getattr(args, need) is None:
                raise _UsageError(f"synth {args.mode} requires --{need}")
        if args.command in ("cover", "digraph"):
            _resolve_gateset_arg(args)
        cfg = Config(
            seed=args.seed,
            precision_bits=args.precision_bits,
            budget=args.budget,
            output_path=args.out,
            format=args.format or ("text" if args.command in ("catalog", "validate") else "json"),
        )
        handler = {
            "catalog": _cmd_catalog,
            "validate": _cmd_validate,
            "synth": _cmd_synth,
            "words": _cmd_words,
            "cover": _cmd_cover,
            "digraph": _cmd_digraph,
            "selftest": _cmd_selftest,
        }[args.command]
        return handler(args, cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except KeyError as exc:
        print(f"unknown gate set: {exc}", file=sys.stderr)
        return 2
    except (
        NotInGroupError,
        UnsupportedGateSetError,
        UnsupportedModulusError,
        InvalidModulusError,
    ) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except SynthesisError as exc:
        print(f"synthesis failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
