"""Command line front end.

stdout carries data (graph6 lines, JSON, CSV); stderr carries log messages.
Exit status: 0 success, 1 property or verification failure (JSON witness on
stdout), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from . import __version__
from .exceptions import (
    CapExceeded,
    ChainPartitionExhausted,
    CodeError,
    DecodeError,
    GraphError,
    ImplicitRepError,
    NotBipartiteError,
    NotEmbeddableError,
    NotInClassError,
    SchemeInvariantError,
    SearchBudgetExceeded,
)
from .factorial import speed_table
from .families import CLASS_NAMES, FAMILIES, class_spec, make, member, sample_in_class
from .graph import BipartiteGraph
from .hypercube import HypercubeCode, hypercube_decode, hypercube_encode
from .io import read_graph, write_graph
from .labeling.core import Labeling, verify_labeling
from .labeling.schemes import SCHEMES, get_scheme
from .parameters import chain_partition_number, contiguity, degeneracy, h_index, min_pair_sd, sd_graph
from .suites import SUITES, run_suite
from .validation import check_bipartite_graph

log = logging.getLogger("implicitrep")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PARAM_NAMES = ("min-pair-sd", "sd", "contiguity", "h-index", "degeneracy", "chain-partition")

# family parameters that share flags with class parameters
_INT_FLAGS = ("n", "m", "t", "p", "k", "i", "j", "d", "copies")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Everything a run depends on; ``to_argv`` rebuilds an equivalent
    command line."""

    command: str
    action: str | None = None
    family: str | None = None
    cls: str | None = None
    scheme: str | None = None
    suite: str | None = None
    ints: dict = field(default_factory=dict)
    seed: int | None = None
    edge_prob: float | None = None
    mode: str = "repair"
    heavy_side: str = "A"
    max_parts: int = 8
    budget: int = 1_000_000
    cap: int | None = None
    max: int | None = None
    samples: int | None = None
    workers: int = 1
    side_a: str | None = None
    check: bool = True
    params: list = field(default_factory=list)
    ns: list = field(default_factory=list)
    code: str | None = None
    inp: str | None = None
    labels: str | None = None
    out: str | None = None
    fmt: str = "graph6"

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        d = vars(ns)
        return cls(
            command=d["command"],
            action=d.get("action"),
            family=d.get("family"),
            cls=d.get("cls"),
            scheme=d.get("scheme"),
            suite=d.get("suite"),
            ints={k: d[k] for k in _INT_FLAGS if d.get(k) is not None and not isinstance(d.get(k), list)},
            seed=d.get("seed"),
            edge_prob=d.get("edge_prob"),
            mode=d.get("mode") or "repair",
            heavy_side=d.get("heavy_side") or "A",
            max_parts=d.get("max_parts") or 8,
            budget=d.get("budget") or 1_000_000,
            cap=d.get("cap"),
            max=d.get("max"),
            samples=d.get("samples"),
            workers=d.get("workers") or 1,
            side_a=d.get("side_a"),
            check=not d.get("no_check", False),
            params=list(d.get("param") or []),
            ns=list(d.get("n") or []) if isinstance(d.get("n"), list) else [],
            code=d.get("code"),
            inp=d.get("inp"),
            labels=d.get("labels"),
            out=d.get("out"),
            fmt=d.get("format") or "graph6",
        )

    def to_argv(self) -> list[str]:
        argv = [self.command]
        if self.action:
            argv.append(self.action)
        if self.suite:
            argv.append(self.suite)
        pairs = [("--family", self.family), ("--class", self.cls), ("--scheme", self.scheme)]
        pairs += [(f"--{k}", v) for k, v in sorted(self.ints.items())]
        pairs += [("--seed", self.seed), ("--edge-prob", self.edge_prob), ("--cap", self.cap), ("--max", self.max),
                  ("--samples", self.samples), ("--side-a", self.side_a), ("--code", self.code),
                  ("--in", self.inp), ("--labels", self.labels), ("--out", self.out)]
        for flag, val in pairs:
            if val is not None:
                argv += [flag, str(val)]
        if self.command == "gen":
            argv += ["--mode", self.mode]
        if self.command in ("gen", "hypercube"):
            argv += ["--format", self.fmt]
        if self.command == "label":
            argv += ["--heavy-side", self.heavy_side, "--max-parts", str(self.max_parts), "--budget", str(self.budget)]
            if not self.check:
                argv.append("--no-check")
        if self.command in ("count", "suite"):
            argv += ["--workers", str(self.workers)]
        if self.ns:
            argv += ["--n"] + [str(x) for x in self.ns]
        for p in self.params:
            argv += ["--param", p]
        return argv


# ------------------------------------------------------------------- parser


def _add_int_flags(p, names):
    for name in names:
        p.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="implicitrep", description="Implicit representations of bipartite classes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family member or a seeded class sample")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=sorted(FAMILIES))
    src.add_argument("--class", dest="cls", choices=CLASS_NAMES)
    _add_int_flags(p, _INT_FLAGS)
    p.add_argument("--seed", type=int, help="required with --class")
    p.add_argument("--edge-prob", type=float)
    p.add_argument("--mode", choices=("repair", "reject"), default="repair")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.add_argument("--out")

    p = sub.add_parser("member", help="class membership with a witness")
    p.add_argument("--class", dest="cls", choices=CLASS_NAMES, required=True)
    _add_int_flags(p, ("t", "k"))
    p.add_argument("--in", dest="inp", default="-")
    p.add_argument("--side-a")

    p = sub.add_parser("params", help="exact graph parameters")
    p.add_argument("--in", dest="inp", default="-")
    p.add_argument("--param", action="append", choices=PARAM_NAMES)

    p = sub.add_parser("label", help="label a graph with a scheme (Labeling JSON)")
    p.add_argument("--scheme", choices=sorted(SCHEMES), required=True)
    _add_int_flags(p, ("t", "k"))
    p.add_argument("--heavy-side", choices=("A", "B"), default="A")
    p.add_argument("--max-parts", type=int, default=8)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--side-a")
    p.add_argument("--no-check", action="store_true", help="skip the membership pre-check")
    p.add_argument("--in", dest="inp", default="-")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check a labeling on every vertex pair")
    p.add_argument("--in", dest="inp", required=True, help="the graph")
    p.add_argument("--labels", default="-", help="Labeling JSON (default: stdin)")

    p = sub.add_parser("hypercube", help="2n-integer hypercube codes")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("--in", dest="inp", default="-")
    p.add_argument("--code", help="comma-separated code for decode")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")

    p = sub.add_parser("count", help="labelled class members on n vertices (CSV)")
    p.add_argument("--class", dest="cls", choices=CLASS_NAMES, required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    _add_int_flags(p, ("t", "k"))
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("suite", help="run a named verification suite (JSON)")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max", type=int, help="size limit (max_vertices / max_n / max_side)")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1)
    return parser


# ----------------------------------------------------------------- helpers


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None = None):
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _side_list(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--side-a must be comma-separated vertex ids, got {text!r}") from None


def _load_graph(cfg: RunConfig):
    return read_graph(_read_text(cfg.inp))


def _load_bipartite(cfg: RunConfig) -> BipartiteGraph:
    g = _load_graph(cfg)
    return check_bipartite_graph(g, _side_list(cfg.side_a))


def _class_kwargs(cfg: RunConfig) -> dict:
    return {k: cfg.ints[k] for k in ("t", "k") if k in cfg.ints}


# ---------------------------------------------------------------- commands


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.family:
        _, names = FAMILIES[cfg.family]
        missing = [p for p in names if p not in cfg.ints]
        if missing:
            raise UsageError(f"family {cfg.family} needs --{' --'.join(missing)}")
        kw = {p: cfg.ints[p] for p in names}
        if "copies" in cfg.ints:
            kw["copies"] = cfg.ints["copies"]
        g = make(cfg.family, **kw)
    else:
        if cfg.seed is None:
            raise UsageError("sampling needs an explicit --seed")
        if "n" not in cfg.ints:
            raise UsageError("sampling needs --n")
        spec = class_spec(cfg.cls, **_class_kwargs(cfg))
        g = sample_in_class(spec, cfg.ints["n"], cfg.seed, edge_prob=cfg.edge_prob, mode=cfg.mode)
    _write(write_graph(g, cfg.fmt), cfg.out)
    return EXIT_OK


def cmd_member(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.side_a is not None:
        g = check_bipartite_graph(g, _side_list(cfg.side_a))
    res = member(class_spec(cfg.cls, **_class_kwargs(cfg)), g)
    out = res.to_dict()
    out["class"] = cfg.cls
    out["witness"] = list(res.witness) if res.witness is not None else None
    _write(_dump(out))
    return EXIT_OK if res.ok else EXIT_FAIL


def _param_report(name: str, g):
    if name == "min-pair-sd":
        return min_pair_sd(g).to_dict() if g.n >= 2 else {"parameter": "min_pair_sd", "value": None}
    if name == "sd":
        return sd_graph(g).to_dict()
    if name == "contiguity":
        return contiguity(g).to_dict()
    if name == "h-index":
        return h_index(g).to_dict()
    if name == "degeneracy":
        d, order = degeneracy(g)
        return {"parameter": "degeneracy", "value": d, "witness": order, "method": "exact"}
    if name == "chain-partition":
        return chain_partition_number(check_bipartite_graph(g)).to_dict()
    raise UsageError(f"unknown parameter {name}")


def cmd_params(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    names = cfg.params or list(PARAM_NAMES)
    out = {"n": g.n, "edges": g.edge_count if hasattr(g, "edge_count") else len(g.edges()), "parameters": []}
    for name in names:
        try:
            out["parameters"].append(_param_report(name, g))
        except (CapExceeded, SearchBudgetExceeded, ChainPartitionExhausted, NotBipartiteError) as exc:
            # caps are per parameter: skip it and say why
            out["parameters"].append({"parameter": name, "value": None, "skipped": exc.to_dict()})
    _write(_dump(out))
    return EXIT_OK


def cmd_label(cfg: RunConfig) -> int:
    bg = _load_bipartite(cfg)
    info = get_scheme(cfg.scheme)
    kw = dict(_class_kwargs(cfg), heavy_side=cfg.heavy_side, max_parts=cfg.max_parts, budget=cfg.budget)
    lab = info.run(bg, check=cfg.check, **kw)
    log.info("labelled %d vertices, max payload %d bits", lab.n, lab.max_payload_bits)
    _write(lab.to_json(), cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    lab = Labeling.from_json(_read_text(cfg.labels))
    if lab.n != g.n:
        raise UsageError(f"labeling has {lab.n} labels for a graph on {g.n} vertices")
    rep = verify_labeling(g, lab)
    out = rep.to_dict()
    out["scheme"] = lab.scheme
    _write(_dump(out))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_hypercube(cfg: RunConfig) -> int:
    if cfg.action == "encode":
        g = _load_graph(cfg)
        _write(hypercube_encode(g).to_csv())
        return EXIT_OK
    text = cfg.code if cfg.code is not None else _read_text(cfg.inp)
    g = hypercube_decode(HypercubeCode.from_csv(text))
    _write(write_graph(g, cfg.fmt))
    return EXIT_OK


def cmd_count(cfg: RunConfig) -> int:
    spec = class_spec(cfg.cls, **_class_kwargs(cfg))
    table = speed_table(spec, cfg.ns, cap=cfg.cap if cfg.cap is not None else 8, workers=cfg.workers)
    _write(table.to_csv().rstrip("\n"))
    return EXIT_OK


_SUITE_SIZE_OPTION = {
    "lemma1": "max_vertices",
    "symdif-bounds": "max_n",
    "speed": "max_n",
    "lemma-degree-bound": "max_side",
    "ftt-sd": "max_side",
    "schemes": "max_side",
}
_SUITE_SAMPLE_OPTION = {"ftt-sd", "y-roundtrip", "z-sd", "x-layers", "hypercube", "schemes"}
_SUITE_SEED_OPTION = _SUITE_SAMPLE_OPTION | {"fault-injection"}
_SUITE_WORKERS = {"schemes"}


def cmd_suite(cfg: RunConfig) -> int:
    opts = {}
    if cfg.max is not None:
        if cfg.suite not in _SUITE_SIZE_OPTION:
            raise UsageError(f"suite {cfg.suite} takes no --max")
        opts[_SUITE_SIZE_OPTION[cfg.suite]] = cfg.max
    if cfg.samples is not None:
        if cfg.suite not in _SUITE_SAMPLE_OPTION:
            raise UsageError(f"suite {cfg.suite} takes no --samples")
        opts["samples"] = cfg.samples
    if cfg.seed is not None:
        if cfg.suite not in _SUITE_SEED_OPTION:
            raise UsageError(f"suite {cfg.suite} takes no --seed")
        opts["seed"] = cfg.seed
    if cfg.workers > 1 and cfg.suite in _SUITE_WORKERS:
        opts["workers"] = cfg.workers
    rep = run_suite(cfg.suite, **opts)
    _write(_dump(_strip_timing(rep)))
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def _strip_timing(rep: dict) -> dict:
    # wall-clock figures would break byte-identical reruns
    cases = rep.get("cases")
    if cases:
        rep = dict(rep, cases={k: {kk: vv for kk, vv in v.items() if kk != "seconds"} for k, v in cases.items()})
    return rep


COMMANDS = {
    "gen": cmd_gen,
    "member": cmd_member,
    "params": cmd_params,
    "label": cmd_label,
    "verify": cmd_verify,
    "hypercube": cmd_hypercube,
    "count": cmd_count,
    "suite": cmd_suite,
}

# property failures (exit 1) as opposed to bad input (exit 2)
_FAILURES = (NotInClassError, SchemeInvariantError, NotEmbeddableError, ChainPartitionExhausted)
_INPUT_ERRORS = (GraphError, NotBipartiteError, CodeError, DecodeError, CapExceeded, SearchBudgetExceeded)


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.command](cfg)
    except _FAILURES as exc:
        _write(_dump(exc.to_dict()))
        log.error("%s", exc)
        return EXIT_FAIL
    except _INPUT_ERRORS as exc:
        _write(_dump(exc.to_dict()))
        log.error("%s", exc)
        return EXIT_USAGE
    except ImplicitRepError as exc:
        _write(_dump(exc.to_dict()))
        log.error("%s", exc)
        return EXIT_FAIL
    except (UsageError, ValueError) as exc:
        _write(_dump({"error": "UsageError", "message": str(exc), "witness": None}))
        log.error("%s", exc)
        return EXIT_USAGE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    return run(RunConfig.from_namespace(ns))


if __name__ == "__main__":
    sys.exit(main())
