"""Campaign runner: seeded inequality-verification suites from the shell.

Subcommands:

* ``verify``: run one suite (heinz, agm, cpr, zhan, cor23, cor24, t2,
  finalcor, characterizations, dk, conjecture) over seeded random
  instances, writing one JSON record per check to ``--out`` plus a CSV
  summary next to it.
* ``conjecture``: shorthand for ``verify --suite conjecture``.
* ``dk-probe``: ratio-minimization probe for an explicit spectrum
  (``--eigs 1,2,-3``).
* ``report``: re-summarize an existing JSONL file.

Everything emitted is a deterministic function of (config, seed) except
wall-time fields, which ``--no-timing`` zeroes; reruns with the same
config and seed are then byte-identical.  Exit status: 0 on success (for
probe suites, findings do not fail the run), 1 when a theorem suite has a
failing record, 2 for usage or configuration errors, 4 for I/O failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import classes, conjecture, cpr, heinz, matcore
from .errors import ConfigInvalid, IoFailure, UsageError
from .norms import NormKind

__all__ = ["CampaignConfig", "parse_args", "run", "main"]

SUITES = (
    "heinz",
    "agm",
    "cpr",
    "zhan",
    "cor23",
    "cor24",
    "t2",
    "finalcor",
    "characterizations",
    "dk",
    "conjecture",
)
# Probe suites report findings; only theorem suites can fail the run.
PROBE_SUITES = frozenset({"dk", "conjecture"})

DEFAULT_NORMS = ("op", "tr", "fro")
DEFAULT_ALPHAS = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0)
DEFAULT_T = (-1.0, 0.0, 0.5, 1.0, 2.0)
DEFAULT_R = (0.5, 0.75, 1.0, 1.25, 1.5)
DEFAULT_K = (0.0, 0.5, 1.0, 2.0)
DEFAULT_P = (1.0, 2.0, 3.0)
DEFAULT_COUNT = 100
# The ratio probe runs hundreds of SVD iterations per start, so its
# default instance count is kept small.
DEFAULT_DK_COUNT = 10

_CONFIG_KEYS = frozenset(
    {
        "suite",
        "dim",
        "count",
        "seed",
        "norms",
        "tol",
        "cond",
        "t",
        "r",
        "k",
        "p",
        "n",
        "eigs",
        "starts",
        "iters",
        "out",
        "no_timing",
    }
)


@dataclass(frozen=True)
class CampaignConfig:
    command: str
    suite: str | None
    dim: int
    count: int
    seed: int
    norms: tuple[str, ...]
    tol: float
    cond: float
    t_values: tuple[float, ...]
    r_values: tuple[float, ...]
    k_values: tuple[float, ...]
    p_values: tuple[float, ...]
    n: int
    eigs: tuple[float, ...] | None
    starts: int
    iters: int
    out: str
    no_timing: bool


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="normlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, *names):
        if "suite" in names:
            p.add_argument("--suite", help="suite name: " + ", ".join(SUITES))
        if "dim" in names:
            p.add_argument("--dim", type=int, help="matrix dimension (2..12, default 3)")
        if "count" in names:
            p.add_argument("--count", type=int, help="instances per parameter point")
        if "seed" in names:
            p.add_argument("--seed", type=int, help="campaign seed (default 0)")
        if "norms" in names:
            p.add_argument("--norms", help="comma list of norm selectors (default op,tr,fro)")
        if "tol" in names:
            p.add_argument("--tol", type=float, help="relative link tolerance (default 1e-8)")
        if "cond" in names:
            p.add_argument("--cond", type=float, help="condition bound for sampled matrices (default 100)")
        if "t" in names:
            p.add_argument("--t", help="comma list of t values; use --t=-1,0 for negatives")
        if "r" in names:
            p.add_argument("--r", help="comma list: Heinz alphas (heinz) or exponents r (zhan)")
        if "k" in names:
            p.add_argument("--k", help="comma list of shift values k")
        if "p" in names:
            p.add_argument("--p", help="comma list of Schatten exponents p")
        if "n" in names:
            p.add_argument("--n", type=int, help="spectrum size for the conjecture suite (default 3)")
        if "eigs" in names:
            p.add_argument("--eigs", help="explicit spectrum, e.g. 1,2,-3")
        if "starts" in names:
            p.add_argument("--starts", type=int, help="random starts for the ratio probe (default 64)")
        if "iters" in names:
            p.add_argument("--iters", type=int, help="iterations per start (default 500)")
        if "out" in names:
            p.add_argument("--out", help="output JSONL path (default results.jsonl)")
        if "config" in names:
            p.add_argument("--config", help="JSON config file; flags override its values")
        if "no_timing" in names:
            p.add_argument("--no-timing", action="store_true", default=None, help="zero wall-time fields for byte-stable output")

    verify = sub.add_parser("verify", help="run a verification suite")
    common(
        verify,
        "suite",
        "dim",
        "count",
        "seed",
        "norms",
        "tol",
        "cond",
        "t",
        "r",
        "k",
        "p",
        "n",
        "eigs",
        "starts",
        "iters",
        "out",
        "config",
        "no_timing",
    )

    conj = sub.add_parser("conjecture", help="counterexample search for the positivity conjecture")
    common(conj, "n", "k", "count", "seed", "out", "config", "no_timing")

    probe = sub.add_parser("dk-probe", help="ratio probe for an explicit spectrum")
    common(probe, "eigs", "k", "count", "seed", "starts", "iters", "out", "config", "no_timing")

    report = sub.add_parser("report", help="re-summarize an existing JSONL file")
    common(report, "out")
    return parser


def _load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoFailure(f"cannot read config file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigInvalid(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigInvalid("config file must hold a single JSON object")
    unknown = sorted(set(data) - _CONFIG_KEYS)
    if unknown:
        raise ConfigInvalid(f"unknown config keys: {', '.join(unknown)}")
    return data


def _floats(value, flag: str) -> tuple[float, ...]:
    if isinstance(value, (list, tuple)):
        tokens = value
    else:
        tokens = [tok for tok in str(value).split(",") if tok.strip()]
    if not tokens:
        raise ConfigInvalid(f"{flag} must not be empty")
    try:
        return tuple(float(tok) for tok in tokens)
    except (TypeError, ValueError):
        raise ConfigInvalid(f"{flag} expects comma-separated reals, got {value!r}") from None


def _norm_list(value) -> tuple[str, ...]:
    if isinstance(value, (list, tuple)):
        tokens = [str(tok) for tok in value]
    else:
        tokens = [tok.strip() for tok in str(value).split(",") if tok.strip()]
    if not tokens:
        raise ConfigInvalid("--norms must not be empty")
    return tuple(tokens)


def _int(value, flag: str) -> int:
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise ConfigInvalid(f"{flag} expects an integer, got {value!r}") from None
    return out


def parse_args(argv=None) -> CampaignConfig:
    """Parse argv (and any --config file) into a validated CampaignConfig."""
    ns = _build_parser().parse_args(argv)
    file_cfg = _load_config_file(ns.config) if getattr(ns, "config", None) else {}

    def pick(name, default=None):
        cli = getattr(ns, name, None)
        if cli is not None:
            return cli
        if name in file_cfg and file_cfg[name] is not None:
            return file_cfg[name]
        return default

    command = ns.command
    suite = pick("suite")
    if command == "conjecture":
        suite = "conjecture"
    elif command == "dk-probe":
        suite = "dk"
    if suite is not None:
        suite = str(suite)

    count = pick("count")
    if count is None:
        count = DEFAULT_DK_COUNT if suite == "dk" else DEFAULT_COUNT

    raw_r = pick("r")
    if raw_r is None:
        r_values = DEFAULT_ALPHAS if suite == "heinz" else DEFAULT_R
    else:
        r_values = _floats(raw_r, "--r")

    raw_eigs = pick("eigs")
    config = CampaignConfig(
        command=command,
        suite=suite,
        dim=_int(pick("dim", 3), "--dim"),
        count=_int(count, "--count"),
        seed=_int(pick("seed", 0), "--seed"),
        norms=_norm_list(pick("norms", DEFAULT_NORMS)),
        tol=float(pick("tol", 1e-8)),
        cond=float(pick("cond", 100.0)),
        t_values=_floats(pick("t", DEFAULT_T), "--t"),
        r_values=r_values,
        k_values=_floats(pick("k", DEFAULT_K), "--k"),
        p_values=_floats(pick("p", DEFAULT_P), "--p"),
        n=_int(pick("n", 3), "--n"),
        eigs=None if raw_eigs is None else _floats(raw_eigs, "--eigs"),
        starts=_int(pick("starts", 64), "--starts"),
        iters=_int(pick("iters", 500), "--iters"),
        out=str(pick("out", "results.jsonl")),
        no_timing=bool(pick("no_timing", False)),
    )
    _validate(config)
    return config


def _validate(config: CampaignConfig) -> None:
    if config.command == "report":
        if not config.out:
            raise UsageError("report requires --out")
        return
    if config.suite is None:
        raise UsageError("missing --suite")
    if config.suite not in SUITES:
        raise ConfigInvalid(f"unknown suite {config.suite!r}; expected one of {', '.join(SUITES)}")
    if not 2 <= config.dim <= 12:
        raise ConfigInvalid(f"--dim must be in [2, 12], got {config.dim}")
    if config.count < 1:
        raise ConfigInvalid("--count must be >= 1")
    if config.tol <= 0.0:
        raise ConfigInvalid("--tol must be positive")
    if config.cond < 1.0:
        raise ConfigInvalid("--cond must be >= 1")
    if not config.out:
        raise ConfigInvalid("--out must not be empty")
    for sel in config.norms:
        try:
            NormKind.parse(sel)
        except ValueError as exc:
            raise ConfigInvalid(str(exc)) from None

    suite = config.suite
    if suite in ("zhan", "cor23", "cor24"):
        for t in config.t_values:
            if t > 2.0:
                raise ConfigInvalid(f"t must be <= 2, got {t}")
    if suite == "heinz":
        for a in config.r_values:
            if not 0.0 <= a <= 1.0:
                raise ConfigInvalid(f"Heinz exponent must be in [0, 1], got {a}")
    if suite == "zhan":
        for r in config.r_values:
            if not 0.5 <= r <= 1.5:
                raise ConfigInvalid(f"r must be in [1/2, 3/2], got {r}")
    if suite == "finalcor":
        for p in config.p_values:
            if p < 1.0:
                raise ConfigInvalid(f"Schatten exponent p must be >= 1, got {p}")
    if suite == "dk":
        for k in config.k_values:
            if k < 0.0:
                raise ConfigInvalid(f"k must be >= 0 for the ratio probe, got {k}")
        if config.starts < 1 or config.iters < 1:
            raise ConfigInvalid("--starts and --iters must be >= 1")
        if config.eigs is not None and any(v == 0.0 for v in config.eigs):
            raise ConfigInvalid("--eigs entries must be nonzero")
        if config.command == "dk-probe" and config.eigs is None:
            raise UsageError("dk-probe requires --eigs")
    if suite == "conjecture":
        if not 2 <= config.n <= 12:
            raise ConfigInvalid(f"--n must be in [2, 12], got {config.n}")
        for k in config.k_values:
            if not 0.0 <= k <= 2.0:
                raise ConfigInvalid(f"conjecture k must be in [0, 2], got {k}")


class _Recorder:
    """Accumulates result records with instance numbering and timing."""

    def __init__(self, config: CampaignConfig):
        self.records: list[dict] = []
        self._suite = config.suite
        self._no_timing = config.no_timing

    def add(self, params: dict, norm_label: str, fn, extra: dict | None = None) -> None:
        t0 = time.perf_counter()
        report = fn()
        wall = 0.0 if self._no_timing else time.perf_counter() - t0
        rec = {
            "suite": self._suite,
            "instance": len(self.records),
            "norm": norm_label,
            "params": params,
            "wall_time": wall,
        }
        rec.update(report.as_dict())
        rec["min_margin"] = report.min_margin
        if extra:
            rec.update(extra)
        self.records.append(rec)

    def add_raw(self, rec: dict) -> None:
        rec = dict(rec)
        rec.setdefault("suite", self._suite)
        rec["instance"] = len(self.records)
        if self._no_timing:
            rec["wall_time"] = 0.0
        self.records.append(rec)


def _collect_records(config: CampaignConfig) -> list[dict]:
    suite = config.suite
    rec = _Recorder(config)
    kinds = [NormKind.parse(s) for s in config.norms]
    rng = matcore.Rng(config.seed)
    d, count, tol, cond = config.dim, config.count, config.tol, config.cond

    if suite == "heinz":
        for pi, alpha in enumerate(config.r_values):
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                a = matcore.random_posdef(d, cond, sub.substream(0))
                b = matcore.random_posdef(d, cond, sub.substream(1))
                x = matcore.random_probe_matrix(d, sub.substream(2))
                for kind in kinds:
                    rec.add(
                        {"alpha": alpha},
                        kind.label,
                        lambda: heinz.kittaneh_chain(a, b, x, alpha, kind, tol=tol),
                    )

    elif suite == "agm":
        for i in range(count):
            sub = rng.substream(0).substream(i)
            a = matcore.ginibre(d, rng=sub.substream(0))
            b = matcore.ginibre(d, rng=sub.substream(1))
            x = matcore.random_probe_matrix(d, sub.substream(2))
            for kind in kinds:
                rec.add({}, kind.label, lambda: heinz.agm_check(a, b, x, kind, tol=tol))

    elif suite == "cpr":
        for i in range(count):
            sub = rng.substream(0).substream(i)
            s = matcore.random_selfadjoint_invertible(d, cond, sub.substream(0))
            t_mat = matcore.random_selfadjoint_invertible(d, cond, sub.substream(1))
            x = matcore.random_probe_matrix(d, sub.substream(2))
            gen = matcore.random_invertible(d, cond, sub.substream(3))
            for kind in kinds:
                rec.add({"form": "cpr"}, kind.label, lambda: cpr.cpr_check(s, x, kind, tol=tol))
                rec.add(
                    {"form": "two_sided"},
                    kind.label,
                    lambda: cpr.cpr_two_sided_check(s, t_mat, x, kind, tol=tol),
                )
                rec.add({"form": "star"}, kind.label, lambda: cpr.cpr_star_check(gen, x, kind, tol=tol))

    elif suite == "zhan":
        grid = [(t, r) for t in config.t_values for r in config.r_values]
        for pi, (t, r) in enumerate(grid):
            params = cpr.ZhanParams(t, r)
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                a = matcore.random_posdef(d, cond, sub.substream(0))
                b = matcore.random_posdef(d, cond, sub.substream(1))
                x = matcore.random_probe_matrix(d, sub.substream(2))
                for kind in kinds:
                    rec.add(
                        {"t": t, "r": r},
                        kind.label,
                        lambda: cpr.zhan_chain(a, b, x, params, kind, tol=tol),
                    )

    elif suite == "cor23":
        for pi, t in enumerate(config.t_values):
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                a = matcore.ginibre(d, rng=sub.substream(0))
                b = matcore.ginibre(d, rng=sub.substream(1))
                x = matcore.random_probe_matrix(d, sub.substream(2))
                for kind in kinds:
                    rec.add({"t": t}, kind.label, lambda: cpr.cor23_check(a, b, x, t, kind, tol=tol))

    elif suite == "cor24":
        for pi, t in enumerate(config.t_values):
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                p_mat = matcore.random_posdef(d, cond, sub.substream(0))
                q_mat = matcore.random_posdef(d, cond, sub.substream(1))
                x = matcore.random_probe_matrix(d, sub.substream(2))
                for kind in kinds:
                    rec.add(
                        {"t": t},
                        kind.label,
                        lambda: cpr.cor24_check(p_mat, q_mat, x, t, kind, tol=tol),
                    )

    elif suite == "t2":
        for i in range(count):
            sub = rng.substream(0).substream(i)
            s = matcore.random_invertible(d, cond, sub.substream(0))
            x = matcore.random_probe_matrix(d, sub.substream(1))
            y = matcore.random_probe_matrix(d, sub.substream(2))
            for kind in kinds:
                rec.add({"form": "mos1"}, kind.label, lambda: cpr.mos1_check(s, x, y, kind, tol=tol))
                rec.add({"form": "mos2"}, kind.label, lambda: cpr.mos2_check(s, x, y, kind, tol=tol))

    elif suite == "finalcor":
        for i in range(count):
            sub = rng.substream(0).substream(i)
            s = matcore.random_invertible(d, cond, sub.substream(0))
            x = matcore.random_probe_matrix(d, sub.substream(1))
            rec.add(
                {"form": "max"},
                "op",
                lambda: cpr.final_cor_check(s, x, config.p_values[0], tol=tol)[0],
            )
            for p in config.p_values:
                rec.add(
                    {"p": p},
                    NormKind.schatten(p).label,
                    lambda: cpr.final_cor_check(s, x, p, tol=tol)[1],
                )

    elif suite == "characterizations":
        for pi, form_id in enumerate(classes.FORMS):
            relation = classes.FORMS[form_id].relation
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                s = classes.sample_for_form(form_id, d, sub.substream(0), cond)
                x = matcore.random_probe_matrix(d, sub.substream(1))
                for kind in kinds:
                    rec.add(
                        {"form": form_id},
                        kind.label,
                        lambda: classes.characterization_check(
                            s, x, form_id, kind, tol=None if relation == "eq" else tol
                        ),
                    )

    elif suite == "dk":
        for pi, k in enumerate(config.k_values):
            for i in range(count):
                sub = rng.substream(pi).substream(i)
                if config.eigs is not None:
                    s = np.diag(np.asarray(config.eigs, dtype=float)).astype(complex)
                else:
                    s = matcore.random_selfadjoint_invertible(d, cond, sub.substream(0))
                t0 = time.perf_counter()
                res = classes.dk_ratio_minimize(
                    s, k, starts=config.starts, iters=config.iters, rng=sub.substream(1)
                )
                wall = time.perf_counter() - t0
                bound = k + 2.0
                ok = res.verdict != "violated"
                rec.add_raw(
                    {
                        "norm": "op",
                        "params": {"k": k},
                        "labels": ["best_ratio", "k+2"],
                        "values": [res.best_ratio, bound],
                        "margins": [res.best_ratio - bound],
                        "relations": ["ge"],
                        "link_pass": [ok],
                        "pass": ok,
                        "min_margin": res.best_ratio - bound,
                        "verdict": res.verdict,
                        "spectral_ok": res.spectral_ok,
                        "eigenvalues": [float(v) for v in res.eigenvalues],
                        "starts_used": res.starts_used,
                        "wall_time": wall,
                    }
                )

    elif suite == "conjecture":
        violations_path = config.out + ".violations.jsonl"
        try:
            open(violations_path, "w", encoding="utf-8").close()
        except OSError as exc:
            raise IoFailure(f"cannot write {violations_path}: {exc}") from None
        t0 = time.perf_counter()
        summaries = conjecture.conjecture_search(
            config.n, list(config.k_values), count, rng, violations_path=violations_path
        )
        wall = time.perf_counter() - t0
        for summ in summaries:
            ok = summ.violations == 0
            rec.add_raw(
                {
                    "norm": "-",
                    "params": {"k": summ.k, "n": config.n},
                    "labels": ["min_eig"],
                    "values": [summ.min_eig_overall],
                    "margins": [summ.min_eig_overall],
                    "relations": ["ge"],
                    "link_pass": [ok],
                    "pass": ok,
                    "min_margin": summ.min_eig_overall,
                    "min_eig": summ.min_eig_overall,
                    "count": summ.accepted,
                    "pass_count": summ.accepted - summ.violations,
                    "fail_count": summ.violations,
                    "rejected": summ.rejected,
                    "violations": summ.violations,
                    "hist_counts": [int(c) for c in summ.hist_counts],
                    "hist_edges": [float(e) for e in summ.hist_edges],
                    # The search runs as one campaign; each row carries its
                    # total wall time.
                    "wall_time": wall,
                }
            )

    else:  # pragma: no cover - _validate rejects unknown suites
        raise ConfigInvalid(f"unknown suite {suite!r}")
    return rec.records


def _write_jsonl(path: str, records: list[dict]) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for record in sorted(records, key=lambda r: r["instance"]):
                fh.write(json.dumps(record, sort_keys=True) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from None


def _read_jsonl(path: str) -> list[dict]:
    records = []
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    records.append(json.loads(line))
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise IoFailure(f"{path} is not valid JSONL: {exc}") from None
    return records


def _write_summary(path: str, records: list[dict]) -> None:
    groups: dict[tuple, dict] = {}
    order: list[tuple] = []
    for r in sorted(records, key=lambda r: r.get("instance", 0)):
        key = (
            str(r.get("suite", "-")),
            str(r.get("norm", "-")),
            json.dumps(r.get("params", {}), sort_keys=True),
        )
        if key not in groups:
            groups[key] = {"count": 0, "pass": 0, "fail": 0, "min_margin": None, "min_eig": None}
            order.append(key)
        grp = groups[key]
        grp["count"] += r.get("count", 1)
        grp["pass"] += r.get("pass_count", 1 if r.get("pass") else 0)
        grp["fail"] += r.get("fail_count", 0 if r.get("pass") else 1)
        mm = r.get("min_margin")
        if mm is None and r.get("margins"):
            mm = min(r["margins"])
        if mm is not None:
            grp["min_margin"] = mm if grp["min_margin"] is None else min(grp["min_margin"], mm)
        me = r.get("min_eig")
        if me is not None:
            grp["min_eig"] = me if grp["min_eig"] is None else min(grp["min_eig"], me)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["suite", "norm", "params", "count", "pass", "fail", "min_margin", "min_eig"])
            for key in order:
                g = groups[key]
                writer.writerow(
                    [
                        key[0],
                        key[1],
                        key[2],
                        g["count"],
                        g["pass"],
                        g["fail"],
                        "" if g["min_margin"] is None else repr(float(g["min_margin"])),
                        "" if g["min_eig"] is None else repr(float(g["min_eig"])),
                    ]
                )
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from None


def run(config: CampaignConfig) -> int:
    """Execute a parsed config; returns the process exit status."""
    _validate(config)
    if config.command == "report":
        records = _read_jsonl(config.out)
        _write_summary(config.out + ".summary.csv", records)
        return 0
    records = _collect_records(config)
    _write_jsonl(config.out, records)
    _write_summary(config.out + ".summary.csv", records)
    if config.suite in PROBE_SUITES:
        return 0
    return 0 if all(r["pass"] for r in records) else 1


def main(argv=None) -> int:
    try:
        return run(parse_args(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ConfigInvalid as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    except IoFailure as exc:
        print(f"io failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
