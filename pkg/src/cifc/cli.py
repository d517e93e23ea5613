"""Configuration-driven command line front end.

Subcommands:
    gaussian region     four-curve frontier data for one channel
    gaussian gap-sweep  constant-gap certification over a channel grid
    dm verify           identity suite on random discrete channels
    dm region           sampled frontier for one discrete-channel bound family

Outputs are UTF-8 CSV files (LF line endings, header row) plus a JSON
metadata sidecar per command; fixed seeds make every output byte
reproducible. The environment variable CIFC_THREADS bounds the worker
threads used by sweeps (all cores when unset); outputs do not depend on
the thread count. Exit codes: 0 success, 2 precondition or regime
violation, 3 certification failure.
"""

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import channels, dm_bounds, gaussian, info
from .channels import CapError, DmChannel, GaussianChannel, RegimeError
from .info import JointDist
from .regions import from_triples, scale_region

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_CERT_FAIL = 3

ADDITIVE_LIMIT = 1.0 + 1e-6
MULTIPLICATIVE_LIMIT = 2.0 + 1e-6

GAP_SWEEP_HEADER = "a_re,a_im,abs_b,p1,p2,additive_gap_bits,mult_gap,worst_alpha,worst_r1"


class ConfigError(ValueError):
    """Malformed or missing configuration."""


def _fmt(v) -> str:
    return format(float(v), ".12g")


def _load_config(path):
    if path is None:
        return {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    return obj


def _write_text(path, text):
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _write_metadata(path, obj):
    _write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def write_frontier_csv(path, region):
    lines = ["r1,r2"]
    lines.extend(f"{_fmt(x)},{_fmt(y)}" for x, y in region.vertices)
    _write_text(path, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# config format


def gaussian_channel_from_config(obj) -> GaussianChannel:
    """Channel from {a_re, a_im, b_re, b_im, p1, p2}."""
    try:
        a = complex(float(obj.get("a_re", 0.0)), float(obj.get("a_im", 0.0)))
        b = complex(float(obj.get("b_re", 0.0)), float(obj.get("b_im", 0.0)))
        return GaussianChannel(a, b, float(obj["p1"]), float(obj["p2"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad gaussian channel config: {exc}") from exc


def gaussian_channel_to_config(ch) -> dict:
    return {
        "a_re": ch.a.real,
        "a_im": ch.a.imag,
        "b_re": ch.b.real,
        "b_im": ch.b.imag,
        "p1": ch.p1,
        "p2": ch.p2,
    }


def dm_channel_from_config(obj) -> DmChannel:
    """Channel from shift gains, explicit output maps, or an explicit kernel.

    The explicit form carries nx1, nx2, ny1, ny2, a row-major flat f1
    table, and either a flat f2 table or a flat kernel with y2 fastest.
    """
    try:
        if "shift_gains" in obj:
            g = [int(v) for v in obj["shift_gains"]]
            if len(g) != 4:
                raise ConfigError("shift_gains needs four entries")
            return channels.linear_deterministic(*g)
        nx1, nx2 = int(obj["nx1"]), int(obj["nx2"])
        ny1, ny2 = int(obj["ny1"]), int(obj["ny2"])
        f1 = np.asarray(obj["f1"], dtype=np.int64).reshape(nx1, nx2)
        if "f2" in obj:
            f2 = np.asarray(obj["f2"], dtype=np.int64).reshape(nx1, nx2)
            return channels.deterministic_channel(f1, f2, ny1=ny1, ny2=ny2)
        kernel = np.asarray(obj["kernel"], dtype=float).reshape(nx1, nx2, ny2)
        return DmChannel(f1, kernel, ny1=ny1)
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad dm channel config: {exc}") from exc


def joint_from_config(obj) -> JointDist:
    """Distribution from {axes: ["U:2", ...], table: flat row-major}."""
    try:
        names, cards = [], []
        for entry in obj["axes"]:
            name, card = str(entry).split(":")
            names.append(name)
            cards.append(int(card))
        table = np.asarray(obj["table"], dtype=float).reshape(cards)
        return JointDist(tuple(names), table)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad joint distribution config: {exc}") from exc


def joint_to_config(dist) -> dict:
    return {
        "axes": [f"{n}:{dist.card(n)}" for n in dist.names],
        "table": [float(v) for v in dist.table.ravel()],
    }


# ---------------------------------------------------------------------------
# gaussian region


def cmd_gaussian_region(ch, out_dir, alpha_grid=512, r1_grid=512) -> int:
    """Write the four frontier curves: outer envelope, inner hull, the
    time-sharing line, and the time-sharing line scaled by two."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    outer = gaussian.outer_region(ch, alpha_grid)
    inner = gaussian.inner_region(ch, alpha_grid)
    tdma = gaussian.tdma_region(ch)
    write_frontier_csv(out / "outer.csv", outer)
    write_frontier_csv(out / "inner.csv", inner)
    write_frontier_csv(out / "tdma.csv", tdma)
    write_frontier_csv(out / "tdma_x2.csv", scale_region(tdma, 2.0))
    _write_metadata(
        out / "metadata.json",
        {
            "channel": gaussian_channel_to_config(ch),
            "alpha_grid_size": int(alpha_grid),
            "r1_grid_size": int(r1_grid),
            "curves": ["outer", "inner", "tdma", "tdma_x2"],
        },
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# gap sweep


def default_sweep_channels() -> tuple:
    """120 strong-interference channels: paired powers, five cross gains,
    six interference gains, spanning low to high SNR."""
    powers = (0.1, 1.0, 10.0, 100.0)
    abs_bs = (1.01, 1.1, 2.0, 5.0, 10.0)
    a_vals = (0.0, 1.0, -1.0, 2.0j, 1.0 + 1.0j, 5.0)
    return tuple(
        GaussianChannel(a, b, p, p) for p in powers for b in abs_bs for a in a_vals
    )


@dataclass(frozen=True)
class SweepConfig:
    channels: tuple
    alpha_grid: int = 512
    r1_grid: int = 512
    seed: int = 0

    def __post_init__(self):
        if not self.channels:
            raise ConfigError("sweep needs at least one channel")


def sweep_config_from_obj(obj) -> SweepConfig:
    if not obj:
        return SweepConfig(default_sweep_channels())
    if "channels" in obj:
        chans = tuple(gaussian_channel_from_config(c) for c in obj["channels"])
    else:
        try:
            p1s = [float(v) for v in obj["p1_values"]]
            p2s = [float(v) for v in obj["p2_values"]]
            bs = [float(v) for v in obj["abs_b_values"]]
            a_pairs = obj.get("a_values", [[0.0, 0.0]])
            avs = [complex(float(re), float(im)) for re, im in a_pairs]
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad sweep grid: {exc}") from exc
        chans = tuple(
            GaussianChannel(a, b, p1, p2)
            for p1 in p1s
            for p2 in p2s
            for b in bs
            for a in avs
        )
    return SweepConfig(
        channels=chans,
        alpha_grid=int(obj.get("alpha_grid_size", 512)),
        r1_grid=int(obj.get("r1_grid_size", 512)),
        seed=int(obj.get("seed", 0)),
    )


def _worker_count() -> int:
    raw = os.environ.get("CIFC_THREADS", "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError as exc:
            raise ConfigError(f"CIFC_THREADS must be an integer, got {raw!r}") from exc
        if n < 1:
            raise ConfigError(f"CIFC_THREADS must be at least 1, got {n}")
        return n
    return os.cpu_count() or 1


def _gap_report_row(report) -> str:
    ch = report.channel
    return ",".join(
        _fmt(v)
        for v in (
            ch.a.real,
            ch.a.imag,
            ch.abs_b,
            ch.p1,
            ch.p2,
            report.additive_gap_bits,
            report.multiplicative_gap,
            report.worst_alpha,
            report.worst_r1,
        )
    )


def cmd_gap_sweep(cfg: SweepConfig, out_dir) -> int:
    """Certify both constant-gap bounds over the sweep channels.

    One CSV row per channel; exits 3 when any channel exceeds one bit of
    additive gap or a factor two of multiplicative gap.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    def evaluate(ch):
        return gaussian.additive_gap_report(
            ch, alpha_grid=cfg.alpha_grid, r1_grid=cfg.r1_grid
        )

    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        reports = list(pool.map(evaluate, cfg.channels))

    lines = [GAP_SWEEP_HEADER]
    lines.extend(_gap_report_row(r) for r in reports)
    _write_text(out / "gap_sweep.csv", "\n".join(lines) + "\n")
    _write_metadata(
        out / "metadata.json",
        {
            "channel_count": len(cfg.channels),
            "alpha_grid_size": cfg.alpha_grid,
            "r1_grid_size": cfg.r1_grid,
            "seed": cfg.seed,
        },
    )

    max_add = max(r.additive_gap_bits for r in reports)
    max_mult = max(r.multiplicative_gap for r in reports)
    ok = max_add <= ADDITIVE_LIMIT and max_mult <= MULTIPLICATIVE_LIMIT
    print(
        f"gap sweep: {len(reports)} channels, "
        f"max additive gap {max_add:.6f} bits, "
        f"max multiplicative gap {max_mult:.6f}"
    )
    print("RESULT: PASS" if ok else "RESULT: FAIL")
    return EXIT_OK if ok else EXIT_CERT_FAIL


# ---------------------------------------------------------------------------
# dm verify


@dataclass(frozen=True)
class DmVerifyConfig:
    nx1: int = 2
    nx2: int = 2
    ny1: int = 2
    ny2: int = 2
    u_card: int = 0  # 0 means nx1 * nx2 + 1
    samples: int = 1000
    det_samples: int = 300
    aux_draws: int = 25
    fm_instances: int = 100
    rate_grid: int = 11
    seed: int = 42
    tolerance: float = 1e-9


def dm_verify_config_from_obj(obj) -> DmVerifyConfig:
    try:
        return DmVerifyConfig(
            nx1=int(obj.get("nx1", 2)),
            nx2=int(obj.get("nx2", 2)),
            ny1=int(obj.get("ny1", 2)),
            ny2=int(obj.get("ny2", 2)),
            u_card=int(obj.get("u_card", 0)),
            samples=int(obj.get("samples", 1000)),
            det_samples=int(obj.get("det_samples", 300)),
            aux_draws=int(obj.get("aux_draws", 25)),
            fm_instances=int(obj.get("fm_instances", 100)),
            rate_grid=int(obj.get("rate_grid", 11)),
            seed=int(obj.get("seed", 42)),
            tolerance=float(obj.get("tolerance", 1e-9)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad dm verify config: {exc}") from exc


def _triple_dev(t1, t2) -> float:
    return max(
        abs(t1.r1_max - t2.r1_max),
        abs(t1.r2_max - t2.r2_max),
        abs(t1.sum_max - t2.sum_max),
    )


def run_dm_verify(cfg: DmVerifyConfig):
    """Run the coincidence, substitution, and feasibility identity suite.

    Returns (lines, passed): printable per-check summaries and the
    overall verdict. Raises CapError when the requested alphabets exceed
    the sampler cell cap.
    """
    rng = np.random.default_rng(cfg.seed)
    u_card = cfg.u_card or cfg.nx1 * cfg.nx2 + 1
    cells = u_card * cfg.nx1 * cfg.nx2
    if cells > info.DEFAULT_CELL_CAP:
        raise CapError(f"{cells} table cells exceed the cap {info.DEFAULT_CELL_CAP}")
    tol = cfg.tolerance
    lines = []
    passed = True

    # semi-deterministic coincidence and the binning substitution
    axes = [("U", u_card), ("X1", cfg.nx1), ("X2", cfg.nx2)]
    good_co = good_sub = 0
    worst_co = worst_sub = 0.0
    for _ in range(cfg.samples):
        ch = channels.random_semidet(rng, cfg.nx1, cfg.nx2, cfg.ny1, cfg.ny2)
        dist = info.random_joint(rng, axes)
        t_out = dm_bounds.dm_outer_triple(dist, ch)
        dev = _triple_dev(dm_bounds.semidet_inner_triple(dist, ch), t_out)
        worst_co = max(worst_co, dev)
        good_co += dev <= tol
        sub = dm_bounds.specialize_u(dist, "U1=Y1,U2=U", ch)
        dev = _triple_dev(dm_bounds.binning_inner_triple(sub, ch), t_out)
        worst_sub = max(worst_sub, dev)
        good_sub += dev <= tol
    lines.append(
        f"semidet inner vs outer: {good_co}/{cfg.samples} within {tol:g} "
        f"(max dev {worst_co:.2e})"
    )
    lines.append(
        f"binning substitution vs outer: {good_sub}/{cfg.samples} within {tol:g} "
        f"(max dev {worst_sub:.2e})"
    )
    passed &= good_co == cfg.samples and good_sub == cfg.samples

    # fully deterministic channels: U = Y2 specialization and the sum-rate cap
    in_axes = [("X1", cfg.nx1), ("X2", cfg.nx2)]
    good_det = good_sum = good_aux = 0
    worst_det = worst_sum = 0.0
    worst_aux = -np.inf
    for _ in range(cfg.det_samples):
        ch = channels.random_deterministic(rng, cfg.nx1, cfg.nx2, cfg.ny1, cfg.ny2)
        dist = info.random_joint(rng, in_axes)
        t_det = dm_bounds.det_capacity_triple(dist, ch)
        spec = dm_bounds.specialize_u(dist, "U=Y2", ch)
        dev = _triple_dev(dm_bounds.semidet_inner_triple(spec, ch), t_det)
        worst_det = max(worst_det, dev)
        good_det += dev <= tol
        dev = abs(dm_bounds.det_sumrate_outer(dist, ch) - t_det.sum_max)
        worst_sum = max(worst_sum, dev)
        good_sum += dev <= 1e-12
        h_y2 = t_det.r2_max
        excess = -np.inf
        for _ in range(cfg.aux_draws):
            aux = info.attach_random_auxiliary(dist, "U", u_card, rng)
            j = info.push_through(aux, ch)
            excess = max(
                excess, info.mutual_information(j, "Y2", ("U", "X2")) - h_y2
            )
        worst_aux = max(worst_aux, excess)
        good_aux += excess <= 1e-12
    lines.append(
        f"deterministic specialization: {good_det}/{cfg.det_samples} within {tol:g} "
        f"(max dev {worst_det:.2e})"
    )
    lines.append(
        f"deterministic sum-rate: {good_sum}/{cfg.det_samples} within 1e-12 "
        f"(max dev {worst_sum:.2e})"
    )
    lines.append(
        f"auxiliary r2 maximization: {good_aux}/{cfg.det_samples} with "
        f"{cfg.aux_draws} draws each (max excess {worst_aux:.2e})"
    )
    passed &= (
        good_det == cfg.det_samples
        and good_sum == cfg.det_samples
        and good_aux == cfg.det_samples
    )

    # closed-form binning feasibility against the eliminated polytope
    bin_axes = [("U1", u_card), ("U2", u_card), ("X1", cfg.nx1), ("X2", cfg.nx2)]
    if u_card * u_card * cfg.nx1 * cfg.nx2 > info.DEFAULT_CELL_CAP:
        raise CapError("binning axes exceed the sampler cell cap")
    n = max(cfg.rate_grid, 2)
    points = 0
    discrepancies = 0
    for _ in range(cfg.fm_instances):
        ch = channels.random_semidet(rng, cfg.nx1, cfg.nx2, cfg.ny1, cfg.ny2)
        dist = info.random_joint(rng, bin_axes)
        m = dm_bounds.binning_measures(dist, ch)
        r1s = np.linspace(0.0, max(m.r1_raw, 0.0) * 1.25 + 0.1, n)
        r2s = np.linspace(0.0, m.r2_cap * 1.25 + 0.1, n)
        for r1 in r1s:
            for r2 in r2s:
                points += 1
                feas = m.feasible(float(r1), float(r2))
                loose = (
                    r1 <= m.r1_raw + tol
                    and r2 <= m.r2_cap + tol
                    and r1 + r2 <= m.sum_raw + tol
                )
                strict = (
                    r1 <= m.r1_raw - tol
                    and r2 <= m.r2_cap - tol
                    and r1 + r2 <= m.sum_raw - tol
                )
                if (feas and not loose) or (strict and not feas):
                    discrepancies += 1
    lines.append(
        f"binning feasibility: {cfg.fm_instances} instances x {n * n} rate points, "
        f"{discrepancies} discrepancies"
    )
    passed &= discrepancies == 0

    lines.append(f"RESULT: {'PASS' if passed else 'FAIL'}")
    return lines, bool(passed)


def cmd_dm_verify(cfg: DmVerifyConfig, out_path=None) -> int:
    lines, passed = run_dm_verify(cfg)
    for line in lines:
        print(line)
    if out_path is not None:
        _write_metadata(
            out_path,
            {"config": cfg.__dict__, "lines": lines, "pass": passed},
        )
    return EXIT_OK if passed else EXIT_CERT_FAIL


# ---------------------------------------------------------------------------
# dm region


@dataclass(frozen=True)
class DmRegionConfig:
    channel: DmChannel
    family: str
    method: str = "dirichlet"
    samples: int = 200
    k: int = 0
    seed: int = 0
    u_card: int = 0
    cap: int = info.DEFAULT_CELL_CAP
    dists: tuple = ()


def dm_region_config_from_obj(obj) -> DmRegionConfig:
    try:
        ch = dm_channel_from_config(obj["channel"])
        family = str(obj["family"])
        if family not in dm_bounds.FAMILIES:
            raise ConfigError(
                f"unknown family {family!r}; choose from {dm_bounds.FAMILIES}"
            )
        sampler = obj.get("sampler", {"method": "dirichlet", "samples": 200, "seed": 0})
        method = str(sampler.get("method", "dirichlet"))
        dists = ()
        if method == "explicit":
            dists = tuple(joint_from_config(d) for d in sampler["dists"])
        return DmRegionConfig(
            channel=ch,
            family=family,
            method=method,
            samples=int(sampler.get("samples", 200)),
            k=int(sampler.get("k", 0)),
            seed=int(sampler.get("seed", 0)),
            u_card=int(obj.get("u_card", 0)),
            cap=int(obj.get("cap", info.DEFAULT_CELL_CAP)),
            dists=dists,
        )
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad dm region config: {exc}") from exc


def cmd_dm_region(cfg: DmRegionConfig, out_dir) -> int:
    """Write hulled and raw frontiers plus per-distribution triple records."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ch = cfg.channel
    if cfg.method == "explicit":
        dists = list(cfg.dists)
    else:
        axes = dm_bounds.family_axes(ch, cfg.family, cfg.u_card)
        stream = info.sample_joint(
            axes, cfg.method, k=cfg.k or None, seed=cfg.seed, cap=cfg.cap
        )
        if cfg.method == "dirichlet":
            stream = itertools.islice(stream, cfg.samples)
        dists = list(stream)
    triple_fn = dm_bounds._TRIPLE_FNS[cfg.family]
    triples = [triple_fn(dist, ch) for dist in dists]

    write_frontier_csv(out / "frontier_hulled.csv", from_triples(triples, convexify=True))
    write_frontier_csv(out / "frontier_raw.csv", from_triples(triples, convexify=False))
    records = [
        json.dumps(
            {
                "a": t.r1_max,
                "b": t.r2_max,
                "c": t.sum_max,
                "family": cfg.family,
                "dist_id": i,
            },
            sort_keys=True,
        )
        for i, t in enumerate(triples)
    ]
    _write_text(out / "triples.jsonl", "\n".join(records) + "\n")
    _write_metadata(
        out / "metadata.json",
        {
            "family": cfg.family,
            "sampler": {
                "method": cfg.method,
                "samples": cfg.samples,
                "k": cfg.k,
                "seed": cfg.seed,
            },
            "u_card": cfg.u_card or dm_bounds.default_u_card(ch),
            "distribution_count": len(dists),
        },
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _run_gaussian_region(args) -> int:
    obj = _load_config(args.config)
    if "channel" not in obj:
        raise ConfigError("gaussian region config needs a 'channel' entry")
    ch = gaussian_channel_from_config(obj["channel"])
    if ch.regime != "strong":
        raise RegimeError(
            f"|b| = {ch.abs_b} is not > 1: frontier data needs strong interference"
        )
    alpha_grid = args.alpha_grid or int(obj.get("alpha_grid_size", 512))
    r1_grid = args.r1_grid or int(obj.get("r1_grid_size", 512))
    return cmd_gaussian_region(ch, args.out, alpha_grid=alpha_grid, r1_grid=r1_grid)


def _run_gap_sweep(args) -> int:
    cfg = sweep_config_from_obj(_load_config(args.config))
    if args.seed is not None:
        cfg = SweepConfig(cfg.channels, cfg.alpha_grid, cfg.r1_grid, args.seed)
    if args.alpha_grid:
        cfg = SweepConfig(cfg.channels, args.alpha_grid, cfg.r1_grid, cfg.seed)
    if args.r1_grid:
        cfg = SweepConfig(cfg.channels, cfg.alpha_grid, args.r1_grid, cfg.seed)
    return cmd_gap_sweep(cfg, args.out)


def _run_dm_verify(args) -> int:
    cfg = dm_verify_config_from_obj(_load_config(args.config))
    if args.seed is not None:
        cfg = DmVerifyConfig(**{**cfg.__dict__, "seed": args.seed})
    return cmd_dm_verify(cfg, out_path=args.out)


def _run_dm_region(args) -> int:
    cfg = dm_region_config_from_obj(_load_config(args.config))
    if args.seed is not None:
        cfg = DmRegionConfig(**{**cfg.__dict__, "seed": args.seed})
    return cmd_dm_region(cfg, args.out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cifc",
        description="Capacity-bound evaluations for the cognitive interference channel.",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    g = sub.add_parser("gaussian", help="AWGN channel bounds")
    gsub = g.add_subparsers(dest="command", required=True)

    reg = gsub.add_parser("region", help="four-curve frontier data for one channel")
    reg.add_argument("--config", required=True, help="JSON config with a 'channel' entry")
    reg.add_argument("--out", required=True, help="output directory")
    reg.add_argument("--alpha-grid", type=int, default=0)
    reg.add_argument("--r1-grid", type=int, default=0)
    reg.set_defaults(func=_run_gaussian_region)

    sweep = gsub.add_parser("gap-sweep", help="constant-gap certification sweep")
    sweep.add_argument("--config", help="JSON sweep config (default suite when omitted)")
    sweep.add_argument("--out", required=True, help="output directory")
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--alpha-grid", type=int, default=0)
    sweep.add_argument("--r1-grid", type=int, default=0)
    sweep.set_defaults(func=_run_gap_sweep)

    d = sub.add_parser("dm", help="discrete memoryless channel bounds")
    dsub = d.add_subparsers(dest="command", required=True)

    verify = dsub.add_parser("verify", help="identity suite on random channels")
    verify.add_argument("--config", help="JSON verify config (defaults when omitted)")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--out", help="optional JSON results file")
    verify.set_defaults(func=_run_dm_verify)

    region = dsub.add_parser("region", help="sampled frontier for one bound family")
    region.add_argument("--config", required=True)
    region.add_argument("--out", required=True, help="output directory")
    region.add_argument("--seed", type=int, default=None)
    region.set_defaults(func=_run_dm_region)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, RegimeError, CapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
