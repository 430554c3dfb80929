"""Per-genus census over the full tree, with persistent output.

One enumeration pass tallies, for every genus up to the configured
bound: the Frobenius-class split, sumset-obstruction failures within a
tested n-range, the analytic window flags, weight extremes, and the
multiplicity histogram.  Rows can be written as CSV or JSON lines, and
a checkpoint file allows an interrupted run to resume per genus.

Counts for g = 16..25 are cross-checked against the published table
of totals and n = 2 obstruction failures.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, Optional, Sequence, Union

from .enumeration import (
    DEFAULT_GENUS_CAP,
    ResourceLimitError,
    _ROOT,
    _raw_children,
    _raw_layer,
)
from .partitions import BETA1, BETA2, GAMMA, GOLDEN_RATIO

# published totals and n=2 failure counts, genus 16 through 25,
# with the quoted six-decimal ratio column
KOMEDA_TABLE: dict[int, tuple[int, int, float]] = {
    16: (4806, 2, 0.000416),
    17: (8045, 6, 0.000746),
    18: (13467, 15, 0.001114),
    19: (22464, 31, 0.001380),
    20: (37396, 67, 0.001792),
    21: (62194, 145, 0.002331),
    22: (103246, 293, 0.002838),
    23: (170963, 542, 0.003170),
    24: (282828, 1053, 0.003723),
    25: (467224, 1944, 0.004161),
}

DEFAULT_EPSILON = Fraction(1, 21)
DEFAULT_M_THRESHOLD = 420
DEFAULT_GENUS_MULT_RATIO = Fraction(13667, 10000)
DEFAULT_SPLIT_DEPTH = 8

CSV_HEADER = (
    "g,N,ordinary,low,mid,high,nb2,nb_any,nb_capped,q_eh,r_2g3m,a_eps,"
    "b_m420,c_ratio,nstar_eps,phi_eps,p_eps,y_beta1,z_beta2,w_min,w_max,"
    "n_phi_ratio"
)


class CheckpointMismatchError(Exception):
    """Checkpoint file was produced under a different configuration."""


@dataclass(frozen=True)
class CensusConfig:
    g_max: int
    epsilon: Fraction = DEFAULT_EPSILON
    nb_n_cap: int = 8
    m_threshold: int = DEFAULT_M_THRESHOLD
    genus_mult_ratio: Fraction = DEFAULT_GENUS_MULT_RATIO
    weight_beta_flags: bool = True
    threads: int = 1
    checkpoint_path: Optional[str] = None
    split_depth: int = DEFAULT_SPLIT_DEPTH

    def __post_init__(self) -> None:
        if self.g_max < 1:
            raise ValueError("g_max must be at least 1")
        if not isinstance(self.epsilon, Fraction) or self.epsilon <= 0:
            raise ValueError("epsilon must be a positive Fraction")
        if self.nb_n_cap < 2:
            raise ValueError("nb_n_cap must be at least 2")
        if self.m_threshold < 1:
            raise ValueError("m_threshold must be positive")
        if not isinstance(self.genus_mult_ratio, Fraction) or self.genus_mult_ratio <= 0:
            raise ValueError("genus_mult_ratio must be a positive Fraction")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.split_depth < 1:
            raise ValueError("split_depth must be at least 1")

    def config_hash(self) -> str:
        """Hash of the fields that change row values.  g_max, threads,
        split depth and paths are free to differ across a resume."""
        payload = json.dumps(
            {
                "epsilon": str(self.epsilon),
                "nb_n_cap": self.nb_n_cap,
                "m_threshold": self.m_threshold,
                "genus_mult_ratio": str(self.genus_mult_ratio),
                "weight_beta_flags": self.weight_beta_flags,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CensusRow:
    g: int
    n: int
    ordinary: int
    low: int
    mid: int
    high: int
    nb2: int
    nb_any: int
    nb_capped: int
    q_eh: int
    r_2g3m: int
    a_eps: int
    b_m420: int
    c_ratio: int
    nstar_eps: int
    phi_eps: int
    p_eps: int
    y_beta1: int
    z_beta2: int
    w_min: int
    w_max: int
    mult_hist: tuple[int, ...] = field(repr=False)

    @property
    def n_phi_ratio(self) -> float:
        return self.n * GOLDEN_RATIO ** (-self.g)

    def csv_values(self) -> list[str]:
        return [
            str(v)
            for v in (
                self.g, self.n, self.ordinary, self.low, self.mid, self.high,
                self.nb2, self.nb_any, self.nb_capped, self.q_eh, self.r_2g3m,
                self.a_eps, self.b_m420, self.c_ratio, self.nstar_eps,
                self.phi_eps, self.p_eps, self.y_beta1, self.z_beta2,
                self.w_min, self.w_max,
            )
        ] + [f"{self.n_phi_ratio:.6f}"]

    def as_dict(self) -> dict:
        return {
            "g": self.g, "N": self.n, "ordinary": self.ordinary,
            "low": self.low, "mid": self.mid, "high": self.high,
            "nb2": self.nb2, "nb_any": self.nb_any,
            "nb_capped": self.nb_capped, "q_eh": self.q_eh,
            "r_2g3m": self.r_2g3m, "a_eps": self.a_eps,
            "b_m420": self.b_m420, "c_ratio": self.c_ratio,
            "nstar_eps": self.nstar_eps, "phi_eps": self.phi_eps,
            "p_eps": self.p_eps, "y_beta1": self.y_beta1,
            "z_beta2": self.z_beta2, "w_min": self.w_min,
            "w_max": self.w_max, "n_phi_ratio": round(self.n_phi_ratio, 6),
            "mult_hist": list(self.mult_hist),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRow":
        return cls(
            g=d["g"], n=d["N"], ordinary=d["ordinary"], low=d["low"],
            mid=d["mid"], high=d["high"], nb2=d["nb2"], nb_any=d["nb_any"],
            nb_capped=d["nb_capped"], q_eh=d["q_eh"], r_2g3m=d["r_2g3m"],
            a_eps=d["a_eps"], b_m420=d["b_m420"], c_ratio=d["c_ratio"],
            nstar_eps=d["nstar_eps"], phi_eps=d["phi_eps"], p_eps=d["p_eps"],
            y_beta1=d["y_beta1"], z_beta2=d["z_beta2"], w_min=d["w_min"],
            w_max=d["w_max"], mult_hist=tuple(d["mult_hist"]),
        )


# tally field order, shared by the walker and the row builder
_NF = 18
(_N, _ORD, _LOW, _MID, _HIGH, _NB2, _NBANY, _NBCAP, _Q, _R,
 _A, _B, _C, _NSTAR, _PHI, _P, _Y, _Z) = range(_NF)


def _per_genus_constants(cfg: CensusConfig, g_max: int) -> list[Optional[tuple]]:
    eps = float(cfg.epsilon)
    rden = cfg.genus_mult_ratio.denominator
    out: list[Optional[tuple]] = [None]
    for g in range(1, g_max + 1):
        out.append((
            g * (g + 1) // 2,            # triangular number, weight offset
            g - 1,
            3 * (g - 1),                 # n=2 failure threshold
            2 * g,
            g * rden,                    # lhs of g < ratio*m
            (GAMMA - eps) * g,
            (GAMMA + eps) * g,
            (BETA1 - eps) * g * g,
            (BETA2 + eps) * g * g,
            2 * g - 1,                   # symmetric-case F
        ))
    return out


def _new_accs(g_max: int) -> tuple[list, list, list]:
    counts = [None] + [[0] * _NF for _ in range(g_max)]
    mult = [None] + [{} for _ in range(g_max)]
    wmm = [None] + [[1 << 62, -1] for _ in range(g_max)]
    return counts, mult, wmm


def _merge_accs(dst, src) -> None:
    dcounts, dmult, dwmm = dst
    scounts, smult, swmm = src
    for g in range(1, len(dcounts)):
        drow, srow = dcounts[g], scounts[g]
        for i in range(_NF):
            drow[i] += srow[i]
        dm = dmult[g]
        for m, c in smult[g].items():
            dm[m] = dm.get(m, 0) + c
        if swmm[g][0] < dwmm[g][0]:
            dwmm[g][0] = swmm[g][0]
        if swmm[g][1] > dwmm[g][1]:
            dwmm[g][1] = swmm[g][1]


def _walk_tally(roots, g_hi: int, layer_only: bool, accs, cfg: CensusConfig) -> None:
    """Depth-first walk from the given raw nodes, tallying flags.

    layer_only restricts the tally to nodes of genus exactly g_hi;
    otherwise every node of genus >= 1 on the way down is counted.
    This is the census hot path: flag logic is inlined and children at
    the deepest layer skip generator-set construction.
    """
    counts, mult, wmm = accs
    pg = _per_genus_constants(cfg, g_hi)
    e = cfg.epsilon
    p_lo, q_lo = 2 * e.denominator - e.numerator, e.denominator
    p_hi, q_hi = 2 * e.denominator + e.numerator, e.denominator
    rnum = cfg.genus_mult_ratio.numerator
    m_thr = cfg.m_threshold
    cap = cfg.nb_n_cap
    beta_on = cfg.weight_beta_flags

    def tally(mask: int, m: int, f: int, g: int, gsum: int) -> None:
        tri, gm1, thr2, two_g, c_lhs, phi_lo, phi_hi, y_thr, z_thr, sym = pg[g]
        row = counts[g]
        row[_N] += 1
        w = gsum - tri
        if f < 2 * m:
            if f == m - 1:
                row[_ORD] += 1
            else:
                row[_LOW] += 1
            if w < gm1:
                row[_Q] += 1
        elif f < 3 * m:
            row[_MID] += 1
        else:
            row[_HIGH] += 1
        if two_g < 3 * m:
            row[_R] += 1
        if p_lo * m < q_lo * f:
            if q_hi * f < p_hi * m:
                row[_A] += 1
        else:
            row[_NSTAR] += 1
        if m < m_thr:
            row[_B] += 1
        if c_lhs < rnum * m:
            row[_C] += 1
        if phi_lo < m < phi_hi:
            row[_PHI] += 1
        if f < 3 * m and p_hi * m < q_hi * f:
            row[_P] += 1
        if beta_on:
            if w <= y_thr:
                row[_Y] += 1
            if w >= z_thr:
                row[_Z] += 1
        mg = mult[g]
        mg[m] = mg.get(m, 0) + 1
        wg = wmm[g]
        if w < wg[0]:
            wg[0] = w
        if w > wg[1]:
            wg[1] = w
        # sumset obstruction: only where the size bound leaves n >= 2
        # in play, which needs F close to 2g-1
        if gm1 == 0:
            return
        d = sym - f
        if d:
            horizon = gm1 // d
            if horizon < 2:
                return
            n_hi = horizon if horizon < cap else cap
            capped = horizon > cap
        else:
            n_hi = cap
            capped = True
        gapmask = ~mask & ((1 << (f + 1)) - 1)
        acc = 0
        bits = gapmask
        while bits:
            lsb = bits & -bits
            acc |= gapmask << (lsb.bit_length() - 1)
            bits ^= lsb
        if acc.bit_count() > thr2:
            row[_NB2] += 1
            row[_NBANY] += 1
            return
        for n in range(3, n_hi + 1):
            nxt = 0
            bits = gapmask
            while bits:
                lsb = bits & -bits
                nxt |= acc << (lsb.bit_length() - 1)
                bits ^= lsb
            acc = nxt
            if acc.bit_count() > (2 * n - 1) * gm1:
                row[_NBANY] += 1
                return
        if capped:
            row[_NBCAP] += 1

    last = g_hi - 1
    stack = list(roots)
    while stack:
        node = stack.pop()
        mask, m, frob, g, gsum, gens = node
        if g and (not layer_only or g == g_hi):
            tally(mask, m, frob, g, gsum)
        if g > last:
            continue
        if g == last:
            f1 = frob + 1
            for x in gens:
                ext = x - 1 - frob
                cmask = (mask | (((1 << ext) - 1) << f1)) if ext else mask
                tally(cmask, m + 1 if x == m else m, x, g + 1, gsum + x)
        else:
            stack.extend(_raw_children(node))


def _worker_full(args) -> tuple:
    node, g_max, cfg = args
    accs = _new_accs(g_max)
    _walk_tally([node], g_max, False, accs, cfg)
    return accs


def _worker_layer(args) -> tuple:
    node, genus, cfg = args
    accs = _new_accs(genus)
    _walk_tally([node], genus, True, accs, cfg)
    return accs


def _build_row(g: int, accs) -> CensusRow:
    counts, mult, wmm = accs
    row = counts[g]
    hist_src = mult[g]
    top = max(hist_src) if hist_src else 0
    hist = [0] * (top + 1)
    for m, c in hist_src.items():
        hist[m] = c
    out = CensusRow(
        g=g, n=row[_N], ordinary=row[_ORD], low=row[_LOW], mid=row[_MID],
        high=row[_HIGH], nb2=row[_NB2], nb_any=row[_NBANY],
        nb_capped=row[_NBCAP], q_eh=row[_Q], r_2g3m=row[_R], a_eps=row[_A],
        b_m420=row[_B], c_ratio=row[_C], nstar_eps=row[_NSTAR],
        phi_eps=row[_PHI], p_eps=row[_P], y_beta1=row[_Y], z_beta2=row[_Z],
        w_min=wmm[g][0], w_max=wmm[g][1], mult_hist=tuple(hist),
    )
    _check_row(out)
    return out


def _check_row(r: CensusRow) -> None:
    checks = [
        r.n == r.ordinary + r.low + r.mid + r.high,
        r.nb2 <= r.nb_any <= r.n,
        r.q_eh <= r.ordinary + r.low,
        sum(r.mult_hist) == r.n,
        0 <= r.w_min <= r.w_max,
    ]
    for name in ("nb_capped", "r_2g3m", "a_eps", "b_m420", "c_ratio",
                 "nstar_eps", "phi_eps", "p_eps", "y_beta1", "z_beta2"):
        checks.append(0 <= getattr(r, name) <= r.n)
    if not all(checks):
        raise RuntimeError(f"census row invariant violated at genus {r.g}: {r}")


def _split_tasks(cfg: CensusConfig, depth: int, per_node_extra) -> list[tuple]:
    return [(node, per_node_extra, cfg) for node in _raw_layer(depth)]


def _run_full_pass(cfg: CensusConfig) -> tuple:
    accs = _new_accs(cfg.g_max)
    depth = min(cfg.split_depth, cfg.g_max)
    if cfg.threads == 1 or cfg.g_max <= depth:
        _walk_tally([_ROOT], cfg.g_max, False, accs, cfg)
        return accs
    # nodes above the split layer in the main process, one subtree per task
    _walk_tally([_ROOT], depth - 1, False, accs, cfg)
    tasks = _split_tasks(cfg, depth, cfg.g_max)
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        for part in pool.map(_worker_full, tasks):
            _merge_accs(accs, part)
    return accs


def _run_one_genus(cfg: CensusConfig, genus: int) -> CensusRow:
    accs = _new_accs(genus)
    depth = min(cfg.split_depth, genus)
    if cfg.threads == 1 or genus <= depth:
        _walk_tally([_ROOT], genus, True, accs, cfg)
        return _build_row(genus, accs)
    tasks = _split_tasks(cfg, depth, genus)
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        for part in pool.map(_worker_layer, tasks):
            _merge_accs(accs, part)
    return _build_row(genus, accs)


def load_checkpoint(path: str, cfg: CensusConfig) -> dict[int, CensusRow]:
    """Completed rows from a checkpoint file.  An absent or empty file
    means a fresh start; a header written under a different
    configuration raises.  A torn trailing line is dropped."""
    if not os.path.exists(path):
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        return {}
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError:
        raise CheckpointMismatchError(f"unreadable checkpoint header in {path}")
    if header.get("config_hash") != cfg.config_hash():
        raise CheckpointMismatchError(
            f"checkpoint {path} was written with config hash "
            f"{header.get('config_hash')}, current is {cfg.config_hash()}"
        )
    rows: dict[int, CensusRow] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        try:
            d = json.loads(line)
            row = CensusRow.from_dict(d)
        except (json.JSONDecodeError, KeyError):
            break
        rows[row.g] = row
    return rows


def run_census(cfg: CensusConfig, *, genus_cap: int = DEFAULT_GENUS_CAP) -> list[CensusRow]:
    """Rows for genus 1 .. g_max.  With a checkpoint path set, each
    completed genus is persisted and the run recomputes only missing
    genera, walking the tree once per genus; without one, a single pass
    fills every genus at once."""
    if cfg.g_max > genus_cap:
        raise ResourceLimitError(cfg.g_max, genus_cap)
    if cfg.checkpoint_path is None:
        accs = _run_full_pass(cfg)
        return [_build_row(g, accs) for g in range(1, cfg.g_max + 1)]

    done = load_checkpoint(cfg.checkpoint_path, cfg)
    # rewrite up front: heals a torn trailing line from an interrupt
    with open(cfg.checkpoint_path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"config_hash": cfg.config_hash(), "format": 1}) + "\n")
        for g in sorted(done):
            fh.write(json.dumps(done[g].as_dict(), separators=(",", ":")) + "\n")
        fh.flush()
        for g in range(1, cfg.g_max + 1):
            if g in done:
                continue
            row = _run_one_genus(cfg, g)
            done[g] = row
            fh.write(json.dumps(row.as_dict(), separators=(",", ":")) + "\n")
            fh.flush()
    return [done[g] for g in range(1, cfg.g_max + 1)]


def write_csv(rows: Sequence[CensusRow], out: Union[str, IO[str]]) -> None:
    own = isinstance(out, str)
    fh = open(out, "w", encoding="utf-8", newline="") if own else out
    try:
        fh.write(CSV_HEADER + "\n")
        for r in rows:
            fh.write(",".join(r.csv_values()) + "\n")
    finally:
        if own:
            fh.close()


def write_jsonl(rows: Sequence[CensusRow], out: Union[str, IO[str]]) -> None:
    own = isinstance(out, str)
    fh = open(out, "w", encoding="utf-8") if own else out
    try:
        for r in rows:
            fh.write(json.dumps(r.as_dict(), separators=(",", ":")) + "\n")
    finally:
        if own:
            fh.close()


def recurrence_check(g_max: int, table=None) -> list[tuple[int, int, int, int]]:
    """Violations of N(m-1, g-1) + N(m-1, g-2) = N(m, g) over the
    region 2g < 3m with m >= 3, g <= g_max.  Each entry is
    (m, g, lhs, rhs); an empty list means the identity held throughout.
    """
    if g_max < 3:
        raise ValueError("g_max must be at least 3")
    if table is None:
        from .enumeration import count_matrix

        table = count_matrix(g_max)
    bad = []
    for m in range(3, g_max + 2):
        for g in range(1, g_max + 1):
            if 2 * g >= 3 * m:
                continue
            lhs = table.get((m - 1, g - 1), 0) + table.get((m - 1, g - 2), 0)
            rhs = table.get((m, g), 0)
            if lhs != rhs:
                bad.append((m, g, lhs, rhs))
    return bad


def komeda_compare(rows: Iterable[CensusRow]) -> list[dict]:
    """Exact diff of N and NB2 against the published 16..25 table.
    Raises if the rows do not cover that whole range."""
    by_g = {r.g: r for r in rows}
    missing = [g for g in KOMEDA_TABLE if g not in by_g]
    if missing:
        raise ValueError(f"rows must cover genus 16..25, missing {missing}")
    diffs = []
    for g, (n_pub, nb2_pub, _) in sorted(KOMEDA_TABLE.items()):
        r = by_g[g]
        if r.n != n_pub:
            diffs.append({"g": g, "field": "N", "expected": n_pub, "actual": r.n})
        if r.nb2 != nb2_pub:
            diffs.append({"g": g, "field": "nb2", "expected": nb2_pub, "actual": r.nb2})
    return diffs


def ratio_report(rows: Sequence[CensusRow]) -> list[dict]:
    """Per-genus density columns.  Trends only; nothing asymptotic is
    claimed or asserted here."""
    if not rows:
        raise ValueError("rows must be nonempty")
    out = []
    for r in rows:
        n = r.n
        out.append({
            "g": r.g,
            "nb2_over_n": r.nb2 / n,
            "nb_any_over_n": r.nb_any / n,
            "a_eps_over_n": r.a_eps / n,
            "phi_eps_over_n": r.phi_eps / n,
            "q_over_n": r.q_eh / n,
            "r_over_n": r.r_2g3m / n,
            "l_over_n": r.high / n,
            "n_phi_ratio": r.n_phi_ratio,
        })
    return out
