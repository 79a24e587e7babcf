"""Command-line orchestration: eta expansions, x/y expansion, catalogs,
unbounded-denominator detection, and the sublattice census, with a text
cache of exact series keyed by run parameters.

Exit codes: 0 success, 2 validation error, 3 detection ran but was
Inconclusive only, 4 internal inconsistency (a defining relation failed).
"""

import argparse
import hashlib
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .qseries import (
    EtaQuotient,
    eta_quotient_expand,
    deserialize_series,
    serialize_series,
)
from .x011 import build_catalog, catalog_export, expand_xy, expansion_report
from .ubdetect import analyze_catalog, detect
from .census import LatticeTriple, s_count, ubd_lower_bound_experiment


class ValidationError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated per-command run parameters."""
    command: str
    truncation: int = 0
    prime: int = None
    root_degree: int = None
    xmax: int = None
    b_triple: tuple = None
    cache_dir: str = None
    output_format: str = "table"
    entry: str = None
    series_file: str = None
    quotient: str = None
    width: int = None
    index: int = None

    @classmethod
    def from_args(cls, args):
        cfg = cls(command=args.command,
                  truncation=getattr(args, "terms", 0),
                  prime=getattr(args, "prime", None),
                  root_degree=getattr(args, "root", None),
                  xmax=getattr(args, "xmax", None),
                  cache_dir=args.cache_dir,
                  output_format=args.format,
                  entry=getattr(args, "entry", None),
                  series_file=getattr(args, "series_file", None),
                  quotient=getattr(args, "quotient", None),
                  width=getattr(args, "width", None),
                  index=getattr(args, "index", None))
        b = getattr(args, "b", None)
        if b is not None:
            try:
                cfg.b_triple = tuple(int(t) for t in b.split(","))
                if len(cfg.b_triple) != 3:
                    raise ValueError("need three components")
            except ValueError as exc:
                raise ValidationError(f"bad --b triple: {exc}")
        cfg.validate()
        return cfg

    def validate(self):
        if self.truncation is not None and self.truncation < 0:
            raise ValidationError("--terms must be nonnegative")
        if self.command == "eta" and self.width < 1:
            raise ValidationError("--width must be a positive integer")
        if self.command == "expand-xy" and self.truncation < 10:
            raise ValidationError("expand-xy needs --terms of at least 10")
        if self.command in ("catalog", "report") and self.index not in (2, 5):
            raise ValidationError("catalog index must be 2 or 5")
        if self.command == "detect":
            if bool(self.entry) == bool(self.series_file):
                raise ValidationError(
                    "provide exactly one of --entry or --series-file")
            if self.prime is None or self.root_degree is None:
                raise ValidationError("detect needs --prime and --root")
        if self.command == "census":
            if self.xmax is None or self.xmax < 2:
                raise ValidationError("--xmax must be at least 2")
            if self.b_triple is not None and self.xmax < 4:
                raise ValidationError("--xmax must be at least 4 with --b")


# ----------------------------------------------------------------------
# Series cache: one text record per (operation, parameters, code version).
# ----------------------------------------------------------------------

def cache_dir(override=None):
    d = override or os.environ.get("UBD_CACHE_DIR") \
        or os.path.join(os.path.expanduser("~"), ".cache", "ubd")
    os.makedirs(d, exist_ok=True)
    return d


def _cache_key(op, params):
    tag = f"{op}|{params}|{__version__}"
    return hashlib.sha256(tag.encode()).hexdigest()[:24]


class _Lock:
    """Single-writer lock file with a stale-lock timeout."""

    def __init__(self, path, timeout=30.0):
        self.path = path + ".lock"
        self.timeout = timeout
        self.fd = None

    def __enter__(self):
        deadline = time.time() + self.timeout
        while True:
            try:
                self.fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
                return self
            except FileExistsError:
                if time.time() > deadline:
                    os.unlink(self.path)  # stale lock
                else:
                    time.sleep(0.05)

    def __exit__(self, *exc):
        if self.fd is not None:
            os.close(self.fd)
        try:
            os.unlink(self.path)
        except FileNotFoundError:
            pass


def cached_series(op, params, compute, directory):
    """Load a series from the cache or compute and store it; a corrupt cache
    entry is recomputed with a warning."""
    path = os.path.join(directory, _cache_key(op, params) + ".series")
    if os.path.exists(path):
        try:
            with open(path) as fh:
                return deserialize_series(fh.read())
        except (ValueError, KeyError, IndexError):
            print(f"warning: corrupt cache entry {os.path.basename(path)}; "
                  "recomputing", file=sys.stderr)
    series = compute()
    with _Lock(path):
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(serialize_series(series))
        os.replace(tmp, path)
    return series


# ----------------------------------------------------------------------
# Commands.
# ----------------------------------------------------------------------

def _parse_eta_spec(text):
    terms = []
    for part in text.split(","):
        try:
            d, r = part.split(":")
            terms.append((Fraction(d), int(r)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad eta term {part!r}: {exc}")
    try:
        return EtaQuotient(terms)
    except ValueError as exc:
        raise ValidationError(str(exc))


def _fmt(v):
    if isinstance(v, Fraction) or isinstance(v, int):
        v = Fraction(v)
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def cmd_eta(cfg, out):
    eq = _parse_eta_spec(cfg.quotient)
    try:
        series = eta_quotient_expand(eq, cfg.width, cfg.truncation)
    except ValueError as exc:
        raise ValidationError(str(exc))
    out.write(serialize_series(series))
    return 0


def cmd_expand_xy(cfg, out):
    d = cache_dir(cfg.cache_dir)
    x = cached_series("expand-xy-x", f"T={cfg.truncation}",
                      lambda: expand_xy(cfg.truncation)[0], d)
    y = cached_series("expand-xy-y", f"T={cfg.truncation}",
                      lambda: expand_xy(cfg.truncation)[1], d)
    rep = expansion_report(min(cfg.truncation, 50))
    out.write(f"# kappa {_fmt(rep['kappa'])}\n")
    out.write(serialize_series(x))
    out.write(serialize_series(y))
    return 0


def cmd_catalog(cfg, out):
    entries = build_catalog(cfg.index)
    out.write(catalog_export(entries, cfg.truncation))
    return 0


def _entry_by_label(label):
    labels = []
    for index in (2, 5):
        for e in build_catalog(index):
            if e.label == label:
                return e
            labels.append(e.label)
    raise ValidationError(
        f"unknown entry {label!r}; available: {', '.join(labels)}")


def _verdict_lines(v, fmt):
    if fmt == "records":
        wv = _fmt(v.witness_valuation) if v.witness_valuation is not None else "-"
        wi = v.witness_index if v.witness_index is not None else "-"
        return [f"entry={v.label or '-'} status={v.status} witness_index={wi} "
                f"witness_valuation={wv} threshold={_fmt(v.threshold)} "
                f"truncation={v.truncation_used} mode={v.valuation_mode}"]
    head = f"{v.label or '-':10s} {v.status:20s}"
    if v.witness_index is not None and v.witness_valuation is not None:
        head += f" witness m={v.witness_index}, -ord={_fmt(v.witness_valuation)}"
    elif v.witness_index is not None:
        head += f" partial witness m={v.witness_index}"
    head += (f"  [tau={_fmt(v.threshold)}, T={v.truncation_used}, "
             f"mode={v.valuation_mode}]")
    return [head]


def cmd_detect(cfg, out):
    d = cache_dir(cfg.cache_dir)
    if cfg.entry:
        e = _entry_by_label(cfg.entry)
        series = cached_series(
            "entry-expansion", f"label={e.label},T={cfg.truncation + 2}",
            lambda: e.expansion(cfg.truncation + 2), d)
        label = e.label
    else:
        try:
            with open(cfg.series_file) as fh:
                series = deserialize_series(fh.read())
        except (OSError, ValueError) as exc:
            raise ValidationError(f"cannot read series file: {exc}")
        label = os.path.basename(cfg.series_file)
    try:
        v = detect(series, cfg.root_degree, cfg.prime, cfg.truncation, label=label)
    except ValueError as exc:
        raise ValidationError(str(exc))
    for line in _verdict_lines(v, cfg.output_format):
        out.write(line + "\n")
    return 3 if v.status == "Inconclusive" else 0


def cmd_census(cfg, out):
    res = s_count(cfg.xmax)
    if cfg.b_triple:
        try:
            b = LatticeTriple(*cfg.b_triple)
        except ValueError as exc:
            raise ValidationError(f"bad --b triple: {exc}")
        exp = ubd_lower_bound_experiment(b, cfg.xmax)
        out.write(f"{exp.X}\t{exp.full_count}\t{_fmt(exp.ratio)}\t"
                  f"b={b.l},{b.n},{b.m}\trestricted={exp.restricted_count}\t"
                  f"phi_bound={exp.phi_bound}\n")
    else:
        out.write(f"{res.X}\t{res.count}\t{_fmt(res.ratio)}\n")
    return 0


def cmd_report(cfg, out):
    entries = build_catalog(cfg.index)
    d = cache_dir(cfg.cache_dir)
    for e in entries:
        cached_series("entry-expansion", f"label={e.label},T={cfg.truncation + 2}",
                      lambda e=e: e.expansion(cfg.truncation + 2), d)
    try:
        rep = analyze_catalog(entries, T=cfg.truncation,
                              prime_p=cfg.prime if cfg.prime else None)
    except ValueError as exc:
        raise ValidationError(str(exc))
    if cfg.output_format == "records":
        for v in rep.verdicts:
            for line in _verdict_lines(v, "records"):
                out.write(line + "\n")
        out.write(f"summary index={rep.index} certified={rep.certified} "
                  f"bounded={rep.bounded} inconclusive={rep.inconclusive} "
                  f"hypothesis_confirmed={rep.hypothesis_confirmed}\n")
    else:
        out.write(f"index-{rep.index} catalog at T={rep.truncation}\n")
        for v in rep.verdicts:
            for line in _verdict_lines(v, "table"):
                out.write(line + "\n")
        out.write(f"certified: {rep.certified}  bounded: {rep.bounded}  "
                  f"inconclusive: {rep.inconclusive}\n")
        out.write("theorem hypothesis confirmed: "
                  f"{'yes' if rep.hypothesis_confirmed else 'no'}\n")
    return 3 if rep.inconclusive and not rep.certified else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ubd",
        description="Exact expansions and unbounded-denominator certificates "
                    "for character groups of Gamma^0(11)")
    ap.add_argument("--cache-dir", default=None,
                    help="cache directory (default: $UBD_CACHE_DIR or ~/.cache/ubd)")
    ap.add_argument("--format", choices=("table", "records"), default="table")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eta", help="expand an eta quotient")
    p.add_argument("quotient", help="terms 'delta:exp,...', delta rational like 1/11")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--terms", type=int, default=50)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("expand-xy", help="expand x(w), y(w) for Gamma^0(11)")
    p.add_argument("--terms", type=int, default=50)
    p.set_defaults(func=cmd_expand_xy)

    p = sub.add_parser("catalog", help="build a character-group catalog")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--terms", type=int, default=20)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("detect", help="unbounded-denominator detection")
    p.add_argument("--entry", default=None)
    p.add_argument("--series-file", default=None)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--terms", type=int, default=300)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("census", help="count type II(A) sublattice triples")
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--b", default=None, help="comparison triple 's,u,v'")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("report", help="detection report over a catalog")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--terms", type=int, default=300)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(cfg, sys.stdout)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
