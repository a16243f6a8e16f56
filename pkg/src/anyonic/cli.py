"""Command line entry point.

    anyonic TASK (--preset NAME | --config FILE) [--max-len K] [--max-i N]
            [--delta FILE|zero] [--format text|json] [--out FILE] [--unchecked]

Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .algebra import confluence_check
from .anyon_space import (
    AnyonObject,
    braid_coefficient,
    braid_from_R,
    focused_sign,
    is_focused,
    psi_squared_is_identity,
    DegreedGenerator,
)
from .ce_homology import d_squared_check, homology_dims, NotFocusedError
from .checks import Check
from .config import Config, ConfigError, paired_preset, parse_config, preset
from .hopf import (
    HopfData,
    antipode_squared_is_identity,
    coproduct,
    counit_antipode,
    format_tensor,
    psi_squared_on_tensor_square,
    verify_hopf_axioms,
)
from .hp_report import assemble_hp
from .quantum_lie import (
    Character,
    enveloping_presentation,
    kernel_id_minus_psi,
    format_pair_vec,
    qla_checks,
    relation_residues,
    validate_character,
    zero_character,
)
from .scalar import format_scalar, parse_scalar

TASKS = ("check-braiding", "hopf-axioms", "qla-check", "envelope", "homology", "hp")


@dataclass
class Report:
    task: str
    input_digest: str
    checks: list = field(default_factory=list)
    tables: list = field(default_factory=list)  # [{"name": ..., "rows": [...]}]
    warnings: list = field(default_factory=list)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add_table(self, name: str, rows: list):
        self.tables.append({"name": name, "rows": rows})

    def as_dict(self) -> dict:
        return {
            "version": self.version,
            "task": self.task,
            "input_digest": self.input_digest,
            "checks": [c.as_dict() for c in self.checks],
            "tables": self.tables,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [f"anyonic {self.version}  task: {self.task}  input: {self.input_digest}"]
        lines.append("checks:")
        for c in self.checks:
            tail = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"  {c.status:4}  {c.name}{tail}")
            for d in c.detail:
                lines.append(f"          {d}")
        for t in self.tables:
            lines.append(f"table {t['name']}:")
            for row in t["rows"]:
                lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        for w in self.warnings:
            lines.append(f"warning: {w}")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def input_digest(cfg: Config, task: str, options: dict) -> str:
    payload = json.dumps({"config": cfg.to_dict(), "task": task, "options": options},
                         sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


# -- tasks -------------------------------------------------------------------

def _task_check_braiding(cfg: Config, report: Report, opts):
    ctx = cfg.ctx
    obj = AnyonObject(ctx, tuple(cfg.degreed()))
    ok, wit = psi_squared_is_identity(ctx, obj, obj)
    report.checks.append(Check("psi-squared-identity", ok, None if ok else f"degrees {wit}"))
    degrees = sorted(set(obj.degrees))
    bad = None
    rows = []
    for d1 in degrees:
        for d2 in degrees:
            v, w = DegreedGenerator("v", d1), DegreedGenerator("w", d2)
            c = braid_coefficient(ctx, d1, d2)
            if braid_from_R(ctx, v, w)[0] != c and bad is None:
                bad = f"degrees ({d1}, {d2})"
            rows.append({"d1": d1, "d2": d2, "coefficient": format_scalar(c)})
    report.checks.append(Check("R-matrix-consistency", bad is None, bad))
    if cfg.fp is not None:
        focused = is_focused(obj, cfg.fp)
        report.checks.append(Check("focused-degrees", focused,
                                   None if focused else "degrees not multiples of m"))
        if focused:
            bad = None
            for d1 in degrees:
                for d2 in degrees:
                    if braid_coefficient(ctx, d1, d2) != focused_sign(cfg.fp, d1, d2):
                        bad = bad or f"degrees ({d1}, {d2})"
            report.checks.append(Check("focused-sign-formula", bad is None, bad))
    else:
        report.warnings.append("no focus parameter m given; focused-family checks skipped")
    report.add_table("braiding", rows)


def _confluence(p, report: Report, opts):
    if opts.unchecked:
        report.warnings.append("confluence NOT checked (--unchecked); normal forms may depend on rewrite order")
        return
    conf = confluence_check(p, 3)
    wit = None
    if conf.failures:
        word, left, right = conf.failures[0]
        wit = f"{p.format_word(word)}: {p.format(left)} vs {p.format(right)}"
    report.checks.append(Check("confluence", conf.ok, wit, [f"{conf.overlaps_checked} overlaps"]))


def _task_hopf_axioms(cfg: Config, report: Report, opts):
    p = cfg.to_presentation()
    _confluence(p, report, opts)
    h = HopfData(p)
    report.checks.extend(verify_hopf_axioms(h, opts.max_len).checks)
    report.checks.append(antipode_squared_is_identity(h, opts.max_len))
    report.checks.append(counit_antipode(h, opts.max_len))
    if cfg.fp is not None:
        report.checks.append(psi_squared_on_tensor_square(h, opts.max_len))
    rows = []
    for w in p.basis_up_to(min(opts.max_len, 2)):
        rows.append({"element": p.format_word(w), "coproduct": format_tensor(p, coproduct(h, w))})
    report.add_table("coproducts", rows)
    report.add_table("basis-size", [{"max_len": opts.max_len, "words": len(p.basis_up_to(opts.max_len))}])


QLA_NOTE = ("quantum Lie algebra verified via degree additivity, annihilation of ker(id - psi) "
            "and vanishing nested brackets only; the cited axiom list is not checked in full")


def _task_qla_check(cfg: Config, report: Report, opts):
    qla = cfg.to_qla()
    report.checks.extend(qla_checks(qla))
    report.add_table("kernel-id-minus-psi",
                     [{"vector": format_pair_vec(qla, v)} for v in kernel_id_minus_psi(qla)])
    report.warnings.append(QLA_NOTE)


def _task_envelope(cfg: Config, report: Report, opts):
    qla = cfg.to_qla()
    p = enveloping_presentation(qla)
    _confluence(p, report, opts)
    report.checks.append(relation_residues(qla, p))
    if opts.preset and paired_preset(opts.preset):
        other_name = paired_preset(opts.preset)
        other = preset(other_name).to_presentation()
        same = p == other
        report.checks.append(Check(f"equals-{other_name}", same,
                                   None if same else "presentations differ"))
        bad = None
        if same:
            import itertools
            for length in range(opts.max_len + 1):
                for w in itertools.product(range(len(p.generators)), repeat=length):
                    if p.normal_form(w) != other.normal_form(w):
                        bad = bad or p.format_word(w)
        report.checks.append(Check("normal-forms-agree", same and bad is None, bad))
    report.add_table("presentation", [{"rule": line} for line in p.describe()])


def _character(cfg: Config, opts) -> Character:
    if opts.delta in (None, "zero"):
        if opts.delta is None and cfg.character:
            return cfg.to_character()
        return zero_character()
    with open(opts.delta) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ConfigError(["delta: expected an object mapping names to scalars"])
    return Character({k: parse_scalar(cfg.ctx, str(v)) for k, v in raw.items()})


def _homology(cfg: Config, report: Report, opts, max_i: int):
    qla = cfg.to_qla()
    delta = _character(cfg, opts)
    report.checks.extend(validate_character(qla, delta))
    d2 = d_squared_check(qla, delta, max_i + 1)
    report.checks.append(d2)
    if not report.ok:
        return None
    table = homology_dims(qla, delta, max_i)
    report.checks.append(Check("degree-preserving-boundaries", True))
    report.add_table("homology", table.rows())
    report.add_table("homology-totals",
                     [{"i": i, "dim": table.total(i), "zero_boundary": i in table.zero_boundaries}
                      for i in range(max_i + 1)])
    report.warnings.append(f"homology truncated at i <= {max_i}; H_0 uses the augmentation d(x) = delta(x)")
    return table


def _task_homology(cfg: Config, report: Report, opts):
    _homology(cfg, report, opts, opts.max_i)


def _task_hp(cfg: Config, report: Report, opts):
    table = _homology(cfg, report, opts, opts.max_i)
    if table is None:
        return
    for parity in (0, 1):
        hp = assemble_hp(table, parity, opts.max_i, cfg.m)
        report.add_table(f"HP{parity}", hp.rows())
        report.add_table(f"HP{parity}-total", [{"max_i": hp.max_i, "total": hp.total}])
        if hp.focused is not None:
            what = "even" if parity == 0 else "odd"
            report.checks.append(Check(f"HP{parity}-focused-{what}-multiples-of-m", hp.focused,
                                       None if hp.focused else f"support {hp.support}"))
    report.warnings.append("HP is a truncation of an infinite direct sum over i")


RUNNERS = {
    "check-braiding": _task_check_braiding,
    "hopf-axioms": _task_hopf_axioms,
    "qla-check": _task_qla_check,
    "envelope": _task_envelope,
    "homology": _task_homology,
    "hp": _task_hp,
}


def run_task(cfg: Config, task: str, opts) -> Report:
    options = {"max_len": opts.max_len, "max_i": opts.max_i, "delta": opts.delta,
               "unchecked": bool(opts.unchecked)}
    report = Report(task, input_digest(cfg, task, options))
    RUNNERS[task](cfg, report, opts)
    return report


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="anyonic", description="Anyonic Hopf algebras, quantum Lie algebras "
                                 "and braided Chevalley-Eilenberg homology.")
    ap.add_argument("task", choices=TASKS)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="built-in example, e.g. z18-nilpotent or z2m2-abelian(5)")
    src.add_argument("--config", help="JSON config file")
    ap.add_argument("--max-len", type=int, default=4, help="word length bound for algebra checks (default 4)")
    ap.add_argument("--max-i", type=int, default=6, help="homological cutoff (default 6)")
    ap.add_argument("--delta", default=None, help="character: 'zero' or a JSON file {name: scalar}")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--out", help="write the report here instead of stdout")
    ap.add_argument("--unchecked", action="store_true", help="skip the confluence check")
    return ap


def main(argv: Optional[list] = None) -> int:
    opts = make_parser().parse_args(argv)
    try:
        if opts.preset:
            cfg = preset(opts.preset)
        else:
            with open(opts.config) as fh:
                cfg = parse_config(fh.read())
        if opts.max_len < 0 or opts.max_i < 0:
            raise ValueError("--max-len and --max-i must be non-negative")
        report = run_task(cfg, opts.task, opts)
    except ConfigError as exc:
        for e in exc.errors:
            print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, NotFocusedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json() if opts.format == "json" else report.to_text()
    if opts.out:
        with open(opts.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not report.ok:
        for c in report.checks:
            if not c.ok:
                print(f"check failed: {c.name} {c.witness or ''}".rstrip(), file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
