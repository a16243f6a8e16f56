"""JSON configuration files and the built-in presets.

Schema (all keys except ``n`` optional)::

    {
      "n": 18,
      "m": 3,
      "mode": "hopf" | "qla",
      "generators": [{"name": "x", "degree": 3}, ...],
      "brackets": [{"left": "x", "right": "x",
                    "result": [{"gen": "a", "coeff": "1"}]}],
      "relations": {"nilpotent": ["x"], "commute": true},
      "character": {"b": "0"}
    }

Coefficients are scalar literals such as ``"-1/2*z^3 + 2"`` (z = zeta_n).
In ``hopf`` mode the algebra is generated by the generators with
g_j g_i = zeta^(|g_j||g_i|) g_i g_j (unless ``commute`` is false) and the
listed nilpotent relations; in ``qla`` mode it is the enveloping algebra of
the bracket.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

from .algebra import Presentation, braided_presentation
from .anyon_space import DegreedGenerator, FocusParams
from .quantum_lie import Character, QuantumLieAlgebra, enveloping_presentation
from .scalar import context, format_scalar, parse_scalar


class ConfigError(ValueError):
    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class BracketSpec:
    left: str
    right: str
    result: list  # [(gen, canonical coefficient literal)]


@dataclass
class Config:
    n: int
    m: Optional[int] = None
    mode: str = "hopf"
    generators: list = field(default_factory=list)  # [(name, degree)]
    brackets: list = field(default_factory=list)
    nilpotent: list = field(default_factory=list)
    commute: bool = True
    character: dict = field(default_factory=dict)  # name -> canonical literal

    @property
    def ctx(self):
        return context(self.n)

    @property
    def fp(self) -> Optional[FocusParams]:
        return FocusParams(self.m) if self.m is not None else None

    def degreed(self) -> list[DegreedGenerator]:
        return [DegreedGenerator(name, deg) for name, deg in self.generators]

    def to_qla(self) -> QuantumLieAlgebra:
        ctx = self.ctx
        table = {}
        for b in self.brackets:
            vec = table.setdefault((b.left, b.right), {})
            for gen, lit in b.result:
                c = parse_scalar(ctx, lit)
                vec[gen] = vec[gen] + c if gen in vec else c
        return QuantumLieAlgebra(ctx, self.degreed(), table, self.fp)

    def to_presentation(self) -> Presentation:
        if self.mode == "qla":
            return enveloping_presentation(self.to_qla())
        return braided_presentation(self.ctx, self.degreed(), self.nilpotent, self.commute)

    def to_character(self) -> Character:
        ctx = self.ctx
        return Character({k: parse_scalar(ctx, v) for k, v in self.character.items()})

    def to_dict(self) -> dict:
        d = {"n": self.n}
        if self.m is not None:
            d["m"] = self.m
        d["mode"] = self.mode
        d["generators"] = [{"name": s, "degree": deg} for s, deg in self.generators]
        if self.brackets:
            d["brackets"] = [
                {"left": b.left, "right": b.right,
                 "result": [{"gen": g, "coeff": c} for g, c in b.result]}
                for b in self.brackets]
        rel = {}
        if self.nilpotent:
            rel["nilpotent"] = list(self.nilpotent)
        if not self.commute:
            rel["commute"] = False
        if rel:
            d["relations"] = rel
        if self.character:
            d["character"] = dict(sorted(self.character.items()))
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


_TOP_KEYS = {"n", "m", "mode", "generators", "brackets", "relations", "character"}
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def parse_config(text: str) -> Config:
    """Parse and validate a JSON config; all problems are reported together."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None
    return config_from_dict(raw)


def config_from_dict(raw) -> Config:
    errors = []
    if not isinstance(raw, dict):
        raise ConfigError(["top level: expected an object"])
    for key in sorted(set(raw) - _TOP_KEYS):
        errors.append(f"{key}: unknown field")

    n = raw.get("n")
    if not _is_int(n) or n < 2:
        errors.append("n: expected an integer >= 2")
        raise ConfigError(errors)
    m = raw.get("m")
    if m is not None:
        if not _is_int(m) or m < 2:
            errors.append("m: expected an integer > 1")
            m = None
        elif 2 * m * m != n:
            errors.append(f"m: n={n} is not 2*m^2 for m={m}")
    mode = raw.get("mode", "hopf")
    if mode not in ("hopf", "qla"):
        errors.append(f"mode: expected 'hopf' or 'qla', got {mode!r}")

    gens = []
    names = set()
    for k, g in enumerate(raw.get("generators", [])):
        where = f"generators[{k}]"
        if not isinstance(g, dict) or set(g) != {"name", "degree"}:
            errors.append(f"{where}: expected {{name, degree}}")
            continue
        name, deg = g["name"], g["degree"]
        if not isinstance(name, str) or not _NAME.match(name):
            errors.append(f"{where}.name: bad identifier {name!r}")
            continue
        if name in names:
            errors.append(f"{where}.name: duplicate name {name!r}")
            continue
        if not _is_int(deg):
            errors.append(f"{where}.degree: expected an integer")
            continue
        names.add(name)
        gens.append((name, deg % n))
    degree = dict(gens)
    ctx = context(n)

    def literal(where, text):
        if not isinstance(text, str):
            text = str(text)
        try:
            return format_scalar(parse_scalar(ctx, text))
        except ValueError as exc:
            errors.append(f"{where}: {exc}")
            return None

    brackets = []
    for k, b in enumerate(raw.get("brackets", [])):
        where = f"brackets[{k}]"
        if not isinstance(b, dict) or set(b) != {"left", "right", "result"}:
            errors.append(f"{where}: expected {{left, right, result}}")
            continue
        ok = True
        for side in ("left", "right"):
            if b[side] not in degree:
                errors.append(f"{where}.{side}: unknown generator {b[side]!r}")
                ok = False
        result = []
        for r, term in enumerate(b["result"] if isinstance(b["result"], list) else []):
            tw = f"{where}.result[{r}]"
            if not isinstance(term, dict) or set(term) != {"gen", "coeff"}:
                errors.append(f"{tw}: expected {{gen, coeff}}")
                ok = False
                continue
            if term["gen"] not in degree:
                errors.append(f"{tw}.gen: unknown generator {term['gen']!r}")
                ok = False
                continue
            lit = literal(f"{tw}.coeff", term["coeff"])
            if lit is None:
                ok = False
                continue
            if ok and lit != "0":
                want = (degree[b["left"]] + degree[b["right"]]) % n
                if degree[term["gen"]] != want:
                    errors.append(
                        f"{tw}: degree additivity violated, |{b['left']}|+|{b['right']}| = {want} "
                        f"but |{term['gen']}| = {degree[term['gen']]} (mod {n})")
                    ok = False
                    continue
            result.append((term["gen"], lit))
        if ok:
            brackets.append(BracketSpec(b["left"], b["right"], result))

    rel = raw.get("relations", {})
    nilpotent, commute = [], True
    if not isinstance(rel, dict) or set(rel) - {"nilpotent", "commute"}:
        errors.append("relations: expected {nilpotent?, commute?}")
    else:
        for k, s in enumerate(rel.get("nilpotent", [])):
            if s not in degree:
                errors.append(f"relations.nilpotent[{k}]: unknown generator {s!r}")
            else:
                nilpotent.append(s)
        commute = rel.get("commute", True)
        if not isinstance(commute, bool):
            errors.append("relations.commute: expected true or false")

    character = {}
    chars = raw.get("character", {})
    if not isinstance(chars, dict):
        errors.append("character: expected an object")
        chars = {}
    for s, lit in sorted(chars.items()):
        if s not in degree:
            errors.append(f"character.{s}: unknown generator")
            continue
        v = literal(f"character.{s}", lit)
        if v is not None and v != "0":
            character[s] = v

    if errors:
        raise ConfigError(errors)
    return Config(n, m, mode, gens, brackets, nilpotent, commute, character)


# -- presets -----------------------------------------------------------------

Z18_NAMES = {"x1": "x", "x3": "y", "x5": "z", "a1": "a", "a3": "b", "a5": "c"}


def _odd_indices(m: int) -> list[int]:
    if m < 2 or m % 2 == 0:
        raise ValueError(f"these presets need an odd integer m > 1, got {m}")
    return list(range(1, 2 * m, 2))


def _rename(cfg: Config, names: dict) -> Config:
    r = lambda s: names.get(s, s)  # noqa: E731
    return Config(
        cfg.n, cfg.m, cfg.mode,
        [(r(s), d) for s, d in cfg.generators],
        [BracketSpec(r(b.left), r(b.right), [(r(g), c) for g, c in b.result]) for b in cfg.brackets],
        [r(s) for s in cfg.nilpotent], cfg.commute,
        {r(s): v for s, v in cfg.character.items()})


def z2m2_free(m: int) -> Config:
    n = 2 * m * m
    gens = [(f"x{i}", i * m % n) for i in _odd_indices(m)]
    return Config(n, m, "hopf", gens)


def z2m2_nilpotent(m: int) -> Config:
    cfg = z2m2_free(m)
    cfg.nilpotent = [s for s, _ in cfg.generators]
    return cfg


def z2m2_nonabelian(m: int) -> Config:
    n = 2 * m * m
    gens, brackets = [], []
    for i in _odd_indices(m):
        gens += [(f"x{i}", i * m % n), (f"a{i}", 2 * i * m % n)]
        brackets.append(BracketSpec(f"x{i}", f"x{i}", [(f"a{i}", "1")]))
    return Config(n, m, "qla", gens, brackets)


def z2m2_abelian(m: int) -> Config:
    cfg = z2m2_free(m)
    cfg.mode = "qla"
    return cfg


PRESETS = {
    "z18-free": lambda: _rename(z2m2_free(3), Z18_NAMES),
    "z18-nilpotent": lambda: _rename(z2m2_nilpotent(3), Z18_NAMES),
    "z18-nonabelian": lambda: _rename(z2m2_nonabelian(3), Z18_NAMES),
    "z18-abelian": lambda: _rename(z2m2_abelian(3), Z18_NAMES),
}

PARAM_PRESETS = {
    "z2m2-free": z2m2_free,
    "z2m2-nilpotent": z2m2_nilpotent,
    "z2m2-nonabelian": z2m2_nonabelian,
    "z2m2-abelian": z2m2_abelian,
}

# quantum Lie algebra preset -> Hopf algebra preset it envelops
ENVELOPE_PAIRS = {
    "z18-nonabelian": "z18-free",
    "z18-abelian": "z18-nilpotent",
    "z2m2-nonabelian": "z2m2-free",
    "z2m2-abelian": "z2m2-nilpotent",
}

_PARAM = re.compile(r"^(?P<base>[a-z0-9-]+?)(?:\((?P<m1>\d+)\)|:(?P<m2>\d+))$")


def split_preset(name: str) -> tuple[str, Optional[int]]:
    mt = _PARAM.match(name)
    if mt and mt.group("base") in PARAM_PRESETS:
        return mt.group("base"), int(mt.group("m1") or mt.group("m2"))
    return name, None


def preset(name: str) -> Config:
    """Look up ``z18-...`` or ``z2m2-...(m)`` / ``z2m2-...:m``."""
    base, m = split_preset(name)
    if m is not None:
        return PARAM_PRESETS[base](m)
    if base in PRESETS:
        return PRESETS[base]()
    if base in PARAM_PRESETS:
        raise ValueError(f"preset {base} needs a parameter, e.g. {base}(3)")
    raise ValueError(f"unknown preset {name!r}; known: {sorted(PRESETS) + sorted(PARAM_PRESETS)}")


def paired_preset(name: str) -> Optional[str]:
    base, m = split_preset(name)
    other = ENVELOPE_PAIRS.get(base)
    if other is None:
        return None
    return other if m is None else f"{other}({m})"
