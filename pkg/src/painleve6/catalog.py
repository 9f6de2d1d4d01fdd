"""Bundled catalog of the 48 exceptional algebraic PVI solutions."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from pathlib import Path

from .funcfield import FFElem, NO_RADICALS, RadicalError, RadicalSet, normalize_radical
from .parser import ParseError, evaluate, parse_expr, parse_tree, to_text
from .pvi import ParamSolution, ThetaQuadruple
from .ratfun import RatFun

SCHEMA = 1
GENUS_TAGS = ("0", "1", "H2", "H3", "N3", "N7")
CATALOG_ENV = "PVI_CATALOG"
ALL_HOMOGRAPHIES = tuple(range(2, 25))


class CatalogError(ValueError):
    pass


_THETA_RE = re.compile(r"^\s*\((.*)\)\s*(?:/\s*(\d+))?\s*$")


def parse_theta(text: str, params=None) -> ThetaQuadruple:
    """``"(1,3,3,4)/15"``, ``"1/15,1/5,1/5,4/15"`` or ``"(a,2*a,a,1/3)"`` with ``params={'a': ...}``."""
    m = _THETA_RE.match(text)
    if not m and "(" not in text:
        m = _THETA_RE.match(f"({text})")
    if not m:
        raise CatalogError(f"bad theta literal {text!r}")
    parts = m.group(1).split(",")
    if len(parts) != 4:
        raise CatalogError(f"theta needs four entries: {text!r}")
    params = {k: Fraction(v) for k, v in (params or {}).items()}
    vals = []
    for p in parts:
        try:
            tree = parse_tree(p, params.keys())
        except ParseError as exc:
            raise CatalogError(f"bad theta entry {p!r}: {exc}") from None
        vals.append(evaluate(tree, params, Fraction))
    den = Fraction(int(m.group(2))) if m.group(2) else Fraction(1)
    return ThetaQuadruple(*(v / den for v in vals))


def _poly(text: str):
    val = parse_expr(text)
    if not val.is_poly() or not val.is_real():
        raise CatalogError(f"radical {text!r} must be a polynomial over Q")
    return val.a


_REQUIRED = {
    "id": str, "kind": str, "genus": str, "b": int, "d_minus_b": int, "terms": int,
    "theta_table": str, "theta_text": str, "field": str, "radicals": list,
    "x": str, "u": str, "filiation": list, "siblings": list, "homographies": list,
}


@dataclass
class CatalogEntry:
    id: str
    lt: int | None
    kind: str
    genus: str
    b: int
    d_minus_b: int
    terms: int
    theta_table: str
    theta_text: str
    field: str
    radicals: list
    x_expr: str
    u_expr: str
    filiation: list
    siblings: list
    homographies: list
    table_homography: int | None = None
    family_params: list = field(default_factory=list)
    text_b: int | None = None
    text_d_minus_b: int | None = None
    monic: bool = True
    former: dict | None = None
    weierstrass: dict | None = None
    space_curve: dict | None = None
    printed: dict | None = None
    comment: str = ""
    curve_text: str | None = None
    samples: list = field(default_factory=list, repr=False)

    # derived ----------------------------------------------------------------
    @cached_property
    def _radical_data(self):
        if len(self.radicals) > 2:
            raise CatalogError(f"{self.id}: at most two radicals")
        polys, scales = [], []
        for text in self.radicals:
            Q, scale = normalize_radical(_poly(text))
            polys.append(Q)
            scales.append(scale)
        try:
            rad = RadicalSet(*polys) if polys else NO_RADICALS
        except RadicalError as exc:
            raise CatalogError(f"{self.id}: {exc}") from None
        return rad, tuple(scales)

    @property
    def radset(self) -> RadicalSet:
        return self._radical_data[0]

    @property
    def radical_scales(self):
        """Polynomials c*g with printed ``t_i = c*g * T_i``."""
        return self._radical_data[1]

    @property
    def genus_value(self) -> int:
        return int(self.genus[-1])

    @property
    def is_family(self) -> bool:
        return bool(self.family_params)

    @property
    def gaussian(self) -> bool:
        return self.field != "Q"

    def _env(self):
        rad, scales = self._radical_data
        env = {}
        if rad.count >= 1:
            env["t"] = env["t1"] = FFElem.t1(rad) * RatFun.poly(scales[0])
        if rad.count == 2:
            env["t2"] = FFElem.t2(rad) * RatFun.poly(scales[1])
        return env

    def _parse(self, text: str) -> FFElem:
        try:
            return parse_expr(text, self.radset, self._env())
        except ParseError as exc:
            raise CatalogError(f"{self.id}: {exc}") from None

    @cached_property
    def x(self) -> FFElem:
        return self._parse(self.x_expr)

    @cached_property
    def u(self) -> FFElem:
        return self._parse(self.u_expr)

    def theta(self, source: str = "table", sample: int = 0) -> ThetaQuadruple:
        text = self.theta_table if source == "table" else self.theta_text
        params = self.samples[sample] if self.family_params else None
        return parse_theta(text, params)

    def thetas(self, sample: int = 0) -> dict:
        return {"table": self.theta("table", sample), "text": self.theta("text", sample)}

    def solution(self, source: str = "table", sample: int = 0) -> ParamSolution:
        params = ()
        if self.family_params:
            params = tuple(sorted(self.samples[sample].items()))
        return ParamSolution(
            self.id, self.theta(source, sample), self.x, self.u,
            genus_claim=self.genus, family_params=params,
            meta={"theta_source": source, "sample": sample},
        )

    def sample_count(self) -> int:
        return len(self.samples) if self.family_params else 1

    def to_dict(self) -> dict:
        """Inverse of the JSON reader; expressions are re-printed canonically."""
        d = {
            "id": self.id, "lt": self.lt, "kind": self.kind, "genus": self.genus,
            "b": self.b, "d_minus_b": self.d_minus_b, "terms": self.terms,
            "theta_table": self.theta_table, "theta_text": self.theta_text,
            "field": self.field,
            "radicals": [_reprint(r) for r in self.radicals],
            "x": _reprint(self.x_expr), "u": _reprint(self.u_expr),
            "filiation": list(self.filiation), "siblings": list(self.siblings),
            "homographies": list(self.homographies),
        }
        if self.table_homography is not None:
            d["table_homography"] = self.table_homography
        optional = {
            "family_params": self.family_params or None,
            "text_b": self.text_b, "text_d_minus_b": self.text_d_minus_b,
            "monic": None if self.monic else False,
            "former": self.former, "weierstrass": self.weierstrass,
            "space_curve": self.space_curve, "printed": self.printed,
            "comment": self.comment or None, "curve_text": self.curve_text,
        }
        d.update({k: v for k, v in optional.items() if v is not None})
        return d


def _reprint(text: str) -> str:
    return to_text(parse_tree(text))


class Catalog:
    def __init__(self, entries, samples, path=None):
        self.entries = list(entries)
        self.samples = samples
        self.path = path
        self._by_id = {e.id: e for e in self.entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, key):
        if isinstance(key, int):
            return self.entries[key]
        try:
            return self._by_id[key]
        except KeyError:
            raise KeyError(f"no catalog entry {key!r}") from None

    def __contains__(self, key):
        return key in self._by_id

    def ids(self):
        return [e.id for e in self.entries]

    def genus_tally(self) -> dict:
        tally = {}
        for e in self.entries:
            key = int(e.genus) if e.genus.isdigit() else e.genus
            tally[key] = tally.get(key, 0) + 1
        return tally

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "family_samples": [{k: str(v) for k, v in s.items()} for s in self.samples],
            "entries": [e.to_dict() for e in self.entries],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1, ensure_ascii=False)


def default_catalog_path() -> Path:
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("painleve6") / "data" / "solutions48.json"))


def _entry_from(raw: dict, where: str, samples) -> CatalogEntry:
    if not isinstance(raw, dict):
        raise CatalogError(f"{where}: entry must be an object")
    for key, typ in _REQUIRED.items():
        if key not in raw:
            raise CatalogError(f"{where}: missing field {key!r}")
        if not isinstance(raw[key], typ) or (typ is int and isinstance(raw[key], bool)):
            raise CatalogError(f"{where}: field {key!r} must be {typ.__name__}")
    if raw["genus"] not in GENUS_TAGS:
        raise CatalogError(f"{where}: unknown genus tag {raw['genus']!r}")
    if raw["field"] not in ("Q", "Q(i)"):
        raise CatalogError(f"{where}: unknown field {raw['field']!r}")
    bad = [h for h in raw["homographies"] if not isinstance(h, int) or not 2 <= h <= 24]
    if bad:
        raise CatalogError(f"{where}: homography indices must lie in 2..24, got {bad}")
    th = raw.get("table_homography")
    if th is not None and (not isinstance(th, int) or isinstance(th, bool) or not 1 <= th <= 24):
        raise CatalogError(f"{where}: table_homography must be an index in 1..24")
    return CatalogEntry(
        id=raw["id"], lt=raw.get("lt"), kind=raw["kind"], genus=raw["genus"],
        b=raw["b"], d_minus_b=raw["d_minus_b"], terms=raw["terms"],
        theta_table=raw["theta_table"], theta_text=raw["theta_text"],
        field=raw["field"], radicals=list(raw["radicals"]),
        x_expr=raw["x"], u_expr=raw["u"],
        filiation=list(raw["filiation"]), siblings=list(raw["siblings"]),
        homographies=list(raw["homographies"]),
        table_homography=raw.get("table_homography"),
        family_params=list(raw.get("family_params", [])),
        text_b=raw.get("text_b"), text_d_minus_b=raw.get("text_d_minus_b"),
        monic=raw.get("monic", True), former=raw.get("former"),
        weierstrass=raw.get("weierstrass"), space_curve=raw.get("space_curve"),
        printed=raw.get("printed"), comment=raw.get("comment", ""),
        curve_text=raw.get("curve_text"), samples=samples,
    )


def parse_catalog(data, path=None, validate: bool = True) -> Catalog:
    if not isinstance(data, dict):
        raise CatalogError("catalog must be a JSON object")
    if data.get("schema") != SCHEMA:
        raise CatalogError(f"unsupported or missing schema version {data.get('schema')!r}")
    raw_entries = data.get("entries")
    if not isinstance(raw_entries, list) or not raw_entries:
        raise CatalogError("catalog has no entries")
    samples = []
    for s in data.get("family_samples", []):
        try:
            samples.append({k: Fraction(v) for k, v in s.items()})
        except (TypeError, ValueError, ZeroDivisionError):
            raise CatalogError(f"bad family sample {s!r}") from None
    entries = [_entry_from(raw, f"entry {k}", samples) for k, raw in enumerate(raw_entries)]
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise CatalogError("duplicate entry ids")
    cat = Catalog(entries, samples, path)
    if validate:
        validate_catalog(cat)
    return cat


def validate_catalog(cat: Catalog) -> None:
    """Radicals squarefree, expressions parse, sibling cross-links consistent."""
    for e in cat:
        if e.family_params and len(cat.samples) < 2:
            raise CatalogError(f"{e.id}: family entries need two parameter samples")
        e.radset  # noqa: B018 - forces the squarefree check
        e.x, e.u  # noqa: B018
        for src in ("table", "text"):
            e.theta(src)
        for sib in e.siblings:
            if sib not in cat:
                raise CatalogError(f"{e.id}: dangling sibling reference {sib!r}")
            other = cat[sib]
            if other.radset != e.radset or other.x != e.x:
                raise CatalogError(f"{e.id}: sibling {sib} has a different x or radical set")
            if e.id not in other.siblings:
                raise CatalogError(f"{e.id}: sibling link to {sib} is not symmetric")


def load_catalog(path=None, validate: bool = True) -> Catalog:
    path = Path(path) if path is not None else default_catalog_path()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    if not text.strip():
        raise CatalogError(f"catalog {path} is empty")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {path} is not valid JSON: {exc}") from None
    return parse_catalog(data, path, validate)
