"""Output rendering - plain, JSON and LaTeX views of every CLI result."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from src.exactnum import CyclotomicNumber, format_fraction
from src.hilbert import Lemma22Result
from src.monomial import ExtremalResult, RankBounds, TableRow, format_exponents
from src.waring import Decomposition, LinearProductCertificate, to_document
from src.waring.document import wide_int

Format = Literal["plain", "json", "latex"]


@dataclass(frozen=True)
class RankReport:
    source: str
    canonical_exponents: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class HilbertReport:
    num_vars: int
    gen_degrees: tuple[int, ...]
    values: tuple[int, ...] = ()
    lemma: Lemma22Result | None = None


@dataclass(frozen=True)
class CatalecticantReport:
    source: str
    ranks: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class TableReport:
    rows: tuple[TableRow, ...]


@dataclass(frozen=True)
class VerifyReport:
    verified: bool
    rank: int


def emit(result: object, fmt: Format = "plain") -> str:
    """Render a result; the text never ends with a newline."""
    if fmt not in ("plain", "json", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    renderer = _RENDERERS.get(type(result))
    if renderer is None:
        raise TypeError(f"no renderer for {type(result).__name__}")
    return renderer(result, fmt)


def _dumps(data: object) -> str:
    return json.dumps(data, indent=2)


_RENDERERS: dict[type, Callable[[object, Format], str]] = {}


def _renders(cls: type):
    def register(fn):
        _RENDERERS[cls] = fn
        return fn
    return register


# --- scalars ------------------------------------------------------------------------


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _latex_monomial(exponents, labels) -> str:
    factors = [
        f"x_{{{v}}}" if e == 1 else f"x_{{{v}}}^{{{e}}}"
        for v, e in sorted(zip(labels, exponents))
        if e
    ]
    return " ".join(factors) if factors else "1"


def _cyclo_plain(value: CyclotomicNumber) -> str:
    return str(value)


def _cyclo_latex(value: CyclotomicNumber) -> str:
    parts = []
    for i, c in enumerate(value.coeffs):
        if c == 0:
            continue
        root = "" if i == 0 else (f"\\zeta_{{{value.order}}}" if i == 1 else f"\\zeta_{{{value.order}}}^{{{i}}}")
        mag = abs(c)
        coeff = _latex_fraction(mag) if (mag != 1 or not root) else ""
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{coeff}{' ' if coeff and root else ''}{root}"))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# --- decompositions -----------------------------------------------------------------


def _term_sign_and_root(rational: Fraction, zeta_exp: int, order: int) -> tuple[str, Fraction, int]:
    """Fold real roots of unity into the sign; returns (sign, |rational|, leftover zeta exponent)."""
    negative = rational < 0
    exp = zeta_exp % order
    if order % 2 == 0 and exp == order // 2:
        negative, exp = not negative, 0
    return ("-" if negative else "+"), abs(rational), exp


def _form_summands(dec: Decomposition, form: tuple[int, ...]) -> list[tuple[int, str, int]]:
    """(user variable, sign, leftover zeta exponent) in user variable order."""
    order = dec.cyclotomic_order
    out = []
    for k, e in enumerate(form):
        sign, _, exp = _term_sign_and_root(Fraction(1), e, order)
        out.append((dec.raw_variable_map[k] + 1, sign, exp))
    return sorted(out)


def _plain_form(dec: Decomposition, form: tuple[int, ...]) -> str:
    text = ""
    for i, (var, sign, exp) in enumerate(_form_summands(dec, form)):
        root = "" if exp == 0 else (f"zeta{dec.cyclotomic_order}*" if exp == 1 else f"zeta{dec.cyclotomic_order}^{exp}*")
        body = f"{root}x{var}"
        if i == 0:
            text = body if sign == "+" else f"-{body}"
        else:
            text += f" {sign} {body}"
    return text


def _latex_form(dec: Decomposition, form: tuple[int, ...]) -> str:
    text = ""
    n = dec.cyclotomic_order
    for i, (var, sign, exp) in enumerate(_form_summands(dec, form)):
        root = "" if exp == 0 else (f"\\zeta_{{{n}}} " if exp == 1 else f"\\zeta_{{{n}}}^{{{exp}}} ")
        body = f"{root}x_{{{var}}}"
        if i == 0:
            text = body if sign == "+" else f"-{body}"
        else:
            text += f" {sign} {body}"
    return text


def _plain_gamma(dec: Decomposition, rational: Fraction, zeta_exp: int) -> str:
    sign, mag, exp = _term_sign_and_root(rational, zeta_exp, dec.cyclotomic_order)
    root = "" if exp == 0 else (f"*zeta{dec.cyclotomic_order}" if exp == 1 else f"*zeta{dec.cyclotomic_order}^{exp}")
    return f"{sign}{format_fraction(mag)}{root}"


@_renders(Decomposition)
def _render_decomposition(dec: Decomposition, fmt: Format) -> str:
    if fmt == "json":
        return _dumps(to_document(dec).model_dump())
    labels = [k + 1 for k in dec.raw_variable_map]
    if fmt == "plain":
        lines = [
            f"monomial {format_exponents(dec.monomial.exponents, labels)}",
            f"rank {dec.rank}",
            f"order {dec.cyclotomic_order}",
        ]
        for t in dec.terms:
            gamma = _plain_gamma(dec, t.gamma_rational, t.gamma_zeta_exp)
            lines.append(f"{gamma}*({_plain_form(dec, t.form_exponents)})^{dec.degree}")
        return "\n".join(lines)
    pieces = []
    for i, t in enumerate(dec.terms):
        sign, mag, exp = _term_sign_and_root(t.gamma_rational, t.gamma_zeta_exp, dec.cyclotomic_order)
        coeff = "" if mag == 1 else _latex_fraction(mag)
        if exp:
            root = f"\\zeta_{{{dec.cyclotomic_order}}}" + ("" if exp == 1 else f"^{{{exp}}}")
            coeff = f"{coeff} {root}".strip()
        lead = ("-" if sign == "-" else "") if i == 0 else f" {sign} "
        pieces.append(f"{lead}{coeff}\\left({_latex_form(dec, t.form_exponents)}\\right)^{{{dec.degree}}}")
    return f"{_latex_monomial(dec.monomial.exponents, labels)} = " + "".join(pieces)


@_renders(LinearProductCertificate)
def _render_certificate(cert: LinearProductCertificate, fmt: Format) -> str:
    if fmt == "json":
        return _dumps({
            "forms": [[format_fraction(c) for c in f] for f in cert.forms],
            "exponents": list(cert.exponents),
            "degree": wide_int(cert.degree),
            "rank": wide_int(cert.rank),
            "cyclotomic_order": cert.base.cyclotomic_order,
            "terms": [
                {"gamma": g.to_json(), "form": [c.to_json() for c in form]}
                for g, form in zip(cert.gammas, cert.term_forms)
            ],
        })
    if fmt == "plain":
        lines = [f"rank {cert.rank}", f"order {cert.base.cyclotomic_order}"]
        for g, form in zip(cert.gammas, cert.term_forms):
            summands = " + ".join(f"({_cyclo_plain(c)})*x{v + 1}" for v, c in enumerate(form) if not c.is_zero())
            lines.append(f"({_cyclo_plain(g)})*({summands})^{cert.degree}")
        return "\n".join(lines)
    pieces = []
    for g, form in zip(cert.gammas, cert.term_forms):
        summands = " + ".join(
            f"\\left({_cyclo_latex(c)}\\right) x_{{{v + 1}}}" for v, c in enumerate(form) if not c.is_zero()
        )
        pieces.append(f"\\left({_cyclo_latex(g)}\\right)\\left({summands}\\right)^{{{cert.degree}}}")
    return " + ".join(pieces)


# --- numeric reports ----------------------------------------------------------------


@_renders(RankReport)
def _render_rank(report: RankReport, fmt: Format) -> str:
    if fmt == "json":
        return _dumps({
            "input": report.source,
            "canonical_exponents": list(report.canonical_exponents),
            "rank": wide_int(report.rank),
        })
    if fmt == "latex":
        return f"\\mathrm{{rk}}\\left({_latex_monomial(report.canonical_exponents, range(1, len(report.canonical_exponents) + 1))}\\right) = {report.rank}"
    return str(report.rank)


@_renders(RankBounds)
def _render_bounds(bounds: RankBounds, fmt: Format) -> str:
    if fmt == "json":
        return _dumps({"lower": wide_int(bounds.lower), "upper": wide_int(bounds.upper)})
    if fmt == "latex":
        return f"{bounds.lower} \\leq \\mathrm{{rk}}(F) \\leq {bounds.upper}"
    return f"lower={bounds.lower} upper={bounds.upper}"


@_renders(ExtremalResult)
def _render_extremal(result: ExtremalResult, fmt: Format) -> str:
    exps = list(result.exponents.exponents)
    if fmt == "json":
        return _dumps({"value": wide_int(result.value), "exponents": exps})
    if fmt == "latex":
        return f"\\mathrm{{rk}}\\left({_latex_monomial(exps, range(1, len(exps) + 1))}\\right) = {result.value}"
    return f"value={result.value} exponents={','.join(map(str, exps))}"


@_renders(TableReport)
def _render_table(table: TableReport, fmt: Format) -> str:
    if fmt == "json":
        return _dumps([{"d": r.d, "generic": wide_int(r.generic), "max": wide_int(r.maximum)} for r in table.rows])
    if fmt == "latex":
        body = "\n".join(f"{r.d} & {r.generic} & {r.maximum} \\\\" for r in table.rows)
        return (
            "\\begin{array}{c|c|c}\n"
            "d & \\mathrm{rk}(\\mathrm{generic}) & \\max_M \\mathrm{rk}(M) \\\\ \\hline\n"
            f"{body}\n"
            "\\end{array}"
        )
    return "\n".join(f"{r.d} {r.generic} {r.maximum}" for r in table.rows)


def _latex_power_term(coefficient: int, i: int) -> str:
    if i == 0:
        return str(coefficient)
    power = "t" if i == 1 else f"t^{{{i}}}"
    return power if coefficient == 1 else f"{coefficient}{power}"


@_renders(HilbertReport)
def _render_hilbert(report: HilbertReport, fmt: Format) -> str:
    if fmt == "json":
        data: dict = {"nvars": report.num_vars, "gens": list(report.gen_degrees)}
        if report.values:
            data["values"] = [wide_int(v) for v in report.values]
        if report.lemma is not None:
            data["lemma"] = {"lhs": report.lemma.lhs, "rhs": report.lemma.rhs, "holds": report.lemma.holds}
        return _dumps(data)
    if report.lemma is not None:
        lemma = report.lemma
        if fmt == "latex":
            relation = "=" if lemma.holds else "\\neq"
            return f"\\sum_{{i=a_2}}^{{\\tau}} HF(T/J, i) = {lemma.lhs} {relation} {lemma.rhs}"
        return f"lhs={lemma.lhs} rhs={lemma.rhs} holds={'true' if lemma.holds else 'false'}"
    if fmt == "latex":
        terms = " + ".join(_latex_power_term(v, i) for i, v in enumerate(report.values) if v or i == 0)
        tau = sum(a - 1 for a in report.gen_degrees)
        if len(report.gen_degrees) == report.num_vars and len(report.values) > tau:
            return f"HS(t) = {terms}"
        return f"HS(t) = {terms} + \\cdots"
    return " ".join(str(v) for v in report.values)


@_renders(CatalecticantReport)
def _render_catalecticant(report: CatalecticantReport, fmt: Format) -> str:
    best = max(report.ranks)
    if fmt == "json":
        return _dumps({"input": report.source, "ranks": list(report.ranks), "max": best, "rank": wide_int(report.rank)})
    if fmt == "latex":
        return f"\\max_a \\operatorname{{rank}} \\mathrm{{Cat}}_a = {best} \\leq {report.rank} = \\mathrm{{rk}}"
    return f"{' '.join(map(str, report.ranks))}\nmax={best} rank={report.rank}"


@_renders(VerifyReport)
def _render_verify(report: VerifyReport, fmt: Format) -> str:
    if fmt == "json":
        return _dumps({"verified": report.verified, "rank": wide_int(report.rank)})
    return f"verified rank={report.rank}" if report.verified else f"verification failed rank={report.rank}"
