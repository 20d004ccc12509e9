# src/lapco/poset/verifiers.py
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..graphs.families import FamilySpec, FamilySpecError, build_u, max_minimal_tail
from ..spectra.spectrum import lel
from .catalog import CatalogEntry, FamilyCatalog, make_entry, minimal_elements
from .enumeration import check_guard, enumerate_unicyclic
from .order import PosetRel, compare

logger = logging.getLogger(__name__)

LEL_TOLERANCE = 1e-8


class VerificationError(ValueError):
    """Verifier parameters that describe no family or an invalid probe."""
    pass


class Restriction(str, Enum):
    FULL = "full"
    ONE_ATTACHMENT = "one_attachment"
    TWO_ATTACHMENTS = "two_attachments"


@dataclass
class Check:
    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class VerificationReport:
    """Named assertions with their evidence; serialised by to_document()."""
    name: str
    parameters: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    in_scope: bool = True

    def check(self, name: str, passed: bool, **detail: Any) -> bool:
        self.checks.append(Check(name=name, passed=bool(passed), detail=detail))
        if not passed:
            logger.warning(f"{self.name}: check '{name}' failed")
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if not self.passed:
            return "fail"
        if not self.in_scope:
            return "out_of_scope"
        if not self.checks:
            return "vacuous"
        return "pass"

    def to_document(self) -> Dict[str, Any]:
        return {
            "report": self.name,
            "parameters": self.parameters,
            "status": self.status,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, **c.detail} for c in self.checks],
            "notes": list(self.notes),
            **self.data,
        }


def entry_document(entry: CatalogEntry, with_lel: bool = False) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "form": entry.form_hex,
        "n": entry.graph.n,
        "edges": [list(e) for e in entry.graph.edges],
        "girth": entry.girth,
        "leaves": entry.leaves,
        "coefficients": entry.coeffs.to_strings(),
    }
    if with_lel:
        doc["lel"] = lel(entry.graph)
    return doc


def restrict_family(catalog: FamilyCatalog, restriction: Restriction) -> FamilyCatalog:
    if restriction is Restriction.ONE_ATTACHMENT:
        return catalog.restrict(restriction.value, lambda e: e.attachments <= 1)
    if restriction is Restriction.TWO_ATTACHMENTS:
        return catalog.restrict(restriction.value, lambda e: e.attachments == 2)
    return catalog


def predicted_minimal(n: int, l: int, g: int) -> List[CatalogEntry]:
    """
    U^{g,0}, ..., U^{g,p} for p = floor((n - g - g*l + l) / (l + 1)); empty when p < 0.
    With a single leaf every tail length gives the same graph, so the list holds one entry.
    """
    found: Dict[bytes, CatalogEntry] = {}
    for p in range(max_minimal_tail(n, l, g) + 1):
        entry = make_entry(build_u(FamilySpec(n=n, l=l, g=g, p=p)), girth=g, attachments=1)
        found.setdefault(entry.form, entry)
    return list(found.values())


def _lel_monotone(report: VerificationReport, pairs: List[tuple], lels: Dict[bytes, float]) -> None:
    bad = [
        {"less": low.form_hex, "greater": high.form_hex, "lel_less": lels[low.form], "lel_greater": lels[high.form]}
        for low, high in pairs
        if lels[low.form] >= lels[high.form] + LEL_TOLERANCE
    ]
    report.check("lel monotone on strictly comparable pairs", not bad, compared=len(pairs), violations=bad)


def verify_minimal_family(n: int, l: int, g: int, restriction: str = "full",
                          workers: int = 1, max_n: Optional[int] = None) -> VerificationReport:
    """
    Minimal elements of the (restricted) family U_{n,l}^g against {U^0..U^p}; for the
    two-attachment family, U^0 strictly below every member.
    """
    restriction = Restriction(restriction)
    family = restrict_family(enumerate_unicyclic(n, l=l, g=g, workers=workers, max_n=max_n), restriction)
    if not len(family):
        raise VerificationError(f"Family {restriction.value} of U(n={n}, l={l}, g={g}) is empty")
    p_max = max_minimal_tail(n, l, g)
    report = VerificationReport(
        name=f"minimal-family:{restriction.value}",
        parameters={"n": n, "l": l, "g": g, "restriction": restriction.value, "p_max": p_max},
    )
    report.data["family_size"] = len(family)

    if restriction is Restriction.TWO_ATTACHMENTS:
        base = make_entry(build_u(FamilySpec(n=n, l=l, g=g, p=0)), girth=g, attachments=1)
        base_lel = lel(base.graph)
        not_below = [
            {**entry_document(e), "relation": compare(base.coeffs, e.coeffs).value}
            for e in family if compare(base.coeffs, e.coeffs) is not PosetRel.LESS_STRICT
        ]
        report.data["base"] = entry_document(base, with_lel=True)
        report.check("U0 strictly below every member", not not_below, members=len(family), violations=not_below)
        lel_low = [entry_document(e, with_lel=True) for e in family if lel(e.graph) <= base_lel - LEL_TOLERANCE]
        report.check("lel of every member exceeds lel of U0", not lel_low, violations=lel_low)
        return report

    observed = minimal_elements(family)
    predicted = predicted_minimal(n, l, g)
    report.data["observed_minimal"] = [entry_document(e, with_lel=True) for e in observed]
    report.data["predicted_minimal"] = [entry_document(e, with_lel=True) for e in predicted]

    if p_max < 0:
        report.in_scope = False
        report.notes.append(f"p_max = {p_max} < 0: parameters outside the minimal-family formula")
        return report
    if restriction is Restriction.FULL and g not in (3, 4):
        report.in_scope = False
        report.notes.append(f"full-family minimal set is only predicted for girth 3 and 4, got g={g}")
        return report

    observed_forms = set(observed.forms())
    predicted_forms = {e.form for e in predicted}
    report.check(
        "minimal set equals predicted",
        observed_forms == predicted_forms,
        observed=len(observed_forms),
        predicted=len(predicted_forms),
        missing=sorted(f.hex() for f in predicted_forms - observed_forms),
        unexpected=sorted(f.hex() for f in observed_forms - predicted_forms),
    )
    comparable = [
        (a.form_hex, b.form_hex, compare(a.coeffs, b.coeffs).value)
        for i, a in enumerate(predicted) for b in predicted[i + 1:]
        if compare(a.coeffs, b.coeffs) is not PosetRel.INCOMPARABLE
    ]
    report.check("predicted elements pairwise incomparable", not comparable, violations=comparable)

    lels = {e.form: lel(e.graph) for e in family}
    family_min = min(lels.values())
    predicted_min = min(lel(e.graph) for e in predicted)
    report.check(
        "family lel minimum attained by a predicted element",
        predicted_min <= family_min + LEL_TOLERANCE,
        family_min=family_min,
        predicted_min=predicted_min,
    )
    pairs = []
    for low in observed:
        for e in family:
            if compare(low.coeffs, e.coeffs) is PosetRel.LESS_STRICT:
                pairs.append((low, e))
    _lel_monotone(report, pairs, lels)
    return report


def incomparability_probe(n: int, l: int, g: int, p: int, q: int) -> VerificationReport:
    """
    U^p against U^q for any two distinct tails that build: always incomparable. While both
    tails are at most p_max, also c_{n-2} strictly smaller for the longer tail and a
    reversed strict inequality at some index of the band [2*hi, 2*(lo + g) - 1].
    """
    if p == q:
        raise VerificationError(f"Probe needs two different tail lengths, got p = q = {p}")
    if l < 2:
        raise VerificationError(f"With l={l} every tail length gives the same graph")
    p_max = max_minimal_tail(n, l, g)
    lo, hi = sorted((p, q))
    try:
        low = make_entry(build_u(FamilySpec(n=n, l=l, g=g, p=lo)), girth=g, attachments=1)
        high = make_entry(build_u(FamilySpec(n=n, l=l, g=g, p=hi)), girth=g, attachments=1)
    except FamilySpecError as e:
        raise VerificationError(f"No U^{{g,p}} for (n={n}, l={l}, g={g}), p={p}, q={q}: {e}") from e
    relation = compare(high.coeffs, low.coeffs)
    report = VerificationReport(
        name="incomparability-probe",
        parameters={"n": n, "l": l, "g": g, "p": p, "q": q, "p_max": p_max},
    )
    report.data["lower_tail"] = entry_document(low, with_lel=True)
    report.data["higher_tail"] = entry_document(high, with_lel=True)
    report.data["relation"] = relation.value
    report.check("incomparable", relation is PosetRel.INCOMPARABLE)

    k = n - 2
    band = list(range(2 * hi, min(2 * (lo + g) - 1, n - 3) + 1))
    witnesses = [m for m in band if high.coeffs[m] > low.coeffs[m]]
    report.data["band"] = [band[0], band[-1]] if band else []
    report.data["band_witnesses"] = witnesses
    if hi > p_max:
        report.data["c_n_minus_2"] = {"higher": str(high.coeffs[k]), "lower": str(low.coeffs[k])}
        report.notes.append(f"tail {hi} exceeds p_max={p_max}; only incomparability is asserted")
        return report
    report.check(
        "c_{n-2} smaller for the longer tail",
        high.coeffs[k] < low.coeffs[k],
        index=k, higher=str(high.coeffs[k]), lower=str(low.coeffs[k]),
    )
    if band:
        report.check("reversed inequality inside the band", bool(witnesses), band=report.data["band"])
    else:
        report.notes.append("band is empty for these tail lengths; only incomparability is asserted")
    return report


def _violation(n: int, l: int, base: CatalogEntry, entry: CatalogEntry, relation: PosetRel) -> Dict[str, Any]:
    return {
        "n": n, "l": l, "g": entry.girth, "relation": relation.value,
        "base": base.coeffs.to_strings(), "member": entry_document(entry),
    }


def check_conjecture(n_max: int, n_min: int = 3, workers: int = 1,
                     max_n: Optional[int] = None) -> VerificationReport:
    """
    Part 1: U^{g,0} below every G in U_{n,l}^g with at least three branch cycle vertices
    (and, for girth 3 and 4, at least two). Part 2: the minimal elements of the poset pooled
    over all girths are U^{3,0}, ..., U^{3,p}.
    """
    check_guard(n_max, max_n)
    report = VerificationReport(
        name="conjecture",
        parameters={"n_min": n_min, "n_max": n_max, "pooled_girths": "all g >= 3"},
    )
    report.notes.append("the pooled poset ranges over every girth g >= 3 for fixed (n, l)")
    three_checked, two_checked, pooled_checked = 0, 0, 0
    three_bad: List[Dict[str, Any]] = []
    two_bad: List[Dict[str, Any]] = []
    pooled_bad: List[Dict[str, Any]] = []
    skipped: List[Dict[str, int]] = []

    for n in range(max(n_min, 3), n_max + 1):
        for l in range(1, n - 2):
            pooled = enumerate_unicyclic(n, l=l, workers=workers, max_n=max_n)
            if not len(pooled):
                continue
            bases: Dict[int, CatalogEntry] = {}
            for entry in pooled:
                if entry.attachments < 2:
                    continue
                if entry.girth not in bases:
                    bases[entry.girth] = make_entry(
                        build_u(FamilySpec(n=n, l=l, g=entry.girth, p=0)), girth=entry.girth, attachments=1)
                base = bases[entry.girth]
                relation = compare(base.coeffs, entry.coeffs)
                ok = relation in (PosetRel.LESS_STRICT, PosetRel.EQUAL)
                if entry.attachments >= 3:
                    three_checked += 1
                    if not ok:
                        three_bad.append(_violation(n, l, base, entry, relation))
                elif entry.girth in (3, 4):
                    two_checked += 1
                    if not ok:
                        two_bad.append(_violation(n, l, base, entry, relation))

            p = max_minimal_tail(n, l, 3)
            if p < 0:
                skipped.append({"n": n, "l": l, "p": p})
                continue
            pooled_checked += 1
            observed = set(minimal_elements(pooled).forms())
            predicted = {e.form for e in predicted_minimal(n, l, 3)}
            if observed != predicted:
                pooled_bad.append({
                    "n": n, "l": l, "p": p,
                    "observed": [entry_document(pooled.find(f)) for f in sorted(observed)],
                    "predicted": sorted(f.hex() for f in predicted),
                })
        logger.info(f"conjecture: n={n} done")

    if three_checked:
        report.check("U0 below graphs with three or more branch cycle vertices", not three_bad,
                     graphs=three_checked, violations=three_bad)
    else:
        report.notes.append("part 1 vacuous: no graph has three branch cycle vertices in range")
    if two_checked:
        report.check("U0 below girth 3 and 4 graphs with two branch cycle vertices", not two_bad,
                     graphs=two_checked, violations=two_bad)
    if pooled_checked:
        report.check("pooled minimal elements are the girth-3 family", not pooled_bad,
                     families=pooled_checked, violations=pooled_bad)
    report.data["pooled_out_of_scope"] = skipped
    return report
