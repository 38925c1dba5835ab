"""Witness certificates for acylindrical hyperbolicity of graph products.

Pipeline: check that W_Gamma is irreducible of indefinite type, take the
Coxeter element, push it into the finite-index subgroup W_0, pass to a
minimal-length conjugate, certify it straight and regular, lift it to the
building through the apartment section, and record hull membership of the
base chamber plus brute-force WPD samples.  Every record is recomputable
from the input spec and the recorded parameters.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, fields
from functools import reduce
from typing import Any

from .errors import FingerprintMismatch, HypothesesFailed, SpecError, WeylkitError
from .gcm import MatrixType
from .gprod import (
    IDENTITY,
    GraphProductSpec,
    apartment_section,
    brute_force_wpd_check,
    combinatorial_hull,
    gallery_distance,
    is_irreducible_graph,
    join_partition,
    power,
)
from .gprod.normal_form import to_json as chamber_json
from .weyl import (
    CoxeterSystem,
    certify_regular,
    certify_straight,
    coxeter_element,
    element_of_word,
    find_separated_wall_pair,
    format_word,
    is_straight_up_to,
    length_and_reduced_word,
    min_length_conjugate,
)

CERTIFICATE_VERSION = "weylkit-certificate/1"
METRIC_NOTE = "gallery metric on chambers (quasi-isometric to the CAT(0) realization)"
CONTRACTION_NOTE = (
    "strong contraction is not checked finitely: it is inherited from the theorem that "
    "Coxeter elements of irreducible non-spherical non-affine Coxeter groups are rank one; "
    "the separated wall pair is recorded as corroborating evidence"
)


@dataclass(frozen=True)
class WitnessParameters:
    n_straight: int = 8
    k_power: int | None = None
    root_depth: int = 8
    hull_window: int = 4
    separation_depth: int = 4
    wpd_samples: int = 3
    root_cap: int = 100_000
    conjugacy_budget: int = 100_000
    closure_cap: int = 100_000
    ball_cap: int = 5_000_000
    w0: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "WitnessParameters":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)}")
        return cls(**data)


@dataclass(frozen=True)
class HypothesisReport:
    irreducible: bool
    type: str  # spherical | affine | indefinite | reducible
    two_vertex_case: bool
    free_transitive: bool = True
    gcm: tuple[tuple[int, ...], ...] = ()
    coxeter_matrix: tuple = ()
    join_partition: tuple | None = None
    block_types: tuple[str, ...] = ()

    @property
    def finite(self) -> bool:
        return all(t == MatrixType.SPHERICAL.value for t in self.block_types)

    def to_json(self) -> dict:
        return {
            "irreducible": self.irreducible,
            "type": self.type,
            "two_vertex_case": self.two_vertex_case,
            "free_transitive": self.free_transitive,
            "gcm": [list(r) for r in self.gcm],
            "coxeter_matrix": [list(r) for r in self.coxeter_matrix],
            "join_partition": None if self.join_partition is None else [list(p) for p in self.join_partition],
            "block_types": list(self.block_types),
        }


@dataclass
class WitnessCertificate:
    fingerprint: str
    verdict: str
    reason: str | None
    witness: dict | None
    evidence: dict
    parameters: dict
    version: str = CERTIFICATE_VERSION

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "fingerprint": self.fingerprint,
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": self.witness,
            "evidence": self.evidence,
            "parameters": self.parameters,
        }

    def dumps(self) -> str:
        return dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "WitnessCertificate":
        return cls(
            fingerprint=data["fingerprint"],
            verdict=data["verdict"],
            reason=data.get("reason"),
            witness=data.get("witness"),
            evidence=data.get("evidence", {}),
            parameters=data.get("parameters", {}),
            version=data.get("version", CERTIFICATE_VERSION),
        )


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _canon(obj: Any) -> Any:
    """JSON round trip so in-memory records compare equal to parsed ones."""
    return json.loads(json.dumps(obj, sort_keys=True))


# --- hypotheses -------------------------------------------------------------------


def right_angled_gcm(spec: GraphProductSpec) -> list[list[int]]:
    """Crystallographic GCM of W_Gamma: 0 on edges (m = 2), -2 off edges (m = inf)."""
    n = spec.n
    return [[2 if i == j else (0 if spec.adjacent(i, j) else -2) for j in range(n)] for i in range(n)]


def coxeter_system_of(spec: GraphProductSpec) -> CoxeterSystem:
    return CoxeterSystem.from_gcm(right_angled_gcm(spec), names=spec.names)


def check_hypotheses(spec: GraphProductSpec) -> HypothesisReport:
    sys = coxeter_system_of(spec)
    cl = sys.classification
    irreducible = is_irreducible_graph(spec.n, spec.edges)
    if irreducible != cl.indecomposable:
        raise AssertionError("graph irreducibility and GCM indecomposability disagree")
    return HypothesisReport(
        irreducible=irreducible,
        type=cl.verdict,
        two_vertex_case=spec.n == 2 and not spec.edges,
        gcm=sys.gcm.entries,
        coxeter_matrix=tuple(tuple(r) for r in sys.coxeter_matrix.to_json()),
        join_partition=None if irreducible else join_partition(spec.n, spec.edges),
        block_types=tuple(t.value for _, t in cl.blocks),
    )


def group_order_by_bfs(sys: CoxeterSystem, cap: int = 100_000) -> int | None:
    """|W| by exhaustive BFS over the Cayley graph, None if it exceeds ``cap``."""
    seen = {sys.identity()}
    frontier = [sys.identity()]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(sys.n):
                v = sys.rmul_simple(u, i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if len(seen) > cap:
            return None
        frontier = nxt
    return len(seen)


# --- finite-index subgroup W_0 ------------------------------------------------------


def _w0_power(spec: GraphProductSpec, w0: dict | None) -> tuple[int, dict | None]:
    """Least p >= 1 with (Coxeter element)^p in ker(W -> prod Z/moduli)."""
    if not w0:
        return 1, None
    moduli = [int(k) for k in w0["moduli"]]
    images = w0["images"]
    total = [0] * len(moduli)
    for name in spec.names:
        img = [int(x) for x in images.get(name, [0] * len(moduli))]
        if len(img) != len(moduli):
            raise SpecError(f"image of {name} has the wrong number of coordinates")
        for k, (a, mod) in enumerate(zip(img, moduli)):
            if (2 * a) % mod:
                raise SpecError(f"image of {name} must have order dividing 2")
            total[k] = (total[k] + a) % mod
    p = reduce(math.lcm, (mod // math.gcd(a, mod) for a, mod in zip(total, moduli)), 1)
    return p, {"moduli": moduli, "coxeter_image": total}


# --- evidence records -------------------------------------------------------------


def hull_membership(spec: GraphProductSpec, h, N: int, cap: int = 100_000) -> dict:
    """b = identity chamber against the window hull({b, h^N b}) and the
    symmetric window {h^-N b, h^N b}."""
    b = IDENTITY
    hn = power(spec, h, N)
    hull = combinatorial_hull(spec, [b, hn], cap)
    hmn = power(spec, h, -N)
    d_minus = gallery_distance(spec, hmn, b)
    d_plus = gallery_distance(spec, b, hn)
    d_total = gallery_distance(spec, hmn, hn)
    return {
        "N": N,
        "hull_size": len(hull),
        "hull_rounds": hull.rounds,
        "base_in_hull": b in hull,
        "symmetric_window": {"d_minus": d_minus, "d_plus": d_plus, "d_total": d_total},
        "base_on_symmetric_geodesic": d_minus + d_plus == d_total,
    }


def _wpd_pairs(fingerprint: str, samples: int, ell: int) -> list[tuple[int, int]]:
    rng = random.Random(fingerprint)
    pairs = []
    cand = [(D, m) for D in range(2, 6) for m in range(1, 4)]
    while len(pairs) < min(samples, len(cand)):
        p = rng.choice(cand)
        if p not in pairs:
            pairs.append(p)
    return sorted(pairs)


def wpd_record(spec: GraphProductSpec, h, D: int, m: int, ball_cap: int) -> dict:
    res = brute_force_wpd_check(spec, h, IDENTITY, D, m, radius=D - 1, cap=ball_cap)
    return {
        "D": D,
        "m": m,
        "radius": res.radius,
        "required_radius": res.required_radius,
        "complete": res.complete,
        "degenerate": res.degenerate,
        "ball_size": res.ball_size,
        "size": res.size,
        "elements": [chamber_json(spec, g) for g in res.elements],
    }


def _regular_kwargs(params: WitnessParameters) -> dict:
    return {"root_cap": params.root_cap, "conjugacy_budget": params.conjugacy_budget}


def straightness_record(sys: CoxeterSystem, w, params: WitnessParameters) -> dict:
    cert = certify_straight(sys, w, params.n_straight, params.k_power, params.root_depth, **_regular_kwargs(params))
    return cert.to_json()


def regularity_record(sys: CoxeterSystem, w, params: WitnessParameters) -> dict:
    return certify_regular(sys, w, params.k_power, params.root_depth, **_regular_kwargs(params)).to_json()


# --- main pipeline ------------------------------------------------------------------


def build_witness(
    spec: GraphProductSpec,
    params: WitnessParameters | None = None,
    *,
    strict: bool = False,
) -> WitnessCertificate:
    params = params or WitnessParameters()
    fp = spec.fingerprint()
    report = check_hypotheses(spec)
    evidence: dict = {"hypotheses": report.to_json(), "metric": METRIC_NOTE}

    def done(verdict, reason=None, witness=None):
        return WitnessCertificate(fp, verdict, reason, _canon(witness), _canon(evidence), _canon(params.to_json()))

    if report.two_vertex_case:
        evidence["free_product"] = {
            "factors": list(spec.names),
            "note": "non-trivial free product acting acylindrically on its Bass-Serre tree",
        }
        return done("FreeProductCase")

    sys = coxeter_system_of(spec)
    reason = None
    if report.finite:
        # a finite group is rejected as such even when the graph is a join
        reason = "Spherical"
        evidence["group_order_bfs"] = group_order_by_bfs(sys, params.closure_cap)
    elif not report.irreducible:
        reason = "Reducible"
    elif report.type == MatrixType.AFFINE.value:
        reason = "Affine"
    if reason is not None:
        if strict:
            raise HypothesesFailed(reason)
        return done("Rejected", reason)

    # (1)-(3): Coxeter element, power into W_0, minimal-length conjugate
    p, w0_info = _w0_power(spec, params.w0)
    c = coxeter_element(sys)
    wp = sys.power(c, p)
    w = min_length_conjugate(sys, wp, params.conjugacy_budget)
    ell, word = length_and_reduced_word(sys, w)
    evidence["coxeter_element"] = {"word": format_word(range(sys.n)), "power": p, "w0": w0_info}
    evidence["min_length_conjugate"] = {"word": format_word(word), "length": ell}

    # (4) straightness and regularity
    evidence["straightness"] = straightness_record(sys, w, params)
    evidence["regularity"] = regularity_record(sys, w, params)
    evidence["soundness"] = {
        "horizon": 2 * params.n_straight,
        "straight": is_straight_up_to(sys, w, 2 * params.n_straight),
    }
    pair = find_separated_wall_pair(sys, params.separation_depth, params.root_cap)
    evidence["separated_walls"] = {
        "depth": params.separation_depth,
        "pair": None if pair is None else [list(pair[0].coords), list(pair[1].coords)],
    }
    evidence["strong_contraction"] = CONTRACTION_NOTE

    # (5) lift through the apartment section
    h = apartment_section(spec, word)
    witness = {"word": format_word(word), "lift": chamber_json(spec, h), "base": []}

    # (6) hull membership, (7) WPD samples
    evidence["hull_membership"] = hull_membership(spec, h, params.hull_window, params.closure_cap)
    pairs = _wpd_pairs(fp, params.wpd_samples, ell)
    evidence["wpd"] = {
        "free_action_check": wpd_record(spec, h, 1, 1, params.ball_cap),
        "samples": [wpd_record(spec, h, D, m, params.ball_cap) for D, m in pairs],
    }

    # (8) verdict
    failing = _failing_step(evidence)
    if failing:
        return done("Rejected", failing, witness)
    return done("AcylindricallyHyperbolic", None, witness)


def _failing_step(ev: dict) -> str | None:
    if ev["straightness"]["verdict"] != "CertifiedStraight":
        return "StraightnessNotCertified"
    if ev["regularity"]["verdict"] not in ("CertifiedCoxeterElement", "CertifiedByFixedSpaceSearch"):
        return "RegularityNotCertified"
    if not ev["soundness"]["straight"]:
        return "StraightnessSoundnessCheckFailed"
    hm = ev["hull_membership"]
    if not (hm["base_in_hull"] and hm["base_on_symmetric_geodesic"]):
        return "HullMembershipFailed"
    wpd = ev["wpd"]
    fa = wpd["free_action_check"]
    if not (fa["complete"] and fa["size"] == 1 and fa["elements"] == [[]]):
        return "FreeActionCheckFailed"
    if not all(s["complete"] for s in wpd["samples"]):
        return "WPDSampleIncomplete"
    return None


# --- verification -----------------------------------------------------------------


def verify_certificate(
    cert: WitnessCertificate | dict,
    spec: GraphProductSpec,
    parameters: WitnessParameters | dict | None = None,
) -> tuple[bool, list[str]]:
    """Recompute every record from the input spec and recorded parameters.

    Returns (ok, discrepancies).  The claimed witness word is re-checked on
    its own (so a tampered word is reported against the record it breaks)
    before the whole certificate is rebuilt and compared field by field.
    """
    data = cert.to_json() if isinstance(cert, WitnessCertificate) else cert
    if data.get("fingerprint") != spec.fingerprint():
        raise FingerprintMismatch("certificate fingerprint does not match the input spec")
    issues: list[str] = []
    if data.get("version") != CERTIFICATE_VERSION:
        issues.append(f"version: unsupported {data.get('version')!r}")
    recorded = data.get("parameters", {})
    if parameters is not None:
        requested = parameters.to_json() if isinstance(parameters, WitnessParameters) else dict(parameters)
        requested = _canon(WitnessParameters.from_json(requested).to_json())
        if requested != recorded:
            diff = sorted(k for k in set(requested) | set(recorded) if requested.get(k) != recorded.get(k))
            return False, [f"ParameterMismatch: {', '.join(diff)}"]
    try:
        params = WitnessParameters.from_json(recorded)
    except (TypeError, ValueError) as exc:
        return False, [f"parameters: {exc}"]

    ev = data.get("evidence") or {}
    witness = data.get("witness")
    if data.get("verdict") == "AcylindricallyHyperbolic" and witness:
        issues.extend(_check_claimed_witness(spec, params, witness, ev))

    fresh = build_witness(spec, params).to_json()
    for key in ("verdict", "reason"):
        if fresh[key] != data.get(key):
            issues.append(f"{key}: expected {fresh[key]!r}, got {data.get(key)!r}")
    fw, dw = fresh["witness"] or {}, witness or {}
    for key in sorted(set(fw) | set(dw)):
        if fw.get(key) != dw.get(key):
            issues.append(f"witness.{key}: does not match the rebuilt witness")
    for key in sorted(set(fresh["evidence"]) | set(ev)):
        if fresh["evidence"].get(key) != ev.get(key):
            name = f"evidence.{key}: does not match recomputation"
            if not any(i.startswith(f"evidence.{key}:") for i in issues):
                issues.append(name)
    if not issues and _canon(data) != fresh:
        issues.append("certificate: differs from the rebuilt certificate")
    return not issues, issues


def _check_claimed_witness(spec, params, witness, ev) -> list[str]:
    issues = []
    sys = coxeter_system_of(spec)
    try:
        word = sys.parse_word(witness.get("word", ""))
    except WeylkitError:
        return ["evidence.straightness: witness word does not parse", "witness.word: unparseable"]
    w = element_of_word(sys, word)
    try:
        if _canon(straightness_record(sys, w, params)) != ev.get("straightness"):
            issues.append("evidence.straightness: record does not hold for the claimed witness word")
        if _canon(regularity_record(sys, w, params)) != ev.get("regularity"):
            issues.append("evidence.regularity: record does not hold for the claimed witness word")
        _, red = length_and_reduced_word(sys, w)
        h = apartment_section(spec, red)
    except WeylkitError as exc:
        return issues + [f"witness.word: {exc.code}"]
    if chamber_json(spec, h) != witness.get("lift"):
        issues.append("witness.lift: is not the apartment section of the witness word")
    hm = ev.get("hull_membership") or {}
    if _canon(hull_membership(spec, h, params.hull_window, params.closure_cap)) != hm:
        issues.append("evidence.hull_membership: record does not hold for the claimed lift")
    return issues


def load_spec(path) -> GraphProductSpec:
    with open(path, encoding="utf-8") as fh:
        return GraphProductSpec.from_json(json.load(fh))

