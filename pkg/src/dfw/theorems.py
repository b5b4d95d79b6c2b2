"""Randomized verification harnesses.

Each check suite instantiates both sides of one structural identity on
seeded random small presentations and compares canonical forms (or
verifies exactness data by mutual sublattice containment).  Runs are
deterministic functions of the seed: trial i of suite s draws from an RNG
keyed by (seed, s, i), so identical configs reproduce identical verdicts
byte for byte.  A failed trial carries a replayable serialized instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .abelian import (
    ContainmentError,
    Hom,
    PresentedGroup,
    cokernel,
    direct_sum,
    image,
    kernel,
    subgroup_leq,
    subquotient,
    tensor,
)
from .derived import (
    NestedPresentation,
    Presentation,
    induced_l1_sp2,
    l1_sp,
    l2_superlie3,
    sp2_bottom_row,
    superlie3_kernel_data,
    tor,
    tor_to_l1_sp2,
    wedge_to_tensor_matrix,
)
from .functors import basis, ext_relations, functor_on_group, induced_map
from .linalg import IntMatrix, column_basis, hstack, kron

SUITE_NAMES = ("thm31", "thm32", "exact4", "crosseffect", "presindep")


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 0
    trials: int = 100
    max_rank: int = 4
    max_entry: int = 6

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.max_rank < 1 or self.max_entry < 1:
            raise ValueError("bounds must be >= 1")


@dataclass(frozen=True)
class TrialRecord:
    suite: str
    trial: int
    status: str  # "ok" | "fail"
    lhs: str
    rhs: str
    counterexample: Optional[dict] = None


@dataclass(frozen=True)
class Verdict:
    passed: int
    failed: int
    first_counterexample: Optional[dict]
    records: Tuple[TrialRecord, ...]
    monitor: Dict[str, int] = field(default_factory=dict)


def _trial_rng(cfg: TrialConfig, suite: str, trial: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}:{trial}")


# ---------------------------------------------------------------- sampling

def random_matrix(rng, rows, cols, bound) -> IntMatrix:
    return IntMatrix(rows, cols, (rng.randint(-bound, bound) for _ in range(rows * cols)))


def random_presentation(rng, cfg: TrialConfig, max_rank: Optional[int] = None) -> Presentation:
    r = rng.randint(1, max_rank or cfg.max_rank)
    k = rng.randint(0, r + 1)
    return Presentation(r, column_basis(random_matrix(rng, r, k, cfg.max_entry)))


def random_nested_presentation(rng, cfg: TrialConfig) -> NestedPresentation:
    """Outer lattice from a random matrix; inner from random combinations
    of the outer columns, so containment holds by construction."""
    r = rng.randint(1, cfg.max_rank)
    outer = column_basis(random_matrix(rng, r, rng.randint(0, r), cfg.max_entry))
    mix = random_matrix(rng, outer.cols, rng.randint(0, outer.cols + 1), 2)
    inner = column_basis(outer @ mix)
    return NestedPresentation.build(r, inner, outer)


def random_group(rng, cfg: TrialConfig, max_rank: Optional[int] = None) -> PresentedGroup:
    r = rng.randint(1, max_rank or cfg.max_rank)
    k = rng.randint(0, r + 1)
    return PresentedGroup(r, random_matrix(rng, r, k, cfg.max_entry))


def scrambled_presentation(rng, g: PresentedGroup, extra_gens: int) -> Presentation:
    """A fresh presentation of the same group: redundant generators with
    defining relations, then a random unimodular change of basis."""
    r2 = g.rank + extra_gens
    cols = []
    for j in range(g.relations.cols):
        cols.append(g.relations.col_list(j) + [0] * extra_gens)
    for e in range(extra_gens):
        col = [rng.randint(-2, 2) for _ in range(g.rank)] + [0] * extra_gens
        col[g.rank + e] = 1
        cols.append(col)
    rel = IntMatrix.from_cols(cols, rows=r2)
    u = IntMatrix.identity(r2).to_rows()
    for _ in range(3 * r2):
        i, j = rng.randrange(r2), rng.randrange(r2)
        if i != j:
            c = rng.randint(-2, 2)
            for t in range(r2):
                u[i][t] += c * u[j][t]
    return Presentation(r2, column_basis(IntMatrix.from_rows(u) @ rel))


# ---------------------------------------------------- instance evaluators

def _tensor_pair_map(i_incl: IntMatrix, rank_i: int, ambient: int):
    """Columns of the map Λ²(I) -> I (x) E on wedge generators:
    g_a ∧ g_b  |->  g_a (x) v_b - g_b (x) v_a."""
    wedge = basis("ext", 2, rank_i)
    cols = []
    for (a, b) in wedge.elements:
        col = [0] * (rank_i * ambient)
        for j in range(ambient):
            vb = i_incl.entry(j, b)
            if vb:
                col[a * ambient + j] += vb
            va = i_incl.entry(j, a)
            if va:
                col[b * ambient + j] -= va
        cols.append(col)
    return IntMatrix.from_cols(cols, rows=rank_i * ambient)


def _mult_into_sym2(i_incl: IntMatrix, rank_i: int, ambient: int):
    """Columns of I (x) E -> SP^2(E): g_a (x) e_j |-> (v_a) · x_j."""
    sym2 = basis("sym", 2, ambient)
    cols = []
    for a in range(rank_i):
        for j in range(ambient):
            col = [0] * sym2.size
            for k in range(ambient):
                v = i_incl.entry(k, a)
                if v:
                    col[sym2.rank_of((k, j) if k <= j else (j, k))] += v
            cols.append(col)
    return IntMatrix.from_cols(cols, rows=sym2.size)


def thm_3_1_instance(np: NestedPresentation) -> Tuple[str, str]:
    """Middle homology of Λ²(I) -> I (x) E -> SP²(E) versus the cokernel of
    the induced map on the derived symmetric squares."""
    e_group = np.inner_presentation.quotient()
    i_group = np.middle_group()
    v = np.outer
    r = np.ambient_rank
    si = i_group.rank

    lam2_i = functor_on_group("ext", 2, i_group)
    i_tensor_e = tensor(i_group, e_group)
    sp2_e = functor_on_group("sym", 2, e_group)

    map_a = Hom(lam2_i, i_tensor_e, _tensor_pair_map(v, si, r))
    map_b = Hom(i_tensor_e, sp2_e, _mult_into_sym2(v, si, r))
    if not (map_b @ map_a).is_zero():
        raise AssertionError("three-term complex does not compose to zero")

    _, incl_b = kernel(map_b)
    _, _, mono_a = image(map_a)
    middle = subquotient(incl_b, mono_a)
    lhs = str(middle.canonical)

    rhs = str(cokernel(induced_l1_sp2(np))[0].canonical)
    return lhs, rhs


def thm_3_2_instance(np: NestedPresentation) -> Tuple[str, str]:
    """Coker{Tor(E/I, E) -> L1SP^2(E/I)} versus
    Ker{Λ²(E)/Λ²(I)-image -> E/I (x) E}."""
    lhs = str(cokernel(tor_to_l1_sp2(np))[0].canonical)

    r = np.ambient_rank
    u, v = np.inner, np.outer
    ident = IntMatrix.identity(r)
    wedge_source = PresentedGroup(
        basis("ext", 2, r).size,
        hstack(induced_map("ext", 2, v), ext_relations(2, u)),
    )
    tensor_target = PresentedGroup(r * r, hstack(kron(v, ident), kron(ident, u)))
    ker_group, _ = kernel(Hom(wedge_source, tensor_target, wedge_to_tensor_matrix(r)))
    rhs = str(ker_group.canonical)
    return lhs, rhs


def exact4_instance(p: Presentation) -> Tuple[str, str]:
    """Exactness of 0 -> L1SP² -> Λ²Q/Λ²U -> Q/U (x) Q -> SP²(Q/U) -> 0 by
    injectivity, mutual image/kernel containment, and surjectivity."""
    alpha, beta, gamma = sp2_bottom_row(p)
    failures = []
    if not alpha.is_injective():
        failures.append("left map not injective")
    _, _, mono_alpha = image(alpha)
    _, incl_beta_ker = kernel(beta)
    if not subgroup_leq(mono_alpha, incl_beta_ker):
        failures.append("image not inside kernel at spot 1")
    if not subgroup_leq(incl_beta_ker, mono_alpha):
        failures.append("kernel not inside image at spot 1")
    _, _, mono_beta = image(beta)
    _, incl_gamma_ker = kernel(gamma)
    if not subgroup_leq(mono_beta, incl_gamma_ker):
        failures.append("image not inside kernel at spot 2")
    if not subgroup_leq(incl_gamma_ker, mono_beta):
        failures.append("kernel not inside image at spot 2")
    if not gamma.is_surjective():
        failures.append("right map not surjective")
    return ("exact" if not failures else "; ".join(failures)), "exact"


def cross_effect_instance(pa: Presentation, pb: Presentation) -> Tuple[str, str]:
    """L1SP^2(A + B) versus L1SP^2(A) + L1SP^2(B) + Tor(A, B), all three
    summands computed independently."""
    ga, gb = pa.quotient(), pb.quotient()
    whole = Presentation.from_group(direct_sum(ga, gb))
    lhs = str(l1_sp(2, whole).canonical)
    rhs_group = direct_sum(l1_sp(2, pa), l1_sp(2, pb), tor(pa, pb))
    return lhs, str(rhs_group.canonical)


_DERIVED_OPS: Tuple[Tuple[str, Callable[[Presentation], PresentedGroup]], ...] = (
    ("l1_sp2", lambda p: l1_sp(2, p)),
    ("l1_sp3", lambda p: l1_sp(3, p)),
    ("l1_sp4", lambda p: l1_sp(4, p)),
    ("l2_superlie3", l2_superlie3),
    ("tor", lambda p: tor(p, p)),
)


def presentation_independence_instance(p1: Presentation, p2: Presentation) -> Tuple[str, str]:
    """All derived operations evaluated on two presentations of one group."""
    lhs = ";".join(f"{name}={op(p1).canonical}" for name, op in _DERIVED_OPS)
    rhs = ";".join(f"{name}={op(p2).canonical}" for name, op in _DERIVED_OPS)
    return lhs, rhs


def superlie_kernel_instance(p: Presentation) -> Tuple[str, str]:
    """Left-exactness data for the super-Lie kernel: the constructed
    inclusion is injective and the composite into the reduced tensor cube
    vanishes."""
    _, incl, h = superlie3_kernel_data(p)
    failures = []
    if not incl.is_injective():
        failures.append("kernel inclusion not injective")
    if not (h @ incl).is_zero():
        failures.append("composite into the target is nonzero")
    return ("exact" if not failures else "; ".join(failures)), "exact"


def exponent_shadow_instance(c: int, p: Presentation) -> Tuple[bool, bool, str, str]:
    """(asserted, monitored) exponent divisibility for the two derived
    functors of a group annihilated by c."""
    v1 = l1_sp(2, p).canonical
    v2 = l2_superlie3(p).canonical
    ok1 = v1.exponent_divides(c)
    ok2 = v2.exponent_divides(c)
    return ok1, ok2, str(v1), str(v2)


# ------------------------------------------------------------- the suites

def _run_suite(cfg: TrialConfig, suite: str, trial_fn) -> Verdict:
    records: List[TrialRecord] = []
    first: Optional[dict] = None
    passed = failed = 0
    for i in range(cfg.trials):
        rng = _trial_rng(cfg, suite, i)
        ok, lhs, rhs, instance = trial_fn(rng)
        if ok:
            passed += 1
            records.append(TrialRecord(suite, i, "ok", lhs, rhs))
        else:
            failed += 1
            ce = {"instance": instance, "lhs": lhs, "rhs": rhs}
            records.append(TrialRecord(suite, i, "fail", lhs, rhs, ce))
            if first is None:
                first = ce
    return Verdict(passed, failed, first, tuple(records))


def check_thm_3_1(cfg: TrialConfig) -> Verdict:
    def trial(rng):
        np = random_nested_presentation(rng, cfg)
        try:
            lhs, rhs = thm_3_1_instance(np)
        except (AssertionError, ContainmentError) as exc:
            return False, f"error: {exc}", "", {"nested": np.to_dict()}
        return lhs == rhs, lhs, rhs, {"nested": np.to_dict()}

    return _run_suite(cfg, "thm31", trial)


def check_thm_3_2(cfg: TrialConfig) -> Verdict:
    def trial(rng):
        np = random_nested_presentation(rng, cfg)
        try:
            lhs, rhs = thm_3_2_instance(np)
        except AssertionError as exc:
            return False, f"error: {exc}", "", {"nested": np.to_dict()}
        return lhs == rhs, lhs, rhs, {"nested": np.to_dict()}

    return _run_suite(cfg, "thm32", trial)


def check_exact4(cfg: TrialConfig) -> Verdict:
    def trial(rng):
        p = random_presentation(rng, cfg)
        lhs, rhs = exact4_instance(p)
        return lhs == rhs, lhs, rhs, {"presentation": p.to_dict()}

    return _run_suite(cfg, "exact4", trial)


def check_cross_effect(cfg: TrialConfig) -> Verdict:
    def trial(rng):
        pa = random_presentation(rng, cfg)
        pb = random_presentation(rng, cfg)
        lhs, rhs = cross_effect_instance(pa, pb)
        return lhs == rhs, lhs, rhs, {"a": pa.to_dict(), "b": pb.to_dict()}

    return _run_suite(cfg, "crosseffect", trial)


def check_presentation_independence(cfg: TrialConfig) -> Verdict:
    def trial(rng):
        g = random_group(rng, cfg, max_rank=max(1, cfg.max_rank - 1))
        p1 = Presentation.from_group(g)
        extra = rng.randint(0, min(2, cfg.max_rank - g.rank))
        p2 = scrambled_presentation(rng, g, extra)
        lhs, rhs = presentation_independence_instance(p1, p2)
        return lhs == rhs, lhs, rhs, {"first": p1.to_dict(), "second": p2.to_dict()}

    return _run_suite(cfg, "presindep", trial)


def check_superlie_kernel(cfg: TrialConfig) -> Verdict:
    """Acceptance-level check for the left-exact super-Lie kernel; not a
    CLI suite."""

    def trial(rng):
        p = random_presentation(rng, cfg)
        lhs, rhs = superlie_kernel_instance(p)
        return lhs == rhs, lhs, rhs, {"presentation": p.to_dict()}

    return _run_suite(cfg, "superlie", trial)


def check_exponent_shadow(cfg: TrialConfig) -> Verdict:
    """Exponent divisibility for groups annihilated by c <= 12: asserted
    for the derived symmetric square, monitored for the super-Lie cube."""
    records: List[TrialRecord] = []
    first = None
    passed = failed = 0
    monitored = 0
    for i in range(cfg.trials):
        rng = _trial_rng(cfg, "exponent", i)
        c = rng.randint(1, 12)
        divisors = [d for d in range(2, c + 1) if c % d == 0]
        parts = [rng.choice(divisors) for _ in range(rng.randint(0, 3))] if divisors else []
        g = direct_sum(*(PresentedGroup.cyclic(d) for d in parts))
        p = scrambled_presentation(rng, g, rng.randint(0, 1))
        ok1, ok2, v1, v2 = exponent_shadow_instance(c, p)
        if ok2:
            monitored += 1
        lhs = f"c={c};l1_sp2={v1};l2={v2}"
        rhs = f"c={c};l1_sp2 exponent divides c"
        if ok1:
            passed += 1
            records.append(TrialRecord("exponent", i, "ok", lhs, rhs))
        else:
            failed += 1
            ce = {"instance": {"c": c, "presentation": p.to_dict()}, "lhs": lhs, "rhs": rhs}
            records.append(TrialRecord("exponent", i, "fail", lhs, rhs, ce))
            if first is None:
                first = ce
    return Verdict(
        passed, failed, first, tuple(records),
        monitor={"l2_superlie3_exponent_divides": monitored, "trials": cfg.trials},
    )


CHECKS: Dict[str, Callable[[TrialConfig], Verdict]] = {
    "thm31": check_thm_3_1,
    "thm32": check_thm_3_2,
    "exact4": check_exact4,
    "crosseffect": check_cross_effect,
    "presindep": check_presentation_independence,
}


def replay_counterexample(suite: str, counterexample: dict) -> Tuple[str, str]:
    """Recompute both sides for a serialized failed trial in isolation."""
    instance = counterexample["instance"]
    if suite in ("thm31", "thm32"):
        np = NestedPresentation.from_dict(instance["nested"])
        return (thm_3_1_instance if suite == "thm31" else thm_3_2_instance)(np)
    if suite == "exact4":
        return exact4_instance(Presentation.from_dict(instance["presentation"]))
    if suite == "crosseffect":
        return cross_effect_instance(
            Presentation.from_dict(instance["a"]),
            Presentation.from_dict(instance["b"]),
        )
    if suite == "presindep":
        return presentation_independence_instance(
            Presentation.from_dict(instance["first"]),
            Presentation.from_dict(instance["second"]),
        )
    if suite == "superlie":
        return superlie_kernel_instance(Presentation.from_dict(instance["presentation"]))
    raise ValueError(f"unknown suite {suite!r}")


def evaluate_section4(g: PresentedGroup) -> Dict[str, str]:
    """Derived-functor report for an abelian group: the second integral
    homology (the exterior square, classically, for abelian groups) and
    the derived values evaluated on it and on the group itself."""
    h2 = functor_on_group("ext", 2, g)
    ph2 = Presentation.from_group(h2)
    pg = Presentation.from_group(g)
    return {
        "H2": str(h2.canonical),
        "L1SP2(H2)": str(l1_sp(2, ph2).canonical),
        "L2Ls3(H2)": str(l2_superlie3(ph2).canonical),
        "L1SP3(Gab)": str(l1_sp(3, pg).canonical),
        "L1SP4(Gab)": str(l1_sp(4, pg).canonical),
    }
