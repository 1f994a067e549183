"""
End-to-end verification scenarios.

Each scenario is a fixed list of named checks; a check takes the resolved
parameters and the workbench configuration and returns (passed, detail).
Checks are module-level functions so a scenario can be spread over worker
processes; the report keeps the order of the list regardless.
"""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache
import logging
from typing import Any, Optional

from sympy import primerange
import voluptuous as vol

from . import stallings, towers
from .abelian import (
    TFAbelianGroup,
    alpha_p,
    chain_demo,
    elem_equiv,
    small_dim_sentence_holds,
)
from .config import SCENARIO_LIST_SCHEMA, SCENARIO_SCHEMA, WorkbenchConfig, load_yaml
from .const import (
    DEFAULT_MAX_LEN,
    FORALL_AP_BRUTE_BOUND,
    PRIMITIVE_CANDIDATES,
    SCENARIO_EXAMPLE_3_1,
    SCENARIO_FORALL_AP_OBSTRUCTION,
    SCENARIO_FORALL_AP_WITNESSES,
    SCENARIO_PRIMITIVE_TOWER,
    SCENARIO_RANK_3_WITNESS,
    SCENARIO_STRONG_AP,
    SCENARIO_SZMIELEW,
    SZMIELEW_CHAIN_BOUND,
    SZMIELEW_MAX_PRIME,
)
from .exceptions import PreconditionError, WorkbenchError
from .parse_io import parse_generating_set, parse_tower_word, parse_word
from .quadratic import (
    abelian_obstruction,
    brute_solve,
    classify,
    enumerate_configs,
    euler_bound_holds,
)
from .whitehead import is_free_factor_of, is_primitive
from .words import (
    Alphabet,
    Word,
    commutes_with_conjugate,
    exponent_sum,
    generator,
    is_proper_power,
    root,
)

_LOGGER = logging.getLogger(__name__)

_EVEN_SCENARIOS = (SCENARIO_FORALL_AP_OBSTRUCTION, SCENARIO_FORALL_AP_WITNESSES)
# with m = 1 the image of b is primitive
_NONPRIMITIVE_SCENARIOS = (SCENARIO_EXAMPLE_3_1, SCENARIO_RANK_3_WITNESS)
_DEFAULT_M = {
    SCENARIO_EXAMPLE_3_1: 2,
    SCENARIO_RANK_3_WITNESS: 2,
    SCENARIO_FORALL_AP_OBSTRUCTION: 2,
    SCENARIO_FORALL_AP_WITNESSES: 2,
    SCENARIO_PRIMITIVE_TOWER: 2,
}
_DEFAULT_Q = {
    SCENARIO_FORALL_AP_OBSTRUCTION: 2,
    SCENARIO_FORALL_AP_WITNESSES: 2,
}


@dataclass(frozen=True)
class ScenarioParams:
    scenario: str
    n: int = 1
    m: Optional[int] = None
    p: int = 1
    q: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    max_len: int = DEFAULT_MAX_LEN

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ScenarioParams":
        try:
            return cls(**SCENARIO_SCHEMA(data))
        except vol.Invalid as e:
            raise PreconditionError(f"invalid scenario parameters: {e}") from None

    def resolve(self, config: WorkbenchConfig) -> "ScenarioParams":
        """Fill per-scenario defaults and enforce the parameter constraints."""
        m = self.m if self.m is not None else _DEFAULT_M.get(self.scenario, 1)
        q = self.q if self.q is not None else _DEFAULT_Q.get(self.scenario, 1)
        if self.scenario in _EVEN_SCENARIOS and (m % 2 or q % 2):
            raise PreconditionError(f"{self.scenario} needs even m and q, got m={m}, q={q}")
        if self.scenario in _NONPRIMITIVE_SCENARIOS and m < 2:
            raise PreconditionError(f"{self.scenario} needs m >= 2, got m={m}")
        if self.scenario == SCENARIO_PRIMITIVE_TOWER and self.n > len(PRIMITIVE_CANDIDATES):
            raise PreconditionError(
                f"{self.scenario} supports at most {len(PRIMITIVE_CANDIDATES)} primitive elements"
            )
        return replace(
            self,
            m=m,
            q=q,
            trials=self.trials if self.trials is not None else config.trials,
            seed=self.seed if self.seed is not None else config.seed,
        )

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"

    def as_dict(self) -> dict[str, Any]:
        return dict(name=self.name, passed=self.passed, detail=self.detail)


@dataclass
class ScenarioReport:
    params: ScenarioParams
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        p = self.params
        lines = [f"{p.scenario} (n={p.n}, m={p.m}, p={p.p}, q={p.q}, seed={p.seed})"]
        lines.extend(f"  {c}" for c in self.checks)
        lines.append("  passed" if self.passed else "  FAILED")
        return "\n".join(lines)

    def as_dict(self) -> dict[str, Any]:
        return dict(
            scenario=self.params.scenario,
            params=self.params.as_dict(),
            seed=self.params.seed,
            checks=[c.as_dict() for c in self.checks],
            passed=self.passed,
        )


Check = Callable[[ScenarioParams, WorkbenchConfig], tuple[bool, str]]


# ---------------------------------------------------------------------------
# rank-4 example: L = F(a, b) inside L_2 = <a, b, x, t | [u, t] = 1>

_L2_BASE = Alphabet.of("a", "b", "x")
_M = Alphabet.of("a", "h", "b~", "x~")
_M3 = Alphabet.of("h", "b~", "x~")


def _x_square_image(n: int, m: int) -> str:
    return f"x~^2 (b~ x~^{2 * n})^{m} h^-{m}"


def _b_image(n: int, m: int) -> str:
    return f"h ({_x_square_image(n, m)})^-{n}"


@lru_cache(maxsize=16)
def _l2(n: int, m: int) -> towers.TowerSpec:
    u = parse_word(f"x^2 (b x^{2 * n})^{m}", _L2_BASE)
    return towers.centralizer_tower(["a", "b"], ["x"], [("t", u)])


def _l2_images(n: int, m: int) -> dict[str, towers.TowerWord]:
    spec = _l2(n, m)
    images = towers.amalgam_images(spec, "t", ["b", "x"])
    return {
        "a": towers.letter(spec, "a"),
        "h": parse_tower_word(f"b x^{2 * n}", spec),
        "b~": images["b"],
        "x~": images["x"],
    }


def _check_basis(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    n, m = params.n, params.m
    texts = ["a", f"b x^{2 * n}", f"x^2 (b x^{2 * n})^{m}"]
    g1 = stallings.build(parse_generating_set(["a", "b", "x^2"], _L2_BASE))
    g2 = stallings.build(parse_generating_set(texts, _L2_BASE))
    ranks = (stallings.rank(g1), stallings.rank(g2))
    ok = stallings.equal(g1, g2) and ranks == (3, 3)
    return ok, f"<a, b, x^2> = <{', '.join(texts)}>, ranks {ranks}"


def _check_commuting_relator(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    spec = _l2(params.n, params.m)
    ext = spec.extensions[0]
    u = towers.tower_word(spec, ext.u)
    ut = towers.conjugate(u, towers.letter(spec, ext.stable))
    return towers.equal(u, ut), f"u = u^t for u = {ext.u}"


def _check_b_image(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    n, m = params.n, params.m
    spec = _l2(n, m)
    images = _l2_images(n, m)
    b = towers.substitute(images, parse_word(_b_image(n, m), _M))
    x2 = towers.substitute(images, parse_word(_x_square_image(n, m), _M))
    ok = towers.equal(b, towers.letter(spec, "b")) and towers.equal(
        x2, parse_tower_word("x^2", spec)
    )
    return ok, f"b = {_b_image(n, m)} and x^2 = {_x_square_image(n, m)} in L_2"


def _check_rank_4_primitivity(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    limit = config.decision_plateau_limit
    b = parse_word(_b_image(params.n, params.m), _M)
    b_primitive = is_primitive(b, limit)
    h_primitive = is_primitive(generator(_M, "h"), limit)
    return (
        not b_primitive and h_primitive,
        f"image of b primitive: {b_primitive}; h primitive: {h_primitive}",
    )


def _check_free_factor(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    limit = config.decision_plateau_limit
    a = generator(_M, "a")
    b = parse_word(_b_image(params.n, params.m), _M)
    l_factor = is_free_factor_of([a, b], limit)
    h_factor = is_free_factor_of([a, generator(_M, "h")], limit)
    return (
        not l_factor and h_factor,
        f"<a, image of b> free factor: {l_factor}; <a, h> free factor: {h_factor}",
    )


def _check_m_free(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    images = _l2_images(params.n, params.m)
    report = towers.check_injective_sample(
        [images[g] for g in _M.generators],
        trials=params.trials or config.trials,
        max_len=params.max_len,
        seed=params.seed if params.seed is not None else config.seed,
    )
    return report.passed, f"{report.sampled} sampled words in a, h, b~, x~, {len(report.failures)} collapse"


def _check_rank_3_witness(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    limit = config.decision_plateau_limit
    b = parse_word(_b_image(params.n, params.m), _M3)
    h_primitive = is_primitive(generator(_M3, "h"), limit)
    b_primitive = is_primitive(b, limit)
    return (
        h_primitive and not b_primitive,
        f"in F(h, b~, x~): h primitive: {h_primitive}; {b} primitive: {b_primitive}",
    )


# ---------------------------------------------------------------------------
# amalgamation obstruction


def _ap_equation(m: int, q: int) -> str:
    return f"?x^8 ?y^{m} ?z^-{m} = e1^7 e2^{q} e3^-{q}"


def _check_abelian_obstruction(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    result = abelian_obstruction(_ap_equation(params.m, params.q))
    detail = "; ".join(result.failing_rows) or "abelianized system solvable"
    return result.obstructed, detail


def _check_brute_force(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    result = brute_solve(
        _ap_equation(params.m, params.q), FORALL_AP_BRUTE_BOUND, search_budget=config.search_budget
    )
    return (
        not result.found,
        f"{result.visited} candidates up to total length {FORALL_AP_BRUTE_BOUND}, "
        f"solution: {result.solution}",
    )


def _check_two_coefficient_configs(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    configs = enumerate_configs(classify("c1 ?v^-1 c2 ?v = 1"))
    labels = [str(c) for c in configs]
    return labels == ["p1|p1"], f"configurations: {labels}"


def _check_three_coefficient_configs(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    eq = classify("c1 ?u^-1 c2 ?u ?v^-1 c3 ?v = 1")
    configs = enumerate_configs(eq)
    labels = [str(c) for c in configs]
    two = [c for c in configs if c.variable_count == 2]
    three_pairs = [
        c
        for c in configs
        if c.variable_count == 3
        and all(len(d) == 2 for d in c.discs)
        and len({frozenset(abs(x) for x in d) for d in c.discs}) == 3
    ]
    sound = all(euler_bound_holds(c, eq) for c in configs) and all(
        sum(1 for d in c.discs for x in d if abs(x) == v) == 2
        for c in configs
        for v in range(1, c.variable_count + 1)
    )
    ok = [str(c) for c in two] == ["p1|p2|p1p2"] and bool(three_pairs) and sound
    return ok, f"{len(configs)} configurations: {labels}"


_K = Alphabet.of("a", "k", "b'", "y'")


def _h_power_image(n: int, m: int) -> str:
    return f"x~^8 (b~ x~^{8 * n})^{m} h^-{m}"


def _k_power_image(p: int, q: int) -> str:
    return f"y'^7 (b' y'^{7 * p})^{q} k^-{q}"


@lru_cache(maxsize=16)
def _h_tower(n: int, m: int) -> towers.TowerSpec:
    u = parse_word(f"x^8 (b x^{8 * n})^{m}", _L2_BASE)
    return towers.centralizer_tower(["a", "b"], ["x"], [("t", u)])


@lru_cache(maxsize=16)
def _k_tower(p: int, q: int) -> towers.TowerSpec:
    u = parse_word(f"y^7 (b y^{7 * p})^{q}", Alphabet.of("a", "b", "y"))
    return towers.centralizer_tower(["a", "b"], ["y"], [("s", u)])


def _check_h_embedding(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    n, m = params.n, params.m
    spec = _h_tower(n, m)
    conj = towers.amalgam_images(spec, "t", ["b", "x"])
    images = {
        "a": towers.letter(spec, "a"),
        "h": parse_tower_word(f"b x^{8 * n}", spec),
        "b~": conj["b"],
        "x~": conj["x"],
    }
    text = f"h ({_h_power_image(n, m)})^-{n}"
    b = towers.substitute(images, parse_word(text, _M))
    return towers.equal(b, towers.letter(spec, "b")), f"b = {text} under h -> b x^{8 * n}, b~ -> b^t, x~ -> x^t"


def _check_k_embedding(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    p, q = params.p, params.q
    spec = _k_tower(p, q)
    conj = towers.amalgam_images(spec, "s", ["b", "y"])
    images = {
        "a": towers.letter(spec, "a"),
        "k": parse_tower_word(f"b y^{7 * p}", spec),
        "b'": conj["b"],
        "y'": conj["y"],
    }
    text = f"k ({_k_power_image(p, q)})^-{p}"
    b = towers.substitute(images, parse_word(text, _K))
    return towers.equal(b, towers.letter(spec, "b")), f"b = {text} under k -> b y^{7 * p}, b' -> b^s, y' -> y^s"


def _check_ap_not_primitive(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    limit = config.decision_plateau_limit
    in_h = is_primitive(parse_word(f"h ({_h_power_image(params.n, params.m)})^-{params.n}", _M), limit)
    in_k = is_primitive(parse_word(f"k ({_k_power_image(params.p, params.q)})^-{params.p}", _K), limit)
    return not in_h and not in_k, f"image of b primitive in H: {in_h}, in K: {in_k}"


def _check_no_proper_powers(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    words = [parse_word(_h_power_image(params.n, params.m), _M)]
    words += [generator(_M, g) for g in ("h", "x~", "b~")]
    words += [parse_word(_k_power_image(params.p, params.q), _K)]
    words += [generator(_K, g) for g in ("k", "y'", "b'")]
    powers = [str(w) for w in words if is_proper_power(w)]
    return not powers, f"proper powers among {len(words)} words: {powers}"


def _commuting_pairs(words: list[Word]) -> list[str]:
    out = []
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            if commutes_with_conjugate(u, v).conjugate:
                out.append(f"({u}, {v})")
    return out


def _check_no_conjugate_commuting(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    s1 = parse_generating_set(["h", "x~", f"b~ x~^{8 * params.n}"], _M)
    s2 = parse_generating_set(["k", "y'", f"b' y'^{7 * params.p}"], _K)
    pairs = _commuting_pairs(s1) + _commuting_pairs(s2)
    return not pairs, f"pairs commuting with a conjugate: {pairs}"


# ---------------------------------------------------------------------------
# two extensions of <b, x>

_H3 = Alphabet.of("h", "b~", "x~")
_K3 = Alphabet.of("k", "b'", "x'")


@lru_cache(maxsize=64)
def _strong_tower(n: int, m: int, p: int, q: int) -> towers.TowerSpec:
    base = Alphabet.of("b", "x")
    u1 = parse_word(f"x^2 (b x^{2 * n})^{m}", base)
    u2 = parse_word(f"x^4 (b x^{4 * p})^{q}", base)
    return towers.centralizer_tower(["b", "x"], (), [("t1", u1), ("t2", u2)])


def _identities(
    spec: towers.TowerSpec, images: dict[str, towers.TowerWord], alphabet: Alphabet, pairs: list[tuple[str, str]]
) -> list[str]:
    failed = []
    for lhs, rhs in pairs:
        value = towers.substitute(images, parse_word(rhs, alphabet))
        if not towers.equal(value, parse_tower_word(lhs, spec)):
            failed.append(f"{lhs} = {rhs}")
    return failed


def _check_strong_h(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    n, m = params.n, params.m
    spec = _strong_tower(n, m, params.p, params.q)
    conj = towers.amalgam_images(spec, "t1", ["b", "x"])
    images = {"h": parse_tower_word(f"b x^{2 * n}", spec), "b~": conj["b"], "x~": conj["x"]}
    x2 = _x_square_image(n, m)
    failed = _identities(spec, images, _H3, [("b", _b_image(n, m)), ("x^4", f"({x2})^2")])
    return not failed, f"identities in H: failed {failed}"


def _check_strong_k(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    p, q = params.p, params.q
    spec = _strong_tower(params.n, params.m, p, q)
    conj = towers.amalgam_images(spec, "t2", ["b", "x"])
    images = {"k": parse_tower_word(f"b x^{4 * p}", spec), "b'": conj["b"], "x'": conj["x"]}
    x4 = f"x'^4 (b' x'^{4 * p})^{q} k^-{q}"
    failed = _identities(spec, images, _K3, [("b", f"k ({x4})^-{p}"), ("x^4", x4)])
    return not failed, f"identities in K: failed {failed}"


def _check_not_square(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    q = params.q
    w = parse_word(f"x'^4 (b' x'^{4 * params.p})^{q} k^-{q}", _K3)
    if q % 2:
        k_sum = exponent_sum(w, "k")
        return k_sum % 2 == 1, f"{w}: exponent sum of k is {k_sum}"
    r = root(w)
    return r.power % 2 == 1, f"{w} = ({r.root})^{r.power}"


# ---------------------------------------------------------------------------
# towers over primitive elements

_L = Alphabet.of("a", "b")


def _primitive_tower(n: int) -> towers.TowerSpec:
    return towers.build_primitive_tower(_L, parse_generating_set(PRIMITIVE_CANDIDATES[:n], _L))


def _check_primitive_relators(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    spec = _primitive_tower(params.n)
    bad = []
    for ext in spec.extensions:
        c = towers.tower_word(spec, ext.u)
        if not towers.is_trivial(towers.commutator(c, towers.letter(spec, ext.stable))):
            bad.append(ext.stable)
    roots = ", ".join(f"[{ext.u}, {ext.stable}]" for ext in spec.extensions)
    return not bad, f"relators {roots} trivial; failing: {bad}"


def _check_primitive_embedding(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    spec = _primitive_tower(params.n)
    stable = spec.extensions[0].stable
    g = generator(_L, "b")
    images = [towers.letter(spec, "a"), towers.letter(spec, "b")]
    images += towers.embed_free_product(spec, params.m or 1, g, stable)
    report = towers.check_injective_sample(
        images,
        trials=params.trials or config.trials,
        max_len=params.max_len,
        seed=params.seed if params.seed is not None else config.seed,
    )
    return (
        report.passed,
        f"F(a, b) * F_{params.m} via x_i -> {stable}^i b {stable}^i b {stable}^i: "
        f"{report.sampled} sampled, {len(report.failures)} collapse",
    )


# ---------------------------------------------------------------------------
# abelian invariants


def _check_alpha(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    z = TFAbelianGroup(1)
    values = {alpha_p(z, p) for p in primerange(2, SZMIELEW_MAX_PRIME + 1)}
    return values == {1}, f"alpha_p(Z) for p <= {SZMIELEW_MAX_PRIME}: {sorted(values)}"


def _check_equivalence(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    z, zq, z2 = TFAbelianGroup(1), TFAbelianGroup(1, 1), TFAbelianGroup(2)
    same, differ = elem_equiv(z, zq), elem_equiv(z, z2)
    return same and not differ, f"Z ~ Z + Q: {same}; Z ~ Z^2: {differ}"


def _check_small_dim(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    zq = small_dim_sentence_holds(TFAbelianGroup(1, 1), 2)
    z2 = small_dim_sentence_holds(TFAbelianGroup(2), 2)
    return zq and not z2, f"sentence for p=2 holds in Z + Q: {zq}, in Z^2: {z2}"


def _check_chain(params: ScenarioParams, config: WorkbenchConfig) -> tuple[bool, str]:
    report = chain_demo(SZMIELEW_CHAIN_BOUND)
    return report.passed, f"ranks {report.ranks}, ascending {all(report.ascending)}"


SCENARIO_CHECKS: dict[str, list[tuple[str, Check]]] = {
    SCENARIO_EXAMPLE_3_1: [
        ("subgroup-basis", _check_basis),
        ("commuting-relator", _check_commuting_relator),
        ("b-image", _check_b_image),
        ("primitivity", _check_rank_4_primitivity),
        ("free-factor", _check_free_factor),
        ("m-free-sample", _check_m_free),
    ],
    SCENARIO_RANK_3_WITNESS: [
        ("primitivity-pair", _check_rank_3_witness),
    ],
    SCENARIO_FORALL_AP_OBSTRUCTION: [
        ("abelian-obstruction", _check_abelian_obstruction),
        ("brute-force", _check_brute_force),
        ("configs-two-coefficients", _check_two_coefficient_configs),
        ("configs-three-coefficients", _check_three_coefficient_configs),
    ],
    SCENARIO_FORALL_AP_WITNESSES: [
        ("h-embedding", _check_h_embedding),
        ("k-embedding", _check_k_embedding),
        ("b-not-primitive", _check_ap_not_primitive),
        ("no-proper-powers", _check_no_proper_powers),
        ("no-conjugate-commuting", _check_no_conjugate_commuting),
    ],
    SCENARIO_STRONG_AP: [
        ("h-identities", _check_strong_h),
        ("k-identities", _check_strong_k),
        ("not-a-square", _check_not_square),
    ],
    SCENARIO_PRIMITIVE_TOWER: [
        ("relators", _check_primitive_relators),
        ("free-product-embedding", _check_primitive_embedding),
    ],
    SCENARIO_SZMIELEW: [
        ("alpha", _check_alpha),
        ("elementary-equivalence", _check_equivalence),
        ("small-dimension-sentence", _check_small_dim),
        ("chain", _check_chain),
    ],
}


def _run_check(name: str, check: Check, params: ScenarioParams, config: WorkbenchConfig) -> CheckResult:
    try:
        passed, detail = check(params, config)
    except WorkbenchError as e:
        _LOGGER.warning(f"{params.scenario}/{name} raised {type(e).__name__}: {e}")
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    _LOGGER.info(f"{params.scenario}/{name}: {'pass' if passed else 'FAIL'}")
    return CheckResult(name, bool(passed), detail)


def run_scenario(
    params: ScenarioParams, config: Optional[WorkbenchConfig] = None, parallel: bool = False
) -> ScenarioReport:
    config = config or WorkbenchConfig()
    params = params.resolve(config)
    checks = SCENARIO_CHECKS[params.scenario]
    _LOGGER.info(f"running {params.scenario} with {len(checks)} checks (seed {params.seed})")
    if parallel and len(checks) > 1:
        with ProcessPoolExecutor() as pool:
            futures = [pool.submit(_run_check, name, fn, params, config) for name, fn in checks]
            results = [f.result() for f in futures]
    else:
        results = [_run_check(name, fn, params, config) for name, fn in checks]
    return ScenarioReport(params, results)


def paper_verify(
    params: ScenarioParams, config: Optional[WorkbenchConfig] = None, parallel: bool = False
) -> ScenarioReport:
    return run_scenario(params, config, parallel)


def load_run_list(path: str) -> list[ScenarioParams]:
    data = load_yaml(path)
    try:
        entries = SCENARIO_LIST_SCHEMA(data)
    except vol.Invalid as e:
        raise PreconditionError(f"{path}: invalid scenario list: {e}") from None
    return [ScenarioParams(**entry) for entry in entries]


def verify_file(
    path: str, config: Optional[WorkbenchConfig] = None, parallel: bool = False
) -> list[ScenarioReport]:
    return [run_scenario(params, config, parallel) for params in load_run_list(path)]
