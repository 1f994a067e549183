"""The `fg` command line.

Every subcommand returns an Output; the driver prints either its text or its
JSON rendering and maps exceptions onto exit codes.
"""

import argparse
from collections.abc import Sequence
import logging
import sys
from typing import Any, NamedTuple, Optional

from sympy import Rational, SympifyError

from . import abelian, quadratic, stallings, towers, whitehead, words
from .config import WorkbenchConfig, load_config, setup_logging
from .const import (
    DEFAULT_MAX_LEN,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_SYNTAX_ERROR,
    IMPOSS_MIN_M,
    SCENARIOS,
)
from .exceptions import DomainError, GrammarError, LemmaViolation, PreconditionError
from .parse_io import (
    parse_abelian_group,
    parse_equation,
    parse_generating_set,
    parse_tower,
    parse_tower_word,
    print_json,
    print_tower,
)
from .scenarios import SCENARIO_CHECKS, ScenarioParams, paper_verify, verify_file

_LOGGER = logging.getLogger(__name__)


class Output(NamedTuple):
    value: Any
    text: str
    ok: bool = True


def _alphabet(args: argparse.Namespace) -> Optional[words.Alphabet]:
    return words.Alphabet.from_string(args.alphabet) if args.alphabet else None


def _words(args: argparse.Namespace, texts: Sequence[str]) -> list[words.Word]:
    return parse_generating_set(texts, _alphabet(args))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise DomainError(f"{path}: {e.strerror}") from None


# ---------------------------------------------------------------------------
# words


def cmd_word(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    ws = _words(args, args.words)
    u = ws[0]
    if args.action == "reduce":
        return Output(u, str(u))
    if args.action == "cyclic":
        cw = words.cyclic_reduce(u)
        value = dict(core=str(cw.core), conjugator=str(cw.conjugator))
        return Output(value, f"core {cw.core}, conjugator {cw.conjugator}")
    if args.action == "root":
        r = words.root(u)
        return Output(r, f"({r.root})^{r.power}")
    if len(ws) != 2:
        raise PreconditionError(f"'word {args.action}' needs two words")
    v = ws[1]
    if args.action == "conjugate":
        found, g = words.is_conjugate(u, v)
    else:
        found, g = words.commutes_with_conjugate(u, v)
    value = dict(result=found, witness=str(g) if g is not None else None)
    return Output(value, f"{found}" + (f" (witness {g})" if found else ""))


# ---------------------------------------------------------------------------
# subgroups and automorphisms


def cmd_subgroup(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    texts = list(args.generators) + list(args.other or []) + ([args.word] if args.word else [])
    ws = _words(args, texts)
    gens, rest = ws[: len(args.generators)], ws[len(args.generators) :]
    g = stallings.build(gens)
    if args.action == "basis":
        b = stallings.basis(g)
        return Output(b, ", ".join(str(w) for w in b) or "1")
    if args.action == "rank":
        r = stallings.rank(g)
        return Output(dict(rank=r), str(r))
    if args.action == "graph":
        return Output(g, print_json(g))
    if args.action == "member":
        if not args.word:
            raise PreconditionError("'subgroup member' needs a word")
        found = stallings.member(g, rest[-1])
        return Output(dict(result=found), str(found))
    other = rest[: len(args.other or [])]
    if not other:
        raise PreconditionError(f"'subgroup {args.action}' needs a second generating set (-o)")
    h = stallings.build(other, g.alphabet)
    result = stallings.equal(g, h) if args.action == "equal" else stallings.are_conjugate(g, h)
    return Output(dict(result=result), str(result))


def cmd_primitive(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    (u,) = _words(args, [args.word])
    found = whitehead.is_primitive(u, config.decision_plateau_limit)
    return Output(dict(primitive=found), str(found))


def cmd_free_factor(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    found = whitehead.is_free_factor_of(_words(args, args.generators), config.decision_plateau_limit)
    return Output(dict(free_factor=found), str(found))


def cmd_whitehead(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    (u,) = _words(args, [args.word])
    result = whitehead.minimize(u, config.plateau_limit)
    moves = "; ".join(str(m) for m in result.moves) or "none"
    return Output(result, f"minimal length {result.min_length}: {result.word}\nmoves: {moves}")


# ---------------------------------------------------------------------------
# towers


def _embedding(args: argparse.Namespace, spec: towers.TowerSpec) -> list[towers.TowerWord]:
    if not args.g:
        raise PreconditionError(f"'tower {args.action}' needs --g WORD")
    g = parse_tower_word(args.g, spec).word
    return towers.embed_free_product(spec, args.count, g, args.stable)


def cmd_tower(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    spec = parse_tower(_read(args.file))
    if args.action == "validate":
        return Output(spec, print_tower(spec).rstrip())
    if args.action == "wp":
        if not args.word:
            raise PreconditionError("'tower wp' needs a word")
        w = parse_tower_word(args.word, spec)
        return Output(w, f"{w} ({'trivial' if w.is_identity else 'nontrivial'})")
    images = _embedding(args, spec)
    if args.action == "embed":
        value = {f"x{i}": str(w) for i, w in enumerate(images, start=1)}
        return Output(value, "\n".join(f"{k} -> {v}" for k, v in value.items()))
    base = [towers.letter(spec, g) for g in spec.free_letters]
    report = towers.check_injective_sample(
        base + images,
        trials=args.trials or config.trials,
        max_len=args.max_len,
        seed=args.seed if args.seed is not None else config.seed,
    )
    text = (
        f"{report.sampled} words sampled (seed {report.seed}), "
        f"{len(report.failures)} trivial images"
    )
    return Output(report, text, report.passed)


# ---------------------------------------------------------------------------
# equations


def cmd_quad(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    coefficients = _alphabet(args)
    if args.action == "abelian":
        result = quadratic.abelian_obstruction(args.equation, coefficients)
        if result.obstructed:
            return Output(result, "obstructed\n" + "\n".join(result.failing_rows))
        return Output(result, f"solvable-abelianized, witness {result.witness}")
    if args.action == "solve":
        solved = quadratic.brute_solve(
            args.equation, args.bound, coefficients, search_budget=config.search_budget
        )
        if solved.solution is None:
            return Output(solved, f"none-within-bound {args.bound} ({solved.visited} candidates)")
        return Output(solved, ", ".join(f"{k} = {w}" for k, w in solved.solution.items()))
    eq = quadratic.classify(parse_equation(args.equation, coefficients))
    if args.action == "classify":
        kind = "orientable" if eq.orientable else "non-orientable"
        return Output(eq, f"{kind}, genus {eq.genus}, m_coef {eq.m_coef}, chi {eq.chi_bar}")
    if args.action == "nbound":
        n = quadratic.n_bound(eq)
        return Output(dict(n_bound=n), str(n))
    configs = quadratic.enumerate_configs(eq)
    return Output(configs, "\n".join(str(c) for c in configs))


def _sweep_output(report: quadratic.SweepReport, what: str) -> Output:
    text = (
        f"{what}: {report.checked} triples, {report.premise_met} meet the premise, "
        f"{len(report.failures)} counterexamples"
    )
    return Output(report, text, report.passed)


def cmd_ls_check(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    if args.sweep:
        return _sweep_output(quadratic.ls_sweep(args.max_len, args.max_power, _alphabet(args)), "periodicity")
    if len(args.args) != 5:
        raise PreconditionError("ls-check needs u v w n1 n2 (or --sweep)")
    u, v, w = _words(args, args.args[:3])
    try:
        n1, n2 = int(args.args[3]), int(args.args[4])
    except ValueError:
        raise GrammarError("n1 and n2 must be integers") from None
    result = quadratic.ls_check(u, v, w, n1, n2)
    if not result.premise_met:
        return Output(result, "premise-not-met")
    return Output(result, f"u = ({result.a1})^{result.k1}, v = ({result.a2})^{result.k2}")


def cmd_imposs_check(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    if args.sweep:
        report = quadratic.imposs_sweep(args.max_len, args.m, alphabet=_alphabet(args))
        return _sweep_output(report, "collapse")
    if len(args.words) != 3:
        raise PreconditionError("imposs-check needs a b c (or --sweep)")
    a, b, c = _words(args, args.words)
    result = quadratic.imposs_check(a, b, c, args.m, args.j)
    if not result.premise_met:
        return Output(result, "premise-not-met")
    x, y = result.pair or ("", "")
    return Output(result, f"{x} commutes with a conjugate of {y} (conjugator {result.witness})")


# ---------------------------------------------------------------------------
# abelian groups


def _element(text: str) -> tuple[Rational, ...]:
    try:
        return tuple(Rational(part.strip()) for part in text.split(","))
    except (TypeError, ValueError, SyntaxError, SympifyError):
        raise GrammarError(f"cannot parse element {text!r}", 0) from None


def cmd_abelian(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    if args.action == "alpha":
        a = abelian.TFAbelianGroup(args.n, args.m)
        value = abelian.alpha_p(a, args.p)
        return Output(dict(group=str(a), p=args.p, alpha=value), str(value))
    if args.action == "szmielew":
        a = parse_abelian_group(args.groups[0])
        return Output(abelian.szmielew(a), f"alpha_p({a}) = {abelian.szmielew(a).value} for all p")
    if args.action == "equiv":
        if len(args.groups) != 2:
            raise PreconditionError("'abelian equiv' needs two groups")
        a, b = (parse_abelian_group(t) for t in args.groups)
        same = abelian.elem_equiv(a, b)
        return Output(dict(result=same), str(same))
    if args.action == "sentence":
        sentence = abelian.small_dim_sentence(args.p)
        if not args.groups:
            return Output(sentence, str(sentence))
        a = parse_abelian_group(args.groups[0])
        holds = abelian.small_dim_sentence_holds(a, args.p)
        return Output(dict(sentence=str(sentence), group=str(a), holds=holds), str(holds))
    if args.action == "fgsub":
        r = abelian.fg_subgroup_rank([_element(g) for g in args.generators or []])
        return Output(dict(rank=r), str(r))
    report = abelian.chain_demo(args.bound)
    return Output(report, f"ranks {report.ranks}, ascending {all(report.ascending)}", report.passed)


# ---------------------------------------------------------------------------
# scenarios


def cmd_paper(args: argparse.Namespace, config: WorkbenchConfig) -> Output:
    if args.action == "list":
        value = {s: [name for name, _ in SCENARIO_CHECKS[s]] for s in SCENARIOS}
        return Output(value, "\n".join(f"{s}: {', '.join(c)}" for s, c in value.items()))
    if args.file:
        reports = verify_file(args.file, config, args.parallel)
    else:
        if not args.scenario:
            raise PreconditionError("'paper verify' needs a scenario id or --file")
        params = ScenarioParams.from_dict(
            {
                k: v
                for k, v in dict(
                    scenario=args.scenario,
                    n=args.n,
                    m=args.m,
                    p=args.p,
                    q=args.q,
                    trials=args.trials,
                    seed=args.seed,
                    max_len=args.max_len,
                ).items()
                if v is not None
            }
        )
        reports = [paper_verify(params, config, args.parallel)]
    ok = all(r.passed for r in reports)
    value: Any = reports[0] if len(reports) == 1 else reports
    return Output(value, "\n".join(str(r) for r in reports), ok)


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand.

    Call once per parser: shared actions would carry the top-level defaults
    into the subparsers.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="sampling seed")
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS, help="sampling trials")
    common.add_argument("--config", default=argparse.SUPPRESS, help="workbench configuration file")
    common.add_argument("--alphabet", default=argparse.SUPPRESS, help="generator order, e.g. 'a b x'")
    common.add_argument("--parallel", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fg", description="Free groups, centralizer extensions and their invariants", parents=[_common()]
    )
    parser.set_defaults(
        json=False, seed=None, trials=None, config=None, alphabet=None, parallel=False, verbose=False
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[_common()], help="reduced words")
    p.add_argument("action", choices=["reduce", "cyclic", "root", "conjugate", "commutes"])
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("subgroup", parents=[_common()], help="Stallings graphs")
    p.add_argument("action", choices=["basis", "member", "equal", "rank", "conjugate", "graph"])
    p.add_argument("word", nargs="?")
    p.add_argument("-g", dest="generators", action="append", required=True, metavar="WORD")
    p.add_argument("-o", dest="other", action="append", metavar="WORD", help="second generating set")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("primitive", parents=[_common()], help="primitivity test")
    p.add_argument("word")
    p.set_defaults(func=cmd_primitive)

    p = sub.add_parser("free-factor", parents=[_common()], help="free factor test")
    p.add_argument("-g", dest="generators", action="append", required=True, metavar="WORD")
    p.set_defaults(func=cmd_free_factor)

    p = sub.add_parser("whitehead", parents=[_common()], help="Whitehead minimization")
    p.add_argument("action", choices=["minimize"])
    p.add_argument("word")
    p.set_defaults(func=cmd_whitehead)

    p = sub.add_parser("tower", parents=[_common()], help="centralizer extension towers")
    p.add_argument("action", choices=["validate", "wp", "embed", "inject-test"])
    p.add_argument("file")
    p.add_argument("word", nargs="?")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--g", help="word outside the centralizer")
    p.add_argument("--stable")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("quad", parents=[_common()], help="quadratic equations")
    p.add_argument("action", choices=["classify", "nbound", "configs", "abelian", "solve"])
    p.add_argument("equation")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("ls-check", parents=[_common()], help="periodicity lemma")
    p.add_argument("args", nargs="*", metavar="u v w n1 n2")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--max-power", type=int, default=4)
    p.set_defaults(func=cmd_ls_check)

    p = sub.add_parser("imposs-check", parents=[_common()], help="collapse lemma")
    p.add_argument("words", nargs="*", metavar="a b c")
    p.add_argument("--m", type=int, default=IMPOSS_MIN_M)
    p.add_argument("--j", type=int, default=7)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max-len", type=int, default=3)
    p.set_defaults(func=cmd_imposs_check)

    p = sub.add_parser("abelian", parents=[_common()], help="torsion-free abelian groups")
    p.add_argument("action", choices=["alpha", "szmielew", "equiv", "sentence", "fgsub", "chain-demo"])
    p.add_argument("groups", nargs="*", metavar="GROUP", help="e.g. 'Z^2 + Q'")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("-g", dest="generators", action="append", metavar="Z,Q")
    p.add_argument("--bound", type=int, default=5)
    p.set_defaults(func=cmd_abelian)

    p = sub.add_parser("paper", parents=[_common()], help="verification scenarios")
    p.add_argument("action", choices=["verify", "list"])
    p.add_argument("scenario", nargs="?", choices=SCENARIOS)
    p.add_argument("--file")
    for name in ("n", "m", "p", "q"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except DomainError as e:
        _LOGGER.error(f"{e}")
        return EXIT_DOMAIN_ERROR
    setup_logging(config, args.verbose)

    try:
        out = args.func(args, config)
    except GrammarError as e:
        _LOGGER.error(f"{args.command}: {e}")
        return EXIT_SYNTAX_ERROR
    except (DomainError, LemmaViolation) as e:
        _LOGGER.error(f"{args.command} failed: {type(e).__name__}: {e}")
        return EXIT_DOMAIN_ERROR

    print(print_json(out.value) if args.json else out.text)
    return EXIT_OK if out.ok else EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
