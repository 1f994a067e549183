"""
Text grammar for words, generating sets, towers and equations, and the JSON
output shapes of every public result.

Word grammar::

    word := term+            (or the single token '1' for the identity)
    term := atom ['^' integer]
    atom := NAME | '(' word ')'
    NAME := [A-Za-z][A-Za-z0-9~']*       (b~, x', t1, ...)

Equations prefix variable names with '?' and are written ``lhs = rhs``.

Tower files are line oriented::

    # comment
    base: a b
    free: x
    ext: t u=x^2 (b x^2)^1
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
import json
import logging
import re
from typing import Any, Optional, Union

import voluptuous as vol

from .const import VARIABLE_PREFIX
from .exceptions import AlphabetError, DomainError, GrammarError, TowerError
from .words import Alphabet, Root, Word, identity, reduce

_LOGGER = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<var>\?[A-Za-z][A-Za-z0-9~']*)
  | (?P<name>[A-Za-z][A-Za-z0-9~']*)
  | (?P<int>-?\d+)
  | (?P<op>[()^=])
    """,
    re.VERBOSE,
)

KIND_WORD = "word"
KIND_GENERATING_SET = "generating-set"
KIND_TOWER = "tower"
KIND_EQUATION = "equation"
KIND_ABELIAN_GROUP = "abelian-group"

WORD_SCHEMA = vol.Schema({vol.Required("word"): str})
GENERATING_SET_SCHEMA = vol.Schema(
    {vol.Required("alphabet"): [str], vol.Required("generators"): [str]}
)
TOWER_SCHEMA = vol.Schema(
    {
        vol.Required("base"): vol.All([str], vol.Length(min=1)),
        vol.Required("steps"): [
            vol.Any(
                {vol.Required("free"): vol.All([str], vol.Length(min=1))},
                {vol.Required("ext"): str, vol.Required("u"): str},
            )
        ],
    }
)
EQUATION_SCHEMA = vol.Schema(
    {vol.Required("equation"): str, vol.Optional("coefficients", default=list): [str]}
)
ABELIAN_GROUP_SCHEMA = vol.Schema(
    {
        vol.Required("z_rank"): vol.All(int, vol.Range(min=0)),
        vol.Required("q_rank"): vol.All(int, vol.Range(min=0)),
    }
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int) -> None:
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self) -> str:
        return f"{self.kind}:{self.text}@{self.pos}"


def _tokenize(text: str, offset: int = 0) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise GrammarError(f"unexpected character {text[pos]!r}", offset + pos)
        kind = m.lastgroup
        if kind != "space":
            tokens.append(_Token(kind, m.group(), offset + pos))
        pos = m.end()
    return tokens


class _WordParser:
    """Recursive descent over the token list; produces raw (name, sign) letters."""

    def __init__(self, tokens: list[_Token], allow_variables: bool, end: int) -> None:
        self.tokens = tokens
        self.allow_variables = allow_variables
        self.i = 0
        self.end = end

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise GrammarError("unexpected end of input", self.end)
        self.i += 1
        return tok

    def parse(self) -> list[tuple[str, int]]:
        if self.peek() is None:
            return []
        letters = self.word()
        tok = self.peek()
        if tok is not None:
            raise GrammarError(f"unexpected {tok.text!r}", tok.pos)
        return letters

    def word(self) -> list[tuple[str, int]]:
        letters: list[tuple[str, int]] = []
        terms = 0
        while True:
            tok = self.peek()
            if tok is None or (tok.kind == "op" and tok.text in ")="):
                break
            letters.extend(self.term())
            terms += 1
        if not terms:
            tok = self.peek()
            raise GrammarError("expected a generator or '('", tok.pos if tok else self.end)
        return letters

    def term(self) -> list[tuple[str, int]]:
        body = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok.kind != "int":
                raise GrammarError("expected an integer exponent", exp_tok.pos)
            k = int(exp_tok.text)
            if k < 0:
                body = [(name, -sign) for name, sign in reversed(body)]
                k = -k
            body = body * k
        return body

    def atom(self) -> list[tuple[str, int]]:
        tok = self.take()
        if tok.kind == "name":
            return [(tok.text, 1)]
        if tok.kind == "var":
            if not self.allow_variables:
                raise GrammarError(f"variable {tok.text} not allowed here", tok.pos)
            return [(tok.text, 1)]
        if tok.kind == "int" and tok.text == "1":
            return []
        if tok.kind == "op" and tok.text == "(":
            inner = self.word()
            close = self.take()
            if close.kind != "op" or close.text != ")":
                raise GrammarError("expected ')'", close.pos)
            return inner
        raise GrammarError(f"unexpected {tok.text!r}", tok.pos)


def _parse_raw(
    text: str, allow_variables: bool = False, offset: int = 0
) -> list[tuple[str, int]]:
    tokens = _tokenize(text, offset)
    for tok in tokens:
        if tok.kind == "op" and tok.text == "=":
            raise GrammarError("'=' is only allowed in equations", tok.pos)
    return _WordParser(tokens, allow_variables, offset + len(text)).parse()


def _first_appearance(texts: Iterable[str]) -> list[str]:
    """Generator and variable names in the order they are written."""
    seen: dict[str, None] = {}
    for text in texts:
        for tok in _tokenize(text):
            if tok.kind in ("name", "var"):
                seen.setdefault(tok.text, None)
    return list(seen)


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Parse and freely reduce a word.  Without an alphabet, generators are
    taken in order of first appearance."""
    raw = _parse_raw(text)
    if alphabet is None:
        alphabet = Alphabet(tuple(_first_appearance([text])))
    return reduce(alphabet, raw)


def parse_generating_set(
    texts: Sequence[str], alphabet: Optional[Alphabet] = None
) -> list[Word]:
    raws = [_parse_raw(t) for t in texts]
    if alphabet is None:
        alphabet = Alphabet(tuple(_first_appearance(texts)))
    return [reduce(alphabet, raw) for raw in raws]


def print_word(w: Word) -> str:
    return str(w)


# ---------------------------------------------------------------------------
# equations


@dataclass(frozen=True)
class RawEquation:
    """An equation moved to the form word = 1 over variables + coefficients.

    Variable generators carry the '?' prefix inside the combined alphabet.
    """

    alphabet: Alphabet
    word: Word

    @cached_property
    def variables(self) -> tuple[str, ...]:
        return tuple(
            g[len(VARIABLE_PREFIX) :]
            for g in self.alphabet.generators
            if g.startswith(VARIABLE_PREFIX)
        )

    @cached_property
    def coefficient_alphabet(self) -> Alphabet:
        return Alphabet(
            tuple(g for g in self.alphabet.generators if not g.startswith(VARIABLE_PREFIX))
        )

    def is_variable(self, code: int) -> bool:
        return self.alphabet.name(code).startswith(VARIABLE_PREFIX)

    def as_dict(self) -> dict[str, Any]:
        return dict(
            equation=print_equation(self),
            coefficients=list(self.coefficient_alphabet.generators),
        )

    def __str__(self) -> str:
        return print_equation(self)


def parse_equation(text: str, coefficients: Optional[Alphabet] = None) -> RawEquation:
    parts = text.split("=")
    if len(parts) != 2:
        raise GrammarError("an equation needs exactly one '='", text.find("=") if "=" in text else len(text))
    lhs_text, rhs_text = parts
    lhs = _parse_raw(lhs_text, allow_variables=True)
    rhs = _parse_raw(rhs_text, allow_variables=True, offset=len(lhs_text) + 1)
    names = _first_appearance([lhs_text, rhs_text])
    variables = [n for n in names if n.startswith(VARIABLE_PREFIX)]
    coefs = [n for n in names if not n.startswith(VARIABLE_PREFIX)]
    if coefficients is not None:
        unknown = [c for c in coefs if c not in coefficients]
        if unknown:
            raise AlphabetError(f"unknown coefficient letters: {', '.join(unknown)}")
        coefs = list(coefficients.generators)
    alphabet = Alphabet(tuple(variables + coefs))
    raw = lhs + [(name, -sign) for name, sign in reversed(rhs)]
    word = reduce(alphabet, raw)
    _LOGGER.debug(f"parsed equation '{text}' as {word} = 1")
    return RawEquation(alphabet, word)


def print_equation(eq: RawEquation) -> str:
    return f"{eq.word} = 1"


# ---------------------------------------------------------------------------
# towers

_BASE_RE = re.compile(r"^base:\s*(?P<names>.*)$")
_FREE_RE = re.compile(r"^free:\s*(?P<names>.*)$")
_EXT_RE = re.compile(r"^ext:\s*(?P<stable>\S+)\s+u\s*=\s*(?P<word>.+)$")
_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9~']*$")


def _check_names(names: list[str], pos: int) -> list[str]:
    for n in names:
        if not _NAME_RE.match(n):
            raise GrammarError(f"invalid generator name {n!r}", pos)
    return names


def parse_tower(text: str):
    """Parse and validate a tower file (see module docstring)."""

    base: Optional[list[str]] = None
    raw_steps: list[tuple[str, Any, int]] = []
    offset = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        pos = offset
        offset += len(line) + 1
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if m := _BASE_RE.match(stripped):
            if base is not None:
                raise GrammarError(f"line {lineno}: duplicate 'base:' line", pos)
            base = _check_names(m.group("names").split(), pos)
            if not base:
                raise GrammarError(f"line {lineno}: empty base", pos)
        elif m := _FREE_RE.match(stripped):
            names = _check_names(m.group("names").split(), pos)
            if not names:
                raise GrammarError(f"line {lineno}: 'free:' needs letters", pos)
            raw_steps.append(("free", names, pos))
        elif m := _EXT_RE.match(stripped):
            stable = _check_names([m.group("stable")], pos)[0]
            raw_steps.append(("ext", (stable, m.group("word")), pos))
        else:
            raise GrammarError(f"line {lineno}: cannot parse {stripped!r}", pos)
        if base is None:
            raise GrammarError(f"line {lineno}: 'base:' must come first", pos)
    if base is None:
        raise GrammarError("missing 'base:' line", 0)

    return _build_tower(base, raw_steps)


def _build_tower(base: list[str], raw_steps: list[tuple[str, Any, int]]):
    from . import towers

    names = list(base)
    for kind, data, _ in raw_steps:
        names.extend(data if kind == "free" else [data[0]])
    try:
        full = Alphabet(tuple(names))
    except AlphabetError as e:
        raise TowerError(f"name clash: {e}") from None

    steps: list[towers.Step] = []
    for kind, data, pos in raw_steps:
        if kind == "free":
            steps.append(towers.FreeProduct(tuple(data)))
        else:
            stable, word_text = data
            u = reduce(full, _parse_raw(word_text, offset=pos))
            steps.append(towers.CentralizerExt(stable, u))
    return towers.validate(towers.TowerSpec(Alphabet(tuple(base)), tuple(steps)))


def print_tower(spec) -> str:
    from . import towers

    lines = [f"base: {spec.base}"]
    for step in spec.steps:
        if isinstance(step, towers.FreeProduct):
            lines.append(f"free: {' '.join(step.letters)}")
        else:
            lines.append(f"ext: {step.stable} u={step.u}")
    return "\n".join(lines) + "\n"


def parse_tower_word(text: str, spec):
    from . import towers

    return towers.tower_word(spec, reduce(spec.alphabet, _parse_raw(text)))


# ---------------------------------------------------------------------------
# JSON


def _jsonable(value: Any) -> Any:
    if isinstance(value, Root):
        return {"root": str(value.root), "power": value.power}
    if isinstance(value, Word):
        return {"word": str(value)}
    if hasattr(value, "as_dict"):
        return value.as_dict()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, Word) for v in value):
            return {
                "alphabet": list(value[0].alphabet.generators),
                "generators": [str(v) for v in value],
            }
        return [_jsonable(v) for v in value]
    return value


def print_json(value: Any) -> str:
    """Stable JSON rendering of any public result type."""
    return json.dumps(_jsonable(value))


def load_json(text: str, kind: str, alphabet: Optional[Alphabet] = None) -> Any:
    """Inverse of print_json for the parseable kinds."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GrammarError(f"invalid JSON: {e.msg}", e.pos) from None

    try:
        if kind == KIND_WORD:
            return parse_word(WORD_SCHEMA(data)["word"], alphabet)
        if kind == KIND_GENERATING_SET:
            data = GENERATING_SET_SCHEMA(data)
            return parse_generating_set(data["generators"], Alphabet(tuple(data["alphabet"])))
        if kind == KIND_TOWER:
            data = TOWER_SCHEMA(data)
            steps: list[tuple[str, Any, int]] = []
            for step in data["steps"]:
                if "free" in step:
                    steps.append(("free", step["free"], 0))
                else:
                    steps.append(("ext", (step["ext"], step["u"]), 0))
            return _build_tower(data["base"], steps)
        if kind == KIND_EQUATION:
            data = EQUATION_SCHEMA(data)
            coefs = Alphabet(tuple(data["coefficients"])) if data["coefficients"] else None
            return parse_equation(data["equation"], coefs)
        if kind == KIND_ABELIAN_GROUP:
            from .abelian import TFAbelianGroup

            data = ABELIAN_GROUP_SCHEMA(data)
            return TFAbelianGroup(data["z_rank"], data["q_rank"])
    except vol.Invalid as e:
        raise DomainError(f"invalid {kind} document: {e}") from None
    raise DomainError(f"unknown kind '{kind}'")


def parse(text: str, kind: str, alphabet: Optional[Alphabet] = None) -> Any:
    """Dispatch on SourceText kind for the text grammars."""
    if kind == KIND_WORD:
        return parse_word(text, alphabet)
    if kind == KIND_GENERATING_SET:
        return parse_generating_set([t for t in text.split(",") if t.strip()], alphabet)
    if kind == KIND_TOWER:
        return parse_tower(text)
    if kind == KIND_EQUATION:
        return parse_equation(text, alphabet)
    if kind == KIND_ABELIAN_GROUP:
        return parse_abelian_group(text)
    raise DomainError(f"unknown kind '{kind}'")


_ABELIAN_RE = re.compile(r"^\s*(?:Z\^?(?P<n>\d+)?)?\s*(?:\+\s*)?(?:Q\^?(?P<m>\d+)?)?\s*$")


def parse_abelian_group(text: str):
    """'Z^2 + Q^3', 'Z', 'Q', 'Z + Q', '0'"""
    from .abelian import TFAbelianGroup

    text = text.strip()
    if text == "0":
        return TFAbelianGroup(0, 0)
    m = _ABELIAN_RE.match(text)
    if not text or m is None:
        raise GrammarError(f"cannot parse abelian group {text!r}", 0)
    has_z = "Z" in text
    has_q = "Q" in text
    n = int(m.group("n") or 1) if has_z else 0
    q = int(m.group("m") or 1) if has_q else 0
    return TFAbelianGroup(n, q)


def print_abelian_group(group) -> str:
    return str(group)


def words_to_text(words: Union[Word, Sequence[Word]]) -> str:
    if isinstance(words, Word):
        return str(words)
    return ", ".join(str(w) for w in words)
