"""
Parsing for cycle strings and group specs.

Cycle strings are 1-indexed by default: "(1,2)(3,4,5)".
Group specs are named forms ("S:6", "PSL2:9", "M12", "wr(S:3,2)",
"direct(S:3,C:2)", "coset(S:4,gens(4:(1,2,3);(1,2)))"), explicit generator
lists ("gens(5:(1,2);(1,2,3,4,5))"), JSON objects
{"degree": n, "generators": ["(1,2,3)", ...]} or paths to such JSON files.
"""

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from arcfact.perm.permutation import Permutation
from .errors import InvalidArgumentError, InvalidPermutationError, ParseError

_INT_RE = re.compile(r"\d+")
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")

# canonical family name -> number of integer parameters
FAMILIES = {
    "S": 1,
    "A": 1,
    "C": 1,
    "D": 1,
    "PSL2": 1,
    "PGL2": 1,
    "PSigmaL2": 1,
    "PGammaL2": 1,
    "M11": 0,
    "M12": 0,
}
COMPOUND = {"WREATH": "wr", "DIRECT": "direct", "COSET": "coset"}
_ALIASES = {name.lower(): name for name in FAMILIES}


@dataclass(frozen=True)
class RawGenerators:
    degree: int
    generators: Tuple[Permutation, ...]

    def canonical(self) -> str:
        body = ";".join(g.to_cycle_string() for g in self.generators)
        return f"gens({self.degree}:{body})"


@dataclass(frozen=True)
class NamedGroupSpec:
    family: str
    params: Tuple[Union[int, "NamedGroupSpec", RawGenerators], ...] = ()

    def canonical(self) -> str:
        if self.family in COMPOUND:
            args = ",".join(p.canonical() if not isinstance(p, int) else str(p) for p in self.params)
            return f"{COMPOUND[self.family]}({args})"
        if not self.params:
            return self.family
        return f"{self.family}:{self.params[0]}"


GroupSpec = Union[NamedGroupSpec, RawGenerators]


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _scan_cycles(text: str, pos: int, one_indexed: bool) -> Tuple[List[Tuple[int, ...]], int]:
    """Read consecutive "(a,b,...)" groups starting at pos; stop at anything else."""
    shift = 1 if one_indexed else 0
    cycles: List[Tuple[int, ...]] = []
    pos = _skip_ws(text, pos)
    while pos < len(text) and text[pos] == "(":
        pos += 1
        cycle: List[int] = []
        while True:
            pos = _skip_ws(text, pos)
            if pos >= len(text):
                raise ParseError("unclosed cycle", text, pos)
            if text[pos] == ")" and not cycle:
                pos += 1
                break
            m = _INT_RE.match(text, pos)
            if not m:
                raise ParseError("expected a point", text, pos)
            point = int(m.group()) - shift
            if point < 0:
                raise InvalidPermutationError(f"point {m.group()} below the first index {shift}")
            cycle.append(point)
            pos = _skip_ws(text, m.end())
            if pos >= len(text):
                raise ParseError("unclosed cycle", text, pos)
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise ParseError("expected ',' or ')'", text, pos)
        if cycle:
            cycles.append(tuple(cycle))
        pos = _skip_ws(text, pos)
    return cycles, pos


def parse_cycles(text: str, one_indexed: bool = True) -> List[Tuple[int, ...]]:
    """Parse a product of cycles into 0-indexed tuples."""
    if not text.strip():
        raise ParseError("empty cycle string", text, 0)
    cycles, pos = _scan_cycles(text, 0, one_indexed)
    if pos != len(text):
        raise ParseError("unexpected character", text, pos)
    return cycles


def parse_permutation(text: str, degree: Optional[int] = None, one_indexed: bool = True) -> Permutation:
    """
    Parse a cycle string into a Permutation.

    Args:
        text: e.g. "(1,2)(3,4,5)"
        degree: Degree; defaults to the largest point mentioned
        one_indexed: Whether points start at 1

    Returns:
        Permutation
    """
    cycles = parse_cycles(text, one_indexed)
    largest = max((p for c in cycles for p in c), default=0) + 1
    if degree is None:
        degree = largest
    elif largest > degree:
        raise InvalidPermutationError(f"point {largest - 1 + int(one_indexed)} exceeds degree {degree}")
    return Permutation.from_cycles(degree, cycles)


def _parse_int(text: str, pos: int) -> Tuple[int, int]:
    pos = _skip_ws(text, pos)
    m = _INT_RE.match(text, pos)
    if not m:
        raise ParseError("expected an integer", text, pos)
    return int(m.group()), m.end()


def _expect(text: str, pos: int, char: str) -> int:
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != char:
        raise ParseError(f"expected {char!r}", text, pos)
    return pos + 1


def _parse_gens_body(text: str, pos: int) -> Tuple[RawGenerators, int]:
    degree, pos = _parse_int(text, pos)
    pos = _expect(text, pos, ":")
    gens: List[Permutation] = []
    while True:
        start = pos
        cycles, pos = _scan_cycles(text, pos, one_indexed=True)
        if pos == _skip_ws(text, start) and not cycles:
            raise ParseError("expected a cycle", text, pos)
        try:
            gens.append(Permutation.from_cycles(degree, cycles))
        except InvalidPermutationError as e:
            raise InvalidPermutationError(f"{e} in generator starting at offset {start}")
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == ";":
            pos += 1
            continue
        break
    pos = _expect(text, pos, ")")
    return RawGenerators(degree=degree, generators=tuple(gens)), pos


def _parse_spec(text: str, pos: int) -> Tuple[GroupSpec, int]:
    pos = _skip_ws(text, pos)
    m = _WORD_RE.match(text, pos)
    if not m:
        raise ParseError("expected a group name", text, pos)
    word, pos = m.group(), m.end()
    lowered = word.lower()

    if lowered == "gens":
        pos = _expect(text, pos, "(")
        return _parse_gens_body(text, pos)

    compound = {v: k for k, v in COMPOUND.items()}.get(lowered)
    if compound is not None:
        pos = _expect(text, pos, "(")
        params: List = []
        while True:
            pos = _skip_ws(text, pos)
            if compound == "WREATH" and len(params) == 1:
                k, pos = _parse_int(text, pos)
                params.append(k)
            else:
                sub, pos = _parse_spec(text, pos)
                params.append(sub)
            pos = _skip_ws(text, pos)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            break
        pos = _expect(text, pos, ")")
        _check_compound_arity(compound, params, text, pos)
        return NamedGroupSpec(compound, tuple(params)), pos

    family = _ALIASES.get(lowered)
    if family is None:
        raise ParseError(f"unknown group family {word!r}", text, m.start())
    if FAMILIES[family] == 0:
        return NamedGroupSpec(family), pos
    pos = _expect(text, pos, ":")
    n, pos = _parse_int(text, pos)
    return NamedGroupSpec(family, (n,)), pos


def _check_compound_arity(family: str, params: List, text: str, pos: int) -> None:
    expected = {"WREATH": 2, "COSET": 2}.get(family)
    if expected is not None and len(params) != expected:
        raise ParseError(f"{COMPOUND[family]} takes {expected} arguments", text, pos)
    if family == "DIRECT" and len(params) < 2:
        raise ParseError("direct takes at least 2 arguments", text, pos)


def _from_json(data: dict, origin: str) -> RawGenerators:
    if not isinstance(data, dict) or "degree" not in data or "generators" not in data:
        raise InvalidArgumentError(f"{origin}: JSON group needs 'degree' and 'generators'")
    degree = int(data["degree"])
    gens = tuple(parse_permutation(g, degree) for g in data["generators"])
    return RawGenerators(degree=degree, generators=gens)


def parse_group_spec(text: str, degree: Optional[int] = None) -> GroupSpec:
    """
    Parse a named form, a generator list or a JSON group description.

    Args:
        text: Spec text, JSON text, or path to a JSON file
        degree: Degree for a bare cycle list such as "(1,2);(1,2,3)"

    Returns:
        NamedGroupSpec or RawGenerators
    """
    if not text or not text.strip():
        raise InvalidArgumentError("group spec is empty")
    stripped = text.strip()

    if stripped.startswith("{"):
        try:
            return _from_json(json.loads(stripped), "inline")
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON ({e.msg})", stripped, e.pos)
    if stripped.endswith(".json"):
        path = Path(stripped)
        if not path.exists():
            raise InvalidArgumentError(f"group file not found: {path}")
        with path.open("r", encoding="utf-8") as f:
            return _from_json(json.load(f), str(path))
    if stripped.startswith("("):
        pieces = [p for p in stripped.split(";")]
        perms = [parse_permutation(p, degree) for p in pieces]
        sizes = {p.degree for p in perms}
        if degree is None and len(sizes) > 1:
            top = max(sizes)
            perms = [parse_permutation(p, top) for p in pieces]
        return RawGenerators(degree=perms[0].degree, generators=tuple(perms))

    spec, pos = _parse_spec(stripped, 0)
    if _skip_ws(stripped, pos) != len(stripped):
        raise ParseError("trailing characters", stripped, pos)
    return spec


def format_group_spec(spec: GroupSpec) -> str:
    return spec.canonical()
