"""Line-oriented theory files.

::

    # comment
    domain a b c
    pred P/1 = { (a) (b) }
    pred l/0 = { }
    fun f/2 = { (a,a)->b (a,b)->a ... }
    const k = a
    let NAME := <formula>

Base elements double as constants naming themselves.  ``let`` bindings may
mention any sentence constant declared in the file, in any order.  A
declaration whose braces are unbalanced continues on the following lines.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Dict, List, Tuple

from .errors import DuplicateDeclaration, InputError, ParseError
from .model import Signature, Theory
from .syntax import KEYWORDS, RESERVED, expand_sugar, free_vars, parse_formula

BUNDLED = ("liar", "strong_liar", "truthteller", "curry", "logician", "grounded")

_NAME = r"[A-Za-z0-9_]+"
_PRED = re.compile(rf"pred\s+(?P<name>{_NAME}|=)\s*/\s*(?P<arity>\d+)\s*=\s*\{{(?P<body>.*)\}}\s*$", re.S)
_FUN = re.compile(rf"fun\s+(?P<name>{_NAME}|\+)\s*/\s*(?P<arity>\d+)\s*=\s*\{{(?P<body>.*)\}}\s*$", re.S)
_CONST = re.compile(rf"const\s+(?P<name>{_NAME})\s*=\s*(?P<value>{_NAME})\s*$")
_LET = re.compile(rf"let\s+(?P<name>{_NAME})\s*:=\s*(?P<formula>.+)$", re.S)
_TUPLE = re.compile(r"\(([^()]*)\)")
_MAPPING = re.compile(rf"\(([^()]*)\)\s*->\s*({_NAME})")


def bundled_path(name: str) -> Path:
    """Path of a bundled example theory, e.g. ``bundled_path("liar")``."""
    stem = name[:-3] if name.endswith(".th") else name
    return Path(str(resources.files("truthsem") / "theories" / f"{stem}.th"))


def _logical_lines(text: str):
    buf, start = [], None
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip() and not buf:
            continue
        if not buf:
            start = number
        buf.append(line)
        joined = " ".join(buf)
        if joined.count("{") <= joined.count("}"):
            yield start, joined.strip()
            buf = []
    if buf:
        raise ParseError(f"unterminated '{{' in declaration starting on line {start}")


def _column_of(text: str, line: int, fragment: str) -> int:
    """Zero-based column where ``fragment`` starts on ``line`` (0 if it is not found there)."""
    raw = text.splitlines()[line - 1]
    found = raw.find(fragment.split("\n", 1)[0][:20])
    return max(found, 0)


def _split_elems(body: str) -> tuple:
    return tuple(x.strip() for x in body.split(",") if x.strip())


def _claim(seen: Dict[str, int], name: str, line: int) -> None:
    if name in RESERVED:
        from .errors import ReservedSymbol

        raise ReservedSymbol(f"line {line}: {name!r} is a built-in predicate and cannot be declared")
    if name in KEYWORDS:
        raise InputError(f"line {line}: {name!r} is a keyword")
    if name in seen:
        raise DuplicateDeclaration(f"line {line}: {name!r} already declared on line {seen[name]}")
    seen[name] = line


def parse_theory(text: str, source: str = "<theory>") -> Theory:
    seen: Dict[str, int] = {}
    domain: List[str] = []
    preds: Dict[str, int] = {}
    pred_interp: Dict[str, frozenset] = {}
    funs: Dict[str, int] = {}
    fun_interp: Dict[str, dict] = {}
    consts: Dict[str, str] = {}
    lets: List[Tuple[int, str, str, int]] = []

    for line, decl in _logical_lines(text):
        keyword = decl.split(None, 1)[0]
        if keyword == "domain":
            for elem in decl.split()[1:]:
                if not re.fullmatch(_NAME, elem):
                    raise ParseError(f"{source}: line {line}: bad element name {elem!r}")
                _claim(seen, elem, line)
                domain.append(elem)
        elif keyword == "pred":
            m = _PRED.match(decl)
            if not m:
                raise ParseError(f"{source}: line {line}: expected 'pred NAME/ARITY = {{ (..) .. }}'")
            name, arity = m["name"], int(m["arity"])
            _claim(seen, name, line)
            preds[name] = arity
            pred_interp[name] = frozenset(_split_elems(t) for t in _TUPLE.findall(m["body"]))
            leftover = _TUPLE.sub("", m["body"]).strip()
            if leftover:
                raise ParseError(f"{source}: line {line}: unexpected {leftover!r} in tuple list")
        elif keyword == "fun":
            m = _FUN.match(decl)
            if not m:
                raise ParseError(f"{source}: line {line}: expected 'fun NAME/ARITY = {{ (..)->v .. }}'")
            name, arity = m["name"], int(m["arity"])
            if arity == 0:
                raise ParseError(f"{source}: line {line}: nullary functions are declared with 'const'")
            _claim(seen, name, line)
            funs[name] = arity
            table = {}
            for args, value in _MAPPING.findall(m["body"]):
                key = _split_elems(args)
                if key in table:
                    raise DuplicateDeclaration(f"{source}: line {line}: {name}{key} given twice")
                table[key] = value
            if _MAPPING.sub("", m["body"]).strip():
                raise ParseError(f"{source}: line {line}: malformed function table")
            fun_interp[name] = table
        elif keyword == "const":
            m = _CONST.match(decl)
            if not m:
                raise ParseError(f"{source}: line {line}: expected 'const NAME = ELEMENT'")
            _claim(seen, m["name"], line)
            consts[m["name"]] = m["value"]
        elif keyword == "let":
            m = _LET.match(decl)
            if not m:
                raise ParseError(f"{source}: line {line}: expected 'let NAME := FORMULA'")
            _claim(seen, m["name"], line)
            lets.append((line, m["name"], m["formula"].strip(), _column_of(text, line, m["formula"].strip())))
        else:
            raise ParseError(f"{source}: line {line}: unknown declaration {keyword!r}")

    sig = Signature(
        predicates=preds,
        functions=funs,
        constants=tuple(domain) + tuple(consts),
        sentence_constants=tuple(item[1] for item in lets),
    )
    bindings = {}
    for line, name, ftext, offset in lets:
        try:
            f = expand_sugar(parse_formula(ftext, sig))
        except ParseError as exc:
            where = f"line {line + exc.line - 1}" if exc.line else f"line {line}"
            if exc.line == 1:
                where += f", column {offset + exc.column}"
            elif exc.column:
                where += f" of the binding, column {exc.column}"
            raise ParseError(f"{source}: {where} (in binding of {name}): {exc.reason}") from exc
        except InputError as exc:
            raise type(exc)(f"{source}: line {line} (in binding of {name}): {exc}") from exc
        if free_vars(f):
            raise InputError(f"{source}: line {line}: binding of {name} has free variables {sorted(free_vars(f))}")
        bindings[name] = f
    const_interp = {e: e for e in domain}
    const_interp.update(consts)
    return Theory(
        signature=sig,
        base_domain=tuple(domain),
        pred_interp=pred_interp,
        fun_interp=fun_interp,
        const_interp=const_interp,
        constant_bindings=bindings,
    )


def load_theory(path) -> Theory:
    """Read and validate a theory file; bare bundled names like ``liar`` also work."""
    p = Path(path)
    if not p.exists() and not p.parent.parts and p.stem in BUNDLED:
        p = bundled_path(p.stem)
    text = p.read_text(encoding="utf-8")
    return parse_theory(text, str(path))
