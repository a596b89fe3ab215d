"""Text grammars for groups, elements, series, and field chains.

Series text looks like ``3*x^2 - 5*x^(1/2) + 1`` with tuple exponents
``x^(1,0)`` and an optional truncation suffix ``+ O(x^-3)``.  Group text is
``Z``, ``Q``, ``1``, or ``lex(G1,...,Gn)``; field chains read
``Q box G1 box ... box Gn``.  Parsing is whitespace-insensitive and errors
carry the offending character position.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GroupMismatch, ParseError
from .groups import (
    GroupDescriptor,
    GroupElement,
    Q,
    TRIVIAL,
    Z,
    element,
    is_zero,
    lex,
    zero_element,
)
from .series import Series, make_series

_SYMBOLS = "+-*/^(),"


class _Tokens:
    """Flat token stream with positions: INT, NAME, or a symbol."""

    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.items.append(("INT", text[i:j], i))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < len(text) and text[j].isalnum():
                    j += 1
                self.items.append(("NAME", text[i:j], i))
                i = j
                continue
            if ch in _SYMBOLS:
                self.items.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.items.append(("EOF", "", len(text)))
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.items[self.pos]
        if tok[0] != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.advance()


def _parse_int(toks: _Tokens) -> tuple[int, int]:
    sign = 1
    tok = toks.peek()
    while tok[0] in ("+", "-"):
        if tok[0] == "-":
            sign = -sign
        toks.advance()
        tok = toks.peek()
    kind, value, pos = toks.expect("INT")
    return sign * int(value), pos


def _parse_rational(toks: _Tokens) -> tuple[Fraction, int]:
    num, pos = _parse_int(toks)
    if toks.peek()[0] == "/":
        toks.advance()
        den, dpos = _parse_int(toks)
        if den == 0:
            raise ParseError("zero denominator", dpos)
        return Fraction(num, den), pos
    return Fraction(num), pos


# ---------------------------------------------------------------------------
# element ASTs: ("rat", Fraction) | ("e",) | ("paren", [ast, ...])


def _parse_element_ast(toks: _Tokens):
    tok = toks.peek()
    if tok[0] == "(":
        toks.advance()
        items = [_parse_element_ast(toks)]
        while toks.peek()[0] == ",":
            toks.advance()
            items.append(_parse_element_ast(toks))
        toks.expect(")")
        return ("paren", items, tok[2])
    if tok[0] == "NAME" and tok[1] == "e":
        toks.advance()
        return ("e", tok[2])
    value, pos = _parse_rational(toks)
    return ("rat", value, pos)


def _coerce_ast(ast, group: GroupDescriptor) -> GroupElement:
    kind = ast[0]
    if kind == "paren" and len(ast[1]) == 1 and group.kind in ("Z", "Q"):
        ast = ast[1][0]
        kind = ast[0]
    if group.kind == "Z":
        if kind != "rat" or ast[1].denominator != 1:
            raise GroupMismatch(f"expected an integer exponent near position {ast[-1]}")
        return element(group, int(ast[1]))
    if group.kind == "Q":
        if kind != "rat":
            raise GroupMismatch(f"expected a rational exponent near position {ast[-1]}")
        return element(group, ast[1])
    if group.kind == "1":
        if kind != "e":
            raise GroupMismatch(f"expected the trivial element 'e' near position {ast[-1]}")
        return element(group, None)
    if kind != "paren":
        raise GroupMismatch(f"expected a {group.arity}-tuple near position {ast[-1]}")
    if len(ast[1]) != group.arity:
        raise GroupMismatch(
            f"expected {group.arity} coordinates, got {len(ast[1])} near position {ast[2]}")
    coords = tuple(_coerce_ast(item, part) for item, part in zip(ast[1], group.parts))
    return GroupElement(group, coords)


def parse_element(text: str, group: GroupDescriptor) -> GroupElement:
    toks = _Tokens(text)
    ast = _parse_element_ast(toks)
    toks.expect("EOF")
    return _coerce_ast(ast, group)


def _one_exponent(group: GroupDescriptor, pos: int) -> GroupElement:
    if group.kind == "Z":
        return element(group, 1)
    if group.kind == "Q":
        return element(group, Fraction(1))
    raise GroupMismatch(
        f"bare 'x' has no canonical exponent over {group.kind}; "
        f"write an explicit exponent near position {pos}")


def _parse_power(toks: _Tokens, group: GroupDescriptor) -> GroupElement:
    _, _, pos = toks.expect("NAME")  # the variable, already checked to be 'x'
    if toks.peek()[0] != "^":
        return _one_exponent(group, pos)
    toks.advance()
    tok = toks.peek()
    if tok[0] == "(":
        ast = _parse_element_ast(toks)
        return _coerce_ast(ast, group)
    value, vpos = _parse_int(toks)
    return _coerce_ast(("rat", Fraction(value), vpos), group)


# ---------------------------------------------------------------------------
# series


def parse_series(text: str, group: GroupDescriptor) -> Series:
    """Parse series text over the given exponent group into canonical form."""
    toks = _Tokens(text)
    if toks.peek()[0] == "EOF":
        raise ParseError("empty expression", 0)
    pairs = []
    bound = None
    first = True
    while True:
        sign = 1
        tok = toks.peek()
        if first:
            while tok[0] in ("+", "-"):
                if tok[0] == "-":
                    sign = -sign
                toks.advance()
                tok = toks.peek()
        else:
            if tok[0] == "EOF":
                break
            if tok[0] not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
            sign = -1 if tok[0] == "-" else 1
            toks.advance()
            tok = toks.peek()
        first = False
        if tok[0] == "NAME" and tok[1] == "O":
            if sign < 0:
                raise ParseError("truncation marker cannot be negated", tok[2])
            if bound is not None:
                raise ParseError("multiple truncation markers", tok[2])
            toks.advance()
            toks.expect("(")
            name = toks.peek()
            if name[0] != "NAME" or name[1] != "x":
                raise ParseError("expected 'x' inside O(...)", name[2])
            bound = _parse_power(toks, group)
            toks.expect(")")
            continue
        if tok[0] == "NAME" and tok[1] == "x":
            exponent = _parse_power(toks, group)
            pairs.append((exponent, Fraction(sign)))
            continue
        if tok[0] in ("INT", "+", "-"):
            coeff, _ = _parse_rational(toks)
            coeff *= sign
            if toks.peek()[0] == "*":
                toks.advance()
                name = toks.peek()
                if name[0] != "NAME" or name[1] != "x":
                    raise ParseError("expected 'x' after '*'", name[2])
                exponent = _parse_power(toks, group)
            else:
                exponent = zero_element(group)
            pairs.append((exponent, coeff))
            continue
        raise ParseError(f"expected a term, found {tok[1] or 'end of input'!r}", tok[2])
    return make_series(group, pairs, bound)


# ---------------------------------------------------------------------------
# groups and field chains


def parse_group(text: str) -> GroupDescriptor:
    toks = _Tokens(text)
    g = _parse_group(toks)
    toks.expect("EOF")
    return g


def _parse_group(toks: _Tokens) -> GroupDescriptor:
    tok = toks.advance()
    if tok[0] == "NAME" and tok[1] == "Z":
        return Z
    if tok[0] == "NAME" and tok[1] == "Q":
        return Q
    if tok[0] == "INT" and tok[1] == "1":
        return TRIVIAL
    if tok[0] == "NAME" and tok[1] == "lex":
        toks.expect("(")
        parts = [_parse_group(toks)]
        while toks.peek()[0] == ",":
            toks.advance()
            parts.append(_parse_group(toks))
        toks.expect(")")
        return lex(*parts)
    raise ParseError(f"expected a group, found {tok[1] or 'end of input'!r}", tok[2])


def parse_field_chain(text: str) -> tuple[GroupDescriptor, ...]:
    """Parse ``Q box G1 box ... box Gn`` into the exponent-chain tuple."""
    toks = _Tokens(text)
    base = toks.advance()
    if base[0] != "NAME" or base[1] != "Q":
        raise ParseError("field base must be 'Q'", base[2])
    chain = []
    while toks.peek()[0] != "EOF":
        sep = toks.advance()
        if sep[0] != "NAME" or sep[1] != "box":
            raise ParseError(f"expected 'box', found {sep[1]!r}", sep[2])
        chain.append(_parse_group(toks))
    return tuple(chain)


# ---------------------------------------------------------------------------
# rendering (inverse of the grammars above)


def render_group(group: GroupDescriptor) -> str:
    if group.kind == "lex":
        return "lex(" + ",".join(render_group(p) for p in group.parts) + ")"
    return group.kind


def render_field_chain(chain) -> str:
    return "Q" + "".join(" box " + render_group(g) for g in chain)


def render_element(x: GroupElement) -> str:
    kind = x.group.kind
    if kind == "1":
        return "e"
    if kind == "lex":
        return "(" + ",".join(render_element(c) for c in x.value) + ")"
    return str(x.value)


def _exponent_text(e: GroupElement) -> str:
    """Exponent as written after '^': integers bare, rationals parenthesized."""
    kind = e.group.kind
    if kind == "Z":
        return str(e.value)
    if kind == "Q":
        if e.value.denominator == 1:
            return str(e.value.numerator)
        return f"({e.value})"
    return render_element(e)


def _is_one_exponent(e: GroupElement) -> bool:
    return e.group.kind in ("Z", "Q") and e.value == 1


_NESTED_VARS = ("y", "w", "v", "u", "t")


def render_series(s: Series, var: str = "x", nested_vars=_NESTED_VARS) -> str:
    """Canonical text for a series; nested coefficients are parenthesized
    series in the next variable of ``nested_vars``."""
    segments: list[tuple[int, str]] = []
    for e, c in s.terms:
        if _is_one_exponent(e):
            power = var
        elif is_zero(e):
            power = None
        else:
            power = f"{var}^{_exponent_text(e)}"
        if isinstance(c, Series):
            inner = render_series(c, nested_vars[0] if nested_vars else "c",
                                  nested_vars[1:])
            body = f"({inner})" if power is None else f"({inner})*{power}"
            segments.append((1, body))
            continue
        sign = -1 if c < 0 else 1
        mag = -c if c < 0 else c
        if power is None:
            body = str(mag)
        elif mag == 1:
            body = power
        else:
            body = f"{mag}*{power}"
        segments.append((sign, body))
    if s.bound is not None:
        segments.append((1, f"O({var}^{_exponent_text(s.bound)})"))
    if not segments:
        return "0"
    out = []
    for i, (sign, body) in enumerate(segments):
        if i == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def series_to_json(s: Series) -> dict:
    """Stable JSON shape for a series; nested coefficients recurse."""
    terms = []
    for e, c in s.terms:
        coeff = series_to_json(c) if isinstance(c, Series) else str(c)
        terms.append({"exponent": render_element(e), "coefficient": coeff})
    return {
        "group": render_group(s.group),
        "terms": terms,
        "bound": None if s.bound is None else render_element(s.bound),
    }
