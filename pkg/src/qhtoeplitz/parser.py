"""Text form of symbols and operator expressions (grammar version ``sg1``).

Symbols::

    expr   := term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := 'z' ['^' sint] | 'zb' ['^' sint] | 'r^' rat | 'log' ['^' uint] | 'e(' sint ')'
    coeff  := rat | rat 'i' | '(' rat ('+'|'-') rat 'i' ')'
    rat    := sint ['/' uint] | '(' sint '/' uint ')'
    sint   := ['-'] digits

``log`` is ``log r``.  A ``-`` directly before a factor negates the term.

Operators::

    opexpr := opterm (('+'|'-') opterm)*
    opterm := [coeff '*'] 'T[' expr ']' ('*' 'T[' expr ']')*
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .scalars import GaussQ
from .symbols import Symbol, from_monomial
from .toeplitz import OperatorExpr

GRAMMAR_VERSION = "sg1"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level ------------------------------------------------------

    def error(self, message, expected=()):
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise ParseError(message, offset, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def peek_char(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.error("unexpected input", [repr(s)])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits", ["digit"])
        return int(self.text[start : self.pos])

    def sint(self) -> int:
        neg = self.accept("-")
        v = self.digits()
        return -v if neg else v

    def denominator(self) -> int:
        self.skip_ws()
        start = self.pos
        den = self.digits()
        if den == 0:
            self.pos = start
            self.error("zero denominator", ["nonzero digit"])
        return den

    def rat(self) -> Fraction:
        if self.accept("("):
            num = self.sint()
            self.expect("/")
            den = self.denominator()
            self.expect(")")
        else:
            num = self.sint()
            den = self.denominator() if self.accept("/") else 1
        return Fraction(num, den)

    def starts_number(self) -> bool:
        c = self.peek_char()
        if c.isdigit() or c == "(":
            return True
        if c == "-":
            rest = self.text[self.pos + 1 :].lstrip()
            return bool(rest) and (rest[0].isdigit() or rest[0] == "(")
        return False

    # -- symbols --------------------------------------------------------

    def coeff(self) -> GaussQ:
        if self.peek("("):
            save = self.pos
            self.expect("(")
            c = self.peek_char()
            if c == "(":
                self.pos = save
                return self._complex()
            first = self.sint()
            if self.accept("/"):
                den = self.denominator()
                if self.accept(")"):
                    value = Fraction(first, den)
                    return GaussQ(0, value) if self.accept("i") else GaussQ(value)
            self.pos = save
            return self._complex()
        value = self.rat()
        if self.accept("i"):
            return GaussQ(0, value)
        return GaussQ(value)

    def _complex(self) -> GaussQ:
        self.expect("(")
        re = self.rat()
        if self.accept("+"):
            sign = 1
        elif self.accept("-"):
            sign = -1
        else:
            self.error("expected sign of imaginary part", ["'+'", "'-'"])
        im = self.rat()
        self.expect("i")
        self.expect(")")
        return GaussQ(re, sign * im)

    def factor(self) -> Symbol:
        if self.accept("zb"):
            return from_monomial(0, self.sint() if self.accept("^") else 1)
        if self.accept("z"):
            return from_monomial(self.sint() if self.accept("^") else 1, 0)
        if self.accept("r^"):
            return Symbol.term(1, self.rat())
        if self.accept("log"):
            s = self.digits() if self.accept("^") else 1
            return Symbol.term(1, 0, s, 0)
        if self.accept("e("):
            m = self.sint()
            self.expect(")")
            return Symbol.term(1, 0, 0, m)
        self.error("expected a factor", ["'z'", "'zb'", "'r^'", "'log'", "'e('"])

    def term(self) -> Symbol:
        negate = False
        if self.peek("-") and self.text[self.pos + 1 :].lstrip().startswith("("):
            self.expect("-")
            negate = True
        if self.starts_number():
            value = Symbol.constant(self.coeff())
        elif self.accept("-"):
            value = -self.factor()
        else:
            value = self.factor()
        while self.accept("*"):
            value = value * self.factor()
        return -value if negate else value

    def expr(self) -> Symbol:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    # -- operators ------------------------------------------------------

    def tfactor(self) -> Symbol:
        self.expect("T[")
        f = self.expr()
        self.expect("]")
        return f

    def opterm(self):
        coeff = GaussQ(1)
        if self.starts_number():
            coeff = self.coeff()
            self.expect("*")
        elif self.peek("-"):
            self.expect("-")
            coeff = GaussQ(-1)
        factors = [self.tfactor()]
        while self.accept("*"):
            factors.append(self.tfactor())
        return coeff, tuple(factors)

    def opexpr(self) -> OperatorExpr:
        summands = [self.opterm()]
        while True:
            if self.accept("+"):
                summands.append(self.opterm())
            elif self.accept("-"):
                c, fs = self.opterm()
                summands.append((-c, fs))
            else:
                return OperatorExpr(tuple(summands))


def parse_symbol(text: str) -> Symbol:
    p = _Parser(text)
    if p.at_end():
        p.error("empty expression", ["term"])
    value = p.expr()
    if not p.at_end():
        p.error("trailing input", ["'+'", "'-'", "'*'"])
    return value


def parse_operator(text: str) -> OperatorExpr:
    p = _Parser(text)
    if p.at_end():
        p.error("empty expression", ["'T['"])
    value = p.opexpr()
    if not p.at_end():
        p.error("trailing input", ["'+'", "'-'", "'*'"])
    return value


# -- printing -----------------------------------------------------------


def _rat(x: Fraction, parens=True) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    if parens:
        return "(%d/%d)" % (x.numerator, x.denominator)
    return "%d/%d" % (x.numerator, x.denominator)


def _coeff_text(c: GaussQ):
    """``(negative, text)``; ``text`` is the magnitude for real and
    imaginary coefficients, the full parenthesised form otherwise."""
    if c.im == 0:
        return c.re < 0, _rat(abs(c.re), parens=False)
    if c.re == 0:
        return c.im < 0, _rat(abs(c.im)) + "i"
    sign = "+" if c.im > 0 else "-"
    return False, "(%s%s%si)" % (_rat(c.re, parens=False), sign, _rat(abs(c.im), parens=False))


def _factor_texts(t) -> list:
    out = []
    ab = t.zzbar_exponents()
    if ab is not None:
        a, b = ab
        if b:
            out.append("zb" if b == 1 else "zb^%d" % b)
        if a:
            out.append("z" if a == 1 else "z^%d" % a)
    else:
        out.append("r^" + _rat(t.p))
    if t.s:
        out.append("log" if t.s == 1 else "log^%d" % t.s)
    if ab is None and t.m:
        out.append("e(%d)" % t.m)
    return out


def _leading(negative: bool, ctext: str) -> str:
    """Sign a leading coefficient; ``-(1/2)i`` is written ``(-1/2)i``."""
    if not negative:
        return ctext
    if ctext.startswith("("):
        return "(-" + ctext[1:]
    return "-" + ctext


def print_symbol(f: Symbol) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for t in sorted(f.terms, key=lambda t: (-t.p, t.s, -t.m)):
        negative, ctext = _coeff_text(t.coeff)
        factors = _factor_texts(t)
        if factors and ctext == "1":
            ctext = ""
        if not pieces:
            ctext = _leading(negative, ctext) if ctext else ("-" if negative else "")
            sep = ""
        else:
            sep = " - " if negative else " + "
        if ctext in ("", "-"):
            pieces.append(sep + ctext + "*".join(factors))
        else:
            pieces.append(sep + "*".join([ctext] + factors))
    return "".join(pieces)


def print_operator(E: OperatorExpr) -> str:
    if not E.summands:
        return "0*T[1]"
    pieces = []
    for coeff, factors in E.summands:
        negative, ctext = _coeff_text(coeff)
        body = "*".join("T[%s]" % print_symbol(f) for f in factors)
        if pieces:
            sep = " - " if negative else " + "
            pieces.append(sep + (body if ctext == "1" else ctext + "*" + body))
        elif ctext == "1":
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(_leading(negative, ctext) + "*" + body)
    return "".join(pieces)
