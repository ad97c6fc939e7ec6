"""Lark grammar for the factorization description language.

Example::

    # elliptic surface E(1)
    fibration "E1" {
      fiber_genus 1
      base_genus 0
      curve a nonsep (1,0)
      curve b nonsep (0,1)
      word a b a b a b a b a b a b
      flags { rational_or_ruled = true, kodaira_dimension = "-inf" }
    }
"""

from lark import Lark

GRAMMAR = r"""
start: fibration

fibration: "fibration" ESCAPED_STRING "{" _statement* "}"

_statement: fiber_genus
          | base_genus
          | curve_decl
          | word_decl
          | handles_block
          | flags_block
          | convention_decl
          | version_decl

fiber_genus: "fiber_genus" SIGNED_INT
base_genus: "base_genus" SIGNED_INT
version_decl: "format_version" SIGNED_INT
convention_decl: "convention" ESCAPED_STRING

curve_decl: "curve" NAME "nonsep" coords   -> nonsep_curve
          | "curve" NAME "sep" SIGNED_INT   -> sep_curve

coords: "(" (SIGNED_INT ("," SIGNED_INT)*)? ")"

word_decl: WORD_KW NAME*

handles_block: HANDLES_KW "{" matrix* "}"
matrix: "matrix" coords*

flags_block: FLAGS_KW "{" (flag ("," flag)* ","?)? "}"
flag: NAME "=" value
?value: "true"          -> true_value
      | "false"         -> false_value
      | "unknown"       -> unknown_value
      | SIGNED_INT      -> int_value
      | ESCAPED_STRING  -> str_value

WORD_KW: "word"
HANDLES_KW: "handles"
FLAGS_KW: "flags"
NAME: /[A-Za-z_][A-Za-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.ESCAPED_STRING
%import common.SIGNED_INT
%import common.WS

%ignore WS
%ignore COMMENT
"""

PARSER = Lark(GRAMMAR, start="start", parser="lalr")


def describe_terminal(name: str) -> str:
    """Human-readable form of a terminal name for error messages."""
    if name == "$END":
        return "end of input"
    try:
        pattern = PARSER.get_terminal(name).pattern
    except (KeyError, AttributeError):
        return name
    if pattern.type == "str":
        return repr(pattern.value)
    return name
