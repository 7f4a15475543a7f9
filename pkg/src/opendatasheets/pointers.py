"""Small JSON Pointer helpers (RFC 6901) plus a "*" wildcard extension.

Pointers address locations inside a datasheet document for diagnostics
and policy rules. The wildcard form expands "*" over every element of a
list; it never matches object keys.
"""

from __future__ import annotations

from typing import Any, List


def escape_token(token: str) -> str:
    return token.replace("~", "~0").replace("/", "~1")


def unescape_token(token: str) -> str:
    return token.replace("~1", "/").replace("~0", "~")


def join_pointer(base: str, token: str | int) -> str:
    return f"{base}/{escape_token(str(token))}"


def parse_pointer(pointer: str) -> List[str]:
    """Split a pointer into unescaped tokens. "" addresses the whole document."""
    if pointer == "":
        return []
    if not pointer.startswith("/"):
        raise ValueError(f"pointer must start with '/': {pointer!r}")
    for i, ch in enumerate(pointer):
        if ch == "~" and (i + 1 >= len(pointer) or pointer[i + 1] not in "01"):
            raise ValueError(f"bad escape in pointer: {pointer!r}")
    return [unescape_token(t) for t in pointer.split("/")[1:]]


def is_valid_pointer(pointer: str) -> bool:
    try:
        parse_pointer(pointer)
    except ValueError:
        return False
    return True


def resolve_wildcard(value: Any, tokens: List[str]) -> List[Any]:
    """Collect every value addressed by `tokens`, expanding "*" over lists.

    Missing segments contribute nothing; the result is simply empty.
    """
    current = [value]
    for token in tokens:
        nxt: List[Any] = []
        for node in current:
            if token == "*":
                if isinstance(node, list):
                    nxt.extend(node)
            elif isinstance(node, dict):
                if token in node:
                    nxt.append(node[token])
            elif isinstance(node, list):
                if token.isdigit() and int(token) < len(node):
                    nxt.append(node[int(token)])
        current = nxt
    return current
