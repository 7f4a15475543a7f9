"""Declarative screening rules over datasheet content.

A policy is a list of rules; each rule addresses values with a JSON
Pointer (with "*" fanning out over lists) and applies one check from a
closed vocabulary. Failed rules escalate to a three-way verdict:
accept, review, or reject. Rules are independent — there is no
short-circuiting and rule order never changes the decision.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from . import model as m
from .canonical import canonical_json, datasheet_to_value, sort_extras
from .errors import JsonSyntaxError, ParseError, PolicyError
from .parsing import loads_strict
from .pointers import parse_pointer, resolve_wildcard

CHECK_KINDS = ("exists", "not-exists", "equals", "one-of", "not-one-of", "matches", "min-count")
_VALUE_CHECKS = ("equals", "one-of", "not-one-of", "matches")

QUANTIFIERS = ("any", "all")
ON_FAIL = ("reject", "review")


@dataclass(frozen=True)
class Check:
    kind: str
    value: Any = None
    values: Optional[Tuple[Any, ...]] = None
    pattern: Optional[str] = None
    n: Optional[int] = None
    regex: Optional[re.Pattern] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Rule:
    id: str
    description: str
    path: str
    check: Check
    quantifier: str = "any"
    on_fail: str = "review"
    message: str = ""


@dataclass(frozen=True)
class Policy:
    name: str
    version: str
    rules: Tuple[Rule, ...] = ()


@dataclass(frozen=True)
class RuleResult:
    id: str
    passed: bool
    action: str
    matched_values: Tuple[str, ...]
    message: str


@dataclass(frozen=True)
class Verdict:
    decision: str
    rule_results: Tuple[RuleResult, ...]


def _require(obj: Dict[str, Any], key: str, where: str) -> Any:
    if key not in obj:
        raise PolicyError(f'{where} is missing required key "{key}"')
    return obj[key]


def _require_str(obj: Dict[str, Any], key: str, where: str) -> str:
    value = _require(obj, key, where)
    if not isinstance(value, str):
        raise PolicyError(f'{where}: "{key}" must be a string')
    return value


def _check_from_value(value: Any, where: str) -> Check:
    if isinstance(value, str):
        kind, args = value, {}
    elif isinstance(value, dict):
        if "kind" not in value or not isinstance(value["kind"], str):
            raise PolicyError(f'{where}: check object needs a string "kind"')
        kind = value["kind"]
        args = {k: v for k, v in value.items() if k != "kind"}
    else:
        raise PolicyError(f"{where}: check must be a string or an object")
    if kind not in CHECK_KINDS:
        raise PolicyError(f"{where}: unknown check {kind!r}")
    if kind == "equals":
        if "value" not in args:
            raise PolicyError(f'{where}: equals needs a "value"')
        return Check(kind=kind, value=args["value"])
    if kind in ("one-of", "not-one-of"):
        values = args.get("values")
        if not isinstance(values, list):
            raise PolicyError(f'{where}: {kind} needs a "values" array')
        return Check(kind=kind, values=tuple(values))
    if kind == "matches":
        pattern = args.get("pattern")
        if not isinstance(pattern, str):
            raise PolicyError(f'{where}: matches needs a string "pattern"')
        try:
            regex = re.compile(pattern)
        except re.error as e:
            raise PolicyError(f"{where}: bad regex {pattern!r}: {e}") from e
        return Check(kind=kind, pattern=pattern, regex=regex)
    if kind == "min-count":
        n = args.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise PolicyError(f'{where}: min-count needs an integer "n" >= 0')
        return Check(kind=kind, n=n)
    return Check(kind=kind)


def _rule_from_value(value: Any, index: int) -> Rule:
    where = f"rule #{index}"
    if not isinstance(value, dict):
        raise PolicyError(f"{where} must be an object")
    rule_id = _require_str(value, "id", where)
    where = f"rule {rule_id!r}"
    path = _require_str(value, "path", where)
    if path != "":
        try:
            parse_pointer(path)
        except ValueError as e:
            raise PolicyError(f"{where}: {e}") from e
    quantifier = value.get("quantifier", "any")
    if quantifier not in QUANTIFIERS:
        raise PolicyError(f"{where}: quantifier must be one of {', '.join(QUANTIFIERS)}")
    on_fail = _require_str(value, "onFail", where)
    if on_fail not in ON_FAIL:
        raise PolicyError(f"{where}: onFail must be one of {', '.join(ON_FAIL)}")
    return Rule(
        id=rule_id,
        description=_require_str(value, "description", where),
        path=path,
        check=_check_from_value(_require(value, "check", where), where),
        quantifier=quantifier,
        on_fail=on_fail,
        message=_require_str(value, "message", where),
    )


def policy_from_value(value: Any) -> Policy:
    if not isinstance(value, dict):
        raise PolicyError("policy must be a JSON object")
    rules_value = value.get("rules", [])
    if not isinstance(rules_value, list):
        raise PolicyError('"rules" must be an array')
    rules = tuple(_rule_from_value(r, i) for i, r in enumerate(rules_value))
    seen: set = set()
    for r in rules:
        if r.id in seen:
            raise PolicyError(f"duplicate rule id {r.id!r}")
        seen.add(r.id)
    return Policy(
        name=_require_str(value, "name", "policy"),
        version=_require_str(value, "version", "policy"),
        rules=rules,
    )


def parse_policy(text: str) -> Policy:
    try:
        value = loads_strict(text)
    except JsonSyntaxError:
        raise
    except ParseError as e:
        raise PolicyError(str(e)) from e
    return policy_from_value(value)


def resolve_path(d: m.Datasheet, path: str) -> List[Any]:
    """All document values addressed by `path`; missing paths give []."""
    return resolve_wildcard(datasheet_to_value(d), parse_pointer(path))


def _satisfies(check: Check, value: Any) -> bool:
    if check.kind == "equals":
        return value == check.value
    if check.kind == "one-of":
        return any(value == v for v in check.values or ())
    if check.kind == "not-one-of":
        return all(value != v for v in check.values or ())
    if check.kind == "matches":
        regex = check.regex if check.regex is not None else re.compile(check.pattern or "")
        return isinstance(value, str) and regex.search(value) is not None
    raise AssertionError(f"not a per-value check: {check.kind}")


def _stringify(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(sort_extras(value), ensure_ascii=False, separators=(",", ":"))


def _evaluate_rule(rule: Rule, values: List[Any]) -> bool:
    if rule.check.kind == "exists":
        return len(values) > 0
    if rule.check.kind == "not-exists":
        return len(values) == 0
    if rule.check.kind == "min-count":
        return len(values) >= (rule.check.n or 0)
    if rule.quantifier == "all":
        return all(_satisfies(rule.check, v) for v in values)
    return any(_satisfies(rule.check, v) for v in values)


def evaluate_policy(d: m.Datasheet, p: Policy) -> Verdict:
    """Evaluate every rule independently and aggregate by severity.

    Any failed reject rule decides reject; otherwise any failed review
    rule decides review; otherwise accept. With an empty match set,
    "any"-quantified value checks fail and "all"-quantified ones pass
    vacuously — use exists/min-count to demand presence explicitly.
    """
    doc = datasheet_to_value(d)
    results: List[RuleResult] = []
    for rule in p.rules:
        values = resolve_wildcard(doc, parse_pointer(rule.path))
        passed = _evaluate_rule(rule, values)
        results.append(
            RuleResult(
                id=rule.id,
                passed=passed,
                action="none" if passed else rule.on_fail,
                matched_values=tuple(_stringify(v) for v in values),
                message=rule.message,
            )
        )
    if any(r.action == "reject" for r in results):
        decision = "reject"
    elif any(r.action == "review" for r in results):
        decision = "review"
    else:
        decision = "accept"
    return Verdict(decision=decision, rule_results=tuple(results))


def verdict_to_value(v: Verdict) -> Dict[str, Any]:
    return {
        "decision": v.decision,
        "ruleResults": [
            {
                "id": r.id,
                "passed": r.passed,
                "action": r.action,
                "matchedValues": list(r.matched_values),
                "message": r.message,
            }
            for r in v.rule_results
        ],
    }


def serialize_verdict(v: Verdict) -> str:
    return canonical_json(verdict_to_value(v))
