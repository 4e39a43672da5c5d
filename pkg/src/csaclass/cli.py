"""Command line interface: JSON config in, canonical JSON or text report out.

Exit codes: 0 success, 2 config/validation error, 3 integrality violation,
4 work budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import INFINITY, AlgebraSpec, Place, constant_field_degree, validate
from .basefield import BaseField
from .classnum import (DEFAULT_BUDGET, class_number_report, embedding_count,
                       level_rhs, total_class_number_genera, transfer_check,
                       weight_class_numbers)
from .errors import (BudgetExceededError, CsaClassError,
                     IntegralityViolationError, ValidationError)
from .massform import mass_hereditary, mass_maximal_subalgebra
from .omega import count_omega, enumerate_omega
from .orders import OrderSpec, normalize_invariant
from .theta import theta_enum, theta_genfun


class ConfigError(ValidationError):
    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


@dataclass(frozen=True)
class RunConfig:
    order: OrderSpec


def _parse_base(node, errors: list[str]) -> BaseField | None:
    if not isinstance(node, dict):
        errors.append("base: expected an object")
        return None
    kind = node.get("type")
    try:
        if kind == "rational_function_field":
            return BaseField.rational(
                q=int(node["q"]),
                infinity_degree=int(node.get("infinity_degree", 1)),
                pic_override=(int(node["pic_order"])
                              if "pic_order" in node else None))
        if kind == "custom":
            return BaseField.custom(
                q=int(node["q"]),
                l_poly=[int(c) for c in node["l_polynomial"]],
                infinity_degree=int(node.get("infinity_degree", 1)),
                pic_override=(int(node["pic_order"])
                              if "pic_order" in node else None))
        errors.append(f"base.type: unknown kind {kind!r}")
    except KeyError as exc:
        errors.append(f"base.{exc.args[0]}: missing field")
    except (TypeError, ValueError, ValidationError) as exc:
        errors.append(f"base: {exc}")
    return None


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON config; raises ConfigError on any problem."""
    errors: list[str] = []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError([f"schema: not valid JSON ({exc})"]) from None
    if not isinstance(doc, dict):
        raise ConfigError(["schema: top level must be an object"])

    base = _parse_base(doc.get("base"), errors)
    try:
        degree = int(doc["degree"])
    except (KeyError, TypeError, ValueError):
        errors.append("degree: missing or not an integer")
        degree = 0
    if errors:
        raise ConfigError(errors)

    finite_places: list[Place] = []
    infinity_place: Place | None = None
    for idx, entry in enumerate(doc.get("ramification", [])):
        path = f"ramification[{idx}]"
        if not isinstance(entry, dict) or "place" not in entry:
            errors.append(f"{path}: expected an object with a 'place' field")
            continue
        label = str(entry["place"])
        if "invariant" in entry:
            try:
                inv = Fraction(str(entry["invariant"]))
            except ValueError:
                errors.append(f"{path}.invariant: not a fraction")
                continue
            kappa, d = inv.numerator, inv.denominator
        else:
            kappa, d = None, 1
        if label == INFINITY:
            deg = int(entry.get("degree", base.infinity_degree))
            if deg != base.infinity_degree:
                errors.append(
                    f"{path}.degree: infinity has degree "
                    f"{base.infinity_degree} on this base field")
                continue
            infinity_place = Place(INFINITY, deg, d, kappa)
        else:
            if "degree" not in entry:
                errors.append(f"{path}.degree: required for finite places")
                continue
            try:
                finite_places.append(Place(label, int(entry["degree"]), d, kappa))
            except ValidationError as exc:
                errors.append(f"{path}: {exc}")
    if errors:
        raise ConfigError(errors)

    try:
        spec = AlgebraSpec(base, degree, tuple(finite_places), infinity_place)
    except ValidationError as exc:
        raise ConfigError([f"algebra: {exc}"]) from None
    violations = validate(spec)
    if violations:
        raise ConfigError([f"algebra: {v}" for v in violations])

    invariants: dict[str, tuple[int, ...]] = {}
    order_node = doc.get("order", {})
    if not isinstance(order_node, dict):
        raise ConfigError(["order: expected an object"])
    for label, vec in order_node.get("invariants", {}).items():
        path = f"order.invariants[{label!r}]"
        try:
            invariants[label] = normalize_invariant(int(e) for e in vec)
        except (TypeError, ValueError, ValidationError) as exc:
            errors.append(f"{path}: {exc}")
    if errors:
        raise ConfigError(errors)
    try:
        order = OrderSpec(spec, tuple(sorted(invariants.items())))
    except ValidationError as exc:
        raise ConfigError([f"order: {exc}"]) from None
    return RunConfig(order)


def _fmt(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _emit(report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(_fmt(report), sort_keys=True, indent=2))
    else:
        for key in sorted(report):
            print(f"{key}: {json.dumps(_fmt(report[key]), sort_keys=True)}")


def _theta_map(order: OrderSpec, s: int, engine: str) -> dict:
    spec = order.algebra
    out = {}
    for label in order.relevant_labels():
        v = spec.place(label)
        fn = theta_enum if engine == "enum" else theta_genfun
        out[label] = fn(v, order.invariant_at(label), s, spec.base.q)
    return out


def _cmd_classnum(order: OrderSpec, args) -> dict:
    report = class_number_report(order, args.engine)
    return {
        "s0": report.s0,
        "mass": report.mass,
        "h": {str(s): h for s, (h, _) in report.per_s},
        "h_total": report.h_total,
        "rhs": {str(s): rhs for s, (_, rhs) in report.per_s},
        "theta": {str(s): _theta_map(order, s, args.engine)
                  for s, _ in report.per_s},
    }


def _cmd_mass(order: OrderSpec, args) -> dict:
    return {"mass": mass_hereditary(order)}


def _cmd_theta(order: OrderSpec, args) -> dict:
    spec = order.algebra
    v = spec.place(args.place)
    f_vec = order.invariant_at(args.place)
    out: dict = {"place": args.place, "s": args.s}
    if args.engine in ("enum", "both"):
        out["enum"] = theta_enum(v, f_vec, args.s, spec.base.q)
    if args.engine in ("genfun", "both"):
        out["genfun"] = theta_genfun(v, f_vec, args.s, spec.base.q)
    return out


def _cmd_omega(order: OrderSpec, args) -> dict:
    v = order.algebra.place(args.place)
    f_vec = order.invariant_at(args.place)
    out: dict = {"place": args.place, "s": args.s,
                 "count": count_omega(v, f_vec, args.s)}
    if args.list:
        out["elements"] = [
            [list(slice_vec) for slice_vec in elem.entries]
            for elem in enumerate_omega(v, f_vec, args.s)]
    return out


def _cmd_genera(order: OrderSpec, args) -> dict:
    report = total_class_number_genera(order, args.budget, args.engine)
    return {
        "count": len(report.per_genus),
        "per_genus": [
            {"genus": {label: list(vec) for label, vec in genus},
             "class_number": h}
            for genus, h in report.per_genus],
        "total": report.total,
    }


def _cmd_embed(order: OrderSpec, args) -> dict:
    return {"s": args.s, "embeddings": embedding_count(order, args.s, args.engine)}


def _cmd_transfer(order: OrderSpec, args) -> dict:
    report = transfer_check(order, args.s, args.s2, args.budget, args.engine)
    return {"s": report.s, "s2": report.s2, "lhs": report.lhs,
            "rhs": report.rhs, "equal": report.equal}


def _cmd_selfcheck(order: OrderSpec, args) -> dict:
    checks: dict[str, bool] = {}
    spec = order.algebra
    s0 = constant_field_degree(spec)
    divisors = [s for s in range(1, s0 + 1) if s0 % s == 0]

    h = weight_class_numbers(order, args.engine)
    mass = mass_hereditary(order)
    total = sum(
        (Fraction(h[s], spec.base.q ** s - 1) for s in h), Fraction(0))
    checks["mass_consistency"] = total == mass
    checks["h_nonnegative_integers"] = all(v >= 0 for v in h.values())

    engines_agree = True
    for s in divisors:
        for label in order.relevant_labels():
            v = spec.place(label)
            f_vec = order.invariant_at(label)
            if theta_enum(v, f_vec, s, spec.base.q) != \
                    theta_genfun(v, f_vec, s, spec.base.q):
                engines_agree = False
    checks["theta_engines_agree"] = engines_agree

    rotation_ok = True
    for label, f_vec in order.invariants:
        rotated = f_vec[1:] + f_vec[:1]
        alt = OrderSpec(spec, tuple(
            (lab, rotated if lab == label else vec)
            for lab, vec in order.invariants))
        if weight_class_numbers(alt, args.engine) != h:
            rotation_ok = False
    checks["rotation_invariance"] = rotation_ok

    return {"checks": checks, "all_passed": all(checks.values())}


_COMMANDS = {
    "classnum": _cmd_classnum,
    "mass": _cmd_mass,
    "theta": _cmd_theta,
    "omega": _cmd_omega,
    "genera": _cmd_genera,
    "embed": _cmd_embed,
    "transfer": _cmd_transfer,
    "selfcheck": _cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csaclass",
        description="Exact class numbers of hereditary orders in definite "
                    "central simple algebras over function fields")
    parser.add_argument("--config", required=True, help="path to JSON config")
    parser.add_argument("--output", choices=("json", "text"), default="json")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classnum")
    sub.add_parser("mass")
    p = sub.add_parser("theta")
    p.add_argument("--place", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--engine", choices=("enum", "genfun", "both"),
                   default="both")
    p = sub.add_parser("omega")
    p.add_argument("--place", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--list", action="store_true")
    sub.add_parser("genera")
    p = sub.add_parser("embed")
    p.add_argument("--s", type=int, required=True)
    p = sub.add_parser("transfer")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--s2", type=int, required=True)
    sub.add_parser("selfcheck")

    for name, p in sub.choices.items():
        if name not in ("theta",):
            p.add_argument("--engine", choices=("enum", "genfun"),
                           default="genfun")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = parse_config(fh.read())
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        for line in exc.errors:
            print(f"error: {line}", file=sys.stderr)
        return 2

    started = time.monotonic()
    try:
        report = _COMMANDS[args.command](config.order, args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except IntegralityViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CsaClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timings:
        report["timings_ms"] = {
            args.command: int((time.monotonic() - started) * 1000)}
    _emit(report, args.output)
    if args.command == "selfcheck" and not report["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
