#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Layered-defense command line

Optimal attacks, security-system construction, optimality checks,
model transforms and tree classification on JSON documents.
"""

import argparse
import dataclasses
import logging
import os
import sys
from typing import List, Optional

from .attack_solver import Dominance, maxp_profile, profile_leq, solve_maxp
from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import SecuritySystem, same_multisets
from .documents import (
    load_model,
    load_security_system,
    load_tree,
    to_document,
    write_json,
)
from .duality import b_thresholds, dual_C_to_P, dual_P_to_C, scale_prizes
from .errors import ClassError, LayeredDefenseError, MultisetMismatch, NotScaled, WrongTreeClass
from .oracle import Status, find_optimal_ss
from .rational import format_rational, parse_rational
from .strategy import good_ss, optimal_ss
from .survey import summarize, survey
from .taxonomy import classify, contains_rooted_pattern
from .transform import (
    contract_zero_cost_edges,
    scale_costs_to_integers,
    scale_prizes_to_integers,
    to_cmodel,
    to_pmodel,
)

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False, log_file: Optional[str] = None):
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def _limits(args) -> SolverLimits:
    limits = DEFAULT_LIMITS
    if args.max_n is not None:
        limits = dataclasses.replace(limits, max_bruteforce_n=args.max_n, max_oracle_n=args.max_n)
    if args.budget_ceiling is not None:
        limits = dataclasses.replace(limits, dp_budget_ceiling=args.budget_ceiling)
    return dataclasses.replace(limits, jobs=max(1, args.jobs))


def _heads(ss: SecuritySystem, attack) -> str:
    heads = attack.heads(ss.tree)
    return ' '.join(heads) if heads else '(root only)'


def _emit(document: dict, output: Optional[str], correspondence: Optional[dict] = None):
    write_json(document, output or '-')
    if correspondence is not None and output:
        stem, _ = os.path.splitext(output)
        write_json(correspondence, f"{stem}.map.json")


def cmd_maxp(args) -> int:
    ss = load_security_system(args.document)
    limits = _limits(args)
    if args.budget is not None:
        value, attack = solve_maxp(ss, args.budget, limits)
        print(format_rational(value))
        print(f"attack: {_heads(ss, attack)}")
    if args.profile or args.csv:
        df = maxp_profile(ss, limits).to_frame(ss.tree)
        if args.csv:
            df.to_csv(args.csv, index=False, encoding='utf-8')
            logger.info(f"Profile saved to {args.csv}")
        if args.profile:
            print(df.to_string(index=False))
    return 0


def cmd_classify(args) -> int:
    tree = load_tree(args.document)
    tree_class = classify(tree)
    print(tree_class.describe())
    if tree_class.relabeling is not None:
        for position, vertex in enumerate(tree_class.relabeling, start=1):
            print(f"  u{position} = {tree.vertices[vertex]}")
    for pattern in ('T2', 'T3'):
        embedding = contains_rooted_pattern(tree, pattern)
        label = f"T({pattern[1]})"
        if embedding is None:
            print(f"contains {label}: no")
        else:
            mapped = ', '.join(f"{p}->{h}" for p, h in embedding.items())
            print(f"contains {label}: yes ({mapped})")
    return 0


def cmd_build_ss(args) -> int:
    model = load_model(args.document)
    if args.mode == 'good':
        ss = good_ss(model)
    else:
        try:
            ss = optimal_ss(model)
        except ClassError as e:
            raise WrongTreeClass(f"{e}; no constructor; try check-optimal") from None
    _emit(to_document(ss), args.output)
    return 0


def cmd_check_optimal(args) -> int:
    model = load_model(args.document)
    verdict = find_optimal_ss(model, prune=not args.no_prune, limits=_limits(args))
    if verdict.status is Status.OPTIMAL_EXISTS:
        print(verdict.status.value)
        write_json(to_document(verdict.witness), '-')
        return 0
    pair = verdict.counter_pair
    print(f"{verdict.status.value}; budgets {format_rational(pair.first_budget)} "
          f"and {format_rational(pair.second_budget)}")
    write_json({'first': to_document(pair.first), 'second': to_document(pair.second)}, '-')
    return 0


def cmd_to_p(args) -> int:
    ss = load_security_system(args.document)
    notes = {}
    if args.scale:
        ss, factor = scale_costs_to_integers(ss)
        contraction = contract_zero_cost_edges(ss)
        ss = contraction.ss
        notes = {'budget_scale': factor, 'free_prize': format_rational(contraction.free_prize)}
    result = to_pmodel(ss)
    _emit(to_document(result.ss), args.output, {'vertices': result.correspondence(), **notes})
    return 0


def cmd_to_c(args) -> int:
    ss = load_security_system(args.document)
    notes = {}
    if args.scale:
        ss, factor = scale_prizes_to_integers(ss)
        notes = {'prize_scale': factor}
    result = to_cmodel(ss)
    _emit(to_document(result.ss), args.output, {'vertices': result.correspondence(), **notes})
    return 0


def cmd_dual(args) -> int:
    ss = load_security_system(args.document)
    if ss.is_unit_cost:
        if args.scale:
            scaled, alpha = scale_prizes(ss.prize)
            ss = ss.with_prizes(scaled)
            logger.info(f"Scaled prizes by {alpha}")
        dual = dual_P_to_C(ss)
    elif ss.is_unit_prize:
        dual = dual_C_to_P(ss)
    else:
        raise NotScaled("dual needs a unit-cost or unit-prize security system")
    _emit(to_document(dual), args.output, {'vertices': {v: [v] for v in ss.tree.vertices}})
    return 0


def cmd_compare(args) -> int:
    first = load_security_system(args.first)
    second = load_security_system(args.second)
    if not same_multisets(first, second):
        raise MultisetMismatch("Security systems differ in tree or in their cost/prize multisets")
    limits = _limits(args)
    report = profile_leq(maxp_profile(first, limits), maxp_profile(second, limits))
    low1 = format_rational(report.first_lower_at) if report.first_lower_at is not None else None
    low2 = format_rational(report.second_lower_at) if report.second_lower_at is not None else None
    if report.relation is Dominance.EQUAL:
        print("equal")
    elif report.relation is Dominance.FIRST_LOWER:
        print(f"first improved; strictly better at {low1}")
    elif report.relation is Dominance.SECOND_LOWER:
        print(f"second improved; strictly better at {low2}")
    else:
        print(f"incomparable; first better at {low1}, second better at {low2}")
    return 0


def cmd_thresholds(args) -> int:
    ss = load_security_system(args.document)
    for m, threshold in enumerate(b_thresholds(ss)):
        print(f"B_{m} = {format_rational(threshold)}")
    return 0


def cmd_survey(args) -> int:
    df = survey(args.min_size, args.max_size, flavor=args.flavor, limits=_limits(args))
    if args.csv:
        df.to_csv(args.csv, index=False, encoding='utf-8')
        logger.info(f"Survey saved to {args.csv}")
    print(summarize(df).to_string())
    inconsistent = df[df['consistent'].isin([False])] if not df.empty else df
    print(f"\n{len(df)} trees, {len(inconsistent)} inconsistent classifications")
    return 0


def _budget_arg(text: str):
    try:
        return parse_rational(text)
    except LayeredDefenseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='layered-defense',
                                     description='Layered-security solvers on rooted trees')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging')
    parser.add_argument('--log-file', help='Also write the log to this file')
    parser.add_argument('--max-n', type=int, help='Override the enumeration and oracle size guards')
    parser.add_argument('--budget-ceiling', type=int, help='Override the DP scaled-budget ceiling')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes for the oracle')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('maxp', help='Maximum attack prize within a budget')
    p.add_argument('document', help='Security-system JSON')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--budget', type=_budget_arg, help='Budget such as 3, 7/2 or 3.5')
    group.add_argument('--profile', action='store_true', help='Print the full breakpoint table')
    p.add_argument('--csv', help='Also save the breakpoint table as CSV')
    p.set_defaults(handler=cmd_maxp)

    p = sub.add_parser('classify', help='Tree class and forbidden patterns')
    p.add_argument('document', help='Tree, model or security-system JSON')
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser('build-ss', help='Good or optimal security system for a model')
    p.add_argument('document', help='Model JSON')
    p.add_argument('--mode', choices=['good', 'optimal'], default='good')
    p.add_argument('-o', '--output', help='Output path (stdout by default)')
    p.set_defaults(handler=cmd_build_ss)

    p = sub.add_parser('check-optimal', help='Exhaustive optimal-SS check')
    p.add_argument('document', help='Model JSON')
    p.add_argument('--no-prune', action='store_true', help='Profile every assignment')
    p.set_defaults(handler=cmd_check_optimal)

    for name, handler, text in (('to-p', cmd_to_p, 'Unit-cost model by edge subdivision'),
                                ('to-c', cmd_to_c, 'Unit-prize model by vertex expansion'),
                                ('dual', cmd_dual, 'Dual P-model / C-model security system')):
        p = sub.add_parser(name, help=text)
        p.add_argument('document', help='Security-system JSON')
        p.add_argument('-o', '--output', help='Output path; the correspondence goes to <stem>.map.json')
        p.add_argument('--scale', action='store_true', help='Scale weights first')
        p.set_defaults(handler=handler)

    p = sub.add_parser('compare', help='Profile dominance between two security systems')
    p.add_argument('first')
    p.add_argument('second')
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser('thresholds', help='B_m table of a unit-prize security system')
    p.add_argument('document')
    p.set_defaults(handler=cmd_thresholds)

    p = sub.add_parser('survey', help='Classify every small rooted tree')
    p.add_argument('--min-size', type=int, default=1, help='Smallest tree size (edges)')
    p.add_argument('--max-size', type=int, default=5, help='Largest tree size (edges)')
    p.add_argument('--flavor', choices=['P', 'C'], default='P')
    p.add_argument('--csv', help='Save the survey table as CSV')
    p.set_defaults(handler=cmd_survey)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.log_file)
    try:
        return args.handler(args)
    except LayeredDefenseError as e:
        logger.error(f"{args.command}: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
