"""Command-line front end.

Subcommands map one-to-one onto library operations: generate-dataset,
train, query, rank, infogain, serve. Output is deterministic: identical
inputs give byte-identical bytes on stdout; diagnostics go to stderr,
with verbosity controlled by the AIRAVATA_LOG environment variable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from . import __version__
from .errors import AiravataError
from .infogain import infogain_report
from .inference import Posterior, query_marginal
from .learning import DirichletPrior, EquivalentSamplePrior
from .network import Network, network_load, network_save
from . import domain

log = logging.getLogger("airavata")

FORMATS = ("table", "csv", "json")


def _configure_logging() -> None:
    level = os.environ.get("AIRAVATA_LOG", "warning").upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        level = "WARNING"
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level))


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _load_model(path: str | None) -> Network:
    if path is None:
        log.info("no --model given, training the canonical model in memory")
        return domain.canonical_model()
    return network_load(_read(path))


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _posterior_payload(posterior: Posterior, evidence: dict[str, str]) -> dict:
    return {
        "target": posterior.variable.name,
        "evidence": evidence,
        "posterior": posterior.as_mapping(),
    }


def _render_posterior(posterior: Posterior, evidence: dict[str, str], fmt: str) -> None:
    if fmt == "json":
        _emit_json(_posterior_payload(posterior, evidence))
    elif fmt == "csv":
        sys.stdout.write("state,probability\n")
        for state, p in posterior.as_mapping().items():
            sys.stdout.write(f"{state},{p!r}\n")
    else:
        width = max(len(s) for s in posterior.variable.states)
        for state, p in posterior.as_mapping().items():
            sys.stdout.write(f"{state:<{width}}  {p:.4f}\n")


def _cmd_generate_dataset(args) -> int:
    from .learning import dataset_to_csv

    _write(args.out, dataset_to_csv(domain.generate_dataset()))
    return 0


def _cmd_train(args) -> int:
    if args.prior_alpha is not None and args.prior_ess is not None:
        raise AiravataError("--prior-alpha and --prior-ess are mutually exclusive")
    if args.data is None:
        data = domain.generate_dataset()
    else:
        data = domain.load_canonical_dataset(_read(args.data))
    if args.prior_alpha is not None:
        prior = DirichletPrior(args.prior_alpha)
    elif args.prior_ess is not None:
        prior = EquivalentSamplePrior(args.prior_ess)
    else:
        prior = domain.CANONICAL_PRIOR
    model = domain.canonical_model(data, prior)
    _write(args.out, network_save(model))
    log.info("trained canonical model on %d rows", len(data))
    return 0


def _parse_evidence(pairs: Sequence[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for pair in pairs:
        name, sep, state = pair.partition("=")
        if not sep or not name or not state:
            raise AiravataError(f"evidence must look like var=state, got {pair!r}")
        out[name] = state
    return out


def _cmd_query(args) -> int:
    model = _load_model(args.model)
    evidence: dict[str, str] = {}
    if args.attacks is not None:
        combo = [a for a in args.attacks.split(",") if a]
        evidence.update(domain.attack_evidence(combo))
    evidence.update(_parse_evidence(args.evidence))
    # canonical key order for reproducible payloads
    declared = [v.name for v in model.variables]
    evidence = {n: evidence[n] for n in declared if n in evidence}
    posterior = query_marginal(model, [args.target], evidence)
    _render_posterior(posterior, evidence, args.format)
    return 0


def _cmd_rank(args) -> int:
    model = _load_model(args.model)
    ranking = domain.rank_combinations(model, args.adversary, args.target)
    if args.format == "json":
        _emit_json(
            {
                "adversary": args.adversary,
                "target": args.target,
                "ranking": [
                    {"attacks": list(r.attacks), "belief": r.belief} for r in ranking
                ],
            }
        )
    elif args.format == "csv":
        sys.stdout.write("attacks,belief\n")
        for r in ranking:
            sys.stdout.write(f"{'+'.join(r.attacks)},{r.belief!r}\n")
    else:
        width = max(len("+".join(r.attacks)) for r in ranking)
        for r in ranking:
            sys.stdout.write(f"{'+'.join(r.attacks):<{width}}  {r.belief:.4f}\n")
    return 0


def _cmd_infogain(args) -> int:
    if args.data is None:
        data = domain.generate_dataset()
    else:
        data = domain.load_canonical_dataset(_read(args.data))
    columns = {v.name for v in data.variables}
    exclude = () if args.include_attacks else tuple(a for a in domain.ATTACKS if a in columns)
    report = infogain_report(data, args.target, exclude)
    if args.format == "json":
        _emit_json({"target": args.target, "bits": {name: bits for name, bits in report}})
    elif args.format == "csv":
        sys.stdout.write("variable,bits\n")
        for name, bits in report:
            sys.stdout.write(f"{name},{bits!r}\n")
    else:
        width = max(len(name) for name, _ in report)
        for name, bits in report:
            sys.stdout.write(f"{name:<{width}}  {bits:.4f}\n")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    model = _load_model(args.model)
    serve(
        model,
        host=args.host,
        port=args.port,
        static_dir=args.static,
        cors_origins=tuple(args.cors_origin),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airavata",
        description="Quantify what a model-extraction adversary learns from attack combinations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("generate-dataset", help="write the 32-row canonical corpus")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_generate_dataset)

    p = sub.add_parser("train", help="estimate CPDs and write a model document")
    p.add_argument("--data", default=None, help="corpus file; regenerated when omitted")
    p.add_argument("--structure", choices=["canonical"], default="canonical")
    p.add_argument("--prior-alpha", type=float, default=None, help="pseudo-count per CPD cell")
    p.add_argument(
        "--prior-ess", type=float, default=None, help="equivalent sample size split per CPD"
    )
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("query", help="posterior over a target given evidence")
    p.add_argument("--model", default=None, help="model document; canonical when omitted")
    p.add_argument("--attacks", default=None, help="comma list; clamps all five attacks")
    p.add_argument(
        "--evidence", action="append", default=[], metavar="VAR=STATE",
        help="extra evidence; overrides --attacks on conflict",
    )
    p.add_argument("--target", default=domain.KNOWLEDGE)
    add_format(p)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("rank", help="order an adversary's attack subsets by belief")
    p.add_argument("--model", default=None)
    p.add_argument("--adversary", type=int, choices=sorted(domain.ADVERSARIES), required=True)
    p.add_argument("--target", choices=list(domain.KNOWLEDGE_CLASSES), required=True)
    add_format(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("infogain", help="mutual information of attributes with a target")
    p.add_argument("--data", default=None)
    p.add_argument("--target", default=domain.KNOWLEDGE)
    p.add_argument("--include-attacks", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_infogain)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--model", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None, help="directory of built UI assets")
    p.add_argument("--cors-origin", action="append", default=[])
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    log.debug("airavata %s", __version__)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except AiravataError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
