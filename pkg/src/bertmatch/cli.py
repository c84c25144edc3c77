"""Command-line front end: one-shot pair scoring, line-aligned corpus
scoring, and launching the HTTP service.

JSON output for a pair is built through the same payload path as the
service, so the bytes match a /score response for identical inputs.
"""

from __future__ import annotations

import argparse
import socket
import sys
from pathlib import Path

from .embedding import DETERMINISTIC_TEST, MODEL_FILE, ProviderConfig, make_provider
from .errors import ScoringError
from .scoring import score_with_provider
from .serialize import canonical_json, report_payload
from .version import ENGINE_VERSION
from .vocab import load_vocab

EXIT_OK = 0
EXIT_RUNTIME = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 on usage errors; 2 is reserved for
    # runtime failures here, so usage problems exit 64.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bertmatch", description=__doc__)
    parser.add_argument("--reference", help="reference text for one-shot scoring")
    parser.add_argument("--candidate", help="candidate text for one-shot scoring")
    parser.add_argument("--ref-file", help="file of reference lines")
    parser.add_argument("--cand-file", help="file of candidate lines, aligned by line")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--vocab", help="vocabulary file path")
    parser.add_argument("--provider", choices=("test", "model"), default=None)
    parser.add_argument("--model", help="model file path (provider=model)")
    parser.add_argument("--seed", type=int, default=None, help="test-provider seed (default 0)")
    parser.add_argument("--contextual", action="store_true", help="position-aware test vectors")
    parser.add_argument("--dim", type=int, default=None, help="test-provider dimension (default 8)")
    parser.add_argument("--truncate", action="store_true", help="truncate instead of erroring past 512 tokens")
    parser.add_argument("--serve", metavar="ADDR", help="run the HTTP service on host:port")
    parser.add_argument("--version", action="version", version=ENGINE_VERSION)
    return parser


def _provider_config(args) -> ProviderConfig:
    provider = args.provider or ("model" if args.model else "test")
    if provider == "model":
        return ProviderConfig(kind=MODEL_FILE, model_path=args.model)
    return ProviderConfig(
        kind=DETERMINISTIC_TEST,
        dim=8 if args.dim is None else args.dim,
        seed=0 if args.seed is None else args.seed,
        contextual=args.contextual,
    )


def _tsv_row(payload: dict) -> str:
    return "\t".join(
        (
            f"{payload['precision']:.6f}",
            f"{payload['recall']:.6f}",
            f"{payload['f1']:.6f}",
            str(len(payload["unmatched_reference"])),
            str(len(payload["unmatched_candidate"])),
        )
    )


def run_score_pair(args, parser) -> int:
    if args.reference is None or args.candidate is None:
        parser.error("--reference and --candidate must be given together")
    if not args.vocab:
        parser.error("--vocab is required for scoring")
    vocab = load_vocab(args.vocab)
    provider = make_provider(_provider_config(args))
    report = score_with_provider(
        args.reference, args.candidate, vocab, provider, truncate=args.truncate
    )
    payload = report_payload(report, provider.provider_id)
    if args.format == "tsv":
        print(_tsv_row(payload))
    else:
        print(canonical_json(payload))
    return EXIT_OK


def run_score_files(args, parser) -> int:
    if args.ref_file is None or args.cand_file is None:
        parser.error("--ref-file and --cand-file must be given together")
    if not args.vocab:
        parser.error("--vocab is required for scoring")
    ref_lines = Path(args.ref_file).read_text(encoding="utf-8").splitlines()
    cand_lines = Path(args.cand_file).read_text(encoding="utf-8").splitlines()
    if len(ref_lines) != len(cand_lines):
        print(
            f"line count mismatch: {args.ref_file} has {len(ref_lines)} lines, "
            f"{args.cand_file} has {len(cand_lines)}",
            file=sys.stderr,
        )
        return EXIT_RUNTIME

    vocab = load_vocab(args.vocab)
    provider = make_provider(_provider_config(args))
    payloads = []
    for ref_line, cand_line in zip(ref_lines, cand_lines):
        report = score_with_provider(
            ref_line, cand_line, vocab, provider, truncate=args.truncate
        )
        payloads.append(report_payload(report, provider.provider_id))

    n = len(payloads)
    mean = lambda key: sum(p[key] for p in payloads) / n
    if args.format == "tsv":
        for payload in payloads:
            print(_tsv_row(payload))
        total_ref = sum(len(p["unmatched_reference"]) for p in payloads)
        total_cand = sum(len(p["unmatched_candidate"]) for p in payloads)
        print(
            "\t".join(
                (
                    f"{mean('precision'):.6f}",
                    f"{mean('recall'):.6f}",
                    f"{mean('f1'):.6f}",
                    str(total_ref),
                    str(total_cand),
                )
            )
        )
    else:
        for payload in payloads:
            print(canonical_json(payload))
        summary = {
            "pairs": n,
            "precision": mean("precision"),
            "recall": mean("recall"),
            "f1": mean("f1"),
        }
        print(canonical_json(summary))
    return EXIT_OK


def run_serve(args, parser) -> int:
    import uvicorn

    from .service.app import create_app
    from .service.config import ServiceConfig

    host, _, port_text = args.serve.rpartition(":")
    if not host or not port_text.isdigit():
        parser.error("--serve expects HOST:PORT")
    config = ServiceConfig.from_env()
    config.host = host
    config.port = int(port_text)
    if args.vocab:
        config.vocab_path = args.vocab
    if args.model:
        config.model_path = args.model
        config.provider = "model"
    if args.provider:
        config.provider = args.provider
    if args.dim is not None:
        config.dim = args.dim
    if args.seed is not None:
        config.seed = args.seed
    if args.contextual:
        config.contextual = True

    app = create_app(config)
    try:
        sock = socket.create_server((config.host, config.port))
    except OSError as exc:
        print(f"cannot bind {config.host}:{config.port}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    bound_host, bound_port = sock.getsockname()[:2]
    print(f"listening on http://{bound_host}:{bound_port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    try:
        server.run(sockets=[sock])
    except KeyboardInterrupt:
        # The server re-raises a captured SIGINT after draining connections;
        # an interrupted serve is a clean exit.
        pass
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    pair_mode = args.reference is not None or args.candidate is not None
    files_mode = args.ref_file is not None or args.cand_file is not None
    serve_mode = args.serve is not None
    selected = sum((pair_mode, files_mode, serve_mode))

    try:
        if selected != 1:
            parser.error(
                "choose exactly one mode: --reference/--candidate, "
                "--ref-file/--cand-file, or --serve"
            )
        if serve_mode:
            return run_serve(args, parser)
        if files_mode:
            return run_score_files(args, parser)
        return run_score_pair(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ScoringError as exc:
        print(f"{exc.error_code}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
