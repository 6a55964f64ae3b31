"""
Command-line entry point for the Black Swan logic toolkit.
Checks proofs, scans finite models, runs the decision-model searches and
manages the bundled proof corpus.

Exit codes: 0 success, 1 negative verdict, 2 input or configuration error.
"""

import sys
import logging
import logging.handlers
import argparse
from pathlib import Path
from typing import List, Optional

from .config.settings import AppConfig, ConfigManager, config_manager, with_caps
from .data.reports import Report, dump_report, render_report, save_report
from .decision.completeness import CompletenessProperty, check_completeness, search_decision_maps
from .decision.universe_file import load_universe
from .errors import BlackSwanError, KernelError, ParseError
from .kernel.checker import check_proof
from .kernel.corpus import check_corpus, corpus_names, list_corpus, load_corpus_entry
from .kernel.script import ProofScript, parse_script
from .kernel.theories import get_theory
from .semantics.entailment import check_entailment
from .semantics.models import Mode


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

USE_CONFIGURED = -1
_HANDLER_MARK = '_blackswan_handler'


class BlackSwanToolkit:
    """Runs one command against a loaded configuration."""

    def __init__(self, config: AppConfig, verbose: bool = False, json_output: bool = False):
        self.config = config
        self.json_output = json_output
        self.setup_logging(verbose)
        self.logger = logging.getLogger(__name__)

    def setup_logging(self, verbose: bool = False):
        """Setup logging configuration."""
        log_config = self.config.logging

        logger = logging.getLogger()
        for handler in [h for h in logger.handlers if getattr(h, _HANDLER_MARK, False)]:
            logger.removeHandler(handler)
            handler.close()
        logger.setLevel(logging.DEBUG if verbose else getattr(logging, log_config.level.upper()))

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

        if log_config.file:
            file_handler = logging.handlers.RotatingFileHandler(
                log_config.file,
                maxBytes=log_config.max_size_mb * 1024 * 1024,
                backupCount=log_config.backup_count
            )
            file_handler.setFormatter(formatter)
            setattr(file_handler, _HANDLER_MARK, True)
            logger.addHandler(file_handler)

        # stdout carries the reports
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        setattr(console_handler, _HANDLER_MARK, True)
        logger.addHandler(console_handler)

    def emit(self, report: Report, out: Optional[str] = None, trace: bool = False) -> None:
        """Print the report and optionally save its machine-readable form."""
        print(dump_report(report) if self.json_output else render_report(report, trace))
        if out:
            save_report(report, out)

    def verify_corpus(self) -> bool:
        """Startup re-check of the bundled proofs."""
        report = check_corpus()
        if not report.ok:
            failed = [e.name for e in report.entries if not e.accepted]
            self.logger.error(f"Bundled proofs failed their re-check: {', '.join(failed)}")
        return report.ok

    def _load_script(self, target: str) -> ProofScript:
        path = Path(target)
        if path.exists():
            return parse_script(path.read_text(encoding="utf-8"), name=path.stem)
        if target in corpus_names():
            return load_corpus_entry(target)
        raise KernelError(f"No proof file or bundled proof named {target!r}")

    def cmd_check(self, args) -> int:
        script = self._load_script(args.file)
        report = check_proof(script)
        self.emit(report, args.out, trace=args.trace)
        return EXIT_OK if report.accepted else EXIT_NEGATIVE

    def cmd_models(self, args) -> int:
        theory = get_theory(args.theory)
        names = [n for item in args.premises for n in item.split(',') if n]
        premises = [theory.formula(n) for n in names]
        conclusion = theory.formula(args.conclusion)
        report = check_entailment(premises, conclusion, args.max_n, Mode.parse(args.mode), self.config)
        self.emit(report, args.out)
        return EXIT_OK if report.entailed else EXIT_NEGATIVE

    def cmd_decision(self, args) -> int:
        caps = {}
        if args.max_actions is not None:
            caps['max_actions'] = args.max_actions
        if args.max_outcomes is not None:
            caps['max_outcomes'] = args.max_outcomes
        config = with_caps(self.config, **caps)
        config_manager.use(config)

        problem = load_universe(args.file)
        prop = CompletenessProperty.parse(args.property)
        if args.search_maps:
            report = search_decision_maps(problem.universe, problem.actions, problem.outcomes,
                                          prop, config.decision)
            found_complete = report.complete_maps > 0
        else:
            report = check_completeness(problem.phi, problem.universe, problem.actions, problem.outcomes,
                                        prop, config.decision, problem.gamma)
            found_complete = report.complete
        self.emit(report, args.out)

        if args.expect is None:
            return EXIT_OK if found_complete else EXIT_NEGATIVE
        return EXIT_OK if found_complete == (args.expect == 'complete') else EXIT_NEGATIVE

    def cmd_corpus(self, args) -> int:
        if args.action == 'list':
            for name, script in list_corpus():
                print(f"{name}\t{script.theory}\t{script.goal}\t{len(script)} lines")
            return EXIT_OK
        seed = args.seed if args.seed is not None else self.config.kernel.mutation_seed
        count = self.config.kernel.mutation_count if args.mutations == USE_CONFIGURED else args.mutations
        report = check_corpus(mutations=count, seed=seed)
        self.emit(report, args.out)
        return EXIT_OK if report.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blackswan", description="Black Swan logic toolkit")
    parser.add_argument("--config", help="Path to config.yaml")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--json", action="store_true", help="Print the machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Check a proof script")
    check.add_argument("file", help="Proof file or bundled proof name")
    check.add_argument("--trace", action="store_true", help="List every line with its justification")
    check.add_argument("--out", help="Write the report as JSON")

    models = sub.add_parser("models", help="Scan finite models for counterexamples")
    models.add_argument("--premises", nargs="*", default=[], help="Premise names (space or comma separated)")
    models.add_argument("--conclusion", required=True, help="Conclusion name")
    models.add_argument("--max-n", type=int, default=3, help="Largest domain size")
    models.add_argument("--mode", default="arbitrary", choices=["arbitrary", "strict", "strict-order"])
    models.add_argument("--theory", default="blackswan", help="Theory the names refer to")
    models.add_argument("--out", help="Write the report as JSON")

    decision = sub.add_parser("decision", help="Completeness search on a universe file")
    decision.add_argument("file", help="Universe file or bundled universe name")
    decision.add_argument("--property", default="occurring",
                          choices=["complete", "occurring", "complete-wrt-occurring"])
    decision.add_argument("--max-actions", type=int, help="Action-set bound")
    decision.add_argument("--max-outcomes", type=int, help="Outcome-set bound")
    decision.add_argument("--search-maps", action="store_true", help="Count complete maps over all tables")
    decision.add_argument("--expect", choices=["complete", "incomplete"], help="Expected verdict")
    decision.add_argument("--out", help="Write the report as JSON")

    corpus = sub.add_parser("corpus", help="List or re-check the bundled proofs")
    corpus.add_argument("action", choices=["list", "check"])
    corpus.add_argument("--mutations", type=int, nargs="?", const=USE_CONFIGURED, default=0,
                        help="Mutations of the golden proof to try (bare flag: configured count)")
    corpus.add_argument("--seed", type=int, help="Mutation seed")
    corpus.add_argument("--out", help="Write the report as JSON")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)

    try:
        manager = ConfigManager(args.config) if args.config else config_manager
        config = manager.load_config()
        config_manager.use(config)
        toolkit = BlackSwanToolkit(config, verbose=args.verbose, json_output=args.json)

        if config.kernel.verify_corpus_on_startup and args.command != 'corpus':
            if not toolkit.verify_corpus():
                print("error: bundled proof corpus failed its re-check", file=sys.stderr)
                return EXIT_ERROR

        commands = {
            'check': toolkit.cmd_check,
            'models': toolkit.cmd_models,
            'decision': toolkit.cmd_decision,
            'corpus': toolkit.cmd_corpus,
        }
        return commands[args.command](args)

    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except BlackSwanError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\nStopped by user", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
