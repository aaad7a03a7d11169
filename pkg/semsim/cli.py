"""
Command-line front end.

    python -m semsim sim --ontology fix1.tax --measure wup fever diarrhea
    python -m semsim bench --ontology fix1.tax --dataset mini8.tsv --measures wup,lch,path
    python -m semsim lcs --ontology fix1.tax fever diarrhea
    python -m semsim stats --ontology fix1.tax
    python -m semsim validate --ontology broken.tax

Output is TAB separated on stdout; diagnostics go to stderr.
Exit codes: 0 ok, 2 usage/input error, 3 lookup error, 4 empty result.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, TextIO, Tuple

from .bench import evaluate, render_report
from .config import configure_logging
from .errors import MissingICProvider, SemsimError, UnknownWord
from .information_content import CORPUS, INTRINSIC, ICProvider, make_provider
from .measure_registry import (
    MeasureParams,
    WordScore,
    get_descriptor,
    parse_param_overrides,
    word_similarity,
)
from .ontology_io import load_corpus_counts, load_pair_dataset, load_taxonomy
from .taxonomy import Taxonomy

logger = logging.getLogger(__name__)

IC_NONE = "none"


@dataclass(frozen=True)
class CliConfig:
    ontology: str
    ontology2: Optional[str] = None
    ontology_format: str = "auto"
    corpus: Optional[str] = None
    ic_kind: str = IC_NONE
    measures: Tuple[str, ...] = ("wup",)
    params: Tuple[str, ...] = ()
    output_format: str = "csv"
    dataset: Optional[str] = None
    smoothing: bool = False

    def __post_init__(self) -> None:
        if self.ic_kind not in (CORPUS, INTRINSIC, IC_NONE):
            raise SemsimError(f"--ic must be corpus, intrinsic or none, got {self.ic_kind!r}")
        if self.ic_kind == CORPUS and not self.corpus:
            raise MissingICProvider("--ic corpus needs --corpus PATH")


@dataclass
class Session:
    """Loaded inputs for one command."""

    config: CliConfig
    taxonomy: Taxonomy
    taxonomy2: Optional[Taxonomy] = None
    ic: Optional[ICProvider] = None
    params: MeasureParams = field(default_factory=MeasureParams)


def _effective_ic_kind(config: CliConfig) -> str:
    # a corpus file alone implies corpus IC
    if config.ic_kind == IC_NONE and config.corpus:
        return CORPUS
    return config.ic_kind


def open_session(config: CliConfig) -> Session:
    t = load_taxonomy(config.ontology, config.ontology_format)
    t2 = load_taxonomy(config.ontology2, config.ontology_format) if config.ontology2 else None

    kind = _effective_ic_kind(config)
    counts = load_corpus_counts(config.corpus, t) if kind == CORPUS else None
    ic = make_provider(t, kind, counts, smoothing=config.smoothing)

    params = parse_param_overrides(config.params)
    logger.debug("session: %r ic=%s", t, kind)
    return Session(config=config, taxonomy=t, taxonomy2=t2, ic=ic, params=params)


# =======================
# Commands
# =======================

def run_sim(session: Session, w1: str, w2: str) -> List[WordScore]:
    """One score per requested measure, in the order given."""
    return [
        word_similarity(session.taxonomy, session.ic, name, session.params, w1, w2, t2=session.taxonomy2)
        for name in session.config.measures
    ]


def cmd_sim(config: CliConfig, w1: str, w2: str, out: TextIO = sys.stdout) -> int:
    session = open_session(config)
    # all measures are scored before anything is printed
    for ws in run_sim(session, w1, w2):
        c1, c2 = ws.chosen_pair
        out.write(f"{ws.measure}\t{w1}\t{w2}\t{ws.score:.4f}\t{c1}\t{c2}\n")
    return 0


def cmd_bench(config: CliConfig, out: TextIO = sys.stdout) -> int:
    if not config.dataset:
        raise SemsimError("bench needs --dataset PATH")
    dataset = load_pair_dataset(config.dataset)
    session = open_session(config)
    for name in config.measures:
        get_descriptor(name)
    report = evaluate(
        session.taxonomy,
        session.ic,
        list(config.measures),
        dataset,
        params=session.params,
        t2=session.taxonomy2,
    )
    out.write(render_report(report, config.output_format))
    return 0


def cmd_lcs(config: CliConfig, w1: str, w2: str, out: TextIO = sys.stdout) -> int:
    t = load_taxonomy(config.ontology, config.ontology_format)
    # word-level lookup: deepest LCS over all sense pairs
    senses1 = sorted(t.resolve_word(w1))
    senses2 = sorted(t.resolve_word(w2))
    if not senses1:
        raise UnknownWord(f"word {w1!r} names no concept")
    if not senses2:
        raise UnknownWord(f"word {w2!r} names no concept")
    infos = [t.lcs(a, b) for a in senses1 for b in senses2]
    info = min(infos, key=lambda i: (-i.n, i.n1 + i.n2, i.lcs))
    out.write(f"{info.lcs}\tn={info.n}\tn1={info.n1}\tn2={info.n2}\n")
    return 0


def cmd_stats(config: CliConfig, out: TextIO = sys.stdout) -> int:
    t = load_taxonomy(config.ontology, config.ontology_format)
    edges, nodes = t.deep_max()
    out.write(
        f"concepts={len(t)} isa={len(t.isa_edges)} partof={len(t.partof_edges)} "
        f"deep_max_edges={edges} deep_max_nodes={nodes}\n"
    )
    return 0


def cmd_validate(config: CliConfig, out: TextIO = sys.stdout) -> int:
    t = load_taxonomy(config.ontology, config.ontology_format)
    out.write(f"OK\t{config.ontology}\tconcepts={len(t)}\n")
    if config.corpus:
        load_corpus_counts(config.corpus, t)
        out.write(f"OK\t{config.corpus}\n")
    if config.dataset:
        load_pair_dataset(config.dataset)
        out.write(f"OK\t{config.dataset}\n")
    return 0


# =======================
# Argument parsing
# =======================

def _split_tokens(values: Optional[Sequence[str]]) -> Tuple[str, ...]:
    out: List[str] = []
    for v in values or ():
        out.extend(s.strip() for s in v.split(",") if s.strip())
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ontology", required=True, help="taxonomy file (native .tax or MeSH tree)")
    common.add_argument("--ontology2", default=None, help="second taxonomy (rodriguez)")
    common.add_argument("--ontology-format", default="auto", choices=["auto", "native", "mesh"])
    common.add_argument("--corpus", default=None, help="concept_id<TAB>count file")
    common.add_argument("--ic", default=IC_NONE, choices=[CORPUS, INTRINSIC, IC_NONE])
    common.add_argument("--smoothing", action="store_true", help="smooth zero corpus counts")
    common.add_argument("--measure", "--measures", dest="measures", action="append", default=None,
                        help="registry token(s), comma separated")
    common.add_argument("--param", dest="params", action="append", default=[], help="name=value (repeatable)")
    common.add_argument("--format", dest="output_format", default="csv", choices=["csv", "markdown"])
    common.add_argument("--dataset", default=None, help="pair dataset for bench")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="semsim", description="Ontology-based semantic similarity")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("sim", parents=[common], help="score two words")
    p_sim.add_argument("word1")
    p_sim.add_argument("word2")

    sub.add_parser("bench", parents=[common], help="correlate measures with human ratings")

    p_lcs = sub.add_parser("lcs", parents=[common], help="least common subsumer of two words")
    p_lcs.add_argument("word1")
    p_lcs.add_argument("word2")

    sub.add_parser("stats", parents=[common], help="taxonomy size and depth")
    sub.add_parser("validate", parents=[common], help="parse inputs and report the first error")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    measures = _split_tokens(args.measures) or ("wup",)
    return CliConfig(
        ontology=args.ontology,
        ontology2=args.ontology2,
        ontology_format=args.ontology_format,
        corpus=args.corpus,
        ic_kind=args.ic,
        measures=measures,
        params=tuple(args.params),
        output_format=args.output_format,
        dataset=args.dataset,
        smoothing=args.smoothing,
    )


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.verbose:
        configure_logging("DEBUG" if args.verbose > 1 else "INFO")
    else:
        configure_logging()

    try:
        config = config_from_args(args)
        if args.command == "sim":
            return cmd_sim(config, args.word1, args.word2, out)
        if args.command == "bench":
            return cmd_bench(config, out)
        if args.command == "lcs":
            return cmd_lcs(config, args.word1, args.word2, out)
        if args.command == "stats":
            return cmd_stats(config, out)
        return cmd_validate(config, out)
    except SemsimError as e:
        err.write(f"{e.name}: {e.message}\n")
        return e.exit_code
    except OSError as e:
        err.write(f"IOError: {e}\n")
        return 2
