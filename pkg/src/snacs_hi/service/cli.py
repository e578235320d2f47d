"""Command-line interface.

Exit codes: 0 clean, 1 validation errors found, 2 operational failure
(bad usage, unreadable input, broken data files).  Issues go to standard
error, one per line: severity<TAB>code<TAB>location<TAB>message.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .. import Toolkit, load_toolkit
from ..corpus import CorpusParseError, parse_file, serialize, stats as corpus_stats
from ..translit import dev_to_iast
from ..validator import AnnotationRecord
from .store import DocumentStore

ISSUE_LINE = "{severity}\t{code}\t{location}\t{message}"


class OperationalError(click.ClickException):
    """I/O or configuration failure: exit code 2, never 1."""

    exit_code = 2


def _toolkit(ctx: click.Context) -> Toolkit:
    if ctx.obj.get("toolkit") is None:
        try:
            ctx.obj["toolkit"] = load_toolkit(ctx.obj.get("hierarchy"), ctx.obj.get("lexicon"))
        except Exception as exc:
            raise OperationalError(f"cannot load data files: {exc}") from exc
    return ctx.obj["toolkit"]


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise OperationalError(str(exc)) from exc


def _parse(data: bytes):
    try:
        return parse_file(data)
    except CorpusParseError as exc:
        code = exc.code if exc.code != "PARSE" else "PARSE_ERROR"
        click.echo(f"error\t{code}\tline {exc.line}\t{exc}", err=True)
        sys.exit(1)


@click.group(context_settings={"auto_envvar_prefix": "SNACS_HI"})
@click.option("--lexicon", type=click.Path(), default=None, help="lexicon TSV override")
@click.option("--hierarchy", type=click.Path(), default=None, help="hierarchy TSV override")
@click.pass_context
def main(ctx: click.Context, lexicon, hierarchy):
    """Hindi-Urdu adposition supersense annotation toolkit."""
    ctx.obj = {"lexicon": lexicon, "hierarchy": hierarchy, "toolkit": None}


@main.command()
@click.argument("corpus_file", type=click.Path())
@click.pass_context
def validate(ctx, corpus_file):
    """Check a corpus file; exit 0 iff it produces no errors."""
    toolkit = _toolkit(ctx)
    docs = _parse(_read(corpus_file))
    n_errors = 0
    for doc in docs:
        issues = toolkit.validator.validate_document(doc.records, doc.sentence_map())
        for issue in issues:
            click.echo(
                ISSUE_LINE.format(
                    severity=issue.severity,
                    code=issue.code,
                    location=f"{doc.id}/{issue.location}" if issue.location else doc.id,
                    message=issue.message,
                ),
                err=True,
            )
            if issue.severity == "error":
                n_errors += 1
    sys.exit(1 if n_errors else 0)


@main.command()
@click.argument("corpus_file", type=click.Path())
@click.pass_context
def match(ctx, corpus_file):
    """Run the target matcher; print the corpus with matcher records added."""
    toolkit = _toolkit(ctx)
    docs = _parse(_read(corpus_file))
    for doc in docs:
        annotated = {(r.sent_id, r.target.token_indices) for r in doc.records}
        for sentence in doc.sentences:
            for target in toolkit.matcher.find_targets(sentence):
                if (sentence.source_id, target.token_indices) in annotated:
                    continue
                suggestions, _ = toolkit.validator.suggest(target)
                if not suggestions:
                    continue
                doc.records.append(
                    AnnotationRecord(
                        target=target,
                        construal=suggestions[0].construal,
                        annotator="matcher",
                        status="draft",
                        sent_id=sentence.source_id,
                    )
                )
    click.echo(serialize(docs).decode("utf-8"), nl=False)


@main.command()
@click.argument("corpus_file", type=click.Path())
@click.pass_context
def stats(ctx, corpus_file):
    """Corpus statistics as JSON."""
    toolkit = _toolkit(ctx)
    docs = _parse(_read(corpus_file))
    report = corpus_stats(docs, toolkit.matcher)
    click.echo(json.dumps(report.to_dict(), ensure_ascii=False, indent=2, sort_keys=True))


@main.command()
@click.argument("lemma")
@click.pass_context
def lookup(ctx, lemma):
    """Show a lexicon entry with its licensed construals."""
    toolkit = _toolkit(ctx)
    entry = toolkit.lexicon.lookup(lemma)
    if entry is None:
        click.echo(f"error\tUNKNOWN_LEMMA\t-\tlemma {lemma!r} not found", err=True)
        sys.exit(1)
    click.echo(f"{entry.lemma}\t{entry.category}")
    if entry.script_forms:
        click.echo("script: " + ", ".join(entry.script_forms))
    if entry.register_pair:
        click.echo(f"register pair: {entry.register_pair}")
    for lic in entry.sorted_licenses():
        condition = f"\t[{lic.condition}]" if lic.condition else ""
        click.echo(f"  {lic.rank}\t{lic.construal}\t{lic.source_section}{condition}")


@main.command()
@click.argument("text")
@click.option("--exceptions", "exceptions_file", type=click.Path(), default=None,
              help="per-word override table (devanagari<TAB>romanization)")
@click.pass_context
def translit(ctx, text, exceptions_file):
    """Romanize Devanagari text (IAST-style, schwa deletion applied)."""
    if exceptions_file:
        from ..translit import Transliterator

        try:
            result = Transliterator.from_exceptions_file(exceptions_file)(text)
        except OSError as exc:
            raise OperationalError(str(exc)) from exc
    else:
        result = dev_to_iast(text)
    for warning in result.warnings:
        click.echo(f"warning\t{warning}", err=True)
    click.echo(result.text)


@main.command()
@click.option("--port", type=int, default=8765, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--corpus", "corpus_dir", type=click.Path(), default=None, help="document store directory")
@click.pass_context
def serve(ctx, port, host, corpus_dir):
    """Start the annotation HTTP service."""
    import uvicorn

    from .api import create_app

    toolkit = _toolkit(ctx)
    store = DocumentStore(corpus_dir)
    uvicorn.run(create_app(toolkit, store), host=host, port=port)


if __name__ == "__main__":
    main()
