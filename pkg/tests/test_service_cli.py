import json

import pytest
from click.testing import CliRunner

from snacs_hi import GOLD_CORPUS_PATH
from snacs_hi.corpus import parse_file
from snacs_hi.service.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


GOLD = str(GOLD_CORPUS_PATH)


def test_validate_gold_exits_zero(runner):
    result = runner.invoke(main, ["validate", GOLD])
    assert result.exit_code == 0, result.stderr


def test_validate_broken_file_exits_one(runner, tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text(
        "# doc_id = d\n\n# sent_id = s\n0\tāg\n1\tne\n"
        "@ 1\tne\tLocus\tann\tconfirmed\n",
        encoding="utf-8",
    )
    result = runner.invoke(main, ["validate", str(bad)])
    assert result.exit_code == 1
    line = result.stderr.strip().splitlines()[-1]
    severity, code, location, message = line.split("\t")
    assert severity == "error"
    assert code == "UNLICENSED_CONSTRUAL"
    assert "s@1" in location


def test_validate_missing_file_exits_two(runner):
    result = runner.invoke(main, ["validate", "/nonexistent/nothing.tsv"])
    assert result.exit_code == 2


def test_unknown_subcommand_exits_two(runner):
    result = runner.invoke(main, ["frobnicate"])
    assert result.exit_code == 2


def test_lookup(runner):
    result = runner.invoke(main, ["lookup", "ke_bāre_meṁ"])
    assert result.exit_code == 0
    assert "Topic" in result.output
    assert "§Topic" in result.output


def test_lookup_unknown(runner):
    result = runner.invoke(main, ["lookup", "zzz"])
    assert result.exit_code == 1
    assert "UNKNOWN_LEMMA" in result.stderr


def test_translit(runner):
    result = runner.invoke(main, ["translit", "के बारे में"])
    assert result.exit_code == 0
    assert result.output.strip() == "ke bāre meṁ"


def test_stats_json(runner):
    result = runner.invoke(main, ["stats", GOLD])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["record_total"] >= 60
    assert payload["per_lemma"]["ne"]


def test_match_emits_parseable_corpus(runner, tmp_path):
    src = tmp_path / "in.tsv"
    src.write_text(
        "# doc_id = d\n\n# sent_id = s\n0\tmez\n1\tko\n2\tsāf\n3\tkaro\n",
        encoding="utf-8",
    )
    result = runner.invoke(main, ["match", str(src)])
    assert result.exit_code == 0
    (doc,) = parse_file(result.output)
    assert [(r.target.token_indices, r.target.lemma) for r in doc.records] == [((1,), "ko")]
    assert doc.records[0].annotator == "matcher"
    assert doc.records[0].status == "draft"
