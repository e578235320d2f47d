#!/usr/bin/env python3
"""Summarize the gold mini-corpus: size, coverage, and validation status."""

import json

from snacs_hi import GOLD_CORPUS_PATH, Toolkit
from snacs_hi.corpus import parse_file, stats


def main() -> None:
    tk = Toolkit()
    (doc,) = parse_file(GOLD_CORPUS_PATH.read_bytes())
    issues = tk.validator.validate_document(doc.records, doc.sentence_map())
    report = stats([doc], tk.matcher)

    groups = set()
    for rec in doc.records:
        groups.add(tk.hierarchy.group_root(rec.construal.scene).group)
        groups.add(tk.hierarchy.group_root(rec.construal.function).group)
    discontinuous = sum(1 for r in doc.records if r.target.discontinuous)

    print(f"sentences:            {len(doc.sentences)}")
    print(f"records:              {report.record_total}")
    print(f"distinct lemmas:      {len(report.per_lemma)}")
    print(f"groups covered:       {', '.join(sorted(groups))}")
    print(f"discontinuous:        {discontinuous}")
    print(f"congruent/construed:  {report.congruent}/{report.construed}")
    print(f"unannotated targets:  {report.unannotated_targets}")
    print(f"validation issues:    {len(issues)}")
    print()
    by_count = sorted(report.per_lemma.items(), key=lambda kv: -sum(kv[1].values()))
    print("top lemmas:")
    for lemma, counts in by_count[:10]:
        print(f"  {lemma:>14s}  {sum(counts.values()):3d}  {json.dumps(counts, ensure_ascii=False)}")


if __name__ == "__main__":
    main()
