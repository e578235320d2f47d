#!/usr/bin/env python3
"""Print the basic spatio-temporal function matrix derived from the lexicon.

Rows are the nine core functions, columns the seven markers (bare oblique
included); a check means the lexicon licenses that function for the marker.
"""

from snacs_hi import Toolkit
from snacs_hi.lexicon import TABLE1_COLUMNS, TABLE1_FUNCTIONS


def main() -> None:
    lexicon = Toolkit().lexicon
    rows = {f: [] for f in TABLE1_FUNCTIONS}
    for column in TABLE1_COLUMNS:
        allowed = lexicon.allowed_functions(column)
        for function in TABLE1_FUNCTIONS:
            rows[function].append("x" if allowed[function] else ".")
    width = max(len(f) for f in TABLE1_FUNCTIONS)
    header = " " * width + "  " + "  ".join(f"{c:>8s}" for c in TABLE1_COLUMNS)
    print(header)
    for function in TABLE1_FUNCTIONS:
        cells = "  ".join(f"{c:>8s}" for c in rows[function])
        print(f"{function:>{width}s}  {cells}")
    total = sum(row.count("x") for row in rows.values())
    print(f"\npositive cells: {total}")


if __name__ == "__main__":
    main()
