"""Drive the command line the way a verification campaign would.

Runs a handful of small suites into a scratch directory, prints the
summary tables, and reruns one suite to show byte-identical output.

Run:  python3 demos/campaign_tour.py
"""

import sys
import tempfile
from pathlib import Path

from normlab import cli


def run(argv: list[str]) -> None:
    print(f"$ normlab {' '.join(argv)}")
    rc = cli.main(argv)
    print(f"  exit {rc}")
    assert rc == 0


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp)

        heinz_out = str(out / "heinz.jsonl")
        run(["verify", "--suite", "heinz", "--dim", "3", "--count", "5",
             "--seed", "1", "--no-timing", "--out", heinz_out])
        print((out / "heinz.jsonl.summary.csv").read_text(), end="")

        conj_out = str(out / "conj.jsonl")
        run(["conjecture", "--n", "3", "--k", "0,1", "--count", "300",
             "--seed", "1", "--no-timing", "--out", conj_out])
        print((out / "conj.jsonl.summary.csv").read_text(), end="")
        found = (out / "conj.jsonl.violations.jsonl").read_text().splitlines()
        print(f"  recorded findings: {len(found)}")

        probe_out = str(out / "probe.jsonl")
        run(["dk-probe", "--eigs", "1,-1", "--k", "1", "--seed", "2", "--count", "1",
             "--starts", "8", "--iters", "50", "--no-timing", "--out", probe_out])
        print((out / "probe.jsonl.summary.csv").read_text(), end="")

        again = str(out / "heinz2.jsonl")
        run(["verify", "--suite", "heinz", "--dim", "3", "--count", "5",
             "--seed", "1", "--no-timing", "--out", again])
        same = Path(heinz_out).read_bytes() == Path(again).read_bytes()
        print(f"rerun byte-identical: {same}")
        assert same


if __name__ == "__main__":
    sys.exit(main())
