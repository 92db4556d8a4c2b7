"""Regenerate the batch golden files under tests/golden from the bundled corpus.

Run after an intentional change to report content, then review the diff.
"""
from contextlib import redirect_stdout
from importlib import resources
from io import StringIO
from pathlib import Path

from palmorph.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    corpus = str(resources.files("palmorph").joinpath("data/worked_examples.corpus"))
    GOLDEN.mkdir(exist_ok=True)
    for suffix, extra in ((".txt", []), (".json", ["--json"])):
        buf = StringIO()
        with redirect_stdout(buf):
            code = run(["batch", corpus, *extra], out=buf)
        assert code == 0, f"batch exited {code}"
        (GOLDEN / f"worked_examples{suffix}").write_text(buf.getvalue(), encoding="utf-8")
        print(f"wrote {GOLDEN / ('worked_examples' + suffix)}")


if __name__ == "__main__":
    main()
