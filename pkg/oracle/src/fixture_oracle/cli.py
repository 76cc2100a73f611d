"""Command line for generating and checking fixtures."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .emit import (
    generate_prox_fixtures,
    generate_solver_fixtures,
    regenerate_fixture,
    revalidate_fixture,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="graphjoint-oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="solve the fixture plan and write JSON files")
    gen.add_argument("--out", required=True, help="fixture directory")

    regen = sub.add_parser("regenerate", help="re-solve committed fixtures and compare objectives")
    regen.add_argument("fixtures", nargs="+", help="fixture JSON files")

    check = sub.add_parser("revalidate", help="re-evaluate stored points without solving")
    check.add_argument("fixtures", nargs="+", help="fixture JSON files")

    args = parser.parse_args(argv)

    if args.command == "generate":
        out_dir = Path(args.out)
        paths = generate_solver_fixtures(out_dir / "solver")
        prox_path = generate_prox_fixtures(out_dir / "prox_fixtures.json")
        for p in paths + [prox_path]:
            print(f"wrote {p}")
        return 0

    checker = regenerate_fixture if args.command == "regenerate" else revalidate_fixture
    failed = False
    for path in args.fixtures:
        ok, msg = checker(path)
        print(f"{'OK  ' if ok else 'FAIL'} {path}: {msg}")
        failed = failed or not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
