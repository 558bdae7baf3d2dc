from supersat.cli import run

raise SystemExit(run())
