"""A short tour of the command line tool.

Each block below is equivalent to running ``branecharge ...`` in a shell.
The data files live in demos/data; p4_rays.txt holds the rays of P^4 in
matrix form, so it needs ``--polar``.
"""

from pathlib import Path

from branecharge.cli import run

DATA = Path(__file__).resolve().parent / "data"


def show(*argv):
    print("$ branecharge", " ".join(argv))
    code = run(list(argv))
    print(f"(exit {code})\n")


show("analyze", str(DATA / "p2.json"))
show("chern", str(DATA / "p3.json"), "--max-degree", "2")
show("genus", str(DATA / "p4_rays.txt"), "--polar", "--divisor", "1,0,0,0,0")
show("charge", str(DATA / "p3.json"), "--test-divisor", "1,0,0,0")
show("verify", str(DATA / "dp6.json"), "--trials", "3", "--seed", "11")
