"""
Driving the command line
========================

Everything above is also reachable from the ``mingenus`` command.  Here
it is called in process so the demo needs no shell.
"""
import os
import random
import tempfile

from mingenus.cli import run
from mingenus.homology import random_class

run(["genus", "--class", '{"g":2,"handles":[[0,0,0,0],[0,0,0,0]],"e":1,"f":0}'])
run(["--format", "json", "normalize", "--class", '{"g":1,"handles":[[0,0,0,0]],"e":1,"f":0}'])
run(["act", "--class", '{"handles":[[1,2,3,4]]}', "--word", "Rz(1), Fy"])

# batch mode: one record per line, malformed lines become error records
rng = random.Random(3)
lines = [random_class(rng, 2).dumps() for _ in range(3)] + ["not a class"]
with tempfile.NamedTemporaryFile("w", suffix=".jsonl", delete=False) as fh:
    fh.write("\n".join(lines) + "\n")
code = run(["--format", "json", "genus", "--batch", fh.name])
os.unlink(fh.name)
print("batch exit code:", code)

run(["selftest", "--seed", "7", "--samples", "100"])
