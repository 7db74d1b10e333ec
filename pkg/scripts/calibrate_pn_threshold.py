"""Pilot run fixing the threshold for fraction * (log2 n)**2 on the Sanov pair.

The threshold is the largest upper 3-sigma bound seen in the pilot,
including a 3/T floor so that an all-zero pilot still leaves headroom for
a handful of hits.  Run once; the acceptance test reads the JSON it writes.
"""
import json
import math
import sys
from pathlib import Path

from quickwp import GeneratorSystem
from quickwp.bench import estimate_pn

SANOV = [[[1, 2], [0, 1]], [[1, 0], [2, 1]]]
LENGTHS = (2 ** 8, 2 ** 10, 2 ** 12, 2 ** 14)
TRIALS = 10_000
PILOT_SEED = 1

out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data/pn_threshold.json")
gens = GeneratorSystem.from_matrices(SANOV)
rows = []
for n in LENGTHS:
    est = estimate_pn(gens, n, TRIALS, PILOT_SEED)
    f = est.fraction
    upper = f + 3 * math.sqrt(f * (1 - f) / TRIALS) + 3 / TRIALS
    rows.append({"n": n, "hits": est.hits, "fraction": f,
                 "scaled_upper": upper * math.log2(n) ** 2})
    print(rows[-1], flush=True)

threshold = max(r["scaled_upper"] for r in rows)
out.write_text(json.dumps({"system": "sanov", "trials": TRIALS, "pilot_seed": PILOT_SEED,
                           "rng": est.rng, "pilot": rows, "threshold": threshold},
                          indent=2) + "\n")
print("threshold", threshold)
