"""Writing the theta sweeps behind the pairwise, one-vs-rest and tangle curves to CSV."""

import math
import sys
from pathlib import Path

from wmonogamy.cli import SweepSpec, sweep_csv

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figure_data")
out_dir.mkdir(parents=True, exist_ok=True)

panels = {
    "pairwise_negativity.csv": ("pairwise_negativity",),
    "one_vs_rest_negativity.csv": ("one_vs_rest_negativity",),
    "negativity_tangle.csv": ("negativity_tangle",),
}
for name, quantities in panels.items():
    spec = SweepSpec([3, 4, 5, 6], 0.0, 2 * math.pi, 201, quantities)
    (out_dir / name).write_text(sweep_csv(spec, jobs=4))
    print("wrote", out_dir / name)

# Same data from the shell:
#   wmonogamy sweep --n 3 4 5 6 --quantities negativity_tangle --output tangle.csv
