#!/usr/bin/env python3
"""Run the default negativity sweep and the Bogoliubov diagnostics.

Writes sweep.csv and bogo_diagnostics.csv into the current directory (or the
directory given as the first argument).
"""

import os
import sys

from collapse_entanglement.cli import main

out_dir = sys.argv[1] if len(sys.argv) > 1 else "."
os.makedirs(out_dir, exist_ok=True)
raise SystemExit(
    main(
        [
            "--out", os.path.join(out_dir, "sweep.csv"),
            "--bogo-diagnostics", os.path.join(out_dir, "bogo_diagnostics.csv"),
            "--jobs", str(os.cpu_count() or 1),
        ]
    )
)
