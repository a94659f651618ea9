#!/usr/bin/env python3
"""Write DOT files for W(S_4) with the B_2 interval [2314, 3241] and W(S_6)
with the B_3 interval [451623, 546132]; render them if graphviz is present."""

import logging
import shutil
import subprocess
from pathlib import Path

from weakfubini.perm import Permutation
from weakfubini.weak_order import BooleanInterval, hasse_dot

logger = logging.getLogger(__name__)

FIGURES = {
    "weak_order_s4_b2": (4, "2314", (1, 3)),
    "weak_order_s6_b3": (6, "451623", (1, 3, 5)),
}


def main(outdir="figures"):
    out = Path(outdir)
    out.mkdir(exist_ok=True)
    dot = shutil.which("dot")
    for name, (n, p, I) in FIGURES.items():
        path = out / f"{name}.dot"
        path.write_text(hasse_dot(n, BooleanInterval(Permutation.parse(p), I)))
        logger.info("wrote %s", path)
        if dot:
            subprocess.run([dot, "-Tsvg", str(path), "-o", str(path.with_suffix(".svg"))], check=True)
            logger.info("rendered %s", path.with_suffix(".svg"))


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    main()
