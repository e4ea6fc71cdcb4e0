"""Print (or write) the slots where the printed worked-example results disagree
with the values recomputed from the operation definitions."""

import json
import sys

from nmrel.worked_example import divergence_report

rows = divergence_report()
text = json.dumps({"divergences": rows, "count": len(rows)}, indent=1)
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(text + "\n")
else:
    print(text)
