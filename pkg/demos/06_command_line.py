import tempfile
from pathlib import Path

from linedecomp.cli import main

# The same steps from the shell: linedecomp construct ..., linedecomp solve ..., etc.
work = Path(tempfile.mkdtemp())
g, tours = work / "k5.g", work / "k5.tours"

main(["construct", "complete", "--n", "5", "-o", str(g)])
print(g.read_text().splitlines()[:3])

main(["solve", "perfect-euler", str(g), "-o", str(tours)])
print(tours.read_text())
main(["verify", str(g), str(tours)])

# Flip one id and the verifier points at the line
bad = work / "bad.tours"
lines = tours.read_text().splitlines()
lines[2] = lines[2].replace(" 1 ", " 2 ", 1)
bad.write_text("\n".join(lines) + "\n")
print("exit", main(["verify", str(g), str(bad)]))

main(["audit", "theorem1", "--k", "3", "--t", "4"])
main(["pipeline", "theorem4", "--k", "4", "--out-dir", str(work / "t4")])
print(sorted(p.name for p in (work / "t4").iterdir()))
