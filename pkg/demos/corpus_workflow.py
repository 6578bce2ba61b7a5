"""Generate a ground-truth corpus, verify it, then catch an injected fault.

Corpus entries are synthesized in O(n) with no suffix sorting, so very large
instances are cheap; verification streams the files and pins every value of
the expected suffix array.  The same flow is available from the command line
as `apsa corpus gen` / `apsa corpus verify`.
"""

import tempfile
from pathlib import Path

import numpy as np

from apsa.corpus import generate_corpus, read_manifest, verify_corpus, verify_sa_file

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "corpus"
    manifest = generate_corpus(
        out, sizes=[64, 100_000], cases=["binary3", "ternary"], seed="demo"
    )
    print(f"generated {len(manifest.entries)} entries in {out}")
    for entry in manifest.entries:
        print(f"  {entry.id}: n={entry.n} k={entry.k} p1={entry.p1}")

    results = verify_corpus(out / "manifest.txt")
    print("\nfresh corpus verifies:", all(r.ok for r in results))

    entry = read_manifest(out / "manifest.txt").entries[0]
    sa_path = out / entry.sa_name
    arr = np.fromfile(sa_path, dtype="<u8")
    victim = 17
    arr[victim] = int(arr[victim]) % entry.n + 1
    arr.tofile(sa_path)
    res = verify_sa_file(sa_path, entry.n, entry.k, entry.p1)
    print(
        f"after corrupting entry {victim + 1} of {entry.id}:"
        f" ok={res.ok}, first mismatch at index {res.first_bad}"
    )
