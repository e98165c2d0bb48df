#!/usr/bin/env python3
"""Write every builtin object (weak bialgebras, categories, Frobenius
algebras, span bimonoids) as JSON files into a directory.

Usage: python3 scripts/export_gallery.py [outdir]   (default: ./gallery_json)
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from weakbialg import serialize
from weakbialg.catgrp import BUILTIN_CATEGORY_NAMES, builtin_category
from weakbialg.frobenius import BUILTIN_FROBENIUS_NAMES, builtin_frobenius
from weakbialg.gallery import GALLERY_WBA_NAMES, gallery_wba
from weakbialg.spans import category_to_span_bimonoid


def main(argv):
    outdir = pathlib.Path(argv[1] if len(argv) > 1 else "gallery_json")
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(stem, obj):
        path = outdir / (stem.replace(":", "_") + ".json")
        serialize.dump(obj, str(path))
        written.append(path.name)

    for name in GALLERY_WBA_NAMES:
        emit("wba_" + name, serialize.wba_to_json(gallery_wba(name)))
    for name in BUILTIN_CATEGORY_NAMES:
        A = builtin_category(name)
        emit("cat_" + name, serialize.category_to_json(A))
        emit("span_" + name,
             serialize.span_bimonoid_to_json(category_to_span_bimonoid(A)))
    for name in BUILTIN_FROBENIUS_NAMES:
        R, F = builtin_frobenius(name)
        emit("frob_" + name, serialize.frobenius_to_json(R, F))

    print(f"wrote {len(written)} files to {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
