#!/usr/bin/env python3
"""Generate the GRID4 analytic fixture as GeoJSON + config files.

GRID4 is a 380 x 380 m street grid: 16 blocks of 80 x 80 m separated by
12 m streets, with 10 road axes down the street centers.  Every quantity
has a closed-form value (e.g. public space = 380^2 - 16*80^2 = 42 000 m2;
carriageway at the 7 m rule = 10*380*7 - 25*7^2 = 25 375 m2), which makes
the fixture handy for exercising the CLI end to end.

Usage: scripts/make_grid4.py [output_dir]   (default: ./grid4)
"""

import json
import os
import sys

CRS_NOTE = "coordinates are planar meters in a projected CRS (not transformed by this tool)"

SIZE = 380.0
BLOCK = 80.0
OFFSETS = [12.0, 104.0, 196.0, 288.0]
CENTERS = [6.0, 98.0, 190.0, 282.0, 374.0]


def feature(geometry, properties):
    return {"type": "Feature", "geometry": geometry, "properties": properties}


def collection(features):
    return {"type": "FeatureCollection", "crs_note": CRS_NOTE, "features": features}


def box(x0, y0, x1, y1):
    return {
        "type": "Polygon",
        "coordinates": [[[x0, y0], [x1, y0], [x1, y1], [x0, y1], [x0, y0]]],
    }


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "grid4"
    os.makedirs(out_dir, exist_ok=True)

    boundary = collection([feature(box(0, 0, SIZE, SIZE), {"label": "GRID4"})])

    parcels = collection([
        feature(box(ox, oy, ox + BLOCK, oy + BLOCK), {"id": f"P{i}"})
        for i, (oy, ox) in enumerate((oy, ox) for oy in OFFSETS for ox in OFFSETS)
    ])

    axes_features = []
    for i, x in enumerate(CENTERS):
        axes_features.append(feature(
            {"type": "LineString", "coordinates": [[x, 0.0], [x, SIZE]]},
            {"id": f"V{i}", "category": "voie_auto"}))
    for i, y in enumerate(CENTERS):
        axes_features.append(feature(
            {"type": "LineString", "coordinates": [[0.0, y], [SIZE, y]]},
            {"id": f"H{i}", "category": "voie_auto"}))
    axes = collection(axes_features)

    widths = {"voie_auto": 7.0, "fallback_width": 3.5}

    for name, doc in [
        ("boundary.geojson", boundary),
        ("parcels.geojson", parcels),
        ("axes.geojson", axes),
        ("widths.json", widths),
    ]:
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
