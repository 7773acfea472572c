#!/usr/bin/env python3
"""Regenerate the packaged IEEE case files from their source tables.

Provenance
----------
* ieee14.json  — IEEE 14-bus transmission test system, branch resistance and
  reactance (per unit on 100 MVA) transcribed from the MATPOWER ``case14``
  distribution of the classic IEEE data.  Slack: bus 1.  Branches with zero
  resistance are the five two-winding transformers; their off-nominal tap
  ratios (0.978, 0.969, 0.932) are NOT carried — the case schema has no tap
  field and the weight pipeline works on series impedances alone.
* ieee33.json  — 33-bus radial distribution feeder (Baran & Wu), branch
  impedances in ohms converted to per unit on 100 MVA / 12.66 kV
  (Z_base = 12.66^2 / 100 ohm), as in MATPOWER ``case33bw``.  Only the 32
  normally-closed branches are included; the five normally-open tie lines
  (8-21, 9-15, 12-22, 18-33, 25-29) are omitted because they are out of
  service in the source and leaving them in changes the network from the
  operated radial topology to a meshed one.  Slack: bus 1.
* ieee118.json — IEEE 118-bus test system per MATPOWER ``case118`` (per unit
  on 100 MVA).  Parallel circuits are kept as separate entries (the loader
  merges them); the nine tapped transformers are marked ``transformer`` and,
  as above, tap ratios are dropped.  Slack: bus 69.

None of the three sources carries thermal limits (the rating column is zero
throughout), so every branch gets a uniform nominal rating equal to the MVA
base.  The line-sensitivity weights are rating-scale-free under a uniform
rating, so this choice only fixes units, not results.

Buses are written 0-based with the original 1-based number kept as the name.
"""
import json
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "gridcommunity" / "cases"
BASE_MVA = 100.0
NOMINAL_RATING_MW = 100.0

# (from, to, r_pu, x_pu, kind), 1-based bus numbers
IEEE14_BRANCHES = [
    (1, 2, 0.01938, 0.05917, "line"),
    (1, 5, 0.05403, 0.22304, "line"),
    (2, 3, 0.04699, 0.19797, "line"),
    (2, 4, 0.05811, 0.17632, "line"),
    (2, 5, 0.05695, 0.17388, "line"),
    (3, 4, 0.06701, 0.17103, "line"),
    (4, 5, 0.01335, 0.04211, "line"),
    (4, 7, 0.0, 0.20912, "transformer"),
    (4, 9, 0.0, 0.55618, "transformer"),
    (5, 6, 0.0, 0.25202, "transformer"),
    (6, 11, 0.09498, 0.19890, "line"),
    (6, 12, 0.12291, 0.25581, "line"),
    (6, 13, 0.06615, 0.13027, "line"),
    (7, 8, 0.0, 0.17615, "transformer"),
    (7, 9, 0.0, 0.11001, "transformer"),
    (9, 10, 0.03181, 0.08450, "line"),
    (9, 14, 0.12711, 0.27038, "line"),
    (10, 11, 0.08205, 0.19207, "line"),
    (12, 13, 0.22092, 0.19988, "line"),
    (13, 14, 0.17093, 0.34802, "line"),
]

# (from, to, R_ohm, X_ohm) for the 32 normally-closed branches
IEEE33_ZBASE_OHM = 12.66 ** 2 / 100.0
IEEE33_BRANCHES_OHM = [
    (1, 2, 0.0922, 0.0470),
    (2, 3, 0.4930, 0.2511),
    (3, 4, 0.3660, 0.1864),
    (4, 5, 0.3811, 0.1941),
    (5, 6, 0.8190, 0.7070),
    (6, 7, 0.1872, 0.6188),
    (7, 8, 0.7114, 0.2351),
    (8, 9, 1.0300, 0.7400),
    (9, 10, 1.0440, 0.7400),
    (10, 11, 0.1966, 0.0650),
    (11, 12, 0.3744, 0.1238),
    (12, 13, 1.4680, 1.1550),
    (13, 14, 0.5416, 0.7129),
    (14, 15, 0.5910, 0.5260),
    (15, 16, 0.7463, 0.5450),
    (16, 17, 1.2890, 1.7210),
    (17, 18, 0.7320, 0.5740),
    (2, 19, 0.1640, 0.1565),
    (19, 20, 1.5042, 1.3554),
    (20, 21, 0.4095, 0.4784),
    (21, 22, 0.7089, 0.9373),
    (3, 23, 0.4512, 0.3083),
    (23, 24, 0.8980, 0.7091),
    (24, 25, 0.8960, 0.7011),
    (6, 26, 0.2030, 0.1034),
    (26, 27, 0.2842, 0.1447),
    (27, 28, 1.0590, 0.9337),
    (28, 29, 0.8042, 0.7006),
    (29, 30, 0.5075, 0.2585),
    (30, 31, 0.9744, 0.9630),
    (31, 32, 0.3105, 0.3619),
    (32, 33, 0.3410, 0.5302),
]

IEEE118_BRANCHES = [
    (1, 2, 0.0303, 0.0999, "line"),
    (1, 3, 0.0129, 0.0424, "line"),
    (4, 5, 0.00176, 0.00798, "line"),
    (3, 5, 0.0241, 0.108, "line"),
    (5, 6, 0.0119, 0.054, "line"),
    (6, 7, 0.00459, 0.0208, "line"),
    (8, 9, 0.00244, 0.0305, "line"),
    (8, 5, 0.0, 0.0267, "transformer"),
    (9, 10, 0.00258, 0.0322, "line"),
    (4, 11, 0.0209, 0.0688, "line"),
    (5, 11, 0.0203, 0.0682, "line"),
    (11, 12, 0.00595, 0.0196, "line"),
    (2, 12, 0.0187, 0.0616, "line"),
    (3, 12, 0.0484, 0.16, "line"),
    (7, 12, 0.00862, 0.034, "line"),
    (11, 13, 0.02225, 0.0731, "line"),
    (12, 14, 0.0215, 0.0707, "line"),
    (13, 15, 0.0744, 0.2444, "line"),
    (14, 15, 0.0595, 0.195, "line"),
    (12, 16, 0.0212, 0.0834, "line"),
    (15, 17, 0.0132, 0.0437, "line"),
    (16, 17, 0.0454, 0.1801, "line"),
    (17, 18, 0.0123, 0.0505, "line"),
    (18, 19, 0.01119, 0.0493, "line"),
    (19, 20, 0.0252, 0.117, "line"),
    (15, 19, 0.012, 0.0394, "line"),
    (20, 21, 0.0183, 0.0849, "line"),
    (21, 22, 0.0209, 0.097, "line"),
    (22, 23, 0.0342, 0.159, "line"),
    (23, 24, 0.0135, 0.0492, "line"),
    (23, 25, 0.0156, 0.08, "line"),
    (26, 25, 0.0, 0.0382, "transformer"),
    (25, 27, 0.0318, 0.163, "line"),
    (27, 28, 0.01913, 0.0855, "line"),
    (28, 29, 0.0237, 0.0943, "line"),
    (30, 17, 0.0, 0.0388, "transformer"),
    (8, 30, 0.00431, 0.0504, "line"),
    (26, 30, 0.00799, 0.086, "line"),
    (17, 31, 0.0474, 0.1563, "line"),
    (29, 31, 0.0108, 0.0331, "line"),
    (23, 32, 0.0317, 0.1153, "line"),
    (31, 32, 0.0298, 0.0985, "line"),
    (27, 32, 0.0229, 0.0755, "line"),
    (15, 33, 0.038, 0.1244, "line"),
    (19, 34, 0.0752, 0.247, "line"),
    (35, 36, 0.00224, 0.0102, "line"),
    (35, 37, 0.011, 0.0497, "line"),
    (33, 37, 0.0415, 0.142, "line"),
    (34, 36, 0.00871, 0.0268, "line"),
    (34, 37, 0.00256, 0.0094, "line"),
    (38, 37, 0.0, 0.0375, "transformer"),
    (37, 39, 0.0321, 0.106, "line"),
    (37, 40, 0.0593, 0.168, "line"),
    (30, 38, 0.00464, 0.054, "line"),
    (39, 40, 0.0184, 0.0605, "line"),
    (40, 41, 0.0145, 0.0487, "line"),
    (40, 42, 0.0555, 0.183, "line"),
    (41, 42, 0.041, 0.135, "line"),
    (43, 44, 0.0608, 0.2454, "line"),
    (34, 43, 0.0413, 0.1681, "line"),
    (44, 45, 0.0224, 0.0901, "line"),
    (45, 46, 0.04, 0.1356, "line"),
    (46, 47, 0.038, 0.127, "line"),
    (46, 48, 0.0601, 0.189, "line"),
    (47, 49, 0.0191, 0.0625, "line"),
    (42, 49, 0.0715, 0.323, "line"),
    (42, 49, 0.0715, 0.323, "line"),
    (45, 49, 0.0684, 0.186, "line"),
    (48, 49, 0.0179, 0.0505, "line"),
    (49, 50, 0.0267, 0.0752, "line"),
    (49, 51, 0.0486, 0.137, "line"),
    (51, 52, 0.0203, 0.0588, "line"),
    (52, 53, 0.0405, 0.1635, "line"),
    (53, 54, 0.0263, 0.122, "line"),
    (49, 54, 0.073, 0.289, "line"),
    (49, 54, 0.0869, 0.291, "line"),
    (54, 55, 0.0169, 0.0707, "line"),
    (54, 56, 0.00275, 0.00955, "line"),
    (55, 56, 0.00488, 0.0151, "line"),
    (56, 57, 0.0343, 0.0966, "line"),
    (50, 57, 0.0474, 0.134, "line"),
    (56, 58, 0.0343, 0.0966, "line"),
    (51, 58, 0.0255, 0.0719, "line"),
    (54, 59, 0.0503, 0.2293, "line"),
    (56, 59, 0.0825, 0.251, "line"),
    (56, 59, 0.0803, 0.239, "line"),
    (55, 59, 0.04739, 0.2158, "line"),
    (59, 60, 0.0317, 0.145, "line"),
    (59, 61, 0.0328, 0.15, "line"),
    (60, 61, 0.00264, 0.0135, "line"),
    (60, 62, 0.0123, 0.0561, "line"),
    (61, 62, 0.00824, 0.0376, "line"),
    (63, 59, 0.0, 0.0386, "transformer"),
    (63, 64, 0.00172, 0.02, "line"),
    (64, 61, 0.0, 0.0268, "transformer"),
    (38, 65, 0.00901, 0.0986, "line"),
    (64, 65, 0.00269, 0.0302, "line"),
    (49, 66, 0.018, 0.0919, "line"),
    (49, 66, 0.018, 0.0919, "line"),
    (62, 66, 0.0482, 0.218, "line"),
    (62, 67, 0.0258, 0.117, "line"),
    (65, 66, 0.0, 0.037, "transformer"),
    (66, 67, 0.0224, 0.1015, "line"),
    (65, 68, 0.00138, 0.016, "line"),
    (47, 69, 0.0844, 0.2778, "line"),
    (49, 69, 0.0985, 0.324, "line"),
    (68, 69, 0.0, 0.037, "transformer"),
    (69, 70, 0.03, 0.127, "line"),
    (24, 70, 0.00221, 0.4115, "line"),
    (70, 71, 0.00882, 0.0355, "line"),
    (24, 72, 0.0488, 0.196, "line"),
    (71, 72, 0.0446, 0.18, "line"),
    (71, 73, 0.00866, 0.0454, "line"),
    (70, 74, 0.0401, 0.1323, "line"),
    (70, 75, 0.0428, 0.141, "line"),
    (69, 75, 0.0405, 0.122, "line"),
    (74, 75, 0.0123, 0.0406, "line"),
    (76, 77, 0.0444, 0.148, "line"),
    (69, 77, 0.0309, 0.101, "line"),
    (75, 77, 0.0601, 0.1999, "line"),
    (77, 78, 0.00376, 0.0124, "line"),
    (78, 79, 0.00546, 0.0244, "line"),
    (77, 80, 0.017, 0.0485, "line"),
    (77, 80, 0.0294, 0.105, "line"),
    (79, 80, 0.0156, 0.0704, "line"),
    (68, 81, 0.00175, 0.0202, "line"),
    (81, 80, 0.0, 0.037, "transformer"),
    (77, 82, 0.0298, 0.0853, "line"),
    (82, 83, 0.0112, 0.03665, "line"),
    (83, 84, 0.0625, 0.132, "line"),
    (83, 85, 0.043, 0.148, "line"),
    (84, 85, 0.0302, 0.0641, "line"),
    (85, 86, 0.035, 0.123, "line"),
    (86, 87, 0.02828, 0.2074, "line"),
    (85, 88, 0.02, 0.102, "line"),
    (85, 89, 0.0239, 0.173, "line"),
    (88, 89, 0.0139, 0.0712, "line"),
    (89, 90, 0.0518, 0.188, "line"),
    (89, 90, 0.0238, 0.0997, "line"),
    (90, 91, 0.0254, 0.0836, "line"),
    (89, 92, 0.0099, 0.0505, "line"),
    (89, 92, 0.0393, 0.1581, "line"),
    (91, 92, 0.0387, 0.1272, "line"),
    (92, 93, 0.0258, 0.0848, "line"),
    (92, 94, 0.0481, 0.158, "line"),
    (93, 94, 0.0223, 0.0732, "line"),
    (94, 95, 0.0132, 0.0434, "line"),
    (80, 96, 0.0356, 0.182, "line"),
    (82, 96, 0.0162, 0.053, "line"),
    (94, 96, 0.0269, 0.0869, "line"),
    (80, 97, 0.0183, 0.0934, "line"),
    (80, 98, 0.0238, 0.108, "line"),
    (80, 99, 0.0454, 0.206, "line"),
    (92, 100, 0.0648, 0.295, "line"),
    (94, 100, 0.0178, 0.058, "line"),
    (95, 96, 0.0171, 0.0547, "line"),
    (96, 97, 0.0173, 0.0885, "line"),
    (98, 100, 0.0397, 0.179, "line"),
    (99, 100, 0.018, 0.0813, "line"),
    (100, 101, 0.0277, 0.1262, "line"),
    (92, 102, 0.0123, 0.0559, "line"),
    (101, 102, 0.0246, 0.112, "line"),
    (100, 103, 0.016, 0.0525, "line"),
    (100, 104, 0.0451, 0.204, "line"),
    (103, 104, 0.0466, 0.1584, "line"),
    (103, 105, 0.0535, 0.1625, "line"),
    (100, 106, 0.0605, 0.229, "line"),
    (104, 105, 0.00994, 0.0378, "line"),
    (105, 106, 0.014, 0.0547, "line"),
    (105, 107, 0.053, 0.183, "line"),
    (105, 108, 0.0261, 0.0703, "line"),
    (106, 107, 0.053, 0.183, "line"),
    (108, 109, 0.0105, 0.0288, "line"),
    (103, 110, 0.03906, 0.1813, "line"),
    (109, 110, 0.0278, 0.0762, "line"),
    (110, 111, 0.022, 0.0755, "line"),
    (110, 112, 0.0247, 0.064, "line"),
    (17, 113, 0.00913, 0.0301, "line"),
    (32, 113, 0.0615, 0.203, "line"),
    (32, 114, 0.0135, 0.0612, "line"),
    (27, 115, 0.0164, 0.0741, "line"),
    (114, 115, 0.0023, 0.0104, "line"),
    (68, 116, 0.00034, 0.00405, "line"),
    (12, 117, 0.0329, 0.14, "line"),
    (75, 118, 0.0145, 0.0481, "line"),
    (76, 118, 0.0164, 0.0544, "line"),
]


def case_dict(n_buses: int, slack: int, branches) -> dict:
    """branches: (from_1based, to_1based, r_pu, x_pu, kind)."""
    return {
        "base_mva": BASE_MVA,
        "buses": [
            {"id": b - 1, "name": str(b), "is_slack": b == slack}
            for b in range(1, n_buses + 1)
        ],
        "branches": [
            {"from": f - 1, "to": t - 1, "r_pu": r, "x_pu": x,
             "rating_mw": NOMINAL_RATING_MW, "kind": kind}
            for f, t, r, x, kind in branches
        ],
    }


def ieee33_branches_pu():
    return [
        (f, t, round(r / IEEE33_ZBASE_OHM, 10), round(x / IEEE33_ZBASE_OHM, 10),
         "line")
        for f, t, r, x in IEEE33_BRANCHES_OHM
    ]


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    cases = {
        "ieee14.json": case_dict(14, 1, IEEE14_BRANCHES),
        "ieee33.json": case_dict(33, 1, ieee33_branches_pu()),
        "ieee118.json": case_dict(118, 69, IEEE118_BRANCHES),
    }
    for name, payload in cases.items():
        path = OUT_DIR / name
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
        print(f"wrote {path} ({len(payload['branches'])} branches)")


if __name__ == "__main__":
    main()
