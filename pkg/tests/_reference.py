"""Published 10-digit reference values for the six benchmark cases.

Each case: (r, alpha, y) -> dict with the exact value, the cosine-form and
airy-form approximations, and the published |relative error| cells.  Case 4
has no cosine-form row.

The exact-value cell of case 4 is stored as 7.792106311e-15 + ... ; the
published source prints 7.792063111e-15 (digits transposed).  The published
error cell 0.000285226 is consistent only with the corrected value (it gives
0.000285 vs 0.000287 for the printed one), and the imaginary part and the
approximation row match the corrected computation to all ten digits.
"""

CASES = {
    1: {
        "params": (100.0, 0.1, 0.9999),
        "f2": complex(-6.008705138e-16, -1.461019048e-15),
        "cor2": complex(-5.595045762e-16, -1.360356225e-15),
        "cor2_err": 0.068890994,
        "cor3": complex(-5.763136445e-16, -1.401225097e-15),
        "cor3_err": 0.0409179003,
    },
    2: {
        "params": (100.0, 0.1, 0.991),
        "f2": complex(1.854052580e-14, -2.566435037e-14),
        "cor2": complex(2.246324758e-14, -3.109567770e-14),
        "cor2_err": 0.211610836,
        "cor3": complex(1.854248101e-14, -2.566819473e-14),
        "cor3_err": 0.000136225,
    },
    3: {
        "params": (100.0, 0.1, 0.993),
        "f2": complex(-2.795222815e-14, 9.161763311e-15),
        "cor2": complex(-2.755422703e-14, 9.031954601e-15),
        "cor2_err": 0.014231835,
        "cor3": complex(-2.794277351e-14, 9.159315612e-15),
        "cor3_err": 0.000332015,
    },
    4: {
        "params": (100.0, 0.1, 0.989),
        "f2": complex(7.792106311e-15, 1.395437691e-14),
        "cor2": None,
        "cor2_err": None,
        "cor3": complex(7.794616502e-15, 1.395818219e-14),
        "cor3_err": 0.000285226,
    },
    5: {
        "params": (100.0, 0.02, 0.9999),
        "f2": complex(0.001824209, 0.002110461),
        "cor2": complex(0.001725718, 0.001996498),
        "cor2_err": 0.053995710,
        "cor3": complex(0.001807240, 0.002090810),
        "cor3_err": 0.009307311,
    },
    6: {
        "params": (100.0, 0.02, 0.9997),
        "f2": complex(-0.004422131, 0.000382789),
        "cor2": complex(-0.005487073, 0.000474996),
        "cor2_err": 0.240821678,
        "cor3": complex(-0.004427232, 0.000383249),
        "cor3_err": 0.001154018,
    },
}


def rel_diff(got: complex, want: complex) -> float:
    return abs(got - want) / abs(want)
