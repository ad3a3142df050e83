"""Published values of the simulation tables, used as comparison columns.

Every triple is ordered (deshpande, hp, ahmad). Power keys are
``(scenario, a, n)``; size keys are ``(m, n)``; estimator keys are ``(test, m)``.
"""

SAMPLE_SIZES = (100, 200, 500)
WINDOW_SIZES = (2, 3, 5, 10)
TEST_ORDER = ("deshpande", "hp", "ahmad")


# (test, m) -> k * sigma target and per-n bias / mean / EMSE of k * sigma_hat
ESTIMATOR = {
    ('deshpande', 2): {
        "target": 0.1778,
        "bias": {100: 0.0051, 200: 0.0047, 500: 0.0035},
        "mean": {100: 0.1727, 200: 0.1731, 500: 0.1743},
        "emse": {100: 0.002, 200: 0.0013, 500: 0.0007},
    },
    ('deshpande', 3): {
        "target": 0.2155,
        "bias": {100: 0.0078, 200: 0.0068, 500: 0.0049},
        "mean": {100: 0.2077, 200: 0.2087, 500: 0.2106},
        "emse": {100: 0.0033, 200: 0.0021, 500: 0.0011},
    },
    ('deshpande', 5): {
        "target": 0.2767,
        "bias": {100: 0.0133, 200: 0.01, 500: 0.0072},
        "mean": {100: 0.2633, 200: 0.2667, 500: 0.2694},
        "emse": {100: 0.0067, 200: 0.0042, 500: 0.0022},
    },
    ('deshpande', 10): {
        "target": 0.3903,
        "bias": {100: 0.044, 200: 0.0273, 500: 0.0164},
        "mean": {100: 0.3463, 200: 0.3631, 500: 0.3739},
        "emse": {100: 0.0158, 200: 0.012, 500: 0.0064},
    },
    ('hp', 2): {
        "target": 0.1438,
        "bias": {100: 0.005, 200: 0.0043, 500: 0.0031},
        "mean": {100: 0.1388, 200: 0.1396, 500: 0.1407},
        "emse": {100: 0.0014, 200: 0.0009, 500: 0.0005},
    },
    ('hp', 3): {
        "target": 0.1741,
        "bias": {100: 0.0074, 200: 0.0063, 500: 0.0044},
        "mean": {100: 0.1667, 200: 0.1678, 500: 0.1697},
        "emse": {100: 0.0022, 200: 0.0014, 500: 0.0008},
    },
    ('hp', 5): {
        "target": 0.2233,
        "bias": {100: 0.0122, 200: 0.0099, 500: 0.0068},
        "mean": {100: 0.2111, 200: 0.2134, 500: 0.2165},
        "emse": {100: 0.0043, 200: 0.0028, 500: 0.0015},
    },
    ('hp', 10): {
        "target": 0.315,
        "bias": {100: 0.0354, 200: 0.0236, 500: 0.0144},
        "mean": {100: 0.2796, 200: 0.2914, 500: 0.3006},
        "emse": {100: 0.0097, 200: 0.0074, 500: 0.0041},
    },
    ('ahmad', 2): {
        "target": 0.7368,
        "bias": {100: 0.0492, 200: 0.0369, 500: 0.0243},
        "mean": {100: 0.6876, 200: 0.6999, 500: 0.7125},
        "emse": {100: 0.0203, 200: 0.0145, 500: 0.0088},
    },
    ('ahmad', 3): {
        "target": 0.8803,
        "bias": {100: 0.0671, 200: 0.0512, 500: 0.0341},
        "mean": {100: 0.8132, 200: 0.8291, 500: 0.8462},
        "emse": {100: 0.0293, 200: 0.0208, 500: 0.0128},
    },
    ('ahmad', 5): {
        "target": 1.1209,
        "bias": {100: 0.1035, 200: 0.0798, 500: 0.0545},
        "mean": {100: 1.0174, 200: 1.0411, 500: 1.0664},
        "emse": {100: 0.0496, 200: 0.0352, 500: 0.0212},
    },
    ('ahmad', 10): {
        "target": 1.5757,
        "bias": {100: 0.2673, 200: 0.1705, 500: 0.1069},
        "mean": {100: 1.3084, 200: 1.4052, 500: 1.4687},
        "emse": {100: 0.1054, 200: 0.0702, 500: 0.0438},
    },
}

# (m, n) -> size / critpt under the block-sum standardization and the i.i.d. one
SIZE = {
    (2, 100): {
        "size": (0.0642, 0.0657, 0.0761),
        "critpt": (1.7991, -1.7874, 1.9226),
        "iid_size": (0.1488, 0.1533, 0.1166),
        "iid_critpt": (2.6602, -2.6778, 2.2396),
    },
    (2, 200): {
        "size": (0.0601, 0.0567, 0.0662),
        "critpt": (1.753, -1.7251, 1.8066),
        "iid_size": (0.1354, 0.1383, 0.11),
        "iid_critpt": (2.508, -2.4975, 2.1354),
    },
    (2, 500): {
        "size": (0.0553, 0.055, 0.0628),
        "critpt": (1.6995, -1.6914, 1.7756),
        "iid_size": (0.1268, 0.1269, 0.1041),
        "iid_critpt": (2.3628, -2.4021, 2.1488),
    },
    (3, 100): {
        "size": (0.0791, 0.0756, 0.0806),
        "critpt": (1.8992, -1.8848, 1.9196),
        "iid_size": (0.2198, 0.2271, 0.1709),
        "iid_critpt": (3.3864, -3.4649, 2.7259),
    },
    (3, 200): {
        "size": (0.0689, 0.0661, 0.0725),
        "critpt": (1.7967, -1.7958, 1.8487),
        "iid_size": (0.1984, 0.206, 0.16),
        "iid_critpt": (3.1938, -3.1852, 2.6425),
    },
    (3, 500): {
        "size": (0.0595, 0.058, 0.0639),
        "critpt": (1.7236, -1.7175, 1.7714),
        "iid_size": (0.1853, 0.1869, 0.1532),
        "iid_critpt": (2.9841, -3.018, 2.5802),
    },
    (5, 100): {
        "size": (0.1046, 0.1079, 0.0957),
        "critpt": (2.1295, -2.1216, 2.086),
        "iid_size": (0.3253, 0.347, 0.2608),
        "iid_critpt": (4.793, -4.8668, 3.5757),
    },
    (5, 200): {
        "size": (0.0848, 0.0862, 0.0803),
        "critpt": (1.9417, -1.9394, 1.9259),
        "iid_size": (0.2877, 0.3033, 0.2403),
        "iid_critpt": (4.4227, -4.5284, 3.474),
    },
    (5, 500): {
        "size": (0.0672, 0.0681, 0.068),
        "critpt": (1.787, -1.8009, 1.8079),
        "iid_size": (0.2605, 0.2709, 0.2247),
        "iid_critpt": (4.0286, -4.1122, 3.3397),
    },
    (10, 100): {
        "size": (0.1756, 0.1804, 0.1538),
        "critpt": (2.779, -2.6765, 2.6487),
        "iid_size": (0.4786, 0.5333, 0.4044),
        "iid_critpt": (7.9272, -8.1142, 5.4121),
    },
    (10, 200): {
        "size": (0.1207, 0.1238, 0.1103),
        "critpt": (2.2874, -2.1869, 2.1926),
        "iid_size": (0.4183, 0.4685, 0.3572),
        "iid_critpt": (7.179, -7.1295, 5.2703),
    },
    (10, 500): {
        "size": (0.0836, 0.0817, 0.0826),
        "critpt": (1.9331, -1.9052, 1.9315),
        "iid_size": (0.3662, 0.3932, 0.3252),
        "iid_critpt": (6.3136, -6.2565, 4.9758),
    },
}

POWER = {
    ('S5', 0.5, 100): (0.4477, 0.4723, 0.8948),
    ('S5', 0.5, 200): (0.6587, 0.6944, 0.9839),
    ('S5', 0.5, 500): (0.9432, 0.9601, 0.9999),
    ('S5', 0.8, 100): (0.6402, 0.6786, 0.9719),
    ('S5', 0.8, 200): (0.8775, 0.9027, 0.9987),
    ('S5', 0.8, 500): (0.9972, 0.999, 1.0),
    ('S5', 1.0, 100): (0.7421, 0.77, 0.988),
    ('S5', 1.0, 200): (0.9373, 0.956, 1.0),
    ('S5', 1.0, 500): (0.9997, 0.9999, 1.0),
    ('S6', 0.5, 100): (0.3747, 0.3999, 0.8344),
    ('S6', 0.5, 200): (0.5397, 0.5739, 0.9475),
    ('S6', 0.5, 500): (0.8572, 0.8879, 0.9988),
    ('S6', 0.8, 100): (0.5362, 0.5696, 0.9308),
    ('S6', 0.8, 200): (0.7608, 0.797, 0.9922),
    ('S6', 0.8, 500): (0.9786, 0.9874, 1.0),
    ('S6', 1.0, 100): (0.6232, 0.662, 0.9603),
    ('S6', 1.0, 200): (0.8513, 0.8841, 0.998),
    ('S6', 1.0, 500): (0.995, 0.9975, 1.0),
    ('S7', 0.5, 100): (0.3286, 0.3527, 0.7448),
    ('S7', 0.5, 200): (0.4196, 0.4548, 0.8749),
    ('S7', 0.5, 500): (0.6951, 0.7392, 0.9872),
    ('S7', 0.8, 100): (0.4442, 0.4785, 0.8587),
    ('S7', 0.8, 200): (0.5968, 0.6428, 0.9606),
    ('S7', 0.8, 500): (0.9005, 0.9291, 0.9994),
    ('S7', 1.0, 100): (0.5076, 0.5463, 0.8973),
    ('S7', 1.0, 200): (0.6917, 0.7388, 0.9818),
    ('S7', 1.0, 500): (0.9574, 0.9717, 0.9999),
    ('S8', 0.5, 100): (0.3549, 0.3826, 0.6716),
    ('S8', 0.5, 200): (0.3544, 0.3887, 0.7631),
    ('S8', 0.5, 500): (0.4939, 0.5349, 0.9247),
    ('S8', 0.8, 100): (0.436, 0.4662, 0.7604),
    ('S8', 0.8, 200): (0.4762, 0.5224, 0.8697),
    ('S8', 0.8, 500): (0.7, 0.7504, 0.9836),
    ('S8', 1.0, 100): (0.4746, 0.5118, 0.8006),
    ('S8', 1.0, 200): (0.5415, 0.5857, 0.9104),
    ('S8', 1.0, 500): (0.7907, 0.8359, 0.9941),
    ('S9', 10.0, 100): (0.2255, 0.2295, 0.665),
    ('S9', 10.0, 200): (0.341, 0.3459, 0.8175),
    ('S9', 10.0, 500): (0.6162, 0.6389, 0.9686),
    ('S9', 5.0, 100): (0.3964, 0.4025, 0.8369),
    ('S9', 5.0, 200): (0.6022, 0.6181, 0.9584),
    ('S9', 5.0, 500): (0.9152, 0.9265, 0.9995),
    ('S9', 2.0, 100): (0.6511, 0.6655, 0.9655),
    ('S9', 2.0, 200): (0.89, 0.9023, 0.9984),
    ('S9', 2.0, 500): (0.9986, 0.9991, 1.0),
    ('S10', 10.0, 100): (0.1936, 0.1922, 0.5779),
    ('S10', 10.0, 200): (0.2548, 0.2599, 0.6926),
    ('S10', 10.0, 500): (0.4188, 0.4368, 0.8888),
    ('S10', 5.0, 100): (0.2902, 0.2909, 0.73),
    ('S10', 5.0, 200): (0.4145, 0.4232, 0.8675),
    ('S10', 5.0, 500): (0.7099, 0.7356, 0.9828),
    ('S10', 2.0, 100): (0.473, 0.4916, 0.8944),
    ('S10', 2.0, 200): (0.6976, 0.7194, 0.9806),
    ('S10', 2.0, 500): (0.9612, 0.9694, 0.9999),
    ('S11', 10.0, 100): (0.2008, 0.1999, 0.5501),
    ('S11', 10.0, 200): (0.235, 0.2358, 0.6416),
    ('S11', 10.0, 500): (0.3538, 0.3688, 0.8319),
    ('S11', 5.0, 100): (0.2727, 0.2721, 0.6709),
    ('S11', 5.0, 200): (0.3558, 0.3631, 0.7961),
    ('S11', 5.0, 500): (0.5883, 0.6119, 0.9549),
    ('S11', 2.0, 100): (0.4001, 0.4173, 0.8286),
    ('S11', 2.0, 200): (0.564, 0.5845, 0.9416),
    ('S11', 2.0, 500): (0.8799, 0.9011, 0.9982),
    ('S12', 10.0, 100): (0.2354, 0.2431, 0.539),
    ('S12', 10.0, 200): (0.2376, 0.245, 0.588),
    ('S12', 10.0, 500): (0.3027, 0.3198, 0.7513),
    ('S12', 5.0, 100): (0.3148, 0.3217, 0.6381),
    ('S12', 5.0, 200): (0.3395, 0.3476, 0.7268),
    ('S12', 5.0, 500): (0.4856, 0.5078, 0.8948),
    ('S12', 2.0, 100): (0.4058, 0.4221, 0.7531),
    ('S12', 2.0, 200): (0.4791, 0.4978, 0.8694),
    ('S12', 2.0, 500): (0.7313, 0.7542, 0.9835),
    ('S13', 1.1, 100): (0.2352, 0.2366, 0.5847),
    ('S13', 1.1, 200): (0.3287, 0.3285, 0.7053),
    ('S13', 1.1, 500): (0.5927, 0.5898, 0.8929),
    ('S13', 1.2, 100): (0.4984, 0.4977, 0.8467),
    ('S13', 1.2, 200): (0.7227, 0.7289, 0.9569),
    ('S13', 1.2, 500): (0.9697, 0.9708, 0.9994),
    ('S13', 1.3, 100): (0.7379, 0.7462, 0.966),
    ('S13', 1.3, 200): (0.9403, 0.9467, 0.9981),
    ('S13', 1.3, 500): (0.9998, 0.9998, 1.0),
    ('S14', 1.1, 100): (0.2163, 0.2187, 0.5449),
    ('S14', 1.1, 200): (0.2771, 0.2827, 0.6421),
    ('S14', 1.1, 500): (0.4696, 0.4763, 0.8312),
    ('S14', 1.2, 100): (0.4175, 0.4763, 0.7925),
    ('S14', 1.2, 200): (0.5977, 0.6116, 0.9125),
    ('S14', 1.2, 500): (0.905, 0.9142, 0.9939),
    ('S14', 1.3, 100): (0.6236, 0.6429, 0.9264),
    ('S14', 1.3, 200): (0.8546, 0.8666, 0.9887),
    ('S14', 1.3, 500): (0.9959, 0.9962, 0.9999),
    ('S15', 1.1, 100): (0.2168, 0.2255, 0.5031),
    ('S15', 1.1, 200): (0.2391, 0.2491, 0.569),
    ('S15', 1.1, 500): (0.3546, 0.3674, 0.7348),
    ('S15', 1.2, 100): (0.3585, 0.3765, 0.7111),
    ('S15', 1.2, 200): (0.4653, 0.4902, 0.8333),
    ('S15', 1.2, 500): (0.7649, 0.7768, 0.9707),
    ('S15', 1.3, 100): (0.5144, 0.5405, 0.8609),
    ('S15', 1.3, 200): (0.7007, 0.7246, 0.9551),
    ('S15', 1.3, 500): (0.9608, 0.9673, 0.999),
    ('S16', 1.1, 100): (0.2672, 0.2851, 0.5158),
    ('S16', 1.1, 200): (0.2359, 0.2472, 0.5229),
    ('S16', 1.1, 500): (0.2693, 0.2843, 0.6247),
    ('S16', 1.2, 100): (0.3722, 0.3992, 0.6588),
    ('S16', 1.2, 200): (0.3912, 0.4157, 0.7325),
    ('S16', 1.2, 500): (0.5517, 0.5769, 0.8864),
    ('S16', 1.3, 100): (0.4759, 0.511, 0.7759),
    ('S16', 1.3, 200): (0.5478, 0.5834, 0.8715),
    ('S16', 1.3, 500): (0.8024, 0.8246, 0.9807),
}


POWER_TABLES = {
    "4.3": (("S5", "S6", "S7", "S8"), (0.5, 0.8, 1.0)),
    "4.4": (("S9", "S10", "S11", "S12"), (10.0, 5.0, 2.0)),
    "4.5": (("S13", "S14", "S15", "S16"), (1.1, 1.2, 1.3)),
}
