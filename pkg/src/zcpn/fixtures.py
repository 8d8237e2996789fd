"""Expected values for the worked cases C_9 and C_27, used by ``zcpn reproduce``.

Group ring elements are coefficient lists in g^0, g^1, ...; x-adic elements
are coefficient lists in x^0, x^1, ... with x = h - 1.
"""

ZC9 = {
    "t": 2,
    "vartheta": {
        1: [0, 0, 1, -1, 1, -1, 1, -1, 1],
        2: [0, 0, 0, 0, 1, -1, 1, -1, 1],
    },
    # vartheta_i = g^shift * symmetric factor
    "shift": {1: 5, 2: 6},
    "symmetric": {
        1: [-1, 1, -1, 1, 0, 0, 1, -1, 1],
        2: [1, -1, 1, 0, 0, 0, 0, 1, -1],
    },
}

ZC27 = {
    "u": {
        1: [-1, 1, -1, 1, 0, 0, 1, -1, 1],
        2: [1, -1, 1, 0, 0, 0, 0, 1, -1],
    },
    "f1_image": {
        1: [1, 0, 0, 0, 2, 2, 1, 1, 1],
        2: [1, 0, 0, 0, 1, 1, 0, 2, 2],
    },
    "f1_product": [1, 0, 0, 0, 0, 0, 1, 0, 2],
    "image_order": 9,
    # u_i^3 = 1 + 3 * (a_0 + a_1 h + ...)
    "a": {
        1: [-12, 11, -9, 6, -2, -2, 6, -9, 11],
        2: [6, -6, 5, -3, 1, 1, -3, 5, -6],
    },
}

HYP27 = {
    "lambda": 1,
    "e": [1, 0, 0, 0, 0, 0, 0, 0, 1],
    "basis": [
        [1, 0, 0, 0, 2, 2, 1, 1, 1],
        [1, 0, 0, 0, 0, 0, 1, 0, 2],
    ],
}
