from src.WorkbenchErrors import InvalidArgumentError


class PrimeFactorTable:
    """Distinct prime factors of 2^m - 1 for 1 <= m <= 64."""

    FACTORS: dict[int, tuple[int, ...]] = {
        1: (),
        2: (3,),
        3: (7,),
        4: (3, 5),
        5: (31,),
        6: (3, 7),
        7: (127,),
        8: (3, 5, 17),
        9: (7, 73),
        10: (3, 11, 31),
        11: (23, 89),
        12: (3, 5, 7, 13),
        13: (8191,),
        14: (3, 43, 127),
        15: (7, 31, 151),
        16: (3, 5, 17, 257),
        17: (131071,),
        18: (3, 7, 19, 73),
        19: (524287,),
        20: (3, 5, 11, 31, 41),
        21: (7, 127, 337),
        22: (3, 23, 89, 683),
        23: (47, 178481),
        24: (3, 5, 7, 13, 17, 241),
        25: (31, 601, 1801),
        26: (3, 2731, 8191),
        27: (7, 73, 262657),
        28: (3, 5, 29, 43, 113, 127),
        29: (233, 1103, 2089),
        30: (3, 7, 11, 31, 151, 331),
        31: (2147483647,),
        32: (3, 5, 17, 257, 65537),
        33: (7, 23, 89, 599479),
        34: (3, 43691, 131071),
        35: (31, 71, 127, 122921),
        36: (3, 5, 7, 13, 19, 37, 73, 109),
        37: (223, 616318177),
        38: (3, 174763, 524287),
        39: (7, 79, 8191, 121369),
        40: (3, 5, 11, 17, 31, 41, 61681),
        41: (13367, 164511353),
        42: (3, 7, 43, 127, 337, 5419),
        43: (431, 9719, 2099863),
        44: (3, 5, 23, 89, 397, 683, 2113),
        45: (7, 31, 73, 151, 631, 23311),
        46: (3, 47, 178481, 2796203),
        47: (2351, 4513, 13264529),
        48: (3, 5, 7, 13, 17, 97, 241, 257, 673),
        49: (127, 4432676798593),
        50: (3, 11, 31, 251, 601, 1801, 4051),
        51: (7, 103, 2143, 11119, 131071),
        52: (3, 5, 53, 157, 1613, 2731, 8191),
        53: (6361, 69431, 20394401),
        54: (3, 7, 19, 73, 87211, 262657),
        55: (23, 31, 89, 881, 3191, 201961),
        56: (3, 5, 17, 29, 43, 113, 127, 15790321),
        57: (7, 32377, 524287, 1212847),
        58: (3, 59, 233, 1103, 2089, 3033169),
        59: (179951, 3203431780337),
        60: (3, 5, 7, 11, 13, 31, 41, 61, 151, 331, 1321),
        61: (2305843009213693951,),
        62: (3, 715827883, 2147483647),
        63: (7, 73, 127, 337, 92737, 649657),
        64: (3, 5, 17, 257, 641, 65537, 6700417),
    }

    @staticmethod
    def prime_factors(m: int) -> tuple[int, ...]:
        try:
            return PrimeFactorTable.FACTORS[m]
        except KeyError:
            raise InvalidArgumentError(
                f"no factorization of 2^{m} - 1 on file (supported: 1..64)"
            ) from None

    @staticmethod
    def group_order_bound(m: int, multiplicity: int) -> int:
        """Bound on the order of D modulo p^N for primitive p of degree m.

        The order divides (2^m - 1) * 2^ceil(log2 N).
        """
        return ((1 << m) - 1) * (1 << max(0, (multiplicity - 1).bit_length()))
