class LinearSolver:
    """Gaussian elimination over GF(2) with rows packed into ints.

    A system is given column-wise: ``columns[j]`` is the image of the j-th unit
    vector, bit i of it being row i.
    """

    @staticmethod
    def solve(columns: list[int], target: int) -> int | None:
        """Return x (bit j = coefficient of column j) with Σ x_j·columns[j] = target.

        Returns None when the target is outside the column span.
        """
        # Each basis entry: (pivot bit, vector, combination of original columns)
        basis: list[tuple[int, int, int]] = []
        for j, column in enumerate(columns):
            vector, combo = column, 1 << j
            for pivot, b_vec, b_combo in basis:
                if vector & pivot:
                    vector ^= b_vec
                    combo ^= b_combo
            if vector:
                pivot = vector & -vector
                # keep the basis fully reduced on pivot bits
                basis = [
                    (p, v ^ vector, c ^ combo) if v & pivot else (p, v, c) for p, v, c in basis
                ]
                basis.append((pivot, vector, combo))

        solution = 0
        remainder = target
        for pivot, b_vec, b_combo in basis:
            if remainder & pivot:
                remainder ^= b_vec
                solution ^= b_combo
        return solution if remainder == 0 else None
