"""Brute-force subring counts for small Lie lattices over the integers.

Everything here is ground truth by enumeration: list the finite-index
sublattices of Z^n in Hermite normal form, keep the ones closed under the
bracket, and decide whether each is pro-isomorphic to the ambient lattice at
p.  The decision is exact for abelian and Heisenberg-type lattices; for
anything else (rank at most 4) a bracket-preserving basis map is searched
modulo p^(k + c_safety), and that verdict is explicitly level-limited.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .laurent import ResourceGuardError

MAX_ENUM_RANK = 6
ENUM_PRIMES = (2, 3, 5)
MAX_ENUM_K = 4
MAX_GENERIC_RANK = 4
NODE_BUDGET = 2**20


@dataclass(frozen=True)
class LieLattice:
    """Free Z-Lie ring of rank n given by its structure tensor.

    tensor[i][j] is the coordinate vector of the bracket of basis elements
    i and j (0-indexed).  Antisymmetry and the Jacobi identity are enforced
    at construction.
    """

    rank: int
    tensor: tuple

    def __post_init__(self):
        n = self.rank
        t = self.tensor
        if len(t) != n or any(len(row) != n for row in t):
            raise ValueError("structure tensor must be rank x rank")
        for i in range(n):
            for j in range(n):
                if len(t[i][j]) != n:
                    raise ValueError("bracket vectors must have length rank")
                if any(t[i][j][l] != -t[j][i][l] for l in range(n)):
                    raise ValueError("structure tensor is not antisymmetric")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    jac = [0] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = t[a][b]
                        for l in range(n):
                            if inner[l]:
                                for r in range(n):
                                    jac[r] += inner[l] * t[l][c][r]
                    if any(jac):
                        raise ValueError(f"Jacobi identity fails on ({i},{j},{k})")

    def bracket(self, u, w):
        n = self.rank
        out = [0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not w[j]:
                    continue
                coeff = u[i] * w[j]
                vec = self.tensor[i][j]
                for l in range(n):
                    if vec[l]:
                        out[l] += coeff * vec[l]
        return out

    def is_abelian(self):
        return all(
            not any(vec) for row in self.tensor for vec in row
        )

    def heisenberg_m(self):
        """m if this is the standard Heisenberg tensor of rank 2m+1, else None."""
        n = self.rank
        if n % 2 == 0 or n < 3:
            return None
        m = (n - 1) // 2
        if self.tensor == heisenberg_lattice(m).tensor:
            return m
        return None


def _freeze(tensor):
    return tuple(tuple(tuple(v) for v in row) for row in tensor)


def abelian_lattice(n):
    zero = [[[0] * n for _ in range(n)] for _ in range(n)]
    return LieLattice(n, _freeze(zero))


def heisenberg_lattice(m):
    """Rank 2m+1 with [x_i, y_i] = z; basis order x_1..x_m, y_1..y_m, z."""
    n = 2 * m + 1
    t = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(m):
        t[i][m + i][n - 1] = 1
        t[m + i][i][n - 1] = -1
    return LieLattice(n, _freeze(t))


def lattice_from_dict(data):
    """{"rank": n, "brackets": [[i, j, [c_1..c_n]], ...]} with 1-indexed i<j;
    omitted brackets are zero, antisymmetry is filled in."""
    n = int(data["rank"])
    t = [[[0] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for entry in data.get("brackets", ()):
        i, j, vec = entry
        i, j = int(i) - 1, int(j) - 1
        if not (0 <= i < j < n):
            raise ValueError(f"bracket indices must satisfy 1 <= i < j <= {n}")
        if (i, j) in seen:
            raise ValueError(f"duplicate bracket ({i + 1},{j + 1})")
        seen.add((i, j))
        if len(vec) != n:
            raise ValueError("bracket coefficient vectors must have length rank")
        t[i][j] = [int(c) for c in vec]
        t[j][i] = [-int(c) for c in vec]
    return LieLattice(n, _freeze(t))


def lattice_from_json(text):
    return lattice_from_dict(json.loads(text))


def _check_enum_guards(n, p, k):
    if n > MAX_ENUM_RANK:
        raise ResourceGuardError(f"sublattice enumeration capped at rank {MAX_ENUM_RANK}")
    if p not in ENUM_PRIMES:
        raise ResourceGuardError(f"enumeration primes restricted to {ENUM_PRIMES}")
    if k > MAX_ENUM_K:
        raise ResourceGuardError(f"enumeration index exponent capped at {MAX_ENUM_K}")
    if k < 0:
        raise ValueError("index exponent must be nonnegative")


def _compositions_colex(total, parts):
    out = []

    def rec(remaining, slots, acc):
        if slots == 1:
            out.append(acc + [remaining])
            return
        for v in range(remaining + 1):
            rec(remaining - v, slots - 1, acc + [v])

    rec(total, parts, [])
    out.sort(key=lambda c: tuple(reversed(c)))
    return out


def enumerate_sublattices(n, p, k):
    """All row-HNF bases of sublattices of Z^n of index p^k, each once.

    Diagonals run through the exponent compositions of k in colexicographic
    order; for each diagonal the above-pivot entries cycle odometer-style
    (last position fastest), every entry reduced modulo the pivot below it.
    """
    _check_enum_guards(n, p, k)
    for comp in _compositions_colex(k, n):
        diag = [p**e for e in comp]
        positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
        moduli = [diag[j] for _, j in positions]
        counters = [0] * len(positions)
        while True:
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = diag[i]
            for (i, j), v in zip(positions, counters):
                m[i][j] = v
            yield tuple(tuple(row) for row in m)
            pos = len(positions) - 1
            while pos >= 0:
                counters[pos] += 1
                if counters[pos] < moduli[pos]:
                    break
                counters[pos] = 0
                pos -= 1
            if pos < 0:
                break


def _span_coefficients(basis, vec):
    """Integer coordinates of vec in the row span of an upper-triangular
    basis, or None if vec is not in the span."""
    n = len(basis)
    v = list(vec)
    coeffs = []
    for j in range(n):
        pivot = basis[j][j]
        if v[j] % pivot:
            return None
        q = v[j] // pivot
        coeffs.append(q)
        if q:
            for col in range(j, n):
                v[col] -= q * basis[j][col]
    return coeffs


def is_subring(lattice, basis):
    """True iff the row span is closed under the lattice bracket."""
    n = lattice.rank
    for a in range(n):
        for b in range(a + 1, n):
            w = lattice.bracket(basis[a], basis[b])
            if _span_coefficients(basis, w) is None:
                return False
    return True


def _det(rows):
    # fraction-free Gaussian elimination (Bareiss); exact over the integers
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def _vp(x, p):
    if x == 0:
        raise ValueError("infinite valuation")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _heisenberg_verdict(lattice, basis, p, m):
    n = 2 * m + 1
    z_gen = basis[n - 1][n - 1]
    gram = [[0] * (2 * m) for _ in range(2 * m)]
    g = 0
    for a in range(2 * m):
        for b in range(2 * m):
            w = lattice.bracket(basis[a], basis[b])
            # brackets land on the z axis only
            assert not any(w[:-1])
            gram[a][b] = w[-1]
            g = gcd(g, w[-1])
    if g == 0:
        return False
    # derived sublattice = (g z); central intersection = (z_gen z); they must
    # agree over Z_p, i.e. have the same p-valuation
    if _vp(g, p) != _vp(z_gen, p):
        return False
    reduced = [[entry // g for entry in row] for row in gram]
    return _det(reduced) % p != 0


def _structure_constants(lattice, basis):
    n = lattice.rank
    out = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            w = lattice.bracket(basis[a], basis[b])
            coeffs = _span_coefficients(basis, w)
            if coeffs is None:
                raise ValueError("basis does not span a subring")
            out[a][b] = coeffs
    return out


def _solve_mod_p(rows, rhs, p):
    """Solve A u = b over F_p.  Returns (particular, kernel_basis) or None."""
    neq = len(rows)
    nvar = len(rows[0]) if neq else 0
    aug = [[rows[r][c] % p for c in range(nvar)] + [rhs[r] % p] for r in range(neq)]
    pivots = []
    row = 0
    for col in range(nvar):
        sel = None
        for r in range(row, neq):
            if aug[r][col]:
                sel = r
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [(x * inv) % p for x in aug[row]]
        for r in range(neq):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, neq):
        if aug[r][nvar]:
            return None
    particular = [0] * nvar
    for r, col in enumerate(pivots):
        particular[col] = aug[r][nvar]
    free = [c for c in range(nvar) if c not in pivots]
    kernel = []
    for fc in free:
        vec = [0] * nvar
        vec[fc] = 1
        for r, col in enumerate(pivots):
            vec[col] = (-aug[r][fc]) % p
        kernel.append(vec)
    return particular, kernel


class _Budget:
    def __init__(self, limit):
        self.left = limit

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise ResourceGuardError(
                f"level-limited isomorphism search exceeded {NODE_BUDGET} nodes"
            )


def _bracket_residual(cl, cm, t, i, j, modulus):
    """Coordinates of [T e_i, T e_j] - T [e_i, e_j] mod modulus."""
    n = len(t)
    out = [0] * n
    for a in range(n):
        ta = t[a][i]
        if not ta:
            continue
        for b in range(n):
            tb = t[b][j]
            if not tb:
                continue
            vec = cl[a][b]
            for r in range(n):
                if vec[r]:
                    out[r] += ta * tb * vec[r]
    for l in range(n):
        c = cm[i][j][l]
        if c:
            for r in range(n):
                out[r] -= c * t[r][l]
    return [x % modulus for x in out]


def _rank_mod_p(columns, p):
    if not columns:
        return 0
    n = len(columns[0])
    m = [list(col) for col in columns]
    rank = 0
    for col in range(n):
        sel = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        inv = pow(m[rank][col] % p, -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] % p:
                f = m[r][col] % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _base_solutions(cl, cm, p, budget):
    """All invertible bracket-preserving maps mod p, column by column."""
    n = len(cl)
    needed = {}
    for i in range(n):
        for j in range(i + 1, n):
            top = max(i, j)
            for l in range(n):
                if cm[i][j][l]:
                    top = max(top, l)
            needed.setdefault(top, []).append((i, j))
    vectors = [[(v // p**r) % p for r in range(n)] for v in range(p**n)]
    solutions = []

    def place(col, cols):
        budget.spend()
        if col == n:
            solutions.append([list(row) for row in zip(*cols)])
            return
        for vec in vectors:
            trial = cols + [vec]
            if _rank_mod_p(trial, p) != len(trial):
                continue
            t = [list(row) for row in zip(*(trial + [[0] * n] * (n - col - 1)))]
            ok = True
            for i, j in needed.get(col, ()):
                if any(_bracket_residual(cl, cm, t, i, j, p)):
                    ok = False
                    break
            if ok:
                place(col + 1, trial)

    place(0, [])
    return solutions


def _lift(cl, cm, t, p, level, target, budget):
    """Depth-first Hensel-style lifting of a mod-p solution to mod p^target."""
    budget.spend()
    if level >= target:
        return True
    n = len(t)
    modulus = p**level
    rows = []
    rhs = []
    eqs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in eqs:
        residual = _bracket_residual(cl, cm, t, i, j, modulus * p)
        for r in range(n):
            coeff_row = [0] * (n * n)
            for a in range(n):
                acc = 0
                for b in range(n):
                    acc += t[b][j] * cl[a][b][r]
                coeff_row[a * n + i] += acc
            for b in range(n):
                acc = 0
                for a in range(n):
                    acc += t[a][i] * cl[a][b][r]
                coeff_row[b * n + j] += acc
            for l in range(n):
                coeff_row[r * n + l] -= cm[i][j][l]
            assert residual[r] % modulus == 0
            rows.append(coeff_row)
            rhs.append((-residual[r] // modulus) % p)
    solved = _solve_mod_p(rows, rhs, p)
    if solved is None:
        return False
    particular, kernel = solved
    # walk the affine solution space in odometer order, budget permitting
    counters = [0] * len(kernel)
    while True:
        s = list(particular)
        for vec, c in zip(kernel, counters):
            if c:
                for idx in range(len(s)):
                    s[idx] = (s[idx] + c * vec[idx]) % p
        lifted = [
            [t[r][c] + modulus * s[r * n + c] for c in range(n)] for r in range(n)
        ]
        if _lift(cl, cm, lifted, p, level + 1, target, budget):
            return True
        pos = len(counters) - 1
        while pos >= 0:
            counters[pos] += 1
            if counters[pos] < p:
                break
            counters[pos] = 0
            pos -= 1
        if pos < 0:
            return False


def _generic_verdict(lattice, basis, p, k, c_safety):
    n = lattice.rank
    if n > MAX_GENERIC_RANK:
        raise ValueError(
            f"no exact criterion for this lattice and rank > {MAX_GENERIC_RANK}"
        )
    target = k + c_safety
    cl = lattice.tensor
    cm = _structure_constants(lattice, basis)
    budget = _Budget(NODE_BUDGET)
    for base in _base_solutions(cl, cm, p, budget):
        if _lift(cl, cm, base, p, 1, target, budget):
            return True
    return False


def is_proisomorphic(lattice, basis, p, c_safety=2):
    """Is the subring spanned by `basis`, p-adically completed, isomorphic to
    the completed ambient lattice?

    Exact for abelian and standard Heisenberg tensors.  Otherwise (rank <= 4)
    the verdict means "isomorphic at level p^(k + c_safety)" where p^k is the
    index: a False is certain, a True is heuristic.
    """
    if lattice.is_abelian():
        return True
    m = lattice.heisenberg_m()
    if m is not None:
        return _heisenberg_verdict(lattice, basis, p, m)
    det = 1
    for i in range(lattice.rank):
        det *= basis[i][i]
    return _generic_verdict(lattice, basis, p, _vp(det, p), c_safety)


def count_proisomorphic(lattice, p, k, c_safety=2):
    """Number of index-p^k subrings whose completion at p is isomorphic to
    the ambient lattice's."""
    count = 0
    for basis in enumerate_sublattices(lattice.rank, p, k):
        if is_subring(lattice, basis) and is_proisomorphic(
            lattice, basis, p, c_safety=c_safety
        ):
            count += 1
    return count
