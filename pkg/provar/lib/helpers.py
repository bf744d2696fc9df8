import math
import re
from typing import List, Tuple
import numpy as np
from sympy import isprime, primefactors
from .exceptions import NotPrime


def checkPrime(p: int) -> int:
    """
    Check that a value is a prime number.

    Parameters
    ----------
    p : int
        The value to check.

    Returns
    -------
    p : int
        The checked value.
    """
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise NotPrime(int(p) if isinstance(p, (int, np.integer)) else -1)
    return int(p)


def primeDivisors(d: int) -> List[int]:
    """
    The distinct prime divisors of a positive integer in ascending order.

    Parameters
    ----------
    d : int
        The integer to factor. The empty list is returned for d = 1.

    Returns
    -------
    primes : List[int]
        The prime divisors of d.
    """
    return [] if d == 1 else [int(q) for q in primefactors(d)]


def gcdex(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended euclidean algorithm.

    Parameters
    ----------
    a : int
        First operand.
    b : int
        Second operand.

    Returns
    -------
    g : int
        The non-negative greatest common divisor of a and b.
    s : int
        Bezout coefficient of a.
    t : int
        Bezout coefficient of b, such that s * a + t * b = g.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def unitNormaliser(a: int, d: int) -> int:
    """
    Find a unit u of Z/dZ such that a * u = gcd(a, d) mod d.

    Parameters
    ----------
    a : int
        The residue to normalise.
    d : int
        The modulus.

    Returns
    -------
    u : int
        A unit modulo d.
    """
    g = math.gcd(a, d)
    if g == 0 or d == 1:
        return 1
    d_red = d // g
    u0 = pow((a // g) % d_red, -1, d_red) if d_red > 1 else 0
    # lift u0 from Z/d_red to a unit of Z/d
    for k in range(g):
        u = u0 + k * d_red
        if math.gcd(u, d) == 1:
            return u % d
    raise ArithmeticError("No unit normaliser for %d modulo %d." % (a, d))


def howellForm(rows: np.ndarray, d: int) -> np.ndarray:
    """
    Compute the Howell form of a matrix over Z/dZ. The non-zero rows of the Howell form are the unique canonical
    generating set of the row span: the matrix is in echelon form, every pivot divides d, the entries above a pivot
    are reduced modulo the pivot and each vector of the span whose first k entries vanish is a combination of the
    rows whose pivot lies behind column k.

    Parameters
    ----------
    rows : ndarray
        The generating vectors as integer matrix (one vector per row).
    d : int
        The modulus.

    Returns
    -------
    howell : ndarray
        The Howell form without zero rows.
    """
    n_cols = rows.shape[1]
    work = [np.array(r, dtype=np.int64) % d for r in rows]
    r = 0
    for c in range(n_cols):
        for i in range(r + 1, len(work)):
            if work[i][c] == 0:
                continue
            if r >= len(work):
                break
            a = int(work[r][c])
            b = int(work[i][c])
            if a == 0:
                work[r], work[i] = work[i], work[r]
                continue
            g, s, t = gcdex(a, b)
            row_r = (s * work[r] + t * work[i]) % d
            row_i = ((-b // g) * work[r] + (a // g) * work[i]) % d
            work[r], work[i] = row_r, row_i
        if r >= len(work) or work[r][c] == 0:
            continue
        work[r] = (work[r] * unitNormaliser(int(work[r][c]), d)) % d
        pivot = int(work[r][c])
        for i in range(r):
            work[i] = (work[i] - (int(work[i][c]) // pivot) * work[r]) % d
        annihilated = (work[r] * (d // pivot)) % d
        if annihilated.any():
            work.append(annihilated)
        r += 1
    res = [row for row in work[:r] if row.any()]
    if len(res) == 0:
        return np.zeros((0, n_cols), dtype=np.int64)
    return np.array(res, dtype=np.int64)


def readSubgroupFile(file: str) -> List[List[str]]:
    """
    Read a subgroup file. Each non-empty line describes one subgroup as comma-separated words, everything behind a
    '#' is a comment.

    Parameters
    ----------
    file : str
        Path to the file to read.

    Returns
    -------
    subgroups : List[List[str]]
        The generator words of each subgroup as strings.
    """
    subgroups = []
    with open(file) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if len(line) == 0:
                continue
            subgroups.append(splitWords(line))
    return subgroups


def splitWords(text: str) -> List[str]:
    """
    Split a comma-separated word list. Whitespace is ignored and empty entries are dropped.

    Parameters
    ----------
    text : str
        The word list.

    Returns
    -------
    words : List[str]
        The separated words.
    """
    return [w for w in (re.sub(r"\s+", "", x) for x in text.split(",")) if len(w) > 0]
