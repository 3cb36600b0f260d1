#!/usr/bin/env python3
"""Independent derivation of the values frozen into the C++ tests.

Shares no code with the library: terms are summed directly, coefficients are
taken as factorial ratios or read off sympy expansions, and combinatorial
counts come from itertools enumeration.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, prod

import sympy as sp


def term(p, q, n):
    return sum(q ** (n - i) * p ** (i - 1) for i in range(1, n + 1))


def coeff(p, q, n, k):
    num = prod(term(p, q, i) for i in range(1, n + 1))
    den = prod(term(p, q, i) for i in range(1, k + 1)) * prod(term(p, q, i) for i in range(1, n - k + 1))
    assert num % den == 0
    return num // den


def symbolic_coeff(n, k):
    p, q = sp.symbols("p q")
    t = lambda m: sp.expand(sum(q ** (m - i) * p ** (i - 1) for i in range(1, m + 1)))
    num = sp.prod([t(i) for i in range(1, n + 1)])
    den = sp.prod([t(i) for i in range(1, k + 1)]) * sp.prod([t(i) for i in range(1, n - k + 1)])
    return sp.expand(sp.cancel(num / den))


def selections(p, q, n, k, repetition):
    lam = [q ** (i - 1) * p ** (n - i) for i in range(1, n + 1)]
    pick = combinations_with_replacement if repetition else combinations
    return sum(prod(lam[i] for i in c) for c in pick(range(n), k))


def acyclic(p, n):
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for mult in product(range(p), repeat=len(arcs)):
        edges = [a for a, m in zip(arcs, mult) if m]
        nodes = set(range(n))
        while True:
            sources = [v for v in nodes if not any(b == v and a in nodes for a, b in edges)]
            if not sources:
                break
            nodes -= set(sources)
        count += not nodes
    return count


def bipartite(alpha, n, k):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = 0
    for side in combinations(range(n), k):
        s = set(side)
        for mult in product(range(alpha), repeat=len(pairs)):
            total += all(m == 0 or ((a in s) != (b in s)) for (a, b), m in zip(pairs, mult))
    return total


def inverse_matrix(p, q, order):
    m = sp.Matrix(order, order, lambda n, k: coeff(p, q, n, k) if k <= n else 0)
    return m.inv()


def fib(alpha, n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, alpha * b + a
    return a


def fibonomial(alpha, n, k):
    num = prod(fib(alpha, i) for i in range(1, n + 1))
    den = prod(fib(alpha, i) for i in range(1, k + 1)) * prod(fib(alpha, i) for i in range(1, n - k + 1))
    return num // den


def vandermonde(p, q, n, m, k):
    proof = statement = 0
    for s in range(k + 1):
        if s > n or k - s > m:
            continue
        shared = q ** ((k - s) * (n - s)) * coeff(p, q, n, s) * coeff(p, q, m, k - s)
        proof += p ** ((m + s - k) * s) * shared
        statement += p ** (m - k + s) * shared
    return coeff(p, q, n + m, k), proof, statement


def equal1(p, q, k):
    mu = [q ** s * p ** (k - s) for s in range(k + 1)]
    total = Fraction(0)
    for i in range(k + 1):
        den = prod(mu[i] - mu[j] for j in range(i)) * prod(mu[j] - mu[i] for j in range(i + 1, k + 1))
        total += Fraction((-1) ** (k - i) * mu[i] ** k, den)
    return total


def main():
    print("terms p=2 q=3:", [term(2, 3, n) for n in range(1, 6)])
    print("terms p=q=2:", [term(2, 2, n) for n in range(1, 5)])
    print("C(4,2) p=2 q=3:", coeff(2, 3, 4, 2), "p=1 q=2:", coeff(1, 2, 4, 2))
    print("row 6 p=2 q=3:", [coeff(2, 3, 6, k) for k in range(7)])
    print("row 5 p=-1 q=2:", [coeff(-1, 2, 5, k) for k in range(6)])
    print("row 5 p=3 q=-2:", [coeff(3, -2, 5, k) for k in range(6)])
    print("C(4,2) symbolic:", symbolic_coeff(4, 2))
    print("C(5,2) symbolic:", symbolic_coeff(5, 2))
    print("C(12,6) p=2 q=3:", coeff(2, 3, 12, 6))
    print("C(12,6) p=4 q=3:", coeff(4, 3, 12, 6))
    print("selections p=2 q=3 n=2 k=2 rep:", selections(2, 3, 2, 2, True))
    print("selections p=2 q=3 n=3 k=2 norep:", selections(2, 3, 3, 2, False))
    print("selections p=3 q=2 n=5 k=3 rep/norep:", selections(3, 2, 5, 3, True), selections(3, 2, 5, 3, False))
    print("A_2(0..4):", [acyclic(2, n) for n in range(5)])
    print("A_3(0..3):", [acyclic(3, n) for n in range(4)])
    print("bipartite a=2 n=3 k=1:", bipartite(2, 3, 1), "a=2 n=4 k=2:", bipartite(2, 4, 2),
          "a=3 n=4 k=2:", bipartite(3, 4, 2))
    inv = inverse_matrix(2, 3, 6)
    print("inverse p=2 q=3 row 5:", [inv[5, k] for k in range(6)])
    inv = inverse_matrix(2, 2, 5)
    print("inverse p=q=2 row 4:", [inv[4, k] for k in range(5)])
    print("fib a=1:", [fib(1, n) for n in range(11)], "a=2:", [fib(2, n) for n in range(8)])
    print("fibonomial a=1 n=5..10, k=2:", [fibonomial(1, n, 2) for n in range(5, 11)])
    print("fibonomial a=2 row 6:", [fibonomial(2, 6, k) for k in range(7)])
    print("vandermonde 2,3,(2,2,2):", vandermonde(2, 3, 2, 2, 2))
    print("vandermonde 2,3,(0,1,0):", vandermonde(2, 3, 0, 1, 0))
    print("vandermonde 3,2,(3,2,3):", vandermonde(3, 2, 3, 2, 3))
    print("equal1 p=1 q=2 k=3:", equal1(1, 2, 3), "p=3 q=-2 k=5:", equal1(3, -2, 5))
    print("gaussian q=2 row 6:", [coeff(1, 2, 6, k) for k in range(7)])
    print("gaussian q=-2 row 4:", [coeff(1, -2, 4, k) for k in range(5)])
    x, y = sp.symbols("x y")
    print("form B n=3 p=2 q=3:", sp.Poly(sp.expand((x + y) * (2 * x + 3 * y) * (4 * x + 9 * y)), x, y).as_dict())
    print("volume p=1 q=2 k=3 n=4:", prod(term(1, 2, s) for s in range(3, 5)) // prod(term(1, 2, s) for s in range(1, 3)))


if __name__ == "__main__":
    main()
