# cython: language_level=3
"""Compiled twin of the pure-Python kernels (see pure.py).

Big-integer arithmetic still goes through CPython longs; the win comes from
removing interpreter dispatch in the inner loops, which matters once the
Bernoulli numerators run to thousands of digits.
"""

from math import gcd

IMPLEMENTATION = "compiled"


def bernoulli_extend(list nums, list dens, long upto):
    cdef long start = len(nums)
    cdef long m, k
    if start == 0:
        nums.append(1)
        dens.append(1)
        start = 1
    if start == 1 and upto >= 1:
        nums.append(-1)
        dens.append(2)
        start = 2
    for m in range(start, upto + 1):
        if m % 2 == 1:
            nums.append(0)
            dens.append(1)
            continue
        c = 1
        acc_n = 0
        acc_d = 1
        for k in range(m):
            if k > 0:
                c = c * (m + 2 - k) // k
            b_num = nums[k]
            if b_num == 0:
                continue
            t_n = c * b_num
            t_d = dens[k]
            g = gcd(acc_d, t_d)
            acc_n = acc_n * (t_d // g) + t_n * (acc_d // g)
            acc_d = acc_d // g * t_d
        b_n = -acc_n
        b_d = acc_d * (m + 1)
        g = gcd(b_n, b_d)
        nums.append(b_n // g)
        dens.append(b_d // g)


def harmonic_sum(long order, long upto):
    cdef long j
    acc_n = 0
    acc_d = 1
    for j in range(1, upto + 1):
        # exponentiate as Python ints: C long ** long would go through double
        t_d = pow(<object> j, <object> order)
        g = gcd(acc_d, t_d)
        acc_n = acc_n * (t_d // g) + (acc_d // g)
        acc_d = acc_d // g * t_d
    g = gcd(acc_n, acc_d)
    if g:
        return (acc_n // g, acc_d // g)
    return (0, 1)


def harmonic_mod_sum(long order, long upto, modulus):
    cdef long j
    acc = 0
    for j in range(1, upto + 1):
        acc = (acc + pow(j, -order, modulus)) % modulus
    return acc
