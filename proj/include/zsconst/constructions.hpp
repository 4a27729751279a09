#pragma once

#include <stdexcept>
#include <vector>

#include "zsconst/ring.hpp"
#include "zsconst/zerosum.hpp"

namespace zsconst {

// Interleaved product of two avoiding sequences. With k = |S1|+1 and
// l = |S2|+1, repeats the block (m2*x_1, ..., m2*x_{k-1}) l times with the
// lifted terms y_1, ..., y_{l-1} of S2 inserted between consecutive blocks;
// the result has length k*l - 1 and avoids whenever the factors avoid for
// weight sets that project into the factors' weight sets.
inline Sequence product_construction(const Sequence& s1, int m1, const Sequence& s2, int m2, int n) {
    if (m1 < 1 || m2 < 1 || static_cast<long long>(m1) * m2 != n)
        throw std::invalid_argument("product_construction: need n = m1 * m2");
    for (int x : s1.terms)
        if (x >= m1) throw std::invalid_argument("product_construction: S1 term out of range");
    for (int y : s2.terms)
        if (y >= m2) throw std::invalid_argument("product_construction: S2 term out of range");

    // Least nonnegative lifts: a residue r mod m is reused verbatim mod n.
    std::vector<int> block;
    block.reserve(s1.size());
    for (int x : s1.terms) block.push_back(static_cast<int>(static_cast<long long>(m2) * x % n));

    if (s2.size() == 0) return Sequence(n, block);  // l = 1: the block alone

    std::vector<int> out;
    out.reserve((s1.size() + 1) * (s2.size() + 1) - 1);
    out.insert(out.end(), block.begin(), block.end());
    for (int y : s2.terms) {
        out.push_back(y);
        out.insert(out.end(), block.begin(), block.end());
    }
    return Sequence(n, out);
}

namespace detail {

// Smallest unit mod p that is not a j-th power of a unit.
inline int smallest_non_power(int p, int j) {
    auto powers = unit_powers(p, j);
    for (int x = 1; x < p; ++x)
        if (!powers.contains(x)) return x;
    throw std::invalid_argument("smallest_non_power: every unit is a power");
}

// Longest avoiding sequence the theory provides at a single prime, per
// weight family. Lengths: units -> 1; squares -> 2 (1 at p=2); cubes -> 2
// when p = 1 (mod 3), 3 at p = 7, 1 otherwise.
inline Sequence prime_base_certificate(int p, WeightKind kind, int j) {
    if (kind == WeightKind::Units || j == 1) return Sequence(p, {1});
    if (j == 2) {
        if (p == 2) return Sequence(2, {1});
        if (p == 3) return Sequence(3, {1, 1});
        return Sequence(p, {p - 1, smallest_non_power(p, 2)});
    }
    if (j == 3) {
        if (p == 7) return Sequence(7, {1, 3, 1});
        if (p % 3 == 1) return Sequence(p, {p - 1, smallest_non_power(p, 3)});
        return Sequence(p, {1});  // cubes exhaust the units here
    }
    throw std::invalid_argument("prime_base_certificate: unsupported weight family");
}

}  // namespace detail

// Avoiding certificate for U(n)^j (j = 1, 2, 3) of the longest length the
// product construction yields: one prime-level certificate per prime factor
// of n (with multiplicity), folded pairwise in ascending prime order.
inline Sequence build_lower_bound_certificate(int n, WeightKind kind, int j = 1) {
    if (kind == WeightKind::Units) j = 1;
    else if (kind != WeightKind::UnitPowers || j < 1 || j > 3)
        throw std::invalid_argument("build_lower_bound_certificate: unsupported weight family");
    if (n == 1) return Sequence(1, {});
    auto primes = prime_list(n);  // ascending, with multiplicity
    Sequence acc(1, {});
    int acc_mod = 1;
    for (auto p64 : primes) {
        const int p = static_cast<int>(p64);
        Sequence base = detail::prime_base_certificate(p, kind, j);
        acc = acc_mod == 1 ? base
                           : product_construction(base, p, acc, acc_mod, p * acc_mod);
        acc_mod *= p;
    }
    return acc;
}

// The blocking pattern 1, 0^{m-1}, 1, 0^{m-1}, ...: every window of length
// exactly m contains exactly one 1, so no weight set avoiding 0 can close a
// zero-sum on such a window.
inline Sequence window_blocker(int n, int m, int total_len) {
    if (n < 2) throw std::invalid_argument("window_blocker: need n >= 2");
    if (m < 1 || total_len < 1) throw std::invalid_argument("window_blocker: need m, total_len >= 1");
    std::vector<int> terms(total_len, 0);
    for (int i = 0; i < total_len; i += m) terms[i] = 1;
    return Sequence(n, terms);
}

}  // namespace zsconst
