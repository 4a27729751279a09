#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zsconst/residue_set.hpp"

namespace zsconst {

using std::int64_t;

// Ordered prime factorization of a positive integer; empty for n = 1.
struct Factorization {
    int64_t n = 1;
    std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), primes ascending
};

// Trial division up to sqrt(n); adequate for the ranges this library targets.
inline Factorization factorize(int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    int64_t m = n;
    for (int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

// Number of prime factors counted with multiplicity; omega(1) = 0.
inline int omega(int64_t n) {
    int k = 0;
    for (auto& [p, e] : factorize(n).factors) k += e;
    return k;
}

// Prime factors of n listed with multiplicity, ascending.
inline std::vector<int64_t> prime_list(int64_t n) {
    std::vector<int64_t> out;
    for (auto& [p, e] : factorize(n).factors)
        for (int i = 0; i < e; ++i) out.push_back(p);
    return out;
}

inline int64_t pow_mod(int64_t b, int64_t e, int64_t n) {
    if (n == 1) return 0;
    int64_t r = 1;
    b %= n;
    while (e > 0) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return r;
}

// U(n) as a ResidueSet. U(1) = {0}: the zero ring's single element is its unit.
inline ResidueSet unit_set(int n) {
    ResidueSet s(n);
    if (n == 1) { s.insert(0); return s; }
    for (int x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) s.insert(x);
    return s;
}

// { x^j mod n : x in U(n) }.
inline ResidueSet unit_powers(int n, int j) {
    if (n < 1 || j < 1) throw std::invalid_argument("unit_powers: need n >= 1, j >= 1");
    ResidueSet s(n);
    if (n == 1) { s.insert(0); return s; }
    for (int x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1)
            s.insert(static_cast<int>(pow_mod(x, j, n)));
    return s;
}

// Ring projection Z_n -> Z_m for m | n.
inline int project(int x, int n, int m) {
    if (m < 1 || n % m != 0) throw std::invalid_argument("project: m must divide n");
    if (x < 0 || x >= n) throw std::out_of_range("project: residue out of range");
    return x % m;
}

inline ResidueSet project(const ResidueSet& s, int n, int m) {
    if (s.modulus() != n) throw std::invalid_argument("project: modulus mismatch");
    if (m < 1 || n % m != 0) throw std::invalid_argument("project: m must divide n");
    ResidueSet out(m);
    for (int x : s.elements()) out.insert(x % m);
    return out;
}

inline std::vector<int> project(const std::vector<int>& terms, int n, int m) {
    if (m < 1 || n % m != 0) throw std::invalid_argument("project: m must divide n");
    std::vector<int> out;
    out.reserve(terms.size());
    for (int x : terms) out.push_back(project(x, n, m));
    return out;
}

// Smallest c in U(n) with c = c_prime (mod n_prime), where n = p * n_prime.
inline int lift_unit(int c_prime, int n_prime, int n) {
    if (n_prime < 1 || n % n_prime != 0) throw std::invalid_argument("lift_unit: n_prime must divide n");
    if (!is_prime(n / n_prime)) throw std::invalid_argument("lift_unit: n / n_prime must be prime");
    if (c_prime < 0 || c_prime >= n_prime) throw std::out_of_range("lift_unit: residue out of range");
    const bool unit = (n_prime == 1) ? (c_prime == 0) : (std::gcd(c_prime, n_prime) == 1);
    if (!unit) throw std::invalid_argument("lift_unit: input is not a unit");
    for (int c = (n_prime == 1 ? 1 : c_prime); c < n; c += n_prime)
        if (std::gcd(c, n) == 1) return c;
    throw std::logic_error("lift_unit: no lift found");  // unreachable for valid inputs
}

// Coprime split n = n1 * n2 where n1 collects the prime powers p^r with
// p = 1 (mod 3) and n2 the rest. Only defined when 7 does not divide n.
struct NSplit {
    int64_t n, n1, n2;
};

inline NSplit split_n1_n2(int64_t n) {
    if (n < 1) throw std::invalid_argument("split_n1_n2: n must be positive");
    if (n % 7 == 0) throw std::invalid_argument("split_n1_n2: seven divides n");
    NSplit s{n, 1, 1};
    for (auto& [p, e] : factorize(n).factors) {
        int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        (p % 3 == 1 ? s.n1 : s.n2) *= pe;
    }
    return s;
}

// Canonical representative of the U(n)-orbit of x: gcd(x, n), with 0 -> 0.
inline int orbit_representative(int x, int n) {
    if (x < 0 || x >= n) throw std::out_of_range("orbit_representative: residue out of range");
    if (x == 0) return 0;
    return static_cast<int>(std::gcd(static_cast<int64_t>(x), static_cast<int64_t>(n)));
}

// --- Weight sets ---------------------------------------------------------

enum class WeightKind { Units, UnitPowers, PmOne, Nonzero, SingletonOne, Explicit };

// Symbolic weight set plus its realized subset of Z_n.
struct WeightSpec {
    int n = 1;
    WeightKind kind = WeightKind::Units;
    int power = 1;  // meaningful for UnitPowers
    ResidueSet realized{1};
    std::string text;  // canonical spelling, e.g. "units^3"

    bool contains_zero() const { return realized.contains(0); }
};

inline WeightSpec make_weights(int n, WeightKind kind, int power = 1,
                               const std::vector<int>& explicit_list = {}) {
    if (n < 1) throw std::invalid_argument("weights: modulus must be positive");
    WeightSpec w;
    w.n = n;
    w.kind = kind;
    w.power = power;
    w.realized = ResidueSet(n);
    switch (kind) {
    case WeightKind::Units:
        w.realized = unit_set(n);
        w.text = "units";
        break;
    case WeightKind::UnitPowers:
        if (power < 1) throw std::invalid_argument("weights: power must be >= 1");
        w.realized = unit_powers(n, power);
        w.text = "units^" + std::to_string(power);
        break;
    case WeightKind::PmOne:
        if (n == 1) w.realized.insert(0);
        else { w.realized.insert(1 % n); w.realized.insert(n - 1); }
        w.text = "pm1";
        break;
    case WeightKind::Nonzero:
        if (n == 1) w.realized.insert(0);  // degenerate ring: only 0 exists
        else for (int x = 1; x < n; ++x) w.realized.insert(x);
        w.text = "nonzero";
        break;
    case WeightKind::SingletonOne:
        w.realized.insert(1 % n);
        w.text = "one";
        break;
    case WeightKind::Explicit: {
        if (explicit_list.empty()) throw std::invalid_argument("weights: explicit set is empty");
        std::string body;
        std::vector<int> sorted = explicit_list;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int x : sorted) {
            if (x < 0 || x >= n) throw std::invalid_argument("weights: element out of range");
            w.realized.insert(x);
            if (!body.empty()) body += ",";
            body += std::to_string(x);
        }
        w.text = "set:{" + body + "}";
        break;
    }
    }
    if (w.realized.empty()) throw std::invalid_argument("weights: realized set is empty");
    return w;
}

// Parses the textual syntax: units | units^J | pm1 | nonzero | one | set:{a,b,c}.
inline WeightSpec parse_weights(int n, const std::string& spec) {
    if (spec == "units") return make_weights(n, WeightKind::Units);
    if (spec == "pm1") return make_weights(n, WeightKind::PmOne);
    if (spec == "nonzero") return make_weights(n, WeightKind::Nonzero);
    if (spec == "one") return make_weights(n, WeightKind::SingletonOne);
    if (spec.rfind("units^", 0) == 0) {
        const std::string num = spec.substr(6);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("weights: bad exponent in '" + spec + "'");
        int j = std::stoi(num);
        if (j < 1) throw std::invalid_argument("weights: exponent must be >= 1");
        return make_weights(n, WeightKind::UnitPowers, j);
    }
    if (spec.rfind("set:{", 0) == 0 && spec.back() == '}') {
        std::vector<int> xs;
        std::string body = spec.substr(5, spec.size() - 6);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("weights: bad element '" + tok + "'");
            xs.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return make_weights(n, WeightKind::Explicit, 1, xs);
    }
    throw std::invalid_argument("weights: unknown spec '" + spec + "'");
}

}  // namespace zsconst
