#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "zsconst/residue_set.hpp"
#include "zsconst/ring.hpp"

namespace zsconst {

// Finite sequence over Z_n.
struct Sequence {
    int n = 1;
    std::vector<int> terms;

    Sequence() = default;
    Sequence(int modulus, std::vector<int> t) : n(modulus), terms(std::move(t)) {
        for (int x : terms)
            if (x < 0 || x >= n) throw std::out_of_range("Sequence: term out of range");
    }
    std::size_t size() const { return terms.size(); }
};

// Proof object for a weighted zero-sum: selected positions (0-based) and one
// weight per position, with sum(a_i * x_i) = 0 mod n.
struct ZSWitness {
    std::vector<int> indices;
    std::vector<int> coefficients;
};

// Independent witness checker: direct summation, no DP involved.
inline bool validate_witness(const Sequence& s, const WeightSpec& a, const ZSWitness& w) {
    if (a.n != s.n) return false;
    if (w.indices.empty() || w.indices.size() != w.coefficients.size()) return false;
    long long sum = 0;
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        int idx = w.indices[i], c = w.coefficients[i];
        if (idx < 0 || idx >= static_cast<int>(s.size())) return false;
        if (!a.realized.contains(c)) return false;
        sum += static_cast<long long>(c) * s.terms[idx];
    }
    return sum % s.n == 0;
}

// Per-term weighted multiples {a*x mod n : a in A}, deduped. Zero divisors x
// shrink this set, which is where the DP saves work.
inline std::vector<int> weighted_multiples(int x, const WeightSpec& a) {
    ResidueSet s(a.n);
    for (int w : a.realized.elements())
        s.insert(static_cast<int>(static_cast<long long>(w) * x % a.n));
    return s.elements();
}

namespace detail {

inline void require_same_modulus(const Sequence& s, const WeightSpec& a) {
    if (s.n != a.n) throw std::invalid_argument("modulus mismatch between sequence and weights");
}

}  // namespace detail

// The set { sum a_i x_i mod n : a_i in A }. Empty sequence yields {0}.
inline ResidueSet reachable_sums(const Sequence& s, const WeightSpec& a) {
    detail::require_same_modulus(s, a);
    ResidueSet reach(s.n);
    reach.insert(0);
    for (int x : s.terms) {
        ResidueSet next(s.n);
        for (int c : weighted_multiples(x, a)) next.unite_shifted(reach, c);
        reach = std::move(next);
    }
    return reach;
}

namespace detail {

// Suffix reach sets B_i = reachable_sums of terms [i..k); B_k = {0}. Used to
// recover the lexicographically smallest coefficient vector by a forward
// greedy pass.
inline std::vector<ResidueSet> suffix_reach(const Sequence& s, const WeightSpec& a) {
    const int k = static_cast<int>(s.size());
    std::vector<ResidueSet> suf(k + 1, ResidueSet(s.n));
    suf[k].insert(0);
    for (int i = k - 1; i >= 0; --i) {
        for (int c : weighted_multiples(s.terms[i], a))
            suf[i].unite_shifted(suf[i + 1], c);
    }
    return suf;
}

// Coefficients making sum a_i x_i = target over all of s; assumes feasible.
inline std::vector<int> recover_coefficients(const Sequence& s, const WeightSpec& a, int target) {
    const int k = static_cast<int>(s.size());
    auto suf = suffix_reach(s, a);
    std::vector<int> coeffs;
    coeffs.reserve(k);
    int need = target;
    const auto weights = a.realized.elements();  // ascending
    for (int i = 0; i < k; ++i) {
        bool found = false;
        for (int c : weights) {
            const int rest = static_cast<int>(((need - static_cast<long long>(c) * s.terms[i]) % s.n + s.n) % s.n);
            if (suf[i + 1].contains(rest)) {
                coeffs.push_back(c);
                need = rest;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("recover_coefficients: infeasible target");
    }
    return coeffs;
}

}  // namespace detail

// Whole-sequence test: witness over all indices iff 0 is a reachable sum.
inline std::optional<ZSWitness> is_weighted_zero_sum(const Sequence& s, const WeightSpec& a) {
    detail::require_same_modulus(s, a);
    if (s.size() == 0) throw std::invalid_argument("is_weighted_zero_sum: empty sequence");
    if (!reachable_sums(s, a).contains(0)) return std::nullopt;
    ZSWitness w;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) w.indices.push_back(i);
    w.coefficients = detail::recover_coefficients(s, a, 0);
    return w;
}

// D-mode: weighted zero-sum over some nonempty subset of indices.
// DP over the set of sums reachable by nonempty weighted subsets.
inline std::optional<ZSWitness> find_zs_subsequence(const Sequence& s, const WeightSpec& a) {
    detail::require_same_modulus(s, a);
    const int k = static_cast<int>(s.size());
    if (k == 0) throw std::invalid_argument("find_zs_subsequence: empty sequence");
    ResidueSet reach(s.n);  // sums of nonempty weighted subsets so far
    bool found = false;
    for (int i = 0; i < k && !found; ++i) {
        ResidueSet next = reach;
        for (int c : weighted_multiples(s.terms[i], a)) {
            next.unite_shifted(reach, c);
            next.insert(c);
        }
        reach = std::move(next);
        found = reach.contains(0);
    }
    if (!found) return std::nullopt;

    // Suffix sets over subsets: with0[i] includes the empty selection,
    // nonempty[i] does not. Greedy forward pass prefers selecting an index
    // (smallest coefficient) over skipping it.
    std::vector<ResidueSet> with0(k + 1, ResidueSet(s.n)), nonempty(k + 1, ResidueSet(s.n));
    with0[k].insert(0);
    for (int i = k - 1; i >= 0; --i) {
        with0[i] = with0[i + 1];
        nonempty[i] = nonempty[i + 1];
        for (int c : weighted_multiples(s.terms[i], a)) {
            with0[i].unite_shifted(with0[i + 1], c);
            nonempty[i].unite_shifted(with0[i + 1], c);
        }
    }

    ZSWitness w;
    int need = 0;
    bool selected = false;
    const auto weights = a.realized.elements();
    for (int i = 0; i < k; ++i) {
        bool took = false;
        for (int c : weights) {
            const int rest = static_cast<int>(((need - static_cast<long long>(c) * s.terms[i]) % s.n + s.n) % s.n);
            if (with0[i + 1].contains(rest)) {
                w.indices.push_back(i);
                w.coefficients.push_back(c);
                need = rest;
                selected = took = true;
                break;
            }
        }
        if (!took) {
            // must be completable by the suffix alone
            const ResidueSet& fallback = selected ? with0[i + 1] : nonempty[i + 1];
            if (!fallback.contains(need))
                throw std::logic_error("find_zs_subsequence: reconstruction failed");
        }
        if (selected && need == 0) break;
    }
    return w;
}

// C-mode: weighted zero-sum over a contiguous block. Deterministic choice:
// smallest end index, then smallest start index, then lexicographically
// smallest coefficient vector.
inline std::optional<ZSWitness> find_consecutive_zs(const Sequence& s, const WeightSpec& a) {
    detail::require_same_modulus(s, a);
    const int k = static_cast<int>(s.size());
    if (k == 0) throw std::invalid_argument("find_consecutive_zs: empty sequence");
    for (int end = 0; end < k; ++end) {
        // reach sets of windows [start..end], grown incrementally in start
        // from end downwards would lose the smallest-start order; windows are
        // short at desk scale, so recompute per start.
        for (int start = 0; start <= end; ++start) {
            Sequence block(s.n, std::vector<int>(s.terms.begin() + start, s.terms.begin() + end + 1));
            if (reachable_sums(block, a).contains(0)) {
                ZSWitness w;
                for (int i = start; i <= end; ++i) w.indices.push_back(i);
                w.coefficients = detail::recover_coefficients(block, a, 0);
                return w;
            }
        }
    }
    return std::nullopt;
}

// Unweighted pigeonhole: a sequence of length >= n over Z_n has a block with
// plain sum 0; returns (i, j) 0-based inclusive via the prefix-sum collision.
inline std::pair<int, int> prefix_pigeonhole(const Sequence& s) {
    const int n = s.n;
    if (static_cast<int>(s.size()) < n)
        throw std::invalid_argument("prefix_pigeonhole: sequence shorter than modulus");
    std::vector<int> seen(n, -2);  // prefix value -> earliest index, -1 for empty prefix
    seen[0] = -1;
    int sum = 0;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        sum = (sum + s.terms[i]) % n;
        if (seen[sum] != -2) return {seen[sum] + 1, i};
        seen[sum] = i;
    }
    throw std::logic_error("prefix_pigeonhole: pigeonhole cannot fail");  // unreachable
}

}  // namespace zsconst
