#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "zsconst/residue_set.hpp"
#include "zsconst/ring.hpp"
#include "zsconst/zerosum.hpp"

namespace zsconst {

enum class Mode { C, D };

inline std::string to_string(Mode m) { return m == Mode::C ? "C" : "D"; }

enum class ReportStatus { Exact, LowerBoundOnly };

inline std::string to_string(ReportStatus s) {
    return s == ReportStatus::Exact ? "Exact" : "LowerBoundOnly";
}

struct SearchBudget {
    std::int64_t max_nodes = 50'000'000;
    int max_len = 0;             // 0 = use the default cap
    double time_limit = 0.0;     // seconds; 0 = unlimited
    bool parallel_roots = false;
};

struct ConstantReport {
    int n = 1;
    WeightSpec weight;
    Mode mode = Mode::C;
    ReportStatus status = ReportStatus::Exact;
    int value = 1;               // exact constant, or best lower bound
    Sequence certificate;        // longest avoiding sequence found
    std::int64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
};

// Certificate checker, independent of the DFS: C-mode brute-forces all
// contiguous blocks, D-mode runs the subset DP.
inline bool verify_avoiding(const Sequence& s, const WeightSpec& a, Mode mode) {
    if (s.size() == 0) throw std::invalid_argument("verify_avoiding: empty sequence");
    if (mode == Mode::D) return !find_zs_subsequence(s, a).has_value();
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Sequence block(s.n, std::vector<int>(s.terms.begin() + i, s.terms.begin() + j + 1));
            if (reachable_sums(block, a).contains(0)) return false;
        }
    return true;
}

namespace detail {

// Default cap on avoiding-sequence length. A plain consecutive zero-sum
// exists in any length-n sequence, and multiplying it by one weight keeps it
// weighted zero-sum, so avoiding sequences never exceed n-1 terms in either
// mode. Unit-power families additionally never exceed 4^Omega(n)+1.
inline int default_max_len(int n, const WeightSpec& a) {
    long long cap = n - 1;
    if (a.kind == WeightKind::Units || a.kind == WeightKind::UnitPowers) {
        long long fam = 1;
        for (int i = 0; i < omega(n) && fam <= n; ++i) fam *= 4;
        cap = std::min(cap, fam + 1);
    }
    return static_cast<int>(std::max(1LL, cap));
}

struct SearchLimits {
    std::int64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
    int cap;
    bool cap_is_proof;  // cap == n-1: exhausting to the cap is a full proof
};

struct SearchResult {
    std::vector<int> best;       // longest avoiding sequence found, first in order
    bool exhausted = true;       // false once any budget truncation happened
    bool cap_proved = false;     // an avoiding sequence of the provable max length was found
    std::int64_t nodes = 0;
};

// C-mode DFS. State: one reach set per window start, for windows ending at
// the current depth. Extending with x maps every set through +A*x and opens
// the window {a*x}; prune as soon as any set contains 0.
class ConsecutiveSearch {
public:
    ConsecutiveSearch(int n, const WeightSpec& a, const SearchLimits& lim, bool restrict_first)
        : n_(n), lim_(lim), restrict_first_(restrict_first) {
        mults_.reserve(n);
        for (int x = 0; x < n; ++x) mults_.push_back(weighted_multiples(x, a));
    }

    // First-level candidates: orbit representatives (divisors of n below n)
    // when symmetry reduction is on. Unit scaling maps avoiding sequences to
    // avoiding sequences, so each orbit needs one representative only.
    std::vector<int> root_candidates() const {
        std::vector<int> roots;
        if (!restrict_first_) {
            for (int x = 1; x < n_; ++x) roots.push_back(x);
        } else {
            for (int d = 1; d < n_; ++d)
                if (n_ % d == 0) roots.push_back(d);
        }
        return roots;
    }

    SearchResult run(const std::vector<int>& roots) {
        SearchResult res;
        std::vector<ResidueSet> windows;
        std::vector<int> seq;
        for (int x : roots) step(res, windows, seq, x);
        return res;
    }

private:
    bool out_of_budget(SearchResult& res) {
        if (res.nodes >= lim_.max_nodes) return true;
        if (lim_.has_deadline && (res.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= lim_.deadline)
            return true;
        return false;
    }

    void step(SearchResult& res, const std::vector<ResidueSet>& windows,
              std::vector<int>& seq, int x) {
        if (res.cap_proved) return;  // value already pinned; nothing left to learn
        if (out_of_budget(res)) { res.exhausted = false; return; }
        ++res.nodes;
        const auto& ax = mults_[x];
        if (std::find(ax.begin(), ax.end(), 0) != ax.end()) return;  // window {A*x} hits 0
        std::vector<ResidueSet> next;
        next.reserve(windows.size() + 1);
        for (const auto& w : windows) {
            ResidueSet r(n_);
            for (int c : ax) r.unite_shifted(w, c);
            if (r.contains(0)) return;
            next.push_back(std::move(r));
        }
        ResidueSet opened(n_);
        for (int c : ax) opened.insert(c);
        next.push_back(std::move(opened));

        seq.push_back(x);
        if (seq.size() > res.best.size()) res.best = seq;
        if (static_cast<int>(seq.size()) >= lim_.cap) {
            if (lim_.cap_is_proof) res.cap_proved = true;
            else res.exhausted = false;
        } else {
            for (int y = 1; y < n_; ++y) step(res, next, seq, y);
        }
        seq.pop_back();
    }

    int n_;
    SearchLimits lim_;
    bool restrict_first_;
    std::vector<std::vector<int>> mults_;
};

// D-mode DFS over nondecreasing sequences (subset zero-sums are order
// invariant), memoized on (reach set, smallest allowed next term). Memo
// entries record the best avoiding extension and are only written for
// subtrees explored without budget truncation.
class SubsetSearch {
public:
    SubsetSearch(int n, const WeightSpec& a, const SearchLimits& lim)
        : n_(n), lim_(lim) {
        mults_.reserve(n);
        for (int x = 0; x < n; ++x) mults_.push_back(weighted_multiples(x, a));
    }

    std::vector<int> root_candidates() const {
        std::vector<int> roots;
        for (int x = 1; x < n_; ++x) roots.push_back(x);
        return roots;
    }

    SearchResult run(const std::vector<int>& roots) {
        SearchResult res;
        ResidueSet reach(n_);
        for (int x : roots) {
            auto ext = extend(res, reach, x, 0);
            if (static_cast<int>(ext.size()) > static_cast<int>(res.best.size()))
                res.best = ext;
        }
        return res;
    }

private:
    bool out_of_budget(SearchResult& res) {
        if (res.nodes >= lim_.max_nodes) return true;
        if (lim_.has_deadline && (res.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= lim_.deadline)
            return true;
        return false;
    }

    // Longest avoiding sequence starting with term x from state (reach, depth),
    // continuing nondecreasingly; empty if x itself closes a zero-sum.
    std::vector<int> extend(SearchResult& res, const ResidueSet& reach, int x, int depth) {
        if (res.cap_proved) return {};
        if (out_of_budget(res)) { res.exhausted = false; return {}; }
        ++res.nodes;
        const auto& ax = mults_[x];
        ResidueSet next = reach;
        for (int c : ax) {
            next.unite_shifted(reach, c);
            next.insert(c);
        }
        if (next.contains(0)) return {};
        if (depth + 1 >= lim_.cap) {
            if (lim_.cap_is_proof) res.cap_proved = true;
            else res.exhausted = false;
            return {x};
        }
        MemoKey key{next, x};
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            std::vector<int> out{x};
            out.insert(out.end(), it->second.begin(), it->second.end());
            return out;
        }
        const bool was_exhausted = res.exhausted;
        res.exhausted = true;
        std::vector<int> best_tail;
        for (int y = x; y < n_; ++y) {
            auto tail = extend(res, next, y, depth + 1);
            if (tail.size() > best_tail.size()) best_tail = tail;
        }
        if (res.exhausted && !res.cap_proved &&
            depth + 1 + static_cast<int>(best_tail.size()) < lim_.cap)
            memo_[key] = best_tail;
        res.exhausted = res.exhausted && was_exhausted;
        std::vector<int> out{x};
        out.insert(out.end(), best_tail.begin(), best_tail.end());
        return out;
    }

    using MemoKey = std::pair<ResidueSet, int>;
    int n_;
    SearchLimits lim_;
    std::vector<std::vector<int>> mults_;
    std::map<MemoKey, std::vector<int>> memo_;
};

inline int worker_count() {
    if (const char* env = std::getenv("ZSCONST_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Lexicographic merge: longer wins, ties go to the smaller sequence.
inline void merge_result(SearchResult& acc, const SearchResult& r) {
    if (r.best.size() > acc.best.size() ||
        (r.best.size() == acc.best.size() && !r.best.empty() && r.best < acc.best))
        acc.best = r.best;
    acc.exhausted = acc.exhausted && r.exhausted;
    acc.cap_proved = acc.cap_proved || r.cap_proved;
    acc.nodes += r.nodes;
}

}  // namespace detail

struct SearchOptions {
    bool symmetry = true;          // C-mode: restrict first term to orbit representatives
    bool ordered_d_mode = false;   // D-mode: disable the nondecreasing reduction (testing)
};

inline ConstantReport longest_avoiding(int n, const WeightSpec& a, Mode mode,
                                       const SearchBudget& budget = {},
                                       const SearchOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("longest_avoiding: n must be positive");
    if (a.n != n) throw std::invalid_argument("longest_avoiding: weight modulus mismatch");
    if (a.realized.empty()) throw std::invalid_argument("longest_avoiding: empty weight set");
    const auto t0 = std::chrono::steady_clock::now();

    ConstantReport rep;
    rep.n = n;
    rep.weight = a;
    rep.mode = mode;
    rep.certificate = Sequence(n, {});

    // Degenerate: any single term is zero-sum (n = 1 forces x = 0; weight 0
    // annihilates anything), so the constant is 1 and no avoiding sequence exists.
    if (n == 1 || a.contains_zero()) {
        rep.status = ReportStatus::Exact;
        rep.value = 1;
        return rep;
    }

    detail::SearchLimits lim;
    lim.max_nodes = std::max<std::int64_t>(1, budget.max_nodes);
    lim.has_deadline = budget.time_limit > 0;
    lim.deadline = t0 + std::chrono::microseconds(static_cast<std::int64_t>(budget.time_limit * 1e6));
    lim.cap = budget.max_len > 0 ? std::min(budget.max_len, n - 1)
                                 : detail::default_max_len(n, a);
    lim.cap_is_proof = lim.cap >= n - 1;

    detail::SearchResult result;
    auto run_roots = [&](auto& engine) {
        auto roots = engine.root_candidates();
        if (!budget.parallel_roots || roots.size() < 2) {
            result = engine.run(roots);
            return;
        }
        const int workers = std::min<int>(detail::worker_count(), static_cast<int>(roots.size()));
        std::vector<std::future<detail::SearchResult>> futs;
        for (int w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w] {
                std::decay_t<decltype(engine)> local = engine;  // own memo/state per worker
                std::vector<int> mine;
                for (std::size_t i = w; i < roots.size(); i += workers) mine.push_back(roots[i]);
                return local.run(mine);
            }));
        }
        for (auto& f : futs) detail::merge_result(result, f.get());
    };

    if (mode == Mode::C) {
        detail::ConsecutiveSearch engine(n, a, lim, opts.symmetry);
        run_roots(engine);
    } else if (!opts.ordered_d_mode) {
        detail::SubsetSearch engine(n, a, lim);
        run_roots(engine);
    } else {
        // Testing path: full ordered enumeration for D-mode, no reductions.
        detail::SearchResult res;
        std::vector<int> seq;
        std::function<void(const ResidueSet&)> dfs = [&](const ResidueSet& reach) {
            if (res.cap_proved) return;
            if (res.nodes >= lim.max_nodes) { res.exhausted = false; return; }
            for (int x = 0; x < n; ++x) {
                ++res.nodes;
                ResidueSet next = reach;
                for (int c : weighted_multiples(x, a)) {
                    next.unite_shifted(reach, c);
                    next.insert(c);
                }
                if (next.contains(0)) continue;
                seq.push_back(x);
                if (seq.size() > res.best.size()) res.best = seq;
                if (static_cast<int>(seq.size()) >= lim.cap) {
                    if (lim.cap_is_proof) res.cap_proved = true;
                    else res.exhausted = false;
                } else {
                    dfs(next);
                }
                seq.pop_back();
            }
        };
        ResidueSet start(n);
        dfs(start);
        result = res;
    }

    rep.certificate = Sequence(n, result.best);
    rep.value = static_cast<int>(result.best.size()) + 1;
    // Exact either by exhaustion or by the length cap: a certificate of the
    // provable maximum length pins the constant from both sides.
    rep.status = result.exhausted || result.cap_proved ? ReportStatus::Exact
                                                       : ReportStatus::LowerBoundOnly;
    rep.nodes_explored = result.nodes;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// C_A(n) / D_A(n): one more than the longest avoiding sequence.
inline ConstantReport compute_constant(int n, const WeightSpec& a, Mode mode,
                                       const SearchBudget& budget = {},
                                       const SearchOptions& opts = {}) {
    return longest_avoiding(n, a, mode, budget, opts);
}

struct SampledCheckReport {
    int n = 1;
    Mode mode = Mode::C;
    int k = 0;
    std::int64_t trials = 0;
    std::int64_t violations = 0;  // sequences of length k with no zero-sum; any > 0 disproves C_A(n) <= k
    std::optional<Sequence> counterexample;
};

// Statistical corroboration of an upper bound: samples uniform sequences of
// length k and counts those that avoid. Can disprove a bound, never prove it.
inline SampledCheckReport sampled_upper_check(int n, const WeightSpec& a, Mode mode,
                                              int k, std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sampled_upper_check: trials must be >= 1");
    if (k < 1) throw std::invalid_argument("sampled_upper_check: k must be >= 1");
    SampledCheckReport rep;
    rep.n = n;
    rep.mode = mode;
    rep.k = k;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    std::vector<int> terms(k);
    for (std::int64_t t = 0; t < trials; ++t) {
        for (int& x : terms) x = dist(rng);
        Sequence s(n, terms);
        bool avoids = mode == Mode::C ? !find_consecutive_zs(s, a).has_value()
                                      : !find_zs_subsequence(s, a).has_value();
        if (avoids) {
            ++rep.violations;
            if (!rep.counterexample) rep.counterexample = s;
        }
    }
    return rep;
}

}  // namespace zsconst
