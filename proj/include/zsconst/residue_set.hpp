#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsconst {

// Subset of Z_n stored as an n-bit mask. This is the universal currency for
// weight sets, sumsets and reachable-sum states.
class ResidueSet {
public:
    explicit ResidueSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 1) throw std::invalid_argument("ResidueSet: modulus must be positive");
    }

    int modulus() const { return n_; }

    void insert(int x) {
        check(x);
        words_[x >> 6] |= (std::uint64_t{1} << (x & 63));
    }

    void erase(int x) {
        check(x);
        words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }

    bool contains(int x) const {
        check(x);
        return (words_[x >> 6] >> (x & 63)) & 1;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    // {x + c : x in this}, wrapping mod n. Word-level rotate: the union of
    // the mask shifted up by c and shifted down by n-c covers both the
    // non-wrapping and wrapping bits.
    ResidueSet shifted(int c) const {
        c %= n_;
        if (c < 0) c += n_;
        ResidueSet out(n_);
        if (c == 0) { out.words_ = words_; return out; }
        or_shifted_up(out.words_, words_, c, n_);
        or_shifted_down(out.words_, words_, n_ - c);
        out.mask_top();
        return out;
    }

    void unite(const ResidueSet& o) {
        same_modulus(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    // OR in a shifted copy of `o`; the workhorse of the reachable-sum DP.
    void unite_shifted(const ResidueSet& o, int c) {
        same_modulus(o);
        c %= n_;
        if (c < 0) c += n_;
        if (c == 0) { unite(o); return; }
        or_shifted_up(words_, o.words_, c, n_);
        or_shifted_down(words_, o.words_, n_ - c);
        mask_top();
    }

    bool operator==(const ResidueSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ResidueSet& o) const { return !(*this == o); }

    // Total order usable as a map key.
    bool operator<(const ResidueSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return words_ < o.words_;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    static ResidueSet of(int n, std::initializer_list<int> xs) {
        ResidueSet s(n);
        for (int x : xs) s.insert(x);
        return s;
    }

    static ResidueSet full(int n) {
        ResidueSet s(n);
        for (int x = 0; x < n; ++x) s.insert(x);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (auto w : words_) h = h * 1099511628211ULL ^ w;
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int x : elements()) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "}";
    }

private:
    // dst |= src << c, keeping only bits below n.
    static void or_shifted_up(std::vector<std::uint64_t>& dst,
                              const std::vector<std::uint64_t>& src, int c, int n) {
        const int wshift = c >> 6, bshift = c & 63;
        const int nw = static_cast<int>(src.size());
        for (int i = nw - 1; i >= wshift; --i) {
            std::uint64_t v = src[i - wshift] << bshift;
            if (bshift && i - wshift - 1 >= 0) v |= src[i - wshift - 1] >> (64 - bshift);
            if ((i << 6) < n) dst[i] |= v;
        }
    }

    // dst |= src >> c.
    static void or_shifted_down(std::vector<std::uint64_t>& dst,
                                const std::vector<std::uint64_t>& src, int c) {
        const int wshift = c >> 6, bshift = c & 63;
        const int nw = static_cast<int>(src.size());
        for (int i = 0; i + wshift < nw; ++i) {
            std::uint64_t v = src[i + wshift] >> bshift;
            if (bshift && i + wshift + 1 < nw) v |= src[i + wshift + 1] << (64 - bshift);
            dst[i] |= v;
        }
    }

    void mask_top() {
        const int r = n_ & 63;
        if (r) words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    void check(int x) const {
        if (x < 0 || x >= n_) throw std::out_of_range("ResidueSet: residue out of range");
    }
    void same_modulus(const ResidueSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ResidueSet: modulus mismatch");
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace zsconst
