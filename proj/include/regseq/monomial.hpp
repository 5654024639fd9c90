#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace regseq {

inline constexpr int max_vars = 8;

// Exponent vector with cached total degree. Immutable once built.
class Monomial {
public:
    Monomial() : n_(0), deg_(0) { e_.fill(0); }

    explicit Monomial(int nvars) : n_(check_nvars(nvars)), deg_(0) { e_.fill(0); }

    Monomial(int nvars, const std::vector<int>& exps) : n_(check_nvars(nvars)), deg_(0) {
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("exponent count does not match variable count");
        e_.fill(0);
        for (int i = 0; i < nvars; ++i) {
            if (exps[i] < 0) throw std::invalid_argument("negative exponent");
            e_[i] = static_cast<int16_t>(exps[i]);
            deg_ += exps[i];
        }
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }

    bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    friend Monomial mul(const Monomial& a, const Monomial& b) {
        Monomial r(a.require_same(b));
        for (int i = 0; i < a.n_; ++i) r.e_[i] = static_cast<int16_t>(a.e_[i] + b.e_[i]);
        r.deg_ = static_cast<int16_t>(a.deg_ + b.deg_);
        return r;
    }

    // b / a, valid only when a divides b
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r(b.require_same(a));
        for (int i = 0; i < b.n_; ++i) {
            if (b.e_[i] < a.e_[i]) throw std::invalid_argument("monomial quotient undefined");
            r.e_[i] = static_cast<int16_t>(b.e_[i] - a.e_[i]);
        }
        r.deg_ = static_cast<int16_t>(b.deg_ - a.deg_);
        return r;
    }

    friend bool divides(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.e_[i] > b.e_[i]) return false;
        return true;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.require_same(b));
        int d = 0;
        for (int i = 0; i < a.n_; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = static_cast<int16_t>(d);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n_; ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (int i = 0; i < n_; ++i) {
            h ^= static_cast<size_t>(e_[i]) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    static int check_nvars(int n) {
        if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range");
        return n;
    }
    int require_same(const Monomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
        return n_;
    }

    uint8_t n_;
    int16_t deg_;
    std::array<int16_t, max_vars> e_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Lexicographic or graded reverse lexicographic, with an optional variable
// permutation: perm[i] is the variable placed at significance position i.
struct MonomialOrder {
    enum class Kind { lex, grevlex };

    Kind kind = Kind::grevlex;
    std::array<uint8_t, max_vars> perm = {0, 1, 2, 3, 4, 5, 6, 7};

    static MonomialOrder lex() { return MonomialOrder{Kind::lex, {0, 1, 2, 3, 4, 5, 6, 7}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Kind::grevlex, {0, 1, 2, 3, 4, 5, 6, 7}}; }

    static MonomialOrder lex_permuted(const std::vector<int>& p) { return permuted(Kind::lex, p); }
    static MonomialOrder grevlex_permuted(const std::vector<int>& p) { return permuted(Kind::grevlex, p); }

private:
    static MonomialOrder permuted(Kind k, const std::vector<int>& p);
};

// +1 when a comes after b in the order (a > b), -1 when a < b, 0 when equal.
int order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace regseq
