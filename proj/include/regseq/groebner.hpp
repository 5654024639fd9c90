#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "regseq/polynomial.hpp"

namespace regseq {

struct BuchbergerOptions {
    // With a cutoff D the returned basis is correct for all degrees <= D
    // (sound for homogeneous generators only). Negative means no cutoff.
    int cutoff = -1;
};

struct GroebnerBasis {
    std::vector<Polynomial> elems;  // reduced: monic, minimal, tails reduced
    MonomialOrder order;
    bool complete = true;
    int valid_upto = std::numeric_limits<int>::max();
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

// Ordered generators plus a lazily computed, write-once Groebner basis cache.
// Copies share the cache.
class Ideal {
public:
    explicit Ideal(std::vector<Polynomial> gens, MonomialOrder ord = MonomialOrder::grevlex());

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return ord_; }
    const GroebnerBasis& basis() const;

private:
    friend Polynomial normal_form(const Polynomial&, const Ideal&);
    int nvars_;
    std::vector<Polynomial> gens_;
    MonomialOrder ord_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Unique remainder under the reduced basis; normal_form(f, I) = 0 iff f lies
// in I. With a truncated basis only degrees within the cutoff are decidable.
Polynomial normal_form(const Polynomial& f, const Ideal& I);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool is_member(const Polynomial& f, const Ideal& I);

}  // namespace regseq
