#pragma once

#include "homchar/cobar.hpp"
#include "homchar/mc.hpp"

#include <cstdint>
#include <random>

namespace homchar {

// Deterministic random source. All randomness in the library flows through
// this wrapper: std::mt19937_64 has a fully specified algorithm, and the
// bounded draws below avoid std::uniform_int_distribution, whose output is
// implementation-defined. Identical seeds therefore give identical streams on
// every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }
    // uniform in [0, n): by modulo; the tiny bias is irrelevant here and the
    // result is reproducible everywhere
    size_t below(size_t n) { return static_cast<size_t>(gen_() % n); }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<size_t>(hi - lo + 1)));
    }
    bool coin() { return gen_() & 1; }

    // small nonzero rational with numerator in [-3,3] and denominator in [1,3]
    Rational small_rational() {
        int num = 0;
        while (num == 0)
            num = range(-3, 3);
        return Rational(num, range(1, 3));
    }

private:
    std::mt19937_64 gen_;
};

// Random word of the given weight over the windowed basis.
Word random_word(const BialgebraOracle& A, const Window& w, int weight, Rng& rng);

// Random homogeneous element: all words share one total degree. Draws up to
// `terms` windowed words of the given weight, keeping those matching the
// degree of the first.
CobarElement random_homogeneous(OraclePtr A, int N, const Window& w, int weight, int terms,
                                Rng& rng);

// Random element with words of odd (resp. even) total degree across several
// weights. Used for twisted-complex inputs.
CobarElement random_parity(OraclePtr A, int N, const Window& w, bool odd, int terms, Rng& rng);

// Random invertible even gauge element: 1 + sparse even-degree components at
// weights 2 and 4 (within the truncation).
CobarElement random_gauge(OraclePtr A, int N, const Window& w, Rng& rng);

// Random homotopy character: a random grouplike from the stock, gauged by a
// random even invertible element. Passes mc_check by construction.
MaurerCartanElement random_character(OraclePtr A, int N, const Window& w, Rng& rng);

}  // namespace homchar
