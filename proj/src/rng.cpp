#include "homchar/rng.hpp"

#include <stdexcept>

namespace homchar {

Word random_word(const BialgebraOracle& A, const Window& w, int weight, Rng& rng) {
    const auto basis = A.basis(w);
    if (basis.empty())
        throw std::logic_error("empty basis window");
    Word word;
    for (int i = 0; i < weight; ++i)
        word.letters.push_back(basis[rng.below(basis.size())]);
    return word;
}

CobarElement random_homogeneous(OraclePtr A, int N, const Window& w, int weight, int terms,
                                Rng& rng) {
    CobarElement out(A, N);
    int deg = 0;
    bool have_deg = false;
    for (int t = 0; t < terms; ++t) {
        Word word = random_word(*A, w, weight, rng);
        int d = total_degree(*A, word);
        if (!have_deg) {
            deg = d;
            have_deg = true;
        } else if (d != deg) {
            continue;  // keep the element homogeneous
        }
        out.add(word, rng.small_rational());
    }
    return out;
}

CobarElement random_parity(OraclePtr A, int N, const Window& w, bool odd, int terms, Rng& rng) {
    CobarElement out(A, N);
    int attempts = 0;
    int added = 0;
    while (added < terms && attempts < 50 * terms) {
        ++attempts;
        int weight = rng.range(1, N);
        Word word = random_word(*A, w, weight, rng);
        if ((total_degree(*A, word) % 2 != 0) == odd) {
            out.add(word, rng.small_rational());
            ++added;
        }
    }
    return out;
}

CobarElement random_gauge(OraclePtr A, int N, const Window& w, Rng& rng) {
    CobarElement f = CobarElement::scalar(A, N, rng.small_rational());
    for (int weight = 2; weight <= N; weight += 2) {
        int terms = rng.range(0, 2);
        int attempts = 0;
        while (terms > 0 && attempts < 100) {
            ++attempts;
            Word word = random_word(*A, w, weight, rng);
            if (total_degree(*A, word) % 2 == 0) {
                f.add(word, rng.small_rational());
                --terms;
            }
        }
    }
    return f;
}

MaurerCartanElement random_character(OraclePtr A, int N, const Window& w, Rng& rng) {
    auto stock = A->grouplike_stock(w);
    if (stock.empty())
        throw std::logic_error("no grouplike stock for " + A->name());
    MaurerCartanElement g =
        MaurerCartanElement::from_grouplike(A, N, stock[rng.below(stock.size())]);
    CobarElement f = random_gauge(A, N, w, rng);
    return gauge_act(f, g);
}

}  // namespace homchar
