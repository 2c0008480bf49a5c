#include "doctest.h"

#include "homchar/linalg.hpp"

#include <random>

using namespace homchar;

namespace {

SparseMatrix make(const std::vector<std::vector<Rational>>& rows) {
    SparseMatrix m;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t j = 0; j < cols; ++j)
        m.columns.push_back("c" + std::to_string(j));
    for (const auto& r : rows) {
        SparseVector v;
        for (size_t j = 0; j < r.size(); ++j)
            v.set(m.columns[j], r[j]);
        m.rows.push_back(v);
    }
    return m;
}

SparseVector vec(const std::vector<Rational>& entries) {
    SparseVector v;
    for (size_t j = 0; j < entries.size(); ++j)
        v.set("c" + std::to_string(j), entries[j]);
    return v;
}

}  // namespace

TEST_CASE("rational basics") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(-2, -4) == half);
    CHECK(half.inverse().str() == "2");
    CHECK(*Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(*Rational::parse("5") == Rational(5));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse("x"));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rref of a rank-1 matrix") {
    auto r = rref(make({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}));
    CHECK(r.pivots == std::vector<Key>{"c0"});
    REQUIRE(r.reduced.rows.size() == 1);
    CHECK(r.reduced.rows[0].at("c0") == Rational(1));
    CHECK(r.reduced.rows[0].at("c1") == Rational(2));
}

TEST_CASE("rref of the identity") {
    auto m = make({{Rational(1), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)}});
    auto r = rref(m);
    CHECK(r.pivots == std::vector<Key>{"c0", "c1", "c2"});
    CHECK(r.reduced == m);
}

TEST_CASE("rref with rational entries") {
    // [[1/2,1/3],[1/4,1/6]] row-reduces to [[1,2/3],[0,0]]
    auto r = rref(make({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 6)}}));
    REQUIRE(r.reduced.rows.size() == 1);
    CHECK(r.reduced.rows[0].at("c0") == Rational(1));
    CHECK(r.reduced.rows[0].at("c1") == Rational(2, 3));
}

TEST_CASE("kernel of identity and zero matrices") {
    auto id3 = make({{Rational(1), Rational(0), Rational(0)},
                     {Rational(0), Rational(1), Rational(0)},
                     {Rational(0), Rational(0), Rational(1)}});
    CHECK(kernel_basis(id3).empty());

    auto zero22 = make({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}});
    auto k = kernel_basis(zero22);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == vec({Rational(1), Rational(0)}));
    CHECK(k[1] == vec({Rational(0), Rational(1)}));
}

TEST_CASE("kernel of [[1,1]]") {
    auto k = kernel_basis(make({{Rational(1), Rational(1)}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0].at("c0") == Rational(-1));
    CHECK(k[0].at("c1") == Rational(1));
}

TEST_CASE("in_span basics") {
    CHECK(in_span(SparseVector{}, {}).has_value());  // 0 in empty span
    auto w = in_span(vec({Rational(1), Rational(1)}),
                     {vec({Rational(1), Rational(0)}), vec({Rational(0), Rational(1)})});
    REQUIRE(w.has_value());
    CHECK((*w)[0] == Rational(1));
    CHECK((*w)[1] == Rational(1));
    CHECK(!in_span(vec({Rational(0), Rational(1)}), {vec({Rational(1), Rational(1)})}));
}

TEST_CASE("rank-nullity and kernel exactness on random sparse matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 8; ++trial) {
        size_t nrows = 20 + rng() % 31;  // up to 50
        size_t ncols = 20 + rng() % 31;
        SparseMatrix m;
        for (size_t j = 0; j < ncols; ++j)
            m.columns.push_back("c" + std::to_string(100 + j));
        for (size_t i = 0; i < nrows; ++i) {
            SparseVector row;
            size_t nnz = rng() % 6;
            for (size_t t = 0; t < nnz; ++t) {
                long num = static_cast<long>(rng() % 9) - 4;
                long den = 1 + static_cast<long>(rng() % 3);
                row.add(m.columns[rng() % ncols], Rational(num, den));
            }
            m.rows.push_back(row);
        }
        auto kb = kernel_basis(m);
        CHECK(rank(m) + kb.size() == ncols);
        for (const auto& v : kb) {
            SparseVector out;
            for (size_t i = 0; i < m.rows.size(); ++i) {
                Rational dot;
                for (const auto& [k, c] : m.rows[i].entries())
                    dot += c * v.at(k);
                out.add("r" + std::to_string(i), dot);
            }
            CHECK(out.empty());
        }
    }
}

TEST_CASE("in_span witnesses recombine exactly") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<SparseVector> gens;
        size_t ng = 1 + rng() % 5;
        size_t dim = 4 + rng() % 5;
        for (size_t g = 0; g < ng; ++g) {
            SparseVector v;
            for (size_t j = 0; j < dim; ++j)
                if (rng() % 2)
                    v.set("c" + std::to_string(j),
                          Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2)));
            gens.push_back(v);
        }
        // combine a random subset
        SparseVector target;
        for (const auto& g : gens) {
            SparseVector t = g;
            t.scale(Rational(static_cast<long>(rng() % 5) - 2));
            target += t;
        }
        auto w = in_span(target, gens);
        REQUIRE(w.has_value());
        SparseVector recomb;
        for (size_t j = 0; j < gens.size(); ++j) {
            SparseVector t = gens[j];
            t.scale((*w)[j]);
            recomb += t;
        }
        CHECK(recomb == target);
    }
}
