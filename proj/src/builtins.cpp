#include "homchar/builtins.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace homchar {

// ---- FiniteGroupFunctionHopf -------------------------------------------------

FiniteGroupFunctionHopf::FiniteGroupFunctionHopf(std::vector<std::vector<int>> table,
                                                 std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0)
        throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("multiplication table entry out of range");
    }
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int g = 0; g < n; ++g)
            if (table_[e][g] != g || table_[g][e] != g)
                is_id = false;
        if (is_id) {
            id = e;
            break;
        }
    }
    if (id < 0)
        throw std::invalid_argument("multiplication table has no identity");
    identity_ = id;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("multiplication table not associative");
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_)
                has_inverse = true;
        if (!has_inverse)
            throw std::invalid_argument("multiplication table has a non-invertible element");
    }
}

std::vector<std::vector<int>> FiniteGroupFunctionHopf::cyclic_table(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    return t;
}

std::vector<std::vector<int>> FiniteGroupFunctionHopf::s3_table() {
    // elements: permutations of {0,1,2} in lexicographic one-line order:
    // 012, 021, 102, 120, 201, 210
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
                return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int i = 0; i < 3; ++i)
                comp[i] = perms[a][perms[b][i]];  // (a.b)(i) = a(b(i))
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(comp);
        }
    return t;
}

int FiniteGroupFunctionHopf::elem(const std::string& label) const {
    if (label.size() < 2 || label[0] != 'e')
        throw std::invalid_argument("unknown basis label: " + label);
    int g = std::stoi(label.substr(1));
    if (g < 0 || g >= order())
        throw std::invalid_argument("unknown basis label: " + label);
    return g;
}

std::vector<std::string> FiniteGroupFunctionHopf::basis(const Window&) const {
    std::vector<std::string> out;
    for (int g = 0; g < order(); ++g)
        out.push_back("e" + std::to_string(g));
    return out;
}

Tensor FiniteGroupFunctionHopf::product(const std::string& a, const std::string& b) const {
    if (elem(a) != elem(b))
        return {};
    return Tensor::term(Word::single(a));
}

Tensor FiniteGroupFunctionHopf::coproduct(const std::string& a) const {
    const int g = elem(a);
    Tensor out;
    for (int u = 0; u < order(); ++u)
        for (int v = 0; v < order(); ++v)
            if (table_[static_cast<size_t>(u)][static_cast<size_t>(v)] == g)
                out.add(Word({"e" + std::to_string(u), "e" + std::to_string(v)}), Rational(1));
    return out;
}

Rational FiniteGroupFunctionHopf::counit(const std::string& a) const {
    return elem(a) == identity_ ? Rational(1) : Rational(0);
}

Tensor FiniteGroupFunctionHopf::unit() const {
    Tensor out;
    for (int g = 0; g < order(); ++g)
        out.add(Word::single("e" + std::to_string(g)), Rational(1));
    return out;
}

std::vector<Tensor> FiniteGroupFunctionHopf::grouplike_stock(const Window&) const {
    // Rational-valued characters of the group. The unit always qualifies; for
    // even cyclic groups the sign character does too. General characters need
    // roots of unity, which Q lacks, so the stock is deliberately modest.
    std::vector<Tensor> out;
    out.push_back(unit());
    const int n = order();
    bool cyclic_structure = true;
    for (int a = 0; a < n && cyclic_structure; ++a)
        for (int b = 0; b < n && cyclic_structure; ++b)
            if (table_[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
                table_[static_cast<size_t>(b)][static_cast<size_t>(a)])
                cyclic_structure = false;
    if (cyclic_structure && n % 2 == 0 && identity_ == 0) {
        // works for the canonical cyclic tables produced above
        bool canonical = table_ == cyclic_table(n);
        if (canonical) {
            Tensor chi;
            for (int g = 0; g < n; ++g)
                chi.add(Word::single("e" + std::to_string(g)), Rational(g % 2 ? -1 : 1));
            out.push_back(chi);
        }
    }
    return out;
}

// ---- ExteriorPrimitiveHopf ----------------------------------------------------

Tensor ExteriorPrimitiveHopf::product(const std::string& a, const std::string& b) const {
    if (a == "1")
        return Tensor::term(Word::single(b));
    if (b == "1")
        return Tensor::term(Word::single(a));
    return {};  // t*t = 0
}

Tensor ExteriorPrimitiveHopf::coproduct(const std::string& a) const {
    Tensor out;
    if (a == "1") {
        out.add(Word({"1", "1"}), Rational(1));
    } else {
        out.add(Word({"t", "1"}), Rational(1));
        out.add(Word({"1", "t"}), Rational(1));
    }
    return out;
}

Rational ExteriorPrimitiveHopf::counit(const std::string& a) const {
    return a == "1" ? Rational(1) : Rational(0);
}

std::vector<Tensor> ExteriorPrimitiveHopf::grouplike_stock(const Window&) const {
    return {unit()};
}

// ---- UpperTriangularHopf -----------------------------------------------------

std::string UpperTriangularHopf::label(int a, int b, int c) {
    return "x" + std::to_string(a) + "y" + std::to_string(b) + "z" + std::to_string(c);
}

bool UpperTriangularHopf::parse_label(const std::string& l, int* a, int* b, int* c) {
    size_t ypos = l.find('y', 1);
    size_t zpos = l.find('z', ypos == std::string::npos ? 1 : ypos + 1);
    if (l.empty() || l[0] != 'x' || ypos == std::string::npos || zpos == std::string::npos)
        return false;
    try {
        size_t used = 0;
        std::string sa = l.substr(1, ypos - 1);
        std::string sb = l.substr(ypos + 1, zpos - ypos - 1);
        std::string sc = l.substr(zpos + 1);
        *a = std::stoi(sa, &used);
        if (used != sa.size())
            return false;
        *b = std::stoi(sb, &used);
        if (used != sb.size())
            return false;
        *c = std::stoi(sc, &used);
        if (used != sc.size())
            return false;
    } catch (...) {
        return false;
    }
    return *c >= 0;
}

std::vector<std::string> UpperTriangularHopf::basis(const Window& w) const {
    std::vector<std::string> out;
    for (int a = -w.exp_bound; a <= w.exp_bound; ++a)
        for (int b = -w.exp_bound; b <= w.exp_bound; ++b)
            for (int c = 0; c <= w.z_bound; ++c)
                out.push_back(label(a, b, c));
    return out;
}

Tensor UpperTriangularHopf::product(const std::string& la, const std::string& lb) const {
    int a1, b1, c1, a2, b2, c2;
    if (!parse_label(la, &a1, &b1, &c1) || !parse_label(lb, &a2, &b2, &c2))
        throw std::invalid_argument("bad label");
    return Tensor::term(Word::single(label(a1 + a2, b1 + b2, c1 + c2)));
}

namespace {

// binomial coefficients, cached per row
const std::vector<Rational>& binomial_row(int c) {
    static std::map<int, std::vector<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it != cache.end())
        return it->second;
    std::vector<Rational> row(static_cast<size_t>(c) + 1);
    BigInt v = 1;
    for (int j = 0; j <= c; ++j) {
        row[static_cast<size_t>(j)] = Rational(v);
        v = v * (c - j) / (j + 1);
    }
    return cache.emplace(c, std::move(row)).first->second;
}

}  // namespace

Tensor UpperTriangularHopf::coproduct(const std::string& l) const {
    int a, b, c;
    if (!parse_label(l, &a, &b, &c))
        throw std::invalid_argument("bad label");
    // Delta(x^a y^b z^c) = (x^a(x)x^a)(y^b(x)y^b)(x(x)z + z(x)y)^c expanded by
    // the binomial theorem in the commutative algebra A (x) A.
    Tensor out;
    const auto& binom = binomial_row(c);
    for (int j = 0; j <= c; ++j)
        out.add(Word({label(a + j, b, c - j), label(a, b + c - j, j)}), binom[static_cast<size_t>(j)]);
    return out;
}

Rational UpperTriangularHopf::counit(const std::string& l) const {
    int a, b, c;
    if (!parse_label(l, &a, &b, &c))
        throw std::invalid_argument("bad label");
    return c == 0 ? Rational(1) : Rational(0);
}

std::vector<Tensor> UpperTriangularHopf::grouplike_stock(const Window& w) const {
    std::vector<Tensor> out;
    for (int a = -w.exp_bound; a <= w.exp_bound; ++a)
        for (int b = -w.exp_bound; b <= w.exp_bound; ++b)
            out.push_back(Tensor::term(Word::single(label(a, b, 0))));
    return out;
}

}  // namespace homchar
