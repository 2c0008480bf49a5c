#include "homchar/graded.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace homchar {

Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
}

Key Word::key() const {
    std::string k;
    k += std::to_string(letters.size());
    for (const auto& l : letters) {
        k += '\x1f';
        k += l;
    }
    return k;
}

std::string Word::str() const {
    if (letters.empty())
        return "[]";
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += "|";
        s += letters[i];
    }
    s += "]";
    return s;
}

Tensor Tensor::term(Word w, Rational c) {
    Tensor t;
    t.add(w, c);
    return t;
}

void Tensor::add(const Word& w, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational Tensor::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

Tensor& Tensor::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

Tensor Tensor::filter_weight(int w) const {
    Tensor r;
    for (const auto& [word, c] : terms_)
        if (word.weight() == w)
            r.add(word, c);
    return r;
}

std::vector<int> Tensor::weights() const {
    std::vector<int> ws;
    for (const auto& [word, c] : terms_)
        if (ws.empty() || ws.back() != word.weight())
            ws.push_back(word.weight());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

SparseVector Tensor::to_sparse() const {
    SparseVector v;
    for (const auto& [w, c] : terms_)
        v.set(w.key(), c);
    return v;
}

std::string Tensor::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out += " + ";
        out += c.str() + "*" + w.str();
        first = false;
    }
    return out;
}

// ---- Koszul engine ----------------------------------------------------------

int koszul_permutation_sign(const std::vector<int>& degrees, const std::vector<size_t>& perm) {
    assert(degrees.size() == perm.size());
    long exponent = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                exponent += static_cast<long>(degrees[perm[i]]) * degrees[perm[j]];
    return (exponent % 2 == 0) ? 1 : -1;
}

int internal_degree(const BialgebraOracle& A, const Word& w) {
    int d = 0;
    for (const auto& l : w.letters)
        d += A.degree(l);
    return d;
}

int total_degree(const BialgebraOracle& A, const Word& w) {
    return internal_degree(A, w) + w.weight();
}

bool homogeneous_internal(const BialgebraOracle& A, const Tensor& t, int* deg) {
    bool first = true;
    int d = 0;
    for (const auto& [w, c] : t.terms()) {
        int dw = internal_degree(A, w);
        if (first) {
            d = dw;
            first = false;
        } else if (dw != d) {
            return false;
        }
    }
    if (deg)
        *deg = d;
    return true;
}

bool homogeneous_total(const BialgebraOracle& A, const Tensor& t, int* deg) {
    bool first = true;
    int d = 0;
    for (const auto& [w, c] : t.terms()) {
        int dw = total_degree(A, w);
        if (first) {
            d = dw;
            first = false;
        } else if (dw != d) {
            return false;
        }
    }
    if (deg)
        *deg = d;
    return true;
}

Tensor sigma_internal(const BialgebraOracle& A, const Tensor& t) {
    Tensor r;
    for (const auto& [w, c] : t.terms())
        r.add(w, internal_degree(A, w) % 2 ? -c : c);
    return r;
}

Tensor sigma_total(const BialgebraOracle& A, const Tensor& t) {
    Tensor r;
    for (const auto& [w, c] : t.terms())
        r.add(w, total_degree(A, w) % 2 ? -c : c);
    return r;
}

Tensor slotwise_product(const BialgebraOracle& A, const Tensor& u, const Tensor& v) {
    Tensor out;
    for (const auto& [uw, uc] : u.terms()) {
        for (const auto& [vw, vc] : v.terms()) {
            if (uw.weight() != vw.weight())
                throw std::invalid_argument("slotwise_product: weight mismatch");
            const int n = uw.weight();
            // sign: v-letter in slot q crosses u-letters in slots p > q
            long expnt = 0;
            int suffix = 0;  // sum of deg(u_p) for p > q, built from the right
            std::vector<int> udeg(n), vdeg(n);
            for (int i = 0; i < n; ++i) {
                udeg[i] = A.degree(uw.letters[i]);
                vdeg[i] = A.degree(vw.letters[i]);
            }
            for (int q = n - 1; q >= 0; --q) {
                expnt += static_cast<long>(vdeg[q]) * suffix;
                suffix += udeg[q];
            }
            Rational sign = (expnt % 2 == 0) ? Rational(1) : Rational(-1);
            // expand slotwise products
            Tensor acc = Tensor::term(Word(), uc * vc * sign);
            for (int i = 0; i < n; ++i) {
                Tensor next;
                Tensor pi = A.product(uw.letters[i], vw.letters[i]);
                for (const auto& [aw, ac] : acc.terms())
                    for (const auto& [pw, pc] : pi.terms())
                        next.add(aw + pw, ac * pc);
                acc = std::move(next);
                if (acc.is_zero())
                    break;
            }
            out += acc;
        }
    }
    return out;
}

Tensor concat(const Tensor& u, const Tensor& v) {
    Tensor out;
    for (const auto& [uw, uc] : u.terms())
        for (const auto& [vw, vc] : v.terms())
            out.add(uw + vw, uc * vc);
    return out;
}

Tensor differential_slotwise(const BialgebraOracle& A, const Tensor& t) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
        int prefix = 0;
        for (int j = 0; j < w.weight(); ++j) {
            Tensor dj = A.differential(w.letters[j]);
            if (!dj.is_zero()) {
                Rational sign = (prefix % 2 == 0) ? c : -c;
                for (const auto& [dw, dc] : dj.terms()) {
                    Word nw;
                    nw.letters.assign(w.letters.begin(), w.letters.begin() + j);
                    nw.letters.push_back(dw.letters[0]);
                    nw.letters.insert(nw.letters.end(), w.letters.begin() + j + 1,
                                      w.letters.end());
                    out.add(nw, sign * dc);
                }
            }
            prefix += A.degree(w.letters[j]);
        }
    }
    return out;
}

Tensor iterated_coproduct(const BialgebraOracle& A, const Tensor& t, int r) {
    if (r < 0)
        throw std::invalid_argument("iterated_coproduct: negative iteration count");
    Tensor cur = t;
    for (int step = 0; step < r; ++step) {
        // apply Delta to the first slot (left-iterated); coassociativity makes
        // any parenthesization agree, which the tests verify.
        Tensor next;
        for (const auto& [w, c] : cur.terms()) {
            Tensor d0 = A.coproduct(w.letters[0]);
            for (const auto& [dw, dc] : d0.terms()) {
                Word nw = dw;
                nw.letters.insert(nw.letters.end(), w.letters.begin() + 1, w.letters.end());
                next.add(nw, c * dc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

Tensor shift_signed(const BialgebraOracle& A, const Tensor& t, bool left) {
    Tensor r;
    for (const auto& [w, c] : t.terms()) {
        long expnt = 0;
        const int n = w.weight();
        for (int l = 0; l < n; ++l) {
            int d = A.degree(w.letters[l]);
            expnt += static_cast<long>(left ? (n - 1 - l) : l) * d;
        }
        r.add(w, expnt % 2 ? -c : c);
    }
    return r;
}

}  // namespace

Tensor shift_left(const BialgebraOracle& A, const Tensor& t) { return shift_signed(A, t, true); }
Tensor unshift_left(const BialgebraOracle& A, const Tensor& t) { return shift_signed(A, t, true); }
Tensor shift_right(const BialgebraOracle& A, const Tensor& t) { return shift_signed(A, t, false); }
Tensor unshift_right(const BialgebraOracle& A, const Tensor& t) { return shift_signed(A, t, false); }

Tensor apply_face(const BialgebraOracle& A, const Tensor& t, int i) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
        const int n = w.weight();
        if (i < 0 || i > n + 1)
            throw std::out_of_range("apply_face: index out of range");
        if (i == 0) {
            out += c * concat(A.unit(), Tensor::term(w));
        } else if (i == n + 1) {
            out += c * concat(Tensor::term(w), A.unit());
        } else {
            Tensor d = A.coproduct(w.letters[i - 1]);
            for (const auto& [dw, dc] : d.terms()) {
                Word nw;
                nw.letters.assign(w.letters.begin(), w.letters.begin() + (i - 1));
                nw.letters.insert(nw.letters.end(), dw.letters.begin(), dw.letters.end());
                nw.letters.insert(nw.letters.end(), w.letters.begin() + i, w.letters.end());
                out.add(nw, c * dc);
            }
        }
    }
    return out;
}

Tensor apply_degeneracy(const BialgebraOracle& A, const Tensor& t, int i) {
    Tensor out;
    for (const auto& [w, c] : t.terms()) {
        const int n = w.weight();
        if (n < 1 || i < 0 || i > n - 1)
            throw std::out_of_range("apply_degeneracy: index out of range");
        Rational e = A.counit(w.letters[i]);
        if (e.is_zero())
            continue;
        Word nw;
        nw.letters.assign(w.letters.begin(), w.letters.begin() + i);
        nw.letters.insert(nw.letters.end(), w.letters.begin() + i + 1, w.letters.end());
        out.add(nw, c * e);
    }
    return out;
}

// ---- Axiom checkers ----------------------------------------------------------

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string AxiomReport::str() const {
    std::string s;
    for (const auto& c : checks) {
        s += c.id;
        s += c.pass ? ": pass" : ": FAIL";
        if (!c.pass && !c.witness.empty()) {
            s += " [";
            s += c.witness;
            s += "]";
        }
        s += "\n";
    }
    return s;
}

namespace {

void record(AxiomReport& rep, const std::string& id, bool ok, const std::string& witness) {
    AxiomCheck c;
    c.id = id;
    c.pass = ok;
    if (!ok)
        c.witness = witness;
    rep.checks.push_back(std::move(c));
}

Tensor mul11(const BialgebraOracle& A, const Tensor& x, const Tensor& y) {
    // product of two weight-1 elements
    Tensor out;
    for (const auto& [xw, xc] : x.terms())
        for (const auto& [yw, yc] : y.terms()) {
            Tensor p = A.product(xw.letters[0], yw.letters[0]);
            p.scale(xc * yc);
            out += p;
        }
    return out;
}

}  // namespace

AxiomReport check_bialgebra_axioms(const BialgebraOracle& A, const Window& win) {
    AxiomReport rep;
    const std::vector<std::string> basis = A.basis(win);
    const Tensor unit = A.unit();

    // degree consistency of structure maps
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            int da = A.degree(a);
            for (const auto& [w, c] : A.differential(a).terms())
                if (internal_degree(A, w) != da + 1) {
                    ok = false;
                    wit = "d(" + a + ") degree";
                    break;
                }
            for (const auto& [w, c] : A.coproduct(a).terms())
                if (internal_degree(A, w) != da) {
                    ok = false;
                    wit = "coproduct(" + a + ") degree";
                    break;
                }
            if (!A.counit(a).is_zero() && da != 0) {
                ok = false;
                wit = "counit nonzero off degree 0 at " + a;
            }
            if (!ok)
                break;
        }
        record(rep, "degrees", ok, wit);
    }
    // associativity (a*b)*c = a*(b*c)
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                Tensor ab = A.product(a, b);
                for (const auto& c : basis) {
                    Tensor bc = A.product(b, c);
                    Tensor lhs = mul11(A, ab, Tensor::term(Word::single(c)));
                    Tensor rhs = mul11(A, Tensor::term(Word::single(a)), bc);
                    if (!(lhs == rhs)) {
                        ok = false;
                        wit = a + "," + b + "," + c;
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        record(rep, "mul-associative", ok, wit);
    }
    // unitality
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor x = Tensor::term(Word::single(a));
            if (!(mul11(A, unit, x) == x) || !(mul11(A, x, unit) == x)) {
                ok = false;
                wit = a;
                break;
            }
        }
        record(rep, "mul-unital", ok, wit);
    }
    // coassociativity
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor x = Tensor::term(Word::single(a));
            if (!(iterated_coproduct(A, x, 2) == [&] {
                    // right-iterated: (id (x) Delta) Delta
                    Tensor out;
                    for (const auto& [w, c] : A.coproduct(a).terms()) {
                        Tensor d2 = A.coproduct(w.letters[1]);
                        for (const auto& [dw, dc] : d2.terms()) {
                            Word nw;
                            nw.letters = {w.letters[0], dw.letters[0], dw.letters[1]};
                            out.add(nw, c * dc);
                        }
                    }
                    return out;
                }())) {
                ok = false;
                wit = a;
                break;
            }
        }
        record(rep, "comul-coassociative", ok, wit);
    }
    // counit law: (eps (x) id) Delta = id = (id (x) eps) Delta
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor x = Tensor::term(Word::single(a));
            Tensor d = A.coproduct(a);
            if (!(apply_degeneracy(A, d, 0) == x) || !(apply_degeneracy(A, d, 1) == x)) {
                ok = false;
                wit = a;
                break;
            }
        }
        record(rep, "counit-law", ok, wit);
    }
    // Delta multiplicative: Delta(ab) = Delta(a)Delta(b) in A (x) A
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor da = A.coproduct(a);
            for (const auto& b : basis) {
                Tensor lhs;
                for (const auto& [pw, pc] : A.product(a, b).terms()) {
                    Tensor t = A.coproduct(pw.letters[0]);
                    t.scale(pc);
                    lhs += t;
                }
                Tensor rhs = slotwise_product(A, da, A.coproduct(b));
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = a + "," + b;
                    break;
                }
            }
            if (!ok)
                break;
        }
        record(rep, "comul-multiplicative", ok, wit);
    }
    // Delta(1) = 1 (x) 1, eps(1) = 1, eps multiplicative
    {
        bool ok = true;
        std::string wit;
        Tensor d1;
        Rational e1;
        for (const auto& [w, c] : unit.terms()) {
            Tensor t = A.coproduct(w.letters[0]);
            t.scale(c);
            d1 += t;
            e1 += c * A.counit(w.letters[0]);
        }
        if (!(d1 == concat(unit, unit))) {
            ok = false;
            wit = "coproduct(unit)";
        }
        if (ok && !e1.is_one()) {
            ok = false;
            wit = "counit(unit)";
        }
        if (ok) {
            for (const auto& a : basis) {
                for (const auto& b : basis) {
                    Rational lhs;
                    for (const auto& [pw, pc] : A.product(a, b).terms())
                        lhs += pc * A.counit(pw.letters[0]);
                    if (!(lhs == A.counit(a) * A.counit(b))) {
                        ok = false;
                        wit = a + "," + b;
                        break;
                    }
                }
                if (!ok)
                    break;
            }
        }
        record(rep, "counit-multiplicative", ok, wit);
    }
    // d^2 = 0
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor d = A.differential(a);
            Tensor dd = differential_slotwise(A, d);
            if (!dd.is_zero()) {
                ok = false;
                wit = a;
                break;
            }
        }
        record(rep, "d-squared", ok, wit);
    }
    // Leibniz: d(ab) = d(a)b + (-1)^{|a|} a d(b)
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor da = A.differential(a);
            Rational sa = A.degree(a) % 2 ? Rational(-1) : Rational(1);
            for (const auto& b : basis) {
                Tensor lhs;
                for (const auto& [pw, pc] : A.product(a, b).terms()) {
                    Tensor t = A.differential(pw.letters[0]);
                    t.scale(pc);
                    lhs += t;
                }
                Tensor rhs = mul11(A, da, Tensor::term(Word::single(b)));
                Tensor t2 = mul11(A, Tensor::term(Word::single(a)), A.differential(b));
                t2.scale(sa);
                rhs += t2;
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = a + "," + b;
                    break;
                }
            }
            if (!ok)
                break;
        }
        record(rep, "leibniz", ok, wit);
    }
    // co-Leibniz: Delta(d(a)) = (d (x) id + sigma (x) d) Delta(a)
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            Tensor lhs;
            for (const auto& [w, c] : A.differential(a).terms()) {
                Tensor t = A.coproduct(w.letters[0]);
                t.scale(c);
                lhs += t;
            }
            Tensor rhs = differential_slotwise(A, A.coproduct(a));
            if (!(lhs == rhs)) {
                ok = false;
                wit = a;
                break;
            }
        }
        record(rep, "co-leibniz", ok, wit);
    }
    // d(unit) = 0 and counit chain map (eps d = 0)
    {
        bool ok = true;
        std::string wit;
        Tensor du;
        for (const auto& [w, c] : unit.terms()) {
            Tensor t = A.differential(w.letters[0]);
            t.scale(c);
            du += t;
        }
        if (!du.is_zero()) {
            ok = false;
            wit = "d(unit)";
        }
        if (ok) {
            for (const auto& a : basis) {
                Rational e;
                for (const auto& [w, c] : A.differential(a).terms())
                    e += c * A.counit(w.letters[0]);
                if (!e.is_zero()) {
                    ok = false;
                    wit = a;
                    break;
                }
            }
        }
        record(rep, "unit-counit-chain", ok, wit);
    }
    return rep;
}

AxiomReport simplicial_identities_check(const BialgebraOracle& A, int n_max, const Window& win) {
    AxiomReport rep;
    const std::vector<std::string> basis = A.basis(win);

    // sample words per level: single letters padded with further letters,
    // exhaustive over pairs when small
    auto words_at = [&](int n) {
        std::vector<Tensor> out;
        if (n == 0) {
            out.push_back(Tensor::term(Word(), Rational(1)));
            return out;
        }
        size_t take = basis.size() > 6 ? 6 : basis.size();
        for (size_t i = 0; i < take; ++i) {
            Word w;
            for (int j = 0; j < n; ++j)
                w.letters.push_back(basis[(i + static_cast<size_t>(j)) % basis.size()]);
            out.push_back(Tensor::term(w));
        }
        return out;
    };

    bool faces_ok = true, deg_ok = true, mixed_ok = true;
    std::string wit_f, wit_d, wit_m;
    for (int n = 0; n <= n_max && (faces_ok || deg_ok || mixed_ok); ++n) {
        for (const Tensor& x : words_at(n)) {
            // cofaces: d^j d^i = d^i d^{j-1}, i < j
            for (int i = 0; i <= n + 1 && faces_ok; ++i)
                for (int j = i + 1; j <= n + 2 && faces_ok; ++j) {
                    Tensor lhs = apply_face(A, apply_face(A, x, i), j);
                    Tensor rhs = apply_face(A, apply_face(A, x, j - 1), i);
                    if (!(lhs == rhs)) {
                        faces_ok = false;
                        wit_f = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " on " + x.str();
                    }
                }
            // codegeneracies: s^j s^i = s^i s^{j+1}, i <= j (on weight >= 2)
            if (n >= 2) {
                for (int i = 0; i <= n - 2 && deg_ok; ++i)
                    for (int j = i; j <= n - 2 && deg_ok; ++j) {
                        Tensor lhs = apply_degeneracy(A, apply_degeneracy(A, x, j + 1), i);
                        Tensor rhs = apply_degeneracy(A, apply_degeneracy(A, x, i), j);
                        if (!(lhs == rhs)) {
                            deg_ok = false;
                            wit_d = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                    " j=" + std::to_string(j);
                        }
                    }
            }
            // mixed: s^j d^i relations
            for (int i = 0; i <= n + 1 && mixed_ok; ++i) {
                Tensor fx = apply_face(A, x, i);
                for (int j = 0; j <= n && mixed_ok; ++j) {
                    Tensor lhs = apply_degeneracy(A, fx, j);
                    Tensor rhs;
                    if (i < j)
                        rhs = apply_face(A, apply_degeneracy(A, x, j - 1), i);
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = apply_face(A, apply_degeneracy(A, x, j), i - 1);
                    if (!(lhs == rhs)) {
                        mixed_ok = false;
                        wit_m = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " on " + x.str();
                    }
                }
            }
        }
    }
    record(rep, "cosimplicial-faces", faces_ok, wit_f);
    record(rep, "cosimplicial-degeneracies", deg_ok, wit_d);
    record(rep, "cosimplicial-mixed", mixed_ok, wit_m);
    return rep;
}

}  // namespace homchar
