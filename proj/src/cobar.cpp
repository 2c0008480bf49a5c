#include "homchar/cobar.hpp"

#include <stdexcept>

namespace homchar {

CobarElement::CobarElement(OraclePtr A, int truncation, Tensor value)
    : A_(std::move(A)), N_(truncation) {
    for (const auto& [w, c] : value.terms())
        if (w.weight() <= N_)
            val_.add(w, c);
}

CobarElement CobarElement::scalar(OraclePtr A, int truncation, const Rational& c) {
    CobarElement e(std::move(A), truncation);
    e.val_.add(Word(), c);
    return e;
}

CobarElement CobarElement::letter(OraclePtr A, int truncation, const Tensor& algebra_elt) {
    CobarElement e(std::move(A), truncation);
    for (const auto& [w, c] : algebra_elt.terms()) {
        if (w.weight() != 1)
            throw std::invalid_argument("letter: expected a weight-1 tensor");
        if (truncation >= 1)
            e.val_.add(w, c);
    }
    return e;
}

void CobarElement::add(const Word& w, const Rational& c) {
    if (w.weight() <= N_)
        val_.add(w, c);
}

CobarElement& CobarElement::operator+=(const CobarElement& o) {
    if (N_ != o.N_)
        throw std::invalid_argument("truncation mismatch");
    val_ += o.val_;
    return *this;
}

CobarElement& CobarElement::operator-=(const CobarElement& o) {
    if (N_ != o.N_)
        throw std::invalid_argument("truncation mismatch");
    val_ -= o.val_;
    return *this;
}

CobarElement& CobarElement::scale(const Rational& c) {
    val_.scale(c);
    return *this;
}

CobarElement CobarElement::sigma() const {
    CobarElement r(A_, N_);
    r.val_ = sigma_total(*A_, val_);
    return r;
}

bool CobarElement::homogeneous(int* total_deg) const {
    return homogeneous_total(*A_, val_, total_deg);
}

bool CobarElement::is_odd() const {
    for (const auto& [w, c] : val_.terms())
        if (total_degree(*A_, w) % 2 == 0)
            return false;
    return true;
}

bool CobarElement::is_even() const {
    for (const auto& [w, c] : val_.terms())
        if (total_degree(*A_, w) % 2 != 0)
            return false;
    return true;
}

CobarElement CobarElement::truncated(int M) const {
    CobarElement r(A_, M);
    for (const auto& [w, c] : val_.terms())
        if (w.weight() <= M)
            r.val_.add(w, c);
    return r;
}

std::string CobarElement::str() const {
    return val_.str();
}

namespace {

// d on a single shifted letter: -s(d_A x) - sum (-1)^{|x_(1)|} s x_(1) (x) s x_(2)
Tensor generator_diff(const BialgebraOracle& A, const std::string& letter) {
    Tensor out;
    Tensor dx = A.differential(letter);
    dx.scale(Rational(-1));
    out += dx;
    for (const auto& [w, c] : A.coproduct(letter).terms()) {
        int d1 = A.degree(w.letters[0]);
        out.add(w, (d1 % 2 == 0) ? -c : c);
    }
    return out;
}

}  // namespace

CobarElement cobar_diff(const CobarElement& x) {
    const auto& A = *x.oracle();
    CobarElement out(x.oracle(), x.truncation());
    for (const auto& [w, c] : x.value().terms()) {
        int prefix = 0;  // total degree of letters left of the current slot
        for (int j = 0; j < w.weight(); ++j) {
            Rational sign = (prefix % 2 == 0) ? c : -c;
            for (const auto& [gw, gc] : generator_diff(A, w.letters[j]).terms()) {
                Word nw;
                nw.letters.assign(w.letters.begin(), w.letters.begin() + j);
                nw.letters.insert(nw.letters.end(), gw.letters.begin(), gw.letters.end());
                nw.letters.insert(nw.letters.end(), w.letters.begin() + j + 1, w.letters.end());
                out.add(nw, sign * gc);
            }
            prefix += A.degree(w.letters[j]) + 1;
        }
    }
    return out;
}

CobarElement cobar_coaug_diff(const CobarElement& x) {
    CobarElement unit_letter = CobarElement::letter(x.oracle(), x.truncation(), x.oracle()->unit());
    return twisted_diff(x, unit_letter, unit_letter);
}

CobarElement cobar_mul(const CobarElement& x, const CobarElement& y) {
    if (x.truncation() != y.truncation())
        throw std::invalid_argument("truncation mismatch");
    CobarElement out(x.oracle(), x.truncation());
    for (const auto& [xw, xc] : x.value().terms()) {
        for (const auto& [yw, yc] : y.value().terms()) {
            if (xw.weight() + yw.weight() > x.truncation())
                continue;
            out.add(xw + yw, xc * yc);
        }
    }
    return out;
}

CobarElement twisted_diff(const CobarElement& x, const CobarElement& left_twist,
                          const CobarElement& right_twist) {
    CobarElement out = cobar_diff(x);
    out += cobar_mul(left_twist, x);
    out -= cobar_mul(x.sigma(), right_twist);
    return out;
}

std::optional<CobarElement> cobar_inverse(const CobarElement& x) {
    Rational s = x.scalar_part();
    if (s.is_zero())
        return std::nullopt;
    // x = s(1 - u) with u of weight >= 1; x^{-1} = s^{-1} sum u^k
    CobarElement u = x;
    u.scale(-s.inverse());
    u += CobarElement::scalar(x.oracle(), x.truncation(), Rational(1));  // u = 1 - x/s
    CobarElement acc = CobarElement::scalar(x.oracle(), x.truncation(), Rational(1));
    CobarElement pow = u;
    for (int k = 1; k <= x.truncation() && !pow.is_zero(); ++k) {
        acc += pow;
        pow = cobar_mul(pow, u);
    }
    acc.scale(s.inverse());
    return acc;
}

}  // namespace homchar
