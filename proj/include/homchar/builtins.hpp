#pragma once

#include "homchar/graded.hpp"

#include <vector>

namespace homchar {

// Delta-function Hopf algebra of a finite group given by its multiplication
// table: e_g * e_h = [g=h] e_g, Delta(e_g) = sum_{uv=g} e_u (x) e_v,
// eps(e_g) = [g = identity], unit = sum_g e_g, d = 0, all degrees 0.
class FiniteGroupFunctionHopf : public BialgebraOracle {
public:
    // table[g][h] = g*h; validated to be a group (associativity, identity,
    // inverses). Labels are e0..e{n-1}.
    explicit FiniteGroupFunctionHopf(std::vector<std::vector<int>> table,
                                     std::string name = "group-functions");

    static std::vector<std::vector<int>> cyclic_table(int n);
    static std::vector<std::vector<int>> s3_table();

    std::string name() const override { return name_; }
    bool is_finite() const override { return true; }
    std::vector<std::string> basis(const Window&) const override;
    int degree(const std::string&) const override { return 0; }
    Tensor product(const std::string& a, const std::string& b) const override;
    Tensor coproduct(const std::string& a) const override;
    Rational counit(const std::string& a) const override;
    Tensor differential(const std::string&) const override { return {}; }
    Tensor unit() const override;
    std::vector<Tensor> grouplike_stock(const Window&) const override;

    int order() const { return static_cast<int>(table_.size()); }

private:
    std::vector<std::vector<int>> table_;
    std::string name_;
    int identity_ = 0;
    int elem(const std::string& label) const;
};

// Exterior algebra on one primitive generator t of degree 1: t^2 = 0,
// Delta(t) = t (x) 1 + 1 (x) t, eps(t) = 0, d = 0.
class ExteriorPrimitiveHopf : public BialgebraOracle {
public:
    std::string name() const override { return "exterior-primitive"; }
    bool is_finite() const override { return true; }
    std::vector<std::string> basis(const Window&) const override { return {"1", "t"}; }
    int degree(const std::string& l) const override { return l == "t" ? 1 : 0; }
    Tensor product(const std::string& a, const std::string& b) const override;
    Tensor coproduct(const std::string& a) const override;
    Rational counit(const std::string& a) const override;
    Tensor differential(const std::string&) const override { return {}; }
    Tensor unit() const override { return Tensor::term(Word::single("1")); }
    std::vector<Tensor> grouplike_stock(const Window&) const override;
};

// Regular functions on invertible upper triangular 2x2 matrices: Laurent
// monomials x^a y^b z^c with a,b in Z and c >= 0, all in degree 0, d = 0.
// Delta(x) = x(x)x, Delta(y) = y(x)y, Delta(z) = x(x)z + z(x)y.
class UpperTriangularHopf : public BialgebraOracle {
public:
    static std::string label(int a, int b, int c);
    static bool parse_label(const std::string& l, int* a, int* b, int* c);

    std::string name() const override { return "upper-triangular"; }
    bool is_finite() const override { return false; }
    std::vector<std::string> basis(const Window& w) const override;
    int degree(const std::string&) const override { return 0; }
    Tensor product(const std::string& a, const std::string& b) const override;
    Tensor coproduct(const std::string& a) const override;
    Rational counit(const std::string& a) const override;
    Tensor differential(const std::string&) const override { return {}; }
    Tensor unit() const override { return Tensor::term(Word::single(label(0, 0, 0))); }
    std::vector<Tensor> grouplike_stock(const Window& w) const override;
};

}  // namespace homchar
