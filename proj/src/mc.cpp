#include "homchar/mc.hpp"

#include <stdexcept>

namespace homchar {

MaurerCartanElement MaurerCartanElement::zero(OraclePtr A, int N) {
    MaurerCartanElement m;
    m.value = CobarElement(std::move(A), N);
    return m;
}

MaurerCartanElement MaurerCartanElement::from_grouplike(OraclePtr A, int N, const Tensor& g) {
    // verify d(g) = 0, Delta(g) = g (x) g, eps(g) = 1
    Tensor dg, deltag;
    Rational eps;
    for (const auto& [w, c] : g.terms()) {
        if (w.weight() != 1)
            throw std::invalid_argument("grouplike candidate must be a weight-1 tensor");
        Tensor t = A->differential(w.letters[0]);
        t.scale(c);
        dg += t;
        Tensor d = A->coproduct(w.letters[0]);
        d.scale(c);
        deltag += d;
        eps += c * A->counit(w.letters[0]);
    }
    if (!dg.is_zero())
        throw std::invalid_argument("not grouplike: d(g) != 0");
    if (!(deltag == concat(g, g)))
        throw std::invalid_argument("not grouplike: coproduct(g) != g(x)g");
    if (!eps.is_one())
        throw std::invalid_argument("not grouplike: counit(g) != 1");
    MaurerCartanElement m;
    m.value = CobarElement::letter(std::move(A), N, g);
    m.first_component_evidence = Evidence::kGrouplike;
    return m;
}

std::string McReport::str() const {
    std::string s = is_mc ? "mc: yes" : "mc: no";
    for (const auto& [w, r] : residual)
        s += "\n  weight " + std::to_string(w) + ": " + r.str();
    s += routes_agree ? "\nindexed route: agrees" : "\nindexed route: MISMATCH at weight " +
                                                        std::to_string(first_route_mismatch);
    return s;
}

Tensor mc_residual_indexed(const BialgebraOracle& A,
                           const std::map<int, Tensor>& comps, int n) {
    auto comp = [&](int i) -> Tensor {
        auto it = comps.find(i);
        return it == comps.end() ? Tensor() : it->second;
    };
    Tensor r;
    // (-1)^n d_slot(a_n)
    Tensor d = differential_slotwise(A, comp(n));
    if (n % 2)
        d.scale(Rational(-1));
    r += d;
    // sum_j (-1)^j (id^{j-1} (x) Delta (x) id^{n-1-j})(a_{n-1})
    const Tensor& prev = comp(n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        Tensor t = apply_face(A, prev, j);
        if (j % 2)
            t.scale(Rational(-1));
        r += t;
    }
    // sum_k (-1)^{nk} a_{n-k} (x) a_k
    for (int k = 1; k <= n - 1; ++k) {
        Tensor t = concat(comp(n - k), comp(k));
        if ((n * k) % 2)
            t.scale(Rational(-1));
        r += t;
    }
    return r;
}

McReport mc_check(const MaurerCartanElement& a) {
    const auto& A = *a.value.oracle();
    const int N = a.value.truncation();
    McReport rep;

    CobarElement intrinsic = cobar_diff(a.value) + cobar_mul(a.value, a.value);
    rep.is_mc = intrinsic.is_zero();
    for (int n = 1; n <= N; ++n) {
        Tensor rn = intrinsic.component(n);
        if (!rn.is_zero())
            rep.residual[n] = rn;
    }

    // indexed route on unshifted components
    std::map<int, Tensor> comps;
    for (int i = 1; i <= N; ++i) {
        Tensor ci = a.value.component(i);
        if (!ci.is_zero())
            comps[i] = unshift_left(A, ci);
    }
    rep.routes_agree = true;
    for (int n = 1; n <= N; ++n) {
        Tensor indexed = shift_left(A, mc_residual_indexed(A, comps, n));
        if (!(indexed == intrinsic.component(n))) {
            rep.routes_agree = false;
            rep.first_route_mismatch = n;
            break;
        }
    }
    return rep;
}

MaurerCartanElement gauge_act(const CobarElement& f, const MaurerCartanElement& a) {
    if (f.scalar_part().is_zero())
        throw std::invalid_argument("gauge element has zero weight-0 component");
    if (!f.is_even())
        throw std::invalid_argument("gauge element must be even");
    auto finv = cobar_inverse(f);
    CobarElement gauged = cobar_mul(cobar_mul(f, a.value), *finv) +
                          cobar_mul(f, cobar_diff(*finv));
    MaurerCartanElement out;
    out.value = gauged;
    out.first_component_evidence = a.first_component_evidence;
    return out;
}

GaugeWitness gauge_isomorphism_witness(const CobarElement& f, const MaurerCartanElement& a) {
    GaugeWitness w;
    w.gauged = gauge_act(f, a);
    w.morphism = f;
    w.inverse = *cobar_inverse(f);
    CobarElement one = CobarElement::scalar(f.oracle(), f.truncation(), Rational(1));
    w.invertible = cobar_mul(f, w.inverse) == one && cobar_mul(w.inverse, f) == one;
    // f in Hom(f.a, a): target a twists on the left, source f.a on the right
    w.closed = twisted_diff(f, a.value, w.gauged.value).is_zero();
    return w;
}

std::string CdgReport::str() const {
    std::string s;
    s += curve_holds ? "compatibility with differentials: pass" : "compatibility: FAIL";
    s += curve2_holds ? "; curvature change: pass" : "; curvature change: FAIL";
    if (!witness.empty())
        s += " [" + witness + "]";
    return s;
}

CobarElement cdg_change_element(const MaurerCartanElement& a, const MaurerCartanElement& b) {
    return a.value - b.value;
}

CdgReport cdg_morphism_check(const CdgMorphismData& data,
                             const std::vector<CobarElement>& sample) {
    CdgReport rep;
    const CobarElement& a = data.source_twist.value;
    const CobarElement& b = data.target_twist.value;
    const CobarElement& c = data.change;

    rep.curve_holds = true;
    for (const auto& x : sample) {
        CobarElement lhs = twisted_diff(x, a, a);
        CobarElement rhs = twisted_diff(x, b, b) + cobar_mul(c, x) -
                           cobar_mul(x.sigma(), c);
        if (!(lhs == rhs)) {
            rep.curve_holds = false;
            rep.witness = x.str();
            break;
        }
    }
    // zero curvatures: 0 = d_tgt(change) + change^2
    CobarElement r2 = twisted_diff(c, b, b) + cobar_mul(c, c);
    rep.curve2_holds = r2.is_zero();
    if (!rep.curve2_holds && rep.witness.empty())
        rep.witness = "curvature residual " + r2.str();
    return rep;
}

}  // namespace homchar
