#include "wzw/qseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wzw {

void QSeries::tidy() {
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++qmin_;
    }
    while (!c_.empty() && qmin_ + static_cast<int>(c_.size()) - 1 > trunc_) c_.pop_back();
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) qmin_ = 0;
}

QSeries QSeries::constant(const RatFunc& c, int trunc) {
    QSeries s(c.field_n(), trunc);
    s.set_coeff(0, c);
    return s;
}

QSeries QSeries::monomial(const RatFunc& c, int e, int trunc) {
    QSeries s(c.field_n(), trunc);
    s.set_coeff(e, c);
    return s;
}

RatFunc QSeries::coeff(int e) const {
    int i = e - qmin_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc(n_ == 0 ? 1 : n_);
    return c_[i];
}

void QSeries::set_coeff(int e, const RatFunc& c) {
    if (e > trunc_) return;
    if (c_.empty()) {
        qmin_ = e;
        c_.push_back(c);
        tidy();
        return;
    }
    if (e < qmin_) {
        c_.insert(c_.begin(), qmin_ - e, RatFunc(n_));
        qmin_ = e;
    } else if (e >= qmin_ + static_cast<int>(c_.size())) {
        c_.resize(e - qmin_ + 1, RatFunc(n_));
    }
    c_[e - qmin_] = c;
    tidy();
}

bool QSeries::is_zero() const { return c_.empty(); }

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(n_ == 0 ? o.n_ : n_, std::min(trunc_, o.trunc_));
    int lo = std::min(qmin_, o.qmin_);
    for (int e = lo; e <= r.trunc_; ++e) {
        RatFunc s = coeff(e) + o.coeff(e);
        if (!s.is_zero()) r.set_coeff(e, s);
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    int n = n_ == 0 ? o.n_ : n_;
    if (is_zero() || o.is_zero()) {
        // Validity of the zero product: conservative, full window.
        return QSeries(n, std::min(trunc_, o.trunc_));
    }
    // Exponent e is complete iff every contributing pair is stored:
    // e <= min(trunc_a + qmin_b, trunc_b + qmin_a).
    int t = std::min(trunc_ + o.qmin_, o.trunc_ + qmin_);
    QSeries r(n, t);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            int e = qmin_ + static_cast<int>(i) + o.qmin_ + static_cast<int>(j);
            if (e > t) continue;
            r.set_coeff(e, r.coeff(e) + c_[i] * o.c_[j]);
        }
    }
    return r;
}

QSeries QSeries::operator*(const Cyc& s) const {
    return map_coeffs([&](const RatFunc& c) { return c * s; });
}

QSeries QSeries::operator*(const RatFunc& f) const {
    return map_coeffs([&](const RatFunc& c) { return c * f; });
}

bool QSeries::equal_through(const QSeries& o, int order) const {
    if (order > trunc_ || order > o.trunc_)
        throw std::logic_error("QSeries: comparison beyond validity window");
    int lo = std::min(qmin_, o.qmin_);
    for (int e = lo; e <= order; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

QSeries QSeries::truncate(int new_trunc) const {
    QSeries r = *this;
    r.trunc_ = std::min(trunc_, new_trunc);
    r.tidy();
    return r;
}

QSeries QSeries::inverse() const {
    if (is_zero()) throw std::domain_error("QSeries: inverse of zero");
    RatFunc lead = c_.front();
    RatFunc lead_inv = lead.inverse();
    // (q^m (a0 + a1 q + ...))^{-1} = q^{-m} (a0 + a1 q + ...)^{-1}.
    int m = qmin_;
    int len = trunc_ - m + 1;  // relative orders 0 .. trunc-m
    std::vector<RatFunc> b(len, RatFunc(n_));
    for (int k = 0; k < len; ++k) {
        RatFunc acc = (k == 0) ? RatFunc::constant(Cyc::one(n_)) : RatFunc(n_);
        for (int j = 1; j <= k; ++j) {
            RatFunc aj = coeff(m + j);
            if (aj.is_zero() || b[k - j].is_zero()) continue;
            acc -= aj * b[k - j];
        }
        b[k] = (k == 0) ? lead_inv : acc * lead_inv;
    }
    QSeries r(n_, trunc_ - 2 * m);
    for (int k = 0; k < len; ++k) r.set_coeff(-m + k, b[k]);
    return r;
}

QSeries QSeries::subst_eps_u(int j) const {
    Cyc e = Cyc::eps_pow(n_, j);
    return map_coeffs([&](const RatFunc& c) { return c.scale_var(e); });
}

QSeries QSeries::subst_q_u() const {
    // c(u) q^m -> sum_d gamma_d u^d q^{m+d} where gamma are the Laurent
    // coefficients of c at u = 0.
    QSeries r(n_, trunc_);
    Cyc zero = Cyc::zero(n_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int m = qmin_ + static_cast<int>(i);
        Laurent exp0 = c_[i].expansion(zero, trunc_ - m);
        for (const auto& [d, g] : exp0.terms()) {
            int e = m + d;
            if (e > trunc_) continue;
            r.set_coeff(e, r.coeff(e) + RatFunc::monomial(g, d));
        }
    }
    return r;
}

Cplx QSeries::eval(const Cplx& q, const Cplx& u, double pole_tol) const {
    Cplx acc(0, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc += c_[i].eval(u, pole_tol) * std::pow(q, qmin_ + static_cast<int>(i));
    }
    return acc;
}

std::string QSeries::str() const {
    if (is_zero()) return "O(q^" + std::to_string(trunc_ + 1) + ")";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        os << "[" << c_[i].str() << "] q^" << (qmin_ + static_cast<int>(i)) << " + ";
    }
    os << "O(q^" << trunc_ + 1 << ")";
    return os.str();
}

}  // namespace wzw
