#include "wzw/ratfunc.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wzw {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Cyc::one(den_.field_n()));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Cyc lead_inv = den_.leading().inverse();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

RatFunc RatFunc::constant(const Cyc& c) {
    return RatFunc(Poly::constant(c), Poly::constant(Cyc::one(c.field_n())));
}

RatFunc RatFunc::from_rat(int field_n, const Rat& r) {
    return constant(Cyc::from_rat(field_n, r));
}

RatFunc RatFunc::from_poly(const Poly& p) {
    return RatFunc(p, Poly::constant(Cyc::one(p.field_n())));
}

RatFunc RatFunc::from_laurent(const Laurent& l) {
    int n = l.field_n() == 0 ? 1 : l.field_n();
    if (l.is_zero()) return RatFunc(n);
    int shift = std::min(0, l.min_deg());
    Poly num(n);
    for (const auto& [e, c] : l.terms()) num = num + Poly::monomial(c, e - shift);
    Poly den = Poly::monomial(Cyc::one(n), -shift);
    return RatFunc(num, den);
}

RatFunc RatFunc::var(int field_n) { return from_poly(Poly::var(field_n)); }

RatFunc RatFunc::monomial(const Cyc& c, int e) {
    return from_laurent(Laurent::monomial(c, e));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc(field_n() == 0 ? o.field_n() : field_n());
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::operator*(const Cyc& s) const {
    RatFunc r = *this;
    r.num_ = r.num_ * s;
    if (r.num_.is_zero()) return RatFunc(field_n());
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Cyc RatFunc::eval_cyc(const Cyc& u0) const {
    Cyc d = den_.eval(u0);
    if (d.is_zero()) throw pole_error("RatFunc: exact evaluation at a pole");
    return num_.eval(u0) * d.inverse();
}

Cplx RatFunc::eval(const Cplx& u, double pole_tol) const {
    Cplx d = den_.eval(u);
    double scale = std::max(1.0, std::pow(std::abs(u), den_.deg()));
    if (std::abs(d) < pole_tol * scale) {
        std::ostringstream os;
        os << "RatFunc: evaluation within " << pole_tol << " of a zero of denominator "
           << den_.str();
        throw pole_error(os.str());
    }
    return num_.eval(u) / d;
}

RatFunc RatFunc::scale_var(const Cyc& c) const {
    return RatFunc(num_.scale_var(c), den_.scale_var(c));
}

RatFunc RatFunc::subst_recip(const Cyc& c) const {
    // f(c/u): substitute into num/den after clearing to a common power of u.
    int n = field_n();
    int dn = num_.deg() < 0 ? 0 : num_.deg();
    int dd = den_.deg();
    int m = std::max(dn, dd);
    // u^m num(c/u) and u^m den(c/u) are polynomials in u.
    auto lift = [&](const Poly& p) {
        Poly out(n);
        Cyc pw = Cyc::one(n);
        for (int i = 0; i <= p.deg(); ++i) {
            out = out + Poly::monomial(p.coeff(i) * pw, m - i);
            pw *= c;
        }
        return out;
    };
    return RatFunc(lift(num_), lift(den_));
}

RatFunc RatFunc::u_ddu() const {
    Poly u = Poly::var(field_n());
    return RatFunc(u * (num_.derivative() * den_ - num_ * den_.derivative()), den_ * den_);
}

RatFunc RatFunc::u_ddu(int times) const {
    RatFunc r = *this;
    for (int i = 0; i < times; ++i) r = r.u_ddu();
    return r;
}

int RatFunc::pole_order(const Cyc& u0) const {
    if (is_zero()) return 0;
    return den_.root_multiplicity(u0);
}

Laurent RatFunc::expansion(const Cyc& u0, int order_hi) const {
    int n = field_n();
    Laurent out(n);
    if (is_zero()) return out;
    Poly nsh = num_.shift_var(u0);
    Poly dsh = den_.shift_var(u0);
    // dsh = xi^m * D(xi), D(0) != 0
    int m = 0;
    while (dsh.coeff(0).is_zero()) {
        std::vector<Cyc> shifted(dsh.coeffs().begin() + 1, dsh.coeffs().end());
        dsh = Poly(n, shifted);
        ++m;
    }
    int terms = order_hi + m + 1;
    if (terms <= 0) return out;
    // Series division nsh / D to `terms` coefficients.
    std::vector<Cyc> q(terms, Cyc::zero(n));
    Cyc d0_inv = dsh.coeff(0).inverse();
    for (int k = 0; k < terms; ++k) {
        Cyc acc = nsh.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= dsh.coeff(j) * q[k - j];
        q[k] = acc * d0_inv;
    }
    for (int k = 0; k < terms; ++k) out.add_term(k - m, q[k]);
    return out;
}

Laurent RatFunc::expansion_at_infinity(int order_hi) const {
    int n = field_n();
    if (is_zero()) return Laurent(n);
    // f(1/s) = s^{deg den - deg num} * rev(num)(s) / rev(den)(s)
    Poly rn = num_.reverse();
    Poly rd = den_.reverse();
    RatFunc g(rn, rd);
    Laurent e = g.expansion(Cyc::zero(n), order_hi - (den_.deg() - num_.deg()));
    Laurent out(n);
    int shift = den_.deg() - num_.deg();
    for (const auto& [k, c] : e.terms()) out.add_term(k + shift, c);
    return out;
}

Cyc RatFunc::residue_at(const Cyc& u0) const { return expansion(u0, -1).coeff(-1); }

int RatFunc::order_at_infinity() const {
    if (is_zero()) return std::numeric_limits<int>::max() / 2;
    return den_.deg() - num_.deg();
}

bool RatFunc::denominator_in_standard_form(int n_twist) const {
    Poly d = den_;
    int n = field_n();
    Poly u = Poly::var(n);
    Poly un1 = Poly::monomial(Cyc::one(n), n_twist) - Poly::constant(Cyc::one(n));
    for (const Poly* f : {&u, &un1}) {
        while (d.deg() >= f->deg()) {
            auto [q, r] = d.divmod(*f);
            if (!r.is_zero()) break;
            d = q;
        }
    }
    return d.deg() == 0;
}

std::string RatFunc::str() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.str() + ")";
    if (den_.deg() > 0 || den_.coeff(0) != Cyc::one(field_n())) s += " / (" + den_.str() + ")";
    return s;
}

}  // namespace wzw
