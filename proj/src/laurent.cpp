#include "wzw/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wzw {

Laurent Laurent::monomial(const Cyc& c, int e) {
    Laurent l(c.field_n());
    if (!c.is_zero()) l.t_[e] = c;
    return l;
}

Laurent Laurent::from_poly(const Poly& p, int shift) {
    Laurent l(p.field_n());
    for (int i = 0; i <= p.deg(); ++i) {
        Cyc c = p.coeff(i);
        if (!c.is_zero()) l.t_[i + shift] = c;
    }
    return l;
}

int Laurent::min_deg() const {
    if (t_.empty()) throw std::logic_error("Laurent: min_deg of zero");
    return t_.begin()->first;
}

int Laurent::max_deg() const {
    if (t_.empty()) throw std::logic_error("Laurent: max_deg of zero");
    return t_.rbegin()->first;
}

Cyc Laurent::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Cyc::zero(n_ == 0 ? 1 : n_) : it->second;
}

void Laurent::add_term(int e, const Cyc& c) {
    if (c.is_zero()) return;
    if (n_ == 0) n_ = c.field_n();
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    if (r.n_ == 0) r.n_ = o.n_;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r(n_ == 0 ? o.n_ : n_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::operator*(const Cyc& s) const {
    Laurent r(n_);
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
}

Laurent Laurent::scale_var(const Cyc& s) const {
    Laurent r(n_);
    for (const auto& [e, c] : t_) {
        Cyc pw = Cyc::one(s.field_n());
        long ee = e;
        if (ee >= 0) {
            for (long i = 0; i < ee; ++i) pw *= s;
        } else {
            Cyc si = s.inverse();
            for (long i = 0; i < -ee; ++i) pw *= si;
        }
        r.add_term(e, c * pw);
    }
    return r;
}

Laurent Laurent::stretch(int k) const {
    Laurent r(n_);
    for (const auto& [e, c] : t_) r.add_term(e * k, c);
    return r;
}

Cplx Laurent::eval(const Cplx& u) const {
    Cplx acc(0, 0);
    for (const auto& [e, c] : t_) acc += c.to_complex() * std::pow(u, e);
    return acc;
}

std::string Laurent::str(const std::string& var) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (e != 0) os << "*" << var << "^" << e;
        first = false;
    }
    return os.str();
}

}  // namespace wzw
