#include "wzw/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace wzw {

Poly::Poly(int field_n, std::vector<Cyc> coeffs) : n_(field_n), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Cyc& c) {
    Poly p(c.field_n());
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::monomial(const Cyc& c, int deg) {
    Poly p(c.field_n());
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, Cyc::zero(c.field_n()));
    p.c_[deg] = c;
    return p;
}

Poly Poly::var(int field_n) { return monomial(Cyc::one(field_n), 1); }

Cyc Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Cyc::zero(n_ == 0 ? 1 : n_);
    return c_[k];
}

Cyc Poly::leading() const {
    if (is_zero()) throw std::logic_error("Poly: leading of zero");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size(), Cyc::zero(o.n_));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    if (r.n_ == 0) r.n_ = o.n_;
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(n_ == 0 ? o.n_ : n_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Cyc::zero(r.n_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Cyc& s) const {
    Poly r = *this;
    if (s.is_zero()) return Poly(n_);
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q(d.n_), r = *this;
    if (r.n_ == 0) r.n_ = d.n_;
    Cyc lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        Cyc c = r.c_.back() * lead_inv;
        int shift = r.deg() - d.deg();
        if (q.c_.size() < static_cast<size_t>(shift + 1)) q.c_.resize(shift + 1, Cyc::zero(d.n_));
        q.c_[shift] = c;
        for (size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= c * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading().inverse();  // monic
}

Poly Poly::derivative() const {
    Poly r(n_);
    if (deg() < 1) return r;
    r.c_.resize(c_.size() - 1, Cyc::zero(n_));
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::scale_var(const Cyc& s) const {
    Poly r = *this;
    Cyc pw = Cyc::one(n_ == 0 ? s.field_n() : n_);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= pw;
        pw *= s;
    }
    r.trim();
    return r;
}

Poly Poly::shift_var(const Cyc& s) const {
    // Horner: p(u+s) built from top coefficient down.
    Poly r(n_);
    Poly lin(n_, {s, Cyc::one(n_)});
    for (int i = deg(); i >= 0; --i) r = r * lin + Poly::constant(c_[i]);
    return r;
}

Poly Poly::reverse() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

int Poly::root_multiplicity(const Cyc& u0) const {
    if (is_zero()) throw std::logic_error("Poly: root multiplicity of zero polynomial");
    Poly lin(n_, {-u0, Cyc::one(n_)});
    Poly p = *this;
    int m = 0;
    while (true) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) return m;
        ++m;
        p = q;
        if (p.is_zero()) return m;
    }
}

Cyc Poly::eval(const Cyc& u) const {
    Cyc acc = Cyc::zero(u.field_n());
    for (int i = deg(); i >= 0; --i) acc = acc * u + c_[i];
    return acc;
}

Cplx Poly::eval(const Cplx& u) const {
    Cplx acc(0, 0);
    for (int i = deg(); i >= 0; --i) acc = acc * u + c_[i].to_complex();
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i >= 1) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

}  // namespace wzw
