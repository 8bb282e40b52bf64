#include "wzw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wzw {

namespace {

// Dense rational polynomial helpers, ascending coefficients, local to this TU.
using RPoly = std::vector<Rat>;

void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division p / q, both over Q, remainder must vanish.
RPoly rdiv_exact(RPoly p, const RPoly& q) {
    RPoly out(p.size() >= q.size() ? p.size() - q.size() + 1 : 0, Rat(0));
    while (p.size() >= q.size() && !p.empty()) {
        Rat c = p.back() / q.back();
        size_t shift = p.size() - q.size();
        out[shift] = c;
        for (size_t i = 0; i < q.size(); ++i) p[shift + i] -= c * q[i];
        rtrim(p);
    }
    if (!p.empty()) throw std::logic_error("cyclotomic: non-exact division");
    return out;
}

RPoly compute_cyclotomic(int n);

std::map<int, RPoly>& cyc_cache() {
    static std::map<int, RPoly> cache;
    return cache;
}
std::mutex cyc_mutex;

const RPoly& cyclotomic(int n) {
    std::lock_guard<std::mutex> lk(cyc_mutex);
    auto it = cyc_cache().find(n);
    if (it == cyc_cache().end()) it = cyc_cache().emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
RPoly compute_cyclotomic(int n) {
    if (n == 1) return {Rat(-1), Rat(1)};
    RPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto it = cyc_cache().find(d);
        const RPoly& phi_d = (it != cyc_cache().end())
                                 ? it->second
                                 : cyc_cache().emplace(d, compute_cyclotomic(d)).first->second;
        num = rdiv_exact(std::move(num), phi_d);
    }
    return num;
}

}  // namespace

int Cyc::degree(int n) { return static_cast<int>(cyclotomic(n).size()) - 1; }

const std::vector<Rat>& Cyc::cyclotomic_poly(int n) { return cyclotomic(n); }

Cyc::Cyc(int n, const Rat& r) : n_(n), c_(degree(n), Rat(0)) { c_[0] = r; }

Cyc Cyc::zero(int n) { return Cyc(n, Rat(0)); }
Cyc Cyc::one(int n) { return Cyc(n, Rat(1)); }

Cyc Cyc::eps_pow(int n, long j) {
    j %= n;
    if (j < 0) j += n;
    int d = degree(n);
    // x^j reduced mod Phi_n.
    RPoly p(static_cast<size_t>(j) + 1, Rat(0));
    p.back() = 1;
    const RPoly& phi = cyclotomic(n);
    while (static_cast<int>(p.size()) > d) {
        Rat c = p.back();
        size_t shift = p.size() - phi.size();
        for (size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * phi[i];
        p.pop_back();
        while (p.size() > 1 && p.back() == 0 && static_cast<int>(p.size()) > d) p.pop_back();
    }
    p.resize(d, Rat(0));
    return Cyc(n, std::move(p));
}

void Cyc::require_same_field(const Cyc& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyc: mixed cyclotomic fields");
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational_part() const {
    if (!is_rational()) throw std::logic_error("Cyc: not rational");
    return c_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
    require_same_field(o);
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    require_same_field(o);
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    require_same_field(o);
    size_t d = c_.size();
    RPoly prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const RPoly& phi = cyclotomic(n_);
    for (size_t k = prod.size(); k-- > d;) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        size_t shift = k - (phi.size() - 1);
        for (size_t i = 0; i + 1 < phi.size(); ++i) prod[shift + i] -= c * phi[i];
        prod[k] = 0;
    }
    prod.resize(d);
    return Cyc(n_, std::move(prod));
}

Cyc Cyc::operator*(const Rat& r) const {
    Cyc out = *this;
    for (auto& c : out.c_) c *= r;
    return out;
}

bool Cyc::operator==(const Cyc& o) const {
    require_same_field(o);
    return c_ == o.c_;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    if (is_rational()) return Cyc(n_, Rat(1) / c_[0]);
    // Extended Euclid: find s with s * this == 1 (mod Phi_N).
    RPoly a = cyclotomic(n_);
    RPoly b = c_;
    rtrim(b);
    RPoly s_prev(1, Rat(0));  // coefficient of `this` for a
    RPoly s_cur(1, Rat(1));   // coefficient of `this` for b
    rtrim(s_prev);
    auto poly_mul = [](const RPoly& p, const RPoly& q) {
        if (p.empty() || q.empty()) return RPoly{};
        RPoly out(p.size() + q.size() - 1, Rat(0));
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
        return out;
    };
    auto poly_sub = [](RPoly p, const RPoly& q) {
        if (q.size() > p.size()) p.resize(q.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
        rtrim(p);
        return p;
    };
    while (!b.empty()) {
        // a = qt * b + r
        RPoly r = a;
        RPoly qt;
        while (r.size() >= b.size() && !r.empty()) {
            Rat c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            if (qt.size() < shift + 1) qt.resize(shift + 1, Rat(0));
            qt[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            rtrim(r);
        }
        RPoly s_next = poly_sub(s_prev, poly_mul(qt, s_cur));
        a = b;
        b = r;
        s_prev = s_cur;
        s_cur = s_next;
    }
    // a = gcd (a unit in Q since Phi_N is irreducible and `this` != 0 mod Phi_N)
    if (a.size() != 1) throw std::logic_error("Cyc: gcd with Phi_N not a unit");
    Rat inv_g = Rat(1) / a[0];
    s_prev.resize(c_.size(), Rat(0));
    for (auto& c : s_prev) c *= inv_g;
    Cyc out(n_, std::move(s_prev));
    return out;
}

Cplx Cyc::to_complex() const {
    Cplx acc(0.0, 0.0);
    const double two_pi_over_n = 2.0 * M_PI / n_;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        acc += to_double(c_[j]) * Cplx(std::cos(two_pi_over_n * j), std::sin(two_pi_over_n * j));
    }
    return acc;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << c_[j].get_str();
        if (j >= 1) os << "*e" << (j > 1 ? std::to_string(j) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

}  // namespace wzw
