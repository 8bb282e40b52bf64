#include "wzw/gmat.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wzw {

GMat GMat::identity(int n) {
    GMat m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Cyc::one(n);
    return m;
}

GMat GMat::unit(int n, int i, int j) {
    GMat m(n);
    m.at(i, j) = Cyc::one(n);
    return m;
}

GMat GMat::cartan(int n, int i, int j) {
    GMat m(n);
    m.at(i, i) = Cyc::one(n);
    m.at(j, j) = Cyc::from_rat(n, rat(-1));
    return m;
}

GMat GMat::diag(int n, const std::vector<Cyc>& d) {
    GMat m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = d[i - 1];
    return m;
}

bool GMat::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    return true;
}

Cyc GMat::trace() const {
    Cyc t = Cyc::zero(n_);
    for (int i = 1; i <= n_; ++i) t += at(i, i);
    return t;
}

GMat GMat::transpose() const {
    GMat m(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

GMat GMat::operator-() const {
    GMat m = *this;
    for (auto& c : m.e_) c = -c;
    return m;
}

GMat GMat::operator+(const GMat& o) const {
    GMat m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

GMat GMat::operator-(const GMat& o) const { return *this + (-o); }

GMat GMat::operator*(const GMat& o) const {
    GMat m(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const Cyc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const Cyc& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) += a * b;
            }
        }
    return m;
}

GMat GMat::operator*(const Cyc& s) const {
    GMat m = *this;
    for (auto& c : m.e_) c *= s;
    return m;
}

GMat GMat::inverse() const {
    int n = n_;
    GMat a = *this;
    GMat inv = identity(n);
    for (int col = 1; col <= n; ++col) {
        int piv = 0;
        for (int r = col; r <= n; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == 0) throw std::domain_error("GMat: singular matrix");
        if (piv != col) {
            for (int j = 1; j <= n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Cyc d = a.at(col, col).inverse();
        for (int j = 1; j <= n; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Cyc f = a.at(r, col);
            for (int j = 1; j <= n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

GMat GMat::pow(int k) const {
    GMat base = k >= 0 ? *this : inverse();
    int e = k >= 0 ? k : -k;
    GMat acc = identity(n_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string GMat::str() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) {
        os << "[ ";
        for (int j = 1; j <= n_; ++j) os << at(i, j).str() << (j < n_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

GMat bracket(const GMat& a, const GMat& b) { return a * b - b * a; }

Cyc inner(const GMat& a, const GMat& b) { return (a * b).trace(); }

GMat ad(const GMat& g, const GMat& x) { return g * x * g.inverse(); }

std::pair<GMat, GMat> make_twist_pair(int n) {
    if (n < 2) throw std::invalid_argument("make_twist_pair: N >= 2 required");
    GMat beta(n), gamma(n);
    for (int i = 1; i <= n; ++i) {
        beta.at(i, i % n + 1) = Cyc::one(n);
        gamma.at(i, i) = Cyc::eps_pow(n, -(i - 1));
    }
    return {beta, gamma};
}

namespace {
std::mutex dual_mutex;
}

GMat j_basis(int n, int a, int b) {
    static std::map<std::tuple<int, int, int>, GMat> cache;
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    std::lock_guard<std::mutex> lk(dual_mutex);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto [beta, gamma] = make_twist_pair(n);
    GMat j = beta.pow(a) * gamma.pow(-b);
    cache.emplace(key, j);
    return j;
}

const std::map<std::pair<int, int>, GMat>& dual_j_basis(int n) {
    static std::map<int, std::map<std::pair<int, int>, GMat>> cache;
    {
        std::lock_guard<std::mutex> lk(dual_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::map<std::pair<int, int>, GMat> duals;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == 0 && b == 0) continue;
            // inner(J_ab, J_{-a,-b}) is a nonzero scalar; J^ab is the rescaled
            // opposite basis element.
            GMat opp = j_basis(n, -a, -b);
            Cyc g = inner(j_basis(n, a, b), opp);
            duals.emplace(std::make_pair(a, b), opp * g.inverse());
        }
    std::lock_guard<std::mutex> lk(dual_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, std::move(duals)).first->second;
}

std::map<std::pair<int, int>, Cyc> decompose_j(const GMat& x) {
    int n = x.size();
    std::map<std::pair<int, int>, Cyc> out;
    GMat rem = x;
    for (const auto& [ab, dual] : dual_j_basis(n)) {
        Cyc c = inner(x, dual);
        if (c.is_zero()) continue;
        out.emplace(ab, c);
        rem = rem - j_basis(n, ab.first, ab.second) * c;
    }
    if (!rem.is_zero()) throw std::invalid_argument("decompose_j: input not traceless");
    return out;
}

}  // namespace wzw
