#include "wzw/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wzw {

AffineWeight::AffineWeight(int n, Rat level, std::vector<Rat> values)
    : n_(n), k_(std::move(level)), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != n) throw std::invalid_argument("AffineWeight: size");
    Rat s(0);
    for (const auto& v : v_) s += v;
    if (s != 0) throw std::invalid_argument("AffineWeight: values must sum to zero");
}

AffineWeight AffineWeight::zero(int n, const Rat& level) {
    return AffineWeight(n, level, std::vector<Rat>(n, Rat(0)));
}

AffineWeight AffineWeight::from_cartan_values(int n, const Rat& level,
                                              const std::vector<Rat>& h) {
    if (static_cast<int>(h.size()) != n - 1)
        throw std::invalid_argument("AffineWeight: need N-1 Cartan values");
    // v_i - v_{i+1} = h_i with sum v = 0.
    std::vector<Rat> v(n, Rat(0));
    for (int i = n - 2; i >= 0; --i) v[i] = v[i + 1] + h[i];
    Rat mean(0);
    for (const auto& x : v) mean += x;
    mean /= n;
    for (auto& x : v) x -= mean;
    return AffineWeight(n, level, v);
}

Rat AffineWeight::on_cartan(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("AffineWeight::on_cartan");
    int j = i % n_;  // i = N pairs with H_{N,1}
    return v_[i - 1] - v_[j];
}

Cyc AffineWeight::on_diag(const GMat& d) const {
    Cyc acc = Cyc::zero(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j)
            if (i != j && !d.at(i, j).is_zero())
                throw std::invalid_argument("AffineWeight: matrix not diagonal");
        acc += d.at(i, i) * v_[i - 1];
    }
    return acc;
}

AffineWeight AffineWeight::compose_ad_beta(int pow) const {
    // (mu o Ad beta)(diag d) = mu(diag(d_2,...,d_N,d_1)): values shift down.
    std::vector<Rat> v(n_);
    int p = ((pow % n_) + n_) % n_;
    for (int j = 0; j < n_; ++j) v[(j + p) % n_] = v_[j];
    return AffineWeight(n_, k_, std::move(v));
}

AffineWeight AffineWeight::operator-() const {
    std::vector<Rat> v(n_);
    for (int j = 0; j < n_; ++j) v[j] = -v_[j];
    return AffineWeight(n_, -k_, std::move(v));
}

AffineWeight AffineWeight::operator+(const AffineWeight& o) const {
    std::vector<Rat> v(n_);
    for (int j = 0; j < n_; ++j) v[j] = v_[j] + o.v_[j];
    return AffineWeight(n_, k_ + o.k_, std::move(v));
}

bool AffineWeight::operator==(const AffineWeight& o) const {
    return n_ == o.n_ && k_ == o.k_ && v_ == o.v_;
}

Rat AffineWeight::coroot_pairing(int i) const {
    int idx = ((i % n_) + n_) % n_;
    Rat h = (idx == 0) ? on_cartan(n_) : on_cartan(idx);
    return h + k_ / n_;
}

bool AffineWeight::is_dominant_integral() const {
    for (int i = 0; i < n_; ++i)
        if (!is_nonneg_integer(coroot_pairing(i))) return false;
    return true;
}

std::string AffineWeight::str() const {
    std::ostringstream os;
    os << "(k=" << k_.get_str() << "; ";
    for (int j = 0; j < n_; ++j) os << v_[j].get_str() << (j + 1 < n_ ? "," : ")");
    return os.str();
}

namespace {

// Solve nu o (1 - Ad beta^{sign}) = mu on the traceless diagonal functionals.
// sign = -1: nu_j - nu_{j+1} = mu_j (indices mod N);
// sign = +1: nu_j - nu_{j-1} = mu_j.
std::vector<Rat> solve_one_minus_adbeta(const std::vector<Rat>& mu, int sign) {
    int n = static_cast<int>(mu.size());
    std::vector<Rat> nu(n, Rat(0));
    if (sign < 0) {
        for (int j = 0; j + 1 < n; ++j) nu[j + 1] = nu[j] - mu[j];
    } else {
        for (int j = 1; j < n; ++j) nu[j] = nu[j - 1] + mu[j];
    }
    Rat mean(0);
    for (const auto& x : nu) mean += x;
    mean /= n;
    for (auto& x : nu) x -= mean;
    return nu;
}

}  // namespace

std::pair<AffineWeight, AffineWeight> weight_tilde(const AffineWeight& lambda, const Rat& k) {
    int n = lambda.mat_n();
    // lambda-tilde = -lambda (1 - Ad beta^{-1})^{-1}: find nu with
    // nu (1 - Ad beta^{-1}) = lambda, i.e. nu_j - nu_{j+1} = lambda_j.
    std::vector<Rat> nu = solve_one_minus_adbeta(lambda.values(), -1);
    AffineWeight tilde(n, k, [&] {
        std::vector<Rat> v(n);
        for (int j = 0; j < n; ++j) v[j] = -nu[j];
        return v;
    }());
    // lambda-tilde' = lambda (1 - Ad beta)^{-1}.
    std::vector<Rat> nup = solve_one_minus_adbeta(lambda.values(), +1);
    AffineWeight tildep(n, k, std::move(nup));
    // Cross-check the equivalent form lambda (1 - Ad beta)^{-1} Ad beta:
    // as a functional this is (lambda (1 - Ad beta)^{-1}) o Ad beta.
    AffineWeight alt = tildep.compose_ad_beta(1);
    if (!(alt == tilde))
        throw std::logic_error("weight_tilde: the two defining expressions disagree");
    return {tilde, tildep};
}

std::vector<AffineWeight> weights_of_defining(int n) {
    std::vector<AffineWeight> out;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> v(n, rat(-1, n));
        v[i] += 1;
        out.emplace_back(n, Rat(0), std::move(v));
    }
    return out;
}

std::vector<AffineWeight> weights_of_tensor(int n, const std::vector<int>& dims) {
    std::vector<AffineWeight> acc{AffineWeight::zero(n, Rat(0))};
    for (int d : dims) {
        if (d == 1) continue;
        if (d != n) throw std::invalid_argument("weights_of_tensor: dims must be 1 or N");
        std::vector<AffineWeight> next;
        for (const auto& w : acc)
            for (const auto& x : weights_of_defining(n)) next.push_back(w + x);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace wzw
