#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wzw/cyclotomic.hpp"

namespace wzw {

/// Dense N x N matrix over Q(eps_N). Houses the twist pair (beta, gamma), the
/// basis J_ab = beta^a gamma^{-b} of gl_N, the trace form and Ad-actions.
class GMat {
public:
    GMat() : n_(0) {}
    explicit GMat(int n) : n_(n), e_(n * n, Cyc::zero(n)) {}

    static GMat zero(int n) { return GMat(n); }
    static GMat identity(int n);
    /// Matrix unit E_{ij}, 1-based indices as in standard Lie theory usage.
    static GMat unit(int n, int i, int j);
    /// H_{ij} = E_ii - E_jj.
    static GMat cartan(int n, int i, int j);
    static GMat diag(int n, const std::vector<Cyc>& d);

    int size() const { return n_; }
    const Cyc& at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }
    Cyc& at(int i, int j) { return e_[(i - 1) * n_ + (j - 1)]; }

    bool is_zero() const;
    Cyc trace() const;
    GMat transpose() const;

    GMat operator-() const;
    GMat operator+(const GMat& o) const;
    GMat operator-(const GMat& o) const;
    GMat operator*(const GMat& o) const;
    GMat operator*(const Cyc& s) const;
    GMat& operator+=(const GMat& o) { return *this = *this + o; }
    bool operator==(const GMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const GMat& o) const { return !(*this == o); }

    GMat inverse() const;
    GMat pow(int k) const;

    std::string str() const;

private:
    int n_;
    std::vector<Cyc> e_;
};

inline GMat operator*(const Cyc& s, const GMat& m) { return m * s; }

/// Matrix commutator [A, B] = AB - BA.
GMat bracket(const GMat& a, const GMat& b);
/// Invariant inner product (A|B) = tr(AB).
Cyc inner(const GMat& a, const GMat& b);
/// Ad g (X) = g X g^{-1}.
GMat ad(const GMat& g, const GMat& x);

/// The twist pair of sl_N: beta the cyclic shift, gamma = diag(1, eps^{-1},
/// ..., eps^{1-N}); gamma beta = eps beta gamma and beta^N = gamma^N = 1.
std::pair<GMat, GMat> make_twist_pair(int n);

/// J_ab = beta^a gamma^{-b}; Ad gamma (J_ab) = eps^a J_ab, Ad beta (J_ab) =
/// eps^b J_ab. Indices taken mod N.
GMat j_basis(int n, int a, int b);

/// Trace-form dual basis: inner(J_ab, J^cd) = delta. Each J^ab is a scalar
/// multiple of J_{-a,-b}.
const std::map<std::pair<int, int>, GMat>& dual_j_basis(int n);

/// Coefficients of a traceless X in the J-basis over (a,b) != (0,0).
std::map<std::pair<int, int>, Cyc> decompose_j(const GMat& x);

}  // namespace wzw
