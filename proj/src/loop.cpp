#include "wzw/loop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wzw {

LoopElement LoopElement::term(AlgTag tag, const GMat& x, int mode) {
    LoopElement e(x.size(), tag);
    e.add_term(x, mode);
    return e;
}

LoopElement LoopElement::central(int n, AlgTag tag, const Cyc& c) {
    LoopElement e(n, tag);
    e.central_ = c;
    return e;
}

void LoopElement::add_term(const GMat& x, int mode) {
    if (x.is_zero()) return;
    for (auto& [m, k] : t_) {
        if (k == mode) {
            m += x;
            normalize();
            return;
        }
    }
    t_.emplace_back(x, mode);
    normalize();
}

void LoopElement::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    t_.erase(std::remove_if(t_.begin(), t_.end(),
                            [](const auto& p) { return p.first.is_zero(); }),
             t_.end());
}

LoopElement LoopElement::operator-() const {
    LoopElement e = *this;
    for (auto& [m, k] : e.t_) m = -m;
    e.central_ = -e.central_;
    return e;
}

LoopElement LoopElement::operator+(const LoopElement& o) const {
    if (tag_ != o.tag_) throw std::invalid_argument("LoopElement: mixed algebra tags");
    LoopElement e = *this;
    for (const auto& [m, k] : o.t_) e.add_term(m, k);
    e.central_ += o.central_;
    return e;
}

LoopElement LoopElement::operator-(const LoopElement& o) const { return *this + (-o); }

LoopElement LoopElement::operator*(const Cyc& s) const {
    LoopElement e = *this;
    for (auto& [m, k] : e.t_) m = m * s;
    e.central_ *= s;
    e.normalize();
    return e;
}

bool LoopElement::operator==(const LoopElement& o) const {
    return tag_ == o.tag_ && central_ == o.central_ && t_ == o.t_;
}

bool LoopElement::grading_ok() const {
    if (tag_ == AlgTag::marked) return true;
    for (const auto& [x, mode] : t_) {
        // t-degree of the term for node0; s-degree for nodeInf. In both cases
        // the matrix at local degree d must lie in the span of J_ab with
        // a == d (mod N) for node0 and a == -d (mod N) for nodeInf, since
        // J_ab (x) s^{-a+mN} spans the infinity algebra.
        int d = (tag_ == AlgTag::node0) ? mode : -mode;
        auto comps = decompose_j(x);
        for (const auto& [ab, c] : comps) {
            int a = ab.first;
            if (((d - a) % n_ + n_) % n_ != 0) return false;
        }
    }
    return true;
}

std::string LoopElement::str() const {
    std::ostringstream os;
    const char* var = tag_ == AlgTag::nodeInf ? "s" : "t";
    for (const auto& [m, k] : t_) os << "(" << m.str() << ")*" << var << "^" << k << " ";
    if (!central_.is_zero()) os << "+ (" << central_.str() << ") khat";
    return os.str();
}

Cyc cocycle(const LoopElement& a, const LoopElement& b) {
    if (a.tag() != b.tag()) throw std::invalid_argument("cocycle: mismatched tags");
    int n = a.mat_n();
    Cyc acc = Cyc::zero(n);
    for (const auto& [x, m] : a.terms())
        for (const auto& [y, k] : b.terms()) {
            if (m + k != 0) continue;
            acc += inner(x, y) * rat(m);
        }
    if (a.tag() != AlgTag::marked) acc *= rat(1, n);
    return acc;
}

LoopElement alg_bracket(const LoopElement& a, const LoopElement& b) {
    if (a.tag() != b.tag()) throw std::invalid_argument("alg_bracket: mismatched tags");
    LoopElement out(a.mat_n(), a.tag());
    for (const auto& [x, m] : a.terms())
        for (const auto& [y, k] : b.terms()) out.add_term(bracket(x, y), m + k);
    out.add_central(cocycle(a, b));
    return out;
}

namespace {

void check_chevalley_index(int n, int i) {
    if (i < 0 || i >= n) throw std::out_of_range("Chevalley index out of range");
}

}  // namespace

LoopElement phi0(int n, int i, ChevKind kind) {
    check_chevalley_index(n, i);
    switch (kind) {
        case ChevKind::e:
            if (i == 0) return LoopElement::term(AlgTag::node0, GMat::unit(n, n, 1), 1);
            return LoopElement::term(AlgTag::node0, GMat::unit(n, i, i + 1), 1);
        case ChevKind::f:
            if (i == 0) return LoopElement::term(AlgTag::node0, GMat::unit(n, 1, n), -1);
            return LoopElement::term(AlgTag::node0, GMat::unit(n, i + 1, i), -1);
        case ChevKind::coroot: {
            GMat h = (i == 0) ? GMat::cartan(n, n, 1) : GMat::cartan(n, i, i + 1);
            LoopElement out = LoopElement::term(AlgTag::node0, h, 0);
            out.add_central(Cyc::from_rat(n, rat(1, n)));
            return out;
        }
    }
    throw std::logic_error("phi0: bad kind");
}

LoopElement phiinf(int n, int i, ChevKind kind) {
    check_chevalley_index(n, i);
    switch (kind) {
        case ChevKind::e:
            if (i == 0) return LoopElement::term(AlgTag::nodeInf, -GMat::unit(n, 1, n), 1);
            return LoopElement::term(AlgTag::nodeInf, -GMat::unit(n, i + 1, i), 1);
        case ChevKind::f:
            if (i == 0) return LoopElement::term(AlgTag::nodeInf, -GMat::unit(n, n, 1), -1);
            return LoopElement::term(AlgTag::nodeInf, -GMat::unit(n, i, i + 1), -1);
        case ChevKind::coroot: {
            GMat h = (i == 0) ? GMat::cartan(n, n, 1) : GMat::cartan(n, i, i + 1);
            LoopElement out = LoopElement::term(AlgTag::nodeInf, -h, 0);
            out.add_central(Cyc::from_rat(n, rat(1, n)));
            return out;
        }
    }
    throw std::logic_error("phiinf: bad kind");
}

}  // namespace wzw
