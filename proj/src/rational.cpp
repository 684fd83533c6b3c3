#include "nullcone/rational.hpp"

#include <sstream>

namespace nullcone {

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(mpz_class(s), mpz_class(1));
    return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

std::string Rat::str() const {
    std::ostringstream os;
    os << v_.get_num();
    if (v_.get_den() != 1) os << '/' << v_.get_den();
    return os.str();
}

RatVec& RatVec::operator+=(const RatVec& o) {
    if (dim() != o.dim()) throw std::invalid_argument("RatVec: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
    if (dim() != o.dim()) throw std::invalid_argument("RatVec: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RatVec& RatVec::operator*=(const Rat& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

bool RatVec::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatVec::operator<(const RatVec& o) const {
    for (std::size_t i = 0; i < std::min(dim(), o.dim()); ++i) {
        if (e_[i] < o.e_[i]) return true;
        if (o.e_[i] < e_[i]) return false;
    }
    return dim() < o.dim();
}

std::string RatVec::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += e_[i].str();
    }
    return s + ")";
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Rat inner(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Rat acc;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

mpz_class common_denominator(const RatVec& v) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), v[i].den().get_mpz_t());
        l = l / g * v[i].den();
    }
    return l;
}

}  // namespace nullcone
