#include "nullcone/poly.hpp"

#include <numeric>
#include <sstream>

namespace nullcone {

Poly Poly::constant(const Rat& c, std::size_t arity) {
    Poly p(arity);
    if (!c.is_zero()) p.terms_[Mono(arity, 0)] = c;
    return p;
}

Poly Poly::var(std::size_t i, std::size_t arity) {
    Poly p(arity);
    Mono m(arity, 0);
    m[i] = 1;
    p.terms_[m] = Rat(1);
    return p;
}

Rat Poly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (m.size() != arity_) throw std::invalid_argument("Poly: monomial arity");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(arity_);
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Poly: arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("Poly: arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("Poly: arity mismatch");
    Poly p(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Poly::Mono m(a.arity_);
            for (std::size_t i = 0; i < a.arity_; ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("Poly::eval: arity mismatch");
    Rat total;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < arity_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        total += t;
    }
    return total;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

bool Poly::uses_var(std::size_t i) const {
    for (const auto& [m, c] : terms_)
        if (m[i] > 0) return true;
    return false;
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) != degree) return false;
    return true;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-') os << "-";
        std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
        bool any_var = false;
        std::ostringstream vs;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            if (any_var) vs << "*";
            any_var = true;
            vs << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (m[i] > 1) vs << "^" << m[i];
        }
        if (!any_var)
            os << mag;
        else if (mag == "1")
            os << vs.str();
        else
            os << mag << "*" << vs.str();
        first = false;
    }
    return os.str();
}

bool PolyMatrix::is_alternating() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::minor_without(const std::vector<std::size_t>& removed) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n_; ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
    PolyMatrix m(keep.size(), arity_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) m(i, j) = (*this)(keep[i], keep[j]);
    return m;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.empty()) return Poly::constant(Rat(1), m.arity());
    Poly acc(m.arity());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        if (m(row, c).is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        Poly sub = det_rec(m, rest, row + 1);
        sub = m(row, c) * sub;
        if (k % 2) sub = -sub;
        acc += sub;
    }
    return acc;
}

}  // namespace

Poly det_poly(const PolyMatrix& m) {
    std::vector<std::size_t> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return det_rec(m, cols, 0);
}

namespace {

Poly pfaffian_rec(const PolyMatrix& m, std::vector<std::size_t> idx) {
    if (idx.empty()) return Poly::constant(Rat(1), m.arity());
    Poly acc(m.arity());
    std::size_t a = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        std::size_t b = idx[k];
        if (m(a, b).is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        Poly sub = m(a, b) * pfaffian_rec(m, rest);
        if (k % 2 == 0) sub = -sub;  // sign (-1)^k with k the position of b
        acc += sub;
    }
    return acc;
}

}  // namespace

Poly pfaffian(const PolyMatrix& m) {
    if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    if (!m.is_alternating()) throw std::invalid_argument("pfaffian: matrix not alternating");
    std::vector<std::size_t> idx(m.size());
    std::iota(idx.begin(), idx.end(), 0);
    return pfaffian_rec(m, idx);
}

Rat pfaffian(const RatMat& m) {
    PolyMatrix pm(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) pm(i, j) = Poly::constant(m(i, j), 0);
    Poly p = pfaffian(pm);
    return p.coefficient(Poly::Mono{});
}

}  // namespace nullcone
