#include "homstar/multivector.hpp"

#include <algorithm>
#include <sstream>

namespace homstar {

namespace {

// Sorts idx ascending; returns 0 on repeated index, else the sign.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = a + 1; b < idx.size(); ++b) {
            if (idx[a] == idx[b]) return 0;
            if (idx[a] > idx[b]) {
                std::swap(idx[a], idx[b]);
                sign = -sign;
            }
        }
    }
    return sign;
}

} // namespace

void Multivector::add_component(std::vector<int> idx, const Poly& value) {
    if (static_cast<int>(idx.size()) != degree_)
        throw StructuralError("Multivector::add_component: tuple size mismatch");
    if (value.is_zero()) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    Poly v = sign > 0 ? value : -value;
    auto it = comp_.find(idx);
    if (it == comp_.end()) {
        comp_.emplace(std::move(idx), std::move(v));
    } else {
        it->second += v;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

Poly Multivector::component(std::vector<int> idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return Poly(vars_, trunc_);
    auto it = comp_.find(idx);
    if (it == comp_.end()) return Poly(vars_, trunc_);
    return sign > 0 ? it->second : -it->second;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (vars_ != o.vars_ || degree_ != o.degree_ || trunc_ != o.trunc_)
        throw StructuralError("Multivector: shape mismatch");
    for (const auto& [idx, v] : o.comp_) add_component(idx, v);
    return *this;
}

Multivector Multivector::operator-() const {
    Multivector r(vars_, trunc_, degree_);
    for (const auto& [idx, v] : comp_) r.comp_[idx] = -v;
    return r;
}

Multivector Multivector::scaled(const Scalar& s) const {
    Multivector r(vars_, trunc_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [idx, v] : comp_) r.comp_[idx] = v.scaled(s);
    return r;
}

std::optional<int> Multivector::homogeneity_degree() const {
    if (comp_.empty()) throw PreconditionError("Multivector::homogeneity_degree: zero input");
    std::optional<int> deg;
    for (const auto& [idx, v] : comp_) {
        int fibre_indices = 0;
        for (int a : idx) {
            if (vars_.is_fibre(a)) ++fibre_indices;
        }
        for (const auto& [e, c] : v.terms()) {
            int k = v.fibre_degree_of(e) - fibre_indices;
            if (!deg)
                deg = k;
            else if (*deg != k)
                return std::nullopt;
        }
    }
    return deg;
}

std::string Multivector::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, v] : comp_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ") d[";
        for (size_t j = 0; j < idx.size(); ++j) {
            if (j) os << ",";
            os << vars_.var_name(idx[j]);
        }
        os << "]";
    }
    return os.str();
}

} // namespace homstar
