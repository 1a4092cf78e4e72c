#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lfd {

// integer laurent polynomial in one variable
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long c) { if (c) terms_[0] = c; }
    static Laurent monomial(int exp, long long c = 1) {
        Laurent p;
        if (c) p.terms_[exp] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, long long>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // substitute var -> var^k (k may be negative, e.g. mirror A -> A^-1)
    Laurent substitute_power(int k) const {
        Laurent r;
        for (auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }

    void add_term(int exp, long long c) {
        if (!c) return;
        auto [it, fresh] = terms_.try_emplace(exp, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    // all exponents divisible by k
    bool exponents_divisible(int k) const {
        for (auto& [e, c] : terms_)
            if (e % k != 0) return false;
        return true;
    }

    std::string str(const std::string& var) const;

private:
    std::map<int, long long> terms_;
};

}  // namespace lfd
