#ifndef EDGECODE_FIELD_HPP
#define EDGECODE_FIELD_HPP

/// Table-driven arithmetic in GF(q) for prime powers q <= 1024.
///
/// Elements are identified with canonical codes 0..q-1: for prime fields the
/// residue itself, for extensions the base-p digit string of the polynomial
/// representation (code = sum c_i * p^i where the element is sum c_i * alpha^i
/// and alpha is the class of x modulo the field's modulus polynomial).
///
/// The modulus for GF(p^m) is the lexicographically smallest monic irreducible
/// polynomial of degree m over GF(p), ordered by the base-p code of its lower
/// coefficients. This makes element encodings a pure function of q, so every
/// downstream matrix and enumeration is reproducible bit-for-bit.

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace edgecode {

using Elem = std::uint16_t;

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// b must be monic of degree >= 1
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    a = poly_trim(std::move(a));
    while (a.size() >= b.size()) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - b.size();
        if (lead != 0) {
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + lead * (p - b[i])) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), mod, p);
}

inline bool poly_divides(const Poly& d, const Poly& a, unsigned p) {
    return poly_mod(a, d, p).empty();
}

inline bool poly_irreducible(const Poly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size()) - 1;
    // trial division by every monic polynomial of degree 1..deg/2
    for (unsigned dd = 1; 2 * dd <= deg; ++dd) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            Poly g(dd + 1, 0);
            unsigned long long c = code;
            for (unsigned i = 0; i < dd; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[dd] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), "smallest" meaning the base-p code of the lower coefficients.
inline Poly smallest_irreducible(unsigned p, unsigned m) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        unsigned long long c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

} // namespace detail

class Field {
  public:
    /// Builds GF(q). Throws NotAPrimePower if q is not a prime power,
    /// Unsupported outside 2 <= q <= 1024.
    explicit Field(unsigned q) : q_(q) {
        if (q < 2 || q > 1024) throw Unsupported("field order must satisfy 2 <= q <= 1024, got " + std::to_string(q));
        unsigned p = 0;
        for (unsigned d = 2; d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        unsigned m = 0;
        unsigned n = q;
        while (n % p == 0) {
            n /= p;
            ++m;
        }
        if (n != 1 || !detail::is_prime(p))
            throw NotAPrimePower(std::to_string(q) + " is not a prime power");
        p_ = p;
        m_ = m;
        if (m_ > 1) modulus_ = detail::smallest_irreducible(p_, m_);
        build_tables();
        generator_ = find_generator();
    }

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned extension_degree() const { return m_; }
    Elem generator() const { return generator_; }

    /// Modulus coefficients, constant term first (empty for prime fields).
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem one() const { return 1; }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }

    Elem pow(Elem a, unsigned long long e) const {
        Elem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Nonzero elements in ascending canonical-code order: 1, 2, ..., q-1.
    std::vector<Elem> nonzero_elements() const {
        std::vector<Elem> out(q_ - 1);
        std::iota(out.begin(), out.end(), Elem{1});
        return out;
    }

    /// Character sum over the torus: sum of x^e for x in K*.
    /// Zero unless e == 0 mod (q-1), in which case it is q-1 viewed in GF(q).
    Elem character_sum(unsigned e) const {
        Elem s = 0;
        for (Elem x = 1; x < q_; ++x) s = add(s, pow(x, e));
        return s;
    }

  private:
    std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

    void build_tables() {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        if (m_ == 1) {
            for (unsigned a = 0; a < q_; ++a) {
                neg_[a] = static_cast<Elem>((q_ - a) % q_);
                for (unsigned b = 0; b < q_; ++b) {
                    add_[idx(a, b)] = static_cast<Elem>((a + b) % q_);
                    mul_[idx(a, b)] = static_cast<Elem>(a * b % q_);
                }
            }
        } else {
            for (unsigned a = 0; a < q_; ++a) {
                const auto pa = decode(a);
                neg_[a] = encode_neg(pa);
                for (unsigned b = 0; b < q_; ++b) {
                    const auto pb = decode(b);
                    add_[idx(a, b)] = encode_add(pa, pb);
                    mul_[idx(a, b)] = encode(detail::poly_mul_mod(pa, pb, modulus_, p_));
                }
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) {
                    inv_[a] = static_cast<Elem>(b);
                    break;
                }
    }

    detail::Poly decode(unsigned code) const {
        detail::Poly c(m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = code % p_;
            code /= p_;
        }
        return detail::poly_trim(std::move(c));
    }

    Elem encode(const detail::Poly& c) const {
        unsigned code = 0, w = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            code += c[i] * w;
            w *= p_;
        }
        return static_cast<Elem>(code);
    }

    Elem encode_add(const detail::Poly& a, const detail::Poly& b) const {
        detail::Poly c(m_, 0);
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p_;
        return encode(c);
    }

    Elem encode_neg(const detail::Poly& a) const {
        detail::Poly c(a);
        for (auto& x : c) x = (p_ - x) % p_;
        return encode(c);
    }

    /// Smallest-code element of multiplicative order q-1.
    Elem find_generator() const {
        if (q_ == 2) return 1;
        for (unsigned a = 2; a < q_; ++a) {
            Elem x = static_cast<Elem>(a);
            unsigned order = 1;
            while (x != 1) {
                x = mul(x, static_cast<Elem>(a));
                ++order;
            }
            if (order == q_ - 1) return static_cast<Elem>(a);
        }
        return 1;
    }

    unsigned q_, p_, m_;
    std::vector<unsigned> modulus_;
    Elem generator_ = 1;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

inline Field build_field(unsigned q) { return Field(q); }

} // namespace edgecode

#endif
