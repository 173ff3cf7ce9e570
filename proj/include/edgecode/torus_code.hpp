#ifndef EDGECODE_TORUS_CODE_HPP
#define EDGECODE_TORUS_CODE_HPP

/// Evaluation of edge monomials and edge polynomials on the affine torus
/// (K*)^s, generator matrices, rank, Gram matrices, and matrix export.
///
/// Torus points are ordered lexicographically by canonical element codes with
/// coordinate 1 most significant; matrix row order follows the hypergraph's
/// canonical edge order. Both orders are pure functions of (q, s, edges), so
/// exported matrices are bit-exact across platforms.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"
#include "hypergraph.hpp"

namespace edgecode {

inline constexpr unsigned long long kDefaultMaxPoints = 10'000'000ULL;

/// (q-1)^s with an overflow/limit check.
inline unsigned long long torus_size(unsigned q, int s, unsigned long long max_points = kDefaultMaxPoints) {
    unsigned long long n = 1;
    for (int i = 0; i < s; ++i) {
        n *= (q - 1);
        if (n > max_points)
            throw TooLarge("torus needs (q-1)^" + std::to_string(s) + " points, exceeding the limit of " +
                           std::to_string(max_points));
    }
    return n;
}

/// Coordinates of torus point `index` (coordinate 1 most significant).
inline std::vector<Elem> torus_point(unsigned q, int s, unsigned long long index) {
    std::vector<Elem> coords(s);
    for (int k = s - 1; k >= 0; --k) {
        coords[k] = static_cast<Elem>(index % (q - 1) + 1);
        index /= (q - 1);
    }
    return coords;
}

inline std::vector<std::vector<Elem>> enumerate_torus(const Field& f, int s,
                                                      unsigned long long max_points = kDefaultMaxPoints) {
    if (s < 1) throw BadParams("need s >= 1");
    const auto n = torus_size(f.q(), s, max_points);
    std::vector<std::vector<Elem>> pts;
    pts.reserve(n);
    for (unsigned long long i = 0; i < n; ++i) pts.push_back(torus_point(f.q(), s, i));
    return pts;
}

/// A polynomial in the span of a hypergraph's edge monomials,
/// f = sum coeffs[i] * prod_{j in edges[i]} t_j.
struct EdgePolynomial {
    Hypergraph hypergraph;
    std::vector<Elem> coeffs;

    /// Max edge size among edges with nonzero coefficient; 0 for the zero polynomial.
    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) d = std::max(d, static_cast<int>(hypergraph.edges[i].size()));
        return d;
    }
};

inline Elem evaluate(const Field& f, const EdgePolynomial& poly, const std::vector<Elem>& point) {
    Elem acc = 0;
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
        if (poly.coeffs[i] == 0) continue;
        Elem m = poly.coeffs[i];
        for (int v : poly.hypergraph.edges[i]) m = f.mul(m, point[v - 1]);
        acc = f.add(acc, m);
    }
    return acc;
}

class EdgeCode {
  public:
    /// Builds the generator matrix of the edge code: row i is edge monomial i
    /// evaluated over the ordered torus. Requires q >= 3 and at least one edge.
    EdgeCode(const Field& field, Hypergraph h, unsigned long long max_points = kDefaultMaxPoints)
        : field_(&field), h_(std::move(h)) {
        if (field.q() < 3) throw DegenerateField("edge codes require q >= 3");
        if (h_.edges.empty()) throw BadParams("hypergraph has no edges");
        length_ = torus_size(field.q(), h_.s, max_points);
        const auto n = h_.edges.size();
        rows_.assign(n, std::vector<Elem>(length_));
        for (unsigned long long c = 0; c < length_; ++c) {
            auto coords = torus_point(field.q(), h_.s, c);
            for (std::size_t i = 0; i < n; ++i) {
                Elem m = 1;
                for (int v : h_.edges[i]) m = field.mul(m, coords[v - 1]);
                rows_[i][c] = m;
            }
        }
        rank_ = compute_rank();
    }

    const Field& field() const { return *field_; }
    const Hypergraph& hypergraph() const { return h_; }
    unsigned long long length() const { return length_; }
    std::size_t dimension_bound() const { return rows_.size(); } // |E|
    unsigned rank() const { return rank_; }
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }

    /// codeword = lambda * G
    std::vector<Elem> encode(const std::vector<Elem>& lambda) const {
        if (lambda.size() != rows_.size()) throw LengthMismatch("coefficient vector length must equal |E|");
        std::vector<Elem> word(length_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (lambda[i] == 0) continue;
            for (unsigned long long c = 0; c < length_; ++c)
                word[c] = field_->add(word[c], field_->mul(lambda[i], rows_[i][c]));
        }
        return word;
    }

    unsigned long long weight(const std::vector<Elem>& lambda) const {
        if (lambda.size() != rows_.size()) throw LengthMismatch("coefficient vector length must equal |E|");
        unsigned long long w = 0;
        for (unsigned long long c = 0; c < length_; ++c) {
            Elem acc = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (lambda[i] != 0) acc = field_->add(acc, field_->mul(lambda[i], rows_[i][c]));
            if (acc != 0) ++w;
        }
        return w;
    }

    /// |V_T(f)| for f = sum lambda_i f_i.
    unsigned long long count_zeros(const std::vector<Elem>& lambda) const {
        return length_ - weight(lambda);
    }

    /// Gram[i][j] = sum_P f_i(P) f_j(P) in GF(q).
    std::vector<std::vector<Elem>> gram_matrix() const {
        const auto n = rows_.size();
        std::vector<std::vector<Elem>> g(n, std::vector<Elem>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Elem acc = 0;
                for (unsigned long long c = 0; c < length_; ++c)
                    acc = field_->add(acc, field_->mul(rows_[i][c], rows_[j][c]));
                g[i][j] = g[j][i] = acc;
            }
        return g;
    }

    bool is_self_orthogonal() const {
        for (const auto& row : gram_matrix())
            for (Elem x : row)
                if (x != 0) return false;
        return true;
    }

    std::string export_csv() const {
        std::ostringstream os;
        for (const auto& row : rows_) {
            for (unsigned long long c = 0; c < length_; ++c) {
                if (c) os << ',';
                os << row[c];
            }
            os << '\n';
        }
        return os.str();
    }

    nlohmann::json export_json() const {
        nlohmann::json j;
        j["q"] = field_->q();
        j["s"] = h_.s;
        j["edges"] = h_.edges;
        j["point_order"] = "lex-canonical";
        j["matrix"] = rows_;
        return j;
    }

  private:
    unsigned compute_rank() const {
        auto m = rows_;
        const auto n = m.size();
        unsigned rank = 0;
        unsigned long long col = 0;
        for (std::size_t r = 0; r < n && col < length_; ++col) {
            std::size_t piv = r;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[r], m[piv]);
            const Elem inv = field_->inv(m[r][col]);
            for (unsigned long long c = col; c < length_; ++c) m[r][c] = field_->mul(m[r][c], inv);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || m[i][col] == 0) continue;
                const Elem factor = m[i][col];
                for (unsigned long long c = col; c < length_; ++c)
                    m[i][c] = field_->sub(m[i][c], field_->mul(factor, m[r][c]));
            }
            ++r;
            ++rank;
        }
        return rank;
    }

    const Field* field_;
    Hypergraph h_;
    unsigned long long length_ = 0;
    unsigned rank_ = 0;
    std::vector<std::vector<Elem>> rows_;
};

inline EdgeCode generator_matrix(const Hypergraph& h, const Field& f,
                                 unsigned long long max_points = kDefaultMaxPoints) {
    return EdgeCode(f, h, max_points);
}

} // namespace edgecode

#endif
