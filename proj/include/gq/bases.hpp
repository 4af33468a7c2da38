// Copyright 2026 The galois-qudits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// F_2-bases of F_q, dual bases under the trace form, and decomposition maps.

#pragma once

#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "gq/bits.hpp"
#include "gq/gf2e.hpp"

namespace gq {

/// An ordered F_2-basis (eta_0, ..., eta_{s-1}) of F_q.
class FieldBasis {
   public:
    FieldBasis(Field field, std::vector<Code> elements) : field_(std::move(field)), elements_(std::move(elements)) {
        const unsigned s = field_.degree();
        if (elements_.size() != s) {
            fail(ErrorKind::DimensionMismatch, "a basis needs exactly s = " + std::to_string(s) + " elements");
        }
        // Column i of the change-of-basis matrix holds the bits of eta_i.
        BitMatrix a(s, s);
        for (unsigned i = 0; i < s; ++i) {
            if (!field_.contains(elements_[i])) fail(ErrorKind::DimensionMismatch, "basis element outside field");
            for (unsigned k = 0; k < s; ++k) a.set(k, i, (elements_[i] >> k) & 1u);
        }
        auto inv = a.inverse();
        if (!inv) fail(ErrorKind::RankDeficient, "basis elements are F_2-dependent");
        inverse_rows_.resize(s, 0);
        for (unsigned i = 0; i < s; ++i) {
            for (unsigned k = 0; k < s; ++k) {
                if (inv->get(i, k)) inverse_rows_[i] |= Code{1} << k;
            }
        }
    }

    const Field &field() const { return field_; }
    unsigned size() const { return field_.degree(); }
    const std::vector<Code> &elements() const { return elements_; }
    Code operator[](std::size_t i) const { return elements_[i]; }

    /// Coordinates of eta packed into an integer: bit i is the coefficient of eta_i.
    Code decompose_code(Code eta) const {
        Code out = 0;
        for (std::size_t i = 0; i < inverse_rows_.size(); ++i) {
            out |= static_cast<Code>(std::popcount(inverse_rows_[i] & eta) & 1) << i;
        }
        return out;
    }

    /// Inverse of decompose_code.
    Code recompose_code(Code coords) const {
        Code out = 0;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if ((coords >> i) & 1u) out ^= elements_[i];
        }
        return out;
    }

    friend bool operator==(const FieldBasis &a, const FieldBasis &b) {
        return a.field_ == b.field_ && a.elements_ == b.elements_;
    }

   private:
    Field field_;
    std::vector<Code> elements_;
    std::vector<Code> inverse_rows_;
};

/// Trace Gram matrix G_ij = tr(a_i b_j).
inline BitMatrix trace_gram(const FieldBasis &a, const FieldBasis &b) {
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "bases over different fields");
    const auto &f = a.field();
    BitMatrix g(a.size(), b.size());
    for (unsigned i = 0; i < a.size(); ++i) {
        for (unsigned j = 0; j < b.size(); ++j) g.set(i, j, f.trace(f.mul(a[i], b[j])) != 0);
    }
    return g;
}

inline bool is_identity(const BitMatrix &m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.get(i, j) != (i == j)) return false;
        }
    }
    return true;
}

inline bool is_self_dual(const FieldBasis &b) { return is_identity(trace_gram(b, b)); }

/// D_B: the coordinate vector of eta in B.
inline BitVector decompose(const FieldBasis &b, const Element &eta) {
    if (!(eta.field() == b.field())) fail(ErrorKind::FieldMismatch, "element and basis over different fields");
    Code c = b.decompose_code(eta.code());
    BitVector out(b.size());
    for (unsigned i = 0; i < b.size(); ++i) out.set(i, (c >> i) & 1u);
    return out;
}

inline Element recompose(const FieldBasis &b, const BitVector &coords) {
    if (coords.size() != b.size()) fail(ErrorKind::DimensionMismatch, "coordinate vector length differs from s");
    Code c = 0;
    for (unsigned i = 0; i < b.size(); ++i) {
        if (coords.get(i)) c |= Code{1} << i;
    }
    return b.field().element(b.recompose_code(c));
}

/// (1, alpha, ..., alpha^{s-1}).
inline FieldBasis polynomial_basis(const Field &f) {
    std::vector<Code> e(f.degree());
    for (unsigned i = 0; i < f.degree(); ++i) e[i] = Code{1} << i;
    return FieldBasis(f, std::move(e));
}

/// The unique B* with tr(eta_i mu_j) = delta_ij.
inline FieldBasis dual_basis(const FieldBasis &b) {
    const auto &f = b.field();
    const unsigned s = f.degree();
    // T_ik = tr(eta_i alpha^k); mu_j = sum_k M_jk alpha^k with M T^T = I.
    BitMatrix tt(s, s);
    for (unsigned i = 0; i < s; ++i) {
        for (unsigned k = 0; k < s; ++k) tt.set(k, i, f.trace(f.mul(b[i], Code{1} << k)) != 0);
    }
    auto m = tt.inverse();
    if (!m) fail(ErrorKind::Internal, "trace form degenerate");
    std::vector<Code> mu(s, 0);
    for (unsigned j = 0; j < s; ++j) {
        for (unsigned k = 0; k < s; ++k) {
            if (m->get(j, k)) mu[j] |= Code{1} << k;
        }
    }
    FieldBasis dual(f, std::move(mu));
    if (!is_identity(trace_gram(b, dual))) fail(ErrorKind::Internal, "dual basis failed the Gram check");
    return dual;
}

namespace detail {

inline bool in_f2_span(const std::vector<Code> &elems, Code target) {
    // XOR basis indexed by leading bit.
    std::array<Code, 32> by_lead{};
    auto reduce = [&](Code e) {
        for (int bit = 31; bit >= 0 && e != 0; --bit) {
            if (((e >> bit) & 1u) && by_lead[static_cast<std::size_t>(bit)] != 0) {
                e ^= by_lead[static_cast<std::size_t>(bit)];
            }
        }
        return e;
    };
    for (Code e : elems) {
        e = reduce(e);
        if (e != 0) by_lead[static_cast<std::size_t>(31 - std::countl_zero(e))] = e;
    }
    return reduce(target) == 0;
}

inline FieldBasis search_self_dual(const Field &f) {
    const unsigned s = f.degree();
    std::vector<Code> chosen;
    // Greedy in increasing code order. A partial orthonormal set S extends to a
    // full one iff S is complete or 1 is outside span(S): the trace form on
    // S-perp is then non-alternating, and such forms admit orthonormal bases.
    while (chosen.size() < s) {
        bool last = chosen.size() + 1 == s;
        Code pick = 0;
        for (Code x = 1; x < f.order(); ++x) {
            if (f.trace(f.mul(x, x)) != 1) continue;
            bool orthogonal = true;
            for (Code y : chosen) {
                if (f.trace(f.mul(x, y)) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (!orthogonal) continue;
            auto next = chosen;
            next.push_back(x);
            if (!last && in_f2_span(next, 1)) continue;
            pick = x;
            break;
        }
        if (pick == 0) fail(ErrorKind::Internal, "self-dual basis search exhausted");
        chosen.push_back(pick);
    }
    return FieldBasis(f, std::move(chosen));
}

}  // namespace detail

/// Lexicographically first self-dual basis (as an increasing tuple of codes),
/// cached per field.
inline FieldBasis find_self_dual(const Field &f) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<Code>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(f.modulus().bits);
        if (it != cache.end()) return FieldBasis(f, it->second);
    }
    FieldBasis b = detail::search_self_dual(f);
    if (!is_self_dual(b)) fail(ErrorKind::Internal, "self-dual search returned a non-self-dual basis");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(f.modulus().bits, b.elements());
    return b;
}

/// The i-th coordinate of eta in a self-dual basis, as tr(eta * eta_i).
inline Code component_by_trace(const FieldBasis &b, const Element &eta, std::size_t i) {
    if (!is_self_dual(b)) fail(ErrorKind::SelfDualRequired, "component_by_trace needs a self-dual basis");
    if (!(eta.field() == b.field())) fail(ErrorKind::FieldMismatch, "element and basis over different fields");
    if (i >= b.size()) fail(ErrorKind::DimensionMismatch, "component index out of range");
    return b.field().trace(b.field().mul(eta.code(), b[i]));
}

/// rho = sum_i t_i b_i*, the unique element with tr(b_i rho) = t_i.
inline Code recover_from_traces(const FieldBasis &b, const BitVector &traces) {
    if (traces.size() != b.size()) fail(ErrorKind::DimensionMismatch, "need one trace value per basis element");
    FieldBasis dual = dual_basis(b);
    Code rho = 0;
    for (unsigned i = 0; i < b.size(); ++i) {
        if (traces.get(i)) rho ^= dual[i];
    }
    return rho;
}

/// One basis per qudit, all over the same field.
class BasisAssignment {
   public:
    explicit BasisAssignment(std::vector<FieldBasis> bases) : bases_(std::move(bases)) {
        if (bases_.empty()) fail(ErrorKind::DimensionMismatch, "a basis assignment needs at least one qudit");
        for (const auto &b : bases_) {
            if (!(b.field() == bases_.front().field())) fail(ErrorKind::FieldMismatch, "bases over different fields");
        }
    }

    /// The same basis on each of n qudits.
    static BasisAssignment uniform(const FieldBasis &b, std::size_t n) {
        return BasisAssignment(std::vector<FieldBasis>(n, b));
    }

    const Field &field() const { return bases_.front().field(); }
    std::size_t size() const { return bases_.size(); }
    const FieldBasis &operator[](std::size_t i) const { return bases_[i]; }
    const std::vector<FieldBasis> &bases() const { return bases_; }

    /// The assignment of dual bases.
    BasisAssignment dual() const {
        std::vector<FieldBasis> d;
        for (const auto &b : bases_) d.push_back(dual_basis(b));
        return BasisAssignment(std::move(d));
    }

   private:
    std::vector<FieldBasis> bases_;
};

/// Uniformly random basis by rejection sampling.
template <class Rng>
FieldBasis random_basis(const Field &f, Rng &rng) {
    std::uniform_int_distribution<Code> dist(1, f.order() - 1);
    while (true) {
        std::vector<Code> e(f.degree());
        for (auto &x : e) x = dist(rng);
        bool independent = true;
        for (std::size_t i = 0; i < e.size() && independent; ++i) {
            std::vector<Code> prefix(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i));
            if (detail::in_f2_span(prefix, e[i])) independent = false;
        }
        if (independent) return FieldBasis(f, std::move(e));
    }
}

}  // namespace gq
