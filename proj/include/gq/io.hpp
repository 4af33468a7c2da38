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

// JSON, alist and dense-text serialisation. Fields are written as their
// modulus bit pattern, elements as integer codes.

#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gq/gates.hpp"
#include "gq/q2b.hpp"

namespace gq {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json matrix_json(const FqMatrix &m) {
    Json rows = Json::array();
    for (const auto &r : m.row_list()) rows.push_back(r);
    return rows;
}

inline Json bit_matrix_json(const BitMatrix &m) {
    Json rows = Json::array();
    for (const auto &r : m.row_list()) {
        std::vector<int> bits(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) bits[i] = r.get(i);
        rows.push_back(bits);
    }
    return rows;
}

template <class T>
T json_get(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, std::string("bad value for '") + key + "': " + e.what());
    }
}

inline FqMatrix matrix_from_json(const Field &f, std::size_t n, const Json &rows) {
    if (!rows.is_array()) fail(ErrorKind::ParseError, "matrix must be a list of rows");
    FqMatrix m(f, n);
    for (const auto &r : rows) {
        FqVector v;
        try {
            v = r.get<FqVector>();
        } catch (const nlohmann::json::exception &e) {
            fail(ErrorKind::ParseError, std::string("bad matrix row: ") + e.what());
        }
        m.push_row(std::move(v));
    }
    return m;
}

/// Row length of the first non-empty matrix among the given keys.
inline std::size_t infer_length(const Json &j, std::initializer_list<const char *> keys) {
    if (j.contains("n")) return json_get<std::size_t>(j, "n");
    for (auto k : keys) {
        if (j.contains(k) && j.at(k).is_array() && !j.at(k).empty()) return j.at(k).at(0).size();
    }
    fail(ErrorKind::ParseError, "cannot infer the qudit count; add an 'n' field");
}

}  // namespace detail

inline Field field_from_json(const Json &j) {
    auto modulus = detail::json_get<std::uint64_t>(j, "modulus");
    Field f = make_field(PolyOverF2{modulus});
    if (j.contains("q") && detail::json_get<std::uint64_t>(j, "q") != f.order()) {
        fail(ErrorKind::ParseError, "q does not match the modulus degree");
    }
    return f;
}

inline Json to_json(const FieldBasis &b) { return b.elements(); }

inline Json to_json(const CssTableau &t) {
    return Json{{"q", t.field().order()},
                {"modulus", t.field().modulus().bits},
                {"n", t.num_qudits()},
                {"xrows", detail::matrix_json(t.xrows())},
                {"zrows", detail::matrix_json(t.zrows())},
                {"xsyn", t.xsyn()},
                {"zsyn", t.zsyn()}};
}

inline CssTableau tableau_from_json(const Json &j) {
    Field f = field_from_json(j);
    std::size_t n = detail::infer_length(j, {"xrows", "zrows"});
    return new_tableau(detail::matrix_from_json(f, n, j.value("xrows", Json::array())),
                       detail::matrix_from_json(f, n, j.value("zrows", Json::array())),
                       j.value("xsyn", FqVector{}), j.value("zsyn", FqVector{}));
}

inline Json to_json(const CssCode &c) {
    return Json{{"q", c.field().order()},
                {"modulus", c.field().modulus().bits},
                {"n", c.length()},
                {"gx", detail::matrix_json(c.gx())},
                {"gz", detail::matrix_json(c.gz())}};
}

inline Json to_json(const QrsCode &c) {
    Json j = to_json(c.css());
    j["qrs"] = Json{{"k1", c.k1()}, {"k2", c.k2()}, {"alpha", c.x_code().alpha()}, {"v", c.x_code().v()}};
    return j;
}

inline CssCode code_from_json(const Json &j) {
    Field f = field_from_json(j);
    std::size_t n = detail::infer_length(j, {"gx", "gz"});
    return new_css(detail::matrix_from_json(f, n, j.value("gx", Json::array())),
                   detail::matrix_from_json(f, n, j.value("gz", Json::array())));
}

/// The QRS description attached to a code file, if present.
inline std::optional<QrsCode> qrs_from_json(const Json &j) {
    if (!j.contains("qrs")) return std::nullopt;
    Field f = field_from_json(j);
    const Json &r = j.at("qrs");
    auto alpha = detail::json_get<std::vector<Code>>(r, "alpha");
    return make_qrs(f, alpha.size(), detail::json_get<std::size_t>(r, "k1"), detail::json_get<std::size_t>(r, "k2"),
                    alpha, detail::json_get<std::vector<Code>>(r, "v"));
}

inline Json to_json(const CodeParams &p) {
    auto opt = [](const std::optional<std::size_t> &v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"n", p.n},
                {"k", p.k},
                {"d_x", opt(p.d_x)},
                {"d_z", opt(p.d_z)},
                {"d", opt(p.d)},
                {"distance_status", std::string(to_string(p.status))}};
}

inline Json to_json(const BasisAssignment &a) {
    Json out = Json::array();
    for (const auto &b : a.bases()) out.push_back(to_json(b));
    return out;
}

inline Json to_json(const QubitCssCode &c) {
    return Json{{"num_qubits", c.num_qubits}, {"hx", detail::bit_matrix_json(c.hx)}, {"hz", detail::bit_matrix_json(c.hz)}};
}

inline Json bundle_json(const CssCode &qudit, const BasisAssignment &a, const QubitCssCode &qubit) {
    return Json{{"qudit_code", to_json(qudit)},
                {"basis_assignment", to_json(a)},
                {"hx", detail::bit_matrix_json(qubit.hx)},
                {"hz", detail::bit_matrix_json(qubit.hz)}};
}

inline Json to_json(const HierarchyReport &r) {
    Json j{{"gate", r.gate}};
    j["level"] = r.level ? Json(*r.level) : Json("above max");
    j["max_level"] = r.max_level;
    j["identity"] = r.identity;
    if (r.witness) {
        j["witness"] = Json{{"site", r.witness->site},
                            {"type", std::string(to_string(r.witness->type))},
                            {"exponent", r.witness->exponent}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

/// MacKay alist: "N M", max column/row degree, per-column and per-row degrees,
/// then 1-based index lists padded with zeros. N counts columns.
inline std::string to_alist(const BitMatrix &h) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::vector<std::vector<std::size_t>> cols(n), rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (h.get(i, j)) {
                rows[i].push_back(j + 1);
                cols[j].push_back(i + 1);
            }
        }
    }
    std::size_t max_col = 0, max_row = 0;
    for (const auto &c : cols) max_col = std::max(max_col, c.size());
    for (const auto &r : rows) max_row = std::max(max_row, r.size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::size_t> &v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i) {
            if (i) out << ' ';
            out << (i < v.size() ? v[i] : 0);
        }
        out << '\n';
    };
    out << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
    std::vector<std::size_t> col_deg, row_deg;
    for (const auto &c : cols) col_deg.push_back(c.size());
    for (const auto &r : rows) row_deg.push_back(r.size());
    line(col_deg, n);
    line(row_deg, m);
    for (const auto &c : cols) line(c, max_col);
    for (const auto &r : rows) line(r, max_row);
    return out.str();
}

inline BitMatrix from_alist(const std::string &text) {
    std::istringstream in(text);
    std::size_t n = 0, m = 0, max_col = 0, max_row = 0;
    if (!(in >> n >> m >> max_col >> max_row)) fail(ErrorKind::ParseError, "bad alist header");
    std::vector<std::size_t> col_deg(n), row_deg(m);
    for (auto &d : col_deg) in >> d;
    for (auto &d : row_deg) in >> d;
    BitMatrix h(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < max_col; ++k) {
            std::size_t i = 0;
            if (!(in >> i)) fail(ErrorKind::ParseError, "truncated alist");
            if (i > m) fail(ErrorKind::ParseError, "alist row index out of range");
            if (i > 0) h.set(i - 1, j, true);
        }
    }
    return h;
}

/// One line of 0/1 characters per row.
inline std::string to_dense_text(const BitMatrix &h) {
    std::string out;
    for (const auto &r : h.row_list()) out += r.to_string() + '\n';
    return out;
}

}  // namespace gq
