#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncnewton/biortho.hpp"
#include "ncnewton/diffcalc.hpp"
#include "ncnewton/matrix.hpp"
#include "ncnewton/polynomial.hpp"
#include "ncnewton/ring.hpp"

namespace ncnewton {

using json = nlohmann::json;

/// Ring tag of a serialized matrix: either rationals or d×d blocks.
struct RingSpec {
    bool is_block = false;
    int block_dim = 0;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using MatrixVariant = std::variant<Matrix<Rational>, Matrix<BlockElement>>;

// ---- parsing ---------------------------------------------------------------

inline Rational rational_from_json(const json& j, const std::string& loc) {
    if (!j.is_string()) throw SchemaError(loc, "expected a rational string \"p\" or \"p/q\"");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const ParseError& e) {
        throw SchemaError(loc, e.what());
    }
}

inline BlockElement block_from_json(const json& j, int dim, const std::string& loc) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SchemaError(loc, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                   " array of rational strings");
    BlockElement b(dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw SchemaError(loc + "/" + std::to_string(r), "expected a block row of length " +
                                                                 std::to_string(dim));
        for (int c = 0; c < dim; ++c)
            b.at(r, c) = rational_from_json(row[static_cast<size_t>(c)],
                                            loc + "/" + std::to_string(r) + "/" + std::to_string(c));
    }
    return b;
}

inline RingSpec ring_spec_from_json(const json& j, const std::string& loc) {
    if (j.is_string()) {
        if (j.get<std::string>() != "rational")
            throw SchemaError(loc, "unknown ring \"" + j.get<std::string>() + "\"");
        return {};
    }
    if (j.is_object() && j.size() == 1 && j.contains("block")) {
        const json& d = j["block"];
        if (!d.is_number_integer() || d.get<int>() < 1)
            throw SchemaError(loc + "/block", "block dimension must be a positive integer");
        return {true, d.get<int>()};
    }
    throw SchemaError(loc, "ring must be \"rational\" or {\"block\": d}");
}

inline RingElement entry_from_json(const json& j, const RingSpec& ring, const std::string& loc) {
    if (ring.is_block) return block_from_json(j, ring.block_dim, loc);
    return rational_from_json(j, loc);
}

template <Ring S>
std::vector<std::vector<S>> cells_from_json(const json& rows, const RingSpec& ring,
                                            const std::string& loc);

namespace detail {
template <Ring S>
S cell_from_json(const json& j, const RingSpec& ring, const std::string& loc);

template <>
inline Rational cell_from_json<Rational>(const json& j, const RingSpec&, const std::string& loc) {
    return rational_from_json(j, loc);
}
template <>
inline BlockElement cell_from_json<BlockElement>(const json& j, const RingSpec& ring,
                                                 const std::string& loc) {
    return block_from_json(j, ring.block_dim, loc);
}

template <Ring S>
Matrix<S> matrix_from_rows(const json& rows, const RingSpec& ring, const std::string& loc) {
    if (!rows.is_array() || rows.empty())
        throw SchemaError(loc, "\"rows\" must be a nonempty array of rows");
    const int n_rows = static_cast<int>(rows.size());
    const int n_cols = rows[0].is_array() ? static_cast<int>(rows[0].size()) : -1;
    if (n_cols <= 0) throw SchemaError(loc + "/0", "matrix rows must be nonempty arrays");
    std::vector<S> cells;
    cells.reserve(static_cast<size_t>(n_rows) * n_cols);
    for (int r = 0; r < n_rows; ++r) {
        const json& row = rows[static_cast<size_t>(r)];
        const std::string row_loc = loc + "/" + std::to_string(r);
        if (!row.is_array() || static_cast<int>(row.size()) != n_cols)
            throw SchemaError(row_loc, "matrix rows must all have length " + std::to_string(n_cols));
        for (int c = 0; c < n_cols; ++c)
            cells.push_back(
                cell_from_json<S>(row[static_cast<size_t>(c)], ring, row_loc + "/" + std::to_string(c)));
    }
    Matrix<S> m(n_rows, n_cols, cells.front());
    size_t idx = 0;
    for (int r = 0; r < n_rows; ++r)
        for (int c = 0; c < n_cols; ++c) m.at(r, c) = std::move(cells[idx++]);
    return m;
}
}  // namespace detail

/// Parses {"ring": ..., "rows": [[...], ...]}.
inline MatrixVariant matrix_from_json(const json& j, const std::string& loc) {
    if (!j.is_object()) throw SchemaError(loc, "expected a matrix object");
    for (const auto& [key, _] : j.items())
        if (key != "ring" && key != "rows")
            throw SchemaError(loc + "/" + key, "unknown key in matrix object");
    if (!j.contains("ring")) throw SchemaError(loc, "matrix object is missing \"ring\"");
    if (!j.contains("rows")) throw SchemaError(loc, "matrix object is missing \"rows\"");
    RingSpec ring = ring_spec_from_json(j["ring"], loc + "/ring");
    if (ring.is_block)
        return detail::matrix_from_rows<BlockElement>(j["rows"], ring, loc + "/rows");
    return detail::matrix_from_rows<Rational>(j["rows"], ring, loc + "/rows");
}

template <Ring S>
std::vector<S> entries_from_json(const json& j, const RingSpec& ring, const std::string& loc) {
    if (!j.is_array() || j.empty())
        throw SchemaError(loc, "expected a nonempty array of ring entries");
    std::vector<S> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(detail::cell_from_json<S>(j[i], ring, loc + "/" + std::to_string(i)));
    return out;
}

inline std::vector<Rational> rationals_from_json(const json& j, const std::string& loc) {
    return entries_from_json<Rational>(j, RingSpec{}, loc);
}

inline Polynomial polynomial_from_json(const json& j, const std::string& loc) {
    if (!j.is_array()) throw SchemaError(loc, "expected an array of rational coefficients");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from_json(j[i], loc + "/" + std::to_string(i)));
    return Polynomial(std::move(c));
}

// ---- serialization ---------------------------------------------------------

inline json to_json(const Rational& r) { return json(r.to_string()); }

inline json to_json(const BlockElement& b) {
    json rows = json::array();
    for (int r = 0; r < b.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.dim(); ++c) row.push_back(b.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const RingElement& e) {
    return std::visit([](const auto& x) { return to_json(x); }, e);
}

inline json ring_spec_to_json(const RingSpec& ring) {
    if (ring.is_block) return json{{"block", ring.block_dim}};
    return json("rational");
}

template <Ring S>
RingSpec ring_spec_of(const Matrix<S>& m);

template <>
inline RingSpec ring_spec_of<Rational>(const Matrix<Rational>&) { return {}; }
template <>
inline RingSpec ring_spec_of<BlockElement>(const Matrix<BlockElement>& m) {
    return {true, m.empty() ? 1 : m.at(0, 0).dim()};
}

template <Ring S>
json to_json(const Matrix<S>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", ring_spec_to_json(ring_spec_of(m))}, {"rows", std::move(rows)}};
}

inline json to_json(const MatrixVariant& m) {
    return std::visit([](const auto& x) { return to_json(x); }, m);
}

template <Ring S>
json to_json(const BiorthoResult<S>& b) {
    json pivots = json::array();
    for (const auto& p : b.pivots) pivots.push_back(to_json(p));
    return json{{"a", to_json(b.a)}, {"c", to_json(b.c)}, {"order", b.order},
                {"pivots", std::move(pivots)}};
}

inline json to_json(const Polynomial& p) {
    json c = json::array();
    for (const auto& x : p.coefficients()) c.push_back(x.to_string());
    return c;
}

/// Expansion terms as an array of [delta_right, pivot, delta_left] triples.
template <class FM, Ring S, class GM>
json to_json(const NewtonExpansion<FM, S, GM>& e) {
    json terms = json::array();
    for (const auto& t : e.terms)
        terms.push_back(json::array({to_json(t.delta_right), to_json(t.pivot), to_json(t.delta_left)}));
    return terms;
}

/// Canonical text form used everywhere a document leaves the library:
/// two-space indent, sorted keys (object storage is ordered), trailing
/// newline. Identical values serialize to identical bytes.
inline std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ncnewton
