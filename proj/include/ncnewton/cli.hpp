#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncnewton/applications.hpp"
#include "ncnewton/json_io.hpp"

namespace ncnewton::cli {

/// Options shared by every command; each command reads the subset it knows.
struct JobOptions {
    std::string method = "elimination";    // invert: elimination | summation
    std::string algorithm = "recurrence";  // diffderiv: recurrence | quasidet | biortho
    std::optional<int> order;
    std::optional<IndexSequence> cols;
    std::optional<IndexSequence> rows;
    std::optional<int> decimal;
};

struct JobOutcome {
    int exit_code = 0;
    std::string output;      // canonical JSON result text, empty on failure
    std::string diagnostic;  // canonical JSON diagnostic text, empty on success
};

namespace detail {

inline bool looks_like_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return ncnewton::detail::is_integer_token(s);
    return ncnewton::detail::is_integer_token(s.substr(0, slash)) &&
           ncnewton::detail::is_integer_token(s.substr(slash + 1));
}

/// Recursively replaces every rational string with its decimal approximation.
inline json decimalize(const json& j, int digits) {
    if (j.is_string() && looks_like_rational(j.get<std::string>()))
        return json(decimal_string(Rational::from_string(j.get<std::string>()), digits));
    if (j.is_array()) {
        json out = json::array();
        for (const auto& x : j) out.push_back(decimalize(x, digits));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [k, v] : j.items()) out[k] = decimalize(v, digits);
        return out;
    }
    return j;
}

inline int default_order(int extent, const std::optional<int>& order, const std::string& what) {
    int n = order.value_or(extent - 1);
    if (n < 0 || n + 1 > extent)
        throw SchemaError("options/order", what + ": order must lie in [0, " +
                                               std::to_string(extent - 1) + "]");
    return n;
}

inline json run_invert(const json& payload, const JobOptions& opts) {
    MatrixVariant m = matrix_from_json(payload, "input");
    return std::visit(
        [&](const auto& d) -> json {
            if (!d.is_square()) throw SchemaError("input/rows", "invert needs a square matrix");
            int n = default_order(d.rows(), opts.order, "invert");
            if (opts.method == "elimination") return to_json(invert(leading(d, n + 1)));
            if (opts.method == "summation") return to_json(inverse_by_summation(d, n));
            throw SchemaError("options/method",
                              "unknown method \"" + opts.method + "\" (elimination | summation)");
        },
        m);
}

inline json run_biortho(const json& payload, const JobOptions& opts) {
    MatrixVariant m = matrix_from_json(payload, "input");
    if (opts.cols.has_value() != opts.rows.has_value())
        throw SchemaError("options", "permuted biorthogonalization needs both cols and rows");
    return std::visit(
        [&](const auto& d) -> json {
            if (opts.cols) {
                if (opts.order)
                    throw SchemaError("options/order", "order conflicts with explicit sequences");
                return to_json(biorthogonalize_permuted(d, *opts.cols, *opts.rows));
            }
            int extent = d.rows() < d.cols() ? d.rows() : d.cols();
            return to_json(biorthogonalize(d, default_order(extent, opts.order, "biortho")));
        },
        m);
}

inline DiffAlgorithm algorithm_from_name(const std::string& name) {
    if (name == "recurrence") return DiffAlgorithm::recurrence;
    if (name == "quasidet") return DiffAlgorithm::quasidet;
    if (name == "biortho") return DiffAlgorithm::biortho;
    throw SchemaError("options/algorithm",
                      "unknown algorithm \"" + name + "\" (recurrence | quasidet | biortho)");
}

inline json run_diffderiv(const json& payload, const JobOptions& opts) {
    if (!payload.is_object()) throw SchemaError("input", "expected an object");
    for (const auto& [key, _] : payload.items())
        if (key != "matrix" && key != "f" && key != "g")
            throw SchemaError("input/" + key, "unknown key in diffderiv payload");
    if (!payload.contains("matrix")) throw SchemaError("input", "missing \"matrix\"");
    const bool has_f = payload.contains("f");
    const bool has_g = payload.contains("g");
    if (has_f == has_g)
        throw SchemaError("input", "provide exactly one of \"f\" (right) or \"g\" (left)");
    if (!opts.cols || !opts.rows)
        throw SchemaError("options", "diffderiv needs both cols and rows sequences");
    DiffAlgorithm alg = algorithm_from_name(opts.algorithm);

    MatrixVariant m = matrix_from_json(payload["matrix"], "input/matrix");
    return std::visit(
        [&](const auto& d) -> json {
            using S = std::decay_t<decltype(d.at(0, 0))>;
            RingSpec ring = ring_spec_of(d);
            if (has_f) {
                auto f = entries_from_json<S>(payload["f"], ring, "input/f");
                return json{{"value", to_json(delta_right(f, d, *opts.cols, *opts.rows, alg))}};
            }
            auto g = entries_from_json<S>(payload["g"], ring, "input/g");
            return json{{"value", to_json(delta_left(g, d, *opts.cols, *opts.rows, alg))}};
        },
        m);
}

inline json interpolation_to_json(const InterpolationResult& r) {
    return json{{"expansion", to_json(r.expansion)}, {"polynomial", to_json(r.polynomial)}};
}

inline json run_newton(const json& payload, const JobOptions& opts) {
    if (!payload.is_object()) throw SchemaError("input", "expected an object");
    for (const auto& [key, _] : payload.items())
        if (key != "nodes" && key != "values")
            throw SchemaError("input/" + key, "unknown key in newton payload");
    if (!payload.contains("nodes") || !payload.contains("values"))
        throw SchemaError("input", "newton payload needs \"nodes\" and \"values\"");
    auto nodes = rationals_from_json(payload["nodes"], "input/nodes");
    auto values = rationals_from_json(payload["values"], "input/values");
    int n = default_order(static_cast<int>(nodes.size()), opts.order, "newton");
    return interpolation_to_json(newton_interpolate(nodes, values, n));
}

inline json run_taylor(const json& payload, const JobOptions& opts) {
    if (!payload.is_object()) throw SchemaError("input", "expected an object");
    for (const auto& [key, _] : payload.items())
        if (key != "x0" && key != "derivs")
            throw SchemaError("input/" + key, "unknown key in taylor payload");
    if (!payload.contains("x0") || !payload.contains("derivs"))
        throw SchemaError("input", "taylor payload needs \"x0\" and \"derivs\"");
    Rational x0 = rational_from_json(payload["x0"], "input/x0");
    auto derivs = rationals_from_json(payload["derivs"], "input/derivs");
    int n = default_order(static_cast<int>(derivs.size()), opts.order, "taylor");
    return interpolation_to_json(taylor_interpolate(x0, derivs, n));
}

inline json run_gram(const json& payload, const JobOptions& opts) {
    MatrixVariant m = matrix_from_json(payload, "input");
    const auto* g = std::get_if<Matrix<Rational>>(&m);
    if (!g) throw SchemaError("input/ring", "gram needs a matrix over the rational ring");
    int n = default_order(g->rows() < g->cols() ? g->rows() : g->cols(), opts.order, "gram");
    return to_json(gram_schmidt(*g, n));
}

inline json dispatch(const std::string& command, const json& payload, const JobOptions& opts) {
    if (command == "invert") return run_invert(payload, opts);
    if (command == "biortho") return run_biortho(payload, opts);
    if (command == "diffderiv") return run_diffderiv(payload, opts);
    if (command == "newton") return run_newton(payload, opts);
    if (command == "taylor") return run_taylor(payload, opts);
    if (command == "gram") return run_gram(payload, opts);
    throw SchemaError("command", "unknown command \"" + command + "\"");
}

inline JobOutcome failure(int code, const std::string& error_code, const std::string& location,
                          const std::string& message, std::optional<int> order = {}) {
    json diag{{"code", error_code}, {"location", location}, {"message", message}};
    if (order) diag["order"] = *order;
    return {code, "", canonical_text(diag)};
}

}  // namespace detail

/// Runs one command against raw input text. Never throws: every error is
/// mapped to an exit code (2 parse/schema, 3 non-generic, 4 domain,
/// 1 internal) with a structured diagnostic; identical requests produce
/// byte-identical outcomes.
inline JobOutcome run_job(const std::string& command, const std::string& input_text,
                          const JobOptions& opts) {
    using detail::failure;
    try {
        json payload;
        try {
            payload = json::parse(input_text);
        } catch (const json::parse_error& e) {
            return failure(2, "ParseError", "input", e.what());
        }
        json result = detail::dispatch(command, payload, opts);
        if (opts.decimal) {
            if (*opts.decimal < 1 || *opts.decimal > 1000)
                throw SchemaError("options/decimal", "decimal digits must lie in [1, 1000]");
            result = json{{"approx", detail::decimalize(result, *opts.decimal)},
                          {"decimal_digits", *opts.decimal},
                          {"exact", std::move(result)}};
        }
        return {0, canonical_text(result), ""};
    } catch (const ParseError& e) {
        return failure(2, "ParseError", "input", e.what());
    } catch (const SchemaError& e) {
        return failure(2, "SchemaError", e.location(), e.what());
    } catch (const NonGenericError& e) {
        return failure(3, "NonGeneric", command, e.what(), e.order());
    } catch (const DuplicateNodeError& e) {
        return failure(4, "DuplicateNode", command, e.what());
    } catch (const DuplicateIndexError& e) {
        return failure(4, "DuplicateIndex", command, e.what());
    } catch (const IndexOutOfBoundsError& e) {
        return failure(4, "IndexOutOfBounds", command, e.what());
    } catch (const NotPositiveDefiniteError& e) {
        return failure(4, "NotPositiveDefinite", command, e.what());
    } catch (const VariantMismatchError& e) {
        return failure(4, "VariantMismatch", command, e.what());
    } catch (const NotInvertibleError& e) {
        return failure(4, "NotInvertible", command, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(2, "SchemaError", command, e.what());
    } catch (const std::exception& e) {
        return failure(1, "InternalError", command, e.what());
    }
}

}  // namespace ncnewton::cli
