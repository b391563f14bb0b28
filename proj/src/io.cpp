#include "lueq/io.hpp"

#include <cmath>
#include <cstdio>

#include "../vendor/json.hpp"

namespace lueq {

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

Complex parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         "complex values must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, int rows, int cols, const char* field) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         std::string(field) + " must be an array of " + std::to_string(rows) +
                             " rows");
    }
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ParseError(ParseError::Kind::MalformedSyntax,
                             std::string(field) + " row " + std::to_string(r) + " must have " +
                                 std::to_string(cols) + " entries");
        }
        for (int c = 0; c < cols; ++c) {
            m(r, c) = parse_complex(row[c]);
        }
    }
    return m;
}

const json& require(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         std::string("missing field \"") + field + "\"");
    }
    return *it;
}

double require_number(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number()) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         std::string("field \"") + field + "\" must be a number");
    }
    return v.get<double>();
}

int require_int(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number_integer()) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         std::string("field \"") + field + "\" must be an integer");
    }
    return v.get<int>();
}

std::pair<int, int> require_dims(const json& j) {
    const json& v = require(j, "dims");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer() || v[0].get<int>() < 1 || v[1].get<int>() < 1) {
        throw ParseError(ParseError::Kind::MalformedSyntax,
                         "\"dims\" must be [M, N] with positive integers");
    }
    return {v[0].get<int>(), v[1].get<int>()};
}

}  // namespace

StateValue parse_state_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseError::Kind::MalformedSyntax, e.what(),
                         line_of_byte(text, e.byte));
    }
    if (!j.is_object()) {
        throw ParseError(ParseError::Kind::MalformedSyntax, "state file must be a JSON object");
    }
    const json& kind_field = require(j, "kind");
    if (!kind_field.is_string()) {
        throw ParseError(ParseError::Kind::MalformedSyntax, "\"kind\" must be a string");
    }
    const std::string kind = kind_field.get<std::string>();

    try {
        if (kind == "sc2q") {
            return SCCoefficients::two_qubit(require_number(j, "c1"),
                                             parse_complex(require(j, "c2")),
                                             require_number(j, "c4"));
        }
        if (kind == "sc") {
            const int levels = require_int(j, "levels");
            const int parties = require_int(j, "parties");
            if (levels < 2 || parties < 2) {
                throw ParseError(ParseError::Kind::MalformedSyntax,
                                 "\"levels\" and \"parties\" must be at least 2");
            }
            return SCCoefficients::validate(parse_matrix(require(j, "c"), levels, levels, "c"),
                                            parties);
        }
        if (kind == "density") {
            auto [m, n] = require_dims(j);
            return DensityMatrix::validate(
                parse_matrix(require(j, "matrix"), m * n, m * n, "matrix"),
                BipartiteDims{m, n});
        }
        if (kind == "pure") {
            auto [m, n] = require_dims(j);
            return PureState::from_coefficients(
                parse_matrix(require(j, "coeffs"), m, n, "coeffs"));
        }
    } catch (const ValidationError& e) {
        throw ParseError(ParseError::Kind::ValidationFailed,
                         e.invariant() + ": " + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(ParseError::Kind::ValidationFailed, e.what());
    }
    throw ParseError(ParseError::Kind::UnknownKind, "unknown state kind \"" + kind + "\"");
}

std::string serialize_state(const StateValue& state) {
    JsonWriter w;
    w.begin_object();
    if (const auto* sc = std::get_if<SCCoefficients>(&state)) {
        if (sc->two_qubit_form()) {
            w.key("kind").value("sc2q");
            w.key("c1").value(sc->c1());
            w.key("c2").value(sc->c2());
            w.key("c4").value(sc->c4());
        } else {
            w.key("kind").value("sc");
            w.key("levels").value(sc->levels());
            w.key("parties").value(sc->parties());
            w.key("c").begin_array();
            for (int r = 0; r < sc->levels(); ++r) {
                w.begin_array();
                for (int c = 0; c < sc->levels(); ++c) {
                    w.value(sc->coefficients()(r, c));
                }
                w.end_array();
            }
            w.end_array();
        }
    } else if (const auto* rho = std::get_if<DensityMatrix>(&state)) {
        const BipartiteDims dims = rho->dims();
        w.key("kind").value("density");
        w.key("dims").begin_array();
        w.value(dims.dim_a);
        w.value(dims.dim_b);
        w.end_array();
        w.key("matrix").begin_array();
        for (int r = 0; r < rho->dim(); ++r) {
            w.begin_array();
            for (int c = 0; c < rho->dim(); ++c) {
                w.value(rho->matrix()(r, c));
            }
            w.end_array();
        }
        w.end_array();
    } else {
        const auto& psi = std::get<PureState>(state);
        const BipartiteDims dims = psi.dims();
        w.key("kind").value("pure");
        w.key("dims").begin_array();
        w.value(dims.dim_a);
        w.value(dims.dim_b);
        w.end_array();
        w.key("coeffs").begin_array();
        for (int r = 0; r < dims.dim_a; ++r) {
            w.begin_array();
            for (int c = 0; c < dims.dim_b; ++c) {
                w.value(psi.coefficients()(r, c));
            }
            w.end_array();
        }
        w.end_array();
    }
    w.end_object();
    return w.str();
}

std::string JsonWriter::format_number(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    if (v == 0.0) v = 0.0;  // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_in_scope_.back()) {
        out_ += ',';
    }
    first_in_scope_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separator();
    append_string(k);
    out_ += ':';
    // the upcoming value belongs to this key: no comma before it
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_number(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
}

void JsonWriter::append_string(const std::string& v) {
    out_ += '"';
    for (char c : v) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            case '\r': out_ += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out_ += buf;
                } else {
                    out_ += c;
                }
        }
    }
    out_ += '"';
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    append_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(Complex v) {
    separator();
    out_ += '[';
    out_ += format_number(v.real());
    out_ += ',';
    out_ += format_number(v.imag());
    out_ += ']';
    return *this;
}

}  // namespace lueq
