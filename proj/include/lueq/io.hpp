#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lueq/states.hpp"

namespace lueq {

using StateValue = std::variant<SCCoefficients, DensityMatrix, PureState>;

// Parses a UTF-8 JSON state file. Complex numbers are [re, im] pairs.
// Kinds:
//   "sc2q":    {"kind":"sc2q","c1":real,"c2":[re,im],"c4":real}
//   "sc":      {"kind":"sc","levels":n,"parties":m,"c":[[ [re,im],... ],...]}
//   "density": {"kind":"density","dims":[M,N],"matrix": row-major complex}
//   "pure":    {"kind":"pure","dims":[M,N],"coeffs": row-major complex}
// Throws ParseError: MalformedSyntax for bad JSON or schema, UnknownKind for
// an unrecognized kind, ValidationFailed when the state invariants reject
// the numbers.
StateValue parse_state_file(const std::string& text);

// Inverse of parse_state_file. Two-qubit two-party SC values serialize as
// "sc2q", other SC values as "sc".
std::string serialize_state(const StateValue& state);

// Minimal JSON emitter with deterministic bytes: keys keep insertion order,
// numbers print with 12 significant digits, non-finite numbers become the
// strings "inf", "-inf", "nan".
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(Complex v);  // [re, im]

    const std::string& str() const { return out_; }

    static std::string format_number(double v);

  private:
    void separator();
    void append_string(const std::string& v);

    std::string out_;
    std::vector<bool> first_in_scope_ = {true};
    bool pending_key_ = false;
};

}  // namespace lueq
