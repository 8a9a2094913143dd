#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hopfforge/rational.hpp"

namespace hopfforge {

using Json = nlohmann::json;

/// Thrown for malformed or incompatible input files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integers that fit in int64 are written as JSON numbers, larger ones as
/// decimal strings.
Json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const Json& j);

/// [num, den] pair.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Rational stored as {"num": .., "den": ..} fields of `obj`.
void put_rational(Json& obj, const Rational& q);
Rational get_rational(const Json& obj);

/// FNV-1a 64-bit of the compact dump (object keys are sorted), as 16 hex digits.
std::string fingerprint(const Json& j);

/// Pretty-printed dump with a trailing newline.
std::string dump_file(const Json& j);
Json parse_file_text(const std::string& text);

} // namespace hopfforge
