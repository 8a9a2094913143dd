#include "hopfforge/serialization.hpp"

#include <cstdio>
#include <limits>

namespace hopfforge {

Json integer_to_json(const mpz_class& z)
{
    if (mpz_class(std::numeric_limits<long>::min()) <= z && z <= mpz_class(std::numeric_limits<long>::max()))
        return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class z;
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || z.set_str(s, 10) != 0)
            throw FormatError("invalid integer string: " + s);
        return z;
    }
    throw FormatError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json::array({integer_to_json(q.numerator()), integer_to_json(q.denominator())}); }

Rational rational_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw FormatError("expected [num, den], got " + j.dump());
    mpz_class den = integer_from_json(j[1]);
    if (den == 0)
        throw FormatError("zero denominator");
    return Rational::from_parts(integer_from_json(j[0]), den);
}

void put_rational(Json& obj, const Rational& q)
{
    obj["num"] = integer_to_json(q.numerator());
    obj["den"] = integer_to_json(q.denominator());
}

Rational get_rational(const Json& obj)
{
    if (!obj.is_object() || !obj.contains("num") || !obj.contains("den"))
        throw FormatError("expected num/den fields in " + obj.dump());
    mpz_class den = integer_from_json(obj["den"]);
    if (den == 0)
        throw FormatError("zero denominator");
    return Rational::from_parts(integer_from_json(obj["num"]), den);
}

std::string fingerprint(const Json& j)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string dump_file(const Json& j) { return j.dump(2) + "\n"; }

Json parse_file_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("JSON parse error: ") + e.what());
    }
}

} // namespace hopfforge
