#include "uhsl2/serialize.hpp"

#include <json.hpp>
#include <limits>
#include <regex>
#include <sstream>

namespace uhsl2 {

using nlohmann::json;

std::string to_json(const Element& f, int indent) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"m", {m.x, m.y, m.z, m.h}},
                     {"num", numerator(c).str()},
                     {"den", denominator(c).str()}});
  }
  json doc = {{"cap", f.cap() ? json(*f.cap()) : json(nullptr)}, {"terms", std::move(terms)}};
  return doc.dump(indent);
}

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw UsageError("invalid element document: " + what);
}

unsigned as_exponent(const json& v, const char* where) {
  if (!v.is_number_unsigned()) reject(std::string(where) + " must be a non-negative integer");
  const auto raw = v.get<std::uint64_t>();
  if (raw > std::numeric_limits<unsigned>::max()) reject(std::string(where) + " is too large");
  return static_cast<unsigned>(raw);
}

Integer as_decimal(const json& v, const char* key, bool allow_sign) {
  static const std::regex signed_decimal("-?(0|[1-9][0-9]*)");
  static const std::regex plain_decimal("0|[1-9][0-9]*");
  if (!v.is_string()) reject(std::string("\"") + key + "\" must be a string");
  const auto& s = v.get_ref<const std::string&>();
  if (!std::regex_match(s, allow_sign ? signed_decimal : plain_decimal) || s == "-0") {
    reject(std::string("\"") + key + "\" is not a decimal integer: " + s);
  }
  return Integer(s);
}

void require_keys(const json& obj, std::initializer_list<const char*> keys, const char* what) {
  if (!obj.is_object()) reject(std::string(what) + " must be an object");
  for (const char* k : keys) {
    if (!obj.contains(k)) reject(std::string(what) + " lacks \"" + k + "\"");
  }
  if (obj.size() != keys.size()) reject(std::string(what) + " has unexpected keys");
}

}  // namespace

Element from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    reject(e.what());
  }
  require_keys(doc, {"cap", "terms"}, "document");

  std::optional<unsigned> cap;
  if (!doc["cap"].is_null()) cap = as_exponent(doc["cap"], "\"cap\"");

  if (!doc["terms"].is_array()) reject("\"terms\" must be an array");
  Element out(cap);
  std::optional<NormalMonomial> previous;
  for (const json& t : doc["terms"]) {
    require_keys(t, {"m", "num", "den"}, "term");
    const json& e = t["m"];
    if (!e.is_array() || e.size() != 4) reject("\"m\" must hold four exponents");
    const NormalMonomial m{as_exponent(e[0], "exponent"), as_exponent(e[1], "exponent"),
                           as_exponent(e[2], "exponent"), as_exponent(e[3], "exponent")};
    if (previous && !(*previous < m)) reject("terms are not strictly increasing");
    previous = m;
    if (cap && m.degree() > *cap) reject("term above the degree cap");

    const Integer num = as_decimal(t["num"], "num", true);
    const Integer den = as_decimal(t["den"], "den", false);
    if (num == 0) reject("zero coefficient");
    if (den == 0) reject("zero denominator");
    if (gcd(num, den) != 1) reject("coefficient not in lowest terms");
    out.accumulate(m, Rational(num, den));
  }
  return out;
}

namespace {

void append_factor(std::ostringstream& body, std::ostringstream& denom, char letter,
                   unsigned e) {
  if (e == 0) return;
  if (body.tellp() > 0) body << ' ';
  body << letter;
  if (e > 1) {
    body << '^' << e;
    if (denom.tellp() > 0) denom << ' ';
    denom << e << '!';
  }
}

}  // namespace

std::string to_pretty(const Element& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest monomial first, the usual reading order.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream body, denom;
    append_factor(body, denom, 'x', m.x);
    append_factor(body, denom, 'y', m.y);
    append_factor(body, denom, 'z', m.z);
    append_factor(body, denom, 'h', m.h);

    if (body.tellp() == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << ' ';
    out << body.str();
    if (denom.tellp() > 0) out << " / (" << denom.str() << ')';
  }
  return out.str();
}

}  // namespace uhsl2
