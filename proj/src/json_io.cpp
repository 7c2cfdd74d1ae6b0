#include "dp1/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace dp1 {

namespace {

Int int_from_decimal(const std::string& s) {
  if (s.empty()) throw domain_error("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw domain_error("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw domain_error("malformed integer literal '" + s + "'");
  return Int(s);
}

} // namespace

Basis basis_from_string(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  if (up == "S") return Basis::S;
  if (up == "X") return Basis::X;
  if (up == "X_CURVE" || up == "XCURVE") return Basis::XCurve;
  throw domain_error("unknown basis '" + name + "' (expected S, X or X_CURVE)");
}

Json rat_to_json(const Rat& q) {
  if (den(q) == 1) {
    Int n = num(q);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return Json(static_cast<std::int64_t>(n));
  }
  return Json(to_string(q));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_float())
    throw domain_error("floating-point literals are rejected; use exact "
                       "integers or \"p/q\" strings");
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_decimal(s));
    Int p = int_from_decimal(s.substr(0, slash));
    Int q = int_from_decimal(s.substr(slash + 1));
    if (q == 0) throw domain_error("rational literal with zero denominator");
    if (q < 0) { // cpp_rational requires a positive denominator
      p = -p;
      q = -q;
    }
    return Rat(p, q);
  }
  throw domain_error("expected an exact rational (integer or \"p/q\" string)");
}

Json class_to_json(const PicClass& c) {
  Json coeffs = Json::array();
  for (const Int& v : c.c) coeffs.push_back(rat_to_json(Rat(v)));
  return Json{{"basis", basis_name(c.basis)}, {"coeffs", coeffs}};
}

Json class_to_json(const RatClass& c) {
  Json coeffs = Json::array();
  for (const Rat& v : c.c) coeffs.push_back(rat_to_json(v));
  return Json{{"basis", basis_name(c.basis)}, {"coeffs", coeffs}};
}

RatClass rat_class_from_json(const Json& j, std::optional<Basis> default_basis) {
  const Json* coeffs = nullptr;
  Basis basis{};
  if (j.is_array()) {
    if (!default_basis)
      throw domain_error("bare coefficient array requires a basis to be given");
    basis = *default_basis;
    coeffs = &j;
  } else if (j.is_object()) {
    if (!j.contains("coeffs"))
      throw domain_error("class object is missing 'coeffs'");
    coeffs = &j.at("coeffs");
    if (j.contains("basis"))
      basis = basis_from_string(j.at("basis").get<std::string>());
    else if (default_basis)
      basis = *default_basis;
    else
      throw domain_error("class object is missing 'basis'");
  } else {
    throw domain_error("expected a class as an array or object");
  }
  if (!coeffs->is_array() || coeffs->size() != 9)
    throw domain_error("class coefficients must be an array of 9 entries");
  RatClass out{basis, {}};
  for (int i = 0; i < 9; ++i) out.c[i] = rat_from_json((*coeffs)[i]);
  return out;
}

PicClass class_from_json(const Json& j, std::optional<Basis> default_basis) {
  RatClass r = rat_class_from_json(j, default_basis);
  std::optional<PicClass> p = to_integral(r);
  if (!p) throw domain_error("expected an integral class");
  return *p;
}

PicClass parse_class_literal(const std::string& text, Basis basis) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw domain_error(std::string("malformed class literal: ") + e.what());
  }
  return class_from_json(j, basis);
}

RatClass parse_rat_class_literal(const std::string& text, Basis basis) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw domain_error(std::string("malformed class literal: ") + e.what());
  }
  return rat_class_from_json(j, basis);
}

Json config_to_json(const PointConfiguration& c) {
  Json points = Json::array();
  for (int col = 0; col < c.n; ++col) {
    Json pt = Json::array();
    for (int row = 0; row <= c.k; ++row) pt.push_back(rat_to_json(c.m[row][col]));
    points.push_back(pt);
  }
  return Json{{"k", c.k}, {"n", c.n}, {"points", points}};
}

PointConfiguration config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw domain_error("point configuration requires a 'points' array");
  const Json& points = j.at("points");
  if (!points.is_array() || points.empty())
    throw domain_error("point configuration requires a nonempty 'points' array");
  PointConfiguration c;
  c.n = static_cast<int>(points.size());
  const Json& first = points.at(0);
  if (!first.is_array() || first.empty())
    throw domain_error("each point must be an array of homogeneous coordinates");
  c.k = static_cast<int>(first.size()) - 1;
  if (j.contains("k") && j.at("k").get<int>() != c.k)
    throw domain_error("declared 'k' disagrees with coordinate length");
  if (j.contains("n") && j.at("n").get<int>() != c.n)
    throw domain_error("declared 'n' disagrees with point count");
  c.m = QMat(c.k + 1, QRow(c.n));
  for (int col = 0; col < c.n; ++col) {
    const Json& pt = points.at(col);
    if (!pt.is_array() || static_cast<int>(pt.size()) != c.k + 1)
      throw domain_error("point " + std::to_string(col + 1) +
                         " has the wrong number of coordinates");
    bool all_zero = true;
    for (int row = 0; row <= c.k; ++row) {
      c.m[row][col] = rat_from_json(pt.at(row));
      if (c.m[row][col] != 0) all_zero = false;
    }
    if (all_zero)
      throw domain_error("point " + std::to_string(col + 1) + " is the zero vector");
  }
  return c;
}

} // namespace dp1
