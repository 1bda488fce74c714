#include "h8ext/certificate_io.hpp"

#include "h8ext/error.hpp"

namespace h8ext {

using nlohmann::json;

namespace {

std::string str(const Int& v) { return v.get_str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

Int read_int(const json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::InvalidInput, std::string(what) + " must be a decimal string");
  Int v;
  if (v.set_str(j.get<std::string>(), 10) != 0)
    fail(ErrorKind::InvalidInput, std::string(what) + " is not an integer");
  return v;
}

std::int64_t read_i64(const json& j, const char* what) { return to_int64(read_int(j, what)); }

int read_small(const json& j, const char* what) { return static_cast<int>(read_i64(j, what)); }

bool read_bool(const json& j, const char* what) {
  if (!j.is_boolean()) fail(ErrorKind::InvalidInput, std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::optional<bool> read_optional_bool(const json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  return read_bool(j, what);
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

template <std::size_t N>
json ints(const std::array<std::int64_t, N>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(str(x));
  return out;
}

json ints(const std::array<Int, 3>& v) { return json::array({str(v[0]), str(v[1]), str(v[2])}); }

template <typename T, std::size_t N>
std::array<T, N> read_array(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    fail(ErrorKind::InvalidInput, std::string(what) + " must have " + std::to_string(N) + " entries");
  std::array<T, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if constexpr (std::is_same_v<T, Int>)
      out[i] = read_int(j[i], what);
    else
      out[i] = read_i64(j[i], what);
  }
  return out;
}

json svector(const SVector& s) {
  return json::array({str(s.s_sigma), str(s.s_tau), str(s.s_sigmatau)});
}

SVector read_svector(const json& j) {
  const auto a = read_array<std::int64_t, 3>(j, "s_vector");
  return SVector{static_cast<int>(a[0]), static_cast<int>(a[1]), static_cast<int>(a[2])};
}

void require_schema(const json& j, const char* schema) {
  const json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    fail(ErrorKind::InvalidInput, std::string("expected schema ") + schema);
}

}  // namespace

json element_to_json(const MultiquadElement& x) {
  json base = json::array();
  for (auto r : x.base()) base.push_back(str(r));
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(to_string(c));
  return json{{"base", base}, {"coords", coords}};
}

MultiquadElement element_from_json(const json& j) {
  const json& b = field(j, "base");
  const json& c = field(j, "coords");
  if (!b.is_array() || !c.is_array()) fail(ErrorKind::InvalidInput, "element needs base and coords arrays");
  MultiquadElement::Base base;
  for (const auto& r : b) base.push_back(read_i64(r, "base radicand"));
  if (base.size() > 6 || c.size() != (std::size_t{1} << base.size()))
    fail(ErrorKind::InvalidInput, "coordinate count does not match the base");
  std::vector<Rational> coords;
  for (const auto& q : c) {
    if (!q.is_string()) fail(ErrorKind::InvalidInput, "coordinates must be strings");
    coords.push_back(parse_rational(q.get<std::string>()));
  }
  return MultiquadElement(std::move(base), std::move(coords));
}

json to_json(const ExtensionCertificate& c) {
  const auto& g = c.generator;
  return json{
      {"schema", ExtensionCertificate::schema},
      {"d", str(c.d)},
      {"factorization", ints(c.factorization)},
      {"roles", ints(c.roles)},
      {"a", str(c.a)},
      {"x", ints(c.x)},
      {"y", ints(c.y)},
      {"z", ints(c.z)},
      {"generator",
       {{"beta", element_to_json(g.beta)},
        {"gamma", element_to_json(g.gamma)},
        {"delta", element_to_json(g.delta)},
        {"r", to_string(g.r)},
        {"mu", element_to_json(g.mu)}}},
      {"two_primary_twist", str(c.two_primary_twist)},
      {"infinity_twist", str(c.infinity_twist)},
      {"mu", element_to_json(c.mu)},
      {"mu_text", c.mu.to_string()},
      {"s_vector", svector(c.s_vector)},
      {"rho_sign", str(c.rho_sign)},
      {"group", to_string(c.group)},
      {"totally_real", optional_bool(c.totally_real)},
      {"unique", c.unique},
  };
}

ExtensionCertificate h8_certificate_from_json(const json& j) {
  require_schema(j, ExtensionCertificate::schema);
  ExtensionCertificate c;
  c.d = read_i64(field(j, "d"), "d");
  c.factorization = read_array<std::int64_t, 3>(field(j, "factorization"), "factorization");
  c.roles = read_array<std::int64_t, 3>(field(j, "roles"), "roles");
  c.a = read_i64(field(j, "a"), "a");
  c.x = read_array<Int, 3>(field(j, "x"), "x");
  c.y = read_array<Int, 3>(field(j, "y"), "y");
  c.z = read_array<Int, 3>(field(j, "z"), "z");
  const json& g = field(j, "generator");
  c.generator.beta = element_from_json(field(g, "beta"));
  c.generator.gamma = element_from_json(field(g, "gamma"));
  c.generator.delta = element_from_json(field(g, "delta"));
  const json& r = field(g, "r");
  if (!r.is_string()) fail(ErrorKind::InvalidInput, "r must be a string");
  c.generator.r = parse_rational(r.get<std::string>());
  c.generator.mu = element_from_json(field(g, "mu"));
  c.two_primary_twist = read_small(field(j, "two_primary_twist"), "two_primary_twist");
  c.infinity_twist = read_i64(field(j, "infinity_twist"), "infinity_twist");
  c.mu = element_from_json(field(j, "mu"));
  c.s_vector = read_svector(field(j, "s_vector"));
  c.rho_sign = read_small(field(j, "rho_sign"), "rho_sign");
  const json& group = field(j, "group");
  if (!group.is_string()) fail(ErrorKind::InvalidInput, "group must be a string");
  c.group = galois_class_from_string(group.get<std::string>());
  c.totally_real = read_optional_bool(field(j, "totally_real"), "totally_real");
  c.unique = read_bool(field(j, "unique"), "unique");
  return c;
}

json to_json(const D4Certificate& c) {
  const auto& f = c.factorization;
  return json{
      {"schema", D4Certificate::schema},
      {"d", str(f.d)},
      {"factorization", {{"d1", str(f.d1)}, {"d2", str(f.d2)}, {"d3", str(f.d3)}}},
      {"roles", json::array({str(c.d1), str(c.d2)})},
      {"solution", json::array({str(c.X), str(c.Y), str(c.Z)})},
      {"content", str(c.content)},
      {"twist", str(c.twist)},
      {"oracle_level", to_string(c.level)},
      {"alpha", element_to_json(c.alpha)},
      {"alpha_text", c.alpha.to_string()},
      {"generators", c.generators()},
      {"s_vector", svector(c.s_vector)},
      {"totally_positive", optional_bool(c.totally_positive)},
      {"no_compositum", c.no_compositum},
  };
}

D4Certificate d4_certificate_from_json(const json& j) {
  require_schema(j, D4Certificate::schema);
  D4Certificate c;
  const json& f = field(j, "factorization");
  const std::int64_t d = read_i64(field(j, "d"), "d");
  const std::int64_t d1 = read_i64(field(f, "d1"), "d1");
  const std::int64_t d2 = read_i64(field(f, "d2"), "d2");
  const std::int64_t d3 = read_i64(field(f, "d3"), "d3");
  const D4Check check = check_d4(d1, d2, d3, d);
  if (!check.ok()) fail(ErrorKind::InvalidInput, "not a D4-factorization");
  c.factorization = *check.factorization;
  const auto roles = read_array<std::int64_t, 2>(field(j, "roles"), "roles");
  c.d1 = roles[0];
  c.d2 = roles[1];
  const auto xyz = read_array<Int, 3>(field(j, "solution"), "solution");
  c.X = xyz[0];
  c.Y = xyz[1];
  c.Z = xyz[2];
  c.content = read_int(field(j, "content"), "content");
  c.twist = read_small(field(j, "twist"), "twist");
  const json& level = field(j, "oracle_level");
  if (!level.is_string()) fail(ErrorKind::InvalidInput, "oracle_level must be a string");
  c.level = oracle_level_from_string(level.get<std::string>());
  c.alpha = element_from_json(field(j, "alpha"));
  c.s_vector = read_svector(field(j, "s_vector"));
  c.totally_positive = read_optional_bool(field(j, "totally_positive"), "totally_positive");
  c.no_compositum = read_bool(field(j, "no_compositum"), "no_compositum");
  return c;
}

}  // namespace h8ext
