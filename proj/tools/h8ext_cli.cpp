// h8ext: factor discriminants and build unramified H8- and D4-extensions.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "h8ext/h8ext.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNonexistent = 1, kInvalid = 2, kInternal = 3 };

int exit_code(h8ext_status s) {
  switch (s) {
    case H8EXT_OK: return kOk;
    case H8EXT_NONEXISTENT: return kNonexistent;
    case H8EXT_INVALID_INPUT:
    case H8EXT_BUFFER_TOO_SMALL: return kInvalid;
    default: return kInternal;
  }
}

// RAII for strings handed out by the library
struct Text {
  char* p = nullptr;
  ~Text() { h8ext_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Failure {
  h8ext_status status;
  std::string message;
};

Failure last_failure(h8ext_status s) { return {s, h8ext_last_error()}; }

int report(const Failure& f) {
  std::cerr << "error (" << h8ext_status_name(f.status) << "): " << f.message << "\n";
  return exit_code(f.status);
}

struct Common {
  bool json = false;
  std::int64_t a = 0;
  std::int64_t max_a = 0;
  std::int64_t conic_box = -1;
  std::optional<std::int64_t> d1, d2, d3;

  h8ext_options options() const {
    h8ext_options o;
    h8ext_options_init(&o);
    o.forced_a = a;
    if (max_a > 0) o.max_a = max_a;
    if (conic_box >= 0) o.conic_box = conic_box;
    return o;
  }
};

// ---- factor

int cmd_factor(std::int64_t d, const Common& c) {
  size_t n = 0;
  std::int64_t parts[16];
  h8ext_status s = h8ext_factor(d, parts, 16, &n);
  if (s != H8EXT_OK) return report(last_failure(s));
  if (c.json) {
    json out{{"d", std::to_string(d)}, {"parts", json::array()}};
    for (size_t i = 0; i < n; ++i) out["parts"].push_back(std::to_string(parts[i]));
    std::cout << out.dump(2) << "\n";
  } else {
    Text t;
    h8ext_factor_text(d, &t.p);
    std::cout << t.str() << "\n";
  }
  return kOk;
}

// ---- one certificate per factorization

struct Item {
  std::string factorization;
  std::optional<json> certificate;
  std::string text;
  std::optional<Failure> failure;
};

template <typename Cert>
struct CertOps;

template <>
struct CertOps<h8ext_h8_cert> {
  static constexpr auto build = h8ext_h8_build;
  static constexpr auto to_json = h8ext_h8_cert_json;
  static constexpr auto to_text = h8ext_h8_cert_text;
  static constexpr auto verify = h8ext_h8_cert_verify;
  static constexpr auto release = h8ext_h8_cert_free;
  static constexpr auto enumerate = h8ext_h8_enumerate;
  static constexpr const char* name = "H8";
};

template <>
struct CertOps<h8ext_d4_cert> {
  static constexpr auto build = h8ext_d4_build;
  static constexpr auto to_json = h8ext_d4_cert_json;
  static constexpr auto to_text = h8ext_d4_cert_text;
  static constexpr auto verify = h8ext_d4_cert_verify;
  static constexpr auto release = h8ext_d4_cert_free;
  static constexpr auto enumerate = h8ext_d4_enumerate;
  static constexpr const char* name = "D4";
};

template <typename Cert>
Item build_item(const std::int64_t p[3], const std::string& label, const h8ext_options& o) {
  using Ops = CertOps<Cert>;
  Item item;
  item.factorization = label;
  Cert* cert = nullptr;
  h8ext_status s = Ops::build(p[0], p[1], p[2], &o, &cert);
  if (s != H8EXT_OK) {
    item.failure = last_failure(s);
    return item;
  }
  Text js, text, why;
  int valid = 0;
  Ops::to_json(cert, -1, &js.p);
  Ops::to_text(cert, &text.p);
  Ops::verify(cert, &valid, &why.p);
  Ops::release(cert);
  if (!valid) {
    item.failure = Failure{H8EXT_INTERNAL, "certificate failed verification: " + why.str()};
    return item;
  }
  item.certificate = json::parse(js.str());
  item.text = text.str();
  return item;
}

// Factorizations to run: the forced one, or all of them.
template <typename Cert>
std::optional<Failure> collect(std::int64_t d, const Common& c, std::vector<Item>& items) {
  using Ops = CertOps<Cert>;
  const h8ext_options o = c.options();
  if (c.d1 || c.d2 || c.d3) {
    if (!c.d1 || !c.d2) return Failure{H8EXT_INVALID_INPUT, "--d1 and --d2 must be given together"};
    const std::int64_t d3 = c.d3.value_or(1);
    if (!c.d3 && std::string(Ops::name) == "H8") return Failure{H8EXT_INVALID_INPUT, "--d3 is required"};
    if (*c.d1 * *c.d2 * d3 != d)
      return Failure{H8EXT_INVALID_INPUT, "d1 d2 d3 = " + std::to_string(*c.d1 * *c.d2 * d3) + " differs from d"};
    const std::int64_t p[3] = {*c.d1, *c.d2, d3};
    Item item = build_item<Cert>(p, "(" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + ", " +
                                        std::to_string(p[2]) + ")", o);
    if (item.failure && (item.failure->status == H8EXT_NONEXISTENT || item.failure->status == H8EXT_INVALID_INPUT))
      return item.failure;
    items.push_back(std::move(item));
    return std::nullopt;
  }
  h8ext_list* list = nullptr;
  h8ext_status s = Ops::enumerate(d, &list);
  if (s != H8EXT_OK) return last_failure(s);
  for (size_t i = 0; i < h8ext_list_size(list); ++i) {
    std::int64_t p[3];
    Text label;
    h8ext_list_get(list, i, p);
    h8ext_list_text(list, i, &label.p);
    items.push_back(build_item<Cert>(p, label.str(), o));
  }
  h8ext_list_free(list);
  return std::nullopt;
}

std::string no_factorization_message(std::int64_t d, bool h8) {
  std::string msg = std::string("no ") + (h8 ? "H8" : "D4") + "-factorization of " + std::to_string(d);
  if (h8) {
    Text why;
    if (h8ext_h8_nonexistence_reason(d, &why.p) == H8EXT_OK && !why.str().empty()) msg += ": " + why.str();
  }
  return msg;
}

json item_json(const Item& it) {
  json j{{"factorization", it.factorization}};
  if (it.certificate) j["certificate"] = *it.certificate;
  if (it.failure) j["error"] = {{"status", h8ext_status_name(it.failure->status)}, {"message", it.failure->message}};
  return j;
}

template <typename Cert>
int cmd_build(std::int64_t d, const Common& c) {
  const bool h8 = std::is_same_v<Cert, h8ext_h8_cert>;
  if (!h8ext_is_fundamental(d)) {
    size_t n = 0;
    h8ext_status s = h8ext_factor(d, nullptr, 0, &n);  // for the message
    return report(s == H8EXT_OK ? Failure{H8EXT_INVALID_INPUT, "d must be a fundamental discriminant"}
                                : last_failure(s));
  }
  std::vector<Item> items;
  if (auto f = collect<Cert>(d, c, items)) return report(*f);
  if (items.empty()) {
    if (c.json) {
      std::cout << json{{"schema", h8 ? "h8report/1" : "d4report/1"}, {"d", std::to_string(d)},
                        {"results", json::array()}}.dump(2) << "\n";
    }
    std::cerr << no_factorization_message(d, h8) << "\n";
    return kNonexistent;
  }
  int code = kOk;
  for (const auto& it : items)
    if (it.failure) code = std::max(code, exit_code(it.failure->status));
  if (c.json) {
    json out{{"schema", h8 ? "h8report/1" : "d4report/1"}, {"d", std::to_string(d)}, {"results", json::array()}};
    for (const auto& it : items) out["results"].push_back(item_json(it));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      if (it.failure)
        std::cout << it.factorization << ": error (" << h8ext_status_name(it.failure->status)
                  << "): " << it.failure->message << "\n";
      else
        std::cout << it.text;
    }
  }
  return code;
}

// ---- table2

int cmd_table2(const Common& c) {
  const h8ext_options o = c.options();
  int failures = 0;
  json rows = json::array();
  for (size_t i = 0; i < h8ext_table2_size(); ++i) {
    h8ext_table2_result r{};
    Text detail, printed;
    h8ext_table2_mu_text(i, &printed.p);
    h8ext_status s = h8ext_table2_check(i, &o, &r, &detail.p);
    std::string msg = s == H8EXT_OK ? detail.str() : std::string(h8ext_last_error());
    const bool pass = s == H8EXT_OK && r.pass;
    failures += !pass;
    if (c.json) {
      rows.push_back({{"d", std::to_string(r.d)},
                      {"parts", {std::to_string(r.parts[0]), std::to_string(r.parts[1]), std::to_string(r.parts[2])}},
                      {"mu", printed.str()},
                      {"delta", std::to_string(r.delta)},
                      {"unique", static_cast<bool>(r.unique_required)},
                      {"pass", pass},
                      {"detail", msg}});
    } else {
      std::cout << (pass ? "PASS" : "FAIL") << "  d = " << r.d << "  (" << r.parts[0] << ", " << r.parts[1]
                << ", " << r.parts[2] << ")  mu = " << printed.str() << "  " << msg << "\n";
    }
  }
  if (c.json) std::cout << json{{"rows", rows}, {"failures", failures}}.dump(2) << "\n";
  else std::cout << (h8ext_table2_size() - failures) << "/" << h8ext_table2_size() << " rows reproduced\n";
  return failures ? kInternal : kOk;
}

// ---- scan

std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return std::nullopt;
  try {
    size_t used = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const std::int64_t a = std::stoll(lo, &used);
    if (used != lo.size()) return std::nullopt;
    const std::int64_t b = std::stoll(hi, &used);
    if (used != hi.size()) return std::nullopt;
    return std::make_pair(a, b);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <typename Cert>
int cmd_scan(std::int64_t lo, std::int64_t hi, const Common& c) {
  const bool h8 = std::is_same_v<Cert, h8ext_h8_cert>;
  Common quiet = c;
  quiet.d1 = quiet.d2 = quiet.d3 = std::nullopt;
  json items = json::array();
  long discriminants = 0, extensions = 0, failures = 0;
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (d == 1 || !h8ext_is_fundamental(d)) continue;
    std::vector<Item> found;
    if (auto f = collect<Cert>(d, quiet, found)) {
      ++failures;
      std::cout << d << ": error (" << h8ext_status_name(f->status) << "): " << f->message << "\n";
      continue;
    }
    if (found.empty()) continue;
    ++discriminants;
    for (const auto& it : found) {
      if (it.failure) ++failures;
      else ++extensions;
      if (c.json) {
        json j = item_json(it);
        j["d"] = std::to_string(d);
        items.push_back(std::move(j));
      } else if (it.failure) {
        std::cout << d << "  " << it.factorization << "  error: " << it.failure->message << "\n";
      } else {
        const json& cert = *it.certificate;
        std::cout << d << "  " << it.factorization << "  "
                  << (h8 ? "mu = " + cert["mu_text"].get<std::string>()
                         : "alpha = " + cert["alpha_text"].get<std::string>())
                  << "\n";
      }
    }
  }
  if (c.json) {
    std::cout << json{{"range", std::to_string(lo) + ".." + std::to_string(hi)},
                      {"kind", h8 ? "h8" : "d4"},
                      {"discriminants", discriminants},
                      {"extensions", extensions},
                      {"failures", failures},
                      {"items", items}}.dump(2)
              << "\n";
  } else {
    std::cout << discriminants << " discriminants, " << extensions << " " << (h8 ? "H8" : "D4")
              << "-extensions, " << failures << " failures\n";
  }
  return failures ? kInternal : kOk;
}

void add_build_options(CLI::App* cmd, Common& c, bool need_d3) {
  cmd->add_option("--d1", c.d1, "force the factorization: first part");
  cmd->add_option("--d2", c.d2, "second part");
  cmd->add_option("--d3", c.d3, need_d3 ? "third part" : "third part (default 1)");
  cmd->add_option("--conic-box", c.conic_box, "box bound for the small conic search (0 disables)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unramified H8- and D4-extensions of quadratic number fields"};
  app.set_version_flag("--version", std::string(h8ext_version()));
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "JSON output");

  std::int64_t d = 0;
  auto* factor = app.add_subcommand("factor", "prime discriminant factorization of d");
  factor->add_option("d", d, "fundamental discriminant")->required()->allow_extra_args(false);

  auto* h8 = app.add_subcommand("h8", "certificates for every H8-factorization of d");
  h8->add_option("d", d, "fundamental discriminant")->required();
  add_build_options(h8, c, true);
  h8->add_option("--a", c.a, "force the conic parameter a");
  h8->add_option("--max-a", c.max_a, "search bound for a");

  auto* d4 = app.add_subcommand("d4", "certificates for every D4-factorization of d");
  d4->add_option("d", d, "fundamental discriminant")->required();
  add_build_options(d4, c, false);

  auto* table2 = app.add_subcommand("table2", "reproduce the nine worked examples");
  table2->add_option("--conic-box", c.conic_box, "box bound for the small conic search");

  std::string range;
  bool scan_h8 = false, scan_d4 = false;
  auto* scan = app.add_subcommand("scan", "survey a range lo..hi of discriminants");
  scan->add_option("range", range, "lo..hi")->required();
  auto* fh8 = scan->add_flag("--h8", scan_h8, "H8-extensions");
  auto* fd4 = scan->add_flag("--d4", scan_d4, "D4-extensions");
  fh8->excludes(fd4);
  scan->add_option("--max-a", c.max_a, "search bound for a");
  scan->add_option("--conic-box", c.conic_box, "box bound for the small conic search");

  for (auto* sub : {factor, h8, d4, table2, scan}) sub->add_flag("--json", c.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (factor->parsed()) return cmd_factor(d, c);
  if (h8->parsed()) return cmd_build<h8ext_h8_cert>(d, c);
  if (d4->parsed()) return cmd_build<h8ext_d4_cert>(d, c);
  if (table2->parsed()) return cmd_table2(c);
  if (scan->parsed()) {
    auto r = parse_range(range);
    if (!r || r->first > r->second) {
      std::cerr << "error (invalid input): range must look like lo..hi with lo <= hi\n";
      return kInvalid;
    }
    return scan_d4 ? cmd_scan<h8ext_d4_cert>(r->first, r->second, c)
                   : cmd_scan<h8ext_h8_cert>(r->first, r->second, c);
  }
  return kInvalid;
}
