#include "h8ext/h8ext.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "h8ext/certificate_io.hpp"
#include "h8ext/construct.hpp"
#include "h8ext/dihedral.hpp"
#include "h8ext/error.hpp"
#include "h8ext/infinity.hpp"
#include "h8ext/symbols.hpp"
#include "h8ext/table2.hpp"

struct h8ext_list {
  std::vector<std::array<std::int64_t, 3>> items;
  std::vector<std::string> texts;
};

struct h8ext_h8_cert {
  h8ext::ExtensionCertificate cert;
};

struct h8ext_d4_cert {
  h8ext::D4Certificate cert;
};

namespace {

thread_local std::string last_error;

h8ext_status status_of(h8ext::ErrorKind kind) {
  using h8ext::ErrorKind;
  switch (kind) {
    case ErrorKind::Nonexistent: return H8EXT_NONEXISTENT;
    case ErrorKind::InvalidInput:
    case ErrorKind::Undefined:
    case ErrorKind::BaseMismatch:
    case ErrorKind::DivisionByZero: return H8EXT_INVALID_INPUT;
    case ErrorKind::LocallyUnsolvable: return H8EXT_UNSOLVABLE;
    case ErrorKind::SearchExhausted: return H8EXT_SEARCH_EXHAUSTED;
    case ErrorKind::NonNormal: return H8EXT_NON_NORMAL;
    case ErrorKind::Internal: return H8EXT_INTERNAL;
  }
  return H8EXT_INTERNAL;
}

h8ext_status set_error(h8ext_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <typename Fn>
h8ext_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const h8ext::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(H8EXT_INVALID_INPUT, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(H8EXT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(H8EXT_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

#define REQUIRE(cond, msg) \
  if (!(cond)) return set_error(H8EXT_INVALID_INPUT, msg)

h8ext::PipelineOptions pipeline(const h8ext_options* o) {
  h8ext::PipelineOptions p;
  if (!o) return p;
  p.forced_a = o->forced_a;
  p.max_a = o->max_a;
  p.conic.small_box = o->conic_box;
  return p;
}

}  // namespace

extern "C" {

const char* h8ext_version(void) { return "1.0.0"; }

const char* h8ext_status_name(h8ext_status status) {
  switch (status) {
    case H8EXT_OK: return "ok";
    case H8EXT_NONEXISTENT: return "nonexistent";
    case H8EXT_INVALID_INPUT: return "invalid input";
    case H8EXT_INTERNAL: return "internal error";
    case H8EXT_SEARCH_EXHAUSTED: return "search exhausted";
    case H8EXT_UNSOLVABLE: return "locally unsolvable";
    case H8EXT_NON_NORMAL: return "not normal";
    case H8EXT_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown";
}

const char* h8ext_last_error(void) { return last_error.c_str(); }

void h8ext_string_free(char* s) { std::free(s); }

int h8ext_is_fundamental(int64_t d) { return h8ext::is_fundamental(d) ? 1 : 0; }

h8ext_status h8ext_factor(int64_t d, int64_t* parts, size_t capacity, size_t* count) {
  return guarded([&] {
    REQUIRE(count, "count must not be NULL");
    const auto values = h8ext::factor_discriminant(d).values();
    *count = values.size();
    if (values.size() > capacity || (!parts && !values.empty()))
      return set_error(H8EXT_BUFFER_TOO_SMALL, "need room for " + std::to_string(values.size()) + " parts");
    for (std::size_t i = 0; i < values.size(); ++i) parts[i] = values[i];
    return H8EXT_OK;
  });
}

h8ext_status h8ext_factor_text(int64_t d, char** text) {
  return guarded([&] {
    REQUIRE(text, "text must not be NULL");
    put(text, h8ext::factor_discriminant(d).to_string());
    return H8EXT_OK;
  });
}

h8ext_status h8ext_h8_enumerate(int64_t d, h8ext_list** out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    *out = nullptr;
    auto list = std::make_unique<h8ext_list>();
    for (const auto& f : h8ext::enumerate_h8(d)) {
      list->items.push_back(f.canonical());
      list->texts.push_back(f.to_string());
    }
    *out = list.release();
    return H8EXT_OK;
  });
}

h8ext_status h8ext_d4_enumerate(int64_t d, h8ext_list** out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    *out = nullptr;
    auto list = std::make_unique<h8ext_list>();
    for (const auto& f : h8ext::enumerate_d4(d)) {
      list->items.push_back({f.d1, f.d2, f.d3});
      list->texts.push_back(f.to_string());
    }
    *out = list.release();
    return H8EXT_OK;
  });
}

size_t h8ext_list_size(const h8ext_list* list) { return list ? list->items.size() : 0; }

h8ext_status h8ext_list_get(const h8ext_list* list, size_t index, int64_t parts[3]) {
  return guarded([&] {
    REQUIRE(list && parts, "list and parts must not be NULL");
    REQUIRE(index < list->items.size(), "index out of range");
    for (int i = 0; i < 3; ++i) parts[i] = list->items[index][i];
    return H8EXT_OK;
  });
}

h8ext_status h8ext_list_text(const h8ext_list* list, size_t index, char** text) {
  return guarded([&] {
    REQUIRE(list && text, "list and text must not be NULL");
    REQUIRE(index < list->items.size(), "index out of range");
    put(text, list->texts[index]);
    return H8EXT_OK;
  });
}

void h8ext_list_free(h8ext_list* list) { delete list; }

h8ext_status h8ext_h8_check(int64_t d1, int64_t d2, int64_t d3, char** reason) {
  return guarded([&] {
    const auto c = h8ext::check_h8(d1, d2, d3);
    if (c.ok()) return H8EXT_OK;
    const std::string why = "condition fails: " + c.failure->to_string();
    put(reason, why);
    return set_error(H8EXT_NONEXISTENT, why);
  });
}

h8ext_status h8ext_h8_nonexistence_reason(int64_t d, char** reason) {
  return guarded([&] {
    REQUIRE(reason, "reason must not be NULL");
    put(reason, h8ext::h8_nonexistence_reason(d));
    return H8EXT_OK;
  });
}

void h8ext_options_init(h8ext_options* options) {
  if (!options) return;
  const h8ext::PipelineOptions p;
  options->forced_a = p.forced_a;
  options->max_a = p.max_a;
  options->conic_box = p.conic.small_box;
}

h8ext_status h8ext_h8_build(int64_t d1, int64_t d2, int64_t d3, const h8ext_options* options,
                            h8ext_h8_cert** out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    *out = nullptr;
    const auto f = h8ext::is_h8_factorization(d1, d2, d3);
    *out = new h8ext_h8_cert{h8ext::construct_h8(f, pipeline(options))};
    return H8EXT_OK;
  });
}

h8ext_status h8ext_h8_cert_json(const h8ext_h8_cert* cert, int indent, char** json) {
  return guarded([&] {
    REQUIRE(cert && json, "cert and json must not be NULL");
    put(json, h8ext::to_json(cert->cert).dump(indent));
    return H8EXT_OK;
  });
}

h8ext_status h8ext_h8_cert_text(const h8ext_h8_cert* cert, char** text) {
  return guarded([&] {
    REQUIRE(cert && text, "cert and text must not be NULL");
    put(text, h8ext::to_text(cert->cert));
    return H8EXT_OK;
  });
}

h8ext_status h8ext_h8_cert_from_json(const char* json, h8ext_h8_cert** out) {
  return guarded([&] {
    REQUIRE(json && out, "json and out must not be NULL");
    *out = nullptr;
    *out = new h8ext_h8_cert{h8ext::h8_certificate_from_json(nlohmann::json::parse(json))};
    return H8EXT_OK;
  });
}

h8ext_status h8ext_h8_cert_verify(const h8ext_h8_cert* cert, int* valid, char** reason) {
  return guarded([&] {
    REQUIRE(cert && valid, "cert and valid must not be NULL");
    const auto why = h8ext::verify_certificate(cert->cert);
    *valid = why ? 0 : 1;
    if (why) put(reason, *why);
    return H8EXT_OK;
  });
}

int h8ext_h8_cert_equal(const h8ext_h8_cert* a, const h8ext_h8_cert* b) {
  return a && b && a->cert == b->cert ? 1 : 0;
}

void h8ext_h8_cert_free(h8ext_h8_cert* cert) { delete cert; }

h8ext_status h8ext_d4_build(int64_t d1, int64_t d2, int64_t d3, const h8ext_options* options,
                            h8ext_d4_cert** out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    *out = nullptr;
    const auto c = h8ext::check_d4(d1, d2, d3);
    if (!c.ok()) return set_error(H8EXT_NONEXISTENT, "condition fails: " + c.failure->to_string());
    *out = new h8ext_d4_cert{h8ext::d4_construct(*c.factorization, pipeline(options).conic)};
    return H8EXT_OK;
  });
}

h8ext_status h8ext_d4_cert_json(const h8ext_d4_cert* cert, int indent, char** json) {
  return guarded([&] {
    REQUIRE(cert && json, "cert and json must not be NULL");
    put(json, h8ext::to_json(cert->cert).dump(indent));
    return H8EXT_OK;
  });
}

h8ext_status h8ext_d4_cert_text(const h8ext_d4_cert* cert, char** text) {
  return guarded([&] {
    REQUIRE(cert && text, "cert and text must not be NULL");
    put(text, h8ext::to_text(cert->cert));
    return H8EXT_OK;
  });
}

h8ext_status h8ext_d4_cert_from_json(const char* json, h8ext_d4_cert** out) {
  return guarded([&] {
    REQUIRE(json && out, "json and out must not be NULL");
    *out = nullptr;
    *out = new h8ext_d4_cert{h8ext::d4_certificate_from_json(nlohmann::json::parse(json))};
    return H8EXT_OK;
  });
}

h8ext_status h8ext_d4_cert_verify(const h8ext_d4_cert* cert, int* valid, char** reason) {
  return guarded([&] {
    REQUIRE(cert && valid, "cert and valid must not be NULL");
    const auto why = h8ext::d4_check(cert->cert);
    *valid = why ? 0 : 1;
    if (why) put(reason, *why);
    return H8EXT_OK;
  });
}

int h8ext_d4_cert_equal(const h8ext_d4_cert* a, const h8ext_d4_cert* b) {
  return a && b && a->cert == b->cert ? 1 : 0;
}

void h8ext_d4_cert_free(h8ext_d4_cert* cert) { delete cert; }

h8ext_status h8ext_infinity_verdict(int64_t d1, int64_t d2, int64_t d3, h8ext_infinity* out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    const auto f = h8ext::is_h8_factorization(d1, d2, d3);
    const auto v = h8ext::infinity_verdict(f);
    out->applicable = v.applicable;
    out->lhs = v.lhs;
    out->rhs = v.rhs;
    out->totally_real = v.totally_real ? (*v.totally_real ? 1 : 0) : -1;
    out->twist_may_be_needed = v.twist_may_be_needed;
    return H8EXT_OK;
  });
}

size_t h8ext_table2_size(void) { return h8ext::table2_rows().size(); }

h8ext_status h8ext_table2_mu_text(size_t index, char** text) {
  return guarded([&] {
    REQUIRE(text, "text must not be NULL");
    REQUIRE(index < h8ext::table2_rows().size(), "row index out of range");
    put(text, h8ext::table2_rows()[index].text);
    return H8EXT_OK;
  });
}

h8ext_status h8ext_table2_check(size_t index, const h8ext_options* options, h8ext_table2_result* out,
                                char** detail) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    REQUIRE(index < h8ext::table2_rows().size(), "row index out of range");
    const auto& row = h8ext::table2_rows()[index];
    const auto r = h8ext::check_table2_row(row, pipeline(options));
    out->d = row.d;
    for (int i = 0; i < 3; ++i) out->parts[i] = row.parts[i];
    out->factorization_ok = r.factorization_ok;
    out->unique_required = r.unique_required;
    out->delta = r.twist ? r.twist->delta : 0;
    out->pass = r.pass;
    put(detail, r.detail);
    return H8EXT_OK;
  });
}

h8ext_status h8ext_table2_cert(size_t index, const h8ext_options* options, h8ext_h8_cert** out) {
  return guarded([&] {
    REQUIRE(out, "out must not be NULL");
    REQUIRE(index < h8ext::table2_rows().size(), "row index out of range");
    const auto& p = h8ext::table2_rows()[index].parts;
    return h8ext_h8_build(p[0], p[1], p[2], options, out);
  });
}

}  // extern "C"
