#include "doctest.h"
#include "h8ext/h8ext.h"

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  h8ext_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(h8ext_status_name(H8EXT_OK)) == "ok");
  CHECK(std::string(h8ext_status_name(H8EXT_BUFFER_TOO_SMALL)).size() > 0);
  CHECK(std::strlen(h8ext_version()) > 0);
}

TEST_CASE("factor") {
  CHECK(h8ext_is_fundamental(520));
  CHECK_FALSE(h8ext_is_fundamental(16));
  int64_t parts[8];
  size_t count = 0;
  REQUIRE(h8ext_factor(-420, parts, 8, &count) == H8EXT_OK);
  REQUIRE(count == 4);
  CHECK(parts[0] == -7);
  CHECK(parts[3] == 5);
  CHECK(h8ext_factor(-420, parts, 2, &count) == H8EXT_BUFFER_TOO_SMALL);
  CHECK(count == 4);
  CHECK(h8ext_factor(1, parts, 8, &count) == H8EXT_INVALID_INPUT);
  CHECK(std::strlen(h8ext_last_error()) > 0);
  char* text = nullptr;
  REQUIRE(h8ext_factor_text(520, &text) == H8EXT_OK);
  CHECK(take(text).find("13") != std::string::npos);
}

TEST_CASE("enumeration") {
  h8ext_list* list = nullptr;
  REQUIRE(h8ext_h8_enumerate(520, &list) == H8EXT_OK);
  REQUIRE(h8ext_list_size(list) == 1);
  int64_t p[3];
  REQUIRE(h8ext_list_get(list, 0, p) == H8EXT_OK);
  CHECK(p[0] * p[1] * p[2] == 520);
  CHECK(h8ext_list_get(list, 1, p) == H8EXT_INVALID_INPUT);
  h8ext_list_free(list);
  REQUIRE(h8ext_d4_enumerate(680, &list) == H8EXT_OK);
  CHECK(h8ext_list_size(list) >= 1);
  char* text = nullptr;
  REQUIRE(h8ext_list_text(list, 0, &text) == H8EXT_OK);
  CHECK_FALSE(take(text).empty());
  h8ext_list_free(list);
  CHECK(h8ext_h8_enumerate(16, &list) == H8EXT_INVALID_INPUT);
}

TEST_CASE("nonexistence") {
  char* reason = nullptr;
  CHECK(h8ext_h8_check(5, 8, 13, &reason) == H8EXT_OK);
  h8ext_string_free(reason);
  reason = nullptr;
  CHECK(h8ext_h8_check(5, 8, 17, &reason) == H8EXT_NONEXISTENT);
  CHECK_FALSE(take(reason).empty());
  reason = nullptr;
  CHECK(h8ext_h8_nonexistence_reason(5, &reason) == H8EXT_OK);
  CHECK(take(reason).find("three parts") != std::string::npos);
}

TEST_CASE("H8 certificate life cycle") {
  h8ext_options o;
  h8ext_options_init(&o);
  h8ext_h8_cert* c = nullptr;
  REQUIRE(h8ext_h8_build(5, 8, 13, &o, &c) == H8EXT_OK);
  char* json = nullptr;
  REQUIRE(h8ext_h8_cert_json(c, 2, &json) == H8EXT_OK);
  const std::string j = take(json);
  CHECK(j.find("h8cert/1") != std::string::npos);
  h8ext_h8_cert* back = nullptr;
  REQUIRE(h8ext_h8_cert_from_json(j.c_str(), &back) == H8EXT_OK);
  CHECK(h8ext_h8_cert_equal(c, back));
  int valid = 0;
  char* reason = nullptr;
  REQUIRE(h8ext_h8_cert_verify(back, &valid, &reason) == H8EXT_OK);
  CHECK(valid == 1);
  h8ext_string_free(reason);
  char* text = nullptr;
  REQUIRE(h8ext_h8_cert_text(c, &text) == H8EXT_OK);
  CHECK(take(text).find("H8") != std::string::npos);
  h8ext_h8_cert_free(back);
  h8ext_h8_cert_free(c);

  h8ext_h8_cert* bad = nullptr;
  CHECK(h8ext_h8_cert_from_json("{not json", &bad) == H8EXT_INVALID_INPUT);
  CHECK(bad == nullptr);
  o.forced_a = 3;
  CHECK(h8ext_h8_build(5, 8, 13, &o, &c) == H8EXT_INVALID_INPUT);
  h8ext_options_init(&o);
  CHECK(h8ext_h8_build(5, 8, 17, &o, &c) == H8EXT_NONEXISTENT);
  CHECK(h8ext_h8_build(5, 8, 13, nullptr, nullptr) == H8EXT_INVALID_INPUT);
}

TEST_CASE("D4 certificate life cycle") {
  h8ext_d4_cert* c = nullptr;
  REQUIRE(h8ext_d4_build(8, 17, 5, nullptr, &c) == H8EXT_OK);
  char* json = nullptr;
  REQUIRE(h8ext_d4_cert_json(c, -1, &json) == H8EXT_OK);
  const std::string j = take(json);
  h8ext_d4_cert* back = nullptr;
  REQUIRE(h8ext_d4_cert_from_json(j.c_str(), &back) == H8EXT_OK);
  CHECK(h8ext_d4_cert_equal(c, back));
  int valid = 0;
  char* reason = nullptr;
  REQUIRE(h8ext_d4_cert_verify(back, &valid, &reason) == H8EXT_OK);
  CHECK(valid == 1);
  h8ext_string_free(reason);
  h8ext_d4_cert_free(back);
  h8ext_d4_cert_free(c);
}

TEST_CASE("infinity and the table") {
  h8ext_infinity v;
  REQUIRE(h8ext_infinity_verdict(5, 8, 13, &v) == H8EXT_OK);
  CHECK(v.applicable == 1);
  CHECK(v.totally_real == 1);
  REQUIRE(h8ext_infinity_verdict(-3, 5, 8, &v) == H8EXT_OK);
  CHECK(v.totally_real == -1);
  REQUIRE(h8ext_table2_size() == 9);
  for (size_t i = 0; i < 9; ++i) {
    h8ext_table2_result r;
    char* detail = nullptr;
    REQUIRE(h8ext_table2_check(i, nullptr, &r, &detail) == H8EXT_OK);
    h8ext_string_free(detail);
    CHECK(r.pass == 1);
    CHECK(r.delta != 0);
  }
  char* text = nullptr;
  CHECK(h8ext_table2_mu_text(9, &text) == H8EXT_INVALID_INPUT);
}
