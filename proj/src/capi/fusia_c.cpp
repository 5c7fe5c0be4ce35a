/* Copyright (C) 2026 The fusia Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#define FUSIA_BUILDING_LIBRARY
#include "fusia/fusia.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "closed_form.hpp"
#include "fusion.hpp"
#include "iso.hpp"
#include "kac_peterson.hpp"
#include "verify.hpp"
#include "voa.hpp"

struct fusia_matrix {
  fusia::CycMatrix m;
};

struct fusia_algebra {
  fusia::FusionAlgebra f;
  int voa_ell = 0;  // > 0 for V_L^+ rings
};

namespace {

thread_local std::string g_error;

fusia_status fail(fusia_status code, const std::string& msg) {
  g_error = msg;
  return code;
}

template <class Fn>
fusia_status guard(Fn&& fn) {
  try {
    g_error.clear();
    fn();
    return FUSIA_OK;
  } catch (const fusia::Error& e) {
    return fail(static_cast<fusia_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FUSIA_E_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FUSIA_E_INTERNAL, e.what());
  } catch (...) {
    return fail(FUSIA_E_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define FUSIA_REQUIRE(p)                                         \
  do {                                                           \
    if (!(p)) return fail(FUSIA_E_NULL_POINTER, #p " is null"); \
  } while (0)

const fusia::CycNum& entry(const fusia_matrix* m, size_t i, size_t j) {
  if (i >= m->m.rows() || j >= m->m.cols())
    throw fusia::InvalidArgument("matrix index out of range");
  return m->m(i, j);
}

fusia_status make_matrix(fusia_matrix** out, auto&& build) {
  FUSIA_REQUIRE(out);
  return guard([&] { *out = new fusia_matrix{build()}; });
}

fusia_status make_algebra(fusia_algebra** out, auto&& build, int voa_ell = 0) {
  FUSIA_REQUIRE(out);
  return guard([&] { *out = new fusia_algebra{build(), voa_ell}; });
}

}  // namespace

extern "C" {

const char* fusia_version(void) { return "0.1.0"; }
const char* fusia_last_error(void) { return g_error.c_str(); }
void fusia_string_free(char* s) { std::free(s); }

fusia_status fusia_smatrix(int ell, fusia_matrix** out) {
  return make_matrix(out, [&] { return fusia::closed::smatrix_closed(ell); });
}

fusia_status fusia_Smatrix(int ell, fusia_matrix** out) {
  return make_matrix(out, [&] { return fusia::closed::S_matrix(ell); });
}

fusia_status fusia_smatrix_oracle(int ell, int max_ell, fusia_matrix** out) {
  return make_matrix(out, [&] {
    fusia::kp::OracleOptions o;
    o.max_ell = max_ell;
    return fusia::kp::smatrix_oracle(ell, o);
  });
}

fusia_status fusia_w_matrix(int ell, fusia_matrix** out) {
  return make_matrix(out, [&] { return fusia::closed::w_matrix(ell); });
}

fusia_status fusia_smatrix_with_block(int ell, const fusia_matrix* w, fusia_matrix** out) {
  FUSIA_REQUIRE(w);
  return make_matrix(out, [&] { return fusia::closed::smatrix_with_block(ell, w->m); });
}

fusia_status fusia_matrix_size(const fusia_matrix* m, size_t* rows, size_t* cols) {
  FUSIA_REQUIRE(m);
  if (rows) *rows = m->m.rows();
  if (cols) *cols = m->m.cols();
  return FUSIA_OK;
}

fusia_status fusia_matrix_entry_json(const fusia_matrix* m, size_t i, size_t j, char** out) {
  FUSIA_REQUIRE(m);
  FUSIA_REQUIRE(out);
  return guard([&] { *out = dup(entry(m, i, j).to_json().dump()); });
}

fusia_status fusia_matrix_set_entry_json(fusia_matrix* m, size_t i, size_t j,
                                         const char* json) {
  FUSIA_REQUIRE(m);
  FUSIA_REQUIRE(json);
  return guard([&] {
    entry(m, i, j);
    m->m(i, j) = fusia::CycNum::from_json(nlohmann::ordered_json::parse(json));
  });
}

fusia_status fusia_matrix_entry_approx(const fusia_matrix* m, size_t i, size_t j,
                                       double* re, double* im) {
  FUSIA_REQUIRE(m);
  return guard([&] {
    const auto z = entry(m, i, j).to_complex();
    if (re) *re = z.real();
    if (im) *im = z.imag();
  });
}

fusia_status fusia_matrix_negate_entry(fusia_matrix* m, size_t i, size_t j) {
  FUSIA_REQUIRE(m);
  return guard([&] { m->m(i, j) = -entry(m, i, j); });
}

fusia_status fusia_matrix_equal(const fusia_matrix* a, const fusia_matrix* b, int* equal) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(b);
  FUSIA_REQUIRE(equal);
  return guard([&] { *equal = a->m == b->m ? 1 : 0; });
}

void fusia_matrix_free(fusia_matrix* m) { delete m; }

fusia_status fusia_export(int ell, const char* form, const char* format, int exact,
                          int digits, char** out) {
  FUSIA_REQUIRE(form);
  FUSIA_REQUIRE(format);
  FUSIA_REQUIRE(out);
  return guard([&] {
    namespace c = fusia::closed;
    const std::string f = form, fmt = format;
    if (f != "s" && f != "S" && f != "T")
      throw fusia::InvalidArgument("form must be s, S or T");
    if (fmt != "json" && fmt != "csv")
      throw fusia::InvalidArgument("format must be json or csv");
    if (!exact && (digits < 1 || digits > 1000))
      throw fusia::InvalidArgument("digits must be between 1 and 1000");
    std::string text;
    if (f == "T") {
      const auto d = c::T_matrix(ell);
      if (fmt == "csv")
        text = c::diagonal_csv(ell, d, digits);
      else
        text = (exact ? c::diagonal_json(ell, d) : c::diagonal_json_numeric(ell, d, digits))
                   .dump(2) + "\n";
    } else {
      const auto m = f == "s" ? c::smatrix_closed(ell) : c::S_matrix(ell);
      if (fmt == "csv")
        text = c::matrix_csv(ell, m, digits);
      else
        text = (exact ? c::matrix_json(ell, m) : c::matrix_json_numeric(ell, m, digits))
                   .dump(2) + "\n";
    }
    *out = dup(text);
  });
}

fusia_status fusia_algebra_from_smatrix(const fusia_matrix* s, fusia_algebra** out) {
  FUSIA_REQUIRE(s);
  return make_algebra(out, [&] { return fusia::from_smatrix(s->m); });
}

fusia_status fusia_algebra_affine(int ell, fusia_algebra** out) {
  return make_algebra(out, [&] {
    return fusia::from_smatrix(fusia::closed::smatrix_closed(ell),
                               fusia::closed::order_labels(ell));
  });
}

fusia_status fusia_algebra_voa(int ell, fusia_algebra** out) {
  return make_algebra(out, [&] { return fusia::voa::voa_algebra(ell); }, ell);
}

fusia_status fusia_algebra_group_ring(int n, fusia_algebra** out) {
  return make_algebra(out, [&] { return fusia::group_ring(n); });
}

fusia_status fusia_algebra_a1_level2(fusia_algebra** out) {
  return make_algebra(out, [] { return fusia::a1_level2(); });
}

fusia_status fusia_algebra_tensor(const fusia_algebra* a, const fusia_algebra* b,
                                  fusia_algebra** out) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(b);
  return make_algebra(out, [&] { return fusia::tensor_product(a->f, b->f); });
}

fusia_status fusia_algebra_size(const fusia_algebra* a, int* n) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(n);
  *n = a->f.size();
  return FUSIA_OK;
}

namespace {
void check_index(const fusia_algebra* a, int i) {
  if (i < 0 || i >= a->f.size()) throw fusia::InvalidArgument("basis index out of range");
}
}  // namespace

fusia_status fusia_algebra_coefficient(const fusia_algebra* a, int i, int j, int k,
                                       int64_t* value) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(value);
  return guard([&] {
    check_index(a, i);
    check_index(a, j);
    check_index(a, k);
    *value = a->f.N(i, j, k);
  });
}

fusia_status fusia_algebra_dual(const fusia_algebra* a, int i, int* d) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(d);
  return guard([&] {
    check_index(a, i);
    *d = a->f.dual(i);
  });
}

fusia_status fusia_algebra_label(const fusia_algebra* a, int i, char** out) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(out);
  return guard([&] {
    check_index(a, i);
    *out = dup(a->f.label(i));
  });
}

fusia_status fusia_algebra_index(const fusia_algebra* a, const char* label, int* index) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(label);
  FUSIA_REQUIRE(index);
  return guard([&] {
    if (a->voa_ell > 0) {
      const auto l = fusia::voa::parse_label(label, a->voa_ell);
      *index = fusia::voa::label_position(l, a->voa_ell);
      return;
    }
    const int i = a->f.index_of(label);
    if (i < 0) throw fusia::InvalidArgument(std::string("unknown label '") + label + "'");
    *index = i;
  });
}

fusia_status fusia_algebra_product(const fusia_algebra* a, int i, int j, char** out) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(out);
  return guard([&] {
    check_index(a, i);
    check_index(a, j);
    *out = dup(a->voa_ell > 0 ? fusia::voa::format_product(a->f, i, j)
                              : a->f.product_string(i, j));
  });
}

fusia_status fusia_algebra_table(const fusia_algebra* a, char** out) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(out);
  return guard([&] {
    if (a->voa_ell == 0) {
      *out = dup(a->f.table_string());
      return;
    }
    std::string s;
    const auto labels = fusia::voa::ordered_labels(a->voa_ell);
    for (int i = 0; i < a->f.size(); ++i)
      for (int j = i; j < a->f.size(); ++j)
        s += labels[i].short_name() + " x " + labels[j].short_name() + " = " +
             fusia::voa::format_product(a->f, i, j) + "\n";
    *out = dup(s);
  });
}

fusia_status fusia_algebra_json(const fusia_algebra* a, char** out) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(out);
  return guard([&] { *out = dup(a->f.to_json().dump()); });
}

fusia_status fusia_algebra_check_axioms(const fusia_algebra* a, int* ok, char** report) {
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(ok);
  return guard([&] {
    const auto rep = fusia::check_axioms(a->f);
    *ok = rep.ok() ? 1 : 0;
    if (report) {
      nlohmann::ordered_json j;
      j["ok"] = rep.ok();
      j["total"] = rep.total;
      j["violations"] = rep.violations;
      *report = dup(j.dump());
    }
  });
}

fusia_status fusia_verlinde_check(const fusia_matrix* S, const fusia_algebra* a, int* ok) {
  FUSIA_REQUIRE(S);
  FUSIA_REQUIRE(a);
  FUSIA_REQUIRE(ok);
  return guard([&] { *ok = fusia::verlinde_check(S->m, a->f).ok ? 1 : 0; });
}

void fusia_algebra_free(fusia_algebra* a) { delete a; }

fusia_status fusia_verify_iso(int ell, const fusia_matrix* s, int* pass, char** report) {
  FUSIA_REQUIRE(pass);
  return guard([&] {
    fusia::iso::IsoOptions o;
    if (s) o.smatrix = s->m;
    const auto rep = fusia::iso::verify_iso(ell, o);
    *pass = rep.pass ? 1 : 0;
    if (report) *report = dup(rep.to_json().dump());
  });
}

fusia_status fusia_verify_small(int ell, int* pass, char** report) {
  FUSIA_REQUIRE(pass);
  return guard([&] {
    const auto rep = fusia::iso::verify_small(ell);
    *pass = rep.pass ? 1 : 0;
    if (report) *report = dup(rep.to_json().dump());
  });
}

fusia_status fusia_verify(int ell, int oracle, int* pass, char** report) {
  FUSIA_REQUIRE(pass);
  return guard([&] {
    fusia::verify::Options o;
    o.oracle = oracle != 0;
    const auto j = fusia::verify::run(ell, o);
    *pass = j.at("pass").get<bool>() ? 1 : 0;
    if (report) *report = dup(j.dump());
  });
}

}  // extern "C"
