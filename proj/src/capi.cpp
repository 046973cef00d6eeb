// extern "C" surface over the C++ core: opaque handles, status codes, and a
// thread-local last-error message.

#include "pastrev.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "core/json_io.hpp"
#include "core/linalg.hpp"
#include "core/subspaces.hpp"
#include "core/suite.hpp"

struct pr_matrix {
  pastrev::Matrix value;
};
struct pr_vector {
  pastrev::Vector value;
};
struct pr_poly {
  pastrev::Polynomial value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
pr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const pastrev::ParseError& e) {
    set_error(e.what());
    return PR_ERR_PARSE;
  } catch (const pastrev::LengthMismatch& e) {
    set_error(e.what());
    return PR_ERR_LENGTH_MISMATCH;
  } catch (const pastrev::IndexOutOfRange& e) {
    set_error(e.what());
    return PR_ERR_INDEX;
  } catch (const pastrev::InvalidDimension& e) {
    set_error(e.what());
    return PR_ERR_INVALID_DIMENSION;
  } catch (const pastrev::NotSquare& e) {
    set_error(e.what());
    return PR_ERR_NOT_SQUARE;
  } catch (const pastrev::Singular& e) {
    set_error(e.what());
    return PR_ERR_SINGULAR;
  } catch (const pastrev::NotEigenvalue& e) {
    set_error(e.what());
    return PR_ERR_NOT_EIGENVALUE;
  } catch (const pastrev::ZeroState& e) {
    set_error(e.what());
    return PR_ERR_ZERO_STATE;
  } catch (const pastrev::DivideByZero& e) {
    set_error(e.what());
    return PR_ERR_DIVIDE_BY_ZERO;
  } catch (const pastrev::ShapeError& e) {
    set_error(e.what());
    return PR_ERR_SHAPE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return PR_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PR_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return PR_ERR_INTERNAL;
  }
}

pr_status require(const void* arg) {
  if (arg != nullptr) return PR_OK;
  set_error("null argument");
  return PR_ERR_NULL_ARG;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

pastrev::Axis to_axis(pr_axis axis) {
  switch (axis) {
    case PR_AXIS_ROWS: return pastrev::Axis::Rows;
    case PR_AXIS_COLS: return pastrev::Axis::Cols;
    case PR_AXIS_FULL: return pastrev::Axis::Full;
  }
  throw pastrev::Error("invalid axis value");
}

}  // namespace

extern "C" {

const char* pr_status_name(pr_status status) {
  switch (status) {
    case PR_OK: return "ok";
    case PR_ERR_NULL_ARG: return "null argument";
    case PR_ERR_PARSE: return "parse error";
    case PR_ERR_SHAPE: return "shape error";
    case PR_ERR_LENGTH_MISMATCH: return "length mismatch";
    case PR_ERR_INDEX: return "index out of range";
    case PR_ERR_INVALID_DIMENSION: return "invalid dimension";
    case PR_ERR_NOT_SQUARE: return "not square";
    case PR_ERR_SINGULAR: return "singular matrix";
    case PR_ERR_NOT_EIGENVALUE: return "not an eigenvalue";
    case PR_ERR_ZERO_STATE: return "zero rng state";
    case PR_ERR_DIVIDE_BY_ZERO: return "division by zero";
    case PR_ERR_NO_MEMORY: return "out of memory";
    case PR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pr_last_error(void) { return g_last_error.c_str(); }

void pr_string_free(char* text) { delete[] text; }

/* matrices ---------------------------------------------------------- */

pr_status pr_matrix_from_json(const char* text, pr_matrix** out) {
  if (pr_status s = require(text); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::parse_matrix(text)};
    return PR_OK;
  });
}

pr_status pr_matrix_to_json(const pr_matrix* m, int indent, char** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(pastrev::dump(pastrev::to_json(m->value), indent));
    return PR_OK;
  });
}

void pr_matrix_free(pr_matrix* m) { delete m; }

pr_status pr_matrix_shape(const pr_matrix* m, int* rows, int* cols) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(rows); s != PR_OK) return s;
  if (pr_status s = require(cols); s != PR_OK) return s;
  *rows = m->value.rows();
  *cols = m->value.cols();
  return PR_OK;
}

pr_status pr_matrix_entry(const pr_matrix* m, int row, int col, char** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(m->value.at(row, col).str());
    return PR_OK;
  });
}

pr_status pr_matrix_equal(const pr_matrix* a, const pr_matrix* b, int* out) {
  if (pr_status s = require(a); s != PR_OK) return s;
  if (pr_status s = require(b); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  *out = a->value == b->value ? 1 : 0;
  return PR_OK;
}

pr_status pr_matrix_reverse(const pr_matrix* m, pr_axis axis, pr_matrix** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::reverse(m->value, to_axis(axis))};
    return PR_OK;
  });
}

pr_status pr_matrix_paste(const pr_matrix* a, const pr_matrix* b, pr_paste_mode mode,
                          pr_matrix** out) {
  if (pr_status s = require(a); s != PR_OK) return s;
  if (pr_status s = require(b); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    switch (mode) {
      case PR_PASTE_ROWS:
        *out = new pr_matrix{pastrev::paste_rows(a->value, b->value)};
        return PR_OK;
      case PR_PASTE_COLS:
        *out = new pr_matrix{pastrev::paste_cols(a->value, b->value)};
        return PR_OK;
      case PR_PASTE_BLOCKS:
        *out = new pr_matrix{pastrev::paste_blocks(a->value, b->value)};
        return PR_OK;
    }
    throw pastrev::Error("invalid paste mode");
  });
}

pr_status pr_matrix_transpose(const pr_matrix* m, pr_matrix** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::transpose(m->value)};
    return PR_OK;
  });
}

pr_status pr_matrix_decompose(const pr_matrix* m, pr_axis axis, pr_matrix** palindromic,
                              pr_matrix** antipalindromic) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(palindromic); s != PR_OK) return s;
  if (pr_status s = require(antipalindromic); s != PR_OK) return s;
  return guarded([&] {
    const pastrev::Axis ax = to_axis(axis);
    *palindromic = new pr_matrix{pastrev::palindromic_part(m->value, ax)};
    *antipalindromic = new pr_matrix{pastrev::antipalindromic_part(m->value, ax)};
    return PR_OK;
  });
}

pr_status pr_matrix_quad_decompose(const pr_matrix* m, pr_matrix** pp, pr_matrix** pa,
                                   pr_matrix** ap, pr_matrix** aa) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(pp); s != PR_OK) return s;
  if (pr_status s = require(pa); s != PR_OK) return s;
  if (pr_status s = require(ap); s != PR_OK) return s;
  if (pr_status s = require(aa); s != PR_OK) return s;
  return guarded([&] {
    pastrev::QuadParts parts = pastrev::quad_decompose(m->value);
    *pp = new pr_matrix{std::move(parts.pp)};
    *pa = new pr_matrix{std::move(parts.pa)};
    *ap = new pr_matrix{std::move(parts.ap)};
    *aa = new pr_matrix{std::move(parts.aa)};
    return PR_OK;
  });
}

pr_status pr_matrix_det(const pr_matrix* m, char** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(pastrev::determinant(m->value).str());
    return PR_OK;
  });
}

pr_status pr_matrix_trace(const pr_matrix* m, char** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(pastrev::trace(m->value).str());
    return PR_OK;
  });
}

pr_status pr_matrix_inverse(const pr_matrix* m, pr_matrix** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::inverse(m->value)};
    return PR_OK;
  });
}

pr_status pr_matrix_adjugate(const pr_matrix* m, pr_matrix** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::adjugate(m->value)};
    return PR_OK;
  });
}

pr_status pr_matrix_charpoly(const pr_matrix* m, pr_poly** out) {
  if (pr_status s = require(m); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_poly{pastrev::charpoly(m->value)};
    return PR_OK;
  });
}

pr_status pr_reversing_matrix(int n, pr_matrix** out) {
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_matrix{pastrev::reversing_matrix(n)};
    return PR_OK;
  });
}

pr_status pr_reversing_jordan(int n, pr_matrix** j, pr_matrix** p) {
  if (pr_status s = require(j); s != PR_OK) return s;
  if (pr_status s = require(p); s != PR_OK) return s;
  return guarded([&] {
    pastrev::JordanPair pair = pastrev::reversing_jordan(n);
    *j = new pr_matrix{std::move(pair.j)};
    *p = new pr_matrix{std::move(pair.p)};
    return PR_OK;
  });
}

/* vectors ------------------------------------------------------------ */

pr_status pr_vector_from_json(const char* text, pr_vector** out) {
  if (pr_status s = require(text); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_vector{pastrev::parse_vector(text)};
    return PR_OK;
  });
}

pr_status pr_vector_to_json(const pr_vector* v, int indent, char** out) {
  if (pr_status s = require(v); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(pastrev::dump(pastrev::to_json(v->value), indent));
    return PR_OK;
  });
}

void pr_vector_free(pr_vector* v) { delete v; }

pr_status pr_vector_size(const pr_vector* v, int* out) {
  if (pr_status s = require(v); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  *out = v->value.size();
  return PR_OK;
}

pr_status pr_vector_reverse(const pr_vector* v, pr_vector** out) {
  if (pr_status s = require(v); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_vector{pastrev::reverse(v->value)};
    return PR_OK;
  });
}

pr_status pr_vector_paste(const pr_vector* a, const pr_vector* b, pr_vector** out) {
  if (pr_status s = require(a); s != PR_OK) return s;
  if (pr_status s = require(b); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = new pr_vector{pastrev::paste(a->value, b->value)};
    return PR_OK;
  });
}

pr_status pr_vector_decompose(const pr_vector* v, pr_vector** palindromic,
                              pr_vector** antipalindromic) {
  if (pr_status s = require(v); s != PR_OK) return s;
  if (pr_status s = require(palindromic); s != PR_OK) return s;
  if (pr_status s = require(antipalindromic); s != PR_OK) return s;
  return guarded([&] {
    *palindromic = new pr_vector{pastrev::palindromic_part(v->value)};
    *antipalindromic = new pr_vector{pastrev::antipalindromic_part(v->value)};
    return PR_OK;
  });
}

/* polynomials --------------------------------------------------------- */

pr_status pr_poly_to_json(const pr_poly* p, int indent, char** out) {
  if (pr_status s = require(p); s != PR_OK) return s;
  if (pr_status s = require(out); s != PR_OK) return s;
  return guarded([&] {
    *out = copy_string(pastrev::dump(pastrev::to_json(p->value), indent));
    return PR_OK;
  });
}

void pr_poly_free(pr_poly* p) { delete p; }

/* suite ---------------------------------------------------------------- */

pr_status pr_verify_run(const pr_verify_config* config, int indent, char** report_json,
                        int* overall_pass) {
  if (pr_status s = require(config); s != PR_OK) return s;
  if (pr_status s = require(report_json); s != PR_OK) return s;
  if (pr_status s = require(overall_pass); s != PR_OK) return s;
  return guarded([&] {
    pastrev::SuiteConfig cfg;
    cfg.seed = config->seed;
    cfg.trials_per_property = config->trials_per_property;
    cfg.max_dim = config->max_dim;
    cfg.entry_bound = config->entry_bound;
    cfg.negative_controls = config->negative_controls != 0;
    if (config->only != nullptr && config->only[0] != '\0') {
      std::stringstream ss(config->only);
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (!id.empty()) cfg.only.push_back(id);
      }
    }
    if (cfg.trials_per_property < 1)
      throw pastrev::InvalidDimension("trials_per_property must be >= 1");
    if (cfg.max_dim < 1) throw pastrev::InvalidDimension("max_dim must be >= 1");
    if (cfg.entry_bound < 1) throw pastrev::InvalidDimension("entry_bound must be >= 1");

    const pastrev::SuiteReport report = pastrev::run_suite(cfg);
    *report_json = copy_string(pastrev::dump(pastrev::to_json(report), indent));
    *overall_pass = report.overall_pass ? 1 : 0;
    return PR_OK;
  });
}

} /* extern "C" */
