// Command-line front end over the shared-library C API. Subcommands:
//   reverse          --mode rows|cols|full
//   paste            --mode rows|cols|blocks  A B
//   decompose        --mode vector|rows|cols|full|quad
//   charpoly
//   jordan-reversing --n N
//   verify           --seed --trials --max-dim --bound --only --negative-controls
// Inputs default to stdin ("-"), outputs to stdout. Exit codes: 0 success,
// 1 verification failure, 2 usage/parse/shape errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "pastrev.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct MatrixDeleter {
  void operator()(pr_matrix* m) const { pr_matrix_free(m); }
};
struct VectorDeleter {
  void operator()(pr_vector* v) const { pr_vector_free(v); }
};
struct PolyDeleter {
  void operator()(pr_poly* p) const { pr_poly_free(p); }
};
using MatrixPtr = std::unique_ptr<pr_matrix, MatrixDeleter>;
using VectorPtr = std::unique_ptr<pr_vector, VectorDeleter>;
using PolyPtr = std::unique_ptr<pr_poly, PolyDeleter>;

std::string take_string(char* text) {
  std::string out(text);
  pr_string_free(text);
  return out;
}

[[noreturn]] void fail(pr_status status) {
  std::cerr << "error: " << pr_status_name(status) << ": " << pr_last_error() << "\n";
  std::exit(kExitUsage);
}

void check(pr_status status) {
  if (status != PR_OK) fail(status);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open input file '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    std::exit(kExitUsage);
  }
  out << text << "\n";
}

MatrixPtr load_matrix(const std::string& path) {
  const std::string text = read_input(path);
  pr_matrix* m = nullptr;
  check(pr_matrix_from_json(text.c_str(), &m));
  return MatrixPtr(m);
}

VectorPtr load_vector(const std::string& path) {
  const std::string text = read_input(path);
  pr_vector* v = nullptr;
  check(pr_vector_from_json(text.c_str(), &v));
  return VectorPtr(v);
}

std::string matrix_json(const pr_matrix* m) {
  char* text = nullptr;
  check(pr_matrix_to_json(m, 2, &text));
  return take_string(text);
}

std::string vector_json(const pr_vector* v) {
  char* text = nullptr;
  check(pr_vector_to_json(v, 2, &text));
  return take_string(text);
}

// Assembles {"key": <already-serialized JSON>, ...} without re-parsing.
std::string object_of(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out = "{\n";
  for (size_t i = 0; i < fields.size(); ++i) {
    std::istringstream value(fields[i].second);
    out += "  \"" + fields[i].first + "\": ";
    std::string line;
    bool first = true;
    while (std::getline(value, line)) {
      if (!first) out += "\n  " + line;
      else out += line;
      first = false;
    }
    if (i + 1 < fields.size()) out += ",";
    out += "\n";
  }
  out += "}";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact paste/reverse calculus on rational vectors and matrices"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-", mode;

  auto* reverse_cmd = app.add_subcommand("reverse", "reverse a matrix along an axis");
  reverse_cmd->add_option("--mode", mode, "rows|cols|full")->required();
  reverse_cmd->add_option("--in", in_path, "input matrix JSON (default stdin)");
  reverse_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::string paste_a, paste_b;
  auto* paste_cmd = app.add_subcommand("paste", "paste two matrices");
  paste_cmd->add_option("--mode", mode, "rows|cols|blocks")->required();
  paste_cmd->add_option("a", paste_a, "left/top input matrix JSON file")->required();
  paste_cmd->add_option("b", paste_b, "right/bottom input matrix JSON file")->required();
  paste_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "split into palindromic/antipalindromic parts");
  decompose_cmd->add_option("--mode", mode, "vector|rows|cols|full|quad")->required();
  decompose_cmd->add_option("--in", in_path, "input JSON (default stdin)");
  decompose_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial");
  charpoly_cmd->add_option("--in", in_path, "input matrix JSON (default stdin)");
  charpoly_cmd->add_option("--out", out_path, "output path (default stdout)");

  int jordan_n = 0;
  auto* jordan_cmd =
      app.add_subcommand("jordan-reversing", "eigenstructure J, P of the exchange matrix");
  jordan_cmd->add_option("--n", jordan_n, "ambient dimension")->required();
  jordan_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::uint64_t seed = 1;
  int trials = 25, max_dim = 4, bound = 9;
  std::string only;
  bool negative_controls = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized identity suite");
  verify_cmd->add_option("--seed", seed, "rng seed (default 1)");
  verify_cmd->add_option("--trials", trials, "trials per property (default 25)");
  verify_cmd->add_option("--max-dim", max_dim, "dimension sweep bound (default 4)");
  verify_cmd->add_option("--bound", bound, "entry bound (default 9)");
  verify_cmd->add_option("--only", only, "comma-separated check ids");
  verify_cmd->add_flag("--negative-controls", negative_controls,
                       "also run the deliberately false checks");
  verify_cmd->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << (e.get_exit_code() == 0 ? "" : "error: ");
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (reverse_cmd->parsed()) {
    pr_axis axis;
    if (mode == "rows") axis = PR_AXIS_ROWS;
    else if (mode == "cols") axis = PR_AXIS_COLS;
    else if (mode == "full") axis = PR_AXIS_FULL;
    else {
      std::cerr << "error: unknown reverse mode '" << mode << "'\n";
      return kExitUsage;
    }
    MatrixPtr input = load_matrix(in_path);
    pr_matrix* out = nullptr;
    check(pr_matrix_reverse(input.get(), axis, &out));
    MatrixPtr result(out);
    write_output(out_path, matrix_json(result.get()));
    return kExitOk;
  }

  if (paste_cmd->parsed()) {
    pr_paste_mode paste_mode;
    if (mode == "rows") paste_mode = PR_PASTE_ROWS;
    else if (mode == "cols") paste_mode = PR_PASTE_COLS;
    else if (mode == "blocks") paste_mode = PR_PASTE_BLOCKS;
    else {
      std::cerr << "error: unknown paste mode '" << mode << "'\n";
      return kExitUsage;
    }
    MatrixPtr a = load_matrix(paste_a);
    MatrixPtr b = load_matrix(paste_b);
    pr_matrix* out = nullptr;
    check(pr_matrix_paste(a.get(), b.get(), paste_mode, &out));
    MatrixPtr result(out);
    write_output(out_path, matrix_json(result.get()));
    return kExitOk;
  }

  if (decompose_cmd->parsed()) {
    if (mode == "vector") {
      VectorPtr input = load_vector(in_path);
      pr_vector *pal = nullptr, *anti = nullptr;
      check(pr_vector_decompose(input.get(), &pal, &anti));
      VectorPtr pal_owned(pal), anti_owned(anti);
      write_output(out_path, object_of({{"palindromic", vector_json(pal)},
                                        {"antipalindromic", vector_json(anti)}}));
      return kExitOk;
    }
    if (mode == "quad") {
      MatrixPtr input = load_matrix(in_path);
      pr_matrix *pp = nullptr, *pa = nullptr, *ap = nullptr, *aa = nullptr;
      check(pr_matrix_quad_decompose(input.get(), &pp, &pa, &ap, &aa));
      MatrixPtr pp_o(pp), pa_o(pa), ap_o(ap), aa_o(aa);
      write_output(out_path, object_of({{"pp", matrix_json(pp)},
                                        {"pa", matrix_json(pa)},
                                        {"ap", matrix_json(ap)},
                                        {"aa", matrix_json(aa)}}));
      return kExitOk;
    }
    pr_axis axis;
    if (mode == "rows") axis = PR_AXIS_ROWS;
    else if (mode == "cols") axis = PR_AXIS_COLS;
    else if (mode == "full") axis = PR_AXIS_FULL;
    else {
      std::cerr << "error: unknown decompose mode '" << mode << "'\n";
      return kExitUsage;
    }
    MatrixPtr input = load_matrix(in_path);
    pr_matrix *pal = nullptr, *anti = nullptr;
    check(pr_matrix_decompose(input.get(), axis, &pal, &anti));
    MatrixPtr pal_owned(pal), anti_owned(anti);
    write_output(out_path, object_of({{"palindromic", matrix_json(pal)},
                                      {"antipalindromic", matrix_json(anti)}}));
    return kExitOk;
  }

  if (charpoly_cmd->parsed()) {
    MatrixPtr input = load_matrix(in_path);
    pr_poly* poly = nullptr;
    check(pr_matrix_charpoly(input.get(), &poly));
    PolyPtr owned(poly);
    char* text = nullptr;
    check(pr_poly_to_json(poly, 2, &text));
    write_output(out_path, take_string(text));
    return kExitOk;
  }

  if (jordan_cmd->parsed()) {
    pr_matrix *j = nullptr, *p = nullptr;
    check(pr_reversing_jordan(jordan_n, &j, &p));
    MatrixPtr j_owned(j), p_owned(p);
    write_output(out_path, object_of({{"J", matrix_json(j)}, {"P", matrix_json(p)}}));
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    pr_verify_config config{};
    config.seed = seed;
    config.trials_per_property = trials;
    config.max_dim = max_dim;
    config.entry_bound = bound;
    config.only = only.c_str();
    config.negative_controls = negative_controls ? 1 : 0;
    char* report = nullptr;
    int pass = 0;
    check(pr_verify_run(&config, 2, &report, &pass));
    write_output(out_path, take_string(report));
    return pass ? kExitOk : kExitVerifyFailed;
  }

  return kExitUsage;
}
